//! Y_{d,n}(q) as a free module on the words t_1^{k_1} ⋯ t_n^{k_n} g_w.
//!
//! Conventions: g_w t_j = t_{w(j)} g_w, and g_w g_{w'} is expanded by
//! right multiplication along a reduced word of w'.

mod checks;
mod element;
mod generators;
mod permutation;
mod products;

pub use checks::{jm_commute_check, trace_form_check};
pub use element::{all_basis_words, AlgebraElement, BasisWord};
pub use generators::{e_ik, g_product, g_word, generator, jm_element, jm_elements, t_minus, t_power, Generator, JmMode};
pub use permutation::Permutation;
