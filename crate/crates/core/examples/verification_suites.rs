//! Every named verification suite on one small algebra.

use yokonuma_hecke::cli::run_suite;
use yokonuma_hecke::roots::XiOrder;

fn main() {
    let (d, n) = (2, 3);
    let xi = XiOrder::standard(d);
    for suite in ["relations", "branching", "idempotents", "trace-form", "tau-decomposition", "jm-commute"] {
        let report = run_suite(suite, d, n, &xi).unwrap();
        println!("{:<18} {:>8}  {:.3}s", suite, report.tally(), report.elapsed.as_secs_f64());
    }
}
