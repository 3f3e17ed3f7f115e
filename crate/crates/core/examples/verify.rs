//! Run every verification suite on every fixture.

use tfpoly::invariants::{run_suite, Suite};
use tfpoly::{fixtures, Limits};

fn main() -> tfpoly::Result<()> {
    let l = Limits::default();
    let mut failed = 0;
    for (name, g) in fixtures::corpus() {
        let reports = run_suite(&g, Suite::All, &l)?;
        let checks: usize = reports.iter().map(|r| r.items.len()).sum();
        let bad = reports.iter().filter(|r| !r.passed()).count();
        failed += bad;
        println!("{name:<22} {checks:>4} checks, {bad} failing reports");
    }
    std::process::exit(if failed == 0 { 0 } else { 1 });
}
