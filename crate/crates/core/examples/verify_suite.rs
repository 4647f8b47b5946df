//! Runs the default verification suite and prints one line per case.
use charlattice::verify::run_default_suite;

fn main() -> charlattice::Result<()> {
    let reports = run_default_suite(0)?;
    let passed = reports.iter().filter(|r| r.passed()).count();
    for r in &reports {
        println!("{} {} {}", if r.passed() { "ok  " } else { "FAIL" }, r.case_id, r.inputs);
    }
    println!("{passed}/{} cases passed", reports.len());
    Ok(())
}
