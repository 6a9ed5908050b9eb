//! Runs every acceptance criterion and prints one line for each. Built
//! without the libtest harness so the lines appear in ordinary test output.

use std::process::ExitCode;

use spo_core::verify::{run_criterion, CRITERIA};

fn main() -> ExitCode {
    let mut failed = Vec::new();
    for c in &CRITERIA {
        let report = run_criterion(c.id, None).expect("known criterion");
        let ok = report.passed() && report.cases > 0;
        println!(
            "[{}] {:>2} {:<12} {} cases, {} failures: {}",
            if ok { "PASS" } else { "FAIL" },
            c.id,
            c.name,
            report.cases,
            report.failures.len(),
            c.summary
        );
        if let Some(f) = report.failures.first() {
            println!("       first failure: {} expected {} got {}", f.case, f.expected, f.actual);
        }
        if !ok {
            failed.push(c.id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {} criteria pass", CRITERIA.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: criteria failed: {failed:?}");
        ExitCode::FAILURE
    }
}
