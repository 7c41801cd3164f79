//! Acceptance criteria, one line per criterion. Set `ZZ_SLOW=1` to include
//! the binary icosahedral group in criterion 15.

use std::process::ExitCode;

use zigzag::selftest;

fn main() -> ExitCode {
    // `cargo test -- --list` and filters expect a harness; keep them working
    if std::env::args().any(|a| a == "--list") {
        println!("acceptance: test");
        return ExitCode::SUCCESS;
    }
    let slow = std::env::var("ZZ_SLOW").is_ok_and(|v| v == "1");
    let outcomes = selftest::run_all(slow);
    for o in &outcomes {
        println!("{}", o.line());
    }
    if !slow {
        println!("criterion 15: binary icosahedral case skipped; set ZZ_SLOW=1 to run it");
    }
    let failed: Vec<String> = outcomes.iter().filter(|o| !o.pass).map(|o| o.id.to_string()).collect();
    if failed.is_empty() {
        println!("acceptance: {} of {} criteria pass", outcomes.len(), outcomes.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failing criteria {}", failed.join(", "));
        ExitCode::FAILURE
    }
}
