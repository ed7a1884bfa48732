//! Runs every worked example and prints its checks.

use model_change::scenarios::{run_demo, DEMO_NAMES};

fn main() -> model_change::Result<()> {
    let mut failed = 0;
    for name in DEMO_NAMES {
        let demo = run_demo(name)?;
        println!("{}: {}", demo.name, demo.summary);
        for line in &demo.lines {
            println!("  {line}");
        }
        for check in &demo.checks {
            println!("  [{}] {}", if check.pass { "ok" } else { "FAIL" }, check.label);
        }
        failed += usize::from(!demo.passed());
    }
    std::process::exit(i32::from(failed > 0));
}
