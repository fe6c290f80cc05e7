//! Runs the verification harness at a small depth, writes the JSONL report to
//! a temp file, then repeats with a planted fault to show the witnesses.
//!
//! cargo run --release --example verification_report -- 7

use sqfw::verification::{Status, Verifier, VerifyConfig};

fn main() -> std::io::Result<()> {
    let n: u32 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(5);

    let report = Verifier::new(VerifyConfig::with_n_max(n)).run_all();
    for c in &report.checks {
        println!("{:<6} {:<34} {:>8.2} ms  {}", c.status.to_string(), c.name, c.ms, c.detail);
    }
    println!("{}", report.summary);

    let path = std::env::temp_dir().join("sqfw-example-report.jsonl");
    report.save(&path)?;
    println!("report written to {}", path.display());

    let faulty = Verifier::new(VerifyConfig { fault_inject: true, ..VerifyConfig::with_n_max(n) }).run_all();
    for c in faulty.failures() {
        assert_eq!(c.status, Status::Fail);
        println!("fault: {} -> {}", c.name, c.witness);
    }
    Ok(())
}
