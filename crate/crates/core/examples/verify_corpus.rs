//! Runs the end-to-end reduction check over the acceptance corpus and prints
//! the summary and any failing rows.

use longcycle::harness::{run_claim_roundtrip, Corpus};
use longcycle::{GadgetParams, SearchBudget};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let corpus = Corpus::preset("acceptance", 42)?;
    let report = run_claim_roundtrip(
        &corpus,
        &GadgetParams::test(3),
        &SearchBudget::nodes(5_000_000),
    )
    .without_timings();
    let tsv = report.to_tsv();
    for line in tsv.lines().take(6) {
        println!("{line}");
    }
    println!("...");
    println!("{:?}", report.summary);
    for rec in report.failures() {
        println!("failure: {} {:?}", rec.name, rec.detail);
    }
    Ok(())
}
