//! Run the whole verification battery and print the JSON report.
//!
//! ```bash
//! cargo run --release --example full_report
//! ```

use truncated_braids::report::{verify_all, ReportConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let config = ReportConfig::default();
    let report = verify_all(&config)?;
    print!("{}", report.to_json_string());
    eprintln!(
        "overall: {:?} across {} cases",
        report.overall,
        report.cases.len()
    );
    Ok(())
}
