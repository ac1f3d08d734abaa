//! Full JSON report for an algebra file.
//!
//! `cargo run --example analyze_report -- examples/data/tk_3112m2.json`

use std::path::PathBuf;

use evoalg::format;
use evoalg::report::{self, AnalyzeOptions};

fn main() {
    let path = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/ex_3_2.json")));
    let e = format::read_algebra(&path).unwrap_or_else(|err| {
        eprintln!("{err}");
        std::process::exit(1);
    });
    let r = report::analyze(&e, &AnalyzeOptions::default()).unwrap();
    print!("{}", r.to_json());
}
