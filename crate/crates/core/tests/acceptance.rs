//! One line per acceptance criterion. Exits nonzero when a criterion fails
//! without a recorded reason, or when a recorded failure starts passing.

use monge_core::reproduce::{criteria, run_suite};

fn main() {
    let filter = std::env::args().skip(1).find(|a| !a.starts_with('-'));
    let results = run_suite(filter.as_deref());
    for r in &results {
        println!("{}", r.line());
    }
    for c in criteria() {
        if let (Some(why), true) = (c.known_failure, results.iter().any(|r| r.id == c.id && !r.outcome.passed)) {
            println!("  criterion {} is a known failure: {why}", c.id);
        }
    }
    let unexpected: Vec<usize> = results.iter().filter(|r| !r.as_expected()).map(|r| r.id).collect();
    if !unexpected.is_empty() {
        println!("unexpected outcome for criteria {unexpected:?}");
        std::process::exit(1);
    }
}
