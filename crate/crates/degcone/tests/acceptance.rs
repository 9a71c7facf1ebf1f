//! One pass/fail line per acceptance criterion; exits nonzero if any fails.

use std::time::Instant;

use degcone::config::RunConfig;
use degcone::suite::{Suite, CRITERIA};

fn main() {
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    let suite = Suite::new(RunConfig { jobs, ..RunConfig::default() });
    let mut failed = Vec::new();
    println!("\nrunning {} acceptance criteria", CRITERIA.len());
    for (n, _, _) in CRITERIA {
        let t = Instant::now();
        let g = suite.criterion(n).expect("known criterion");
        println!("criterion {n:>2}: {} - {} ({:.1}s)", if g.pass() { "PASS" } else { "FAIL" }, g.title, t.elapsed().as_secs_f64());
        for c in &g.checks {
            println!("      [{}] {}: {}", if c.pass { "ok" } else { "FAIL" }, c.id, c.detail);
        }
        if !g.pass() {
            failed.push(n);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {} criteria pass\n", CRITERIA.len());
    } else {
        println!("acceptance: failed criteria {failed:?}\n");
        std::process::exit(1);
    }
}
