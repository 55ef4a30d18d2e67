//! Runs every randomized lemma suite briefly and prints the reports.

use cycle_ramsey::checks::{run_suite, Lemma, SuiteConfig};

fn main() {
    let trials = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(40);
    for lemma in Lemma::ALL {
        let cfg = SuiteConfig {
            trials,
            seed: 1,
            max_n: lemma.default_max_n(),
            mutate: false,
        };
        println!("{}", run_suite(lemma, &cfg));
    }
}
