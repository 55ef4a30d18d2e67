//! Runs the witness on a seeded pair of cliques with random cross edges and
//! prints the certificate and its trace.

use cycle_ramsey::generate::{clique_union_cross, rng};
use cycle_ramsey::witness::{ramsey_witness, verify_certificate};

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(42);
    let g = clique_union_cross(&[13, 14], 12, &mut rng(seed)).unwrap();
    let cert = ramsey_witness(&g, 13, 2);
    println!("{:?}: {}", cert.kind, cert.explanation);
    if let Some(c) = &cert.cycle {
        println!("cycle {:?}", c.vertices());
    }
    for step in &cert.trace {
        println!("  level {} {} {:?} -> {:?} {}", step.level, step.case, step.params, step.output_order, step.note.as_deref().unwrap_or(""));
    }
    println!("verified: {}", verify_certificate(&g, 13, 2, &cert).is_ok());
}
