//! Round-trips a generated graph through the edge-list and graph6 formats.

use cycle_ramsey::generate::{rng, saw_tail};
use cycle_ramsey::io::{self, Format};

fn main() {
    let g = saw_tail(4, 6, 0.4, &mut rng(2)).unwrap();
    let edges = io::write(&g, Format::EdgeList);
    let g6 = io::write(&g, Format::Graph6);
    print!("{edges}");
    print!("{g6}");
    assert_eq!(io::parse_any(&edges).unwrap(), g);
    assert_eq!(io::parse_any(&g6).unwrap(), g);
    println!("both formats round-trip ({} vertices, {} edges)", g.order(), g.size());
}
