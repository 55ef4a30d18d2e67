//! Long paths between prescribed endpoints in 2-connected graphs.

use cycle_ramsey::eg_paths::{path_at_least, path_avoiding, path_one_exception};
use cycle_ramsey::generate::{rng, two_connected_random};
use cycle_ramsey::VertexSet;

fn main() {
    let g = two_connected_random(14, 5, &mut rng(11)).unwrap();
    let delta = g.min_degree();
    let p = path_at_least(&g, 0, 7, delta).unwrap();
    println!("min degree {delta}; path 0..7 of order {}: {:?}", p.order(), p.vertices());

    let avoid = VertexSet::from(vec![3]);
    match path_avoiding(&g, 0, 7, &avoid, delta - 1) {
        Ok(p) => println!("avoiding 3: order {}", p.order()),
        Err(e) => println!("avoiding 3: {e}"),
    }
    match path_one_exception(&g, 4, 0, 7, delta) {
        Ok(p) => println!("with 4 exempt from the degree bound: order {}", p.order()),
        Err(e) => println!("with 4 exempt: {e}"),
    }
}
