//! The extremal graph rK_p: order pr, no cycle longer than p, independence
//! number r.

use cycle_ramsey::oracle;
use cycle_ramsey::witness::{extremal_graph, ramsey_witness};

fn main() {
    let (p, r) = (17, 3);
    let g = extremal_graph(p, r).unwrap();
    let alpha = oracle::independence_number(&g).unwrap();
    println!("{r}K_{p}: order {}, size {}, independence number {alpha}", g.order(), g.size());

    let mut bigger = g.clone();
    bigger.add_vertex();
    let cert = ramsey_witness(&bigger, p, r);
    println!("one more vertex: {:?} {:?}", cert.kind, cert.independent_set.map(|s| s.to_vec()));
}
