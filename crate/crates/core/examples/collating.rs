//! Joins path families of two cliques across two edges into cycles of every
//! order in the guaranteed range.

use cycle_ramsey::chop_collate::{splice, Collation, OrderFamily};
use cycle_ramsey::{verify, Graph, Path, VertexSet};

fn clique_family(vs: &[usize]) -> OrderFamily {
    let (x, y) = (vs[0], vs[1]);
    let mut fam = OrderFamily::new(x, y);
    for extra in 0..=vs.len() - 2 {
        let mut p = vec![x];
        p.extend_from_slice(&vs[2..2 + extra]);
        p.push(y);
        fam.insert(Path::new(p)).unwrap();
    }
    fam
}

fn main() {
    let (a, b): (Vec<usize>, Vec<usize>) = ((0..6).collect(), (6..11).collect());
    let mut g = Graph::new(11);
    for part in [&a, &b] {
        for (i, &x) in part.iter().enumerate() {
            for &y in &part[i + 1..] {
                g.ensure_edge(x, y);
            }
        }
    }
    g.ensure_edge(0, 6);
    g.ensure_edge(1, 7);

    let (f1, f2) = (clique_family(&a), clique_family(&b));
    let (v1, v2) = (VertexSet::from(a.clone()), VertexSet::from(b.clone()));
    let col = Collation {
        g: &g,
        v1: &v1,
        v2: &v2,
        x_edge: (0, 6),
        y_edge: (1, 7),
        fam1: &f1,
        fam2: &f2,
        k: 1,
        a: 2,
        b: 6,
        l1: 2,
        l2: 5,
    };
    col.check().unwrap();
    let (lo, hi) = col.range();
    println!("guaranteed cycle orders [{lo}, {hi}]");
    for s in lo..=hi {
        let c = col.cycle(s).unwrap();
        verify::check_cycle(&g, &c).unwrap();
        println!("  {s}: {:?}", c.vertices());
    }
    println!("splice for 11: {:?}", splice(&f1, &f2, 11).map(|c| c.order()));
}
