//! Finds a saw in a dense graph and lists the path families and cycles it
//! carries.

use cycle_ramsey::generate::{clique_union_cross, rng};
use cycle_ramsey::oracle;
use cycle_ramsey::saw;

fn main() {
    let g = clique_union_cross(&[13, 14], 20, &mut rng(5)).unwrap();
    let alpha = oracle::independence_number(&g).unwrap();
    let s = saw::find_saw(&g, g.min_degree(), alpha).unwrap();
    println!("saw with k = {}, degree {}, backbone {:?}", s.k(), s.degree(), s.backbone());

    let ends = saw::endpair_family(&s);
    println!("end pair path orders {:?}", ends.orders().collect::<Vec<_>>());
    let pair = saw::consecutive_pair_family(&s, 1).unwrap();
    println!("pair (1, 2) path orders {:?}", pair.orders().collect::<Vec<_>>());
    let any = saw::any_pair_paths(&s, 2, s.order() - 3).unwrap();
    println!("any pair: l = {}, orders {:?}", any.l, any.family.orders().collect::<Vec<_>>());

    let local_alpha = oracle::independence_number(s.local()).unwrap();
    for q in [4 * local_alpha, s.order()] {
        match saw::saw_cycle(&s, local_alpha, q) {
            Ok(c) => println!("cycle of order {} in the saw: {:?}", c.order(), c.vertices()),
            Err(e) => println!("cycle of order {q}: {e}"),
        }
    }
}
