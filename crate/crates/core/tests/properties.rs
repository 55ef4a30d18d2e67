use cycle_ramsey::chop_collate::{chop, OrderFamily};
use cycle_ramsey::eg_paths::path_at_least;
use cycle_ramsey::generate::{rng, saw_tail, two_connected_random};
use cycle_ramsey::io;
use cycle_ramsey::oracle;
use cycle_ramsey::saw::{self, Saw};
use cycle_ramsey::verify;
use cycle_ramsey::Graph;
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut it = bits.into_iter();
            for a in 0..n {
                for b in a + 1..n {
                    if it.next().unwrap() {
                        g.add_edge(a, b).unwrap();
                    }
                }
            }
            g
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn two_vertex_paths_are_edges(g in arb_graph(9)) {
        let orders = oracle::all_path_orders(&g, 0, 1).unwrap();
        prop_assert_eq!(orders.contains(&2), g.has_edge(0, 1));
    }

    #[test]
    fn formats_round_trip(g in arb_graph(20)) {
        prop_assert_eq!(io::parse_any(&io::write_edge_list(&g)).unwrap(), g.clone());
        prop_assert_eq!(io::parse_any(&io::write_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn long_paths_meet_the_degree_bound(seed in any::<u64>(), n in 5usize..12, delta in 2usize..5) {
        let g = two_connected_random(n, delta.min(n - 1), &mut rng(seed)).unwrap();
        let d = g.min_degree();
        let p = path_at_least(&g, 0, n - 1, d).unwrap();
        verify::check_path(&g, &p).unwrap();
        prop_assert_eq!(p.endpoints(), (0, n - 1));
        prop_assert!(p.order() > d);
        let best = oracle::all_path_orders(&g, 0, n - 1).unwrap();
        prop_assert!(best.contains(&p.order()));
    }

    #[test]
    fn ladders_are_oracle_paths(seed in any::<u64>(), n in 5usize..11) {
        let g = two_connected_random(n, 3.min(n - 1), &mut rng(seed)).unwrap();
        let p = path_at_least(&g, 0, 1, g.min_degree()).unwrap();
        let alpha = oracle::independence_number(&g.induced(p.vertices()).graph).unwrap();
        let ladder = chop(&g, &p, alpha).unwrap();
        ladder.validate(&g).unwrap();
        let fam = OrderFamily::from_ladder(&ladder);
        fam.validate(&g, None).unwrap();
        let orders = ladder.orders();
        prop_assert!(orders.windows(2).all(|w| w[0] > w[1] && w[0] - w[1] <= 2 * alpha));
    }

    #[test]
    fn backbone_reductions_have_exact_order(seed in any::<u64>(), k in 2usize..6, q in 0usize..12) {
        let g = saw_tail(k, 2 * k, 0.3, &mut rng(seed)).unwrap();
        let s = Saw::from_local(g).unwrap();
        let n = s.order();
        let q = 2 + q % (n - 1);
        let lo = n.div_ceil(2) + 1;
        match saw::backbone_reduction(&s, 1, n, false, q) {
            Ok(p) => {
                prop_assert!(q >= lo);
                verify::check_path(s.local(), &p).unwrap();
                prop_assert_eq!(p.order(), q);
                prop_assert_eq!(p.endpoints(), (s.at(1), s.at(n)));
            }
            Err(_) => prop_assert!(q < lo),
        }
    }
}
