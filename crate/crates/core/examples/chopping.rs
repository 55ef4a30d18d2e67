//! Chops a long path of a dense graph down to its endpoints and picks
//! reductions inside given windows.

use cycle_ramsey::chop_collate::{chop, reduction_in_interval};
use cycle_ramsey::eg_paths::path_at_least;
use cycle_ramsey::generate::{rng, two_connected_random};
use cycle_ramsey::oracle;

fn main() {
    let g = two_connected_random(12, 6, &mut rng(3)).unwrap();
    let path = path_at_least(&g, 0, 1, g.min_degree()).unwrap();
    let alpha = oracle::independence_number(&g.induced(path.vertices()).graph).unwrap();
    let ladder = chop(&g, &path, alpha).unwrap();
    println!("path {:?}, alpha {alpha}", path.vertices());
    println!("ladder orders {:?}", ladder.orders());
    for (a, b) in [(2 * alpha - 1, 2 * alpha), (path.order() - 1, path.order() - 1)] {
        match reduction_in_interval(&ladder, a, b) {
            Ok(p) => println!("window [{a}, {b}]: {:?}", p.vertices()),
            Err(e) => println!("window [{a}, {b}]: {e}"),
        }
    }
}
