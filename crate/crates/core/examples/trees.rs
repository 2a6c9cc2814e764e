//! Both trees of a permutation as Graphviz, and the min-decomposition stem.
//!
//! cargo run --example trees -- "3 1 4 2" | dot -Tsvg > trees.svg

use maxmin::min_decomp::build_min_decomp;
use maxmin::parse_permutation;
use maxmin::tree::build_max_weight_tree;

fn main() {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "3 1 4 2".to_string());
    let p = parse_permutation(&text).expect("a permutation of 1..n");

    let tree = build_max_weight_tree(&p);
    print!("{}", tree.to_dot());
    let decomp = build_min_decomp(&p);
    print!("{}", decomp.to_dot());

    let (stem, leaves) = decomp.classify();
    eprintln!("stem   {stem:?}");
    eprintln!("leaves {leaves:?}");
    eprintln!("stem is a path: {}", decomp.stem_is_path());

    // Moving a leaf up past a branching parent costs exactly one unit of weight.
    let w = decomp.weight_via_leaves();
    for leaf in leaves {
        let Some(parent) = decomp.parent(leaf) else {
            continue;
        };
        if parent == decomp.root() || decomp.children(parent).len() < 2 {
            continue;
        }
        let moved = decomp.move_up(leaf).expect("legal move");
        eprintln!(
            "move {leaf} up: weight {w} -> {}",
            moved.weight_via_leaves()
        );
    }
}
