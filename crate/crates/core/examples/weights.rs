//! Weight of a permutation by every route, plus the per-position ranges.
//!
//! cargo run --example weights -- "1 12 15 9 10 5 7 11 6 4 13 3 8 2 14"

use maxmin::min_decomp::build_min_decomp;
use maxmin::tree::build_max_weight_tree;
use maxmin::weight::{range_contributions, weight_accelerated, weight_via_ranges};
use maxmin::{parse_permutation, Permutation};

fn main() {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "1 12 15 9 10 5 7 11 6 4 13 3 8 2 14".to_string());
    let p: Permutation = match parse_permutation(&text) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("bad permutation: {e}");
            std::process::exit(2);
        }
    };
    let tree = build_max_weight_tree(&p);
    println!("permutation  {p}");
    println!("descents     {}", p.descents());
    println!("recursive    {}", tree.weight_recursive());
    println!("descent sums {}", tree.weight_via_descent_sums());
    println!("ranges       {}", weight_via_ranges(&p));
    println!("accelerated  {}", weight_accelerated(&p));
    println!("leaf counts  {}", build_min_decomp(&p).weight_via_leaves());
    println!();
    println!("pos value range      descents");
    for c in range_contributions(&p) {
        println!(
            "{:>3} {:>5} [{:>2}, {:>2}]   {}",
            c.position, c.value, c.range.left, c.range.right, c.descents
        );
    }
}
