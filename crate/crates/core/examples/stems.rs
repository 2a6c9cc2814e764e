//! Near-maximal-weight permutations counted three ways: brute force, stems,
//! and two-kind partitions.
//!
//! cargo run --release --example stems -- 9 5

use maxmin::bijection::{enumerate_stems, in_table_region, verify_bijection};
use maxmin::eulerian::QEulerianTable;
use maxmin::EnumConfig;

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .map(|s| s.parse::<usize>().expect("integer"));
    let n = args.next().unwrap_or(9);
    let d = args.next().unwrap_or(5);

    for stem in enumerate_stems(n, d) {
        let image = stem
            .to_partition()
            .map_or_else(|e| e.to_string(), |p| p.to_string());
        println!("{stem}: {} -> {image}", stem.count());
    }

    let table = QEulerianTable::new(EnumConfig::default());
    let r = verify_bijection(n, d, &table).expect("valid (n, d) within the enumeration limit");
    println!(
        "weight {}: brute {} stems {} T({}, {}) {}",
        r.weight,
        r.brute,
        r.stem_total,
        n - 1,
        d,
        r.t_value
    );
    if !in_table_region(n, d) {
        println!("note: 2d < n-1, the counts are not expected to agree");
    }
}
