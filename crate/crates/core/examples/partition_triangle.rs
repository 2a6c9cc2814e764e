//! The T(n, k) triangle, one cell's partition breakdown, and an optional
//! cross-check against a CSV or b-file.
//!
//! cargo run --example partition_triangle -- [FILE]

use maxmin::partitions::{crosscheck_triangle, t_nk_contributions, t_triangle, PartitionTriangle};

fn main() {
    let tri = t_triangle(10);
    for (n, row) in tri.rows.iter().enumerate() {
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(k, v)| {
                if PartitionTriangle::is_bold(n, k) {
                    format!("*{v}")
                } else {
                    v.to_string()
                }
            })
            .collect();
        println!("{n:>2}: {}", cells.join(" "));
    }
    println!("(* marks 2k >= n)");
    println!();
    println!("T(8, 5):");
    for (p, c) in t_nk_contributions(8, 5) {
        println!("  {p}: {c}");
    }
    if let Some(path) = std::env::args().nth(1) {
        match crosscheck_triangle(path.as_ref(), None) {
            Ok(report) => {
                println!("{} cells compared", report.cells.len());
                for c in report.mismatches() {
                    println!(
                        "  T({}, {}) expected {} found {}",
                        c.n, c.k, c.expected, c.found
                    );
                }
            }
            Err(e) => eprintln!("{e}"),
        }
    }
}
