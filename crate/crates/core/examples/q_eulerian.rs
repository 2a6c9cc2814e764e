//! E_n(x, q) for small n, with the q = 1 check against the Eulerian numbers.
//!
//! cargo run --release --example q_eulerian -- 7

use maxmin::eulerian::{eulerian_polynomial, maxwt, q_eulerian};
use maxmin::EnumConfig;

fn main() {
    let n_max: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("n"))
        .unwrap_or(6);
    let cfg = EnumConfig::default();
    for n in 1..=n_max {
        let poly = q_eulerian(n, &cfg).expect("within the enumeration limit");
        let euler = eulerian_polynomial(n, &cfg).expect("within the enumeration limit");
        println!("E_{n}(x, q) = {poly}");
        assert_eq!(poly.at_q_one(), euler);
        let tops: Vec<String> = (0..n)
            .map(|d| format!("{}", poly.q_degree_at(d as u32).unwrap_or(0)))
            .collect();
        let expected: Vec<String> = (0..n).map(|d| maxwt(n, d).to_string()).collect();
        println!(
            "    top q-degree per d: {} (maxwt {})",
            tops.join(" "),
            expected.join(" ")
        );
    }
}
