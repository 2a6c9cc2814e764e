//! Stabilized top coefficients and the W_d(t) series they define.
//!
//! cargo run --release --example wd_series

use maxmin::eulerian::QEulerianTable;
use maxmin::EnumConfig;

fn main() {
    let n_max = 10;
    let table = QEulerianTable::new(EnumConfig::default());
    for d in 1..=4 {
        let terms = n_max - d;
        let series = table
            .wd_series(d, terms)
            .expect("within the enumeration limit");
        let shown: Vec<String> = series.coefficients.iter().map(u64::to_string).collect();
        println!("W_{d}(t): {}, ...", shown.join(", "));
    }
    println!();
    println!("coefficient of x^d q^(maxwt-k) for n = d+k+1 ..= 9");
    for d in 1..=3 {
        for k in 0..=3 {
            let s = table.stabilization(d, k, 9).expect("threshold below 9");
            let values: Vec<String> = s.values.iter().map(|(_, c)| c.to_string()).collect();
            let note = if s.is_stable() { "" } else { " (not stable)" };
            println!("  d={d} k={k}: {}{note}", values.join(" "));
        }
    }
}
