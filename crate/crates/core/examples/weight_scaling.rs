//! Timing of the quadratic range algorithm against the accelerated one.
//!
//! cargo run --release --example weight_scaling

use std::time::Instant;

use maxmin::weight::{weight_accelerated, weight_via_ranges};
use maxmin::Permutation;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

fn random(rng: &mut StdRng, n: usize) -> Permutation {
    let mut w: Vec<u32> = (1..=n as u32).collect();
    w.shuffle(rng);
    Permutation::new(w).expect("shuffled identity")
}

fn main() {
    let mut rng = StdRng::seed_from_u64(1);
    println!(
        "{:>8} {:>10} {:>12} {:>12}",
        "n", "input", "ranges", "accelerated"
    );
    for n in [1_000, 2_000, 4_000, 8_000, 16_000] {
        for (label, p) in [
            ("identity", Permutation::identity(n)),
            ("random", random(&mut rng, n)),
        ] {
            let t = Instant::now();
            let slow = weight_via_ranges(&p);
            let t_slow = t.elapsed();
            let t = Instant::now();
            let fast = weight_accelerated(&p);
            let t_fast = t.elapsed();
            assert_eq!(slow, fast);
            println!("{n:>8} {label:>10} {t_slow:>12.2?} {t_fast:>12.2?}");
        }
    }
    for n in [100_000, 1_000_000] {
        let p = random(&mut rng, n);
        let t = Instant::now();
        let w = weight_accelerated(&p);
        println!(
            "accelerated, random n={n}: weight {w} in {:.2?}",
            t.elapsed()
        );
    }
}
