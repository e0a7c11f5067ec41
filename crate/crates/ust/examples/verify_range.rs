//! Machine-check the identity upsilon - sigma/2 = b2^- for every coprime
//! pair up to a bound.
//!
//! ```bash
//! cargo run --release --example verify_range -- 120
//! ```

use std::time::Instant;

use ust::{gcd, verify_theorem, TorusKnot};

fn main() {
    let max: i64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(60);

    let started = Instant::now();
    let mut checked = 0u64;
    for p in 2..=max {
        for q in 1..p {
            if gcd(p, q) != 1 {
                continue;
            }
            let k = TorusKnot::new(p, q).unwrap();
            match verify_theorem(k) {
                Ok(record) => {
                    assert_eq!(
                        record.upsilon_minus_half_sigma.as_integer(),
                        Some(record.b2_minus)
                    );
                    checked += 1;
                }
                Err(e) => {
                    eprintln!("FAILED at {k}: {e}");
                    std::process::exit(1);
                }
            }
        }
    }
    println!(
        "upsilon - sigma/2 = b2^- holds for all {checked} coprime pairs with p <= {max} ({:.2}s)",
        started.elapsed().as_secs_f64()
    );
}
