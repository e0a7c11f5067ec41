//! Emit the invariant table (upsilon, sigma, b2^-) for all coprime pairs
//! up to a bound as CSV on standard output.
//!
//! ```bash
//! cargo run --example invariant_table -- 30 > table.csv
//! ```

use ust::{gcd, verify_theorem, TorusKnot};

fn main() {
    let max: i64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(20);

    println!("p,q,upsilon,sigma,b2_minus,upsilon_minus_half_sigma");
    for p in 2..=max {
        for q in 1..p {
            if gcd(p, q) != 1 {
                continue;
            }
            let k = TorusKnot::new(p, q).unwrap();
            let r = verify_theorem(k).unwrap_or_else(|e| {
                eprintln!("error at {k}: {e}");
                std::process::exit(1);
            });
            println!(
                "{},{},{},{},{},{}",
                p,
                q,
                r.upsilon.fraction_string(),
                r.sigma,
                r.b2_minus,
                r.upsilon_minus_half_sigma.fraction_string()
            );
        }
    }
}
