//! Compute the signature of a torus knot and cross-check it where an
//! independent oracle applies.
//!
//! ```bash
//! cargo run --example signature -- 7 4
//! ```

use ust::{sigma_count, sigma_two_strand, TorusKnot};

fn main() {
    let mut args = std::env::args().skip(1);
    let p: i64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(7);
    let q: i64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(4);

    let k = TorusKnot::new(p, q).unwrap_or_else(|e| {
        eprintln!("error: {e}");
        std::process::exit(2);
    });

    let sigma = sigma_count(k).unwrap_or_else(|e| {
        eprintln!("error: {e}");
        std::process::exit(3);
    });
    println!("sigma({k}) = {sigma}");

    if k.q() == 2 {
        // the two-strand family has an explicit Seifert form: tridiagonal
        // with -2 on the diagonal and +1 beside it
        let oracle = sigma_two_strand(k.p()).unwrap();
        println!("two-strand Seifert-form oracle: {oracle}");
        assert_eq!(oracle, sigma);
        println!("oracle agrees with the lattice count");
    } else {
        println!("(two-strand oracle only applies when q = 2)");
    }
}
