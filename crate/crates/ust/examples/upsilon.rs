//! Compute upsilon of a torus knot by two independent routes.
//!
//! ```bash
//! cargo run --example upsilon -- 7 4
//! ```

use ust::{upsilon_batson, upsilon_fk, upsilon_fk_fast, TorusKnot};

fn main() {
    let mut args = std::env::args().skip(1);
    let p: i64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(7);
    let q: i64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(4);

    let k = match TorusKnot::new(p, q) {
        Ok(k) => k,
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    };

    let by_recursion = upsilon_fk(k);
    let by_batched = upsilon_fk_fast(k);
    let by_bands = upsilon_batson(k);

    println!("{k}");
    println!("  upsilon by step-by-step recursion: {by_recursion}");
    println!("  upsilon by batched recursion:      {by_batched}");
    println!("  upsilon by band-move sum:          {by_bands}");
    assert_eq!(by_recursion, by_batched);
    assert_eq!(by_recursion, by_bands);
    println!("all three routes agree");
}
