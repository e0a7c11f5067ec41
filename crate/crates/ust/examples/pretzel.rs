//! Evaluate unoriented slice-torus invariants on the pretzel family
//! P(-2, p, q) for odd p, q >= 3, where every such invariant takes the
//! value (2 - p - q)/2.
//!
//! ```bash
//! cargo run --example pretzel -- 9
//! ```

use ust::{pretzel_f, upsilon_fk, TorusKnot};

fn main() {
    let max: i64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(9);

    // P(-2,3,3) is the torus knot T(3,4), so the family value must match
    // upsilon there.
    assert_eq!(
        pretzel_f(3, 3).unwrap(),
        upsilon_fk(TorusKnot::new(3, 4).unwrap())
    );

    println!("f(P(-2,p,q)) for odd p, q in [3, {max}]:");
    print!("{:>6}", "p\\q");
    for q in (3..=max).step_by(2) {
        print!("{q:>6}");
    }
    println!();
    for p in (3..=max).step_by(2) {
        print!("{p:>6}");
        for q in (3..=max).step_by(2) {
            print!("{:>6}", pretzel_f(p, q).unwrap().to_string());
        }
        println!();
    }
}
