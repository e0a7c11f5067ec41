//! Replay the positive braid word of a torus knot crossing by crossing and
//! compare the marked-strand crossing count with the closed form
//! h(p-t) + t(q-h).
//!
//! ```bash
//! cargo run --example braid_simulation -- 7 4
//! ```

use ust::{half_writhe_delta, initial_set_s, standard_writhe, writhe_delta_oracle, TorusKnot};

fn main() {
    let mut args = std::env::args().skip(1);
    let p: i64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(7);
    let q: i64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(4);

    let k = TorusKnot::new(p, q).unwrap_or_else(|e| {
        eprintln!("error: {e}");
        std::process::exit(2);
    });
    if k.is_unknot() {
        eprintln!("the unknot has no band move to simulate");
        std::process::exit(2);
    }

    let s = initial_set_s(k).unwrap();
    println!("{k}: braid word (s_1 ... s_{})^{}", k.p() - 1, k.q());
    println!("  diagram writhe: {}", standard_writhe(k));
    println!("  marked initial points S ({} strands): {:?}", s.t, s.members);

    let simulated = writhe_delta_oracle(k).unwrap_or_else(|e| {
        eprintln!("error: {e}");
        std::process::exit(3);
    });
    let closed_form = half_writhe_delta(k).unwrap();
    println!("  crossings traversed by exactly one marked strand: {simulated}");
    println!("  closed form h(p-t) + t(q-h):                      {closed_form}");
    assert_eq!(simulated, closed_form);
    println!("simulation agrees with the closed form");
}
