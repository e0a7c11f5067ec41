//! Print the full band-move cobordism sequence from the unknot up to a
//! torus knot, one row per step, with per-step and total b2^-.
//!
//! ```bash
//! cargo run --example batson_sequence -- 17 5
//! ```

use ust::{batson_sequence, TorusKnot};

fn main() {
    let mut args = std::env::args().skip(1);
    let p: i64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(7);
    let q: i64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(4);

    let k = TorusKnot::new(p, q).unwrap_or_else(|e| {
        eprintln!("error: {e}");
        std::process::exit(2);
    });

    let seq = batson_sequence(k).unwrap_or_else(|e| {
        eprintln!("error: {e}");
        std::process::exit(3);
    });

    println!("band-move sequence for {k} ({} steps)", seq.steps.len());
    println!(
        "{:>4} {:>10} {:>5} {:>5} {:>10} {:>7} {:>7} {:>9} {:>9}",
        "step", "knot", "t", "h", "from", "w_half", "ups_d", "sigma_mc", "b2_step"
    );
    for (i, step) in seq.steps.iter().enumerate() {
        println!(
            "{:>4} {:>10} {:>5} {:>5} {:>10} {:>7} {:>7} {:>9} {:>9}",
            i + 1,
            format!("T({},{})", step.p, step.q),
            step.t,
            step.h,
            step.next.to_string(),
            step.half_writhe_delta,
            step.upsilon_delta.to_string(),
            step.sigma_mc,
            step.b2_minus_step
        );
    }
    println!(
        "totals: upsilon = {}, b2_minus = {}",
        seq.upsilon_batson, seq.b2_minus_total
    );
}
