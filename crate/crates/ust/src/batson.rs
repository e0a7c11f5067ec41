//! Batson's non-orientable surface for a torus knot, as a chain of
//! band-move cobordisms, and the identity it realizes.
//!
//! A single band move on the standard diagram of `T(p,q)` produces the
//! standard diagram of `T(p-2t, q-2h)`, where `(t, h)` is the unique pair
//! with `0 < t < p`, `0 < h < q` and `h*p - t*q = 1`; equivalently
//! `t = -q^{-1} (mod p)` and `h = p^{-1} (mod q)`. Repeating the move
//! drives any torus knot down to the unknot, and stacking the resulting
//! cobordisms yields a non-orientable surface bounding `T(p,q)`.
//!
//! Each cobordism `C` contributes `b2^-(M_C) = (1 - sigma(M_C)) / 2` to the
//! double branched cover, with
//! `sigma(M_C) = (sigma(K) - sigma(K')) + half_writhe_delta` and
//! `half_writhe_delta = h(p-t) + t(q-h)`. Summing the steps gives
//!
//! ```text
//! b2^-(M_F) = upsilon(T(p,q)) - sigma(T(p,q)) / 2,
//! ```
//!
//! because the per-step upsilon difference is exactly
//! `(1 - half_writhe_delta) / 2`. [`verify_theorem`] recomputes all three
//! quantities independently and checks the identity; [`upsilon_batson`]
//! uses the step sum alone as a second route to upsilon, needing no
//! signature at all.

use serde::Serialize;

use crate::arith::{mod_inverse, QuarterRational};
use crate::error::{verification, Error, Result};
use crate::knot::TorusKnot;
use crate::signature::{sigma_count_with_cap, DEFAULT_SIGMA_CAP};
use crate::upsilon::upsilon_fk;

/// The unique `(t, h)` with `0 < t < p`, `0 < h < q`, `h*p - t*q = 1`.
/// Errors on the unknot, which admits no band move.
pub fn band_pair(k: TorusKnot) -> Result<(i64, i64)> {
    if k.is_unknot() {
        return Err(Error::UnknotInput);
    }
    let (p, q) = (k.p(), k.q());
    let t = p - mod_inverse(q, p)?;
    let h = mod_inverse(p, q)?;
    assert_eq!(h * p - t * q, 1, "band pair identity failed for {k}");
    debug_assert!(0 < t && t < p && 0 < h && h < q);
    Ok((t, h))
}

/// The knot on the far side of the band move, `T(|p-2t|, |q-2h|)`.
pub fn next_knot(k: TorusKnot) -> Result<TorusKnot> {
    let (t, h) = band_pair(k)?;
    Ok(TorusKnot::new(k.p() - 2 * t, k.q() - 2 * h)
        .expect("band move preserves coprimality"))
}

/// Half the writhe drop of the band move, `h(p-t) + t(q-h)`, in closed
/// form. The braid simulation in [`crate::braid`] recovers the same number
/// by counting crossings.
pub fn half_writhe_delta(k: TorusKnot) -> Result<i64> {
    let (t, h) = band_pair(k)?;
    Ok(h * (k.p() - t) + t * (k.q() - h))
}

/// One band-move cobordism, fully evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BatsonStep {
    /// Torus-knot pair on the large end of this cobordism.
    pub p: i64,
    pub q: i64,
    pub t: i64,
    pub h: i64,
    /// Knot on the small end, `T(|p-2t|, |q-2h|)`.
    pub next: TorusKnot,
    /// `(w(D) - w(D')) / 2 = h(p-t) + t(q-h)`.
    pub half_writhe_delta: i64,
    /// `upsilon(T(p,q)) - upsilon(next) = (1 - half_writhe_delta) / 2`.
    pub upsilon_delta: QuarterRational,
    /// Signature of the double branched cover of the cobordism; always
    /// -1 or +1 since its second Betti number is 1.
    pub sigma_mc: i64,
    /// `(1 - sigma_mc) / 2`, the step's contribution to `b2^-`.
    pub b2_minus_step: i64,
}

/// The full chain of band moves from the unknot up to a target knot,
/// with its totals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BatsonSequence {
    pub target: TorusKnot,
    /// Steps ordered from the unknot end upward: `steps[0].next` is the
    /// unknot and the last step's `(p, q)` is the target.
    pub steps: Vec<BatsonStep>,
    pub b2_minus_total: i64,
    pub upsilon_batson: QuarterRational,
}

/// Everything [`verify_theorem`] computes for one knot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InvariantRecord {
    pub knot: TorusKnot,
    pub upsilon: QuarterRational,
    pub sigma: i64,
    pub b2_minus: i64,
    /// `upsilon - sigma/2`; equals `b2_minus` whenever all fields are set.
    pub upsilon_minus_half_sigma: QuarterRational,
}

impl InvariantRecord {
    fn trivial() -> InvariantRecord {
        InvariantRecord {
            knot: TorusKnot::UNKNOT,
            upsilon: QuarterRational::ZERO,
            sigma: 0,
            b2_minus: 0,
            upsilon_minus_half_sigma: QuarterRational::ZERO,
        }
    }
}

/// The knots visited by repeated band moves, from `k` down to the unknot
/// (both endpoints included). The strand count drops strictly at every
/// move, so the walk terminates in fewer than `p` steps.
fn descent_chain(k: TorusKnot) -> Vec<TorusKnot> {
    let mut chain = vec![k];
    let mut cur = k;
    while !cur.is_unknot() {
        cur = next_knot(cur).expect("nontrivial knot admits a band move");
        chain.push(cur);
    }
    chain
}

/// The single band-move step off `k`, with its signature data.
/// Errors on the unknot and propagates the signature scan cap.
pub fn batson_step_with_cap(k: TorusKnot, sigma_cap: i64) -> Result<BatsonStep> {
    if k.is_unknot() {
        return Err(Error::UnknotInput);
    }
    let sigma_k = sigma_count_with_cap(k, sigma_cap)?;
    build_step(k, sigma_k, sigma_cap).map(|(step, _)| step)
}

/// [`batson_step_with_cap`] at the default signature cap.
pub fn batson_step(k: TorusKnot) -> Result<BatsonStep> {
    batson_step_with_cap(k, DEFAULT_SIGMA_CAP)
}

/// Builds the step off `k` given `sigma(k)`, returning the step together
/// with `sigma(next)` so chain walks evaluate each signature once.
fn build_step(k: TorusKnot, sigma_k: i64, sigma_cap: i64) -> Result<(BatsonStep, i64)> {
    let (p, q) = (k.p(), k.q());
    let (t, h) = band_pair(k)?;
    let next = next_knot(k)?;
    let hwd = h * (p - t) + t * (q - h);
    let sigma_next = sigma_count_with_cap(next, sigma_cap)?;
    let sigma_mc = (sigma_k - sigma_next) + hwd;
    if sigma_mc != 1 && sigma_mc != -1 {
        return Err(verification(p, q, "sigma(M_C) in {-1,+1}", "-1 or +1", sigma_mc));
    }
    let step = BatsonStep {
        p,
        q,
        t,
        h,
        next,
        half_writhe_delta: hwd,
        upsilon_delta: QuarterRational::half(1 - hwd),
        sigma_mc,
        b2_minus_step: (1 - sigma_mc) / 2,
    };
    Ok((step, sigma_next))
}

/// The full band-move chain for `k`. The unknot yields an empty sequence
/// with zero totals.
pub fn batson_sequence_with_cap(k: TorusKnot, sigma_cap: i64) -> Result<BatsonSequence> {
    let mut steps = Vec::new();
    let mut cur = k;
    let mut sigma_cur = sigma_count_with_cap(k, sigma_cap)?;
    while !cur.is_unknot() {
        let (step, sigma_next) = build_step(cur, sigma_cur, sigma_cap)?;
        cur = step.next;
        sigma_cur = sigma_next;
        steps.push(step);
    }
    steps.reverse(); // stored from the unknot end upward
    let b2_minus_total = steps.iter().map(|s| s.b2_minus_step).sum();
    let upsilon_batson = steps.iter().map(|s| s.upsilon_delta).sum();
    Ok(BatsonSequence {
        target: k,
        steps,
        b2_minus_total,
        upsilon_batson,
    })
}

/// [`batson_sequence_with_cap`] at the default signature cap.
pub fn batson_sequence(k: TorusKnot) -> Result<BatsonSequence> {
    batson_sequence_with_cap(k, DEFAULT_SIGMA_CAP)
}

/// upsilon as the telescoping band-move sum `sum (1 - half_writhe_delta)/2`.
/// Needs no signature computation.
pub fn upsilon_batson(k: TorusKnot) -> QuarterRational {
    let chain = descent_chain(k);
    chain[..chain.len() - 1]
        .iter()
        .map(|&knot| {
            let hwd = half_writhe_delta(knot).expect("chain interior is nontrivial");
            QuarterRational::half(1 - hwd)
        })
        .sum()
}

/// `b2^-` of the double branched cover of the full Batson surface.
pub fn b2_minus_batson_with_cap(k: TorusKnot, sigma_cap: i64) -> Result<i64> {
    Ok(batson_sequence_with_cap(k, sigma_cap)?.b2_minus_total)
}

/// [`b2_minus_batson_with_cap`] at the default signature cap.
pub fn b2_minus_batson(k: TorusKnot) -> Result<i64> {
    b2_minus_batson_with_cap(k, DEFAULT_SIGMA_CAP)
}

/// Computes upsilon (by recursion and by band-move sum), the signature and
/// `b2^-` independently, and checks that `upsilon - sigma/2 = b2^-` along
/// with the per-step constraints. Returns the assembled record, or the
/// first failed check.
pub fn verify_theorem_with_cap(k: TorusKnot, sigma_cap: i64) -> Result<InvariantRecord> {
    if k.is_unknot() {
        return Ok(InvariantRecord::trivial());
    }
    let upsilon = upsilon_fk(k);
    let by_bands = upsilon_batson(k);
    if upsilon != by_bands {
        return Err(verification(
            k.p(),
            k.q(),
            "upsilon recursion == band-move sum",
            upsilon,
            by_bands,
        ));
    }
    let sequence = batson_sequence_with_cap(k, sigma_cap)?;
    let sigma = sigma_count_with_cap(k, sigma_cap)?;
    let b2_minus = sequence.b2_minus_total;
    let upsilon_minus_half_sigma = upsilon - QuarterRational::half(sigma);
    if upsilon_minus_half_sigma != QuarterRational::from_integer(b2_minus) {
        return Err(verification(
            k.p(),
            k.q(),
            "upsilon - sigma/2 == b2^-",
            upsilon_minus_half_sigma,
            b2_minus,
        ));
    }
    Ok(InvariantRecord {
        knot: k,
        upsilon,
        sigma,
        b2_minus,
        upsilon_minus_half_sigma,
    })
}

/// [`verify_theorem_with_cap`] at the default signature cap.
pub fn verify_theorem(k: TorusKnot) -> Result<InvariantRecord> {
    verify_theorem_with_cap(k, DEFAULT_SIGMA_CAP)
}

/// Value of any unoriented slice-torus invariant on the pretzel knot
/// `P(-2, p, q)` for odd `p, q >= 3`, namely `(2 - p - q) / 2`.
pub fn pretzel_f(p: i64, q: i64) -> Result<QuarterRational> {
    for v in [p, q] {
        if v < 3 || v % 2 == 0 {
            return Err(Error::ParameterNotOdd { got: v, min: 3 });
        }
    }
    Ok(QuarterRational::half(2 - p - q))
}
