//! Brute-force crossing-count oracle for the half-writhe drop of a band
//! move.
//!
//! The standard diagram of `T(p,q)` closes the `p`-strand braid
//! `(s_1 s_2 ... s_{p-1})^q`. Marking the `t` strands whose initial points
//! lie in
//!
//! ```text
//! S = { 1 <= k <= p : k = 1 - i*q (mod p) for some 0 <= i < t }
//! ```
//!
//! and counting the crossings traversed by exactly one marked strand
//! reproduces `h(p-t) + t(q-h)` crossing by crossing, with no number
//! theory involved. The count, the closed form, and the intermediate
//! identity `|S_le_q| (p - t) + (q - |S_le_q|) t` can all be compared
//! directly; `s_leq_q_count` additionally checks the division identity
//! `|S_le_q| = (t*q + 1) / p = h`.

use crate::batson::band_pair;
use crate::error::{Error, Result};
use crate::knot::TorusKnot;

/// Default cap on the crossing count `q(p-1)` of a simulation.
pub const DEFAULT_BRAID_CAP: i64 = 100_000;

/// The marked initial points of the braid, in the order generated by the
/// congruence (`i = 0, 1, ..., t-1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InitialSetS {
    pub p: i64,
    pub q: i64,
    pub t: i64,
    /// Members of `S`, each in `[1, p]`; there are exactly `t` of them.
    pub members: Vec<i64>,
}

/// Positions-to-strands state of a positive braid word simulation, with
/// marked-strand bookkeeping.
///
/// Strands are named by their initial position `1..=p`; `position_to_strand`
/// tracks which strand currently sits at each position.
#[derive(Debug, Clone)]
pub struct MarkedBraidState {
    position_to_strand: Vec<i64>,
    marked: Vec<bool>,
    crossings_once: i64,
}

impl MarkedBraidState {
    /// A fresh braid on `p` strands with the strands starting at the given
    /// positions marked.
    pub fn new(p: i64, marked_initial_positions: &[i64]) -> MarkedBraidState {
        assert!(p >= 1);
        let mut marked = vec![false; p as usize];
        for &k in marked_initial_positions {
            assert!(1 <= k && k <= p, "marked position {k} out of range");
            marked[(k - 1) as usize] = true;
        }
        MarkedBraidState {
            position_to_strand: (1..=p).collect(),
            marked,
            crossings_once: 0,
        }
    }

    pub fn strand_count(&self) -> i64 {
        self.position_to_strand.len() as i64
    }

    /// Strand currently at position `pos` (1-based).
    pub fn strand_at(&self, pos: i64) -> i64 {
        self.position_to_strand[(pos - 1) as usize]
    }

    pub fn is_marked(&self, strand: i64) -> bool {
        self.marked[(strand - 1) as usize]
    }

    pub fn marked_count(&self) -> i64 {
        self.marked.iter().filter(|&&m| m).count() as i64
    }

    /// Crossings seen so far that exactly one marked strand passed through.
    pub fn crossings_once(&self) -> i64 {
        self.crossings_once
    }

    /// Applies the generator `s_i` (1-based, acting on positions `i` and
    /// `i+1`): counts the crossing if exactly one participant is marked,
    /// then swaps.
    pub fn apply_generator(&mut self, i: i64) {
        let a = (i - 1) as usize;
        let lhs = self.position_to_strand[a];
        let rhs = self.position_to_strand[a + 1];
        if self.is_marked(lhs) != self.is_marked(rhs) {
            self.crossings_once += 1;
        }
        self.position_to_strand.swap(a, a + 1);
    }

    /// One full twist `s_1 s_2 ... s_{p-1}`, read left to right.
    pub fn apply_full_twist(&mut self) {
        for i in 1..self.strand_count() {
            self.apply_generator(i);
        }
    }
}

/// The set `S` of marked initial points for the band move on `k`.
pub fn initial_set_s(k: TorusKnot) -> Result<InitialSetS> {
    let (t, _) = band_pair(k)?;
    let (p, q) = (k.p(), k.q());
    let members: Vec<i64> = (0..t)
        .map(|i| {
            // representative of 1 - i*q (mod p) in [1, p]
            let r = (1 - i * q).rem_euclid(p);
            if r == 0 {
                p
            } else {
                r
            }
        })
        .collect();
    debug_assert_eq!(members.len(), t as usize);
    Ok(InitialSetS { p, q, t, members })
}

/// `|S intersect [1, q]|`, checked against the exact division
/// `(t*q + 1) / p` and against `h`.
///
/// Panics if either identity fails; both are forced for coprime input.
pub fn s_leq_q_count(k: TorusKnot) -> Result<i64> {
    let s = initial_set_s(k)?;
    let (_, h) = band_pair(k)?;
    let count = s.members.iter().filter(|&&m| m <= s.q).count() as i64;
    let (t, p, q) = (s.t, s.p, s.q);
    assert_eq!(
        (t * q + 1) % p,
        0,
        "t*q + 1 = {} is not divisible by p = {p} for {k}",
        t * q + 1
    );
    assert_eq!(count, (t * q + 1) / p, "|S_le_q| disagrees with (t*q+1)/p for {k}");
    assert_eq!(count, h, "|S_le_q| disagrees with h for {k}");
    Ok(count)
}

/// Half the writhe drop of the band move, found by simulating all
/// `q(p-1)` crossings of the braid word and counting the ones traversed by
/// exactly one marked strand. Must equal `h(p-t) + t(q-h)`.
pub fn writhe_delta_oracle_with_cap(k: TorusKnot, cap: i64) -> Result<i64> {
    let (p, q) = (k.p(), k.q());
    let crossings = q * (p - 1);
    if crossings > cap {
        return Err(Error::CapExceeded {
            what: "braid simulation crossings q(p-1)",
            size: crossings,
            cap,
        });
    }
    let s = initial_set_s(k)?;
    let mut state = MarkedBraidState::new(p, &s.members);
    for _ in 0..q {
        state.apply_full_twist();
    }
    debug_assert_eq!(state.marked_count(), s.t);
    Ok(state.crossings_once())
}

/// [`writhe_delta_oracle_with_cap`] at the default cap.
pub fn writhe_delta_oracle(k: TorusKnot) -> Result<i64> {
    writhe_delta_oracle_with_cap(k, DEFAULT_BRAID_CAP)
}

/// Writhe `q(p-1)` of the standard all-positive diagram.
pub fn standard_writhe(k: TorusKnot) -> i64 {
    k.q() * (k.p() - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::gcd;
    use crate::batson::half_writhe_delta;
    use proptest::prelude::*;

    fn knot(p: i64, q: i64) -> TorusKnot {
        TorusKnot::new(p, q).unwrap()
    }

    #[test]
    fn initial_set_pinned_values() {
        assert_eq!(initial_set_s(knot(7, 4)).unwrap().members, vec![1, 4, 7, 3, 6]);
        assert_eq!(initial_set_s(knot(3, 2)).unwrap().members, vec![1]);
        assert_eq!(initial_set_s(knot(4, 3)).unwrap().members, vec![1]);
        assert_eq!(initial_set_s(TorusKnot::UNKNOT), Err(Error::UnknotInput));
    }

    #[test]
    fn s_leq_q_pinned_values() {
        assert_eq!(s_leq_q_count(knot(7, 4)).unwrap(), 3);
        assert_eq!(s_leq_q_count(knot(3, 2)).unwrap(), 1);
        for k in 2..=40 {
            assert_eq!(s_leq_q_count(knot(k + 1, k)).unwrap(), 1);
        }
    }

    #[test]
    fn oracle_pinned_values() {
        assert_eq!(writhe_delta_oracle(knot(7, 4)).unwrap(), 11);
        assert_eq!(writhe_delta_oracle(knot(3, 2)).unwrap(), 3);
        assert_eq!(writhe_delta_oracle(knot(4, 3)).unwrap(), 5);
    }

    #[test]
    fn oracle_respects_cap() {
        assert!(matches!(
            writhe_delta_oracle_with_cap(knot(101, 100), 100),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn standard_writhe_values() {
        assert_eq!(standard_writhe(knot(7, 4)), 24);
        assert_eq!(standard_writhe(knot(3, 2)), 4);
        assert_eq!(standard_writhe(TorusKnot::UNKNOT), 0);
    }

    #[test]
    fn full_twist_power_gives_expected_permutation() {
        // one full twist sends the strand at position j to position j-1
        // (cyclically), so q twists shift by q
        for (p, q) in [(7i64, 4i64), (5, 3), (9, 2)] {
            let mut state = MarkedBraidState::new(p, &[]);
            for _ in 0..q {
                state.apply_full_twist();
            }
            for pos in 1..=p {
                let expected = (pos - 1 + q).rem_euclid(p) + 1;
                assert_eq!(state.strand_at(pos), expected);
            }
        }
    }

    proptest! {
        #[test]
        fn oracle_matches_closed_form(p in 2i64..40, q in 2i64..40) {
            prop_assume!(q < p && gcd(p, q) == 1);
            let k = knot(p, q);
            prop_assert_eq!(
                writhe_delta_oracle(k).unwrap(),
                half_writhe_delta(k).unwrap()
            );
        }

        #[test]
        fn marked_count_constant_through_simulation(p in 2i64..30, q in 2i64..30) {
            prop_assume!(q < p && gcd(p, q) == 1);
            let k = knot(p, q);
            let s = initial_set_s(k).unwrap();
            let mut state = MarkedBraidState::new(p, &s.members);
            for _ in 0..q {
                for i in 1..p {
                    state.apply_generator(i);
                    prop_assert_eq!(state.marked_count(), s.t);
                }
            }
        }
    }
}
