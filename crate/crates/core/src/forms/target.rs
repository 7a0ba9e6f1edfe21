use alloc::vec::Vec;

use crate::arith::{icbrt, in_power_set, is_cube, is_square, isqrt, ord2, power_exponent};
use crate::prime::is_prime_64;

/// Allowed values of a constraint expression. Membership may depend on the
/// represented integer (the two-adic kinds).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TargetSet {
    Exact(i64),
    /// `{b^k}`
    PowersOf(i64),
    /// `{s·b^k}`
    ScaledPowersOf(i64, i64),
    /// `{±s·b^k} ∪ {0}`
    SignedScaledPowersWithZero(i64, i64),
    Squares,
    PositiveSquares,
    /// `{c·t²}`
    ScaledSquares(i64),
    Cubes,
    SquareOrTwiceSquare,
    FiniteChoice(Vec<i64>),
    /// `{2^⌊ord2(N)/2⌋}`
    TwoAdicHalf,
    /// `{2^⌊(ord2(N)+1)/2⌋}`
    TwoAdicHalfUp,
    Primes,
    AnyOf(Vec<TargetSet>),
}

fn two_adic(n: i64, up: bool) -> Option<i64> {
    let k = ord2(n).ok()?.ord;
    Some(1i64 << ((k + up as u32) / 2))
}

fn log_floor(w: i64, b: i64) -> i64 {
    let mut k = 0;
    let mut p = 1i64;
    while let Some(q) = p.checked_mul(b) {
        if q > w {
            break;
        }
        p = q;
        k += 1;
    }
    k
}

impl TargetSet {
    pub fn contains(&self, v: i64, n: i64) -> bool {
        match self {
            TargetSet::Exact(e) => v == *e,
            TargetSet::PowersOf(b) => in_power_set(v, *b),
            TargetSet::ScaledPowersOf(s, b) => v % s == 0 && in_power_set(v / s, *b),
            TargetSet::SignedScaledPowersWithZero(s, b) => {
                v == 0 || (v % s == 0 && in_power_set((v / s).abs(), *b))
            }
            TargetSet::Squares => is_square(v),
            TargetSet::PositiveSquares => v > 0 && is_square(v),
            TargetSet::ScaledSquares(c) => v % c == 0 && is_square(v / c),
            TargetSet::Cubes => is_cube(v),
            TargetSet::SquareOrTwiceSquare => is_square(v) || (v % 2 == 0 && is_square(v / 2)),
            TargetSet::FiniteChoice(list) => list.contains(&v),
            TargetSet::TwoAdicHalf => two_adic(n, false) == Some(v),
            TargetSet::TwoAdicHalfUp => two_adic(n, true) == Some(v),
            TargetSet::Primes => v >= 2 && is_prime_64(v as u64),
            TargetSet::AnyOf(list) => list.iter().any(|t| t.contains(v, n)),
        }
    }

    pub fn is_enumerable(&self) -> bool {
        match self {
            TargetSet::Primes => false,
            TargetSet::AnyOf(list) => list.iter().all(|t| t.is_enumerable()),
            _ => true,
        }
    }

    /// Appends every member in `[lo, hi]` (unsorted, may repeat for unions).
    /// Returns false for kinds that cannot be enumerated.
    pub fn members_in(&self, lo: i64, hi: i64, n: i64, out: &mut Vec<i64>) -> bool {
        if lo > hi {
            return self.is_enumerable();
        }
        let push = |v: i64, out: &mut Vec<i64>| {
            if lo <= v && v <= hi {
                out.push(v);
            }
        };
        match self {
            TargetSet::Exact(e) => push(*e, out),
            TargetSet::PowersOf(b) => scaled_powers(1, *b, hi, |v| push(v, out)),
            TargetSet::ScaledPowersOf(s, b) => scaled_powers(*s, *b, hi, |v| push(v, out)),
            TargetSet::SignedScaledPowersWithZero(s, b) => {
                push(0, out);
                scaled_powers(*s, *b, hi, |v| push(v, out));
                scaled_powers(*s, *b, lo.saturating_neg(), |v| push(-v, out));
            }
            TargetSet::Squares | TargetSet::PositiveSquares | TargetSet::ScaledSquares(_) => {
                let c = if let TargetSet::ScaledSquares(c) = self {
                    *c
                } else {
                    1
                };
                if hi >= 0 {
                    let first = if matches!(self, TargetSet::PositiveSquares) {
                        1
                    } else {
                        0
                    };
                    let start = if lo <= 0 { 0 } else { isqrt((lo - 1) / c) };
                    for t in start.max(first)..=isqrt(hi / c) {
                        push(c * t * t, out);
                    }
                }
            }
            TargetSet::Cubes => {
                for t in icbrt(lo)..=icbrt(hi) {
                    push(t * t * t, out);
                }
            }
            TargetSet::SquareOrTwiceSquare => {
                TargetSet::Squares.members_in(lo, hi, n, out);
                TargetSet::ScaledSquares(2).members_in(lo.max(1), hi, n, out);
            }
            TargetSet::FiniteChoice(list) => {
                for &v in list {
                    push(v, out);
                }
            }
            TargetSet::TwoAdicHalf | TargetSet::TwoAdicHalfUp => {
                if let Some(v) = two_adic(n, matches!(self, TargetSet::TwoAdicHalfUp)) {
                    push(v, out);
                }
            }
            TargetSet::Primes => return false,
            TargetSet::AnyOf(list) => {
                for t in list {
                    if !t.members_in(lo, hi, n, out) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Rough number of members with absolute value at most `w`.
    pub(crate) fn density(&self, w: f64) -> f64 {
        let w = w.max(1.0);
        let lg = |b: i64, s: i64| (log_floor((w / s as f64) as i64, b) + 1) as f64;
        match self {
            TargetSet::Exact(_) | TargetSet::TwoAdicHalf | TargetSet::TwoAdicHalfUp => 1.0,
            TargetSet::PowersOf(b) => lg(*b, 1),
            TargetSet::ScaledPowersOf(s, b) => lg(*b, *s),
            TargetSet::SignedScaledPowersWithZero(s, b) => 2.0 * lg(*b, *s) + 1.0,
            TargetSet::Squares | TargetSet::PositiveSquares => approx_sqrt(w) + 1.0,
            TargetSet::ScaledSquares(c) => approx_sqrt(w / *c as f64) + 1.0,
            TargetSet::Cubes => 2.0 * approx_cbrt(w) + 1.0,
            TargetSet::SquareOrTwiceSquare => 2.0 * approx_sqrt(w) + 1.0,
            TargetSet::FiniteChoice(l) => l.len() as f64,
            TargetSet::Primes => w / approx_ln(w + 2.0).max(1.0),
            TargetSet::AnyOf(l) => l.iter().map(|t| t.density(w)).sum(),
        }
    }
}

fn approx_sqrt(x: f64) -> f64 {
    isqrt(x as i64) as f64
}

fn approx_cbrt(x: f64) -> f64 {
    icbrt(x as i64) as f64
}

// natural log from the exponent bits; coarse, but only feeds cost estimates
fn approx_ln(x: f64) -> f64 {
    let exp = ((x.to_bits() >> 52) & 0x7ff) as i64 - 1023;
    exp as f64 * core::f64::consts::LN_2
}

fn scaled_powers(s: i64, b: i64, hi: i64, mut f: impl FnMut(i64)) {
    let mut p = s;
    while p <= hi {
        f(p);
        match p.checked_mul(b) {
            Some(q) => p = q,
            None => break,
        }
    }
}

pub(crate) fn exponent_of(v: i64, s: i64, b: i64) -> Option<u32> {
    if v % s != 0 {
        return None;
    }
    power_exponent(v / s, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn brute(t: &TargetSet, lo: i64, hi: i64, n: i64) -> Vec<i64> {
        (lo..=hi).filter(|&v| t.contains(v, n)).collect()
    }

    #[test]
    fn enumeration_matches_membership() {
        let kinds = vec![
            TargetSet::Exact(3),
            TargetSet::PowersOf(4),
            TargetSet::ScaledPowersOf(3, 2),
            TargetSet::SignedScaledPowersWithZero(2, 8),
            TargetSet::Squares,
            TargetSet::PositiveSquares,
            TargetSet::ScaledSquares(2),
            TargetSet::Cubes,
            TargetSet::SquareOrTwiceSquare,
            TargetSet::FiniteChoice(vec![1, 4]),
            TargetSet::TwoAdicHalf,
            TargetSet::TwoAdicHalfUp,
            TargetSet::AnyOf(vec![TargetSet::PowersOf(8), TargetSet::Exact(0)]),
        ];
        for t in &kinds {
            for (lo, hi) in [(-300, 300), (5, 77), (-50, -1), (0, 0), (1, 1)] {
                for n in [1, 12, 48] {
                    let mut got = Vec::new();
                    assert!(t.members_in(lo, hi, n, &mut got));
                    got.sort_unstable();
                    got.dedup();
                    assert_eq!(got, brute(t, lo, hi, n), "{t:?} [{lo},{hi}] n={n}");
                }
            }
        }
        assert!(!TargetSet::Primes.members_in(0, 10, 1, &mut Vec::new()));
    }

    #[test]
    fn two_adic_targets() {
        assert!(TargetSet::TwoAdicHalfUp.contains(2, 14));
        assert!(TargetSet::TwoAdicHalfUp.contains(1, 107));
        assert!(TargetSet::TwoAdicHalf.contains(2, 4));
        assert!(!TargetSet::TwoAdicHalf.contains(1, 0));
    }
}
