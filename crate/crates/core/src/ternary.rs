//! Ternary diagonal forms `ax²+by²+cz²`: brute-force representation, closed
//! forms for the sets of naturals a form misses, and helper lemmas used by
//! the constructive decomposers.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{is_square, isqrt};
use crate::error::{invalid, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TernaryForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl TernaryForm {
    pub const fn new(a: i64, b: i64, c: i64) -> Self {
        TernaryForm { a, b, c }
    }

    /// Coefficients sorted ascending.
    pub fn normalized(&self) -> TernaryForm {
        let mut v = [self.a, self.b, self.c];
        v.sort_unstable();
        TernaryForm::new(v[0], v[1], v[2])
    }

    pub fn eval(&self, x: i64, y: i64, z: i64) -> Result<i64> {
        let t = self.a as i128 * (x as i128 * x as i128)
            + self.b as i128 * (y as i128 * y as i128)
            + self.c as i128 * (z as i128 * z as i128);
        i64::try_from(t).map_err(|_| Error::Overflow)
    }
}

/// A parameterized family of naturals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// `{ base^k (modulus·l + residue) : k, l >= 0 }`
    Geometric {
        base: i64,
        modulus: i64,
        residue: i64,
    },
    /// `{ n : n mod modulus ∈ residues }`
    Residue { modulus: i64, residues: Vec<i64> },
    /// `{ scale · base^k : k >= 0 }`
    ScaledPowers { scale: i64, base: i64 },
}

impl Family {
    pub fn e0() -> Family {
        Family::Geometric {
            base: 4,
            modulus: 8,
            residue: 7,
        }
    }

    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        match *self {
            Family::Geometric {
                base,
                modulus,
                residue,
            } => {
                if n == 0 {
                    return residue == 0;
                }
                let mut q = n;
                loop {
                    if q % modulus == residue {
                        return true;
                    }
                    if q % base != 0 {
                        return false;
                    }
                    q /= base;
                }
            }
            Family::Residue {
                modulus,
                ref residues,
            } => residues.contains(&(n % modulus)),
            Family::ScaledPowers { scale, base } => {
                n % scale == 0 && crate::arith::in_power_set(n / scale, base)
            }
        }
    }
}

pub fn in_e0(n: i64) -> bool {
    Family::e0().contains(n)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExceptionalSetDescriptor {
    pub form: TernaryForm,
    pub families: Vec<Family>,
}

fn res(modulus: i64, residues: &[i64]) -> Family {
    Family::Residue {
        modulus,
        residues: residues.to_vec(),
    }
}

fn geo(base: i64, modulus: i64, residue: i64) -> Family {
    Family::Geometric {
        base,
        modulus,
        residue,
    }
}

/// Closed forms for the naturals missed by the registered ternary forms.
pub fn descriptors() -> Vec<ExceptionalSetDescriptor> {
    let d = |a, b, c, families| ExceptionalSetDescriptor {
        form: TernaryForm::new(a, b, c),
        families,
    };
    vec![
        d(1, 1, 1, vec![Family::e0()]),
        d(1, 5, 5, vec![res(5, &[2, 3]), Family::e0()]),
        d(1, 3, 6, vec![res(3, &[2]), geo(4, 16, 14)]),
        d(2, 3, 6, vec![res(3, &[1]), Family::e0()]),
        d(1, 2, 4, vec![geo(4, 16, 14)]),
        d(1, 6, 9, vec![res(3, &[2]), geo(9, 9, 3)]),
        d(2, 3, 12, vec![res(16, &[6]), geo(9, 3, 1)]),
        d(1, 5, 10, vec![geo(25, 5, 2), geo(25, 5, 3)]),
        d(2, 5, 10, vec![res(8, &[3]), geo(25, 5, 1), geo(25, 5, 4)]),
        d(1, 1, 2, vec![geo(4, 16, 14)]),
    ]
}

pub fn descriptor(form: TernaryForm) -> Result<ExceptionalSetDescriptor> {
    let f = form.normalized();
    descriptors()
        .into_iter()
        .find(|d| d.form == f)
        .ok_or(Error::UnregisteredForm(form.a, form.b, form.c))
}

pub fn in_exceptional_set(d: &ExceptionalSetDescriptor, n: i64) -> Result<bool> {
    if n < 0 {
        return Err(invalid("exceptional sets are subsets of the naturals"));
    }
    Ok(d.families.iter().any(|f| f.contains(n)))
}

/// Side condition on one coordinate of a ternary representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Congruence {
    pub coord: usize,
    pub modulus: i64,
    pub residue: i64,
}

impl Congruence {
    pub const fn parity(coord: usize, residue: i64) -> Self {
        Congruence {
            coord,
            modulus: 2,
            residue,
        }
    }
}

fn signed_order(bound: i64) -> impl Iterator<Item = i64> {
    (0..=bound).flat_map(|a| if a == 0 { vec![0] } else { vec![a, -a] })
}

/// First `(x, y, z)` in the order x, y = 0, 1, -1, 2, ... with
/// `ax²+by²+cz² = n` and every side condition satisfied.
pub fn represent_ternary(
    f: TernaryForm,
    n: i64,
    conds: &[Congruence],
) -> Result<Option<(i64, i64, i64)>> {
    if f.a < 1 || f.b < 1 || f.c < 1 {
        return Err(invalid("ternary coefficients must be positive"));
    }
    if n < 0 {
        return Ok(None);
    }
    let ok = |p: [i64; 3]| {
        conds
            .iter()
            .all(|c| p[c.coord].rem_euclid(c.modulus) == c.residue.rem_euclid(c.modulus))
    };
    for x in signed_order(isqrt(n / f.a)) {
        let rx = n - f.a * x * x;
        for y in signed_order(isqrt(rx / f.b)) {
            let ry = rx - f.b * y * y;
            if ry % f.c != 0 || !is_square(ry / f.c) {
                continue;
            }
            let z = isqrt(ry / f.c);
            for zz in if z == 0 { vec![0] } else { vec![z, -z] } {
                if ok([x, y, zz]) {
                    return Ok(Some((x, y, zz)));
                }
            }
        }
    }
    Ok(None)
}

/// All integer pairs with `ax² + by² = n`.
pub fn binary_reps(a: i64, b: i64, n: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    if n < 0 {
        return out;
    }
    for x in signed_order(isqrt(n / a)) {
        let r = n - a * x * x;
        if r % b == 0 && is_square(r / b) {
            let y = isqrt(r / b);
            out.push((x, y));
            if y != 0 {
                out.push((x, -y));
            }
        }
    }
    out
}

/// `x ≥ y ≥ z ≥ 0` with `x²+y²+z² = n`, largest x first.
pub fn three_squares(n: i64) -> Option<(i64, i64, i64)> {
    three_squares_all(n).next()
}

/// Every representation `x ≥ y ≥ z ≥ 0`, in descending lexicographic order.
pub fn three_squares_all(n: i64) -> impl Iterator<Item = (i64, i64, i64)> {
    let top = if n < 0 || in_e0(n) { -1 } else { isqrt(n) };
    (0..=top).rev().flat_map(move |x| {
        let rem = n - x * x;
        // y ranges over [ceil(sqrt(rem/2)), min(x, isqrt(rem))]
        let hi = x.min(isqrt(rem));
        (0..=hi)
            .rev()
            .take_while(move |&y| 2 * y * y >= rem)
            .filter_map(move |y| {
                let r2 = rem - y * y;
                if r2 > y * y || !is_square(r2) {
                    return None;
                }
                Some((x, y, isqrt(r2)))
            })
    })
}

/// `(x, y)` with `x²+y² = u²+v²` and neither divisible by 5.
pub fn five_rotate(u: i64, v: i64) -> Result<(i64, i64)> {
    let s = u
        .checked_mul(u)
        .and_then(|a| v.checked_mul(v).and_then(|b| a.checked_add(b)))
        .ok_or(Error::Overflow)?;
    if s <= 0 || s % 5 != 0 {
        return Err(Error::Precondition(format!(
            "{u}^2+{v}^2 is not a positive multiple of 5"
        )));
    }
    if u % 5 != 0 && v % 5 != 0 {
        return Ok((u, v));
    }
    for x in 1..=isqrt(s) {
        let r = s - x * x;
        if x % 5 != 0 && is_square(r) {
            let y = isqrt(r);
            if y % 5 != 0 {
                return Ok((x, y));
            }
        }
    }
    Err(Error::Contradiction(format!(
        "no rotation of ({u}, {v}) avoids multiples of 5"
    )))
}

/// `(a, b, c)` with `a²+b²+c² = n` and `a + b ≡ 1 (mod 3)`.
///
/// Walks the representations of [`three_squares_all`] and takes the first
/// with a coordinate prime to 3. That coordinate becomes `a`, the next one in
/// order becomes `b`; then `a → -a` if `a+b ≡ 0`, and both signs flip if
/// `a+b ≡ 2`.
pub fn mod3_adjust(n: i64) -> Result<(i64, i64, i64)> {
    if n < 1 {
        return Err(invalid("mod3_adjust needs n >= 1"));
    }
    if in_e0(n) {
        return Err(Error::Precondition(format!(
            "{n} is not a sum of three squares"
        )));
    }
    for (x, y, z) in three_squares_all(n) {
        let p = [x, y, z];
        let Some(i) = p.iter().position(|&t| t % 3 != 0) else {
            continue;
        };
        let rest: Vec<i64> = (0..3).filter(|&j| j != i).map(|j| p[j]).collect();
        let (mut a, mut b, c) = (p[i], rest[0], rest[1]);
        if (a + b).rem_euclid(3) == 0 {
            a = -a;
        }
        if (a + b).rem_euclid(3) == 2 {
            a = -a;
            b = -b;
        }
        debug_assert_eq!((a + b).rem_euclid(3), 1);
        return Ok((a, b, c));
    }
    Err(Error::Contradiction(format!(
        "every representation of {n} is divisible by 3"
    )))
}

/// Which gap pattern to test against E0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GapPattern {
    /// `{n-1, n-m}` with `16 | m`, `16 ∤ n`.
    Pair { m: i64 },
    /// `{n, n-4}`, plus `{n, n-1}` when `16 ∤ n` or `{n, n-1, n-64}` when `16 | n`;
    /// needs `n ≥ 4`, `64 ∤ n`.
    Quarter,
}

/// Evaluates "not every listed value lies in E0" for the chosen pattern.
pub fn gap_lemma_check(n: i64, pattern: GapPattern) -> Result<bool> {
    let escapes = |vals: &[i64]| vals.iter().any(|&v| !in_e0(v));
    match pattern {
        GapPattern::Pair { m } => {
            if m % 16 != 0 || n % 16 == 0 {
                return Err(Error::Precondition(format!(
                    "pair pattern needs 16 | m and 16 ∤ n (n={n}, m={m})"
                )));
            }
            Ok(escapes(&[n - 1, n - m]))
        }
        GapPattern::Quarter => {
            if n < 4 || n % 64 == 0 {
                return Err(Error::Precondition(format!(
                    "quarter pattern needs n >= 4 and 64 ∤ n (n={n})"
                )));
            }
            let first = escapes(&[n, n - 4]);
            let second = if n % 16 != 0 {
                escapes(&[n, n - 1])
            } else {
                escapes(&[n, n - 1, n - 64])
            };
            Ok(first && second)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_three(n: i64) -> bool {
        let r = isqrt(n);
        (0..=r).any(|x| (0..=r).any(|y| is_square(n - x * x - y * y)))
    }

    #[test]
    fn examples() {
        let e111 = descriptor(TernaryForm::new(1, 1, 1)).unwrap();
        assert!(in_exceptional_set(&e111, 7).unwrap());
        assert!(!in_exceptional_set(&e111, 6).unwrap());
        let e112 = descriptor(TernaryForm::new(2, 1, 1)).unwrap();
        assert!(in_exceptional_set(&e112, 14).unwrap());
        assert!(matches!(
            descriptor(TernaryForm::new(1, 1, 3)),
            Err(Error::UnregisteredForm(..))
        ));
    }

    #[test]
    fn ternary_reps() {
        let f = TernaryForm::new(1, 7, 14);
        assert_eq!(represent_ternary(f, 2, &[]).unwrap(), None);
        assert_eq!(represent_ternary(f, 8, &[]).unwrap(), Some((1, 1, 0)));
        let g = TernaryForm::new(5, 5, 1);
        let (x, y, z) = represent_ternary(g, 29, &[Congruence::parity(2, 1)])
            .unwrap()
            .unwrap();
        assert_eq!(5 * x * x + 5 * y * y + z * z, 29);
        assert_eq!(z.rem_euclid(2), 1);
    }

    #[test]
    fn three_squares_matches_e0() {
        assert_eq!(three_squares(7), None);
        assert_eq!(three_squares(0), Some((0, 0, 0)));
        let (x, y, z) = three_squares(107).unwrap();
        assert_eq!(x * x + y * y + z * z, 107);
        for n in 0..=10_000 {
            let t = three_squares(n);
            assert_eq!(t.is_some(), !in_e0(n), "{n}");
            assert_eq!(t.is_some(), brute_three(n), "{n}");
            if let Some((x, y, z)) = t {
                assert!(x >= y && y >= z && z >= 0);
                assert_eq!(x * x + y * y + z * z, n);
            }
        }
    }

    #[test]
    fn five_rotation() {
        let (x, y) = five_rotate(5, 0).unwrap();
        assert_eq!((x.abs().min(y.abs()), x.abs().max(y.abs())), (3, 4));
        let (x, y) = five_rotate(10, 5).unwrap();
        assert_eq!((x.abs().min(y.abs()), x.abs().max(y.abs())), (2, 11));
        assert_eq!(five_rotate(1, 2).unwrap(), (1, 2));
        assert!(five_rotate(1, 1).is_err());
        for u in -40i64..=40 {
            for v in -40i64..=40 {
                let s = u * u + v * v;
                if s > 0 && s % 5 == 0 {
                    let (x, y) = five_rotate(u, v).unwrap();
                    assert_eq!(x * x + y * y, s);
                    assert!(x % 5 != 0 && y % 5 != 0);
                }
            }
        }
    }

    #[test]
    fn mod3_examples() {
        assert_eq!(mod3_adjust(1).unwrap(), (1, 0, 0));
        assert_eq!(mod3_adjust(9).unwrap(), (2, 2, 1));
        let (a, b, c) = mod3_adjust(14).unwrap();
        assert_eq!(a * a + b * b + c * c, 14);
        assert_eq!((a + b).rem_euclid(3), 1);
        assert!(mod3_adjust(7).is_err());
        for n in 1..=5000 {
            if in_e0(n) {
                continue;
            }
            let (a, b, c) = mod3_adjust(n).unwrap();
            assert_eq!(a * a + b * b + c * c, n);
            assert_eq!((a + b).rem_euclid(3), 1);
        }
    }

    #[test]
    fn gap_examples() {
        assert!(gap_lemma_check(7, GapPattern::Pair { m: 16 }).unwrap());
        assert!(gap_lemma_check(23, GapPattern::Pair { m: 16 }).unwrap());
        assert!(gap_lemma_check(112, GapPattern::Quarter).unwrap());
        assert!(gap_lemma_check(32, GapPattern::Pair { m: 16 }).is_err());
        assert!(gap_lemma_check(128, GapPattern::Quarter).is_err());
    }

    #[test]
    fn geometric_family_membership() {
        let f = geo(9, 9, 3);
        assert!(f.contains(3) && f.contains(27) && f.contains(12) && f.contains(9 * 12));
        assert!(!f.contains(9) && !f.contains(0) && !f.contains(6));
        assert!(Family::ScaledPowers {
            scale: 56,
            base: 64
        }
        .contains(56 * 64));
        assert!(!Family::ScaledPowers {
            scale: 56,
            base: 64
        }
        .contains(56 * 8));
    }
}
