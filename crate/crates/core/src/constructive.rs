//! Decomposers that build witnesses by explicit descent and identity
//! arguments rather than search, plus the seven-fold identity they rely on.
//!
//! Every decomposer checks its own output (sum and linear value) and returns
//! [`Error::Contradiction`] if a step that must succeed does not. Small inputs
//! below a construction's threshold are answered by the search engine on the
//! matching registry statement.

use alloc::format;
use alloc::vec::Vec;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{self, ord2};
use crate::error::{invalid, Error, Result};
use crate::forms::{enumerate_witnesses, find_witness, Witness};
use crate::statements::lookup;
use crate::ternary::{five_rotate, in_e0, represent_ternary, three_squares, TernaryForm};

fn contradiction(msg: impl Into<alloc::string::String>) -> Error {
    Error::Contradiction(msg.into())
}

fn weighted_witness(n: i64, weights: [i64; 4], values: [i64; 4]) -> Result<Witness> {
    let mut terms = Vec::with_capacity(4);
    let mut sum = 0i64;
    for (c, v) in weights.iter().zip(values) {
        let t = arith::mul(*c, arith::mul(v, v)?)?;
        sum = arith::add(sum, t)?;
        terms.push(t);
    }
    if sum != n {
        return Err(contradiction(format!(
            "{values:?} sums to {sum}, expected {n}"
        )));
    }
    Ok(Witness {
        n,
        values: values.to_vec(),
        terms,
    })
}

fn scaled(w: &Witness, f: i64, n: i64, weights: [i64; 4]) -> Result<Witness> {
    let mut v = [0i64; 4];
    for (dst, &src) in v.iter_mut().zip(&w.values) {
        *dst = arith::mul(src, f)?;
    }
    weighted_witness(n, weights, v)
}

fn engine_witness(id: &str, n: i64) -> Result<Witness> {
    let rec = lookup(id)?;
    find_witness(&rec.statement, n)?
        .ok_or_else(|| contradiction(format!("{id}: no witness for {n}")))
}

const UNIT: [i64; 4] = [1, 1, 1, 1];
const LAST_DOUBLED: [i64; 4] = [1, 1, 1, 2];

// ---- the seven-fold identity ----------------------------------------------

/// Both sides of the two-parameter identity: the product
/// `(a²+ab+b²)(av²+b(s²+t²+u²))` and the four terms that sum to it.
pub fn identity_3_7(a: i64, b: i64, s: i64, t: i64, u: i64, v: i64) -> Result<(i64, [i64; 4])> {
    let m = |x: i64, y: i64| arith::mul(x, y);
    let add = |x: i64, y: i64| arith::add(x, y);
    let sq = |x: i64| arith::mul(x, x);

    let left = m(
        add(add(sq(a)?, m(a, b)?)?, sq(b)?)?,
        add(m(a, sq(v)?)?, m(b, add(add(sq(s)?, sq(t)?)?, sq(u)?)?)?)?,
    )?;

    let p = add(m(b, arith::sub(add(s, t)?, u)?)?, m(arith::sub(a, b)?, v)?)?;
    let q = add(add(m(b, s)?, m(a, u)?)?, m(a, v)?)?;
    let r = arith::sub(add(m(a, t)?, m(b, u)?)?, m(a, v)?)?;
    let o = arith::sub(arith::sub(m(a, s)?, m(b, t)?)?, m(a, v)?)?;
    let terms = [m(a, sq(p)?)?, m(b, sq(q)?)?, m(b, sq(r)?)?, m(b, sq(o)?)?];
    Ok((left, terms))
}

/// A pre-image `(s, t, u, v)` together with its image `(x, y, z, w)` under
/// the map that multiplies `s²+t²+u²+2v²` by 7.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SevenTuple {
    pub s: i64,
    pub t: i64,
    pub u: i64,
    pub v: i64,
    pub x: i64,
    pub y: i64,
    pub z: i64,
    pub w: i64,
}

impl SevenTuple {
    pub fn from_preimage(s: i64, t: i64, u: i64, v: i64) -> Result<SevenTuple> {
        let [x, y, z, w] = seven_map(s, t, u, v)?;
        Ok(SevenTuple {
            s,
            t,
            u,
            v,
            x,
            y,
            z,
            w,
        })
    }

    pub fn from_image(x: i64, y: i64, z: i64, w: i64) -> Option<SevenTuple> {
        let [s, t, u, v] = seven_unmap(x, y, z, w)?;
        Some(SevenTuple {
            s,
            t,
            u,
            v,
            x,
            y,
            z,
            w,
        })
    }
}

/// `(s+2u+2v, -2t-u+2v, 2s-t-2v, s+t-u+v)`
pub fn seven_map(s: i64, t: i64, u: i64, v: i64) -> Result<[i64; 4]> {
    let (s, t, u, v) = (s as i128, t as i128, u as i128, v as i128);
    let out = [
        s + 2 * u + 2 * v,
        -2 * t - u + 2 * v,
        2 * s - t - 2 * v,
        s + t - u + v,
    ];
    let mut r = [0i64; 4];
    for (d, x) in r.iter_mut().zip(out) {
        *d = i64::try_from(x).map_err(|_| Error::Overflow)?;
    }
    Ok(r)
}

/// Inverse of [`seven_map`] when the image lies in its lattice.
pub fn seven_unmap(x: i64, y: i64, z: i64, w: i64) -> Option<[i64; 4]> {
    let (x, y, z, w) = (x as i128, y as i128, z as i128, w as i128);
    let nums = [
        x + 2 * z + 2 * w,
        2 * w - 2 * y - z,
        2 * x - y - 2 * w,
        x + y - z + w,
    ];
    let mut out = [0i64; 4];
    for (d, num) in out.iter_mut().zip(nums) {
        if num % 7 != 0 {
            return None;
        }
        *d = i64::try_from(num / 7).ok()?;
    }
    Some(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub samples: u64,
    pub seed: u64,
    pub failures: u64,
    /// first failing `(a, b, s, t, u, v)`
    pub first_failure: Option<[i64; 6]>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Evaluates the identity on `samples` tuples drawn uniformly from
/// `[-100, 100]^6` by a ChaCha8 stream seeded with `seed`.
pub fn identity_check(samples: u64, seed: u64) -> Result<IdentityReport> {
    identity_check_with(samples, seed, &mut |p| {
        identity_3_7(p[0], p[1], p[2], p[3], p[4], p[5])
    })
}

/// [`identity_check`] with a substitute evaluator.
pub fn identity_check_with(
    samples: u64,
    seed: u64,
    eval: &mut dyn FnMut([i64; 6]) -> Result<(i64, [i64; 4])>,
) -> Result<IdentityReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = IdentityReport {
        samples,
        seed,
        failures: 0,
        first_failure: None,
    };
    for _ in 0..samples {
        let mut p = [0i64; 6];
        for x in &mut p {
            *x = (rng.next_u64() % 201) as i64 - 100;
        }
        let (left, terms) = eval(p)?;
        let right = terms.iter().try_fold(0i64, |acc, &t| arith::add(acc, t))?;
        if left != right {
            report.failures += 1;
            report.first_failure.get_or_insert(p);
        }
    }
    Ok(report)
}

// ---- x - y = 2^⌊ord2(n)/2⌋ -------------------------------------------------

/// Naturals `(x, y, z, w)` with `x²+y²+z²+w² = n` and `x - y = 2^⌊ord2(n)/2⌋`.
pub fn decompose_1_1_ii(n: i64) -> Result<Witness> {
    if n < 1 {
        return Err(invalid("n must be positive"));
    }
    let h = ord2(n)?.ord / 2;
    let n0 = n >> (2 * h);
    let m = arith::sub(arith::mul(2, n0)?, 1)?;
    let (p, q, r) = three_squares(m)
        .ok_or_else(|| contradiction(format!("{m} is not a sum of three squares")))?;
    let c = [p, q, r];
    let i = c
        .iter()
        .position(|&t| t % 2 != 0)
        .ok_or_else(|| contradiction(format!("{m}: no odd coordinate")))?;
    let rest: Vec<i64> = (0..3).filter(|&j| j != i).map(|j| c[j]).collect();
    let (u, v) = (rest[0], rest[1]);
    let y = (c[i] - 1) / 2;
    let base = [y + 1, y, (u + v) / 2, (u - v).abs() / 2];
    let f = 1i64 << h;
    let w = scaled(
        &Witness {
            n: n0,
            values: base.to_vec(),
            terms: Vec::new(),
        },
        f,
        n,
        UNIT,
    )?;
    if w.values[0] - w.values[1] != f {
        return Err(contradiction(format!("{n}: x - y != {f}")));
    }
    Ok(w)
}

// ---- x + y + z + w = 2^⌊(ord2(n)+1)/2⌋ --------------------------------------

/// Integers `(x, y, z, w)` with `x²+y²+z²+w² = n` and
/// `x+y+z+w = 2^⌊(ord2(n)+1)/2⌋`.
pub fn decompose_1_1_iv(n: i64) -> Result<Witness> {
    if n < 1 {
        return Err(invalid("n must be positive"));
    }
    let k = ord2(n)?.ord / 2;
    let n0 = n >> (2 * k);
    let delta = (n0 % 2 != 0) as u32;
    let m = arith::sub(arith::mul(1 << (2 * delta), n0)?, 1)?;
    let (a, b, c) = three_squares(m)
        .ok_or_else(|| contradiction(format!("{m} is not a sum of three squares")))?;
    let lift = |t: i64| if delta == 1 { (t + 1) / 2 } else { t + 1 };
    if delta == 1 && [a, b, c].iter().any(|t| t % 2 == 0) {
        return Err(contradiction(format!(
            "{m}: even coordinate in a 3 mod 8 representation"
        )));
    }
    let (mut u, v, w) = (lift(a), lift(b), lift(c));
    if (u + v + w) % 2 != 0 {
        u = 1 - u;
    }
    if (u + v + w) % 2 != 0 {
        return Err(contradiction(format!("{n}: parity normalisation failed")));
    }
    let x = (u + v - w) / 2;
    let y = (u - v + w) / 2;
    let z = (-u + v + w) / 2;
    let last = (2 >> delta) - x - y - z;
    let base = Witness {
        n: n0,
        values: [x, y, z, last].to_vec(),
        terms: Vec::new(),
    };
    let out = scaled(&base, 1 << k, n, UNIT)?;
    let want = 1i64 << ord2(n)?.ord.div_ceil(2);
    if out.values.iter().sum::<i64>() != want {
        return Err(contradiction(format!("{n}: linear sum is not {want}")));
    }
    Ok(out)
}

// ---- |2x - y| a power of 4 ---------------------------------------------------

fn small_1_2_i(n: i64) -> Result<Witness> {
    // lexicographically largest witness, so the table is independent of the
    // engine's visiting order
    let rec = lookup("T1.2i")?;
    enumerate_witnesses(&rec.statement, n, false)?
        .into_iter()
        .max_by(|a, b| a.values.cmp(&b.values))
        .ok_or_else(|| contradiction(format!("T1.2i: no witness for {n}")))
}

/// Naturals `(x, y, z, w)` with `x²+y²+z²+w² = n` and `|2x - y|` a power of 4.
pub fn decompose_1_2_i(n: i64) -> Result<Witness> {
    if n < 1 {
        return Err(invalid("n must be positive"));
    }
    let mut j = 0u32;
    let mut m = n;
    while m % 16 == 0 {
        m /= 16;
        j += 1;
    }
    let base = if m <= 15 {
        small_1_2_i(m)?
    } else {
        construct_1_2_i(m)?
    };
    let out = scaled(&base, 1 << (2 * j), n, UNIT)?;
    let d = (2 * out.values[0] - out.values[1]).abs();
    if !arith::in_power_set(d, 4) {
        return Err(contradiction(format!("{n}: |2x-y| = {d}")));
    }
    Ok(out)
}

fn construct_1_2_i(m: i64) -> Result<Witness> {
    let delta = in_e0(5 * m - 1) as u32;
    let c = 1i64 << (2 * delta);
    let target = 5 * m - c * c;
    let (p, q, r) = three_squares(target)
        .ok_or_else(|| contradiction(format!("{target} is not a sum of three squares")))?;
    let coords = [p, q, r];
    let i = coords
        .iter()
        .position(|&t| (t * t) % 5 == 4)
        .ok_or_else(|| contradiction(format!("{target}: no coordinate with square = -1 mod 5")))?;
    let rest: Vec<i64> = (0..3).filter(|&k| k != i).map(|k| coords[k]).collect();
    let mut x = coords[i];
    let (mut y, mut z) = (rest[0], rest[1]);
    if y != 0 || z != 0 {
        (y, z) = five_rotate(y, z)?;
        // images in order: identity, -z, -y, -y -z, then the same after swapping
        let want_y = (-2 * c).rem_euclid(5);
        let want_z = (-c).rem_euclid(5);
        let found = [
            (y, z),
            (y, -z),
            (-y, z),
            (-y, -z),
            (z, y),
            (z, -y),
            (-z, y),
            (-z, -y),
        ]
        .into_iter()
        .find(|&(a, b)| a.rem_euclid(5) == want_y && b.rem_euclid(5) == want_z)
        .ok_or_else(|| contradiction(format!("{m}: no residue image of ({y}, {z})")))?;
        (y, z) = found;
    }
    if (x + 2 * c) % 5 != 0 {
        x = -x;
    }
    let r = (x + 2 * c) / 5;
    let s = (2 * x - c) / 5;
    let vals = if x >= 2 || r <= 0 {
        [
            r.abs(),
            s.abs(),
            ((2 * y + z) / 5).abs(),
            ((2 * z - y) / 5).abs(),
        ]
    } else {
        if delta != 1 || x != -3 || y == -3 {
            return Err(contradiction(format!(
                "{m}: unexpected fallback with x = {x}, y = {y}"
            )));
        }
        [
            ((y + 2 * c) / 5).abs(),
            ((2 * y - c) / 5).abs(),
            ((2 * x + z) / 5).abs(),
            ((2 * z - x) / 5).abs(),
        ]
    };
    weighted_witness(m, UNIT, vals)
}

// ---- x + 2y + 2z a power of 2^m ---------------------------------------------

/// Integers with `x²+y²+z²+w² = n^(m-1)` and `x+2y+2z` a power of `2^m`,
/// for `m` in {2, 3}.
pub fn decompose_1_4_ii(n: i64, m: u32) -> Result<Witness> {
    if n < 1 {
        return Err(invalid("n must be positive"));
    }
    let id = match m {
        2 => "T1.4ii",
        3 => "T1.4ii-sq",
        _ => return Err(invalid("m must be 2 or 3")),
    };
    let big = arith::checked_pow(n, m - 1)?;
    let bound = 1i64 << (2 * m); // 4^m
    let step = if m == 2 { 16 } else { 8 };
    let mut cur = n;
    let mut j = 0u32;
    while cur >= bound && arith::checked_pow(cur, m - 1)? % bound == 0 {
        cur /= step;
        j += 1;
    }
    let base = if cur < bound {
        engine_witness(id, cur)?
    } else {
        construct_1_4_ii(cur, m)?
    };
    let out = scaled(&base, 1 << (m * j), big, UNIT)?;
    let lin = out.values[0] + 2 * out.values[1] + 2 * out.values[2];
    if !arith::in_power_set(lin, 1 << m) {
        return Err(contradiction(format!("{n}: x+2y+2z = {lin}")));
    }
    Ok(out)
}

fn construct_1_4_ii(n: i64, m: u32) -> Result<Witness> {
    let big = arith::checked_pow(n, m - 1)?;
    let nine = arith::mul(9, big)?;
    let delta = (big % 16 == 0 || in_e0(nine - 1)) as u32;
    let dm = delta * m;
    let target = nine - (1i64 << (2 * dm));
    let (p, q, r) = three_squares(target)
        .ok_or_else(|| contradiction(format!("{target} is not a sum of three squares")))?;
    let coords = [p, q, r];
    let i = coords
        .iter()
        .position(|&t| t % 3 == 0)
        .ok_or_else(|| contradiction(format!("{target}: no coordinate divisible by 3")))?;
    let rest: Vec<i64> = (0..3).filter(|&k| k != i).map(|k| coords[k]).collect();
    let g = 1i64 << (dm + 1);
    let mut a = rest[0];
    let mut b = rest[1];
    if (a - g).rem_euclid(3) != 0 {
        a = -a;
    }
    if (b + g).rem_euclid(3) != 0 {
        b = -b;
    }
    let u = (a - g) / 3;
    let v = (b + g) / 3;
    if (a - g) % 3 != 0 || (b + g) % 3 != 0 || (u - v) % 3 != 0 {
        return Err(contradiction(format!(
            "{n}: residue normalisation failed for ({a}, {b})"
        )));
    }
    let y = (2 * u + v) / 3;
    let z = (u + 2 * v) / 3;
    weighted_witness(big, UNIT, [2 * y - 2 * z + (1 << dm), -y, z, coords[i] / 3])
}

// ---- x²+y²+z²+2w² with an m-th power linear value ---------------------------

/// Which linear form must be an m-th power.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SixPart {
    /// `x + y + z + w`
    Sum,
    /// `x + 2z + 2w`, the form the seven-fold map carries to its first image
    /// coordinate
    Weighted,
}

/// Inputs below this are answered by search.
pub fn six_threshold(m: u32) -> i64 {
    2 * 7i64.pow(2 * m - 1)
}

/// Integers with `x²+y²+z²+2w² = n` and the chosen linear form a square
/// (`m = 2`) or a cube (`m = 3`).
pub fn decompose_1_6(n: i64, m: u32, part: SixPart) -> Result<Witness> {
    if n < 0 {
        return Err(invalid("n must be nonnegative"));
    }
    let id = match (part, m) {
        (SixPart::Sum, 2) => "T1.6i-sq",
        (SixPart::Sum, 3) => "T1.6i-cube",
        (SixPart::Weighted, 2) => "T1.6ii-sq-var",
        (SixPart::Weighted, 3) => "T1.6ii-cube-var",
        _ => return Err(invalid("m must be 2 or 3")),
    };
    if n < six_threshold(m) {
        return engine_witness(id, n);
    }
    let seven_n = arith::mul(7, n)?;
    let pw = 7i64.pow(m);
    match part {
        SixPart::Sum => {
            let w = if in_e0(seven_n) { pw } else { 0 };
            let rem = seven_n - 2 * w * w;
            let (p, q, r) = three_squares(rem)
                .ok_or_else(|| contradiction(format!("{rem} is not a sum of three squares")))?;
            // images: swap (x, y), then the signs of x, y, z
            let mut pick = None;
            'outer: for (a, b) in [(p, q), (q, p)] {
                for sx in [1, -1] {
                    for sy in [1, -1] {
                        for sz in [1, -1] {
                            let (x, y, z) = (sx * a, sy * b, sz * r);
                            if (x + 3 * y).rem_euclid(7) == 0
                                && (z - 2 * x + 3 * y).rem_euclid(7) == 0
                            {
                                pick = Some((x, y, z));
                                break 'outer;
                            }
                        }
                    }
                }
            }
            let (x, y, z) = pick
                .ok_or_else(|| contradiction(format!("{n}: no mod-7 image of ({p}, {q}, {r})")))?;
            let nums = [
                x + 2 * z + 2 * w,
                2 * w - 2 * y - z,
                2 * x - y - 2 * w,
                x + y - z + w,
            ];
            if nums.iter().any(|t| t % 7 != 0) {
                return Err(contradiction(format!(
                    "{n}: quotients by 7 are not integral"
                )));
            }
            let [s, t, u, v] = nums.map(|t| t / 7);
            let out = weighted_witness(n, LAST_DOUBLED, [s, t, -u, v])?;
            if s + t - u + v != w {
                return Err(contradiction(format!("{n}: linear value is not {w}")));
            }
            Ok(out)
        }
        SixPart::Weighted => {
            let x = if seven_n % 2 != 0 { 0 } else { pw };
            let rem = seven_n - x * x;
            let (p, q, r) = represent_ternary(TernaryForm::new(1, 1, 2), rem, &[])?
                .ok_or_else(|| contradiction(format!("{rem} is not represented by x²+y²+2z²")))?;
            let mut pick = None;
            'outer: for (a, b) in [(p, q), (q, p)] {
                for sy in [1, -1] {
                    for sz in [1, -1] {
                        for sw in [1, -1] {
                            let (y, z, w) = (sy * a, sz * b, sw * r);
                            if (y + 2 * w).rem_euclid(7) == 0 && (z + w).rem_euclid(7) == 0 {
                                pick = Some((y, z, w));
                                break 'outer;
                            }
                        }
                    }
                }
            }
            let (y, z, w) = pick
                .ok_or_else(|| contradiction(format!("{n}: no mod-7 image of ({p}, {q}, {r})")))?;
            let [s, t, u, v] = seven_unmap(x, y, z, w)
                .ok_or_else(|| contradiction(format!("{n}: image outside the lattice")))?;
            let out = weighted_witness(n, LAST_DOUBLED, [s, t, u, v])?;
            if s + 2 * u + 2 * v != x {
                return Err(contradiction(format!("{n}: linear value is not {x}")));
            }
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests;
