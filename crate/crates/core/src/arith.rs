//! Exact integer helpers. Everything is `i64` with checked arithmetic.

use crate::error::{invalid, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoAdicSplit {
    pub ord: u32,
    pub odd_part: i64,
}

pub fn ord2(n: i64) -> Result<TwoAdicSplit> {
    if n < 1 {
        return Err(invalid("2-adic order needs n >= 1"));
    }
    let ord = n.trailing_zeros();
    Ok(TwoAdicSplit {
        ord,
        odd_part: n >> ord,
    })
}

/// Floor square root. Negative input yields 0.
pub fn isqrt(n: i64) -> i64 {
    if n <= 0 {
        return 0;
    }
    (n as u64).isqrt() as i64
}

pub fn is_square(n: i64) -> bool {
    if n < 0 {
        return false;
    }
    // quadratic residues mod 64 reject most non-squares cheaply
    if (0x0202_0212_0203_0213u64 >> (n & 63)) & 1 == 0 {
        return false;
    }
    let r = isqrt(n);
    r * r == n
}

/// Floor cube root, valid for negative input (rounds toward -inf).
pub fn icbrt(n: i64) -> i64 {
    if n < 0 {
        let r = icbrt_pos(n.unsigned_abs());
        let c = -(r as i64);
        if (c as i128).pow(3) == n as i128 {
            c
        } else {
            c - 1
        }
    } else {
        icbrt_pos(n as u64) as i64
    }
}

fn icbrt_pos(n: u64) -> u64 {
    if n < 8 {
        return (n > 0) as u64;
    }
    // Newton from an overestimate decreases monotonically to the floor root
    let bits = 64 - n.leading_zeros();
    let mut r: u64 = 1 << bits.div_ceil(3);
    loop {
        let next = (2 * r + n / (r * r)) / 3;
        if next >= r {
            break;
        }
        r = next;
    }
    while (r as u128).pow(3) > n as u128 {
        r -= 1;
    }
    while ((r + 1) as u128).pow(3) <= n as u128 {
        r += 1;
    }
    r
}

pub fn is_cube(n: i64) -> bool {
    let r = icbrt(n);
    (r as i128).pow(3) == n as i128
}

/// Floor fourth root of a nonnegative value.
pub fn iroot4(n: i64) -> i64 {
    isqrt(isqrt(n))
}

/// `v = base^k` for some k >= 0, decided by repeated multiplication.
pub fn in_power_set(v: i64, base: i64) -> bool {
    power_exponent(v, base).is_some()
}

/// The k with `base^k = v`, if any.
pub fn power_exponent(v: i64, base: i64) -> Option<u32> {
    if v < 1 || base < 2 {
        return None;
    }
    let mut p = 1i64;
    let mut k = 0;
    loop {
        if p == v {
            return Some(k);
        }
        if p > v {
            return None;
        }
        p = p.checked_mul(base)?;
        k += 1;
    }
}

pub fn checked_pow(base: i64, exp: u32) -> Result<i64> {
    base.checked_pow(exp).ok_or(Error::Overflow)
}

pub fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub fn sub(a: i64, b: i64) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

pub fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

pub fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn is_squarefree(n: i64) -> bool {
    let n = n.abs();
    if n == 0 {
        return false;
    }
    let mut p = 2;
    let mut m = n;
    while p * p <= m {
        if m % (p * p) == 0 {
            return false;
        }
        if m % p == 0 {
            m /= p;
        }
        p += 1;
    }
    true
}

/// binomial(2c, c)
pub fn central_binomial(c: i64) -> Result<i64> {
    if c < 0 {
        return Err(invalid("central binomial of a negative index"));
    }
    let mut v: i128 = 1;
    for i in 0..c as i128 {
        // C(2i+2, i+1) = C(2i, i) * (2i+1)(2i+2) / (i+1)^2
        v = v * (2 * i + 1) * 2 / (i + 1);
        if v > i64::MAX as i128 {
            return Err(Error::Overflow);
        }
    }
    Ok(v as i64)
}

pub fn triangular(v: i64) -> Result<i64> {
    if v < 0 {
        return Err(invalid("triangular number of a negative index"));
    }
    mul(v, add(v, 1)?).map(|p| p / 2)
}
