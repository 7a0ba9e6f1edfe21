use num_bigint::{BigUint, RandBigInt};
use num_traits::{One, ToPrimitive, Zero};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

// Strong-probable-prime bases that are conclusive below 3.3e24.
const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

const BIG_SEED: u64 = 0x51_5eed;

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    r
}

pub fn is_prime_64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for a in BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Strong probable-prime test with `rounds` bases drawn from a fixed-seed
/// generator. Values that fit in 64 bits get the exact test instead.
pub fn is_probable_prime_big(n: &BigUint, rounds: u32) -> bool {
    if let Some(v) = n.to_u64() {
        return is_prime_64(v);
    }
    if !n.bit(0) {
        return false;
    }
    for p in 3u32..1000 {
        if is_prime_64(p as u64) && (n % p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n1 = n - &one;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    let two = BigUint::from(2u32);
    let mut rng = ChaCha8Rng::seed_from_u64(BIG_SEED);
    'rounds: for _ in 0..rounds.max(1) {
        let a = rng.gen_biguint_range(&two, &n1);
        let mut x = a.modpow(&d, n);
        if x == one || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = &x * &x % n;
            if x == n1 {
                continue 'rounds;
            }
        }
        return false;
    }
    true
}

/// Primality of `1 + Σ 2^e` for small nonnegative exponents.
/// The flag is true when the answer came from the probabilistic test.
pub fn power_sum_plus_one_is_prime(exponents: &[u32], rounds: u32) -> (bool, bool) {
    let max = exponents.iter().copied().max().unwrap_or(0);
    if max < 62 {
        let v: u64 = 1 + exponents.iter().map(|&e| 1u64 << e).sum::<u64>();
        return (is_prime_64(v), false);
    }
    let mut v = BigUint::one();
    for &e in exponents {
        v += BigUint::one() << e;
    }
    (is_probable_prime_big(&v, rounds), true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial(n: u64) -> bool {
        if n < 2 {
            return false;
        }
        let mut d = 2;
        while d * d <= n {
            if n % d == 0 {
                return false;
            }
            d += 1;
        }
        true
    }

    #[test]
    fn examples() {
        assert!(is_prime_64(181) && is_prime_64(179));
        assert!(is_prime_64(547));
        assert!(!is_prime_64(1));
        assert!(is_prime_64((1 << 61) - 1));
        assert!(!is_prime_64(3_215_031_751)); // strong pseudoprime to 2, 3, 5, 7
        assert!(is_prime_64(18_446_744_073_709_551_557));
    }

    #[test]
    fn agrees_with_trial_division() {
        for n in 0..=1_000_000u64 {
            assert_eq!(is_prime_64(n), trial(n), "{n}");
        }
    }

    #[test]
    fn big_values() {
        let m61 = (BigUint::one() << 61u32) - 1u32;
        assert!(is_probable_prime_big(&m61, 25));
        assert!(!is_probable_prime_big(&(BigUint::one() << 100u32), 25));
        let m127 = (BigUint::one() << 127u32) - 1u32;
        assert!(is_probable_prime_big(&m127, 25));
        assert!(!is_probable_prime_big(&(&m127 * &m61), 25));
        assert_eq!(power_sum_plus_one_is_prime(&[1, 5, 9], 25), (true, false));
    }

    #[test]
    fn giant_power_sum() {
        let (prime, probabilistic) = power_sum_plus_one_is_prime(&[342, 3935], 25);
        assert!(prime && probabilistic);
    }
}
