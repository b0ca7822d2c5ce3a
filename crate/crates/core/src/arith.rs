//! Arbitrary-precision integers and rationals, modular exponentiation, and
//! the small prime-arithmetic helpers used by the sieve and the searches.
//!
//! `Integer` and `Rational` are the `num` crate's canonical sign-magnitude
//! bigint and reduced fraction; both invariants (no leading zero limbs,
//! gcd(num, den) = 1 with positive denominator) are maintained by `num`.

use crate::error::{Error, Result};
use num::bigint::Sign;
use num::{BigInt, BigRational, Integer as _, One, Signed, Zero};

pub type Integer = BigInt;
pub type Rational = BigRational;

/// `base^exponent mod modulus`, result in `[0, modulus)`.
///
/// Requires `modulus >= 2` and `exponent >= 0`.
pub fn modpow(base: &Integer, exponent: &Integer, modulus: &Integer) -> Result<Integer> {
    if modulus < &Integer::from(2) {
        return Err(Error::invalid(format!("modulus must be >= 2, got {modulus}")));
    }
    if exponent.is_negative() {
        return Err(Error::invalid(format!("exponent must be >= 0, got {exponent}")));
    }
    let b = base.mod_floor(modulus);
    Ok(b.modpow(exponent, modulus))
}

/// `a * b mod m` for u64 operands without overflow.
#[inline]
pub fn mulmod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `base^exp mod m` over u64.
pub fn powmod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    debug_assert!(m >= 1);
    if m == 1 {
        return 0;
    }
    let mut acc: u64 = 1;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod_u64(acc, base, m);
        }
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

/// `a * b mod m` for u128 operands. Fast path when the modulus fits in 64
/// bits; otherwise binary shift-add, which keeps every intermediate within
/// 128 bits (sufficient for moduli p^2 up to 2^126).
pub fn mulmod_u128(a: u128, b: u128, m: u128) -> u128 {
    if m <= u64::MAX as u128 {
        return ((a % m) * (b % m)) % m;
    }
    let (mut a, mut b) = (a % m, b % m);
    if a < b {
        std::mem::swap(&mut a, &mut b);
    }
    let mut acc: u128 = 0;
    while b > 0 {
        if b & 1 == 1 {
            acc += a;
            if acc >= m {
                acc -= m;
            }
        }
        a <<= 1;
        if a >= m {
            a -= m;
        }
        b >>= 1;
    }
    acc
}

/// `base^exp mod m` over u128.
pub fn powmod_u128(mut base: u128, mut exp: u128, m: u128) -> u128 {
    debug_assert!(m >= 2);
    let mut acc: u128 = 1;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod_u128(acc, base, m);
        }
        base = mulmod_u128(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin over the full u64 range.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let s = d.trailing_zeros();
    d >>= s;
    // These bases decide primality for all n < 2^64.
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod_u64(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mulmod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// All primes < `bound` by a plain sieve of Eratosthenes.
pub fn primes_below(bound: u64) -> Vec<u64> {
    if bound <= 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut composite = vec![false; n];
    let mut primes = Vec::new();
    for i in 2..n {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j < n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

/// 2-adic valuation of a nonzero integer.
pub fn v2(n: &Integer) -> Result<u64> {
    if n.is_zero() {
        return Err(Error::invalid("2-adic valuation of zero"));
    }
    Ok(n.trailing_zeros().expect("nonzero"))
}

/// `|n|` is a power of two (including 2^0 = 1)?
pub fn is_pow2(n: &Integer) -> bool {
    if n.is_zero() {
        return false;
    }
    let m = n.abs();
    let tz = m.trailing_zeros().expect("nonzero");
    (m >> tz).is_one()
}

/// Exact square root of a nonnegative integer, if it is a perfect square.
pub fn perfect_sqrt(n: &Integer) -> Option<Integer> {
    if n.is_negative() {
        return None;
    }
    if n.is_zero() {
        return Some(Integer::zero());
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

/// Decompose `n != 0` as `sign * p^k * rest` with `p` coprime to `rest`.
pub fn split_prime_power(n: &Integer, p: u64) -> (Sign, u64, Integer) {
    let sign = n.sign();
    let p = Integer::from(p);
    let mut rest = n.abs();
    let mut k = 0;
    while (&rest % &p).is_zero() && !rest.is_zero() {
        rest /= &p;
        k += 1;
    }
    (sign, k, rest)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modpow_wieferich_witness() {
        // 1093 is a Wieferich prime: 2^1092 = 1 (mod 1093^2).
        let m = Integer::from(1093u32 * 1093);
        let r = modpow(&Integer::from(2), &Integer::from(1092), &m).unwrap();
        assert!(r.is_one());
    }

    #[test]
    fn modpow_small_cases() {
        let r = modpow(&Integer::from(2), &Integer::from(4), &Integer::from(25)).unwrap();
        assert_eq!(r, Integer::from(16));
        // empty product
        let r = modpow(&Integer::from(7), &Integer::from(0), &Integer::from(10)).unwrap();
        assert!(r.is_one());
        // negative base is normalized first
        let r = modpow(&Integer::from(-2), &Integer::from(3), &Integer::from(25)).unwrap();
        assert_eq!(r, Integer::from(17));
    }

    #[test]
    fn modpow_rejects_bad_inputs() {
        assert!(modpow(&Integer::from(2), &Integer::from(3), &Integer::from(1)).is_err());
        assert!(modpow(&Integer::from(2), &Integer::from(-1), &Integer::from(5)).is_err());
    }

    #[test]
    fn modpow_matches_naive_product() {
        for m in 2i64..50 {
            for b in 0i64..50 {
                let mut acc = 1i64;
                for e in 0i64..30 {
                    let got = modpow(&Integer::from(b), &Integer::from(e), &Integer::from(m))
                        .unwrap();
                    assert_eq!(got, Integer::from(acc), "b={b} e={e} m={m}");
                    acc = acc * b % m;
                }
            }
        }
    }

    #[test]
    fn mulmod_u128_wide_modulus() {
        // modulus above 2^64 exercises the shift-add path
        let m = (1u128 << 100) + 3;
        let a = (1u128 << 99) + 12345;
        let b = (1u128 << 98) + 67890;
        // cross-check against BigInt
        let big = (Integer::from(a) * Integer::from(b)) % Integer::from(m);
        assert_eq!(Integer::from(mulmod_u128(a, b, m)), big);
        let e = 65537u128;
        let big_pow = Integer::from(a).modpow(&Integer::from(e), &Integer::from(m));
        assert_eq!(Integer::from(powmod_u128(a, e, m)), big_pow);
    }

    #[test]
    fn primality_and_sieve_agree() {
        let primes = primes_below(2000);
        for n in 0..2000u64 {
            assert_eq!(is_prime_u64(n), primes.contains(&n), "n={n}");
        }
        assert!(is_prime_u64(1093));
        assert!(is_prime_u64(3511));
        assert!(!is_prime_u64(1093 * 3511));
    }

    #[test]
    fn square_helpers() {
        assert_eq!(perfect_sqrt(&Integer::from(1849)), Some(Integer::from(43)));
        assert_eq!(perfect_sqrt(&Integer::from(1850)), None);
        assert!(is_pow2(&Integer::from(-32)));
        assert!(is_pow2(&Integer::from(1)));
        assert!(!is_pow2(&Integer::from(24)));
        assert_eq!(v2(&Integer::from(-48)).unwrap(), 4);
        assert!(v2(&Integer::zero()).is_err());
    }

    #[test]
    fn prime_power_split() {
        let (s, k, rest) = split_prime_power(&Integer::from(-1 * 3i64.pow(5) * 49), 3);
        assert_eq!(s, Sign::Minus);
        assert_eq!(k, 5);
        assert_eq!(rest, Integer::from(49));
    }
}
