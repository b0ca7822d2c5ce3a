//! Defining polynomials of cyclotomic Z_p-extension layers via Gaussian
//! periods, and the inertness congruence test.
//!
//! The n-th layer is the degree-p^n subfield of Q(ζ_m) with m = p^(n+1). Its
//! generator is the period η = Σ_{h∈H} ζ^h over the unique subgroup H of
//! order p-1 of (Z/m)^×. Power sums of the conjugates of η are exact traces
//! of root-of-unity combinations, so the minimal polynomial falls out of
//! Newton's identities over exact rationals — with a hard integrality
//! assertion on every elementary symmetric function.

use crate::arith::{is_prime_u64, powmod_u128, powmod_u64, Integer, Rational};
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use num::{One, Zero};

/// The layer Q_{n,p}: p an odd prime, n >= 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LayerSpec {
    p: u64,
    n: u32,
}

impl LayerSpec {
    pub fn new(p: u64, n: u32) -> Result<Self> {
        if !is_prime_u64(p) || p < 3 {
            return Err(Error::invalid(format!("p must be an odd prime, got {p}")));
        }
        if n < 1 {
            return Err(Error::invalid("layer index n must be >= 1"));
        }
        // m = p^(n+1) must stay at desk scale for the period construction
        let mut m: u64 = 1;
        for _ in 0..=n {
            m = m
                .checked_mul(p)
                .ok_or_else(|| Error::invalid(format!("p^(n+1) overflows for p={p}, n={n}")))?;
        }
        if m > 100_000_000 {
            return Err(Error::invalid(format!(
                "conductor p^(n+1) = {m} is too large for period construction"
            )));
        }
        Ok(LayerSpec { p, n })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Conductor m = p^(n+1).
    pub fn conductor(&self) -> u64 {
        self.p.pow(self.n + 1)
    }

    /// Degree of the layer over Q: p^n.
    pub fn degree(&self) -> u64 {
        self.p.pow(self.n)
    }
}

fn factorize_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn euler_phi_u64(n: u64) -> u64 {
    factorize_u64(n)
        .into_iter()
        .map(|(p, e)| p.pow(e - 1) * (p - 1))
        .product()
}

fn mobius_u64(n: u64) -> i64 {
    let f = factorize_u64(n);
    if f.iter().any(|&(_, e)| e > 1) {
        return 0;
    }
    if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Tr_{Q(ζ_m)/Q}(ζ_m^a) for arbitrary modulus m >= 1:
/// μ(m/g)·φ(m)/φ(m/g) with g = gcd(a, m).
fn trace_any_modulus(m: u64, a: u64) -> i64 {
    let g = num::integer::gcd(a % m, m); // gcd(0, m) = m covers a ≡ 0
    let c = m / g;
    mobius_u64(c) * (euler_phi_u64(m) / euler_phi_u64(c)) as i64
}

/// Tr_{Q(ζ_m)/Q}(ζ_m^a) for a prime power m = p^k:
/// φ(m) if m | a; -p^(k-1) if p^(k-1) | a but p^k ∤ a; 0 otherwise.
pub fn trace_zeta(m: u64, a: u64) -> Result<Integer> {
    let f = factorize_u64(m);
    if m < 2 || f.len() != 1 {
        return Err(Error::invalid(format!("{m} is not a prime power >= 2")));
    }
    Ok(Integer::from(trace_any_modulus(m, a)))
}

/// A Z-linear combination of m-th roots of unity, as multiplicities of ζ^a
/// indexed by the residue a mod m.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentMultiset {
    modulus: u64,
    counts: Vec<Integer>,
}

impl ExponentMultiset {
    /// The single root ζ_m^a.
    pub fn single(modulus: u64, a: u64) -> Result<Self> {
        if modulus < 1 {
            return Err(Error::invalid("modulus must be >= 1"));
        }
        let mut counts = vec![Integer::zero(); modulus as usize];
        counts[(a % modulus) as usize] = Integer::one();
        Ok(ExponentMultiset { modulus, counts })
    }

    /// Σ_{a ∈ exponents} ζ_m^a, with multiplicity.
    pub fn from_exponents(modulus: u64, exponents: &[u64]) -> Result<Self> {
        if modulus < 1 {
            return Err(Error::invalid("modulus must be >= 1"));
        }
        let mut counts = vec![Integer::zero(); modulus as usize];
        for &a in exponents {
            counts[(a % modulus) as usize] += 1;
        }
        Ok(ExponentMultiset { modulus, counts })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn count(&self, a: u64) -> &Integer {
        &self.counts[(a % self.modulus) as usize]
    }

    /// Product with another combination over the same modulus
    /// (ζ^a · ζ^b = ζ^(a+b)).
    pub fn convolve(&self, other: &ExponentMultiset) -> Result<ExponentMultiset> {
        if self.modulus != other.modulus {
            return Err(Error::invalid("mismatched moduli in root-of-unity product"));
        }
        let m = self.modulus as usize;
        let mut counts = vec![Integer::zero(); m];
        for (a, ca) in self.counts.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in other.counts.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                counts[(a + b) % m] += ca * cb;
            }
        }
        Ok(ExponentMultiset { modulus: self.modulus, counts })
    }

    /// Trace to Q of the combination: Σ counts[a]·Tr(ζ^a).
    pub fn trace(&self) -> Integer {
        let m = self.modulus;
        let mut acc = Integer::zero();
        for (a, c) in self.counts.iter().enumerate() {
            if !c.is_zero() {
                acc += c * Integer::from(trace_any_modulus(m, a as u64));
            }
        }
        acc
    }
}

/// Multiplicities held as u128 while the total mass fits; the Gaussian period
/// convolutions are the hot loop of the construction.
enum Counts {
    Small(Vec<u128>),
    Big(Vec<Integer>),
}

/// Monic integer minimal polynomial of the Gaussian period
/// η = Σ_{h∈H} ζ_m^h over a subgroup H of (Z/m)^×, of degree φ(m)/|H|.
///
/// Coefficients come from the power sums s_k = Tr(η^k)/|H| through Newton's
/// identities over exact rationals; any non-integral intermediate aborts
/// with an internal-consistency error rather than producing a wrong answer.
pub fn gaussian_period_polynomial(m: u64, subgroup: &[u64]) -> Result<IntPolynomial> {
    if m < 3 {
        return Err(Error::invalid("modulus must be >= 3"));
    }
    if subgroup.is_empty() {
        return Err(Error::invalid("subgroup must be nonempty"));
    }
    let hs: Vec<u64> = subgroup.iter().map(|&h| h % m).collect();
    if !hs.contains(&1) {
        return Err(Error::invalid("subgroup must contain 1"));
    }
    for &h in &hs {
        if num::integer::gcd(h, m) != 1 {
            return Err(Error::invalid(format!("{h} is not a unit mod {m}")));
        }
    }
    // closure under multiplication
    {
        let mut sorted = hs.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != hs.len() {
            return Err(Error::invalid("subgroup contains repeated elements"));
        }
        for &a in &hs {
            for &b in &hs {
                let prod = (a as u128 * b as u128 % m as u128) as u64;
                if sorted.binary_search(&prod).is_err() {
                    return Err(Error::invalid("exponent set is not closed under multiplication"));
                }
            }
        }
    }
    let phi = euler_phi_u64(m);
    let order = hs.len() as u64;
    if phi % order != 0 {
        return Err(Error::invalid("subgroup order does not divide φ(m)"));
    }
    let degree = (phi / order) as usize;

    // Does the total multiset mass |H|^degree fit comfortably in u128?
    let fits_small = {
        let mut mass = Integer::one();
        let ord = Integer::from(order);
        let cap = Integer::from(u128::MAX >> 1);
        let mut ok = true;
        for _ in 0..degree {
            mass *= &ord;
            if mass > cap {
                ok = false;
                break;
            }
        }
        ok
    };

    let mu = m as usize;
    let traces: Vec<i64> = (0..m).map(|a| trace_any_modulus(m, a)).collect();
    let mut power_sums: Vec<Integer> = Vec::with_capacity(degree);

    let mut counts = if fits_small {
        let mut v = vec![0u128; mu];
        for &h in &hs {
            v[h as usize] += 1;
        }
        Counts::Small(v)
    } else {
        let mut v = vec![Integer::zero(); mu];
        for &h in &hs {
            v[h as usize] += 1;
        }
        Counts::Big(v)
    };
    let support: Vec<usize> = hs.iter().map(|&h| h as usize).collect();

    for k in 1..=degree {
        if k > 1 {
            counts = match counts {
                Counts::Small(prev) => {
                    let mut next = vec![0u128; mu];
                    for (a, &c) in prev.iter().enumerate() {
                        if c == 0 {
                            continue;
                        }
                        for &h in &support {
                            let idx = if a + h >= mu { a + h - mu } else { a + h };
                            next[idx] += c;
                        }
                    }
                    Counts::Small(next)
                }
                Counts::Big(prev) => {
                    let mut next = vec![Integer::zero(); mu];
                    for (a, c) in prev.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        for &h in &support {
                            let idx = if a + h >= mu { a + h - mu } else { a + h };
                            next[idx] += c;
                        }
                    }
                    Counts::Big(next)
                }
            };
        }
        let total: Integer = match &counts {
            Counts::Small(v) => {
                let mut acc = Integer::zero();
                for (a, &c) in v.iter().enumerate() {
                    if c != 0 && traces[a] != 0 {
                        acc += Integer::from(c) * Integer::from(traces[a]);
                    }
                }
                acc
            }
            Counts::Big(v) => {
                let mut acc = Integer::zero();
                for (a, c) in v.iter().enumerate() {
                    if !c.is_zero() && traces[a] != 0 {
                        acc += c * Integer::from(traces[a]);
                    }
                }
                acc
            }
        };
        let (q, r) = num::Integer::div_rem(&total, &Integer::from(order));
        if !r.is_zero() {
            return Err(Error::InternalConsistency(format!(
                "trace of η^{k} is not divisible by the subgroup order"
            )));
        }
        power_sums.push(q);
    }

    newton_from_power_sums(&power_sums)
}

/// Coefficients of Π(x - α_i) from the power sums of the α_i, by Newton's
/// identities. Every elementary symmetric function must come out integral.
fn newton_from_power_sums(s: &[Integer]) -> Result<IntPolynomial> {
    let d = s.len();
    let mut e: Vec<Rational> = Vec::with_capacity(d + 1);
    e.push(Rational::one());
    for k in 1..=d {
        let mut acc = Rational::zero();
        for i in 1..=k {
            let term = &e[k - i] * Rational::from(s[i - 1].clone());
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        let ek = acc / Rational::from(Integer::from(k as u64));
        if !ek.denom().is_one() {
            return Err(Error::InternalConsistency(format!(
                "elementary symmetric function e_{k} is not integral: {ek}"
            )));
        }
        e.push(ek);
    }
    let mut coeffs = vec![Integer::zero(); d + 1];
    for (k, ek) in e.iter().enumerate() {
        let v = ek.numer().clone();
        coeffs[d - k] = if k % 2 == 1 { -v } else { v };
    }
    Ok(IntPolynomial::new(coeffs))
}

/// Monic integer defining polynomial of Q_{n,p}, of degree p^n, with the
/// Gaussian period over the order-(p-1) subgroup as root.
pub fn layer_polynomial(spec: &LayerSpec) -> Result<IntPolynomial> {
    let m = spec.conductor();
    let p = spec.p();
    // unique subgroup of order p-1: the solutions of x^(p-1) = 1 in (Z/m)^×
    let subgroup: Vec<u64> = (1..m)
        .filter(|&a| num::integer::gcd(a, m) == 1 && powmod_u64(a, p - 1, m) == 1)
        .collect();
    if subgroup.len() as u64 != p - 1 {
        return Err(Error::InternalConsistency(format!(
            "expected a subgroup of order {}, found {}",
            p - 1,
            subgroup.len()
        )));
    }
    let poly = gaussian_period_polynomial(m, &subgroup)?;
    debug_assert_eq!(poly.degree(), Some(spec.degree() as usize));
    Ok(poly)
}

/// Is the prime q inert in every layer Q_{n,p}? True iff
/// q^(p-1) ≠ 1 (mod p^2). The answer does not depend on n.
pub fn is_inert_by_congruence(q: u64, p: u64) -> Result<bool> {
    if !is_prime_u64(p) || p < 3 {
        return Err(Error::invalid(format!("p must be an odd prime, got {p}")));
    }
    if !is_prime_u64(q) {
        return Err(Error::invalid(format!("q must be prime, got {q}")));
    }
    if q == p {
        return Err(Error::invalid("q = p is the totally ramified case"));
    }
    let p2 = p as u128 * p as u128;
    Ok(powmod_u128(q as u128, (p - 1) as u128, p2) != 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{perfect_sqrt, split_prime_power};

    #[test]
    fn trace_zeta_prime_power_cases() {
        assert_eq!(trace_zeta(9, 0).unwrap(), Integer::from(6)); // φ(9) copies of 1
        assert_eq!(trace_zeta(9, 3).unwrap(), Integer::from(-3)); // primitive cube root
        assert_eq!(trace_zeta(9, 1).unwrap(), Integer::zero()); // μ(9) = 0
        assert_eq!(trace_zeta(9, 12).unwrap(), Integer::from(-3)); // reduced mod 9
        assert_eq!(trace_zeta(7, 0).unwrap(), Integer::from(6));
        assert_eq!(trace_zeta(7, 3).unwrap(), Integer::from(-1));
        assert!(trace_zeta(6, 1).is_err());
        assert!(trace_zeta(1, 0).is_err());
    }

    #[test]
    fn multiset_trace_agrees_with_expansion() {
        // (ζ_9 + ζ_9^8)^2 = ζ^2 + 2 + ζ^7 → trace = 0 + 2·6 + 0 = 12
        let eta = ExponentMultiset::from_exponents(9, &[1, 8]).unwrap();
        let sq = eta.convolve(&eta).unwrap();
        assert_eq!(sq.count(0), &Integer::from(2));
        assert_eq!(sq.trace(), Integer::from(12));
    }

    #[test]
    fn layer_3_1_is_the_golden_cubic() {
        let spec = LayerSpec::new(3, 1).unwrap();
        let f = layer_polynomial(&spec).unwrap();
        assert_eq!(f, IntPolynomial::from_i64(&[1, -3, 0, 1]));
        // substitution x ↦ 2 - x, sign-normalized to monic, gives the
        // presentation x^3 - 6x^2 + 9x - 3 of the same field
        let sub = -&f.compose_linear(&Integer::from(2), &Integer::from(-1));
        assert_eq!(sub, IntPolynomial::from_i64(&[-3, 9, -6, 1]));
    }

    #[test]
    fn layer_5_1_discriminant_is_5e8_times_square() {
        let f = layer_polynomial(&LayerSpec::new(5, 1).unwrap()).unwrap();
        assert_eq!(f, IntPolynomial::from_i64(&[1, 10, 5, -10, 0, 1]));
        let disc = f.discriminant().unwrap();
        let (sign, k, rest) = split_prime_power(&disc, 5);
        assert_eq!(sign, num::bigint::Sign::Plus);
        assert_eq!(k, 8);
        assert_eq!(perfect_sqrt(&rest), Some(Integer::from(7)));
    }

    #[test]
    fn layer_degrees_and_total_reality() {
        for (p, n) in [(3u64, 1u32), (3, 2), (5, 1), (7, 1)] {
            let spec = LayerSpec::new(p, n).unwrap();
            let f = layer_polynomial(&spec).unwrap();
            assert_eq!(f.degree(), Some(spec.degree() as usize), "degree for ({p},{n})");
            assert!(f.is_monic());
            assert_eq!(
                f.sturm_real_root_count().unwrap(),
                spec.degree() as usize,
                "total reality for ({p},{n})"
            );
            // ramified only at p: disc = ±p^k · square
            let disc = f.discriminant().unwrap();
            let (_, _, rest) = split_prime_power(&disc, p);
            assert!(
                perfect_sqrt(&rest).is_some(),
                "disc cofactor for ({p},{n}) is not a perfect square: {rest}"
            );
        }
    }

    #[test]
    fn inertness_congruence_cases() {
        assert!(!is_inert_by_congruence(2, 1093).unwrap()); // Wieferich
        assert!(is_inert_by_congruence(2, 5).unwrap()); // 16 ≠ 1 mod 25
        assert!(!is_inert_by_congruence(17, 3).unwrap()); // 289 = 1 mod 9
        assert!(is_inert_by_congruence(2, 3).unwrap());
        assert!(is_inert_by_congruence(2, 7).unwrap());
        assert!(is_inert_by_congruence(3511, 5).is_ok());
        assert!(is_inert_by_congruence(5, 5).is_err());
        assert!(is_inert_by_congruence(4, 5).is_err());
        assert!(is_inert_by_congruence(3, 2).is_err());
    }

    #[test]
    fn spec_validation() {
        assert!(LayerSpec::new(2, 1).is_err());
        assert!(LayerSpec::new(9, 1).is_err());
        assert!(LayerSpec::new(3, 0).is_err());
        assert!(LayerSpec::new(3, 1).is_ok());
        assert_eq!(LayerSpec::new(7, 2).unwrap().conductor(), 343);
        assert_eq!(LayerSpec::new(7, 2).unwrap().degree(), 49);
    }

    #[test]
    fn period_polynomial_validates_subgroup() {
        // not closed: {1, 2} mod 9
        assert!(gaussian_period_polynomial(9, &[1, 2]).is_err());
        // not a unit
        assert!(gaussian_period_polynomial(9, &[1, 3]).is_err());
        // missing 1
        assert!(gaussian_period_polynomial(9, &[8]).is_err());
        // the trivial subgroup gives the cyclotomic polynomial of degree φ(m)
        let f = gaussian_period_polynomial(9, &[1]).unwrap();
        assert_eq!(f, IntPolynomial::from_i64(&[1, 0, 0, 1, 0, 0, 1])); // Φ_9
    }
}
