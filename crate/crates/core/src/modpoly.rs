//! Polynomials over a prime field F_q and distinct-degree factorization.
//!
//! Coefficients are residues in `[0, q)`, ascending degree, trimmed. The
//! factorization stops at degree buckets: splitting patterns only need the
//! degrees of the irreducible factors, not the factors themselves.

use crate::arith::{is_prime_u64, mulmod_u64, powmod_u64, Integer};
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use num::{Signed, ToPrimitive};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModPolynomial {
    modulus: u64,
    coeffs: Vec<u64>,
}

impl ModPolynomial {
    /// Build from residues; the modulus must be prime.
    pub fn new(modulus: u64, coeffs: Vec<u64>) -> Result<Self> {
        if !is_prime_u64(modulus) {
            return Err(Error::invalid(format!("modulus {modulus} is not prime")));
        }
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % modulus).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Ok(ModPolynomial { modulus, coeffs })
    }

    /// Reduce an integer polynomial mod a prime q.
    pub fn reduce(poly: &IntPolynomial, q: u64) -> Result<Self> {
        if !is_prime_u64(q) {
            return Err(Error::invalid(format!("modulus {q} is not prime")));
        }
        let qi = Integer::from(q);
        let coeffs = poly
            .coeffs()
            .iter()
            .map(|c| {
                let mut r = c % &qi;
                if r.is_negative() {
                    r += &qi;
                }
                r.to_u64().expect("residue fits in u64")
            })
            .collect();
        ModPolynomial::new(q, coeffs)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    fn trim(mut coeffs: Vec<u64>, modulus: u64) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPolynomial { modulus, coeffs }
    }

    fn x(modulus: u64) -> Self {
        ModPolynomial { modulus, coeffs: vec![0, 1] }
    }

    pub fn eval(&self, x: u64) -> u64 {
        let q = self.modulus;
        let x = x % q;
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = (mulmod_u64(acc, x, q) + c) % q;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let q = self.modulus;
        if self.coeffs.len() <= 1 {
            return Self::trim(Vec::new(), q);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mulmod_u64(i as u64 % q, c, q))
            .collect();
        Self::trim(coeffs, q)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.modulus, rhs.modulus);
        let q = self.modulus;
        if self.is_zero() || rhs.is_zero() {
            return Self::trim(Vec::new(), q);
        }
        let mut out = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mulmod_u64(a, b, q)) % q;
            }
        }
        Self::trim(out, q)
    }

    fn sub(&self, rhs: &Self) -> Self {
        let q = self.modulus;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = rhs.coeffs.get(i).copied().unwrap_or(0);
                (a + q - b) % q
            })
            .collect();
        Self::trim(coeffs, q)
    }

    /// Remainder of self by a nonzero divisor.
    pub fn rem(&self, rhs: &Self) -> Self {
        let q = self.modulus;
        let dl = rhs.degree().expect("division by zero polynomial");
        let lead_inv = powmod_u64(*rhs.coeffs.last().unwrap(), q - 2, q);
        let mut rem = self.coeffs.clone();
        while rem.len() > dl {
            let k = rem.len() - 1 - dl;
            let c = mulmod_u64(*rem.last().unwrap(), lead_inv, q);
            if c != 0 {
                for i in 0..=dl {
                    rem[k + i] = (rem[k + i] + q - mulmod_u64(c, rhs.coeffs[i], q)) % q;
                }
            }
            while rem.last() == Some(&0) {
                rem.pop();
            }
            if rem.len() <= dl {
                break;
            }
        }
        Self::trim(rem, q)
    }

    /// (quotient, remainder).
    pub fn divmod(&self, rhs: &Self) -> (Self, Self) {
        let q = self.modulus;
        let dl = rhs.degree().expect("division by zero polynomial");
        let lead_inv = powmod_u64(*rhs.coeffs.last().unwrap(), q - 2, q);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; self.coeffs.len().saturating_sub(dl)];
        while rem.len() > dl {
            let k = rem.len() - 1 - dl;
            let c = mulmod_u64(*rem.last().unwrap(), lead_inv, q);
            if c != 0 {
                quot[k] = c;
                for i in 0..=dl {
                    rem[k + i] = (rem[k + i] + q - mulmod_u64(c, rhs.coeffs[i], q)) % q;
                }
            }
            while rem.last() == Some(&0) {
                rem.pop();
            }
            if rem.len() <= dl {
                break;
            }
        }
        (Self::trim(quot, q), Self::trim(rem, q))
    }

    /// Monic gcd.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let q = self.modulus;
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if let Some(&lead) = a.coeffs.last() {
            if lead != 1 {
                let inv = powmod_u64(lead, q - 2, q);
                a.coeffs.iter_mut().for_each(|c| *c = mulmod_u64(*c, inv, q));
            }
        }
        a
    }

    /// self^exp mod (f), by square-and-multiply.
    pub fn powmod(&self, mut exp: u64, f: &Self) -> Self {
        let q = self.modulus;
        let mut acc = ModPolynomial { modulus: q, coeffs: vec![1] };
        let mut base = self.rem(f);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base).rem(f);
            }
            base = base.mul(&base).rem(f);
            exp >>= 1;
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }

    /// Distinct-degree factorization of a monic squarefree polynomial:
    /// for each degree d with at least one irreducible factor, the pair
    /// `(d, product of all monic irreducible factors of degree d)`.
    ///
    /// The degrees with multiplicity are recovered as deg(bucket)/d copies
    /// of d; no equal-degree splitting is performed.
    pub fn distinct_degree_factor(&self) -> Result<Vec<(usize, ModPolynomial)>> {
        let q = self.modulus;
        let deg = self
            .degree()
            .ok_or_else(|| Error::invalid("cannot factor the zero polynomial"))?;
        if !self.is_monic() {
            return Err(Error::invalid("distinct-degree factorization requires a monic input"));
        }
        if deg == 0 {
            return Ok(Vec::new());
        }
        if !self.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        let mut buckets = Vec::new();
        let mut fs = self.clone();
        let mut h = Self::x(q);
        let mut d = 0usize;
        while fs.degree().unwrap_or(0) > 2 * d {
            d += 1;
            h = h.powmod(q, &fs);
            let hx = h.sub(&Self::x(q));
            let g = fs.gcd(&hx);
            if g.degree().unwrap_or(0) > 0 {
                let (quot, rem) = fs.divmod(&g);
                debug_assert!(rem.is_zero());
                buckets.push((d, g));
                fs = quot;
                if fs.degree().unwrap_or(0) > 0 {
                    h = h.rem(&fs);
                }
            }
        }
        if fs.degree().unwrap_or(0) > 0 {
            buckets.push((fs.degree().unwrap(), fs));
        }
        Ok(buckets)
    }

    /// Degrees of the irreducible factors, with multiplicity, sorted.
    pub fn factor_degrees(&self) -> Result<Vec<usize>> {
        let buckets = self.distinct_degree_factor()?;
        let mut degs = Vec::new();
        for (d, bucket) in &buckets {
            let bd = bucket.degree().expect("buckets are nonconstant");
            debug_assert_eq!(bd % d, 0);
            for _ in 0..bd / d {
                degs.push(*d);
            }
        }
        degs.sort_unstable();
        Ok(degs)
    }

    /// All roots in F_q, by direct scan (intended for small q).
    pub fn roots(&self) -> Vec<u64> {
        (0..self.modulus).filter(|&x| self.eval(x) == 0).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mp(q: u64, coeffs: &[i64]) -> ModPolynomial {
        ModPolynomial::reduce(&IntPolynomial::from_i64(coeffs), q).unwrap()
    }

    #[test]
    fn ddf_layer_cubic() {
        // x^3 - 3x + 1 is irreducible mod 2 (no roots, cubic)
        let f = mp(2, &[1, -3, 0, 1]);
        let buckets = f.distinct_degree_factor().unwrap();
        assert_eq!(buckets.len(), 1);
        assert_eq!(buckets[0].0, 3);
        assert_eq!(buckets[0].1, f);
        // and splits into three linear factors mod 17
        let f17 = mp(17, &[1, -3, 0, 1]);
        assert_eq!(f17.factor_degrees().unwrap(), vec![1, 1, 1]);
    }

    #[test]
    fn ddf_quadratic_split() {
        // x^2 + 1 = (x - 2)(x - 3) mod 5
        let f = mp(5, &[1, 0, 1]);
        let buckets = f.distinct_degree_factor().unwrap();
        assert_eq!(buckets.len(), 1);
        assert_eq!(buckets[0].0, 1);
        assert_eq!(buckets[0].1, f);
        assert_eq!(f.factor_degrees().unwrap(), vec![1, 1]);
        assert_eq!(f.roots(), vec![2, 3]);
    }

    #[test]
    fn ddf_rejects_non_squarefree() {
        let f = mp(5, &[0, 0, 1]); // x^2
        assert!(matches!(f.distinct_degree_factor(), Err(Error::NotSquarefree)));
        // x^2 + 2x + 1 = (x+1)^2 mod anything
        let g = mp(7, &[1, 2, 1]);
        assert!(matches!(g.distinct_degree_factor(), Err(Error::NotSquarefree)));
    }

    #[test]
    fn ddf_rejects_non_monic_and_bad_modulus() {
        let f = mp(5, &[1, 0, 2]);
        assert!(f.distinct_degree_factor().is_err());
        assert!(ModPolynomial::new(6, vec![1, 1]).is_err());
    }

    #[test]
    fn reduce_normalizes_negatives() {
        let f = mp(7, &[-1, -8, 13]);
        assert_eq!(f.coeffs(), &[6, 6, 6]);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn ddf_degrees_partition_and_product_recovers(
            qidx in 0usize..8,
            coeffs in proptest::collection::vec(0u64..97, 1..=9),
        ) {
            let q = [3u64, 5, 7, 11, 13, 17, 31, 97][qidx];
            let mut v: Vec<u64> = coeffs.into_iter().map(|c| c % q).collect();
            v.push(1); // monic
            let f = ModPolynomial::new(q, v).unwrap();
            prop_assume!(f.is_squarefree());
            let deg = f.degree().unwrap();
            let buckets = f.distinct_degree_factor().unwrap();
            // degrees partition deg(f)
            let mut total = 0usize;
            let mut product = ModPolynomial::new(q, vec![1]).unwrap();
            for (d, bucket) in &buckets {
                let bd = bucket.degree().unwrap();
                prop_assert_eq!(bd % d, 0);
                total += bd;
                product = product.mul(bucket);
            }
            prop_assert_eq!(total, deg);
            // product of buckets equals f
            prop_assert_eq!(product, f);
        }
    }
}
