//! Arithmetic in a monogenic number-field presentation Q[x]/(f), working in
//! the ring Z[θ][1/2]: power-basis coordinates over Z plus a power-of-two
//! denominator.
//!
//! The restriction of denominators to powers of two is deliberate: with
//! S = {q}, q the prime above an inert 2, the S-units are exactly the
//! elements whose ideal support lies over 2, and division surfaces any
//! escape from the working ring as an explicit `NotRepresentable` error
//! instead of silently enlarging the denominator set.

use crate::arith::{is_prime_u64, powmod_u64, v2, Integer, Rational};
use crate::error::{Error, Result};
use crate::modpoly::ModPolynomial;
use crate::poly::{IntPolynomial, RatPoly};
use num::{Integer as _, One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::sync::Arc;

#[derive(Debug)]
struct FieldInner {
    poly: IntPolynomial,
    degree: usize,
    disc: Integer,
}

/// A number field presented by a monic integer polynomial, assumed
/// irreducible, with the polynomial discriminant cached.
#[derive(Clone, Debug)]
pub struct NumberField {
    inner: Arc<FieldInner>,
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.poly == other.inner.poly
    }
}
impl Eq for NumberField {}

impl NumberField {
    pub fn new(poly: IntPolynomial) -> Result<Self> {
        let degree = poly
            .degree()
            .ok_or_else(|| Error::invalid("defining polynomial must be nonzero"))?;
        if degree < 1 {
            return Err(Error::invalid("defining polynomial must have degree >= 1"));
        }
        if !poly.is_monic() {
            return Err(Error::invalid("defining polynomial must be monic"));
        }
        let disc = poly.discriminant()?;
        if disc.is_zero() {
            return Err(Error::invalid("defining polynomial must be separable (disc != 0)"));
        }
        Ok(NumberField { inner: Arc::new(FieldInner { poly, degree, disc }) })
    }

    pub fn from_i64(coeffs: &[i64]) -> Result<Self> {
        Self::new(IntPolynomial::from_i64(coeffs))
    }

    pub fn defining_poly(&self) -> &IntPolynomial {
        &self.inner.poly
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn disc(&self) -> &Integer {
        &self.inner.disc
    }

    /// Element with the given numerator coordinates and denominator 2^denom_exp.
    pub fn element(&self, coords: Vec<Integer>, denom_exp: u32) -> Result<FieldElement> {
        if coords.len() != self.degree() {
            return Err(Error::invalid(format!(
                "expected {} coordinates, got {}",
                self.degree(),
                coords.len()
            )));
        }
        Ok(FieldElement::reduced(self.clone(), coords, denom_exp))
    }

    pub fn element_from_i64(&self, coords: &[i64], denom_exp: u32) -> Result<FieldElement> {
        self.element(coords.iter().map(|&c| Integer::from(c)).collect(), denom_exp)
    }

    /// The rational integer n as an element.
    pub fn integer(&self, n: i64) -> FieldElement {
        let mut coords = vec![Integer::zero(); self.degree()];
        coords[0] = Integer::from(n);
        FieldElement { field: self.clone(), coords, denom_exp: 0 }
    }

    pub fn zero(&self) -> FieldElement {
        self.integer(0)
    }

    pub fn one(&self) -> FieldElement {
        self.integer(1)
    }

    /// The generator θ (requires degree >= 2).
    pub fn theta(&self) -> FieldElement {
        let mut coords = vec![Integer::zero(); self.degree()];
        coords[1] = Integer::one();
        FieldElement { field: self.clone(), coords, denom_exp: 0 }
    }

    /// Reduce an arbitrary integer polynomial in θ into power-basis coordinates.
    pub fn element_from_poly(&self, g: &IntPolynomial, denom_exp: u32) -> FieldElement {
        let rem = reduce_mod_monic(g, &self.inner.poly);
        let mut coords = vec![Integer::zero(); self.degree()];
        for (i, c) in rem.coeffs().iter().enumerate() {
            coords[i] = c.clone();
        }
        FieldElement::reduced(self.clone(), coords, denom_exp)
    }
}

/// Schoolbook remainder of g by a monic modulus (exact over Z).
fn reduce_mod_monic(g: &IntPolynomial, modulus: &IntPolynomial) -> IntPolynomial {
    let d = modulus.degree().expect("monic modulus");
    let mut coeffs: Vec<Integer> = g.coeffs().to_vec();
    while coeffs.len() > d {
        let lead = coeffs.pop().expect("nonempty");
        if lead.is_zero() {
            continue;
        }
        let k = coeffs.len() - d;
        for i in 0..d {
            let t = &lead * &modulus.coeffs()[i];
            coeffs[k + i] -= t;
        }
    }
    IntPolynomial::new(coeffs)
}

/// An element of a number field: numerator coordinates over the power basis
/// and a power-of-two denominator, kept in reduced form (if denom_exp > 0,
/// not all coordinates are even).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldElement {
    field: NumberField,
    coords: Vec<Integer>,
    denom_exp: u32,
}

impl FieldElement {
    fn reduced(field: NumberField, mut coords: Vec<Integer>, mut denom_exp: u32) -> Self {
        while denom_exp > 0 && coords.iter().all(|c| c.is_even()) {
            for c in coords.iter_mut() {
                *c >>= 1;
            }
            denom_exp -= 1;
        }
        FieldElement { field, coords, denom_exp }
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn coords(&self) -> &[Integer] {
        &self.coords
    }

    pub fn denom_exp(&self) -> u32 {
        self.denom_exp
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.denom_exp == 0
            && self.coords[0].is_one()
            && self.coords.iter().skip(1).all(|c| c.is_zero())
    }

    /// Numerator as a polynomial in θ.
    pub fn numerator_poly(&self) -> IntPolynomial {
        IntPolynomial::new(self.coords.clone())
    }

    fn assert_same_field(&self, other: &FieldElement) {
        assert!(
            self.field == other.field,
            "field elements belong to different number fields"
        );
    }

    /// Field norm N(a) = Res(f, numerator) / 2^(d·denom_exp).
    pub fn norm(&self) -> Rational {
        if self.is_zero() {
            return Rational::zero();
        }
        let num = self.field.inner.poly.resultant(&self.numerator_poly());
        let den: Integer = Integer::one() << (self.field.degree() * self.denom_exp as usize);
        Rational::new(num, den)
    }

    /// Norm of the numerator polynomial alone: Res(f, num).
    pub fn numerator_norm(&self) -> Integer {
        self.field.inner.poly.resultant(&self.numerator_poly())
    }

    pub fn checked_div(&self, rhs: &FieldElement) -> Result<FieldElement> {
        self.assert_same_field(rhs);
        if rhs.is_zero() {
            return Err(Error::invalid("division by zero field element"));
        }
        // invert the numerator of rhs via extended gcd with f over Q
        let f = RatPoly::from_int(&self.field.inner.poly);
        let b = RatPoly::from_int(&rhs.numerator_poly());
        let (g, _, v) = f.xgcd(&b);
        if g.degree() != Some(0) {
            return Err(Error::InternalConsistency(
                "defining polynomial shares a factor with a nonzero element".into(),
            ));
        }
        // rhs^{-1} = v(θ)·2^{rhs.denom_exp}; multiply by self and rebalance
        // the powers of two
        let prod = RatPoly::from_int(&self.numerator_poly()).mul(&v);
        let prod = prod.rem(&f);
        let mut coords_rat: Vec<Rational> =
            (0..self.field.degree()).map(|i| prod.coeff(i)).collect();
        let shift = rhs.denom_exp as i64 - self.denom_exp as i64;
        let two = Rational::from(Integer::from(2));
        match shift.cmp(&0) {
            std::cmp::Ordering::Greater => {
                let mult = num::pow::pow(two, shift as usize);
                coords_rat.iter_mut().for_each(|c| *c *= &mult);
            }
            std::cmp::Ordering::Less => {
                let div = num::pow::pow(two, (-shift) as usize);
                coords_rat.iter_mut().for_each(|c| *c /= &div);
            }
            std::cmp::Ordering::Equal => {}
        }
        // the common denominator must be a power of two
        let mut denom_exp: u32 = 0;
        for c in &coords_rat {
            let den = c.denom();
            if den.is_one() {
                continue;
            }
            let tz = v2(den).expect("nonzero denominator");
            if (den >> tz as usize).is_one() {
                denom_exp = denom_exp.max(tz as u32);
            } else {
                return Err(Error::NotRepresentable(format!(
                    "denominator {den} has an odd prime factor"
                )));
            }
        }
        let scale: Integer = Integer::one() << denom_exp as usize;
        let coords: Vec<Integer> = coords_rat
            .into_iter()
            .map(|c| {
                let scaled = c * Rational::from(scale.clone());
                debug_assert!(scaled.denom().is_one());
                scaled.numer().clone()
            })
            .collect();
        Ok(FieldElement::reduced(self.field.clone(), coords, denom_exp))
    }

    pub fn inverse(&self) -> Result<FieldElement> {
        let one = FieldElement {
            field: self.field.clone(),
            coords: {
                let mut c = vec![Integer::zero(); self.field.degree()];
                c[0] = Integer::one();
                c
            },
            denom_exp: 0,
        };
        one.checked_div(self)
    }

    /// Renders like `2 - t` or `(1 + t)/2`, writing `t` for θ.
    pub fn pretty(&self) -> String {
        let num = if self.is_zero() {
            "0".to_string()
        } else {
            let mut s = String::new();
            let mut first = true;
            for (i, c) in self.coords.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mag = c.abs();
                if first {
                    if c.is_negative() {
                        s.push('-');
                    }
                    first = false;
                } else {
                    s.push_str(if c.is_negative() { " - " } else { " + " });
                }
                let show = !mag.is_one() || i == 0;
                if show {
                    s.push_str(&mag.to_string());
                }
                if i > 0 {
                    if show {
                        s.push('*');
                    }
                    s.push('t');
                    if i > 1 {
                        s.push_str(&format!("^{i}"));
                    }
                }
            }
            s
        };
        if self.denom_exp == 0 {
            num
        } else if self.denom_exp == 1 {
            format!("({num})/2")
        } else {
            format!("({num})/2^{}", self.denom_exp)
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty())
    }
}

impl std::ops::Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.assert_same_field(rhs);
        let e = self.denom_exp.max(rhs.denom_exp);
        let (sa, sb) = (e - self.denom_exp, e - rhs.denom_exp);
        let coords = self
            .coords
            .iter()
            .zip(&rhs.coords)
            .map(|(a, b)| (a << sa as usize) + (b << sb as usize))
            .collect();
        FieldElement::reduced(self.field.clone(), coords, e)
    }
}

impl std::ops::Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self + &(-rhs)
    }
}

impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| -c).collect(),
            denom_exp: self.denom_exp,
        }
    }
}

impl std::ops::Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.assert_same_field(rhs);
        let prod = &self.numerator_poly() * &rhs.numerator_poly();
        let rem = reduce_mod_monic(&prod, &self.field.inner.poly);
        let mut coords = vec![Integer::zero(); self.field.degree()];
        for (i, c) in rem.coeffs().iter().enumerate() {
            coords[i] = c.clone();
        }
        FieldElement::reduced(self.field.clone(), coords, self.denom_exp + rhs.denom_exp)
    }
}

/// The multiset of residue degrees of an unramified rational prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplittingPattern {
    degrees: Vec<usize>,
}

impl SplittingPattern {
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn is_inert(&self) -> bool {
        self.degrees.len() == 1
    }

    pub fn is_totally_split(&self) -> bool {
        self.degrees.iter().all(|&d| d == 1)
    }

    /// All residue degrees equal (necessary for a Galois field).
    pub fn is_equal_degree(&self) -> bool {
        self.degrees.windows(2).all(|w| w[0] == w[1])
    }
}

impl fmt::Display for SplittingPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, d) in self.degrees.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "]")
    }
}

/// Degrees of the irreducible factors of the defining polynomial mod q, with
/// multiplicity. Errors with `Inconclusive` when q divides the polynomial
/// discriminant: the factor pattern of the polynomial then need not match
/// the splitting of the prime in the field.
pub fn splitting_pattern(field: &NumberField, q: u64) -> Result<SplittingPattern> {
    if !is_prime_u64(q) {
        return Err(Error::invalid(format!("q must be prime, got {q}")));
    }
    if (field.disc() % Integer::from(q)).is_zero() {
        return Err(Error::Inconclusive(format!(
            "{q} divides the discriminant of the presentation"
        )));
    }
    let reduced = ModPolynomial::reduce(field.defining_poly(), q)?;
    let degrees = reduced.factor_degrees()?;
    Ok(SplittingPattern { degrees })
}

/// Witness that p is totally ramified in the presentation: a residue point c
/// with f ≡ (x - c)^d (mod p), realizing the unique prime above p as
/// (p, θ - c).
#[derive(Clone, Debug)]
pub struct RamifiedPrimeContext {
    field: NumberField,
    p: u64,
    residue_point: u64,
}

/// (x - c)^d mod p.
fn shifted_power(p: u64, c: u64, d: usize) -> Result<ModPolynomial> {
    let xc = ModPolynomial::new(p, vec![(p - c % p) % p, 1])?;
    let mut acc = ModPolynomial::new(p, vec![1])?;
    let mut base = xc;
    let mut e = d;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&base);
        }
        base = base.mul(&base);
        e >>= 1;
    }
    Ok(acc)
}

impl RamifiedPrimeContext {
    pub fn new(field: &NumberField, p: u64) -> Result<Self> {
        if !is_prime_u64(p) || p < 3 {
            return Err(Error::invalid(format!("p must be an odd prime, got {p}")));
        }
        let d = field.degree();
        let reduced = ModPolynomial::reduce(field.defining_poly(), p)?;
        for c in 0..p {
            if shifted_power(p, c, d)? == reduced {
                return Ok(RamifiedPrimeContext { field: field.clone(), p, residue_point: c });
            }
        }
        Err(Error::InvalidContext(format!(
            "no residue point c with f ≡ (x - c)^{d} (mod {p})"
        )))
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn residue_point(&self) -> u64 {
        self.residue_point
    }

    /// Image of the element in O/p ≅ F_p: numerator evaluated at the residue
    /// point, times the inverse of the denominator (2 is invertible mod p).
    pub fn residue(&self, a: &FieldElement) -> Result<u64> {
        if a.field() != &self.field {
            return Err(Error::invalid("element belongs to a different field"));
        }
        let p = self.p;
        let num = ModPolynomial::reduce(&a.numerator_poly(), p)?;
        let mut r = num.eval(self.residue_point);
        if a.denom_exp() > 0 {
            let inv2 = powmod_u64(2, p - 2, p);
            let inv = powmod_u64(inv2, a.denom_exp() as u64, p);
            r = r * inv % p;
        }
        Ok(r)
    }

    /// The congruence λ ≡ N(λ) (mod p) between an element's residue and the
    /// residue of its norm. Holds for every integral element of a field of
    /// degree p^n in which p is totally ramified.
    pub fn check_norm_residue(&self, a: &FieldElement) -> Result<bool> {
        let p = self.p;
        let lhs = self.residue(a)?;
        let norm = a.norm();
        let pi = Integer::from(p);
        let num_mod = norm.numer().mod_floor(&pi).to_u64().expect("residue fits");
        let den = norm.denom();
        let rhs = if den.is_one() {
            num_mod
        } else {
            let den_mod = den.mod_floor(&pi).to_u64().expect("residue fits");
            if den_mod == 0 {
                return Err(Error::invalid("norm denominator is divisible by p"));
            }
            num_mod * powmod_u64(den_mod, p - 2, p) % p
        };
        Ok(lhs == rhs)
    }
}

/// Witness that 2 is inert: the splitting pattern of 2 is the single degree
/// [d], so q = 2·O is the unique prime above 2 and ord_q is v_2(N)/d.
#[derive(Clone, Debug)]
pub struct InertPrimeContext {
    field: NumberField,
}

impl InertPrimeContext {
    pub fn new(field: &NumberField) -> Result<Self> {
        let pattern = splitting_pattern(field, 2)?;
        if !pattern.is_inert() {
            return Err(Error::InvalidContext(format!(
                "2 is not inert: splitting pattern {pattern}"
            )));
        }
        Ok(InertPrimeContext { field: field.clone() })
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    /// ord at the prime above 2 of a nonzero element: v_2(N(a))/d. The
    /// divisibility of the 2-adic valuation of the norm by the degree is a
    /// consequence of inertness and is asserted, not assumed.
    pub fn ord_at_q(&self, a: &FieldElement) -> Result<i64> {
        if a.is_zero() {
            return Err(Error::invalid("ord of the zero element"));
        }
        if a.field() != &self.field {
            return Err(Error::invalid("element belongs to a different field"));
        }
        let d = self.field.degree() as i64;
        let num_norm = a.numerator_norm();
        let v = v2(&num_norm)? as i64;
        if v % d != 0 {
            return Err(Error::InternalConsistency(format!(
                "v_2(norm) = {v} is not divisible by the degree {d}, contradicting inertness"
            )));
        }
        Ok(v / d - a.denom_exp() as i64)
    }

    /// Is the fractional ideal of `a` supported only on the prime above 2?
    /// Equivalently: |N(numerator)| is a power of two.
    pub fn is_s_unit(&self, a: &FieldElement) -> bool {
        if a.is_zero() || a.field() != &self.field {
            return false;
        }
        crate::arith::is_pow2(&a.numerator_norm())
    }
}
