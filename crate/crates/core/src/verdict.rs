//! The decision layer: Wieferich scanning, per-(p, n) verdicts on effective
//! asymptotic Fermat over the layers of the cyclotomic Z_p-extension, and a
//! certifier for general totally real p-extensions.
//!
//! Every verdict and certificate carries citations: named statements from
//! the toolkit's fact base, so a report is exactly as strong as the facts it
//! leans on. Checks that cannot be decided soundly (a missing Eisenstein
//! witness, a prime dividing the discriminant) come back `Inconclusive`,
//! never as a silent pass or fail.

use crate::arith::{is_prime_u64, powmod_u128, primes_below, Integer};
use crate::error::{Error, Result};
use crate::nf::{splitting_pattern, NumberField};
use crate::poly::IntPolynomial;
use num::Zero;
use rayon::prelude::*;
use std::fmt;

/// A named mathematical fact the toolkit relies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Citation {
    pub tag: &'static str,
    pub statement: &'static str,
}

/// Effective asymptotic Fermat holds over every layer of the cyclotomic
/// Z_2-extension.
pub const CIT_Z2_LAYERS: Citation = Citation {
    tag: "layers-z2",
    statement: "effective asymptotic Fermat holds over every layer of the \
                cyclotomic Z_2-extension of Q",
};

/// The headline fact for odd p.
pub const CIT_ZP_NONWIEFERICH: Citation = Citation {
    tag: "layers-zp-non-wieferich",
    statement: "for a non-Wieferich prime p >= 5, effective asymptotic Fermat \
                holds over every layer of the cyclotomic Z_p-extension of Q",
};

/// The S-unit criterion behind the odd-p fact.
pub const CIT_SUNIT_CRITERION: Citation = Citation {
    tag: "sunit-criterion",
    statement: "if 2 is inert in a totally real F satisfying the modularity \
                hypotheses and every solution of the S-unit equation \
                λ + μ = 1 at S = {2·O} has max(|ord λ|, |ord μ|) <= 4 and \
                ord(λμ) ≡ 1 (mod 3), then asymptotic Fermat holds over F",
};

/// Inertness of q in the layers is a single congruence.
pub const CIT_INERT_CONGRUENCE: Citation = Citation {
    tag: "inert-congruence",
    statement: "a prime q ≠ p is inert in every layer of the cyclotomic \
                Z_p-extension iff q^(p-1) ≠ 1 (mod p^2)",
};

/// Norm-residue congruence at the totally ramified prime.
pub const CIT_NORM_RESIDUE: Citation = Citation {
    tag: "norm-residue",
    statement: "in a degree-p^n field with p totally ramified, every integral \
                λ satisfies λ ≡ N(λ) (mod p) at the unique prime above p",
};

/// Emptiness of the unit equation in layers for p ≠ 3.
pub const CIT_UNIT_EQUATION_EMPTY: Citation = Citation {
    tag: "unit-equation-empty",
    statement: "for p ≠ 3 the unit equation λ + μ = 1 has no solutions in \
                units of a layer of the cyclotomic Z_p-extension",
};

/// Order-signature classification of S-unit solutions for p >= 5.
pub const CIT_SUNIT_CLASSES: Citation = Citation {
    tag: "sunit-ord-classes",
    statement: "for p >= 5 with 2 inert, every S-unit solution of λ + μ = 1 \
                in a layer has order signature (1,0), (0,1) or (-1,-1)",
};

/// The general certified statement.
pub const CIT_GENERAL_P_EXTENSION: Citation = Citation {
    tag: "general-p-extension",
    statement: "asymptotic Fermat holds over any totally real Galois field of \
                degree p^n (p >= 5 prime) in which p is totally ramified and \
                2 is inert",
};

/// Why p = 3 stays open.
pub const CIT_OPEN_P3: Citation = Citation {
    tag: "open-p3",
    statement: "the unit equation has solutions in the first layer at p = 3 \
                (and hence in every layer), violating the S-unit criterion",
};

/// Why Wieferich primes stay open.
pub const CIT_OPEN_WIEFERICH: Citation = Citation {
    tag: "open-wieferich",
    statement: "for a Wieferich prime p, 2 splits into at least p primes in \
                the layers, and S-unit equations with more than one prime in \
                S are out of reach in infinite families",
};

/// Is p a Wieferich prime: 2^(p-1) ≡ 1 (mod p^2)?
pub fn is_wieferich(p: u64) -> Result<bool> {
    if p == 2 {
        return Err(Error::invalid("the Wieferich condition is about odd primes"));
    }
    if !is_prime_u64(p) {
        return Err(Error::invalid(format!("{p} is not prime")));
    }
    let p2 = p as u128 * p as u128;
    Ok(powmod_u128(2, (p - 1) as u128, p2) == 1)
}

/// All Wieferich primes in [lo, hi], by a segmented sieve with the
/// double-word modular exponentiation test per prime. Segments are scanned
/// in parallel and merged in order.
pub fn wieferich_scan(lo: u64, hi: u64) -> Result<Vec<u64>> {
    if lo < 2 || lo > hi {
        return Err(Error::invalid("need 2 <= lo <= hi"));
    }
    let limit = (hi as f64).sqrt() as u64 + 2;
    let base = primes_below(limit.max(3));
    const SEGMENT: u64 = 1 << 20;
    let segments: Vec<(u64, u64)> = {
        let mut v = Vec::new();
        let mut start = lo;
        while start <= hi {
            let end = start.saturating_add(SEGMENT - 1).min(hi);
            v.push((start, end));
            start = end.saturating_add(1);
            if start == 0 {
                break;
            }
        }
        v
    };
    let mut hits: Vec<(usize, Vec<u64>)> = segments
        .par_iter()
        .enumerate()
        .map(|(idx, &(start, end))| {
            let len = (end - start + 1) as usize;
            let mut composite = vec![false; len];
            for &p in &base {
                if p * p > end {
                    break;
                }
                let mut first = p.max(start.div_ceil(p)) * p;
                if first < p * p {
                    first = p * p;
                }
                let mut j = first;
                while j <= end {
                    composite[(j - start) as usize] = true;
                    j += p;
                }
            }
            let mut found = Vec::new();
            for (off, &c) in composite.iter().enumerate() {
                let n = start + off as u64;
                if n >= 2 && !c {
                    let p2 = n as u128 * n as u128;
                    if powmod_u128(2, (n - 1) as u128, p2) == 1 && n != 2 {
                        found.push(n);
                    }
                }
            }
            (idx, found)
        })
        .collect();
    hits.sort_by_key(|&(idx, _)| idx);
    Ok(hits.into_iter().flat_map(|(_, v)| v).collect())
}

/// Verdict status for a layer family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerdictStatus {
    /// Effective asymptotic Fermat is proved.
    EffectiveHolds,
    /// Asymptotic Fermat is proved without an effective bound.
    Holds,
    /// Neither is known.
    Open,
}

impl VerdictStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            VerdictStatus::EffectiveHolds => "effective-holds",
            VerdictStatus::Holds => "holds",
            VerdictStatus::Open => "open",
        }
    }
}

impl fmt::Display for VerdictStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A cited reason attached to a verdict.
#[derive(Clone, Debug)]
pub struct Reason {
    pub citation: Citation,
    pub note: String,
}

/// The verdict for the layers Q_{n,p}. The status depends only on p (and on
/// whether p is Wieferich), never on n; the reasons say so explicitly.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub p: u64,
    pub n: u32,
    pub status: VerdictStatus,
    pub reasons: Vec<Reason>,
}

/// Decide effective asymptotic Fermat over Q_{n,p}.
pub fn asymptotic_flt_verdict(p: u64, n: u32) -> Result<Verdict> {
    if !is_prime_u64(p) {
        return Err(Error::invalid(format!("p must be prime, got {p}")));
    }
    if n < 1 {
        return Err(Error::invalid("layer index n must be >= 1"));
    }
    let mut reasons = Vec::new();
    let status = if p == 2 {
        reasons.push(Reason {
            citation: CIT_Z2_LAYERS,
            note: "the 2-adic tower is settled unconditionally".into(),
        });
        VerdictStatus::EffectiveHolds
    } else if p == 3 {
        reasons.push(Reason {
            citation: CIT_OPEN_P3,
            note: "unit-equation solutions such as λ = 2 - θ in the first \
                   layer violate the order-signature criterion"
                .into(),
        });
        VerdictStatus::Open
    } else if is_wieferich(p)? {
        reasons.push(Reason {
            citation: CIT_OPEN_WIEFERICH,
            note: format!("2^(p-1) ≡ 1 (mod p^2) for p = {p}, so 2 is not inert in the layers"),
        });
        VerdictStatus::Open
    } else {
        reasons.push(Reason {
            citation: CIT_ZP_NONWIEFERICH,
            note: format!("p = {p} is a non-Wieferich prime >= 5"),
        });
        reasons.push(Reason {
            citation: CIT_INERT_CONGRUENCE,
            note: "2 is inert in every layer by the congruence test".into(),
        });
        reasons.push(Reason {
            citation: CIT_SUNIT_CRITERION,
            note: "every S-unit solution has an admissible order signature".into(),
        });
        VerdictStatus::EffectiveHolds
    };
    reasons.push(Reason {
        citation: CIT_INERT_CONGRUENCE,
        note: format!("the verdict is independent of the layer index (given n = {n})"),
    });
    Ok(Verdict { p, n, status, reasons })
}

/// Outcome of one certificate check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckOutcome {
    Pass,
    Fail,
    Inconclusive,
}

impl CheckOutcome {
    pub fn as_str(&self) -> &'static str {
        match self {
            CheckOutcome::Pass => "pass",
            CheckOutcome::Fail => "fail",
            CheckOutcome::Inconclusive => "inconclusive",
        }
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Overall strength of a certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertificateOutcome {
    /// All checks passed and p >= 5: the cited statement applies, modulo the
    /// sampled (not proved) Galois evidence.
    CertifiedEvidence,
    /// Some check failed definitively.
    Failed,
    /// No definitive answer (missing witness, excluded hypothesis, or a
    /// prime dividing the discriminant).
    Inconclusive,
}

impl CertificateOutcome {
    pub fn as_str(&self) -> &'static str {
        match self {
            CertificateOutcome::CertifiedEvidence => "certified-evidence",
            CertificateOutcome::Failed => "failed",
            CertificateOutcome::Inconclusive => "inconclusive",
        }
    }
}

impl fmt::Display for CertificateOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Certificate for a general totally real p-extension candidate.
#[derive(Clone, Debug)]
pub struct CertificateReport {
    pub poly: IntPolynomial,
    pub p: u64,
    /// n with deg = p^n, when the degree is a p-power.
    pub n: Option<u32>,
    pub degree_is_p_power: CheckOutcome,
    /// Equal residue degrees at every sampled prime (necessary for Galois).
    pub galois_evidence: CheckOutcome,
    pub galois_sampled_primes: usize,
    pub galois_failing_prime: Option<u64>,
    pub totally_real: CheckOutcome,
    pub totally_ramified_at_p: CheckOutcome,
    /// Shift witness c with f(x+c) Eisenstein at p, when found.
    pub eisenstein_shift: Option<u64>,
    pub two_inert: CheckOutcome,
    pub overall: CertificateOutcome,
    pub notes: Vec<String>,
    pub citations: Vec<Citation>,
}

/// Run the certificate checks for a monic integer polynomial and an odd
/// prime p: (a) degree p^n with equal-degree factorization at every sampled
/// prime up to `sample_bound` and total reality, (b) p totally ramified
/// witnessed by a shifted Eisenstein polynomial, (c) 2 inert.
///
/// The Galois check is sampling evidence, not proof: equal residue degrees
/// at every unramified prime are necessary for a Galois field but not
/// sufficient over a finite sample. Everything else is exact.
pub fn certify_general_field(
    poly: &IntPolynomial,
    p: u64,
    sample_bound: u64,
) -> Result<CertificateReport> {
    if !is_prime_u64(p) || p < 3 {
        return Err(Error::invalid(format!("p must be an odd prime, got {p}")));
    }
    let degree = poly
        .degree()
        .ok_or_else(|| Error::invalid("polynomial must be nonzero"))?;
    if degree < 1 || !poly.is_monic() {
        return Err(Error::invalid("polynomial must be monic of degree >= 1"));
    }
    if sample_bound < 3 {
        return Err(Error::invalid("sample bound must be >= 3"));
    }

    let mut notes = Vec::new();

    // (a) degree = p^n
    let mut n: Option<u32> = None;
    {
        let mut d = degree as u64;
        let mut k = 0u32;
        while d % p == 0 {
            d /= p;
            k += 1;
        }
        if d == 1 && k >= 1 {
            n = Some(k);
        }
    }
    let degree_is_p_power = if n.is_some() { CheckOutcome::Pass } else { CheckOutcome::Fail };
    if n.is_none() {
        notes.push(format!("degree {degree} is not a positive power of {p}"));
    }

    let field = NumberField::new(poly.clone())?;

    // (a) Galois evidence: all residue degrees equal at every sampled prime
    let mut galois_evidence = CheckOutcome::Pass;
    let mut galois_sampled = 0usize;
    let mut galois_failing: Option<u64> = None;
    for q in primes_below(sample_bound + 1) {
        if (field.disc() % Integer::from(q)).is_zero() {
            continue;
        }
        let pattern = splitting_pattern(&field, q)?;
        galois_sampled += 1;
        if !pattern.is_equal_degree() {
            galois_evidence = CheckOutcome::Fail;
            galois_failing = Some(q);
            notes.push(format!("splitting pattern {pattern} at q = {q} has unequal degrees"));
            break;
        }
    }
    if galois_sampled == 0 {
        galois_evidence = CheckOutcome::Inconclusive;
        notes.push("no sample primes available below the bound".into());
    }

    // (a) totally real
    let real_roots = poly.sturm_real_root_count()?;
    let totally_real = if real_roots == degree { CheckOutcome::Pass } else { CheckOutcome::Fail };
    if real_roots != degree {
        notes.push(format!("{real_roots} of {degree} roots are real"));
    }

    // (b) totally ramified at p: shifted-Eisenstein witness, with a sound
    // negative only when p does not divide the discriminant
    let p_int = Integer::from(p);
    let p_divides_disc = (field.disc() % &p_int).is_zero();
    let mut eisenstein_shift = None;
    let mut totally_ramified = CheckOutcome::Inconclusive;
    if !p_divides_disc {
        // p unramified in the field: totally ramified is definitively false
        totally_ramified = CheckOutcome::Fail;
        notes.push(format!("{p} does not divide the discriminant, so {p} is unramified"));
    } else {
        let p2 = Integer::from(p * p);
        for c in 0..p {
            let shifted = poly.shift(&Integer::from(c));
            let low_divisible = shifted
                .coeffs()
                .iter()
                .take(degree)
                .all(|coef| (coef % &p_int).is_zero());
            if low_divisible {
                if !(shifted.coeff(0) % &p2).is_zero() {
                    eisenstein_shift = Some(c);
                    totally_ramified = CheckOutcome::Pass;
                } else {
                    notes.push(format!(
                        "f(x+{c}) ≡ x^{degree} (mod {p}) but p^2 divides the constant term; \
                         no Eisenstein witness"
                    ));
                }
                break;
            }
        }
        if totally_ramified == CheckOutcome::Inconclusive && eisenstein_shift.is_none() {
            notes.push(format!(
                "no shift makes the polynomial Eisenstein at {p}; total ramification \
                 cannot be decided in this presentation"
            ));
        }
    }

    // (c) 2 inert
    let two_inert = match splitting_pattern(&field, 2) {
        Ok(pattern) => {
            if pattern.is_inert() {
                CheckOutcome::Pass
            } else {
                notes.push(format!("2 has splitting pattern {pattern}"));
                CheckOutcome::Fail
            }
        }
        Err(Error::Inconclusive(msg)) => {
            notes.push(format!("2 | disc: {msg}"));
            CheckOutcome::Inconclusive
        }
        Err(e) => return Err(e),
    };

    let checks = [degree_is_p_power, galois_evidence, totally_real, totally_ramified, two_inert];
    let overall = if checks.contains(&CheckOutcome::Fail) {
        CertificateOutcome::Failed
    } else if checks.contains(&CheckOutcome::Inconclusive) {
        CertificateOutcome::Inconclusive
    } else if p >= 5 {
        CertificateOutcome::CertifiedEvidence
    } else {
        notes.push(format!(
            "all checks pass, but p = {p} is excluded by the hypothesis p >= 5"
        ));
        CertificateOutcome::Inconclusive
    };

    let citations = vec![CIT_GENERAL_P_EXTENSION, CIT_SUNIT_CRITERION];

    Ok(CertificateReport {
        poly: poly.clone(),
        p,
        n,
        degree_is_p_power,
        galois_evidence,
        galois_sampled_primes: galois_sampled,
        galois_failing_prime: galois_failing,
        totally_real,
        totally_ramified_at_p: totally_ramified,
        eisenstein_shift,
        two_inert,
        overall,
        notes,
        citations,
    })
}
