//! Bounded enumeration of solutions to the unit equation λ + μ = 1 in units,
//! and to the S-unit equation with S the prime above an inert 2.
//!
//! The search box is all λ whose numerator coordinates over the power basis
//! are bounded by a height H and whose denominator exponent is bounded by t.
//! Enumeration order: modular "norm screens" at totally split primes reject
//! almost every candidate with a handful of word-sized multiplications, the
//! rare survivors get an exact resultant check, and only verified solutions
//! are materialized. The box is partitioned into disjoint slabs processed in
//! parallel; results are merged and sorted, so output order is deterministic.
//!
//! After enumeration the solution set is closed under the symmetry group of
//! the equation, generated by (λ,μ) ↦ (μ,λ) and (λ,μ) ↦ (1/λ, -μ/λ). Orbit
//! members that fall outside the box are reported separately: they are
//! evidence that the height bound was too small, not part of the in-box
//! count.

use crate::arith::{is_pow2, Integer};
use crate::error::{Error, Result};
use crate::modpoly::ModPolynomial;
use crate::nf::{FieldElement, InertPrimeContext, NumberField};
use crate::poly::IntPolynomial;
use num::{One, Signed, Zero};
use rayon::prelude::*;
use std::fmt;

/// Bounds for the S-unit search: `height` is the maximum absolute power-basis
/// coordinate of the numerator, `denom_bound` the maximum denominator
/// exponent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub height: i64,
    pub denom_bound: u32,
}

impl SearchConfig {
    pub fn new(height: i64, denom_bound: u32) -> Result<Self> {
        if height < 1 {
            return Err(Error::invalid("height bound must be >= 1"));
        }
        Ok(SearchConfig { height, denom_bound })
    }
}

/// Classification of a solution by the pair (ord_q λ, ord_q μ):
/// (1,0) → i, (0,1) → ii, (-1,-1) → iii, (0,0) → unit-unit, rest → other.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SolutionClass {
    I,
    II,
    III,
    UnitUnit,
    Other,
}

impl SolutionClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            SolutionClass::I => "i",
            SolutionClass::II => "ii",
            SolutionClass::III => "iii",
            SolutionClass::UnitUnit => "unit-unit",
            SolutionClass::Other => "other",
        }
    }
}

impl fmt::Display for SolutionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Classify by the order signature.
pub fn classify_ords(ord_lambda: i64, ord_mu: i64) -> SolutionClass {
    match (ord_lambda, ord_mu) {
        (1, 0) => SolutionClass::I,
        (0, 1) => SolutionClass::II,
        (-1, -1) => SolutionClass::III,
        (0, 0) => SolutionClass::UnitUnit,
        _ => SolutionClass::Other,
    }
}

/// A verified solution pair: λ + μ = 1 exactly, both components S-units.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SUnitSolution {
    pub lambda: FieldElement,
    pub mu: FieldElement,
    pub ord_lambda: i64,
    pub ord_mu: i64,
    pub class: SolutionClass,
}

impl SUnitSolution {
    fn sort_key(&self) -> (u32, Vec<Integer>) {
        (self.lambda.denom_exp(), self.lambda.coords().to_vec())
    }
}

impl fmt::Display for SUnitSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(λ, μ) = ({}, {})  ord = ({}, {})  class {}",
            self.lambda, self.mu, self.ord_lambda, self.ord_mu, self.class
        )
    }
}

/// Result of a bounded search.
#[derive(Clone, Debug, Default)]
pub struct SearchOutcome {
    /// Solutions whose λ lies inside the search box, in lexicographic order
    /// of (denominator exponent, numerator coordinates).
    pub solutions: Vec<SUnitSolution>,
    /// Orbit-closure members outside the box: the symmetry group of the
    /// equation produced a solution the bound missed.
    pub escaped: Vec<SUnitSolution>,
    /// Orbit members that could not be represented in the working ring
    /// (should not occur for S-units; reported rather than dropped).
    pub closure_failures: Vec<String>,
}

impl SearchOutcome {
    /// In-box solutions followed by escaped orbit members.
    pub fn all_solutions(&self) -> impl Iterator<Item = &SUnitSolution> {
        self.solutions.iter().chain(self.escaped.iter())
    }

    pub fn total_count(&self) -> usize {
        self.solutions.len() + self.escaped.len()
    }
}

/// What the exact check accepts for the numerator norm.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum NormTarget {
    /// |N| = 1: unit equation in the order of the presentation.
    UnitOnly,
    /// |N| = 2^k: S-unit with support in the prime above 2.
    TwoPower,
}

impl NormTarget {
    fn accepts(&self, n: &Integer) -> bool {
        match self {
            NormTarget::UnitOnly => n.abs().is_one(),
            NormTarget::TwoPower => is_pow2(n),
        }
    }
}

/// A modular rejection filter at a totally split odd prime q < 2^16:
/// N(g(θ)) ≡ Π g(r_j) (mod q) over the roots of f mod q, so the residue of
/// the norm costs a few word multiplications, and a candidate whose residue
/// is not an allowed value (±1, or ±2^j) cannot be a solution.
struct Screen {
    q: u32,
    /// pows[i][j] = r_j^i mod q
    pows: Vec<Vec<u32>>,
    allowed: Vec<bool>,
}

impl Screen {
    fn degree(&self) -> usize {
        self.pows.first().map_or(0, |row| row.len())
    }

    /// Norm residue of the numerator with coordinates `coords` (0 means
    /// rejectable immediately: zero is never allowed).
    fn norm_residue(&self, coords: &[i64]) -> u32 {
        let q = self.q as u64;
        let d = self.degree();
        let mut prod: u64 = 1;
        for j in 0..d {
            let mut val: u64 = 0;
            for (i, &c) in coords.iter().enumerate() {
                let cm = c.rem_euclid(self.q as i64) as u64;
                val = (val + cm * self.pows[i][j] as u64) % q;
            }
            prod = prod * val % q;
            if prod == 0 {
                return 0;
            }
        }
        prod as u32
    }
}

/// Pick up to `want` screen primes for the field: odd primes q < 2^16 not
/// dividing the discriminant at which the defining polynomial splits into
/// distinct linear factors, preferring a small allowed fraction |A|/q.
fn select_screens(field: &NumberField, target: NormTarget, want: usize) -> Vec<Screen> {
    let d = field.degree();
    let mut candidates: Vec<(f64, Screen)> = Vec::new();
    let mut q: u64 = 3;
    let mut inspected = 0usize;
    while candidates.len() < want * 6 && q < 65536 && inspected < 4000 {
        if crate::arith::is_prime_u64(q) {
            inspected += 1;
            if !(field.disc() % Integer::from(q)).is_zero() {
                if let Ok(mp) = ModPolynomial::reduce(field.defining_poly(), q) {
                    if let Ok(degs) = mp.factor_degrees() {
                        if degs.len() == d && degs.iter().all(|&x| x == 1) {
                            let roots = mp.roots();
                            debug_assert_eq!(roots.len(), d);
                            let mut pows = vec![vec![0u32; d]; d];
                            for (j, &r) in roots.iter().enumerate() {
                                let mut acc = 1u64;
                                for row in pows.iter_mut() {
                                    row[j] = acc as u32;
                                    acc = acc * r % q;
                                }
                            }
                            let mut allowed = vec![false; q as usize];
                            match target {
                                NormTarget::UnitOnly => {
                                    allowed[1] = true;
                                    allowed[(q - 1) as usize] = true;
                                }
                                NormTarget::TwoPower => {
                                    let mut t = 1u64;
                                    loop {
                                        allowed[t as usize] = true;
                                        allowed[(q - t) as usize] = true;
                                        t = t * 2 % q;
                                        if t == 1 {
                                            break;
                                        }
                                    }
                                }
                            }
                            let frac =
                                allowed.iter().filter(|&&b| b).count() as f64 / q as f64;
                            candidates.push((frac, Screen { q: q as u32, pows, allowed }));
                        }
                    }
                }
            }
        }
        q += 2;
    }
    candidates.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    candidates.into_iter().take(want).map(|(_, s)| s).collect()
}

/// Scan one slab (the top coordinates fixed) against the first screen.
fn scan_slab(screen: &Screen, h: i64, d: usize, fixed_top: &[i64], survivors: &mut Vec<Vec<i64>>) {
    let q = screen.q as u64;
    let span = (2 * h + 1) as usize;
    let cmod: Vec<u32> = (-h..=h).map(|c| c.rem_euclid(screen.q as i64) as u32).collect();
    let free = d - fixed_top.len();
    debug_assert!(free >= 1);
    let mut base = vec![0u32; d];
    for (k, &c) in fixed_top.iter().enumerate() {
        let i = d - 1 - k;
        let cm = c.rem_euclid(screen.q as i64) as u64;
        for j in 0..d {
            base[j] = ((base[j] as u64 + cm * screen.pows[i][j] as u64) % q) as u32;
        }
    }
    let mut coords = vec![0i64; d];
    for (k, &c) in fixed_top.iter().enumerate() {
        coords[d - 1 - k] = c;
    }

    #[allow(clippy::too_many_arguments)]
    fn rec(
        screen: &Screen,
        level: usize,
        vals: &[u32],
        coords: &mut [i64],
        cmod: &[u32],
        h: i64,
        span: usize,
        survivors: &mut Vec<Vec<i64>>,
    ) {
        let q = screen.q as u64;
        let d = vals.len();
        if level == 0 {
            let mut w: Vec<u32> =
                vals.iter().map(|&v| ((v as u64 + cmod[0] as u64) % q) as u32).collect();
            for s in 0..span {
                let mut prod: u64 = 1;
                let mut pending = 0u32;
                for &wj in w.iter() {
                    if wj == 0 {
                        prod = 0;
                        break;
                    }
                    prod *= wj as u64;
                    pending += 1;
                    // values are < 2^16, so at most four factors fit in u64
                    if pending == 3 {
                        prod %= q;
                        pending = 0;
                    }
                }
                if prod != 0 && screen.allowed[(prod % q) as usize] {
                    coords[0] = s as i64 - h;
                    survivors.push(coords.to_vec());
                }
                if s + 1 < span {
                    for wj in w.iter_mut() {
                        *wj += 1;
                        if *wj as u64 == q {
                            *wj = 0;
                        }
                    }
                }
            }
            return;
        }
        let mut child = vec![0u32; d];
        for s in 0..span {
            let cm = cmod[s] as u64;
            for j in 0..d {
                child[j] = ((vals[j] as u64 + cm * screen.pows[level][j] as u64) % q) as u32;
            }
            coords[level] = s as i64 - h;
            rec(screen, level - 1, &child, coords, cmod, h, span, survivors);
        }
    }

    rec(screen, free - 1, &base, &mut coords, &cmod, h, span, survivors);
}

/// Fallback without screens: exact resultant at every box point. Only used
/// when no totally split screen prime exists for the presentation.
fn scan_slab_exact(
    field: &NumberField,
    target: NormTarget,
    h: i64,
    d: usize,
    fixed_top: &[i64],
    survivors: &mut Vec<Vec<i64>>,
) {
    let free = d - fixed_top.len();
    let mut coords = vec![0i64; d];
    for (k, &c) in fixed_top.iter().enumerate() {
        coords[d - 1 - k] = c;
    }
    let mut idx = vec![0usize; free];
    let span = (2 * h + 1) as usize;
    loop {
        for (i, &s) in idx.iter().enumerate() {
            coords[i] = s as i64 - h;
        }
        if coords.iter().any(|&c| c != 0) {
            let g = IntPolynomial::new(coords.iter().map(|&c| Integer::from(c)).collect());
            let n = field.defining_poly().resultant(&g);
            if target.accepts(&n) {
                survivors.push(coords.clone());
            }
        }
        let mut level = 0;
        loop {
            if level == free {
                return;
            }
            idx[level] += 1;
            if idx[level] < span {
                break;
            }
            idx[level] = 0;
            level += 1;
        }
    }
}

fn box_points(h: i64, d: usize) -> Result<u128> {
    let span = (2 * h + 1) as u128;
    let mut total: u128 = 1;
    for _ in 0..d {
        total = total
            .checked_mul(span)
            .ok_or_else(|| Error::invalid("search box overflows"))?;
        if total > 4_000_000_000_000u128 {
            return Err(Error::invalid(format!(
                "search box (2·{h}+1)^{d} is too large to enumerate"
            )));
        }
    }
    Ok(total)
}

/// Core box enumeration: all numerator coordinate vectors within the height
/// bound whose numerator norm passes `target` exactly.
fn enumerate_candidates(field: &NumberField, h: i64, target: NormTarget) -> Result<Vec<Vec<i64>>> {
    let d = field.degree();
    box_points(h, d)?;
    let screens = select_screens(field, target, 3);
    let slabs: Vec<Vec<i64>> = if d >= 3 {
        let mut v = Vec::with_capacity(((2 * h + 1) * (2 * h + 1)) as usize);
        for a in -h..=h {
            for b in -h..=h {
                v.push(vec![a, b]);
            }
        }
        v
    } else {
        (-h..=h).map(|a| vec![a]).collect()
    };

    let raw: Vec<Vec<Vec<i64>>> = slabs
        .par_iter()
        .map(|top| {
            let mut out = Vec::new();
            match screens.first() {
                Some(s0) => scan_slab(s0, h, d, top, &mut out),
                None => scan_slab_exact(field, target, h, d, top, &mut out),
            }
            out
        })
        .collect();

    let survivors: Vec<Vec<i64>> = raw.into_iter().flatten().collect();

    // secondary screens, then the exact resultant check
    let verified: Vec<Vec<i64>> = survivors
        .into_par_iter()
        .filter(|coords| {
            for s in screens.iter().skip(1) {
                let r = s.norm_residue(coords);
                if !s.allowed[r as usize] {
                    return false;
                }
            }
            if coords.iter().all(|&c| c == 0) {
                return false;
            }
            let g = IntPolynomial::new(coords.iter().map(|&c| Integer::from(c)).collect());
            let n = field.defining_poly().resultant(&g);
            target.accepts(&n)
        })
        .collect();
    Ok(verified)
}

fn element_from_coords(field: &NumberField, coords: &[i64], denom_exp: u32) -> FieldElement {
    field
        .element(coords.iter().map(|&c| Integer::from(c)).collect(), denom_exp)
        .expect("coordinate length matches the degree")
}

fn make_solution(
    ctx: Option<&InertPrimeContext>,
    lambda: FieldElement,
    mu: FieldElement,
) -> Result<SUnitSolution> {
    debug_assert!((&lambda + &mu).is_one(), "solution pair must sum to 1 exactly");
    let (ord_lambda, ord_mu) = match ctx {
        Some(ctx) => (ctx.ord_at_q(&lambda)?, ctx.ord_at_q(&mu)?),
        None => (0, 0), // units have order 0 at every prime
    };
    let class = classify_ords(ord_lambda, ord_mu);
    Ok(SUnitSolution { lambda, mu, ord_lambda, ord_mu, class })
}

/// Close the found set under (λ,μ) ↦ (μ,λ) and (λ,μ) ↦ (1/λ, -μ/λ), then
/// split into in-box solutions and escaped orbit members.
fn close_under_symmetries(
    ctx: Option<&InertPrimeContext>,
    target: NormTarget,
    h: i64,
    t: u32,
    found: Vec<SUnitSolution>,
) -> Result<SearchOutcome> {
    let in_box = |e: &FieldElement| -> bool {
        e.denom_exp() <= t && e.coords().iter().all(|c| c.abs() <= Integer::from(h))
    };
    let key = |e: &FieldElement| (e.denom_exp(), e.coords().to_vec());

    let mut seen: std::collections::HashSet<(u32, Vec<Integer>)> =
        found.iter().map(|s| key(&s.lambda)).collect();
    let mut all: Vec<SUnitSolution> = found;
    let mut failures: Vec<String> = Vec::new();
    let mut frontier: Vec<usize> = (0..all.len()).collect();

    while !frontier.is_empty() {
        let mut next = Vec::new();
        for idx in frontier {
            let (lam, mu) = (all[idx].lambda.clone(), all[idx].mu.clone());
            let mut images: Vec<(FieldElement, FieldElement)> = vec![(mu.clone(), lam.clone())];
            match lam.inverse() {
                Ok(inv_lam) => {
                    let mu_img = &(-&mu) * &inv_lam;
                    images.push((inv_lam, mu_img));
                }
                Err(e) => {
                    failures.push(format!("could not invert λ = {lam}: {e}"));
                }
            }
            for (l2, m2) in images {
                if seen.contains(&key(&l2)) {
                    continue;
                }
                debug_assert!(target.accepts(&l2.numerator_norm()));
                seen.insert(key(&l2));
                let sol = make_solution(ctx, l2, m2)?;
                // an in-box orbit member the enumeration missed would be a
                // completeness bug, not a reporting matter
                if in_box(&sol.lambda) {
                    return Err(Error::InternalConsistency(format!(
                        "orbit closure found an in-box solution the search missed: λ = {}",
                        sol.lambda
                    )));
                }
                all.push(sol);
                next.push(all.len() - 1);
            }
        }
        frontier = next;
    }

    let mut solutions = Vec::new();
    let mut escaped = Vec::new();
    for sol in all {
        if in_box(&sol.lambda) {
            solutions.push(sol);
        } else {
            escaped.push(sol);
        }
    }
    solutions.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    escaped.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    Ok(SearchOutcome { solutions, escaped, closure_failures: failures })
}

/// All solutions to λ + μ = 1 with λ, μ units of Z[θ], λ integral with
/// coordinates bounded by `height` — plus orbit-closure members beyond the
/// bound, reported as escaped. Solutions are ordered pairs: (λ, μ) and
/// (μ, λ) both count.
pub fn enumerate_unit_solutions(field: &NumberField, height: i64) -> Result<SearchOutcome> {
    if field.degree() < 2 {
        return Err(Error::invalid("unit-equation search requires degree >= 2"));
    }
    if height < 1 {
        return Err(Error::invalid("height bound must be >= 1"));
    }
    let candidates = enumerate_candidates(field, height, NormTarget::UnitOnly)?;
    let mut found = Vec::new();
    for coords in candidates {
        let lambda = element_from_coords(field, &coords, 0);
        let mu = &field.one() - &lambda;
        if mu.is_zero() {
            continue;
        }
        if NormTarget::UnitOnly.accepts(&mu.numerator_norm()) {
            found.push(make_solution(None, lambda, mu)?);
        }
    }
    close_under_symmetries(None, NormTarget::UnitOnly, height, 0, found)
}

/// All solutions to λ + μ = 1 in S-units of Z[θ][1/2], with λ's numerator
/// coordinates bounded by the height and its denominator exponent by the
/// denominator bound, each verified exactly and classified by order
/// signature. Orbit-closure members beyond the bounds are reported as
/// escaped.
pub fn enumerate_sunit_solutions(
    field: &NumberField,
    ctx: &InertPrimeContext,
    config: &SearchConfig,
) -> Result<SearchOutcome> {
    if field.degree() < 2 {
        return Err(Error::invalid("S-unit search requires degree >= 2"));
    }
    if config.height < 1 {
        return Err(Error::invalid("height bound must be >= 1"));
    }
    if ctx.field() != field {
        return Err(Error::invalid("inert-prime context belongs to a different field"));
    }
    let h = config.height;
    let t = config.denom_bound;
    let candidates = enumerate_candidates(field, h, NormTarget::TwoPower)?;
    let mut found = Vec::new();
    for coords in &candidates {
        for e in 0..=t {
            // reduced representatives only: an all-even numerator with e > 0
            // duplicates a smaller box point
            if e > 0 && coords.iter().all(|&c| c % 2 == 0) {
                continue;
            }
            let lambda = element_from_coords(field, coords, e);
            let mu = &field.one() - &lambda;
            if mu.is_zero() {
                continue;
            }
            if ctx.is_s_unit(&mu) {
                found.push(make_solution(Some(ctx), lambda, mu)?);
            }
        }
    }
    close_under_symmetries(Some(ctx), NormTarget::TwoPower, h, t, found)
}

/// Per-solution check of the criterion on order signatures:
/// max(|ord λ|, |ord μ|) <= 4 and ord λ + ord μ ≡ 1 (mod 3).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CriterionCheck {
    pub ord_lambda: i64,
    pub ord_mu: i64,
    pub max_ord_bounded: bool,
    pub ord_sum_congruent: bool,
}

impl CriterionCheck {
    pub fn passes(&self) -> bool {
        self.max_ord_bounded && self.ord_sum_congruent
    }
}

/// Criterion report over a solution list.
#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub checks: Vec<CriterionCheck>,
    pub all_pass: bool,
}

pub fn check_sunit_criterion(solutions: &[SUnitSolution]) -> CriterionReport {
    let checks: Vec<CriterionCheck> = solutions
        .iter()
        .map(|s| CriterionCheck {
            ord_lambda: s.ord_lambda,
            ord_mu: s.ord_mu,
            max_ord_bounded: s.ord_lambda.abs().max(s.ord_mu.abs()) <= 4,
            ord_sum_congruent: (s.ord_lambda + s.ord_mu).rem_euclid(3) == 1,
        })
        .collect();
    let all_pass = checks.iter().all(|c| c.passes());
    CriterionReport { checks, all_pass }
}
