//! Offline fixture generator: builds the snapshot of totally real quintic
//! C5 fields with 5 totally ramified and 2 inert, smallest discriminants
//! first, with Gaussian-period defining polynomials computed exactly.
//!
//! A field of this kind is abelian of conductor f = 25·m, m a squarefree
//! product of primes ≡ 1 (mod 5); it corresponds to an index-5 subgroup
//! H ≤ (Z/f)^× whose quintic character is nontrivial on every local
//! component (conductor exactly f) and nontrivial at 2 (inertness). The
//! field discriminant is f^4 by the conductor-discriminant formula, so
//! ordering by conductor orders by discriminant.
//!
//! Every record is verified before it is written: degree 5, totally real,
//! irreducible mod 2, Eisenstein-shiftable at 5, and disc(poly)/f^4 an odd
//! square prime to 5.
//!
//! Usage: make-fixture <output-path> [count]

use num::Zero;
use std::collections::BTreeMap;
use std::path::PathBuf;
use zpflt_core::arith::{perfect_sqrt, powmod_u64, Integer};
use zpflt_core::layers::gaussian_period_polynomial;
use zpflt_core::modpoly::ModPolynomial;
use zpflt_core::nf::{splitting_pattern, NumberField};
use zpflt_core::IntPolynomial;
use zpflt_lmfdb::{write_fixture, FieldRecord, FixtureHeader};

fn primitive_root(modulus: u64, group_order: u64) -> u64 {
    let mut prime_factors = Vec::new();
    let mut n = group_order;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            prime_factors.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        prime_factors.push(n);
    }
    for g in 2..modulus {
        if num::integer::gcd(g, modulus) != 1 {
            continue;
        }
        if prime_factors.iter().all(|&r| powmod_u64(g, group_order / r, modulus) != 1) {
            return g;
        }
    }
    panic!("no primitive root mod {modulus}");
}

/// Component of (Z/f)^×: modulus P (25 or a prime ≡ 1 mod 5) with a
/// discrete-log table to a fixed generator.
struct Component {
    modulus: u64,
    dlog: Vec<u32>,
}

impl Component {
    fn new(modulus: u64) -> Self {
        let order = if modulus == 25 { 20 } else { modulus - 1 };
        assert_eq!(order % 5, 0, "component {modulus} admits no quintic character");
        let g = primitive_root(modulus, order);
        let mut dlog = vec![u32::MAX; modulus as usize];
        let mut x = 1u64;
        for e in 0..order {
            dlog[x as usize] = e as u32;
            x = x * g % modulus;
        }
        Component { modulus, dlog }
    }

    /// Exponent of the quintic character with parameter x on the residue a:
    /// x·dlog(a) mod 5. Well defined because 5 divides the component order.
    fn chi_exp(&self, x: u64, a: u64) -> u64 {
        let d = self.dlog[(a % self.modulus) as usize];
        debug_assert_ne!(d, u32::MAX, "residue not coprime to component modulus");
        x * d as u64 % 5
    }
}

/// m squarefree with every prime factor ≡ 1 (mod 5)? (m = 1 included)
fn admissible_m(m: u64) -> bool {
    let mut n = m;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            if d % 5 != 1 {
                return false;
            }
            n /= d;
            if n % d == 0 {
                return false;
            }
        }
        d += 1;
    }
    if n > 1 && n % 5 != 1 {
        return false;
    }
    true
}

struct CandidateField {
    conductor: u64,
    poly: IntPolynomial,
}

/// All fields of conductor exactly 25·m with 2 inert.
fn fields_of_conductor(m: u64) -> Vec<CandidateField> {
    let f = 25 * m;
    let mut component_moduli = vec![25u64];
    {
        let mut n = m;
        let mut d = 2;
        while d * d <= n {
            if n % d == 0 {
                component_moduli.push(d);
                n /= d;
            } else {
                d += 1;
            }
        }
        if n > 1 {
            component_moduli.push(n);
        }
    }
    let comps: Vec<Component> = component_moduli.iter().map(|&p| Component::new(p)).collect();
    let r = comps.len();

    // characters normalized to x_0 = 1; x_i in 1..=4 on the other components
    // so the conductor is exactly f
    let mut xs = vec![1u64; r];
    let mut out = Vec::new();
    loop {
        let chi2: u64 =
            comps.iter().zip(&xs).map(|(c, &x)| c.chi_exp(x, 2)).sum::<u64>() % 5;
        if chi2 != 0 {
            let mut subgroup = Vec::new();
            for a in 1..f {
                if num::integer::gcd(a, f) != 1 {
                    continue;
                }
                let e: u64 =
                    comps.iter().zip(&xs).map(|(c, &x)| c.chi_exp(x, a)).sum::<u64>() % 5;
                if e == 0 {
                    subgroup.push(a);
                }
            }
            let poly = gaussian_period_polynomial(f, &subgroup)
                .expect("period polynomial construction");
            out.push(CandidateField { conductor: f, poly });
        }
        // odometer over xs[1..]
        let mut i = 1;
        while i < r {
            xs[i] += 1;
            if xs[i] <= 4 {
                break;
            }
            xs[i] = 1;
            i += 1;
        }
        if i >= r {
            return out;
        }
    }
}

fn verify_record(c: &CandidateField) -> FieldRecord {
    let poly = &c.poly;
    let five = Integer::from(5);
    assert_eq!(poly.degree(), Some(5), "conductor {}: wrong degree", c.conductor);
    assert_eq!(
        poly.sturm_real_root_count().expect("squarefree"),
        5,
        "conductor {}: not totally real",
        c.conductor
    );
    // irreducible mod 2 (which also proves irreducibility over Z)
    let mod2 = ModPolynomial::reduce(poly, 2).unwrap();
    assert_eq!(
        mod2.factor_degrees().expect("squarefree mod 2"),
        vec![5],
        "conductor {}: 2 not inert in the presentation",
        c.conductor
    );
    // Eisenstein-shiftable at 5
    let mut eisenstein = false;
    for shift in 0..5i64 {
        let shifted = poly.shift(&Integer::from(shift));
        if shifted.coeffs().iter().take(5).all(|x| (x % &five).is_zero()) {
            eisenstein = !(shifted.coeff(0) % Integer::from(25)).is_zero();
            break;
        }
    }
    assert!(eisenstein, "conductor {}: no Eisenstein witness at 5", c.conductor);
    // disc(poly) = f^4 · (odd square prime to 5)
    let disc = poly.discriminant().unwrap();
    let field_disc = num::pow::pow(Integer::from(c.conductor), 4);
    let (q, r) = num::Integer::div_rem(&disc, &field_disc);
    assert!(r.is_zero(), "conductor {}: disc(poly) not divisible by f^4", c.conductor);
    let index = perfect_sqrt(&q).unwrap_or_else(|| {
        panic!("conductor {}: disc cofactor {q} is not a perfect square", c.conductor)
    });
    assert!(
        num::Integer::is_odd(&index) && !(&index % &five).is_zero(),
        "conductor {}: index {index} interferes at 2 or 5",
        c.conductor
    );
    // field-level splitting oracle agrees that 2 is inert
    let field = NumberField::new(poly.clone()).unwrap();
    assert!(splitting_pattern(&field, 2).unwrap().is_inert());

    FieldRecord {
        label: String::new(), // assigned after the global sort
        defining_poly: poly.clone(),
        degree: 5,
        disc: field_disc,
        galois_label: "5T1".into(),
    }
}

fn main() {
    let mut args = std::env::args().skip(1);
    let out_path: PathBuf = args
        .next()
        .unwrap_or_else(|| "crates/lmfdb/fixtures/nf5_c5_snapshot.jsonl".into())
        .into();
    let want: usize = args.next().map(|s| s.parse().expect("count")).unwrap_or(153);

    let mut candidates: Vec<CandidateField> = Vec::new();
    let mut m = 0u64;
    while candidates.len() < want {
        m += 1;
        if !admissible_m(m) {
            continue;
        }
        let batch = fields_of_conductor(m);
        if !batch.is_empty() {
            eprintln!(
                "conductor {:>6}: {} fields with 2 inert (running total {})",
                25 * m,
                batch.len(),
                candidates.len() + batch.len()
            );
        }
        candidates.extend(batch);
    }

    // order by (disc, coefficients); disc = (25m)^4 is monotone in the conductor
    candidates.sort_by(|a, b| {
        (a.conductor, a.poly.coeffs().to_vec()).cmp(&(b.conductor, b.poly.coeffs().to_vec()))
    });
    candidates.truncate(want);

    let mut records: Vec<FieldRecord> = candidates.iter().map(verify_record).collect();
    // labels: degree.real-places.|disc|.k with k counting within equal disc
    let mut per_disc: BTreeMap<String, usize> = BTreeMap::new();
    for rec in records.iter_mut() {
        let key = rec.disc.to_string();
        let k = per_disc.entry(key.clone()).or_insert(0);
        *k += 1;
        rec.label = format!("5.5.{key}.{k}");
    }

    let header = FixtureHeader {
        snapshot_date: "2026-08-10".into(),
        query: "degree=5&galois_label=5T1&r2=0&r1=5&ramified=5-totally&inert=2".into(),
        count: records.len(),
        note: "offline reconstruction: the smallest-|disc| totally real quintic C5 fields \
               with 5 totally ramified and 2 inert, conductor 25m ordered by |disc| = (25m)^4; \
               defining polynomials are exact Gaussian-period presentations (not reduced); \
               labels are snapshot-local indices within each |disc|"
            .into(),
    };
    if let Some(dir) = out_path.parent() {
        std::fs::create_dir_all(dir).expect("create fixture directory");
    }
    write_fixture(&out_path, &header, &records).expect("write fixture");
    eprintln!("wrote {} records to {}", records.len(), out_path.display());
}
