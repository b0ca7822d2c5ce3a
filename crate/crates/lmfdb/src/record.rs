//! Number-field records as exchanged with the database and the fixtures.

use serde::{Deserialize, Serialize};
use std::str::FromStr;
use zpflt_core::{Integer, IntPolynomial};

/// One number field: label, defining polynomial, degree, field discriminant,
/// and the Galois group label. Coefficients and discriminants are carried as
/// decimal strings on the wire so nothing is truncated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldRecord {
    pub label: String,
    pub defining_poly: IntPolynomial,
    pub degree: u32,
    pub disc: Integer,
    pub galois_label: String,
}

/// Wire form of a record.
#[derive(Serialize, Deserialize)]
struct WireRecord {
    label: String,
    /// ascending coefficients, decimal strings
    coeffs: Vec<String>,
    degree: u32,
    disc: String,
    galois_label: String,
}

/// A record that failed to parse; collected, never fatal.
#[derive(Clone, Debug)]
pub struct ParseIssue {
    /// 1-based position in the source (line number for fixtures, array index
    /// for API pages).
    pub position: usize,
    pub message: String,
}

impl FieldRecord {
    pub fn to_json(&self) -> String {
        let wire = WireRecord {
            label: self.label.clone(),
            coeffs: self.defining_poly.coeffs().iter().map(|c| c.to_string()).collect(),
            degree: self.degree,
            disc: self.disc.to_string(),
            galois_label: self.galois_label.clone(),
        };
        serde_json::to_string(&wire).expect("record serializes")
    }

    pub fn from_json(s: &str) -> Result<FieldRecord, String> {
        let wire: WireRecord = serde_json::from_str(s).map_err(|e| e.to_string())?;
        Self::from_wire(wire)
    }

    pub fn from_json_value(v: &serde_json::Value) -> Result<FieldRecord, String> {
        let wire: WireRecord =
            serde_json::from_value(v.clone()).map_err(|e| e.to_string())?;
        Self::from_wire(wire)
    }

    fn from_wire(wire: WireRecord) -> Result<FieldRecord, String> {
        let mut coeffs = Vec::with_capacity(wire.coeffs.len());
        for c in &wire.coeffs {
            coeffs.push(Integer::from_str(c).map_err(|e| format!("coefficient {c:?}: {e}"))?);
        }
        let poly = IntPolynomial::new(coeffs);
        let deg = poly.degree().ok_or("zero defining polynomial")?;
        if deg as u32 != wire.degree {
            return Err(format!(
                "degree field {} does not match the polynomial degree {deg}",
                wire.degree
            ));
        }
        let disc = Integer::from_str(&wire.disc).map_err(|e| format!("disc: {e}"))?;
        Ok(FieldRecord {
            label: wire.label,
            defining_poly: poly,
            degree: wire.degree,
            disc,
            galois_label: wire.galois_label,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> FieldRecord {
        FieldRecord {
            label: "5.5.390625.1".into(),
            defining_poly: IntPolynomial::from_i64(&[1, 10, 5, -10, 0, 1]),
            degree: 5,
            disc: Integer::from(390625u64),
            galois_label: "5T1".into(),
        }
    }

    #[test]
    fn round_trip_is_lossless() {
        let r = sample();
        let json = r.to_json();
        let back = FieldRecord::from_json(&json).unwrap();
        assert_eq!(back, r);
        // and the serialization is stable
        assert_eq!(back.to_json(), json);
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let json = r#"{"label":"x","coeffs":["1","1"],"degree":5,"disc":"1","galois_label":"5T1"}"#;
        assert!(FieldRecord::from_json(json).is_err());
    }

    #[test]
    fn huge_coefficients_survive() {
        let big = "123456789012345678901234567890123456789";
        let json = format!(
            r#"{{"label":"x","coeffs":["{big}","0","1"],"degree":2,"disc":"-{big}","galois_label":"2T1"}}"#
        );
        let r = FieldRecord::from_json(&json).unwrap();
        assert_eq!(r.defining_poly.coeff(0).to_string(), big);
        assert_eq!(r.disc.to_string(), format!("-{big}"));
    }
}
