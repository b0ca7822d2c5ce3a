//! Bulk certification of candidate records.

use crate::record::FieldRecord;
use rayon::prelude::*;
use zpflt_core::verdict::{certify_general_field, CertificateOutcome, CertificateReport};

/// Deterministic partition of certified records: input order is preserved
/// within each bucket.
#[derive(Debug, Default)]
pub struct FilterPartition {
    pub pass: Vec<(FieldRecord, CertificateReport)>,
    pub fail: Vec<(FieldRecord, CertificateReport)>,
    pub inconclusive: Vec<(FieldRecord, CertificateReport)>,
    /// Records the certifier rejected outright (bad inputs); the pipeline
    /// continues past them.
    pub errors: Vec<(FieldRecord, String)>,
}

impl FilterPartition {
    pub fn total(&self) -> usize {
        self.pass.len() + self.fail.len() + self.inconclusive.len() + self.errors.len()
    }
}

/// Run the field certifier over every record (certification is independent
/// per record and runs in parallel; the partition respects input order).
pub fn filter_by_theorem(records: &[FieldRecord], p: u64, sample_bound: u64) -> FilterPartition {
    let results: Vec<(FieldRecord, Result<CertificateReport, zpflt_core::Error>)> = records
        .par_iter()
        .map(|r| (r.clone(), certify_general_field(&r.defining_poly, p, sample_bound)))
        .collect();
    let mut out = FilterPartition::default();
    for (rec, res) in results {
        match res {
            Ok(report) => match report.overall {
                CertificateOutcome::CertifiedEvidence => out.pass.push((rec, report)),
                CertificateOutcome::Failed => out.fail.push((rec, report)),
                CertificateOutcome::Inconclusive => out.inconclusive.push((rec, report)),
            },
            Err(e) => out.errors.push((rec, e.to_string())),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use zpflt_core::{Integer, IntPolynomial};

    fn record(label: &str, coeffs: &[i64], disc: u64) -> FieldRecord {
        FieldRecord {
            label: label.into(),
            defining_poly: IntPolynomial::from_i64(coeffs),
            degree: coeffs.len() as u32 - 1,
            disc: Integer::from(disc),
            galois_label: "5T1".into(),
        }
    }

    #[test]
    fn partition_buckets() {
        let records = vec![
            record("good", &[1, 10, 5, -10, 0, 1], 390625),
            record("control", &[-2, 0, 0, 0, 0, 1], 50000), // x^5 - 2: fails
            record("wrong-degree", &[-2, 0, 1], 8),
        ];
        let part = filter_by_theorem(&records, 5, 100);
        assert_eq!(part.total(), 3);
        assert_eq!(part.pass.len(), 1);
        assert_eq!(part.pass[0].0.label, "good");
        assert_eq!(part.fail.len(), 2);
    }

    #[test]
    fn empty_input_empty_partitions() {
        let part = filter_by_theorem(&[], 5, 100);
        assert_eq!(part.total(), 0);
    }
}
