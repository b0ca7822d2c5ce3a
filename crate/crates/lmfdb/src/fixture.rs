//! Fixture snapshots: a single JSON header line (snapshot date, query,
//! count, provenance note), then one JSON record per line.

use crate::record::{FieldRecord, ParseIssue};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FixtureHeader {
    pub snapshot_date: String,
    /// The query this snapshot reconstructs, in API parameter form.
    pub query: String,
    pub count: usize,
    pub note: String,
}

/// Read a fixture file. Malformed record lines are collected as parse issues
/// and do not abort the read; a malformed header does.
pub fn read_fixture(path: &Path) -> Result<(FixtureHeader, Vec<FieldRecord>, Vec<ParseIssue>)> {
    let file = std::fs::File::open(path)?;
    let mut lines = BufReader::new(file).lines();
    let header_line = lines
        .next()
        .ok_or_else(|| Error::Fixture("empty fixture file".into()))??;
    let header: FixtureHeader = serde_json::from_str(&header_line)
        .map_err(|e| Error::Fixture(format!("bad header line: {e}")))?;
    let mut records = Vec::new();
    let mut issues = Vec::new();
    for (i, line) in lines.enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        match FieldRecord::from_json(&line) {
            Ok(r) => records.push(r),
            Err(message) => issues.push(ParseIssue { position: i + 2, message }),
        }
    }
    Ok((header, records, issues))
}

/// Write a fixture file (header line + one record per line).
pub fn write_fixture(path: &Path, header: &FixtureHeader, records: &[FieldRecord]) -> Result<()> {
    let mut out = std::fs::File::create(path)?;
    writeln!(out, "{}", serde_json::to_string(header).expect("header serializes"))?;
    for r in records {
        writeln!(out, "{}", r.to_json())?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use zpflt_core::{Integer, IntPolynomial};

    fn records() -> Vec<FieldRecord> {
        vec![
            FieldRecord {
                label: "5.5.390625.1".into(),
                defining_poly: IntPolynomial::from_i64(&[1, 10, 5, -10, 0, 1]),
                degree: 5,
                disc: Integer::from(390625u64),
                galois_label: "5T1".into(),
            },
            FieldRecord {
                label: "5.5.5718140625.1".into(),
                defining_poly: IntPolynomial::from_i64(&[-451, -990, -605, -110, 0, 1]),
                degree: 5,
                disc: Integer::from(5718140625u64),
                galois_label: "5T1".into(),
            },
        ]
    }

    #[test]
    fn fixture_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("snap.jsonl");
        let header = FixtureHeader {
            snapshot_date: "2024-01-01".into(),
            query: "degree=5&galois_label=5T1".into(),
            count: 2,
            note: "test".into(),
        };
        let recs = records();
        write_fixture(&path, &header, &recs).unwrap();
        let (h2, r2, issues) = read_fixture(&path).unwrap();
        assert_eq!(h2, header);
        assert_eq!(r2, recs);
        assert!(issues.is_empty());
        // byte-identical on rewrite
        let bytes1 = std::fs::read(&path).unwrap();
        write_fixture(&path, &h2, &r2).unwrap();
        assert_eq!(std::fs::read(&path).unwrap(), bytes1);
    }

    #[test]
    fn malformed_lines_are_collected_not_fatal() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("snap.jsonl");
        let header = FixtureHeader {
            snapshot_date: "2024-01-01".into(),
            query: "q".into(),
            count: 1,
            note: String::new(),
        };
        let recs = records();
        let mut content = serde_json::to_string(&header).unwrap() + "\n";
        content += &recs[0].to_json();
        content += "\n{not json}\n";
        content += &recs[1].to_json();
        content += "\n";
        std::fs::write(&path, content).unwrap();
        let (_, r, issues) = read_fixture(&path).unwrap();
        assert_eq!(r.len(), 2);
        assert_eq!(issues.len(), 1);
        assert_eq!(issues[0].position, 3);
    }

    #[test]
    fn bad_header_is_fatal() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("snap.jsonl");
        std::fs::write(&path, "oops\n").unwrap();
        assert!(read_fixture(&path).is_err());
    }
}
