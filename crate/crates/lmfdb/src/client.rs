//! Paginated retrieval from the database API.
//!
//! Requests follow the documented response shape: a JSON object with a
//! `data` array and a `next` cursor (absent or empty when done). Transport
//! failures retry with bounded exponential backoff; when retries are
//! exhausted the crawl fails without surfacing partial results, but the
//! cursor state is persisted if a state path was supplied, so a rerun
//! resumes where it stopped.

use crate::record::{FieldRecord, ParseIssue};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::path::Path;
use std::time::Duration;

/// Environment variable that overrides the API endpoint.
pub const BASE_URL_ENV: &str = "LMFDB_BASE_URL";
const DEFAULT_BASE_URL: &str = "https://www.lmfdb.org";

#[derive(Clone, Debug)]
pub struct ClientConfig {
    pub base_url: String,
    pub timeout: Duration,
    pub max_retries: u32,
    pub backoff_base: Duration,
    /// Politeness cap on concurrent requests. The crawl is cursor-sequential,
    /// so at most one request is in flight; the cap documents the ceiling.
    pub max_in_flight: usize,
}

impl Default for ClientConfig {
    fn default() -> Self {
        ClientConfig {
            base_url: std::env::var(BASE_URL_ENV).unwrap_or_else(|_| DEFAULT_BASE_URL.into()),
            timeout: Duration::from_secs(30),
            max_retries: 3,
            backoff_base: Duration::from_millis(250),
            max_in_flight: 2,
        }
    }
}

/// Query for candidate fields.
#[derive(Clone, Debug)]
pub struct CandidateQuery {
    pub degree: u32,
    pub galois_label: Option<String>,
    pub totally_real: bool,
}

impl CandidateQuery {
    /// The reconstruction used throughout: degree-5 cyclic totally real.
    pub fn quintic_cyclic() -> Self {
        CandidateQuery { degree: 5, galois_label: Some("5T1".into()), totally_real: true }
    }

    pub fn to_query_string(&self) -> String {
        let mut s = format!("degree={}", self.degree);
        if let Some(g) = &self.galois_label {
            s.push_str(&format!("&galois_label={g}"));
        }
        if self.totally_real {
            s.push_str(&format!("&r2=0&r1={}", self.degree));
        }
        s
    }
}

/// Persisted crawl progress: the next cursor and everything fetched so far.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct CrawlState {
    pub cursor: Option<String>,
    pub record_lines: Vec<String>,
    pub done: bool,
}

impl CrawlState {
    fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        serde_json::from_str(&text).map_err(|e| Error::Fixture(format!("bad state file: {e}")))
    }

    fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, serde_json::to_string_pretty(self).expect("state serializes"))?;
        Ok(())
    }
}

/// Result of a completed crawl.
#[derive(Debug)]
pub struct FetchOutcome {
    pub records: Vec<FieldRecord>,
    pub issues: Vec<ParseIssue>,
    pub pages: usize,
}

#[derive(Deserialize)]
struct Page {
    data: Vec<serde_json::Value>,
    #[serde(default)]
    next: Option<String>,
}

fn get_with_retries(cfg: &ClientConfig, url: &str) -> Result<Page> {
    let client = reqwest::blocking::Client::builder()
        .timeout(cfg.timeout)
        .build()
        .map_err(|e| Error::Transport(e.to_string()))?;
    let mut last_err = String::new();
    for attempt in 0..=cfg.max_retries {
        if attempt > 0 {
            std::thread::sleep(cfg.backoff_base * 2u32.pow(attempt - 1));
        }
        match client.get(url).send() {
            Ok(resp) => {
                let status = resp.status();
                if status.is_success() {
                    match resp.json::<Page>() {
                        Ok(page) => return Ok(page),
                        Err(e) => {
                            return Err(Error::BadResponse(format!("undecodable page: {e}")))
                        }
                    }
                }
                if status.is_server_error() || status.as_u16() == 429 {
                    last_err = format!("status {status}");
                    continue; // retryable
                }
                return Err(Error::BadResponse(format!("status {status} from {url}")));
            }
            Err(e) => {
                last_err = e.to_string();
                continue;
            }
        }
    }
    Err(Error::Transport(format!(
        "{last_err} (after {} attempts)",
        cfg.max_retries + 1
    )))
}

/// Crawl every page of candidate fields matching the query. With a state
/// path, progress survives interruption: the cursor and fetched records are
/// persisted after each page and reloaded on the next call.
pub fn fetch_candidates(
    cfg: &ClientConfig,
    query: &CandidateQuery,
    state_path: Option<&Path>,
) -> Result<FetchOutcome> {
    let mut state = match state_path {
        Some(p) if p.exists() => CrawlState::load(p)?,
        _ => CrawlState::default(),
    };
    let first_url = format!(
        "{}/api/nf_fields/?{}",
        cfg.base_url.trim_end_matches('/'),
        query.to_query_string()
    );
    let mut pages = 0usize;
    while !state.done {
        let url = match &state.cursor {
            None => first_url.clone(),
            Some(c) if c.starts_with("http") => c.clone(),
            Some(c) => format!(
                "{}/{}",
                cfg.base_url.trim_end_matches('/'),
                c.trim_start_matches('/')
            ),
        };
        let page = get_with_retries(cfg, &url).inspect_err(|_| {
            // persist progress before failing, so a rerun resumes here
            if let Some(p) = state_path {
                let _ = state.save(p);
            }
        })?;
        pages += 1;
        for value in &page.data {
            state.record_lines.push(value.to_string());
        }
        match page.next {
            Some(next) if !next.is_empty() => state.cursor = Some(next),
            _ => state.done = true,
        }
        if let Some(p) = state_path {
            state.save(p)?;
        }
    }
    let mut records = Vec::new();
    let mut issues = Vec::new();
    for (i, line) in state.record_lines.iter().enumerate() {
        match FieldRecord::from_json(line) {
            Ok(r) => records.push(r),
            Err(message) => issues.push(ParseIssue { position: i + 1, message }),
        }
    }
    Ok(FetchOutcome { records, issues, pages })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::{Read, Write};
    use std::net::TcpListener;
    use std::sync::atomic::{AtomicUsize, Ordering};
    use std::sync::Arc;

    /// Minimal canned-response HTTP server for exercising the client.
    fn serve(responses: Vec<(String, String)>, fail_first: usize) -> (String, std::thread::JoinHandle<()>) {
        let listener = TcpListener::bind("127.0.0.1:0").unwrap();
        let addr = listener.local_addr().unwrap();
        let failures = Arc::new(AtomicUsize::new(fail_first));
        let handle = std::thread::spawn(move || {
            let total = responses.len() + fail_first;
            for _ in 0..total {
                let (mut stream, _) = match listener.accept() {
                    Ok(s) => s,
                    Err(_) => return,
                };
                let mut buf = [0u8; 4096];
                let n = stream.read(&mut buf).unwrap_or(0);
                let req = String::from_utf8_lossy(&buf[..n]).to_string();
                let path = req.lines().next().unwrap_or("").split(' ').nth(1).unwrap_or("/").to_string();
                if failures.fetch_update(Ordering::SeqCst, Ordering::SeqCst, |v| v.checked_sub(1)).is_ok()
                {
                    let _ = stream.write_all(b"HTTP/1.1 500 Internal Server Error\r\nContent-Length: 0\r\nConnection: close\r\n\r\n");
                    continue;
                }
                let body = responses
                    .iter()
                    .find(|(p, _)| path.starts_with(p.as_str()))
                    .map(|(_, b)| b.clone())
                    .unwrap_or_else(|| "{\"data\":[]}".into());
                let resp = format!(
                    "HTTP/1.1 200 OK\r\nContent-Type: application/json\r\nContent-Length: {}\r\nConnection: close\r\n\r\n{}",
                    body.len(),
                    body
                );
                let _ = stream.write_all(resp.as_bytes());
            }
        });
        (format!("http://{addr}"), handle)
    }

    fn rec_json(label: &str) -> String {
        format!(
            r#"{{"label":"{label}","coeffs":["1","10","5","-10","0","1"],"degree":5,"disc":"390625","galois_label":"5T1"}}"#
        )
    }

    fn cfg(base: &str) -> ClientConfig {
        ClientConfig {
            base_url: base.into(),
            timeout: Duration::from_secs(5),
            max_retries: 2,
            backoff_base: Duration::from_millis(10),
            max_in_flight: 2,
        }
    }

    #[test]
    fn paginates_until_cursor_ends() {
        let page1 = format!(r#"{{"data":[{}],"next":"/api/nf_fields/?page=2"}}"#, rec_json("a.1"));
        let page2 = format!(r#"{{"data":[{},{}]}}"#, rec_json("a.2"), rec_json("a.3"));
        let (base, h) = serve(
            vec![
                ("/api/nf_fields/?page=2".into(), page2),
                ("/api/nf_fields/".into(), page1),
            ],
            0,
        );
        let out = fetch_candidates(&cfg(&base), &CandidateQuery::quintic_cyclic(), None).unwrap();
        h.join().unwrap();
        assert_eq!(out.pages, 2);
        assert_eq!(out.records.len(), 3);
        assert!(out.issues.is_empty());
        assert_eq!(out.records[0].label, "a.1");
        assert_eq!(out.records[2].label, "a.3");
    }

    #[test]
    fn malformed_records_become_issues() {
        let page = format!(r#"{{"data":[{},{{"label":"broken"}}]}}"#, rec_json("a.1"));
        let (base, h) = serve(vec![("/api/nf_fields/".into(), page)], 0);
        let out = fetch_candidates(&cfg(&base), &CandidateQuery::quintic_cyclic(), None).unwrap();
        h.join().unwrap();
        assert_eq!(out.records.len(), 1);
        assert_eq!(out.issues.len(), 1);
        assert_eq!(out.issues[0].position, 2);
    }

    #[test]
    fn retries_transient_failures() {
        let page = format!(r#"{{"data":[{}]}}"#, rec_json("a.1"));
        let (base, h) = serve(vec![("/api/nf_fields/".into(), page)], 1);
        let out = fetch_candidates(&cfg(&base), &CandidateQuery::quintic_cyclic(), None).unwrap();
        h.join().unwrap();
        assert_eq!(out.records.len(), 1);
    }

    #[test]
    fn interrupted_crawl_resumes_from_cursor() {
        let dir = tempfile::tempdir().unwrap();
        let state = dir.path().join("state.json");
        // phase 1: page 1 succeeds, then the server keeps failing
        let page1 = format!(r#"{{"data":[{}],"next":"/api/nf_fields/?page=2"}}"#, rec_json("a.1"));
        let (base, h) = serve(
            vec![("/api/nf_fields/?".into(), page1)],
            0,
        );
        // exhaust: the second page request hits a dead server (after handle
        // finishes accepting its single connection)
        let c = ClientConfig { max_retries: 0, ..cfg(&base) };
        let err = fetch_candidates(&c, &CandidateQuery::quintic_cyclic(), Some(&state));
        h.join().unwrap();
        assert!(err.is_err());
        let persisted = CrawlState::load(&state).unwrap();
        assert_eq!(persisted.record_lines.len(), 1);
        assert_eq!(persisted.cursor.as_deref(), Some("/api/nf_fields/?page=2"));
        // phase 2: a fresh server serves page 2; the crawl resumes, keeping page 1
        let page2 = format!(r#"{{"data":[{}]}}"#, rec_json("a.2"));
        let (base2, h2) = serve(vec![("/api/nf_fields/?page=2".into(), page2)], 0);
        let out =
            fetch_candidates(&cfg(&base2), &CandidateQuery::quintic_cyclic(), Some(&state))
                .unwrap();
        h2.join().unwrap();
        assert_eq!(out.records.len(), 2);
        assert_eq!(out.records[0].label, "a.1");
        assert_eq!(out.records[1].label, "a.2");
        assert_eq!(out.pages, 1);
    }

    #[test]
    fn query_string_shape() {
        let q = CandidateQuery::quintic_cyclic();
        assert_eq!(q.to_query_string(), "degree=5&galois_label=5T1&r2=0&r1=5");
    }
}
