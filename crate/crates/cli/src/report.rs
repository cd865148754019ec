use std::cmp::Ordering;
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Failed,
    /// A documented discrepancy: listed, but does not fail the run.
    Flagged,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Verified => "verified",
            Status::Failed => "failed",
            Status::Flagged => "flagged",
        })
    }
}

/// One checked claim: what the reference says, what was computed, and where
/// the reference comes from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportEntry {
    pub claim_id: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    pub location: String,
}

impl ReportEntry {
    pub fn new(
        claim_id: impl Into<String>,
        ok: bool,
        expected: impl fmt::Display,
        actual: impl fmt::Display,
        location: impl Into<String>,
    ) -> Self {
        ReportEntry {
            claim_id: claim_id.into(),
            status: if ok { Status::Verified } else { Status::Failed },
            expected: expected.to_string(),
            actual: actual.to_string(),
            location: location.into(),
        }
    }

    /// Verified iff the two texts agree.
    pub fn compare(
        claim_id: impl Into<String>,
        expected: impl fmt::Display,
        actual: impl fmt::Display,
        location: impl Into<String>,
    ) -> Self {
        let (e, a) = (expected.to_string(), actual.to_string());
        ReportEntry::new(claim_id, e == a, e, a, location)
    }

    /// Downgrades a failure to a flag; a verified entry stays verified.
    pub fn flag_if_failed(mut self) -> Self {
        if self.status == Status::Failed {
            self.status = Status::Flagged;
        }
        self
    }
}

/// Compares ids with embedded numbers in numeric order, so `row9` precedes
/// `row10`.
pub fn natural_cmp(a: &str, b: &str) -> Ordering {
    let (mut x, mut y) = (a.as_bytes(), b.as_bytes());
    loop {
        match (x.first(), y.first()) {
            (None, None) => return Ordering::Equal,
            (None, _) => return Ordering::Less,
            (_, None) => return Ordering::Greater,
            (Some(c), Some(d)) if c.is_ascii_digit() && d.is_ascii_digit() => {
                let i = x.iter().take_while(|c| c.is_ascii_digit()).count();
                let j = y.iter().take_while(|c| c.is_ascii_digit()).count();
                let (u, v) = (trim_zeros(&x[..i]), trim_zeros(&y[..j]));
                let ord = u.len().cmp(&v.len()).then_with(|| u.cmp(v)).then(i.cmp(&j));
                if ord != Ordering::Equal {
                    return ord;
                }
                (x, y) = (&x[i..], &y[j..]);
            }
            (Some(c), Some(d)) => {
                if c != d {
                    return c.cmp(d);
                }
                (x, y) = (&x[1..], &y[1..]);
            }
        }
    }
}

fn trim_zeros(s: &[u8]) -> &[u8] {
    let k = s.iter().take_while(|&&c| c == b'0').count();
    &s[k..]
}

/// A finished run of one or more suites, sorted by claim id.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub entries: Vec<ReportEntry>,
}

impl Report {
    pub fn new(mut entries: Vec<ReportEntry>) -> Self {
        entries.sort_by(|a, b| natural_cmp(&a.claim_id, &b.claim_id));
        Report { entries }
    }

    pub fn with_status(&self, status: Status) -> impl Iterator<Item = &ReportEntry> {
        self.entries.iter().filter(move |e| e.status == status)
    }

    pub fn count(&self, status: Status) -> usize {
        self.with_status(status).count()
    }

    pub fn passed(&self) -> bool {
        self.count(Status::Failed) == 0
    }

    /// 0 when nothing failed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.entries).expect("entries are plain strings")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text).map(Report::new)
    }

    /// One tab-separated line per entry, then a summary that repeats every
    /// flagged and failed claim.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("status\tclaim_id\texpected\tactual\tlocation\n");
        for e in &self.entries {
            let _ = writeln!(out, "{}\t{}\t{}\t{}\t{}", e.status, e.claim_id, e.expected, e.actual, e.location);
        }
        let _ = writeln!(
            out,
            "# {} verified, {} flagged, {} failed",
            self.count(Status::Verified),
            self.count(Status::Flagged),
            self.count(Status::Failed)
        );
        for status in [Status::Flagged, Status::Failed] {
            for e in self.with_status(status) {
                let _ = writeln!(
                    out,
                    "# {status}: {} expected {} got {} ({})",
                    e.claim_id, e.expected, e.actual, e.location
                );
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn natural_order() {
        let mut ids = vec!["table2.row10.alpha", "table2.row9.beta", "table2.row9.alpha", "lemma_bo1", "table10"];
        ids.sort_by(|a, b| natural_cmp(a, b));
        assert_eq!(ids, ["lemma_bo1", "table2.row9.alpha", "table2.row9.beta", "table2.row10.alpha", "table10"]);
        assert_eq!(natural_cmp("k1n0", "k1n00"), Ordering::Less);
        assert_eq!(natural_cmp("a", "a"), Ordering::Equal);
    }

    #[test]
    fn statuses_and_exit_codes() {
        let ok = ReportEntry::compare("b", "5", "5", "here");
        let bad = ReportEntry::compare("a", "5", "6", "there");
        assert_eq!(ok.status, Status::Verified);
        assert_eq!(bad.status, Status::Failed);
        assert_eq!(bad.clone().flag_if_failed().status, Status::Flagged);
        assert_eq!(ok.clone().flag_if_failed().status, Status::Verified);
        let r = Report::new(vec![ok.clone(), bad.clone()]);
        assert_eq!(r.entries[0].claim_id, "a");
        assert_eq!(r.exit_code(), 1);
        let r = Report::new(vec![ok, bad.flag_if_failed()]);
        assert_eq!(r.exit_code(), 0);
        assert!(r.to_tsv().contains("# flagged: a expected 5 got 6"));
    }

    #[test]
    fn json_round_trip() {
        let r = Report::new(vec![ReportEntry::compare("x.y", "1/2", "1/2", "Lemma z")]);
        let text = r.to_json();
        assert!(text.contains("\"status\": \"verified\""));
        assert_eq!(Report::from_json(&text).unwrap(), r);
    }
}
