//! Structured pass/fail reporting shared by every checker and the CLI.

use std::fmt;

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
    Info,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Inconclusive => "INCONCLUSIVE",
            Status::Info => "INFO",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug)]
pub struct ReportEntry {
    pub key: String,
    pub status: Status,
    pub detail: String,
}

/// A deterministic sequence of keyed check results. The overall verdict
/// is the conjunction: any FAIL fails, any INCONCLUSIVE without a FAIL is
/// inconclusive.
#[derive(Clone, Debug, Default)]
pub struct Report {
    entries: Vec<ReportEntry>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, key: impl Into<String>, status: Status, detail: impl Into<String>) {
        self.entries.push(ReportEntry {
            key: key.into(),
            status,
            detail: detail.into(),
        });
    }

    pub fn extend(&mut self, other: Report) {
        self.entries.extend(other.entries);
    }

    pub fn entries(&self) -> &[ReportEntry] {
        &self.entries
    }

    pub fn verdict(&self) -> Status {
        if self.entries.iter().any(|e| e.status == Status::Fail) {
            Status::Fail
        } else if self
            .entries
            .iter()
            .any(|e| e.status == Status::Inconclusive)
        {
            Status::Inconclusive
        } else {
            Status::Pass
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict() == Status::Pass
    }

    /// Human-readable rendering, one line per entry plus the verdict.
    pub fn human(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            out.push_str(&e.key);
            out.push_str(": ");
            out.push_str(&e.status.to_string());
            if !e.detail.is_empty() {
                out.push(' ');
                out.push_str(&e.detail);
            }
            out.push('\n');
        }
        out.push_str(&format!("verdict: {}\n", self.verdict()));
        out
    }

    /// Tab-separated `key<TAB>status<TAB>detail` lines plus the verdict.
    pub fn machine(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let detail = if e.detail.is_empty() { "-" } else { &e.detail };
            out.push_str(&format!("{}\t{}\t{}\n", e.key, e.status, detail));
        }
        out.push_str(&format!("verdict\t{}\t-\n", self.verdict()));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_is_the_conjunction() {
        let mut r = Report::new();
        r.push("a", Status::Pass, "");
        assert_eq!(r.verdict(), Status::Pass);
        r.push("b", Status::Inconclusive, "bound too small");
        assert_eq!(r.verdict(), Status::Inconclusive);
        r.push("c", Status::Fail, "counterexample");
        assert_eq!(r.verdict(), Status::Fail);
    }

    #[test]
    fn machine_lines_are_tab_separated() {
        let mut r = Report::new();
        r.push("overlap z y x", Status::Fail, "1");
        let text = r.machine();
        assert!(text.contains("overlap z y x\tFAIL\t1\n"));
        assert!(text.ends_with("verdict\tFAIL\t-\n"));
    }
}
