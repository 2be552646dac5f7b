//! Machine-readable command output.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Exact,
    UpperBound,
    Conjecture,
    Evidence,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Exact => "exact",
            Provenance::UpperBound => "upper-bound",
            Provenance::Conjecture => "conjecture",
            Provenance::Evidence => "evidence",
        })
    }
}

/// One reported value; counts are decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub key: String,
    pub value: String,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub results: Vec<Entry>,
    /// RMC1 payload of a witness coloring.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub wall_time_ms: u64,
}

impl Report {
    pub fn new(command: &str) -> Report {
        Report {
            command: command.into(),
            inputs: BTreeMap::new(),
            results: Vec::new(),
            witness: None,
            wall_time_ms: 0,
        }
    }

    pub fn input(&mut self, key: &str, value: impl ToString) -> &mut Report {
        self.inputs.insert(key.into(), value.to_string());
        self
    }

    pub fn push(&mut self, key: &str, value: impl ToString, provenance: Provenance) -> &mut Report {
        self.results.push(Entry { key: key.into(), value: value.to_string(), provenance });
        self
    }

    pub fn get(&self, key: &str) -> Option<&Entry> {
        self.results.iter().find(|e| e.key == key)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report fields always serialize")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Report> {
        serde_json::from_str(text)
    }

    /// Plain text rendering, one `key = value (provenance)` line per entry.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.results {
            out.push_str(&format!("{} = {} ({})\n", e.key, e.value, e.provenance));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_is_byte_identical() {
        let mut r = Report::new("count");
        r.input("pattern", "P_6").input("in", "x.rmc");
        r.push("total", "123456789012345678901234567890", Provenance::Exact);
        r.push("bound", "7", Provenance::UpperBound);
        r.witness = Some("RMC1 2\n80\n".into());
        r.wall_time_ms = 12;
        let text = r.to_json();
        let back = Report::from_json(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_json(), text);
        assert!(text.contains("\"upper-bound\""));
        assert!(text.contains("\"123456789012345678901234567890\""));
    }

    #[test]
    fn witness_is_optional() {
        let r = Report::new("verify");
        let text = r.to_json();
        assert!(!text.contains("witness"));
        assert_eq!(Report::from_json(&text).unwrap().to_json(), text);
    }
}
