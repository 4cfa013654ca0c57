//! Verification records shared by every check.

use std::fmt;

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    /// Holds because both sides live in a zero space.
    Vacuous,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
            Status::Vacuous => "vacuous",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub name: String,
    /// The identity or property being checked.
    pub anchor: String,
    pub status: Status,
    /// Nonzero difference of the two sides, in parser syntax.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residue: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Record {
    pub fn new(name: impl Into<String>, anchor: impl Into<String>, status: Status) -> Record {
        Record {
            name: name.into(),
            anchor: anchor.into(),
            status,
            residue: None,
            notes: Vec::new(),
        }
    }

    pub fn pass(name: impl Into<String>, anchor: impl Into<String>) -> Record {
        Record::new(name, anchor, Status::Pass)
    }

    pub fn fail(name: impl Into<String>, anchor: impl Into<String>, residue: impl Into<String>) -> Record {
        let mut r = Record::new(name, anchor, Status::Fail);
        r.residue = Some(residue.into());
        r
    }

    pub fn skipped(name: impl Into<String>, anchor: impl Into<String>, reason: impl Into<String>) -> Record {
        Record::new(name, anchor, Status::Skipped).note(reason)
    }

    /// Pass when `residue` is `None`, fail with it otherwise.
    pub fn check(name: impl Into<String>, anchor: impl Into<String>, residue: Option<String>) -> Record {
        match residue {
            None => Record::pass(name, anchor),
            Some(r) => Record::fail(name, anchor, r),
        }
    }

    pub fn note(mut self, n: impl Into<String>) -> Record {
        self.notes.push(n.into());
        self
    }

    pub fn notes(mut self, ns: impl IntoIterator<Item = String>) -> Record {
        for n in ns {
            if !self.notes.contains(&n) {
                self.notes.push(n);
            }
        }
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub title: String,
    /// Settings that influence the outcome, as `(key, value)`.
    pub settings: Vec<(String, String)>,
    pub records: Vec<Record>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Report {
        Report {
            title: title.into(),
            ..Report::default()
        }
    }

    pub fn setting(&mut self, k: impl Into<String>, v: impl ToString) {
        self.settings.push((k.into(), v.to_string()));
    }

    pub fn push(&mut self, r: Record) {
        self.records.push(r);
    }

    pub fn extend(&mut self, rs: impl IntoIterator<Item = Record>) {
        self.records.extend(rs);
    }

    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn count(&self, s: Status) -> usize {
        self.records.iter().filter(|r| r.status == s).count()
    }

    pub fn find(&self, name: &str) -> Option<&Record> {
        self.records.iter().find(|r| r.name == name)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        for (k, v) in &self.settings {
            writeln!(f, "  {k} = {v}")?;
        }
        for r in &self.records {
            writeln!(f, "[{:>7}] {}: {}", r.status, r.name, r.anchor)?;
            if let Some(res) = &r.residue {
                writeln!(f, "          residue: {res}")?;
            }
            for n in &r.notes {
                writeln!(f, "          note: {n}")?;
            }
        }
        write!(
            f,
            "{} pass, {} fail, {} skipped, {} vacuous",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skipped),
            self.count(Status::Vacuous)
        )
    }
}
