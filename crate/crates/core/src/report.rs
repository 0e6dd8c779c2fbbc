//! Validation results and verdict lines.

use std::fmt;

use crate::error::{Error, Result};

/// Outcome of a validator: the list of violated law instances, if any.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Validation {
    pub subject: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl Validation {
    pub fn new(subject: impl Into<String>) -> Self {
        Validation {
            subject: subject.into(),
            ..Default::default()
        }
    }

    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }

    /// Records one law instance.
    pub fn check(&mut self, ok: bool, failure: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(failure());
        }
    }

    pub fn merge(&mut self, other: Validation) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }

    pub fn into_result(self) -> Result<()> {
        if self.is_ok() {
            Ok(())
        } else {
            Err(Error::hypothesis(format!(
                "{} fails validation: {}",
                self.subject,
                self.summary()
            )))
        }
    }

    /// First few failures joined on one line.
    pub fn summary(&self) -> String {
        if self.is_ok() {
            return format!("{} law instances hold", self.checked);
        }
        let shown: Vec<&str> = self.failures.iter().take(3).map(String::as_str).collect();
        let more = self.failures.len().saturating_sub(shown.len());
        if more > 0 {
            format!("{}; and {more} more", shown.join("; "))
        } else {
            shown.join("; ")
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Note,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Note => "NOTE",
        })
    }
}

/// One report line: `STATUS check details`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub check: String,
    pub details: String,
}

impl Verdict {
    pub fn pass(check: impl Into<String>, details: impl Into<String>) -> Self {
        Verdict {
            status: Status::Pass,
            check: check.into(),
            details: details.into(),
        }
    }

    pub fn fail(check: impl Into<String>, details: impl Into<String>) -> Self {
        Verdict {
            status: Status::Fail,
            check: check.into(),
            details: details.into(),
        }
    }

    pub fn note(check: impl Into<String>, details: impl Into<String>) -> Self {
        Verdict {
            status: Status::Note,
            check: check.into(),
            details: details.into(),
        }
    }

    pub fn from_validation(check: impl Into<String>, v: &Validation) -> Self {
        if v.is_ok() {
            Verdict::pass(check, v.summary())
        } else {
            Verdict::fail(check, v.summary())
        }
    }

    pub fn from_bool(check: impl Into<String>, ok: bool, details: impl Into<String>) -> Self {
        if ok {
            Verdict::pass(check, details)
        } else {
            Verdict::fail(check, details)
        }
    }

    pub fn from_result<T>(check: impl Into<String>, r: &Result<T>, ok_details: impl FnOnce(&T) -> String) -> Self {
        match r {
            Ok(v) => Verdict::pass(check, ok_details(v)),
            Err(e) => Verdict::fail(check, e.to_string()),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.details.is_empty() {
            write!(f, "{} {}", self.status, self.check)
        } else {
            write!(f, "{} {} {}", self.status, self.check, self.details)
        }
    }
}
