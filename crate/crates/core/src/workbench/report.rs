//! Plain-text verdict reports.

use std::fmt::Write as _;

use sha2::{Digest, Sha256};

use crate::report::{Status, Verdict};

pub const TOOL: &str = "coringlab";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Header, one line per verdict, and a summary line. Nothing in the report
/// depends on timing or thread scheduling.
#[derive(Clone, Debug)]
pub struct VerdictReport {
    pub command: String,
    pub digest: String,
    pub verdicts: Vec<Verdict>,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl VerdictReport {
    pub fn new(command: impl Into<String>, input: &[u8]) -> Self {
        VerdictReport {
            command: command.into(),
            digest: sha256_hex(input),
            verdicts: Vec::new(),
        }
    }

    pub fn push(&mut self, v: Verdict) {
        self.verdicts.push(v);
    }

    pub fn extend(&mut self, vs: impl IntoIterator<Item = Verdict>) {
        self.verdicts.extend(vs);
    }

    pub fn count(&self, status: Status) -> usize {
        self.verdicts.iter().filter(|v| v.status == status).count()
    }

    pub fn failed(&self) -> bool {
        self.count(Status::Fail) > 0
    }

    /// 0 when no line is a FAIL, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.failed())
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# {TOOL} {VERSION}");
        let _ = writeln!(out, "# input sha256:{}", self.digest);
        let _ = writeln!(out, "# command: {}", self.command);
        for v in &self.verdicts {
            let _ = writeln!(out, "{v}");
        }
        let _ = writeln!(
            out,
            "# summary: {} PASS, {} FAIL, {} NOTE",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Note)
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_and_exit_code() {
        let mut r = VerdictReport::new("validate x", b"abc");
        assert_eq!(r.digest, "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
        r.push(Verdict::pass("a", "ok"));
        r.push(Verdict::note("b", "info"));
        assert_eq!(r.exit_code(), 0);
        r.push(Verdict::fail("c", "bad"));
        assert_eq!(r.exit_code(), 1);
        assert!(r.render().ends_with("# summary: 1 PASS, 1 FAIL, 1 NOTE\n"));
    }
}
