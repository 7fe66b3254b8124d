//! Outcome type shared by every identity check.

use std::fmt;

/// A failed identity: what was compared and both sides, rendered exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub what: String,
    pub left: String,
    pub right: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} != {}", self.what, self.left, self.right)
    }
}

impl std::error::Error for Mismatch {}

pub type CheckResult = Result<(), Mismatch>;

pub fn expect_eq<T: PartialEq + fmt::Display>(what: impl Into<String>, left: &T, right: &T) -> CheckResult {
    if left == right {
        Ok(())
    } else {
        Err(Mismatch {
            what: what.into(),
            left: left.to_string(),
            right: right.to_string(),
        })
    }
}

pub fn expect(what: impl Into<String>, cond: bool, detail: impl fmt::Display) -> CheckResult {
    if cond {
        Ok(())
    } else {
        Err(Mismatch {
            what: what.into(),
            left: detail.to_string(),
            right: "expected to hold".into(),
        })
    }
}

/// Turn a library error into a failed check.
pub fn from_error(what: impl Into<String>, err: impl fmt::Display) -> Mismatch {
    Mismatch {
        what: what.into(),
        left: format!("error: {err}"),
        right: "a value".into(),
    }
}
