//! Verdicts shared by the validators and the Rota-Baxter checkers.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::monoid::MonoidElem;

/// A concrete counterexample: which property broke, and at which elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub label: String,
    pub elements: Vec<MonoidElem>,
}

impl Witness {
    pub fn new(label: impl Into<String>, elements: Vec<MonoidElem>) -> Self {
        Witness {
            label: label.into(),
            elements,
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at (", self.label)?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Result of a property check.
///
/// `Pass` is only produced when the whole (finite) structure was searched.
/// A search over a finite window of an infinite monoid can at best give
/// `PassOnWindow`, which always names the window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckOutcome {
    Pass,
    PassOnWindow { window: String },
    Fail { witness: Witness },
}

impl CheckOutcome {
    pub fn fail(label: impl Into<String>, elements: Vec<MonoidElem>) -> Self {
        CheckOutcome::Fail {
            witness: Witness::new(label, elements),
        }
    }

    /// Pass or PassOnWindow.
    pub fn passed(&self) -> bool {
        !self.is_fail()
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, CheckOutcome::Fail { .. })
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            CheckOutcome::Fail { witness } => Some(witness),
            _ => None,
        }
    }

    pub fn verdict(&self) -> &'static str {
        match self {
            CheckOutcome::Pass => "Pass",
            CheckOutcome::PassOnWindow { .. } => "PassOnWindow",
            CheckOutcome::Fail { .. } => "Fail",
        }
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckOutcome::Pass => write!(f, "Pass"),
            CheckOutcome::PassOnWindow { window } => write!(f, "PassOnWindow (window {window})"),
            CheckOutcome::Fail { witness } => write!(f, "Fail: {witness}"),
        }
    }
}

impl Serialize for CheckOutcome {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("CheckOutcome", 3)?;
        st.serialize_field("verdict", self.verdict())?;
        st.serialize_field("witness", &self.witness())?;
        let window = match self {
            CheckOutcome::PassOnWindow { window } => Some(window.as_str()),
            _ => None,
        };
        st.serialize_field("window", &window)?;
        st.end()
    }
}
