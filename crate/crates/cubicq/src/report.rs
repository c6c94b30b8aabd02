//! Outcome records shared by the verification suites.

use serde::Serialize;

/// One verified identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

pub(crate) fn check(name: &str, holds: bool, detail: impl Into<String>) -> IdentityCheck {
    IdentityCheck { name: name.into(), holds, detail: detail.into() }
}
