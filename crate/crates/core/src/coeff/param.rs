//! Named deformation parameters.
//!
//! Parameters are interned in a process-wide registry so that a [`Param`] is a
//! single byte. The r-matrix coefficients and the family parameters are
//! pre-registered:
//!
//! | slot | wedge basis element | name      |
//! |------|---------------------|-----------|
//! | c1   | A ∧ A+              | `alpha_p` |
//! | c2   | A ∧ A-              | `alpha_m` |
//! | c3   | A ∧ M               | `x`       |
//! | c4   | A+ ∧ A-             | `y`       |
//! | c5   | A+ ∧ M              | `beta_p`  |
//! | c6   | A- ∧ M              | `y_p`     |
//!
//! plus `z`, the single parameter of the one-parameter quantizations.

use std::fmt;
use std::sync::{OnceLock, RwLock};

/// Maximum number of distinct parameters in one process.
pub const MAX_PARAMS: usize = 12;

const BUILTIN: [&str; 7] = ["alpha_p", "alpha_m", "x", "y", "beta_p", "y_p", "z"];

fn registry() -> &'static RwLock<Vec<String>> {
    static REGISTRY: OnceLock<RwLock<Vec<String>>> = OnceLock::new();
    REGISTRY.get_or_init(|| RwLock::new(BUILTIN.iter().map(|s| s.to_string()).collect()))
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Param(pub(crate) u8);

impl Param {
    pub const ALPHA_P: Param = Param(0);
    pub const ALPHA_M: Param = Param(1);
    pub const X: Param = Param(2);
    pub const Y: Param = Param(3);
    pub const BETA_P: Param = Param(4);
    pub const Y_P: Param = Param(5);
    pub const Z: Param = Param(6);

    /// Interns `name`, returning the existing parameter if already registered.
    ///
    /// Panics when more than [`MAX_PARAMS`] names are registered.
    pub fn new(name: &str) -> Param {
        if let Some(p) = Param::lookup(name) {
            return p;
        }
        let mut reg = registry().write().unwrap();
        if let Some(i) = reg.iter().position(|n| n == name) {
            return Param(i as u8);
        }
        assert!(reg.len() < MAX_PARAMS, "too many parameters (max {MAX_PARAMS})");
        reg.push(name.to_string());
        Param((reg.len() - 1) as u8)
    }

    pub fn lookup(name: &str) -> Option<Param> {
        let reg = registry().read().unwrap();
        reg.iter().position(|n| n == name).map(|i| Param(i as u8))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// The parameter with registry index `i`.
    pub fn from_index(i: usize) -> Param {
        assert!(i < registry().read().unwrap().len(), "unregistered parameter index {i}");
        Param(i as u8)
    }

    pub fn name(self) -> String {
        registry().read().unwrap()[self.0 as usize].clone()
    }

    /// LaTeX spelling used by the table renderers.
    pub fn latex(self) -> String {
        match self.name().as_str() {
            "alpha_p" => "\\alpha_+".into(),
            "alpha_m" => "\\alpha_-".into(),
            "beta_p" => "\\beta_+".into(),
            "y_p" => "y_+".into(),
            other => other.to_string(),
        }
    }

    /// The six r-matrix coefficient parameters in wedge-slot order.
    pub fn r_slots() -> [Param; 6] {
        [Param::ALPHA_P, Param::ALPHA_M, Param::X, Param::Y, Param::BETA_P, Param::Y_P]
    }
}

impl fmt::Debug for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_are_preregistered() {
        assert_eq!(Param::lookup("beta_p"), Some(Param::BETA_P));
        assert_eq!(Param::Z.name(), "z");
    }

    #[test]
    fn interning_is_idempotent() {
        let a = Param::new("q_test");
        let b = Param::new("q_test");
        assert_eq!(a, b);
        assert_ne!(a, Param::X);
    }
}
