//! Session-wide registry of symbolic parameters.
//!
//! Parameters are interned once and never removed. The built-in parameters
//! `p`, `q`, `nu` always occupy indices 0, 1, 2, which fixes the variable
//! order `p < q < nu` used for canonical forms. Further parameters are
//! appended in registration order.

use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

struct Registry {
    names: Vec<&'static str>,
    index: HashMap<&'static str, u16>,
}

fn registry() -> &'static RwLock<Registry> {
    static REG: OnceLock<RwLock<Registry>> = OnceLock::new();
    REG.get_or_init(|| {
        let mut reg = Registry {
            names: Vec::new(),
            index: HashMap::new(),
        };
        for name in ["p", "q", "nu"] {
            let id = reg.names.len() as u16;
            reg.names.push(name);
            reg.index.insert(name, id);
        }
        RwLock::new(reg)
    })
}

/// A symbolic deformation parameter.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Param(u16);

impl Param {
    pub const P: Param = Param(0);
    pub const Q: Param = Param(1);
    pub const NU: Param = Param(2);

    /// Returns the parameter with this name, registering it if needed.
    pub fn named(name: &str) -> Param {
        if let Some(p) = Param::lookup(name) {
            return p;
        }
        let mut reg = registry().write().expect("parameter registry poisoned");
        if let Some(&id) = reg.index.get(name) {
            return Param(id);
        }
        let leaked: &'static str = Box::leak(name.to_owned().into_boxed_str());
        let id = u16::try_from(reg.names.len()).expect("too many parameters");
        reg.names.push(leaked);
        reg.index.insert(leaked, id);
        Param(id)
    }

    /// Looks up an already registered parameter.
    pub fn lookup(name: &str) -> Option<Param> {
        let reg = registry().read().expect("parameter registry poisoned");
        reg.index.get(name).map(|&id| Param(id))
    }

    pub fn name(self) -> &'static str {
        registry().read().expect("parameter registry poisoned").names[self.0 as usize]
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub(crate) fn from_index(i: usize) -> Param {
        Param(i as u16)
    }
}

impl fmt::Debug for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_have_fixed_order() {
        assert_eq!(Param::lookup("p"), Some(Param::P));
        assert_eq!(Param::lookup("q"), Some(Param::Q));
        assert_eq!(Param::lookup("nu"), Some(Param::NU));
        assert!(Param::P < Param::Q && Param::Q < Param::NU);
    }

    #[test]
    fn registration_is_idempotent() {
        let a = Param::named("t_registry_test");
        let b = Param::named("t_registry_test");
        assert_eq!(a, b);
        assert!(a > Param::NU);
        assert_eq!(a.name(), "t_registry_test");
    }
}
