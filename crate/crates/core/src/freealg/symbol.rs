//! Interned generator names.

use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

struct Interner {
    names: Vec<&'static str>,
    index: HashMap<&'static str, u32>,
}

fn interner() -> &'static RwLock<Interner> {
    static INT: OnceLock<RwLock<Interner>> = OnceLock::new();
    INT.get_or_init(|| {
        RwLock::new(Interner {
            names: Vec::new(),
            index: HashMap::new(),
        })
    })
}

/// A generator name. Equal names intern to equal symbols.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sym(u32);

impl Sym {
    pub fn new(name: &str) -> Sym {
        if let Some(&id) = interner().read().expect("interner poisoned").index.get(name) {
            return Sym(id);
        }
        let mut int = interner().write().expect("interner poisoned");
        if let Some(&id) = int.index.get(name) {
            return Sym(id);
        }
        let leaked: &'static str = Box::leak(name.to_owned().into_boxed_str());
        let id = int.names.len() as u32;
        int.names.push(leaked);
        int.index.insert(leaked, id);
        Sym(id)
    }

    pub fn name(self) -> &'static str {
        interner().read().expect("interner poisoned").names[self.0 as usize]
    }

    /// Name without a trailing `.k` tensor tag.
    pub fn base_name(self) -> &'static str {
        let n = self.name();
        match n.rfind('.') {
            Some(i) => &n[..i],
            None => n,
        }
    }
}

impl fmt::Debug for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
