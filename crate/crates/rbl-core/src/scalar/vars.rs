//! Process-wide variable registry.
//!
//! Canonical forms of polynomials and rational functions depend on a fixed
//! variable precedence, so all symbolic types share one interner. The
//! paper-facing names are registered up front in the order that defines the
//! lexicographic comparison (`a` before `b` before `k`, then the auxiliary
//! coordinate and unknown names). Unknown names encountered later are
//! appended and therefore sort after every pre-registered one.

use std::collections::HashMap;
use std::sync::RwLock;

use once_cell::sync::Lazy;

/// Names whose relative order is fixed for the whole artifact.
const PRELUDE: &[&str] = &[
    "a", "b", "k", "x1", "x2", "x3", "y1", "y2", "y3", "r11", "r12", "r13", "r21", "r22", "r23",
    "r31", "r32", "r33",
];

struct Registry {
    names: Vec<String>,
    ids: HashMap<String, u32>,
}

static REGISTRY: Lazy<RwLock<Registry>> = Lazy::new(|| {
    let mut reg = Registry {
        names: Vec::new(),
        ids: HashMap::new(),
    };
    for name in PRELUDE {
        reg.ids.insert(name.to_string(), reg.names.len() as u32);
        reg.names.push(name.to_string());
    }
    RwLock::new(reg)
});

/// Intern a variable name, returning its id. Ids increase in registration
/// order and define the lexicographic precedence (lower id = higher
/// precedence).
pub fn var_id(name: &str) -> u32 {
    if let Some(&id) = REGISTRY.read().unwrap().ids.get(name) {
        return id;
    }
    let mut reg = REGISTRY.write().unwrap();
    if let Some(&id) = reg.ids.get(name) {
        return id;
    }
    let id = reg.names.len() as u32;
    reg.ids.insert(name.to_string(), id);
    reg.names.push(name.to_string());
    id
}

pub fn var_name(id: u32) -> String {
    REGISTRY.read().unwrap().names[id as usize].clone()
}

/// Id already assigned to a name, if any. Used by parsers that must reject
/// unknown parameters instead of silently extending the ordering.
pub fn lookup(name: &str) -> Option<u32> {
    REGISTRY.read().unwrap().ids.get(name).copied()
}
