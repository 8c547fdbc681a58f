//! Per-thread memo tables for the bounded computations that several
//! predicates repeat on the same ideal.

use std::cell::RefCell;
use std::collections::HashMap;
use std::hash::Hash;

const CAPACITY: usize = 4096;

pub(crate) struct Memo<K, V>(RefCell<HashMap<K, V>>);

impl<K: Eq + Hash, V: Clone> Memo<K, V> {
    pub fn new() -> Self {
        Memo(RefCell::new(HashMap::new()))
    }

    /// The cached value for `key`, computing it with `f` on a miss. No
    /// borrow is held while `f` runs, so `f` may use the table too.
    pub fn get_or(&self, key: K, f: impl FnOnce() -> V) -> V {
        if let Some(v) = self.0.borrow().get(&key) {
            return v.clone();
        }
        let v = f();
        let mut table = self.0.borrow_mut();
        if table.len() >= CAPACITY {
            table.clear();
        }
        table.insert(key, v.clone());
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn computes_once() {
        let m: Memo<u32, u32> = Memo::new();
        let mut calls = 0;
        assert_eq!(m.get_or(3, || { calls += 1; 9 }), 9);
        assert_eq!(m.get_or(3, || { calls += 1; 0 }), 9);
        assert_eq!(calls, 1);
    }
}
