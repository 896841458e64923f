use std::collections::HashMap;
use std::hash::Hash;
use std::sync::RwLock;

/// A process-wide memo table. Readers share the lock; a miss computes outside
/// the lock and inserts afterwards, so two threads may race to compute the
/// same value but both get the same answer.
pub(crate) struct Memo<K, V> {
    map: RwLock<Option<HashMap<K, V>>>,
}

impl<K: Eq + Hash + Clone, V: Clone> Memo<K, V> {
    pub(crate) const fn new() -> Self {
        Memo { map: RwLock::new(None) }
    }

    pub(crate) fn get_or_insert_with(&self, key: &K, f: impl FnOnce() -> V) -> V {
        if let Some(v) = self.map.read().unwrap().as_ref().and_then(|m| m.get(key)) {
            return v.clone();
        }
        let v = f();
        self.map
            .write()
            .unwrap()
            .get_or_insert_with(HashMap::new)
            .entry(key.clone())
            .or_insert_with(|| v.clone());
        v
    }
}
