use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, Mutex, OnceLock};

/// Write-once table cache, usually keyed by degree. Each key is built at most
/// once; concurrent requests for the same key block on the in-flight build.
pub(crate) struct TableCache<K, T> {
    slots: Mutex<HashMap<K, Arc<OnceLock<Arc<T>>>>>,
}

impl<K: Hash + Eq, T> TableCache<K, T> {
    pub(crate) fn new() -> Self {
        TableCache {
            slots: Mutex::new(HashMap::new()),
        }
    }

    pub(crate) fn get_or_build(&self, key: K, build: impl FnOnce() -> T) -> Arc<T> {
        let slot = {
            let mut slots = self.slots.lock().unwrap_or_else(|e| e.into_inner());
            Arc::clone(slots.entry(key).or_default())
        };
        Arc::clone(slot.get_or_init(|| Arc::new(build())))
    }
}
