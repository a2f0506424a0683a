//! Bounded memo table shared between worker threads.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::num::NonZeroUsize;
use std::sync::Mutex;

use lru::LruCache;

use super::work::Key;
use crate::polynomial::Laurent2;

const SHARDS: usize = 16;

pub(crate) struct MemoCache {
    shards: Vec<Mutex<LruCache<Key, Laurent2>>>,
}

impl MemoCache {
    pub fn new(capacity: usize) -> Self {
        let per = NonZeroUsize::new(capacity.div_ceil(SHARDS).max(1)).unwrap();
        MemoCache {
            shards: (0..SHARDS)
                .map(|_| Mutex::new(LruCache::new(per)))
                .collect(),
        }
    }

    fn shard(&self, key: &Key) -> &Mutex<LruCache<Key, Laurent2>> {
        let mut h = DefaultHasher::new();
        key.hash(&mut h);
        &self.shards[h.finish() as usize % SHARDS]
    }

    pub fn get(&self, key: &Key) -> Option<Laurent2> {
        self.shard(key).lock().unwrap().get(key).cloned()
    }

    /// Stores `value` unless another thread got there first; either way the
    /// stored value is returned.
    pub fn insert(&self, key: Key, value: Laurent2) -> Laurent2 {
        let mut shard = self.shard(&key).lock().unwrap();
        if let Some(v) = shard.get(&key) {
            debug_assert_eq!(*v, value);
            return v.clone();
        }
        shard.put(key, value.clone());
        value
    }

    pub fn len(&self) -> usize {
        self.shards.iter().map(|s| s.lock().unwrap().len()).sum()
    }

    pub fn clear(&self) {
        for s in &self.shards {
            s.lock().unwrap().clear();
        }
    }
}
