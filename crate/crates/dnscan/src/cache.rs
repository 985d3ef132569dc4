//! Capacity-bounded, TTL-respecting record cache with the selective policy:
//! only NS records and the glue that aids future recursion are stored, never
//! answers for the leaf names being directly queried.

use std::num::NonZeroUsize;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use lru::LruCache;

use crate::wire::rrtype::rrtype;
use crate::wire::{DomainName, ResourceRecord};

/// Which message section a record appeared in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Section {
    Answer,
    Authority,
    Additional,
}

/// Cache key: owner name (compared case-insensitively) plus record type.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CacheKey {
    pub name: DomainName,
    pub rrtype: u16,
}

impl CacheKey {
    pub fn new(name: DomainName, rrtype: u16) -> Self {
        CacheKey { name, rrtype }
    }
}

#[derive(Debug, Clone)]
struct CacheEntry {
    records: Vec<ResourceRecord>,
    expires_at: Instant,
}

/// Monotone operation counters.
#[derive(Debug, Default)]
pub struct CacheStats {
    hits: AtomicU64,
    misses: AtomicU64,
    evictions: AtomicU64,
    insertions: AtomicU64,
}

/// Point-in-time view of [`CacheStats`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CacheStatsSnapshot {
    pub hits: u64,
    pub misses: u64,
    pub evictions: u64,
    pub insertions: u64,
}

/// Shared LRU cache of record sets. All operations take the caller's notion
/// of "now" so expiry is testable with a virtual clock.
#[derive(Debug)]
pub struct Cache {
    inner: Mutex<Option<LruCache<CacheKey, CacheEntry>>>,
    stats: CacheStats,
}

impl Cache {
    /// A cache holding at most `capacity` entries. Capacity 0 disables
    /// caching entirely (every get is a miss, every put a no-op).
    pub fn new(capacity: usize) -> Self {
        Cache {
            inner: Mutex::new(NonZeroUsize::new(capacity).map(LruCache::new)),
            stats: CacheStats::default(),
        }
    }

    /// Stores a record set. The minimum TTL across the set bounds the entry
    /// lifetime; re-insertion of an existing key overwrites (last writer
    /// wins). The least-recently-used entry is evicted when full.
    pub fn put(&self, key: CacheKey, records: Vec<ResourceRecord>, now: Instant) {
        if records.is_empty() {
            return;
        }
        let min_ttl = records.iter().map(|r| r.ttl).min().unwrap_or(0);
        let entry = CacheEntry {
            records,
            expires_at: now + std::time::Duration::from_secs(u64::from(min_ttl)),
        };
        let mut guard = self.inner.lock().unwrap();
        let Some(cache) = guard.as_mut() else {
            return;
        };
        let had_key = cache.contains(&key);
        if !had_key && cache.len() == usize::from(cache.cap()) {
            cache.pop_lru();
            self.stats.evictions.fetch_add(1, Ordering::Relaxed);
        }
        cache.put(key, entry);
        self.stats.insertions.fetch_add(1, Ordering::Relaxed);
    }

    /// Returns the records for `key` when present and unexpired. Expired
    /// entries are removed and count as misses; a hit refreshes recency.
    pub fn get(&self, key: &CacheKey, now: Instant) -> Option<Vec<ResourceRecord>> {
        let mut guard = self.inner.lock().unwrap();
        let Some(cache) = guard.as_mut() else {
            self.stats.misses.fetch_add(1, Ordering::Relaxed);
            return None;
        };
        match cache.get(key) {
            Some(entry) if now < entry.expires_at => {
                let records = entry.records.clone();
                self.stats.hits.fetch_add(1, Ordering::Relaxed);
                Some(records)
            }
            Some(_) => {
                cache.pop(key);
                self.stats.misses.fetch_add(1, Ordering::Relaxed);
                None
            }
            None => {
                self.stats.misses.fetch_add(1, Ordering::Relaxed);
                None
            }
        }
    }

    /// Non-mutating presence check (no stats, no recency refresh).
    pub fn contains(&self, key: &CacheKey) -> bool {
        self.inner
            .lock()
            .unwrap()
            .as_ref()
            .is_some_and(|c| c.contains(key))
    }

    pub fn len(&self) -> usize {
        self.inner.lock().unwrap().as_ref().map_or(0, |c| c.len())
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// All live keys, for test introspection.
    pub fn keys(&self) -> Vec<CacheKey> {
        self.inner
            .lock()
            .unwrap()
            .as_ref()
            .map_or_else(Vec::new, |c| c.iter().map(|(k, _)| k.clone()).collect())
    }

    pub fn stats(&self) -> CacheStatsSnapshot {
        CacheStatsSnapshot {
            hits: self.stats.hits.load(Ordering::Relaxed),
            misses: self.stats.misses.load(Ordering::Relaxed),
            evictions: self.stats.evictions.load(Ordering::Relaxed),
            insertions: self.stats.insertions.load(Ordering::Relaxed),
        }
    }
}

/// The selective-caching predicate. A record qualifies when it is an NS
/// record, or an A/AAAA record in the additional section that is glue for one
/// of `ns_targets` (the NS targets seen in the same message). Records owned
/// by the leaf name being directly queried never qualify.
pub fn is_cacheable(
    record: &ResourceRecord,
    section: Section,
    query_leaf: &DomainName,
    ns_targets: &[DomainName],
) -> bool {
    if record.name == *query_leaf {
        return false;
    }
    match record.rrtype {
        t if t == rrtype::NS => true,
        t if t == rrtype::A || t == rrtype::AAAA => {
            section == Section::Additional && ns_targets.iter().any(|t| *t == record.name)
        }
        _ => false,
    }
}
