//! Process-wide memo tables for Littlewood–Richardson data, with optional
//! persistence to a cache directory.
//!
//! All tables accept concurrent readers and concurrent insert-if-absent; a
//! value is a pure function of its key, so racing writers insert equal
//! values.

use std::collections::HashMap;
use std::fs;
use std::hash::Hash;
use std::io;
use std::path::{Path, PathBuf};
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::partition::Partition;

/// Environment variable naming the on-disk cache directory.
pub const CACHE_DIR_ENV: &str = "STABCHAR_CACHE_DIR";

const CACHE_FILE: &str = "lr-cache.json";

/// Integer expansion `Σ c_ν ν` in canonical order.
pub type Expansion = Arc<Vec<(Partition, u64)>>;

pub(crate) struct Memo<K, V> {
    map: RwLock<HashMap<K, V>>,
}

impl<K: Eq + Hash + Clone, V: Clone> Memo<K, V> {
    fn new() -> Self {
        Memo {
            map: RwLock::new(HashMap::new()),
        }
    }

    pub(crate) fn get_or_insert_with(&self, key: &K, compute: impl FnOnce() -> V) -> V {
        if let Some(v) = self.map.read().expect("memo lock poisoned").get(key) {
            return v.clone();
        }
        let v = compute();
        self.map
            .write()
            .expect("memo lock poisoned")
            .entry(key.clone())
            .or_insert(v)
            .clone()
    }

    fn snapshot(&self) -> Vec<(K, V)> {
        let map = self.map.read().expect("memo lock poisoned");
        map.iter().map(|(k, v)| (k.clone(), v.clone())).collect()
    }

    fn extend(&self, items: impl IntoIterator<Item = (K, V)>) {
        let mut map = self.map.write().expect("memo lock poisoned");
        for (k, v) in items {
            map.entry(k).or_insert(v);
        }
    }

    fn len(&self) -> usize {
        self.map.read().expect("memo lock poisoned").len()
    }
}

/// `(λ, μ) ↦ Σ_ν c^λ_{μν} ν`.
pub(crate) fn skew_table() -> &'static Memo<(Partition, Partition), Expansion> {
    static T: OnceLock<Memo<(Partition, Partition), Expansion>> = OnceLock::new();
    T.get_or_init(Memo::new)
}

/// `(μ, ν) ↦ Σ_λ c^λ_{μν} λ`, keyed with `μ ≥ ν` in canonical order.
pub(crate) fn product_table() -> &'static Memo<(Partition, Partition), Expansion> {
    static T: OnceLock<Memo<(Partition, Partition), Expansion>> = OnceLock::new();
    T.get_or_init(Memo::new)
}

/// Newell–Littlewood basis products, keyed like [`product_table`].
pub(crate) fn bcd_product_table() -> &'static Memo<(Partition, Partition), Expansion> {
    static T: OnceLock<Memo<(Partition, Partition), Expansion>> = OnceLock::new();
    T.get_or_init(Memo::new)
}

/// Newell–Littlewood numbers keyed by the sorted triple.
pub(crate) fn nl_table() -> &'static Memo<[Partition; 3], u64> {
    static T: OnceLock<Memo<[Partition; 3], u64>> = OnceLock::new();
    T.get_or_init(Memo::new)
}

#[derive(Serialize, Deserialize)]
struct Entry {
    a: Partition,
    b: Partition,
    terms: Vec<(Partition, u64)>,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    schema: u32,
    skew: Vec<Entry>,
    product: Vec<Entry>,
}

fn entries(memo: &Memo<(Partition, Partition), Expansion>) -> Vec<Entry> {
    let mut v: Vec<Entry> = memo
        .snapshot()
        .into_iter()
        .map(|((a, b), t)| Entry {
            a,
            b,
            terms: t.as_ref().clone(),
        })
        .collect();
    v.sort_by(|x, y| (&x.a, &x.b).cmp(&(&y.a, &y.b)));
    v
}

fn restore(memo: &Memo<(Partition, Partition), Expansion>, items: Vec<Entry>) {
    memo.extend(items.into_iter().map(|e| ((e.a, e.b), Arc::new(e.terms))));
}

/// The cache directory named by [`CACHE_DIR_ENV`], if set and non-empty.
pub fn dir_from_env() -> Option<PathBuf> {
    std::env::var_os(CACHE_DIR_ENV)
        .filter(|v| !v.is_empty())
        .map(PathBuf::from)
}

/// Merges a previously saved cache into memory. A missing file is not an
/// error.
pub fn load(dir: &Path) -> io::Result<usize> {
    let path = dir.join(CACHE_FILE);
    let text = match fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(0),
        Err(e) => return Err(e),
    };
    let file: CacheFile =
        serde_json::from_str(&text).map_err(|e| io::Error::new(io::ErrorKind::InvalidData, e))?;
    if file.schema != 1 {
        return Err(io::Error::new(
            io::ErrorKind::InvalidData,
            format!("unsupported cache schema {}", file.schema),
        ));
    }
    let n = file.skew.len() + file.product.len();
    restore(skew_table(), file.skew);
    restore(product_table(), file.product);
    Ok(n)
}

/// Writes the in-memory tables to `dir`, replacing the file atomically.
pub fn save(dir: &Path) -> io::Result<()> {
    fs::create_dir_all(dir)?;
    let file = CacheFile {
        schema: 1,
        skew: entries(skew_table()),
        product: entries(product_table()),
    };
    let tmp = dir.join(format!("{CACHE_FILE}.{}.tmp", std::process::id()));
    fs::write(&tmp, serde_json::to_vec(&file).map_err(io::Error::other)?)?;
    fs::rename(&tmp, dir.join(CACHE_FILE))
}

/// Number of memoized entries across all tables.
pub fn entry_count() -> usize {
    skew_table().len() + product_table().len() + bcd_product_table().len() + nl_table().len()
}
