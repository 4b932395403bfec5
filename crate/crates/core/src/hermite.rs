//! Hermite polynomials `H_n` and their conjugates `h_n(z) = i^{-n} H_n(iz)`,
//! generated by three-term recurrences over ℤ.

use std::sync::{OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::exact::{Integer, ZPoly};

/// Memo table for `H_n` and `h_n`. Entries are appended under a write lock
/// and never removed, so concurrent readers always see a valid prefix.
#[derive(Debug, Default)]
pub struct HermiteCache {
    plain: RwLock<Vec<ZPoly>>,
    conj: RwLock<Vec<ZPoly>>,
    faulty: bool,
}

impl HermiteCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// A cache whose recurrence is deliberately wrong from `n = 3` on.
    /// Only useful as a canary for the verification pipeline.
    pub fn faulty() -> Self {
        Self {
            faulty: true,
            ..Self::default()
        }
    }

    /// Process-wide shared cache.
    pub fn global() -> &'static HermiteCache {
        static CACHE: OnceLock<HermiteCache> = OnceLock::new();
        CACHE.get_or_init(HermiteCache::new)
    }

    pub fn hermite(&self, n: i64) -> Result<ZPoly> {
        self.get(&self.plain, n, -2)
    }

    pub fn conjugate_hermite(&self, n: i64) -> Result<ZPoly> {
        self.get(&self.conj, n, 2)
    }

    fn get(&self, table: &RwLock<Vec<ZPoly>>, n: i64, sign: i64) -> Result<ZPoly> {
        if n < 0 {
            return Err(Error::NegativeIndex(n));
        }
        let n = n as usize;
        if let Some(p) = table.read().expect("hermite cache poisoned").get(n) {
            return Ok(p.clone());
        }
        let mut t = table.write().expect("hermite cache poisoned");
        if t.is_empty() {
            t.push(ZPoly::one());
            t.push(ZPoly::from_i64s(&[0, 2]));
        }
        let two_z = ZPoly::from_i64s(&[0, 2]);
        while t.len() <= n {
            let m = t.len() - 1;
            let mut c = sign * m as i64;
            if self.faulty && m >= 2 {
                c += sign / 2;
            }
            let next = &(&two_z * &t[m]) + &t[m - 1].scale(&Integer::from(c));
            t.push(next);
        }
        Ok(t[n].clone())
    }
}

/// `H_n` from the shared cache.
///
/// ```
/// use maya_painleve::hermite::hermite;
/// assert_eq!(hermite(3).unwrap().to_string(), "8z^3 - 12z");
/// ```
pub fn hermite(n: i64) -> Result<ZPoly> {
    HermiteCache::global().hermite(n)
}

/// `h_n`, all of whose coefficients are non-negative.
pub fn conjugate_hermite(n: i64) -> Result<ZPoly> {
    HermiteCache::global().conjugate_hermite(n)
}
