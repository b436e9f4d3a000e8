//! Prime tables for the truncation set `p ≤ x`.
//!
//! A [`PrimeTable`] is built once and then shared read-only. Product
//! evaluations borrow it through a [`PrimeView`], which can also be masked to
//! a smaller limit so that a single sieve serves a whole grid of `x` values.

use crate::{Error, Result};

/// Largest limit accepted by [`PrimeTable::sieve`].
pub const DEFAULT_MAX_LIMIT: u64 = 100_000_000;

/// Sorted primes `≤ limit` together with their natural logarithms.
#[derive(Debug, Clone, PartialEq)]
pub struct PrimeTable {
    limit: u64,
    primes: Vec<u64>,
    logs: Vec<f64>,
}

/// Builds the complete table of primes `≤ limit`.
pub fn sieve(limit: u64) -> Result<PrimeTable> {
    PrimeTable::sieve(limit)
}

impl PrimeTable {
    pub fn sieve(limit: u64) -> Result<Self> {
        Self::sieve_with_max(limit, DEFAULT_MAX_LIMIT)
    }

    /// Sieve of Eratosthenes over odd numbers, one bit per candidate.
    pub fn sieve_with_max(limit: u64, max: u64) -> Result<Self> {
        if limit > max {
            return Err(Error::ResourceLimit { limit, max });
        }
        let primes = odd_sieve(limit);
        let logs = primes.iter().map(|&p| (p as f64).ln()).collect();
        Ok(Self {
            limit,
            primes,
            logs,
        })
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// `ln p` for each entry of [`primes`](Self::primes), same order.
    pub fn logs(&self) -> &[f64] {
        &self.logs
    }

    /// π(limit).
    pub fn count(&self) -> usize {
        self.primes.len()
    }

    /// Number of primes `≤ y`.
    pub fn prime_pi(&self, y: u64) -> Result<usize> {
        if y > self.limit {
            return Err(Error::OutOfRange {
                value: y,
                limit: self.limit,
            });
        }
        Ok(self.primes.partition_point(|&p| p <= y))
    }

    pub fn view(&self) -> PrimeView<'_> {
        PrimeView {
            limit: self.limit,
            primes: &self.primes,
            logs: &self.logs,
        }
    }

    /// The table restricted to primes `≤ x`, without copying.
    pub fn view_upto(&self, x: u64) -> Result<PrimeView<'_>> {
        let n = self.prime_pi(x)?;
        Ok(PrimeView {
            limit: x,
            primes: &self.primes[..n],
            logs: &self.logs[..n],
        })
    }
}

/// Borrowed prefix of a [`PrimeTable`]: all primes `≤ limit`.
#[derive(Debug, Clone, Copy)]
pub struct PrimeView<'a> {
    limit: u64,
    primes: &'a [u64],
    logs: &'a [f64],
}

impl<'a> PrimeView<'a> {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn primes(&self) -> &'a [u64] {
        self.primes
    }

    pub fn logs(&self) -> &'a [f64] {
        self.logs
    }

    pub fn count(&self) -> usize {
        self.primes.len()
    }

    /// `(p, ln p)` pairs in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = (u64, f64)> + 'a {
        self.primes.iter().copied().zip(self.logs.iter().copied())
    }
}

impl<'a> From<&'a PrimeTable> for PrimeView<'a> {
    fn from(table: &'a PrimeTable) -> Self {
        table.view()
    }
}

fn odd_sieve(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    // bit i stands for 2i + 1; bit 0 (the number 1) is never read
    let n_odd = limit.div_ceil(2) as usize;
    let mut composite = vec![0u64; n_odd.div_ceil(64)];
    let mut i = 1usize;
    loop {
        let p = 2 * i + 1;
        if (p as u64) * (p as u64) > limit {
            break;
        }
        if composite[i / 64] & (1 << (i % 64)) == 0 {
            let mut j = (p * p) / 2;
            while j < n_odd {
                composite[j / 64] |= 1 << (j % 64);
                j += p;
            }
        }
        i += 1;
    }

    let estimate = (limit as f64 / (limit as f64).ln() * 1.3) as usize + 16;
    let mut primes = Vec::with_capacity(estimate);
    primes.push(2);
    for i in 1..n_odd {
        if composite[i / 64] & (1 << (i % 64)) == 0 {
            primes.push(2 * i as u64 + 1);
        }
    }
    primes
}
