//! Permutations in one-line notation and the two metrics.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::RestrictionGraph;

/// Which distance a diameter computation is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Metric {
    Linf,
    Kendall,
}

impl Metric {
    pub fn name(self) -> &'static str {
        match self {
            Metric::Linf => "linf",
            Metric::Kendall => "kendall",
        }
    }
}

/// Bijection on `1..=n` stored in one-line notation: `values[k]` is the value
/// at position `k + 1`. Validated eagerly at every construction site.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    values: Vec<u32>,
}

impl Permutation {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n];
        for &v in &values {
            if v == 0 || v as usize > n || seen[(v - 1) as usize] {
                return Err(Error::NotABijection);
            }
            seen[(v - 1) as usize] = true;
        }
        Ok(Permutation { values })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            values: (1..=n as u32).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// Value at 1-based position `pos`.
    pub fn at(&self, pos: u32) -> u32 {
        self.values[(pos - 1) as usize]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.values
    }

    /// Does this permutation place a larger value at `u` than at `v` for
    /// every edge `u -> v`?
    pub fn satisfies(&self, g: &RestrictionGraph) -> Result<bool> {
        if self.n() != g.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: g.n(),
            });
        }
        Ok(g.edges().iter().all(|&(u, v)| self.at(u) > self.at(v)))
    }

    /// Maximum coordinate displacement between two permutations.
    pub fn linf_distance(&self, other: &Permutation) -> Result<u32> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| a.abs_diff(b))
            .max()
            .unwrap_or(0))
    }

    /// Number of discordant pairs: positions `i < j` the two permutations
    /// order oppositely. Plain pairwise count.
    pub fn kendall_distance(&self, other: &Permutation) -> Result<u64> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        let n = self.n();
        let mut count = 0u64;
        for i in 0..n {
            for j in (i + 1)..n {
                let a = self.values[i].cmp(&self.values[j]);
                let b = other.values[i].cmp(&other.values[j]);
                if a != b {
                    count += 1;
                }
            }
        }
        Ok(count)
    }

    /// Number of inverted pairs, by merge counting.
    pub fn inversion_number(&self) -> u64 {
        fn merge_count(v: &mut [u32], buf: &mut [u32]) -> u64 {
            let n = v.len();
            if n <= 1 {
                return 0;
            }
            let mid = n / 2;
            let mut inv = {
                let (lo, hi) = v.split_at_mut(mid);
                merge_count(lo, buf) + merge_count(hi, buf)
            };
            buf[..n].copy_from_slice(v);
            let (lo, hi) = buf[..n].split_at(mid);
            let (mut i, mut j) = (0, 0);
            for slot in v.iter_mut() {
                if i < lo.len() && (j >= hi.len() || lo[i] <= hi[j]) {
                    *slot = lo[i];
                    i += 1;
                } else {
                    *slot = hi[j];
                    j += 1;
                    inv += (lo.len() - i) as u64;
                }
            }
            inv
        }
        let mut v = self.values.clone();
        let mut buf = vec![0; v.len()];
        merge_count(&mut v, &mut buf)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.values.iter().enumerate() {
            inv[(v - 1) as usize] = i as u32 + 1;
        }
        Permutation { values: inv }
    }

    /// Composition `(self . inner)(k) = self(inner(k))`.
    pub fn compose(&self, inner: &Permutation) -> Result<Permutation> {
        if self.n() != inner.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: inner.n(),
            });
        }
        Ok(Permutation {
            values: inner.values.iter().map(|&v| self.at(v)).collect(),
        })
    }

    /// Permutation image of a linear extension: the vertex listed `k`-th
    /// (1-based) receives value `n + 1 - k`, so earlier-listed vertices get
    /// larger values.
    pub fn from_linear_extension(order: &[u32]) -> Result<Permutation> {
        let n = order.len();
        let mut values = vec![0u32; n];
        for (k, &v) in order.iter().enumerate() {
            if v == 0 || v as usize > n || values[(v - 1) as usize] != 0 {
                return Err(Error::NotABijection);
            }
            values[(v - 1) as usize] = (n - k) as u32;
        }
        Ok(Permutation { values })
    }

    /// Parse one-line notation: whitespace-separated values, or a compact
    /// digit string such as `1423` (accepted only while values fit in one
    /// digit, i.e. n <= 9).
    pub fn parse(s: &str) -> Result<Permutation> {
        let toks: Vec<&str> = s.split_whitespace().collect();
        if toks.is_empty() {
            return Err(Error::Parse("empty permutation".into()));
        }
        let values: Vec<u32> = if toks.len() == 1 && toks[0].len() > 1 {
            let t = toks[0];
            if !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::Parse(format!("bad permutation token {t:?}")));
            }
            if t.len() > 9 {
                return Err(Error::Parse("compact digit form only covers n <= 9".into()));
            }
            t.bytes().map(|b| (b - b'0') as u32).collect()
        } else {
            toks.iter()
                .map(|t| {
                    t.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad value {t:?}")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(values)
    }
}

impl fmt::Display for Permutation {
    /// Space-separated one-line notation.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Call `f` with every permutation of `1..=n` in lexicographic order.
///
/// The slice is reused between calls; copy it out to keep a permutation.
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[u32])) {
    fn rec(n: usize, cur: &mut Vec<u32>, used: &mut [bool], f: &mut impl FnMut(&[u32])) {
        if cur.len() == n {
            f(cur);
            return;
        }
        for v in 1..=n as u32 {
            if !used[(v - 1) as usize] {
                used[(v - 1) as usize] = true;
                cur.push(v);
                rec(n, cur, used, f);
                cur.pop();
                used[(v - 1) as usize] = false;
            }
        }
    }
    rec(n, &mut Vec::with_capacity(n), &mut vec![false; n], &mut f);
}
