//! Descent-set and inversion-set specializations.
//!
//! Both specializations carve a family out of `S_n` by pinning part of the
//! inversion structure: a descent set pins the relative order of adjacent
//! positions, and an inversion set under a staircase-bounded window function
//! pins every window pair. Their diameters admit closed forms that the
//! generic graph pathway and the brute-force oracle both cross-check.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::RestrictionGraph;
use crate::permutation::{for_each_permutation, Permutation};

/// Positions `i` with `sigma_i > sigma_{i+1}`, as a subset of `1..=n-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentSet {
    n: usize,
    positions: BTreeSet<u32>,
}

impl DescentSet {
    pub fn new(n: usize, positions: impl IntoIterator<Item = u32>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Parse("n must be positive".into()));
        }
        let positions: BTreeSet<u32> = positions.into_iter().collect();
        for &p in &positions {
            if p == 0 || p as usize >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: p,
                    n: n - 1,
                });
            }
        }
        Ok(DescentSet { n, positions })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn positions(&self) -> impl Iterator<Item = u32> + '_ {
        self.positions.iter().copied()
    }

    pub fn contains(&self, i: u32) -> bool {
        self.positions.contains(&i)
    }

    /// Parse the text form `n=5; D={1,3}`.
    pub fn parse_text(s: &str) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("{m} in descent-set text {s:?}"));
        let mut n: Option<usize> = None;
        let mut ds: Option<Vec<u32>> = None;
        for part in s.split(';') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            if let Some(rest) = part.strip_prefix("n=") {
                n = Some(rest.trim().parse().map_err(|_| bad("bad n"))?);
            } else if let Some(rest) = part.strip_prefix("D=") {
                let inner = rest
                    .trim()
                    .strip_prefix('{')
                    .and_then(|r| r.strip_suffix('}'))
                    .ok_or_else(|| bad("D needs braces"))?;
                let mut v = Vec::new();
                for tok in inner.split(',') {
                    let tok = tok.trim();
                    if tok.is_empty() {
                        continue;
                    }
                    v.push(tok.parse().map_err(|_| bad("bad descent position"))?);
                }
                ds = Some(v);
            } else {
                return Err(bad("unrecognized field"));
            }
        }
        match (n, ds) {
            (Some(n), Some(d)) => DescentSet::new(n, d),
            _ => Err(bad("need both n= and D=")),
        }
    }
}

impl fmt::Display for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}; D={{", self.n)?;
        for (i, p) in self.positions.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// Descent set of a permutation.
pub fn descent_set_of(sigma: &Permutation) -> DescentSet {
    let n = sigma.n();
    let positions = (1..n as u32).filter(|&i| sigma.at(i) > sigma.at(i + 1));
    DescentSet::new(n.max(1), positions).expect("descents lie in 1..=n-1")
}

/// Path graph whose satisfying permutations are exactly those with descent
/// set `d`: edge `(i, i+1)` at each descent position, `(i+1, i)` elsewhere.
pub fn descent_to_graph(d: &DescentSet) -> RestrictionGraph {
    let edges = (1..d.n() as u32).map(|i| {
        if d.contains(i) {
            (i, i + 1)
        } else {
            (i + 1, i)
        }
    });
    RestrictionGraph::new(d.n(), edges).expect("path edges are valid")
}

/// Run lengths of the maximal uniform blocks of the descent indicator over
/// positions `1..=n-1` (inside the set or outside it), in order. The lengths
/// sum to `n - 1`; a single run means the family is a singleton (the
/// identity or the reversal).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Division {
    runs: Vec<u32>,
}

impl Division {
    pub fn runs(&self) -> &[u32] {
        &self.runs
    }
}

/// Division of a descent set into maximal uniform indicator runs.
pub fn division_of(d: &DescentSet) -> Division {
    let mut runs = Vec::new();
    let mut prev: Option<bool> = None;
    for i in 1..d.n() as u32 {
        let inside = d.contains(i);
        match prev {
            Some(p) if p == inside => *runs.last_mut().unwrap() += 1,
            _ => runs.push(1),
        }
        prev = Some(inside);
    }
    Division { runs }
}

/// Closed form for the maximum coordinate displacement between permutations
/// sharing the descent set: `n - 1 - min({l_1, l_m} U {l_i : l_i >= 2} U
/// {l_i + l_{i+1}})` over the division runs. Singleton families give 0.
pub fn descent_linf_closed_form(d: &DescentSet) -> u32 {
    let runs = division_of(d).runs;
    let m = runs.len();
    if m <= 1 {
        return 0;
    }
    let mut min = u32::MAX;
    min = min.min(runs[0]).min(runs[m - 1]);
    for &l in &runs {
        if l >= 2 {
            min = min.min(l);
        }
    }
    for w in runs.windows(2) {
        min = min.min(w[0] + w[1]);
    }
    d.n() as u32 - 1 - min
}

/// Positions after which the descent indicator switches runs, read from the
/// mirrored end of the word: with cumulative run sums `b_1 < ... < b_{m-1}`
/// and `b_m = n - 1`, the turning points are `a_i = n + 1 - b_{m+1-i}`.
fn turning_points(n: usize, runs: &[u32]) -> Vec<u64> {
    let mut cuts: Vec<u64> = Vec::with_capacity(runs.len());
    let mut acc = 0u64;
    for &l in &runs[..runs.len() - 1] {
        acc += l as u64;
        cuts.push(acc);
    }
    cuts.push(n as u64 - 1);
    cuts.iter().rev().map(|&b| n as u64 + 1 - b).collect()
}

/// Closed form for the maximum discordant-pair distance between permutations
/// sharing the descent set: `sum (a_{i+1} - a_i) * (n - a_{i+1} + 1)` over
/// the turning points, which counts the incomparable pairs of the descent
/// order. Singleton families give 0.
pub fn descent_kendall_closed_form(d: &DescentSet) -> u64 {
    let runs = division_of(d).runs;
    if runs.len() <= 1 {
        return 0;
    }
    let n = d.n() as u64;
    let a = turning_points(d.n(), &runs);
    let mut total = 0u64;
    for w in a.windows(2) {
        total += (w[1] - w[0]) * (n - w[1] + 1);
    }
    total
}

/// Nondecreasing window bounds `i <= h_i <= n`: position `i` watches the
/// positions `i+1..=h_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HessenbergFunction {
    h: Vec<u32>,
}

impl HessenbergFunction {
    pub fn new(h: Vec<u32>) -> Result<Self> {
        let n = h.len();
        if n == 0 {
            return Err(Error::Parse("h must be nonempty".into()));
        }
        for (i, &hi) in h.iter().enumerate() {
            if (hi as usize) < i + 1 || hi as usize > n {
                return Err(Error::Parse(format!(
                    "h[{}] = {} violates {} <= h <= {}",
                    i + 1,
                    hi,
                    i + 1,
                    n
                )));
            }
            if i > 0 && h[i - 1] > hi {
                return Err(Error::Parse(format!(
                    "h must be nondecreasing at {}",
                    i + 1
                )));
            }
        }
        Ok(HessenbergFunction { h })
    }

    /// The window function whose tracked pairs are exactly the adjacent
    /// pairs: `h_i = min(i + 1, n)`.
    pub fn adjacent(n: usize) -> Self {
        HessenbergFunction {
            h: (1..=n as u32).map(|i| (i + 1).min(n as u32)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.h.len()
    }

    pub fn at(&self, i: u32) -> u32 {
        self.h[(i - 1) as usize]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.h
    }

    /// Parse the text form `h=2,3,4,5,5`.
    pub fn parse_text(s: &str) -> Result<Self> {
        let rest = s
            .trim()
            .strip_prefix("h=")
            .ok_or_else(|| Error::Parse(format!("expected h=... in {s:?}")))?;
        let h = rest
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad h entry {t:?}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        HessenbergFunction::new(h)
    }
}

impl fmt::Display for HessenbergFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "h=")?;
        for (i, v) in self.h.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Set of pairs `(i, j)`, `i < j <= n`, meant as the inversions a permutation
/// shows inside the windows of a Hessenberg function.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct HInversionSet {
    n: usize,
    pairs: BTreeSet<(u32, u32)>,
}

impl HInversionSet {
    pub fn new(n: usize, pairs: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let pairs: BTreeSet<(u32, u32)> = pairs.into_iter().collect();
        for &(i, j) in &pairs {
            if i >= j {
                return Err(Error::Parse(format!("pair ({i},{j}) needs i < j")));
            }
            if j as usize > n {
                return Err(Error::VertexOutOfRange { vertex: j, n });
            }
        }
        Ok(HInversionSet { n, pairs })
    }

    /// Pairs `(i, i+1)` for each descent position.
    pub fn from_descents(d: &DescentSet) -> Self {
        HInversionSet {
            n: d.n(),
            pairs: d.positions().map(|i| (i, i + 1)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.pairs.iter().copied()
    }

    /// Does every pair fall inside the windows of `h`?
    pub fn fits(&self, h: &HessenbergFunction) -> bool {
        self.n == h.n() && self.pairs.iter().all(|&(i, j)| j <= h.at(i))
    }
}

impl fmt::Display for HInversionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (i, j)) in self.pairs.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "({i},{j})")?;
        }
        write!(f, "}}")
    }
}

/// Inversions of `sigma` visible inside the windows of `h`: pairs `i < j`
/// with `sigma_i > sigma_j` and `j <= h_i`.
pub fn h_inversion_set(sigma: &Permutation, h: &HessenbergFunction) -> Result<HInversionSet> {
    let n = sigma.n();
    if n != h.n() {
        return Err(Error::SizeMismatch {
            left: n,
            right: h.n(),
        });
    }
    let mut pairs = BTreeSet::new();
    for i in 1..=n as u32 {
        for j in (i + 1)..=h.at(i) {
            if sigma.at(i) > sigma.at(j) {
                pairs.insert((i, j));
            }
        }
    }
    Ok(HInversionSet { n, pairs })
}

/// All permutations whose windowed inversion set is exactly `s`, in
/// lexicographic order. Possibly empty.
pub fn hessenberg_family(
    h: &HessenbergFunction,
    s: &HInversionSet,
    limit: usize,
) -> Result<Vec<Permutation>> {
    let n = h.n();
    if s.n() != n {
        return Err(Error::SizeMismatch {
            left: s.n(),
            right: n,
        });
    }
    if n > limit {
        return Err(Error::LimitExceeded { n, limit });
    }
    let mut out = Vec::new();
    for_each_permutation(n, |vals| {
        let p = Permutation::new(vals.to_vec()).expect("enumeration emits bijections");
        if h_inversion_set(&p, h).expect("sizes match") == *s {
            out.push(p);
        }
    });
    Ok(out)
}

/// Diameter of the windowed-inversion family in the discordant-pair metric,
/// as the inversion-number gap between its unique maximum and unique minimum
/// inversion-number members.
///
/// Empty families are rejected as `NotAdmissible`, singletons report 0, and
/// a tie for either extreme is surfaced as `NonUniqueExtremes` instead of
/// silently picking a representative.
pub fn hessenberg_kendall_diameter(
    h: &HessenbergFunction,
    s: &HInversionSet,
    limit: usize,
) -> Result<u64> {
    let family = hessenberg_family(h, s, limit)?;
    hessenberg_diameter_of_family(&family)
}

/// Same endpoint formula, applied to an already-enumerated family.
pub fn hessenberg_diameter_of_family(family: &[Permutation]) -> Result<u64> {
    if family.is_empty() {
        return Err(Error::NotAdmissible);
    }
    if family.len() == 1 {
        return Ok(0);
    }
    let invs: Vec<u64> = family.iter().map(|p| p.inversion_number()).collect();
    let max = *invs.iter().max().unwrap();
    let min = *invs.iter().min().unwrap();
    if invs.iter().filter(|&&v| v == max).count() != 1
        || invs.iter().filter(|&&v| v == min).count() != 1
    {
        return Err(Error::NonUniqueExtremes);
    }
    Ok(max - min)
}
