//! Diameter bounds, extremal pair constructions, and the order-dimension test.

use crate::bits::BitMatrix;
use crate::error::{Error, Result};
use crate::graph::{Poset, RestrictionGraph};
use crate::oracle;
use crate::permutation::{Metric, Permutation};

/// Satisfying permutation built by repeatedly assigning the largest unused
/// value to the smallest-labeled source and deleting it.
pub fn greedy_construct(g: &RestrictionGraph) -> Result<Permutation> {
    Permutation::from_linear_extension(&g.topological_order()?)
}

/// Exact maximum coordinate displacement over the satisfying family:
/// `max_v (n - |R(v)| - |R^{-1}(v)| - 1)`. Zero exactly when the family is a
/// singleton.
pub fn linf_diameter_bound(g: &RestrictionGraph) -> Result<u32> {
    let reach = g.transitive_closure()?;
    let n = g.n();
    let mut best = 0u32;
    for v in 1..=n as u32 {
        let free = n - reach.reachable_count(v)? - reach.inverse_reachable_count(v)? - 1;
        best = best.max(free as u32);
    }
    Ok(best)
}

/// Assign `values` (descending) to `subset` along the greedy deletion order
/// of the induced subgraph.
fn greedy_fill(
    g: &RestrictionGraph,
    subset: &[u32],
    values: impl Iterator<Item = u32>,
    into: &mut [u32],
) -> Result<()> {
    let (sub, map) = g.induced_subgraph(subset)?;
    for (&v, val) in sub.topological_order()?.iter().zip(values) {
        into[(map.to_old(v) - 1) as usize] = val;
    }
    Ok(())
}

/// Pair of satisfying permutations at exactly the maximum coordinate
/// displacement.
///
/// Picks the vertex `k` minimizing `|R(k)| + |R^{-1}(k)|` (smallest label on
/// ties), pins it to the two ends of its feasible value interval, gives
/// `R(k)` the lowest values and `R^{-1}(k)` the highest values identically in
/// both permutations, and fills the rest greedily from the two leftover value
/// blocks, which differ only by a shift of one.
pub fn linf_extremal_pair(g: &RestrictionGraph) -> Result<(Permutation, Permutation)> {
    let n = g.n();
    let reach = g.transitive_closure()?;
    if n == 0 {
        let empty = Permutation::new(Vec::new())?;
        return Ok((empty.clone(), empty));
    }
    let k = (1..=n as u32)
        .min_by_key(|&v| {
            (
                reach.reachable_count(v).unwrap() + reach.inverse_reachable_count(v).unwrap(),
                v,
            )
        })
        .unwrap();
    let down = reach.reachable_set(k)?; // gets values 1..=a in both
    let up = reach.inverse_reachable_set(k)?; // gets values n-b+1..=n in both
    let (a, b) = (down.len(), up.len());
    let mid: Vec<u32> = (1..=n as u32)
        .filter(|&v| v != k && !reach.reaches(k, v) && !reach.reaches(v, k))
        .collect();

    let mut sig = vec![0u32; n];
    let mut rho = vec![0u32; n];
    sig[(k - 1) as usize] = a as u32 + 1;
    rho[(k - 1) as usize] = (n - b) as u32;
    for target in [&mut sig, &mut rho] {
        greedy_fill(g, &down, (1..=a as u32).rev(), target)?;
        greedy_fill(g, &up, ((n - b + 1) as u32..=n as u32).rev(), target)?;
    }
    greedy_fill(g, &mid, (a as u32 + 2..=(n - b) as u32).rev(), &mut sig)?;
    greedy_fill(g, &mid, (a as u32 + 1..=(n - b - 1) as u32).rev(), &mut rho)?;
    Ok((Permutation::new(sig)?, Permutation::new(rho)?))
}

/// Count of incomparable pairs: the ceiling for the discordant-pair distance
/// between satisfying permutations.
pub fn kendall_upper_bound(g: &RestrictionGraph) -> Result<u64> {
    Ok(g.to_poset()?.incomparable_pairs().len() as u64)
}

/// Orient the undirected graph `(1..=n, edges)` so the result is transitive,
/// if possible.
///
/// Seeds the smallest unoriented edge and propagates forced orientations:
/// once `a -> b` is chosen, any edge `a - c` with `c` non-adjacent to `b`
/// must read `a -> c`, and any edge `c - b` with `c` non-adjacent to `a`
/// must read `c -> b`. Completed implication classes leave the active graph.
/// The propagation never backtracks; a forced conflict means no transitive
/// orientation exists. The finished orientation is verified transitive
/// outright, which is the correctness gate for everything downstream.
pub fn transitive_orientation(n: usize, edges: &[(u32, u32)]) -> Option<Vec<(u32, u32)>> {
    let mut active = BitMatrix::new(n);
    let mut list: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
    for &(a, b) in edges {
        let (a, b) = ((a - 1) as usize, (b - 1) as usize);
        active.set(a, b);
        active.set(b, a);
        list.push((a.min(b), a.max(b)));
    }
    list.sort_unstable();
    list.dedup();
    let mut oriented = BitMatrix::new(n);

    for &(sa, sb) in &list {
        if oriented.get(sa, sb) || oriented.get(sb, sa) {
            continue;
        }
        // force the implication class seeded by sa -> sb
        let mut class = vec![(sa, sb)];
        let mut queue = std::collections::VecDeque::from([(sa, sb)]);
        oriented.set(sa, sb);
        while let Some((x, y)) = queue.pop_front() {
            let force = |from: usize,
                         to: usize,
                         oriented: &mut BitMatrix,
                         queue: &mut std::collections::VecDeque<(usize, usize)>,
                         class: &mut Vec<(usize, usize)>| {
                if oriented.get(to, from) {
                    return false; // both directions forced
                }
                if !oriented.get(from, to) {
                    oriented.set(from, to);
                    queue.push_back((from, to));
                    class.push((from, to));
                }
                true
            };
            for c in active.row_ones(x).collect::<Vec<_>>() {
                if c != y
                    && !active.get(y, c)
                    && !force(x, c, &mut oriented, &mut queue, &mut class)
                {
                    return None;
                }
            }
            for c in active.row_ones(y).collect::<Vec<_>>() {
                if c != x
                    && !active.get(x, c)
                    && !force(c, y, &mut oriented, &mut queue, &mut class)
                {
                    return None;
                }
            }
        }
        for &(x, y) in &class {
            active.clear(x, y);
            active.clear(y, x);
        }
    }

    // explicit transitivity verification
    for a in 0..n {
        for b in oriented.row_ones(a).collect::<Vec<_>>() {
            if !oriented.row_contains(a, b) {
                return None;
            }
        }
    }
    let mut out: Vec<(u32, u32)> = Vec::with_capacity(list.len());
    for (a, b) in list {
        if oriented.get(a, b) {
            out.push((a as u32 + 1, b as u32 + 1));
        } else {
            out.push((b as u32 + 1, a as u32 + 1));
        }
    }
    out.sort_unstable();
    Some(out)
}

/// Two linear extensions whose permutation images realize the discordant-pair
/// ceiling: they agree exactly on comparable pairs and flip every
/// incomparable pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realizer2 {
    ext1: Vec<u32>,
    ext2: Vec<u32>,
}

impl Realizer2 {
    pub fn ext1(&self) -> &[u32] {
        &self.ext1
    }

    pub fn ext2(&self) -> &[u32] {
        &self.ext2
    }

    /// Permutation images of the two extensions.
    pub fn permutations(&self) -> Result<(Permutation, Permutation)> {
        Ok((
            Permutation::from_linear_extension(&self.ext1)?,
            Permutation::from_linear_extension(&self.ext2)?,
        ))
    }

    /// Relation-level check: pairs ordered the same way in both extensions
    /// must be exactly the strict comparabilities.
    pub fn realizes(&self, poset: &Poset) -> bool {
        let n = poset.n();
        if self.ext1.len() != n || self.ext2.len() != n {
            return false;
        }
        let mut pos1 = vec![0usize; n + 1];
        let mut pos2 = vec![0usize; n + 1];
        for (k, &v) in self.ext1.iter().enumerate() {
            pos1[v as usize] = k;
        }
        for (k, &v) in self.ext2.iter().enumerate() {
            pos2[v as usize] = k;
        }
        for a in 1..=n as u32 {
            for b in 1..=n as u32 {
                if a == b {
                    continue;
                }
                let both =
                    pos1[a as usize] < pos1[b as usize] && pos2[a as usize] < pos2[b as usize];
                if both != poset.less(a, b) {
                    return false;
                }
            }
        }
        true
    }
}

/// Smallest-label-first topological sort of the union of the strict order
/// and an orientation of its incomparable pairs. The union of a partial
/// order with a transitive orientation of its incomparability graph is a
/// total order, so failure here is defensive only.
fn extension_of_union(poset: &Poset, extra: &[(u32, u32)]) -> Result<Vec<u32>> {
    let n = poset.n();
    let mut indeg = vec![0usize; n];
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for a in 1..=n as u32 {
        for b in 1..=n as u32 {
            if a != b && poset.less(a, b) {
                out[(a - 1) as usize].push((b - 1) as usize);
                indeg[(b - 1) as usize] += 1;
            }
        }
    }
    for &(a, b) in extra {
        out[(a - 1) as usize].push((b - 1) as usize);
        indeg[(b - 1) as usize] += 1;
    }
    let mut ready: std::collections::BTreeSet<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(&v) = ready.iter().next() {
        ready.remove(&v);
        order.push(v as u32 + 1);
        for &w in &out[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                ready.insert(w);
            }
        }
    }
    if order.len() == n {
        Ok(order)
    } else {
        Err(Error::InternalInconsistency(
            "orientation union is cyclic".into(),
        ))
    }
}

/// Realizer of the reachability order by two linear extensions, when the
/// order has dimension at most 2; `None` otherwise.
///
/// Dimension at most 2 is equivalent to the incomparability graph having a
/// transitive orientation `Q`; the extensions are then topological orders of
/// the strict order joined with `Q` and with `Q` reversed.
pub fn dimension_at_most_two(g: &RestrictionGraph) -> Result<Option<Realizer2>> {
    let poset = g.to_poset()?;
    let Some(q) = transitive_orientation(g.n(), poset.incomparable_pairs()) else {
        return Ok(None);
    };
    let ext1 = extension_of_union(&poset, &q)?;
    let reversed: Vec<(u32, u32)> = q.iter().map(|&(a, b)| (b, a)).collect();
    let ext2 = extension_of_union(&poset, &reversed)?;
    Ok(Some(Realizer2 { ext1, ext2 }))
}

/// Satisfying pair meeting the incomparable-pair ceiling, when the order has
/// dimension at most 2. Returns the identical pair for singleton families.
pub fn kendall_extremal_pair(g: &RestrictionGraph) -> Result<Option<(Permutation, Permutation)>> {
    match dimension_at_most_two(g)? {
        Some(r) => Ok(Some(r.permutations()?)),
        None => Ok(None),
    }
}

/// How a diameter value was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Closed form over the reachability closure.
    Formula,
    /// Witness pair built from a two-extension realizer.
    Realizer,
    /// Exhaustive family enumeration.
    Oracle,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Formula => "formula",
            Method::Realizer => "realizer",
            Method::Oracle => "oracle",
        }
    }
}

/// Diameter answer: the reported value, whether it is known to be attained,
/// a witness pair when one is in hand, and the pathway that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiameterReport {
    pub metric: Metric,
    pub bound: u64,
    pub attained: bool,
    pub witness: Option<(Permutation, Permutation)>,
    pub method: Method,
}

/// Exact maximum coordinate displacement with its witness pair. Always
/// attained on acyclic input.
pub fn linf_diameter(g: &RestrictionGraph) -> Result<DiameterReport> {
    let bound = linf_diameter_bound(g)? as u64;
    let witness = linf_extremal_pair(g)?;
    Ok(DiameterReport {
        metric: Metric::Linf,
        bound,
        attained: true,
        witness: Some(witness),
        method: Method::Formula,
    })
}

/// Discordant-pair diameter report.
///
/// Dimension at most 2 settles it exactly at the incomparable-pair count
/// with a realizer witness. Otherwise the value is strictly below that
/// ceiling; for `n <= exhaustive_limit` the oracle pins it exactly, and
/// beyond the limit the report falls back to the unattained ceiling.
pub fn kendall_diameter(g: &RestrictionGraph, exhaustive_limit: usize) -> Result<DiameterReport> {
    let bound = kendall_upper_bound(g)?;
    if let Some(r) = dimension_at_most_two(g)? {
        let witness = r.permutations()?;
        return Ok(DiameterReport {
            metric: Metric::Kendall,
            bound,
            attained: true,
            witness: Some(witness),
            method: Method::Realizer,
        });
    }
    if g.n() <= exhaustive_limit {
        let (value, witness) = oracle::brute_diameter(g, Metric::Kendall, exhaustive_limit)?;
        let witness = match witness {
            Some(pair) => pair,
            // unreachable: a non-realizable order has incomparable pairs,
            // hence at least two satisfying permutations
            None => {
                let p = greedy_construct(g)?;
                (p.clone(), p)
            }
        };
        return Ok(DiameterReport {
            metric: Metric::Kendall,
            bound: value,
            attained: true,
            witness: Some(witness),
            method: Method::Oracle,
        });
    }
    Ok(DiameterReport {
        metric: Metric::Kendall,
        bound,
        attained: false,
        witness: None,
        method: Method::Formula,
    })
}
