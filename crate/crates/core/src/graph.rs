//! Restriction graphs, reachability closures, and the induced order.

use crate::bits::BitMatrix;
use crate::error::{Error, Result};

/// Directed graph on vertices `1..=n`. An edge `u -> v` constrains every
/// satisfying permutation to place a larger value at `u` than at `v`.
///
/// Edges are stored sorted and deduplicated; self-loops are rejected at
/// construction. `n = 0` is the legal empty graph (it arises as an induced
/// subgraph on the empty vertex set), though the text formats reject it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictionGraph {
    n: usize,
    edges: Vec<(u32, u32)>,
}

impl RestrictionGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut list: Vec<(u32, u32)> = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            for w in [u, v] {
                if w == 0 || w as usize > n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            list.push((u, v));
        }
        list.sort_unstable();
        list.dedup();
        Ok(RestrictionGraph { n, edges: list })
    }

    pub fn empty(n: usize) -> Self {
        RestrictionGraph {
            n,
            edges: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges sorted lexicographically, without duplicates.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_ok()
    }

    /// Vertex deletion order of repeated smallest-labeled-source removal.
    /// On cyclic input the error carries a witness cycle.
    pub fn topological_order(&self) -> Result<Vec<u32>> {
        let n = self.n;
        let mut indeg = vec![0usize; n];
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(u, v) in &self.edges {
            out[(u - 1) as usize].push((v - 1) as usize);
            indeg[(v - 1) as usize] += 1;
        }
        let mut ready: std::collections::BTreeSet<usize> =
            (0..n).filter(|&v| indeg[v] == 0).collect();
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
            Err(Error::CyclicGraph {
                cycle: self.extract_cycle(&order),
            })
        }
    }

    /// One directed cycle among the vertices left over by source elimination,
    /// as `[v1, ..., vk]` with edges `v1 -> ... -> vk -> v1`, rotated so the
    /// smallest vertex comes first.
    fn extract_cycle(&self, processed: &[u32]) -> Vec<u32> {
        let n = self.n;
        let mut left = vec![true; n];
        for &v in processed {
            left[(v - 1) as usize] = false;
        }
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(u, v) in &self.edges {
            let (u, v) = ((u - 1) as usize, (v - 1) as usize);
            if left[u] && left[v] {
                preds[v].push(u);
            }
        }
        for p in &mut preds {
            p.sort_unstable();
        }
        let start = (0..n).find(|&v| left[v]).expect("a cycle vertex remains");
        // Every leftover vertex keeps a leftover predecessor, so walking
        // smallest predecessors must revisit a vertex.
        let mut seen_at = vec![usize::MAX; n];
        seen_at[start] = 0;
        let mut walk = vec![start];
        loop {
            let cur = *walk.last().unwrap();
            let prev = preds[cur][0];
            if seen_at[prev] != usize::MAX {
                // walk[j..] lists the cycle against edge direction
                let mut cyc: Vec<u32> = walk[seen_at[prev]..]
                    .iter()
                    .rev()
                    .map(|&v| v as u32 + 1)
                    .collect();
                let at_min = (0..cyc.len()).min_by_key(|&i| cyc[i]).unwrap();
                cyc.rotate_left(at_min);
                return cyc;
            }
            seen_at[prev] = walk.len();
            walk.push(prev);
        }
    }

    /// Reachability along oriented paths of length >= 1, computed by OR-ing
    /// successor rows in reverse topological order.
    pub fn transitive_closure(&self) -> Result<Reachability> {
        let order = self.topological_order()?;
        let n = self.n;
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(u, v) in &self.edges {
            out[(u - 1) as usize].push((v - 1) as usize);
        }
        let mut fwd = BitMatrix::new(n);
        for &v in order.iter().rev() {
            let v = (v - 1) as usize;
            for &w in &out[v] {
                fwd.set(v, w);
                fwd.or_row_from(v, w);
            }
        }
        let rev = fwd.transpose();
        Ok(Reachability { n, fwd, rev })
    }

    pub fn to_poset(&self) -> Result<Poset> {
        let reach = self.transitive_closure()?;
        let n = self.n;
        let mut leq = reach.fwd.clone();
        for v in 0..n {
            leq.set(v, v);
        }
        let mut incomp = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if !reach.fwd.get(i, j) && !reach.fwd.get(j, i) {
                    incomp.push((i as u32 + 1, j as u32 + 1));
                }
            }
        }
        Ok(Poset { n, leq, incomp })
    }

    /// Subgraph induced by the vertex set `s`, relabeled `1..=|s|` by the
    /// order-preserving bijection. Duplicates in `s` are collapsed.
    pub fn induced_subgraph(&self, s: &[u32]) -> Result<(RestrictionGraph, Relabeling)> {
        let mut old: Vec<u32> = Vec::with_capacity(s.len());
        for &v in s {
            if v == 0 || v as usize > self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
            old.push(v);
        }
        old.sort_unstable();
        old.dedup();
        let map = Relabeling { old };
        let edges: Vec<(u32, u32)> = self
            .edges
            .iter()
            .filter_map(|&(u, v)| Some((map.to_new(u)?, map.to_new(v)?)))
            .collect();
        let sub = RestrictionGraph {
            n: map.len(),
            edges: {
                let mut e = edges;
                e.sort_unstable();
                e
            },
        };
        Ok((sub, map))
    }
}

/// Order-preserving bijection between a vertex subset and `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relabeling {
    old: Vec<u32>, // ascending; old[i] is the original label of new vertex i+1
}

impl Relabeling {
    pub fn len(&self) -> usize {
        self.old.len()
    }

    pub fn is_empty(&self) -> bool {
        self.old.is_empty()
    }

    pub fn to_new(&self, old: u32) -> Option<u32> {
        self.old.binary_search(&old).ok().map(|i| i as u32 + 1)
    }

    pub fn to_old(&self, new: u32) -> u32 {
        self.old[(new - 1) as usize]
    }
}

/// Transitive closure of a restriction graph: `reaches(u, v)` holds exactly
/// when an oriented path of length >= 1 leads from `u` to `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reachability {
    n: usize,
    fwd: BitMatrix,
    rev: BitMatrix,
}

impl Reachability {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn reaches(&self, u: u32, v: u32) -> bool {
        self.fwd.get((u - 1) as usize, (v - 1) as usize)
    }

    fn check(&self, v: u32) -> Result<usize> {
        if v == 0 || v as usize > self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        Ok((v - 1) as usize)
    }

    /// `R(v)`: vertices reachable from `v`, ascending.
    pub fn reachable_set(&self, v: u32) -> Result<Vec<u32>> {
        let v = self.check(v)?;
        Ok(self.fwd.row_ones(v).map(|c| c as u32 + 1).collect())
    }

    /// `R^{-1}(v)`: vertices from which `v` is reachable, ascending.
    pub fn inverse_reachable_set(&self, v: u32) -> Result<Vec<u32>> {
        let v = self.check(v)?;
        Ok(self.rev.row_ones(v).map(|c| c as u32 + 1).collect())
    }

    pub fn reachable_count(&self, v: u32) -> Result<usize> {
        Ok(self.fwd.row_count(self.check(v)?))
    }

    pub fn inverse_reachable_count(&self, v: u32) -> Result<usize> {
        Ok(self.rev.row_count(self.check(v)?))
    }

    /// All pairs `(u, v)` with `u` reaching `v`, lexicographic.
    pub fn pairs(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.fwd.row_ones(u) {
                out.push((u as u32 + 1, v as u32 + 1));
            }
        }
        out
    }
}

/// Reflexive partial order induced by reachability, with the incomparable
/// pairs materialized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    leq: BitMatrix,
    incomp: Vec<(u32, u32)>,
}

impl Poset {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn leq(&self, a: u32, b: u32) -> bool {
        self.leq.get((a - 1) as usize, (b - 1) as usize)
    }

    pub fn less(&self, a: u32, b: u32) -> bool {
        a != b && self.leq(a, b)
    }

    /// Incomparable pairs `(i, j)` with `i < j`, lexicographic.
    pub fn incomparable_pairs(&self) -> &[(u32, u32)] {
        &self.incomp
    }

    pub fn is_total_order(&self) -> bool {
        self.incomp.is_empty()
    }

    /// Minimal elements of the sub-poset on `alive`, ascending.
    pub(crate) fn minimal_among(&self, alive: &[u32]) -> Vec<u32> {
        alive
            .iter()
            .copied()
            .filter(|&v| alive.iter().all(|&u| u == v || !self.less(u, v)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // 2 -> {1, 3, 4}, 4 -> 3: the four-vertex example used throughout.
    pub(crate) fn example_graph() -> RestrictionGraph {
        RestrictionGraph::new(4, [(2, 1), (2, 3), (4, 3), (2, 4)]).unwrap()
    }

    #[test]
    fn construction_validates() {
        assert!(RestrictionGraph::new(3, [(1, 1)]).is_err());
        assert!(RestrictionGraph::new(3, [(0, 2)]).is_err());
        assert!(RestrictionGraph::new(3, [(1, 4)]).is_err());
        // duplicates collapse
        let g = RestrictionGraph::new(3, [(1, 2), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(RestrictionGraph::empty(1).n(), 1);
    }

    #[test]
    fn acyclicity() {
        assert!(example_graph().is_acyclic());
        let tri = RestrictionGraph::new(3, [(1, 2), (2, 3), (3, 1)]).unwrap();
        assert!(!tri.is_acyclic());
        match tri.topological_order() {
            Err(Error::CyclicGraph { cycle }) => assert_eq!(cycle, vec![1, 2, 3]),
            other => panic!("expected cycle witness, got {other:?}"),
        }
        // single vertex, no edges
        assert!(RestrictionGraph::empty(1).is_acyclic());
    }

    #[test]
    fn topological_order_prefers_small_labels() {
        assert_eq!(
            example_graph().topological_order().unwrap(),
            vec![2, 1, 4, 3]
        );
        assert_eq!(
            RestrictionGraph::empty(3).topological_order().unwrap(),
            vec![1, 2, 3]
        );
    }

    /// Path-search reachability used as an independent check.
    fn dfs_reaches(g: &RestrictionGraph, from: u32, to: u32) -> bool {
        let mut stack = vec![from];
        let mut seen = vec![false; g.n() + 1];
        while let Some(x) = stack.pop() {
            for &(u, v) in g.edges() {
                if u == x && !seen[v as usize] {
                    if v == to {
                        return true;
                    }
                    seen[v as usize] = true;
                    stack.push(v);
                }
            }
        }
        false
    }

    #[test]
    fn closure_of_example() {
        let g = example_graph();
        let r = g.transitive_closure().unwrap();
        assert_eq!(r.pairs(), vec![(2, 1), (2, 3), (2, 4), (4, 3)]);
        assert_eq!(r.reachable_set(2).unwrap(), vec![1, 3, 4]);
        assert_eq!(r.reachable_set(1).unwrap(), Vec::<u32>::new());
        assert_eq!(r.inverse_reachable_set(3).unwrap(), vec![2, 4]);
        assert_eq!(r.inverse_reachable_set(2).unwrap(), Vec::<u32>::new());
        for u in 1..=4u32 {
            for v in 1..=4u32 {
                if u != v {
                    assert_eq!(r.reaches(u, v), dfs_reaches(&g, u, v));
                }
            }
        }
    }

    #[test]
    fn closure_is_transitive_on_a_chain() {
        let g = RestrictionGraph::new(3, [(1, 2), (2, 3)]).unwrap();
        let r = g.transitive_closure().unwrap();
        assert!(r.reaches(1, 3));
        assert_eq!(r.pairs(), vec![(1, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn poset_of_example() {
        let p = example_graph().to_poset().unwrap();
        assert_eq!(p.incomparable_pairs(), &[(1, 3), (1, 4)]);
        assert!(p.leq(2, 3) && p.leq(2, 2) && !p.leq(3, 2));
        assert!(p.less(4, 3) && !p.less(3, 3));
        assert!(!p.is_total_order());
        let chain = RestrictionGraph::new(3, [(1, 2), (2, 3)]).unwrap();
        assert!(chain.to_poset().unwrap().is_total_order());
        // comparable + incomparable pairs partition all pairs
        let n = 4;
        let r = example_graph().transitive_closure().unwrap();
        let comparable = (1..=n as u32)
            .flat_map(|i| ((i + 1)..=n as u32).map(move |j| (i, j)))
            .filter(|&(i, j)| r.reaches(i, j) || r.reaches(j, i))
            .count();
        assert_eq!(comparable + p.incomparable_pairs().len(), n * (n - 1) / 2);
    }

    #[test]
    fn induced_subgraph_relabels() {
        let g = example_graph();
        let (sub, map) = g.induced_subgraph(&[3, 4]).unwrap();
        assert_eq!(sub.n(), 2);
        assert_eq!(sub.edges(), &[(2, 1)]);
        assert_eq!(map.to_new(3), Some(1));
        assert_eq!(map.to_new(4), Some(2));
        assert_eq!(map.to_new(1), None);
        assert_eq!(map.to_old(2), 4);

        let (empty, map) = g.induced_subgraph(&[]).unwrap();
        assert_eq!(empty.n(), 0);
        assert!(map.is_empty());

        assert!(g.induced_subgraph(&[5]).is_err());
    }
}
