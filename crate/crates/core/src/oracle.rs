//! Brute-force reference implementations for small sizes.
//!
//! Everything here favors directness over cleverness: these routines are the
//! ground truth the closed forms and constructions are checked against, so
//! they share as little machinery with them as possible.

use crate::error::{Error, Result};
use crate::graph::{Poset, RestrictionGraph};
use crate::permutation::{Metric, Permutation};

fn check_limit(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        return Err(Error::LimitExceeded { n, limit });
    }
    Ok(())
}

/// All permutations satisfying `g`, in lexicographic order.
///
/// Cyclic graphs have no satisfying permutation; after the acyclicity gate
/// this returns the empty family rather than an error. Backtracks over
/// positions `1..=n`, pruning with the tight per-vertex value interval
/// `[|R(v)|+1, n - |R^{-1}(v)|]` and with every closure constraint against
/// already-placed vertices.
pub fn enumerate_family(g: &RestrictionGraph, limit: usize) -> Result<Vec<Permutation>> {
    check_limit(g.n(), limit)?;
    if !g.is_acyclic() {
        return Ok(Vec::new());
    }
    let n = g.n();
    if n == 0 {
        return Ok(vec![Permutation::new(Vec::new())?]);
    }
    let reach = g.transitive_closure()?;
    let mut lo = vec![0u32; n];
    let mut hi = vec![0u32; n];
    for v in 1..=n as u32 {
        lo[(v - 1) as usize] = reach.reachable_count(v)? as u32 + 1;
        hi[(v - 1) as usize] = (n - reach.inverse_reachable_count(v)?) as u32;
    }
    // after[i] / before[i]: positions j < i that vertex i+1 must exceed / stay under
    let mut above = vec![Vec::new(); n];
    let mut below = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..i {
            if reach.reaches(i as u32 + 1, j as u32 + 1) {
                above[i].push(j);
            } else if reach.reaches(j as u32 + 1, i as u32 + 1) {
                below[i].push(j);
            }
        }
    }

    let mut out = Vec::new();
    let mut vals = vec![0u32; n];
    let mut used = vec![false; n];
    #[allow(clippy::too_many_arguments)] // private recursion over shared context
    fn rec(
        i: usize,
        n: usize,
        lo: &[u32],
        hi: &[u32],
        above: &[Vec<usize>],
        below: &[Vec<usize>],
        vals: &mut Vec<u32>,
        used: &mut Vec<bool>,
        out: &mut Vec<Permutation>,
    ) {
        if i == n {
            out.push(Permutation::new(vals.clone()).expect("search emits bijections"));
            return;
        }
        'next: for v in lo[i]..=hi[i] {
            if used[(v - 1) as usize] {
                continue;
            }
            for &j in &above[i] {
                if v <= vals[j] {
                    continue 'next;
                }
            }
            for &j in &below[i] {
                if v >= vals[j] {
                    continue 'next;
                }
            }
            used[(v - 1) as usize] = true;
            vals[i] = v;
            rec(i + 1, n, lo, hi, above, below, vals, used, out);
            used[(v - 1) as usize] = false;
        }
        vals[i] = 0;
    }
    rec(
        0, n, &lo, &hi, &above, &below, &mut vals, &mut used, &mut out,
    );
    Ok(out)
}

/// Size of the satisfying family.
pub fn count_admissible(g: &RestrictionGraph, limit: usize) -> Result<usize> {
    Ok(enumerate_family(g, limit)?.len())
}

/// Maximum pairwise distance over the satisfying family, with the first
/// maximizing pair in lexicographic order of family indices. Families of
/// size at most one have diameter 0 and no witness.
pub fn brute_diameter(
    g: &RestrictionGraph,
    metric: Metric,
    limit: usize,
) -> Result<(u64, Option<(Permutation, Permutation)>)> {
    let fam = enumerate_family(g, limit)?;
    if fam.len() <= 1 {
        return Ok((0, None));
    }
    let mut best = 0u64;
    let mut pair = (0, 1);
    for i in 0..fam.len() {
        for j in (i + 1)..fam.len() {
            let d = match metric {
                Metric::Linf => fam[i].linf_distance(&fam[j])? as u64,
                Metric::Kendall => fam[i].kendall_distance(&fam[j])?,
            };
            if d > best {
                best = d;
                pair = (i, j);
            }
        }
    }
    Ok((best, Some((fam[pair.0].clone(), fam[pair.1].clone()))))
}

/// All linear extensions of the reachability order, as vertex listings in
/// lexicographic order, by recursive minimal-element removal.
pub fn linear_extensions(g: &RestrictionGraph, limit: usize) -> Result<Vec<Vec<u32>>> {
    check_limit(g.n(), limit)?;
    let poset = g.to_poset()?;
    let mut out = Vec::new();
    visit_extensions(&poset, &mut |ext| {
        out.push(ext.to_vec());
        true
    });
    Ok(out)
}

/// Drive `f` over every linear extension in lexicographic order until it
/// returns false.
fn visit_extensions(poset: &Poset, f: &mut impl FnMut(&[u32]) -> bool) -> bool {
    fn rec(
        poset: &Poset,
        alive: &mut Vec<u32>,
        ext: &mut Vec<u32>,
        f: &mut impl FnMut(&[u32]) -> bool,
    ) -> bool {
        if alive.is_empty() {
            return f(ext);
        }
        for v in poset.minimal_among(alive) {
            let at = alive.iter().position(|&u| u == v).unwrap();
            alive.remove(at);
            ext.push(v);
            let keep_going = rec(poset, alive, ext, f);
            ext.pop();
            alive.insert(at, v);
            if !keep_going {
                return false;
            }
        }
        true
    }
    let mut alive: Vec<u32> = (1..=poset.n() as u32).collect();
    rec(poset, &mut alive, &mut Vec::new(), f)
}

/// Does the reachability order have order dimension at most 2?
///
/// Searches for a realizer: for each linear extension `L1`, every
/// incomparable pair must be ordered oppositely by the partner extension, so
/// the partner is forced as a complete relation; `L1` extends to a realizer
/// exactly when that forced relation is acyclic.
pub fn brute_dimension_le2(g: &RestrictionGraph, limit: usize) -> Result<bool> {
    check_limit(g.n(), limit)?;
    let n = g.n();
    let poset = g.to_poset()?;
    if poset.incomparable_pairs().is_empty() {
        return Ok(true);
    }
    let mut found = false;
    visit_extensions(&poset, &mut |ext| {
        let mut pos = vec![0usize; n + 1];
        for (k, &v) in ext.iter().enumerate() {
            pos[v as usize] = k;
        }
        // forced partner: keep comparabilities, flip every incomparable pair
        let mut indeg = vec![0usize; n + 1];
        let mut out: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
        for a in 1..=n as u32 {
            for b in 1..=n as u32 {
                if a == b {
                    continue;
                }
                if poset.less(a, b) {
                    out[a as usize].push(b);
                    indeg[b as usize] += 1;
                }
            }
        }
        for &(a, b) in poset.incomparable_pairs() {
            let (hi, lo) = if pos[a as usize] < pos[b as usize] {
                (b, a)
            } else {
                (a, b)
            };
            out[hi as usize].push(lo);
            indeg[lo as usize] += 1;
        }
        let mut ready: Vec<u32> = (1..=n as u32).filter(|&v| indeg[v as usize] == 0).collect();
        let mut seen = 0;
        while let Some(v) = ready.pop() {
            seen += 1;
            for &w in &out[v as usize] {
                indeg[w as usize] -= 1;
                if indeg[w as usize] == 0 {
                    ready.push(w);
                }
            }
        }
        if seen == n {
            found = true;
            return false; // stop the search
        }
        true
    });
    Ok(found)
}

/// Unique minimal graph with the same reachability: keeps exactly the edges
/// `(u, v)` with no intermediate vertex `w` satisfying `u ~> w ~> v`.
pub fn transitive_reduction(g: &RestrictionGraph) -> Result<RestrictionGraph> {
    let reach = g.transitive_closure()?;
    let mut kept = Vec::new();
    for &(u, v) in g.edges() {
        let redundant = (1..=g.n() as u32)
            .any(|w| w != u && w != v && reach.reaches(u, w) && reach.reaches(w, v));
        if !redundant {
            kept.push((u, v));
        }
    }
    RestrictionGraph::new(g.n(), kept)
}
