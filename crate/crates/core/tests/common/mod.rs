//! Helpers shared by the integration suites.

use std::time::Instant;

use permbound::RestrictionGraph;

/// Every labeled DAG on `n` vertices, by filtering all 2^(n(n-1)) simple
/// digraphs for acyclicity. Feasible for n <= 4 (543 DAGs at n = 4).
pub fn all_dags(n: usize) -> Vec<RestrictionGraph> {
    assert!(n <= 4, "exhaustive digraph sweep is sized for n <= 4");
    let mut slots = Vec::new();
    for u in 1..=n as u32 {
        for v in 1..=n as u32 {
            if u != v {
                slots.push((u, v));
            }
        }
    }
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << slots.len()) {
        let edges: Vec<(u32, u32)> = slots
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, e)| *e)
            .collect();
        let g = RestrictionGraph::new(n, edges).expect("no self-loops by construction");
        if g.is_acyclic() {
            out.push(g);
        }
    }
    out
}

/// Stopwatch for the acceptance pass lines.
pub struct Timer(Instant);

impl Timer {
    pub fn start() -> Self {
        Timer(Instant::now())
    }

    /// Prints the uniform pass line and returns elapsed seconds.
    pub fn pass(&self, criterion: &str, detail: &str) -> f64 {
        let secs = self.0.elapsed().as_secs_f64();
        println!("PASS {criterion}: {detail} ({secs:.2}s)");
        secs
    }
}
