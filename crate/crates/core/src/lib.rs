//! Diameters of permutation families cut out by directed restriction graphs.
//!
//! A restriction graph on positions `1..=n` demands `sigma_u > sigma_v` for
//! every edge `u -> v`; the permutations obeying all edges form a family
//! exactly when the graph is acyclic. This crate computes the exact maximum
//! coordinate displacement over such a family together with a witness pair,
//! decides when the discordant-pair (Kendall-Tau) diameter meets its
//! incomparable-pair ceiling by testing whether the induced order has
//! dimension at most 2, and covers two specializations: families sharing a
//! descent set and families sharing a windowed inversion set. A brute-force
//! oracle pins everything down at small sizes.
//!
//! ```
//! use permbound::{extremal, oracle, RestrictionGraph};
//!
//! # fn main() -> permbound::Result<()> {
//! // positions 1..=4; an edge u -> v forces sigma_u > sigma_v
//! let g = RestrictionGraph::new(4, [(2, 1), (2, 3), (4, 3), (2, 4)])?;
//!
//! let family = oracle::enumerate_family(&g, 8)?;
//! assert_eq!(family.len(), 3);
//!
//! let linf = extremal::linf_diameter(&g)?;
//! assert_eq!((linf.bound, linf.attained), (2, true));
//!
//! let kendall = extremal::kendall_diameter(&g, 8)?;
//! assert!(kendall.attained);
//! # Ok(())
//! # }
//! ```

mod bits;
pub mod error;
pub mod extremal;
pub mod families;
pub mod format;
pub mod graph;
pub mod oracle;
pub mod permutation;
pub mod sample;

pub use error::{Error, Result};
pub use extremal::{DiameterReport, Method, Realizer2};
pub use families::{DescentSet, Division, HInversionSet, HessenbergFunction};
pub use graph::{Poset, Reachability, Relabeling, RestrictionGraph};
pub use permutation::{Metric, Permutation};
