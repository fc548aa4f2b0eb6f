//! Exact domination analysis under path addition.
//!
//! The crate computes the domination number γ(G) exactly, builds the
//! path-addition graphs `G_{u,v,k}`, and derives the path-addition numbers
//! `pa(u,v)`, `epa`, `Epa`, `ēpa`, `Ēpa`. Alongside the direct computation,
//! [`oracle`] predicts the same quantities from structural conditions on
//! `G` alone (γ-good and γ-critical vertices, common γ-sets, vertex
//! deletions) without ever solving a path-added graph, and [`verify`]
//! cross-checks the two over graph corpora.
//!
//! ```
//! use pathdom::{family::FamilySpec, path_addition::{pa_direct, PaValue}};
//!
//! let c4 = "cycle(4)".parse::<FamilySpec>().unwrap().generate().unwrap();
//! assert_eq!(pa_direct(&c4, 0, 2).unwrap(), PaValue::Finite(4));
//! ```

pub mod domination;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod path_addition;
pub mod verify;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::Graph;
pub use vertex_set::VertexSet;
