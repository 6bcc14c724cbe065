//! Voronoi diagrams under visibility constraints, multiplicative weights and
//! order-k sequence labels, with brute-force oracles and a Monte Carlo
//! harness for their combinatorial complexity on random inputs.
//!
//! Every diagram variant is built the same way: collect the relevant curve
//! pieces, form their arrangement, label each face by probing one interior
//! point, and merge neighbouring faces that carry the same label.
//!
//! ```
//! use genvor::diagram::build_multiplicative;
//! use genvor::geom::{SiteSet, V2};
//!
//! let sites = SiteSet::from_weighted(&[(0.0, 0.0, 1.0), (3.0, 0.0, 2.0)])?;
//! let d = build_multiplicative(&sites, None)?;
//! assert_eq!(d.face_count(), 2);
//! // one closed circular edge, no vertices, no point at infinity
//! assert_eq!(d.complexity(None).total, 3);
//! assert!(d.label_at(V2::new(4.0, 0.0)).is_some());
//! # Ok::<(), genvor::GenvorError>(())
//! ```
//!
//! The `examples/` directory has one program per capability:
//!
//! | example | shows |
//! |---|---|
//! | `random_instances` | the three random models and the JSON instance format |
//! | `standard_diagram` | the ordinary Voronoi diagram and oracle validation |
//! | `semi_diagram` | half-plane visibility and `NotVisible` regions |
//! | `multiplicative_diagram` | Apollonius bisectors and split regions |
//! | `order_k` | order-k and order-k sequence diagrams, growth against n k^3 |
//! | `cover_failure` | probability that random half-planes miss part of the plane |
//! | `scaling` | complexity against n with CSV output |
//! | `grid_locality` | per-cell complexity on a sqrt(n) grid |
//! | `dominance_prune` | stretched sites and pruning around a center |
//! | `render_svg` | SVG output |
//! | `reference_vs_scalable` | the two construction paths agree |

pub mod cli;
pub mod diagram;
pub mod error;
pub mod experiments;
pub mod geom;
pub mod instance;
pub mod models;
pub mod oracle;

pub use error::{GenvorError, Result};
