//! Exact arithmetic on monomial ideals together with fast
//! combinatorial deciders for depth-zero questions about their powers.
//!
//! The core objects are [`Monomial`] and [`MonomialIdeal`]
//! (minimal-generator arithmetic: membership, products, powers,
//! colons, intersections). On top of that sit:
//!
//! * [`socle`] — socle monomials of `S/J`, depth-zero detection, and
//!   the exponent bounds they obey, via two independently implemented
//!   enumeration strategies;
//! * [`graph`] — edge ideals and the triangle-domination criterion for
//!   `depth S/I^2 = 0`;
//! * [`complex`] — facet ideals and the facet-intersection conditions
//!   for the maximal socle monomial of `S/I^k`;
//! * [`constructions`] / [`formulas`] — the named ideal families, the
//!   degree threshold `((k-1)n + 1)/k` with exact rational
//!   comparisons, and the Veronese depth formula;
//! * [`census`] / [`verify`] — exhaustive and seeded instance sweeps
//!   checking every decider against the ideal-arithmetic oracle.
//!
//! ```
//! use socle::{Graph, SocleStrategy};
//! use socle::socle::{socle_report_of_power, DEFAULT_BOX_BUDGET};
//!
//! let graph = Graph::new(3, [(1, 2), (1, 3), (2, 3)]).unwrap();
//! let ideal = graph.edge_ideal().unwrap();
//! let report = socle_report_of_power(
//!     &ideal, 2, SocleStrategy::CrossChecked, DEFAULT_BOX_BUDGET,
//! ).unwrap();
//! assert!(report.depth_zero);
//! assert!(report.has_maximal_socle); // x1*x2*x3 kills every variable
//! ```

pub mod census;
pub mod complex;
pub mod constructions;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod ideal;
pub mod monomial;
pub mod sampling;
pub mod socle;
pub mod verify;

pub use complex::{
    IntersectionCheck, MaximalSocleCheck, SimplicialComplex, SingletonCover, VertexSet,
};
pub use error::{Error, ParseError};
pub use graph::Graph;
pub use ideal::MonomialIdeal;
pub use monomial::Monomial;
pub use socle::{
    depth_zero_profile, is_socle_element, socle_box_bound, socle_report,
    socle_report_of_power, socle_report_with, verify_exponent_bound, SocleReport,
    SocleStrategy, DEFAULT_BOX_BUDGET,
};
