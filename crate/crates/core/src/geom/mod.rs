//! Geometric primitives shared by every builder.

pub mod bisector;
pub mod curve;
pub mod point;
pub mod rational;
pub mod site;

pub use bisector::{bisector, intersect, BisectorCurve, Intersection};
pub use curve::{Curve, Piece, Source};
pub use point::{Point2, Rect, V2};
pub use rational::Rational;
pub use site::{visible, weighted_distance, Side, SiteSet, VisibilityConstraint, WeightedSite};
