//! Line orbits of PG(3,q) under the stabilizer group of the twisted cubic.
//!
//! The crate is organized bottom-up:
//!
//! * [`gf`]: exact GF(q) arithmetic with exp/log tables;
//! * [`pg3`]: points, planes and Plücker-keyed lines of PG(3,q);
//! * [`cubic`]: the twisted cubic, its osculating developable, and the
//!   classification of lines, points and planes;
//! * [`action`]: the stabilizer group, its point stabilizers and the null polarity;
//! * [`orbits`]: orbit decomposition by generator BFS or full expansion;
//! * [`harness`]: censuses, exports and the orbit-count verification report.

pub mod action;
pub mod cubic;
pub mod gf;
pub mod harness;
pub mod matrix;
pub mod orbits;
pub mod pg3;

pub use action::{GroupElement, Polarity};
pub use cubic::{CubicModel, CubicParam, LineClass};
pub use gf::{Elem, FieldSpec};
pub use orbits::{Method, OrbitPartition};
pub use pg3::{LineId, Plane, PluckerLine, Point};
