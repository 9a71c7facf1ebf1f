//! Polytopes and lattice sets.

mod counts;
mod dyck;
mod fflv;
mod g2;
mod halfspace;
mod hull;
mod lattice;

pub use counts::{count_n, p_polytope, sp4_count, sp4_polytope};
pub use dyck::{dyck_paths, DyckEnd, DyckEndKey, DyckKind, DyckPath};
pub use fflv::fflv_polytope;
pub use g2::{g2_box_1, g2_box_2, g2_conjecture_experiment, G2Row};
pub use halfspace::{count_lattice_points, lattice_points, visit_lattice_points, Halfspace, HalfspaceSystem};
pub use hull::{extreme_points, hull_lattice_points, in_hull};
pub use lattice::{minkowski_power, minkowski_sum, LatticeSet};
