//! Root systems, Weyl group combinatorics, reduced words of the longest
//! element, convex orders, weights and the Weyl dimension formula.

mod labels;
mod partitions;
mod system;
mod weyl;

pub use labels::{parse_label, reference_order};
pub use partitions::{kostant_count, kostant_partitions};
pub use system::{build_root_system, CartanType, Family, RootSystem};
pub use weyl::{convex_order, reduced_words_of_w0, weyl_dim, ConvexOrder, ReducedWord, ReducedWords, Weight};
