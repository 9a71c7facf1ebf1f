//! Printed inequality tables and degree vectors, transcribed verbatim.

/// C2, word 1212 (root labels).
pub const C2_QUANTUM: &[&str] = &["d_{1,1}+d_{2,2}>d_{1,2}", "d_{1,1}+d_{1,2}>d_{1,\\overline{1}}", "d_{2,2}+d_{1,\\overline{1}}>2d_{1,2}"];

pub const G2_CLASSICAL: &[&str] =
    &["d_1 + d_2 > d_{12}", "d_{1} + d_{12} > d_{112}", "d_{1} + d_{112} > d_{1112}", "d_2 + d_{1112} > d_{11122}", "d_{112} + d_{12} > d_{11122}"];

pub const G2_QUANTUM: &[&str] = &[
    "d_1+d_{11122}>2d_{112}",
    "d_{1112} + d_{11122} > 3d_{112}",
    "d_{1112} + d_{12} > 2d_{112}",
    "d_{1112} + d_{2} > d_{112} + d_{12}",
    "d_{112} + d_{2} > 2d_{12}",
    "d_{11122} + d_{2} > 3 d_{12}",
];

/// The two A3 forms that contradict each other.
pub const A3_CONTRADICTION: [&str; 2] = ["d_{1,2} + d_{2,3} > d_{2,2} + d_{1,3}", "d_{1,3} + d_{2,2} > d_{1,2} + d_{2,3}"];

pub const B3_W1: &[&str] = &[
    "d_{1,1} + d_{1,\\overline{2}} > 2d_{1,3}",
    "d_{1,2} + d_{1,\\overline{2}} > d_{2,2} + 2d_{1,3}",
    "d_{1,2} + d_{1,\\overline{3}} > 2d_{1,3}",
    "d_{1,2} + d_{2,\\overline{3}} > d_{2,2} + d_{1,\\overline{3}}",
    "d_{1,2} + d_{2,\\overline{3}} > d_{1,3} + d_{1,2}",
    "d_{2,2} + d_{2,\\overline{3}} > 2 d_{2,3}",
    "d_{1,3} + d_{2,\\overline{3}} > d_{1,\\overline{3}} + d_{2,3}",
    "d_{1,\\overline{2}} + d_{2,\\overline{3}} > d_{1,\\overline{3}} + 2d_{2,3}",
    "d_{1,\\overline{2}} + d_{3,3} > d_{1,\\overline{3}} + d_{2,3}",
    "d_{1,2} + d_{2,3} > d_{1,3} + d_{2,2}",
];

pub const B3_W2: &[&str] = &[
    "d_{1,1} + d_{1,\\overline{2}} > 2d_{1,3}",
    "d_{1,1} + d_{1,\\overline{2}} > d_{1,2} + d_{1,\\overline{3}}",
    "d_{1,2} + d_{1,\\overline{3}} > 2d_{1,3}",
    "d_{1,\\overline{3}} + d_{2,3} > d_{1,3} + d_{2,\\overline{3}}",
    "d_{1,\\overline{3}} + d_{2,2} > d_{1,3} + d_{2,3}",
    "d_{1,\\overline{3}} + d_{2,2} > d_{1,2} + d_{2,\\overline{3}}",
    "d_{1,3} + d_{2,3} > d_{1,2} + d_{2,\\overline{3}}",
    "d_{2,\\overline{3}} + d_{2,2} > 2d_{2,3}",
    "d_{1,3} + d_{2,2} > d_{1,2} + d_{2,3}",
];

/// `d_k` is the k-th root of the reference order.
pub const C3_W1: &[&str] = &[
    "d_1 + d_5 > d_2 + d_4", "d_3+d_9 > 2d_4", "d_7 + d_9 > 2d_8", "d_3 + d_7 > 2d_5",
    "d_1 + d_7 > d_4 + d_6", "d_2+d_7 > d_5 + d_6", "d_2 + d_7 > d_4 + 2d_6", "d_3+d_7 > d_4+d_5+d_6",
    "d_3+d_7> 2d_4+2d_6", "d_3+d_8 > d_4 + d_5", "d_3+d_8 >2d_4 + d_6", "d_2 + d_8 > d_4 + d_6",
];

pub const C3_W2: &[&str] = &[
    "d_1 + d_5 > d_2 + d_4", "d_3 + d_9 > 2d_4", "d_7 + d_9 > 2d_8", "d_3 + d_7 > 2d_5",
    "d_1 + d_7 > d_2 + d_8", "d_4 + d_7 > d_5 + d_8", "d_3 + d_7 > d_2 + d_5 + d_8", "d_3 + d_7 > 2d_2 + 2d_8",
    "d_3 + d_6 > d_2 + d_5", "d_3 + d_6 > 2d_2 + d_8", "d_4 + d_7 > d_2 + d_8", "d_4 + d_6 > d_2 + d_8",
];

/// Minimal lattice points of the first C3 cone, in reference order.
pub const C3_MINIMAL: [[i64; 9]; 4] =
    [[2, 1, 1, 1, 1, 1, 4, 4, 5], [3, 2, 2, 1, 1, 1, 3, 3, 4], [5, 4, 4, 1, 1, 1, 1, 1, 2], [4, 3, 3, 1, 1, 1, 2, 2, 3]];

/// `d_k` is the k-th root of the D4 word's convex order.
pub const D4_FORMS: &[&str] = &[
    "d_1 + d_3 > d_2", "d_1 + d_8 > d_5 + d_7", "d_1 + d_8 > d_6", "d_1 + d_9 > d_5", "d_1 + d_{12} > d_{11}",
    "d_2 + d_8 > d_3+d_5+d_7", "d_2 + d_8 > d_3 + d_6", "d_2 + d_8 > d_4 + d_7", "d_2 + d_9 > d_3 + d_5",
    "d_2 + d_9 > d_4", "d_2 + d_{10} > d_6", "d_2 + d_{12} > d_3 + d_{11}", "d_2 + d_{12} > d_7",
    "d_3 + d_5 > d_4", "d_3 + d_{10} > d_7 + d_9", "d_3 + d_{10} > d_8", "d_3 + d_{11} > d_7",
    "d_4 + d_{10} > d_5 + d_7 +d_9", "d_4 + d_{10} > d_5 + d_8", "d_4 + d_{10} > d_6 + d_9",
    "d_4 + d_{11} > d_5 + d_7", "d_4 + d_{11} > d_6", "d_4 + d_{12} > d_8", "d_5 + d_7 > d_6",
    "d_5 + d_{12} > d_9 + d_{11}", "d_5 + d_{12} > d_{10}", "d_6 + d_{12} > d_7 + d_9 + d_{11}", "d_6 + d_{12} > d_7 + d_{10}",
    "d_6 + d_{12} > d_8 + d_{11}", "d_7 + d_9 > d_8", "d_9 + d_{11} > d_{10}",
];

pub const D4_POINT: [i64; 12] = [5, 5, 1, 2, 4, 1, 1, 2, 6, 10, 12, 20];

pub const A2_WORDS: [&str; 2] = ["121", "212"];
pub const C2_WORDS: [&str; 2] = ["1212", "2121"];
pub const G2_WORDS: [&str; 2] = ["121212", "212121"];
pub const A3_WORDS: [&str; 2] = ["121321", "132312"];
pub const B3_WORDS: [&str; 2] = ["121321323", "132321232"];
pub const C3_WORDS: [&str; 2] = ["123212323", "132321232"];
pub const D4_WORD: &str = "212324212324";

/// C2 degree in reference order `(d_{1,1}, d_{1,1b}, d_{1,2}, d_{2,2})`.
pub const C2_DEGREE: [i64; 4] = [1, 1, 1, 2];
