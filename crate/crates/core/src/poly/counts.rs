use alloc::format;

use super::HalfspaceSystem;
use crate::{Error, Result};

/// `P(a, b) = {x, y >= 0 : x + 2y <= a, x + y <= b}`.
pub fn p_polytope(a: i64, b: i64) -> HalfspaceSystem {
    let mut h = HalfspaceSystem::new(2);
    h.push([1, 2].into(), a).expect("dim 2");
    h.push([1, 1].into(), b).expect("dim 2");
    h
}

/// Closed form for the number of lattice points of `P(a, b)`, by cases.
pub fn count_n(a: u64, b: u64) -> u128 {
    let (a, b) = (a as i128, b as i128);
    let diag = |a: i128| if a % 2 == 1 {
        let l = (a + 1) / 2;
        l * (l + 1)
    } else {
        let l = a / 2;
        (l + 1) * (l + 1)
    };
    let v = if b >= a {
        diag(a)
    } else if a >= 2 * b {
        (b + 1) * (b + 2) / 2
    } else if a % 2 == 0 {
        // -l^2 + 2lb - b^2/2 + b/2 + l + 1, doubled
        let l = a / 2;
        (-2 * l * l + 4 * l * b - b * b + b + 2 * l + 2) / 2
    } else {
        // -l^2 + 2lb - b^2/2 + 3b/2 + 1, doubled
        let l = (a - 1) / 2;
        (-2 * l * l + 4 * l * b - b * b + 3 * b + 2) / 2
    };
    v as u128
}

/// `SP_4(m1, m2)` in coordinates `(x1, x2, x3, x4)`.
pub fn sp4_polytope(m1: i64, m2: i64) -> HalfspaceSystem {
    let mut h = HalfspaceSystem::new(4);
    h.push_upper(0, m1);
    h.push_upper(3, m2);
    h.push([2, 1, 2, 2].into(), 2 * (m1 + m2)).expect("dim 4");
    h.push([1, 1, 1, 2].into(), m1 + 2 * m2).expect("dim 4");
    h
}

/// `(m1+1)(m2+1)(m1+m2+2)(m1+2m2+3) / 6`.
pub fn sp4_count(m1: u64, m2: u64) -> Result<u128> {
    let (a, b) = (m1 as u128, m2 as u128);
    let num = (a + 1) * (b + 1) * (a + b + 2) * (a + 2 * b + 3);
    if num % 6 != 0 {
        return Err(Error::Internal(format!("sp4 count for ({m1},{m2}) is not an integer")));
    }
    Ok(num / 6)
}
