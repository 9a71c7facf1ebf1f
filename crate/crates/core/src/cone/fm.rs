//! Fourier-Motzkin elimination for homogeneous systems of strict and
//! non-strict inequalities. Exponential; only meant for small systems.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_integer::Integer;

/// `coeffs . x > 0` when `strict`, else `coeffs . x >= 0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Ineq {
    pub coeffs: Vec<i64>,
    pub strict: bool,
}

fn normalize(mut c: Vec<i64>) -> Vec<i64> {
    let g = c.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g > 1 {
        for x in c.iter_mut() {
            *x /= g;
        }
    }
    c
}

fn dedup(rows: Vec<Ineq>) -> Vec<Ineq> {
    let mut best: BTreeMap<Vec<i64>, bool> = BTreeMap::new();
    for r in rows {
        let c = normalize(r.coeffs);
        let e = best.entry(c).or_insert(false);
        *e |= r.strict;
    }
    best.into_iter().map(|(coeffs, strict)| Ineq { coeffs, strict }).collect()
}

/// Decides whether `{x : rows}` is nonempty by eliminating all variables.
/// Returns `None` if the row count exceeds `cap` during elimination.
pub fn fm_feasible(rows: &[Ineq], cap: usize) -> Option<bool> {
    let Some(n) = rows.first().map(|r| r.coeffs.len()) else { return Some(true) };
    let mut cur = dedup(rows.to_vec());
    for v in 0..n {
        let (mut pos, mut neg, mut zero) = (Vec::new(), Vec::new(), Vec::new());
        for r in cur {
            match r.coeffs[v].signum() {
                1 => pos.push(r),
                -1 => neg.push(r),
                _ => zero.push(r),
            }
        }
        for p in &pos {
            for q in &neg {
                let a = p.coeffs[v];
                let b = -q.coeffs[v];
                let c: Vec<i64> = p.coeffs.iter().zip(&q.coeffs).map(|(x, y)| b * x + a * y).collect();
                zero.push(Ineq { coeffs: c, strict: p.strict || q.strict });
            }
        }
        cur = dedup(zero);
        if cur.iter().any(|r| r.strict && r.coeffs.iter().all(|&x| x == 0)) {
            return Some(false);
        }
        if cur.len() > cap {
            return None;
        }
    }
    Some(!cur.iter().any(|r| r.strict && r.coeffs.iter().all(|&x| x == 0)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny() {
        // x > 0, y > 0, x - y > 0 is feasible; add y - x > 0 and it is not
        let mut rows = alloc::vec![
            Ineq { coeffs: alloc::vec![1, 0], strict: true },
            Ineq { coeffs: alloc::vec![0, 1], strict: true },
            Ineq { coeffs: alloc::vec![1, -1], strict: true },
        ];
        assert_eq!(fm_feasible(&rows, 1000), Some(true));
        rows.push(Ineq { coeffs: alloc::vec![-1, 1], strict: false });
        assert_eq!(fm_feasible(&rows, 1000), Some(false));
    }
}
