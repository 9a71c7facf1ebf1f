use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

/// All exponent vectors `s` with `sum s_k roots[k] = target`.
pub fn kostant_partitions(roots: &[Vec<i64>], target: &[i64]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; roots.len()];
    let mut rem = target.to_vec();
    rec(roots, 0, &mut rem, &mut cur, &mut out);
    out
}

fn rec(roots: &[Vec<i64>], k: usize, rem: &mut Vec<i64>, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if rem.iter().all(|&x| x == 0) {
        out.push(cur.clone());
        return;
    }
    if k == roots.len() || rem.iter().any(|&x| x < 0) {
        return;
    }
    let r = &roots[k];
    let max = r.iter().zip(rem.iter()).filter(|(a, _)| **a > 0).map(|(a, b)| b / a).min().unwrap_or(0);
    for m in (0..=max).rev() {
        for (x, a) in rem.iter_mut().zip(r) {
            *x -= m * a;
        }
        cur[k] = m as u32;
        rec(roots, k + 1, rem, cur, out);
        for (x, a) in rem.iter_mut().zip(r) {
            *x += m * a;
        }
    }
    cur[k] = 0;
}

/// Number of Kostant partitions, by memoized recursion.
pub fn kostant_count(roots: &[Vec<i64>], target: &[i64]) -> u128 {
    fn go(roots: &[Vec<i64>], k: usize, rem: Vec<i64>, memo: &mut BTreeMap<(usize, Vec<i64>), u128>) -> u128 {
        if rem.iter().any(|&x| x < 0) {
            return 0;
        }
        if k == roots.len() {
            return u128::from(rem.iter().all(|&x| x == 0));
        }
        if let Some(&v) = memo.get(&(k, rem.clone())) {
            return v;
        }
        let mut total = 0;
        let mut r = rem.clone();
        loop {
            total += go(roots, k + 1, r.clone(), memo);
            for (x, a) in r.iter_mut().zip(&roots[k]) {
                *x -= a;
            }
            if r.iter().any(|&x| x < 0) {
                break;
            }
        }
        memo.insert((k, rem), total);
        total
    }
    go(roots, 0, target.to_vec(), &mut BTreeMap::new())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_partitions() {
        let roots = vec![vec![1, 0], vec![1, 1], vec![0, 1]];
        let p = kostant_partitions(&roots, &[1, 1]);
        assert_eq!(p.len(), 2);
        assert_eq!(kostant_count(&roots, &[2, 2]), 3);
        assert_eq!(kostant_partitions(&roots, &[2, 2]).len(), 3);
    }
}
