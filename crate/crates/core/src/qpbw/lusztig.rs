use alloc::vec::Vec;

use super::algebra::{QAlgebra, QElem, Term};
use crate::exact::Field;

/// Image of a single generator under `T_i` (or its inverse).
fn image_of_letter<F: Field>(alg: &QAlgebra<'_, F>, i: usize, j: usize, is_e: bool, inverse: bool) -> QElem<F> {
    let rs = alg.root_system();
    let qp = alg.qparam();
    let di = rs.sym[i];
    if i == j {
        let minus = F::one().neg();
        return match (is_e, inverse) {
            // T_i(E_i) = -F_i K_i
            (true, false) => alg.mul(&alg.f(i), &alg.k_i(i, 1)).scale(&minus),
            // T_i(F_i) = -K_i^{-1} E_i
            (false, false) => alg.mul(&alg.k_i(i, -1), &alg.e(i)).scale(&minus),
            // T_i^{-1}(E_i) = -K_i^{-1} F_i
            (true, true) => alg.mul(&alg.k_i(i, -1), &alg.f(i)).scale(&minus),
            // T_i^{-1}(F_i) = -E_i K_i
            (false, true) => alg.mul(&alg.e(i), &alg.k_i(i, 1)).scale(&minus),
        };
    }
    let m = (-rs.cartan[i][j]) as u32;
    let gen_i = if is_e { alg.e(i) } else { alg.f(i) };
    let gen_j = if is_e { alg.e(j) } else { alg.f(j) };
    let divided = |p: u32| alg.pow(&gen_i, p).scale(&qp.qfact(p, di).inv());
    let mut out = QElem::zero(alg.rank());
    for r in 0..=m {
        let s = m - r;
        let sign = if r % 2 == 0 { F::one() } else { F::one().neg() };
        let exp = if is_e { -(r as i64) * di } else { r as i64 * di };
        let c = sign.mul(&qp.pow(exp));
        // T_i:      E_i^{(s)} E_j E_i^{(r)}  and  F_i^{(r)} F_j F_i^{(s)}
        // T_i^{-1}: E_i^{(r)} E_j E_i^{(s)}  and  F_i^{(s)} F_j F_i^{(r)}
        let (left, right) = match (is_e, inverse) {
            (true, false) | (false, true) => (s, r),
            (false, false) | (true, true) => (r, s),
        };
        let term = alg.mul(&alg.mul(&divided(left), &gen_j), &divided(right));
        out = out.add(&term.scale(&c));
    }
    out
}

/// `s_i` acting on a root-lattice vector.
fn reflect_k(alg: &QAlgebra<'_, impl Field>, i: usize, k: &[i32]) -> Vec<i32> {
    let rs = alg.root_system();
    let pairing: i64 = (0..rs.rank()).map(|j| k[j] as i64 * rs.cartan[i][j]).sum();
    let mut out = k.to_vec();
    out[i] -= pairing as i32;
    out
}

fn apply<F: Field>(alg: &QAlgebra<'_, F>, i: usize, x: &QElem<F>, inverse: bool) -> QElem<F> {
    let n = alg.rank();
    let f_img: Vec<QElem<F>> = (0..n).map(|j| image_of_letter(alg, i, j, false, inverse)).collect();
    let e_img: Vec<QElem<F>> = (0..n).map(|j| image_of_letter(alg, i, j, true, inverse)).collect();
    let mut out = QElem::zero(n);
    for (t, c) in x.terms() {
        let mut acc = QElem::from_term(Term::unit(n), c.clone());
        for &l in &t.f {
            acc = alg.mul(&acc, &f_img[l as usize]);
        }
        for &l in &t.e {
            acc = alg.mul(&acc, &e_img[l as usize]);
        }
        if t.k.iter().any(|&v| v != 0) {
            acc = alg.mul(&acc, &alg.k(&reflect_k(alg, i, &t.k)));
        }
        out = out.add(&acc);
    }
    out
}

/// Lusztig's automorphism `T_i`: `T_i(E_i) = -F_i K_i`, `T_i(F_i) = -K_i^{-1} E_i`,
/// `T_i(K_j) = K_j K_i^{-c_ij}` and the divided-power sums for `E_j`, `F_j`.
pub fn lusztig_t<F: Field>(alg: &QAlgebra<'_, F>, i: usize, x: &QElem<F>) -> QElem<F> {
    apply(alg, i, x, false)
}

/// The inverse of [`lusztig_t`].
pub fn lusztig_t_inv<F: Field>(alg: &QAlgebra<'_, F>, i: usize, x: &QElem<F>) -> QElem<F> {
    apply(alg, i, x, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{QParam, RatFunc};
    use crate::roots::{CartanType, RootSystem};

    #[test]
    fn a2_images() {
        let rs = RootSystem::new(CartanType::parse("A2").unwrap());
        let qp = QParam::new(RatFunc::q());
        let alg = QAlgebra::new(&rs, &qp);
        // T_1(F_2) = F_2 F_1 - q F_1 F_2
        let t = lusztig_t(&alg, 0, &alg.f(1));
        let want = alg.mul(&alg.f(1), &alg.f(0)).sub(&alg.mul(&alg.f(0), &alg.f(1)).scale(&qp.pow(1)));
        assert_eq!(t, want);
        // T_1(K_2) = K_2 K_1
        assert_eq!(lusztig_t(&alg, 0, &alg.k_i(1, 1)), alg.k(&[1, 1]));
        // T_1(F_1) = -K_1^{-1} E_1
        assert_eq!(lusztig_t(&alg, 0, &alg.f(0)), alg.mul(&alg.k_i(0, -1), &alg.e(0)).scale(&RatFunc::from_i64(-1)));
    }

    #[test]
    fn inverse_round_trips() {
        for ty in ["A2", "B2", "G2"] {
            let rs = RootSystem::new(CartanType::parse(ty).unwrap());
            let qp = QParam::new(RatFunc::q());
            let alg = QAlgebra::new(&rs, &qp);
            let mut samples = Vec::new();
            for j in 0..2 {
                samples.push(alg.f(j));
                samples.push(alg.e(j));
                samples.push(alg.k_i(j, 1));
                samples.push(alg.k_i(j, -1));
            }
            let gens = samples.clone();
            for a in &gens {
                for b in &gens {
                    samples.push(alg.mul(a, b));
                }
            }
            for i in 0..2 {
                for x in &samples {
                    let y = lusztig_t_inv(&alg, i, &lusztig_t(&alg, i, x));
                    assert_eq!(&y, x, "{ty} T_{i}^-1 T_{i}");
                    let z = lusztig_t(&alg, i, &lusztig_t_inv(&alg, i, x));
                    assert_eq!(&z, x, "{ty} T_{i} T_{i}^-1");
                }
            }
        }
    }
}
