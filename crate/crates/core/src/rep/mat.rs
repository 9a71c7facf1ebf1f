use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::exact::Rat;

/// Dense rational matrix, `data[row][col]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<Rat>>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![vec![Rat::zero(); cols]; rows] }
    }

    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        debug_assert_eq!(v.len(), self.cols);
        self.data
            .iter()
            .map(|row| {
                let mut s = Rat::zero();
                for (a, b) in row.iter().zip(v) {
                    if !Zero::is_zero(a) && !Zero::is_zero(b) {
                        s += a * b;
                    }
                }
                s
            })
            .collect()
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        assert_eq!(self.cols, o.rows, "matrix shapes");
        let mut out = Mat::zero(self.rows, o.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[r][k];
                if Zero::is_zero(a) {
                    continue;
                }
                for c in 0..o.cols {
                    let b = &o.data[k][c];
                    if !Zero::is_zero(b) {
                        out.data[r][c] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn sub(&self, o: &Mat) -> Mat {
        let mut out = self.clone();
        for (r, row) in out.data.iter_mut().enumerate() {
            for (c, x) in row.iter_mut().enumerate() {
                *x -= &o.data[r][c];
            }
        }
        out
    }

    pub fn scale(&self, s: &Rat) -> Mat {
        let mut out = self.clone();
        for row in out.data.iter_mut() {
            for x in row.iter_mut() {
                *x *= s;
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.iter().all(Zero::is_zero))
    }
}
