use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::{Error, Result};

/// An integer linear form `a`, read as the strict inequality `<a, d> > 0`.
/// Coefficients are stored with content one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm {
    pub coeffs: Vec<i64>,
}

impl LinearForm {
    pub fn new(mut coeffs: Vec<i64>) -> Result<Self> {
        let g = coeffs.iter().fold(0i64, |g, &x| g.gcd(&x));
        if g == 0 {
            return Err(Error::InvalidArgument("linear form is identically zero".into()));
        }
        for x in coeffs.iter_mut() {
            *x /= g;
        }
        Ok(LinearForm { coeffs })
    }

    /// `d_a + d_b - sum_k m_k d_{c_k}` from index lists.
    pub fn from_relation(dim: usize, plus: &[usize], minus: &[(usize, i64)]) -> Result<Self> {
        let mut c = alloc::vec![0i64; dim];
        for &p in plus {
            c[p] += 1;
        }
        for &(k, m) in minus {
            c[k] -= m;
        }
        Self::new(c)
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn eval(&self, d: &[i64]) -> i64 {
        self.coeffs.iter().zip(d).map(|(a, b)| a * b).sum()
    }

    /// Renders as `lhs > rhs` with positive coefficients on each side.
    pub fn render(&self, label: &dyn Fn(usize) -> String) -> String {
        let side = |sign: i64| -> String {
            let parts: Vec<String> = self
                .coeffs
                .iter()
                .enumerate()
                .filter(|(_, &c)| c * sign > 0)
                .map(|(k, &c)| {
                    let m = c.abs();
                    if m == 1 {
                        format!("d_{{{}}}", label(k))
                    } else {
                        format!("{m}d_{{{}}}", label(k))
                    }
                })
                .collect();
            if parts.is_empty() {
                String::from("0")
            } else {
                parts.join(" + ")
            }
        };
        format!("{} > {}", side(1), side(-1))
    }

    /// A permuted copy: coordinate `k` of `self` moves to `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut c = alloc::vec![0i64; self.dim()];
        for (k, &x) in self.coeffs.iter().enumerate() {
            c[perm[k]] = x;
        }
        LinearForm { coeffs: c }
    }
}

/// An integer point `d` in the nonnegative orthant indexed by positive roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeFunction {
    pub values: Vec<i64>,
}

impl DegreeFunction {
    pub fn new(values: Vec<i64>) -> Result<Self> {
        if values.iter().any(|&x| x < 0) {
            return Err(Error::InvalidArgument("degree values must be nonnegative".into()));
        }
        Ok(DegreeFunction { values })
    }

    pub fn ones(n: usize) -> Self {
        DegreeFunction { values: alloc::vec![1; n] }
    }

    /// `deg_d(s) = sum_k s_k d_k`.
    pub fn degree(&self, s: &[u32]) -> i64 {
        self.values.iter().zip(s).map(|(d, &m)| d * m as i64).sum()
    }

    pub fn sum(&self) -> i64 {
        self.values.iter().sum()
    }
}

/// A finite list of strict forms together with `d >= 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrictCone {
    pub labels: Vec<String>,
    pub forms: Vec<LinearForm>,
}

impl StrictCone {
    pub fn new(labels: Vec<String>, forms: Vec<LinearForm>) -> Result<Self> {
        let n = labels.len();
        if let Some(f) = forms.iter().find(|f| f.dim() != n) {
            return Err(Error::DimensionMismatch { expected: n, got: f.dim() });
        }
        Ok(StrictCone { labels, forms })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// Sorted and deduplicated copy.
    pub fn normalized(&self) -> Self {
        let mut f = self.forms.clone();
        f.sort();
        f.dedup();
        StrictCone { labels: self.labels.clone(), forms: f }
    }

    /// The cone cut out by the forms of both cones.
    pub fn intersect(&self, o: &StrictCone) -> Result<StrictCone> {
        if self.dim() != o.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: o.dim() });
        }
        let mut f = self.forms.clone();
        f.extend(o.forms.iter().cloned());
        Ok(StrictCone { labels: self.labels.clone(), forms: f }.normalized())
    }

    pub fn render(&self) -> Vec<String> {
        let labels = self.labels.clone();
        self.forms.iter().map(|f| f.render(&|k| labels[k].clone())).collect()
    }
}

/// True iff `d >= 0` and every form is strictly positive at `d`.
pub fn contains(c: &StrictCone, d: &DegreeFunction) -> Result<bool> {
    if d.values.len() != c.dim() {
        return Err(Error::DimensionMismatch { expected: c.dim(), got: d.values.len() });
    }
    Ok(d.values.iter().all(|&x| x >= 0) && c.forms.iter().all(|f| f.eval(&d.values) > 0))
}

impl fmt::Display for StrictCone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in self.render() {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}
