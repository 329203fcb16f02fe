//! Minimal dense square-matrix type for the covariance algebra.
//!
//! State dimensions stay tiny (resolution bits plus a few polynomial
//! coefficients), so plain row-major storage with straightforward loops is
//! both fast enough and easy to instrument with exact operation counts.

use crate::scalar::Scalar;

/// Dense square matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![T::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            mitem_set(&mut m, i, i, T::one());
        }
        m
    }

    pub fn from_diagonal(diag: &[T]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            mitem_set(&mut m, i, i, d);
        }
        m
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> T {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.n + j] = v;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    /// y = M x.
    pub fn matvec(&self, x: &[T]) -> Vec<T> {
        debug_assert_eq!(x.len(), self.n);
        (0..self.n)
            .map(|i| dot(self.row(i), x))
            .collect()
    }

    /// x M xᵀ for a symmetric M.
    pub fn quadratic_form(&self, x: &[T]) -> T {
        let y = self.matvec(x);
        dot(&y, x)
    }

    /// M -= scale · a bᵀ.
    pub fn sub_outer_scaled(&mut self, a: &[T], b: &[T], scale: T) {
        debug_assert_eq!(a.len(), self.n);
        debug_assert_eq!(b.len(), self.n);
        for i in 0..self.n {
            let ai = a[i] * scale;
            let row = &mut self.data[i * self.n..(i + 1) * self.n];
            for (r, &bj) in row.iter_mut().zip(b) {
                *r = *r - ai * bj;
            }
        }
    }

    /// M += scale · a bᵀ.
    pub fn add_outer_scaled(&mut self, a: &[T], b: &[T], scale: T) {
        self.sub_outer_scaled(a, b, -scale);
    }

    pub fn scale(&mut self, s: T) {
        for v in &mut self.data {
            *v = *v * s;
        }
    }

    /// M ← (M + Mᵀ) / 2.
    pub fn symmetrize(&mut self) {
        let half = T::of(0.5);
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                let m = (self.get(i, j) + self.get(j, i)) * half;
                self.set(i, j, m);
                self.set(j, i, m);
            }
        }
    }

    pub fn trace(&self) -> T {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// max |M[i,j] − M[j,i]|.
    pub fn max_asymmetry(&self) -> T {
        let mut worst = T::zero();
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                worst = worst.max((self.get(i, j) - self.get(j, i)).abs());
            }
        }
        worst
    }

    /// max |M[i,j]|.
    pub fn max_abs(&self) -> T {
        self.data
            .iter()
            .fold(T::zero(), |acc, v| acc.max(v.abs()))
    }
}

#[inline]
fn mitem_set<T: Scalar>(m: &mut Matrix<T>, i: usize, j: usize, v: T) {
    let n = m.n;
    m.data[i * n + j] = v;
}

/// Plain dot product with a fixed left-to-right summation order.
#[inline]
pub fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = T::zero();
    for (&x, &y) in a.iter().zip(b) {
        acc = acc + x * y;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matvec_and_quadratic_form() {
        let mut m = Matrix::<f64>::zeros(2);
        m.set(0, 0, 2.0);
        m.set(0, 1, 1.0);
        m.set(1, 0, 1.0);
        m.set(1, 1, 3.0);
        assert_eq!(m.matvec(&[1.0, 1.0]), vec![3.0, 4.0]);
        assert_eq!(m.quadratic_form(&[1.0, 1.0]), 7.0);
        assert_eq!(m.trace(), 5.0);
    }

    #[test]
    fn outer_update_and_symmetrize() {
        let mut m = Matrix::<f64>::identity(2);
        m.sub_outer_scaled(&[1.0, 0.0], &[0.0, 1.0], 0.5);
        assert_eq!(m.get(0, 1), -0.5);
        assert_eq!(m.get(1, 0), 0.0);
        assert_eq!(m.max_asymmetry(), 0.5);
        m.symmetrize();
        assert_eq!(m.get(0, 1), -0.25);
        assert_eq!(m.get(1, 0), -0.25);
    }
}
