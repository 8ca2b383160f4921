use std::fmt;
use std::ops::Mul;

use crate::scalar::Ring;

/// Dense square matrix over a generic scalar ring, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    dim: usize,
    entries: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn new(dim: usize, entries: Vec<T>) -> Self {
        assert_eq!(entries.len(), dim * dim, "matrix needs dim^2 entries");
        Self { dim, entries }
    }

    /// 2x2 matrix `[[a, b], [c, d]]`.
    pub fn two_by_two(a: T, b: T, c: T, d: T) -> Self {
        Self::new(2, vec![a, b, c, d])
    }

    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![T::zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = T::one();
        }
        Self { dim, entries }
    }

    pub fn scalar(dim: usize, c: T) -> Self {
        let mut m = Self::identity(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = c.clone();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &T {
        &self.entries[row * self.dim + col]
    }

    pub fn trace(&self) -> T {
        (0..self.dim).fold(T::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    /// Determinant by cofactor expansion; only meant for the small matrices
    /// the group builders use.
    pub fn determinant(&self) -> T {
        match self.dim {
            0 => T::one(),
            1 => self.entries[0].clone(),
            2 => {
                self.get(0, 0).clone() * self.get(1, 1).clone()
                    - self.get(0, 1).clone() * self.get(1, 0).clone()
            }
            n => {
                let mut acc = T::zero();
                for col in 0..n {
                    let minor: Vec<T> = (1..n)
                        .flat_map(|r| (0..n).filter(move |&c| c != col).map(move |c| (r, c)))
                        .map(|(r, c)| self.get(r, c).clone())
                        .collect();
                    let term = self.get(0, col).clone() * Matrix::new(n - 1, minor).determinant();
                    acc = if col % 2 == 0 { acc + term } else { acc - term };
                }
                acc
            }
        }
    }

    pub fn pow(&self, exp: u64) -> Self {
        let mut acc = Self::identity(self.dim);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }
}

impl<'a, T: Ring> Mul<&'a Matrix<T>> for &'a Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = T::zero();
                for k in 0..n {
                    let a = self.get(i, k);
                    let b = rhs.get(k, j);
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc = acc + a.clone() * b.clone();
                }
                entries.push(acc);
            }
        }
        Matrix { dim: n, entries }
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[T]> = self.entries.chunks(self.dim.max(1)).collect();
        f.debug_list().entries(rows).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Fp;

    #[test]
    fn determinant_and_trace() {
        let m = Matrix::two_by_two(Fp::<5>::new(1), Fp::new(1), Fp::new(0), Fp::new(1));
        assert_eq!(m.determinant(), Fp::new(1));
        assert_eq!(m.trace(), Fp::new(2));
        assert_eq!(m.pow(5), Matrix::identity(2));
        let three = Matrix::new(
            3,
            [2, 0, 1, 1, 3, 2, 1, 1, 1]
                .iter()
                .map(|&x| Fp::<7>::new(x))
                .collect(),
        );
        // 2*(3-2) - 0 + 1*(1-3) = 0
        assert_eq!(three.determinant(), Fp::new(0));
    }
}
