//! Small dense complex-matrix helpers shared by the representation-theory
//! and Hopf-algebra modules: products, Hermitian eigenvalues, nullspaces.
//!
//! Everything here is desk-scale (dimensions well under 100), so we keep a
//! plain row-major `Vec<Complex64>` layout and lean on `nalgebra` only for
//! the symmetric eigensolve behind numerical rank decisions.

use nalgebra::DMatrix;
use num_complex::Complex64;

pub type C64 = Complex64;

pub const ZERO: C64 = Complex64::new(0.0, 0.0);
pub const ONE: C64 = Complex64::new(1.0, 0.0);

/// Dense row-major complex matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<C64>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMatrix {
            rows,
            cols,
            data: vec![ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<C64>>) -> Self {
        let r = rows.len();
        let c = if r > 0 { rows[0].len() } else { 0 };
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix rows");
            data.extend(row);
        }
        CMatrix { rows: r, cols: c, data }
    }

    pub fn mul(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.cols, other.rows, "matrix dim mismatch");
        let mut out = CMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == ZERO {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn add(&self, other: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(other.data.iter()) {
            *x += *y;
        }
        out
    }

    pub fn scale(&self, s: C64) -> CMatrix {
        let mut out = self.clone();
        for x in out.data.iter_mut() {
            *x *= s;
        }
        out
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> CMatrix {
        let mut out = CMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn trace(&self) -> C64 {
        assert_eq!(self.rows, self.cols);
        (0..self.rows).map(|i| self[(i, i)]).sum()
    }

    /// Max entrywise deviation from another matrix.
    pub fn max_dev(&self, other: &CMatrix) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|a| a.norm()).fold(0.0, f64::max)
    }

    /// Deviation from the identity, used for unitarity checks.
    pub fn dev_from_identity(&self) -> f64 {
        self.max_dev(&CMatrix::identity(self.rows))
    }
}

impl std::ops::Index<(usize, usize)> for CMatrix {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.cols + j]
    }
}

/// Eigenvalues of a Hermitian matrix, ascending.
///
/// Uses the standard real embedding `[[Re, -Im], [Im, Re]]`, which doubles
/// every eigenvalue, then deduplicates by taking every second one.
pub fn hermitian_eigenvalues(m: &CMatrix) -> Vec<f64> {
    assert_eq!(m.rows, m.cols);
    let n = m.rows;
    if n == 0 {
        return vec![];
    }
    let mut real = DMatrix::<f64>::zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            let z = m[(i, j)];
            real[(i, j)] = z.re;
            real[(i, j + n)] = -z.im;
            real[(i + n, j)] = z.im;
            real[(i + n, j + n)] = z.re;
        }
    }
    // Symmetrize away rounding noise before the eigensolve.
    let sym = (&real + real.transpose()) * 0.5;
    let eig = sym.symmetric_eigen();
    let mut vals: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
    vals.into_iter().step_by(2).collect()
}

/// Numerical rank of a Hermitian positive semidefinite Gram matrix with a
/// relative eigenvalue threshold.
pub fn gram_rank(gram: &CMatrix, rel_threshold: f64) -> usize {
    let vals = hermitian_eigenvalues(gram);
    let max = vals.iter().cloned().fold(0.0, f64::max);
    if max <= 0.0 {
        return 0;
    }
    vals.iter().filter(|&&v| v > max * rel_threshold).count()
}

/// Basis of the (right) nullspace of `m`, via complex Gaussian elimination
/// with partial pivoting. Entries below `tol` are treated as zero.
pub fn nullspace(m: &CMatrix, tol: f64) -> Vec<Vec<C64>> {
    let rows = m.rows;
    let cols = m.cols;
    let mut a = m.data.clone();
    let at = |a: &Vec<C64>, i: usize, j: usize| a[i * cols + j];

    let mut pivot_cols = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        // partial pivot on column c
        let (mut best, mut best_row) = (0.0f64, r);
        for i in r..rows {
            let v = at(&a, i, c).norm();
            if v > best {
                best = v;
                best_row = i;
            }
        }
        if best <= tol {
            continue;
        }
        if best_row != r {
            for j in 0..cols {
                a.swap(r * cols + j, best_row * cols + j);
            }
        }
        let piv = at(&a, r, c);
        for j in 0..cols {
            a[r * cols + j] /= piv;
        }
        for i in 0..rows {
            if i != r {
                let f = at(&a, i, c);
                if f.norm() > 0.0 {
                    for j in 0..cols {
                        let v = at(&a, r, j);
                        a[i * cols + j] -= f * v;
                    }
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }

    let free_cols: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    let mut basis = Vec::new();
    for &fc in &free_cols {
        let mut v = vec![ZERO; cols];
        v[fc] = ONE;
        for (ri, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -at(&a, ri, fc);
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eigenvalues_of_diagonal() {
        let mut m = CMatrix::zeros(3, 3);
        m[(0, 0)] = C64::new(2.0, 0.0);
        m[(1, 1)] = C64::new(-1.0, 0.0);
        m[(2, 2)] = C64::new(0.5, 0.0);
        let vals = hermitian_eigenvalues(&m);
        assert!((vals[0] + 1.0).abs() < 1e-12);
        assert!((vals[1] - 0.5).abs() < 1e-12);
        assert!((vals[2] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn rank_of_projector() {
        // rank-1 projector onto (1, i)/sqrt(2)
        let mut m = CMatrix::zeros(2, 2);
        m[(0, 0)] = C64::new(0.5, 0.0);
        m[(0, 1)] = C64::new(0.0, -0.5);
        m[(1, 0)] = C64::new(0.0, 0.5);
        m[(1, 1)] = C64::new(0.5, 0.0);
        assert_eq!(gram_rank(&m, 1e-8), 1);
    }

    #[test]
    fn nullspace_of_rank_one() {
        // x + i y = 0 has a one-dimensional nullspace spanned by (-i, 1)ish
        let m = CMatrix::from_rows(vec![vec![ONE, C64::new(0.0, 1.0)]]);
        let ns = nullspace(&m, 1e-12);
        assert_eq!(ns.len(), 1);
        let v = &ns[0];
        let residual = (v[0] + C64::new(0.0, 1.0) * v[1]).norm();
        assert!(residual < 1e-12);
    }
}
