//! Dense complex linear algebra for the 2x2, 3x3 and 4x4 matrices that
//! appear in two-qubit problems.
//!
//! Everything is stack allocated. Eigenvalues come from a cyclic Jacobi
//! sweep, which for matrices this small is both exact enough and fast.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex;

use crate::error::{Error, Result};

pub type C64 = Complex<f64>;

/// Largest supported dimension.
pub const MAX_DIM: usize = 4;

/// Absolute max-entry tolerance for accepting a matrix as Hermitian.
pub const TOL_HERM: f64 = 1e-10;

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);

/// A dense complex matrix of dimension at most 4x4, stored row-major.
#[derive(Clone, Copy, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: [C64; MAX_DIM * MAX_DIM],
}

/// Selects one half of a bipartite system.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

impl ComplexMatrix {
    /// Zero matrix. Panics if either dimension is 0 or above [`MAX_DIM`].
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(
            (1..=MAX_DIM).contains(&rows) && (1..=MAX_DIM).contains(&cols),
            "unsupported matrix shape {rows}x{cols}"
        );
        Self {
            rows,
            cols,
            data: [ZERO; MAX_DIM * MAX_DIM],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ONE;
        }
        m
    }

    /// Builds a matrix from row slices; all rows must have equal length.
    pub fn from_rows<R: AsRef<[C64]>>(rows: &[R]) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.as_ref().len());
        if nrows == 0 || ncols == 0 {
            return Err(Error::DimensionMismatch {
                expected: "non-empty rows".into(),
                got: format!("{nrows}x{ncols}"),
            });
        }
        if nrows > MAX_DIM || ncols > MAX_DIM {
            return Err(Error::TooLarge {
                rows: nrows,
                cols: ncols,
            });
        }
        let mut m = Self::zeros(nrows, ncols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != ncols {
                return Err(Error::DimensionMismatch {
                    expected: format!("{ncols} columns"),
                    got: format!("{} columns in row {i}", row.len()),
                });
            }
            for (j, &z) in row.iter().enumerate() {
                m[(i, j)] = z;
            }
        }
        Ok(m)
    }

    /// Real-valued convenience constructor.
    pub fn from_real_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let complex: Vec<Vec<C64>> = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&x| C64::new(x, 0.0)).collect())
            .collect();
        Self::from_rows(&complex)
    }

    pub fn diagonal(entries: &[C64]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, &z) in entries.iter().enumerate() {
            m[(i, i)] = z;
        }
        m
    }

    /// Outer product |u><v|.
    pub fn outer(u: &[C64], v: &[C64]) -> Self {
        let mut m = Self::zeros(u.len(), v.len());
        for (i, &ui) in u.iter().enumerate() {
            for (j, &vj) in v.iter().enumerate() {
                m[(i, j)] = ui * vj.conj();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Option<C64> {
        (i < self.rows && j < self.cols).then(|| self.data[i * MAX_DIM + j])
    }

    pub fn adjoint(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(j, i)] = self[(i, j)].conj();
            }
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(j, i)] = self[(i, j)];
            }
        }
        m
    }

    pub fn trace(&self) -> C64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn scale(&self, s: C64) -> Self {
        self.map(|z| z * s)
    }

    pub fn scale_real(&self, s: f64) -> Self {
        self.map(|z| z * s)
    }

    pub fn map(&self, f: impl Fn(C64) -> C64) -> Self {
        let mut m = *self;
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = f(self[(i, j)]);
            }
        }
        m
    }

    /// Largest absolute entry-wise difference; `f64::INFINITY` on shape mismatch.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        if self.rows != other.rows || self.cols != other.cols {
            return f64::INFINITY;
        }
        self.entries()
            .zip(other.entries())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Max-entry deviation from Hermiticity.
    pub fn hermiticity_deviation(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        self.max_abs_diff(&self.adjoint())
    }

    /// (m + m†)/2
    pub fn symmetrized(&self) -> Self {
        (*self + self.adjoint()).scale_real(0.5)
    }

    pub fn is_finite(&self) -> bool {
        self.entries().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = C64> + '_ {
        (0..self.rows).flat_map(move |i| (0..self.cols).map(move |j| self[(i, j)]))
    }

    pub fn to_rows(&self) -> Vec<Vec<C64>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)]).collect())
            .collect()
    }

    fn check_same_shape(&self, other: &Self) {
        assert!(
            self.rows == other.rows && self.cols == other.cols,
            "shape mismatch: {}x{} vs {}x{}",
            self.rows,
            self.cols,
            other.rows,
            other.cols
        );
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;

    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of bounds for {}x{}",
            self.rows,
            self.cols
        );
        &self.data[i * MAX_DIM + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of bounds for {}x{}",
            self.rows,
            self.cols
        );
        &mut self.data[i * MAX_DIM + j]
    }
}

impl Add for ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: Self) -> Self {
        self.check_same_shape(&rhs);
        let mut m = self;
        for k in 0..MAX_DIM * MAX_DIM {
            m.data[k] += rhs.data[k];
        }
        m
    }
}

impl Sub for ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: Self) -> Self {
        self.check_same_shape(&rhs);
        let mut m = self;
        for k in 0..MAX_DIM * MAX_DIM {
            m.data[k] -= rhs.data[k];
        }
        m
    }
}

impl Neg for ComplexMatrix {
    type Output = ComplexMatrix;

    fn neg(self) -> Self {
        self.map(|z| -z)
    }
}

impl Mul for ComplexMatrix {
    type Output = ComplexMatrix;

    #[allow(clippy::op_ref)]
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: Self) -> ComplexMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        let mut m = ComplexMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == ZERO {
                    continue;
                }
                for j in 0..rhs.cols {
                    m.data[i * MAX_DIM + j] += a * rhs[(k, j)];
                }
            }
        }
        m
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                let z = self[(i, j)];
                write!(f, "{:>+.6}{:+.6}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// A real 3x3 matrix (correlation tensors and covariance matrices).
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct RealMatrix3(pub [[f64; 3]; 3]);

impl RealMatrix3 {
    pub fn zeros() -> Self {
        Self::default()
    }

    pub fn diag(d: [f64; 3]) -> Self {
        let mut m = Self::zeros();
        for (i, &x) in d.iter().enumerate() {
            m.0[i][i] = x;
        }
        m
    }

    pub fn outer(u: &[f64; 3], v: &[f64; 3]) -> Self {
        let mut m = Self::zeros();
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] = u[i] * v[j];
            }
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros();
        for i in 0..3 {
            for j in 0..3 {
                m.0[j][i] = self.0[i][j];
            }
        }
        m
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        let mut m = Self::zeros();
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] = (0..3).map(|k| self.0[i][k] * rhs.0[k][j]).sum();
            }
        }
        m
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut m = *self;
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] += rhs.0[i][j];
            }
        }
        m
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut m = *self;
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] -= rhs.0[i][j];
            }
        }
        m
    }

    pub fn apply(&self, v: &[f64; 3]) -> [f64; 3] {
        let mut out = [0.0; 3];
        for (i, o) in out.iter_mut().enumerate() {
            *o = (0..3).map(|k| self.0[i][k] * v[k]).sum();
        }
        out
    }

    /// Squared Frobenius norm.
    pub fn frobenius_sq(&self) -> f64 {
        self.0.iter().flatten().map(|x| x * x).sum()
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().flatten().all(|x| x.is_finite())
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.0
            .iter()
            .flatten()
            .zip(other.0.iter().flatten())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Eigenvalues of a symmetric matrix, descending. Only the symmetric
    /// part of `self` is used.
    pub fn symmetric_eigenvalues(&self) -> [f64; 3] {
        let mut a = [[C64::new(0.0, 0.0); MAX_DIM]; MAX_DIM];
        for i in 0..3 {
            for j in 0..3 {
                a[i][j] = C64::new(0.5 * (self.0[i][j] + self.0[j][i]), 0.0);
            }
        }
        let ev = jacobi_eigenvalues(a, 3);
        [ev[0], ev[1], ev[2]]
    }
}

/// Kronecker product of two 2x2 matrices, in the ordering `|a b>` with the
/// second factor's index running fastest.
pub fn tensor_product(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    require_shape(a, 2, 2)?;
    require_shape(b, 2, 2)?;
    let mut m = ComplexMatrix::zeros(4, 4);
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    m[(2 * i + k, 2 * j + l)] = a[(i, j)] * b[(k, l)];
                }
            }
        }
    }
    Ok(m)
}

/// Reduced matrix of the subsystem `keep`, tracing out the other one.
pub fn partial_trace(rho: &ComplexMatrix, keep: Subsystem) -> Result<ComplexMatrix> {
    require_shape(rho, 4, 4)?;
    let mut m = ComplexMatrix::zeros(2, 2);
    for i in 0..2 {
        for j in 0..2 {
            m[(i, j)] = match keep {
                Subsystem::A => rho[(2 * i, 2 * j)] + rho[(2 * i + 1, 2 * j + 1)],
                Subsystem::B => rho[(i, j)] + rho[(2 + i, 2 + j)],
            };
        }
    }
    Ok(m)
}

/// Transposes the B indices of a two-qubit operator.
pub fn partial_transpose_b(rho: &ComplexMatrix) -> Result<ComplexMatrix> {
    require_shape(rho, 4, 4)?;
    let mut m = ComplexMatrix::zeros(4, 4);
    for a in 0..2 {
        for b in 0..2 {
            for a2 in 0..2 {
                for b2 in 0..2 {
                    m[(2 * a + b, 2 * a2 + b2)] = rho[(2 * a + b2, 2 * a2 + b)];
                }
            }
        }
    }
    Ok(m)
}

/// Eigenvalues of a Hermitian matrix, sorted in descending order.
///
/// The input is symmetrized first; inputs further than [`TOL_HERM`] from
/// Hermitian are rejected.
pub fn hermitian_eigenvalues(m: &ComplexMatrix) -> Result<Vec<f64>> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch {
            expected: "square matrix".into(),
            got: format!("{}x{}", m.rows(), m.cols()),
        });
    }
    if !m.is_finite() {
        return Err(Error::NonFinite);
    }
    let deviation = m.hermiticity_deviation();
    if deviation > TOL_HERM {
        return Err(Error::NotHermitian { deviation });
    }
    Ok(hermitian_eigenvalues_unchecked(&m.symmetrized()))
}

fn hermitian_eigenvalues_unchecked(m: &ComplexMatrix) -> Vec<f64> {
    let n = m.rows();
    let mut a = [[ZERO; MAX_DIM]; MAX_DIM];
    for (i, row) in a.iter_mut().enumerate().take(n) {
        for (j, x) in row.iter_mut().enumerate().take(n) {
            *x = m[(i, j)];
        }
    }
    jacobi_eigenvalues(a, n)
}

/// Cyclic Jacobi on the leading `n x n` block of a Hermitian array.
fn jacobi_eigenvalues(mut a: [[C64; MAX_DIM]; MAX_DIM], n: usize) -> Vec<f64> {
    let scale: f64 = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| a[i][j].norm_sqr())
        .sum::<f64>()
        .sqrt();
    if scale > 0.0 {
        for _sweep in 0..64 {
            let off: f64 = (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .filter(|(i, j)| i != j)
                .map(|(i, j)| a[i][j].norm_sqr())
                .sum::<f64>()
                .sqrt();
            if off <= 1e-16 * scale {
                break;
            }
            for p in 0..n {
                for q in (p + 1)..n {
                    rotate(&mut a, n, p, q);
                }
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a[i][i].re).collect();
    // Stable sort keeps ties in their diagonal order.
    ev.sort_by(|x, y| y.total_cmp(x));
    ev
}

/// One Jacobi rotation A <- J† A J annihilating a[p][q].
fn rotate(a: &mut [[C64; MAX_DIM]; MAX_DIM], n: usize, p: usize, q: usize) {
    let apq = a[p][q];
    let mag = apq.norm();
    if mag == 0.0 {
        return;
    }
    let phase = apq / mag;
    let app = a[p][p].re;
    let aqq = a[q][q].re;
    let theta = (aqq - app) / (2.0 * mag);
    let t = if theta.is_infinite() {
        0.0
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    // Columns of J: e_p -> c e_p - s conj(phase) e_q, e_q -> s e_p + c conj(phase) e_q
    let jpp = C64::new(c, 0.0);
    let jqp = -phase.conj() * s;
    let jpq = C64::new(s, 0.0);
    let jqq = phase.conj() * c;
    // A <- A J
    for row in a.iter_mut().take(n) {
        let (xp, xq) = (row[p], row[q]);
        row[p] = xp * jpp + xq * jqp;
        row[q] = xp * jpq + xq * jqq;
    }
    // A <- J† A
    for k in 0..n {
        let (xp, xq) = (a[p][k], a[q][k]);
        a[p][k] = jpp.conj() * xp + jqp.conj() * xq;
        a[q][k] = jpq.conj() * xp + jqq.conj() * xq;
    }
    a[p][q] = ZERO;
    a[q][p] = ZERO;
    a[p][p].im = 0.0;
    a[q][q].im = 0.0;
}

/// Singular values, descending: square roots of the eigenvalues of m†m.
pub fn singular_values(m: &ComplexMatrix) -> Vec<f64> {
    let gram = &m.adjoint() * m;
    hermitian_eigenvalues_unchecked(&gram.symmetrized())
        .into_iter()
        .map(|x| x.max(0.0).sqrt())
        .collect()
}

/// Trace norm tr|m|, the sum of singular values.
pub fn trace_norm(m: &ComplexMatrix) -> f64 {
    if m.is_square() && m.hermiticity_deviation() <= TOL_HERM {
        hermitian_eigenvalues_unchecked(&m.symmetrized())
            .into_iter()
            .map(f64::abs)
            .sum()
    } else {
        singular_values(m).into_iter().sum()
    }
}

/// Hilbert-Schmidt (Frobenius) norm.
pub fn hs_norm(m: &ComplexMatrix) -> f64 {
    m.entries().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Spectral norm (largest singular value).
pub fn operator_norm(m: &ComplexMatrix) -> f64 {
    singular_values(m).first().copied().unwrap_or(0.0)
}

/// Spectral norm of a real 3x3 matrix.
pub fn largest_singular_value(q: &RealMatrix3) -> f64 {
    let gram = q.transpose().matmul(q);
    gram.symmetric_eigenvalues()[0].max(0.0).sqrt()
}

fn require_shape(m: &ComplexMatrix, rows: usize, cols: usize) -> Result<()> {
    if m.rows() == rows && m.cols() == cols {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: format!("{rows}x{cols}"),
            got: format!("{}x{}", m.rows(), m.cols()),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn sx() -> ComplexMatrix {
        ComplexMatrix::from_real_rows(&[[0.0, 1.0], [1.0, 0.0]]).unwrap()
    }

    fn sz() -> ComplexMatrix {
        ComplexMatrix::from_real_rows(&[[1.0, 0.0], [0.0, -1.0]]).unwrap()
    }

    fn bell_phi_plus() -> ComplexMatrix {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let v = [c(s, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(s, 0.0)];
        ComplexMatrix::outer(&v, &v)
    }

    #[test]
    fn kron_examples() {
        let i2 = ComplexMatrix::identity(2);
        assert_eq!(
            tensor_product(&i2, &i2).unwrap(),
            ComplexMatrix::identity(4)
        );

        let zi = tensor_product(&sz(), &i2).unwrap();
        let expected = ComplexMatrix::diagonal(&[c(1., 0.), c(1., 0.), c(-1., 0.), c(-1., 0.)]);
        assert_eq!(zi, expected);

        let xx = tensor_product(&sx(), &sx()).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let want = if i + j == 3 { 1.0 } else { 0.0 };
                assert_eq!(xx[(i, j)], c(want, 0.0));
            }
        }
    }

    #[test]
    fn kron_rejects_wrong_shape() {
        let err = tensor_product(&ComplexMatrix::identity(3), &ComplexMatrix::identity(2));
        assert!(matches!(err, Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn partial_trace_of_product_and_pure_state() {
        let a =
            ComplexMatrix::from_rows(&[[c(0.7, 0.0), c(0.1, -0.2)], [c(0.1, 0.2), c(0.3, 0.0)]])
                .unwrap();
        let b =
            ComplexMatrix::from_rows(&[[c(0.4, 0.0), c(0.0, 0.3)], [c(0.0, -0.3), c(0.6, 0.0)]])
                .unwrap();
        let ab = tensor_product(&a, &b).unwrap();
        assert!(partial_trace(&ab, Subsystem::A).unwrap().max_abs_diff(&a) < 1e-15);
        assert!(partial_trace(&ab, Subsystem::B).unwrap().max_abs_diff(&b) < 1e-15);

        let gg = ComplexMatrix::diagonal(&[c(0., 0.), c(0., 0.), c(0., 0.), c(1., 0.)]);
        let g = ComplexMatrix::diagonal(&[c(0., 0.), c(1., 0.)]);
        assert_eq!(partial_trace(&gg, Subsystem::B).unwrap(), g);
    }

    #[test]
    fn partial_transpose_examples() {
        let pt = partial_transpose_b(&bell_phi_plus()).unwrap();
        let ev = hermitian_eigenvalues(&pt).unwrap();
        assert!((ev[3] + 0.5).abs() < 1e-14);
        for &x in &ev[..3] {
            assert!((x - 0.5).abs() < 1e-14);
        }

        let d = ComplexMatrix::diagonal(&[c(0.1, 0.), c(0.2, 0.), c(0.3, 0.), c(0.4, 0.)]);
        assert_eq!(partial_transpose_b(&d).unwrap(), d);
    }

    #[test]
    fn eigenvalue_examples() {
        assert_eq!(
            hermitian_eigenvalues(&ComplexMatrix::identity(4)).unwrap(),
            vec![1.0; 4]
        );
        assert_eq!(hermitian_eigenvalues(&sz()).unwrap(), vec![1.0, -1.0]);
    }

    #[test]
    fn eigenvalues_complex_hermitian() {
        // sigma_y has eigenvalues +-1
        let sy =
            ComplexMatrix::from_rows(&[[c(0., 0.), c(0., -1.)], [c(0., 1.), c(0., 0.)]]).unwrap();
        let ev = hermitian_eigenvalues(&sy).unwrap();
        assert!((ev[0] - 1.0).abs() < 1e-15 && (ev[1] + 1.0).abs() < 1e-15);

        // [[2, 1-i], [1+i, 3]]: eigenvalues (5 +- sqrt(9))/2 = 4, 1
        let m =
            ComplexMatrix::from_rows(&[[c(2., 0.), c(1., -1.)], [c(1., 1.), c(3., 0.)]]).unwrap();
        let ev = hermitian_eigenvalues(&m).unwrap();
        assert!((ev[0] - 4.0).abs() < 1e-14 && (ev[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn eigenvalues_reject_non_hermitian() {
        let m = ComplexMatrix::from_real_rows(&[[0.0, 1.0], [0.0, 0.0]]).unwrap();
        assert!(matches!(
            hermitian_eigenvalues(&m),
            Err(Error::NotHermitian { .. })
        ));
        let m = ComplexMatrix::from_real_rows(&[[0.0, 1.0, 0.0]]).unwrap();
        assert!(matches!(
            hermitian_eigenvalues(&m),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn norms() {
        assert_eq!(trace_norm(&ComplexMatrix::identity(4)), 4.0);
        assert_eq!(trace_norm(&sz()), 2.0);
        assert_eq!(hs_norm(&ComplexMatrix::zeros(4, 4)), 0.0);
        assert_eq!(hs_norm(&ComplexMatrix::identity(4)), 2.0);
        assert_eq!(hs_norm(&tensor_product(&sx(), &sx()).unwrap()), 2.0);
        // non-Hermitian: |0><1| has a single singular value 1
        let m = ComplexMatrix::from_real_rows(&[[0.0, 1.0], [0.0, 0.0]]).unwrap();
        assert!((trace_norm(&m) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn largest_singular_value_examples() {
        assert!((largest_singular_value(&RealMatrix3::diag([0.3, 0.2, 0.1])) - 0.3).abs() < 1e-15);
        assert_eq!(largest_singular_value(&RealMatrix3::zeros()), 0.0);
        let q = RealMatrix3([[1.0, 2.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 0.5]]);
        // [[1,2],[0,1]] has singular values sqrt(3 +- 2 sqrt 2) = 1 +- sqrt 2
        assert!((largest_singular_value(&q) - (1.0 + 2f64.sqrt())).abs() < 1e-14);
    }

    #[test]
    #[should_panic(expected = "out of bounds")]
    fn index_is_bounds_checked() {
        let m = ComplexMatrix::identity(2);
        let _ = m[(2, 0)];
    }

    #[test]
    fn get_is_bounds_checked() {
        let m = ComplexMatrix::identity(2);
        assert_eq!(m.get(1, 1), Some(c(1.0, 0.0)));
        assert_eq!(m.get(2, 1), None);
    }
}
