//! Dense complex matrices of dimension 2, 4 or 8.
//!
//! Storage is a fixed 64-entry array so matrices are `Copy` and never
//! allocate; only the leading `dim * dim` entries are meaningful.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;

use crate::basis::{slot_mask, Qubit};
use crate::error::{Error, Result};

pub type C64 = Complex64;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

/// Hermiticity tolerance applied to eigensolver inputs.
pub const HERMITIAN_TOL: f64 = 1e-12;

/// Eigenvalues in `[-EIGEN_CLAMP, 0)` are treated as zero by the measures.
pub const EIGEN_CLAMP: f64 = 1e-10;

const MAX_DIM: usize = 8;

#[derive(Clone, Copy, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: [C64; MAX_DIM * MAX_DIM],
}

fn check_dim(dim: usize) -> Result<()> {
    match dim {
        2 | 4 | 8 => Ok(()),
        _ => Err(Error::InvalidDimension(dim)),
    }
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        Ok(Self {
            dim,
            data: [ZERO; MAX_DIM * MAX_DIM],
        })
    }

    pub fn identity(dim: usize) -> Result<Self> {
        let mut m = Self::zeros(dim)?;
        for i in 0..dim {
            m[(i, i)] = ONE;
        }
        Ok(m)
    }

    /// Builds a matrix from `dim * dim` entries in row-major order.
    pub fn from_row_major(dim: usize, entries: &[C64]) -> Result<Self> {
        let mut m = Self::zeros(dim)?;
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                found: entries.len(),
            });
        }
        for i in 0..dim {
            for j in 0..dim {
                m[(i, j)] = entries[i * dim + j];
            }
        }
        Ok(m)
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Result<Self> {
        let mut m = Self::zeros(diag.len())?;
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = C64::new(d, 0.0);
        }
        Ok(m)
    }

    /// `|psi><psi|` for a state vector of length 2, 4 or 8.
    pub fn outer(psi: &[C64]) -> Result<Self> {
        let dim = psi.len();
        let mut m = Self::zeros(dim)?;
        for i in 0..dim {
            for j in 0..dim {
                m[(i, j)] = psi[i] * psi[j].conj();
            }
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn n_qubits(&self) -> usize {
        self.dim.trailing_zeros() as usize
    }

    pub fn adjoint(&self) -> Self {
        let mut out = *self;
        for i in 0..self.dim {
            for j in 0..self.dim {
                out[(i, j)] = self[(j, i)].conj();
            }
        }
        out
    }

    pub fn conj(&self) -> Self {
        let mut out = *self;
        for i in 0..self.dim {
            for j in 0..self.dim {
                out[(i, j)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = *self;
        for i in 0..self.dim {
            for j in 0..self.dim {
                out[(i, j)] = self[(j, i)];
            }
        }
        out
    }

    pub fn scale(&self, s: C64) -> Self {
        let mut out = *self;
        for i in 0..self.dim {
            for j in 0..self.dim {
                out[(i, j)] *= s;
            }
        }
        out
    }

    pub fn scale_real(&self, s: f64) -> Self {
        self.scale(C64::new(s, 0.0))
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.dim).map(|i| self[(i, i)].re).collect()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        self.entries()
            .zip(other.entries())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// `max |M - M^H|`.
    pub fn hermiticity_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.dim {
            for j in i..self.dim {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_defect() <= tol
    }

    /// Iterator over the `dim * dim` entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = C64> + '_ {
        (0..self.dim).flat_map(move |i| (0..self.dim).map(move |j| self[(i, j)]))
    }

    /// Matrix-vector product `M psi`.
    pub fn apply(&self, psi: &[C64]) -> Vec<C64> {
        assert_eq!(psi.len(), self.dim);
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self[(i, j)] * psi[j]).sum())
            .collect()
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;

    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        debug_assert!(i < self.dim && j < self.dim);
        &self.data[i * MAX_DIM + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        debug_assert!(i < self.dim && j < self.dim);
        &mut self.data[i * MAX_DIM + j]
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in product");
        let n = self.dim;
        let mut out = ComplexMatrix {
            dim: n,
            data: [ZERO; MAX_DIM * MAX_DIM],
        };
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == ZERO {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl Mul for ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: ComplexMatrix) -> ComplexMatrix {
        &self * &rhs
    }
}

impl Add for ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(mut self, rhs: ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in sum");
        for i in 0..self.dim {
            for j in 0..self.dim {
                self[(i, j)] += rhs[(i, j)];
            }
        }
        self
    }
}

impl Sub for ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(mut self, rhs: ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in difference");
        for i in 0..self.dim {
            for j in 0..self.dim {
                self[(i, j)] -= rhs[(i, j)];
            }
        }
        self
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix({}x{}) [", self.dim, self.dim)?;
        for i in 0..self.dim {
            write!(f, "  ")?;
            for j in 0..self.dim {
                let z = self[(i, j)];
                write!(f, "{:>10.6}{:+.6}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Pauli matrices in the ordered single-qubit basis `(|1>, |0>)`.
pub mod pauli {
    use super::{ComplexMatrix, C64, I, ONE, ZERO};

    fn two(entries: [C64; 4]) -> ComplexMatrix {
        ComplexMatrix::from_row_major(2, &entries).expect("2x2")
    }

    pub fn identity() -> ComplexMatrix {
        two([ONE, ZERO, ZERO, ONE])
    }

    pub fn x() -> ComplexMatrix {
        two([ZERO, ONE, ONE, ZERO])
    }

    pub fn y() -> ComplexMatrix {
        two([ZERO, -I, I, ZERO])
    }

    pub fn z() -> ComplexMatrix {
        two([ONE, ZERO, ZERO, -ONE])
    }
}

/// Kronecker product `a (x) b`.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    let dim = a.dim * b.dim;
    if dim > MAX_DIM {
        return Err(Error::DimensionTooLarge(dim));
    }
    let mut out = ComplexMatrix::zeros(dim)?;
    for i in 0..a.dim {
        for j in 0..a.dim {
            let aij = a[(i, j)];
            for k in 0..b.dim {
                for l in 0..b.dim {
                    out[(i * b.dim + k, j * b.dim + l)] = aij * b[(k, l)];
                }
            }
        }
    }
    Ok(out)
}

/// `a (x) b (x) c` for three single-qubit operators.
pub fn kron3(a: &ComplexMatrix, b: &ComplexMatrix, c: &ComplexMatrix) -> Result<ComplexMatrix> {
    kron(&kron(a, b)?, c)
}

/// Real eigenvalues sorted in descending order.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum(Vec<f64>);

impl Spectrum {
    pub fn new(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Self(values)
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max(&self) -> f64 {
        self.0[0]
    }

    pub fn min(&self) -> f64 {
        self.0[self.0.len() - 1]
    }

    pub fn sum(&self) -> f64 {
        self.0.iter().sum()
    }

    /// Sum of the negative eigenvalues (zero when none).
    pub fn negative_sum(&self) -> f64 {
        self.0.iter().filter(|&&v| v < 0.0).sum()
    }
}

/// Eigenvalues and eigenvectors of a Hermitian matrix. Column `k` of
/// `vectors` belongs to `values()[k]`.
#[derive(Debug, Clone)]
pub struct Eigen {
    pub spectrum: Spectrum,
    pub vectors: ComplexMatrix,
}

const MAX_SWEEPS: usize = 100;

/// Cyclic complex Jacobi. Returns unsorted diagonal and accumulated rotations.
fn jacobi(m: &ComplexMatrix, with_vectors: bool) -> Result<(Vec<f64>, ComplexMatrix)> {
    let defect = m.hermiticity_defect();
    let scale = m.frobenius_norm().max(1.0);
    if defect > HERMITIAN_TOL * scale {
        return Err(Error::NotHermitian(defect));
    }
    let n = m.dim;
    let mut a = *m;
    for i in 0..n {
        a[(i, i)] = C64::new(a[(i, i)].re, 0.0);
    }
    let mut v = ComplexMatrix::identity(n)?;
    // Stop well below the 1e-12 absolute off-norm target.
    let tol = (1e-15 * m.frobenius_norm()).max(1e-300);

    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .map(|(p, q)| 2.0 * a[(p, q)].norm_sqr())
            .sum::<f64>()
            .sqrt();
        if off <= tol {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                let mag = apq.norm();
                if mag == 0.0 {
                    continue;
                }
                let phase = apq / mag; // e^{i alpha}
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let theta = (aqq - app) / (2.0 * mag);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    let sgn = if theta >= 0.0 { 1.0 } else { -1.0 };
                    sgn / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                // J = diag(1, e^{-i alpha}) * [[c, s], [-s, c]]
                let j_pp = C64::new(c, 0.0);
                let j_pq = C64::new(s, 0.0);
                let j_qp = phase.conj() * (-s);
                let j_qq = phase.conj() * c;

                // A <- A J
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = akp * j_pp + akq * j_qp;
                    a[(k, q)] = akp * j_pq + akq * j_qq;
                }
                // A <- J^H A
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = j_pp.conj() * apk + j_qp.conj() * aqk;
                    a[(q, k)] = j_pq.conj() * apk + j_qq.conj() * aqk;
                }
                a[(p, q)] = ZERO;
                a[(q, p)] = ZERO;
                a[(p, p)] = C64::new(app - t * mag, 0.0);
                a[(q, q)] = C64::new(aqq + t * mag, 0.0);

                if with_vectors {
                    for k in 0..n {
                        let vkp = v[(k, p)];
                        let vkq = v[(k, q)];
                        v[(k, p)] = vkp * j_pp + vkq * j_qp;
                        v[(k, q)] = vkp * j_pq + vkq * j_qq;
                    }
                }
            }
        }
    }
    Ok(((0..n).map(|i| a[(i, i)].re).collect(), v))
}

/// Eigenvalues of a Hermitian matrix, descending.
pub fn hermitian_eigenvalues(m: &ComplexMatrix) -> Result<Spectrum> {
    let (values, _) = jacobi(m, false)?;
    Ok(Spectrum::new(values))
}

/// Full eigendecomposition of a Hermitian matrix, eigenvalues descending.
pub fn hermitian_eigen(m: &ComplexMatrix) -> Result<Eigen> {
    let (values, vecs) = jacobi(m, true)?;
    let n = m.dim;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| values[b].total_cmp(&values[a]));
    let mut vectors = ComplexMatrix::zeros(n)?;
    for (col, &src) in order.iter().enumerate() {
        for row in 0..n {
            vectors[(row, col)] = vecs[(row, src)];
        }
    }
    let sorted = order.iter().map(|&k| values[k]).collect();
    Ok(Eigen {
        spectrum: Spectrum(sorted),
        vectors,
    })
}

/// Principal square root of a positive semidefinite matrix; eigenvalues
/// in `[-EIGEN_CLAMP, 0)` are clamped to zero.
pub fn sqrt_psd(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    let eig = hermitian_eigen(m)?;
    let n = m.dim;
    let mut out = ComplexMatrix::zeros(n)?;
    for (k, &lam) in eig.spectrum.values().iter().enumerate() {
        if lam < -EIGEN_CLAMP {
            return Err(Error::NegativeEigenvalue(lam));
        }
        let root = lam.max(0.0).sqrt();
        if root == 0.0 {
            continue;
        }
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] += eig.vectors[(i, k)] * eig.vectors[(j, k)].conj() * root;
            }
        }
    }
    Ok(out)
}

fn subsystem_check(rho: &ComplexMatrix, qubits: &[Qubit]) -> Result<usize> {
    let n = rho.n_qubits();
    if rho.dim() == 2 {
        return Err(Error::InvalidSubsystem(
            "single-qubit matrix has no subsystems".into(),
        ));
    }
    for q in qubits {
        if q.position() >= n {
            return Err(Error::InvalidSubsystem(format!(
                "qubit {q} not present in a {n}-qubit matrix"
            )));
        }
    }
    Ok(n)
}

/// Reduced matrix on the `keep` qubits (kept in A, B, C order).
///
/// Valid for an 8x8 input keeping one or two qubits, or a 4x4 input
/// (qubits A, B) keeping one.
pub fn partial_trace(rho: &ComplexMatrix, keep: &[Qubit]) -> Result<ComplexMatrix> {
    let n = subsystem_check(rho, keep)?;
    let mut keep: Vec<Qubit> = keep.to_vec();
    keep.sort();
    keep.dedup();
    if keep.is_empty() || keep.len() >= n {
        return Err(Error::InvalidSubsystem(format!(
            "must keep between 1 and {} of {n} qubits, got {}",
            n - 1,
            keep.len()
        )));
    }
    let traced: Vec<Qubit> = Qubit::ALL[..n]
        .iter()
        .copied()
        .filter(|q| !keep.contains(q))
        .collect();

    // Scatter a compact index (bits in `qubits` order) into a full register index.
    let scatter = |compact: usize, qubits: &[Qubit]| -> usize {
        let m = qubits.len();
        qubits.iter().enumerate().fold(0, |acc, (k, &q)| {
            if (compact >> (m - 1 - k)) & 1 == 1 {
                acc | slot_mask(q, n)
            } else {
                acc
            }
        })
    };

    let out_dim = 1 << keep.len();
    let mut out = ComplexMatrix::zeros(out_dim)?;
    for i in 0..out_dim {
        let fi = scatter(i, &keep);
        for j in 0..out_dim {
            let fj = scatter(j, &keep);
            let mut acc = ZERO;
            for t in 0..(1 << traced.len()) {
                let ft = scatter(t, &traced);
                acc += rho[(fi | ft, fj | ft)];
            }
            out[(i, j)] = acc;
        }
    }
    Ok(out)
}

/// Partial transpose with respect to `part`.
pub fn partial_transpose(rho: &ComplexMatrix, part: Qubit) -> Result<ComplexMatrix> {
    let n = subsystem_check(rho, &[part])?;
    let mask = slot_mask(part, n);
    let mut out = *rho;
    for i in 0..rho.dim() {
        for j in 0..rho.dim() {
            let si = (i & !mask) | (j & mask);
            let sj = (j & !mask) | (i & mask);
            out[(i, j)] = rho[(si, sj)];
        }
    }
    Ok(out)
}

/// `-sum p log2 p` over the given weights, with `0 log 0 = 0`.
pub fn shannon_entropy(weights: &[f64]) -> f64 {
    weights
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| -p * p.log2())
        .sum()
}

/// Binary entropy `h(p)` in bits.
pub fn binary_entropy(p: f64) -> f64 {
    shannon_entropy(&[p, 1.0 - p])
}

/// Von Neumann entropy in bits.
pub fn von_neumann_entropy(rho: &ComplexMatrix) -> Result<f64> {
    let spec = hermitian_eigenvalues(rho)?;
    entropy_of_spectrum(&spec)
}

/// Entropy of an already-computed density-matrix spectrum.
pub fn entropy_of_spectrum(spec: &Spectrum) -> Result<f64> {
    let min = spec.min();
    if min < -1e-8 {
        return Err(Error::NegativeEigenvalue(min));
    }
    Ok(spec
        .values()
        .iter()
        .filter(|&&l| l >= 1e-14)
        .map(|&l| -l * l.log2())
        .sum())
}

/// Checks unit trace, Hermiticity and positivity within `tol`.
pub fn validate_density(rho: &ComplexMatrix, tol: f64) -> Result<()> {
    let tr = rho.trace();
    if (tr.re - 1.0).abs() > tol || tr.im.abs() > tol {
        return Err(Error::NotDensityMatrix(format!("trace {tr}")));
    }
    let defect = rho.hermiticity_defect();
    if defect > tol {
        return Err(Error::NotHermitian(defect));
    }
    let min = hermitian_eigenvalues(rho)?.min();
    if min < -tol {
        return Err(Error::NegativeEigenvalue(min));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    #[test]
    fn kron_identity_and_diagonal() {
        let i2 = pauli::identity();
        assert_eq!(kron(&i2, &i2).unwrap(), ComplexMatrix::identity(4).unwrap());
        let zi = kron(&pauli::z(), &i2).unwrap();
        assert_eq!(zi, ComplexMatrix::from_real_diagonal(&[1.0, 1.0, -1.0, -1.0]).unwrap());
    }

    #[test]
    fn kron_yy_is_antidiagonal() {
        // (sy (x) sy)_{ik,jl} = sy_ij sy_kl, with sy = [[0,-i],[i,0]]
        let yy = kron(&pauli::y(), &pauli::y()).unwrap();
        let expected = [
            [0.0, 0.0, 0.0, -1.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
            [-1.0, 0.0, 0.0, 0.0],
        ];
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(yy[(i, j)], c(expected[i][j]), "({i},{j})");
            }
        }
    }

    #[test]
    fn kron_rejects_oversize() {
        let i4 = ComplexMatrix::identity(4).unwrap();
        assert_eq!(kron(&i4, &i4), Err(Error::DimensionTooLarge(16)));
    }

    #[test]
    fn eigenvalues_of_simple_matrices() {
        let d = ComplexMatrix::from_real_diagonal(&[3.0, 1.0, 2.0, 0.0]).unwrap();
        assert_eq!(hermitian_eigenvalues(&d).unwrap().values(), &[3.0, 2.0, 1.0, 0.0]);
        let x = hermitian_eigenvalues(&pauli::x()).unwrap();
        assert!((x.values()[0] - 1.0).abs() < 1e-15);
        assert!((x.values()[1] + 1.0).abs() < 1e-15);
        let y = hermitian_eigenvalues(&pauli::y()).unwrap();
        assert!((y.values()[0] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn eigen_rejects_non_hermitian() {
        let mut m = pauli::x();
        m[(0, 1)] = c(2.0);
        assert!(matches!(hermitian_eigenvalues(&m), Err(Error::NotHermitian(_))));
    }

    #[test]
    fn eigenvectors_diagonalize() {
        let m = ComplexMatrix::from_row_major(
            2,
            &[c(1.0), C64::new(0.5, -0.25), C64::new(0.5, 0.25), c(-0.3)],
        )
        .unwrap();
        let e = hermitian_eigen(&m).unwrap();
        let v = e.vectors;
        let d = &(&v.adjoint() * &m) * &v;
        assert!((d[(0, 0)].re - e.spectrum.values()[0]).abs() < 1e-14);
        assert!(d[(0, 1)].norm() < 1e-14);
    }

    #[test]
    fn partial_trace_of_maximally_mixed() {
        let m = ComplexMatrix::identity(8).unwrap().scale_real(0.125);
        let rc = partial_trace(&m, &[Qubit::C]).unwrap();
        assert!(rc.max_abs_diff(&ComplexMatrix::identity(2).unwrap().scale_real(0.5)) < 1e-15);
    }

    #[test]
    fn partial_trace_rejects_bad_selection() {
        let m = ComplexMatrix::identity(4).unwrap().scale_real(0.25);
        assert!(partial_trace(&m, &[Qubit::C]).is_err());
        assert!(partial_trace(&m, &[Qubit::A, Qubit::B]).is_err());
        let m8 = ComplexMatrix::identity(8).unwrap().scale_real(0.125);
        assert!(partial_trace(&m8, &[]).is_err());
    }

    #[test]
    fn partial_transpose_of_ghz_has_negative_half() {
        let mut psi = [ZERO; 8];
        psi[0] = c(std::f64::consts::FRAC_1_SQRT_2);
        psi[7] = c(std::f64::consts::FRAC_1_SQRT_2);
        let rho = ComplexMatrix::outer(&psi).unwrap();
        let pt = partial_transpose(&rho, Qubit::A).unwrap();
        let spec = hermitian_eigenvalues(&pt).unwrap();
        assert!((spec.min() + 0.5).abs() < 1e-14);
    }

    #[test]
    fn entropy_edge_values() {
        let mixed = ComplexMatrix::identity(8).unwrap().scale_real(0.125);
        assert!((von_neumann_entropy(&mixed).unwrap() - 3.0).abs() < 1e-14);
        let pure = ComplexMatrix::from_real_diagonal(&[1.0, 0.0]).unwrap();
        assert_eq!(von_neumann_entropy(&pure).unwrap(), 0.0);
        let bad = ComplexMatrix::from_real_diagonal(&[1.1, -0.1]).unwrap();
        assert!(matches!(
            von_neumann_entropy(&bad),
            Err(Error::NegativeEigenvalue(_))
        ));
    }

    #[test]
    fn invalid_dimension() {
        assert_eq!(ComplexMatrix::zeros(3).unwrap_err(), Error::InvalidDimension(3));
    }
}
