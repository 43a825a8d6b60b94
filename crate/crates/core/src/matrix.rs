//! Dense matrices for signed graphs and their expansions.
//!
//! [`SymMatrix`] is a validated real symmetric matrix in row-major order.
//! [`DenseMatrix`] is a general rectangular helper used for projectors,
//! transition operators and linear solves.
//!
//! Expanded matrices use the block layout `[[M⁺, M⁻], [M⁻, M⁺]]`, matching
//! the lift convention `v⁺ = v`, `v⁻ = v + n`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};

/// Absolute symmetry tolerance, scaled by `max(1, ‖M‖_max)`.
pub const SYMMETRY_TOL: f64 = 1e-12;
/// Residual allowed in off-diagonal blocks after a change of basis.
pub const BLOCK_TOL: f64 = 1e-10;
/// Tolerance for comparing spectra.
pub const SPECTRAL_TOL: f64 = 1e-9;

/// General dense matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension {
                expected: rows * cols,
                actual: data.len(),
            });
        }
        Ok(DenseMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::Dimension { expected: cols, actual: r.len() });
            }
            data.extend_from_slice(r);
        }
        Ok(DenseMatrix { rows: rows.len(), cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> DenseMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    pub fn matmul(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension {
                expected: self.cols,
                actual: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0.0 {
                    continue;
                }
                for (d, &b) in dst.iter_mut().zip(other.row(k)) {
                    *d += a * b;
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, x: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.cols {
            return Err(Error::Dimension {
                expected: self.cols,
                actual: x.len(),
            });
        }
        Ok((0..self.rows).map(|i| dot(self.row(i), x)).collect())
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Largest absolute entrywise difference.
    pub fn max_diff(&self, other: &DenseMatrix) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }

    /// Sub-block of `rows × cols` starting at `(r0, c0)`.
    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> DenseMatrix {
        let mut out = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out.data[i * cols + j] = self.get(r0 + i, c0 + j);
            }
        }
        out
    }

    /// Solve `self · X = rhs` by Gaussian elimination with partial pivoting.
    pub fn solve(&self, rhs: &DenseMatrix) -> Result<DenseMatrix> {
        let n = self.rows;
        if self.cols != n {
            return Err(Error::Dimension { expected: n, actual: self.cols });
        }
        if rhs.rows != n {
            return Err(Error::Dimension { expected: n, actual: rhs.rows });
        }
        let mut a = self.clone();
        let mut b = rhs.clone();
        let scale = a.max_abs().max(1.0);
        for col in 0..n {
            let pivot = (col..n)
                .max_by(|&i, &j| a.get(i, col).abs().total_cmp(&a.get(j, col).abs()).then(j.cmp(&i)))
                .expect("nonempty range");
            if a.get(pivot, col).abs() <= 1e-14 * scale {
                return Err(Error::Numerical("singular matrix in linear solve".into()));
            }
            if pivot != col {
                swap_rows(&mut a, pivot, col);
                swap_rows(&mut b, pivot, col);
            }
            let p = a.get(col, col);
            for i in col + 1..n {
                let f = a.get(i, col) / p;
                if f == 0.0 {
                    continue;
                }
                for j in col..n {
                    let v = a.get(i, j) - f * a.get(col, j);
                    a.set(i, j, v);
                }
                for j in 0..b.cols {
                    let v = b.get(i, j) - f * b.get(col, j);
                    b.set(i, j, v);
                }
            }
        }
        for col in (0..n).rev() {
            let p = a.get(col, col);
            for j in 0..b.cols {
                let mut s = b.get(col, j);
                for k in col + 1..n {
                    s -= a.get(col, k) * b.get(k, j);
                }
                b.set(col, j, s / p);
            }
        }
        Ok(b)
    }

    /// Determinant via partial-pivoting elimination.
    pub fn determinant(&self) -> Result<f64> {
        let n = self.rows;
        if self.cols != n {
            return Err(Error::Dimension { expected: n, actual: self.cols });
        }
        let mut a = self.clone();
        let mut det = 1.0;
        for col in 0..n {
            let pivot = (col..n)
                .max_by(|&i, &j| a.get(i, col).abs().total_cmp(&a.get(j, col).abs()).then(j.cmp(&i)))
                .expect("nonempty range");
            let p = a.get(pivot, col);
            if p == 0.0 {
                return Ok(0.0);
            }
            if pivot != col {
                swap_rows(&mut a, pivot, col);
                det = -det;
            }
            det *= p;
            for i in col + 1..n {
                let f = a.get(i, col) / p;
                for j in col..n {
                    let v = a.get(i, j) - f * a.get(col, j);
                    a.set(i, j, v);
                }
            }
        }
        Ok(det)
    }
}

fn swap_rows(m: &mut DenseMatrix, a: usize, b: usize) {
    let cols = m.cols;
    for j in 0..cols {
        m.data.swap(a * cols + j, b * cols + j);
    }
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Dense real symmetric matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

/// Which projector to apply to an expanded matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProjectionMode {
    /// `Π_s = (1/√2)[I I]`.
    Symmetric,
    /// `Π_a = (1/√2)[I −I]`.
    Antisymmetric,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        SymMatrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        m
    }

    pub fn diagonal(values: &[f64]) -> Self {
        let n = values.len();
        let mut m = Self::zeros(n);
        for (i, &v) in values.iter().enumerate() {
            m.data[i * n + i] = v;
        }
        m
    }

    /// Validate finiteness and symmetry of row-major data.
    pub fn from_vec(n: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::Dimension {
                expected: n * n,
                actual: data.len(),
            });
        }
        if data.iter().any(|v| !v.is_finite()) {
            return Err(Error::Numerical("matrix has non-finite entries".into()));
        }
        let m = SymMatrix { n, data };
        let dev = m.asymmetry();
        if dev > SYMMETRY_TOL * m.max_abs().max(1.0) {
            return Err(Error::Asymmetric(dev));
        }
        Ok(m)
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let d = DenseMatrix::from_rows(rows)?;
        if d.rows != d.cols {
            return Err(Error::Dimension {
                expected: d.rows,
                actual: d.cols,
            });
        }
        Self::from_vec(d.rows, d.data)
    }

    /// Symmetric part `(M + Mᵀ)/2` of a square dense matrix.
    pub fn symmetrize(m: &DenseMatrix) -> Result<Self> {
        if m.rows != m.cols {
            return Err(Error::Dimension {
                expected: m.rows,
                actual: m.cols,
            });
        }
        let n = m.rows;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.data[i * n + j] = 0.5 * (m.get(i, j) + m.get(j, i));
            }
        }
        Ok(out)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    /// Set both `(i, j)` and `(j, i)`.
    pub fn set_sym(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.n + j] = value;
        self.data[j * self.n + i] = value;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn to_dense(&self) -> DenseMatrix {
        DenseMatrix {
            rows: self.n,
            cols: self.n,
            data: self.data.clone(),
        }
    }

    pub fn asymmetry(&self) -> f64 {
        let n = self.n;
        let mut dev: f64 = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                dev = dev.max((self.data[i * n + j] - self.data[j * n + i]).abs());
            }
        }
        dev
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn frobenius(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn max_diff(&self, other: &SymMatrix) -> f64 {
        assert_eq!(self.n, other.n, "order mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }

    pub fn mul_vec(&self, x: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                actual: x.len(),
            });
        }
        Ok((0..self.n).map(|i| dot(self.row(i), x)).collect())
    }

    fn zip_with(&self, other: &SymMatrix, f: impl Fn(f64, f64) -> f64) -> Result<SymMatrix> {
        if self.n != other.n {
            return Err(Error::Dimension {
                expected: self.n,
                actual: other.n,
            });
        }
        Ok(SymMatrix {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| f(a, b)).collect(),
        })
    }

    pub fn add(&self, other: &SymMatrix) -> Result<SymMatrix> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &SymMatrix) -> Result<SymMatrix> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, s: f64) -> SymMatrix {
        SymMatrix {
            n: self.n,
            data: self.data.iter().map(|v| v * s).collect(),
        }
    }

    pub fn row_sums(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.row(i).iter().sum()).collect()
    }

    /// `D M D` for the diagonal matrix `D = diag(d)`.
    pub fn congruence_diag(&self, d: &[f64]) -> Result<SymMatrix> {
        if d.len() != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                actual: d.len(),
            });
        }
        let n = self.n;
        let mut out = self.clone();
        for i in 0..n {
            for j in 0..n {
                out.data[i * n + j] *= d[i] * d[j];
            }
        }
        Ok(out)
    }

    /// Plain-text dump: order on the first line, then rows with 17 significant digits.
    pub fn dump(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for i in 0..self.n {
            let row: Vec<String> = self.row(i).iter().map(|v| format!("{v:.16e}")).collect();
            let _ = writeln!(s, "{}", row.join(" "));
        }
        s
    }

    /// Parse the [`SymMatrix::dump`] format.
    pub fn parse_dump(text: &str) -> Result<SymMatrix> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (ln, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "missing order line".into(),
        })?;
        let n: usize = header.trim().parse().map_err(|_| Error::Parse {
            line: ln + 1,
            msg: format!("bad order '{}'", header.trim()),
        })?;
        let mut data = Vec::with_capacity(n * n);
        for (ln, line) in lines {
            for tok in line.split_whitespace() {
                data.push(tok.parse::<f64>().map_err(|_| Error::Parse {
                    line: ln + 1,
                    msg: format!("bad number '{tok}'"),
                })?);
            }
        }
        Self::from_vec(n, data)
    }
}

/// Matrices of a signed graph and of its expansion.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixBundle {
    pub a: SymMatrix,
    pub a_plus: SymMatrix,
    pub a_minus: SymMatrix,
    pub a_bar: SymMatrix,
    pub k: SymMatrix,
    pub l: SymMatrix,
    pub l_bar: SymMatrix,
    pub gremban_a: SymMatrix,
    pub gremban_l: SymMatrix,
    pub gremban_k: SymMatrix,
}

/// Build every matrix attached to `g`. Degrees count neighbors regardless of sign.
pub fn build_bundle(g: &SignedGraph) -> MatrixBundle {
    let n = g.node_count();
    let mut a_plus = SymMatrix::zeros(n);
    let mut a_minus = SymMatrix::zeros(n);
    for e in g.edges() {
        match e.sign {
            Sign::Pos => a_plus.set_sym(e.u, e.v, 1.0),
            Sign::Neg => a_minus.set_sym(e.u, e.v, 1.0),
        }
    }
    let degrees: Vec<f64> = g.degrees().into_iter().map(|d| d as f64).collect();
    let k = SymMatrix::diagonal(&degrees);
    let a = a_plus.sub(&a_minus).expect("same order");
    let a_bar = a_plus.add(&a_minus).expect("same order");
    let l = k.sub(&a).expect("same order");
    let l_bar = k.sub(&a_bar).expect("same order");
    let gremban_a = gremban_expand_matrix(&a_plus, &a_minus).expect("same order");
    let gremban_k = gremban_expand_matrix(&k, &SymMatrix::zeros(n)).expect("same order");
    let gremban_l = gremban_k.sub(&gremban_a).expect("same order");
    MatrixBundle {
        a,
        a_plus,
        a_minus,
        a_bar,
        k,
        l,
        l_bar,
        gremban_a,
        gremban_l,
        gremban_k,
    }
}

/// Block matrix `[[M⁺, M⁻], [M⁻, M⁺]]`.
pub fn gremban_expand_matrix(m_plus: &SymMatrix, m_minus: &SymMatrix) -> Result<SymMatrix> {
    if m_plus.n != m_minus.n {
        return Err(Error::Dimension {
            expected: m_plus.n,
            actual: m_minus.n,
        });
    }
    let n = m_plus.n;
    let mut out = SymMatrix::zeros(2 * n);
    for i in 0..n {
        for j in 0..n {
            let p = m_plus.get(i, j);
            let q = m_minus.get(i, j);
            out.data[i * 2 * n + j] = p;
            out.data[(i + n) * 2 * n + j + n] = p;
            out.data[i * 2 * n + j + n] = q;
            out.data[(i + n) * 2 * n + j] = q;
        }
    }
    Ok(out)
}

/// The involution matrix `𝒩 = [[0, I], [I, 0]]` of order `2n`.
pub fn involution_matrix(n: usize) -> SymMatrix {
    gremban_expand_matrix(&SymMatrix::zeros(n), &SymMatrix::identity(n)).expect("same order")
}

/// True iff `𝒩 M 𝒩 = M` within `tol` (equal diagonal and equal off-diagonal blocks).
pub fn is_gremban_symmetric_matrix(m: &SymMatrix, tol: f64) -> Result<bool> {
    if !m.n.is_multiple_of(2) {
        return Err(Error::OddOrder(m.n));
    }
    let n = m.n / 2;
    for i in 0..2 * n {
        for j in 0..2 * n {
            let (ii, jj) = ((i + n) % (2 * n), (j + n) % (2 * n));
            if (m.get(ii, jj) - m.get(i, j)).abs() > tol {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Projector `Π_s` or `Π_a` as an `n × 2n` matrix.
pub fn projector(n: usize, mode: ProjectionMode) -> DenseMatrix {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let s = match mode {
        ProjectionMode::Symmetric => h,
        ProjectionMode::Antisymmetric => -h,
    };
    let mut p = DenseMatrix::zeros(n, 2 * n);
    for i in 0..n {
        p.set(i, i, h);
        p.set(i, i + n, s);
    }
    p
}

/// Change of basis `𝒰 = [Π_s; Π_a]`, orthogonal of order `2n`.
pub fn change_of_basis_matrix(n: usize) -> DenseMatrix {
    let s = projector(n, ProjectionMode::Symmetric);
    let a = projector(n, ProjectionMode::Antisymmetric);
    let mut data = s.data;
    data.extend(a.data);
    DenseMatrix::from_vec(2 * n, 2 * n, data).expect("consistent shape")
}

/// `Π M Πᵀ` for the chosen projector.
pub fn project_matrix(m: &SymMatrix, mode: ProjectionMode) -> Result<SymMatrix> {
    if !m.n.is_multiple_of(2) {
        return Err(Error::OddOrder(m.n));
    }
    let p = projector(m.n / 2, mode);
    let out = p.matmul(&m.to_dense())?.matmul(&p.transpose())?;
    SymMatrix::symmetrize(&out)
}

/// `𝒰 M 𝒰ᵀ` for a Gremban-symmetric `M`; the result is block-diagonal `M̄ ⊕ M`.
pub fn change_of_basis(m: &SymMatrix) -> Result<SymMatrix> {
    if !m.n.is_multiple_of(2) {
        return Err(Error::OddOrder(m.n));
    }
    if !is_gremban_symmetric_matrix(m, SYMMETRY_TOL * m.max_abs().max(1.0))? {
        return Err(Error::SymmetryViolation("matrix does not commute with the involution".into()));
    }
    let u = change_of_basis_matrix(m.n / 2);
    let out = u.matmul(&m.to_dense())?.matmul(&u.transpose())?;
    SymMatrix::symmetrize(&out)
}

/// `K^{-1/2} M K^{-1/2}` with `K = diag(degrees)`.
pub fn normalized_laplacian(m: &SymMatrix, degrees: &[f64]) -> Result<SymMatrix> {
    if degrees.len() != m.n {
        return Err(Error::Dimension {
            expected: m.n,
            actual: degrees.len(),
        });
    }
    if let Some(i) = degrees.iter().position(|&d| d <= 0.0 || !d.is_finite()) {
        return Err(Error::DegenerateDegree(i));
    }
    let inv: Vec<f64> = degrees.iter().map(|d| 1.0 / d.sqrt()).collect();
    m.congruence_diag(&inv)
}

/// Degree vector of the expansion, `(k, k)`.
pub fn lifted_degrees(g: &SignedGraph) -> Vec<f64> {
    let k: Vec<f64> = g.degrees().into_iter().map(|d| d as f64).collect();
    k.iter().chain(k.iter()).copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign::{Neg as M, Pos as P};

    fn triangle() -> SignedGraph {
        SignedGraph::new(3, [(0, 1, P), (1, 2, M), (0, 2, M)]).unwrap()
    }

    fn sym(rows: &[&[f64]]) -> SymMatrix {
        SymMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn triangle_adjacency() {
        let b = build_bundle(&triangle());
        let expect = sym(&[&[0., 1., -1.], &[1., 0., -1.], &[-1., -1., 0.]]);
        assert_eq!(b.a, expect);
        let ga = sym(&[
            &[0., 1., 0., 0., 0., 1.],
            &[1., 0., 0., 0., 0., 1.],
            &[0., 0., 0., 1., 1., 0.],
            &[0., 0., 1., 0., 1., 0.],
            &[0., 0., 1., 1., 0., 0.],
            &[1., 1., 0., 0., 0., 0.],
        ]);
        assert_eq!(b.gremban_a, ga);
        assert_eq!(b.gremban_l.row_sums(), vec![0.0; 6]);
        assert_eq!(b.l_bar.row_sums(), vec![0.0; 3]);
    }

    #[test]
    fn empty_graph_bundle() {
        let b = build_bundle(&SignedGraph::empty(3));
        assert_eq!(b.a, SymMatrix::zeros(3));
        assert_eq!(b.k, SymMatrix::zeros(3));
        assert_eq!(b.l, SymMatrix::zeros(3));
    }

    #[test]
    fn expansion_of_identity_blocks() {
        let i = SymMatrix::identity(2);
        let z = SymMatrix::zeros(2);
        assert_eq!(gremban_expand_matrix(&i, &z).unwrap(), SymMatrix::identity(4));
        let n = gremban_expand_matrix(&z, &i).unwrap();
        assert_eq!(n, involution_matrix(2));
        assert!(gremban_expand_matrix(&i, &SymMatrix::zeros(3)).is_err());
    }

    #[test]
    fn symmetry_predicate() {
        assert!(!is_gremban_symmetric_matrix(&SymMatrix::diagonal(&[1.0, 0.0]), 1e-12).unwrap());
        let b = build_bundle(&triangle());
        assert!(is_gremban_symmetric_matrix(&b.gremban_l, 1e-12).unwrap());
        assert_eq!(is_gremban_symmetric_matrix(&SymMatrix::identity(3), 1e-12), Err(Error::OddOrder(3)));
    }

    #[test]
    fn projections_of_triangle() {
        let b = build_bundle(&triangle());
        let anti = project_matrix(&b.gremban_a, ProjectionMode::Antisymmetric).unwrap();
        assert!(anti.max_diff(&b.a) < 1e-15);
        let symm = project_matrix(&b.gremban_a, ProjectionMode::Symmetric).unwrap();
        assert!(symm.max_diff(&b.a_bar) < 1e-15);
        let n = involution_matrix(3);
        assert!(project_matrix(&n, ProjectionMode::Antisymmetric).unwrap().max_diff(&SymMatrix::identity(3).scale(-1.0)) < 1e-15);
        assert!(project_matrix(&n, ProjectionMode::Symmetric).unwrap().max_diff(&SymMatrix::identity(3)) < 1e-15);
    }

    #[test]
    fn triangle_block_diagonalization() {
        let b = build_bundle(&triangle());
        let got = change_of_basis(&b.gremban_l).unwrap();
        let expect = sym(&[
            &[2., -1., -1., 0., 0., 0.],
            &[-1., 2., -1., 0., 0., 0.],
            &[-1., -1., 2., 0., 0., 0.],
            &[0., 0., 0., 2., -1., 1.],
            &[0., 0., 0., -1., 2., 1.],
            &[0., 0., 0., 1., 1., 2.],
        ]);
        assert!(got.max_diff(&expect) < 1e-12);
        assert!(change_of_basis(&SymMatrix::identity(4)).unwrap().max_diff(&SymMatrix::identity(4)) < 1e-15);
        let bad = SymMatrix::diagonal(&[1.0, 2.0, 3.0, 4.0]);
        assert!(matches!(change_of_basis(&bad), Err(Error::SymmetryViolation(_))));
    }

    #[test]
    fn normalization() {
        let b = build_bundle(&triangle());
        let k: Vec<f64> = triangle().degrees().into_iter().map(|d| d as f64).collect();
        let ln = normalized_laplacian(&b.l, &k).unwrap();
        assert!(ln.max_diff(&b.l.scale(0.5)) < 1e-15);
        assert_eq!(normalized_laplacian(&b.l, &[1.0, 0.0, 1.0]), Err(Error::DegenerateDegree(1)));
    }

    #[test]
    fn rejects_asymmetric_input() {
        assert!(matches!(SymMatrix::from_vec(2, vec![0.0, 1.0, 2.0, 0.0]), Err(Error::Asymmetric(_))));
        assert!(SymMatrix::from_vec(2, vec![0.0, f64::NAN, f64::NAN, 0.0]).is_err());
    }

    #[test]
    fn dump_round_trip() {
        let m = sym(&[&[0.1, 1.0 / 3.0], &[1.0 / 3.0, -2e-300]]);
        assert_eq!(SymMatrix::parse_dump(&m.dump()).unwrap(), m);
    }

    #[test]
    fn solve_and_determinant() {
        let a = DenseMatrix::from_rows(&[vec![0.0, 2.0], vec![3.0, 1.0]]).unwrap();
        let x = a.solve(&DenseMatrix::identity(2)).unwrap();
        let back = a.matmul(&x).unwrap();
        assert!(back.max_diff(&DenseMatrix::identity(2)) < 1e-15);
        assert!((a.determinant().unwrap() + 6.0).abs() < 1e-15);
        let s = DenseMatrix::from_rows(&[vec![1.0, 2.0], vec![2.0, 4.0]]).unwrap();
        assert!(s.solve(&DenseMatrix::identity(2)).is_err());
    }
}
