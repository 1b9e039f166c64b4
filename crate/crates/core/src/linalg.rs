//! Fixed-capacity complex vectors and matrices for internal dimensions 2 and 3.

use num_complex::Complex64;

pub const MAX_DIM: usize = 3;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// A complex d-vector, d <= 3. Unused trailing slots are zero.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Spinor {
    dim: usize,
    data: [Complex64; MAX_DIM],
}

impl Spinor {
    pub fn zeros(dim: usize) -> Self {
        debug_assert!(dim <= MAX_DIM);
        Self {
            dim,
            data: [ZERO; MAX_DIM],
        }
    }

    /// Panics if `values` is longer than [`MAX_DIM`].
    pub fn from_slice(values: &[Complex64]) -> Self {
        let mut out = Self::zeros(values.len());
        out.data[..values.len()].copy_from_slice(values);
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data[..self.dim]
    }

    pub fn as_mut_slice(&mut self) -> &mut [Complex64] {
        &mut self.data[..self.dim]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.as_slice().iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn normalized(&self) -> Self {
        let n = self.norm_sqr().sqrt();
        let mut out = *self;
        for z in out.as_mut_slice() {
            *z /= n;
        }
        out
    }

    /// Hermitian inner product `<self|other>`.
    pub fn inner(&self, other: &Spinor) -> Complex64 {
        self.as_slice()
            .iter()
            .zip(other.as_slice())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        let mut out = *self;
        for z in out.as_mut_slice() {
            *z *= factor;
        }
        out
    }

    pub fn conj(&self) -> Self {
        let mut out = *self;
        for z in out.as_mut_slice() {
            *z = z.conj();
        }
        out
    }

    /// Bilinear cross product (no conjugation); 3-vectors only.
    pub fn cross(&self, other: &Spinor) -> Self {
        let (a, b) = (&self.data, &other.data);
        Self {
            dim: 3,
            data: [
                a[1] * b[2] - a[2] * b[1],
                a[2] * b[0] - a[0] * b[2],
                a[0] * b[1] - a[1] * b[0],
            ],
        }
    }

    pub fn max_abs_diff(&self, other: &Spinor) -> f64 {
        self.as_slice()
            .iter()
            .zip(other.as_slice())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

impl std::ops::Index<usize> for Spinor {
    type Output = Complex64;
    fn index(&self, i: usize) -> &Complex64 {
        &self.as_slice()[i]
    }
}

impl std::ops::IndexMut<usize> for Spinor {
    fn index_mut(&mut self, i: usize) -> &mut Complex64 {
        &mut self.as_mut_slice()[i]
    }
}

/// A complex d×d matrix, d <= 3.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Matrix {
    dim: usize,
    data: [[Complex64; MAX_DIM]; MAX_DIM],
}

impl Matrix {
    pub fn zeros(dim: usize) -> Self {
        debug_assert!(dim <= MAX_DIM);
        Self {
            dim,
            data: [[ZERO; MAX_DIM]; MAX_DIM],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i][i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_rows<const D: usize>(rows: [[Complex64; D]; D]) -> Self {
        let mut m = Self::zeros(D);
        for (i, row) in rows.iter().enumerate() {
            m.data[i][..D].copy_from_slice(row);
        }
        m
    }

    pub fn diagonal(values: &[Complex64]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, v) in values.iter().enumerate() {
            m.data[i][i] = *v;
        }
        m
    }

    /// `|a><b|`
    pub fn outer(a: &Spinor, b: &Spinor) -> Self {
        let mut m = Self::zeros(a.dim());
        for i in 0..a.dim() {
            for j in 0..b.dim() {
                m.data[i][j] = a[i] * b[j].conj();
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Complex64) {
        self.data[i][j] = value;
    }

    pub fn row(&self, i: usize) -> Spinor {
        Spinor::from_slice(&self.data[i][..self.dim])
    }

    pub fn apply(&self, v: &Spinor) -> Spinor {
        let mut out = Spinor::zeros(self.dim);
        for (slot, row) in out.as_mut_slice().iter_mut().zip(&self.data[..self.dim]) {
            *slot = (0..self.dim).map(|j| row[j] * v[j]).sum();
        }
        out
    }

    /// Applies the matrix to a raw amplitude slice of length `dim`.
    pub fn apply_slice(&self, v: &[Complex64], out: &mut [Complex64]) {
        for (slot, row) in out.iter_mut().zip(&self.data[..self.dim]) {
            *slot = (0..self.dim).map(|j| row[j] * v[j]).sum();
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.data[i][j] = (0..self.dim)
                    .map(|l| self.data[i][l] * other.data[l][j])
                    .sum();
            }
        }
        out
    }

    pub fn adjoint(&self) -> Matrix {
        let mut out = Matrix::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.data[i][j] = self.data[j][i].conj();
            }
        }
        out
    }

    pub fn sub_scalar_identity(&self, lambda: Complex64) -> Matrix {
        let mut out = *self;
        for i in 0..self.dim {
            out.data[i][i] -= lambda;
        }
        out
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.data[i][i]).sum()
    }

    pub fn determinant(&self) -> Complex64 {
        let m = &self.data;
        match self.dim {
            1 => m[0][0],
            2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
            3 => {
                m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                    - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                    + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
            }
            _ => unreachable!("dimension capped at 3"),
        }
    }

    pub fn max_abs_diff(&self, other: &Matrix) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.dim {
            for j in 0..self.dim {
                worst = worst.max((self.data[i][j] - other.data[i][j]).norm());
            }
        }
        worst
    }

    /// Largest entrywise deviation of `M M†` from the identity.
    pub fn unitarity_defect(&self) -> f64 {
        self.mul(&self.adjoint())
            .max_abs_diff(&Matrix::identity(self.dim))
    }

    /// `<a|M|b>`
    pub fn sandwich(&self, a: &Spinor, b: &Spinor) -> Complex64 {
        a.inner(&self.apply(b))
    }
}
