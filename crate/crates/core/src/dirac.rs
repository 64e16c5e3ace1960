//! Complex 4x4 algebra for the Dirac matrices (standard representation),
//! the free Hamiltonians and the momentum-space unitaries of the FW and MO
//! transformations.
//!
//! Matrix indices are zero-based: entry `(0, 2)` is the `(1,3)` element in
//! the usual one-based physics notation.

use core::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use libm::sqrt;
use num_complex::Complex64;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// Dense row-major complex 4x4 matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Matrix4C([[Complex64; 4]; 4]);

impl Matrix4C {
    pub const fn from_rows(rows: [[Complex64; 4]; 4]) -> Self {
        Matrix4C(rows)
    }

    pub const fn zero() -> Self {
        Matrix4C([[ZERO; 4]; 4])
    }

    pub const fn identity() -> Self {
        let mut m = [[ZERO; 4]; 4];
        m[0][0] = ONE;
        m[1][1] = ONE;
        m[2][2] = ONE;
        m[3][3] = ONE;
        Matrix4C(m)
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = [[ZERO; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = f(i, j);
            }
        }
        Matrix4C(m)
    }

    pub fn rows(&self) -> &[[Complex64; 4]; 4] {
        &self.0
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(|i, j| self.0[j][i].conj())
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self::from_fn(|i, j| self.0[i][j] * s)
    }

    pub fn diagonal(&self) -> [Complex64; 4] {
        [self.0[0][0], self.0[1][1], self.0[2][2], self.0[3][3]]
    }

    pub fn trace(&self) -> Complex64 {
        self.diagonal().iter().sum()
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Matrix4C) -> f64 {
        let mut worst = 0.0_f64;
        for i in 0..4 {
            for j in 0..4 {
                worst = worst.max((self.0[i][j] - other.0[i][j]).norm());
            }
        }
        worst
    }

    pub fn max_abs(&self) -> f64 {
        self.max_abs_diff(&Matrix4C::zero())
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.max_abs_diff(&self.adjoint()) <= tol
    }

    /// `max |M M^dagger - I| <= tol`.
    pub fn is_unitary(&self, tol: f64) -> bool {
        self.unitarity_defect() <= tol
    }

    pub fn unitarity_defect(&self) -> f64 {
        (*self * self.adjoint()).max_abs_diff(&Matrix4C::identity())
    }

    /// `{A, B} = AB + BA`.
    pub fn anticommutator(&self, other: &Matrix4C) -> Self {
        *self * *other + *other * *self
    }

    pub fn commutator(&self, other: &Matrix4C) -> Self {
        *self * *other - *other * *self
    }

    pub fn apply(&self, v: &FourSpinor) -> FourSpinor {
        let mut out = [ZERO; 4];
        for (i, o) in out.iter_mut().enumerate() {
            *o = (0..4).map(|j| self.0[i][j] * v.0[j]).sum();
        }
        FourSpinor(out)
    }

    /// Column `j` as a spinor.
    pub fn column(&self, j: usize) -> FourSpinor {
        FourSpinor([self.0[0][j], self.0[1][j], self.0[2][j], self.0[3][j]])
    }
}

impl Index<(usize, usize)> for Matrix4C {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.0[i][j]
    }
}

impl IndexMut<(usize, usize)> for Matrix4C {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.0[i][j]
    }
}

impl Add for Matrix4C {
    type Output = Matrix4C;
    fn add(self, rhs: Matrix4C) -> Matrix4C {
        Matrix4C::from_fn(|i, j| self.0[i][j] + rhs.0[i][j])
    }
}

impl Sub for Matrix4C {
    type Output = Matrix4C;
    fn sub(self, rhs: Matrix4C) -> Matrix4C {
        Matrix4C::from_fn(|i, j| self.0[i][j] - rhs.0[i][j])
    }
}

impl Neg for Matrix4C {
    type Output = Matrix4C;
    fn neg(self) -> Matrix4C {
        Matrix4C::from_fn(|i, j| -self.0[i][j])
    }
}

impl Mul for Matrix4C {
    type Output = Matrix4C;
    fn mul(self, rhs: Matrix4C) -> Matrix4C {
        Matrix4C::from_fn(|i, j| (0..4).map(|k| self.0[i][k] * rhs.0[k][j]).sum())
    }
}

impl Mul<f64> for Matrix4C {
    type Output = Matrix4C;
    fn mul(self, s: f64) -> Matrix4C {
        Matrix4C::from_fn(|i, j| self.0[i][j] * s)
    }
}

/// Momentum in units of `mc`.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Momentum3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Momentum3 {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Momentum3 { x, y, z }
    }

    pub const fn zero() -> Self {
        Momentum3::new(0.0, 0.0, 0.0)
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.x * self.x + self.y * self.y + self.z * self.z
    }

    /// `E_p = sqrt(1 + p^2)`.
    pub fn energy(&self) -> f64 {
        sqrt(1.0 + self.norm_sqr())
    }

    /// `p^+ = p_x + i p_y`.
    pub fn p_plus(&self) -> Complex64 {
        Complex64::new(self.x, self.y)
    }
}

/// Four complex amplitudes.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct FourSpinor(pub [Complex64; 4]);

impl FourSpinor {
    pub const fn new(c: [Complex64; 4]) -> Self {
        FourSpinor(c)
    }

    pub fn real(c: [f64; 4]) -> Self {
        FourSpinor(c.map(|x| Complex64::new(x, 0.0)))
    }

    /// `e_{k}`, the unit spinor with a one in (zero-based) slot `k`.
    pub fn unit(k: usize) -> Self {
        let mut c = [ZERO; 4];
        c[k] = ONE;
        FourSpinor(c)
    }

    pub fn components(&self) -> &[Complex64; 4] {
        &self.0
    }

    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|c| c.norm_sqr()).sum()
    }

    /// `<self|other>`, antilinear in `self`.
    pub fn inner(&self, other: &FourSpinor) -> Complex64 {
        self.0.iter().zip(other.0.iter()).map(|(a, b)| a.conj() * b).sum()
    }

    pub fn scale(&self, s: Complex64) -> Self {
        FourSpinor(self.0.map(|c| c * s))
    }

    pub fn max_abs_diff(&self, other: &FourSpinor) -> f64 {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

impl Add for FourSpinor {
    type Output = FourSpinor;
    fn add(self, rhs: FourSpinor) -> FourSpinor {
        FourSpinor(core::array::from_fn(|i| self.0[i] + rhs.0[i]))
    }
}

impl Sub for FourSpinor {
    type Output = FourSpinor;
    fn sub(self, rhs: FourSpinor) -> FourSpinor {
        FourSpinor(core::array::from_fn(|i| self.0[i] - rhs.0[i]))
    }
}

impl Mul<f64> for FourSpinor {
    type Output = FourSpinor;
    fn mul(self, s: f64) -> FourSpinor {
        FourSpinor(self.0.map(|c| c * s))
    }
}

/// The Dirac matrices in the standard representation, plus
/// `delta = alpha_x alpha_y alpha_z beta`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DiracMatrices {
    pub alpha_x: Matrix4C,
    pub alpha_y: Matrix4C,
    pub alpha_z: Matrix4C,
    pub beta: Matrix4C,
    pub delta: Matrix4C,
}

impl DiracMatrices {
    pub fn alphas(&self) -> [Matrix4C; 3] {
        [self.alpha_x, self.alpha_y, self.alpha_z]
    }
}

/// Block matrix `[[0, s], [s, 0]]` for a 2x2 Pauli block `s`.
fn off_diagonal(s: [[Complex64; 2]; 2]) -> Matrix4C {
    let mut m = Matrix4C::zero();
    for i in 0..2 {
        for j in 0..2 {
            m.0[i][j + 2] = s[i][j];
            m.0[i + 2][j] = s[i][j];
        }
    }
    m
}

pub fn dirac_matrices() -> DiracMatrices {
    let sigma_x = [[ZERO, ONE], [ONE, ZERO]];
    let sigma_y = [[ZERO, -I], [I, ZERO]];
    let sigma_z = [[ONE, ZERO], [ZERO, -ONE]];
    let alpha_x = off_diagonal(sigma_x);
    let alpha_y = off_diagonal(sigma_y);
    let alpha_z = off_diagonal(sigma_z);
    let mut beta = Matrix4C::identity();
    beta.0[2][2] = -ONE;
    beta.0[3][3] = -ONE;
    let delta = alpha_x * alpha_y * alpha_z * beta;
    DiracMatrices {
        alpha_x,
        alpha_y,
        alpha_z,
        beta,
        delta,
    }
}

fn alpha_dot_p(m: &DiracMatrices, p: &Momentum3) -> Matrix4C {
    m.alpha_x * p.x + m.alpha_y * p.y + m.alpha_z * p.z
}

/// `H_p = alpha . p + beta`.
pub fn hamiltonian(p: &Momentum3) -> Matrix4C {
    let m = dirac_matrices();
    alpha_dot_p(&m, p) + m.beta
}

/// `H'_p = alpha . p + delta`, the free Hamiltonian after the constant
/// rotation [`v_op`]. Its diagonal vanishes identically.
pub fn hamiltonian_prime(p: &Momentum3) -> Matrix4C {
    let m = dirac_matrices();
    alpha_dot_p(&m, p) + m.delta
}

/// FW unitary `(E_p + beta H_p) / sqrt(2 E_p (E_p + 1))`.
pub fn u_fw(p: &Momentum3) -> Matrix4C {
    let m = dirac_matrices();
    let e = p.energy();
    let norm = sqrt(2.0 * e * (e + 1.0));
    (Matrix4C::identity() * e + m.beta * hamiltonian(p)) * (1.0 / norm)
}

/// Constant unitary `V = delta (delta + beta) / sqrt(2)`.
pub fn v_op() -> Matrix4C {
    let m = dirac_matrices();
    (m.delta * (m.delta + m.beta)) * core::f64::consts::FRAC_1_SQRT_2
}

/// MO unitary `(beta + H'_p / E_p) / sqrt(2)`, acting on `V`-rotated spinors.
pub fn u_mo(p: &Momentum3) -> Matrix4C {
    let m = dirac_matrices();
    let e = p.energy();
    (m.beta + hamiltonian_prime(p) * (1.0 / e)) * core::f64::consts::FRAC_1_SQRT_2
}

/// Both MO steps at once: `U_MO(p) V`.
pub fn u_mo_composed(p: &Momentum3) -> Matrix4C {
    u_mo(p) * v_op()
}
