//! Exact arithmetic: rationals, Gaussian rationals, sparse matrices over
//! them, and fraction-preserving Gaussian elimination.
//!
//! Everything algebraic in this crate (root systems, representations,
//! symmetric polynomials) runs on these types; floats only appear in
//! `geomcheck`.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

pub type Rat = BigRational;

pub fn rat(num: i64, den: i64) -> Rat {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().expect("rational out of f64 range")
}

/// Canonical "p/q" rendering used by every JSON report.
pub fn rat_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Gaussian rational `re + im·i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CRat {
    pub re: Rat,
    pub im: Rat,
}

impl CRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        CRat { re, im }
    }

    pub fn from_rat(re: Rat) -> Self {
        CRat {
            re,
            im: Rat::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(rat_int(n))
    }

    pub fn i() -> Self {
        CRat {
            re: Rat::zero(),
            im: Rat::one(),
        }
    }

    pub fn conj(&self) -> Self {
        CRat {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// Multiplication by i.
    pub fn times_i(&self) -> Self {
        CRat {
            re: -self.im.clone(),
            im: self.re.clone(),
        }
    }

    pub fn inv(&self) -> Self {
        let n = &self.re * &self.re + &self.im * &self.im;
        assert!(!n.is_zero(), "division by zero Gaussian rational");
        CRat {
            re: &self.re / &n,
            im: -(&self.im / &n),
        }
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(rat_to_f64(&self.re), rat_to_f64(&self.im))
    }
}

impl fmt::Display for CRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", rat_string(&self.re))
        } else if self.re.is_zero() {
            write!(f, "{}i", rat_string(&self.im))
        } else {
            write!(f, "{}+{}i", rat_string(&self.re), rat_string(&self.im))
        }
    }
}

impl Zero for CRat {
    fn zero() -> Self {
        CRat {
            re: Rat::zero(),
            im: Rat::zero(),
        }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for CRat {
    fn one() -> Self {
        CRat {
            re: Rat::one(),
            im: Rat::zero(),
        }
    }
}

impl Add for CRat {
    type Output = CRat;
    fn add(self, o: CRat) -> CRat {
        CRat {
            re: self.re + o.re,
            im: self.im + o.im,
        }
    }
}

impl AddAssign for CRat {
    fn add_assign(&mut self, o: CRat) {
        self.re += o.re;
        self.im += o.im;
    }
}

impl Sub for CRat {
    type Output = CRat;
    fn sub(self, o: CRat) -> CRat {
        CRat {
            re: self.re - o.re,
            im: self.im - o.im,
        }
    }
}

impl SubAssign for CRat {
    fn sub_assign(&mut self, o: CRat) {
        self.re -= o.re;
        self.im -= o.im;
    }
}

impl Neg for CRat {
    type Output = CRat;
    fn neg(self) -> CRat {
        CRat {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Mul for CRat {
    type Output = CRat;
    fn mul(self, o: CRat) -> CRat {
        CRat {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl Div for CRat {
    type Output = CRat;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: CRat) -> CRat {
        self * o.inv()
    }
}

impl Mul<&CRat> for &CRat {
    type Output = CRat;
    fn mul(self, o: &CRat) -> CRat {
        CRat {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

/// Row-sparse square matrix over Gaussian rationals.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMat {
    pub dim: usize,
    rows: Vec<BTreeMap<usize, CRat>>,
}

impl SparseMat {
    pub fn zero(dim: usize) -> Self {
        SparseMat {
            dim,
            rows: vec![BTreeMap::new(); dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for k in 0..dim {
            m.set(k, k, CRat::one());
        }
        m
    }

    pub fn set(&mut self, i: usize, j: usize, v: CRat) {
        if v.is_zero() {
            self.rows[i].remove(&j);
        } else {
            self.rows[i].insert(j, v);
        }
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: CRat) {
        if v.is_zero() {
            return;
        }
        let e = self.rows[i].entry(j).or_insert_with(CRat::zero);
        *e += v;
        if e.is_zero() {
            self.rows[i].remove(&j);
        }
    }

    pub fn get(&self, i: usize, j: usize) -> CRat {
        self.rows[i].get(&j).cloned().unwrap_or_else(CRat::zero)
    }

    pub fn row(&self, i: usize) -> impl Iterator<Item = (usize, &CRat)> {
        self.rows[i].iter().map(|(j, v)| (*j, v))
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &CRat)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn scale(&self, c: &CRat) -> SparseMat {
        let mut out = SparseMat::zero(self.dim);
        for (i, j, v) in self.entries() {
            out.set(i, j, c * v);
        }
        out
    }

    pub fn add(&self, o: &SparseMat) -> SparseMat {
        let mut out = self.clone();
        for (i, j, v) in o.entries() {
            out.add_to(i, j, v.clone());
        }
        out
    }

    pub fn sub(&self, o: &SparseMat) -> SparseMat {
        let mut out = self.clone();
        for (i, j, v) in o.entries() {
            out.add_to(i, j, -v.clone());
        }
        out
    }

    pub fn mul(&self, o: &SparseMat) -> SparseMat {
        assert_eq!(self.dim, o.dim);
        let mut out = SparseMat::zero(self.dim);
        for i in 0..self.dim {
            for (k, a) in &self.rows[i] {
                if o.rows[*k].is_empty() {
                    continue;
                }
                for (j, b) in &o.rows[*k] {
                    out.add_to(i, *j, a * b);
                }
            }
        }
        out
    }

    pub fn commutator(&self, o: &SparseMat) -> SparseMat {
        self.mul(o).sub(&o.mul(self))
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> SparseMat {
        let mut out = SparseMat::zero(self.dim);
        for (i, j, v) in self.entries() {
            out.set(j, i, v.conj());
        }
        out
    }

    pub fn trace(&self) -> CRat {
        let mut t = CRat::zero();
        for i in 0..self.dim {
            if let Some(v) = self.rows[i].get(&i) {
                t += v.clone();
            }
        }
        t
    }

    /// tr(self · other) without forming the product.
    pub fn trace_product(&self, o: &SparseMat) -> CRat {
        let mut t = CRat::zero();
        for (i, k, a) in self.entries() {
            if let Some(b) = o.rows[k].get(&i) {
                t += a * b;
            }
        }
        t
    }

    pub fn is_anti_hermitian(&self) -> bool {
        self.add(&self.dagger()).is_zero()
    }

    /// Matrix-vector product over exact vectors.
    pub fn apply(&self, v: &[CRat]) -> Vec<CRat> {
        let mut out = vec![CRat::zero(); self.dim];
        for (i, j, a) in self.entries() {
            if !v[j].is_zero() {
                out[i] += a * &v[j];
            }
        }
        out
    }

    pub fn to_dense_c64(&self) -> nalgebra::DMatrix<Complex64> {
        let mut m = nalgebra::DMatrix::<Complex64>::zeros(self.dim, self.dim);
        for (i, j, v) in self.entries() {
            m[(i, j)] = v.to_c64();
        }
        m
    }

    pub fn max_abs_f64(&self) -> f64 {
        self.entries()
            .map(|(_, _, v)| v.to_c64().norm())
            .fold(0.0, f64::max)
    }
}

// ---------------------------------------------------------------------------
// Exact dense linear algebra.
// ---------------------------------------------------------------------------

/// Field-like bound for the elimination routines below.
pub trait Scalar:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + AddAssign
    + SubAssign
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
        + AddAssign
        + SubAssign
{
}

/// Solve the square system `a x = b` exactly. `None` if singular.
pub fn solve_square<T: Scalar>(a: &[Vec<T>], b: &[T]) -> Option<Vec<T>> {
    let n = a.len();
    assert!(a.iter().all(|r| r.len() == n) && b.len() == n);
    let mut m: Vec<Vec<T>> = a
        .iter()
        .zip(b)
        .map(|(r, rhs)| {
            let mut row = r.clone();
            row.push(rhs.clone());
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let inv = T::one() / m[col][col].clone();
        for j in col..=n {
            m[col][j] = m[col][j].clone() * inv.clone();
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for j in col..=n {
                    let d = f.clone() * m[col][j].clone();
                    m[r][j] -= d;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// Exact inverse of a square matrix. `None` if singular.
pub fn invert<T: Scalar>(a: &[Vec<T>]) -> Option<Vec<Vec<T>>> {
    let n = a.len();
    let mut m: Vec<Vec<T>> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            for j in 0..n {
                row.push(if i == j { T::one() } else { T::zero() });
            }
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let inv = T::one() / m[col][col].clone();
        for j in col..2 * n {
            m[col][j] = m[col][j].clone() * inv.clone();
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for j in col..2 * n {
                    let d = f.clone() * m[col][j].clone();
                    m[r][j] -= d;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Basis of the right nullspace of an `m×n` matrix (rows may exceed columns).
pub fn nullspace<T: Scalar>(a: &[Vec<T>]) -> Vec<Vec<T>> {
    if a.is_empty() {
        return vec![];
    }
    let ncols = a[0].len();
    let mut m: Vec<Vec<T>> = a.to_vec();
    let nrows = m.len();
    let mut pivot_col_of_row = vec![];
    let mut row = 0;
    for col in 0..ncols {
        if row >= nrows {
            break;
        }
        if let Some(p) = (row..nrows).find(|&r| !m[r][col].is_zero()) {
            m.swap(row, p);
            let inv = T::one() / m[row][col].clone();
            for j in col..ncols {
                m[row][j] = m[row][j].clone() * inv.clone();
            }
            for r in 0..nrows {
                if r != row && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for j in col..ncols {
                        let d = f.clone() * m[row][j].clone();
                        m[r][j] -= d;
                    }
                }
            }
            pivot_col_of_row.push(col);
            row += 1;
        }
    }
    let pivots: Vec<usize> = pivot_col_of_row.clone();
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = vec![];
    for &f in &free {
        let mut v = vec![T::zero(); ncols];
        v[f] = T::one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -m[r][f].clone();
        }
        basis.push(v);
    }
    basis
}

pub fn rank<T: Scalar>(a: &[Vec<T>]) -> usize {
    if a.is_empty() {
        return 0;
    }
    a[0].len() - nullspace(a).len()
}

/// Outcome of an exact span-membership question with certificate.
pub enum SpanSolve<T> {
    /// Coefficients expressing the target over the given columns.
    Member(Vec<T>),
    /// Row functional `y` with `yᵀ·columns = 0` and `yᵀ·target ≠ 0`.
    Separating(Vec<T>),
}

/// Decide whether `target` lies in the column span of `columns`
/// (each column a length-`nrows` vector), producing either the
/// combination or a separating functional, both exact.
pub fn solve_in_span<T: Scalar>(columns: &[Vec<T>], target: &[T]) -> SpanSolve<T> {
    let nrows = target.len();
    let ncols = columns.len();
    // Augmented rows [A | b | I] so the left multiplier is tracked.
    let mut m: Vec<Vec<T>> = (0..nrows)
        .map(|i| {
            let mut row: Vec<T> = columns.iter().map(|c| c[i].clone()).collect();
            row.push(target[i].clone());
            for k in 0..nrows {
                row.push(if k == i { T::one() } else { T::zero() });
            }
            row
        })
        .collect();
    let width = ncols + 1 + nrows;
    let mut row = 0;
    let mut pivot_cols = vec![];
    for col in 0..ncols {
        if row >= nrows {
            break;
        }
        if let Some(p) = (row..nrows).find(|&r| !m[r][col].is_zero()) {
            m.swap(row, p);
            let inv = T::one() / m[row][col].clone();
            for j in 0..width {
                m[row][j] = m[row][j].clone() * inv.clone();
            }
            for r in 0..nrows {
                if r != row && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for j in 0..width {
                        let d = f.clone() * m[row][j].clone();
                        m[r][j] -= d;
                    }
                }
            }
            pivot_cols.push(col);
            row += 1;
        }
    }
    // Any eliminated row with nonzero b-entry certifies non-membership.
    for r in row..nrows {
        if !m[r][ncols].is_zero() {
            return SpanSolve::Separating(m[r][ncols + 1..].to_vec());
        }
    }
    let mut coeffs = vec![T::zero(); ncols];
    for (r, &c) in pivot_cols.iter().enumerate() {
        coeffs[c] = m[r][ncols].clone();
    }
    SpanSolve::Member(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_rational_field_ops() {
        let a = CRat::new(rat(1, 2), rat(1, 3));
        let b = a.clone() * a.inv();
        assert_eq!(b, CRat::one());
        assert_eq!(a.times_i(), CRat::i() * a.clone());
        assert_eq!(a.conj().conj(), a);
    }

    #[test]
    fn sparse_commutator_su2() {
        // [E12, E21] = E11 - E22
        let mut e12 = SparseMat::zero(2);
        e12.set(0, 1, CRat::one());
        let mut e21 = SparseMat::zero(2);
        e21.set(1, 0, CRat::one());
        let c = e12.commutator(&e21);
        let mut h = SparseMat::zero(2);
        h.set(0, 0, CRat::one());
        h.set(1, 1, -CRat::one());
        assert_eq!(c, h);
        assert_eq!(c.trace(), CRat::zero());
    }

    #[test]
    fn solve_and_invert_roundtrip() {
        let a = vec![vec![rat(2, 1), rat(1, 1)], vec![rat(1, 1), rat(3, 1)]];
        let b = vec![rat(5, 1), rat(10, 1)];
        let x = solve_square(&a, &b).unwrap();
        assert_eq!(x, vec![rat(1, 1), rat(3, 1)]);
        let inv = invert(&a).unwrap();
        // a · a⁻¹ = 1
        for i in 0..2 {
            for j in 0..2 {
                let mut s = Rat::zero();
                for k in 0..2 {
                    s += &a[i][k] * &inv[k][j];
                }
                assert_eq!(s, if i == j { Rat::one() } else { Rat::zero() });
            }
        }
    }

    #[test]
    fn span_certificates() {
        let cols = vec![vec![rat_int(1), rat_int(0)], vec![rat_int(1), rat_int(1)]];
        match solve_in_span(&cols, &[rat_int(3), rat_int(2)]) {
            SpanSolve::Member(c) => assert_eq!(c, vec![rat_int(1), rat_int(2)]),
            _ => panic!("expected member"),
        }
        let cols2 = vec![vec![rat_int(1), rat_int(0), rat_int(0)]];
        match solve_in_span(&cols2, &[rat_int(0), rat_int(1), rat_int(0)]) {
            SpanSolve::Separating(y) => {
                // y annihilates the column and pairs nontrivially with target
                assert_eq!(y[0], Rat::zero());
                assert!(!y[1].is_zero());
            }
            _ => panic!("expected separating functional"),
        }
    }

    #[test]
    fn nullspace_dimension() {
        let a = vec![vec![rat_int(1), rat_int(2), rat_int(3)]];
        let ns = nullspace(&a);
        assert_eq!(ns.len(), 2);
        for v in ns {
            let s = &v[0] + &(rat_int(2) * &v[1]) + &(rat_int(3) * &v[2]);
            assert_eq!(s, Rat::zero());
        }
    }
}
