//! Exact linear algebra over `ℚ` and cyclotomic fields.
//!
//! Two independent rank engines are provided: fraction-free (Bareiss)
//! elimination on dense matrices, and sparse row reduction. Small dense
//! helpers (inverse, null space, solve) are generic over [`Field`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cyclo::Cyclotomic;

/// The operations exact elimination needs.
pub trait Field: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Panics on zero.
    fn inv(&self) -> Self;
}

impl Field for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn inv(&self) -> Self {
        self.recip()
    }
}

impl Field for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::zero()
    }
    fn one() -> Self {
        Cyclotomic::one()
    }
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn inv(&self) -> Self {
        Cyclotomic::inv(self).expect("pivot is nonzero")
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<F: Field>(rows: &mut [Vec<F>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv();
        for x in rows[r].iter_mut() {
            *x = x.mul(&inv);
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c].clone();
                for k in c..ncols {
                    if !rows[r][k].is_zero() {
                        let delta = factor.mul(&rows[r][k]);
                        rows[i][k] = rows[i][k].sub(&delta);
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank_of_rows<F: Field>(rows: &[Vec<F>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Inverse of a square matrix, or `None` if singular.
pub fn invert<F: Field>(m: &[Vec<F>]) -> Option<Vec<Vec<F>>> {
    let n = m.len();
    let mut aug: Vec<Vec<F>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn invert_rational(m: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    invert(m)
}

/// Basis of `{x : m x = 0}`, one vector per free column (ascending), with a
/// 1 in that column.
pub fn nullspace<F: Field>(m: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    let mut rows = m.to_vec();
    let pivots = rref(&mut rows);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![F::zero(); ncols];
        v[free] = F::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = F::zero().sub(&rows[r][free]);
        }
        basis.push(v);
    }
    basis
}

/// Some `x` with `Σ_k x_k columns[k] = target`, if one exists.
pub fn solve_in_span<F: Field>(columns: &[Vec<F>], target: &[F]) -> Option<Vec<F>> {
    let k = columns.len();
    let n = target.len();
    let mut rows: Vec<Vec<F>> = (0..n)
        .map(|i| {
            let mut r: Vec<F> = columns.iter().map(|c| c[i].clone()).collect();
            r.push(target[i].clone());
            r
        })
        .collect();
    let pivots = rref(&mut rows);
    if pivots.contains(&k) {
        return None;
    }
    let mut x = vec![F::zero(); k];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = rows[r][k].clone();
    }
    Some(x)
}

/// Dense square or rectangular matrix over `ℚ(ω)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Cyclotomic>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Cyclotomic::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Matrix::scalar(n, Cyclotomic::one())
    }

    pub fn scalar(n: usize, x: Cyclotomic) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = x.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Cyclotomic>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Cyclotomic::from_int(x)).collect())
                .collect(),
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Cyclotomic {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Cyclotomic) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Cyclotomic] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Cyclotomic>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Cyclotomic> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// `Some(λ)` if the matrix is `λ·Id`.
    pub fn as_scalar(&self) -> Option<Cyclotomic> {
        if !self.is_square() || self.rows == 0 {
            return None;
        }
        let lambda = self.get(0, 0).clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let expect = if i == j { &lambda } else { &Cyclotomic::zero() };
                if self.get(i, j) != expect {
                    return None;
                }
            }
        }
        Some(lambda)
    }

    pub fn apply(&self, v: &[Cyclotomic]) -> Vec<Cyclotomic> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Cyclotomic::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.set(i * other.rows + k, j * other.cols + l, a * other.get(k, l));
                    }
                }
            }
        }
        out
    }

    pub fn sub_scalar(&self, lambda: &Cyclotomic) -> Matrix {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            let x = m.get(i, i) - lambda;
            m.set(i, i, x);
        }
        m
    }

    pub fn inverse(&self) -> Option<Matrix> {
        invert(&self.to_rows()).map(Matrix::from_rows)
    }

    pub fn rank(&self) -> usize {
        rank_of_rows(&self.to_rows())
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let r: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
                format!("[{}]", r.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

impl serde::Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

/// Column-sparse matrix: `columns[j]` maps row index to a nonzero entry.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix {
    pub nrows: usize,
    pub columns: Vec<BTreeMap<usize, Cyclotomic>>,
}

impl SparseMatrix {
    pub fn new(nrows: usize, columns: Vec<BTreeMap<usize, Cyclotomic>>) -> Self {
        debug_assert!(columns.iter().all(|c| c.keys().all(|&r| r < nrows)));
        debug_assert!(columns.iter().all(|c| c.values().all(|v| !v.is_zero())));
        SparseMatrix { nrows, columns }
    }

    pub fn ncols(&self) -> usize {
        self.columns.len()
    }

    pub fn to_dense(&self) -> Matrix {
        let mut m = Matrix::zeros(self.nrows, self.columns.len());
        for (j, col) in self.columns.iter().enumerate() {
            for (&i, v) in col {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    /// Rank by sparse elimination on the column vectors: each column is reduced
    /// against the stored pivot columns (keyed by their leading row) and
    /// kept if anything survives.
    pub fn rank(&self) -> usize {
        let mut pivots: BTreeMap<usize, BTreeMap<usize, Cyclotomic>> = BTreeMap::new();
        for col in &self.columns {
            let mut v = col.clone();
            loop {
                let Some((&lead, _)) = v.iter().next() else {
                    break;
                };
                match pivots.get(&lead) {
                    Some(p) => {
                        let factor = &v[&lead] * &p[&lead].inv().expect("pivot nonzero");
                        for (&r, x) in p {
                            let updated = match v.get(&r) {
                                Some(y) => y - &(&factor * x),
                                None => -(&factor * x),
                            };
                            if updated.is_zero() {
                                v.remove(&r);
                            } else {
                                v.insert(r, updated);
                            }
                        }
                    }
                    None => {
                        pivots.insert(lead, v);
                        break;
                    }
                }
            }
        }
        pivots.len()
    }
}

/// Rank by fraction-free (Bareiss) elimination over the cyclotomic field.
///
/// Every update divides by the previous pivot, which is exact; entries stay
/// minors of the input matrix.
pub fn rank_bareiss(m: &Matrix) -> usize {
    let mut a = m.to_rows();
    let nrows = a.len();
    let ncols = m.ncols();
    let mut prev = Cyclotomic::one();
    let mut rank = 0;
    for c in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let prev_inv = prev.inv().expect("previous pivot is nonzero");
        let pivot = a[rank][c].clone();
        for i in rank + 1..nrows {
            let lead = a[i][c].clone();
            for k in c + 1..ncols {
                let lhs = if a[i][k].is_zero() { Cyclotomic::zero() } else { &pivot * &a[i][k] };
                let rhs = if lead.is_zero() || a[rank][k].is_zero() {
                    Cyclotomic::zero()
                } else {
                    &lead * &a[rank][k]
                };
                let diff = lhs - rhs;
                a[i][k] = if diff.is_zero() { diff } else { &diff * &prev_inv };
            }
            a[i][c] = Cyclotomic::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}
