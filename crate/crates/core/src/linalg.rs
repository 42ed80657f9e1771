//! Dense exact linear algebra over [`Scalar`]: matrices, echelon bases,
//! nullspaces, characteristic polynomials and symmetric congruence.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use crate::exactnum::{Rational, Scalar};

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn as_slice(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn trace(&self) -> Scalar {
        assert!(self.is_square());
        (0..self.rows).fold(Scalar::zero(), |acc, i| acc + &self[(i, i)])
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    /// `AB − BA`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        &(self * other) - &(other * self)
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.cols);
        for i in 0..self.rows {
            e.insert(self.row(i).to_vec());
        }
        e.dim()
    }

    /// Basis of `{x : Ax = 0}`, in reduced echelon form (deterministic).
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let (rref, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::new();
        for &f in &free {
            let mut v = vec![Scalar::zero(); self.cols];
            v[f] = Scalar::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -&rref[(r, f)];
            }
            basis.push(v);
        }
        // echelonize the basis itself so its leading entries are unit vectors
        let mut e = Echelon::new(self.cols);
        for v in basis {
            e.insert(v);
        }
        e.reduced_basis()
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv().expect("nonzero pivot");
            for j in c..m.cols {
                m[(r, j)] = &m[(r, j)] * &inv;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    for j in c..m.cols {
                        if !m[(r, j)].is_zero() {
                            let t = &f * &m[(r, j)];
                            m[(i, j)] -= &t;
                        }
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square());
        let n = self.rows;
        let aug = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        });
        let (rref, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| rref[(i, j + n)].clone()))
    }

    /// Solves `Ax = b`; returns one solution with free variables set to zero.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let aug = Matrix::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                b[i].clone()
            }
        });
        let (rref, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = rref[(r, self.cols)].clone();
        }
        Some(x)
    }

    /// Characteristic polynomial `det(tI − A)` (Faddeev–LeVerrier), coefficients low to high.
    pub fn charpoly(&self) -> Poly {
        assert!(self.is_square());
        let n = self.rows;
        let mut coeffs = vec![Scalar::zero(); n + 1];
        coeffs[n] = Scalar::one();
        let mut m = Matrix::zeros(n, n);
        for k in 1..=n {
            // M_k = A·M_{k−1} + c_{n−k+1} I
            let mut next = self * &m;
            for i in 0..n {
                next[(i, i)] += &coeffs[n - k + 1];
            }
            let am = self * &next;
            let kk = Scalar::from_rational(Rational::from_integer((k as i64).into()));
            coeffs[n - k] = -(am.trace() / kk);
            m = next;
        }
        Poly::new(coeffs)
    }

    /// Evaluates a polynomial at this matrix (Horner).
    pub fn eval_poly(&self, p: &Poly) -> Matrix {
        assert!(self.is_square());
        let n = self.rows;
        let mut acc = Matrix::zeros(n, n);
        for c in p.coeffs().iter().rev() {
            acc = &acc * self;
            for i in 0..n {
                acc[(i, i)] += c;
            }
        }
        acc
    }

    /// Splits index set into classes of a block-diagonal decomposition up to permutation.
    pub fn diagonal_blocks(&self) -> Vec<Vec<usize>> {
        assert!(self.is_square());
        let n = self.rows;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && !self[(i, j)].is_zero() {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut root_slot = vec![usize::MAX; n];
        for i in 0..n {
            let r = find(&mut parent, i);
            if root_slot[r] == usize::MAX {
                root_slot[r] = groups.len();
                groups.push(Vec::new());
            }
            groups[root_slot[r]].push(i);
        }
        groups
    }

    pub fn submatrix(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(idx.len(), idx.len(), |i, j| self[(idx[i], idx[j])].clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows);
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        let t = a * b;
                        out[(i, j)] += &t;
                    }
                }
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Incrementally maintained echelon basis of a subspace of `Scalar^n`.
///
/// Rows are kept fully reduced with unit pivots, so membership tests and
/// coordinate reads are a single reduction pass.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    n: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(n: usize) -> Self {
        Echelon { n, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(n: usize) -> Self {
        let mut e = Echelon::new(n);
        for i in 0..n {
            let mut v = vec![Scalar::zero(); n];
            v[i] = Scalar::one();
            e.insert(v);
        }
        e
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.n
    }

    fn reduce(&self, v: &mut [Scalar]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &(&f * r);
                }
            }
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Zero::is_zero)
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, mut v: Vec<Scalar>) -> bool {
        assert_eq!(v.len(), self.n);
        if self.is_full() {
            return false;
        }
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("nonzero");
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        // keep existing rows reduced against the new pivot
        for row in &mut self.rows {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (x, r) in row.iter_mut().zip(&v) {
                    if !r.is_zero() {
                        *x -= &(&f * r);
                    }
                }
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(pos, p);
        self.rows.insert(pos, v);
        true
    }

    pub fn reduced_basis(&self) -> Vec<Vec<Scalar>> {
        self.rows.clone()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` relative to the reduced basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn intersect_dim(&self, other: &Echelon) -> usize {
        let mut sum = self.clone();
        for r in &other.rows {
            sum.insert(r.clone());
        }
        self.dim() + other.dim() - sum.dim()
    }

    pub fn contains_space(&self, other: &Echelon) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }
}

/// Solves for coordinates against a fixed (possibly non-echelon) basis.
#[derive(Clone, Debug)]
pub struct CoordinateSolver {
    pivots: Vec<usize>,
    // inverse of the basis restricted to pivot columns
    inverse: Matrix,
    basis: Vec<Vec<Scalar>>,
}

impl CoordinateSolver {
    /// Panics if the basis is linearly dependent.
    pub fn new(basis: Vec<Vec<Scalar>>) -> Self {
        let dim = basis.len();
        let m = Matrix::from_rows(basis.clone());
        let (_, pivots) = m.rref();
        assert_eq!(pivots.len(), dim, "basis is linearly dependent");
        let square = Matrix::from_fn(dim, dim, |i, j| basis[i][pivots[j]].clone());
        let inverse = square.inverse().expect("pivot block invertible");
        CoordinateSolver { pivots, inverse, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates `c` with `v = Σ c_i basis_i`, or `None` if `v` is outside the span.
    pub fn solve(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let dim = self.dim();
        let picked: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        // c · square = picked  ⇒  c = picked · inverse
        let mut c = vec![Scalar::zero(); dim];
        for (j, cj) in c.iter_mut().enumerate() {
            for (i, pi) in picked.iter().enumerate() {
                if !pi.is_zero() && !self.inverse[(i, j)].is_zero() {
                    *cj += &(pi * &self.inverse[(i, j)]);
                }
            }
        }
        let mut recon = vec![Scalar::zero(); v.len()];
        for (ci, b) in c.iter().zip(&self.basis) {
            if ci.is_zero() {
                continue;
            }
            for (r, x) in recon.iter_mut().zip(b) {
                if !x.is_zero() {
                    *r += &(ci * x);
                }
            }
        }
        (recon == v).then_some(c)
    }
}

/// Dense univariate polynomial, coefficients low to high, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly(Vec<Scalar>);

impl Poly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    /// `t + c`.
    pub fn linear(c: Scalar) -> Self {
        Poly::new(vec![c, Scalar::one()])
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly(Vec::new());
        }
        let mut out = vec![Scalar::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::new(out)
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &Scalar::from_int(k as i64))
                .collect(),
        )
    }

    /// Quotient and remainder.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead_inv = d.0[dd].inv().expect("nonzero lead");
        let mut rem = self.0.clone();
        let mut quot = vec![Scalar::zero(); rem.len().saturating_sub(dd).max(1)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let f = rem.last().unwrap() * &lead_inv;
            for (i, c) in d.0.iter().enumerate() {
                rem[k + i] -= &(&f * c);
            }
            quot[k] = f;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn monic(&self) -> Poly {
        match self.0.last() {
            None => self.clone(),
            Some(lead) => {
                let inv = lead.inv().expect("nonzero lead");
                Poly(self.0.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Product of the distinct irreducible factors: `p / gcd(p, p')`.
    pub fn squarefree_part(&self) -> Poly {
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }
}

/// Result of a symmetric congruence diagonalization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

/// Diagonalizes a real symmetric matrix by congruence `PᵀAP = D` and returns the diagonal.
///
/// Zero pivots are handled by the two-step clearing: when every remaining
/// diagonal entry vanishes but some `a_ij ≠ 0`, row/column `j` is added to
/// `i`, which makes the new diagonal entry `2a_ij ≠ 0`.
pub fn congruence_diagonal(a: &Matrix) -> Vec<Scalar> {
    assert!(a.is_symmetric(), "congruence requires a symmetric matrix");
    let n = a.rows();
    let mut m = a.clone();
    let mut diag = Vec::with_capacity(n);
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        let pivot = match active.iter().copied().find(|&i| !m[(i, i)].is_zero()) {
            Some(p) => p,
            None => {
                let pair = active
                    .iter()
                    .flat_map(|&i| active.iter().map(move |&j| (i, j)))
                    .find(|&(i, j)| i != j && !m[(i, j)].is_zero());
                match pair {
                    None => {
                        // remaining block is zero
                        diag.extend(active.iter().map(|_| Scalar::zero()));
                        break;
                    }
                    Some((i, j)) => {
                        // row_i += row_j, col_i += col_j
                        for k in 0..n {
                            let v = m[(j, k)].clone();
                            m[(i, k)] += &v;
                        }
                        for k in 0..n {
                            let v = m[(k, j)].clone();
                            m[(k, i)] += &v;
                        }
                        i
                    }
                }
            }
        };
        let p = m[(pivot, pivot)].clone();
        let pinv = p.inv().expect("nonzero pivot");
        for &i in &active {
            if i == pivot || m[(i, pivot)].is_zero() {
                continue;
            }
            let f = &m[(i, pivot)] * &pinv;
            for &k in &active {
                let t = &f * &m[(pivot, k)];
                m[(i, k)] -= &t;
            }
            for &k in &active {
                let t = &f * &m[(k, pivot)];
                m[(k, i)] -= &t;
            }
        }
        diag.push(p);
        active.retain(|&i| i != pivot);
    }
    diag
}

/// Inertia of a real symmetric matrix; `None` when an entry is not real.
pub fn inertia(a: &Matrix) -> Option<Inertia> {
    if !a.as_slice().iter().all(Scalar::is_real) {
        return None;
    }
    let diag = congruence_diagonal(a);
    let mut out = Inertia { positive: 0, negative: 0, zero: 0 };
    for d in &diag {
        let zero = Rational::zero();
        match d.re().cmp(&zero) {
            std::cmp::Ordering::Greater => out.positive += 1,
            std::cmp::Ordering::Less => out.negative += 1,
            std::cmp::Ordering::Equal => out.zero += 1,
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect())
    }

    #[test]
    fn nullspace_of_rank_one() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(a.mul_vec(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn inverse_and_solve() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, Matrix::identity(2));
        let x = a.solve(&[Scalar::from_int(3), Scalar::from_int(2)]).unwrap();
        assert_eq!(x, vec![Scalar::from_int(1), Scalar::from_int(1)]);
        assert!(m(&[&[1, 1], &[1, 1]]).inverse().is_none());
        assert!(m(&[&[1, 1], &[1, 1]]).solve(&[Scalar::from_int(1), Scalar::from_int(2)]).is_none());
    }

    #[test]
    fn charpoly_of_companion() {
        // t² − 3t + 2 = (t−1)(t−2)
        let a = m(&[&[0, -2], &[1, 3]]);
        let p = a.charpoly();
        assert_eq!(p, Poly::new(vec![Scalar::from_int(2), Scalar::from_int(-3), Scalar::from_int(1)]));
        assert!(a.eval_poly(&p).is_zero());
    }

    #[test]
    fn squarefree_detects_jordan_block() {
        let j = m(&[&[1, 1], &[0, 1]]);
        let sf = j.charpoly().squarefree_part();
        assert_eq!(sf.degree(), Some(1));
        assert!(!j.eval_poly(&sf).is_zero());
        let d = m(&[&[1, 0], &[0, 1]]);
        assert!(d.eval_poly(&d.charpoly().squarefree_part()).is_zero());
    }

    #[test]
    fn congruence_handles_zero_diagonal() {
        // hyperbolic plane: signature (1,1)
        let h = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(inertia(&h), Some(Inertia { positive: 1, negative: 1, zero: 0 }));
        let a = m(&[&[-2, 0, 0], &[0, 0, 3], &[0, 3, 0]]);
        assert_eq!(inertia(&a), Some(Inertia { positive: 1, negative: 2, zero: 0 }));
        let z = m(&[&[1, 1], &[1, 1]]);
        assert_eq!(inertia(&z), Some(Inertia { positive: 1, negative: 0, zero: 1 }));
    }

    #[test]
    fn echelon_coordinates() {
        let mut e = Echelon::new(3);
        assert!(e.insert(vec![Scalar::from_int(1), Scalar::from_int(1), Scalar::zero()]));
        assert!(!e.insert(vec![Scalar::from_int(2), Scalar::from_int(2), Scalar::zero()]));
        assert!(e.contains(&[Scalar::from_int(3), Scalar::from_int(3), Scalar::zero()]));
        assert!(!e.contains(&[Scalar::from_int(1), Scalar::zero(), Scalar::zero()]));
        let solver = CoordinateSolver::new(vec![
            vec![Scalar::from_int(1), Scalar::from_int(1), Scalar::zero()],
            vec![Scalar::zero(), Scalar::from_int(1), Scalar::from_int(1)],
        ]);
        let c = solver.solve(&[Scalar::from_int(1), Scalar::from_int(3), Scalar::from_int(2)]).unwrap();
        assert_eq!(c, vec![Scalar::from_int(1), Scalar::from_int(2)]);
        assert!(solver.solve(&[Scalar::from_int(1), Scalar::zero(), Scalar::zero()]).is_none());
    }

    #[test]
    fn blocks_split_direct_sums() {
        let a = m(&[&[1, 0, 2], &[0, 3, 0], &[4, 0, 5]]);
        let blocks = a.diagonal_blocks();
        assert_eq!(blocks, vec![vec![0, 2], vec![1]]);
    }
}
