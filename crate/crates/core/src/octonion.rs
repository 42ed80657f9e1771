//! The octonion algebra with basis `e₀ … e₇`, its norm and the operators
//! `L_x`, `R_x`, `D_{x,y}` as 8×8 matrices.
//!
//! The real and complex algebras share one multiplication table; only the
//! scalars fed in differ.

use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_traits::{One, Zero};
use rand::Rng;

use crate::exactnum::{Field, Scalar};
use crate::fano::{label, FanoIndex, GroupElement, ORIENTED_LINES};
use crate::linalg::Matrix;

/// `e_i e_j = TABLE[i][j].0 · e_{TABLE[i][j].1}`.
fn table() -> &'static [[(i8, usize); 8]; 8] {
    static T: OnceLock<[[(i8, usize); 8]; 8]> = OnceLock::new();
    T.get_or_init(|| {
        let mut t = [[(0i8, 0usize); 8]; 8];
        for (i, row) in t.iter_mut().enumerate() {
            row[0] = (1, i);
        }
        for j in 0..8 {
            t[0][j] = (1, j);
        }
        for i in 1..8 {
            t[i][i] = (-1, 0);
        }
        for [a, b, c] in ORIENTED_LINES {
            let (a, b, c) = (a as usize, b as usize, c as usize);
            for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                t[x][y] = (1, z);
                t[y][x] = (-1, z);
            }
        }
        t
    })
}

/// Product of basis vectors as `(sign, index)`.
pub fn basis_product(i: usize, j: usize) -> (i8, usize) {
    table()[i][j]
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Octonion {
    coords: [Scalar; 8],
}

impl Octonion {
    pub fn zero() -> Self {
        Octonion { coords: std::array::from_fn(|_| Scalar::zero()) }
    }

    pub fn one() -> Self {
        Octonion::basis(0)
    }

    pub fn basis(i: usize) -> Self {
        let mut x = Octonion::zero();
        x.coords[i] = Scalar::one();
        x
    }

    pub fn from_coords(coords: [Scalar; 8]) -> Self {
        Octonion { coords }
    }

    pub fn from_slice(v: &[Scalar]) -> Self {
        Octonion { coords: std::array::from_fn(|i| v[i].clone()) }
    }

    pub fn coords(&self) -> &[Scalar; 8] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Scalar {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, s: &Scalar) -> Octonion {
        Octonion { coords: std::array::from_fn(|i| &self.coords[i] * s) }
    }

    pub fn random<R: Rng + ?Sized>(field: Field, rng: &mut R) -> Octonion {
        Octonion { coords: std::array::from_fn(|_| field.sample(rng)) }
    }

    /// `t(x) = 2x₀`.
    pub fn trace(&self) -> Scalar {
        &self.coords[0] + &self.coords[0]
    }

    /// `x̄ = t(x)·1 − x`.
    pub fn conjugate(&self) -> Octonion {
        &Octonion::one().scale(&self.trace()) - self
    }

    /// `n(x) = Σ x_i²`.
    pub fn norm(&self) -> Scalar {
        polar(self, self)
    }
}

/// Polar form with `n(e_i, e_j) = δ_ij`.
pub fn polar(x: &Octonion, y: &Octonion) -> Scalar {
    let mut s = Scalar::zero();
    for (a, b) in x.coords.iter().zip(&y.coords) {
        if !a.is_zero() && !b.is_zero() {
            s += &(a * b);
        }
    }
    s
}

impl Add for &Octonion {
    type Output = Octonion;
    fn add(self, o: &Octonion) -> Octonion {
        Octonion { coords: std::array::from_fn(|i| &self.coords[i] + &o.coords[i]) }
    }
}

impl Sub for &Octonion {
    type Output = Octonion;
    fn sub(self, o: &Octonion) -> Octonion {
        Octonion { coords: std::array::from_fn(|i| &self.coords[i] - &o.coords[i]) }
    }
}

impl Neg for &Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        Octonion { coords: std::array::from_fn(|i| -&self.coords[i]) }
    }
}

impl Mul for &Octonion {
    type Output = Octonion;
    fn mul(self, o: &Octonion) -> Octonion {
        let mut out = Octonion::zero();
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let (s, k) = basis_product(i, j);
                let ab = a * b;
                if s > 0 {
                    out.coords[k] += &ab;
                } else {
                    out.coords[k] -= &ab;
                }
            }
        }
        out
    }
}

/// `(x, y, z) = (xy)z − x(yz)`.
pub fn associator(x: &Octonion, y: &Octonion, z: &Octonion) -> Octonion {
    &(&(x * y) * z) - &(x * &(y * z))
}

fn operator(f: impl Fn(&Octonion) -> Octonion) -> Matrix {
    let mut m = Matrix::zeros(8, 8);
    for j in 0..8 {
        let col = f(&Octonion::basis(j));
        for i in 0..8 {
            m[(i, j)] = col.coords[i].clone();
        }
    }
    m
}

/// Matrix of `L_x(y) = xy`.
pub fn left_mult(x: &Octonion) -> Matrix {
    operator(|y| x * y)
}

/// Matrix of `R_x(y) = yx`.
pub fn right_mult(x: &Octonion) -> Matrix {
    operator(|y| y * x)
}

pub fn apply(m: &Matrix, x: &Octonion) -> Octonion {
    Octonion::from_slice(&m.mul_vec(&x.coords))
}

/// `D_{x,y} = [L_x, L_y] + [L_x, R_y] + [R_x, R_y]`.
pub fn inner_derivation(x: &Octonion, y: &Octonion) -> Matrix {
    let (lx, ly, rx, ry) = (left_mult(x), left_mult(y), right_mult(x), right_mult(y));
    &(&lx.commutator(&ly) + &lx.commutator(&ry)) + &rx.commutator(&ry)
}

/// Leibniz rule `d(e_i e_j) = d(e_i) e_j + e_i d(e_j)` on all 64 basis pairs.
pub fn is_derivation(d: &Matrix) -> bool {
    let images: Vec<Octonion> = (0..8).map(|i| apply(d, &Octonion::basis(i))).collect();
    (0..8).all(|i| {
        (0..8).all(|j| {
            let (s, k) = basis_product(i, j);
            let lhs = images[k].scale(&Scalar::from(s as i64));
            let rhs = &(&images[i] * &Octonion::basis(j)) + &(&Octonion::basis(i) * &images[j]);
            lhs == rhs
        })
    })
}

/// Index `i` with `𝒪_g = span(e_i)`.
pub fn homogeneous_component(g: GroupElement) -> usize {
    g.label_index() as usize
}

/// Degree of `e_i` in Z₂³.
pub fn degree(i: usize) -> GroupElement {
    if i == 0 {
        GroupElement::IDENTITY
    } else {
        label(FanoIndex::from_slot(i - 1))
    }
}

/// The linear map `e₀ ↦ e₀`, `e_i ↦ signs[i-1]·e_{images[i-1]}` as a matrix.
pub fn signed_permutation(images: [u8; 7], signs: [i8; 7]) -> Matrix {
    let mut m = Matrix::zeros(8, 8);
    m[(0, 0)] = Scalar::one();
    for i in 0..7 {
        m[(images[i] as usize, i + 1)] = Scalar::from(signs[i] as i64);
    }
    m
}

/// Multiplicativity of a signed permutation on basis pairs.
pub fn is_signed_automorphism(images: [u8; 7], signs: [i8; 7]) -> bool {
    let img = |i: usize| -> (i8, usize) {
        if i == 0 {
            (1, 0)
        } else {
            (signs[i - 1], images[i - 1] as usize)
        }
    };
    (0..8).all(|i| {
        (0..8).all(|j| {
            let (s, k) = basis_product(i, j);
            let (sk, fk) = img(k);
            let (si, fi) = img(i);
            let (sj, fj) = img(j);
            let (sp, p) = basis_product(fi, fj);
            p == fk && s * sk == si * sj * sp
        })
    })
}

/// The algebra with a field tag, used for sampling and self-checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OctonionAlgebra {
    pub field: Field,
}

impl OctonionAlgebra {
    pub fn new(field: Field) -> Self {
        OctonionAlgebra { field }
    }

    pub fn sign(&self, i: usize, j: usize) -> i8 {
        basis_product(i, j).0
    }

    pub fn index(&self, i: usize, j: usize) -> usize {
        basis_product(i, j).1
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Octonion {
        Octonion::random(self.field, rng)
    }

    /// Alternativity on all basis triples; by trilinearity this covers the
    /// linearized identity `(x,y,z) + (y,x,z) = 0`.
    pub fn self_check(&self) -> bool {
        let b: Vec<Octonion> = (0..8).map(Octonion::basis).collect();
        (0..8).all(|i| {
            (0..8).all(|j| {
                (0..8).all(|k| {
                    let left = &associator(&b[i], &b[j], &b[k]) + &associator(&b[j], &b[i], &b[k]);
                    let right = &associator(&b[i], &b[j], &b[k]) + &associator(&b[i], &b[k], &b[j]);
                    left.is_zero() && right.is_zero()
                })
            })
        })
    }
}
