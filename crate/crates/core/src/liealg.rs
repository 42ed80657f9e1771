//! The Lie algebras `d₄ = so(𝒪, n)`, `b₃ = {f ∈ d₄ : f(1) = 0}` and
//! `g₂ = Der(𝒪)` as exact 8×8 matrix algebras with their Z₂³-gradings.
//!
//! A [`GradedAlgebra`] stores a homogeneous basis ordered by component
//! (`g₁` first), so basis index `u` lies in component `u / r + 1`. Brackets
//! are kept as sparse structure constants; contracted algebras reuse the
//! same basis with rescaled constants.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::exactnum::{Field, Scalar};
use crate::fano::{label, prec, star_of, Collineation, Edge, FanoIndex, GroupElement, Line};
use crate::linalg::{CoordinateSolver, Echelon, Matrix};
use crate::octonion::{self, basis_product, degree, polar, signed_permutation, Octonion};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("unknown algebra `{0}` (expected g2, b3 or d4)")]
    UnknownKind(String),
    #[error("component {component} has dimension {found}, expected {expected}")]
    ComponentDim { component: u8, found: usize, expected: usize },
    #[error("bracket of basis vectors {0} and {1} leaves the expected component")]
    Grading(usize, usize),
    #[error("collineation {0:?} has no signed-permutation lift")]
    NoLift(Collineation),
    #[error("sl2 triples are only constructed for b3 and d4")]
    NoTriples,
    #[error("indices must satisfy {0} ≺ {1}")]
    Orientation(u8, u8),
    #[error("{0}")]
    Fano(#[from] crate::fano::FanoError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum AlgebraKind {
    #[serde(rename = "g2")]
    G2,
    #[serde(rename = "b3")]
    B3,
    #[serde(rename = "d4")]
    D4,
}

impl AlgebraKind {
    pub const ALL: [AlgebraKind; 3] = [AlgebraKind::G2, AlgebraKind::B3, AlgebraKind::D4];

    pub fn rank(self) -> usize {
        match self {
            AlgebraKind::G2 => 2,
            AlgebraKind::B3 => 3,
            AlgebraKind::D4 => 4,
        }
    }

    pub fn dim(self) -> usize {
        7 * self.rank()
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AlgebraKind::G2 => "g2",
            AlgebraKind::B3 => "b3",
            AlgebraKind::D4 => "d4",
        })
    }
}

impl FromStr for AlgebraKind {
    type Err = LieError;
    fn from_str(s: &str) -> Result<Self, LieError> {
        match s {
            "g2" => Ok(AlgebraKind::G2),
            "b3" => Ok(AlgebraKind::B3),
            "d4" => Ok(AlgebraKind::D4),
            _ => Err(LieError::UnknownKind(s.to_string())),
        }
    }
}

/// `φ_{x,y} = n(x,−)y − n(y,−)x`, i.e. the matrix `y xᵀ − x yᵀ`.
pub fn phi(x: &Octonion, y: &Octonion) -> Matrix {
    let (x, y) = (x.coords(), y.coords());
    Matrix::from_fn(8, 8, |r, c| &(&x[c] * &y[r]) - &(&y[c] * &x[r]))
}

/// `φ_{e_a, e_b}`.
pub fn phi_basis(a: usize, b: usize) -> Matrix {
    phi(&Octonion::basis(a), &Octonion::basis(b))
}

fn idx(i: FanoIndex) -> usize {
    i.get() as usize
}

/// The point labelled `g_a + g_b + g_c`.
fn star3(a: FanoIndex, b: FanoIndex, c: FanoIndex) -> FanoIndex {
    label(a).add(label(b)).add(label(c)).point().expect("non-collinear triple")
}

/// Canonical `(j, k)` for component `i`: `j` smallest `≠ i`, `k` smallest off `ℓ_ij`.
pub fn canonical_pair(i: FanoIndex) -> (FanoIndex, FanoIndex) {
    let j = FanoIndex::all().find(|&j| j != i).unwrap();
    let line = Line::through(i, j);
    let k = FanoIndex::all().find(|&k| !line.contains(k)).unwrap();
    (j, k)
}

/// `ℬ_{ijk}` for `d₄`, `ℬ′_{ijk}` for `b₃` (the first element dropped).
pub fn phi_component_basis(kind: AlgebraKind, i: FanoIndex, j: FanoIndex, k: FanoIndex) -> Vec<Matrix> {
    let ij = star_of(i, j);
    let ik = star_of(i, k);
    let jk = star_of(j, k);
    let ijk = star3(i, j, k);
    let mut out = vec![
        phi_basis(0, idx(i)),
        phi_basis(idx(j), idx(ij)),
        phi_basis(idx(k), idx(ik)),
        phi_basis(idx(jk), idx(ijk)),
    ];
    if kind == AlgebraKind::B3 {
        out.remove(0);
    }
    out
}

fn flat(m: &Matrix) -> Vec<Scalar> {
    m.as_slice().to_vec()
}

/// Linear conditions on the 64 entries of `M` (row-major) cutting out the algebra.
pub fn defining_system(kind: AlgebraKind) -> Vec<Vec<Scalar>> {
    let mut rows = Vec::new();
    let unit = |pos: &[(usize, i64)]| {
        let mut row = vec![Scalar::zero(); 64];
        for &(p, c) in pos {
            row[p] += &Scalar::from(c);
        }
        row
    };
    match kind {
        AlgebraKind::D4 | AlgebraKind::B3 => {
            for r in 0..8 {
                for c in r..8 {
                    rows.push(unit(&[(r * 8 + c, 1), (c * 8 + r, 1)]));
                }
            }
            if kind == AlgebraKind::B3 {
                for r in 0..8 {
                    rows.push(unit(&[(r * 8, 1)]));
                }
            }
        }
        AlgebraKind::G2 => {
            // M(e_a e_b) − M(e_a) e_b − e_a M(e_b) = 0, coordinate m
            for a in 0..8 {
                for b in 0..8 {
                    let (s, k) = basis_product(a, b);
                    for m in 0..8 {
                        let mut pos = vec![(m * 8 + k, s as i64)];
                        for r in 0..8 {
                            let (s1, k1) = basis_product(r, b);
                            if k1 == m {
                                pos.push((r * 8 + a, -(s1 as i64)));
                            }
                            let (s2, k2) = basis_product(a, r);
                            if k2 == m {
                                pos.push((r * 8 + b, -(s2 as i64)));
                            }
                        }
                        rows.push(unit(&pos));
                    }
                }
            }
        }
    }
    rows
}

/// Entry positions of `gl(𝒪)_g`: `M[σ(a)][a]` with `deg σ(a) = deg a + g`.
fn homogeneous_positions(g: GroupElement) -> Vec<usize> {
    (0..8)
        .map(|a| {
            let target = octonion::homogeneous_component(degree(a).add(g));
            target * 8 + a
        })
        .collect()
}

/// Basis of `L ∩ gl(𝒪)_g`, echelonized, from the defining system.
pub fn homogeneous_solution(kind: AlgebraKind, g: GroupElement) -> Vec<Matrix> {
    let system = defining_system(kind);
    let pos = homogeneous_positions(g);
    let restricted = Matrix::from_fn(system.len(), pos.len(), |r, c| system[r][pos[c]].clone());
    restricted
        .nullspace()
        .into_iter()
        .map(|v| {
            let mut m = Matrix::zeros(8, 8);
            for (c, &p) in pos.iter().enumerate() {
                m[(p / 8, p % 8)] = v[c].clone();
            }
            m
        })
        .collect()
}

/// Dimension of the algebra computed without reference to the grading.
pub fn ambient_dim(kind: AlgebraKind) -> usize {
    let system = defining_system(kind);
    64 - Matrix::from_rows(system).rank()
}

/// Dimension of `gl(𝒪)_e` under the induced grading; nonzero, so that grading fails (i).
pub fn gl_identity_component_dim() -> usize {
    homogeneous_positions(GroupElement::IDENTITY).len()
}

type Sparse = Vec<(usize, Scalar)>;

/// A Z₂³-graded Lie algebra with trivial identity component.
#[derive(Clone)]
pub struct GradedAlgebra {
    kind: AlgebraKind,
    field: Field,
    rank: usize,
    basis: Vec<Matrix>,
    structure: Vec<Sparse>,
    solver: std::sync::Arc<CoordinateSolver>,
    contracted: bool,
}

impl fmt::Debug for GradedAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedAlgebra({}, {}, dim {}{})", self.kind, self.field, self.dim(), if self.contracted { ", contracted" } else { "" })
    }
}

/// Builds `d₄`, `b₃` or `g₂` with its homogeneous basis and structure constants.
pub fn build_algebra(kind: AlgebraKind, field: Field) -> Result<GradedAlgebra, LieError> {
    let r = kind.rank();
    let mut basis = Vec::with_capacity(7 * r);
    for i in FanoIndex::all() {
        let comp = match kind {
            AlgebraKind::G2 => homogeneous_solution(kind, label(i)),
            _ => {
                let (j, k) = canonical_pair(i);
                phi_component_basis(kind, i, j, k)
            }
        };
        if comp.len() != r {
            return Err(LieError::ComponentDim { component: i.get(), found: comp.len(), expected: r });
        }
        basis.extend(comp);
    }
    let solver = CoordinateSolver::new(basis.iter().map(flat).collect());
    let n = basis.len();
    let mut structure = vec![Vec::new(); n * n];
    for u in 0..n {
        for v in 0..n {
            let m = basis[u].commutator(&basis[v]);
            let coords = solver.solve(&flat(&m)).ok_or(LieError::Grading(u, v))?;
            let entries: Sparse =
                coords.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
            let (cu, cv) = (u / r, v / r);
            let expected = if cu == cv { None } else { Some(star_of(FanoIndex::from_slot(cu), FanoIndex::from_slot(cv)).slot()) };
            if entries.iter().any(|(w, _)| Some(w / r) != expected) {
                return Err(LieError::Grading(u, v));
            }
            structure[u * n + v] = entries;
        }
    }
    Ok(GradedAlgebra { kind, field, rank: r, basis, structure, solver: std::sync::Arc::new(solver), contracted: false })
}

impl GradedAlgebra {
    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_contracted(&self) -> bool {
        self.contracted
    }

    pub fn component_of(&self, u: usize) -> FanoIndex {
        FanoIndex::from_slot(u / self.rank)
    }

    pub fn component_range(&self, i: FanoIndex) -> std::ops::Range<usize> {
        i.slot() * self.rank..(i.slot() + 1) * self.rank
    }

    pub fn basis_matrix(&self, u: usize) -> &Matrix {
        &self.basis[u]
    }

    /// `[b_u, b_v]` as sparse coordinates.
    pub fn bracket_basis(&self, u: usize, v: usize) -> &[(usize, Scalar)] {
        &self.structure[u * self.dim() + v]
    }

    pub fn structure_constant(&self, u: usize, v: usize, w: usize) -> Scalar {
        self.bracket_basis(u, v).iter().find(|(x, _)| *x == w).map(|(_, c)| c.clone()).unwrap_or_else(Scalar::zero)
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![Scalar::zero(); n];
        for (u, xu) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (v, yv) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let entries = &self.structure[u * n + v];
                if entries.is_empty() {
                    continue;
                }
                let s = xu * yv;
                for (w, c) in entries {
                    out[*w] += &(&s * c);
                }
            }
        }
        out
    }

    /// Matrix of `ad x`, columns indexed by basis vectors.
    pub fn ad(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (u, xu) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for v in 0..n {
                for (w, c) in &self.structure[u * n + v] {
                    m[(*w, v)] += &(xu * c);
                }
            }
        }
        m
    }

    pub fn ad_basis(&self, u: usize) -> Matrix {
        let mut e = vec![Scalar::zero(); self.dim()];
        e[u] = Scalar::one();
        self.ad(&e)
    }

    pub fn unit(&self, u: usize) -> Vec<Scalar> {
        let mut e = vec![Scalar::zero(); self.dim()];
        e[u] = Scalar::one();
        e
    }

    /// Coordinates of an 8×8 matrix in the homogeneous basis, if it lies in the span.
    pub fn coordinates(&self, m: &Matrix) -> Option<Vec<Scalar>> {
        self.solver.solve(&flat(m))
    }

    /// The matrix realization of a coordinate vector.
    pub fn to_matrix(&self, x: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(8, 8);
        for (c, b) in x.iter().zip(&self.basis) {
            if !c.is_zero() {
                m = &m + &b.scale(c);
            }
        }
        m
    }

    /// Same basis with `[b_u, b_v] ↦ f(i, j)[b_u, b_v]` for `u ∈ L_i`, `v ∈ L_j`.
    pub fn rescaled(&self, f: impl Fn(FanoIndex, FanoIndex) -> Scalar) -> GradedAlgebra {
        let n = self.dim();
        let table: Vec<Vec<Scalar>> =
            FanoIndex::all().map(|i| FanoIndex::all().map(|j| f(i, j)).collect()).collect();
        let mut structure = self.structure.clone();
        for u in 0..n {
            for v in 0..n {
                let s = &table[u / self.rank][v / self.rank];
                let entry = &mut structure[u * n + v];
                if s.is_zero() {
                    entry.clear();
                } else if !s.is_one() {
                    for (_, c) in entry.iter_mut() {
                        *c = &*c * s;
                    }
                }
            }
        }
        GradedAlgebra { structure, contracted: true, ..self.clone() }
    }

    /// Anticommutativity and Jacobi on all basis pairs and triples.
    pub fn is_lie(&self) -> bool {
        let n = self.dim();
        for u in 0..n {
            if !self.structure[u * n + u].is_empty() {
                return false;
            }
            for v in u + 1..n {
                let mut a = self.structure[u * n + v].clone();
                let mut b: Sparse = self.structure[v * n + u].iter().map(|(w, c)| (*w, -c)).collect();
                a.sort_by_key(|e| e.0);
                b.sort_by_key(|e| e.0);
                if a != b {
                    return false;
                }
            }
        }
        let units: Vec<Vec<Scalar>> = (0..n).map(|u| self.unit(u)).collect();
        let pairs: Vec<Vec<Vec<Scalar>>> = (0..n)
            .map(|u| (0..n).map(|v| self.bracket(&units[u], &units[v])).collect())
            .collect();
        for u in 0..n {
            for v in u + 1..n {
                for w in v + 1..n {
                    let a = self.bracket(&units[u], &pairs[v][w]);
                    let b = self.bracket(&units[v], &pairs[w][u]);
                    let c = self.bracket(&units[w], &pairs[u][v]);
                    if a.iter().zip(&b).zip(&c).any(|((x, y), z)| !(&(x + y) + z).is_zero()) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Outcome of the good-grading checks.
#[derive(Clone, Debug, Serialize)]
pub struct GradingReport {
    pub algebra: AlgebraKind,
    pub ambient_dim: usize,
    pub identity_component_dim: usize,
    pub component_dims: Vec<usize>,
    pub components_abelian: bool,
    pub components_self_normalizing: bool,
    /// Pairs `{i, j}` whose bracket fails to fill `L_{i∗j}`, with the rank found.
    pub failing_pairs: Vec<(String, usize)>,
    /// Non-collinear triples without an independence witness among basis triples.
    pub failing_triples: Vec<[u8; 3]>,
    pub triple_witnesses: usize,
    pub passes: bool,
}

fn homogeneous_dims(kind: AlgebraKind) -> (usize, Vec<usize>) {
    let e = homogeneous_solution(kind, GroupElement::IDENTITY).len();
    let dims = FanoIndex::all().map(|i| homogeneous_solution(kind, label(i)).len()).collect();
    (e, dims)
}

/// Checks (i) `L_e = 0`, (ii) `[L_{g_i}, L_{g_j}] = L_{g_i+g_j}` and (iii) the
/// independence witnesses, plus the Cartan property of every component.
pub fn check_good_grading(alg: &GradedAlgebra) -> GradingReport {
    let r = alg.rank();
    let (e_dim, dims) = homogeneous_dims(alg.kind());
    let ambient = ambient_dim(alg.kind());
    let spans = alg.dim() == ambient && dims.iter().all(|&d| d == r);

    let mut abelian = true;
    let mut self_normalizing = true;
    for i in FanoIndex::all() {
        let range = alg.component_range(i);
        for u in range.clone() {
            for v in range.clone() {
                abelian &= alg.bracket_basis(u, v).is_empty();
            }
        }
        self_normalizing &= normalizer_dim(alg, i) == r;
    }

    let mut failing_pairs = Vec::new();
    for e in Edge::all() {
        let (i, j) = e.ends();
        let mut span = Echelon::new(alg.dim());
        for u in alg.component_range(i) {
            for v in alg.component_range(j) {
                span.insert(alg.bracket(&alg.unit(u), &alg.unit(v)));
            }
        }
        if span.dim() != r {
            failing_pairs.push((e.to_string(), span.dim()));
        }
    }

    let mut failing_triples = Vec::new();
    let mut witnesses = 0;
    for (i, j, k) in non_collinear_triples() {
        if independence_witness(alg, i, j, k).is_some() {
            witnesses += 1;
        } else {
            failing_triples.push([i.get(), j.get(), k.get()]);
        }
    }

    let passes = e_dim == 0 && spans && abelian && self_normalizing && failing_pairs.is_empty() && failing_triples.is_empty();
    GradingReport {
        algebra: alg.kind(),
        ambient_dim: ambient,
        identity_component_dim: e_dim,
        component_dims: dims,
        components_abelian: abelian,
        components_self_normalizing: self_normalizing,
        failing_pairs,
        failing_triples,
        triple_witnesses: witnesses,
        passes,
    }
}

/// The 28 unordered triples `i < j < k` not on a line.
pub fn non_collinear_triples() -> Vec<(FanoIndex, FanoIndex, FanoIndex)> {
    let mut out = Vec::new();
    for i in FanoIndex::all() {
        for j in FanoIndex::all().filter(|&j| j > i) {
            for k in FanoIndex::all().filter(|&k| k > j) {
                if star_of(i, j) != k {
                    out.push((i, j, k));
                }
            }
        }
    }
    out
}

/// Small homogeneous test vectors in `L_i`: basis vectors, then sums of two, then the sum of all.
fn probe_vectors(alg: &GradedAlgebra, i: FanoIndex) -> Vec<Vec<Scalar>> {
    let range: Vec<usize> = alg.component_range(i).collect();
    let mut out: Vec<Vec<Scalar>> = range.iter().map(|&u| alg.unit(u)).collect();
    for (a, &u) in range.iter().enumerate() {
        for &v in &range[a + 1..] {
            let mut x = alg.unit(u);
            x[v] = Scalar::one();
            out.push(x);
        }
    }
    let mut all = vec![Scalar::zero(); alg.dim()];
    for &u in &range {
        all[u] = Scalar::one();
    }
    out.push(all);
    out
}

/// Homogeneous `(x, y, z)` with `[x,[y,z]]` and `[y,[z,x]]` independent,
/// searched among the probe vectors of each component.
pub fn independence_witness(
    alg: &GradedAlgebra,
    i: FanoIndex,
    j: FanoIndex,
    k: FanoIndex,
) -> Option<[Vec<Scalar>; 3]> {
    let (px, py, pz) = (probe_vectors(alg, i), probe_vectors(alg, j), probe_vectors(alg, k));
    for x in &px {
        for y in &py {
            for z in &pz {
                let a = alg.bracket(x, &alg.bracket(y, z));
                let b = alg.bracket(y, &alg.bracket(z, x));
                let mut span = Echelon::new(alg.dim());
                span.insert(a);
                span.insert(b);
                if span.dim() == 2 {
                    return Some([x.clone(), y.clone(), z.clone()]);
                }
            }
        }
    }
    None
}

/// `dim {x : [x, L_i] ⊆ L_i}`.
pub fn normalizer_dim(alg: &GradedAlgebra, i: FanoIndex) -> usize {
    let n = alg.dim();
    let inside = alg.component_range(i);
    let mut rows = Vec::new();
    for h in inside.clone() {
        // row per outside coordinate w: Σ_u c_u [b_u, b_h]_w = 0
        let mut block = vec![vec![Scalar::zero(); n]; n];
        for u in 0..n {
            for (w, c) in alg.bracket_basis(u, h) {
                block[*w][u] = c.clone();
            }
        }
        for (w, row) in block.into_iter().enumerate() {
            if !inside.contains(&w) && row.iter().any(|c| !c.is_zero()) {
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return n;
    }
    n - Matrix::from_rows(rows).rank()
}

/// A linear map between graded algebras on the same basis, sending `L_i` to `L_{σ(i)}`.
#[derive(Clone, Debug)]
pub struct GradedMap {
    /// Column `u` holds the image of basis vector `u`.
    pub matrix: Matrix,
    /// `component_perm[i-1] = σ(i)`.
    pub component_perm: [u8; 7],
}

impl GradedMap {
    pub fn identity(dim: usize) -> Self {
        GradedMap { matrix: Matrix::identity(dim), component_perm: [1, 2, 3, 4, 5, 6, 7] }
    }

    pub fn apply(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.matrix.mul_vec(x)
    }

    /// `f(L_i) ⊆ L_{σ(i)}` for all `i`.
    pub fn is_graded(&self, alg: &GradedAlgebra) -> bool {
        let r = alg.rank();
        (0..alg.dim()).all(|u| {
            let target = self.component_perm[u / r] as usize - 1;
            (0..alg.dim()).all(|w| w / r == target || self.matrix[(w, u)].is_zero())
        })
    }

    /// `f([x, y]_src) = [f x, f y]_dst` on all basis pairs.
    pub fn is_homomorphism(&self, src: &GradedAlgebra, dst: &GradedAlgebra) -> bool {
        let n = src.dim();
        let images: Vec<Vec<Scalar>> = (0..n).map(|u| self.matrix.column(u)).collect();
        (0..n).all(|u| {
            (u + 1..n).all(|v| {
                let lhs = self.apply(&src.bracket(&src.unit(u), &src.unit(v)));
                lhs == dst.bracket(&images[u], &images[v])
            })
        })
    }

    pub fn is_isomorphism(&self, src: &GradedAlgebra, dst: &GradedAlgebra) -> bool {
        self.matrix.rank() == src.dim() && self.is_homomorphism(src, dst)
    }
}

/// Signs `s` making `e_i ↦ s_i e_{σ(i)}` an octonion automorphism; the first found.
pub fn collineation_signs(sigma: &Collineation) -> Option<[i8; 7]> {
    (0..128u32).find_map(|mask| {
        let signs: [i8; 7] = std::array::from_fn(|b| if mask >> b & 1 == 1 { -1 } else { 1 });
        octonion::is_signed_automorphism(sigma.images(), signs).then_some(signs)
    })
}

/// Lifts a collineation to `L` by conjugating with a signed-permutation automorphism of 𝒪.
pub fn realize_collineation(alg: &GradedAlgebra, sigma: &Collineation) -> Result<GradedMap, LieError> {
    let signs = collineation_signs(sigma).ok_or(LieError::NoLift(*sigma))?;
    let f = signed_permutation(sigma.images(), signs);
    let f_inv = f.transpose();
    let n = alg.dim();
    let mut matrix = Matrix::zeros(n, n);
    for u in 0..n {
        let image = &(&f * alg.basis_matrix(u)) * &f_inv;
        let coords = alg.coordinates(&image).ok_or(LieError::NoLift(*sigma))?;
        for (w, c) in coords.into_iter().enumerate() {
            matrix[(w, u)] = c;
        }
    }
    Ok(GradedMap { matrix, component_perm: sigma.images() })
}

/// Letter bases of `H_ij = L_i ⊕ L_j ⊕ L_{i∗j}`, each spanning an `sl₂` ideal.
#[derive(Clone, Debug)]
pub struct Sl2Decomposition {
    /// `(i, j, i∗j)` with `i ≺ j`, so `[a_s, a_t] = a_{s∗t}` along consecutive entries.
    pub line: [FanoIndex; 3],
    pub k: FanoIndex,
    /// `(letter, [a_{line[0]}, a_{line[1]}, a_{line[2]}])` in algebra coordinates.
    pub letters: Vec<(char, [Vec<Scalar>; 3])>,
}

/// The `r` commuting `sl₂` triples of `H_ij` for `b₃` or `d₄`.
pub fn sl2_triples(alg: &GradedAlgebra, i: FanoIndex, j: FanoIndex) -> Result<Sl2Decomposition, LieError> {
    if i == j {
        return Err(crate::fano::FanoError::Repeated(i.get()).into());
    }
    if alg.kind() == AlgebraKind::G2 {
        return Err(LieError::NoTriples);
    }
    let (i, j) = if prec(i, j) { (i, j) } else { (j, i) };
    let line = [i, j, star_of(i, j)];
    let l = Line::through(i, j);
    let k = FanoIndex::all().find(|&k| !l.contains(k)).unwrap();
    let half = Scalar::from_frac(1, 2);
    let mut per_point: Vec<Vec<(char, Matrix)>> = Vec::new();
    for (pos, &s) in line.iter().enumerate() {
        let t = line[(pos + 1) % 3];
        let st = star_of(s, t);
        let sk = star_of(s, k);
        let tk = star_of(t, k);
        let stk = star3(s, t, k);
        let p0 = phi_basis(0, idx(s));
        let p1 = phi_basis(idx(t), idx(st));
        let p2 = phi_basis(idx(k), idx(sk));
        let p3 = phi_basis(idx(tk), idx(stk));
        let x = (&p0 + &p1).scale(&half);
        let y = (&p0 - &p1).scale(&-&half);
        let z = (&p2 + &p3).scale(&half);
        let w = (&p2 - &p3).scale(&-&half);
        per_point.push(match alg.kind() {
            AlgebraKind::D4 => vec![('x', x), ('y', y), ('z', z), ('w', w)],
            _ => vec![('u', p1), ('z', z), ('w', w)],
        });
    }
    let mut letters = Vec::new();
    for a in 0..per_point[0].len() {
        let name = per_point[0][a].0;
        let coords: Vec<Vec<Scalar>> = per_point
            .iter()
            .map(|p| alg.coordinates(&p[a].1).expect("letter lies in the algebra"))
            .collect();
        let [c0, c1, c2]: [Vec<Scalar>; 3] = coords.try_into().unwrap();
        letters.push((name, [c0, c1, c2]));
    }
    Ok(Sl2Decomposition { line, k, letters })
}

impl Sl2Decomposition {
    /// `[a_s, a_t] = a_{s∗t}` cyclically and `[a_s, b_{s′}] = 0` for distinct letters.
    pub fn verify(&self, alg: &GradedAlgebra) -> bool {
        for (_, a) in &self.letters {
            for p in 0..3 {
                if alg.bracket(&a[p], &a[(p + 1) % 3]) != a[(p + 2) % 3] {
                    return false;
                }
            }
        }
        for (x, (_, a)) in self.letters.iter().enumerate() {
            for (y, (_, b)) in self.letters.iter().enumerate() {
                if x == y {
                    continue;
                }
                for s in a {
                    for t in b {
                        if alg.bracket(s, t).iter().any(|c| !c.is_zero()) {
                            return false;
                        }
                    }
                }
            }
        }
        let mut span = Echelon::new(alg.dim());
        for (_, a) in &self.letters {
            for v in a {
                span.insert(v.clone());
            }
        }
        span.dim() == 3 * self.letters.len()
    }

    /// All `3r` letter vectors.
    pub fn vectors(&self) -> Vec<Vec<Scalar>> {
        self.letters.iter().flat_map(|(_, a)| a.iter().cloned()).collect()
    }
}

/// `ad²z` on `L_{g_j}` in the basis `ℬ_{jik}` (or `ℬ′_{jik}`), for
/// `z = dφ_{e₀,e_i} + aφ_{e_j,e_{i∗j}} + bφ_{e_k,e_{i∗k}} + cφ_{e_{j∗k},e_{i∗j∗k}}` (`d` ignored for `b₃`).
pub fn ad_square_matrix(
    kind: AlgebraKind,
    coeffs: [&Scalar; 4],
    i: FanoIndex,
    j: FanoIndex,
    k: FanoIndex,
) -> Result<Matrix, LieError> {
    crate::fano::check_generic_triple(i, j, k)?;
    if kind == AlgebraKind::G2 {
        return Err(LieError::NoTriples);
    }
    let [a, b, c, d] = coeffs;
    let src = phi_component_basis(AlgebraKind::D4, i, j, k);
    let mut z = &(&src[1].scale(a) + &src[2].scale(b)) + &src[3].scale(c);
    if kind == AlgebraKind::D4 {
        z = &z + &src[0].scale(d);
    }
    let target = phi_component_basis(kind, j, i, k);
    let solver = CoordinateSolver::new(target.iter().map(flat).collect());
    let m = target.len();
    let mut out = Matrix::zeros(m, m);
    for (col, t) in target.iter().enumerate() {
        let image = z.commutator(&z.commutator(t));
        let coords = solver.solve(&flat(&image)).expect("ad² preserves the component");
        for (row, v) in coords.into_iter().enumerate() {
            out[(row, col)] = v;
        }
    }
    Ok(out)
}

/// `(ad x)²` restricted to `L_j`, in the algebra's own basis of `L_j`.
pub fn ad_square_on_component(alg: &GradedAlgebra, x: &[Scalar], j: FanoIndex) -> Matrix {
    let range = alg.component_range(j);
    let r = alg.rank();
    let mut out = Matrix::zeros(r, r);
    for (col, v) in range.clone().enumerate() {
        let image = alg.bracket(x, &alg.bracket(x, &alg.unit(v)));
        for (row, w) in range.clone().enumerate() {
            out[(row, col)] = image[w].clone();
        }
        debug_assert!(image.iter().enumerate().all(|(w, c)| range.contains(&w) || c.is_zero()));
    }
    out
}

/// `θ_ij`: `φ_ij` on the components of `ℓ_ij`, identity elsewhere. Requires `i ≺ j`.
pub fn theta_map(alg: &GradedAlgebra, i: FanoIndex, j: FanoIndex) -> Result<GradedMap, LieError> {
    if i == j {
        return Err(crate::fano::FanoError::Repeated(i.get()).into());
    }
    if !prec(i, j) {
        return Err(LieError::Orientation(i.get(), j.get()));
    }
    let dec = sl2_triples(alg, i, j)?;
    let r = alg.rank();
    // local letter bases: columns are letters, rows are local coordinates
    let local = |pos: usize| -> Matrix {
        let range = alg.component_range(dec.line[pos]);
        Matrix::from_fn(r, r, |row, col| dec.letters[col].1[pos][range.start + row].clone())
    };
    let (bi, bj) = (local(0), local(1));
    let (bi_inv, bj_inv) = (bi.inverse().expect("letter basis"), bj.inverse().expect("letter basis"));
    let to_j = &(&bj * &bi_inv).scale(&Scalar::from(-1)); // a_i ↦ −a_j
    let to_i = &bi * &bj_inv; // a_j ↦ a_i
    let n = alg.dim();
    let mut matrix = Matrix::identity(n);
    let (ri, rj) = (alg.component_range(i), alg.component_range(j));
    for a in 0..r {
        for b in 0..r {
            matrix[(ri.start + a, ri.start + b)] = Scalar::zero();
            matrix[(rj.start + a, rj.start + b)] = Scalar::zero();
            matrix[(rj.start + a, ri.start + b)] = to_j[(a, b)].clone();
            matrix[(ri.start + a, rj.start + b)] = to_i[(a, b)].clone();
        }
    }
    let mut perm = [1, 2, 3, 4, 5, 6, 7];
    perm[i.slot()] = j.get();
    perm[j.slot()] = i.get();
    Ok(GradedMap { matrix, component_perm: perm })
}

/// Skewness `M + Mᵀ = 0` of a matrix.
pub fn is_skew(m: &Matrix) -> bool {
    (m + &m.transpose()).is_zero()
}

/// `n(ψx, y) + n(x, ψy) = 0` on basis vectors.
pub fn preserves_norm(m: &Matrix) -> bool {
    (0..8).all(|a| {
        (0..8).all(|b| {
            let (ea, eb) = (Octonion::basis(a), Octonion::basis(b));
            (&polar(&octonion::apply(m, &ea), &eb) + &polar(&ea, &octonion::apply(m, &eb))).is_zero()
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fano::{all_collineations, p};
    use crate::linalg::Poly;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::sync::OnceLock;

    fn alg(kind: AlgebraKind) -> &'static GradedAlgebra {
        static A: OnceLock<Vec<GradedAlgebra>> = OnceLock::new();
        let all = A.get_or_init(|| AlgebraKind::ALL.iter().map(|&k| build_algebra(k, Field::Complex).unwrap()).collect());
        &all[AlgebraKind::ALL.iter().position(|&k| k == kind).unwrap()]
    }

    fn s(n: i64) -> Scalar {
        Scalar::from(n)
    }

    #[test]
    fn phi_examples() {
        let m = phi_basis(0, 1);
        let e = Octonion::basis;
        assert_eq!(octonion::apply(&m, &e(0)), e(1));
        assert_eq!(octonion::apply(&m, &e(1)), -&e(0));
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let x = Octonion::random(Field::Complex, &mut rng);
        assert!(phi(&x, &x).is_zero());
        let y = Octonion::random(Field::Complex, &mut rng);
        assert!(is_skew(&phi(&x, &y)));
        assert!(preserves_norm(&phi(&x, &y)));
    }

    #[test]
    fn phi_bracket_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..5 {
            let x = Octonion::random(Field::Complex, &mut rng);
            let y = Octonion::random(Field::Complex, &mut rng);
            let a = Octonion::random(Field::Complex, &mut rng);
            let b = Octonion::random(Field::Complex, &mut rng);
            let psi = phi(&a, &b);
            let lhs = psi.commutator(&phi(&x, &y));
            let rhs = &phi(&octonion::apply(&psi, &x), &y) + &phi(&x, &octonion::apply(&psi, &y));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn dimensions() {
        assert_eq!(ambient_dim(AlgebraKind::D4), 28);
        assert_eq!(ambient_dim(AlgebraKind::B3), 21);
        assert_eq!(ambient_dim(AlgebraKind::G2), 14);
        for kind in AlgebraKind::ALL {
            let a = alg(kind);
            assert_eq!(a.dim(), kind.dim());
            assert_eq!(homogeneous_solution(kind, GroupElement::IDENTITY).len(), 0);
            for i in FanoIndex::all() {
                assert_eq!(homogeneous_solution(kind, label(i)).len(), kind.rank());
            }
        }
        assert_eq!(gl_identity_component_dim(), 8);
    }

    #[test]
    fn basis_matrices_are_skew_and_graded() {
        for kind in AlgebraKind::ALL {
            let a = alg(kind);
            for u in 0..a.dim() {
                let m = a.basis_matrix(u);
                assert!(is_skew(m));
                if kind != AlgebraKind::D4 {
                    assert!(m.column(0).iter().all(Zero::is_zero));
                }
                if kind == AlgebraKind::G2 {
                    assert!(octonion::is_derivation(m));
                }
            }
        }
    }

    #[test]
    fn nested_components() {
        let (g2, b3, d4) = (alg(AlgebraKind::G2), alg(AlgebraKind::B3), alg(AlgebraKind::D4));
        for i in FanoIndex::all() {
            for u in g2.component_range(i) {
                let c = b3.coordinates(g2.basis_matrix(u)).unwrap();
                assert!(c.iter().enumerate().all(|(w, x)| b3.component_range(i).contains(&w) || x.is_zero()));
            }
            for u in b3.component_range(i) {
                let c = d4.coordinates(b3.basis_matrix(u)).unwrap();
                assert!(c.iter().enumerate().all(|(w, x)| d4.component_range(i).contains(&w) || x.is_zero()));
            }
        }
    }

    #[test]
    fn jacobi_holds() {
        for kind in AlgebraKind::ALL {
            assert!(alg(kind).is_lie(), "{kind}");
        }
    }

    #[test]
    fn good_gradings() {
        for kind in AlgebraKind::ALL {
            let report = check_good_grading(alg(kind));
            assert!(report.passes, "{report:?}");
            assert_eq!(report.triple_witnesses, 28);
        }
    }

    #[test]
    fn dropping_an_edge_breaks_surjectivity() {
        let a = alg(AlgebraKind::B3);
        let broken = a.rescaled(|i, j| if (i.get().min(j.get()), i.get().max(j.get())) == (1, 2) { s(0) } else { s(1) });
        let report = check_good_grading(&broken);
        assert!(!report.passes);
        assert_eq!(report.failing_pairs, vec![("1-2".to_string(), 0)]);
        let zero = a.rescaled(|_, _| s(0));
        assert_eq!(check_good_grading(&zero).failing_pairs.len(), 21);
    }

    #[test]
    fn g2_witnesses_serve_b3() {
        let (g2, b3) = (alg(AlgebraKind::G2), alg(AlgebraKind::B3));
        for (i, j, k) in non_collinear_triples() {
            let [x, y, z] = independence_witness(g2, i, j, k).unwrap();
            let lift = |v: &[Scalar]| b3.coordinates(&g2.to_matrix(v)).unwrap();
            let (x, y, z) = (lift(&x), lift(&y), lift(&z));
            let mut span = Echelon::new(b3.dim());
            span.insert(b3.bracket(&x, &b3.bracket(&y, &z)));
            span.insert(b3.bracket(&y, &b3.bracket(&z, &x)));
            assert_eq!(span.dim(), 2);
        }
    }

    #[test]
    fn sl2_examples() {
        let d4 = alg(AlgebraKind::D4);
        let dec = sl2_triples(d4, p(1), p(2)).unwrap();
        assert_eq!(dec.line, [p(1), p(2), p(5)]);
        let x = &dec.letters[0].1;
        let y = &dec.letters[1].1;
        assert_eq!(d4.bracket(&x[0], &x[1]), x[2]);
        assert!(d4.bracket(&x[0], &y[1]).iter().all(Zero::is_zero));
        let b3 = alg(AlgebraKind::B3);
        let dec = sl2_triples(b3, p(2), p(1)).unwrap();
        let u = &dec.letters[0];
        assert_eq!(u.0, 'u');
        assert_eq!(b3.bracket(&u.1[0], &u.1[1]), u.1[2]);
        assert!(sl2_triples(alg(AlgebraKind::G2), p(1), p(2)).is_err());
    }

    #[test]
    fn sl2_for_every_line() {
        for kind in [AlgebraKind::B3, AlgebraKind::D4] {
            for line in Line::all() {
                let [i, j, _] = line.oriented();
                assert!(sl2_triples(alg(kind), i, j).unwrap().verify(alg(kind)));
            }
        }
    }

    #[test]
    fn ad_square_examples() {
        let (one, zero) = (s(1), s(0));
        let m = ad_square_matrix(AlgebraKind::B3, [&one, &zero, &zero, &zero], p(1), p(2), p(3)).unwrap();
        assert_eq!(m, Matrix::from_rows(vec![vec![s(-1), s(0), s(0)], vec![s(0), s(0), s(0)], vec![s(0), s(0), s(0)]]));
        let m = ad_square_matrix(AlgebraKind::B3, [&s(1), &s(2), &s(3), &zero], p(1), p(2), p(3)).unwrap();
        assert_eq!(m, Matrix::from_rows(vec![vec![s(-1), s(0), s(0)], vec![s(0), s(-13), s(12)], vec![s(0), s(12), s(-13)]]));
        let (a, b, c, d) = (s(2), s(3), s(5), s(7));
        let m = ad_square_matrix(AlgebraKind::D4, [&a, &b, &c, &d], p(1), p(2), p(3)).unwrap();
        let mut expected = Poly::new(vec![s(1)]);
        for root in [&a + &d, &a - &d, &b + &c, &b - &c] {
            expected = expected.mul(&Poly::linear(&root * &root));
        }
        assert_eq!(m.charpoly(), expected);
    }

    #[test]
    fn collineations_lift() {
        let d4 = alg(AlgebraKind::D4);
        assert_eq!(collineation_signs(&Collineation::identity()), Some([1; 7]));
        for sigma in all_collineations() {
            let f = realize_collineation(d4, sigma).unwrap();
            assert!(f.is_graded(d4));
            assert!(f.is_isomorphism(d4, d4));
        }
    }

    #[test]
    fn lift_conjugates_phi() {
        let sigma = all_collineations()[37];
        let signs = collineation_signs(&sigma).unwrap();
        let f = signed_permutation(sigma.images(), signs);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let x = Octonion::random(Field::Complex, &mut rng);
        let y = Octonion::random(Field::Complex, &mut rng);
        let lhs = &(&f * &phi(&x, &y)) * &f.transpose();
        assert_eq!(lhs, phi(&octonion::apply(&f, &x), &octonion::apply(&f, &y)));
    }

    #[test]
    fn theta_requires_orientation() {
        let d4 = alg(AlgebraKind::D4);
        assert!(theta_map(d4, p(2), p(1)).is_err());
        let theta = theta_map(d4, p(1), p(2)).unwrap();
        assert!(theta.is_graded(d4));
        assert!(!theta.is_homomorphism(d4, d4));
    }
}
