//! Exact structural invariants of graded Lie algebras given by structure
//! constants: derived and lower central series, center, Killing form,
//! radical and Levi data, simplicity and semisimplicity of elements.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::contraction::{contract_unchecked, AdmissibleMap};
use crate::exactnum::{Field, Scalar};
use crate::fano::{line_set, FanoIndex, Line};
use crate::liealg::{build_algebra, sl2_triples, AlgebraKind, GradedAlgebra, LieError};
use crate::linalg::{inertia, Echelon, Matrix};
use crate::nicesets::representative;

/// Span of `{[a, b] : a ∈ A, b ∈ B}`.
pub fn bracket_space(alg: &GradedAlgebra, a: &Echelon, b: &Echelon) -> Echelon {
    let mut out = Echelon::new(alg.dim());
    let (ab, bb) = (a.reduced_basis(), b.reduced_basis());
    for x in &ab {
        for y in &bb {
            if out.is_full() {
                return out;
            }
            let z = alg.bracket(x, y);
            if z.iter().any(|c| !c.is_zero()) {
                out.insert(z);
            }
        }
    }
    out
}

/// Dimensions of the derived and lower central series with their step indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesReport {
    /// `dim D⁰, dim D¹, …` until the chain stabilizes.
    pub derived: Vec<usize>,
    /// `dim C¹, dim C², …` until the chain stabilizes.
    pub lower_central: Vec<usize>,
    /// `k` with `D^k = 0 ≠ D^{k−1}`.
    pub solvable_step: Option<usize>,
    /// `k` with `C^{k+1} = 0 ≠ C^k`.
    pub nilpotent_step: Option<usize>,
    pub solvable: bool,
    pub nilpotent: bool,
}

pub fn derived_and_central_series(alg: &GradedAlgebra) -> SeriesReport {
    let n = alg.dim();
    let full = Echelon::full(n);
    let mut derived = vec![n];
    let mut d = full.clone();
    loop {
        let next = bracket_space(alg, &d, &d);
        let stop = next.dim() == d.dim();
        if !stop {
            derived.push(next.dim());
        }
        d = next;
        if stop || d.dim() == 0 {
            break;
        }
    }
    let mut lower_central = vec![n];
    let mut c = full.clone();
    loop {
        let next = bracket_space(alg, &full, &c);
        let stop = next.dim() == c.dim();
        if !stop {
            lower_central.push(next.dim());
        }
        c = next;
        if stop || c.dim() == 0 {
            break;
        }
    }
    let solvable = *derived.last().unwrap() == 0;
    let nilpotent = *lower_central.last().unwrap() == 0;
    SeriesReport {
        solvable_step: solvable.then(|| derived.len() - 1),
        nilpotent_step: nilpotent.then(|| lower_central.len() - 1),
        derived,
        lower_central,
        solvable,
        nilpotent,
    }
}

pub fn derived_algebra(alg: &GradedAlgebra) -> Echelon {
    let full = Echelon::full(alg.dim());
    bracket_space(alg, &full, &full)
}

/// Kernel of the adjoint representation.
pub fn center(alg: &GradedAlgebra) -> Echelon {
    let n = alg.dim();
    // x ↦ [x, b_v] for every v, stacked
    let mut rows = Vec::with_capacity(n * n);
    for v in 0..n {
        let mut block = vec![vec![Scalar::zero(); n]; n];
        for (u, row) in (0..n).map(|u| (u, alg.bracket_basis(u, v))) {
            for (w, c) in row {
                block[*w][u] = c.clone();
            }
        }
        rows.extend(block.into_iter().filter(|r| r.iter().any(|c| !c.is_zero())));
    }
    let mut out = Echelon::new(n);
    let kernel = if rows.is_empty() { (0..n).map(|u| alg.unit(u)).collect() } else { Matrix::from_rows(rows).nullspace() };
    for v in kernel {
        out.insert(v);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Signature {
    /// `p − q`, the subindex used for real forms.
    pub fn index(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KillingReport {
    pub gram: Matrix,
    pub rank: usize,
    /// Present only for real algebras with real structure constants.
    pub signature: Option<Signature>,
}

/// `K(b_u, b_v) = tr(ad b_u ∘ ad b_v)`.
pub fn killing_matrix(alg: &GradedAlgebra) -> Matrix {
    let n = alg.dim();
    let mut gram = Matrix::zeros(n, n);
    for u in 0..n {
        for v in u..n {
            // Σ_x Σ_w c_{ux}^w c_{vw}^x
            let mut acc = Scalar::zero();
            for x in 0..n {
                for (w, c) in alg.bracket_basis(u, x) {
                    if let Some((_, d)) = alg.bracket_basis(v, *w).iter().find(|(t, _)| *t == x) {
                        acc += &(c * d);
                    }
                }
            }
            gram[(u, v)] = acc.clone();
            gram[(v, u)] = acc;
        }
    }
    gram
}

pub fn killing(alg: &GradedAlgebra) -> KillingReport {
    let gram = killing_matrix(alg);
    let rank = gram.rank();
    let signature = (alg.field() == Field::Real)
        .then(|| inertia(&gram))
        .flatten()
        .map(|i| Signature { positive: i.positive, negative: i.negative, zero: i.zero });
    KillingReport { gram, rank, signature }
}

fn gram_on(gram: &Matrix, basis: &[Vec<Scalar>]) -> Matrix {
    let images: Vec<Vec<Scalar>> = basis.iter().map(|v| gram.mul_vec(v)).collect();
    Matrix::from_fn(basis.len(), basis.len(), |a, b| {
        basis[a].iter().zip(&images[b]).fold(Scalar::zero(), |acc, (x, y)| &acc + &(x * y))
    })
}

/// Radical as the Killing-orthogonal complement of the derived algebra.
pub fn radical(alg: &GradedAlgebra, gram: &Matrix) -> Echelon {
    let n = alg.dim();
    let derived = derived_algebra(alg).reduced_basis();
    let mut out = Echelon::new(n);
    if derived.is_empty() {
        return Echelon::full(n);
    }
    let rows: Vec<Vec<Scalar>> = derived.iter().map(|d| gram.mul_vec(d)).collect();
    for v in Matrix::from_rows(rows).nullspace() {
        out.insert(v);
    }
    out
}

/// `r` commuting `sl₂` copies spanning a complement of the radical, found on
/// a line `ℓ` with `X_ℓ` inside the support.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeviReport {
    pub line: [u8; 3],
    pub copies: usize,
    pub complement_to_radical: bool,
    pub killing_rank: usize,
}

pub fn levi_from_lines(alg: &GradedAlgebra, support: Option<crate::fano::EdgeSet>, rad: &Echelon, gram: &Matrix) -> Option<LeviReport> {
    if alg.kind() == AlgebraKind::G2 {
        return None;
    }
    for line in Line::all() {
        if let Some(t) = support {
            if !line_set(line).is_subset(t) {
                continue;
            }
        }
        let [a, b, _] = line.oriented();
        let Ok(dec) = sl2_triples(alg, a, b) else { continue };
        if !dec.verify(alg) {
            continue;
        }
        let vectors = dec.vectors();
        let mut span = Echelon::new(alg.dim());
        for v in &vectors {
            span.insert(v.clone());
        }
        let complement = span.intersect_dim(rad) == 0 && span.dim() + rad.dim() == alg.dim();
        return Some(LeviReport {
            line: line.points().map(FanoIndex::get),
            copies: dec.letters.len(),
            complement_to_radical: complement,
            killing_rank: gram_on(gram, &vectors).rank(),
        });
    }
    None
}

/// The ideal generated by `x`.
pub fn generated_ideal(alg: &GradedAlgebra, x: &[Scalar]) -> Echelon {
    let n = alg.dim();
    let mut ideal = Echelon::new(n);
    ideal.insert(x.to_vec());
    let mut frontier = vec![x.to_vec()];
    while let Some(y) = frontier.pop() {
        for u in 0..n {
            let z = alg.bracket(&alg.unit(u), &y);
            if ideal.insert(z.clone()) {
                frontier.push(z);
            }
        }
        if ideal.is_full() {
            break;
        }
    }
    ideal
}

/// Killing form nondegenerate and every basis vector generates the whole algebra.
pub fn is_simple(alg: &GradedAlgebra) -> bool {
    let n = alg.dim();
    killing_matrix(alg).rank() == n && (0..n).all(|u| generated_ideal(alg, &alg.unit(u)).is_full())
}

/// Whether `m` is diagonalizable over the algebraic closure: on each
/// diagonal block the squarefree part of the characteristic polynomial
/// annihilates the block.
pub fn is_semisimple_matrix(m: &Matrix) -> bool {
    m.diagonal_blocks().iter().all(|block| {
        let sub = m.submatrix(block);
        let p = sub.charpoly().squarefree_part();
        sub.eval_poly(&p).is_zero()
    })
}

pub fn is_semisimple_element(alg: &GradedAlgebra, x: &[Scalar]) -> bool {
    is_semisimple_matrix(&alg.ad(x))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub dim: usize,
    pub derived_dim: usize,
    pub center_dim: usize,
    pub center_derived_intersection: usize,
    pub series: SeriesReport,
    pub killing_rank: usize,
    pub signature: Option<Signature>,
    pub radical_dim: usize,
    pub levi_dim: usize,
    pub levi: Option<LeviReport>,
    pub abelian: bool,
    pub nilpotent: bool,
    pub solvable: bool,
    pub reductive: bool,
    pub simple: bool,
}

impl StructureReport {
    pub fn compute(alg: &GradedAlgebra, support: Option<crate::fano::EdgeSet>) -> Self {
        let n = alg.dim();
        let derived = derived_algebra(alg);
        let z = center(alg);
        let series = derived_and_central_series(alg);
        let k = killing(alg);
        let rad = radical(alg, &k.gram);
        let reductive = rad.dim() == z.dim() && rad.contains_space(&z);
        let levi = if rad.dim() < n { levi_from_lines(alg, support, &rad, &k.gram) } else { None };
        let simple = k.rank == n && n > 0 && (0..n).all(|u| generated_ideal(alg, &alg.unit(u)).is_full());
        StructureReport {
            dim: n,
            derived_dim: derived.dim(),
            center_dim: z.dim(),
            center_derived_intersection: z.intersect_dim(&derived),
            killing_rank: k.rank,
            signature: k.signature,
            radical_dim: rad.dim(),
            levi_dim: n - rad.dim(),
            levi,
            abelian: derived.dim() == 0,
            nilpotent: series.nilpotent,
            solvable: series.solvable,
            reductive,
            simple,
            series,
        }
    }
}

/// The qualitative type stated in a table row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RowType {
    Abelian,
    /// `k`-step nilpotent.
    Nilpotent(usize),
    /// `k`-step solvable, not nilpotent.
    Solvable(usize),
    /// `(solvable step, nilpotent step)`.
    SolvableNilpotent(usize, usize),
    /// Reductive, neither nilpotent nor solvable, `L = z ⊕ L′`.
    Reductive,
    /// Neither nilpotent nor solvable nor reductive.
    Mixed,
    Simple,
}

/// Claims of one row, dimensions in units of the rank `r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpectedRow {
    pub id: u8,
    pub kind: RowType,
    pub derived: Option<usize>,
    pub center: Option<usize>,
    pub center_is_derived: bool,
    pub radical: Option<usize>,
    pub levi_sl2_copies: bool,
}

pub fn expected_rows() -> Vec<ExpectedRow> {
    use RowType::*;
    let row = |id, kind, derived, center| ExpectedRow {
        id,
        kind,
        derived,
        center,
        center_is_derived: false,
        radical: None,
        levi_sl2_copies: false,
    };
    let mut rows = vec![
        row(1, Abelian, None, None),
        row(2, Nilpotent(2), Some(1), Some(5)),
        row(3, Nilpotent(2), Some(2), Some(4)),
        row(4, Solvable(2), Some(2), Some(4)),
        row(5, Nilpotent(2), Some(1), Some(3)),
        row(6, Reductive, None, Some(4)),
        ExpectedRow { center_is_derived: true, ..row(7, Nilpotent(2), Some(1), Some(1)) },
        ExpectedRow { center_is_derived: true, ..row(8, Nilpotent(2), Some(3), Some(3)) },
        row(9, Solvable(2), Some(3), Some(3)),
        row(10, Nilpotent(2), Some(3), Some(3)),
        row(11, Nilpotent(2), Some(3), Some(4)),
        row(12, Nilpotent(2), Some(2), Some(3)),
        row(13, Solvable(2), Some(4), Some(2)),
        row(14, Solvable(2), Some(4), Some(2)),
        row(15, Nilpotent(2), Some(3), Some(3)),
        row(16, Nilpotent(2), Some(2), Some(3)),
        row(17, Solvable(2), Some(5), Some(1)),
        row(18, Nilpotent(2), Some(3), Some(3)),
        row(19, Nilpotent(2), Some(3), Some(3)),
        row(20, Solvable(2), Some(6), Some(0)),
        row(21, SolvableNilpotent(2, 3), Some(4), Some(1)),
        row(22, Solvable(3), Some(6), Some(0)),
        ExpectedRow { radical: Some(4), levi_sl2_copies: true, ..row(23, Mixed, None, None) },
        row(24, Simple, None, None),
    ];
    rows.sort_by_key(|r| r.id);
    rows
}

impl ExpectedRow {
    /// Every disagreement between the claims and `rep`, for rank `r`.
    pub fn mismatches(&self, rep: &StructureReport, r: usize) -> Vec<String> {
        let mut out = Vec::new();
        let mut check = |ok: bool, what: String| {
            if !ok {
                out.push(what);
            }
        };
        let s = &rep.series;
        match self.kind {
            RowType::Abelian => check(rep.abelian, "expected abelian".into()),
            RowType::Nilpotent(k) => check(
                s.nilpotent_step == Some(k),
                format!("expected {k}-step nilpotent, got {:?}", s.nilpotent_step),
            ),
            RowType::Solvable(k) => check(
                s.solvable_step == Some(k) && !s.nilpotent,
                format!("expected {k}-step solvable not nilpotent, got {:?}/{:?}", s.solvable_step, s.nilpotent_step),
            ),
            RowType::SolvableNilpotent(a, b) => check(
                s.solvable_step == Some(a) && s.nilpotent_step == Some(b),
                format!("expected {a}-step solvable {b}-step nilpotent, got {:?}/{:?}", s.solvable_step, s.nilpotent_step),
            ),
            RowType::Reductive => check(
                rep.reductive
                    && !rep.nilpotent
                    && !rep.solvable
                    && rep.center_derived_intersection == 0
                    && rep.center_dim + rep.derived_dim == rep.dim,
                "expected reductive with L = z ⊕ L′, neither nilpotent nor solvable".into(),
            ),
            RowType::Mixed => check(
                !rep.reductive && !rep.nilpotent && !rep.solvable,
                "expected neither nilpotent nor solvable nor reductive".into(),
            ),
            RowType::Simple => check(rep.simple, "expected simple".into()),
        }
        if let Some(d) = self.derived {
            check(rep.derived_dim == d * r, format!("derived dim {} ≠ {}", rep.derived_dim, d * r));
        }
        if let Some(c) = self.center {
            check(rep.center_dim == c * r, format!("center dim {} ≠ {}", rep.center_dim, c * r));
        }
        if self.center_is_derived {
            check(
                rep.center_dim == rep.derived_dim && rep.center_derived_intersection == rep.derived_dim,
                "expected center = derived".into(),
            );
        }
        if let Some(rd) = self.radical {
            check(rep.radical_dim == rd * r, format!("radical dim {} ≠ {}", rep.radical_dim, rd * r));
        }
        if self.levi_sl2_copies {
            let ok = rep.levi.as_ref().is_some_and(|l| {
                l.copies == r && l.complement_to_radical && l.killing_rank == 3 * r && rep.levi_dim == 3 * r
            });
            check(ok, format!("expected Levi part of {r} sl2 copies, got {:?}", rep.levi));
        }
        out
    }
}

/// Homogeneous semisimplicity counts for one row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemisimpleSample {
    pub samples: usize,
    /// Semisimple under the adjoint action of the uncontracted algebra.
    pub semisimple_in_original: usize,
    /// Semisimple under the contracted bracket.
    pub semisimple_in_contraction: usize,
}

/// A random nonzero vector of one random component.
pub fn random_homogeneous<R: Rng + ?Sized>(alg: &GradedAlgebra, rng: &mut R) -> (FanoIndex, Vec<Scalar>) {
    let i = FanoIndex::from_slot(rng.gen_range(0..7));
    let mut x = vec![Scalar::zero(); alg.dim()];
    loop {
        for u in alg.component_range(i) {
            x[u] = alg.field().sample(rng);
        }
        if x.iter().any(|c| !c.is_zero()) {
            return (i, x);
        }
    }
}

pub fn sample_semisimplicity(original: &GradedAlgebra, contracted: &GradedAlgebra, samples: usize, seed: u64) -> SemisimpleSample {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = SemisimpleSample { samples, semisimple_in_original: 0, semisimple_in_contraction: 0 };
    for _ in 0..samples {
        let (_, x) = random_homogeneous(original, &mut rng);
        out.semisimple_in_original += is_semisimple_element(original, &x) as usize;
        out.semisimple_in_contraction += is_semisimple_element(contracted, &x) as usize;
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct RowReport {
    pub algebra: AlgebraKind,
    pub row: u8,
    pub support: String,
    pub expected: ExpectedRow,
    pub report: StructureReport,
    pub semisimple: SemisimpleSample,
    pub mismatches: Vec<String>,
    pub passes: bool,
}

/// Builds `L^{ε^{T_id}}` for every representative and compares with the table.
pub fn verify_table(kind: AlgebraKind, samples: usize, seed: u64) -> Result<Vec<RowReport>, LieError> {
    let alg = build_algebra(kind, Field::Complex)?;
    let r = kind.rank();
    let rows = expected_rows();
    Ok(rows
        .into_par_iter()
        .map(|expected| {
            let t = representative(expected.id);
            let l = contract_unchecked(&alg, &AdmissibleMap::indicator(t));
            let report = StructureReport::compute(&l, Some(t));
            let semisimple = sample_semisimplicity(&alg, &l, samples, seed.wrapping_add(expected.id as u64));
            let mut mismatches = expected.mismatches(&report, r);
            if semisimple.semisimple_in_original != samples {
                mismatches.push(format!(
                    "{} of {samples} homogeneous samples semisimple in the original algebra",
                    semisimple.semisimple_in_original
                ));
            }
            let passes = mismatches.is_empty();
            RowReport { algebra: kind, row: expected.id, support: t.to_string(), expected, report, semisimple, mismatches, passes }
        })
        .collect())
}

/// Invariance `K([x,y],z) = K(x,[y,z])` on all basis triples.
pub fn killing_is_invariant(alg: &GradedAlgebra, gram: &Matrix) -> bool {
    let n = alg.dim();
    let form = |a: &[Scalar], b: &[Scalar]| -> Scalar {
        let gb = gram.mul_vec(b);
        a.iter().zip(&gb).fold(Scalar::zero(), |acc, (x, y)| &acc + &(x * y))
    };
    (0..n).all(|x| {
        (0..n).all(|y| {
            let xy = alg.bracket(&alg.unit(x), &alg.unit(y));
            (0..n).all(|z| form(&xy, &alg.unit(z)) == form(&alg.unit(x), &alg.bracket(&alg.unit(y), &alg.unit(z))))
        })
    })
}

/// Whether the subspace is closed under bracketing with the whole algebra.
pub fn is_ideal(alg: &GradedAlgebra, s: &Echelon) -> bool {
    s.reduced_basis().iter().all(|v| (0..alg.dim()).all(|u| s.contains(&alg.bracket(&alg.unit(u), v))))
}

/// `ad x` raised to the `k`-th power.
pub fn ad_power(alg: &GradedAlgebra, x: &[Scalar], k: usize) -> Matrix {
    let ad = alg.ad(x);
    let mut m = Matrix::identity(alg.dim());
    for _ in 0..k {
        m = &m * &ad;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fano::{p, EdgeSet};
    use crate::liealg::phi_basis;
    use std::sync::OnceLock;

    fn alg(kind: AlgebraKind) -> &'static GradedAlgebra {
        static A: OnceLock<Vec<GradedAlgebra>> = OnceLock::new();
        let all = A.get_or_init(|| AlgebraKind::ALL.iter().map(|k| build_algebra(*k, Field::Complex).unwrap()).collect());
        all.iter().find(|a| a.kind() == kind).unwrap()
    }

    fn contracted(kind: AlgebraKind, id: u8) -> GradedAlgebra {
        contract_unchecked(alg(kind), &AdmissibleMap::indicator(representative(id)))
    }

    #[test]
    fn series_examples() {
        let l = contracted(AlgebraKind::B3, 1);
        let s = derived_and_central_series(&l);
        assert_eq!((s.nilpotent_step, s.solvable_step), (Some(1), Some(1)));
        assert_eq!(center(&l).dim(), 21);
        let l = contracted(AlgebraKind::B3, 2);
        assert_eq!(derived_algebra(&l).dim(), 3);
        assert_eq!(center(&l).dim(), 15);
        let l = contracted(AlgebraKind::D4, 21);
        let s = derived_and_central_series(&l);
        assert_eq!((s.nilpotent_step, s.solvable_step), (Some(3), Some(2)));
        assert_eq!(derived_algebra(&l).dim(), 16);
        assert_eq!(center(&l).dim(), 4);
    }

    #[test]
    fn center_examples() {
        assert_eq!(center(alg(AlgebraKind::D4)).dim(), 0);
        let l = contracted(AlgebraKind::D4, 7);
        let z = center(&l);
        assert_eq!(z.dim(), 4);
        assert!(z.contains_space(&derived_algebra(&l)));
    }

    #[test]
    fn killing_examples() {
        let d4 = alg(AlgebraKind::D4);
        let k = killing(d4);
        assert_eq!(k.rank, 28);
        assert!(k.signature.is_none());
        assert!(killing_is_invariant(d4, &k.gram));
        let l = contracted(AlgebraKind::B3, 21);
        assert!(killing_is_invariant(&l, &killing_matrix(&l)));
    }

    #[test]
    fn radical_and_levi_examples() {
        let l = contracted(AlgebraKind::D4, 23);
        let rep = StructureReport::compute(&l, Some(representative(23)));
        assert_eq!(rep.radical_dim, 16);
        assert_eq!(rep.levi_dim, 12);
        let levi = rep.levi.unwrap();
        assert_eq!(levi.copies, 4);
        assert!(levi.complement_to_radical);
        let rad = radical(&l, &killing_matrix(&l));
        assert!(is_ideal(&l, &rad));

        let l = contracted(AlgebraKind::B3, 6);
        let rep = StructureReport::compute(&l, Some(representative(6)));
        assert!(rep.reductive);
        assert_eq!(rep.center_dim, 12);
        assert_eq!(rep.center_dim + rep.derived_dim, 21);

        let l = contracted(AlgebraKind::B3, 20);
        assert_eq!(radical(&l, &killing_matrix(&l)).dim(), 21);
    }

    #[test]
    fn simplicity_examples() {
        assert!(is_simple(&contracted(AlgebraKind::D4, 24)));
        assert!(!is_simple(&contracted(AlgebraKind::D4, 6)));
        assert!(!is_simple(&contracted(AlgebraKind::D4, 1)));
    }

    #[test]
    fn semisimple_examples() {
        let d4 = alg(AlgebraKind::D4);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..5 {
            let (_, x) = random_homogeneous(d4, &mut rng);
            assert!(is_semisimple_element(d4, &x));
        }
        assert!(is_semisimple_element(d4, &vec![Scalar::zero(); 28]));
        // φ_{e0,e1} + i φ_{e0,e2} is nilpotent
        let m = &phi_basis(0, 1) + &phi_basis(0, 2).scale(&Scalar::i());
        let x = d4.coordinates(&m).unwrap();
        assert!(!is_semisimple_element(d4, &x));
        let k = (1..=10).find(|&k| ad_power(d4, &x, k).is_zero());
        assert!(k.is_some());
        // a homogeneous element of a nilpotent contraction has nilpotent ad
        let l = contracted(AlgebraKind::D4, 2);
        let u = l.component_range(p(1)).start;
        assert!(!is_semisimple_element(&l, &l.unit(u)));
    }

    #[test]
    fn table_rows_b3_spot_checks() {
        let r = 3;
        let rows = expected_rows();
        for id in [17u8, 20, 22] {
            let l = contracted(AlgebraKind::B3, id);
            let rep = StructureReport::compute(&l, Some(representative(id)));
            let m = rows[id as usize - 1].mismatches(&rep, r);
            assert!(m.is_empty(), "row {id}: {m:?}");
        }
        let rep = StructureReport::compute(&contracted(AlgebraKind::B3, 17), None);
        assert_eq!((rep.derived_dim, rep.center_dim), (15, 3));
        let _ = EdgeSet::EMPTY;
    }
}
