//! Graded contractions `ε` of the Z₂³-gradings: admissible maps on the 21
//! edges, the general 8×8 form, the checks (a1)/(a2) and (b2), supports and
//! nice sets, normal forms, normalization `ε^α`, the collineation action and
//! classification up to equivalence.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::exactnum::{Field, RootProduct, Scalar, ScalarError};
use crate::fano::{
    check_generic_triple, group_label, label, p_set, star_of, Collineation, Edge, EdgeSet, FanoError, FanoIndex,
    GroupElement, Line,
};
use crate::liealg::GradedAlgebra;
use crate::linalg::{Echelon, Matrix};
use crate::nicesets;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContractionError {
    #[error("not a graded contraction: condition (b2) fails on the triple {0:?}")]
    NotAdmissible([u8; 3]),
    #[error("not a graded contraction: conditions (a1)/(a2) fail")]
    NotContraction,
    #[error("support {0} is not a nice set")]
    NotNice(String),
    #[error("normal-form parameters must be nonzero")]
    ZeroParameter,
    #[error("normalization values must be nonzero")]
    ZeroAlpha,
    #[error("normal form has irrational parameters; use the root-valued map")]
    IrrationalParameter,
    #[error("no normalization witness found for support {0}")]
    NoWitness(String),
    #[error("invalid epsilon file: {0}")]
    Format(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Fano(#[from] FanoError),
}

/// An admissible map, i.e. a symmetric assignment of scalars to the 21 edges.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AdmissibleMap {
    values: Vec<Scalar>,
}

impl fmt::Debug for AdmissibleMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = Edge::all()
            .filter(|e| !self.get(*e).is_zero())
            .map(|e| format!("{e}:{}", self.get(e)))
            .collect();
        write!(f, "ε{{{}}}", parts.join(", "))
    }
}

impl AdmissibleMap {
    pub fn zero() -> Self {
        AdmissibleMap { values: vec![Scalar::zero(); 21] }
    }

    pub fn from_fn(mut f: impl FnMut(Edge) -> Scalar) -> Self {
        AdmissibleMap { values: Edge::all().map(&mut f).collect() }
    }

    /// `ε^T`: 1 on `T`, 0 elsewhere.
    pub fn indicator(t: EdgeSet) -> Self {
        AdmissibleMap::from_fn(|e| if t.contains(e) { Scalar::one() } else { Scalar::zero() })
    }

    pub fn get(&self, e: Edge) -> &Scalar {
        &self.values[e.bit()]
    }

    pub fn set(&mut self, e: Edge, v: Scalar) {
        self.values[e.bit()] = v;
    }

    /// `ε_ij`, zero on the diagonal.
    pub fn value(&self, i: FanoIndex, j: FanoIndex) -> Scalar {
        if i == j {
            Scalar::zero()
        } else {
            self.get(Edge::of(i, j)).clone()
        }
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn support(&self) -> EdgeSet {
        EdgeSet::from_edges(Edge::all().filter(|e| !self.get(*e).is_zero()))
    }

    pub fn is_real(&self) -> bool {
        self.values.iter().all(Scalar::is_real)
    }

    pub fn to_roots(&self) -> RootMap {
        RootMap { values: self.values.iter().cloned().map(RootProduct::from_scalar).collect() }
    }

    /// Extends to `G × G`, zero on `(g, g)`, `(e, ·)` and `(·, e)`.
    pub fn embed(&self) -> GeneralMap {
        let mut g = GeneralMap::zero();
        for e in Edge::all() {
            let (i, j) = e.ends();
            g.set(label(i), label(j), self.get(e).clone());
            g.set(label(j), label(i), self.get(e).clone());
        }
        g
    }
}

/// An arbitrary map `G × G → ℂ`, indexed by label indices `g₀ … g₇`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GeneralMap {
    table: Vec<Scalar>,
}

impl GeneralMap {
    pub fn zero() -> Self {
        GeneralMap { table: vec![Scalar::zero(); 64] }
    }

    pub fn constant(c: Scalar) -> Self {
        GeneralMap { table: vec![c; 64] }
    }

    pub fn get(&self, g: GroupElement, h: GroupElement) -> &Scalar {
        &self.table[g.label_index() as usize * 8 + h.label_index() as usize]
    }

    pub fn set(&mut self, g: GroupElement, h: GroupElement, v: Scalar) {
        self.table[g.label_index() as usize * 8 + h.label_index() as usize] = v;
    }

    /// `ε(g, h, k) = ε(g, h + k) ε(h, k)`.
    pub fn ternary(&self, g: GroupElement, h: GroupElement, k: GroupElement) -> Scalar {
        self.get(g, h.add(k)) * self.get(h, k)
    }
}

/// The file-level ε: either admissible edge values or the full table.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum EpsilonMap {
    Admissible(AdmissibleMap),
    General(GeneralMap),
}

impl EpsilonMap {
    pub fn from_json(text: &str) -> Result<Self, ContractionError> {
        let v: Value = serde_json::from_str(text).map_err(|e| ContractionError::Format(e.to_string()))?;
        Self::from_value(&v)
    }

    pub fn from_value(v: &Value) -> Result<Self, ContractionError> {
        let bad = |m: &str| ContractionError::Format(m.to_string());
        let mode = v.get("mode").and_then(Value::as_str).ok_or_else(|| bad("missing `mode`"))?;
        let values = v.get("values").and_then(Value::as_object).ok_or_else(|| bad("missing `values` object"))?;
        let scalar = |x: &Value| -> Result<Scalar, ContractionError> {
            match x {
                Value::String(s) => Ok(s.parse()?),
                Value::Number(n) => Ok(n.to_string().parse()?),
                _ => Err(bad("values must be strings or numbers")),
            }
        };
        match mode {
            "admissible" => {
                let mut m = AdmissibleMap::zero();
                for (k, x) in values {
                    let e: Edge = k.parse()?;
                    m.set(e, scalar(x)?);
                }
                Ok(EpsilonMap::Admissible(m))
            }
            "general" => {
                let mut m = GeneralMap::zero();
                for (k, x) in values {
                    let parse_label = |s: &str| -> Result<GroupElement, ContractionError> {
                        let n: u8 = s.trim().strip_prefix("g_").and_then(|d| d.parse().ok()).ok_or_else(|| bad(k))?;
                        Ok(group_label(n)?)
                    };
                    let (a, b) = k.split_once(',').ok_or_else(|| bad(k))?;
                    m.set(parse_label(a)?, parse_label(b)?, scalar(x)?);
                }
                Ok(EpsilonMap::General(m))
            }
            other => Err(bad(&format!("unknown mode `{other}`"))),
        }
    }

    pub fn to_value(&self) -> Value {
        match self {
            EpsilonMap::Admissible(m) => {
                let values: serde_json::Map<String, Value> = Edge::all()
                    .filter(|e| !m.get(*e).is_zero())
                    .map(|e| (e.to_string(), Value::String(m.get(e).to_string())))
                    .collect();
                json!({"mode": "admissible", "values": values})
            }
            EpsilonMap::General(m) => {
                let mut values = serde_json::Map::new();
                for g in 0..8u8 {
                    for h in 0..8u8 {
                        let v = m.get(group_label(g).unwrap(), group_label(h).unwrap());
                        if !v.is_zero() {
                            values.insert(format!("g_{g},g_{h}"), Value::String(v.to_string()));
                        }
                    }
                }
                json!({"mode": "general", "values": values})
            }
        }
    }
}

/// Edge values in the square-root extension, used for normal forms and witnesses.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RootMap {
    values: Vec<RootProduct>,
}

impl fmt::Debug for RootMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = Edge::all()
            .filter(|e| !self.get(*e).is_zero())
            .map(|e| format!("{e}:{}", self.get(e)))
            .collect();
        write!(f, "ε{{{}}}", parts.join(", "))
    }
}

impl RootMap {
    pub fn from_fn(f: impl FnMut(Edge) -> RootProduct) -> Self {
        RootMap { values: Edge::all().map(f).collect() }
    }

    pub fn get(&self, e: Edge) -> &RootProduct {
        &self.values[e.bit()]
    }

    pub fn support(&self) -> EdgeSet {
        EdgeSet::from_edges(Edge::all().filter(|e| !self.get(*e).is_zero()))
    }

    /// The plain-scalar map, when no radical remains.
    pub fn to_scalars(&self) -> Option<AdmissibleMap> {
        let values = self.values.iter().map(|v| v.as_scalar().cloned()).collect::<Option<Vec<_>>>()?;
        Some(AdmissibleMap { values })
    }

    /// Condition (b2) over the root extension.
    pub fn check_admissible(&self) -> Result<(), [u8; 3]> {
        let v = |a: FanoIndex, b: FanoIndex| if a == b { RootProduct::zero() } else { self.get(Edge::of(a, b)).clone() };
        for (i, j, k) in crate::liealg::non_collinear_triples() {
            let t1 = v(i, star_of(j, k)).mul(&v(j, k));
            let t2 = v(j, star_of(k, i)).mul(&v(k, i));
            let t3 = v(k, star_of(i, j)).mul(&v(i, j));
            if t1 != t2 || t1 != t3 {
                return Err([i.get(), j.get(), k.get()]);
            }
        }
        Ok(())
    }
}

impl From<&AdmissibleMap> for RootMap {
    fn from(m: &AdmissibleMap) -> Self {
        m.to_roots()
    }
}

/// Condition (b2): `ε_{i,j∗k} ε_{jk}` is symmetric in every non-collinear triple.
/// Returns the first failing triple.
pub fn check_admissible(eps: &AdmissibleMap) -> Result<(), [u8; 3]> {
    for (i, j, k) in crate::liealg::non_collinear_triples() {
        let t1 = &eps.value(i, star_of(j, k)) * &eps.value(j, k);
        let t2 = &eps.value(j, star_of(k, i)) * &eps.value(k, i);
        let t3 = &eps.value(k, star_of(i, j)) * &eps.value(i, j);
        if t1 != t2 || t1 != t3 {
            return Err([i.get(), j.get(), k.get()]);
        }
    }
    Ok(())
}

pub fn is_admissible(eps: &AdmissibleMap) -> bool {
    check_admissible(eps).is_ok()
}

/// Conditions (a1) and (a2) on all homogeneous basis vectors of `alg`.
pub fn check_general(eps: &GeneralMap, alg: &GradedAlgebra) -> bool {
    let n = alg.dim();
    let deg = |u: usize| label(alg.component_of(u));
    let units: Vec<Vec<Scalar>> = (0..n).map(|u| alg.unit(u)).collect();
    let brackets: Vec<Vec<Vec<Scalar>>> =
        (0..n).map(|u| (0..n).map(|v| alg.bracket(&units[u], &units[v])).collect()).collect();
    let nonzero = |v: &[Scalar]| v.iter().any(|c| !c.is_zero());
    // (a1)
    for u in 0..n {
        for v in 0..n {
            let (g, h) = (deg(u), deg(v));
            if eps.get(g, h) != eps.get(h, g) && nonzero(&brackets[u][v]) {
                return false;
            }
        }
    }
    // (a2), with [x,[y,z]] expanded through the structure constants
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (g, h, k) = (deg(x), deg(y), deg(z));
                let c0 = eps.ternary(k, g, h);
                let c1 = &eps.ternary(g, h, k) - &c0;
                let c2 = &eps.ternary(h, k, g) - &c0;
                if c1.is_zero() && c2.is_zero() {
                    continue;
                }
                let a = alg.bracket(&units[x], &brackets[y][z]);
                let b = alg.bracket(&units[y], &brackets[z][x]);
                if a.iter().zip(&b).any(|(p, q)| !(&(&c1 * p) + &(&c2 * q)).is_zero()) {
                    return false;
                }
            }
        }
    }
    true
}

/// Keeps `ε(g, h)` when `g`, `h` and `g + h` are all nonzero.
pub fn admissibilize(eps: &GeneralMap) -> AdmissibleMap {
    AdmissibleMap::from_fn(|e| {
        let (i, j) = e.ends();
        eps.get(label(i), label(j)).clone()
    })
}

fn implications() -> &'static [(u32, u32)] {
    static T: OnceLock<Vec<(u32, u32)>> = OnceLock::new();
    T.get_or_init(|| {
        let mut out = Vec::new();
        for i in FanoIndex::all() {
            for j in FanoIndex::all().filter(|&j| j != i) {
                let line = Line::through(i, j);
                for k in FanoIndex::all().filter(|&k| !line.contains(k)) {
                    let pair = 1u32 << Edge::of(i, j).bit() | 1 << Edge::of(star_of(i, j), k).bit();
                    let p = p_set(i, j, k).unwrap().0;
                    out.push((pair, p));
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    })
}

/// Niceness: `{i,j}, {i∗j,k} ∈ T` forces `P_{{i,j,k}} ⊆ T`.
pub fn is_nice(t: EdgeSet) -> bool {
    let m = t.0;
    implications().iter().all(|&(pair, p)| m & pair != pair || m & p == p)
}

/// `(σ·ε)_ij = ε_{σ(i)σ(j)}`.
pub fn act_collineation(sigma: &Collineation, eps: &AdmissibleMap) -> AdmissibleMap {
    AdmissibleMap::from_fn(|e| eps.get(sigma.act_on_edge(e)).clone())
}

/// Builds `L^ε`, rejecting maps that are not graded contractions.
pub fn contract(alg: &GradedAlgebra, eps: &EpsilonMap) -> Result<GradedAlgebra, ContractionError> {
    match eps {
        EpsilonMap::Admissible(m) => {
            check_admissible(m).map_err(ContractionError::NotAdmissible)?;
            Ok(contract_unchecked(alg, m))
        }
        EpsilonMap::General(m) => {
            if !check_general(m, alg) {
                return Err(ContractionError::NotContraction);
            }
            Ok(alg.rescaled(|i, j| m.get(label(i), label(j)).clone()))
        }
    }
}

pub fn contract_admissible(alg: &GradedAlgebra, eps: &AdmissibleMap) -> Result<GradedAlgebra, ContractionError> {
    contract(alg, &EpsilonMap::Admissible(eps.clone()))
}

/// Builds `L^ε` without checking `ε`.
pub fn contract_unchecked(alg: &GradedAlgebra, eps: &AdmissibleMap) -> GradedAlgebra {
    alg.rescaled(|i, j| eps.value(i, j))
}

/// `α: G∖{e} → ℂ^×` with `α(e) = 1`, valued in the square-root extension.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NormalizationMap {
    pub alpha: Vec<RootProduct>,
}

impl NormalizationMap {
    pub fn identity() -> Self {
        NormalizationMap { alpha: vec![RootProduct::one(); 7] }
    }

    pub fn from_scalars(values: &[Scalar]) -> Result<Self, ContractionError> {
        if values.len() != 7 || values.iter().any(Zero::is_zero) {
            return Err(ContractionError::ZeroAlpha);
        }
        Ok(NormalizationMap { alpha: values.iter().cloned().map(RootProduct::from_scalar).collect() })
    }

    pub fn get(&self, i: FanoIndex) -> &RootProduct {
        &self.alpha[i.slot()]
    }

    pub fn inverse(&self) -> Result<Self, ContractionError> {
        Ok(NormalizationMap { alpha: self.alpha.iter().map(|a| a.inv()).collect::<Result<_, _>>()? })
    }

    pub fn compose(&self, other: &NormalizationMap) -> Self {
        NormalizationMap { alpha: self.alpha.iter().zip(&other.alpha).map(|(a, b)| a.mul(b)).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.alpha.iter().all(|a| *a == RootProduct::one())
    }
}

/// `ε^α(g_i, g_j) = ε_ij α_i α_j / α_{i∗j}`.
pub fn apply_normalization(eps: &RootMap, alpha: &NormalizationMap) -> Result<RootMap, ContractionError> {
    if alpha.alpha.iter().any(RootProduct::is_zero) {
        return Err(ContractionError::ZeroAlpha);
    }
    let mut values = Vec::with_capacity(21);
    for e in Edge::all() {
        let (i, j) = e.ends();
        let v = eps.get(e);
        values.push(if v.is_zero() {
            RootProduct::zero()
        } else {
            v.mul(alpha.get(i)).mul(alpha.get(j)).checked_div(alpha.get(star_of(i, j)))?
        });
    }
    Ok(RootMap { values })
}

/// Scalar version of [`apply_normalization`].
pub fn normalize_scalar(eps: &AdmissibleMap, alpha: &[Scalar]) -> Result<AdmissibleMap, ContractionError> {
    if alpha.len() != 7 || alpha.iter().any(Zero::is_zero) {
        return Err(ContractionError::ZeroAlpha);
    }
    let a = |i: FanoIndex| &alpha[i.slot()];
    let mut out = AdmissibleMap::zero();
    for e in Edge::all() {
        let (i, j) = e.ends();
        let v = eps.get(e);
        if !v.is_zero() {
            out.set(e, (&(v * a(i)) * a(j)).checked_div(a(star_of(i, j)))?);
        }
    }
    Ok(out)
}

/// The normal forms of the normalization theorem.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum NormalForm {
    EpsilonT(EdgeSet),
    Eta { lambda: RootProduct, i: FanoIndex, j: FanoIndex, k: FanoIndex },
    Mu { lambda: RootProduct, i: FanoIndex, j: FanoIndex, k: FanoIndex },
    Beta { lambda: RootProduct, lambda2: RootProduct, i: FanoIndex, j: FanoIndex, k: FanoIndex },
}

impl NormalForm {
    pub fn eta(lambda: Scalar, i: FanoIndex, j: FanoIndex, k: FanoIndex) -> Self {
        NormalForm::Eta { lambda: RootProduct::from_scalar(lambda), i, j, k }
    }

    pub fn mu(lambda: Scalar, i: FanoIndex, j: FanoIndex, k: FanoIndex) -> Self {
        NormalForm::Mu { lambda: RootProduct::from_scalar(lambda), i, j, k }
    }

    pub fn beta(lambda: Scalar, lambda2: Scalar, i: FanoIndex, j: FanoIndex, k: FanoIndex) -> Self {
        NormalForm::Beta { lambda: RootProduct::from_scalar(lambda), lambda2: RootProduct::from_scalar(lambda2), i, j, k }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            NormalForm::EpsilonT(_) => "epsilonT",
            NormalForm::Eta { .. } => "eta",
            NormalForm::Mu { .. } => "mu",
            NormalForm::Beta { .. } => "beta",
        }
    }

    pub fn params(&self) -> Vec<RootProduct> {
        match self {
            NormalForm::EpsilonT(_) => Vec::new(),
            NormalForm::Eta { lambda, .. } | NormalForm::Mu { lambda, .. } => vec![lambda.clone()],
            NormalForm::Beta { lambda, lambda2, .. } => vec![lambda.clone(), lambda2.clone()],
        }
    }

    pub fn indices(&self) -> Option<[u8; 3]> {
        match self {
            NormalForm::EpsilonT(_) => None,
            NormalForm::Eta { i, j, k, .. } | NormalForm::Mu { i, j, k, .. } | NormalForm::Beta { i, j, k, .. } => {
                Some([i.get(), j.get(), k.get()])
            }
        }
    }

    pub fn to_value(&self) -> Value {
        match self {
            NormalForm::EpsilonT(t) => json!({"tag": "epsilonT", "support": t.to_string()}),
            _ => json!({
                "tag": self.tag(),
                "params": self.params().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                "indices": self.indices(),
            }),
        }
    }
}

/// The map of a normal form, over the square-root extension.
pub fn make_normal_form_roots(nf: &NormalForm) -> Result<RootMap, ContractionError> {
    let one = RootProduct::one();
    let mut entries: Vec<(Edge, RootProduct)> = Vec::new();
    match nf {
        NormalForm::EpsilonT(t) => {
            return Ok(RootMap::from_fn(|e| if t.contains(e) { one.clone() } else { RootProduct::zero() }));
        }
        NormalForm::Eta { lambda, i, j, k } => {
            check_generic_triple(*i, *j, *k)?;
            let (i, j, k) = (*i, *j, *k);
            entries.push((Edge::of(i, j), lambda.clone()));
            entries.push((Edge::of(i, star_of(i, j)), one.clone()));
            entries.push((Edge::of(i, k), one.clone()));
            entries.push((Edge::of(i, star_of(i, k)), one.clone()));
        }
        NormalForm::Mu { lambda, i, j, k } => {
            check_generic_triple(*i, *j, *k)?;
            let (i, j, k) = (*i, *j, *k);
            entries.push((Edge::of(i, j), lambda.clone()));
            entries.push((Edge::of(i, star_of(i, j)), lambda.clone()));
            entries.push((Edge::of(i, k), one.clone()));
            entries.push((Edge::of(i, star_of(i, k)), one.clone()));
            entries.push((Edge::of(i, star_of(j, k)), one.clone()));
        }
        NormalForm::Beta { lambda, lambda2, i, j, k } => {
            check_generic_triple(*i, *j, *k)?;
            let (i, j, k) = (*i, *j, *k);
            let jk = star_of(j, k);
            entries.push((Edge::of(i, j), lambda.clone()));
            entries.push((Edge::of(i, star_of(i, j)), lambda.clone()));
            entries.push((Edge::of(i, k), lambda2.clone()));
            entries.push((Edge::of(i, star_of(i, k)), lambda2.clone()));
            entries.push((Edge::of(i, jk), one.clone()));
            entries.push((Edge::of(i, star_of(i, jk)), one.clone()));
        }
    }
    if entries.iter().any(|(_, v)| v.is_zero()) {
        return Err(ContractionError::ZeroParameter);
    }
    let map: BTreeMap<Edge, RootProduct> = entries.into_iter().collect();
    Ok(RootMap::from_fn(|e| map.get(&e).cloned().unwrap_or_else(RootProduct::zero)))
}

/// The map of a normal form with plain-scalar parameters.
pub fn make_normal_form(nf: &NormalForm) -> Result<AdmissibleMap, ContractionError> {
    make_normal_form_roots(nf)?.to_scalars().ok_or(ContractionError::IrrationalParameter)
}

/// Which exceptional shape a support has, with its centre point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    Generic,
    /// `X_{(i)}` minus the two edges of one line through `i`.
    Eta(FanoIndex),
    /// `X_{(i)}` minus one edge.
    Mu(FanoIndex),
    /// `X_{(i)}`.
    Beta(FanoIndex),
}

pub fn shape(t: EdgeSet) -> Shape {
    let n = t.len();
    if !(4..=6).contains(&n) {
        return Shape::Generic;
    }
    let Some(i) = FanoIndex::all().find(|&i| t.edges().all(|e| e.contains(i))) else {
        return Shape::Generic;
    };
    match n {
        6 => Shape::Beta(i),
        5 => Shape::Mu(i),
        _ => {
            let missing: Vec<FanoIndex> =
                FanoIndex::all().filter(|&a| a != i && !t.contains(Edge::of(i, a))).collect();
            if star_of(missing[0], missing[1]) == i {
                Shape::Eta(i)
            } else {
                Shape::Generic
            }
        }
    }
}

/// The two points other than `i` on the line `ℓ`.
fn others_on(line: Line, i: FanoIndex) -> [FanoIndex; 2] {
    let pts: Vec<FanoIndex> = line.points().into_iter().filter(|&p| p != i).collect();
    [pts[0], pts[1]]
}

/// `p_ℓ = ε_{ia} ε_{ib}` for the line `ℓ = {i, a, b}`.
fn line_product(eps: &AdmissibleMap, i: FanoIndex, line: Line) -> Scalar {
    let [a, b] = others_on(line, i);
    &eps.value(i, a) * &eps.value(i, b)
}

/// The normal form the theorem assigns to `ε`, with the fixed index choices
/// documented on each branch.
pub fn normal_form_of(eps: &AdmissibleMap) -> Result<NormalForm, ContractionError> {
    let t = eps.support();
    if !is_nice(t) {
        return Err(ContractionError::NotNice(t.to_string()));
    }
    let lines_through = |i: FanoIndex| Line::all().filter(move |l| l.contains(i));
    let full = |i: FanoIndex, l: &Line| others_on(*l, i).iter().all(|&a| t.contains(Edge::of(i, a)));
    let ratio_root = |num: Scalar, den: Scalar| -> Result<RootProduct, ContractionError> {
        Ok(RootProduct::sqrt(&num.checked_div(&den)?))
    };
    Ok(match shape(t) {
        Shape::Generic => NormalForm::EpsilonT(t),
        Shape::Eta(i) => {
            // j: smallest point on the full lines; k: smallest point on the other full line
            let fulls: Vec<Line> = lines_through(i).filter(|l| full(i, l)).collect();
            let j = fulls.iter().flat_map(|l| others_on(*l, i)).min().unwrap();
            let lj = Line::through(i, j);
            let lk = *fulls.iter().find(|l| **l != lj).unwrap();
            let k = others_on(lk, i)[0];
            let lambda = line_product(eps, i, lj).checked_div(&line_product(eps, i, lk))?;
            NormalForm::Eta { lambda: RootProduct::from_scalar(lambda), i, j, k }
        }
        Shape::Mu(i) => {
            // j: smallest point on the full lines; k on the other full line with j∗k present
            let fulls: Vec<Line> = lines_through(i).filter(|l| full(i, l)).collect();
            let partial = lines_through(i).find(|l| !full(i, l)).unwrap();
            let s = others_on(partial, i).into_iter().find(|&a| t.contains(Edge::of(i, a))).unwrap();
            let j = fulls.iter().flat_map(|l| others_on(*l, i)).min().unwrap();
            let k = star_of(j, s);
            let (lj, lk) = (Line::through(i, j), Line::through(i, k));
            let lambda = ratio_root(line_product(eps, i, lj), line_product(eps, i, lk))?;
            NormalForm::Mu { lambda, i, j, k }
        }
        Shape::Beta(i) => {
            // j: smallest point ≠ i; k: smallest point off ℓ_ij
            let j = FanoIndex::all().find(|&a| a != i).unwrap();
            let lj = Line::through(i, j);
            let k = FanoIndex::all().find(|&a| !lj.contains(a)).unwrap();
            let lk = Line::through(i, k);
            let l0 = Line::through(i, star_of(j, k));
            let p0 = line_product(eps, i, l0);
            let lambda = ratio_root(line_product(eps, i, lj), p0.clone())?;
            let lambda2 = ratio_root(line_product(eps, i, lk), p0)?;
            NormalForm::Beta { lambda, lambda2, i, j, k }
        }
    })
}

/// Finds `α` with `ε^α` equal to the theorem's normal form.
pub fn find_normalization(eps: &AdmissibleMap) -> Result<(NormalForm, NormalizationMap), ContractionError> {
    check_admissible(eps).map_err(ContractionError::NotAdmissible)?;
    let nf = normal_form_of(eps)?;
    let target = make_normal_form_roots(&nf)?;
    let alpha = solve_normalization(&eps.to_roots(), &target)
        .ok_or_else(|| ContractionError::NoWitness(eps.support().to_string()))?;
    Ok((nf, alpha))
}

/// Solves `ε^α = target` for maps with a common support.
///
/// Works in exponent space: `x_a + x_b − x_{a∗b} = log(target_e / ε_e)`.
/// A maximal independent set of edge equations is solved over Q; the
/// solution must have half-integer coefficients, and each `α_g` is built as
/// a product of integer powers and square roots of the individual ratios.
/// Residual signs are then fixed by the 128 sign vectors on `α`.
pub fn solve_normalization(eps: &RootMap, target: &RootMap) -> Option<NormalizationMap> {
    let t = eps.support();
    if target.support() != t {
        return None;
    }
    let edges: Vec<Edge> = t.edges().collect();
    let ratios: Vec<RootProduct> =
        edges.iter().map(|e| target.get(*e).checked_div(eps.get(*e)).ok()).collect::<Option<_>>()?;
    let mut order: Vec<usize> = (0..edges.len()).collect();
    order.sort_by_key(|&a| (ratios[a].as_scalar().is_none(), a));
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for attempt in 0..64 {
        if attempt > 0 {
            order.shuffle(&mut rng);
        }
        for alpha in try_rows(&edges, &ratios, &order) {
            if let Some(alpha) = fix_signs(eps, target, alpha) {
                return Some(alpha);
            }
        }
    }
    None
}

fn equation_row(e: Edge) -> Vec<Scalar> {
    let (a, b) = e.ends();
    let mut row = vec![Scalar::zero(); 7];
    row[a.slot()] += &Scalar::one();
    row[b.slot()] += &Scalar::one();
    row[star_of(a, b).slot()] -= &Scalar::one();
    row
}

fn try_rows(edges: &[Edge], ratios: &[RootProduct], order: &[usize]) -> Vec<NormalizationMap> {
    let mut span = Echelon::new(7);
    let mut chosen = Vec::new();
    for &r in order {
        if span.insert(equation_row(edges[r])) {
            chosen.push(r);
        }
    }
    if chosen.is_empty() {
        return vec![NormalizationMap::identity()];
    }
    let a = Matrix::from_rows(chosen.iter().map(|&r| equation_row(edges[r])).collect());
    let rank = chosen.len();
    // every choice of solved-for unknowns; the others are fixed to 1
    let mut out = Vec::new();
    for cols in (0u32..1 << 7).filter(|m| m.count_ones() as usize == rank) {
        let pivots: Vec<usize> = (0..7).filter(|c| cols >> c & 1 == 1).collect();
        let square = Matrix::from_fn(rank, rank, |row, col| a[(row, pivots[col])].clone());
        if let Some(alpha) = square.inverse().and_then(|inv| alpha_from_inverse(&inv, &pivots, &chosen, ratios)) {
            out.push(alpha);
        }
    }
    out
}

/// `x_{pivots[c]} = Σ_s inv[c][s] b_s`, exponentiated; needs `inv` in ½Z.
fn alpha_from_inverse(inv: &Matrix, pivots: &[usize], chosen: &[usize], ratios: &[RootProduct]) -> Option<NormalizationMap> {
    let two = Scalar::from(2);
    let mut alpha = vec![RootProduct::one(); 7];
    for (c, &g) in pivots.iter().enumerate() {
        let mut whole = RootProduct::one();
        let mut under_root = RootProduct::one();
        for (s, &r) in chosen.iter().enumerate() {
            let n = crate::exactnum::to_i64(&(&inv[(c, s)] * &two))?;
            whole = whole.mul(&ratios[r].powi(n.div_euclid(2)).ok()?);
            if n.rem_euclid(2) == 1 {
                // separate roots keep √w·√w cancellations syntactic
                match ratios[r].as_scalar() {
                    Some(v) => whole = whole.mul(&RootProduct::sqrt(v)),
                    None => under_root = under_root.mul(&ratios[r]),
                }
            }
        }
        let inner = under_root.as_scalar()?.clone();
        alpha[g] = whole.mul(&RootProduct::sqrt(&inner));
    }
    Some(NormalizationMap { alpha })
}

fn fix_signs(eps: &RootMap, target: &RootMap, alpha: NormalizationMap) -> Option<NormalizationMap> {
    let got = apply_normalization(eps, &alpha).ok()?;
    let one = Scalar::one();
    let minus = -&one;
    let mut residual = Vec::new();
    for e in eps.support().edges() {
        let rho = target.get(e).checked_div(got.get(e)).ok()?;
        let rho = rho.as_scalar()?.clone();
        if rho == one {
            residual.push((e, false));
        } else if rho == minus {
            residual.push((e, true));
        } else {
            return None;
        }
    }
    let mask = (0..128u32).find(|mask| {
        residual.iter().all(|(e, flip)| {
            let (a, b) = e.ends();
            let c = star_of(a, b);
            let parity = (mask >> a.slot() ^ mask >> b.slot() ^ mask >> c.slot()) & 1 == 1;
            parity == *flip
        })
    })?;
    let alpha = NormalizationMap {
        alpha: alpha.alpha.iter().enumerate().map(|(g, a)| if mask >> g & 1 == 1 { a.neg() } else { a.clone() }).collect(),
    };
    (apply_normalization(eps, &alpha).ok()? == *target).then_some(alpha)
}

/// The equivalence class of an admissible contraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassDescriptor {
    /// `ε ∼ ε^{T_id}`.
    Class { id: u8 },
    /// Support collinear to `T₁₀`, equivalent to `ε^{T₈}` through the θ isomorphism.
    Merged { id: u8, support_class: u8 },
    /// One of the three parameter families, with its canonical parameters.
    Family { id: u8, params: Vec<RootProduct> },
}

impl ClassDescriptor {
    pub fn class_id(&self) -> u8 {
        match self {
            ClassDescriptor::Class { id } | ClassDescriptor::Merged { id, .. } | ClassDescriptor::Family { id, .. } => *id,
        }
    }

    pub fn to_value(&self) -> Value {
        match self {
            ClassDescriptor::Class { id } => json!({"class": format!("T{id}")}),
            ClassDescriptor::Merged { id, support_class } => json!({
                "class": format!("T{id}"),
                "support_class": format!("T{support_class}"),
                "merged": true,
                "witness": "theta map on the components of the line through i and j*k",
            }),
            ClassDescriptor::Family { id, params } => json!({
                "class": format!("T{id}"),
                "family": match id { 14 => "eta", 17 => "mu", _ => "beta" },
                "params": params.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            }),
        }
    }
}

impl Serialize for ClassDescriptor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_value().serialize(s)
    }
}

/// Parameter orbit of a family under equivalence.
pub fn family_orbit(id: u8, params: &[RootProduct]) -> Result<Vec<Vec<RootProduct>>, ContractionError> {
    let inv = |x: &RootProduct| x.inv();
    let signs = |v: Vec<RootProduct>| -> Vec<Vec<RootProduct>> {
        let mut out = vec![Vec::new()];
        for x in v {
            out = out.into_iter().flat_map(|p| [x.clone(), x.neg()].map(|y| [p.clone(), vec![y]].concat())).collect();
        }
        out
    };
    Ok(match id {
        14 => vec![vec![params[0].clone()], vec![inv(&params[0])?]],
        17 => {
            let mut out = signs(vec![params[0].clone()]);
            out.extend(signs(vec![inv(&params[0])?]));
            out
        }
        20 => {
            let (l, m) = (&params[0], &params[1]);
            let bases = [
                (l.clone(), m.clone()),
                (inv(l)?, m.checked_div(l)?),
                (l.checked_div(m)?, inv(m)?),
            ];
            let mut out = Vec::new();
            for (a, b) in bases {
                out.extend(signs(vec![a.clone(), b.clone()]));
                out.extend(signs(vec![b, a]));
            }
            out
        }
        _ => vec![params.to_vec()],
    })
}

/// Classifies an admissible contraction up to equivalence.
pub fn classify(eps: &AdmissibleMap) -> Result<ClassDescriptor, ContractionError> {
    check_admissible(eps).map_err(ContractionError::NotAdmissible)?;
    let t = eps.support();
    let (id, sigma) = nicesets::match_representative(t)?;
    // move the support onto T_id: (σ⁻¹·ε) has support σ(T)
    let moved = act_collineation(&sigma.inverse(), eps);
    debug_assert_eq!(moved.support(), nicesets::representative(id));
    let one = FanoIndex::new(1).unwrap();
    let p = |a: u8, b: u8| line_product(&moved, one, Line::through(FanoIndex::new(a).unwrap(), FanoIndex::new(b).unwrap()));
    let canonical = |params: Vec<RootProduct>| -> Result<ClassDescriptor, ContractionError> {
        let best = family_orbit(id, &params)?.into_iter().min().unwrap();
        Ok(ClassDescriptor::Family { id, params: best })
    };
    match id {
        10 => Ok(ClassDescriptor::Merged { id: 8, support_class: 10 }),
        14 => canonical(vec![RootProduct::from_scalar(p(3, 6).checked_div(&p(2, 5))?)]),
        17 => canonical(vec![RootProduct::sqrt(&p(3, 6).checked_div(&p(2, 5))?)]),
        20 => {
            let base = p(2, 5);
            canonical(vec![RootProduct::sqrt(&p(3, 6).checked_div(&base)?), RootProduct::sqrt(&p(4, 7).checked_div(&base)?)])
        }
        _ => Ok(ClassDescriptor::Class { id }),
    }
}

/// The literal condition under which `θ_ij` is an automorphism of `L^ε`:
/// every support edge `{s,t}` has `ℓ_st = ℓ_ij` or `ℓ_st ⊆ I∖{i,j}`, and
/// `ε_it = ε_jt` for every `t ≠ i, j`.
pub fn theta_condition(eps: &AdmissibleMap, i: FanoIndex, j: FanoIndex) -> bool {
    let lij = Line::through(i, j);
    let lines_ok = eps.support().edges().all(|e| {
        let l = e.line();
        l == lij || (!l.contains(i) && !l.contains(j))
    });
    lines_ok && FanoIndex::all().filter(|&t| t != i && t != j).all(|t| eps.value(i, t) == eps.value(j, t))
}

/// The real contraction attached to a line `ℓ`: `−1` on edges disjoint from `ℓ`, `1` elsewhere.
pub fn split_epsilon(line: Line) -> AdmissibleMap {
    AdmissibleMap::from_fn(|e| {
        let (a, b) = e.ends();
        if line.contains(a) || line.contains(b) {
            Scalar::one()
        } else {
            -Scalar::one()
        }
    })
}

/// The pair of non-collinear supports `T₁₀ = {12, 13, 17}` and `T₈ = {12, 13, 14}`.
pub fn merge_supports() -> (EdgeSet, EdgeSet) {
    (nicesets::representative(10), nicesets::representative(8))
}

/// `θ_{7,4}`, swapping the components `7` and `4` of the line through `1`,
/// as a map `L^{ε^{T₁₀}} → L^{ε^{T₈}}`, together with the verdict of the
/// exact isomorphism check.
pub fn merge_witness(alg: &GradedAlgebra) -> Result<(crate::liealg::GradedMap, bool), crate::liealg::LieError> {
    let (t10, t8) = merge_supports();
    let theta = crate::liealg::theta_map(alg, FanoIndex::new(7)?, FanoIndex::new(4)?)?;
    let src = contract_unchecked(alg, &AdmissibleMap::indicator(t10));
    let dst = contract_unchecked(alg, &AdmissibleMap::indicator(t8));
    let ok = theta.is_isomorphism(&src, &dst);
    Ok((theta, ok))
}

/// A random graded contraction with support `t` (assumed nice).
///
/// Random values on `t` are tried first; when they violate (b2) the result
/// is a normal form with random parameters, rescaled by a random `α`.
pub fn sample_admissible<R: Rng + ?Sized>(t: EdgeSet, field: Field, rng: &mut R) -> AdmissibleMap {
    let raw = AdmissibleMap::from_fn(|e| if t.contains(e) { field.sample_nonzero(rng) } else { Scalar::zero() });
    if is_admissible(&raw) {
        return raw;
    }
    let base = match normal_form_of(&AdmissibleMap::indicator(t)).expect("nice support") {
        NormalForm::EpsilonT(t) => AdmissibleMap::indicator(t),
        NormalForm::Eta { i, j, k, .. } => make_normal_form(&NormalForm::eta(field.sample_nonzero(rng), i, j, k)).unwrap(),
        NormalForm::Mu { i, j, k, .. } => make_normal_form(&NormalForm::mu(field.sample_nonzero(rng), i, j, k)).unwrap(),
        NormalForm::Beta { i, j, k, .. } => {
            make_normal_form(&NormalForm::beta(field.sample_nonzero(rng), field.sample_nonzero(rng), i, j, k)).unwrap()
        }
    };
    let alpha: Vec<Scalar> = (0..7).map(|_| field.sample_nonzero(rng)).collect();
    normalize_scalar(&base, &alpha).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fano::{all_collineations, p, star_set, t_set};
    use crate::liealg::{build_algebra, AlgebraKind};
    use proptest::prelude::*;

    fn s(n: i64) -> Scalar {
        Scalar::from(n)
    }

    fn rp(n: i64) -> RootProduct {
        RootProduct::from_scalar(s(n))
    }

    fn set(text: &str) -> EdgeSet {
        text.parse().unwrap()
    }

    fn b3() -> &'static GradedAlgebra {
        static A: OnceLock<GradedAlgebra> = OnceLock::new();
        A.get_or_init(|| build_algebra(AlgebraKind::B3, Field::Complex).unwrap())
    }

    #[test]
    fn trivial_general_maps_are_contractions() {
        assert!(check_general(&GeneralMap::constant(s(1)), b3()));
        assert!(check_general(&GeneralMap::zero(), b3()));
        let eps = AdmissibleMap::indicator(set("1-2,1-3,1-7,2-3,2-6,3-5"));
        assert!(is_admissible(&eps));
        assert!(check_general(&eps.embed(), b3()));
    }

    #[test]
    fn admissibilize_examples() {
        let a = admissibilize(&GeneralMap::constant(s(1)));
        assert_eq!(a.support(), EdgeSet::ALL);
        assert!(Edge::all().all(|e| *a.get(e) == s(1)));
        assert_eq!(a.embed().get(GroupElement::IDENTITY, label(p(1))), &s(0));
        let eps = AdmissibleMap::indicator(set("1-2,2-5"));
        assert_eq!(admissibilize(&eps.embed()), eps);
        let mut g = eps.embed();
        g.set(label(p(3)), label(p(3)), s(7));
        assert_eq!(admissibilize(&g), eps);
    }

    #[test]
    fn nice_examples() {
        assert!(!is_nice(set("1-2,3-5")));
        assert!(is_nice(p_set(p(1), p(2), p(3)).unwrap()));
        assert!(is_nice(EdgeSet::ALL));
        assert!(is_nice(EdgeSet::EMPTY));
        assert!(is_nice(t_set(p(1), p(2), p(3)).unwrap()));
        assert_eq!(AdmissibleMap::indicator(EdgeSet::ALL).support(), EdgeSet::ALL);
    }

    #[test]
    fn non_nice_support_is_rejected() {
        let eps = AdmissibleMap::indicator(set("1-2,3-5"));
        assert!(check_admissible(&eps).is_err());
        assert!(!check_general(&eps.embed(), b3()));
    }

    #[test]
    fn normal_form_examples() {
        let (i, j, k) = (p(1), p(2), p(3));
        let eta = make_normal_form(&NormalForm::eta(s(1), i, j, k)).unwrap();
        assert_eq!(eta, AdmissibleMap::indicator(eta.support()));
        assert_eq!(eta.support().len(), 4);
        let beta = make_normal_form(&NormalForm::beta(s(2), s(3), i, j, k)).unwrap();
        assert_eq!(beta.support(), star_set(i));
        let mu = make_normal_form(&NormalForm::mu(s(5), i, j, k)).unwrap();
        assert_eq!(mu.support().len(), 5);
        for m in [&eta, &beta, &mu] {
            assert!(is_admissible(m));
        }
        assert_eq!(make_normal_form(&NormalForm::mu(s(0), i, j, k)), Err(ContractionError::ZeroParameter));
        assert!(make_normal_form(&NormalForm::mu(s(1), i, j, p(5))).is_err());
    }

    #[test]
    fn normalization_basics() {
        let eps = sample_admissible(EdgeSet::ALL, Field::Real, &mut ChaCha8Rng::seed_from_u64(1));
        let roots = eps.to_roots();
        assert_eq!(apply_normalization(&roots, &NormalizationMap::identity()).unwrap(), roots);
        let alpha = NormalizationMap::from_scalars(&[s(2), s(-3), s(5), s(1), s(7), s(-1), s(4)]).unwrap();
        let moved = apply_normalization(&roots, &alpha).unwrap();
        assert_eq!(moved.support(), roots.support());
        assert_eq!(apply_normalization(&moved, &alpha.inverse().unwrap()).unwrap(), roots);
        assert!(moved.check_admissible().is_ok());
    }

    #[test]
    fn scaling_intertwines_brackets() {
        let alg = b3();
        let eps = sample_admissible(EdgeSet::ALL, Field::Real, &mut ChaCha8Rng::seed_from_u64(2));
        let alpha = [s(2), s(-3), s(5), s(1), s(7), s(-1), s(4)];
        let moved = normalize_scalar(&eps, &alpha).unwrap();
        // f|L_i = α_i maps L^{ε^α} onto L^ε
        let n = alg.dim();
        let f = crate::liealg::GradedMap {
            matrix: Matrix::from_fn(n, n, |a, b| if a == b { alpha[a / alg.rank()].clone() } else { s(0) }),
            component_perm: [1, 2, 3, 4, 5, 6, 7],
        };
        assert!(f.is_isomorphism(&contract_unchecked(alg, &moved), &contract_unchecked(alg, &eps)));
    }

    #[test]
    fn find_normalization_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let eps = sample_admissible(EdgeSet::ALL, Field::Real, &mut rng);
        let (nf, alpha) = find_normalization(&eps).unwrap();
        assert_eq!(nf, NormalForm::EpsilonT(EdgeSet::ALL));
        assert_eq!(apply_normalization(&eps.to_roots(), &alpha).unwrap(), make_normal_form_roots(&nf).unwrap());

        let (i, j, k) = (p(1), p(2), p(3));
        let beta = make_normal_form(&NormalForm::beta(s(2), s(3), i, j, k)).unwrap();
        let (nf, alpha) = find_normalization(&beta).unwrap();
        assert_eq!(nf, NormalForm::beta(s(2), s(3), i, j, k));
        assert!(alpha.is_identity());
        let beta_neg = make_normal_form(&NormalForm::beta(s(-2), s(3), i, j, k)).unwrap();
        assert_eq!(find_normalization(&beta_neg).unwrap().0, nf);

        let mu = make_normal_form(&NormalForm::mu(s(5), i, j, k)).unwrap();
        let (nf, alpha) = find_normalization(&mu).unwrap();
        assert_eq!(nf, NormalForm::mu(s(5), i, j, k));
        assert!(alpha.is_identity());
        let mu_neg = make_normal_form(&NormalForm::mu(s(-5), i, j, k)).unwrap();
        assert_eq!(find_normalization(&mu_neg).unwrap().0, nf);
    }

    #[test]
    fn collineation_action() {
        let eps = sample_admissible(set("1-2,1-3,1-7,2-3,2-6,3-5"), Field::Real, &mut ChaCha8Rng::seed_from_u64(3));
        assert_eq!(act_collineation(&Collineation::identity(), &eps), eps);
        let all = all_collineations();
        let (a, b) = (&all[17], &all[101]);
        // right action: (a∘b)·ε = b·(a·ε)
        assert_eq!(act_collineation(&a.compose(b), &eps), act_collineation(b, &act_collineation(a, &eps)));
        let moved = act_collineation(a, &eps);
        assert_eq!(moved.support(), a.inverse().act_on_set(eps.support()));
        assert!(is_admissible(&moved));
        let t = set("1-2,1-3");
        assert_eq!(act_collineation(a, &AdmissibleMap::indicator(a.act_on_set(t))), AdmissibleMap::indicator(t));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify(&AdmissibleMap::indicator(set("1-2,1-3,1-7"))).unwrap(),
            ClassDescriptor::Merged { id: 8, support_class: 10 }
        );
        assert_eq!(classify(&AdmissibleMap::indicator(set("1-2,1-3,1-4"))).unwrap(), ClassDescriptor::Class { id: 8 });
        let t14 = |l: i64, d: i64| {
            let mut m = AdmissibleMap::indicator(set("1-2,1-3,1-5,1-6"));
            m.set("1-6".parse().unwrap(), Scalar::from_frac(l, d));
            classify(&m).unwrap()
        };
        assert_eq!(t14(2, 1), t14(1, 2));
        let t17 = |l: i64| {
            let mut m = AdmissibleMap::indicator(set("1-2,1-3,1-4,1-5,1-6"));
            m.set("1-3".parse().unwrap(), s(l));
            m.set("1-6".parse().unwrap(), s(l));
            classify(&m).unwrap()
        };
        assert_ne!(t17(2), t17(3));
        assert_eq!(t17(2), t17(-2));
        let beta = make_normal_form(&NormalForm::beta(s(2), s(3), p(1), p(2), p(3))).unwrap();
        match classify(&beta).unwrap() {
            ClassDescriptor::Family { id, params } => {
                assert_eq!(id, 20);
                assert_eq!(params.len(), 2);
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            classify(&make_normal_form(&NormalForm::beta(s(2), s(3), p(1), p(2), p(3))).unwrap()),
            classify(&make_normal_form(&NormalForm::beta(s(3), s(2), p(1), p(2), p(3))).unwrap())
        );
        let _ = rp(1);
    }

    #[test]
    fn json_round_trip() {
        let eps = EpsilonMap::from_json(r#"{"mode":"admissible","values":{"1-2":"3/2","1-5":"1"}}"#).unwrap();
        let EpsilonMap::Admissible(m) = &eps else { panic!() };
        assert_eq!(m.get("1-2".parse().unwrap()), &Scalar::from_frac(3, 2));
        assert_eq!(EpsilonMap::from_value(&eps.to_value()).unwrap(), eps);
        let g = EpsilonMap::from_json(r#"{"mode":"general","values":{"g_1,g_2":"1/2+1/2i"}}"#).unwrap();
        assert_eq!(EpsilonMap::from_value(&g.to_value()).unwrap(), g);
        assert!(EpsilonMap::from_json(r#"{"mode":"admissible","values":{"9-2":"1"}}"#).is_err());
        assert!(EpsilonMap::from_json(r#"{"mode":"weird","values":{}}"#).is_err());
    }

    #[test]
    fn contract_rejects_invalid_maps() {
        let bad = AdmissibleMap::indicator(set("1-2,3-5"));
        assert!(matches!(contract_admissible(b3(), &bad), Err(ContractionError::NotAdmissible(_))));
        let l = contract_admissible(b3(), &AdmissibleMap::indicator(EdgeSet::ALL)).unwrap();
        for u in 0..l.dim() {
            for v in 0..l.dim() {
                assert_eq!(l.bracket_basis(u, v), b3().bracket_basis(u, v));
            }
        }
        let zero = contract_admissible(b3(), &AdmissibleMap::zero()).unwrap();
        assert!((0..zero.dim()).all(|u| (0..zero.dim()).all(|v| zero.bracket_basis(u, v).is_empty())));
    }

    #[test]
    fn merge_and_theta_condition() {
        let (theta, ok) = merge_witness(b3()).unwrap();
        assert!(ok, "θ is not an isomorphism");
        assert!(theta.is_graded(b3()));
        let (t10, t8) = merge_supports();
        assert_ne!(nicesets::orbit_key(t10), nicesets::orbit_key(t8));
        // θ_{7,4} is an automorphism of L^{ε^{T₈}} exactly when the literal condition holds
        let cond = theta_condition(&AdmissibleMap::indicator(t8), p(7), p(4));
        let l8 = contract_unchecked(b3(), &AdmissibleMap::indicator(t8));
        assert_eq!(cond, theta.is_isomorphism(&l8, &l8));
    }

    #[test]
    fn split_epsilon_is_admissible() {
        for line in Line::all() {
            let eps = split_epsilon(line);
            assert!(is_admissible(&eps));
            assert_eq!(eps.support(), EdgeSet::ALL);
            assert_eq!(eps.values().iter().filter(|v| **v == -Scalar::one()).count(), 6);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn nice_is_collineation_invariant(mask in 0u32..(1 << 21), c in 0usize..168) {
            let t = EdgeSet(mask);
            let sigma = &all_collineations()[c];
            prop_assert_eq!(is_nice(t), is_nice(sigma.act_on_set(t)));
        }

        #[test]
        fn sampled_maps_are_admissible_with_nice_support(seed in any::<u64>(), c in 0usize..24) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let t = nicesets::representative(c as u8 + 1);
            let eps = sample_admissible(t, Field::Complex, &mut rng);
            prop_assert!(is_admissible(&eps));
            prop_assert_eq!(eps.support(), t);
            prop_assert!(is_nice(eps.support()));
        }

        #[test]
        fn normalization_round_trip(seed in any::<u64>(), c in 0usize..24) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let t = nicesets::representative(c as u8 + 1);
            let eps = sample_admissible(t, Field::Real, &mut rng);
            let (nf, alpha) = find_normalization(&eps).unwrap();
            prop_assert_eq!(apply_normalization(&eps.to_roots(), &alpha).unwrap(), make_normal_form_roots(&nf).unwrap());
        }
    }
}
