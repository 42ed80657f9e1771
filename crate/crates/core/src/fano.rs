//! Fano-plane combinatorics: points `I = {1..7}`, the oriented lines, the
//! third-point operation `i∗j`, the Z₂³ labels, the 21 edges and the 168
//! collineations.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FanoError {
    #[error("index {0} is not a Fano point (expected 1..=7)")]
    BadIndex(u8),
    #[error("indices must be distinct, got {0} twice")]
    Repeated(u8),
    #[error("{k} lies on the line through {i} and {j}")]
    Collinear { i: u8, j: u8, k: u8 },
    #[error("cannot parse edge `{0}`")]
    ParseEdge(String),
}

/// Oriented lines: for `(i, j, k)` listed here, `e_i e_j = e_k` and cyclically.
pub const ORIENTED_LINES: [[u8; 3]; 7] =
    [[1, 2, 5], [5, 6, 7], [7, 4, 1], [1, 3, 6], [6, 4, 2], [2, 7, 3], [3, 4, 5]];

/// Z₂³ labels `g_0 … g_7`, bits `(b₁, b₂, b₃)` packed as `b₁ | b₂<<1 | b₃<<2`.
const LABELS: [u8; 8] = [0b000, 0b001, 0b010, 0b100, 0b111, 0b011, 0b101, 0b110];

/// A point of the Fano plane.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FanoIndex(u8);

impl FanoIndex {
    pub fn new(value: u8) -> Result<Self, FanoError> {
        if (1..=7).contains(&value) {
            Ok(FanoIndex(value))
        } else {
            Err(FanoError::BadIndex(value))
        }
    }

    pub fn get(self) -> u8 {
        self.0
    }

    /// Zero-based slot, handy for array indexing.
    pub fn slot(self) -> usize {
        self.0 as usize - 1
    }

    pub fn from_slot(slot: usize) -> Self {
        FanoIndex(slot as u8 + 1)
    }

    pub fn all() -> impl Iterator<Item = FanoIndex> {
        (1..=7).map(FanoIndex)
    }
}

impl fmt::Debug for FanoIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for FanoIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Shorthand used pervasively in tests and tables. Panics outside `1..=7`.
pub fn p(i: u8) -> FanoIndex {
    FanoIndex::new(i).expect("Fano point")
}

struct Tables {
    star: [[u8; 8]; 8],
    precedes: [[bool; 8]; 8],
    edges: [Edge; 21],
    edge_bit: [[u8; 8]; 8],
}

fn tables() -> &'static Tables {
    static T: OnceLock<Tables> = OnceLock::new();
    T.get_or_init(|| {
        let mut star = [[0u8; 8]; 8];
        let mut precedes = [[false; 8]; 8];
        for [a, b, c] in ORIENTED_LINES {
            for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                star[x as usize][y as usize] = z;
                star[y as usize][x as usize] = z;
                precedes[x as usize][y as usize] = true;
            }
        }
        let mut edges = [Edge { lo: 1, hi: 2 }; 21];
        let mut edge_bit = [[u8::MAX; 8]; 8];
        let mut n = 0;
        for i in 1..=7u8 {
            for j in i + 1..=7 {
                edges[n] = Edge { lo: i, hi: j };
                edge_bit[i as usize][j as usize] = n as u8;
                edge_bit[j as usize][i as usize] = n as u8;
                n += 1;
            }
        }
        Tables { star, precedes, edges, edge_bit }
    })
}

fn distinct(i: FanoIndex, j: FanoIndex) -> Result<(), FanoError> {
    if i == j {
        Err(FanoError::Repeated(i.0))
    } else {
        Ok(())
    }
}

/// Third point on the line through `i` and `j`.
pub fn star(i: FanoIndex, j: FanoIndex) -> Result<FanoIndex, FanoError> {
    distinct(i, j)?;
    Ok(FanoIndex(tables().star[i.0 as usize][j.0 as usize]))
}

/// `i ≺ j` iff `e_i e_j = +e_{i∗j}`.
pub fn precedes(i: FanoIndex, j: FanoIndex) -> Result<bool, FanoError> {
    distinct(i, j)?;
    Ok(tables().precedes[i.0 as usize][j.0 as usize])
}

// Infallible versions for internal loops over known-distinct indices.
pub(crate) fn star_of(i: FanoIndex, j: FanoIndex) -> FanoIndex {
    debug_assert_ne!(i, j);
    FanoIndex(tables().star[i.0 as usize][j.0 as usize])
}

pub(crate) fn prec(i: FanoIndex, j: FanoIndex) -> bool {
    tables().precedes[i.0 as usize][j.0 as usize]
}

/// Element of Z₂³.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(u8);

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement(0);

    pub fn from_bits(b1: u8, b2: u8, b3: u8) -> Self {
        GroupElement((b1 & 1) | (b2 & 1) << 1 | (b3 & 1) << 2)
    }

    pub fn bits(self) -> (u8, u8, u8) {
        (self.0 & 1, self.0 >> 1 & 1, self.0 >> 2 & 1)
    }

    pub fn add(self, other: GroupElement) -> GroupElement {
        GroupElement(self.0 ^ other.0)
    }

    pub fn is_identity(self) -> bool {
        self.0 == 0
    }

    pub fn all() -> impl Iterator<Item = GroupElement> {
        (0..8).map(GroupElement)
    }

    /// The label index `i` with `g_i = self`.
    pub fn label_index(self) -> u8 {
        LABELS.iter().position(|&l| l == self.0).unwrap() as u8
    }

    /// The Fano point labelled by `self`, `None` for the identity.
    pub fn point(self) -> Option<FanoIndex> {
        match self.label_index() {
            0 => None,
            i => Some(FanoIndex(i)),
        }
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b, c) = self.bits();
        write!(f, "({a},{b},{c})")
    }
}

/// `g_i` for `i ∈ {0} ∪ I`.
pub fn group_label(i: u8) -> Result<GroupElement, FanoError> {
    LABELS.get(i as usize).map(|&b| GroupElement(b)).ok_or(FanoError::BadIndex(i))
}

pub fn label(i: FanoIndex) -> GroupElement {
    GroupElement(LABELS[i.0 as usize])
}

/// An unordered pair `{i, j}` of distinct points.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    lo: u8,
    hi: u8,
}

impl Edge {
    pub fn new(i: FanoIndex, j: FanoIndex) -> Result<Self, FanoError> {
        distinct(i, j)?;
        Ok(Edge { lo: i.0.min(j.0), hi: i.0.max(j.0) })
    }

    pub(crate) fn of(i: FanoIndex, j: FanoIndex) -> Self {
        debug_assert_ne!(i, j);
        Edge { lo: i.0.min(j.0), hi: i.0.max(j.0) }
    }

    pub fn ends(self) -> (FanoIndex, FanoIndex) {
        (FanoIndex(self.lo), FanoIndex(self.hi))
    }

    /// Bit position 0..21 in lexicographic order of `(i, j)`.
    pub fn bit(self) -> usize {
        tables().edge_bit[self.lo as usize][self.hi as usize] as usize
    }

    pub fn from_bit(bit: usize) -> Self {
        tables().edges[bit]
    }

    pub fn all() -> impl Iterator<Item = Edge> {
        tables().edges.iter().copied()
    }

    pub fn contains(self, i: FanoIndex) -> bool {
        self.lo == i.0 || self.hi == i.0
    }

    /// Third point of the line through this edge.
    pub fn apex(self) -> FanoIndex {
        star_of(FanoIndex(self.lo), FanoIndex(self.hi))
    }

    pub fn line(self) -> Line {
        Line::through(FanoIndex(self.lo), FanoIndex(self.hi))
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.lo, self.hi)
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.lo, self.hi)
    }
}

impl FromStr for Edge {
    type Err = FanoError;
    fn from_str(s: &str) -> Result<Self, FanoError> {
        let bad = || FanoError::ParseEdge(s.to_string());
        let (a, b) = s.trim().split_once('-').ok_or_else(bad)?;
        let a: u8 = a.trim().parse().map_err(|_| bad())?;
        let b: u8 = b.trim().parse().map_err(|_| bad())?;
        let (a, b) = (FanoIndex::new(a)?, FanoIndex::new(b)?);
        if a.0 >= b.0 {
            return Err(bad());
        }
        Edge::new(a, b)
    }
}

/// A line of the plane, stored as its oriented representative from [`ORIENTED_LINES`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Line {
    oriented: [u8; 3],
}

impl Line {
    pub fn through(i: FanoIndex, j: FanoIndex) -> Line {
        let k = star_of(i, j);
        let line = ORIENTED_LINES
            .iter()
            .find(|l| l.contains(&i.0) && l.contains(&j.0) && l.contains(&k.0))
            .expect("every pair lies on a line");
        Line { oriented: *line }
    }

    pub fn all() -> impl Iterator<Item = Line> {
        ORIENTED_LINES.iter().map(|&oriented| Line { oriented })
    }

    pub fn oriented(self) -> [FanoIndex; 3] {
        self.oriented.map(FanoIndex)
    }

    pub fn points(self) -> [FanoIndex; 3] {
        let mut pts = self.oriented;
        pts.sort_unstable();
        pts.map(FanoIndex)
    }

    pub fn contains(self, i: FanoIndex) -> bool {
        self.oriented.contains(&i.0)
    }

    pub fn mask(self) -> EdgeSet {
        let [a, b, c] = self.oriented();
        EdgeSet::from_edges([Edge::of(a, b), Edge::of(b, c), Edge::of(a, c)])
    }
}

/// Subset of the 21 edges as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct EdgeSet(pub u32);

impl EdgeSet {
    pub const EMPTY: EdgeSet = EdgeSet(0);
    pub const ALL: EdgeSet = EdgeSet((1 << 21) - 1);

    pub fn from_edges(edges: impl IntoIterator<Item = Edge>) -> Self {
        EdgeSet(edges.into_iter().fold(0, |m, e| m | 1 << e.bit()))
    }

    pub fn contains(self, e: Edge) -> bool {
        self.0 >> e.bit() & 1 == 1
    }

    pub fn insert(&mut self, e: Edge) {
        self.0 |= 1 << e.bit();
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, o: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 | o.0)
    }

    pub fn minus(self, o: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 & !o.0)
    }

    pub fn is_subset(self, o: EdgeSet) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn edges(self) -> impl Iterator<Item = Edge> {
        (0..21).filter(move |b| self.0 >> b & 1 == 1).map(Edge::from_bit)
    }

    /// All subsets of this set.
    pub fn subsets(self) -> impl Iterator<Item = EdgeSet> {
        // standard submask walk, including the empty set
        let full = self.0;
        let mut next = Some(full);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == 0 { None } else { Some((cur - 1) & full) };
            Some(EdgeSet(cur))
        })
    }
}

impl fmt::Display for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.edges().map(|e| e.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.edges().map(|e| format!("{e:?}")).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl FromStr for EdgeSet {
    type Err = FanoError;
    /// Comma-separated `i-j` list; the empty string is the empty set.
    fn from_str(s: &str) -> Result<Self, FanoError> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(EdgeSet::EMPTY);
        }
        s.split(',').map(str::parse::<Edge>).collect::<Result<Vec<_>, _>>().map(EdgeSet::from_edges)
    }
}

/// Requires `i ≠ j` and `k ∉ ℓ_ij`.
pub fn check_generic_triple(i: FanoIndex, j: FanoIndex, k: FanoIndex) -> Result<(), FanoError> {
    distinct(i, j)?;
    if k == i || k == j || k == star_of(i, j) {
        return Err(FanoError::Collinear { i: i.0, j: j.0, k: k.0 });
    }
    Ok(())
}

/// `X_ℓ`: the three edges inside a line.
pub fn line_set(line: Line) -> EdgeSet {
    line.mask()
}

/// `X_{ℓᶜ}`: the six edges disjoint from a line.
pub fn line_complement_set(line: Line) -> EdgeSet {
    EdgeSet::from_edges(Edge::all().filter(|e| {
        let (a, b) = e.ends();
        !line.contains(a) && !line.contains(b)
    }))
}

/// `X_{(i)}`: the six edges through `i`.
pub fn star_set(i: FanoIndex) -> EdgeSet {
    EdgeSet::from_edges(Edge::all().filter(|e| e.contains(i)))
}

/// `X^{(i)}`: the three edges `{j, k}` with `j∗k = i`.
pub fn apex_set(i: FanoIndex) -> EdgeSet {
    EdgeSet::from_edges(Edge::all().filter(|e| e.apex() == i))
}

/// `P_{{i,j,k}}` for `k ∉ ℓ_ij`.
pub fn p_set(i: FanoIndex, j: FanoIndex, k: FanoIndex) -> Result<EdgeSet, FanoError> {
    check_generic_triple(i, j, k)?;
    Ok(EdgeSet::from_edges([
        Edge::of(i, j),
        Edge::of(j, k),
        Edge::of(k, i),
        Edge::of(i, star_of(j, k)),
        Edge::of(j, star_of(k, i)),
        Edge::of(k, star_of(i, j)),
    ]))
}

/// `T_{ijk}`: `P_{{i,j,k}}` together with four edges around `i`; ten edges in all.
pub fn t_set(i: FanoIndex, j: FanoIndex, k: FanoIndex) -> Result<EdgeSet, FanoError> {
    let base = p_set(i, j, k)?;
    let ij = star_of(i, j);
    let ik = star_of(i, k);
    let ijk = star_of(i, star_of(j, k));
    Ok(base.union(EdgeSet::from_edges([
        Edge::of(i, ij),
        Edge::of(i, ik),
        Edge::of(ij, ik),
        Edge::of(i, ijk),
    ])))
}

/// A line-preserving permutation of the points, stored as images of `1..=7`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Collineation {
    image: [u8; 7],
}

impl Collineation {
    pub fn identity() -> Self {
        Collineation { image: [1, 2, 3, 4, 5, 6, 7] }
    }

    /// Validates that `images[i-1] = σ(i)` is a collineation.
    pub fn from_images(images: [u8; 7]) -> Option<Self> {
        let mut seen = [false; 8];
        for &v in &images {
            if !(1..=7).contains(&v) || seen[v as usize] {
                return None;
            }
            seen[v as usize] = true;
        }
        let c = Collineation { image: images };
        c.preserves_lines().then_some(c)
    }

    fn preserves_lines(&self) -> bool {
        FanoIndex::all().all(|i| {
            FanoIndex::all()
                .filter(|&j| j != i)
                .all(|j| self.apply(star_of(i, j)) == star_of(self.apply(i), self.apply(j)))
        })
    }

    pub fn apply(&self, i: FanoIndex) -> FanoIndex {
        FanoIndex(self.image[i.slot()])
    }

    pub fn images(&self) -> [u8; 7] {
        self.image
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Collineation) -> Collineation {
        let mut image = [0u8; 7];
        for i in FanoIndex::all() {
            image[i.slot()] = self.apply(other.apply(i)).0;
        }
        Collineation { image }
    }

    pub fn inverse(&self) -> Collineation {
        let mut image = [0u8; 7];
        for i in FanoIndex::all() {
            image[self.apply(i).slot()] = i.0;
        }
        Collineation { image }
    }

    /// The induced automorphism of Z₂³: `g_i ↦ g_{σ(i)}`, `e ↦ e`.
    pub fn act_on_group(&self, g: GroupElement) -> GroupElement {
        match g.point() {
            None => g,
            Some(i) => label(self.apply(i)),
        }
    }

    pub fn act_on_edge(&self, e: Edge) -> Edge {
        let (a, b) = e.ends();
        Edge::of(self.apply(a), self.apply(b))
    }

    pub fn act_on_set(&self, s: EdgeSet) -> EdgeSet {
        EdgeSet::from_edges(s.edges().map(|e| self.act_on_edge(e)))
    }
}

impl fmt::Debug for Collineation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "σ{:?}", self.image)
    }
}

/// All 168 collineations, found by filtering the 5040 permutations of `I`.
pub fn all_collineations() -> &'static [Collineation] {
    static ALL: OnceLock<Vec<Collineation>> = OnceLock::new();
    ALL.get_or_init(|| {
        let mut out = Vec::new();
        let mut perm = [1u8, 2, 3, 4, 5, 6, 7];
        permute(&mut perm, 0, &mut out);
        out.sort();
        out
    })
}

fn permute(perm: &mut [u8; 7], k: usize, out: &mut Vec<Collineation>) {
    if k == perm.len() {
        if let Some(c) = Collineation::from_images(*perm) {
            out.push(c);
        }
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, out);
        perm.swap(k, i);
    }
}

/// Each collineation's action as a permutation of edge bits (`table[c][bit] = image bit`).
pub fn edge_permutations() -> &'static [[u8; 21]] {
    static T: OnceLock<Vec<[u8; 21]>> = OnceLock::new();
    T.get_or_init(|| {
        all_collineations()
            .iter()
            .map(|c| {
                let mut row = [0u8; 21];
                for e in Edge::all() {
                    row[e.bit()] = c.act_on_edge(e).bit() as u8;
                }
                row
            })
            .collect()
    })
}

pub(crate) fn permute_mask(table: &[u8; 21], mask: u32) -> u32 {
    let mut out = 0;
    let mut m = mask;
    while m != 0 {
        let b = m.trailing_zeros() as usize;
        out |= 1 << table[b];
        m &= m - 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_examples() {
        assert_eq!(star(p(1), p(2)).unwrap(), p(5));
        assert_eq!(star(p(6), p(7)).unwrap(), p(5));
        assert!(star(p(3), p(3)).is_err());
        for i in FanoIndex::all() {
            for j in FanoIndex::all().filter(|&j| j != i) {
                assert_eq!(star(i, j), star(j, i));
                assert_eq!(star_of(i, star_of(i, j)), j);
            }
        }
    }

    #[test]
    fn orientation_is_a_tournament() {
        assert!(precedes(p(1), p(2)).unwrap());
        assert!(!precedes(p(2), p(1)).unwrap());
        assert!(precedes(p(3), p(4)).unwrap());
        assert!(precedes(p(2), p(2)).is_err());
        for i in FanoIndex::all() {
            for j in FanoIndex::all().filter(|&j| j != i) {
                assert_ne!(prec(i, j), prec(j, i));
            }
        }
    }

    #[test]
    fn labels_are_an_isomorphism() {
        assert_eq!(group_label(1).unwrap(), GroupElement::from_bits(1, 0, 0));
        assert_eq!(group_label(0).unwrap(), GroupElement::IDENTITY);
        assert_eq!(group_label(4).unwrap(), GroupElement::from_bits(1, 1, 1));
        assert_eq!(label(p(1)).add(label(p(2))), GroupElement::from_bits(1, 1, 0));
        assert_eq!(label(p(1)).add(label(p(2))), label(p(5)));
        for i in FanoIndex::all() {
            for j in FanoIndex::all().filter(|&j| j != i) {
                assert_eq!(label(i).add(label(j)), label(star_of(i, j)));
            }
            assert_eq!(label(i).point(), Some(i));
        }
        assert!(group_label(8).is_err());
    }

    #[test]
    fn incidence_counts() {
        assert_eq!(Line::all().count(), 7);
        for e in Edge::all() {
            assert_eq!(Line::all().filter(|l| l.mask().contains(e)).count(), 1);
        }
        for i in FanoIndex::all() {
            assert_eq!(Line::all().filter(|l| l.contains(i)).count(), 3);
        }
        assert_eq!(Edge::all().count(), 21);
    }

    #[test]
    fn special_set_examples() {
        assert_eq!(apex_set(p(1)), "2-5,3-6,4-7".parse().unwrap());
        assert_eq!(line_set(Line::through(p(1), p(2))), "1-2,1-5,2-5".parse().unwrap());
        assert_eq!(t_set(p(1), p(2), p(3)).unwrap().len(), 10);
        assert_eq!(p_set(p(1), p(2), p(3)).unwrap(), "1-2,1-3,1-7,2-3,2-6,3-5".parse().unwrap());
        assert_eq!(line_complement_set(Line::through(p(1), p(2))).len(), 6);
        assert_eq!(star_set(p(4)).len(), 6);
        assert!(p_set(p(1), p(2), p(5)).is_err());
        assert!(t_set(p(1), p(1), p(3)).is_err());
    }

    #[test]
    fn collineation_group() {
        let all = all_collineations();
        assert_eq!(all.len(), 168);
        assert!(all.contains(&Collineation::identity()));
        for a in all.iter().step_by(7) {
            assert!(all.contains(&a.inverse()));
            for b in all.iter().step_by(5) {
                assert!(all.contains(&a.compose(b)));
            }
        }
        let line = Line::through(p(1), p(2));
        let stab = all.iter().filter(|c| c.act_on_set(line.mask()) == line.mask()).count();
        assert_eq!(stab, 24);
    }

    #[test]
    fn collineations_act_on_edges() {
        for c in all_collineations() {
            assert_eq!(c.act_on_set(EdgeSet::ALL), EdgeSet::ALL);
            for i in FanoIndex::all() {
                assert_eq!(c.act_on_set(star_set(i)), star_set(c.apply(i)));
            }
            // induced map on Z₂³ is additive
            for g in GroupElement::all() {
                for h in GroupElement::all() {
                    assert_eq!(c.act_on_group(g.add(h)), c.act_on_group(g).add(c.act_on_group(h)));
                }
            }
        }
        let e: Edge = "1-2".parse().unwrap();
        assert_eq!(Collineation::identity().act_on_edge(e), e);
    }

    #[test]
    fn edge_text_forms() {
        assert!("9-2".parse::<Edge>().is_err());
        assert!("2-1".parse::<Edge>().is_err());
        assert!("3".parse::<Edge>().is_err());
        let s: EdgeSet = "1-2,1-5,2-5".parse().unwrap();
        assert_eq!(s.to_string(), "1-2,1-5,2-5");
        assert_eq!("".parse::<EdgeSet>().unwrap(), EdgeSet::EMPTY);
        assert_eq!(EdgeSet("1-2,3-4".parse::<EdgeSet>().unwrap().0).subsets().count(), 4);
    }
}
