//! Enumeration of the nice sets, their collineation orbits and the 24
//! representatives `T₁ … T₂₄`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::contraction::{is_nice, ContractionError};
use crate::fano::{
    all_collineations, apex_set, edge_permutations, line_complement_set, line_set, p, p_set, permute_mask,
    star_set, t_set, Collineation, EdgeSet, FanoIndex, Line,
};

fn edges(text: &str) -> EdgeSet {
    text.parse().expect("static edge list")
}

/// `T_id` for `id ∈ 1..=24`.
pub fn representative(id: u8) -> EdgeSet {
    representatives()[id as usize - 1]
}

pub fn representatives() -> &'static [EdgeSet; 24] {
    static R: OnceLock<[EdgeSet; 24]> = OnceLock::new();
    R.get_or_init(|| {
        let l12 = Line::through(p(1), p(2));
        [
            EdgeSet::EMPTY,
            edges("1-2"),
            edges("1-2,1-3"),
            edges("1-2,1-5"),
            edges("1-2,6-7"),
            edges("1-2,1-5,2-5"),
            edges("2-5,3-6,4-7"),
            edges("1-2,1-3,1-4"),
            edges("1-2,1-3,1-5"),
            edges("1-2,1-3,1-7"),
            edges("1-2,1-6,2-6"),
            edges("1-2,1-6,6-7"),
            edges("1-2,1-3,1-4,1-5"),
            edges("1-2,1-3,1-5,1-6"),
            edges("1-2,1-6,1-7,2-6"),
            edges("1-2,1-6,2-7,6-7"),
            edges("1-2,1-3,1-4,1-5,1-6"),
            edges("1-2,1-6,1-7,2-6,2-7"),
            line_complement_set(l12),
            star_set(p(1)),
            p_set(p(1), p(2), p(3)).unwrap(),
            t_set(p(1), p(2), p(3)).unwrap(),
            EdgeSet::ALL.minus(line_complement_set(l12)),
            EdgeSet::ALL,
        ]
    })
}

/// Strategy A: every mask in `[0, 2²¹)` filtered by the closure predicate, in parallel.
pub fn enumerate_brute_force() -> Vec<EdgeSet> {
    const CHUNK: u32 = 1 << 14;
    let mut out: Vec<EdgeSet> = (0..(1u32 << 21) / CHUNK)
        .into_par_iter()
        .flat_map_iter(|c| (c * CHUNK..(c + 1) * CHUNK).map(EdgeSet).filter(|t| is_nice(*t)))
        .collect();
    out.sort();
    out
}

/// Strategy A on one thread.
pub fn enumerate_brute_force_serial() -> Vec<EdgeSet> {
    (0..1u32 << 21).map(EdgeSet).filter(|t| is_nice(*t)).collect()
}

/// Strategy B: the theorem's list, deduplicated.
pub fn enumerate_constructive() -> Vec<EdgeSet> {
    let mut out = BTreeSet::new();
    out.insert(EdgeSet::ALL);
    for line in Line::all() {
        let comp = line_complement_set(line);
        out.insert(EdgeSet::ALL.minus(comp));
        out.extend(line_set(line).subsets());
        out.extend(comp.subsets());
    }
    for i in FanoIndex::all() {
        out.insert(apex_set(i));
        out.extend(star_set(i).subsets());
        for j in FanoIndex::all() {
            for k in FanoIndex::all() {
                if let Ok(s) = p_set(i, j, k) {
                    out.insert(s);
                    out.insert(t_set(i, j, k).unwrap());
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Canonical orbit key: the least mask in the orbit.
pub fn orbit_key(t: EdgeSet) -> EdgeSet {
    EdgeSet(edge_permutations().iter().map(|tab| permute_mask(tab, t.0)).min().unwrap())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    pub key: EdgeSet,
    pub class_id: u8,
    pub members: Vec<EdgeSet>,
}

fn rep_ids() -> &'static HashMap<EdgeSet, u8> {
    static M: OnceLock<HashMap<EdgeSet, u8>> = OnceLock::new();
    M.get_or_init(|| representatives().iter().enumerate().map(|(n, t)| (*t, n as u8 + 1)).collect())
}

fn key_ids() -> &'static HashMap<EdgeSet, u8> {
    static M: OnceLock<HashMap<EdgeSet, u8>> = OnceLock::new();
    M.get_or_init(|| representatives().iter().enumerate().map(|(n, t)| (orbit_key(*t), n as u8 + 1)).collect())
}

/// Orbits under the 168 collineations, sorted by class id.
/// Orbits holding no representative get class id 0.
pub fn orbit_partition(sets: &[EdgeSet]) -> Vec<Orbit> {
    let mut groups: BTreeMap<EdgeSet, Vec<EdgeSet>> = BTreeMap::new();
    for &t in sets {
        groups.entry(orbit_key(t)).or_default().push(t);
    }
    let mut out: Vec<Orbit> = groups
        .into_iter()
        .map(|(key, members)| Orbit { key, class_id: key_ids().get(&key).copied().unwrap_or(0), members })
        .collect();
    out.sort_by_key(|o| (o.class_id, o.key));
    out
}

/// The unique `id` with `σ(T) = T_id`, and the first such `σ`.
pub fn match_representative(t: EdgeSet) -> Result<(u8, Collineation), ContractionError> {
    if !is_nice(t) {
        return Err(ContractionError::NotNice(t.to_string()));
    }
    let ids = rep_ids();
    for (sigma, tab) in all_collineations().iter().zip(edge_permutations()) {
        if let Some(&id) = ids.get(&EdgeSet(permute_mask(tab, t.0))) {
            return Ok((id, *sigma));
        }
    }
    Err(ContractionError::NotNice(t.to_string()))
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusEntry {
    pub mask: String,
    pub orbit: String,
    pub orbit_size: usize,
}

#[derive(Clone, Debug)]
pub struct NiceCensus {
    pub sets: Vec<EdgeSet>,
    pub orbits: Vec<Orbit>,
}

impl NiceCensus {
    /// Runs both enumerations and partitions the result.
    /// Panics if the strategies disagree.
    pub fn compute() -> Self {
        let sets = enumerate_brute_force();
        assert_eq!(sets, enumerate_constructive(), "nice-set enumerations disagree");
        let orbits = orbit_partition(&sets);
        NiceCensus { sets, orbits }
    }

    pub fn orbit_sizes(&self) -> Vec<(u8, usize)> {
        self.orbits.iter().map(|o| (o.class_id, o.members.len())).collect()
    }

    pub fn entries(&self) -> Vec<CensusEntry> {
        let mut out: Vec<CensusEntry> = self
            .orbits
            .iter()
            .flat_map(|o| {
                o.members.iter().map(move |t| CensusEntry {
                    mask: t.to_string(),
                    orbit: format!("T{}", o.class_id),
                    orbit_size: o.members.len(),
                })
            })
            .collect();
        out.sort_by(|a, b| a.mask.cmp(&b.mask));
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.entries()).expect("census serializes")
    }
}
