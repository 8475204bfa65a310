//! Exhaustive cataloguing: isomorph-free generation, Lehman extraction with
//! an exact integer fast path, canonical forms, and construction closure.

mod canon;
mod orderly;

pub use canon::{canonical_form, has_colour_reversing_automorphism, CanonicalForm, IsoMode};
pub use orderly::{for_each_cp_class, generate_cubic_bipartite, SearchError};

use crate::constructions::{self, ConstructionError};
use crate::exactmat::det_01_bitrows;
use crate::lehman::{certify, BipartiteGraph, LehmanCertificate, LehmanType};
use std::collections::BTreeMap;
use std::sync::Mutex;

/// A catalogue of the Lehman graphs of one type, under both equivalences.
///
/// `l_count` counts colour-blind isomorphism classes, `lp_count`
/// colour-preserving classes; each colour-blind class contributes 1 or 2 to
/// `lp_count` according to whether it has a colour-reversing automorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalogue {
    pub params: LehmanType,
    /// Canonically labelled representatives per colour-blind class, as lmx.
    pub blind_entries: Vec<String>,
    /// Representatives per colour-preserving class, as lmx.
    pub preserving_entries: Vec<String>,
    pub l_count: usize,
    pub lp_count: usize,
}

impl Catalogue {
    pub fn entries(&self, mode: IsoMode) -> &[String] {
        match mode {
            IsoMode::ColourBlind => &self.blind_entries,
            IsoMode::ColourPreserving => &self.preserving_entries,
        }
    }

    fn from_blind_classes(params: LehmanType, classes: BTreeMap<Vec<u8>, BipartiteGraph>) -> Self {
        let mut blind_entries = Vec::new();
        let mut preserving_entries = Vec::new();
        let mut lp_count = 0;
        for g in classes.values() {
            let cp = canonical_form(g, IsoMode::ColourPreserving);
            let cb = canonical_form(g, IsoMode::ColourBlind);
            blind_entries.push(cb.graph().to_lmx());
            preserving_entries.push(cp.graph().to_lmx());
            if has_colour_reversing_automorphism(g) {
                lp_count += 1;
            } else {
                preserving_entries.push(
                    canonical_form(&g.transpose(), IsoMode::ColourPreserving).graph().to_lmx(),
                );
                lp_count += 2;
            }
        }
        blind_entries.sort();
        preserving_entries.sort();
        Catalogue { params, l_count: classes.len(), blind_entries, preserving_entries, lp_count }
    }
}

fn type_for(order: usize, k: i64) -> Result<LehmanType, SearchError> {
    let n = order / 2;
    if order % 2 != 0 || (n as i64 + k) % 3 != 0 || n as i64 + k <= 0 {
        return Err(SearchError::BadOrder(order));
    }
    Ok(LehmanType { n, r: 3, s: ((n as i64 + k) / 3) as usize, k })
}

/// Integer fast path for the partner computation on cubic graphs:
/// fraction-free Gauss-Jordan on [A | J + kI] in i64 (minors of 0/1
/// matrices with column sums <= 3 stay far below overflow). Returns the
/// partner's adjacency rows when the candidate is 0/1.
fn partner_fast(g: &BipartiteGraph, k: i64) -> Option<Vec<u32>> {
    let n = g.n();
    let w = 2 * n;
    let mut m = vec![0i64; n * w];
    for i in 0..n {
        for j in 0..n {
            m[i * w + j] = i64::from(g.has_edge(i, j));
            m[i * w + n + j] = if i == j { 1 + k } else { 1 };
        }
    }
    let mut prev = 1i64;
    for col in 0..n {
        if m[col * w + col] == 0 {
            let s = (col + 1..n).find(|&i| m[i * w + col] != 0)?;
            for j in 0..w {
                m.swap(col * w + j, s * w + j);
            }
        }
        let piv = m[col * w + col];
        for i in 0..n {
            if i == col {
                continue;
            }
            let f = m[i * w + col];
            for j in 0..w {
                m[i * w + j] = (m[i * w + j] * piv - f * m[col * w + j]) / prev;
            }
        }
        prev = piv;
    }
    let p = m[(n - 1) * w + (n - 1)];
    debug_assert!(m.iter().step_by(w + 1).take(n).all(|&d| d == p));
    let mut rows = vec![0u32; n];
    for c in 0..n {
        for i in 0..n {
            let v = m[i * w + n + c];
            if v == p {
                rows[c] |= 1 << i;
            } else if v != 0 {
                return None;
            }
        }
    }
    Some(rows)
}

fn certify_with_fast_path(g: &BipartiteGraph, k: i64) -> Option<LehmanCertificate> {
    if (k == 1 || k == -1) && g.is_cubic() {
        // |det A| = 3 is necessary for a cubic Lehman matrix with |k| = 1:
        // det(A)det(B) = k^(n-1)(n+k) with 3 | det(A) and s | det(B).
        if det_01_bitrows(g.adj_rows()).abs() != 3 {
            return None;
        }
        partner_fast(g, k)?;
    }
    certify(g, k)
}

/// Certifies every graph of a colour-blind representative stream at `k` and
/// assembles the catalogue with both class counts.
pub fn extract_lehman(graphs: &[BipartiteGraph], k: i64) -> Result<Catalogue, SearchError> {
    let order = graphs.first().map_or(6, |g| 2 * g.n());
    let params = type_for(order, k)?;
    let mut classes = BTreeMap::new();
    for g in graphs {
        if certify_with_fast_path(g, k).is_some() {
            classes.insert(canonical_form(g, IsoMode::ColourBlind).bytes(), g.clone());
        }
    }
    Ok(Catalogue::from_blind_classes(params, classes))
}

/// Generates order-`order` graphs and extracts the Lehman catalogue at `k`
/// in one parallel pass. Equivalent to `extract_lehman` over
/// `generate_cubic_bipartite(order, prune)` but certifies before any
/// canonical form is computed, which is what makes the large orders cheap.
pub fn lehman_catalogue(order: usize, k: i64, prune: bool) -> Result<Catalogue, SearchError> {
    let params = type_for(order, k)?;
    let found: Mutex<Vec<BipartiteGraph>> = Mutex::new(Vec::new());
    for_each_cp_class(order, prune, |g| {
        if certify_with_fast_path(g, k).is_some() {
            found.lock().unwrap().push(g.clone());
        }
    })?;
    let certified = found.into_inner().unwrap();
    let lp_count = certified.len();
    let mut classes = BTreeMap::new();
    for g in certified {
        classes.insert(canonical_form(&g, IsoMode::ColourBlind).bytes(), g);
    }
    let cat = Catalogue::from_blind_classes(params, classes);
    // Each colour-blind class was visited once per colour-preserving class.
    debug_assert_eq!(cat.lp_count, lp_count);
    Ok(cat)
}

/// Ladder-insertion closure: starting from certified base graphs at `k`,
/// repeatedly inserts 3-rung ladder segments across every expandable pair,
/// deduplicating by colour-blind canonical form level by level, up to
/// `max_2n` vertices. Returns one catalogue per order reached.
pub fn closure_generate(
    bases: &[BipartiteGraph],
    max_2n: usize,
    k: i64,
) -> Result<Vec<Catalogue>, SearchError> {
    let mut levels: BTreeMap<usize, BTreeMap<Vec<u8>, BipartiteGraph>> = BTreeMap::new();
    for g in bases {
        if certify(g, k).is_none() {
            return Err(SearchError::BaseNotLehman(k));
        }
        if 2 * g.n() > max_2n {
            continue;
        }
        levels
            .entry(g.n())
            .or_default()
            .insert(canonical_form(g, IsoMode::ColourBlind).bytes(), g.clone());
    }
    let mut done: Vec<Catalogue> = Vec::new();
    while let Some((&n, _)) = levels.iter().next() {
        let class_map = levels.remove(&n).unwrap();
        if 2 * (n + 3) <= max_2n {
            for g in class_map.values() {
                let cert = certify(g, k).expect("level graphs are certified");
                for pair in constructions::expandable_pairs(g, &cert)
                    .expect("cubic certified graph")
                {
                    let h = constructions::ladder_insert(g, &cert, &pair)
                        .expect("pair satisfies the sufficient conditions");
                    debug_assert!(certify(&h, k).is_some());
                    levels
                        .entry(h.n())
                        .or_default()
                        .insert(canonical_form(&h, IsoMode::ColourBlind).bytes(), h);
                }
            }
        }
        let params = type_for(2 * n, k)?;
        done.push(Catalogue::from_blind_classes(params, class_map));
    }
    Ok(done)
}

/// All biclique expansions of a certified graph, deduplicated by colour-blind
/// canonical form: every perfect matching for k = -1, the rungs alone for
/// cubic k = 1.
pub fn all_biclique_expansions(
    g: &BipartiteGraph,
    cert: &LehmanCertificate,
) -> Result<Vec<BipartiteGraph>, ConstructionError> {
    let matchings: Vec<Vec<(usize, usize)>> = match cert.ty.k {
        -1 => constructions::perfect_matchings(g),
        1 => vec![crate::lehman::rungs(g, cert).ok_or(ConstructionError::NotCubic)?],
        k => return Err(ConstructionError::UnsupportedParameters { r: cert.ty.r, k }),
    };
    let mut classes = BTreeMap::new();
    for m in matchings {
        let h = constructions::biclique_expand(g, cert, &m)?;
        classes.insert(canonical_form(&h, IsoMode::ColourBlind).bytes(), h);
    }
    Ok(classes.into_values().collect())
}
