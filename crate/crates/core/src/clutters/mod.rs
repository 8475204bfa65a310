//! Clutters (antichains of hyperedges) with deletion, contraction, blockers
//! and minors, plus the degenerate projective planes J_t.
//!
//! Vertices live in a fixed label space 0..labels; minors shrink the active
//! ground set but keep the labels, so deletions and contractions compose
//! without renumbering.

mod planes;

pub use planes::{
    blocking_sets, build_plane, corner_classify, fano_minor_default_config,
    ternary_augmented_clutter, ternary_augmented_has_mni_minor, triangles,
    verify_designated_sets_form_fano, verify_fano_minor_in_augmented_ternary,
    verify_fano_minor_with, zero_corner, CornerClass, FanoMinorConfig, ProjectivePlane, Triangle,
};

use crate::exactmat::RationalMatrix;
use num_traits::One;
use thiserror::Error;

/// Ground sets for exhaustive blocker enumeration are capped here.
pub const BLOCKER_GROUND_CAP: usize = 15;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClutterError {
    #[error("vertex {0} is not in the ground set")]
    NotInGround(usize),
    #[error("edge set is not an antichain")]
    NotAntichain,
    #[error("label {0} out of range")]
    BadLabel(usize),
    #[error("ground set of size {0} exceeds the enumeration cap {1}")]
    TooLarge(usize, usize),
    #[error("matrix is not 0/1")]
    NotZeroOne,
    #[error("unsupported plane order {0}")]
    UnsupportedOrder(usize),
}

/// A clutter: an active ground set inside a label space, and an antichain of
/// edges over it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Clutter {
    labels: usize,
    ground: u32,
    edges: Vec<u32>,
}

impl Clutter {
    /// Builds a clutter over ground 0..n, rejecting nested edges.
    pub fn new(n: usize, edges: &[Vec<usize>]) -> Result<Self, ClutterError> {
        if n > 32 {
            return Err(ClutterError::BadLabel(n));
        }
        let ground = full_mask(n);
        let mut masks = Vec::with_capacity(edges.len());
        for e in edges {
            let mut m = 0u32;
            for &v in e {
                if v >= n {
                    return Err(ClutterError::BadLabel(v));
                }
                m |= 1 << v;
            }
            masks.push(m);
        }
        Self::from_masks(n, ground, masks, false)
    }

    fn from_masks(
        labels: usize,
        ground: u32,
        mut edges: Vec<u32>,
        minimalise: bool,
    ) -> Result<Self, ClutterError> {
        edges.sort_unstable();
        edges.dedup();
        if minimalise {
            edges = minimal_sets(&edges);
        } else {
            for (i, &a) in edges.iter().enumerate() {
                for &b in &edges[i + 1..] {
                    if a & b == a || a & b == b {
                        return Err(ClutterError::NotAntichain);
                    }
                }
            }
        }
        Ok(Clutter { labels, ground, edges })
    }

    pub fn ground_size(&self) -> usize {
        self.ground.count_ones() as usize
    }

    pub fn ground_vertices(&self) -> Vec<usize> {
        mask_to_vec(self.ground)
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_masks(&self) -> &[u32] {
        &self.edges
    }

    pub fn edge_sets(&self) -> Vec<Vec<usize>> {
        self.edges.iter().map(|&m| mask_to_vec(m)).collect()
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        v < self.labels && self.ground >> v & 1 == 1
    }

    /// Deletion: drop every edge through v, remove v from the ground set.
    pub fn delete(&self, v: usize) -> Result<Clutter, ClutterError> {
        if !self.contains_vertex(v) {
            return Err(ClutterError::NotInGround(v));
        }
        let edges: Vec<u32> = self.edges.iter().copied().filter(|e| e >> v & 1 == 0).collect();
        Self::from_masks(self.labels, self.ground & !(1 << v), edges, false)
    }

    /// Contraction: remove v from every edge, keep the minimal results.
    pub fn contract(&self, v: usize) -> Result<Clutter, ClutterError> {
        if !self.contains_vertex(v) {
            return Err(ClutterError::NotInGround(v));
        }
        let edges: Vec<u32> = self.edges.iter().map(|e| e & !(1 << v)).collect();
        Self::from_masks(self.labels, self.ground & !(1 << v), edges, true)
    }

    /// A minor by a set of deletions then contractions (the operations
    /// commute for distinct vertices).
    pub fn minor(&self, deletes: &[usize], contracts: &[usize]) -> Result<Clutter, ClutterError> {
        let mut c = self.clone();
        for &v in deletes {
            c = c.delete(v)?;
        }
        for &v in contracts {
            c = c.contract(v)?;
        }
        Ok(c)
    }

    /// The blocker: all minimal transversals, by exhaustive enumeration over
    /// the active ground set (capped).
    pub fn blocker(&self) -> Result<Clutter, ClutterError> {
        let g = self.ground_size();
        if g > BLOCKER_GROUND_CAP {
            return Err(ClutterError::TooLarge(g, BLOCKER_GROUND_CAP));
        }
        let verts = self.ground_vertices();
        let mut transversals = Vec::new();
        'subsets: for bits in 0u32..1 << g {
            let mut s = 0u32;
            for (i, &v) in verts.iter().enumerate() {
                if bits >> i & 1 == 1 {
                    s |= 1 << v;
                }
            }
            for &e in &self.edges {
                if e & s == 0 {
                    continue 'subsets;
                }
            }
            // Minimal: every chosen vertex meets some edge only at itself.
            let mut m = s;
            while m != 0 {
                let v = m.trailing_zeros();
                m &= m - 1;
                if !self.edges.iter().any(|&e| e & s == 1 << v) {
                    continue 'subsets;
                }
            }
            transversals.push(s);
        }
        Self::from_masks(self.labels, self.ground, transversals, false)
    }

    /// The 0/1 incidence matrix over the active ground set, columns in label
    /// order.
    pub fn incidence_matrix(&self) -> RationalMatrix {
        use num_traits::{One as _, Zero as _};
        let verts = self.ground_vertices();
        RationalMatrix::from_fn(self.edges.len(), verts.len(), |i, j| {
            if self.edges[i] >> verts[j] & 1 == 1 {
                num_rational::BigRational::one()
            } else {
                num_rational::BigRational::zero()
            }
        })
    }

    /// Builds a clutter from a 0/1 clutter matrix (rows = edges).
    pub fn from_matrix(m: &RationalMatrix) -> Result<Clutter, ClutterError> {
        if !m.is_zero_one() {
            return Err(ClutterError::NotZeroOne);
        }
        let mut edges = Vec::with_capacity(m.rows());
        for i in 0..m.rows() {
            let mut mask = 0u32;
            for j in 0..m.cols() {
                if m.get(i, j).is_one() {
                    mask |= 1 << j;
                }
            }
            edges.push(mask);
        }
        Self::from_masks(m.cols(), full_mask(m.cols()), edges, false)
    }

    /// Text format: header `#vertices #edges`, then one line per edge of
    /// space-separated vertex indices (in label space).
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.labels, self.edges.len());
        for e in self.edge_sets() {
            let toks: Vec<String> = e.iter().map(usize::to_string).collect();
            out.push_str(&toks.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Clutter, ClutterError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or(ClutterError::NotAntichain)?;
        let mut hp = header.split_whitespace();
        let n: usize = hp.next().and_then(|t| t.parse().ok()).ok_or(ClutterError::BadLabel(0))?;
        let m: usize = hp.next().and_then(|t| t.parse().ok()).ok_or(ClutterError::BadLabel(0))?;
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            let verts: Result<Vec<usize>, _> = line.split_whitespace().map(str::parse).collect();
            edges.push(verts.map_err(|_| ClutterError::BadLabel(0))?);
        }
        if edges.len() != m {
            return Err(ClutterError::NotAntichain);
        }
        Self::new(n, &edges)
    }

    /// Canonical relabelling to ground 0..g, for isomorphism checks.
    fn compacted_edge_sets(&self) -> Vec<Vec<usize>> {
        let verts = self.ground_vertices();
        let pos: std::collections::HashMap<usize, usize> =
            verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        self.edge_sets()
            .into_iter()
            .map(|e| e.into_iter().map(|v| pos[&v]).collect())
            .collect()
    }
}

fn full_mask(n: usize) -> u32 {
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

fn mask_to_vec(mut m: u32) -> Vec<usize> {
    let mut v = Vec::new();
    while m != 0 {
        v.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    v
}

fn minimal_sets(sorted: &[u32]) -> Vec<u32> {
    let mut out: Vec<u32> = Vec::new();
    for &e in sorted {
        if !out.iter().any(|&kept| kept & e == kept) {
            out.retain(|&kept| kept & e != e);
            out.push(e);
        }
    }
    out.sort_unstable();
    out
}

/// The submatrix of minimum-weight rows, in input order.
pub fn core(a: &RationalMatrix) -> Result<RationalMatrix, ClutterError> {
    if !a.is_zero_one() {
        return Err(ClutterError::NotZeroOne);
    }
    let weights: Vec<usize> = (0..a.rows())
        .map(|i| (0..a.cols()).filter(|&j| a.get(i, j).is_one()).count())
        .collect();
    let min = weights.iter().copied().min().unwrap_or(0);
    let rows: Vec<Vec<_>> = (0..a.rows())
        .filter(|&i| weights[i] == min)
        .map(|i| a.row(i).to_vec())
        .collect();
    Ok(RationalMatrix::from_rows(rows))
}

/// The degenerate projective plane J_t on {0, .., t}: the edge {1..t} plus
/// the edges {0, i} for 1 <= i <= t.
pub fn build_j(t: usize) -> Clutter {
    assert!(t >= 2);
    let mut edges = vec![(1..=t).collect::<Vec<_>>()];
    for i in 1..=t {
        edges.push(vec![0, i]);
    }
    Clutter::new(t + 1, &edges).expect("J_t is an antichain")
}

/// Detects clutters isomorphic to some J_t and returns t.
pub fn is_degenerate_plane(c: &Clutter) -> Option<usize> {
    let g = c.ground_size();
    if g < 3 || c.edge_count() != g {
        return None;
    }
    let t = g - 1;
    let edges = c.compacted_edge_sets();
    // A centre vertex in t edges of size 2, plus one edge of size t avoiding
    // the centre and covering everything else.
    'candidates: for centre in 0..g {
        let mut others = Vec::new();
        let mut big = None;
        for e in &edges {
            if e.len() == 2 && e.contains(&centre) {
                others.push(*e.iter().find(|&&v| v != centre).unwrap());
            } else if e.len() == t && !e.contains(&centre) {
                if big.is_some() {
                    continue 'candidates;
                }
                big = Some(e.clone());
            } else {
                continue 'candidates;
            }
        }
        let Some(mut big) = big else { continue };
        others.sort_unstable();
        big.sort_unstable();
        if others.len() == t && others == big {
            return Some(t);
        }
    }
    None
}

/// Clutter isomorphism by backtracking over degree/membership signatures.
pub fn are_isomorphic(a: &Clutter, b: &Clutter) -> bool {
    if a.ground_size() != b.ground_size() || a.edge_count() != b.edge_count() {
        return false;
    }
    let ea = a.compacted_edge_sets();
    let eb = b.compacted_edge_sets();
    let n = a.ground_size();
    let sizes = |es: &[Vec<usize>]| {
        let mut s: Vec<usize> = es.iter().map(Vec::len).collect();
        s.sort_unstable();
        s
    };
    if sizes(&ea) != sizes(&eb) {
        return false;
    }
    // Signature: sorted multiset of sizes of edges through each vertex.
    let sig = |es: &[Vec<usize>], v: usize| {
        let mut s: Vec<usize> =
            es.iter().filter(|e| e.contains(&v)).map(Vec::len).collect();
        s.sort_unstable();
        s
    };
    let siga: Vec<_> = (0..n).map(|v| sig(&ea, v)).collect();
    let sigb: Vec<_> = (0..n).map(|v| sig(&eb, v)).collect();
    let masks_b: std::collections::BTreeSet<u32> = eb
        .iter()
        .map(|e| e.iter().fold(0u32, |m, &v| m | 1 << v))
        .collect();
    // Map vertices of a to vertices of b.
    fn rec(
        v: usize,
        n: usize,
        map: &mut Vec<usize>,
        used: &mut u32,
        siga: &[Vec<usize>],
        sigb: &[Vec<usize>],
        ea: &[Vec<usize>],
        masks_b: &std::collections::BTreeSet<u32>,
    ) -> bool {
        if v == n {
            return ea
                .iter()
                .all(|e| masks_b.contains(&e.iter().fold(0u32, |m, &x| m | 1 << map[x])));
        }
        for img in 0..n {
            if *used >> img & 1 == 1 || siga[v] != sigb[img] {
                continue;
            }
            map[v] = img;
            *used |= 1 << img;
            // Partial consistency: fully mapped edges must exist in b.
            let ok = ea.iter().all(|e| {
                if e.iter().any(|&x| x > v) {
                    return true;
                }
                masks_b.contains(&e.iter().fold(0u32, |m, &x| m | 1 << map[x]))
            });
            if ok && rec(v + 1, n, map, used, siga, sigb, ea, masks_b) {
                return true;
            }
            *used &= !(1 << img);
        }
        false
    }
    let mut map = vec![0usize; n];
    let mut used = 0u32;
    rec(0, n, &mut map, &mut used, &siga, &sigb, &ea, &masks_b)
}
