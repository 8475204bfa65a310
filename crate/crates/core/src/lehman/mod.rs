//! Lehman pair verification: partner computation, mates, certificates and
//! the auxiliary graph / rung decomposition.
//!
//! A pair (A,B) of square 0/1 matrices is a Lehman pair when
//! `A B^T = J + kI` for some integer k in {-1, 1, 2, ...}. The partner of a
//! nonsingular A at a given k is forced: `B = (A^{-1}(J + kI))^T`, so
//! verification reduces to an exact solve followed by 0/1 and counting
//! checks. Mates are the rows of B; comates its columns.

mod graph;

pub use graph::{BipartiteGraph, GraphError, MAX_N};

use crate::exactmat::{rat, RationalMatrix};
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LehmanError {
    #[error("graph is not regular")]
    NotRegular,
    #[error("k = {0} is outside {{-1, 1, 2, ...}}")]
    BadK(i64),
    #[error("(A, B) is not a Lehman pair")]
    NotLehmanPair,
}

/// Parameters of a Lehman matrix: order n, degree r, partner degree s,
/// and k = rs - n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct LehmanType {
    pub n: usize,
    pub r: usize,
    pub s: usize,
    pub k: i64,
}

impl std::fmt::Display for LehmanType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{}) k={}", self.n, self.r, self.s, self.k)
    }
}

/// Outcome of a mate computation for one vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MateOutcome {
    /// The unique solution exists and is a 0/1 vector; the mask holds it.
    Mate(u32),
    /// The solve succeeded but some coordinate is not 0 or 1.
    NotZeroOne,
    /// The adjacency matrix is singular, so no unique solution exists.
    NoUniqueSolution,
}

impl MateOutcome {
    pub fn as_set(self) -> Option<u32> {
        match self {
            MateOutcome::Mate(m) => Some(m),
            _ => None,
        }
    }
}

/// A verified Lehman certificate: the partner matrix, the parameters, and
/// the mate of every vertex on both sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LehmanCertificate {
    pub partner: BipartiteGraph,
    pub ty: LehmanType,
    /// `mates[b]` = white-vertex set dominating b exactly k+1 times and every
    /// other black vertex once; row b of the partner.
    pub mates: Vec<u32>,
    /// `comates[w]` = black-vertex set, column w of the partner.
    pub comates: Vec<u32>,
}

/// Auxiliary decomposition of a Lehman pair: the support of the Hadamard
/// product, plus (for cubic pairs with k = 1) the complementary perfect
/// matching of rungs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuxiliaryDecomposition {
    /// Row masks of A o B; a (k+1)-regular 0/1 matrix.
    pub aux_rows: Vec<u32>,
    /// Edges of A outside the auxiliary graph, defined only when r = 3 and
    /// k = 1, in which case they form a perfect matching.
    pub rungs: Option<Vec<(usize, usize)>>,
}

fn popcnt(x: u32) -> i64 {
    i64::from(x.count_ones())
}

/// Checks `A B^T = J + kI` by direct counting and returns k on success.
pub fn is_lehman_pair(a: &BipartiteGraph, b: &BipartiteGraph) -> Option<i64> {
    if a.n() != b.n() || a.n() == 0 {
        return None;
    }
    let n = a.n();
    let k = popcnt(a.row(0) & b.row(0)) - 1;
    if k == 0 || k < -1 {
        return None;
    }
    for i in 0..n {
        for j in 0..n {
            let want = if i == j { k + 1 } else { 1 };
            if popcnt(a.row(i) & b.row(j)) != want {
                return None;
            }
        }
    }
    Some(k)
}

/// The unique candidate partner of A at k, when A is nonsingular and the
/// candidate is 0/1.
pub fn partner(a: &BipartiteGraph, k: i64) -> Option<BipartiteGraph> {
    if k == 0 || k < -1 {
        return None;
    }
    let m = a.to_matrix();
    let inv = m.inverse().ok()??;
    let bt = inv.matmul(&RationalMatrix::j_plus_ki(a.n(), k)).expect("square product");
    let mut rows = vec![0u32; a.n()];
    for j in 0..a.n() {
        for i in 0..a.n() {
            let e = bt.get(i, j);
            if e.is_one() {
                rows[j] |= 1 << i;
            } else if !e.is_zero() {
                return None;
            }
        }
    }
    BipartiteGraph::from_adj_rows(rows).ok()
}

/// All types under which a regular 0/1 matrix is a Lehman matrix.
pub fn lehman_types(a: &BipartiteGraph) -> Result<Vec<LehmanType>, LehmanError> {
    let r = a.regular_degree().ok_or(LehmanError::NotRegular)?;
    let n = a.n();
    let mut out = Vec::new();
    for s in 1..=n {
        let k = (r * s) as i64 - n as i64;
        if k == 0 || k < -1 {
            continue;
        }
        if certify(a, k).is_some() {
            out.push(LehmanType { n, r, s, k });
        }
    }
    Ok(out)
}

/// The mate of black vertex `b` at parameter `k`: the 0/1 solution of
/// `A x = 1 + k e_b` when it exists.
pub fn mate(g: &BipartiteGraph, b: usize, k: i64) -> MateOutcome {
    let m = g.to_matrix();
    let rhs: Vec<_> = (0..g.n()).map(|i| if i == b { rat(1 + k) } else { rat(1) }).collect();
    match m.solve(&rhs).expect("square") {
        None => MateOutcome::NoUniqueSolution,
        Some(x) => {
            let mut mask = 0u32;
            for (w, e) in x.iter().enumerate() {
                if e.is_one() {
                    mask |= 1 << w;
                } else if !e.is_zero() {
                    return MateOutcome::NotZeroOne;
                }
            }
            MateOutcome::Mate(mask)
        }
    }
}

/// Full certification of A at k. Computes the partner by exact solve, then
/// re-validates everything combinatorially: 0/1-ness, both product
/// identities, the transposed identity, regularity, rs = n + k, and the
/// mate/comate symmetry.
pub fn certify(a: &BipartiteGraph, k: i64) -> Option<LehmanCertificate> {
    if k == 0 || k < -1 {
        return None;
    }
    let n = a.n();
    let r = a.regular_degree()?;
    if (n as i64 + k) % r as i64 != 0 {
        return None;
    }
    let s = ((n as i64 + k) / r as i64).try_into().ok()?;
    if s == 0 || s > n {
        return None;
    }

    let b = partner(a, k)?;

    // Counting re-validation, independent of the linear algebra above.
    for i in 0..n {
        for j in 0..n {
            let want = if i == j { k + 1 } else { 1 };
            if popcnt(a.row(i) & b.row(j)) != want {
                return None;
            }
            // B^T A = J + kI checked entrywise on columns.
            if popcnt(a.col(j) & b.col(i)) != want {
                return None;
            }
            // A^T B likewise.
            if popcnt(a.col(i) & b.col(j)) != want {
                return None;
            }
        }
        if b.black_degree(i) != s || b.white_degree(i) != s {
            return None;
        }
    }

    // Comates recomputed independently as mates of the transposed graph;
    // they must be the partner's columns.
    let at = a.transpose();
    let mut comates = Vec::with_capacity(n);
    for w in 0..n {
        match mate(&at, w, k) {
            MateOutcome::Mate(m) => {
                if m != b.col(w) {
                    return None;
                }
                comates.push(m);
            }
            _ => return None,
        }
    }

    let mates = b.adj_rows().to_vec();
    Some(LehmanCertificate { partner: b, ty: LehmanType { n, r, s, k }, mates, comates })
}

/// Auxiliary graph of a Lehman pair and, for cubic k = 1 pairs, the rungs.
pub fn auxiliary(a: &BipartiteGraph, b: &BipartiteGraph) -> Result<AuxiliaryDecomposition, LehmanError> {
    let k = is_lehman_pair(a, b).ok_or(LehmanError::NotLehmanPair)?;
    let n = a.n();
    let aux_rows: Vec<u32> = (0..n).map(|i| a.row(i) & b.row(i)).collect();
    let r = a.regular_degree().ok_or(LehmanError::NotRegular)?;
    let rungs = if r == 3 && k == 1 {
        let mut rungs = Vec::with_capacity(n);
        for (i, &aux) in aux_rows.iter().enumerate() {
            let mut m = a.row(i) & !aux;
            while m != 0 {
                let w = m.trailing_zeros() as usize;
                rungs.push((i, w));
                m &= m - 1;
            }
        }
        Some(rungs)
    } else {
        None
    };
    Ok(AuxiliaryDecomposition { aux_rows, rungs })
}

/// Rungs of a certified cubic k = 1 graph.
pub fn rungs(g: &BipartiteGraph, cert: &LehmanCertificate) -> Option<Vec<(usize, usize)>> {
    auxiliary(g, &cert.partner).ok()?.rungs
}
