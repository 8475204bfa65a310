//! Ladder segments, reduction and insertion.
//!
//! An m-rung ladder segment is the induced subgraph on black vertices
//! b_0..b_{m-1} and white vertices w_0..w_{m-1} whose edges are exactly the
//! pairs (b_i, w_j) with |i - j| <= 1. For m = 3 this is the cube minus two
//! adjacent vertices. The end vertices each have one neighbour outside the
//! segment: w_L at b_0, b_L at w_0, w_R at b_{m-1}, b_R at w_{m-1}.

use super::ConstructionError;
use crate::lehman::{BipartiteGraph, LehmanCertificate};
use serde::Serialize;

/// A ladder segment together with its attachment vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LadderSegment {
    pub blacks: Vec<usize>,
    pub whites: Vec<usize>,
    pub w_l: usize,
    pub b_l: usize,
    pub w_r: usize,
    pub b_r: usize,
}

impl LadderSegment {
    pub fn rung_count(&self) -> usize {
        self.blacks.len()
    }

    fn vertex_tuple(&self) -> (Vec<usize>, Vec<usize>) {
        (self.blacks.clone(), self.whites.clone())
    }

    /// Canonical orientation: a segment equals its left-right reversal, so
    /// the lexicographically smaller of the two vertex tuples represents
    /// both. (The colour swap is a symmetry of the abstract pattern but maps
    /// segments of G to segments of the transposed graph, so it must not be
    /// used to identify segments within one graph.)
    fn canonical(&self) -> LadderSegment {
        let rev = |v: &[usize]| v.iter().rev().copied().collect::<Vec<_>>();
        let lr = LadderSegment {
            blacks: rev(&self.blacks),
            whites: rev(&self.whites),
            w_l: self.w_r,
            b_l: self.b_r,
            w_r: self.w_l,
            b_r: self.b_l,
        };
        if lr.vertex_tuple() < self.vertex_tuple() {
            lr
        } else {
            self.clone()
        }
    }
}

/// Re-checks that a segment description matches the graph: the induced
/// pattern |i - j| <= 1 on its vertices and the four attachments.
fn validate_segment(g: &BipartiteGraph, seg: &LadderSegment) -> bool {
    let m = seg.rung_count();
    if seg.whites.len() != m || m < 2 {
        return false;
    }
    let bmask: u32 = seg.blacks.iter().map(|&b| 1u32 << b).fold(0, |a, x| a | x);
    let wmask: u32 = seg.whites.iter().map(|&w| 1u32 << w).fold(0, |a, x| a | x);
    if bmask.count_ones() as usize != m || wmask.count_ones() as usize != m {
        return false;
    }
    if seg.blacks.iter().chain(seg.whites.iter()).any(|&v| v >= g.n()) {
        return false;
    }
    for (i, &b) in seg.blacks.iter().enumerate() {
        for (j, &w) in seg.whites.iter().enumerate() {
            if g.has_edge(b, w) != (i.abs_diff(j) <= 1) {
                return false;
            }
        }
    }
    third_neighbour(g.row(seg.blacks[0]), wmask) == Some(seg.w_l)
        && third_neighbour(g.col(seg.whites[0]), bmask) == Some(seg.b_l)
        && third_neighbour(g.row(seg.blacks[m - 1]), wmask) == Some(seg.w_r)
        && third_neighbour(g.col(seg.whites[m - 1]), bmask) == Some(seg.b_r)
}

fn third_neighbour(mask: u32, used: u32) -> Option<usize> {
    let rest = mask & !used;
    if rest.count_ones() == 1 {
        Some(rest.trailing_zeros() as usize)
    } else {
        None
    }
}

/// All induced m-rung ladder segments of a cubic graph, canonicalised and in
/// lexicographic order by vertex tuple.
///
/// The colour-swap symmetry is only a symmetry of the segment pattern, so
/// colour-swapped copies are *not* identified (the blacks of a segment stay
/// black); only the left-right reversal is quotiented out here. The colour
/// swap maps segments of G to segments of the transposed graph.
pub fn find_ladder_segments(
    g: &BipartiteGraph,
    rungs: usize,
) -> Result<Vec<LadderSegment>, ConstructionError> {
    if !g.is_cubic() {
        return Err(ConstructionError::NotCubic);
    }
    assert!(rungs >= 2, "a ladder segment has at least two rungs");
    let n = g.n();
    let mut found: Vec<LadderSegment> = Vec::new();
    // Seed with the first square (b0, w0, b1, w1) and extend to the right.
    for b0 in 0..n {
        let mut wmask = g.row(b0);
        while wmask != 0 {
            let w0 = wmask.trailing_zeros() as usize;
            wmask &= wmask - 1;
            let mut w1mask = g.row(b0) & !(1 << w0);
            while w1mask != 0 {
                let w1 = w1mask.trailing_zeros() as usize;
                w1mask &= w1mask - 1;
                let mut b1mask = g.col(w0) & g.col(w1) & !(1 << b0);
                while b1mask != 0 {
                    let b1 = b1mask.trailing_zeros() as usize;
                    b1mask &= b1mask - 1;
                    if let Some(seg) = extend_ladder(g, rungs, b0, w0, b1, w1) {
                        let canon = seg.canonical();
                        if !found.contains(&canon) {
                            found.push(canon);
                        }
                    }
                }
            }
        }
    }
    found.sort_by(|a, b| a.vertex_tuple().cmp(&b.vertex_tuple()));
    Ok(found)
}

/// Convenience wrapper for the 3-rung case.
pub fn find_3rung_ladders(g: &BipartiteGraph) -> Result<Vec<LadderSegment>, ConstructionError> {
    find_ladder_segments(g, 3)
}

fn extend_ladder(
    g: &BipartiteGraph,
    rungs: usize,
    b0: usize,
    w0: usize,
    b1: usize,
    w1: usize,
) -> Option<LadderSegment> {
    let mut blacks = vec![b0, b1];
    let mut whites = vec![w0, w1];
    while blacks.len() < rungs {
        let i = blacks.len() - 1;
        // In a cubic graph the next rung is forced: w_{i+1} is the third
        // neighbour of b_i, b_{i+1} the third neighbour of w_i.
        let wn = third_neighbour(g.row(blacks[i]), (1 << whites[i]) | (1 << whites[i - 1]))?;
        let bn = third_neighbour(g.col(whites[i]), (1 << blacks[i]) | (1 << blacks[i - 1]))?;
        if !g.has_edge(bn, wn) {
            return None;
        }
        blacks.push(bn);
        whites.push(wn);
    }
    let m = rungs;
    // Distinct vertices.
    let bmask: u32 = blacks.iter().map(|&b| 1u32 << b).fold(0, |a, x| a | x);
    let wmask: u32 = whites.iter().map(|&w| 1u32 << w).fold(0, |a, x| a | x);
    if bmask.count_ones() as usize != m || wmask.count_ones() as usize != m {
        return None;
    }
    // Induced: edges are exactly |i - j| <= 1.
    for (i, &b) in blacks.iter().enumerate() {
        for (j, &w) in whites.iter().enumerate() {
            let want = i.abs_diff(j) <= 1;
            if g.has_edge(b, w) != want {
                return None;
            }
        }
    }
    // Attachments: the third neighbour of each end vertex, outside the
    // segment by the induced check above.
    let w_l = third_neighbour(g.row(blacks[0]), wmask)?;
    let b_l = third_neighbour(g.col(whites[0]), bmask)?;
    let w_r = third_neighbour(g.row(blacks[m - 1]), wmask)?;
    let b_r = third_neighbour(g.col(whites[m - 1]), bmask)?;
    Some(LadderSegment { blacks, whites, w_l, b_l, w_r, b_r })
}

/// 3-rung ladder reduction: deletes the six segment vertices and restores
/// regularity with the edges (b_L, w_R) and (b_R, w_L).
pub fn ladder_reduce(
    g: &BipartiteGraph,
    seg: &LadderSegment,
) -> Result<BipartiteGraph, ConstructionError> {
    if !g.is_cubic() {
        return Err(ConstructionError::NotCubic);
    }
    if seg.rung_count() != 3 {
        return Err(ConstructionError::NotThreeRungs(seg.rung_count()));
    }
    if !validate_segment(g, seg) {
        return Err(ConstructionError::InvalidSegment);
    }
    let attachments = [seg.b_l, seg.w_l, seg.b_r, seg.w_r];
    if seg.b_l == seg.b_r || seg.w_l == seg.w_r {
        return Err(ConstructionError::AttachmentsCoincide(attachments));
    }
    if g.has_edge(seg.b_l, seg.w_r) {
        return Err(ConstructionError::ForbiddenAdjacency { black: seg.b_l, white: seg.w_r });
    }
    if g.has_edge(seg.b_r, seg.w_l) {
        return Err(ConstructionError::ForbiddenAdjacency { black: seg.b_r, white: seg.w_l });
    }
    let n = g.n();
    let bgone: u32 = seg.blacks.iter().map(|&b| 1u32 << b).fold(0, |a, x| a | x);
    let wgone: u32 = seg.whites.iter().map(|&w| 1u32 << w).fold(0, |a, x| a | x);
    let bmap = survivor_map(n, bgone);
    let wmap = survivor_map(n, wgone);
    let mut rows = Vec::with_capacity(n - 3);
    for b in 0..n {
        if bgone >> b & 1 == 1 {
            continue;
        }
        let mut row = 0u32;
        let mut m = g.row(b) & !wgone;
        while m != 0 {
            let w = m.trailing_zeros() as usize;
            m &= m - 1;
            row |= 1 << wmap[w];
        }
        rows.push(row);
    }
    let mut out = BipartiteGraph::from_adj_rows(rows).expect("size shrinks");
    out.add_edge(bmap[seg.b_l], wmap[seg.w_r]);
    out.add_edge(bmap[seg.b_r], wmap[seg.w_l]);
    debug_assert!(out.is_cubic());
    Ok(out)
}

fn survivor_map(n: usize, gone: u32) -> Vec<usize> {
    let mut map = vec![usize::MAX; n];
    let mut next = 0;
    for (v, entry) in map.iter_mut().enumerate() {
        if gone >> v & 1 == 0 {
            *entry = next;
            next += 1;
        }
    }
    map
}

/// A pair of non-incident edges e = (w_L, b_R), f = (w_R, b_L) eligible for
/// ladder insertion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExpandablePair {
    pub w_l: usize,
    pub b_r: usize,
    pub w_r: usize,
    pub b_l: usize,
}

/// All non-incident edge pairs satisfying the k-appropriate sufficient
/// conditions for ladder insertion. The conditions are labelling-symmetric,
/// so each unordered pair appears once, labelled with the lexicographically
/// smaller edge as e = (w_L, b_R).
pub fn expandable_pairs(
    g: &BipartiteGraph,
    cert: &LehmanCertificate,
) -> Result<Vec<ExpandablePair>, ConstructionError> {
    let k = cert.ty.k;
    if k != 1 && k != -1 {
        return Err(ConstructionError::UnsupportedK(k));
    }
    if cert.ty.r != 3 {
        return Err(ConstructionError::NotCubic);
    }
    let edges = g.edges();
    let mut out = Vec::new();
    for (i, &(b1, w1)) in edges.iter().enumerate() {
        for &(b2, w2) in &edges[i + 1..] {
            if b1 == b2 || w1 == w2 {
                continue;
            }
            // e = (w_L, b_R) = (w1, b1), f = (w_R, b_L) = (w2, b2).
            let pair = ExpandablePair { w_l: w1, b_r: b1, w_r: w2, b_l: b2 };
            if pair_conditions_hold(g, cert, &pair) {
                out.push(pair);
            }
        }
    }
    Ok(out)
}

fn pair_conditions_hold(g: &BipartiteGraph, cert: &LehmanCertificate, p: &ExpandablePair) -> bool {
    let mates_disjoint = cert.mates[p.b_l] & cert.mates[p.b_r] == 0
        && cert.comates[p.w_l] & cert.comates[p.w_r] == 0;
    if !mates_disjoint {
        return false;
    }
    match cert.ty.k {
        1 => {
            // Both edges must lie in the auxiliary graph.
            let in_aux = |b: usize, w: usize| g.has_edge(b, w) && cert.mates[b] >> w & 1 == 1;
            in_aux(p.b_r, p.w_l) && in_aux(p.b_l, p.w_r)
        }
        -1 => {
            cert.mates[p.b_l] >> p.w_l & 1 == 0 && cert.mates[p.b_r] >> p.w_r & 1 == 0
        }
        _ => false,
    }
}

/// Exhaustive variant: every non-incident pair whose insertion actually
/// certifies, regardless of the sufficient conditions. Comparing this with
/// `expandable_pairs` measures how far the sufficient conditions are from
/// necessary on a given graph.
pub fn expandable_pairs_exhaustive(
    g: &BipartiteGraph,
    cert: &LehmanCertificate,
) -> Result<Vec<ExpandablePair>, ConstructionError> {
    let k = cert.ty.k;
    if k != 1 && k != -1 {
        return Err(ConstructionError::UnsupportedK(k));
    }
    let edges = g.edges();
    let mut out = Vec::new();
    for (i, &(b1, w1)) in edges.iter().enumerate() {
        for &(b2, w2) in &edges[i + 1..] {
            if b1 == b2 || w1 == w2 {
                continue;
            }
            let pair = ExpandablePair { w_l: w1, b_r: b1, w_r: w2, b_l: b2 };
            let inserted = insert_unchecked(g, &pair);
            if crate::lehman::certify(&inserted, k).is_some() {
                out.push(pair);
            }
        }
    }
    Ok(out)
}

/// Inserts a 3-rung ladder segment across an expandable pair: removes e and
/// f, adds b_0..b_2 / w_0..w_2 with the segment pattern, and attaches
/// (b_L, w_0), (b_R, w_2), (b_0, w_L), (b_2, w_R).
pub fn ladder_insert(
    g: &BipartiteGraph,
    cert: &LehmanCertificate,
    pair: &ExpandablePair,
) -> Result<BipartiteGraph, ConstructionError> {
    if cert.ty.k != 1 && cert.ty.k != -1 {
        return Err(ConstructionError::UnsupportedK(cert.ty.k));
    }
    let edge_ok = g.has_edge(pair.b_r, pair.w_l) && g.has_edge(pair.b_l, pair.w_r);
    let non_incident = pair.b_l != pair.b_r && pair.w_l != pair.w_r;
    if !edge_ok || !non_incident || !pair_conditions_hold(g, cert, pair) {
        return Err(ConstructionError::NotExpandable);
    }
    Ok(insert_unchecked(g, pair))
}

fn insert_unchecked(g: &BipartiteGraph, pair: &ExpandablePair) -> BipartiteGraph {
    let n = g.n();
    let (b0, b1, b2) = (n, n + 1, n + 2);
    let (w0, w1, w2) = (n, n + 1, n + 2);
    let mut rows = g.adj_rows().to_vec();
    rows.resize(n + 3, 0);
    let mut h = BipartiteGraph::from_adj_rows(rows).expect("within bounds");
    h.remove_edge(pair.b_r, pair.w_l);
    h.remove_edge(pair.b_l, pair.w_r);
    for (b, w) in [(b0, w0), (b0, w1), (b1, w0), (b1, w1), (b1, w2), (b2, w1), (b2, w2)] {
        h.add_edge(b, w);
    }
    h.add_edge(pair.b_l, w0);
    h.add_edge(pair.b_r, w2);
    h.add_edge(b0, pair.w_l);
    h.add_edge(b2, pair.w_r);
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas;
    use crate::lehman::certify;

    #[test]
    fn cube_has_segments_but_reduction_fails() {
        let cube = atlas::cube();
        let segs = find_3rung_ladders(&cube).unwrap();
        assert!(!segs.is_empty());
        for seg in &segs {
            assert!(matches!(
                ladder_reduce(&cube, seg),
                Err(ConstructionError::AttachmentsCoincide(_))
            ));
        }
    }

    #[test]
    fn moebius_reduction_hits_forbidden_adjacency() {
        let g = atlas::moebius_ladder(5);
        let segs = find_3rung_ladders(&g).unwrap();
        assert!(!segs.is_empty());
        for seg in &segs {
            assert!(matches!(
                ladder_reduce(&g, seg),
                Err(ConstructionError::ForbiddenAdjacency { .. })
            ));
        }
    }

    #[test]
    fn ladderless_graph_has_no_segments() {
        let g = atlas::g14_3_5_ladderless();
        assert!(find_3rung_ladders(&g).unwrap().is_empty());
    }

    #[test]
    fn g17_has_3rung_but_no_4rung() {
        let g = atlas::g17_3_6();
        assert!(!find_3rung_ladders(&g).unwrap().is_empty());
        assert!(find_ladder_segments(&g, 4).unwrap().is_empty());
    }

    #[test]
    fn non_cubic_rejected() {
        let g = atlas::complete_minus_matching(5);
        assert!(matches!(find_3rung_ladders(&g), Err(ConstructionError::NotCubic)));
    }

    #[test]
    fn moebius_insert_gives_8_3_3() {
        let g = atlas::moebius_ladder(5);
        let cert = certify(&g, 1).unwrap();
        let pairs = expandable_pairs(&g, &cert).unwrap();
        assert!(!pairs.is_empty());
        for pair in &pairs {
            let h = ladder_insert(&g, &cert, pair).unwrap();
            let c = certify(&h, 1).expect("insertion certifies");
            assert_eq!(c.ty.n, 8);
            assert_eq!(c.ty.s, 3);
        }
    }

    #[test]
    fn rung_adjacent_pairs_are_expandable() {
        // If a rung joins a vertex of e to a vertex of f the pair qualifies.
        let g = atlas::moebius_ladder(5);
        let cert = certify(&g, 1).unwrap();
        let pairs = expandable_pairs(&g, &cert).unwrap();
        let rungs: Vec<(usize, usize)> =
            crate::lehman::rungs(&g, &cert).unwrap();
        for &(rb, rw) in &rungs {
            // e = (w_L, b_R) with w_L = rw and f = (w_R, b_L) with b_L = rb:
            // pick the aux edges at rw and rb avoiding the rung itself.
            let e_b = {
                let m = g.col(rw) & !(1 << rb);
                m.trailing_zeros() as usize
            };
            let f_w = {
                let m = g.row(rb) & !(1 << rw);
                m.trailing_zeros() as usize
            };
            if e_b == rb || f_w == rw {
                continue;
            }
            let found = pairs.iter().any(|p| {
                (p.w_l == rw && p.b_r == e_b && p.b_l == rb && p.w_r == f_w)
                    || (p.w_r == rw && p.b_l == e_b && p.b_r == rb && p.w_l == f_w)
            });
            assert!(found, "rung-adjacent pair missing for rung ({rb},{rw})");
        }
    }

    #[test]
    fn cube_insert_gives_7_3_2() {
        let cube = atlas::cube();
        let cert = certify(&cube, -1).unwrap();
        let pairs = expandable_pairs(&cube, &cert).unwrap();
        assert!(!pairs.is_empty());
        for pair in &pairs {
            let h = ladder_insert(&cube, &cert, pair).unwrap();
            let c = certify(&h, -1).expect("insertion certifies");
            assert_eq!((c.ty.n, c.ty.s), (7, 2));
        }
    }

    #[test]
    fn heawood_pairs_rejected() {
        let g = atlas::heawood();
        let cert = certify(&g, 2).unwrap();
        assert!(matches!(expandable_pairs(&g, &cert), Err(ConstructionError::UnsupportedK(2))));
    }

    #[test]
    fn insert_then_reduce_is_identity() {
        let g = atlas::moebius_ladder(5);
        let cert = certify(&g, 1).unwrap();
        let pairs = expandable_pairs(&g, &cert).unwrap();
        for pair in pairs.iter().take(8) {
            let h = ladder_insert(&g, &cert, pair).unwrap();
            // The inserted segment sits on the three appended vertices.
            let segs = find_3rung_ladders(&h).unwrap();
            let seg = segs
                .iter()
                .find(|s| {
                    s.blacks.iter().all(|&b| b >= 5) && s.whites.iter().all(|&w| w >= 5)
                })
                .expect("inserted segment present");
            let back = ladder_reduce(&h, seg).unwrap();
            assert_eq!(back, g);
        }
    }

    #[test]
    fn reduce_8_3_3_gives_moebius_and_transports_mates() {
        let g = atlas::moebius_ladder(5);
        let cert = certify(&g, 1).unwrap();
        let pair = expandable_pairs(&g, &cert).unwrap()[0];
        let h = ladder_insert(&g, &cert, &pair).unwrap();
        let hcert = certify(&h, 1).unwrap();
        let segs = find_3rung_ladders(&h).unwrap();
        for seg in &segs {
            let Ok(red) = ladder_reduce(&h, seg) else { continue };
            let rcert = certify(&red, 1).expect("reduction certifies");
            assert_eq!((rcert.ty.n, rcert.ty.s), (5, 2));
            // Mate transport: surviving blacks keep their mates minus the
            // deleted whites.
            let wgone: u32 = seg.whites.iter().map(|&w| 1u32 << w).fold(0, |a, x| a | x);
            let bmap = survivor_map(h.n(), seg.blacks.iter().map(|&b| 1u32 << b).fold(0, |a, x| a | x));
            let wmap = survivor_map(h.n(), wgone);
            for b in 0..h.n() {
                if seg.blacks.contains(&b) {
                    continue;
                }
                let mut expect = 0u32;
                let mut m = hcert.mates[b] & !wgone;
                while m != 0 {
                    let w = m.trailing_zeros() as usize;
                    m &= m - 1;
                    expect |= 1 << wmap[w];
                }
                assert_eq!(rcert.mates[bmap[b]], expect);
            }
        }
    }

    #[test]
    fn exhaustive_pairs_contain_sufficient_pairs() {
        let g = atlas::moebius_ladder(5);
        let cert = certify(&g, 1).unwrap();
        let sufficient = expandable_pairs(&g, &cert).unwrap();
        let exhaustive = expandable_pairs_exhaustive(&g, &cert).unwrap();
        for p in &sufficient {
            assert!(exhaustive.contains(p));
        }
    }
}
