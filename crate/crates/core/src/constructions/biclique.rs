//! Biclique compression and expansion.
//!
//! An r-regular Lehman graph whose vertex set partitions into copies of
//! K_{r-1,r-1} (its "bicliques") can be compressed block-by-block to an edge,
//! producing an r-regular Lehman graph of the opposite sign. Expansion
//! reverses this: every edge of a perfect matching is blown up into a
//! biclique. Expanding a negative graph works for any perfect matching; a
//! positive cubic graph expands only along its rungs.

use super::ConstructionError;
use crate::lehman::{self, BipartiteGraph, LehmanCertificate};
use serde::Serialize;

/// A partition of the vertices into (r-1) x (r-1) bicliques.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BicliquePartition {
    /// Each block lists its black and its white vertices, sorted.
    pub blocks: Vec<(Vec<usize>, Vec<usize>)>,
}

impl BicliquePartition {
    /// The unique white neighbour of black vertex `b` outside its block.
    pub fn out_neighbour(&self, g: &BipartiteGraph, b: usize) -> Option<usize> {
        let block = self.blocks.iter().find(|(bs, _)| bs.contains(&b))?;
        let inside: u32 = block.1.iter().map(|&w| 1u32 << w).fold(0, |a, x| a | x);
        let outside = g.row(b) & !inside;
        if outside.count_ones() == 1 {
            Some(outside.trailing_zeros() as usize)
        } else {
            None
        }
    }
}

/// All partitions of the vertices into induced K_{r-1,r-1} blocks, by exact
/// cover over the candidate blocks, branching on the lowest uncovered black
/// vertex. Each partition is produced exactly once.
pub fn find_biclique_partitions(
    g: &BipartiteGraph,
) -> Result<Vec<BicliquePartition>, ConstructionError> {
    let r = g.regular_degree().ok_or(ConstructionError::NotRegular)?;
    if r < 3 {
        return Err(ConstructionError::DegreeTooSmall(r));
    }
    let n = g.n();
    let side = r - 1;
    // Candidate blocks as (black mask, white mask).
    let mut blocks: Vec<(u32, u32)> = Vec::new();
    let mut bsets = Vec::new();
    subsets(n, side, &mut bsets);
    for &bmask in &bsets {
        let mut common = u32::MAX;
        let mut m = bmask;
        while m != 0 {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            common &= g.row(b);
        }
        if (common.count_ones() as usize) < side {
            continue;
        }
        let mut wsets = Vec::new();
        subsets_of_mask(common, side, &mut wsets);
        for wmask in wsets {
            blocks.push((bmask, wmask));
        }
    }
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    cover(n, &blocks, 0, 0, &mut chosen, &mut out);
    Ok(out)
}

fn subsets(n: usize, k: usize, out: &mut Vec<u32>) {
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    subsets_of_mask(full, k, out)
}

fn subsets_of_mask(mask: u32, k: usize, out: &mut Vec<u32>) {
    fn rec(mask: u32, k: usize, acc: u32, out: &mut Vec<u32>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros();
            m &= m - 1;
            // Only pick elements above the last chosen one: use the remaining
            // suffix to avoid duplicates.
            rec(m, k - 1, acc | 1 << v, out);
        }
    }
    rec(mask, k, 0, out);
}

fn cover(
    n: usize,
    blocks: &[(u32, u32)],
    covered_b: u32,
    covered_w: u32,
    chosen: &mut Vec<(u32, u32)>,
    out: &mut Vec<BicliquePartition>,
) {
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    if covered_b == full {
        if covered_w == full {
            out.push(BicliquePartition {
                blocks: chosen.iter().map(|&(bm, wm)| (mask_to_vec(bm), mask_to_vec(wm))).collect(),
            });
        }
        return;
    }
    let pivot = (!covered_b).trailing_zeros();
    for &(bm, wm) in blocks {
        if bm >> pivot & 1 == 0 || bm & covered_b != 0 || wm & covered_w != 0 {
            continue;
        }
        chosen.push((bm, wm));
        cover(n, blocks, covered_b | bm, covered_w | wm, chosen, out);
        chosen.pop();
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

/// Compresses each biclique block to an edge. The compressed graph has one
/// black and one white vertex per block; blocks are adjacent when any of
/// their vertices were, and each block keeps its internal matching edge.
pub fn biclique_compress(
    g: &BipartiteGraph,
    cert: &LehmanCertificate,
    p: &BicliquePartition,
) -> Result<BipartiteGraph, ConstructionError> {
    let (r, k) = (cert.ty.r, cert.ty.k);
    if !(k == 1 && r >= 3 || k == -1 && r == 3) {
        return Err(ConstructionError::UnsupportedParameters { r, k });
    }
    validate_partition(g, r, p)?;
    let m = p.blocks.len();
    let mut rows = vec![0u32; m];
    for (x, (bx, _)) in p.blocks.iter().enumerate() {
        for (y, (_, wy)) in p.blocks.iter().enumerate() {
            let adjacent = x == y
                || bx.iter().any(|&b| wy.iter().any(|&w| g.has_edge(b, w)));
            if adjacent {
                rows[x] |= 1 << y;
            }
        }
    }
    let out = BipartiteGraph::from_adj_rows(rows).expect("shrinks");
    if out.regular_degree() != Some(r) {
        return Err(ConstructionError::CompressionNotRegular);
    }
    Ok(out)
}

fn validate_partition(
    g: &BipartiteGraph,
    r: usize,
    p: &BicliquePartition,
) -> Result<(), ConstructionError> {
    let side = r - 1;
    let mut seen_b = 0u32;
    let mut seen_w = 0u32;
    for (bs, ws) in &p.blocks {
        if bs.len() != side || ws.len() != side {
            return Err(ConstructionError::InvalidPartition);
        }
        for &b in bs {
            if seen_b >> b & 1 == 1 {
                return Err(ConstructionError::InvalidPartition);
            }
            seen_b |= 1 << b;
            for &w in ws {
                if !g.has_edge(b, w) {
                    return Err(ConstructionError::InvalidPartition);
                }
            }
        }
        for &w in ws {
            if seen_w >> w & 1 == 1 {
                return Err(ConstructionError::InvalidPartition);
            }
            seen_w |= 1 << w;
        }
    }
    let full = if g.n() == 32 { u32::MAX } else { (1u32 << g.n()) - 1 };
    if seen_b != full || seen_w != full {
        return Err(ConstructionError::InvalidPartition);
    }
    Ok(())
}

/// Expands every matching edge into a K_{r-1,r-1} block. For k = -1 any
/// perfect matching is allowed; for cubic k = 1 the matching must be the
/// rungs. Non-matching edges are reattached by the position of the edge in
/// the (arbitrary but fixed) edge order at each endpoint.
pub fn biclique_expand(
    g: &BipartiteGraph,
    cert: &LehmanCertificate,
    matching: &[(usize, usize)],
) -> Result<BipartiteGraph, ConstructionError> {
    let orderings = natural_orderings(g, matching);
    biclique_expand_with(g, cert, matching, &orderings)
}

/// Edge orderings: for each black (resp. white) vertex, its non-matching
/// edges as (other endpoint) lists. `biclique_expand` uses increasing index
/// order; tests permute these to confirm the result is order-insensitive up
/// to isomorphism.
pub struct EdgeOrderings {
    pub at_black: Vec<Vec<usize>>,
    pub at_white: Vec<Vec<usize>>,
}

pub fn natural_orderings(g: &BipartiteGraph, matching: &[(usize, usize)]) -> EdgeOrderings {
    let n = g.n();
    let mut mate_of_black = vec![usize::MAX; n];
    let mut mate_of_white = vec![usize::MAX; n];
    for &(b, w) in matching {
        if b < n && w < n {
            mate_of_black[b] = w;
            mate_of_white[w] = b;
        }
    }
    let at_black = (0..n)
        .map(|b| mask_to_vec(g.row(b) & !(1u32 << mate_of_black[b].min(31))).into_iter()
            .filter(|&w| w != mate_of_black[b])
            .collect())
        .collect();
    let at_white = (0..n)
        .map(|w| mask_to_vec(g.col(w))
            .into_iter()
            .filter(|&b| b != mate_of_white[w])
            .collect())
        .collect();
    EdgeOrderings { at_black, at_white }
}

pub fn biclique_expand_with(
    g: &BipartiteGraph,
    cert: &LehmanCertificate,
    matching: &[(usize, usize)],
    orderings: &EdgeOrderings,
) -> Result<BipartiteGraph, ConstructionError> {
    let (r, k) = (cert.ty.r, cert.ty.k);
    let n = g.n();
    // A perfect matching within the graph.
    let mut bseen = 0u32;
    let mut wseen = 0u32;
    for &(b, w) in matching {
        if b >= n || w >= n || !g.has_edge(b, w) || bseen >> b & 1 == 1 || wseen >> w & 1 == 1 {
            return Err(ConstructionError::InvalidMatching);
        }
        bseen |= 1 << b;
        wseen |= 1 << w;
    }
    if matching.len() != n {
        return Err(ConstructionError::InvalidMatching);
    }
    match k {
        -1 => {}
        1 => {
            if r != 3 {
                return Err(ConstructionError::UnsupportedParameters { r, k });
            }
            let mut rungs = lehman::rungs(g, cert).expect("cubic k=1 certificate");
            let mut m: Vec<(usize, usize)> = matching.to_vec();
            rungs.sort_unstable();
            m.sort_unstable();
            if rungs != m {
                return Err(ConstructionError::MatchingNotRungs);
            }
        }
        _ => return Err(ConstructionError::UnsupportedParameters { r, k }),
    }

    // Block index = position of the matched pair in `matching`.
    let side = r - 1;
    let mut block_of_black = vec![0usize; n];
    let mut block_of_white = vec![0usize; n];
    for (i, &(b, w)) in matching.iter().enumerate() {
        block_of_black[b] = i;
        block_of_white[w] = i;
    }
    let nn = n * side;
    if nn > crate::lehman::MAX_N {
        return Err(ConstructionError::ResultTooLarge(nn));
    }
    let mut h = BipartiteGraph::empty(nn).expect("checked");
    for i in 0..n {
        for p in 0..side {
            for q in 0..side {
                h.add_edge(i * side + p, i * side + q);
            }
        }
    }
    for b in 0..n {
        for (p, &w) in orderings.at_black[b].iter().enumerate() {
            let q = orderings.at_white[w]
                .iter()
                .position(|&bb| bb == b)
                .ok_or(ConstructionError::InvalidMatching)?;
            h.add_edge(block_of_black[b] * side + p, block_of_white[w] * side + q);
        }
    }
    debug_assert_eq!(h.regular_degree(), Some(r));
    Ok(h)
}

/// All perfect matchings of the graph, as sorted edge lists.
pub fn perfect_matchings(g: &BipartiteGraph) -> Vec<Vec<(usize, usize)>> {
    let n = g.n();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    fn rec(
        g: &BipartiteGraph,
        b: usize,
        used_w: u32,
        current: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        let n = g.n();
        if b == n {
            out.push(current.clone());
            return;
        }
        let mut m = g.row(b) & !used_w;
        while m != 0 {
            let w = m.trailing_zeros() as usize;
            m &= m - 1;
            current.push((b, w));
            rec(g, b + 1, used_w | 1 << w, current, out);
            current.pop();
        }
    }
    rec(g, 0, 0, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas;
    use crate::lehman::certify;

    #[test]
    fn ladderless_graph_partitions_into_4_cycles() {
        let g = atlas::g14_3_5_ladderless();
        let parts = find_biclique_partitions(&g).unwrap();
        assert!(!parts.is_empty());
    }

    #[test]
    fn moebius_has_no_partition() {
        // Odd side size: no partition into 2+2 blocks can exist.
        let g = atlas::moebius_ladder(5);
        assert!(find_biclique_partitions(&g).unwrap().is_empty());
    }

    #[test]
    fn heawood_admits_no_partition_and_compress_rejects_k_2() {
        // Girth 6: no 4-cycles, hence no K_{2,2} blocks at all, consistent
        // with the parameter constraint that bars k = 2.
        let g = atlas::heawood();
        assert!(find_biclique_partitions(&g).unwrap().is_empty());
        let cert = certify(&g, 2).unwrap();
        let fake = BicliquePartition { blocks: vec![] };
        assert!(matches!(
            biclique_compress(&g, &cert, &fake),
            Err(ConstructionError::UnsupportedParameters { r: 3, k: 2 })
        ));
    }

    #[test]
    fn degree_below_three_rejected() {
        let c6 = BipartiteGraph::from_adj_rows(vec![0b011, 0b110, 0b101]).unwrap();
        assert!(matches!(
            find_biclique_partitions(&c6),
            Err(ConstructionError::DegreeTooSmall(2))
        ));
    }

    #[test]
    fn compress_ladderless_gives_7_3_2() {
        let g = atlas::g14_3_5_ladderless();
        let cert = certify(&g, 1).unwrap();
        for p in find_biclique_partitions(&g).unwrap() {
            let c = biclique_compress(&g, &cert, &p).unwrap();
            let ccert = certify(&c, -1).expect("compression certifies negative");
            assert_eq!((ccert.ty.n, ccert.ty.r, ccert.ty.s), (7, 3, 2));
        }
    }

    #[test]
    fn compress_cube_hits_exception() {
        let cube = atlas::cube();
        let cert = certify(&cube, -1).unwrap();
        let parts = find_biclique_partitions(&cube).unwrap();
        assert!(!parts.is_empty());
        for p in parts {
            assert!(matches!(
                biclique_compress(&cube, &cert, &p),
                Err(ConstructionError::CompressionNotRegular)
            ));
        }
    }

    #[test]
    fn expand_cube_gives_8_3_3() {
        let cube = atlas::cube();
        let cert = certify(&cube, -1).unwrap();
        for m in perfect_matchings(&cube) {
            let h = biclique_expand(&cube, &cert, &m).unwrap();
            let hc = certify(&h, 1).expect("expansion certifies positive");
            assert_eq!((hc.ty.n, hc.ty.s), (8, 3));
        }
    }

    #[test]
    fn complete_minus_matching_expands_to_r2_minus_1_family() {
        // J - I of side r+1 expands to an (r^2-1, r, r) Lehman graph.
        for r in 3..=5usize {
            let g = atlas::complete_minus_matching(r + 1);
            let cert = certify(&g, -1).unwrap();
            let matching: Vec<(usize, usize)> = (0..r + 1)
                .map(|i| (i, (i + 1) % (r + 1)))
                .collect();
            let h = biclique_expand(&g, &cert, &matching).unwrap();
            let hc = certify(&h, 1).expect("expansion certifies");
            assert_eq!((hc.ty.n, hc.ty.r, hc.ty.s), (r * r - 1, r, r));
        }
    }

    #[test]
    fn expansion_of_j_minus_i_compresses_back() {
        let g = atlas::complete_minus_matching(4);
        let cert = certify(&g, -1).unwrap();
        let matching: Vec<(usize, usize)> = (0..4).map(|i| (i, (i + 1) % 4)).collect();
        let h = biclique_expand(&g, &cert, &matching).unwrap();
        let hcert = certify(&h, 1).unwrap();
        // The expansion blocks are consecutive index runs.
        let p = BicliquePartition {
            blocks: (0..4).map(|i| (vec![2 * i, 2 * i + 1], vec![2 * i, 2 * i + 1])).collect(),
        };
        let back = biclique_compress(&h, &hcert, &p).unwrap();
        // Block x is adjacent to block y iff x = y (matching edge) or black x
        // was adjacent to the white matched into block y; with the matching
        // (i, i+1) that reproduces J - I up to relabelling.
        let bc = certify(&back, -1).unwrap();
        assert_eq!((bc.ty.n, bc.ty.r, bc.ty.s), (4, 3, 1));
        let canon_back =
            crate::search::canonical_form(&back, crate::search::IsoMode::ColourPreserving);
        let canon_g = crate::search::canonical_form(&g, crate::search::IsoMode::ColourPreserving);
        assert_eq!(canon_back, canon_g);
    }

    #[test]
    fn positive_expansion_requires_rungs() {
        let g = atlas::moebius_ladder(5);
        let cert = certify(&g, 1).unwrap();
        let rungs = crate::lehman::rungs(&g, &cert).unwrap();
        let h = biclique_expand(&g, &cert, &rungs).unwrap();
        let hc = certify(&h, -1).expect("rung expansion certifies negative");
        assert_eq!((hc.ty.n, hc.ty.r, hc.ty.s), (10, 3, 3));

        // Any other perfect matching is rejected.
        for m in perfect_matchings(&g) {
            let mut sorted = m.clone();
            sorted.sort_unstable();
            let mut r = rungs.clone();
            r.sort_unstable();
            if sorted != r {
                assert!(matches!(
                    biclique_expand(&g, &cert, &m),
                    Err(ConstructionError::MatchingNotRungs)
                ));
            }
        }
    }

    #[test]
    fn ladderless_graph_from_expanding_7_3_2() {
        // Expanding the (7,3,2) negative graph yields a (14,3,5) graph with
        // no 3-rung ladder segment.
        let cube = atlas::cube();
        let ccert = certify(&cube, -1).unwrap();
        let pairs = crate::constructions::expandable_pairs(&cube, &ccert).unwrap();
        let g732 = crate::constructions::ladder_insert(&cube, &ccert, &pairs[0]).unwrap();
        let cert = certify(&g732, -1).unwrap();
        let mut seen_ladderless = false;
        for m in perfect_matchings(&g732) {
            let h = biclique_expand(&g732, &cert, &m).unwrap();
            let hc = certify(&h, 1).expect("certifies");
            assert_eq!((hc.ty.n, hc.ty.s), (14, 5));
            if crate::constructions::find_3rung_ladders(&h).unwrap().is_empty() {
                seen_ladderless = true;
            }
        }
        assert!(seen_ladderless);
    }

    #[test]
    fn expansion_is_order_insensitive() {
        let cube = atlas::cube();
        let cert = certify(&cube, -1).unwrap();
        let matching: Vec<(usize, usize)> = (0..4).map(|i| (i, (i + 1) % 4)).collect();
        let base = biclique_expand(&cube, &cert, &matching).unwrap();
        let base_canon = crate::search::canonical_form(&base, crate::search::IsoMode::ColourPreserving);
        let mut state = 0x2bad_cafeu64;
        let mut next = move |m: usize| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as usize % m
        };
        for _ in 0..12 {
            let mut o = natural_orderings(&cube, &matching);
            for v in o.at_black.iter_mut().chain(o.at_white.iter_mut()) {
                for i in (1..v.len()).rev() {
                    v.swap(i, next(i + 1));
                }
            }
            let alt = biclique_expand_with(&cube, &cert, &matching, &o).unwrap();
            let alt_canon =
                crate::search::canonical_form(&alt, crate::search::IsoMode::ColourPreserving);
            assert_eq!(base_canon, alt_canon);
        }
    }
}
