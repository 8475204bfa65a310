//! Independent brute-force implementations used only to cross-check the
//! production algorithms. Everything here trades speed for obviousness and
//! stays independent of the code paths it validates.

use crate::exactmat::{Rational, RationalMatrix};
use crate::lehman::BipartiteGraph;
use crate::polyhedra::{HPolyhedron, VRep};
use crate::search::{canonical_form, IsoMode};
use num_traits::Zero;
use std::collections::BTreeSet;

/// All connected cubic bipartite graphs on `order` vertices, one per
/// colour-blind class, by enumerating row multisets directly.
pub fn enumerate_cubic_bipartite_brute(order: usize) -> Vec<BipartiteGraph> {
    assert!(order >= 6 && order % 2 == 0 && order <= 16, "oracle is for small orders");
    let n = order / 2;
    let mut rows3: Vec<u32> = Vec::new();
    for m in 0u32..1 << n {
        if m.count_ones() == 3 {
            rows3.push(m);
        }
    }
    let mut out: BTreeSet<Vec<u8>> = BTreeSet::new();
    let mut reps = Vec::new();
    let mut rows = Vec::with_capacity(n);
    // Rows in non-increasing order; every matrix is row-sortable, and the
    // canonical-form bucket identifies column permutations and transposes.
    fn rec(
        n: usize,
        rows3: &[u32],
        start: usize,
        rows: &mut Vec<u32>,
        col_deg: &mut [u8],
        out: &mut BTreeSet<Vec<u8>>,
        reps: &mut Vec<BipartiteGraph>,
    ) {
        if rows.len() == n {
            let g = BipartiteGraph::from_adj_rows(rows.clone()).unwrap();
            if g.is_connected() {
                let key = canonical_form(&g, IsoMode::ColourBlind).bytes();
                if out.insert(key) {
                    reps.push(g);
                }
            }
            return;
        }
        let remaining = n - rows.len();
        for (idx, &row) in rows3.iter().enumerate().skip(start) {
            let mut ok = true;
            for w in 0..n {
                let d = col_deg[w] + ((row >> w & 1) as u8);
                if d > 3 || (3 - d) as usize > remaining - 1 {
                    ok = false;
                    break;
                }
            }
            if !ok {
                continue;
            }
            for w in 0..n {
                col_deg[w] += (row >> w & 1) as u8;
            }
            rows.push(row);
            rec(n, rows3, idx, rows, col_deg, out, reps);
            rows.pop();
            for w in 0..n {
                col_deg[w] -= (row >> w & 1) as u8;
            }
        }
    }
    let mut col_deg = vec![0u8; n];
    rec(n, &rows3, 0, &mut rows, &mut col_deg, &mut out, &mut reps);
    reps
}

/// All 0/1 mates of a black vertex by exhaustive subset search: subsets of
/// white vertices dominating `b` exactly `k+1` times and every other black
/// vertex exactly once.
pub fn mates_brute(g: &BipartiteGraph, b: usize, k: i64) -> Vec<u32> {
    let n = g.n();
    assert!(n <= 16, "oracle is exponential in n");
    let mut out = Vec::new();
    for s in 0u32..1 << n {
        let mut good = true;
        for b2 in 0..n {
            let want = if b2 == b { k + 1 } else { 1 };
            if i64::from((s & g.row(b2)).count_ones()) != want {
                good = false;
                break;
            }
        }
        if good {
            out.push(s);
        }
    }
    out
}

/// Vertex enumeration by trying every n-subset of the constraints as a
/// candidate tight set: solve, check feasibility, deduplicate.
pub fn vertices_brute(h: &HPolyhedron) -> VRep {
    let m = h.inequalities.len();
    let n = h.dimension;
    let mut vertices: BTreeSet<Vec<Rational>> = BTreeSet::new();
    let mut subset: Vec<usize> = Vec::new();
    fn rec(
        h: &HPolyhedron,
        start: usize,
        subset: &mut Vec<usize>,
        n: usize,
        m: usize,
        vertices: &mut BTreeSet<Vec<Rational>>,
    ) {
        if subset.len() == n {
            let a = RationalMatrix::from_fn(n, n, |i, j| h.inequalities[subset[i]].0[j].clone());
            let b: Vec<Rational> = subset.iter().map(|&i| h.inequalities[i].1.clone()).collect();
            if let Ok(Some(x)) = a.solve(&b) {
                if h.contains(&x) {
                    vertices.insert(x);
                }
            }
            return;
        }
        for i in start..m {
            if m - i < n - subset.len() {
                break;
            }
            subset.push(i);
            rec(h, i + 1, subset, n, m, vertices);
            subset.pop();
        }
    }
    rec(h, 0, &mut subset, n, m, &mut vertices);
    // Rays of a covering polyhedron are the coordinate directions; the
    // production code is checked against this directly where it applies.
    let rays = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::from_integer(1.into()) } else { Rational::zero() })
                .collect()
        })
        .collect();
    VRep { vertices: vertices.into_iter().collect(), rays }
}

/// Does the graph admit a colour-reversing automorphism? Checked by brute
/// force over all pairs of side permutations.
pub fn colour_reversing_automorphism_brute(g: &BipartiteGraph) -> bool {
    let n = g.n();
    assert!(n <= 6, "factorial blowup");
    let t = g.transpose();
    let perms = permutations(n);
    for pb in &perms {
        for pw in &perms {
            if t.relabel(pb, pw) == *g {
                return true;
            }
        }
    }
    false
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn heap(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, cur, out);
            if k % 2 == 0 {
                cur.swap(i, k - 1);
            } else {
                cur.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas;

    #[test]
    fn brute_counts_match_generator_at_tiny_orders() {
        for order in [6usize, 8, 10] {
            let brute = enumerate_cubic_bipartite_brute(order);
            let gen = crate::search::generate_cubic_bipartite(order, false).unwrap();
            assert_eq!(brute.len(), gen.len());
        }
    }

    #[test]
    fn mates_brute_on_moebius() {
        let g = atlas::moebius_ladder(5);
        for b in 0..5 {
            let mates = mates_brute(&g, b, 1);
            assert_eq!(mates.len(), 1);
            assert_eq!(Some(mates[0]), crate::lehman::mate(&g, b, 1).as_set());
        }
    }

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(4).len(), 24);
    }
}
