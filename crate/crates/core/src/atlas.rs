//! Named graphs and matrices used throughout the test suites and exposed by
//! the CLI. The larger graphs are fixed edge lists; the entries were
//! validated by certifying each graph at its stated parameters and checking
//! the structural properties claimed for it (ladder segments, biclique
//! partitions, rung sets).

use crate::exactmat::RationalMatrix;
use crate::lehman::BipartiteGraph;

/// The point-line incidence matrix of the Fano plane: the lines are the
/// translates of the difference set {0,1,3} mod 7.
pub fn fano_incidence() -> RationalMatrix {
    RationalMatrix::from_01(
        7,
        7,
        &[
            1, 1, 0, 1, 0, 0, 0, //
            0, 1, 1, 0, 1, 0, 0, //
            0, 0, 1, 1, 0, 1, 0, //
            0, 0, 0, 1, 1, 0, 1, //
            1, 0, 0, 0, 1, 1, 0, //
            0, 1, 0, 0, 0, 1, 1, //
            1, 0, 1, 0, 0, 0, 1,
        ],
    )
}

/// The (7,3,3) Lehman pair with k = 2. The Fano incidence matrix is
/// self-paired: A A^T = J + 2I, so the partner equals A itself.
pub fn fano_pair() -> (RationalMatrix, RationalMatrix) {
    let a = fano_incidence();
    let b = a.clone();
    (a, b)
}

/// The Heawood graph: bipartite incidence graph of the Fano plane, a
/// (7,3,3)-Lehman graph with k = 2.
pub fn heawood() -> BipartiteGraph {
    BipartiteGraph::from_matrix(&fano_pair().0).unwrap()
}

/// The cube Q_3, equivalently K_{4,4} minus a perfect matching: the cubic
/// planar ladder on 8 vertices and the (4,3,1) negative Lehman graph.
pub fn cube() -> BipartiteGraph {
    BipartiteGraph::from_adj_rows(
        (0..4).map(|i| 0b1111 & !(1u32 << i)).collect(),
    )
    .unwrap()
}

/// `J - I` of side n: K_{n,n} minus a perfect matching, the (n, n-1, 1)
/// negative Lehman graph.
pub fn complete_minus_matching(n: usize) -> BipartiteGraph {
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    BipartiteGraph::from_adj_rows((0..n).map(|i| full & !(1u32 << i)).collect()).unwrap()
}

/// The cubic Moebius ladder on `2n` vertices as a bipartite graph: black
/// vertex `i` is adjacent to white vertices `i-1`, `i`, `i+1` (mod n).
/// Requires odd `n >= 3`. For n = 3s - 1 these are (n,3,s) Lehman graphs
/// with k = 1; the smallest, n = 5, is the (5,3,2) graph.
pub fn moebius_ladder(n: usize) -> BipartiteGraph {
    assert!(n >= 3 && n % 2 == 1, "bipartite Moebius ladder needs odd n");
    BipartiteGraph::from_adj_rows(
        (0..n)
            .map(|i| {
                let prev = (i + n - 1) % n;
                let next = (i + 1) % n;
                1u32 << i | 1 << prev | 1 << next
            })
            .collect(),
    )
    .unwrap()
}

/// The Desargues graph, the unique (10,3,4)-Lehman graph (k = 2).
pub fn desargues() -> BipartiteGraph {
    let spokes: Vec<(usize, usize)> = (0..10).map(|i| (i, i)).collect();
    let outer = [(0, 1), (2, 1), (2, 3), (4, 3), (4, 5), (6, 5), (6, 7), (8, 7), (8, 9), (0, 9)];
    let inner = [(3, 0), (3, 6), (9, 6), (9, 2), (5, 2), (5, 8), (1, 8), (1, 4), (7, 4), (7, 0)];
    let mut edges = spokes;
    edges.extend_from_slice(&outer);
    edges.extend_from_slice(&inner);
    BipartiteGraph::from_edges(10, &edges).unwrap()
}

/// A twisted (11,3,4)-Lehman graph (k = 1) that is not the Moebius ladder.
pub fn g11_3_4_twisted() -> BipartiteGraph {
    let edges = [
        // spokes
        (5, 0), (0, 6), (6, 1), (1, 7), (7, 2), (2, 8), (8, 3), (3, 9), (9, 4), (4, 10), (10, 5),
        // long path
        (0, 0), (0, 1), (1, 1), (1, 2), (2, 2), (2, 3), (3, 3), (3, 4), (4, 4), (4, 5), (5, 5), (5, 6),
        // short paths and chords
        (6, 7), (7, 7), (7, 8), (8, 8), (8, 9), (9, 9), (10, 10), (10, 0), (6, 10), (9, 6),
    ];
    BipartiteGraph::from_edges(11, &edges).unwrap()
}

/// A (14,3,5)-Lehman graph drawn as two fused ladders; its rung set is
/// `g14_3_5_rungs()`.
pub fn g14_3_5_laddered() -> BipartiteGraph {
    let mut edges = vec![
        (0, 1), (10, 1), (10, 10), (1, 10), (1, 0), (9, 0), (9, 8), (7, 8), (7, 6), (5, 6),
        (5, 4), (13, 4), (13, 13), (4, 13), (4, 5), (6, 5), (6, 7), (8, 7), (8, 9), (0, 9),
        (11, 2), (11, 11), (2, 11), (2, 3), (12, 3), (12, 12), (3, 12), (3, 2),
    ];
    edges.extend_from_slice(&g14_3_5_rungs());
    BipartiteGraph::from_edges(14, &edges).unwrap()
}

/// The distinguished perfect matching of `g14_3_5_laddered()`.
pub fn g14_3_5_rungs() -> [(usize, usize); 14] {
    [
        (0, 0), (5, 5), (6, 6), (7, 7), (8, 8), (9, 9),
        (11, 10), (10, 11), (13, 12), (12, 13),
        (1, 2), (2, 1), (3, 4), (4, 3),
    ]
}

/// The (14,3,5)-Lehman graph with no 3-rung ladder segment. Its vertices
/// partition into seven 4-cycles; compressing them yields the (7,3,2)
/// negative graph.
pub fn g14_3_5_ladderless() -> BipartiteGraph {
    // Blocks: blacks {2i, 2i+1} with whites {2i, 2i+1} for i = 0..6, wired
    // cyclically: inner blacks skip two blocks, outer blacks skip one.
    let mut edges = Vec::new();
    for i in 0..7usize {
        let (ir, or) = (2 * i, 2 * i + 1);
        let (ic, oc) = (2 * i, 2 * i + 1);
        edges.extend_from_slice(&[(ir, ic), (ir, oc), (or, ic), (or, oc)]);
    }
    for i in 0..7usize {
        // outer column of block i joins the outer row of block i+1
        edges.push(((2 * ((i + 1) % 7)) + 1, 2 * i + 1));
        // inner column of block i joins the inner row of block i+2
        edges.push((2 * ((i + 2) % 7), 2 * i));
    }
    BipartiteGraph::from_edges(14, &edges).unwrap()
}

/// The (17,3,6)-Lehman graph (k = 1) that contains 3-rung ladder segments
/// but no 4-rung ladder segment; it was absent from an earlier published
/// catalogue of this family.
pub fn g17_3_6() -> BipartiteGraph {
    let white_nbrs: [[usize; 3]; 17] = [
        [0, 1, 2],
        [0, 1, 3],
        [0, 2, 4],
        [1, 5, 6],
        [2, 7, 8],
        [3, 7, 9],
        [3, 10, 11],
        [4, 5, 12],
        [4, 10, 13],
        [5, 6, 9],
        [6, 14, 15],
        [7, 8, 12],
        [8, 14, 16],
        [9, 13, 16],
        [10, 11, 13],
        [11, 12, 15],
        [14, 15, 16],
    ];
    let mut edges = Vec::new();
    for (w, blacks) in white_nbrs.iter().enumerate() {
        for &b in blacks {
            edges.push((b, w));
        }
    }
    BipartiteGraph::from_edges(17, &edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_named_graphs_are_cubic_and_connected() {
        for (name, g) in [
            ("cube", cube()),
            ("moebius5", moebius_ladder(5)),
            ("moebius11", moebius_ladder(11)),
            ("heawood", heawood()),
            ("desargues", desargues()),
            ("g11twisted", g11_3_4_twisted()),
            ("g14laddered", g14_3_5_laddered()),
            ("g14ladderless", g14_3_5_ladderless()),
            ("g17", g17_3_6()),
        ] {
            assert!(g.is_cubic(), "{name} not cubic");
            assert!(g.is_connected(), "{name} not connected");
        }
    }

    #[test]
    fn complete_minus_matching_degrees() {
        let g = complete_minus_matching(5);
        assert_eq!(g.regular_degree(), Some(4));
        assert_eq!(cube(), complete_minus_matching(4));
    }
}
