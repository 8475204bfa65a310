//! Canonical forms of coloured bipartite graphs.
//!
//! The colour-preserving canonical form is the lexicographically minimal
//! row-major adjacency encoding over all row and column permutations, found
//! by a backtracking search that refines an ordered partition of the columns
//! as rows are placed. The colour-blind form additionally minimises over
//! transposition: min(canon(A), canon(A^T)).

use crate::lehman::BipartiteGraph;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum IsoMode {
    #[serde(rename = "preserving")]
    ColourPreserving,
    #[serde(rename = "blind")]
    ColourBlind,
}

/// A canonical encoding. Equal encodings (with equal mode) mean isomorphic
/// graphs under that mode; distinct encodings mean non-isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub mode: IsoMode,
    n: usize,
    /// Row-major minimal code; entry i holds row i's column bits with
    /// column position p stored at bit (n-1-p).
    code: Vec<u32>,
}

impl CanonicalForm {
    pub fn bytes(&self) -> Vec<u8> {
        let mut out = vec![
            match self.mode {
                IsoMode::ColourPreserving => 0u8,
                IsoMode::ColourBlind => 1,
            },
            self.n as u8,
        ];
        for &row in &self.code {
            out.extend_from_slice(&row.to_be_bytes());
        }
        out
    }

    /// The canonically labelled graph itself.
    pub fn graph(&self) -> BipartiteGraph {
        let n = self.n;
        let rows = self
            .code
            .iter()
            .map(|&pat| {
                let mut row = 0u32;
                for p in 0..n {
                    if pat >> (n - 1 - p) & 1 == 1 {
                        row |= 1 << p;
                    }
                }
                row
            })
            .collect();
        BipartiteGraph::from_adj_rows(rows).expect("size preserved")
    }
}

/// Minimal row-major code over row and column permutations.
fn min_code(g: &BipartiteGraph) -> Vec<u32> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let mut best: Option<Vec<u32>> = None;
    let mut prefix: Vec<u32> = Vec::with_capacity(n);
    let cells = vec![full_mask(n)];
    let mut remaining: Vec<usize> = (0..n).collect();
    search(g, n, &mut remaining, &cells, &mut prefix, &mut best);
    best.expect("n > 0")
}

fn full_mask(n: usize) -> u32 {
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Pattern of a row against the ordered column cells: within each cell the
/// non-neighbours come first, so the ones of the row sit at the end of each
/// cell's position range.
fn row_pattern(n: usize, row: u32, cells: &[u32]) -> u32 {
    let mut pat = 0u32;
    let mut off = 0usize;
    for &cell in cells {
        let len = cell.count_ones() as usize;
        let t = (row & cell).count_ones() as usize;
        if t > 0 {
            pat |= ((1u32 << t) - 1) << (n - off - len);
        }
        off += len;
    }
    pat
}

fn search(
    g: &BipartiteGraph,
    n: usize,
    remaining: &mut Vec<usize>,
    cells: &[u32],
    prefix: &mut Vec<u32>,
    best: &mut Option<Vec<u32>>,
) {
    let depth = prefix.len();
    if depth == n {
        if best.as_ref().is_none_or(|b| prefix[..] < b[..]) {
            *best = Some(prefix.clone());
        }
        return;
    }
    // Minimal achievable pattern at this depth.
    let mut min_pat = u32::MAX;
    for &r in remaining.iter() {
        let pat = row_pattern(n, g.row(r), cells);
        if pat < min_pat {
            min_pat = pat;
        }
    }
    // Prefix domination: anything larger than the best code's entry here is
    // hopeless; anything smaller wins regardless of the remainder.
    if let Some(b) = best.as_ref() {
        if prefix[..] == b[..depth] && min_pat > b[depth] {
            return;
        }
    }
    let candidates: Vec<usize> = remaining
        .iter()
        .copied()
        .filter(|&r| row_pattern(n, g.row(r), cells) == min_pat)
        .collect();
    for r in candidates {
        let row = g.row(r);
        let mut next_cells = Vec::with_capacity(cells.len() + 4);
        for &cell in cells {
            let out = cell & !row;
            let inn = cell & row;
            if out != 0 {
                next_cells.push(out);
            }
            if inn != 0 {
                next_cells.push(inn);
            }
        }
        let idx = remaining.iter().position(|&x| x == r).expect("candidate present");
        remaining.swap_remove(idx);
        prefix.push(min_pat);
        search(g, n, remaining, &next_cells, prefix, best);
        prefix.pop();
        remaining.push(r);
        let last = remaining.len() - 1;
        remaining.swap(idx.min(last), last);
    }
}

/// Canonical form of a graph under the requested equivalence.
pub fn canonical_form(g: &BipartiteGraph, mode: IsoMode) -> CanonicalForm {
    let code = match mode {
        IsoMode::ColourPreserving => min_code(g),
        IsoMode::ColourBlind => {
            let a = min_code(g);
            let b = min_code(&g.transpose());
            a.min(b)
        }
    };
    CanonicalForm { mode, n: g.n(), code }
}

/// True iff some isomorphism of the graph exchanges the colour classes,
/// i.e. the colour-preserving forms of A and A^T agree.
pub fn has_colour_reversing_automorphism(g: &BipartiteGraph) -> bool {
    min_code(g) == min_code(&g.transpose())
}
