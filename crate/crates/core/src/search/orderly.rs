//! Orderly generation of connected cubic bipartite graphs.
//!
//! Graphs are built as bipartite adjacency matrices one white vertex
//! (column) at a time, each column a 3-subset of the black vertices. Columns
//! are kept in non-increasing order under the encoding that makes row 0 the
//! most significant bit, and a partial matrix is extended only if its column
//! sequence is lexicographically maximal over all row permutations. Every
//! complete canonical object therefore appears exactly once per
//! colour-preserving isomorphism class, with no post-hoc deduplication.
//!
//! The canonicity test enumerates, as a byproduct, the row permutations
//! fixing the partial object; candidate extensions that are not maximal in
//! their orbit under those automorphisms can never produce a canonical
//! child and are skipped.
//!
//! Pruning (optional, sound for Lehman extraction): a partial matrix in
//! which two finished-degree vertices of the same colour have identical
//! neighbourhoods has a singular completion, so it can never yield a Lehman
//! matrix and is cut.

use crate::lehman::BipartiteGraph;
use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("order {0} is not an even number >= 6")]
    BadOrder(usize),
    #[error("order {0} exceeds the supported maximum {1}")]
    OrderTooLarge(usize, usize),
    #[error("base graph does not certify at k = {0}")]
    BaseNotLehman(i64),
}

/// Column mask with row r stored at bit (n-1-r), so integer order equals
/// row-0-first lexicographic order.
fn rbit(n: usize, r: usize) -> u32 {
    1 << (n - 1 - r)
}

fn full(n: usize) -> u32 {
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

type RowPerm = [u8; 32];

#[derive(Clone)]
struct PartialMatrix {
    n: usize,
    cols: Vec<u32>,
    /// The three rows of each column, ascending.
    col_rows: Vec<[u8; 3]>,
    row_deg: Vec<u8>,
    /// Incident column indices per row, for the twin cut.
    row_cols: Vec<u32>,
}

impl PartialMatrix {
    fn new(n: usize) -> Self {
        PartialMatrix {
            n,
            cols: Vec::with_capacity(n),
            col_rows: Vec::with_capacity(n),
            row_deg: vec![0; n],
            row_cols: vec![0; n],
        }
    }

    fn push(&mut self, col: u32) {
        let j = self.cols.len();
        self.cols.push(col);
        let mut rows = [0u8; 3];
        let mut slot = 0;
        for r in 0..self.n {
            if col & rbit(self.n, r) != 0 {
                self.row_deg[r] += 1;
                self.row_cols[r] |= 1 << j;
                rows[slot] = r as u8;
                slot += 1;
            }
        }
        debug_assert_eq!(slot, 3);
        self.col_rows.push(rows);
    }

    fn pop(&mut self) {
        let col = self.cols.pop().expect("non-empty");
        self.col_rows.pop();
        let j = self.cols.len();
        for r in 0..self.n {
            if col & rbit(self.n, r) != 0 {
                self.row_deg[r] -= 1;
                self.row_cols[r] &= !(1 << j);
            }
        }
    }

    fn to_graph(&self) -> BipartiteGraph {
        let n = self.n;
        let rows = (0..n)
            .map(|r| {
                let mut row = 0u32;
                for (w, &col) in self.cols.iter().enumerate() {
                    if col & rbit(n, r) != 0 {
                        row |= 1 << w;
                    }
                }
                row
            })
            .collect();
        BipartiteGraph::from_adj_rows(rows).expect("n checked at entry")
    }

    /// Twin cut: the freshly added column duplicates an earlier one, or a row
    /// that just reached degree 3 duplicates another finished row.
    fn has_finished_twins(&self) -> bool {
        let j = self.cols.len() - 1;
        let new = self.cols[j];
        if self.cols[..j].contains(&new) {
            return true;
        }
        for &r in &self.col_rows[j] {
            let r = r as usize;
            if self.row_deg[r] != 3 {
                continue;
            }
            for r2 in 0..self.n {
                if r2 != r && self.row_deg[r2] == 3 && self.row_cols[r2] == self.row_cols[r] {
                    return true;
                }
            }
        }
        false
    }

    /// Extra automorphism generators that need no search: one transposition
    /// per pair of rows with identical incidence.
    fn twin_row_generators(&self, out: &mut Vec<RowPerm>) {
        for r in 0..self.n {
            for r2 in r + 1..self.n {
                if self.row_cols[r] == self.row_cols[r2] {
                    let mut p: RowPerm = [0; 32];
                    for (i, q) in p.iter_mut().enumerate().take(self.n) {
                        *q = i as u8;
                    }
                    p[r] = r2 as u8;
                    p[r2] = r as u8;
                    out.push(p);
                    break;
                }
            }
        }
    }
}

const UNASSIGNED: u8 = 255;

/// State of the maximality search: a partial injection of old rows onto new
/// positions, matching output positions to target columns one at a time.
struct CanonSearch<'a> {
    n: usize,
    cols: &'a [u32],
    col_rows: &'a [[u8; 3]],
    old_to_new: RowPerm,
    new_used: u32, // rbit mask of used new positions
    col_used: u32,
    autos: Vec<RowPerm>,
}

/// Tests whether the non-increasing column sequence is lexicographically
/// maximal over all row permutations; when it is, also returns the
/// permutations realising equality (the automorphisms of the partial
/// object, with untouched rows mapped in increasing order).
fn is_canonical(pm: &PartialMatrix) -> Option<Vec<RowPerm>> {
    let mut s = CanonSearch {
        n: pm.n,
        cols: &pm.cols,
        col_rows: &pm.col_rows,
        old_to_new: [UNASSIGNED; 32],
        new_used: 0,
        col_used: 0,
        autos: Vec::new(),
    };
    if beats(&mut s, 0) {
        None
    } else {
        Some(s.autos)
    }
}

/// True if some completion maps the columns to a strictly larger sorted
/// sequence, having matched positions 0..i exactly so far.
fn beats(s: &mut CanonSearch, i: usize) -> bool {
    let j = s.cols.len();
    if i == j {
        let mut p = s.old_to_new;
        let mut next_free = 0usize;
        for (r, entry) in p.iter_mut().enumerate().take(s.n) {
            let _ = r;
            if *entry == UNASSIGNED {
                while s.new_used & rbit(s.n, next_free) != 0 {
                    next_free += 1;
                }
                *entry = next_free as u8;
                next_free += 1;
            }
        }
        s.autos.push(p);
        return false;
    }
    let target = s.cols[i];
    let free_positions = !s.new_used & full(s.n);
    // Step 1: can any unused column exceed the target?
    for u in 0..j {
        if s.col_used >> u & 1 == 1 {
            continue;
        }
        let mut fixed = 0u32;
        let mut free_rows = 0usize;
        for &r in &s.col_rows[u] {
            let img = s.old_to_new[r as usize];
            if img == UNASSIGNED {
                free_rows += 1;
            } else {
                fixed |= rbit(s.n, img as usize);
            }
        }
        let best = fixed | top_bits(free_positions, free_rows);
        if best > target {
            return true;
        }
    }
    // Step 2: match some unused column exactly onto the target.
    let target_free = target & free_positions;
    for u in 0..j {
        if s.col_used >> u & 1 == 1 {
            continue;
        }
        let mut fixed = 0u32;
        let mut free_rows = [0u8; 3];
        let mut nfree = 0usize;
        let mut ok = true;
        for &r in &s.col_rows[u] {
            let img = s.old_to_new[r as usize];
            if img == UNASSIGNED {
                free_rows[nfree] = r;
                nfree += 1;
            } else if target & rbit(s.n, img as usize) != 0 {
                fixed |= rbit(s.n, img as usize);
            } else {
                ok = false;
                break;
            }
        }
        if !ok || fixed != target & s.new_used {
            continue;
        }
        let mut free_pos = [0u8; 3];
        let mut npos = 0usize;
        let mut m = target_free;
        while m != 0 {
            let bit = 31 - m.leading_zeros();
            free_pos[npos] = (s.n - 1 - bit as usize) as u8;
            npos += 1;
            m &= !(1 << bit);
        }
        if npos != nfree {
            continue;
        }
        s.col_used |= 1 << u;
        if assign_rows(s, i, &free_rows[..nfree], &free_pos[..npos], 0) {
            return true;
        }
        s.col_used &= !(1 << u);
    }
    false
}

/// Tries every bijection of the free rows onto the free target positions.
fn assign_rows(s: &mut CanonSearch, i: usize, rows: &[u8], pos: &[u8], depth: usize) -> bool {
    if depth == rows.len() {
        return beats(s, i + 1);
    }
    let r = rows[depth] as usize;
    for &p in pos {
        let pb = rbit(s.n, p as usize);
        if s.new_used & pb != 0 {
            continue;
        }
        s.old_to_new[r] = p;
        s.new_used |= pb;
        if assign_rows(s, i, rows, pos, depth + 1) {
            return true;
        }
        s.old_to_new[r] = UNASSIGNED;
        s.new_used &= !pb;
    }
    false
}

/// The `count` most significant free positions, as a mask.
fn top_bits(free: u32, count: usize) -> u32 {
    let mut out = 0u32;
    let mut m = free;
    for _ in 0..count {
        if m == 0 {
            break;
        }
        let bit = 31 - m.leading_zeros();
        out |= 1 << bit;
        m &= !(1 << bit);
    }
    out
}

/// Applies a row permutation (old -> new) to a column mask.
fn apply_perm(n: usize, p: &RowPerm, col: u32) -> u32 {
    let mut out = 0u32;
    let mut m = col;
    while m != 0 {
        let bit = 31 - m.leading_zeros();
        let old = n - 1 - bit as usize;
        out |= rbit(n, p[old] as usize);
        m &= !(1 << bit);
    }
    out
}

/// All 3-subset column candidates no larger than `limit`, whose rows all
/// still need an edge, containing every row that must appear in all
/// remaining columns. Sorted descending.
fn candidates(pm: &PartialMatrix, limit: u32, remaining_after: usize) -> Vec<u32> {
    let n = pm.n;
    let mut eligible: Vec<usize> = Vec::new();
    let mut forced = 0u32;
    for r in 0..n {
        let deficit = 3 - pm.row_deg[r] as usize;
        if deficit == 0 {
            continue;
        }
        if deficit > remaining_after + 1 {
            return Vec::new();
        }
        eligible.push(r);
        if deficit == remaining_after + 1 {
            forced |= rbit(n, r);
        }
    }
    if forced.count_ones() > 3 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let m = eligible.len();
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                let col = rbit(n, eligible[a]) | rbit(n, eligible[b]) | rbit(n, eligible[c]);
                if col <= limit && col & forced == forced {
                    out.push(col);
                }
            }
        }
    }
    out.sort_unstable_by(|x, y| y.cmp(x));
    out
}

/// Drops candidates that are not maximal in their orbit under the known
/// automorphisms; such extensions can never be canonical.
fn orbit_prune(n: usize, cands: Vec<u32>, gens: &[RowPerm]) -> Vec<u32> {
    if gens.is_empty() {
        return cands;
    }
    let mut seen: Vec<u32> = Vec::with_capacity(8);
    let mut stack: Vec<u32> = Vec::with_capacity(8);
    cands
        .into_iter()
        .filter(|&c| {
            seen.clear();
            stack.clear();
            seen.push(c);
            stack.push(c);
            while let Some(x) = stack.pop() {
                for g in gens {
                    let y = apply_perm(n, g, x);
                    if y > c {
                        return false;
                    }
                    if !seen.contains(&y) {
                        seen.push(y);
                        stack.push(y);
                    }
                }
            }
            true
        })
        .collect()
}

fn extend(
    pm: &mut PartialMatrix,
    gens: &[RowPerm],
    prune: bool,
    sink: &mut impl FnMut(&BipartiteGraph),
) {
    let n = pm.n;
    let j = pm.cols.len();
    if j == n {
        let g = pm.to_graph();
        if g.is_connected() {
            sink(&g);
        }
        return;
    }
    let limit = pm.cols.last().copied().unwrap_or(u32::MAX);
    let cands = orbit_prune(n, candidates(pm, limit, n - j - 1), gens);
    for col in cands {
        pm.push(col);
        if !prune || !pm.has_finished_twins() {
            if let Some(mut autos) = is_canonical(pm) {
                pm.twin_row_generators(&mut autos);
                extend(pm, &autos, prune, sink);
            }
        }
        pm.pop();
    }
}

fn check_order(order: usize) -> Result<usize, SearchError> {
    if order < 6 || order % 2 != 0 {
        return Err(SearchError::BadOrder(order));
    }
    let n = order / 2;
    if n > crate::lehman::MAX_N {
        return Err(SearchError::OrderTooLarge(order, 2 * crate::lehman::MAX_N));
    }
    Ok(n)
}

/// Visits one representative per colour-preserving isomorphism class of
/// connected cubic bipartite graphs on `order` vertices, in parallel. The
/// set of visited graphs is deterministic; the visit order is not.
pub fn for_each_cp_class<F>(order: usize, prune: bool, sink: F) -> Result<(), SearchError>
where
    F: Fn(&BipartiteGraph) + Sync,
{
    let n = check_order(order)?;
    // Split the tree at a fixed shallow depth and process the subtrees in
    // parallel; each subtree re-drives the sequential extension.
    let split_depth = if n <= 7 { 1 } else { 7 };
    let mut roots: Vec<(PartialMatrix, Vec<RowPerm>)> = Vec::new();
    let mut pm = PartialMatrix::new(n);
    collect_roots(&mut pm, &[], prune, split_depth, &mut roots);
    roots.into_par_iter().for_each(|(mut root, gens)| {
        extend(&mut root, &gens, prune, &mut |g| sink(g));
    });
    Ok(())
}

fn collect_roots(
    pm: &mut PartialMatrix,
    gens: &[RowPerm],
    prune: bool,
    depth: usize,
    out: &mut Vec<(PartialMatrix, Vec<RowPerm>)>,
) {
    if pm.cols.len() == depth || pm.cols.len() == pm.n {
        out.push((pm.clone(), gens.to_vec()));
        return;
    }
    let limit = pm.cols.last().copied().unwrap_or(u32::MAX);
    let n = pm.n;
    let cands = orbit_prune(n, candidates(pm, limit, n - pm.cols.len() - 1), gens);
    for col in cands {
        pm.push(col);
        if !prune || !pm.has_finished_twins() {
            if let Some(mut autos) = is_canonical(pm) {
                pm.twin_row_generators(&mut autos);
                collect_roots(pm, &autos, prune, depth, out);
            }
        }
        pm.pop();
    }
}

/// One representative per colour-blind isomorphism class of connected cubic
/// bipartite graphs on `order` vertices, in a deterministic order.
pub fn generate_cubic_bipartite(
    order: usize,
    prune: bool,
) -> Result<Vec<BipartiteGraph>, SearchError> {
    use super::canon::{canonical_form, IsoMode};
    let mut out: Vec<(Vec<u8>, BipartiteGraph)> = Vec::new();
    let collected = std::sync::Mutex::new(&mut out);
    for_each_cp_class(order, prune, |g| {
        let cp = canonical_form(g, IsoMode::ColourPreserving);
        let cpt = canonical_form(&g.transpose(), IsoMode::ColourPreserving);
        if cp <= cpt {
            collected.lock().unwrap().push((cp.bytes(), g.clone()));
        }
    })?;
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out.into_iter().map(|(_, g)| g).collect())
}
