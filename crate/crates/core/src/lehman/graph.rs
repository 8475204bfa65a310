//! Coloured bipartite graphs with equal colour classes, stored as row
//! bitmasks of the bipartite adjacency matrix (rows = black vertices,
//! columns = white vertices).

use crate::exactmat::{LmxError, RationalMatrix};
use num_traits::{One, Zero};
use thiserror::Error;

/// Largest supported side size. Row masks are `u32`.
pub const MAX_N: usize = 32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("side size {0} exceeds the supported maximum {MAX_N}")]
    TooLarge(usize),
    #[error("matrix is not square: {0}x{1}")]
    NotSquare(usize, usize),
    #[error("matrix has an entry that is not 0 or 1")]
    NotZeroOne,
    #[error("vertex index {0} out of range")]
    BadVertex(usize),
    #[error("lmx: {0}")]
    Lmx(#[from] LmxError),
    #[error("b6: {0}")]
    B6(String),
}

/// A bipartite graph on `n` black and `n` white vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    n: usize,
    adj: Vec<u32>,
}

impl std::fmt::Debug for BipartiteGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "BipartiteGraph n={}", self.n)?;
        for i in 0..self.n {
            let row: String =
                (0..self.n).map(|j| if self.has_edge(i, j) { '1' } else { '0' }).collect();
            writeln!(f, "  {row}")?;
        }
        Ok(())
    }
}

impl BipartiteGraph {
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_N {
            return Err(GraphError::TooLarge(n));
        }
        Ok(BipartiteGraph { n, adj: vec![0; n] })
    }

    /// From black-row adjacency masks.
    pub fn from_adj_rows(adj: Vec<u32>) -> Result<Self, GraphError> {
        let n = adj.len();
        if n > MAX_N {
            return Err(GraphError::TooLarge(n));
        }
        let mask = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        if adj.iter().any(|&r| r & !mask != 0) {
            return Err(GraphError::BadVertex(n));
        }
        Ok(BipartiteGraph { n, adj })
    }

    /// From a list of (black, white) edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for &(b, w) in edges {
            if b >= n || w >= n {
                return Err(GraphError::BadVertex(b.max(w)));
            }
            g.adj[b] |= 1 << w;
        }
        Ok(g)
    }

    pub fn from_matrix(m: &RationalMatrix) -> Result<Self, GraphError> {
        if !m.is_square() {
            return Err(GraphError::NotSquare(m.rows(), m.cols()));
        }
        if !m.is_zero_one() {
            return Err(GraphError::NotZeroOne);
        }
        let n = m.rows();
        if n > MAX_N {
            return Err(GraphError::TooLarge(n));
        }
        let mut adj = vec![0u32; n];
        for (i, row) in adj.iter_mut().enumerate() {
            for j in 0..n {
                if m.get(i, j).is_one() {
                    *row |= 1 << j;
                }
            }
        }
        Ok(BipartiteGraph { n, adj })
    }

    pub fn to_matrix(&self) -> RationalMatrix {
        RationalMatrix::from_fn(self.n, self.n, |i, j| {
            if self.has_edge(i, j) {
                num_rational::BigRational::one()
            } else {
                num_rational::BigRational::zero()
            }
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn adj_rows(&self) -> &[u32] {
        &self.adj
    }

    pub fn row(&self, b: usize) -> u32 {
        self.adj[b]
    }

    pub fn has_edge(&self, b: usize, w: usize) -> bool {
        self.adj[b] >> w & 1 == 1
    }

    pub fn add_edge(&mut self, b: usize, w: usize) {
        self.adj[b] |= 1 << w;
    }

    pub fn remove_edge(&mut self, b: usize, w: usize) {
        self.adj[b] &= !(1 << w);
    }

    /// Column mask: black neighbours of white vertex `w`.
    pub fn col(&self, w: usize) -> u32 {
        let mut m = 0;
        for b in 0..self.n {
            if self.has_edge(b, w) {
                m |= 1 << b;
            }
        }
        m
    }

    pub fn black_degree(&self, b: usize) -> usize {
        self.adj[b].count_ones() as usize
    }

    pub fn white_degree(&self, w: usize) -> usize {
        self.col(w).count_ones() as usize
    }

    /// The common degree when the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let r = self.black_degree(0);
        for b in 1..self.n {
            if self.black_degree(b) != r {
                return None;
            }
        }
        for w in 0..self.n {
            if self.white_degree(w) != r {
                return None;
            }
        }
        Some(r)
    }

    pub fn is_cubic(&self) -> bool {
        self.regular_degree() == Some(3)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for b in 0..self.n {
            let mut m = self.adj[b];
            while m != 0 {
                let w = m.trailing_zeros() as usize;
                out.push((b, w));
                m &= m - 1;
            }
        }
        out
    }

    /// Transpose swaps the colour classes.
    pub fn transpose(&self) -> Self {
        let adj = (0..self.n).map(|w| self.col(w)).collect();
        BipartiteGraph { n: self.n, adj }
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen_b = 1u32;
        let mut seen_w = 0u32;
        let mut stack = vec![(true, 0usize)];
        while let Some((black, v)) = stack.pop() {
            let nbrs = if black { self.adj[v] } else { self.col(v) };
            let mut m = nbrs;
            while m != 0 {
                let u = m.trailing_zeros() as usize;
                m &= m - 1;
                let seen = if black { &mut seen_w } else { &mut seen_b };
                if *seen >> u & 1 == 0 {
                    *seen |= 1 << u;
                    stack.push((!black, u));
                }
            }
        }
        let full = if self.n == 32 { u32::MAX } else { (1u32 << self.n) - 1 };
        seen_b == full && seen_w == full
    }

    /// Relabels black vertices by `pb` and white vertices by `pw`
    /// (`new index = p[old index]`).
    pub fn relabel(&self, pb: &[usize], pw: &[usize]) -> Self {
        let mut adj = vec![0u32; self.n];
        for b in 0..self.n {
            let mut m = self.adj[b];
            while m != 0 {
                let w = m.trailing_zeros() as usize;
                m &= m - 1;
                adj[pb[b]] |= 1 << pw[w];
            }
        }
        BipartiteGraph { n: self.n, adj }
    }

    pub fn to_lmx(&self) -> String {
        self.to_matrix().to_lmx()
    }

    pub fn from_lmx(text: &str) -> Result<Self, GraphError> {
        let m = RationalMatrix::from_lmx(text)?;
        Self::from_matrix(&m)
    }

    /// One-line interchange form: `B6:` followed by the sparse6 body of the
    /// 2n-vertex graph with the black vertices numbered first.
    pub fn to_b6(&self) -> String {
        let mut edges: Vec<(usize, usize)> =
            self.edges().into_iter().map(|(b, w)| (b, w + self.n)).collect();
        edges.sort_by_key(|&(u, v)| (v, u));
        format!("B6:{}", sparse6_encode(2 * self.n, &edges))
    }

    pub fn from_b6(line: &str) -> Result<Self, GraphError> {
        let body = line
            .trim()
            .strip_prefix("B6:")
            .ok_or_else(|| GraphError::B6("missing B6: prefix".into()))?;
        let body = body.strip_prefix(':').unwrap_or(body);
        let (order, edges) = sparse6_decode(body).map_err(GraphError::B6)?;
        if order % 2 != 0 {
            return Err(GraphError::B6("odd vertex count".into()));
        }
        let n = order / 2;
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            let (lo, hi) = (u.min(v), u.max(v));
            if lo >= n || hi < n {
                return Err(GraphError::B6(format!("edge ({lo},{hi}) not bipartite with blacks first")));
            }
            g.add_edge(lo, hi - n);
        }
        Ok(g)
    }
}

fn s6_number(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
}

fn sparse6_encode(n: usize, edges: &[(usize, usize)]) -> String {
    let k = if n <= 1 { 1 } else { usize::BITS as usize - (n - 1).leading_zeros() as usize };
    let mut out = Vec::new();
    s6_number(n, &mut out);
    let mut bits: Vec<bool> = Vec::new();
    let push_item = |bits: &mut Vec<bool>, b: bool, x: usize| {
        bits.push(b);
        for i in (0..k).rev() {
            bits.push(x >> i & 1 == 1);
        }
    };
    let mut v = 0usize;
    for &(u, w) in edges {
        debug_assert!(u <= w);
        if w == v {
            push_item(&mut bits, false, u);
        } else if w == v + 1 {
            v += 1;
            push_item(&mut bits, true, u);
        } else {
            v = w;
            push_item(&mut bits, true, w);
            push_item(&mut bits, false, u);
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(true);
    }
    for chunk in bits.chunks(6) {
        let mut val = 0u8;
        for &b in chunk {
            val = val << 1 | u8::from(b);
        }
        out.push(val + 63);
    }
    String::from_utf8(out).unwrap()
}

fn sparse6_decode(body: &str) -> Result<(usize, Vec<(usize, usize)>), String> {
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err("empty body".into());
    }
    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.len() < 4 {
            return Err("truncated order".into());
        }
        let n = ((bytes[1] as usize - 63) << 12)
            | ((bytes[2] as usize - 63) << 6)
            | (bytes[3] as usize - 63);
        (n, 4)
    } else {
        ((bytes[0] as usize).checked_sub(63).ok_or("bad order byte")?, 1)
    };
    let mut bits: Vec<bool> = Vec::new();
    while pos < bytes.len() {
        let b = bytes[pos].checked_sub(63).ok_or("bad data byte")?;
        if b > 63 {
            return Err("bad data byte".into());
        }
        for i in (0..6).rev() {
            bits.push(b >> i & 1 == 1);
        }
        pos += 1;
    }
    let k = if n <= 1 { 1 } else { usize::BITS as usize - (n - 1).leading_zeros() as usize };
    let mut edges = Vec::new();
    let mut v = 0usize;
    let mut i = 0;
    while i + k < bits.len() + 1 && i + 1 + k <= bits.len() {
        let b = bits[i];
        let mut x = 0usize;
        for j in 0..k {
            x = x << 1 | usize::from(bits[i + 1 + j]);
        }
        i += 1 + k;
        if b {
            v += 1;
        }
        if v >= n || x >= n {
            break;
        }
        if x > v {
            v = x;
        } else if x != v {
            edges.push((x, v));
        }
    }
    Ok((n, edges))
}
