//! Support library for the `lehman` binary: embedded reference counts, run
//! manifests, input sniffing and the table computations shared with the
//! acceptance suite.

pub mod expected;
pub mod manifest;

use anyhow::{bail, Context, Result};
use lehman_core::lehman::BipartiteGraph;
use lehman_core::search::{self, Catalogue};

/// Reads a graph from `.lmx` text or a one-line `B6:` encoding.
pub fn parse_graph(text: &str) -> Result<BipartiteGraph> {
    let trimmed = text.trim_start();
    if trimmed.starts_with("B6:") {
        Ok(BipartiteGraph::from_b6(trimmed.lines().next().unwrap_or_default())?)
    } else {
        Ok(BipartiteGraph::from_lmx(text)?)
    }
}

pub fn read_graph(path: &std::path::Path) -> Result<(String, BipartiteGraph)> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let g = parse_graph(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok((text, g))
}

/// One computed table row: parameters plus both class counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableRow {
    pub n: usize,
    pub s: usize,
    pub order: usize,
    pub l: usize,
    pub lp: usize,
}

/// Rows of the positive (k = 1) or negative (k = -1) catalogue table, up to
/// the given number of vertices, computed from scratch.
pub fn catalogue_table(k: i64, max_2n: usize) -> Result<Vec<(TableRow, Catalogue)>> {
    let mut rows = Vec::new();
    let mut s = 1usize;
    loop {
        let n = (3 * s) as i64 - k;
        if n <= 3 {
            s += 1;
            continue;
        }
        let n = n as usize;
        if 2 * n > max_2n {
            break;
        }
        let cat = search::lehman_catalogue(2 * n, k, true)?;
        rows.push((
            TableRow { n, s, order: 2 * n, l: cat.l_count, lp: cat.lp_count },
            cat,
        ));
        s += 1;
    }
    Ok(rows)
}

/// The mni counts over the positive catalogue, up to the given order.
pub fn mni_table(max_2n: usize) -> Result<Vec<(usize, usize)>> {
    let mut rows = Vec::new();
    for (row, cat) in catalogue_table(1, max_2n)? {
        let mut count = 0;
        for entry in &cat.blind_entries {
            let g = BipartiteGraph::from_lmx(entry)?;
            let cert = lehman_core::lehman::certify(&g, 1)
                .context("catalogue entry does not certify")?;
            if lehman_core::polyhedra::mni_test_square(&g, &cert)? {
                count += 1;
            }
        }
        rows.push((row.n, count));
    }
    Ok(rows)
}

/// The named graphs the `atlas` subcommand writes, with the parameters they
/// certify at.
pub fn atlas_entries() -> Vec<(&'static str, BipartiteGraph, i64)> {
    use lehman_core::atlas;
    vec![
        ("cube-4-3-1", atlas::cube(), -1),
        ("moebius-5-3-2", atlas::moebius_ladder(5), 1),
        ("moebius-11-3-4", atlas::moebius_ladder(11), 1),
        ("twisted-11-3-4", atlas::g11_3_4_twisted(), 1),
        ("laddered-14-3-5", atlas::g14_3_5_laddered(), 1),
        ("ladderless-14-3-5", atlas::g14_3_5_ladderless(), 1),
        ("missing-17-3-6", atlas::g17_3_6(), 1),
        ("heawood-7-3-3", atlas::heawood(), 2),
        ("desargues-10-3-4", atlas::desargues(), 2),
    ]
}

/// Validates every atlas entry: certification at its stated parameters plus
/// the structural properties tied to individual entries.
pub fn validate_atlas() -> Result<()> {
    use lehman_core::constructions::{find_3rung_ladders, find_biclique_partitions, find_ladder_segments};
    for (name, g, k) in atlas_entries() {
        let cert = lehman_core::lehman::certify(&g, k)
            .with_context(|| format!("{name} does not certify at k={k}"))?;
        if (cert.ty.r * cert.ty.s) as i64 != cert.ty.n as i64 + k {
            bail!("{name}: inconsistent type {}", cert.ty);
        }
    }
    let missing = lehman_core::atlas::g17_3_6();
    if find_3rung_ladders(&missing)?.is_empty() {
        bail!("missing-17-3-6 should contain a 3-rung ladder segment");
    }
    if !find_ladder_segments(&missing, 4)?.is_empty() {
        bail!("missing-17-3-6 should contain no 4-rung ladder segment");
    }
    let ladderless = lehman_core::atlas::g14_3_5_ladderless();
    if !find_3rung_ladders(&ladderless)?.is_empty() {
        bail!("ladderless-14-3-5 should contain no 3-rung ladder segment");
    }
    if find_biclique_partitions(&ladderless)?.is_empty() {
        bail!("ladderless-14-3-5 should partition into 4-cycles");
    }
    Ok(())
}
