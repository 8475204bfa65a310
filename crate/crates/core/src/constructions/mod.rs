//! The two construction pairs for cubic Lehman graphs: 3-rung ladder
//! reduction/insertion and biclique compression/expansion.

mod biclique;
mod ladder;

pub use biclique::{
    biclique_compress, biclique_expand, biclique_expand_with, find_biclique_partitions,
    natural_orderings, perfect_matchings, BicliquePartition, EdgeOrderings,
};
pub use ladder::{
    expandable_pairs, expandable_pairs_exhaustive, find_3rung_ladders, find_ladder_segments,
    ladder_insert, ladder_reduce, ExpandablePair, LadderSegment,
};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("graph is not cubic")]
    NotCubic,
    #[error("graph is not regular")]
    NotRegular,
    #[error("regular degree {0} is below 3")]
    DegreeTooSmall(usize),
    #[error("segment has {0} rungs, reduction needs 3")]
    NotThreeRungs(usize),
    #[error("segment description does not match the graph")]
    InvalidSegment,
    #[error("attachment vertices coincide: {0:?}")]
    AttachmentsCoincide([usize; 4]),
    #[error("black {black} is already adjacent to white {white}")]
    ForbiddenAdjacency { black: usize, white: usize },
    #[error("ladder operations require k = 1 or k = -1, got k = {0}")]
    UnsupportedK(i64),
    #[error("edge pair is not expandable")]
    NotExpandable,
    #[error("blocks do not form a biclique partition")]
    InvalidPartition,
    #[error("compressed graph is not regular")]
    CompressionNotRegular,
    #[error("biclique operation undefined for r = {r}, k = {k}")]
    UnsupportedParameters { r: usize, k: i64 },
    #[error("not a perfect matching of the graph")]
    InvalidMatching,
    #[error("a positive cubic graph expands only along its rungs")]
    MatchingNotRungs,
    #[error("expanded graph side {0} exceeds the supported maximum")]
    ResultTooLarge(usize),
}
