//! Symbolic matrices of supergraph families.
//!
//! Each matrix is the generalized distance matrix of a small graph extended
//! by vertices or distances that are only partly known: unknown distances are
//! `y` variables or single letters, extra diagonal entries are extra
//! indeterminates. Tables are stored verbatim, one row per line.

use std::sync::Arc;

use super::{Ring, SymMatrix};
use crate::error::{Error, Result};

pub struct LemmaMatrixSpec {
    pub name: &'static str,
    pub variables: &'static [&'static str],
    pub table: &'static str,
}

macro_rules! vars {
    ($($v:literal),* $(,)?) => { &[$($v),*] };
}

pub const LEMMA_MATRICES: &[LemmaMatrixSpec] = &[
    LemmaMatrixSpec {
        name: "bull-M",
        variables: vars!["u", "v", "x1", "x2", "x3"],
        table: "
            u 2 2 2 1
            2 v 2 1 2
            2 2 x1 1 1
            2 1 1 x2 1
            1 2 1 1 x3",
    },
    LemmaMatrixSpec {
        name: "G_{6,5}-M",
        variables: vars!["x0", "x1", "x2", "x3", "x4", "x5", "y0", "y1", "y2"],
        table: "
            x0 y2 y1 y0 2 1
            y2 x1 2 2 1 2
            y1 2 x2 1 1 2
            y0 2 1 x3 1 2
            2 1 1 1 x4 1
            1 2 2 2 1 x5",
    },
    LemmaMatrixSpec {
        name: "5-pan-M",
        variables: vars!["x0", "x1", "x2", "x3", "x4", "x5", "y0", "y1"],
        table: "
            x0 y1 y0 2 2 1
            y1 x1 1 2 1 2
            y0 1 x2 1 2 2
            2 2 1 x3 2 1
            2 1 2 2 x4 1
            1 2 2 1 1 x5",
    },
    LemmaMatrixSpec {
        name: "G_{6,7}-M",
        variables: vars!["x0", "x1", "x2", "x3", "x4", "x5", "y0", "y1", "y2", "y3", "y4"],
        table: "
            x0 y4 y3 2 1 y2
            y4 x1 1 2 y1 1
            y3 1 x2 2 y0 1
            2 2 2 x3 1 1
            1 y1 y0 1 x4 2
            y2 1 1 1 2 x5",
    },
    LemmaMatrixSpec {
        name: "G_{6,7}-M'(2,2,3,2,2)",
        variables: vars!["x0", "x2", "x3", "x4", "x5", "x_u", "a", "c", "d", "f"],
        table: "
            x0 2 2 2 1 3 a
            2 2 1 2 2 1 1
            2 1 x2 2 2 1 c
            2 2 2 x3 1 1 d
            1 2 2 1 x4 2 1
            3 1 1 1 2 x5 f
            a 1 c d 1 f x_u",
    },
    LemmaMatrixSpec {
        name: "G_{6,7}-M'(2,2,3,2,2)/x1",
        variables: vars!["x0", "x1", "x2", "x3", "x4", "x5", "x_u", "a", "c", "d", "f"],
        table: "
            x0 2 2 2 1 3 a
            2 x1 1 2 2 1 1
            2 1 x2 2 2 1 c
            2 2 2 x3 1 1 d
            1 2 2 1 x4 2 1
            3 1 1 1 2 x5 f
            a 1 c d 1 f x_u",
    },
    LemmaMatrixSpec {
        name: "G_{6,7}-M'(3,3,3,3,3)",
        variables: vars!["x0", "x1", "x2", "x3", "x4", "x5", "x_u", "c", "d", "e", "f"],
        table: "
            x0 3 3 2 1 3 2
            3 x1 1 2 3 1 1
            3 1 x2 2 3 1 c
            2 2 2 x3 1 1 d
            1 3 3 1 x4 2 e
            3 1 1 1 2 x5 f
            2 1 c d e f x_u",
    },
    LemmaMatrixSpec {
        name: "G_{6,9}-M",
        variables: vars!["x0", "x1", "x2", "x3", "x4", "x5", "y0", "y1"],
        table: "
            x0 2 y1 2 2 1
            2 x1 y0 2 2 1
            y1 y0 x2 1 1 2
            2 2 1 x3 1 1
            2 2 1 1 x4 1
            1 1 2 1 1 x5",
    },
    LemmaMatrixSpec {
        name: "co-twin-house-M",
        variables: vars!["x0", "x1", "x2", "x3", "x4", "x5", "y0", "y1", "y2"],
        table: "
            x0 y2 2 2 y1 1
            y2 x1 2 2 1 y0
            2 2 x2 1 1 1
            2 2 1 x3 1 1
            y1 1 1 1 x4 2
            1 y0 1 1 2 x5",
    },
    LemmaMatrixSpec {
        name: "co-twin-house-M'(3,3,3)",
        variables: vars!["x0", "x1", "x2", "x3", "x4", "x5", "x_v", "c", "d", "e", "f"],
        table: "
            x0 3 2 2 3 1 1
            3 x1 2 2 1 3 2
            2 2 x2 1 1 1 c
            2 2 1 x3 1 1 d
            3 1 1 1 x4 2 e
            1 3 1 1 2 x5 f
            1 2 c d e f x_v",
    },
    LemmaMatrixSpec {
        name: "co-twin-house-M'(3,3,2)",
        variables: vars!["x0", "x1", "x2", "x3", "x4", "x5", "x_u", "c", "d", "e", "f"],
        table: "
            x0 2 2 2 3 1 1
            2 x1 2 2 1 3 1
            2 2 x2 1 1 1 c
            2 2 1 x3 1 1 d
            3 1 1 1 x4 2 e
            1 3 1 1 2 x5 f
            1 1 c d e f x_u",
    },
    LemmaMatrixSpec {
        name: "co-twin-house-M''",
        variables: vars!["x0", "x1", "x2", "x3", "x4", "x5", "x_u", "x_v", "a", "b", "d", "e", "f"],
        table: "
            x0 2 2 2 3 1 1 a
            2 x1 2 2 1 3 1 b
            2 2 x2 1 1 1 2 1
            2 2 1 x3 1 1 2 d
            3 1 1 1 x4 2 2 e
            1 3 1 1 2 x5 2 f
            1 1 2 2 2 2 x_u 1
            a b 1 d e f 1 x_v",
    },
    LemmaMatrixSpec {
        name: "G_{6,12}-M",
        variables: vars!["x0", "x1", "x2", "x3", "x4", "x5", "y0"],
        table: "
            x0 2 2 2 y0 1
            2 x1 2 2 1 1
            2 2 x2 1 1 1
            2 2 1 x3 1 1
            y0 1 1 1 x4 2
            1 1 1 1 2 x5",
    },
    LemmaMatrixSpec {
        name: "G_{6,15}-M",
        variables: vars!["x0", "x1", "x2", "x3", "x4", "x5", "x6", "y0", "y1", "y2", "y3"],
        table: "
            x0 1 y3 y2 2 2 1
            1 x1 y1 y0 2 2 1
            y3 y1 x2 2 1 1 2
            y2 y0 2 x3 1 1 2
            2 2 1 1 x4 2 1
            2 2 1 1 2 x5 1
            1 1 2 2 1 1 x6",
    },
    LemmaMatrixSpec {
        name: "C7-M",
        variables: vars![
            "x0", "x1", "x2", "x3", "x4", "x5", "x6", "y0", "y1", "y2", "y3", "y4", "y5", "y6"
        ],
        table: "
            x0 y6 y5 2 2 1 1
            y6 x1 1 2 1 y4 2
            y5 1 x2 1 2 2 y3
            2 2 1 x3 y2 1 y1
            2 1 2 y2 x4 y0 1
            1 y4 2 1 y0 x5 2
            1 2 y3 y1 1 2 x6",
    },
];

/// Names of all transcribed matrices.
pub fn lemma_matrix_names() -> impl Iterator<Item = &'static str> {
    LEMMA_MATRICES.iter().map(|s| s.name)
}

/// A transcribed matrix, parsed over its own ring.
pub fn lemma_matrix(name: &str) -> Result<SymMatrix> {
    let spec = LEMMA_MATRICES
        .iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::UnknownLemmaMatrix(name.to_string()))?;
    let ring: Arc<Ring> = Ring::from_names(spec.variables)?;
    SymMatrix::parse(&ring, spec.table)
}
