//! Linear orders on the vertex set.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{input, Error, Result};
use crate::graph::io::content_lines;
use crate::graph::Vertex;

/// A bijection between vertices and positions `0..n`.
///
/// `pos(u) < pos(v)` means `u` is smaller than `v` in the order. Files and
/// reports use 1-based ranks (`rank = pos + 1`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearOrder {
    pos: Vec<usize>,
    seq: Vec<Vertex>,
}

impl LinearOrder {
    pub fn identity(n: usize) -> Self {
        LinearOrder {
            pos: (0..n).collect(),
            seq: (0..n).collect(),
        }
    }

    /// Builds the order listing `seq` from smallest to largest.
    pub fn from_sequence(seq: Vec<Vertex>) -> Result<Self> {
        let n = seq.len();
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in seq.iter().enumerate() {
            if v >= n {
                return input(format!("vertex {v} out of range in order of length {n}"));
            }
            if pos[v] != usize::MAX {
                return input(format!("vertex {v} appears twice in order"));
            }
            pos[v] = i;
        }
        Ok(LinearOrder { pos, seq })
    }

    /// Builds the order from 1-based ranks (`ranks[v]` is the rank of `v`).
    pub fn from_ranks(ranks: &[usize]) -> Result<Self> {
        let n = ranks.len();
        let mut seq = vec![usize::MAX; n];
        for (v, &r) in ranks.iter().enumerate() {
            if r == 0 || r > n {
                return input(format!("rank {r} of vertex {v} outside 1..={n}"));
            }
            if seq[r - 1] != usize::MAX {
                return input(format!("rank {r} used twice"));
            }
            seq[r - 1] = v;
        }
        LinearOrder::from_sequence(seq)
    }

    /// Uniformly random order (Fisher–Yates over the identity).
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut seq: Vec<Vertex> = (0..n).collect();
        seq.shuffle(rng);
        LinearOrder::from_sequence(seq).unwrap()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.seq.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    /// 0-based position of `v`.
    #[inline]
    pub fn pos(&self, v: Vertex) -> usize {
        self.pos[v]
    }

    /// 1-based rank of `v`.
    #[inline]
    pub fn rank(&self, v: Vertex) -> usize {
        self.pos[v] + 1
    }

    /// Vertex at 0-based position `i`.
    #[inline]
    pub fn at(&self, i: usize) -> Vertex {
        self.seq[i]
    }

    /// Vertices from smallest to largest.
    pub fn sequence(&self) -> &[Vertex] {
        &self.seq
    }

    pub fn positions(&self) -> &[usize] {
        &self.pos
    }

    #[inline]
    pub fn less(&self, u: Vertex, v: Vertex) -> bool {
        self.pos[u] < self.pos[v]
    }

    pub fn reversed(&self) -> Self {
        let mut seq = self.seq.clone();
        seq.reverse();
        LinearOrder::from_sequence(seq).unwrap()
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<()> {
        if self.len() == n {
            Ok(())
        } else {
            input(format!("order covers {} vertices, graph has {n}", self.len()))
        }
    }

    /// Order file: a single line `rank(0) rank(1) ... rank(n-1)`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = content_lines(text, "#");
        let Some((line, body)) = lines.next() else {
            return Ok(LinearOrder::identity(0));
        };
        let ranks = body
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::Parse {
                line,
                msg: format!("bad rank: {e}"),
            })?;
        if let Some((extra, _)) = lines.next() {
            return Err(Error::Parse {
                line: extra,
                msg: "order file must contain a single line".into(),
            });
        }
        LinearOrder::from_ranks(&ranks).map_err(|e| Error::Parse {
            line,
            msg: e.to_string(),
        })
    }

    pub fn to_file_string(&self) -> String {
        let ranks: Vec<String> = (0..self.len()).map(|v| self.rank(v).to_string()).collect();
        format!("{}\n", ranks.join(" "))
    }
}
