//! Finite simple graphs, their edge ideals, and the combinatorial
//! criterion for the square of an edge ideal to have depth zero.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, ParseError};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// An undirected simple graph on vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from an edge list. Edges are normalized to
    /// `(min, max)` and deduplicated; loops and out-of-range vertices
    /// are rejected.
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "a graph needs at least one vertex".into(),
            ));
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::LoopEdge { vertex: u });
            }
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Self { n, edges: set })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// All possible edges on `n` vertices in lexicographic order; the
    /// bit order used by [`Graph::from_edge_mask`].
    pub fn complete_edge_list(n: usize) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for u in 1..=n {
            for v in (u + 1)..=n {
                edges.push((u, v));
            }
        }
        edges
    }

    /// The labeled graph selected by `mask` over
    /// [`Graph::complete_edge_list`]; enumerating all masks
    /// `0..2^(n choose 2)` visits every labeled graph exactly once.
    pub fn from_edge_mask(n: usize, mask: u64) -> Result<Self, Error> {
        let all = Self::complete_edge_list(n);
        if all.len() > 64 {
            return Err(Error::TooManyVertices { n });
        }
        let edges = all
            .into_iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, e)| e);
        Self::new(n, edges)
    }

    /// The squarefree ideal generated by `x_u * x_v` over the edges.
    pub fn edge_ideal(&self) -> Result<MonomialIdeal, Error> {
        if self.edges.is_empty() {
            return Err(Error::NoEdges);
        }
        let gens = self.edges.iter().map(|&(u, v)| {
            let mut e = vec![0u32; self.n];
            e[u - 1] = 1;
            e[v - 1] = 1;
            Monomial::new(e)
        });
        MonomialIdeal::new(self.n, gens)
    }

    /// Decides whether `S/I^2` has depth zero for the edge ideal `I`,
    /// purely combinatorially: the graph must contain a triangle whose
    /// closed neighborhood covers every vertex. Returns the first such
    /// triangle in lexicographic order, or `None`.
    ///
    /// A triangle's own vertices are covered through the triangle's
    /// edges, and the covering condition forces connectivity, so no
    /// separate connectivity check is needed.
    pub fn depth2_criterion(&self) -> Option<[usize; 3]> {
        if self.n < 3 {
            return None;
        }
        let adjacency = self.adjacency_masks();
        let full: u64 = mask_full(self.n);
        for a in 1..=self.n {
            for b in (a + 1)..=self.n {
                if !self.has_edge(a, b) {
                    continue;
                }
                for c in (b + 1)..=self.n {
                    if !self.has_edge(a, c) || !self.has_edge(b, c) {
                        continue;
                    }
                    let covered =
                        adjacency[a - 1] | adjacency[b - 1] | adjacency[c - 1];
                    if covered == full {
                        return Some([a, b, c]);
                    }
                }
            }
        }
        None
    }

    /// Decides whether `x_1 x_2 ... x_n` is a socle element of
    /// `S/I^2`: true exactly for the triangle on three vertices.
    pub fn maximal_socle_criterion(&self) -> bool {
        self.n == 3 && self.edges.len() == 3
    }

    fn adjacency_masks(&self) -> Vec<u64> {
        let mut masks = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            masks[u - 1] |= 1 << (v - 1);
            masks[v - 1] |= 1 << (u - 1);
        }
        masks
    }

    /// Parses the graph file format: first line `n`, then one `u v`
    /// pair per line. Blank lines are ignored; duplicate edges, loops
    /// and out-of-range vertices are rejected with their line number.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut lines = numbered_nonblank_lines(text);
        let (first_no, first) = lines
            .next()
            .ok_or_else(|| ParseError::whole_file("empty graph file"))?;
        let n: usize = first
            .trim()
            .parse()
            .map_err(|_| ParseError::at(first_no, format!("expected vertex count, got {first:?}")))?;
        if n == 0 {
            return Err(ParseError::at(first_no, "vertex count must be at least 1"));
        }
        let mut edges = BTreeSet::new();
        for (line_no, line) in lines {
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.len() != 2 {
                return Err(ParseError::at(
                    line_no,
                    format!("expected an edge \"u v\", got {line:?}"),
                ));
            }
            let mut pair = [0usize; 2];
            for (slot, token) in pair.iter_mut().zip(&tokens) {
                *slot = token.parse().map_err(|_| {
                    ParseError::at(line_no, format!("invalid vertex {token:?}"))
                })?;
            }
            let [u, v] = pair;
            if u == v {
                return Err(ParseError::at(line_no, format!("loop edge at vertex {u}")));
            }
            if u == 0 || u > n || v == 0 || v > n {
                return Err(ParseError::at(
                    line_no,
                    format!("vertex out of range 1..={n}"),
                ));
            }
            if !edges.insert((u.min(v), u.max(v))) {
                return Err(ParseError::at(line_no, format!("duplicate edge {u} {v}")));
            }
        }
        Ok(Self { n, edges })
    }

    /// Renders the graph file format parsed by [`Graph::parse`].
    pub fn to_file_string(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph on {} vertices with edges {{", self.n)?;
        for (i, (u, v)) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "}}")
    }
}

fn mask_full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn numbered_nonblank_lines(
    text: &str,
) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty())
}
