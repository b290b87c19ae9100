//! Simplicial complexes given by their facet lists, facet ideals, and
//! the intersection conditions deciding when the maximal-socle
//! candidate `(x_1...x_n)^{k-1}` lies in the socle of `S/I^k`.

use std::cmp::Ordering;
use std::fmt;

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::error::{Error, ParseError};
use crate::graph::numbered_nonblank_lines;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// A set of vertices from `1..=64`, stored as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// Builds a set from 1-based vertex labels; labels above 64 are
    /// rejected.
    pub fn from_vertices(vertices: impl IntoIterator<Item = usize>) -> Result<Self, Error> {
        let mut bits = 0u64;
        for v in vertices {
            if v == 0 || v > 64 {
                return Err(Error::VertexOutOfRange { vertex: v, n: 64 });
            }
            bits |= 1 << (v - 1);
        }
        Ok(Self(bits))
    }

    pub fn singleton(v: usize) -> Self {
        Self::from_vertices([v]).expect("vertex in range")
    }

    /// `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        assert!((1..=64).contains(&n));
        Self(if n == 64 { u64::MAX } else { (1 << n) - 1 })
    }

    pub fn contains(&self, v: usize) -> bool {
        (1..=64).contains(&v) && self.0 >> (v - 1) & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn intersection(&self, other: &Self) -> Self {
        Self(self.0 & other.0)
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Ascending 1-based vertex labels.
    pub fn vertices(&self) -> Vec<usize> {
        (1..=64).filter(|&v| self.contains(v)).collect()
    }
}

impl FromIterator<usize> for VertexSet {
    /// Convenience for in-range construction; panics on labels
    /// outside `1..=64`.
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        Self::from_vertices(iter).expect("vertex labels in 1..=64")
    }
}

impl Ord for VertexSet {
    /// Lexicographic on the ascending vertex sequence, so `{1,2}`
    /// sorts before `{1,3}` before `{2}`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.vertices().cmp(&other.vertices())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.vertices().into_iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.vertices().serialize(serializer)
    }
}

/// A simplicial complex on `1..=n`, given by its facets: a family of
/// nonempty vertex sets that is an antichain under inclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VertexSet>,
}

/// Outcome of the "every k facets share a vertex" check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntersectionCheck {
    pub holds: bool,
    /// A k-tuple of facets with empty intersection, when one exists.
    pub counterexample: Option<Vec<VertexSet>>,
}

/// Outcome of the "every vertex is the exact intersection of some k
/// facets" check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SingletonCover {
    pub holds: bool,
    /// Entry `j - 1`: a k-tuple of facets meeting exactly in `{j}`, if
    /// one exists.
    pub witnesses: Vec<Option<Vec<VertexSet>>>,
}

/// Combined verdict: the maximal-socle candidate `(x_1...x_n)^{k-1}`
/// lies in the socle of `S/I^k` iff both checks hold.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaximalSocleCheck {
    pub k: u32,
    pub intersections_nonempty: IntersectionCheck,
    pub singleton_cover: SingletonCover,
    pub maximal_socle: bool,
}

impl SimplicialComplex {
    /// Validates and sorts a facet list. Facets must be nonempty,
    /// within `1..=n`, and pairwise incomparable under inclusion.
    pub fn new(n: usize, facets: Vec<Vec<usize>>) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "a complex needs at least one vertex".into(),
            ));
        }
        if n > 64 {
            return Err(Error::TooManyVertices { n });
        }
        let mut sets = Vec::with_capacity(facets.len());
        for facet in facets {
            if facet.is_empty() {
                return Err(Error::EmptyFacet);
            }
            for &v in &facet {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            sets.push(VertexSet::from_vertices(facet)?);
        }
        for (i, a) in sets.iter().enumerate() {
            for b in sets.iter().skip(i + 1) {
                if a.is_subset_of(b) || b.is_subset_of(a) {
                    let (inner, outer) = if a.is_subset_of(b) { (a, b) } else { (b, a) };
                    return Err(Error::ComparableFacets {
                        inner: inner.vertices().iter().join(","),
                        outer: outer.vertices().iter().join(","),
                    });
                }
            }
        }
        sets.sort();
        Ok(Self { n, facets: sets })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    /// The squarefree ideal generated by the facet indicator
    /// monomials; an antichain of facets yields exactly the minimal
    /// generators. An empty facet list yields the zero ideal.
    pub fn facet_ideal(&self) -> MonomialIdeal {
        let gens = self.facets.iter().map(|facet| {
            let mut e = vec![0u32; self.n];
            for v in facet.vertices() {
                e[v - 1] = 1;
            }
            Monomial::new(e)
        });
        MonomialIdeal::new(self.n, gens).expect("facet vectors have arity n")
    }

    /// Inverse of [`SimplicialComplex::facet_ideal`]: reads the facets
    /// off the supports of the minimal generators of a squarefree
    /// nonzero ideal.
    pub fn from_facet_ideal(ideal: &MonomialIdeal) -> Result<Self, Error> {
        if ideal.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if !ideal.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        if ideal.n() > 64 {
            return Err(Error::TooManyVertices { n: ideal.n() });
        }
        let facets = ideal
            .generators()
            .iter()
            .map(|g| g.support().map(|i| i + 1).collect())
            .collect();
        Self::new(ideal.n(), facets)
    }

    /// Decides whether every `k` facets (repetition allowed) share a
    /// common vertex. Equivalent to `(x_1...x_n)^{k-1}` lying outside
    /// the k-th power of the facet ideal.
    ///
    /// Repeating a facet only enlarges the intersection, so it
    /// suffices to test the subsets of `min(k, facet count)` distinct
    /// facets. A counterexample is padded to length `k` by repetition.
    pub fn k_intersections_nonempty(&self, k: u32) -> IntersectionCheck {
        let size = (k as usize).min(self.facets.len());
        if size == 0 {
            return IntersectionCheck { holds: true, counterexample: None };
        }
        for combo in self.facets.iter().combinations(size) {
            let common = combo
                .iter()
                .fold(VertexSet::full(self.n), |acc, f| acc.intersection(f));
            if common.is_empty() {
                let mut tuple: Vec<VertexSet> = combo.into_iter().copied().collect();
                while tuple.len() < k as usize {
                    tuple.push(*tuple.last().expect("size >= 1"));
                }
                return IntersectionCheck { holds: false, counterexample: Some(tuple) };
            }
        }
        IntersectionCheck { holds: true, counterexample: None }
    }

    /// Decides whether, for each vertex `j`, some `k` facets
    /// (repetition allowed) intersect exactly in `{j}`. Together with
    /// [`SimplicialComplex::k_intersections_nonempty`] this decides
    /// membership of `(x_1...x_n)^{k-1}` in the socle of `S/I^k`.
    ///
    /// Witness tuples are padded to length `k` by repetition.
    pub fn singleton_intersection_cover(&self, k: u32) -> SingletonCover {
        let mut witnesses = Vec::with_capacity(self.n);
        for j in 1..=self.n {
            witnesses.push(self.singleton_witness(j, k));
        }
        let holds = witnesses.iter().all(Option::is_some);
        SingletonCover { holds, witnesses }
    }

    fn singleton_witness(&self, j: usize, k: u32) -> Option<Vec<VertexSet>> {
        let candidates: Vec<&VertexSet> =
            self.facets.iter().filter(|f| f.contains(j)).collect();
        if candidates.is_empty() {
            return None;
        }
        // The intersection of all candidates is the smallest reachable;
        // if it is bigger than {j}, no subset works for any k.
        let target = VertexSet::singleton(j);
        let floor = candidates
            .iter()
            .fold(VertexSet::full(self.n), |acc, f| acc.intersection(f));
        if floor != target {
            return None;
        }
        for size in 1..=(k as usize).min(candidates.len()) {
            for combo in candidates.iter().combinations(size) {
                let common = combo
                    .iter()
                    .fold(VertexSet::full(self.n), |acc, f| acc.intersection(f));
                if common == target {
                    let mut tuple: Vec<VertexSet> =
                        combo.into_iter().map(|f| **f).collect();
                    while tuple.len() < k as usize {
                        tuple.push(*tuple.last().expect("size >= 1"));
                    }
                    return Some(tuple);
                }
            }
        }
        None
    }

    /// Runs both intersection checks and combines them.
    pub fn maximal_socle_check(&self, k: u32) -> MaximalSocleCheck {
        let intersections_nonempty = self.k_intersections_nonempty(k);
        let singleton_cover = self.singleton_intersection_cover(k);
        let maximal_socle = intersections_nonempty.holds && singleton_cover.holds;
        MaximalSocleCheck { k, intersections_nonempty, singleton_cover, maximal_socle }
    }

    /// Parses the facet file format: first line `n`, then one facet
    /// per line as space-separated vertices. Blank lines are ignored.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut lines = numbered_nonblank_lines(text);
        let (first_no, first) = lines
            .next()
            .ok_or_else(|| ParseError::whole_file("empty facet file"))?;
        let n: usize = first.trim().parse().map_err(|_| {
            ParseError::at(first_no, format!("expected vertex count, got {first:?}"))
        })?;
        if n == 0 {
            return Err(ParseError::at(first_no, "vertex count must be at least 1"));
        }
        let mut facets = Vec::new();
        for (line_no, line) in lines {
            let mut facet = Vec::new();
            for token in line.split_whitespace() {
                let v: usize = token.parse().map_err(|_| {
                    ParseError::at(line_no, format!("invalid vertex {token:?}"))
                })?;
                if v == 0 || v > n {
                    return Err(ParseError::at(
                        line_no,
                        format!("vertex {v} out of range 1..={n}"),
                    ));
                }
                facet.push(v);
            }
            facets.push(facet);
        }
        Self::new(n, facets).map_err(|e| ParseError::whole_file(e.to_string()))
    }

    /// Renders the facet file format parsed by
    /// [`SimplicialComplex::parse`].
    pub fn to_file_string(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for facet in &self.facets {
            out.push_str(&facet.vertices().iter().join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "complex on {} vertices with facets ", self.n)?;
        for (i, facet) in self.facets.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{facet}")?;
        }
        Ok(())
    }
}
