//! Monomial ideals represented by their minimal generating sets.
//!
//! Membership, products, powers, colons and intersections are all exact
//! integer combinatorics on exponent vectors; this module is the ground
//! truth the combinatorial deciders are checked against.

use std::collections::BTreeSet;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::monomial::Monomial;

/// A monomial ideal in `n` variables, stored as its unique minimal
/// generating set in lexicographic order.
///
/// The empty generator set encodes the zero ideal. The unit ideal
/// (generated by 1) is representable because colon ideals close over
/// it, but operations assuming a proper ideal reject it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalizes `generators` and builds the ideal they generate.
    ///
    /// Keeps exactly the divisibility-minimal monomials, sorted
    /// lexicographically; the result is independent of input order and
    /// multiplicity, and `new` is idempotent on its own output.
    pub fn new(
        n: usize,
        generators: impl IntoIterator<Item = Monomial>,
    ) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "an ideal needs at least one variable".into(),
            ));
        }
        let mut gens: Vec<Monomial> = Vec::new();
        for g in generators {
            if g.n() != n {
                return Err(Error::DimensionMismatch { left: n, right: g.n() });
            }
            gens.push(g);
        }
        Ok(Self { n, generators: minimalize(gens) })
    }

    /// The zero ideal in `n` variables.
    pub fn zero(n: usize) -> Self {
        assert!(n >= 1, "an ideal needs at least one variable");
        Self { n, generators: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The minimal generators, lexicographically sorted.
    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// True iff this is the unit ideal (1).
    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_unit()
    }

    /// A proper ideal is neither zero nor the whole ring.
    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(Monomial::is_squarefree)
    }

    /// Membership test: some minimal generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> Result<bool, Error> {
        if m.n() != self.n {
            return Err(Error::DimensionMismatch { left: self.n, right: m.n() });
        }
        Ok(self.generators.iter().any(|g| g.divides(m)))
    }

    /// Product ideal, minimalized.
    pub fn product(&self, other: &Self) -> Result<Self, Error> {
        if other.n != self.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        let mut products = BTreeSet::new();
        for a in &self.generators {
            for b in &other.generators {
                products.insert(a.checked_mul(b)?);
            }
        }
        Ok(Self { n: self.n, generators: minimalize(products.into_iter().collect()) })
    }

    /// `k`-th power by iterated products, minimalizing after every
    /// multiplication. `k = 0` is rejected: the unit ideal is outside
    /// the intended domain of every downstream operation.
    pub fn power(&self, k: u32) -> Result<Self, Error> {
        if k == 0 {
            return Err(Error::ZeroPower);
        }
        let mut result = self.clone();
        for _ in 1..k {
            result = result.product(self)?;
        }
        Ok(result)
    }

    /// Colon by a single variable: divides each generator by `x_{i+1}`
    /// where possible. Equals `I : (x_{i+1})`.
    pub fn colon_by_variable(&self, i: usize) -> Result<Self, Error> {
        if i >= self.n {
            return Err(Error::VariableOutOfRange { index: i, n: self.n });
        }
        let gens = self
            .generators
            .iter()
            .map(|g| g.divide_by_variable(i))
            .collect();
        Ok(Self { n: self.n, generators: minimalize(gens) })
    }

    /// Intersection via pairwise least common multiples of generators.
    pub fn intersect(&self, other: &Self) -> Result<Self, Error> {
        if other.n != self.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        let mut lcms = BTreeSet::new();
        for a in &self.generators {
            for b in &other.generators {
                lcms.insert(a.lcm(b));
            }
        }
        Ok(Self { n: self.n, generators: minimalize(lcms.into_iter().collect()) })
    }

    /// Colon by the maximal ideal `m = (x_1, ..., x_n)`, computed as
    /// the intersection of the colons by the single variables.
    ///
    /// A monomial lies in the result iff all its variable multiples lie
    /// in `self`; the quotient `(I : m)/I` is the socle of `S/I`.
    pub fn colon_by_maximal(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut result = self
            .colon_by_variable(0)
            .expect("index 0 is valid for n >= 1");
        for i in 1..self.n {
            let next = self.colon_by_variable(i).expect("index checked");
            result = result.intersect(&next).expect("same variable count");
        }
        result
    }

    /// Per-variable maximum exponent over the minimal generators.
    pub fn max_degrees(&self) -> Result<Vec<u32>, Error> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let mut maxima = vec![0u32; self.n];
        for g in &self.generators {
            for (c, &e) in maxima.iter_mut().zip(g.exponents()) {
                *c = (*c).max(e);
            }
        }
        Ok(maxima)
    }

    /// Canonical JSON document: `{"n": ..., "generators": [[...], ...]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("ideal serializes")
    }

    /// Parses the JSON document format; the generator list is
    /// minimalized, so `from_json(to_json(j)) == j` for every ideal.
    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// Keeps exactly the divisibility-minimal elements, sorted lex.
fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    // After dedup, a proper divisor has strictly smaller degree, so a
    // single ascending-degree pass against the kept set is complete.
    gens.sort();
    gens.dedup();
    gens.sort_by_key(Monomial::degree);
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|h| h.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort();
    kept
}

#[derive(Serialize, Deserialize)]
struct IdealDocument {
    n: usize,
    generators: Vec<Vec<u32>>,
}

impl Serialize for MonomialIdeal {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        IdealDocument {
            n: self.n,
            generators: self
                .generators
                .iter()
                .map(|g| g.exponents().to_vec())
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MonomialIdeal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let doc = IdealDocument::deserialize(deserializer)?;
        if doc.n == 0 {
            return Err(D::Error::custom("n must be at least 1"));
        }
        for (i, g) in doc.generators.iter().enumerate() {
            if g.len() != doc.n {
                return Err(D::Error::custom(format!(
                    "generator {} has {} exponents, expected n = {}",
                    i,
                    g.len(),
                    doc.n
                )));
            }
        }
        MonomialIdeal::new(doc.n, doc.generators.into_iter().map(Monomial::new))
            .map_err(|e| D::Error::custom(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| m(g))).unwrap()
    }

    fn triangle() -> MonomialIdeal {
        ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]])
    }

    #[test]
    fn minimalize_absorbs_multiples() {
        let j = ideal(2, &[&[1, 1], &[2, 1]]);
        assert_eq!(j.generators(), &[m(&[1, 1])]);
    }

    #[test]
    fn minimalize_keeps_antichains() {
        let j = triangle();
        assert_eq!(j.num_generators(), 3);
    }

    #[test]
    fn triangle_square_has_six_minimal_generators() {
        let sq = triangle().power(2).unwrap();
        let expected = ideal(
            3,
            &[&[0, 2, 2], &[1, 1, 2], &[1, 2, 1], &[2, 0, 2], &[2, 1, 1], &[2, 2, 0]],
        );
        assert_eq!(sq, expected);
    }

    #[test]
    fn membership_in_triangle_powers() {
        let j = triangle();
        let sq = j.power(2).unwrap();
        let xyz = m(&[1, 1, 1]);
        assert!(j.contains(&xyz).unwrap());
        assert!(!sq.contains(&xyz).unwrap());
        assert!(sq.contains(&m(&[2, 1, 1])).unwrap());
    }

    #[test]
    fn power_one_is_identity() {
        let j = triangle();
        assert_eq!(j.power(1).unwrap(), j);
    }

    #[test]
    fn power_zero_is_rejected() {
        assert_eq!(triangle().power(0), Err(Error::ZeroPower));
    }

    #[test]
    fn product_of_principal_ideals() {
        let a = ideal(2, &[&[1, 0]]);
        let b = ideal(2, &[&[0, 1]]);
        assert_eq!(a.product(&b).unwrap(), ideal(2, &[&[1, 1]]));
    }

    #[test]
    fn colon_by_variable_strips_one_factor() {
        let j = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        let q = j.colon_by_variable(1).unwrap();
        assert_eq!(q, ideal(3, &[&[1, 0, 0], &[0, 0, 1]]));
    }

    #[test]
    fn colon_by_absent_variable_is_identity() {
        let j = ideal(2, &[&[2, 0]]);
        assert_eq!(j.colon_by_variable(1).unwrap(), j);
    }

    #[test]
    fn colon_of_triangle_square_contains_product_of_variables() {
        let q = triangle().power(2).unwrap().colon_by_variable(0).unwrap();
        assert_eq!(
            q,
            ideal(3, &[&[0, 1, 2], &[0, 2, 1], &[1, 0, 2], &[1, 1, 1], &[1, 2, 0]]),
        );
    }

    #[test]
    fn intersect_principal_ideals() {
        let a = ideal(2, &[&[1, 0]]);
        let b = ideal(2, &[&[0, 1]]);
        assert_eq!(a.intersect(&b).unwrap(), ideal(2, &[&[1, 1]]));
    }

    #[test]
    fn intersect_is_idempotent() {
        let j = triangle();
        assert_eq!(j.intersect(&j).unwrap(), j);
    }

    #[test]
    fn intersect_of_overlapping_edges() {
        let a = ideal(3, &[&[1, 1, 0]]);
        let b = ideal(3, &[&[0, 1, 1]]);
        assert_eq!(a.intersect(&b).unwrap(), ideal(3, &[&[1, 1, 1]]));
    }

    #[test]
    fn colon_by_maximal_of_triangle_square() {
        let q = triangle().power(2).unwrap().colon_by_maximal();
        assert_eq!(
            q,
            ideal(3, &[&[0, 2, 2], &[1, 1, 1], &[2, 0, 2], &[2, 2, 0]]),
        );
        assert!(q.contains(&m(&[1, 1, 1])).unwrap());
    }

    #[test]
    fn colon_by_maximal_of_maximal_ideal_is_unit() {
        let maximal = ideal(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let q = maximal.colon_by_maximal();
        assert!(q.is_unit());
    }

    #[test]
    fn colon_by_maximal_contains_the_ideal() {
        let j = triangle().power(2).unwrap();
        let q = j.colon_by_maximal();
        for g in j.generators() {
            assert!(q.contains(g).unwrap());
        }
    }

    #[test]
    fn max_degrees_per_variable() {
        assert_eq!(triangle().max_degrees().unwrap(), vec![1, 1, 1]);
        assert_eq!(triangle().power(2).unwrap().max_degrees().unwrap(), vec![2, 2, 2]);
        assert_eq!(ideal(2, &[&[3, 1], &[0, 2]]).max_degrees().unwrap(), vec![3, 2]);
    }

    #[test]
    fn max_degrees_of_zero_ideal_is_rejected() {
        assert_eq!(MonomialIdeal::zero(2).max_degrees(), Err(Error::ZeroIdeal));
    }

    #[test]
    fn empty_generating_set_is_the_zero_ideal() {
        let j = MonomialIdeal::new(2, []).unwrap();
        assert!(j.is_zero());
        assert_eq!(j, MonomialIdeal::zero(2));
    }

    #[test]
    fn unit_generator_yields_the_unit_ideal() {
        let j = MonomialIdeal::new(2, [Monomial::one(2), m(&[1, 0])]).unwrap();
        assert!(j.is_unit());
        assert!(!j.is_proper());
        assert!(j.contains(&m(&[0, 0])).unwrap());
    }

    #[test]
    fn zero_ideal_contains_nothing() {
        let z = MonomialIdeal::zero(2);
        assert!(!z.contains(&Monomial::one(2)).unwrap());
        assert!(!z.contains(&m(&[1, 1])).unwrap());
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let j = triangle();
        assert!(matches!(
            j.contains(&m(&[1, 1])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn json_round_trip_is_exact() {
        let j = triangle().power(2).unwrap();
        let parsed = MonomialIdeal::from_json(&j.to_json()).unwrap();
        assert_eq!(parsed, j);
    }

    #[test]
    fn json_parse_minimalizes_and_sorts() {
        let j = MonomialIdeal::from_json(r#"{"n":2,"generators":[[2,1],[1,1]]}"#).unwrap();
        assert_eq!(j.generators(), &[m(&[1, 1])]);
    }

    #[test]
    fn json_parse_rejects_wrong_arity() {
        assert!(MonomialIdeal::from_json(r#"{"n":2,"generators":[[1,1,1]]}"#).is_err());
    }
}
