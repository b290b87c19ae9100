//! Seeded random instance generators for the census and property
//! suites. Every generator is a pure function of the RNG stream, so a
//! fixed seed reproduces the exact instance sequence.

use itertools::Itertools;
use rand::Rng;

use crate::complex::SimplicialComplex;
use crate::error::Error;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// A random nonzero squarefree ideal in `n` variables: between 1 and
/// `2n` random nonempty supports, minimalized.
pub fn random_squarefree_ideal(rng: &mut impl Rng, n: usize) -> MonomialIdeal {
    let count = rng.random_range(1..=2 * n);
    let gens = (0..count).map(|_| {
        let mut e = vec![0u32; n];
        loop {
            for slot in e.iter_mut() {
                *slot = u32::from(rng.random_bool(0.5));
            }
            if e.iter().any(|&x| x > 0) {
                break;
            }
        }
        Monomial::new(e)
    });
    MonomialIdeal::new(n, gens).expect("generated arity matches n")
}

/// A random nonzero proper monomial ideal in `n` variables with
/// exponents up to `max_exponent`.
pub fn random_general_ideal(
    rng: &mut impl Rng,
    n: usize,
    max_exponent: u32,
) -> MonomialIdeal {
    let count = rng.random_range(1..=2 * n);
    let gens = (0..count).map(|_| {
        let mut e = vec![0u32; n];
        loop {
            for slot in e.iter_mut() {
                *slot = rng.random_range(0..=max_exponent);
            }
            if e.iter().any(|&x| x > 0) {
                break;
            }
        }
        Monomial::new(e)
    });
    MonomialIdeal::new(n, gens).expect("generated arity matches n")
}

/// A random squarefree ideal generated in the single degree `d`:
/// `count` distinct `d`-subsets of `[n]`, chosen uniformly without
/// replacement. Requires `1 <= count <= C(n, d)`.
pub fn random_single_degree_ideal(
    rng: &mut impl Rng,
    n: usize,
    d: usize,
    count: usize,
) -> Result<MonomialIdeal, Error> {
    if d == 0 || d > n {
        return Err(Error::InvalidParameter(format!(
            "degree d = {d} out of range 1..={n}"
        )));
    }
    let all: Vec<Vec<usize>> = (0..n).combinations(d).collect();
    if count == 0 || count > all.len() {
        return Err(Error::InvalidParameter(format!(
            "generator count {count} out of range 1..={}",
            all.len()
        )));
    }
    let mut picked = rand::seq::index::sample(rng, all.len(), count).into_vec();
    picked.sort_unstable();
    let gens = picked.into_iter().map(|idx| {
        let mut e = vec![0u32; n];
        for &i in &all[idx] {
            e[i] = 1;
        }
        Monomial::new(e)
    });
    MonomialIdeal::new(n, gens)
}

/// A random simplicial complex on `[n]`: random nonempty subsets with
/// the inclusion-maximal ones kept as facets, guaranteeing the
/// antichain invariant. Always has at least one facet.
pub fn random_antichain_complex(rng: &mut impl Rng, n: usize) -> SimplicialComplex {
    let count = rng.random_range(1..=2 * n);
    let mut subsets: Vec<Vec<usize>> = Vec::with_capacity(count);
    for _ in 0..count {
        let mut facet = Vec::new();
        while facet.is_empty() {
            facet = (1..=n).filter(|_| rng.random_bool(0.5)).collect();
        }
        subsets.push(facet);
    }
    subsets.sort();
    subsets.dedup();
    // After dedup, a proper superset is strictly longer.
    let maximal: Vec<Vec<usize>> = subsets
        .iter()
        .filter(|a| {
            !subsets
                .iter()
                .any(|b| b.len() > a.len() && a.iter().all(|v| b.contains(v)))
        })
        .cloned()
        .collect();
    SimplicialComplex::new(n, maximal).expect("maximal subsets form an antichain")
}
