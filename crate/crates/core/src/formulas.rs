//! Closed-form thresholds and depth formulas for single-degree
//! squarefree ideals, with exact rational comparisons throughout.

use num_rational::Ratio;
use serde::Serialize;

use crate::complex::VertexSet;
use crate::error::Error;

/// Parameters `(n, d, k)` of a single-degree family: `n` variables,
/// generation degree `d <= n`, power `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ParameterTriple {
    pub n: usize,
    pub d: usize,
    pub k: u32,
}

/// The exact rational `((k-1)n + 1) / k`. Single-degree squarefree
/// ideals generated strictly above this degree have positive depth at
/// power `k`; the equality case is where maximal socles live. The
/// comparison against an integer degree must never pass through
/// floating point.
pub fn threshold(n: usize, k: u32) -> Ratio<i64> {
    assert!(n >= 1 && k >= 1, "threshold needs n >= 1 and k >= 1");
    Ratio::new((k as i64 - 1) * n as i64 + 1, k as i64)
}

/// True iff `d > ((k-1)n + 1)/k` exactly.
pub fn degree_above_threshold(n: usize, d: usize, k: u32) -> bool {
    Ratio::from_integer(d as i64) > threshold(n, k)
}

/// True iff `d = ((k-1)n + 1)/k` exactly.
pub fn degree_at_threshold(n: usize, d: usize, k: u32) -> bool {
    Ratio::from_integer(d as i64) == threshold(n, k)
}

/// `max(0, n - k(n - d) - 1)`: the depth of `S/I^k` for the squarefree
/// Veronese ideal of degree `d` in `n` variables.
///
/// The formula is specific to that family and must not be applied to
/// arbitrary ideals; this toolkit only relies on (and only verifies)
/// its zero/nonzero boundary.
pub fn hh_depth(n: usize, d: usize, k: u32) -> u32 {
    assert!(d >= 1 && d <= n, "hh_depth needs 1 <= d <= n");
    assert!(k >= 1, "hh_depth needs k >= 1");
    let value = n as i64 - k as i64 * (n as i64 - d as i64) - 1;
    value.max(0) as u32
}

/// The parameter family `d = (r+1)k - r`, `n = (r+1)k + 1` realizing
/// the threshold equality `kd = (k-1)n + 1` exactly, for `k >= 2` and
/// `r >= 0`. The Veronese ideal at these parameters has
/// `hh_depth(n, d, k) = 0`.
pub fn admissible_params(k: u32, r: u32) -> ParameterTriple {
    assert!(k >= 2, "admissible_params needs k >= 2");
    let n = (r as usize + 1) * k as usize + 1;
    let d = (r as usize + 1) * k as usize - r as usize;
    ParameterTriple { n, d, k }
}

/// Checks the nested-intersection bound behind the positive-depth
/// threshold: for `k` subsets of `[n]`, each of one cardinality
/// `d > threshold(n, k)`, every prefix intersection must satisfy
/// `|F_1 ∩ ... ∩ F_i| > ((k-i)n + i)/k` strictly.
///
/// The bound always holds under the stated precondition, so a `false`
/// return signals a bug rather than a property of the input.
pub fn intersection_chain_check(
    sets: &[VertexSet],
    n: usize,
    k: u32,
) -> Result<bool, Error> {
    if sets.len() != k as usize {
        return Err(Error::InvalidParameter(format!(
            "expected exactly k = {k} sets, got {}",
            sets.len()
        )));
    }
    let d = sets[0].len();
    if sets.iter().any(|s| s.len() != d) {
        return Err(Error::InvalidParameter(
            "all sets must share one cardinality d".into(),
        ));
    }
    if !degree_above_threshold(n, d, k) {
        return Err(Error::InvalidParameter(format!(
            "cardinality d = {d} is not above the threshold {}",
            threshold(n, k)
        )));
    }
    if n > 64 {
        return Err(Error::TooManyVertices { n });
    }
    let mut running = VertexSet::full(n);
    for (i, set) in sets.iter().enumerate() {
        running = running.intersection(set);
        let i = (i + 1) as i64;
        // |∩| > ((k - i)n + i)/k  <=>  k|∩| > (k - i)n + i, exactly.
        let lhs = k as i64 * running.len() as i64;
        let rhs = (k as i64 - i) * n as i64 + i;
        if lhs <= rhs {
            return Ok(false);
        }
    }
    Ok(true)
}
