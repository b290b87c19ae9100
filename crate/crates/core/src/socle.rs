//! Socle computation and depth-zero detection.
//!
//! A monomial `u` is a socle element of `S/J` when `u` is outside `J`
//! but every variable multiple `u*x_i` lies in `J`. The quotient has
//! depth zero exactly when such a monomial exists. Two independent
//! enumeration strategies are implemented and can be cross-checked
//! against each other on every instance.

use itertools::Itertools;
use serde::Serialize;

use crate::error::Error;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// Default cap on the number of candidate monomials enumerated per
/// socle computation. Exceeding it is an explicit error, never a
/// truncated answer.
pub const DEFAULT_BOX_BUDGET: u64 = 2_000_000;

/// How the socle set is enumerated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SocleStrategy {
    /// Enumerate the whole candidate exponent box and filter by the
    /// socle definition.
    BoxEnumeration,
    /// Compute `J : m` and enumerate multiples of its generators
    /// inside the candidate box, keeping those outside `J`.
    ColonEnumeration,
    /// Run both strategies and fail loudly if they ever disagree.
    CrossChecked,
}

/// The socle of a quotient `S/J`, as a set of monomials.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SocleReport {
    /// Variable count of the ambient ring.
    pub n: usize,
    /// Present when the ideal was declared as a k-th power by the
    /// caller; the engine never infers it.
    pub k: Option<u32>,
    /// The socle monomials, lexicographically sorted.
    pub socle: Vec<Monomial>,
    /// `depth S/J = 0` iff the socle is nonempty.
    pub depth_zero: bool,
    /// Whether `(x_1...x_n)^{k-1}` is in the socle; meaningful only
    /// when `k` is recorded.
    pub has_maximal_socle: bool,
}

impl SocleReport {
    fn from_set(n: usize, k: Option<u32>, socle: Vec<Monomial>) -> Self {
        let depth_zero = !socle.is_empty();
        let has_maximal_socle = match k {
            Some(k) => socle.contains(&Monomial::full_support_power(n, k - 1)),
            None => false,
        };
        Self { n, k, socle, depth_zero, has_maximal_socle }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// The socle membership test, straight from the definition.
///
/// Total in `u`: monomials inside `J` (and everything, when `J` is the
/// unit ideal or zero) simply return `false`.
pub fn is_socle_element(j: &MonomialIdeal, u: &Monomial) -> Result<bool, Error> {
    if u.n() != j.n() {
        return Err(Error::DimensionMismatch { left: j.n(), right: u.n() });
    }
    if j.contains(u)? {
        return Ok(false);
    }
    for i in 0..j.n() {
        if !j.contains(&u.times_variable(i)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Componentwise bound on socle exponents: `c_i - 1` where `c_i` is the
/// largest exponent of `x_{i+1}` among the minimal generators.
///
/// Entries saturate at 0 for variables absent from every generator; in
/// that case no socle element exists at all and the box is vacuous,
/// but the bound stays correct.
pub fn socle_box_bound(j: &MonomialIdeal) -> Result<Vec<u32>, Error> {
    require_nonzero_proper(j)?;
    Ok(j.max_degrees()?.iter().map(|c| c.saturating_sub(1)).collect())
}

/// Socle of `S/J` with an explicit strategy and candidate budget.
pub fn socle_report_with(
    j: &MonomialIdeal,
    strategy: SocleStrategy,
    budget: u64,
) -> Result<SocleReport, Error> {
    Ok(SocleReport::from_set(j.n(), None, socle_set(j, strategy, budget)?))
}

/// Socle of `S/J` with the cross-checked strategy and default budget.
pub fn socle_report(j: &MonomialIdeal) -> Result<SocleReport, Error> {
    socle_report_with(j, SocleStrategy::CrossChecked, DEFAULT_BOX_BUDGET)
}

/// Socle of `S/I^k` for squarefree `I`, recording `k` in the report so
/// the maximal-socle flag refers to `(x_1...x_n)^{k-1}`.
pub fn socle_report_of_power(
    base: &MonomialIdeal,
    k: u32,
    strategy: SocleStrategy,
    budget: u64,
) -> Result<SocleReport, Error> {
    require_nonzero_proper(base)?;
    if !base.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let power = base.power(k)?;
    Ok(SocleReport::from_set(base.n(), Some(k), socle_set(&power, strategy, budget)?))
}

/// Depth-zero flags of `S/I^l` for `l = 1..=l_max`, squarefree `I`.
pub fn depth_zero_profile(
    base: &MonomialIdeal,
    l_max: u32,
    strategy: SocleStrategy,
    budget: u64,
) -> Result<Vec<bool>, Error> {
    require_nonzero_proper(base)?;
    if !base.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if l_max == 0 {
        return Err(Error::ZeroPower);
    }
    let mut profile = Vec::with_capacity(l_max as usize);
    let mut power = base.clone();
    for l in 1..=l_max {
        if l > 1 {
            power = power.product(base)?;
        }
        profile.push(!socle_set(&power, strategy, budget)?.is_empty());
    }
    Ok(profile)
}

/// Checks the exponent bound on socles of powers of squarefree ideals:
/// every socle monomial of `S/I^k` must have all exponents at most
/// `k - 1`. A `false` return signals a bug, not a property of the
/// input.
pub fn verify_exponent_bound(
    base: &MonomialIdeal,
    k: u32,
    budget: u64,
) -> Result<bool, Error> {
    let report = socle_report_of_power(base, k, SocleStrategy::CrossChecked, budget)?;
    Ok(report
        .socle
        .iter()
        .all(|u| u.exponents().iter().all(|&e| e < k)))
}

/// Enumerates the socle set under the given strategy.
pub fn socle_set(
    j: &MonomialIdeal,
    strategy: SocleStrategy,
    budget: u64,
) -> Result<Vec<Monomial>, Error> {
    require_nonzero_proper(j)?;
    match strategy {
        SocleStrategy::BoxEnumeration => socle_by_box(j, budget),
        SocleStrategy::ColonEnumeration => socle_by_colon(j, budget),
        SocleStrategy::CrossChecked => {
            let by_box = socle_by_box(j, budget)?;
            let by_colon = socle_by_colon(j, budget)?;
            if by_box != by_colon {
                return Err(Error::StrategyDisagreement {
                    detail: format!(
                        "ideal {} box={:?} colon={:?}",
                        j.to_json().replace('\n', " "),
                        by_box.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                        by_colon.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                    ),
                });
            }
            Ok(by_box)
        }
    }
}

fn require_nonzero_proper(j: &MonomialIdeal) -> Result<(), Error> {
    if j.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if j.is_unit() {
        return Err(Error::UnitIdeal);
    }
    Ok(())
}

fn checked_volume(bound: &[u32], budget: u64) -> Result<(), Error> {
    let mut volume: u128 = 1;
    for &b in bound {
        volume = volume.saturating_mul(u128::from(b) + 1);
    }
    if volume > u128::from(budget) {
        return Err(Error::BudgetExceeded { required: volume, budget });
    }
    Ok(())
}

/// Lexicographic iterator over all exponent vectors `v` with
/// `lo[i] <= v[i] <= hi[i]`.
fn box_range(lo: Vec<u32>, hi: Vec<u32>) -> impl Iterator<Item = Monomial> {
    lo.into_iter()
        .zip(hi)
        .map(|(l, h)| l..=h)
        .multi_cartesian_product()
        .map(Monomial::new)
}

fn socle_by_box(j: &MonomialIdeal, budget: u64) -> Result<Vec<Monomial>, Error> {
    let bound = socle_box_bound(j)?;
    checked_volume(&bound, budget)?;
    let mut socle = Vec::new();
    for candidate in box_range(vec![0; bound.len()], bound) {
        if is_socle_element(j, &candidate)? {
            socle.push(candidate);
        }
    }
    Ok(socle)
}

fn socle_by_colon(j: &MonomialIdeal, budget: u64) -> Result<Vec<Monomial>, Error> {
    let bound = socle_box_bound(j)?;
    checked_volume(&bound, budget)?;
    let quotient = j.colon_by_maximal();
    let mut socle = std::collections::BTreeSet::new();
    for g in quotient.generators() {
        // Multiples of g inside the box exist iff g fits under the bound.
        if g.exponents().iter().zip(&bound).any(|(&e, &b)| e > b) {
            continue;
        }
        for w in box_range(g.exponents().to_vec(), bound.clone()) {
            if !j.contains(&w)? {
                socle.insert(w);
            }
        }
    }
    Ok(socle.into_iter().collect())
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

    fn report(j: &MonomialIdeal) -> SocleReport {
        socle_report(j).unwrap()
    }

    #[test]
    fn product_of_variables_is_socle_of_triangle_square() {
        let sq = triangle().power(2).unwrap();
        assert!(is_socle_element(&sq, &m(&[1, 1, 1])).unwrap());
        // x1*x2 fails: multiplying by x3 lands outside the square.
        assert!(!is_socle_element(&sq, &m(&[1, 1, 0])).unwrap());
        // Elements of the ideal are never socle elements.
        assert!(!is_socle_element(&sq, &m(&[2, 1, 1])).unwrap());
    }

    #[test]
    fn box_bound_of_triangle_square() {
        let sq = triangle().power(2).unwrap();
        assert_eq!(socle_box_bound(&sq).unwrap(), vec![1, 1, 1]);
    }

    #[test]
    fn box_bound_in_one_variable() {
        let j = ideal(1, &[&[3]]);
        assert_eq!(socle_box_bound(&j).unwrap(), vec![2]);
        assert_eq!(report(&j).socle, vec![m(&[2])]);
    }

    #[test]
    fn box_bound_saturates_for_absent_variables() {
        let j = ideal(2, &[&[2, 0]]);
        assert_eq!(socle_box_bound(&j).unwrap(), vec![1, 0]);
        // x2 is a nonzerodivisor on S/(x1^2): no socle at all.
        assert!(report(&j).socle.is_empty());
    }

    #[test]
    fn socle_of_triangle_square() {
        let r = report(&triangle().power(2).unwrap());
        assert_eq!(r.socle, vec![m(&[1, 1, 1])]);
        assert!(r.depth_zero);
    }

    #[test]
    fn socle_of_path_square_is_empty() {
        let path = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        let r = report(&path.power(2).unwrap());
        assert!(r.socle.is_empty());
        assert!(!r.depth_zero);
    }

    #[test]
    fn socle_of_maximal_ideal_is_the_unit_monomial() {
        let maximal = ideal(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(report(&maximal).socle, vec![Monomial::one(3)]);
    }

    #[test]
    fn strategies_agree_on_triangle_powers() {
        for k in 1..=3 {
            let p = triangle().power(k).unwrap();
            let by_box = socle_set(&p, SocleStrategy::BoxEnumeration, 1 << 20).unwrap();
            let by_colon = socle_set(&p, SocleStrategy::ColonEnumeration, 1 << 20).unwrap();
            assert_eq!(by_box, by_colon);
        }
    }

    #[test]
    fn triangle_depth_zero_profile() {
        let profile =
            depth_zero_profile(&triangle(), 3, SocleStrategy::CrossChecked, 1 << 20).unwrap();
        assert_eq!(profile, vec![false, true, true]);
    }

    #[test]
    fn path_profile_stays_positive_depth() {
        let path = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        let profile =
            depth_zero_profile(&path, 2, SocleStrategy::CrossChecked, 1 << 20).unwrap();
        assert_eq!(profile, vec![false, false]);
    }

    #[test]
    fn principal_ideal_profile_is_all_false() {
        let principal = ideal(2, &[&[1, 1]]);
        let profile =
            depth_zero_profile(&principal, 3, SocleStrategy::CrossChecked, 1 << 20).unwrap();
        assert_eq!(profile, vec![false, false, false]);
    }

    #[test]
    fn exponent_bound_holds_for_triangle_square() {
        assert!(verify_exponent_bound(&triangle(), 2, 1 << 20).unwrap());
        assert!(verify_exponent_bound(&triangle(), 1, 1 << 20).unwrap());
    }

    #[test]
    fn power_report_records_k_and_maximal_socle() {
        let r = socle_report_of_power(
            &triangle(),
            2,
            SocleStrategy::CrossChecked,
            1 << 20,
        )
        .unwrap();
        assert_eq!(r.k, Some(2));
        assert!(r.has_maximal_socle);
        assert_eq!(r.socle, vec![m(&[1, 1, 1])]);
    }

    #[test]
    fn power_report_rejects_non_squarefree_base() {
        let j = ideal(2, &[&[2, 0]]);
        assert_eq!(
            socle_report_of_power(&j, 2, SocleStrategy::CrossChecked, 1 << 20),
            Err(Error::NotSquarefree)
        );
    }

    #[test]
    fn budget_is_enforced() {
        let j = ideal(2, &[&[9, 0], &[0, 9]]);
        // Box is 9 * 9 = 81 candidates.
        assert!(matches!(
            socle_report_with(&j, SocleStrategy::BoxEnumeration, 80),
            Err(Error::BudgetExceeded { required: 81, budget: 80 })
        ));
        assert!(socle_report_with(&j, SocleStrategy::BoxEnumeration, 81).is_ok());
    }

    #[test]
    fn zero_and_unit_ideals_are_rejected() {
        assert_eq!(report_err(&MonomialIdeal::zero(2)), Error::ZeroIdeal);
        let unit = MonomialIdeal::new(2, [Monomial::one(2)]).unwrap();
        assert_eq!(report_err(&unit), Error::UnitIdeal);
    }

    fn report_err(j: &MonomialIdeal) -> Error {
        socle_report(j).unwrap_err()
    }

    #[test]
    fn depth_zero_iff_colon_grows() {
        for j in [
            triangle(),
            triangle().power(2).unwrap(),
            ideal(3, &[&[1, 1, 0], &[0, 1, 1]]).power(2).unwrap(),
        ] {
            let r = report(&j);
            assert_eq!(r.depth_zero, j.colon_by_maximal() != j);
        }
    }
}
