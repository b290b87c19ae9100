//! Generators for the ideal families with maximal socle elements in
//! prescribed powers.

use itertools::Itertools;

use crate::error::Error;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// The ideal `(x_1...x_{n-1}, x_1 x_n, ..., x_{n-1} x_n)` on `n >= 3`
/// variables: its square has depth zero with `x_1...x_n` in the socle.
/// For `n = 3` this is the triangle edge ideal.
pub fn example_a(n: usize) -> Result<MonomialIdeal, Error> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "example_a needs n >= 3, got {n}"
        )));
    }
    let mut gens = Vec::with_capacity(n);
    let mut long = vec![1u32; n];
    long[n - 1] = 0;
    gens.push(Monomial::new(long));
    for i in 0..n - 1 {
        let mut e = vec![0u32; n];
        e[i] = 1;
        e[n - 1] = 1;
        gens.push(Monomial::new(e));
    }
    MonomialIdeal::new(n, gens)
}

/// A degree-`d` squarefree family on `n = 2d - 1 >= 3` variables whose
/// square has depth zero: `x_1...x_d`, then `x_i * x_{d+1}...x_{2d-1}`
/// for `i <= d`, then `x_2...x_d * x_j` for `j > d`. For `d = 2` this
/// degenerates to the triangle edge ideal.
pub fn example_b(d: usize) -> Result<MonomialIdeal, Error> {
    if d < 2 {
        return Err(Error::InvalidParameter(format!(
            "example_b needs d >= 2, got {d}"
        )));
    }
    let n = 2 * d - 1;
    let mut gens = Vec::new();
    let mut head = vec![0u32; n];
    for e in head.iter_mut().take(d) {
        *e = 1;
    }
    gens.push(Monomial::new(head));
    for i in 0..d {
        let mut e = vec![0u32; n];
        e[i] = 1;
        for slot in e.iter_mut().take(n).skip(d) {
            *slot = 1;
        }
        gens.push(Monomial::new(e));
    }
    for j in d..n {
        let mut e = vec![0u32; n];
        for slot in e.iter_mut().take(d).skip(1) {
            *slot = 1;
        }
        e[j] = 1;
        gens.push(Monomial::new(e));
    }
    MonomialIdeal::new(n, gens)
}

/// All `C(n, d)` squarefree monomials of degree `d` in `n` variables.
pub fn squarefree_veronese(n: usize, d: usize) -> Result<MonomialIdeal, Error> {
    if d == 0 || d > n {
        return Err(Error::InvalidParameter(format!(
            "degree d = {d} out of range 1..={n}"
        )));
    }
    let gens = (0..n).combinations(d).map(|support| {
        let mut e = vec![0u32; n];
        for i in support {
            e[i] = 1;
        }
        Monomial::new(e)
    });
    MonomialIdeal::new(n, gens)
}

/// The squarefree Veronese ideal of degree `d = k = n - 1` on
/// `n = k + 1` variables, `k >= 2`: the smallest single-degree family
/// whose k-th power has `(x_1...x_n)^{k-1}` in its socle while every
/// lower power has positive depth.
pub fn allk_ideal(k: u32) -> Result<MonomialIdeal, Error> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "allk_ideal needs k >= 2, got {k}"
        )));
    }
    squarefree_veronese(k as usize + 1, k as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn example_a_at_four_variables() {
        let j = example_a(4).unwrap();
        let expected = MonomialIdeal::new(
            4,
            [m(&[1, 1, 1, 0]), m(&[1, 0, 0, 1]), m(&[0, 1, 0, 1]), m(&[0, 0, 1, 1])],
        )
        .unwrap();
        assert_eq!(j, expected);
    }

    #[test]
    fn example_a_at_three_is_the_triangle() {
        let j = example_a(3).unwrap();
        let triangle =
            MonomialIdeal::new(3, [m(&[1, 1, 0]), m(&[1, 0, 1]), m(&[0, 1, 1])]).unwrap();
        assert_eq!(j, triangle);
    }

    #[test]
    fn example_a_rejects_small_n() {
        assert!(example_a(2).is_err());
    }

    #[test]
    fn example_b_facets_at_d3() {
        let j = example_b(3).unwrap();
        let c = crate::complex::SimplicialComplex::from_facet_ideal(&j).unwrap();
        let facets: Vec<Vec<usize>> =
            c.facets().iter().map(|f| f.vertices()).collect();
        assert_eq!(
            facets,
            vec![
                vec![1, 2, 3],
                vec![1, 4, 5],
                vec![2, 3, 4],
                vec![2, 3, 5],
                vec![2, 4, 5],
                vec![3, 4, 5],
            ]
        );
    }

    #[test]
    fn example_b_degenerates_to_triangle() {
        assert_eq!(example_b(2).unwrap(), example_a(3).unwrap());
    }

    #[test]
    fn veronese_generator_counts() {
        assert_eq!(squarefree_veronese(3, 2).unwrap(), example_a(3).unwrap());
        assert_eq!(squarefree_veronese(4, 3).unwrap().num_generators(), 4);
        assert_eq!(squarefree_veronese(5, 3).unwrap().num_generators(), 10);
    }

    #[test]
    fn veronese_rejects_out_of_range_degree() {
        assert!(squarefree_veronese(3, 0).is_err());
        assert!(squarefree_veronese(3, 4).is_err());
    }

    #[test]
    fn allk_is_the_top_degree_veronese() {
        assert_eq!(allk_ideal(2).unwrap(), squarefree_veronese(3, 2).unwrap());
        assert_eq!(allk_ideal(3).unwrap(), squarefree_veronese(4, 3).unwrap());
        assert!(allk_ideal(1).is_err());
    }
}
