//! Monomials and monomial ideals, in a polynomial ring or in k[Δ].

mod ideal;
mod monomial;

pub use ideal::{Ambient, MonomialIdeal};
pub use monomial::Monomial;

use crate::complex::{vertices_of, SimplicialComplex};
use crate::error::{Error, Result};

/// I_Δ as an ideal of the polynomial ring: one squarefree generator per
/// minimal nonface.
pub fn stanley_reisner_generators(c: &SimplicialComplex) -> MonomialIdeal {
    let n = c.n_vertices();
    MonomialIdeal::new(
        Ambient::Polynomial(n),
        c.minimal_nonfaces().into_iter().map(|m| Monomial::squarefree(n, m)),
    )
}

/// The prime generated by the variables outside `facet`, as an ideal of k[Δ].
pub fn facet_prime(c: &SimplicialComplex, facet: usize) -> MonomialIdeal {
    let f = c.facets()[facet];
    let outside: Vec<usize> = (0..c.n_vertices()).filter(|&v| f & (1 << v) == 0).collect();
    MonomialIdeal::from_variables(Ambient::of(c), &outside)
}

/// Minimal primes of k[Δ], one per facet, in facet order.
pub fn minimal_primes(c: &SimplicialComplex) -> Vec<MonomialIdeal> {
    (0..c.facets().len()).map(|i| facet_prime(c, i)).collect()
}

/// ann(P) in k[Δ] for a minimal prime P, computed as (I_Δ : P).
pub fn annihilator(c: &SimplicialComplex, p: &MonomialIdeal) -> Result<MonomialIdeal> {
    let ambient = Ambient::of(c);
    let p = p.reinterpret(ambient.clone())?;
    if !minimal_primes(c).iter().any(|q| *q == p) {
        return Err(Error::NotAMinimalPrime);
    }
    MonomialIdeal::zero(ambient).colon(&p)
}

/// The test ideal: the sum of the annihilators of the minimal primes.
pub fn test_ideal(c: &SimplicialComplex) -> MonomialIdeal {
    let ambient = Ambient::of(c);
    minimal_primes(c)
        .iter()
        .map(|p| annihilator(c, p).expect("listed primes are minimal"))
        .fold(MonomialIdeal::zero(ambient), |acc, a| acc.sum(&a).expect("same ambient"))
}

/// Facet vertex lists rendered with the complex's labels, for reports.
pub fn facet_names(c: &SimplicialComplex) -> Vec<Vec<String>> {
    c.facets()
        .iter()
        .map(|&f| vertices_of(f).iter().map(|&v| c.labels()[v].clone()).collect())
        .collect()
}
