use std::fmt;
use std::sync::Arc;

use super::Monomial;
use crate::complex::{default_labels, SimplicialComplex};
use crate::error::{Error, Result};

/// The ring a monomial ideal lives in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ambient {
    /// k[x_1..x_n] with no relations.
    Polynomial(usize),
    /// k[Δ]; monomials with nonface support vanish.
    StanleyReisner(Arc<SimplicialComplex>),
}

impl Ambient {
    pub fn of(c: &SimplicialComplex) -> Self {
        Ambient::StanleyReisner(Arc::new(c.clone()))
    }

    pub fn n_vars(&self) -> usize {
        match self {
            Ambient::Polynomial(n) => *n,
            Ambient::StanleyReisner(c) => c.n_vertices(),
        }
    }

    pub fn is_zero(&self, m: &Monomial) -> bool {
        match self {
            Ambient::Polynomial(_) => false,
            Ambient::StanleyReisner(c) => m.is_zero_in(c),
        }
    }

    pub fn labels(&self) -> Vec<String> {
        match self {
            Ambient::Polynomial(n) => default_labels(*n),
            Ambient::StanleyReisner(c) => c.labels().to_vec(),
        }
    }

    pub fn complex(&self) -> Option<&SimplicialComplex> {
        match self {
            Ambient::Polynomial(_) => None,
            Ambient::StanleyReisner(c) => Some(c),
        }
    }
}

/// A monomial ideal held by its unique minimal generating set.
///
/// In a Stanley-Reisner ambient, monomials that vanish are never stored as
/// generators: the ideal implicitly contains every zero monomial.
#[derive(Clone)]
pub struct MonomialIdeal {
    ambient: Ambient,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Canonicalizes: drops vanishing monomials and non-minimal generators, sorts.
    pub fn new(ambient: Ambient, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut cands: Vec<Monomial> = gens.into_iter().filter(|m| !ambient.is_zero(m)).collect();
        debug_assert!(cands.iter().all(|m| m.n_vars() == ambient.n_vars()));
        cands.sort();
        cands.dedup();
        // sorted by degree, so only earlier generators can divide later ones
        let mut kept: Vec<Monomial> = Vec::with_capacity(cands.len());
        for m in cands {
            if !kept.iter().any(|g| g.divides(&m)) {
                kept.push(m);
            }
        }
        Self { ambient, gens: kept }
    }

    pub fn zero(ambient: Ambient) -> Self {
        Self { ambient, gens: Vec::new() }
    }

    pub fn unit(ambient: Ambient) -> Self {
        let n = ambient.n_vars();
        Self::new(ambient, [Monomial::one(n)])
    }

    /// The ideal generated by all variables.
    pub fn maximal(ambient: Ambient) -> Self {
        let n = ambient.n_vars();
        Self::new(ambient, (0..n).map(|i| Monomial::var(n, i)))
    }

    /// The ideal generated by the listed variables.
    pub fn from_variables(ambient: Ambient, vars: &[usize]) -> Self {
        let n = ambient.n_vars();
        Self::new(ambient, vars.iter().map(|&i| Monomial::var(n, i)))
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Membership of a monomial. Vanishing monomials are in every ideal.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.ambient.is_zero(m) || self.gens.iter().any(|g| g.divides(m))
    }

    pub fn contains_ideal(&self, other: &Self) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch);
        }
        Ok(())
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        Ok(Self::new(
            self.ambient.clone(),
            self.gens.iter().chain(&other.gens).cloned(),
        ))
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        Ok(Self::new(self.ambient.clone(), gens))
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b));
            }
        }
        Ok(Self::new(self.ambient.clone(), gens))
    }

    /// I^k for k >= 1; I^0 is the unit ideal.
    pub fn power(&self, k: u32) -> Self {
        let mut acc = Self::unit(self.ambient.clone());
        for _ in 0..k {
            acc = acc.product(self).expect("same ambient");
        }
        acc
    }

    /// (I : J). In k[Δ] this is computed upstairs as ((I + I_Δ) : J) and read back.
    pub fn colon(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let n = self.ambient.n_vars();
        let mut numerator: Vec<Monomial> = self.gens.clone();
        if let Ambient::StanleyReisner(c) = &self.ambient {
            numerator.extend(c.minimal_nonfaces().into_iter().map(|m| Monomial::squarefree(n, m)));
        }
        let upstairs = Ambient::Polynomial(n);
        let mut acc = Self::unit(upstairs.clone());
        for g in &other.gens {
            let quotient = Self::new(
                upstairs.clone(),
                numerator.iter().map(|h| h.checked_div(&h.gcd(g)).expect("gcd divides")),
            );
            acc = acc.intersect(&quotient)?;
        }
        Ok(Self::new(self.ambient.clone(), acc.gens))
    }

    /// The same generators read in another ring on the same variables.
    pub fn reinterpret(&self, ambient: Ambient) -> Result<Self> {
        if ambient.n_vars() != self.ambient.n_vars() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient.n_vars(),
                actual: ambient.n_vars(),
            });
        }
        Ok(Self::new(ambient, self.gens.iter().cloned()))
    }

    /// Extends along a variable embedding (`map[i]` = image of variable i).
    pub fn extend(&self, ambient: Ambient, map: &[usize]) -> Self {
        let n = ambient.n_vars();
        Self::new(ambient, self.gens.iter().map(|g| g.relabel(n, map)))
    }

    pub fn format(&self) -> Vec<String> {
        let labels = self.ambient.labels();
        self.gens.iter().map(|g| g.format(&labels)).collect()
    }
}

/// Equality of ideals; minimal generators are unique, so this is double containment.
impl PartialEq for MonomialIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.contains_ideal(other) && other.contains_ideal(self)
    }
}

impl Eq for MonomialIdeal {}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.format().join(", "))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            write!(f, "(0)")
        } else {
            write!(f, "({})", self.format().join(", "))
        }
    }
}
