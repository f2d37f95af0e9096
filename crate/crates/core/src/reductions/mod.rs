//! Linearly generated *-reductions of the maximal ideal.
//!
//! A linear ideal J = (f_1..f_s) of k[Δ] is stored as its s×n coefficient
//! matrix. J is a *-reduction of 𝔪 exactly when, for each facet F, the
//! columns indexed by F have rank |F|.

mod enumerate;
mod membership;
mod random;

pub use enumerate::{count_row_spaces, for_each_row_space};
pub use membership::QuotientMembership;
pub use random::{random_reduction, random_reduction_with, sample_stream, shrink, Sampled, ATTEMPT_CAP};

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{Field, Matrix, Subspace};
use crate::complex::vertices_of;
use crate::error::{Error, Result};
use crate::monomial_ideals::Monomial;
use crate::sr_ring::StanleyReisnerRing;

/// An ideal of k[Δ] generated by linear forms, one per matrix row.
#[derive(Clone)]
pub struct LinearIdeal<F: Field> {
    ring: Arc<StanleyReisnerRing<F>>,
    coeffs: Matrix<F>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FacetRank {
    pub facet: Vec<usize>,
    pub required: usize,
    pub achieved: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionCertificate {
    pub verdict: bool,
    pub per_facet: Vec<FacetRank>,
}

impl<F: Field> LinearIdeal<F> {
    /// Zero rows are dropped; at least one nonzero row must remain.
    pub fn new(ring: Arc<StanleyReisnerRing<F>>, coeffs: Matrix<F>) -> Result<Self> {
        if coeffs.cols() != ring.n_vars() {
            return Err(Error::DimensionMismatch {
                expected: ring.n_vars(),
                actual: coeffs.cols(),
            });
        }
        let coeffs = coeffs.without_zero_rows();
        if coeffs.rows() == 0 {
            return Err(Error::ZeroLinearIdeal);
        }
        Ok(Self { ring, coeffs })
    }

    pub fn from_rows(ring: Arc<StanleyReisnerRing<F>>, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        let m = Matrix::from_rows(ring.field().clone(), ring.n_vars(), rows)?;
        Self::new(ring, m)
    }

    pub fn ring(&self) -> &Arc<StanleyReisnerRing<F>> {
        &self.ring
    }

    pub fn coeffs(&self) -> &Matrix<F> {
        &self.coeffs
    }

    pub fn n_generators(&self) -> usize {
        self.coeffs.rows()
    }

    /// The facet-rank test.
    pub fn is_star_reduction(&self) -> ReductionCertificate {
        let per_facet: Vec<FacetRank> = self
            .ring
            .complex()
            .facets()
            .iter()
            .map(|&f| {
                let cols = vertices_of(f);
                let achieved = self.coeffs.select_columns(&cols).rank();
                FacetRank {
                    required: cols.len(),
                    facet: cols,
                    achieved,
                }
            })
            .collect();
        ReductionCertificate {
            verdict: per_facet.iter().all(|r| r.achieved == r.required),
            per_facet,
        }
    }

    /// Row-reduces so that the columns of the facet belonging to minimal
    /// prime `prime` carry identity pivots. Rows are reordered: pivot rows
    /// (in facet-vertex order) first, remaining rows after.
    pub fn diagonalize(&self, prime: usize) -> Result<Matrix<F>> {
        let facets = self.ring.complex().facets();
        let &f = facets.get(prime).ok_or(Error::PrimeIndexOutOfRange {
            index: prime,
            count: facets.len(),
        })?;
        let cols = vertices_of(f);
        let (m, pivots) = self.coeffs.rref_on_columns(&cols);
        if pivots.len() < cols.len() {
            return Err(Error::RankDeficient {
                facet: cols.clone(),
                required: cols.len(),
                achieved: pivots.len(),
            });
        }
        Ok(m)
    }

    /// J_q: the degree-q piece of J, spanned by b·f_i for b in the degree
    /// q-1 basis, as a subspace of the coordinates of k[Δ]_q.
    pub fn graded_component(&self, q: usize) -> Subspace<F> {
        let field = self.ring.field().clone();
        let target = self.ring.graded_basis(q);
        if q == 0 {
            return Subspace::zero(field, target.len());
        }
        let source = self.ring.graded_basis(q - 1);
        let mut rows = Vec::with_capacity(source.len() * self.coeffs.rows());
        for b in source.basis() {
            for f in self.coeffs.row_iter() {
                rows.push(self.ring.multiply_into_basis(b, f).expect("row width is n"));
            }
        }
        let m = Matrix::from_rows(field, target.len(), rows).expect("consistent widths");
        Subspace::from_rows(&m)
    }

    /// Whether the monomial m lies in J, by the product-span test.
    /// Monomials that vanish in k[Δ] are in every ideal.
    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        if self.ring.is_zero(m) {
            return true;
        }
        let q = m.degree() as usize;
        let idx = self.ring.graded_basis(q).index_of(m).expect("nonzero monomial is a basis element");
        self.graded_component(q).contains_unit(idx)
    }

    /// Column scaling x_j ↦ c_j x_j applied to every generator.
    pub fn scale_columns(&self, scales: &[F::Elem]) -> Result<Self> {
        Self::new(self.ring.clone(), self.coeffs.scale_columns(scales)?)
    }

    /// A fast membership tester for many monomials against this ideal.
    pub fn membership(&self) -> QuotientMembership<F> {
        QuotientMembership::new(self)
    }
}

impl<F: Field> std::fmt::Debug for LinearIdeal<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "LinearIdeal{}", self.coeffs)
    }
}

/// A generator given by its constant and linear parts; higher-degree terms
/// are only recorded as present or absent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorDesc<E> {
    pub constant: E,
    pub linear: Vec<E>,
    pub has_tail: bool,
}

/// The ideal generated by the linear parts of the given generators.
pub fn linearize<F: Field>(
    ring: Arc<StanleyReisnerRing<F>>,
    gens: &[GeneratorDesc<F::Elem>],
) -> Result<LinearIdeal<F>> {
    let field = ring.field().clone();
    if gens.iter().any(|g| !field.is_zero(&g.constant)) {
        return Err(Error::ConstantTerm);
    }
    let rows = gens.iter().map(|g| g.linear.clone()).collect();
    LinearIdeal::from_rows(ring, rows)
}

/// Parses a polynomial such as `x + y + 2*x*z` or `1/3*x - z` over `field`.
pub fn parse_generator<F: Field>(field: &F, s: &str, labels: &[String]) -> Result<GeneratorDesc<F::Elem>> {
    let mut desc = GeneratorDesc {
        constant: field.zero(),
        linear: vec![field.zero(); labels.len()],
        has_tail: false,
    };
    let mut terms: Vec<(bool, usize, &str)> = Vec::new();
    let mut start = 0;
    let mut negative = false;
    for (i, ch) in s.char_indices() {
        if (ch == '+' || ch == '-') && !s[start..i].trim().is_empty() {
            terms.push((negative, start, &s[start..i]));
            negative = ch == '-';
            start = i + 1;
        } else if ch == '-' || ch == '+' {
            negative ^= ch == '-';
            start = i + 1;
        }
    }
    terms.push((negative, start, &s[start..]));
    for (neg, offset, term) in terms {
        let column = offset + 1 + (term.len() - term.trim_start().len());
        let term = term.trim();
        if term.is_empty() {
            return Err(Error::parse(1, column, "empty term"));
        }
        let mut coeff = if neg { field.from_i64(-1) } else { field.one() };
        let mut exps = vec![0u32; labels.len()];
        for factor in term.split('*') {
            let factor = factor.trim();
            if let Some(c) = field.parse_elem(factor) {
                coeff = field.mul(&coeff, &c);
                continue;
            }
            let (name, e) = match factor.split_once('^') {
                Some((n, e)) => (
                    n.trim(),
                    e.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::parse(1, column, format!("bad exponent in `{factor}`")))?,
                ),
                None => (factor, 1),
            };
            let v = labels
                .iter()
                .position(|l| l == name)
                .ok_or_else(|| Error::parse(1, column, format!("unknown variable `{name}`")))?;
            exps[v] += e;
        }
        match exps.iter().sum::<u32>() {
            0 => desc.constant = field.add(&desc.constant, &coeff),
            1 => {
                let v = exps.iter().position(|&e| e == 1).expect("degree one");
                desc.linear[v] = field.add(&desc.linear[v], &coeff);
            }
            _ => desc.has_tail |= !field.is_zero(&coeff),
        }
    }
    Ok(desc)
}
