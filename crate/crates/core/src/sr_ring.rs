//! The graded ring k[Δ] = k[x_1..x_n] / I_Δ.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::algebra::Field;
use crate::complex::{SimplicialComplex, VertexSet};
use crate::error::{Error, Result};
use crate::monomial_ideals::{self, Ambient, Monomial, MonomialIdeal};

/// Monomial basis of one graded piece of k[Δ], in graded-lex order.
#[derive(Debug)]
pub struct GradedPiece {
    degree: usize,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl GradedPiece {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}

pub struct StanleyReisnerRing<F: Field> {
    complex: Arc<SimplicialComplex>,
    field: F,
    dim: usize,
    faces: Vec<VertexSet>,
    pieces: Mutex<HashMap<usize, Arc<GradedPiece>>>,
}

impl<F: Field> StanleyReisnerRing<F> {
    pub fn new(complex: SimplicialComplex, field: F) -> Self {
        let dim = complex.max_facet_size();
        let faces = complex.all_faces();
        Self {
            complex: Arc::new(complex),
            field,
            dim,
            faces,
            pieces: Mutex::new(HashMap::new()),
        }
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    /// Krull dimension, dim Δ + 1.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn n_vars(&self) -> usize {
        self.complex.n_vertices()
    }

    pub fn ambient(&self) -> Ambient {
        Ambient::StanleyReisner(self.complex.clone())
    }

    pub fn is_zero(&self, m: &Monomial) -> bool {
        m.is_zero_in(&self.complex)
    }

    pub fn maximal_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::maximal(self.ambient())
    }

    /// 𝔪^k, generated by the nonzero monomials of degree k.
    pub fn maximal_power(&self, k: usize) -> MonomialIdeal {
        MonomialIdeal::new(self.ambient(), self.graded_basis(k).basis().iter().cloned())
    }

    pub fn test_ideal(&self) -> MonomialIdeal {
        monomial_ideals::test_ideal(&self.complex).reinterpret(self.ambient()).expect("same ring")
    }

    /// The nonzero monomials of degree `q`; memoized.
    pub fn graded_basis(&self, q: usize) -> Arc<GradedPiece> {
        if let Some(p) = self.pieces.lock().expect("cache lock").get(&q) {
            return p.clone();
        }
        // built outside the lock; concurrent builders produce identical pieces
        let piece = Arc::new(self.build_piece(q));
        self.pieces
            .lock()
            .expect("cache lock")
            .entry(q)
            .or_insert(piece)
            .clone()
    }

    fn build_piece(&self, q: usize) -> GradedPiece {
        let n = self.n_vars();
        let mut basis = Vec::new();
        for &face in &self.faces {
            let verts = crate::complex::vertices_of(face);
            let s = verts.len();
            if (q == 0) != (s == 0) || s > q {
                continue;
            }
            // compositions of q into s positive parts
            let mut parts = vec![1u32; s];
            if s == 0 {
                basis.push(Monomial::one(n));
                continue;
            }
            parts[s - 1] = (q - s + 1) as u32;
            loop {
                let mut exps = vec![0u32; n];
                for (v, &e) in verts.iter().zip(&parts) {
                    exps[*v] = e;
                }
                basis.push(Monomial::from_exponents(exps));
                if !next_composition(&mut parts) {
                    break;
                }
            }
        }
        basis.sort();
        let index = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        GradedPiece {
            degree: q,
            basis,
            index,
        }
    }

    /// Coordinates of m * (Σ c_j x_j) in the basis of degree deg(m) + 1.
    pub fn multiply_into_basis(&self, m: &Monomial, coeffs: &[F::Elem]) -> Result<Vec<F::Elem>> {
        if coeffs.len() != self.n_vars() {
            return Err(Error::DimensionMismatch {
                expected: self.n_vars(),
                actual: coeffs.len(),
            });
        }
        let target = self.graded_basis(m.degree() as usize + 1);
        let mut out = vec![self.field.zero(); target.len()];
        if self.is_zero(m) {
            return Ok(out);
        }
        for (j, c) in coeffs.iter().enumerate() {
            if self.field.is_zero(c) {
                continue;
            }
            if let Some(idx) = target.index_of(&m.mul_var(j)) {
                out[idx] = self.field.add(&out[idx], c);
            }
        }
        Ok(out)
    }

    pub fn describe(&self) -> String {
        format!("{}[Δ] on {}", self.field.config(), self.complex)
    }
}

/// Advances a composition (all parts >= 1, fixed sum) in colex order.
fn next_composition(parts: &mut [u32]) -> bool {
    let s = parts.len();
    // find the rightmost position i < s-1 whose successor mass can move left
    let last = parts[s - 1];
    if s == 1 {
        return false;
    }
    if last > 1 {
        // move one unit from the last part to its left neighbour, reset
        parts[s - 1] -= 1;
        parts[s - 2] += 1;
        return true;
    }
    // last part is 1: find rightmost j < s-1 with parts[j] > 1 and j > 0
    let mut j = s - 2;
    loop {
        if parts[j] > 1 && j > 0 {
            let surplus = parts[j] - 1;
            parts[j] = 1;
            parts[j - 1] += 1;
            parts[s - 1] = surplus;
            for p in parts.iter_mut().take(s - 1).skip(j) {
                *p = 1;
            }
            parts[s - 1] = surplus;
            return true;
        }
        if j == 0 {
            return false;
        }
        j -= 1;
    }
}

impl<F: Field> fmt::Debug for StanleyReisnerRing<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("StanleyReisnerRing")
            .field("complex", &self.complex)
            .field("field", &self.field.config())
            .field("dim", &self.dim)
            .finish()
    }
}
