//! Monomial membership in a linear ideal by eliminating variables.
//!
//! If J has reduced row echelon form with pivot variables P and free
//! variables N, then k[Δ]/J ≅ k[x_N]/σ(I_Δ) where σ sends each pivot
//! variable to minus the free part of its row. So m ∈ J exactly when σ(m)
//! lies in the degree-q piece of σ(I_Δ), which is spanned by z^β·σ(g) over
//! the minimal nonfaces g. These pieces are far smaller than k[Δ]_q.

use std::collections::HashMap;

use super::LinearIdeal;
use crate::algebra::{Field, Matrix, Subspace};
use crate::complex::vertices_of;
use crate::monomial_ideals::Monomial;

type Poly<E> = HashMap<Vec<u32>, E>;

pub struct QuotientMembership<F: Field> {
    field: F,
    n_free: usize,
    /// σ(x_i) as a linear form in the free variables.
    images: Vec<Vec<F::Elem>>,
    relations: Vec<(usize, Poly<F::Elem>)>,
    pieces: HashMap<usize, (Subspace<F>, HashMap<Vec<u32>, usize>)>,
}

impl<F: Field> QuotientMembership<F> {
    pub fn new(j: &LinearIdeal<F>) -> Self {
        let field = j.ring().field().clone();
        let n = j.ring().n_vars();
        let (r, pivots) = j.coeffs().rref();
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let t = free.len();
        let mut images = vec![vec![field.zero(); t]; n];
        for (k, &v) in free.iter().enumerate() {
            images[v][k] = field.one();
        }
        for (row, &p) in pivots.iter().enumerate() {
            for (k, &v) in free.iter().enumerate() {
                images[p][k] = field.neg(r.get(row, v));
            }
        }
        let mut me = Self {
            field,
            n_free: t,
            images,
            relations: Vec::new(),
            pieces: HashMap::new(),
        };
        let relations = j
            .ring()
            .complex()
            .minimal_nonfaces()
            .into_iter()
            .map(|g| {
                let verts = vertices_of(g);
                (verts.len(), me.substitute(verts.iter().map(|&v| (v, 1))))
            })
            .filter(|(_, p)| !p.is_empty())
            .collect();
        me.relations = relations;
        me
    }

    fn substitute(&self, factors: impl Iterator<Item = (usize, u32)>) -> Poly<F::Elem> {
        let f = &self.field;
        let mut acc: Poly<F::Elem> = HashMap::from([(vec![0; self.n_free], f.one())]);
        for (v, e) in factors {
            for _ in 0..e {
                let mut next: Poly<F::Elem> = HashMap::new();
                for (exp, c) in &acc {
                    for (k, a) in self.images[v].iter().enumerate() {
                        if f.is_zero(a) {
                            continue;
                        }
                        let mut key = exp.clone();
                        key[k] += 1;
                        let term = f.mul(c, a);
                        let slot = next.entry(key).or_insert_with(|| f.zero());
                        *slot = f.add(slot, &term);
                    }
                }
                next.retain(|_, c| !f.is_zero(c));
                acc = next;
            }
        }
        acc
    }

    fn piece(&mut self, q: usize) -> &(Subspace<F>, HashMap<Vec<u32>, usize>) {
        if !self.pieces.contains_key(&q) {
            let basis = exponent_vectors(self.n_free, q);
            let index: HashMap<Vec<u32>, usize> =
                basis.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
            let mut rows = Vec::new();
            for (deg, rel) in &self.relations {
                if *deg > q {
                    continue;
                }
                for beta in exponent_vectors(self.n_free, q - deg) {
                    let mut row = vec![self.field.zero(); basis.len()];
                    for (exp, c) in rel {
                        let key: Vec<u32> = exp.iter().zip(&beta).map(|(a, b)| a + b).collect();
                        row[index[&key]] = c.clone();
                    }
                    rows.push(row);
                }
            }
            let m = Matrix::from_rows(self.field.clone(), basis.len(), rows).expect("consistent widths");
            self.pieces.insert(q, (Subspace::from_rows(&m), index));
        }
        &self.pieces[&q]
    }

    /// Whether m ∈ J in k[Δ]. Vanishing monomials are always members.
    pub fn contains(&mut self, m: &Monomial) -> bool {
        let q = m.degree() as usize;
        if q == 0 {
            return false;
        }
        let image = self.substitute(
            m.exponents().iter().enumerate().filter(|(_, &e)| e > 0).map(|(v, &e)| (v, e)),
        );
        if image.is_empty() {
            return true;
        }
        let zero = self.field.zero();
        let (space, index) = self.piece(q);
        let mut v = vec![zero; index.len()];
        for (exp, c) in image {
            v[index[&exp]] = c;
        }
        space.contains(&v)
    }
}

/// All exponent vectors of length t summing to q, in lex order.
fn exponent_vectors(t: usize, q: usize) -> Vec<Vec<u32>> {
    fn rec(t: usize, q: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == t {
            prefix.push(q);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=q).rev() {
            prefix.push(e);
            rec(t, q - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if t == 0 {
        if q == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(t, q as u32, &mut Vec::with_capacity(t), &mut out);
    out
}
