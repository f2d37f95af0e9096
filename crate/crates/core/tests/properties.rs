mod common;

use std::sync::Arc;

use proptest::prelude::*;
use starcore::algebra::{in_span, Field, Matrix, PrimeField, Rationals, DEFAULT_MODULUS};
use starcore::complex::mask_of;
use starcore::core_engine::{core_monte_carlo, special_core};
use starcore::monomial_ideals::{annihilator, minimal_primes, stanley_reisner_generators};
use starcore::reductions::{random_reduction, shrink, LinearIdeal};
use starcore::{Ambient, Monomial, MonomialIdeal, SimplicialComplex, StanleyReisnerRing};

use common::ring;

/// A complex on 1..=max_n vertices from random subsets, with uncovered
/// vertices added as isolated points.
fn complex(max_n: usize, max_facet: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_n)
        .prop_flat_map(move |n| (Just(n), prop::collection::vec(prop::collection::btree_set(0..n, 1..=max_facet.min(n)), 1..5)))
        .prop_map(|(n, sets)| {
            let mut masks: Vec<u64> = sets.iter().map(|s| mask_of(&s.iter().copied().collect::<Vec<_>>())).collect();
            let covered = masks.iter().fold(0u64, |a, m| a | m);
            for v in 0..n {
                if covered & (1 << v) == 0 {
                    masks.push(1 << v);
                }
            }
            SimplicialComplex::from_masks(n, masks).unwrap()
        })
}

fn matrix_f7(max: usize) -> impl Strategy<Value = Matrix<PrimeField>> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(0u64..7, r * c)
            .prop_map(move |data| Matrix::new(PrimeField::new(7).unwrap(), r, c, data).unwrap())
    })
}

fn monomial(n: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, n).prop_map(Monomial::from_exponents)
}

/// Every exponent vector of length n and total degree q.
fn all_monomials(n: usize, q: u32) -> Vec<Monomial> {
    fn rec(n: usize, q: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if cur.len() + 1 == n {
            cur.push(q);
            out.push(Monomial::from_exponents(cur.clone()));
            cur.pop();
            return;
        }
        for e in 0..=q {
            cur.push(e);
            rec(n, q - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, q, &mut Vec::new(), &mut out);
    out
}

fn divisors(m: &Monomial) -> Vec<Monomial> {
    let mut out = vec![Monomial::one(m.n_vars())];
    for (i, &e) in m.exponents().iter().enumerate() {
        let mut next = Vec::new();
        for d in &out {
            for k in 0..=e {
                let mut exps = d.exponents().to_vec();
                exps[i] = k;
                next.push(Monomial::from_exponents(exps));
            }
        }
        out = next;
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_idempotent(m in matrix_f7(5)) {
        let (r, _) = m.rref();
        prop_assert_eq!(r.rref().0, r);
    }

    #[test]
    fn rank_of_transpose(m in matrix_f7(5)) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn span_agrees_with_rank(m in matrix_f7(4), v in prop::collection::vec(0u64..7, 4)) {
        let v: Vec<u64> = v.into_iter().take(m.cols()).chain(std::iter::repeat(0)).take(m.cols()).collect();
        let mut extended = m.clone();
        extended.push_row(&v).unwrap();
        prop_assert_eq!(in_span(&v, &m).unwrap(), m.rank() == extended.rank());
    }

    #[test]
    fn union_components_add(a in complex(4, 3), b in complex(4, 3)) {
        let u = SimplicialComplex::disjoint_union(&a, &b).unwrap();
        prop_assert_eq!(
            u.connected_components().len(),
            a.connected_components().len() + b.connected_components().len()
        );
    }

    #[test]
    fn faces_match_subset_enumeration(c in complex(6, 4)) {
        let n = c.n_vertices();
        for q in 0..4 {
            let faces = c.faces_of_dim(q);
            let brute = (0u64..(1 << n))
                .filter(|s| s.count_ones() as usize == q + 1 && c.facets().iter().any(|f| s & f == *s))
                .count();
            prop_assert_eq!(faces.len(), brute);
            for f in faces {
                let m = mask_of(&f);
                prop_assert!(c.facets().iter().any(|g| m & g == m));
            }
        }
    }

    #[test]
    fn stanley_reisner_ideal_is_intersection_of_primes(c in complex(6, 4)) {
        let amb = Ambient::Polynomial(c.n_vertices());
        let meet = minimal_primes(&c)
            .iter()
            .map(|p| p.reinterpret(amb.clone()).unwrap())
            .reduce(|a, b| a.intersect(&b).unwrap())
            .unwrap();
        prop_assert_eq!(meet, stanley_reisner_generators(&c));
    }

    #[test]
    fn annihilators_kill_their_primes(c in complex(6, 4)) {
        for p in minimal_primes(&c) {
            let ann = annihilator(&c, &p).unwrap();
            for g in ann.generators() {
                for v in p.generators() {
                    prop_assert!(g.mul(v).is_zero_in(&c), "{:?} * {:?} is nonzero", g, v);
                }
            }
        }
    }

    #[test]
    fn powers_of_the_maximal_ideal(c in complex(5, 3), a in 1u32..4, m in monomial(5, 3)) {
        let n = c.n_vertices();
        let m = Monomial::from_exponents(m.exponents()[..n].to_vec());
        prop_assume!(!m.is_zero_in(&c));
        let power = MonomialIdeal::maximal(Ambient::of(&c)).power(a);
        prop_assert_eq!(power.contains(&m), m.degree() >= a);
    }

    #[test]
    fn ideal_operations_match_divisor_oracle(
        c in complex(4, 3),
        gi in prop::collection::vec(monomial(4, 2), 1..4),
        gj in prop::collection::vec(monomial(4, 2), 1..4),
    ) {
        let n = c.n_vertices();
        let cut = |v: &Vec<Monomial>| -> Vec<Monomial> {
            v.iter().map(|m| Monomial::from_exponents(m.exponents()[..n].to_vec())).collect()
        };
        let amb = Ambient::of(&c);
        let i = MonomialIdeal::new(amb.clone(), cut(&gi));
        let j = MonomialIdeal::new(amb.clone(), cut(&gj));
        let meet = i.intersect(&j).unwrap();
        let prod = i.product(&j).unwrap();
        let sq = i.power(2);
        // a vanishing monomial is in every ideal
        let in_ideal = |gens: &[Monomial], m: &Monomial| m.is_zero_in(&c) || gens.iter().any(|g| g.divides(m));
        for q in 0..=5u32 {
            for m in all_monomials(n, q) {
                prop_assert_eq!(meet.contains(&m), in_ideal(i.generators(), &m) && in_ideal(j.generators(), &m));
                let split = |a: &[Monomial], b: &[Monomial]| {
                    m.is_zero_in(&c) || divisors(&m).iter().any(|d| {
                        let rest = m.checked_div(d).unwrap();
                        a.iter().any(|g| g.divides(d)) && b.iter().any(|g| g.divides(&rest))
                    })
                };
                prop_assert_eq!(prod.contains(&m), split(i.generators(), j.generators()));
                prop_assert_eq!(sq.contains(&m), split(i.generators(), i.generators()));
            }
        }
    }

    #[test]
    fn graded_piece_sizes(c in complex(6, 4), q in 0usize..=6) {
        let r = StanleyReisnerRing::new(c.clone(), Rationals);
        prop_assert_eq!(r.graded_basis(1).len(), c.n_vertices());
        let brute = all_monomials(c.n_vertices(), q as u32).iter().filter(|m| !m.is_zero_in(&c)).count();
        prop_assert_eq!(r.graded_basis(q).len(), brute);
    }

    #[test]
    fn multiplication_is_linear(c in complex(5, 3), seed in 0u64..1000, k in 1u64..7) {
        let f = PrimeField::new(7).unwrap();
        let r = StanleyReisnerRing::new(c.clone(), f);
        let n = c.n_vertices();
        let coeffs: Vec<u64> = (0..n as u64).map(|i| (seed + 3 * i) % 7).collect();
        let scaled: Vec<u64> = coeffs.iter().map(|v| f.mul(v, &k)).collect();
        for m in r.graded_basis(2).basis() {
            let a = r.multiply_into_basis(m, &coeffs).unwrap();
            let b = r.multiply_into_basis(m, &scaled).unwrap();
            let a_scaled: Vec<u64> = a.iter().map(|v| f.mul(v, &k)).collect();
            prop_assert_eq!(a_scaled, b);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn too_few_rows_never_certify(c in complex(6, 4), seed in any::<u64>()) {
        let r = ring(c);
        let d = r.dim();
        prop_assume!(d >= 2);
        let rows = d - 1;
        let mut rng = starcore::reductions::sample_stream(seed, 0);
        let f = *r.field();
        let m: Vec<Vec<u64>> = (0..rows).map(|_| (0..r.n_vars()).map(|_| f.sample(&mut rng)).collect()).collect();
        if let Ok(j) = LinearIdeal::from_rows(r.clone(), m) {
            prop_assert!(!j.is_star_reduction().verdict);
        }
    }

    #[test]
    fn spread_is_reached_quickly(c in complex(6, 4), seed in any::<u64>()) {
        let r = ring(c);
        let s = random_reduction(&r, r.dim(), seed).unwrap();
        prop_assert!(s.attempts <= 5);
        prop_assert_eq!(s.ideal.n_generators(), r.dim());
    }

    #[test]
    fn diagonalization_keeps_row_space(c in complex(6, 4), seed in any::<u64>(), extra in 0usize..2) {
        let r = ring(c);
        let j = random_reduction(&r, r.dim() + extra, seed).unwrap().ideal;
        for i in 0..r.complex().facets().len() {
            let d = j.diagonalize(i).unwrap();
            prop_assert_eq!(d.rref().0, j.coeffs().rref().0);
        }
    }

    #[test]
    fn top_degree_is_always_contained(c in complex(5, 3), seed in any::<u64>()) {
        let r = ring(c);
        let j = random_reduction(&r, r.dim(), seed).unwrap().ideal;
        let mut fast = j.membership();
        for m in r.graded_basis(r.dim() + 1).basis() {
            prop_assert!(j.contains_monomial(m));
            prop_assert!(fast.contains(m));
        }
    }

    #[test]
    fn membership_routes_agree(c in complex(5, 3), seed in any::<u64>(), sparse in any::<bool>()) {
        let r = Arc::new(StanleyReisnerRing::new(c, PrimeField::new(5).unwrap()));
        let mut rng = starcore::reductions::sample_stream(seed, 1);
        let f = *r.field();
        let rows: Vec<Vec<u64>> = (0..r.dim())
            .map(|_| (0..r.n_vars()).map(|_| if sparse && rand::Rng::gen_bool(&mut rng, 0.5) { 0 } else { f.sample(&mut rng) }).collect())
            .collect();
        let Ok(j) = LinearIdeal::from_rows(r.clone(), rows) else { return Ok(()) };
        let mut fast = j.membership();
        for q in 1..=r.dim() + 1 {
            for m in r.graded_basis(q).basis() {
                prop_assert_eq!(j.contains_monomial(m), fast.contains(m), "{:?}", m);
            }
        }
    }

    #[test]
    fn scaling_keeps_verdicts(c in complex(5, 3), seed in any::<u64>()) {
        let r = ring(c);
        let j = random_reduction(&r, r.dim(), seed).unwrap().ideal;
        let mut rng = starcore::reductions::sample_stream(seed, 2);
        let scales: Vec<u64> = (0..r.n_vars()).map(|_| rand::Rng::gen_range(&mut rng, 1..DEFAULT_MODULUS)).collect();
        let s = j.scale_columns(&scales).unwrap();
        prop_assert_eq!(j.is_star_reduction().verdict, s.is_star_reduction().verdict);
        for q in 1..=r.dim() {
            for m in r.graded_basis(q).basis() {
                prop_assert_eq!(j.contains_monomial(m), s.contains_monomial(m));
            }
        }
    }

    #[test]
    fn shrink_stays_inside(c in complex(6, 4), seed in any::<u64>()) {
        let r = ring(c);
        let big = random_reduction(&r, r.dim() + 2, seed).unwrap().ideal;
        let small = shrink(&big, seed).unwrap();
        prop_assert_eq!(small.n_generators(), r.dim());
        prop_assert!(small.is_star_reduction().verdict);
        for row in small.coeffs().row_iter() {
            prop_assert!(in_span(row, big.coeffs()).unwrap());
        }
    }

    #[test]
    fn reports_respect_the_bounds(c in complex(5, 3), seed in 0u64..100) {
        let r = ring(c);
        let rep = core_monte_carlo(&r, 10, seed).unwrap();
        let result = rep.result();
        prop_assert!(result.contains_ideal(&r.maximal_power(r.dim() + 1)));
        if !r.complex().is_simplex() {
            prop_assert!(r.maximal_power(2).contains_ideal(&result));
        }
        for e in &rep.certified_out {
            prop_assert!(!result.contains(&e.monomial));
            prop_assert!(!rep.probable_in.contains(&e.monomial));
        }
    }

    #[test]
    fn union_law_for_graphs(a in complex(4, 2), b in complex(3, 2)) {
        prop_assume!(!a.is_simplex() && !b.is_simplex());
        let (Some((ia, _)), Some((ib, _))) = (special_core(&a), special_core(&b)) else { return Ok(()) };
        let u = SimplicialComplex::disjoint_union(&a, &b).unwrap();
        let amb = Ambient::of(&u);
        let shift: Vec<usize> = (a.n_vertices()..u.n_vertices()).collect();
        let left: Vec<usize> = (0..a.n_vertices()).collect();
        let combined = ia.extend(amb.clone(), &left).sum(&ib.extend(amb, &shift)).unwrap();
        let r = ring(u);
        let sampled = core_monte_carlo(&r, 30, 0).unwrap().result();
        prop_assert_eq!(sampled, combined.reinterpret(r.ambient()).unwrap());
    }
}

/// Every graph (facets of size ≤ 2) on at most five vertices: where a closed
/// form applies, sampling with 50 draws reproduces it exactly.
#[test]
fn closed_forms_agree_with_sampling_on_small_graphs() {
    let mut compared = 0;
    for n in 1..=5usize {
        let edges: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        for pick in 0u32..(1 << edges.len()) {
            let mut masks: Vec<u64> = edges
                .iter()
                .enumerate()
                .filter(|(k, _)| pick & (1 << k) != 0)
                .map(|(_, &(i, j))| (1u64 << i) | (1 << j))
                .collect();
            let covered = masks.iter().fold(0, |a, m| a | m);
            masks.extend((0..n).filter(|v| covered & (1 << v) == 0).map(|v| 1u64 << v));
            let c = SimplicialComplex::from_masks(n, masks).unwrap();
            let Some((closed, _)) = special_core(&c) else { continue };
            let r = ring(c);
            let rep = core_monte_carlo(&r, 50, 0).unwrap();
            assert_eq!(
                rep.result(),
                closed.reinterpret(r.ambient()).unwrap(),
                "{}",
                r.complex()
            );
            compared += 1;
        }
    }
    assert!(compared >= 150, "only {compared} graphs compared");
}

#[test]
fn skeleton_dimensions() {
    for n in 2..=8 {
        for d in 1..n {
            assert_eq!(SimplicialComplex::complete_skeleton(d, n).unwrap().dim(), d - 1);
        }
    }
}
