use std::cmp::Ordering;
use std::fmt;

use crate::complex::{SimplicialComplex, VertexSet};
use crate::error::{Error, Result};

/// A monomial x_1^a_1 ... x_n^a_n as its exponent vector.
///
/// The `Ord` impl is graded lex with x_1 > x_2 > ...: lower degree first,
/// and within a degree the lex-larger monomial first (x1^2 < x1*x2 < x2^2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        Self { exps: vec![0; n] }
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut m = Self::one(n);
        m.exps[i] = 1;
        m
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Self { exps }
    }

    /// The squarefree monomial on the vertices of `mask`.
    pub fn squarefree(n: usize, mask: VertexSet) -> Self {
        let exps = (0..n).map(|i| ((mask >> i) & 1) as u32).collect();
        Self { exps }
    }

    pub fn n_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn support(&self) -> VertexSet {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |m, (i, _)| m | (1 << i))
    }

    /// Zero in k[Δ] iff the support is not a face.
    pub fn is_zero_in(&self, c: &SimplicialComplex) -> bool {
        !c.is_face(self.support())
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn mul_var(&self, i: usize) -> Self {
        let mut m = self.clone();
        m.exps[i] += 1;
        m
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Self {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    pub fn gcd(&self, other: &Self) -> Self {
        Self {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect(),
        }
    }

    /// `self / other`, if `other` divides `self`.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        if !other.divides(self) {
            return None;
        }
        Some(Self {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
        })
    }

    /// Re-embeds into `n` variables, sending variable i to `map[i]`.
    pub fn relabel(&self, n: usize, map: &[usize]) -> Self {
        let mut exps = vec![0; n];
        for (i, &e) in self.exps.iter().enumerate() {
            exps[map[i]] += e;
        }
        Self { exps }
    }

    /// Renders as e.g. `x1^2*x3`; the constant monomial renders as `1`.
    pub fn format(&self, labels: &[String]) -> String {
        let parts: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    labels[i].clone()
                } else {
                    format!("{}^{}", labels[i], e)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    /// Inverse of [`Monomial::format`].
    pub fn parse(s: &str, labels: &[String]) -> Result<Self> {
        let mut m = Self::one(labels.len());
        let s = s.trim();
        if s == "1" {
            return Ok(m);
        }
        let mut column = 1;
        for factor in s.split('*') {
            let (name, exp) = match factor.split_once('^') {
                Some((name, e)) => {
                    let e: u32 = e
                        .trim()
                        .parse()
                        .map_err(|_| Error::parse(1, column, format!("bad exponent in `{factor}`")))?;
                    (name.trim(), e)
                }
                None => (factor.trim(), 1),
            };
            let i = labels
                .iter()
                .position(|l| l == name)
                .ok_or_else(|| Error::parse(1, column, format!("unknown variable `{name}`")))?;
            m.exps[i] += exp;
            column += factor.len() + 1;
        }
        Ok(m)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format(&crate::complex::default_labels(self.n_vars())))
    }
}
