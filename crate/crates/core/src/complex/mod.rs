//! Simplicial complexes stored as facet lists of vertex bitmasks.

mod io;

pub use io::{parse_complex, parse_inline, parse_json, parse_text, ComplexDoc};

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::error::{Error, Result};

/// A set of vertices, bit `i` standing for vertex `i`.
pub type VertexSet = u64;

pub const MAX_VERTICES: usize = 64;

pub fn mask_of(vertices: &[usize]) -> VertexSet {
    vertices.iter().fold(0, |m, &v| m | (1u64 << v))
}

pub fn vertices_of(mask: VertexSet) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

fn full_mask(n: usize) -> VertexSet {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// All size-`k` subsets of `vertices`, as masks, in lexicographic order.
fn combinations(vertices: &[usize], k: usize) -> Vec<VertexSet> {
    fn rec(vs: &[usize], k: usize, start: usize, acc: VertexSet, out: &mut Vec<VertexSet>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        for i in start..=vs.len() - k {
            rec(vs, k - 1, i + 1, acc | (1 << vs[i]), out);
        }
    }
    let mut out = Vec::new();
    if k <= vertices.len() {
        rec(vertices, k, 0, 0, &mut out);
    }
    out
}

pub fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

/// A simplicial complex on vertices `0..n`, given by its facets.
///
/// Every vertex lies in some facet, no facet contains another, and the facet
/// list is never empty. Facets keep the order in which they were first given.
#[derive(Clone)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VertexSet>,
    labels: Vec<String>,
}

/// One connected component together with the original index of each of its vertices.
#[derive(Clone, Debug)]
pub struct Component {
    pub complex: SimplicialComplex,
    pub vertices: Vec<usize>,
}

impl SimplicialComplex {
    /// Builds a complex from arbitrary vertex subsets. Non-maximal and
    /// repeated subsets are dropped.
    pub fn from_facets<I, S>(n: usize, facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<[usize]>,
    {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut masks = Vec::new();
        for f in facets {
            for &v in f.as_ref() {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            masks.push(mask_of(f.as_ref()));
        }
        Self::from_masks(n, masks)
    }

    pub fn from_masks(n: usize, masks: Vec<VertexSet>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        if masks.is_empty() {
            return Err(Error::EmptyFacetList);
        }
        let full = full_mask(n);
        if let Some(bad) = masks.iter().find(|&&m| m & !full != 0) {
            let vertex = vertices_of(bad & !full)[0];
            return Err(Error::VertexOutOfRange { vertex, n });
        }
        let mut facets: Vec<VertexSet> = Vec::new();
        for (i, &m) in masks.iter().enumerate() {
            let dominated = masks
                .iter()
                .enumerate()
                .any(|(j, &o)| (m & o == m) && (m != o || j < i));
            if !dominated {
                facets.push(m);
            }
        }
        let covered = facets.iter().fold(0, |acc, &f| acc | f);
        if covered != full {
            return Err(Error::UncoveredVertex(vertices_of(full & !covered)[0]));
        }
        Ok(Self {
            n,
            facets,
            labels: default_labels(n),
        })
    }

    /// Replaces the vertex names used when printing monomials.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                actual: labels.len(),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    /// The (d-1)-dimensional complex whose facets are all d-subsets of n vertices.
    pub fn complete_skeleton(d: usize, n: usize) -> Result<Self> {
        if d == 0 || d >= n || n > MAX_VERTICES {
            return Err(Error::InvalidSkeleton { d, n });
        }
        let all: Vec<usize> = (0..n).collect();
        Self::from_masks(n, combinations(&all, d))
    }

    /// The cycle graph 0-1-...-(n-1)-0.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::CycleTooSmall(n));
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut facets: Vec<VertexSet> = (0..n - 1).map(|i| mask_of(&[i, i + 1])).collect();
        facets.push(mask_of(&[0, n - 1]));
        Self::from_masks(n, facets)
    }

    /// The full simplex on n vertices.
    pub fn simplex(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyFacetList);
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Self::from_masks(n, vec![full_mask(n)])
    }

    /// Places `b` after `a`, shifting its vertices by `a`'s vertex count.
    pub fn disjoint_union(a: &Self, b: &Self) -> Result<Self> {
        let n = a.n + b.n;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let facets = a
            .facets
            .iter()
            .copied()
            .chain(b.facets.iter().map(|&f| f << a.n))
            .collect();
        let mut out = Self::from_masks(n, facets)?;
        if !(a.has_default_labels() && b.has_default_labels()) {
            let labels: Vec<String> = a.labels.iter().chain(&b.labels).cloned().collect();
            let distinct: HashSet<&String> = labels.iter().collect();
            if distinct.len() == labels.len() {
                out.labels = labels;
            }
        }
        Ok(out)
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn facet_vertices(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&f| vertices_of(f)).collect()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn has_default_labels(&self) -> bool {
        self.labels == default_labels(self.n)
    }

    /// dim = (largest facet size) - 1.
    pub fn dim(&self) -> usize {
        self.max_facet_size() - 1
    }

    pub fn max_facet_size(&self) -> usize {
        self.facets.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0)
    }

    pub fn is_face(&self, mask: VertexSet) -> bool {
        self.facets.iter().any(|&f| mask & f == mask)
    }

    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0] == full_mask(self.n)
    }

    /// All q-dimensional faces (vertex sets of size q + 1), sorted.
    pub fn faces_of_dim(&self, q: usize) -> Vec<Vec<usize>> {
        let mut set = BTreeSet::new();
        for &f in &self.facets {
            for s in combinations(&vertices_of(f), q + 1) {
                set.insert(vertices_of(s));
            }
        }
        set.into_iter().collect()
    }

    /// Every face including the empty one, as masks.
    pub fn all_faces(&self) -> Vec<VertexSet> {
        let mut set = BTreeSet::new();
        for &f in &self.facets {
            let mut sub = f;
            loop {
                set.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f;
            }
        }
        set.into_iter().collect()
    }

    /// Inclusion-minimal vertex sets that are not faces.
    pub fn minimal_nonfaces(&self) -> Vec<VertexSet> {
        let mut out = BTreeSet::new();
        for t in self.all_faces() {
            for v in 0..self.n {
                if t & (1 << v) != 0 {
                    continue;
                }
                let s = t | (1 << v);
                if self.is_face(s) {
                    continue;
                }
                if vertices_of(s).iter().all(|&u| self.is_face(s & !(1 << u))) {
                    out.insert(s);
                }
            }
        }
        let mut v: Vec<VertexSet> = out.into_iter().collect();
        v.sort_by_key(|&m| (m.count_ones(), vertices_of(m)));
        v
    }

    pub fn connected_components(&self) -> Vec<Component> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut c = x;
            while p[c] != r {
                let next = p[c];
                p[c] = r;
                c = next;
            }
            r
        }
        for &f in &self.facets {
            let vs = vertices_of(f);
            for w in vs.windows(2) {
                let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut roots: Vec<usize> = Vec::new();
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for v in 0..self.n {
            let r = find(&mut parent, v);
            match roots.iter().position(|&x| x == r) {
                Some(i) => groups[i].push(v),
                None => {
                    roots.push(r);
                    groups.push(vec![v]);
                }
            }
        }
        groups
            .into_iter()
            .map(|vertices| {
                let local = |mask: VertexSet| -> VertexSet {
                    vertices
                        .iter()
                        .enumerate()
                        .filter(|(_, &g)| mask & (1 << g) != 0)
                        .fold(0, |m, (i, _)| m | (1 << i))
                };
                let comp_mask = mask_of(&vertices);
                let facets = self
                    .facets
                    .iter()
                    .filter(|&&f| f & comp_mask != 0)
                    .map(|&f| local(f))
                    .collect();
                let labels = vertices.iter().map(|&v| self.labels[v].clone()).collect();
                let complex = Self::from_masks(vertices.len(), facets)
                    .expect("component of a valid complex")
                    .with_labels(labels)
                    .expect("label count matches");
                Component { complex, vertices }
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    /// True iff the complex is a single cycle graph on at least 3 vertices.
    pub fn is_cycle_graph(&self) -> bool {
        if self.n < 3 || self.facets.len() != self.n {
            return false;
        }
        if self.facets.iter().any(|f| f.count_ones() != 2) {
            return false;
        }
        let degrees_ok =
            (0..self.n).all(|v| self.facets.iter().filter(|&&f| f & (1 << v) != 0).count() == 2);
        degrees_ok && self.is_connected()
    }

    fn sorted_facets(&self) -> Vec<VertexSet> {
        let mut f = self.facets.clone();
        f.sort_unstable();
        f
    }
}

/// Equality of complexes ignores vertex labels and facet order.
impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.sorted_facets() == other.sorted_facets()
    }
}

impl Eq for SimplicialComplex {}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("n", &self.n)
            .field("facets", &self.facet_vertices())
            .finish()
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let facets: Vec<String> = self
            .facets
            .iter()
            .map(|&m| {
                let names: Vec<&str> =
                    vertices_of(m).iter().map(|&v| self.labels[v].as_str()).collect();
                format!("{{{}}}", names.join(","))
            })
            .collect();
        write!(f, "{}", facets.join(" "))
    }
}
