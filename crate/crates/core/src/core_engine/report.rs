use serde::Serialize;

use crate::algebra::Field;
use crate::monomial_ideals::{self, Monomial, MonomialIdeal};
use crate::sr_ring::StanleyReisnerRing;

use super::special::SpecialRule;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Mode {
    #[serde(rename = "special")]
    Special,
    #[serde(rename = "monte-carlo")]
    MonteCarlo,
    #[serde(rename = "brute-force")]
    BruteForce,
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::Special => "special",
            Mode::MonteCarlo => "monte-carlo",
            Mode::BruteForce => "brute-force",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingInfo {
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<String>>,
    pub n: usize,
    pub dim: usize,
    pub field: String,
}

impl RingInfo {
    pub fn of<F: Field>(r: &StanleyReisnerRing<F>) -> Self {
        Self {
            vertices: r.complex().labels().to_vec(),
            facets: monomial_ideals::facet_names(r.complex()),
            n: r.n_vars(),
            dim: r.dim(),
            field: r.field().config().tag(),
        }
    }
}

/// A coefficient matrix over GF(modulus), row-major.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub rows: Vec<Vec<u64>>,
    pub modulus: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sample: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Exclusion {
    pub monomial: Monomial,
    /// A reduction not containing the monomial; absent for closed forms.
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct References {
    pub m_squared: MonomialIdeal,
    pub tau_m: MonomialIdeal,
    pub m_top: MonomialIdeal,
}

impl References {
    pub fn of<F: Field>(r: &StanleyReisnerRing<F>) -> Self {
        Self {
            m_squared: r.maximal_power(2),
            tau_m: r.test_ideal().product(&r.maximal_ideal()).expect("same ring"),
            m_top: r.maximal_power(r.dim() + 1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradedDim {
    pub degree: usize,
    pub ambient: usize,
    pub dim: usize,
    pub monomial: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BruteForceInfo {
    pub modulus: u64,
    pub reductions: usize,
    /// The intersection of all reductions, degree by degree.
    pub graded: Vec<GradedDim>,
    pub monomial: bool,
    pub examples: Vec<Witness>,
}

#[derive(Debug, Clone)]
pub struct CoreReport {
    pub ring: RingInfo,
    pub mode: Mode,
    pub rule: Option<SpecialRule>,
    pub certified_in: MonomialIdeal,
    pub certified_out: Vec<Exclusion>,
    pub probable_in: Vec<Monomial>,
    pub samples: usize,
    pub seed: Option<u64>,
    pub exact: bool,
    pub confirmed_by_special: bool,
    pub qualifier: String,
    pub references: References,
    pub brute_force: Option<BruteForceInfo>,
}

impl CoreReport {
    /// certified_in + (probable_in).
    pub fn result(&self) -> MonomialIdeal {
        let extra = MonomialIdeal::new(self.certified_in.ambient().clone(), self.probable_in.iter().cloned());
        self.certified_in.sum(&extra).expect("same ring")
    }

    pub fn excluded(&self) -> Vec<Monomial> {
        self.certified_out.iter().map(|e| e.monomial.clone()).collect()
    }

    pub fn to_doc(&self) -> CoreReportDoc {
        let labels = self.certified_in.ambient().labels();
        let fmt = |m: &Monomial| m.format(&labels);
        CoreReportDoc {
            ring: self.ring.clone(),
            mode: self.mode,
            rule: self.rule.map(|r| r.to_string()),
            qualifier: self.qualifier.clone(),
            exact: self.exact,
            confirmed_by_special: self.confirmed_by_special,
            samples: self.samples,
            seed: self.seed,
            result: self.result().format(),
            certified_in: self.certified_in.format(),
            certified_out: self
                .certified_out
                .iter()
                .map(|e| ExclusionDoc {
                    monomial: fmt(&e.monomial),
                    witness: e.witness.clone(),
                })
                .collect(),
            probable_in: self.probable_in.iter().map(fmt).collect(),
            references: ReferencesDoc {
                m_squared: self.references.m_squared.format(),
                tau_m: self.references.tau_m.format(),
                m_top: self.references.m_top.format(),
            },
            brute_force: self.brute_force.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ExclusionDoc {
    pub monomial: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReferencesDoc {
    pub m_squared: Vec<String>,
    pub tau_m: Vec<String>,
    pub m_top: Vec<String>,
}

/// The serialized form of a [`CoreReport`].
#[derive(Debug, Clone, Serialize)]
pub struct CoreReportDoc {
    pub ring: RingInfo,
    pub mode: Mode,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rule: Option<String>,
    pub qualifier: String,
    pub exact: bool,
    pub confirmed_by_special: bool,
    pub samples: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub result: Vec<String>,
    pub certified_in: Vec<String>,
    pub certified_out: Vec<ExclusionDoc>,
    pub probable_in: Vec<String>,
    pub references: ReferencesDoc,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub brute_force: Option<BruteForceInfo>,
}
