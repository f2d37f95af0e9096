use std::fmt::Write as _;
use std::sync::Arc;

use serde_json::{json, Value};
use starcore::core_engine::{
    core_bruteforce_with_budget, core_monte_carlo, core_special, verify_bounds, CoreReport,
};
use starcore::monomial_ideals::{minimal_primes, stanley_reisner_generators};
use starcore::reductions::random_reduction;
use starcore::{
    Error, Field, FieldConfig, LinearIdeal, MonomialIdeal, PrimeField, Rationals, ReductionCertificate,
    StanleyReisnerRing,
};

use crate::input::{load_complex, load_ideal};
use crate::{Common, CoreArgs, CoreMode, Diagonalize, OracleArgs, WithMatrix};

pub struct Output {
    pub command: &'static str,
    pub human: String,
    pub doc: Value,
    /// False when a verdict or verification failed.
    pub ok: bool,
}

impl Output {
    pub fn render_json(&self) -> String {
        let mut doc = self.doc.clone();
        if let Value::Object(map) = &mut doc {
            map.insert("schema_version".into(), json!("1"));
            map.insert("command".into(), json!(self.command));
        }
        serde_json::to_string_pretty(&doc).expect("plain data serializes")
    }
}

enum AnyRing {
    Prime(Arc<StanleyReisnerRing<PrimeField>>),
    Rational(Arc<StanleyReisnerRing<Rationals>>),
}

macro_rules! on_ring {
    ($ring:expr, $r:ident => $body:expr) => {
        match $ring {
            AnyRing::Prime($r) => $body,
            AnyRing::Rational($r) => $body,
        }
    };
}

fn ring(c: &Common) -> Result<AnyRing, String> {
    let complex = load_complex(c)?;
    Ok(match c.field {
        FieldConfig::Prime(p) => {
            let f = PrimeField::new(p).map_err(|e| e.to_string())?;
            AnyRing::Prime(Arc::new(StanleyReisnerRing::new(complex, f)))
        }
        FieldConfig::Rational => AnyRing::Rational(Arc::new(StanleyReisnerRing::new(complex, Rationals))),
    })
}

fn prime_ring(c: &Common) -> Result<Arc<StanleyReisnerRing<PrimeField>>, String> {
    match ring(c)? {
        AnyRing::Prime(r) => Ok(r),
        AnyRing::Rational(_) => Err(Error::RequiresPrimeField.to_string()),
    }
}

fn ideal_str(gens: &[String]) -> String {
    if gens.is_empty() {
        "(0)".into()
    } else {
        format!("({})", gens.join(", "))
    }
}

fn ring_doc<F: Field>(r: &StanleyReisnerRing<F>) -> Value {
    json!(starcore::core_engine::RingInfo::of(r))
}

fn rows_str(rows: &[Vec<String>]) -> String {
    rows.iter().map(|r| format!("({})", r.join(", "))).collect::<Vec<_>>().join(" ")
}

fn certificate_lines<F: Field>(r: &StanleyReisnerRing<F>, cert: &ReductionCertificate, out: &mut String) {
    let labels = r.complex().labels();
    for f in &cert.per_facet {
        let names: Vec<&str> = f.facet.iter().map(|&v| labels[v].as_str()).collect();
        let _ = writeln!(
            out,
            "  facet {{{}}}: rank {} of {}{}",
            names.join(","),
            f.achieved,
            f.required,
            if f.achieved == f.required { "" } else { "  FAIL" }
        );
    }
}

pub fn info(c: &Common) -> Result<Output, String> {
    on_ring!(ring(c)?, r => Ok(info_for(&r)))
}

fn info_for<F: Field>(r: &StanleyReisnerRing<F>) -> Output {
    let c = r.complex();
    let labels = c.labels();
    let sr: Vec<String> = stanley_reisner_generators(c).generators().iter().map(|g| g.format(labels)).collect();
    let primes: Vec<Vec<String>> = minimal_primes(c).iter().map(MonomialIdeal::format).collect();
    let tau = r.test_ideal().format();
    let m2 = r.maximal_power(2).format();
    let top = r.maximal_power(r.dim() + 1).format();
    let components = c.connected_components().len();

    let mut h = String::new();
    let _ = writeln!(h, "ring: {}", r.describe());
    let _ = writeln!(h, "vertices: {}", c.n_vertices());
    let _ = writeln!(h, "dim complex: {}", r.dim() as i64 - 1);
    let _ = writeln!(h, "dim ring: {}", r.dim());
    let _ = writeln!(h, "I_Delta: {}", ideal_str(&sr));
    let _ = writeln!(h, "minimal primes: {}", primes.iter().map(|p| ideal_str(p)).collect::<Vec<_>>().join(" "));
    let _ = writeln!(h, "tau: {}", ideal_str(&tau));
    let _ = writeln!(h, "m^2: {}", ideal_str(&m2));
    let _ = writeln!(h, "m^{}: {}", r.dim() + 1, ideal_str(&top));
    let _ = writeln!(h, "connected: {} ({components} component{})", components == 1, if components == 1 { "" } else { "s" });

    Output {
        command: "info",
        human: h,
        doc: json!({
            "ring": ring_doc(r),
            "dim_complex": r.dim() as i64 - 1,
            "dim_ring": r.dim(),
            "stanley_reisner_ideal": sr,
            "minimal_primes": primes,
            "test_ideal": tau,
            "m_squared": m2,
            "m_top": top,
            "connected": components == 1,
            "components": components,
        }),
        ok: true,
    }
}

pub fn spread(c: &Common) -> Result<Output, String> {
    let r = ring(c)?;
    let mut h = String::new();
    let (doc, d) = on_ring!(&r, r => {
        let _ = writeln!(h, "ring: {}", r.describe());
        let _ = writeln!(h, "*spread(m): {}", r.dim());
        (json!({ "ring": ring_doc(&**r), "spread": r.dim() }), r.dim())
    });
    let mut doc = doc;
    match &r {
        AnyRing::Prime(r) => {
            let s = random_reduction(r, d, c.seed).map_err(|e| e.to_string())?;
            let cert = s.ideal.is_star_reduction();
            let rows = s.ideal.coeffs().render_rows();
            let _ = writeln!(h, "witness (seed {}, attempt {}): {}", c.seed, s.attempts, rows_str(&rows));
            let _ = writeln!(h, "certificate: {}", cert.verdict);
            certificate_lines(&**r, &cert, &mut h);
            doc["witness"] = json!({ "rows": rows, "attempts": s.attempts, "seed": c.seed, "certificate": cert });
        }
        AnyRing::Rational(_) => {
            let _ = writeln!(h, "witness: none (sampling needs a prime field)");
            doc["witness"] = Value::Null;
        }
    }
    Ok(Output { command: "spread", human: h, doc, ok: true })
}

pub fn check(a: &WithMatrix) -> Result<Output, String> {
    on_ring!(ring(&a.common)?, r => {
        let j = load_ideal(&r, a)?;
        Ok(check_for(&j))
    })
}

fn check_for<F: Field>(j: &LinearIdeal<F>) -> Output {
    let r = j.ring();
    let cert = j.is_star_reduction();
    let rows = j.coeffs().render_rows();
    let mut h = String::new();
    let _ = writeln!(h, "ring: {}", r.describe());
    let _ = writeln!(h, "rows: {}", rows_str(&rows));
    let _ = writeln!(h, "*-reduction: {}", cert.verdict);
    certificate_lines(&**r, &cert, &mut h);
    Output {
        command: "check",
        human: h,
        doc: json!({ "ring": ring_doc(&**r), "rows": rows, "verdict": cert.verdict, "certificate": cert }),
        ok: cert.verdict,
    }
}

pub fn diagonalize(a: &Diagonalize) -> Result<Output, String> {
    on_ring!(ring(&a.ideal.common)?, r => {
        let j = load_ideal(&r, &a.ideal)?;
        diagonalize_for(&j, a.prime)
    })
}

fn diagonalize_for<F: Field>(j: &LinearIdeal<F>, prime: Option<usize>) -> Result<Output, String> {
    let r = j.ring();
    let cert = j.is_star_reduction();
    if !cert.verdict {
        let mut out = check_for(j);
        out.command = "diagonalize";
        out.human.push_str("not a *-reduction; no diagonal form\n");
        return Ok(out);
    }
    let count = r.complex().facets().len();
    let indices: Vec<usize> = match prime {
        Some(i) if i >= count => return Err(Error::PrimeIndexOutOfRange { index: i, count }.to_string()),
        Some(i) => vec![i],
        None => (0..count).collect(),
    };
    let primes = minimal_primes(r.complex());
    let mut h = String::new();
    let _ = writeln!(h, "ring: {}", r.describe());
    let _ = writeln!(h, "rows: {}", rows_str(&j.coeffs().render_rows()));
    let mut forms = Vec::new();
    for i in indices {
        let m = j.diagonalize(i).map_err(|e| e.to_string())?;
        let rows = m.render_rows();
        let prime = primes[i].format();
        let _ = writeln!(h, "prime {i} {}: {}", ideal_str(&prime), rows_str(&rows));
        forms.push(json!({ "index": i, "prime": prime, "rows": rows }));
    }
    Ok(Output {
        command: "diagonalize",
        human: h,
        doc: json!({ "ring": ring_doc(&**r), "rows": j.coeffs().render_rows(), "diagonal_forms": forms }),
        ok: true,
    })
}

pub fn core(a: &CoreArgs) -> Result<Output, String> {
    let c = &a.common;
    let report = match (ring(c)?, a.mode) {
        (AnyRing::Rational(r), CoreMode::Special | CoreMode::Auto) => {
            core_special(&*r).ok_or_else(|| no_closed_form(a.mode))?
        }
        (AnyRing::Rational(_), _) => return Err(Error::RequiresPrimeField.to_string()),
        (AnyRing::Prime(r), CoreMode::Special) => core_special(&*r).ok_or_else(|| no_closed_form(a.mode))?,
        (AnyRing::Prime(r), CoreMode::Auto) => match core_special(&*r) {
            Some(rep) => rep,
            None => core_monte_carlo(&r, c.samples as usize, c.seed).map_err(|e| e.to_string())?,
        },
        (AnyRing::Prime(r), CoreMode::Mc) => core_monte_carlo(&r, c.samples as usize, c.seed).map_err(|e| e.to_string())?,
        (AnyRing::Prime(r), CoreMode::Bruteforce) => {
            core_bruteforce_with_budget(&r, a.budget).map_err(|e| e.to_string())?
        }
    };
    Ok(core_output("core", &report))
}

fn no_closed_form(mode: CoreMode) -> String {
    if mode == CoreMode::Auto {
        format!("no closed form applies, and sampling needs a prime field ({})", Error::RequiresPrimeField)
    } else {
        "special mode not applicable: no closed form covers this complex".into()
    }
}

pub fn oracle(a: &OracleArgs) -> Result<Output, String> {
    let r = prime_ring(&a.common)?;
    let report = core_bruteforce_with_budget(&r, a.budget).map_err(|e| e.to_string())?;
    Ok(core_output("oracle", &report))
}

fn core_output(command: &'static str, report: &CoreReport) -> Output {
    let doc = report.to_doc();
    let mut h = String::new();
    let _ = writeln!(h, "ring: field {}, facets {}", doc.ring.field, rows_str(&doc.ring.facets));
    let _ = write!(h, "mode: {}", doc.mode);
    if let Some(rule) = &doc.rule {
        let _ = write!(h, " ({rule})");
    }
    let _ = writeln!(h);
    let _ = writeln!(
        h,
        "{}(m): {}{}",
        doc.qualifier,
        ideal_str(&doc.result),
        if doc.exact { "  [exact]" } else { "  [probable]" }
    );
    if doc.confirmed_by_special {
        let _ = writeln!(h, "  confirmed by closed form");
    }
    let _ = writeln!(h, "certified in: {}", ideal_str(&doc.certified_in));
    let _ = writeln!(h, "certified out:");
    for e in &doc.certified_out {
        match &e.witness {
            Some(w) => {
                let rows: Vec<Vec<String>> =
                    w.rows.iter().map(|r| r.iter().map(u64::to_string).collect()).collect();
                let tag = w.sample.map(|s| format!("sample {s}")).unwrap_or_else(|| "witness".into());
                let _ = writeln!(h, "  {}  ({tag}: {})", e.monomial, rows_str(&rows));
            }
            None => {
                let _ = writeln!(h, "  {}", e.monomial);
            }
        }
    }
    let probable = if doc.probable_in.is_empty() { "(none)".to_string() } else { doc.probable_in.join(", ") };
    let _ = writeln!(h, "probable in: {probable}");
    if let Some(seed) = doc.seed {
        let _ = writeln!(h, "samples: {}, seed {seed}", doc.samples);
    }
    if let Some(bf) = &doc.brute_force {
        let _ = writeln!(h, "reductions over GF({}): {}", bf.modulus, bf.reductions);
        for g in &bf.graded {
            let _ = writeln!(
                h,
                "  degree {}: dim {} of {}{}",
                g.degree,
                g.dim,
                g.ambient,
                if g.monomial { "" } else { "  (not spanned by monomials)" }
            );
        }
        let _ = writeln!(h, "intersection is monomial: {}", bf.monomial);
    }
    let _ = writeln!(h, "m^2: {}", ideal_str(&doc.references.m_squared));
    let _ = writeln!(h, "tau*m: {}", ideal_str(&doc.references.tau_m));
    let _ = writeln!(h, "m^(d+1): {}", ideal_str(&doc.references.m_top));
    Output {
        command,
        human: h,
        doc: serde_json::to_value(&doc).expect("plain data serializes"),
        ok: true,
    }
}

pub fn verify(c: &Common) -> Result<Output, String> {
    let r = prime_ring(c)?;
    let rep = verify_bounds(&r, c.samples as usize, c.seed).map_err(|e| e.to_string())?;
    let mut h = String::new();
    let _ = writeln!(h, "ring: {}", r.describe());
    let _ = writeln!(h, "samples: {}, seed {}", rep.samples, rep.seed);
    for chk in rep.checks.iter().filter(|c| !c.passed) {
        let _ = writeln!(h, "FAIL {}: {}", chk.name, chk.detail);
    }
    let _ = writeln!(h, "checks: {}, violations: {}", rep.checks.len(), rep.violations);
    let _ = writeln!(h, "{}", if rep.passed { "PASS" } else { "FAIL" });
    Ok(Output {
        command: "verify",
        human: h,
        doc: serde_json::to_value(&rep).expect("plain data serializes"),
        ok: rep.passed,
    })
}
