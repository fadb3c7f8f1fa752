//! One function per subcommand, each returning its check records.

use std::thread;

use frobenius_masa::algebra::{check_commuting, closure, combinations, is_masa, MatAlgebra};
use frobenius_masa::classify::{
    classify_gm, derivations_direct, derivations_via_normalizer, eig_profile, find_cyclic_generator, invariant_bundle,
};
use frobenius_masa::corpus::{self, standard_entries, validate, CorpusEntry};
use frobenius_masa::decide::DecisionConfig;
use frobenius_masa::exact::Rat;
use frobenius_masa::frobenius::{
    build_semidirect, ce_coboundary, frobenius_polynomial, open_orbit_exists, verify_lsa, LinForm, LsaReport,
    OrbitDecision, PolyVerdict, Semidirect, ZeroCertificate, WEDGE_DIM_LIMIT,
};
use frobenius_masa::{Error, Result};

use crate::json::{FamilyFile, JsonMat, JsonRat};
use crate::report::{Bracket, Certificate, Record, Verdict};

pub const ANCHOR_CLOSURE: &str = "generated-algebra";
pub const ANCHOR_CHECK: &str = "commuting-unital";
pub const ANCHOR_MASA: &str = "masa-criterion";
pub const ANCHOR_ORBIT: &str = "open-orbit";
pub const ANCHOR_BUILD: &str = "semidirect-structure";
pub const ANCHOR_FROBENIUS: &str = "frobenius-functional";
pub const ANCHOR_LSA: &str = "left-symmetric-product";
pub const ANCHOR_CLASSIFY: &str = "eigen-profile-classification";
pub const ANCHOR_BUNDLE: &str = "invariant-bundle";
pub const ANCHOR_DERIVE: &str = "derivations-via-normalizer";
pub const ANCHOR_CORPUS: &str = "corpus-self-check";
pub const ANCHOR_BOUND: &str = "gerstenhaber-bound";

pub(crate) fn rats(v: &[Rat]) -> Vec<JsonRat> {
    v.iter().cloned().map(JsonRat).collect()
}

/// The algebra a file describes: its `basis` when given, else the closure of its generators.
pub fn algebra_of(f: &FamilyFile) -> Result<MatAlgebra> {
    match f.basis() {
        Some(b) => MatAlgebra::new(f.n, b),
        None => closure(f.n, &f.generators()),
    }
}

fn inapplicable(name: &str, anchor: &str, e: &Error) -> Record {
    Record::new(name, Verdict::Inapplicable, anchor, Certificate::Message { text: e.to_string() })
}

pub fn closure_cmd(f: &FamilyFile) -> Result<Vec<Record>> {
    let c = closure(f.n, &f.generators())?;
    let agrees = match f.basis() {
        Some(b) => MatAlgebra::new(f.n, b)?.same_span(&c),
        None => true,
    };
    let basis = c.basis().iter().cloned().map(JsonMat).collect();
    Ok(vec![Record::new("closure", Verdict::from_bool(agrees), ANCHOR_CLOSURE, Certificate::Closure { dim: c.dim(), basis })])
}

pub fn check_cmd(f: &FamilyFile) -> Result<Vec<Record>> {
    let commuting = match check_commuting(f.n, &f.generators()) {
        Ok(()) => true,
        Err(Error::NonCommuting(..)) => false,
        Err(e) => return Err(e),
    };
    let flag = |name: &str, anchor: &str, v: bool| Record::new(name, Verdict::from_bool(v), anchor, Certificate::Flag { value: v });
    if !commuting {
        let e = Error::NotCommutative;
        return Ok(vec![flag("commuting", ANCHOR_CHECK, false), inapplicable("masa", ANCHOR_MASA, &e)]);
    }
    let b = algebra_of(f)?;
    let mut out = vec![flag("commuting", ANCHOR_CHECK, commuting), flag("unital", ANCHOR_CHECK, b.is_unital())];
    out.push(match is_masa(&b) {
        Ok(v) => flag("masa", ANCHOR_MASA, v),
        Err(e) if e.is_inapplicable() => inapplicable("masa", ANCHOR_MASA, &e),
        Err(e) => return Err(e),
    });
    Ok(out)
}

fn sampled(v: &frobenius_masa::decide::SampledVerdict) -> Certificate {
    Certificate::Sampled {
        samples: v.samples,
        seed: v.seed,
        degree_bound: v.degree_bound,
        error_bound: JsonRat(v.error_bound.clone()),
    }
}

pub fn orbit_cmd(f: &FamilyFile, cfg: &DecisionConfig) -> Result<Vec<Record>> {
    let b = algebra_of(f)?;
    let rec = match open_orbit_exists(&b, cfg) {
        Ok(OrbitDecision::Witness { alpha, determinant }) => Record::new(
            "orbit",
            Verdict::Pass,
            ANCHOR_ORBIT,
            Certificate::Witness { alpha: rats(&alpha.0), determinant: JsonRat(determinant), top_wedge: None },
        ),
        Ok(OrbitDecision::NoOpenOrbit(ZeroCertificate::Symbolic(p))) => {
            Record::new("orbit", Verdict::Pass, ANCHOR_ORBIT, Certificate::ZeroPolynomial { polynomial: p.to_string() })
        }
        Ok(OrbitDecision::NoOpenOrbit(ZeroCertificate::Sampled(v))) => {
            Record::new("orbit", Verdict::Probabilistic, ANCHOR_ORBIT, sampled(&v))
        }
        Err(e) if e.is_inapplicable() => inapplicable("orbit", ANCHOR_ORBIT, &e),
        Err(e) => return Err(e),
    };
    Ok(vec![rec])
}

pub(crate) fn structure(sd: &Semidirect) -> Certificate {
    let brackets = sd
        .lie()
        .nonzero_brackets()
        .into_iter()
        .map(|(i, j, v)| Bracket { i, j, value: rats(&v) })
        .collect();
    Certificate::Structure { dim: sd.lie().dim(), brackets, jacobi: true }
}

pub fn build_cmd(f: &FamilyFile) -> Result<Vec<Record>> {
    let b = algebra_of(f)?;
    match build_semidirect(&b) {
        Ok(sd) => Ok(vec![Record::new("structure_constants", Verdict::Pass, ANCHOR_BUILD, structure(&sd))]),
        Err(e @ (Error::JacobiFails(..) | Error::NotAntisymmetric(..))) => Ok(vec![Record::new(
            "structure_constants",
            Verdict::Fail,
            ANCHOR_BUILD,
            Certificate::Message { text: e.to_string() },
        )]),
        Err(e) if e.is_inapplicable() => Ok(vec![inapplicable("structure_constants", ANCHOR_BUILD, &e)]),
        Err(e) => Err(e),
    }
}

pub(crate) fn lsa_identities(r: &LsaReport) -> Vec<(String, bool)> {
    [
        ("a*b = -ab", r.ab),
        ("a*x = 0", r.ax),
        ("x*y = 0", r.xy),
        ("x*a = -ax", r.xa),
        ("a*b in B", r.b_closed),
        ("left symmetry", r.left_symmetric),
        ("u*v - v*u = [u,v]", r.commutator),
        ("principal = -I", r.principal_is_minus_identity),
    ]
    .into_iter()
    .map(|(n, v)| (n.to_string(), v))
    .collect()
}

/// Frobenius witness record for a functional on the whole Lie algebra.
pub(crate) fn functional_record(sd: &Semidirect, alpha: &[Rat]) -> Result<Record> {
    let omega = ce_coboundary(sd.lie(), &LinForm(alpha.to_vec()));
    let det = omega.determinant();
    let top = if sd.lie().dim() <= WEDGE_DIM_LIMIT { Some(omega.top_wedge()?) } else { None };
    let wedge_agrees = top.as_ref().is_none_or(|t| {
        let half = frobenius_masa::frobenius::factorial(sd.lie().dim() / 2);
        let pf = t / half;
        &pf * &pf == det
    });
    let verdict = Verdict::from_bool(!num_traits::Zero::is_zero(&det) && wedge_agrees);
    Ok(Record::new(
        "frobenius_functional",
        verdict,
        ANCHOR_FROBENIUS,
        Certificate::Witness { alpha: rats(alpha), determinant: JsonRat(det), top_wedge: top.map(JsonRat) },
    ))
}

pub(crate) fn lsa_record(sd: &Semidirect, alpha: &[Rat]) -> Result<Record> {
    let r = verify_lsa(sd, &LinForm(alpha.to_vec()))?;
    Ok(Record::new(
        "lsa",
        Verdict::from_bool(r.all_hold()),
        ANCHOR_LSA,
        Certificate::Lsa { alpha: rats(alpha), identities: lsa_identities(&r), principal: rats(&r.principal) },
    ))
}

pub fn frobenius_cmd(f: &FamilyFile, cfg: &DecisionConfig) -> Result<Vec<Record>> {
    let b = algebra_of(f)?;
    let sd = match build_semidirect(&b) {
        Ok(sd) => sd,
        Err(e) if e.is_inapplicable() => return Ok(vec![inapplicable("frobenius_functional", ANCHOR_FROBENIUS, &e)]),
        Err(e) => return Err(e),
    };
    let witness = match f.alpha() {
        Some(a) => Some(a),
        None => match open_orbit_exists(&b, cfg) {
            Ok(d) => d.witness().map(|w| w.0.clone()),
            Err(e) if e.is_inapplicable() => None,
            Err(e) => return Err(e),
        },
    };
    if let Some(a) = witness {
        let alpha = sd.extend_form(&a);
        return Ok(vec![functional_record(&sd, &alpha)?, lsa_record(&sd, &alpha)?]);
    }
    let no_lsa = |text: &str| Record::new("lsa", Verdict::Inapplicable, ANCHOR_LSA, Certificate::Message { text: text.into() });
    match frobenius_polynomial(sd.lie(), cfg) {
        PolyVerdict::Exact(p) if p.is_zero() => Ok(vec![
            Record::new("frobenius_functional", Verdict::Pass, ANCHOR_FROBENIUS, Certificate::ZeroPolynomial { polynomial: p.to_string() }),
            no_lsa("no Frobenius functional"),
        ]),
        PolyVerdict::Exact(p) => {
            let alpha = frobenius_masa::frobenius::nonzero_point(&p);
            Ok(vec![functional_record(&sd, &alpha)?, no_lsa("functional does not come from an open-orbit witness")])
        }
        PolyVerdict::Sampled(v) => match v.nonzero_at.clone() {
            Some(alpha) => Ok(vec![functional_record(&sd, &alpha)?, no_lsa("functional does not come from an open-orbit witness")]),
            None => Ok(vec![
                Record::new("frobenius_functional", Verdict::Probabilistic, ANCHOR_FROBENIUS, sampled(&v)),
                no_lsa("no Frobenius functional found"),
            ]),
        },
    }
}

pub fn classify_cmd(f: &FamilyFile) -> Result<Vec<Record>> {
    let b = algebra_of(f)?;
    if let Some(m) = find_cyclic_generator(&b) {
        let label = classify_gm(&m)?;
        let cert = Certificate::Label {
            profile: eig_profile(&m)?.to_string(),
            label: label.to_string(),
            matrix_form: label.matrix_form(),
            generator: JsonMat(m),
        };
        return Ok(vec![Record::new("classify", Verdict::Pass, ANCHOR_CLASSIFY, cert)]);
    }
    match invariant_bundle(&b) {
        Ok(ib) => Ok(vec![Record::new(
            "invariants",
            Verdict::Pass,
            ANCHOR_BUNDLE,
            Certificate::Bundle {
                lie_dim: ib.lie_dim,
                derived_dim: ib.derived_dim,
                center_dim: ib.center_dim,
                derivation_dim: ib.derivation_dim,
                freedom_degree: ib.freedom_degree,
                square_form: ib.square_form.map(|q| (q.rank, q.abs_signature)),
            },
        )]),
        Err(e) if e.is_inapplicable() => Ok(vec![inapplicable("invariants", ANCHOR_BUNDLE, &e)]),
        Err(e) => Err(e),
    }
}

pub fn derive_cmd(f: &FamilyFile) -> Result<Vec<Record>> {
    let b = algebra_of(f)?;
    let sd = match build_semidirect(&b) {
        Ok(sd) => sd,
        Err(e) if e.is_inapplicable() => return Ok(vec![inapplicable("derivations", ANCHOR_DERIVE, &e)]),
        Err(e) => return Err(e),
    };
    let direct = derivations_direct(sd.lie()).dimension();
    let via = derivations_via_normalizer(&b).ok();
    let verdict = match via {
        Some(v) => Verdict::from_bool(v == direct),
        None => Verdict::Inapplicable,
    };
    Ok(vec![Record::new("derivations", verdict, ANCHOR_DERIVE, Certificate::Derivations { direct, via_normalizer: via })])
}

/// The family file for a corpus entry, basis in the order the builder lists it.
pub fn corpus_file(entry: &CorpusEntry) -> FamilyFile {
    FamilyFile {
        n: entry.n(),
        generators: entry.generators.iter().cloned().map(JsonMat).collect(),
        basis: Some(entry.algebra.basis().iter().cloned().map(JsonMat).collect()),
        alpha: entry.expected.witness.as_deref().map(rats),
    }
}

pub fn corpus_cmd(name: &str, params: &[usize]) -> Result<FamilyFile> {
    Ok(corpus_file(&corpus::build(name, params)?))
}

fn entry_label(e: &CorpusEntry) -> String {
    if e.params.is_empty() {
        e.name.clone()
    } else {
        let p: Vec<String> = e.params.iter().map(|p| p.to_string()).collect();
        format!("{}({})", e.name, p.join(","))
    }
}

fn suite_entry(entry: &CorpusEntry, cfg: &DecisionConfig) -> Result<Vec<Record>> {
    let label = entry_label(entry);
    let mut out: Vec<Record> = validate(entry, cfg)?
        .into_iter()
        .map(|c| {
            Record::new(
                format!("{label}.{}", c.field),
                Verdict::from_bool(c.pass),
                ANCHOR_CORPUS,
                Certificate::Expectation { expected: c.expected, found: c.found },
            )
        })
        .collect();
    let b = &entry.algebra;
    let Some(w) = &entry.expected.witness else {
        return Ok(out);
    };
    let mut worst = 0;
    for k in 0..=b.dim() {
        for s in combinations(b.dim(), k) {
            let chosen: Vec<_> = s.iter().map(|&i| b.basis()[i].clone()).collect();
            worst = worst.max(closure(b.n(), &chosen)?.dim());
        }
    }
    out.push(Record::new(
        format!("{label}.gerstenhaber_bound"),
        Verdict::from_bool(worst <= b.n() && closure(b.n(), b.basis())?.same_span(b)),
        ANCHOR_BOUND,
        Certificate::Expectation { expected: format!("<= {}", b.n()), found: worst.to_string() },
    ));
    let sd = build_semidirect(b)?;
    let alpha = sd.extend_form(w);
    for mut r in [functional_record(&sd, &alpha)?, lsa_record(&sd, &alpha)?] {
        r.name = format!("{label}.{}", r.name);
        out.push(r);
    }
    Ok(out)
}

/// Self-check of the whole corpus. Entries run on worker threads; records
/// come back in corpus order.
pub fn suite_cmd(cfg: &DecisionConfig) -> Result<Vec<Record>> {
    let entries = standard_entries();
    let workers = thread::available_parallelism().map_or(1, |n| n.get()).min(entries.len());
    let chunk = entries.len().div_ceil(workers);
    let results: Vec<Result<Vec<Record>>> = thread::scope(|s| {
        let handles: Vec<_> = entries
            .chunks(chunk)
            .map(|part| {
                s.spawn(move || {
                    let mut recs = Vec::new();
                    for e in part {
                        recs.extend(suite_entry(e, cfg)?);
                    }
                    Ok(recs)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("suite worker panicked")).collect()
    });
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}
