//! Rechecks a report's certificates against the input it was produced from.

use num_traits::Zero;

use frobenius_masa::algebra::{check_commuting, closure, is_masa, MatAlgebra};
use frobenius_masa::classify::{classify_gm, derivations_direct, derivations_via_normalizer, invariant_bundle};
use frobenius_masa::decide::DecisionConfig;
use frobenius_masa::exact::Rat;
use frobenius_masa::frobenius::{
    build_semidirect, ce_coboundary, frobenius_polynomial, orbital_matrix, orbital_polynomial, verify_lsa, LieAlg,
    LinForm, PolyVerdict,
};
use frobenius_masa::matrix::is_nonderogatory;
use frobenius_masa::Result;

use crate::commands::{algebra_of, lsa_identities, rats};
use crate::json::{FamilyFile, JsonRat};
use crate::report::{Certificate, Record, Report, Verdict};

fn plain(v: &[JsonRat]) -> Vec<Rat> {
    v.iter().map(|r| r.0.clone()).collect()
}

/// Verdicts recomputed from each record's certificate. Records without a
/// self-contained certificate are recomputed by rerunning their command.
pub fn reverify(report: &Report, family: Option<&FamilyFile>, cfg: &DecisionConfig) -> Result<Vec<Verdict>> {
    let mut rerun: Option<Vec<Record>> = None;
    let mut out = Vec::new();
    for (idx, rec) in report.records.iter().enumerate() {
        let v = match (family, &rec.certificate) {
            (Some(f), cert) => match recheck(rec, cert, f, cfg)? {
                Some(v) => v,
                None => fallback(report, idx, family, cfg, &mut rerun)?,
            },
            (None, _) => fallback(report, idx, family, cfg, &mut rerun)?,
        };
        out.push(v);
    }
    Ok(out)
}

fn fallback(
    report: &Report,
    idx: usize,
    family: Option<&FamilyFile>,
    cfg: &DecisionConfig,
    cache: &mut Option<Vec<Record>>,
) -> Result<Verdict> {
    if cache.is_none() {
        *cache = Some(crate::records_for(&report.command, family, cfg)?);
    }
    let recs = cache.as_ref().unwrap();
    Ok(recs.get(idx).filter(|r| r.name == report.records[idx].name).map_or(Verdict::Fail, |r| r.verdict))
}

fn recheck(rec: &Record, cert: &Certificate, f: &FamilyFile, cfg: &DecisionConfig) -> Result<Option<Verdict>> {
    let v = match (rec.name.as_str(), cert) {
        ("closure", Certificate::Closure { dim, basis }) => {
            let mats: Vec<_> = basis.iter().map(|m| m.0.clone()).collect();
            let b = MatAlgebra::new(f.n, mats)?;
            let mut ok = b.dim() == *dim && b.is_closed_under_products() && b.same_span(&closure(f.n, &f.generators())?);
            if let Some(given) = f.basis() {
                ok &= MatAlgebra::new(f.n, given)?.same_span(&b);
            }
            Verdict::from_bool(ok)
        }
        ("commuting", Certificate::Flag { value }) => {
            let found = check_commuting(f.n, &f.generators()).is_ok();
            consistent(*value, found)
        }
        ("unital", Certificate::Flag { value }) => consistent(*value, algebra_of(f)?.is_unital()),
        ("masa", Certificate::Flag { value }) => consistent(*value, is_masa(&algebra_of(f)?)?),
        ("orbit", Certificate::Witness { alpha, determinant, .. }) => {
            let d = orbital_matrix(&algebra_of(f)?, &plain(alpha)).det()?;
            Verdict::from_bool(d == determinant.0 && !d.is_zero())
        }
        ("orbit", Certificate::ZeroPolynomial { polynomial }) => {
            let p = orbital_polynomial(&algebra_of(f)?, cfg.budget_dim)?;
            Verdict::from_bool(p.is_zero() && p.to_string() == *polynomial)
        }
        ("structure_constants", Certificate::Structure { dim, brackets, .. }) => {
            let table: Vec<(usize, usize, Vec<Rat>)> = brackets.iter().map(|b| (b.i, b.j, plain(&b.value))).collect();
            let labels = (1..=*dim).map(|i| format!("e{i}")).collect();
            let rebuilt = LieAlg::from_brackets(labels, &table);
            let sd = build_semidirect(&algebra_of(f)?)?;
            Verdict::from_bool(rebuilt.is_ok_and(|g| g.nonzero_brackets() == sd.lie().nonzero_brackets()))
        }
        ("frobenius_functional", Certificate::Witness { alpha, determinant, top_wedge }) => {
            let sd = build_semidirect(&algebra_of(f)?)?;
            let omega = ce_coboundary(sd.lie(), &LinForm(plain(alpha)));
            let mut ok = omega.determinant() == determinant.0 && !determinant.0.is_zero();
            if let Some(t) = top_wedge {
                ok &= omega.top_wedge()? == t.0;
            }
            Verdict::from_bool(ok)
        }
        ("frobenius_functional", Certificate::ZeroPolynomial { .. }) => {
            let sd = build_semidirect(&algebra_of(f)?)?;
            let exact_zero = matches!(frobenius_polynomial(sd.lie(), cfg), PolyVerdict::Exact(p) if p.is_zero());
            Verdict::from_bool(exact_zero)
        }
        ("lsa", Certificate::Lsa { alpha, identities, principal }) => {
            let sd = build_semidirect(&algebra_of(f)?)?;
            let r = verify_lsa(&sd, &LinForm(plain(alpha)))?;
            if lsa_identities(&r) != *identities || rats(&r.principal) != *principal {
                Verdict::Fail
            } else {
                Verdict::from_bool(r.all_hold())
            }
        }
        ("classify", Certificate::Label { generator, label, .. }) => {
            let b = algebra_of(f)?;
            let m = &generator.0;
            let ok = m.rows() == f.n
                && is_nonderogatory(m)
                && closure(f.n, std::slice::from_ref(m))?.same_span(&b)
                && classify_gm(m)?.to_string() == *label;
            Verdict::from_bool(ok)
        }
        ("invariants", Certificate::Bundle { lie_dim, derived_dim, center_dim, derivation_dim, freedom_degree, square_form }) => {
            let ib = invariant_bundle(&algebra_of(f)?)?;
            let q = ib.square_form.map(|q| (q.rank, q.abs_signature));
            Verdict::from_bool(
                (ib.lie_dim, ib.derived_dim, ib.center_dim, ib.derivation_dim, ib.freedom_degree, q)
                    == (*lie_dim, *derived_dim, *center_dim, *derivation_dim, *freedom_degree, *square_form),
            )
        }
        ("derivations", Certificate::Derivations { direct, via_normalizer }) => {
            let b = algebra_of(f)?;
            let d = derivations_direct(build_semidirect(&b)?.lie()).dimension();
            let via = derivations_via_normalizer(&b).ok();
            if d != *direct || via != *via_normalizer {
                Verdict::Fail
            } else {
                via.map_or(Verdict::Inapplicable, |v| Verdict::from_bool(v == d))
            }
        }
        _ => return Ok(None),
    };
    Ok(Some(v))
}

/// A flag record is a pass exactly when the flag holds; a mismatch with the
/// recomputed flag is always a fail.
fn consistent(claimed: bool, found: bool) -> Verdict {
    if claimed != found {
        Verdict::Fail
    } else {
        Verdict::from_bool(found)
    }
}
