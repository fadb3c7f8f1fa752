use num_traits::Zero;

use super::CorpusEntry;
use crate::algebra::{closure, freedom_degree, is_masa, normalizer};
use crate::classify::{classify_gm, derivations_direct, derivations_via_normalizer, find_cyclic_generator, is_cartan};
use crate::decide::DecisionConfig;
use crate::error::Result;
use crate::frobenius::{build_semidirect, frobenius_polynomial, is_frobenius_functional, open_orbit_exists, orbital_matrix, LinForm};

/// One recomputed field of an expectation record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectationCheck {
    pub field: &'static str,
    pub expected: String,
    pub found: String,
    pub pass: bool,
}

fn check<T: PartialEq + std::fmt::Debug>(field: &'static str, expected: &T, found: T) -> ExpectationCheck {
    ExpectationCheck { field, expected: format!("{expected:?}"), found: format!("{found:?}"), pass: *expected == found }
}

/// Recomputes every stated field of `entry.expected` from the matrices alone.
pub fn validate(entry: &CorpusEntry, cfg: &DecisionConfig) -> Result<Vec<ExpectationCheck>> {
    let ex = &entry.expected;
    let b = &entry.algebra;
    let n = b.n();
    let mut out = Vec::new();
    if let Some(d) = ex.closure_dim {
        let c = closure(n, &entry.generators)?;
        out.push(check("closure_dim", &(d, true), (c.dim(), c.same_span(b))));
    }
    if let Some(o) = ex.open_orbit {
        out.push(check("open_orbit", &o, open_orbit_exists(b, cfg)?.witness().is_some()));
    }
    if let Some(w) = &ex.witness {
        out.push(check("witness", &true, !orbital_matrix(b, w).det()?.is_zero()));
    }
    let sd = if ex.frobenius_functional.is_some() || ex.frobenius.is_some() || ex.derivation_dim.is_some() {
        Some(build_semidirect(b)?)
    } else {
        None
    };
    if let (Some(k), Some(sd)) = (ex.frobenius_functional, &sd) {
        let alpha = LinForm::dual(sd.lie().dim(), k);
        out.push(check("frobenius_functional", &true, is_frobenius_functional(sd.lie(), &alpha)));
    }
    if let (Some(f), Some(sd)) = (ex.frobenius, &sd) {
        out.push(check("frobenius", &f, !frobenius_polynomial(sd.lie(), cfg).vanishes()));
    }
    if let Some(m) = ex.masa {
        out.push(check("masa", &m, is_masa(b)?));
    }
    if let Some(q) = ex.freedom_degree {
        out.push(check("freedom_degree", &q, freedom_degree(&entry.generators)?));
    }
    if let Some(label) = &ex.label {
        let found = match &entry.matrix {
            Some(m) => Some(classify_gm(m)?),
            None => find_cyclic_generator(b).map(|m| classify_gm(&m)).transpose()?,
        };
        out.push(check("label", &Some(label.clone()), found));
    }
    if let (Some(d), Some(sd)) = (ex.derivation_dim, &sd) {
        let direct = derivations_direct(sd.lie()).dimension();
        out.push(check("derivation_dim", &(d, d), (direct, derivations_via_normalizer(b)?)));
    }
    if let Some(d) = ex.normalizer_dim {
        out.push(check("normalizer_dim", &d, normalizer(b).dim()));
    }
    if let Some(c) = ex.cartan {
        out.push(check("cartan", &c, is_cartan(b)?));
    }
    Ok(out)
}
