//! Check records and their text rendering.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::json::{JsonMat, JsonRat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inapplicable,
    Probabilistic,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Verdict {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inapplicable => "inapplicable",
            Verdict::Probabilistic => "probabilistic",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bracket {
    pub i: usize,
    pub j: usize,
    pub value: Vec<JsonRat>,
}

/// Data a record's verdict can be rechecked from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    Flag {
        value: bool,
    },
    Closure {
        dim: usize,
        basis: Vec<JsonMat>,
    },
    /// Covector with nonzero determinant (orbital matrix, or `dα` on the Lie algebra).
    Witness {
        alpha: Vec<JsonRat>,
        determinant: JsonRat,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        top_wedge: Option<JsonRat>,
    },
    /// The symbolic determinant, expanded and found to be zero.
    ZeroPolynomial {
        polynomial: String,
    },
    Sampled {
        samples: usize,
        seed: u64,
        degree_bound: usize,
        error_bound: JsonRat,
    },
    Structure {
        dim: usize,
        brackets: Vec<Bracket>,
        jacobi: bool,
    },
    Lsa {
        alpha: Vec<JsonRat>,
        identities: Vec<(String, bool)>,
        principal: Vec<JsonRat>,
    },
    Label {
        generator: JsonMat,
        profile: String,
        label: String,
        matrix_form: String,
    },
    Bundle {
        lie_dim: usize,
        derived_dim: usize,
        center_dim: usize,
        derivation_dim: usize,
        freedom_degree: usize,
        /// Rank and absolute signature of the radical square form, when defined.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        square_form: Option<(usize, usize)>,
    },
    Derivations {
        direct: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        via_normalizer: Option<usize>,
    },
    Expectation {
        expected: String,
        found: String,
    },
    Message {
        text: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub name: String,
    pub verdict: Verdict,
    pub anchor: String,
    pub certificate: Certificate,
}

impl Record {
    pub fn new(name: impl Into<String>, verdict: Verdict, anchor: &str, certificate: Certificate) -> Record {
        Record { name: name.into(), verdict, anchor: anchor.into(), certificate }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub seed: u64,
    pub records: Vec<Record>,
}

impl Report {
    /// 0 all pass, 1 some check failed, 3 some precondition did not hold.
    pub fn exit_code(&self) -> i32 {
        if self.records.iter().any(|r| r.verdict == Verdict::Fail) {
            1
        } else if self.records.iter().any(|r| r.verdict == Verdict::Inapplicable) {
            3
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            let _ = writeln!(out, "{}: {}  {}  [{}]", r.name, r.verdict.as_str(), summary(r), r.anchor);
            if let Certificate::Closure { basis, .. } = &r.certificate {
                for (i, m) in basis.iter().enumerate() {
                    let _ = writeln!(out, "  b{} = {}", i + 1, matrix_text(m));
                }
            }
        }
        out
    }
}

fn vec_text(v: &[JsonRat]) -> String {
    let parts: Vec<String> = v.iter().map(|r| frobenius_masa::exact::format_rat(&r.0)).collect();
    format!("({})", parts.join(", "))
}

fn matrix_text(m: &JsonMat) -> String {
    let rows: Vec<String> = (0..m.0.rows())
        .map(|i| m.0.row(i).iter().map(frobenius_masa::exact::format_rat).collect::<Vec<_>>().join(" "))
        .collect();
    format!("[{}]", rows.join("; "))
}

fn summary(r: &Record) -> String {
    let rat = |x: &JsonRat| frobenius_masa::exact::format_rat(&x.0);
    match &r.certificate {
        Certificate::Flag { value } => value.to_string(),
        Certificate::Closure { dim, .. } => format!("dim {dim}"),
        Certificate::Witness { alpha, determinant, top_wedge } => {
            let mut s = format!("witness alpha = {}, det = {}", vec_text(alpha), rat(determinant));
            if let Some(w) = top_wedge {
                let _ = write!(s, ", top wedge = {}", rat(w));
            }
            s
        }
        Certificate::ZeroPolynomial { .. } if r.name == "orbit" => "no open orbit; certificate: det ≡ 0".into(),
        Certificate::ZeroPolynomial { .. } => "no Frobenius functional; certificate: det(dα) ≡ 0".into(),
        Certificate::Sampled { samples, seed, error_bound, .. } => {
            format!("{samples} samples vanished (seed {seed}); error ≤ {}", rat(error_bound))
        }
        Certificate::Structure { dim, brackets, jacobi } => {
            let parts: Vec<String> = brackets
                .iter()
                .map(|b| format!("[e{},e{}] = {}", b.i + 1, b.j + 1, combination(&b.value)))
                .collect();
            format!("dim {dim}, jacobi {}, {}", if *jacobi { "holds" } else { "fails" }, parts.join(", "))
        }
        Certificate::Lsa { identities, principal, .. } => {
            let failed: Vec<&str> = identities.iter().filter(|(_, ok)| !ok).map(|(n, _)| n.as_str()).collect();
            let state = if failed.is_empty() { "all identities hold".to_string() } else { format!("failed: {}", failed.join(", ")) };
            format!("{state}; principal element {}", vec_text(principal))
        }
        Certificate::Label { label, matrix_form, profile, .. } => format!("{label} ({matrix_form}); profile {profile}"),
        Certificate::Bundle { lie_dim, derived_dim, center_dim, derivation_dim, freedom_degree, square_form } => {
            let mut s = format!(
                "dim {lie_dim}, derived {derived_dim}, center {center_dim}, derivations {derivation_dim}, freedom {freedom_degree}"
            );
            if let Some((r, sig)) = square_form {
                let _ = write!(s, ", square form rank {r} |sig| {sig}");
            }
            s
        }
        Certificate::Derivations { direct, via_normalizer } => match via_normalizer {
            Some(v) => format!("direct {direct}, via normalizer {v}"),
            None => format!("direct {direct}"),
        },
        Certificate::Expectation { expected, found } => format!("expected {expected}, found {found}"),
        Certificate::Message { text } => text.clone(),
    }
}

fn combination(v: &[JsonRat]) -> String {
    let terms: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !num_traits::Zero::is_zero(&c.0))
        .map(|(k, c)| {
            let s = frobenius_masa::exact::format_rat(&c.0);
            match s.as_str() {
                "1" => format!("e{}", k + 1),
                "-1" => format!("-e{}", k + 1),
                _ => format!("{s}*e{}", k + 1),
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ").replace("+ -", "- ")
    }
}
