//! Input documents: one problem per object, batch mode reads a list.
//! All numbers are exact rationals written as "p/q" or plain integers.

use std::str::FromStr;

use cliffa_core::exactmath::Rational;
use cliffa_core::forms::BilinearForm;
use cliffa_core::tensor::EngineConfig;
use cliffa_core::QMatrix;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ProblemSpec {
    /// Clifford algebra C(V,b) of a non-degenerate bilinear form, with its
    /// even part.
    Bilinear {
        matrix: Vec<Vec<String>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        seed: Option<u64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        degree_cap: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        slack: Option<usize>,
    },
    /// C(A,σ) for σ = Int(u)∘ρ on the quaternion algebra (α,β).
    Quaternion {
        alpha: String,
        beta: String,
        u: [String; 4],
        #[serde(default, skip_serializing_if = "Option::is_none")]
        seed: Option<u64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        degree_cap: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        slack: Option<usize>,
    },
    /// C(A,σ_b) for the adjoint antiautomorphism of a plane form on M₂(ℚ).
    MatrixAdjoint {
        matrix: Vec<Vec<String>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        seed: Option<u64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        degree_cap: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        slack: Option<usize>,
    },
}

#[derive(Debug)]
pub struct ProblemError(pub String);

impl std::fmt::Display for ProblemError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for ProblemError {}

pub fn parse_rational(s: &str) -> Result<Rational, ProblemError> {
    Rational::from_str(s.trim()).map_err(|e| ProblemError(format!("invalid rational {s:?}: {e}")))
}

pub fn parse_matrix(rows: &[Vec<String>]) -> Result<QMatrix, ProblemError> {
    let r = rows.len();
    if r == 0 {
        return Err(ProblemError("matrix must be non-empty".into()));
    }
    let c = rows[0].len();
    for (i, row) in rows.iter().enumerate() {
        if row.len() != c {
            return Err(ProblemError(format!(
                "matrix row {i} has {} entries, expected {c}",
                row.len()
            )));
        }
    }
    let mut parsed = Vec::with_capacity(r);
    for (i, row) in rows.iter().enumerate() {
        let mut out = Vec::with_capacity(c);
        for (j, cell) in row.iter().enumerate() {
            out.push(
                parse_rational(cell)
                    .map_err(|e| ProblemError(format!("matrix entry ({i},{j}): {e}")))?,
            );
        }
        parsed.push(out);
    }
    QMatrix::from_rows(parsed).map_err(|e| ProblemError(format!("bad matrix shape: {e}")))
}

pub fn parse_form(rows: &[Vec<String>]) -> Result<BilinearForm, ProblemError> {
    BilinearForm::new(parse_matrix(rows)?)
        .map_err(|e| ProblemError(format!("invalid bilinear form: {e}")))
}

impl ProblemSpec {
    pub fn seed(&self) -> Option<u64> {
        match self {
            ProblemSpec::Bilinear { seed, .. }
            | ProblemSpec::Quaternion { seed, .. }
            | ProblemSpec::MatrixAdjoint { seed, .. } => *seed,
        }
    }

    pub fn overrides(&self) -> (Option<usize>, Option<usize>) {
        match self {
            ProblemSpec::Bilinear {
                degree_cap, slack, ..
            }
            | ProblemSpec::Quaternion {
                degree_cap, slack, ..
            }
            | ProblemSpec::MatrixAdjoint {
                degree_cap, slack, ..
            } => (*degree_cap, *slack),
        }
    }

    /// Engine configuration for an alphabet, with document overrides and
    /// then command-line overrides applied in that order.
    pub fn engine_config(
        &self,
        alphabet: usize,
        cli_degree_cap: Option<usize>,
        cli_slack: Option<usize>,
    ) -> EngineConfig {
        let mut cfg = EngineConfig::for_alphabet(alphabet);
        let (doc_degree, doc_slack) = self.overrides();
        if let Some(d) = doc_degree {
            cfg.degree_cap = d;
        }
        if let Some(s) = doc_slack {
            cfg.slack_cap = s;
        }
        if let Some(d) = cli_degree_cap {
            cfg.degree_cap = d;
        }
        if let Some(s) = cli_slack {
            cfg.slack_cap = s;
        }
        cfg
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use cliffa_core::exactmath::q;

    #[test]
    fn rationals_parse_and_reject() {
        assert_eq!(parse_rational("3/2").unwrap(), q(3, 2));
        assert_eq!(parse_rational("-7").unwrap(), q(-7, 1));
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn ragged_matrix_is_diagnosed() {
        let rows = vec![
            vec!["1".to_string()],
            vec!["1".to_string(), "2".to_string()],
        ];
        let err = parse_matrix(&rows).unwrap_err();
        assert!(err.0.contains("row 1"));
    }

    #[test]
    fn spec_json_round_trip() {
        let text =
            r#"{"kind":"quaternion","alpha":"2","beta":"3","u":["1","1","0","0"],"slack":5}"#;
        let spec: ProblemSpec = serde_json::from_str(text).unwrap();
        assert_eq!(spec.overrides(), (None, Some(5)));
        let back = serde_json::to_string(&spec).unwrap();
        let again: ProblemSpec = serde_json::from_str(&back).unwrap();
        assert_eq!(spec, again);
    }
}
