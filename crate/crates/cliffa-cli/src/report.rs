//! Machine-readable report documents. Rationals are serialized as
//! decimal-free strings ("3/2"); square classes as {sign, radical} with zero
//! as {zero}.

use cliffa_core::clifford::{CliffordReport, QuadraticAlgebraClass};
use cliffa_core::exactmath::Rational;
use cliffa_core::tensor::QuotientAlgebra;
use cliffa_core::{QMatrix, SquareClass};
use serde::{Deserialize, Serialize};

use crate::problem::ProblemSpec;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum SquareClassRepr {
    Zero { zero: bool },
    NonZero { sign: i8, radical: String },
}

impl SquareClassRepr {
    pub fn from_class(c: &SquareClass) -> Self {
        match c {
            SquareClass::Zero => SquareClassRepr::Zero { zero: true },
            SquareClass::NonZero { negative, radical } => SquareClassRepr::NonZero {
                sign: if *negative { -1 } else { 1 },
                radical: radical.to_string(),
            },
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ClassRepr {
    DualNumbers,
    Split,
    Field { class: SquareClassRepr },
}

impl ClassRepr {
    pub fn from_class(c: &QuadraticAlgebraClass) -> Self {
        match c {
            QuadraticAlgebraClass::DualNumbers => ClassRepr::DualNumbers,
            QuadraticAlgebraClass::Split => ClassRepr::Split,
            QuadraticAlgebraClass::Field(sc) => ClassRepr::Field {
                class: SquareClassRepr::from_class(sc),
            },
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct AlgebraRepr {
    pub dim: usize,
    pub basis: Vec<String>,
    /// structure_constants[i][j] is the coordinate vector of basis[i]·basis[j].
    pub structure_constants: Vec<Vec<Vec<String>>>,
}

impl AlgebraRepr {
    pub fn from_algebra(q: &QuotientAlgebra, letter_names: &[String]) -> Self {
        AlgebraRepr {
            dim: q.dim(),
            basis: q.basis().iter().map(|w| w.label(letter_names)).collect(),
            structure_constants: (0..q.dim())
                .map(|i| {
                    (0..q.dim())
                        .map(|j| {
                            q.structure_constant(i, j)
                                .iter()
                                .map(Rational::to_string)
                                .collect()
                        })
                        .collect()
                })
                .collect(),
        }
    }
}

pub fn matrix_repr(m: &QMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.at(i, j).to_string()).collect())
        .collect()
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct EvenPartRepr {
    pub dim: usize,
    pub basis: Vec<String>,
    pub structure_constants: Vec<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<ClassRepr>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generator_minpoly: Option<String>,
}

/// One report per problem. `asymmetry` is a matrix for form inputs and a
/// coordinate vector for quaternion inputs.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ReportDoc {
    pub input: ProblemSpec,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub asymmetry_matrix: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub asymmetry_coords: Option<Vec<String>>,
    pub disc: SquareClassRepr,
    pub clifford: AlgebraRepr,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<ClassRepr>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicted: Option<ClassRepr>,
    #[serde(rename = "match", skip_serializing_if = "Option::is_none")]
    pub matches: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub even_part: Option<EvenPartRepr>,
}

impl ReportDoc {
    pub fn from_antiaut_report(
        input: ProblemSpec,
        seed: u64,
        report: &CliffordReport,
        letter_names: &[String],
        asym_matrix: Option<&QMatrix>,
    ) -> Self {
        ReportDoc {
            input,
            seed,
            asymmetry_matrix: asym_matrix.map(matrix_repr),
            asymmetry_coords: Some(report.asymmetry.iter().map(Rational::to_string).collect()),
            disc: SquareClassRepr::from_class(&report.disc),
            clifford: AlgebraRepr::from_algebra(&report.algebra, letter_names),
            classification: report.classification.as_ref().map(ClassRepr::from_class),
            predicted: Some(ClassRepr::from_class(&report.predicted)),
            matches: Some(report.matches),
            even_part: None,
        }
    }
}
