use thiserror::Error;

use crate::checks::Witness;
use crate::grading::BicharacterViolation;

/// Structural failures: malformed input, mismatched shapes, unmet hypotheses.
///
/// A failed identity on well-formed input is not an error; it is reported as a
/// failing [`Verdict`](crate::checks::Verdict).
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("characteristic {0} is not supported (must be 0 or an odd prime below 2^31)")]
    UnsupportedCharacteristic(u64),
    #[error("cannot parse scalar {0:?}")]
    ScalarParse(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("scalar belongs to a different field")]
    FieldMismatch,
    #[error("grading groups differ")]
    GroupMismatch,
    #[error("bicharacters differ")]
    BicharacterMismatch,
    #[error("torsion order {0} must be at least 2")]
    BadTorsionOrder(u64),
    #[error("group element has {found} coordinates, expected {expected}")]
    ElementLength { expected: usize, found: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("bicharacter axiom violated: {0}")]
    Bicharacter(BicharacterViolation),
    #[error("product is not even: e_{i}·e_{j} has a component on e_{k} of the wrong degree")]
    Evenness { i: usize, j: usize, k: usize },
    #[error("map is not homogeneous of the declared degree: entry (row {row}, column {col})")]
    Homogeneity { row: usize, col: usize },
    #[error("map must be even")]
    NotEven,
    #[error("map is not invertible (not regular)")]
    NotRegular,
    #[error("vector is not homogeneous of the required degree")]
    NotHomogeneous,
    #[error("bilinear form is not even: entry ({i}, {j}) pairs degrees that do not sum to zero")]
    FormEvenness { i: usize, j: usize },
    #[error("{construction}: hypothesis `{hypothesis}` fails{}", witness_suffix(.witness))]
    Precondition {
        construction: &'static str,
        hypothesis: &'static str,
        witness: Option<Box<Witness>>,
    },
    #[error("unknown predicate {0:?}")]
    UnknownPredicate(String),
    #[error("unknown recipe {0:?}")]
    UnknownRecipe(String),
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("instance {instance} does not satisfy its declared property `{claim}`{}", witness_suffix(.witness))]
    Claim {
        instance: String,
        claim: String,
        witness: Option<Box<Witness>>,
    },
}

fn witness_suffix(w: &Option<Box<Witness>>) -> String {
    match w {
        Some(w) => format!(" ({w})"),
        None => String::new(),
    }
}
