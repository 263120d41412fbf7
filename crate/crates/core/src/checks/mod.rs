//! Exact identity checks over basis tuples.
//!
//! Every identity checked here is multilinear once the degrees of its slots
//! are fixed, so testing it on basis vectors decides it for all homogeneous
//! elements. Tuples are scanned in lexicographic order and the first failure
//! becomes the [`Witness`].

use std::fmt;
use std::str::FromStr;

use crate::graded::ColorHomAlgebra;
use crate::linalg::Vector;
use crate::{Error, Result};

mod center;
mod identities;
mod operators;

pub use center::{check_f_conditions, in_alpha_center};
pub use identities::{
    check_epsilon_commutative, check_hom_associative, check_hom_lie, check_hom_novikov, check_involutive,
    check_lemma_nl, check_left_symmetric, check_lie_admissible, check_multiplicative, check_regular,
};
pub use operators::{is_averaging, is_centroid, is_derivation, is_morphism, is_rota_baxter, is_weak_morphism};

/// A failing instance: the identity, the basis indices, and the two sides
/// (which differ). Scalar-valued identities report length-one vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub identity: &'static str,
    pub indices: Vec<usize>,
    pub left: Vector,
    pub right: Vector,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {:?}: {} != {}", self.identity, self.indices, self.left, self.right)
    }
}

/// Pass, or fail with the lexicographically first witness.
#[derive(Clone, Debug, PartialEq)]
#[must_use]
pub struct Verdict {
    witness: Option<Witness>,
}

impl Verdict {
    pub fn pass() -> Self {
        Verdict { witness: None }
    }

    pub fn fail(witness: Witness) -> Self {
        debug_assert_ne!(witness.left, witness.right);
        Verdict { witness: Some(witness) }
    }

    pub fn passes(&self) -> bool {
        self.witness.is_none()
    }

    pub fn witness(&self) -> Option<&Witness> {
        self.witness.as_ref()
    }

    pub fn into_witness(self) -> Option<Witness> {
        self.witness
    }

    /// Runs `next` only if `self` passes.
    pub fn and_then(self, next: impl FnOnce() -> Verdict) -> Verdict {
        if self.passes() {
            next()
        } else {
            self
        }
    }

    /// Converts a failure into a precondition error for `construction`.
    pub fn require(self, construction: &'static str, hypothesis: &'static str) -> Result<()> {
        match self.witness {
            None => Ok(()),
            Some(w) => Err(Error::Precondition {
                construction,
                hypothesis,
                witness: Some(Box::new(w)),
            }),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "pass"),
            Some(w) => write!(f, "fail: {w}"),
        }
    }
}

/// Which side(s) of an averaging or centroid condition to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
    Both,
}

impl Side {
    fn left(self) -> bool {
        matches!(self, Side::Left | Side::Both)
    }

    fn right(self) -> bool {
        matches!(self, Side::Right | Side::Both)
    }
}

impl FromStr for Side {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            "both" => Ok(Side::Both),
            other => Err(Error::Parameter(format!("side must be left, right or both, got {other:?}"))),
        }
    }
}

/// Compares two sides; `Some` witness when they differ.
pub(crate) fn compare(identity: &'static str, indices: &[usize], left: Vector, right: Vector) -> Option<Witness> {
    (left != right).then(|| Witness {
        identity,
        indices: indices.to_vec(),
        left,
        right,
    })
}

pub(crate) fn scan_singles(n: usize, mut f: impl FnMut(usize) -> Option<Witness>) -> Verdict {
    for i in 0..n {
        if let Some(w) = f(i) {
            return Verdict::fail(w);
        }
    }
    Verdict::pass()
}

pub(crate) fn scan_pairs(n: usize, mut f: impl FnMut(usize, usize) -> Option<Witness>) -> Verdict {
    for i in 0..n {
        for j in 0..n {
            if let Some(w) = f(i, j) {
                return Verdict::fail(w);
            }
        }
    }
    Verdict::pass()
}

pub(crate) fn scan_triples(n: usize, mut f: impl FnMut(usize, usize, usize) -> Option<Witness>) -> Verdict {
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if let Some(w) = f(i, j, k) {
                    return Verdict::fail(w);
                }
            }
        }
    }
    Verdict::pass()
}

/// Cached basis products and `α` images for one algebra.
pub(crate) struct Tables<'a> {
    pub a: &'a ColorHomAlgebra,
    prods: Vec<Vector>,
    alphas: Vec<Vector>,
}

impl<'a> Tables<'a> {
    pub fn new(a: &'a ColorHomAlgebra) -> Self {
        let n = a.dim();
        let prods = (0..n * n).map(|ij| a.basis_product(ij / n, ij % n)).collect();
        let alphas = (0..n).map(|i| a.alpha().image(i)).collect();
        Tables { a, prods, alphas }
    }

    pub fn n(&self) -> usize {
        self.a.dim()
    }

    /// `e_i · e_j`
    pub fn p(&self, i: usize, j: usize) -> &Vector {
        &self.prods[i * self.n() + j]
    }

    /// `α(e_i)`
    pub fn al(&self, i: usize) -> &Vector {
        &self.alphas[i]
    }

    pub fn mul(&self, x: &Vector, y: &Vector) -> Vector {
        self.a.mul(x, y)
    }

    /// `[e_i, e_j] = e_i·e_j − ε(i, j) e_j·e_i`
    pub fn commutator(&self, i: usize, j: usize) -> Vector {
        self.p(i, j).sub(&self.p(j, i).scale(self.a.sign(i, j)))
    }
}

/// Checks `α ∘ m = m ∘ α` column by column.
pub(crate) fn check_commutes_with_alpha(a: &ColorHomAlgebra, m: &crate::GradedLinearMap) -> Verdict {
    let alpha = a.alpha().matrix();
    let mm = m.matrix();
    scan_singles(a.dim(), |i| {
        let left = alpha.apply(&mm.column(i));
        let right = mm.apply(&alpha.column(i));
        compare("commutes with alpha", &[i], left, right)
    })
}

/// Dimension and evenness checks for an endomorphism handed to a predicate.
pub(crate) fn require_even_endomorphism(a: &ColorHomAlgebra, m: &crate::GradedLinearMap) -> Result<()> {
    if m.source() != a.basis() || m.target() != a.basis() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: m.source().dim(),
        });
    }
    if m.field() != a.field() {
        return Err(Error::FieldMismatch);
    }
    if !m.is_even() {
        return Err(Error::NotEven);
    }
    Ok(())
}
