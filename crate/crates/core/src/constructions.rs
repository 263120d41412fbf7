//! Algebras built from algebras: Yau twists, commutators, products from
//! derivations and averaging operators, direct and tensor sums, untwisting.
//!
//! Each construction is a total formula. In [`Mode::Strict`] the hypotheses
//! under which the result is guaranteed to be Hom-Novikov (or Hom-Lie) are
//! checked first and a failure is returned as [`Error::Precondition`];
//! [`Mode::Unchecked`] skips them, which is how the converse directions are
//! explored. Structural requirements (evenness, shapes, invertibility where the
//! formula needs an inverse) are enforced in both modes.

use crate::checks::{
    self, check_epsilon_commutative, check_hom_associative, check_hom_lie, check_hom_novikov, check_involutive,
    check_multiplicative, check_regular, is_averaging, is_centroid, is_derivation, is_weak_morphism, Side, Verdict,
};
use crate::graded::{ColorHomAlgebra, GradedLinearMap, StructureTensor};
use crate::linalg::{Matrix, Vector};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    #[default]
    Strict,
    Unchecked,
}

impl Mode {
    fn require(self, construction: &'static str, hypothesis: &'static str, v: impl FnOnce() -> Verdict) -> Result<()> {
        match self {
            Mode::Strict => v().require(construction, hypothesis),
            Mode::Unchecked => Ok(()),
        }
    }

    fn require_result(
        self,
        construction: &'static str,
        hypothesis: &'static str,
        v: impl FnOnce() -> Result<Verdict>,
    ) -> Result<()> {
        match self {
            Mode::Strict => v()?.require(construction, hypothesis),
            Mode::Unchecked => Ok(()),
        }
    }
}

fn precondition(construction: &'static str, hypothesis: &'static str) -> Error {
    Error::Precondition {
        construction,
        hypothesis,
        witness: None,
    }
}

/// Tensor whose `(i, j)` product is `f(i, j)`.
fn tensor_from(a: &ColorHomAlgebra, mut f: impl FnMut(usize, usize) -> Vector) -> StructureTensor {
    let n = a.dim();
    let mut t = StructureTensor::zeros(a.field(), n);
    for i in 0..n {
        for j in 0..n {
            t.set_product(i, j, &f(i, j));
        }
    }
    t
}

/// The product `m ∘ ·`.
fn post_compose(a: &ColorHomAlgebra, m: &Matrix) -> StructureTensor {
    tensor_from(a, |i, j| m.apply(&a.basis_product(i, j)))
}

fn require_endomorphism(a: &ColorHomAlgebra, m: &GradedLinearMap) -> Result<()> {
    if m.source() != a.basis() || m.target() != a.basis() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: m.source().dim(),
        });
    }
    if m.field() != a.field() {
        return Err(Error::FieldMismatch);
    }
    Ok(())
}

fn require_even(construction: &'static str, m: &GradedLinearMap) -> Result<()> {
    if m.is_even() {
        Ok(())
    } else {
        Err(precondition(construction, "map is even"))
    }
}

/// `A_β = (A, β∘·, ε, β∘α)` for a weak morphism `β` of a Hom-Novikov algebra.
pub fn yau_twist(a: &ColorHomAlgebra, beta: &GradedLinearMap, mode: Mode) -> Result<ColorHomAlgebra> {
    const NAME: &str = "yau_twist";
    require_endomorphism(a, beta)?;
    require_even(NAME, beta)?;
    mode.require_result(NAME, "weak morphism", || is_weak_morphism(a, a, beta))?;
    mode.require(NAME, "hom-novikov", || check_hom_novikov(a))?;
    a.with_parts(post_compose(a, beta.matrix()), beta.compose(a.alpha())?)
}

/// `Aⁿ = (A, αⁿ∘·, ε, αⁿ⁺¹)` for a multiplicative Hom-Novikov algebra.
pub fn power_twist(a: &ColorHomAlgebra, n: u32, mode: Mode) -> Result<ColorHomAlgebra> {
    const NAME: &str = "power_twist";
    mode.require(NAME, "multiplicative", || check_multiplicative(a))?;
    mode.require(NAME, "hom-novikov", || check_hom_novikov(a))?;
    let an = a.alpha().pow(n);
    a.with_parts(post_compose(a, an.matrix()), a.alpha().pow(n + 1))
}

/// `(A, β∘·, ε, α)` for `β` in the centroid of a Hom-Novikov algebra; `α` is kept.
pub fn centroid_twist(a: &ColorHomAlgebra, beta: &GradedLinearMap, mode: Mode) -> Result<ColorHomAlgebra> {
    const NAME: &str = "centroid_twist";
    require_endomorphism(a, beta)?;
    require_even(NAME, beta)?;
    mode.require_result(NAME, "centroid", || is_centroid(a, beta, Side::Both))?;
    mode.require(NAME, "hom-novikov", || check_hom_novikov(a))?;
    a.with_structure(post_compose(a, beta.matrix()))
}

/// `x ∗ y = ξ·(x·y)` with twisting map `α²`, for `ξ` of degree zero in a
/// commutative Hom-associative algebra. `ξ` may be any degree-zero vector.
pub fn xi_square_twist(a: &ColorHomAlgebra, xi: &Vector, mode: Mode) -> Result<ColorHomAlgebra> {
    const NAME: &str = "xi_square_twist";
    if xi.len() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: xi.len(),
        });
    }
    match a.basis().homogeneous_degree(xi) {
        Ok(None) => {}
        Ok(Some(d)) if d.is_zero() => {}
        _ => return Err(Error::NotHomogeneous),
    }
    mode.require(NAME, "epsilon-commutative", || check_epsilon_commutative(a))?;
    mode.require(NAME, "hom-associative", || check_hom_associative(a))?;
    let t = tensor_from(a, |i, j| a.mul(xi, &a.basis_product(i, j)));
    a.with_parts(t, a.alpha().pow(2))
}

/// The ε-commutator algebra `[x, y] = x·y − ε(x, y) y·x` with the same `α`.
pub fn commutator_algebra(a: &ColorHomAlgebra) -> ColorHomAlgebra {
    let t = tensor_from(a, |i, j| {
        a.basis_product(i, j).sub(&a.basis_product(j, i).scale(a.sign(i, j)))
    });
    a.with_structure(t).expect("commutator of an even product is even")
}

/// `x ∗ y = x·∂(y)` for an averaging operator `∂` on a commutative
/// Hom-Novikov algebra; same `α`.
pub fn averaging_product(a: &ColorHomAlgebra, d: &GradedLinearMap, mode: Mode) -> Result<ColorHomAlgebra> {
    const NAME: &str = "averaging_product";
    require_endomorphism(a, d)?;
    require_even(NAME, d)?;
    mode.require(NAME, "epsilon-commutative", || check_epsilon_commutative(a))?;
    mode.require(NAME, "hom-novikov", || check_hom_novikov(a))?;
    mode.require_result(NAME, "averaging operator", || is_averaging(a, d, Side::Both))?;
    a.with_structure(right_operator_product(a, d))
}

fn right_operator_product(a: &ColorHomAlgebra, d: &GradedLinearMap) -> StructureTensor {
    let images: Vec<_> = (0..a.dim()).map(|j| d.image(j)).collect();
    tensor_from(a, |i, j| a.mul(&a.unit(i), &images[j]))
}

/// `x ∗ y = x·∂(y)` for an even derivation `∂` commuting with `α` on a
/// commutative Hom-associative algebra; same `α`.
pub fn derivation_product(a: &ColorHomAlgebra, d: &GradedLinearMap, mode: Mode) -> Result<ColorHomAlgebra> {
    const NAME: &str = "derivation_product";
    require_endomorphism(a, d)?;
    require_even(NAME, d)?;
    mode.require(NAME, "epsilon-commutative", || check_epsilon_commutative(a))?;
    mode.require(NAME, "hom-associative", || check_hom_associative(a))?;
    mode.require_result(NAME, "derivation", || is_derivation(a, d, d.degree()))?;
    mode.require(NAME, "commutes with alpha", || checks::check_commutes_with_alpha(a, d))?;
    a.with_structure(right_operator_product(a, d))
}

/// `x ∗ y = α(x·∂(y))` where `(A, ·)` is commutative associative (its own
/// `α` is ignored for that premise), `α` is an algebra morphism of `·`, and
/// `∂` is an even derivation commuting with `α`. The twisting map is `α`.
pub fn composed_derivation_product(a: &ColorHomAlgebra, d: &GradedLinearMap, mode: Mode) -> Result<ColorHomAlgebra> {
    const NAME: &str = "composed_derivation_product";
    require_endomorphism(a, d)?;
    require_even(NAME, d)?;
    let plain = a.with_alpha(a.identity_map())?;
    mode.require(NAME, "epsilon-commutative", || check_epsilon_commutative(&plain))?;
    mode.require(NAME, "associative", || check_hom_associative(&plain))?;
    mode.require_result(NAME, "alpha is a morphism", || is_weak_morphism(&plain, &plain, a.alpha()))?;
    mode.require_result(NAME, "derivation", || is_derivation(&plain, d, d.degree()))?;
    mode.require(NAME, "commutes with alpha", || checks::check_commutes_with_alpha(a, d))?;
    let images: Vec<_> = (0..a.dim()).map(|j| d.image(j)).collect();
    let t = tensor_from(a, |i, j| a.alpha_of(&a.mul(&a.unit(i), &images[j])));
    a.with_structure(t)
}

/// `x ∗ y = [f(x), y]` on a Hom-Lie algebra, for even `f` commuting with `α`.
/// The result is Hom-Novikov exactly when [`check_f_conditions`](crate::checks::check_f_conditions) passes.
pub fn bracket_operator_product(l: &ColorHomAlgebra, f: &GradedLinearMap, mode: Mode) -> Result<ColorHomAlgebra> {
    const NAME: &str = "bracket_operator_product";
    require_endomorphism(l, f)?;
    require_even(NAME, f)?;
    mode.require(NAME, "hom-lie", || check_hom_lie(l))?;
    mode.require(NAME, "commutes with alpha", || checks::check_commutes_with_alpha(l, f))?;
    let images: Vec<_> = (0..l.dim()).map(|i| f.image(i)).collect();
    l.with_structure(tensor_from(l, |i, j| l.mul(&images[i], &l.unit(j))))
}

/// `A₁ ⊕ A₂` with block-diagonal product and `α₁ ⊕ α₂`. Both summands must
/// share the field, grading group and bicharacter.
pub fn direct_sum(a1: &ColorHomAlgebra, a2: &ColorHomAlgebra) -> Result<ColorHomAlgebra> {
    if a1.field() != a2.field() {
        return Err(Error::FieldMismatch);
    }
    if a1.bicharacter() != a2.bicharacter() {
        return Err(Error::BicharacterMismatch);
    }
    let basis = a1.basis().concat(a2.basis())?;
    let (n1, n2) = (a1.dim(), a2.dim());
    let mut t = StructureTensor::zeros(a1.field(), n1 + n2);
    for (i, j, k, v) in a1.structure().entries() {
        t.set(i, j, k, v.clone());
    }
    for (i, j, k, v) in a2.structure().entries() {
        t.set(n1 + i, n1 + j, n1 + k, v.clone());
    }
    let alpha = GradedLinearMap::even(
        basis.clone(),
        a1.alpha().matrix().block_diagonal(a2.alpha().matrix()),
    )?;
    debug_assert_eq!(basis.dim(), n1 + n2);
    ColorHomAlgebra::new(basis, a1.bicharacter().clone(), t, alpha)
}

/// `S ⊗ A` for a Hom-Novikov `S` and a commutative Hom-associative `A`:
/// `(x⊗a)⋆(y⊗b) = ε(a, y)(x∗y)⊗(a·b)`, twisting map `α_S ⊗ α_A`. Basis pairs
/// `(i, p)` are ordered row-major, index `i·dim A + p`.
pub fn tensor_product(s: &ColorHomAlgebra, a: &ColorHomAlgebra, mode: Mode) -> Result<ColorHomAlgebra> {
    const NAME: &str = "tensor_product";
    if s.field() != a.field() {
        return Err(Error::FieldMismatch);
    }
    if s.bicharacter() != a.bicharacter() {
        return Err(Error::BicharacterMismatch);
    }
    mode.require(NAME, "second factor epsilon-commutative", || check_epsilon_commutative(a))?;
    mode.require(NAME, "second factor hom-associative", || check_hom_associative(a))?;
    mode.require(NAME, "first factor hom-novikov", || check_hom_novikov(s))?;
    let basis = s.basis().tensor(a.basis())?;
    let (ns, na) = (s.dim(), a.dim());
    let bich = s.bicharacter();
    let mut t = StructureTensor::zeros(s.field(), ns * na);
    for (i, j, k, sv) in s.structure().entries() {
        for p in 0..na {
            let sign = bich.eval(a.degree(p), s.degree(j));
            let coeff = &sign * sv;
            for q in 0..na {
                for r in 0..na {
                    let av = a.structure().get(p, q, r);
                    if !av.is_zero() {
                        t.set(i * na + p, j * na + q, k * na + r, &coeff * av);
                    }
                }
            }
        }
    }
    let alpha = GradedLinearMap::even(basis.clone(), s.alpha().matrix().kronecker(a.alpha().matrix()))?;
    ColorHomAlgebra::new(basis, bich.clone(), t, alpha)
}

/// `(A, α∘·, ε)` with identity twisting map, for an involutive multiplicative
/// Hom-Novikov algebra.
pub fn untwist_involutive(a: &ColorHomAlgebra, mode: Mode) -> Result<ColorHomAlgebra> {
    const NAME: &str = "untwist_involutive";
    mode.require(NAME, "involutive", || check_involutive(a))?;
    mode.require(NAME, "multiplicative", || check_multiplicative(a))?;
    mode.require(NAME, "hom-novikov", || check_hom_novikov(a))?;
    a.with_parts(post_compose(a, a.alpha().matrix()), a.identity_map())
}

/// `(A, α⁻¹∘[−,−], ε)` with identity twisting map, for a regular Hom-Novikov
/// algebra. `α` must be invertible in either mode.
pub fn regular_lie_untwist(a: &ColorHomAlgebra, mode: Mode) -> Result<ColorHomAlgebra> {
    const NAME: &str = "regular_lie_untwist";
    mode.require(NAME, "regular", || check_regular(a))?;
    mode.require(NAME, "hom-novikov", || check_hom_novikov(a))?;
    let inv = a.alpha().inverse()?;
    let bracket = commutator_algebra(a);
    a.with_parts(post_compose(&bracket, inv.matrix()), a.identity_map())
}
