//! Invariant bilinear forms: Hom-quadratic structures `(B, β)` and the
//! constructions that carry them along twists and commutators.
//!
//! A structure is checked clause by clause, in this order:
//!
//! * (a) the companion `β` is even (structural: an odd `β` is an error);
//! * (b) ε-symmetry `B(x, y) = ε(x, y) B(y, x)`;
//! * (c) nondegeneracy, i.e. an invertible Gram matrix;
//! * (d) invariance `B(x·y, β(z)) = B(β(x), y·z)`;
//! * (e) `α` is `B`-symmetric, `B(α(x), y) = B(x, α(y))`.
//!
//! Forms are also required to be even (`B(A_a, A_b) = 0` unless `a + b = 0`)
//! unless built with [`BilinearFormStructure::permissive`].

use crate::checks::{
    check_hom_novikov, check_involutive, check_multiplicative, check_regular, compare, is_morphism, scan_pairs,
    scan_triples, Verdict, Witness,
};
use crate::constructions::{commutator_algebra, untwist_involutive, yau_twist, Mode};
use crate::graded::{ColorHomAlgebra, GradedLinearMap};
use crate::linalg::{Matrix, Vector};
use crate::scalar::Scalar;
use crate::{Error, Result};

/// A Gram matrix `B[i][j] = B(e_i, e_j)` and its companion map `β`.
#[derive(Clone, Debug, PartialEq)]
pub struct BilinearFormStructure {
    gram: Matrix,
    companion: GradedLinearMap,
}

impl BilinearFormStructure {
    /// Builds an even form; the companion's basis supplies the degrees.
    pub fn new(gram: Matrix, companion: GradedLinearMap) -> Result<Self> {
        let form = Self::permissive(gram, companion)?;
        let basis = form.companion.source();
        let group = basis.group();
        for i in 0..form.dim() {
            for j in 0..form.dim() {
                if !form.gram.get(i, j).is_zero() && !group.add(basis.degree(i), basis.degree(j)).is_zero() {
                    return Err(Error::FormEvenness { i, j });
                }
            }
        }
        Ok(form)
    }

    /// Skips the evenness restriction on `B`.
    pub fn permissive(gram: Matrix, companion: GradedLinearMap) -> Result<Self> {
        if !companion.is_endomorphism() {
            return Err(Error::DimensionMismatch {
                expected: companion.source().dim(),
                found: companion.target().dim(),
            });
        }
        let n = companion.source().dim();
        if gram.rows() != n || gram.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: gram.rows().max(gram.cols()),
            });
        }
        if gram.field() != companion.field() {
            return Err(Error::FieldMismatch);
        }
        Ok(BilinearFormStructure { gram, companion })
    }

    /// The plain quadratic case, companion `id`.
    pub fn plain(a: &ColorHomAlgebra, gram: Matrix) -> Result<Self> {
        Self::new(gram, a.identity_map())
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn companion(&self) -> &GradedLinearMap {
        &self.companion
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn with_companion(&self, companion: GradedLinearMap) -> Result<Self> {
        Self::new(self.gram.clone(), companion)
    }

    /// `B(u, v) = uᵀ G v`
    pub fn eval(&self, u: &Vector, v: &Vector) -> Scalar {
        let gv = self.gram.apply(v);
        let mut acc = self.gram.field().zero();
        for i in u.support() {
            acc += &(u.get(i) * gv.get(i));
        }
        acc
    }

    pub fn determinant(&self) -> Scalar {
        self.gram.determinant()
    }

    pub fn rank(&self) -> usize {
        self.gram.rank()
    }

    /// Gram matrix of `(x, y) ↦ B(m(x), y)`, i.e. `mᵀ G`.
    pub fn precomposed(&self, m: &GradedLinearMap) -> Matrix {
        m.matrix().transpose().mul(&self.gram)
    }
}

fn scalar_vec(s: Scalar) -> Vector {
    let f = s.field();
    Vector::from_coords(f, vec![s]).expect("single scalar")
}

fn compare_scalars(identity: &'static str, indices: &[usize], l: Scalar, r: Scalar) -> Option<Witness> {
    compare(identity, indices, scalar_vec(l), scalar_vec(r))
}

fn require_shape(a: &ColorHomAlgebra, form: &BilinearFormStructure) -> Result<()> {
    if form.companion.source() != a.basis() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: form.dim(),
        });
    }
    if form.gram.field() != a.field() {
        return Err(Error::FieldMismatch);
    }
    Ok(())
}

/// Clauses (a)–(e) in order; the witness names the clause letter.
pub fn check_quadratic_structure(a: &ColorHomAlgebra, form: &BilinearFormStructure) -> Result<Verdict> {
    require_shape(a, form)?;
    if !form.companion.is_even() {
        return Err(Error::NotEven);
    }
    let n = a.dim();
    let g = &form.gram;
    Ok(scan_pairs(n, |i, j| {
        compare_scalars("(b) epsilon-symmetry", &[i, j], g.get(i, j).clone(), a.sign(i, j) * g.get(j, i))
    })
    .and_then(|| {
        let det_zero = form.determinant().is_zero();
        debug_assert_eq!(det_zero, form.rank() < n, "determinant and rank disagree");
        match g.kernel_vector() {
            Some(v) if det_zero => Verdict::fail(Witness {
                identity: "(c) nondegeneracy",
                indices: vec![],
                right: Vector::zeros(a.field(), n),
                left: v,
            }),
            _ => Verdict::pass(),
        }
    })
    .and_then(|| invariance(a, form))
    .and_then(|| {
        scan_pairs(n, |i, j| {
            let left = form.eval(&a.alpha().image(i), &a.unit(j));
            let right = form.eval(&a.unit(i), &a.alpha().image(j));
            compare_scalars("(e) alpha B-symmetry", &[i, j], left, right)
        })
    }))
}

/// `φ` invertible, a morphism of `A` (product and `α`), and `B`-symmetric.
pub fn is_symmetric_automorphism(
    a: &ColorHomAlgebra,
    form: &BilinearFormStructure,
    phi: &GradedLinearMap,
) -> Result<Verdict> {
    require_shape(a, form)?;
    if !phi.is_even() {
        return Err(Error::NotEven);
    }
    let invertible = match phi.matrix().kernel_vector() {
        Some(v) => Verdict::fail(Witness {
            identity: "invertible",
            indices: vec![],
            left: v,
            right: a.zero_vector(),
        }),
        None => Verdict::pass(),
    };
    if !invertible.passes() {
        return Ok(invertible);
    }
    let morphism = is_morphism(a, a, phi)?;
    Ok(morphism.and_then(|| {
        scan_pairs(a.dim(), |i, j| {
            let left = form.eval(&phi.image(i), &a.unit(j));
            let right = form.eval(&a.unit(i), &phi.image(j));
            compare_scalars("B-symmetry", &[i, j], left, right)
        })
    }))
}

/// Checks B-invariance of the product alone, `B(x·y, β(z)) = B(β(x), y·z)`.
pub fn check_invariance(a: &ColorHomAlgebra, form: &BilinearFormStructure) -> Result<Verdict> {
    require_shape(a, form)?;
    Ok(invariance(a, form))
}

fn invariance(a: &ColorHomAlgebra, form: &BilinearFormStructure) -> Verdict {
    let n = a.dim();
    let images: Vec<_> = (0..n).map(|i| form.companion.matrix().column(i)).collect();
    // z varies slowest, then y, then x
    scan_triples(n, |k, j, i| {
        let left = form.eval(&a.basis_product(i, j), &images[k]);
        let right = form.eval(&images[i], &a.basis_product(j, k));
        compare_scalars("(d) invariance", &[i, j, k], left, right)
    })
}

fn require_companion(
    construction: &'static str,
    hypothesis: &'static str,
    form: &BilinearFormStructure,
    expected: &GradedLinearMap,
) -> Result<()> {
    if form.companion() == expected {
        Ok(())
    } else {
        Err(Error::Precondition {
            construction,
            hypothesis,
            witness: None,
        })
    }
}

fn require_quadratic(
    construction: &'static str,
    mode: Mode,
    a: &ColorHomAlgebra,
    form: &BilinearFormStructure,
) -> Result<()> {
    let v = check_quadratic_structure(a, form)?;
    if mode == Mode::Strict {
        v.require(construction, "quadratic structure")?;
    }
    Ok(())
}

/// `(A, β∘·, ε, β∘α, B_β)` with `B_β(x, y) = B(β(x), y)`, for a quadratic
/// algebra (companion `id`) and a symmetric automorphism `β`.
pub fn quadratic_yau_twist(
    a: &ColorHomAlgebra,
    form: &BilinearFormStructure,
    beta: &GradedLinearMap,
    mode: Mode,
) -> Result<(ColorHomAlgebra, BilinearFormStructure)> {
    const NAME: &str = "quadratic_yau_twist";
    require_companion(NAME, "companion is identity", form, &a.identity_map())?;
    require_quadratic(NAME, mode, a, form)?;
    if mode == Mode::Strict {
        is_symmetric_automorphism(a, form, beta)?.require(NAME, "symmetric automorphism")?;
    }
    let twisted = yau_twist(a, beta, mode)?;
    let new_form = BilinearFormStructure::new(form.precomposed(beta), twisted.identity_map())?;
    Ok((twisted, new_form))
}

/// `(A, αⁿ∘·, ε, αⁿ⁺¹, B_{αⁿ})` with `B_{αⁿ}(x, y) = B(αⁿ(x), y)`, for a
/// quadratic regular Hom-Novikov algebra with `B`-symmetric `α`.
pub fn quadratic_power_twist(
    a: &ColorHomAlgebra,
    form: &BilinearFormStructure,
    n: u32,
    mode: Mode,
) -> Result<(ColorHomAlgebra, BilinearFormStructure)> {
    const NAME: &str = "quadratic_power_twist";
    if mode == Mode::Strict {
        check_regular(a).require(NAME, "regular")?;
    }
    quadratic_yau_twist(a, form, &a.alpha().pow(n), mode)
}

/// The commutator algebra with the same form (companion `id`).
pub fn quadratic_commutator(
    a: &ColorHomAlgebra,
    form: &BilinearFormStructure,
    mode: Mode,
) -> Result<(ColorHomAlgebra, BilinearFormStructure)> {
    const NAME: &str = "quadratic_commutator";
    require_companion(NAME, "companion is identity", form, &a.identity_map())?;
    require_quadratic(NAME, mode, a, form)?;
    Ok((commutator_algebra(a), form.clone()))
}

/// For a Hom-quadratic regular Hom-Novikov algebra with companion `α`: the
/// commutator algebra with `B_α(x, y) = B(α(x), y)`, companion `α`.
pub fn regular_quadratic_commutator(
    a: &ColorHomAlgebra,
    form: &BilinearFormStructure,
    mode: Mode,
) -> Result<(ColorHomAlgebra, BilinearFormStructure)> {
    const NAME: &str = "regular_quadratic_commutator";
    require_companion(NAME, "companion is alpha", form, a.alpha())?;
    require_quadratic(NAME, mode, a, form)?;
    if mode == Mode::Strict {
        check_regular(a).require(NAME, "regular")?;
        check_hom_novikov(a).require(NAME, "hom-novikov")?;
    }
    a.alpha().inverse()?;
    let bracket = commutator_algebra(a);
    let new_form = BilinearFormStructure::new(form.precomposed(a.alpha()), a.alpha().clone())?;
    Ok((bracket, new_form))
}

/// For a Hom-quadratic involutive Hom-Novikov algebra with companion `α`:
/// `(A, α∘·, ε, B)` with identity twisting map and companion.
pub fn quadratic_untwist_involutive(
    a: &ColorHomAlgebra,
    form: &BilinearFormStructure,
    mode: Mode,
) -> Result<(ColorHomAlgebra, BilinearFormStructure)> {
    const NAME: &str = "quadratic_untwist_involutive";
    require_companion(NAME, "companion is alpha", form, a.alpha())?;
    require_quadratic(NAME, mode, a, form)?;
    if mode == Mode::Strict {
        check_involutive(a).require(NAME, "involutive")?;
        check_multiplicative(a).require(NAME, "multiplicative")?;
    }
    let untwisted = untwist_involutive(a, mode)?;
    let new_form = BilinearFormStructure::new(form.gram.clone(), untwisted.identity_map())?;
    Ok((untwisted, new_form))
}
