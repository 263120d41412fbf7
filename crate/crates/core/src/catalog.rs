//! Reproducible instances and a seeded search for operators.
//!
//! Factories such as [`truncated_polynomial`] build one algebra directly.
//! [`InstanceRecipe`] names a factory plus parameters and materializes an
//! [`Instance`]: the algebra, some named maps and forms, and the properties the
//! instance claims. Claims are re-verified whenever a recipe is materialized in
//! a debug build.
//!
//! [`search_maps`] enumerates even matrices with small entries, sparsest first,
//! and keeps those passing a predicate.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::checks::{
    self, check_epsilon_commutative, check_f_conditions, check_hom_associative, check_hom_lie, check_hom_novikov,
    check_involutive, check_multiplicative, check_regular, is_averaging, is_centroid, is_derivation, is_morphism,
    is_rota_baxter, is_weak_morphism, Side, Verdict,
};
use crate::constructions::{tensor_product, yau_twist, Mode};
use crate::graded::{ColorHomAlgebra, GradedBasis, GradedLinearMap, StructureTensor};
use crate::grading::{Bicharacter, GradeGroup};
use crate::linalg::Matrix;
use crate::quadratic::{check_quadratic_structure, is_symmetric_automorphism, BilinearFormStructure};
use crate::scalar::{Field, Scalar};
use crate::{Error, Result};

fn ungraded(field: Field, structure: StructureTensor) -> ColorHomAlgebra {
    let dim = structure.dim();
    let basis = GradedBasis::trivial(GradeGroup::trivial(), dim);
    let alpha = GradedLinearMap::identity(basis.clone(), field);
    ColorHomAlgebra::new(basis, Bicharacter::ungraded(field), structure, alpha).expect("ungraded algebras are even")
}

/// `K[t]/(tⁿ)` on the monomial basis, `α = id`.
pub fn truncated_polynomial(n: usize, field: Field) -> ColorHomAlgebra {
    let mut t = StructureTensor::zeros(field, n);
    for i in 0..n {
        for j in 0..n - i {
            t.set(i, j, i + j, field.one());
        }
    }
    ungraded(field, t)
}

/// The ungraded algebra of dimension `dim` with zero product and `α = id`.
pub fn zero_algebra(field: Field, dim: usize) -> ColorHomAlgebra {
    ungraded(field, StructureTensor::zeros(field, dim))
}

/// `d/dt` on a monomial basis: `e_i ↦ i·e_{i−1}`.
pub fn dt_derivation(a: &ColorHomAlgebra) -> GradedLinearMap {
    let f = a.field();
    let mut m = Matrix::zeros(f, a.dim(), a.dim());
    for i in 1..a.dim() {
        m.set(i - 1, i, f.int(i as i64));
    }
    GradedLinearMap::even(a.basis().clone(), m).expect("d/dt is even on an ungraded basis")
}

/// `t·d/dt` on a monomial basis: `e_i ↦ i·e_i`.
pub fn euler_derivation(a: &ColorHomAlgebra) -> GradedLinearMap {
    let f = a.field();
    let diag: Vec<_> = (0..a.dim()).map(|i| f.int(i as i64)).collect();
    GradedLinearMap::even(a.basis().clone(), Matrix::diagonal(f, &diag)).expect("diagonal maps are even")
}

/// `e_i ↦ c^{w_i}·e_i`.
pub fn scaling_morphism(a: &ColorHomAlgebra, c: &Scalar, weights: &[u32]) -> Result<GradedLinearMap> {
    if weights.len() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: weights.len(),
        });
    }
    if c.field() != a.field() {
        return Err(Error::FieldMismatch);
    }
    let diag: Vec<_> = weights
        .iter()
        .map(|&w| c.pow(w as i128).expect("non-negative powers exist"))
        .collect();
    GradedLinearMap::even(a.basis().clone(), Matrix::diagonal(a.field(), &diag))
}

/// The product `e_i ∗ e_j = j·e_{i+j−1}` on `K[t]/(tⁿ)`, i.e. `x·(d/dt)y`
/// truncated, with `α = id`. It is a derivation product, hence Novikov, when
/// [`dt_is_derivation`] holds; for `n = 2` it is Novikov in any characteristic.
pub fn dt_novikov(n: usize, field: Field) -> ColorHomAlgebra {
    let mut t = StructureTensor::zeros(field, n);
    for i in 0..n {
        for j in 1..n {
            if i + j - 1 < n {
                t.set(i, j, i + j - 1, field.int(j as i64));
            }
        }
    }
    ungraded(field, t)
}

/// `x ∗ y = x·(t·d/dt)y` on `K[t]/(tⁿ)`: `e_i ∗ e_j = j·e_{i+j}`, `α = id`.
pub fn euler_novikov(n: usize, field: Field) -> ColorHomAlgebra {
    let mut t = StructureTensor::zeros(field, n);
    for i in 0..n {
        for j in 1..n - i {
            t.set(i, j, i + j, field.int(j as i64));
        }
    }
    ungraded(field, t)
}

/// Whether `d/dt` is a derivation of `K[t]/(tⁿ)`, i.e. `n·t^{n−1} = 0`.
pub fn dt_is_derivation(n: usize, field: Field) -> bool {
    n <= 1 || field.int(n as i64).is_zero()
}

/// The Grassmann algebra on one odd generator: `Z_2`-graded, `ε(1, 1) = −1`,
/// unit `e_0` in degree 0, `e_1` in degree 1, `e_1·e_1 = 0`.
pub fn super_commutative_line(field: Field) -> ColorHomAlgebra {
    let bich = Bicharacter::super_sign(field);
    let basis = GradedBasis::from_coords(bich.group().clone(), &[&[0], &[1]]).expect("Z_2 degrees");
    let t = StructureTensor::from_entries(field, 2, &[(0, 0, 0, field.one()), (0, 1, 1, field.one()), (1, 0, 1, field.one())])
        .expect("indices in range");
    let alpha = GradedLinearMap::identity(basis.clone(), field);
    ColorHomAlgebra::new(basis, bich, t, alpha).expect("super line is even")
}

/// The odd derivation `e_1 ↦ e_0` of [`super_commutative_line`].
pub fn super_line_odd_derivation(line: &ColorHomAlgebra) -> GradedLinearMap {
    let f = line.field();
    let degree = line.basis().group().element(&[1]).expect("Z_2 element");
    GradedLinearMap::new(line.basis().clone(), Matrix::from_int_rows(f, &[&[0, 1], &[0, 0]]), degree)
        .expect("e_1 ↦ e_0 is odd")
}

/// The two-dimensional Lie algebra `[e_0, e_1] = e_1`, `α = id`.
pub fn solvable_bracket(field: Field) -> ColorHomAlgebra {
    let t = StructureTensor::from_entries(field, 2, &[(0, 1, 1, field.one()), (1, 0, 1, field.int(-1))])
        .expect("indices in range");
    ungraded(field, t)
}

/// A primitive cube root of unity, if the field has one.
pub fn cube_root_of_unity(field: Field) -> Option<Scalar> {
    match field {
        Field::Rational => None,
        Field::Prime(p) => (2..p as i64)
            .map(|x| field.int(x))
            .find(|w| w.pow(3).is_some_and(|c| c.is_one())),
    }
}

/// On `Z ⊕ Z_3`: `ε(g_0, g_0) = −1`, `ε(g_0, g_1) = ω`, `ε(g_1, g_0) = ω⁻¹`,
/// `ε(g_1, g_1) = 1` for a primitive cube root of unity `ω`.
pub fn mixed_bicharacter(field: Field) -> Result<Bicharacter> {
    let w = cube_root_of_unity(field).ok_or_else(|| Error::Parameter(format!("{field} has no cube root of unity")))?;
    let winv = w.inverse().expect("root of unity is nonzero");
    let group = GradeGroup::new(1, vec![3])?;
    Bicharacter::new(field, group, vec![vec![field.int(-1), w], vec![winv, field.one()]])
}

/// `K_ε⟨x, y⟩/(x², y²)` over a field with a primitive cube root of unity `ω`,
/// graded by `Z_3 ⊕ Z_3` with `ε(x, y) = ω`. Basis `1, x, y, xy`; the product is
/// associative and ε-commutative, `y·x = ω⁻¹ x·y`.
pub fn color_quantum_plane(field: Field) -> Result<ColorHomAlgebra> {
    let w = cube_root_of_unity(field).ok_or_else(|| Error::Parameter(format!("{field} has no cube root of unity")))?;
    let winv = w.inverse().expect("root of unity is nonzero");
    let group = GradeGroup::new(0, vec![3, 3])?;
    let bich = Bicharacter::new(field, group.clone(), vec![vec![field.one(), w], vec![winv.clone(), field.one()]])?;
    let basis = GradedBasis::from_coords(group, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])?;
    let idx = |a: usize, b: usize| a + 2 * b;
    let mut t = StructureTensor::zeros(field, 4);
    for (a, b) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
        for (c, d) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
            if a + c > 1 || b + d > 1 {
                continue;
            }
            // moving y^b past x^c
            let sign = if b * c == 1 { winv.clone() } else { field.one() };
            t.set(idx(a, b), idx(c, d), idx(a + c, b + d), sign);
        }
    }
    let alpha = GradedLinearMap::identity(basis.clone(), field);
    ColorHomAlgebra::new(basis, bich, t, alpha)
}

/// The same structure constants with every basis vector placed in degree 0 of
/// the group of `bich`.
pub fn even_regrading(a: &ColorHomAlgebra, bich: &Bicharacter) -> Result<ColorHomAlgebra> {
    if bich.field() != a.field() {
        return Err(Error::FieldMismatch);
    }
    let basis = GradedBasis::trivial(bich.group().clone(), a.dim());
    let alpha = GradedLinearMap::even(basis.clone(), a.alpha().matrix().clone())?;
    ColorHomAlgebra::new(basis, bich.clone(), a.structure().clone(), alpha)
}

/// `dt_novikov(2) ⊗ super line`: a four-dimensional Hom-Novikov superalgebra
/// with odd basis vectors 1 and 3.
pub fn super_dt_novikov(field: Field) -> ColorHomAlgebra {
    let line = super_commutative_line(field);
    let nov = even_regrading(&dt_novikov(2, field), line.bicharacter()).expect("same field");
    tensor_product(&nov, &line, Mode::Strict).expect("Novikov tensor commutative associative")
}

/// `B(e_i, e_j) = 1` iff `i + j = n − 1`, companion `id`.
pub fn anti_diagonal_form(a: &ColorHomAlgebra) -> BilinearFormStructure {
    let n = a.dim();
    let mut g = Matrix::zeros(a.field(), n, n);
    for i in 0..n {
        g.set(i, n - 1 - i, a.field().one());
    }
    BilinearFormStructure::new(g, a.identity_map()).expect("anti-diagonal form on an ungraded basis")
}

/// The Yau twist of `K[t]/(t³)` by `t ↦ −t` with the anti-diagonal form and
/// companion `α = (t ↦ −t)`: involutive, regular, Hom-quadratic.
pub fn involutive_quadratic(field: Field) -> (ColorHomAlgebra, BilinearFormStructure) {
    let a = truncated_polynomial(3, field);
    let flip = scaling_morphism(&a, &field.int(-1), &[0, 1, 2]).expect("three weights");
    let twisted = yau_twist(&a, &flip, Mode::Strict).expect("t ↦ −t is a morphism");
    let form = BilinearFormStructure::new(anti_diagonal_form(&a).gram().clone(), twisted.alpha().clone())
        .expect("ungraded basis");
    (twisted, form)
}

/// A property an instance claims to have.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Claim {
    EpsilonCommutative,
    HomAssociative,
    HomNovikov,
    HomLie,
    Multiplicative,
    Regular,
    Involutive,
    /// The named map is a derivation of its own degree.
    Derivation(String),
    /// The named map is a morphism of the instance into itself.
    Morphism(String),
    /// The named form is a Hom-quadratic structure.
    Quadratic(String),
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Claim::EpsilonCommutative => write!(f, "epsilon_commutative"),
            Claim::HomAssociative => write!(f, "hom_associative"),
            Claim::HomNovikov => write!(f, "hom_novikov"),
            Claim::HomLie => write!(f, "hom_lie"),
            Claim::Multiplicative => write!(f, "multiplicative"),
            Claim::Regular => write!(f, "regular"),
            Claim::Involutive => write!(f, "involutive"),
            Claim::Derivation(m) => write!(f, "derivation {m}"),
            Claim::Morphism(m) => write!(f, "morphism {m}"),
            Claim::Quadratic(b) => write!(f, "quadratic {b}"),
        }
    }
}

/// A materialized recipe.
#[derive(Clone, Debug, PartialEq)]
pub struct Instance {
    pub name: String,
    pub algebra: ColorHomAlgebra,
    pub maps: BTreeMap<String, GradedLinearMap>,
    pub forms: BTreeMap<String, BilinearFormStructure>,
    pub claims: Vec<Claim>,
    /// The general statement that makes the claims expected.
    pub provenance: &'static str,
}

impl Instance {
    fn new(name: impl Into<String>, algebra: ColorHomAlgebra, provenance: &'static str) -> Self {
        Instance {
            name: name.into(),
            algebra,
            maps: BTreeMap::new(),
            forms: BTreeMap::new(),
            claims: Vec::new(),
            provenance,
        }
    }

    fn claim(mut self, claims: impl IntoIterator<Item = Claim>) -> Self {
        self.claims.extend(claims);
        self
    }

    fn map(mut self, name: &str, m: GradedLinearMap) -> Self {
        self.maps.insert(name.to_string(), m);
        self
    }

    fn form(mut self, name: &str, b: BilinearFormStructure) -> Self {
        self.forms.insert(name.to_string(), b);
        self
    }

    fn lookup_map(&self, name: &str) -> Result<&GradedLinearMap> {
        self.maps.get(name).ok_or_else(|| Error::Parameter(format!("no map named {name:?}")))
    }

    pub fn evaluate(&self, claim: &Claim) -> Result<Verdict> {
        let a = &self.algebra;
        Ok(match claim {
            Claim::EpsilonCommutative => check_epsilon_commutative(a),
            Claim::HomAssociative => check_hom_associative(a),
            Claim::HomNovikov => check_hom_novikov(a),
            Claim::HomLie => check_hom_lie(a),
            Claim::Multiplicative => check_multiplicative(a),
            Claim::Regular => check_regular(a),
            Claim::Involutive => check_involutive(a),
            Claim::Derivation(m) => {
                let d = self.lookup_map(m)?;
                is_derivation(a, d, d.degree())?
            }
            Claim::Morphism(m) => is_morphism(a, a, self.lookup_map(m)?)?,
            Claim::Quadratic(b) => {
                let form = self.forms.get(b).ok_or_else(|| Error::Parameter(format!("no form named {b:?}")))?;
                check_quadratic_structure(a, form)?
            }
        })
    }

    /// Re-runs every claim; the first failure becomes [`Error::Claim`].
    pub fn verify_claims(&self) -> Result<()> {
        for claim in &self.claims {
            if let Some(w) = self.evaluate(claim)?.into_witness() {
                return Err(Error::Claim {
                    instance: self.name.clone(),
                    claim: claim.to_string(),
                    witness: Some(Box::new(w)),
                });
            }
        }
        Ok(())
    }
}

/// Recipe names with a one-line description of their parameters.
pub const RECIPES: &[(&str, &str)] = &[
    ("truncated_polynomial", "K[t]/(t^n); params n (default 3), field"),
    ("dt_novikov", "e_i * e_j = j e_(i+j-1) on K[t]/(t^n); params n (default 3), field"),
    ("euler_novikov", "e_i * e_j = j e_(i+j) on K[t]/(t^n); params n (default 3), field"),
    ("twisted_truncated", "Yau twist of K[t]/(t^n) by t -> c t; params n (default 3), c (default 2), field"),
    ("zero", "zero product, alpha = id; params dim (default 2), field"),
    ("solvable_bracket", "[e_0, e_1] = e_1; params field"),
    ("super_line", "Grassmann algebra on one odd generator; params field"),
    ("super_dt_novikov", "dt_novikov(2) tensor super_line; params field"),
    ("color_quantum_plane", "Z_3 x Z_3-graded x, y with y x = w^-1 x y; params field (default 7)"),
    ("involutive_quadratic", "twist of K[t]/(t^3) by t -> -t with anti-diagonal form; params field"),
];

/// A factory name plus string parameters. `field` is `Q` (default) or a prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceRecipe {
    pub name: String,
    pub params: BTreeMap<String, String>,
}

impl InstanceRecipe {
    pub fn new(name: &str) -> Self {
        InstanceRecipe {
            name: name.to_string(),
            params: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    fn field_or(&self, default: Field) -> Result<Field> {
        self.params.get("field").map_or(Ok(default), |s| s.parse())
    }

    fn usize_param(&self, key: &str, default: usize) -> Result<usize> {
        match self.params.get(key) {
            None => Ok(default),
            Some(s) => s
                .parse()
                .map_err(|_| Error::Parameter(format!("{key} must be a non-negative integer, got {s:?}"))),
        }
    }

    fn check_keys(&self, allowed: &[&str]) -> Result<()> {
        match self.params.keys().find(|k| !allowed.contains(&k.as_str())) {
            Some(k) => Err(Error::Parameter(format!("recipe {} takes no parameter {k:?}", self.name))),
            None => Ok(()),
        }
    }

    pub fn materialize(&self) -> Result<Instance> {
        let instance = self.build()?;
        if cfg!(debug_assertions) {
            instance.verify_claims()?;
        }
        Ok(instance)
    }

    fn build(&self) -> Result<Instance> {
        use Claim::*;
        const COMMUTATIVE: &str = "commutative Hom-associative color algebras are Hom-Novikov";
        let name = self.to_string();
        match self.name.as_str() {
            "truncated_polynomial" => {
                self.check_keys(&["n", "field"])?;
                let (n, field) = (self.usize_param("n", 3)?, self.field_or(Field::Rational)?);
                let a = truncated_polynomial(n, field);
                let weights: Vec<u32> = (0..n as u32).collect();
                let scale = scaling_morphism(&a, &field.int(2), &weights)?;
                let form = anti_diagonal_form(&a);
                let inst = Instance::new(name, a.clone(), COMMUTATIVE)
                    .map("ddt", dt_derivation(&a))
                    .map("euler", euler_derivation(&a))
                    .map("scale2", scale)
                    .form("anti_diagonal", form);
                let inst = inst.claim([
                    EpsilonCommutative,
                    HomAssociative,
                    HomNovikov,
                    Multiplicative,
                    Regular,
                    Involutive,
                    Derivation("euler".into()),
                    Morphism("scale2".into()),
                    Quadratic("anti_diagonal".into()),
                ]);
                Ok(if dt_is_derivation(n, field) {
                    inst.claim([Derivation("ddt".into())])
                } else {
                    inst
                })
            }
            "dt_novikov" => {
                self.check_keys(&["n", "field"])?;
                let (n, field) = (self.usize_param("n", 3)?, self.field_or(Field::Rational)?);
                let a = dt_novikov(n, field);
                let mut claims = vec![Multiplicative, Regular];
                if n <= 2 || dt_is_derivation(n, field) {
                    claims.push(HomNovikov);
                }
                Ok(Instance::new(name, a, "derivation products on commutative associative algebras are Novikov").claim(claims))
            }
            "euler_novikov" => {
                self.check_keys(&["n", "field"])?;
                let (n, field) = (self.usize_param("n", 3)?, self.field_or(Field::Rational)?);
                let a = euler_novikov(n, field);
                Ok(Instance::new(name, a, "derivation products on commutative associative algebras are Novikov")
                    .claim([HomNovikov, Multiplicative, Regular]))
            }
            "twisted_truncated" => {
                self.check_keys(&["n", "c", "field"])?;
                let (n, field) = (self.usize_param("n", 3)?, self.field_or(Field::Rational)?);
                let c = match self.params.get("c") {
                    Some(s) => field.parse(s)?,
                    None => field.int(2),
                };
                let base = truncated_polynomial(n, field);
                let weights: Vec<u32> = (0..n as u32).collect();
                let s = scaling_morphism(&base, &c, &weights)?;
                let a = yau_twist(&base, &s, Mode::Strict)?;
                let mut claims = vec![HomNovikov, Multiplicative];
                if !c.is_zero() {
                    claims.push(Regular);
                }
                Ok(Instance::new(name, a, "Yau twists of Hom-Novikov algebras by morphisms").claim(claims))
            }
            "zero" => {
                self.check_keys(&["dim", "field"])?;
                let (dim, field) = (self.usize_param("dim", 2)?, self.field_or(Field::Rational)?);
                Ok(Instance::new(name, zero_algebra(field, dim), "zero products satisfy every identity").claim([
                    EpsilonCommutative,
                    HomAssociative,
                    HomNovikov,
                    HomLie,
                    Multiplicative,
                    Regular,
                    Involutive,
                ]))
            }
            "solvable_bracket" => {
                self.check_keys(&["field"])?;
                let a = solvable_bracket(self.field_or(Field::Rational)?);
                Ok(Instance::new(name, a, "Lie algebras are Hom-Lie with alpha = id").claim([HomLie, Multiplicative, Regular]))
            }
            "super_line" => {
                self.check_keys(&["field"])?;
                let a = super_commutative_line(self.field_or(Field::Rational)?);
                let odd = super_line_odd_derivation(&a);
                Ok(Instance::new(name, a, COMMUTATIVE).map("odd_derivation", odd).claim([
                    EpsilonCommutative,
                    HomAssociative,
                    HomNovikov,
                    Derivation("odd_derivation".into()),
                ]))
            }
            "super_dt_novikov" => {
                self.check_keys(&["field"])?;
                let a = super_dt_novikov(self.field_or(Field::Rational)?);
                Ok(Instance::new(name, a, "Novikov tensor commutative Hom-associative is Hom-Novikov")
                    .claim([HomNovikov, Multiplicative]))
            }
            "color_quantum_plane" => {
                self.check_keys(&["field"])?;
                let a = color_quantum_plane(self.field_or(Field::Prime(7))?)?;
                Ok(Instance::new(name, a, COMMUTATIVE).claim([EpsilonCommutative, HomAssociative, HomNovikov]))
            }
            "involutive_quadratic" => {
                self.check_keys(&["field"])?;
                let (a, form) = involutive_quadratic(self.field_or(Field::Rational)?);
                let alpha = a.alpha().clone();
                Ok(Instance::new(name, a, "Yau twists of quadratic algebras by symmetric automorphisms")
                    .map("alpha", alpha)
                    .form("B", form)
                    .claim([HomNovikov, Multiplicative, Regular, Involutive, Quadratic("B".into())]))
            }
            other => Err(Error::UnknownRecipe(other.to_string())),
        }
    }
}

impl fmt::Display for InstanceRecipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)?;
        for (k, v) in &self.params {
            write!(f, " {k}={v}")?;
        }
        Ok(())
    }
}

/// `name key=value ...`, whitespace separated.
impl FromStr for InstanceRecipe {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut words = s.split_whitespace();
        let name = words.next().ok_or_else(|| Error::UnknownRecipe(String::new()))?;
        let mut recipe = InstanceRecipe::new(name);
        for w in words {
            let (k, v) = w
                .split_once('=')
                .ok_or_else(|| Error::Parameter(format!("expected key=value, got {w:?}")))?;
            recipe.params.insert(k.to_string(), v.to_string());
        }
        Ok(recipe)
    }
}

/// One recipe per factory over `ℚ` (the colored plane over `𝔽₇`), plus a few
/// prime-field variants.
pub fn standard_recipes() -> Vec<InstanceRecipe> {
    let r = InstanceRecipe::new;
    vec![
        r("truncated_polynomial").with("n", 1),
        r("truncated_polynomial").with("n", 2),
        r("truncated_polynomial").with("n", 3),
        r("truncated_polynomial").with("n", 3).with("field", 3),
        r("dt_novikov").with("n", 2),
        r("dt_novikov").with("n", 3).with("field", 3),
        r("dt_novikov").with("n", 5).with("field", 5),
        r("euler_novikov").with("n", 3),
        r("euler_novikov").with("n", 4).with("field", 5),
        r("twisted_truncated").with("n", 3),
        r("twisted_truncated").with("n", 3).with("c", 0),
        r("zero").with("dim", 2),
        r("zero").with("dim", 3),
        r("solvable_bracket"),
        r("super_line"),
        r("super_line").with("field", 5),
        r("super_dt_novikov"),
        r("color_quantum_plane"),
        r("involutive_quadratic"),
    ]
}

/// A named predicate for [`search_maps`]. Maps are always even endomorphisms.
#[derive(Clone, Debug, PartialEq)]
pub enum SearchPredicate {
    WeakMorphism,
    Morphism,
    Derivation,
    Averaging(Side),
    Centroid(Side),
    RotaBaxter(Scalar),
    FConditions,
    CommutesWithAlpha,
    SymmetricAutomorphism(BilinearFormStructure),
}

impl SearchPredicate {
    /// Looks up a predicate by its check name, with or without the `is_` /
    /// `check_` prefix. Rota–Baxter uses weight 0, averaging and centroid both
    /// sides; a symmetric-automorphism search needs a form.
    pub fn from_name(name: &str, field: Field, form: Option<&BilinearFormStructure>) -> Result<Self> {
        let bare = name.strip_prefix("is_").or_else(|| name.strip_prefix("check_")).unwrap_or(name);
        Ok(match bare {
            "weak_morphism" => SearchPredicate::WeakMorphism,
            "morphism" => SearchPredicate::Morphism,
            "derivation" => SearchPredicate::Derivation,
            "averaging" => SearchPredicate::Averaging(Side::Both),
            "centroid" => SearchPredicate::Centroid(Side::Both),
            "rota_baxter" => SearchPredicate::RotaBaxter(field.zero()),
            "f_conditions" => SearchPredicate::FConditions,
            "commutes_with_alpha" => SearchPredicate::CommutesWithAlpha,
            "symmetric_automorphism" => SearchPredicate::SymmetricAutomorphism(
                form.cloned()
                    .ok_or_else(|| Error::Parameter("symmetric_automorphism needs a bilinear form".into()))?,
            ),
            _ => return Err(Error::UnknownPredicate(name.to_string())),
        })
    }

    pub fn evaluate(&self, a: &ColorHomAlgebra, m: &GradedLinearMap) -> Result<Verdict> {
        match self {
            SearchPredicate::WeakMorphism => is_weak_morphism(a, a, m),
            SearchPredicate::Morphism => is_morphism(a, a, m),
            SearchPredicate::Derivation => is_derivation(a, m, m.degree()),
            SearchPredicate::Averaging(side) => is_averaging(a, m, *side),
            SearchPredicate::Centroid(side) => is_centroid(a, m, *side),
            SearchPredicate::RotaBaxter(w) => is_rota_baxter(a, m, w),
            SearchPredicate::FConditions => check_f_conditions(a, m),
            SearchPredicate::CommutesWithAlpha => Ok(checks::check_commutes_with_alpha(a, m)),
            SearchPredicate::SymmetricAutomorphism(form) => is_symmetric_automorphism(a, form, m),
        }
    }
}

pub const DEFAULT_ALPHABET: [i64; 4] = [-1, 0, 1, 2];

/// [`search_maps_over`] with entries from `{−1, 0, 1, 2}`.
pub fn search_maps(
    a: &ColorHomAlgebra,
    predicate: &SearchPredicate,
    seed: u64,
    budget: usize,
) -> Result<Vec<GradedLinearMap>> {
    search_maps_over(a, predicate, seed, budget, &DEFAULT_ALPHABET)
}

/// Examines at most `budget` even matrices with entries from `alphabet` and
/// returns those passing `predicate`, in enumeration order.
///
/// Candidates come in layers by number of nonzero entries (0, 1, 2, ...);
/// within a layer, supports are taken in lexicographic order of the entry
/// positions (row-major over positions `(r, c)` with `deg r = deg c`) and
/// values in alphabet order. Seed 0 keeps that order; any other seed shuffles
/// the positions and the nonzero values with a ChaCha stream first.
pub fn search_maps_over(
    a: &ColorHomAlgebra,
    predicate: &SearchPredicate,
    seed: u64,
    budget: usize,
    alphabet: &[i64],
) -> Result<Vec<GradedLinearMap>> {
    let n = a.dim();
    let mut positions: Vec<(usize, usize)> = (0..n * n)
        .map(|rc| (rc / n, rc % n))
        .filter(|&(r, c)| a.degree(r) == a.degree(c))
        .collect();
    let mut values: Vec<Scalar> = Vec::new();
    for &v in alphabet {
        let s = a.field().int(v);
        if !s.is_zero() && !values.contains(&s) {
            values.push(s);
        }
    }
    if seed != 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        positions.shuffle(&mut rng);
        values.shuffle(&mut rng);
    }

    let to_map = |cand: &[(usize, usize)]| {
        let mut m = Matrix::zeros(a.field(), n, n);
        for &(p, v) in cand {
            let (r, c) = positions[p];
            m.set(r, c, values[v].clone());
        }
        GradedLinearMap::even(a.basis().clone(), m).expect("supported on even positions")
    };

    const BATCH: usize = 2048;
    let threads = std::thread::available_parallelism().map_or(1, |t| t.get()).min(8);
    let mut supports = Supports::new(positions.len(), values.len());
    let mut remaining = budget;
    let mut hits = Vec::new();
    while remaining > 0 {
        let batch: Vec<_> = supports.by_ref().take(remaining.min(BATCH)).collect();
        if batch.is_empty() {
            break;
        }
        remaining -= batch.len();
        let chunk = batch.len().div_ceil(threads).max(1);
        let results: Vec<Result<Vec<GradedLinearMap>>> = std::thread::scope(|scope| {
            let handles: Vec<_> = batch
                .chunks(chunk)
                .map(|part| {
                    let to_map = &to_map;
                    scope.spawn(move || {
                        let mut found = Vec::new();
                        for cand in part {
                            let m = to_map(cand);
                            if predicate.evaluate(a, &m)?.passes() {
                                found.push(m);
                            }
                        }
                        Ok(found)
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("search worker panicked")).collect()
        });
        for r in results {
            hits.extend(r?);
        }
    }
    Ok(hits)
}

/// Sparse candidates as `(position index, value index)` lists.
struct Supports {
    npos: usize,
    nvals: usize,
    k: usize,
    combo: Vec<usize>,
    digits: Vec<usize>,
    done: bool,
}

impl Supports {
    fn new(npos: usize, nvals: usize) -> Self {
        Supports {
            npos,
            nvals,
            k: 0,
            combo: Vec::new(),
            digits: Vec::new(),
            done: false,
        }
    }

    fn advance(&mut self) {
        // values: last digit fastest
        for d in self.digits.iter_mut().rev() {
            *d += 1;
            if *d < self.nvals {
                return;
            }
            *d = 0;
        }
        // next support of the same size
        let k = self.k;
        if let Some(i) = (0..k).rev().find(|&i| self.combo[i] < self.npos - k + i) {
            self.combo[i] += 1;
            for j in i + 1..k {
                self.combo[j] = self.combo[j - 1] + 1;
            }
            return;
        }
        // next layer
        self.k += 1;
        if self.k > self.npos || self.nvals == 0 {
            self.done = true;
            return;
        }
        self.combo = (0..self.k).collect();
        self.digits = vec![0; self.k];
    }
}

impl Iterator for Supports {
    type Item = Vec<(usize, usize)>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let item = self.combo.iter().copied().zip(self.digits.iter().copied()).collect();
        self.advance();
        Some(item)
    }
}
