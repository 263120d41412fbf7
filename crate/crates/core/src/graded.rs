//! Graded bases, homogeneous linear maps, and color Hom-algebras presented by
//! a dense structure tensor.

use crate::grading::{Bicharacter, GradeGroup, GroupElement};
use crate::linalg::{Matrix, Vector};
use crate::scalar::{Field, Scalar};
use crate::{Error, Result};

/// Degrees of the basis vectors `e_0, …, e_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedBasis {
    group: GradeGroup,
    degrees: Vec<GroupElement>,
}

impl GradedBasis {
    pub fn new(group: GradeGroup, degrees: Vec<GroupElement>) -> Result<Self> {
        if let Some(d) = degrees.iter().find(|d| !group.contains(d)) {
            return Err(Error::ElementLength {
                expected: group.generator_count(),
                found: d.coords().len(),
            });
        }
        Ok(GradedBasis { group, degrees })
    }

    /// `dim` basis vectors all of degree zero.
    pub fn trivial(group: GradeGroup, dim: usize) -> Self {
        let degrees = vec![group.zero(); dim];
        GradedBasis { group, degrees }
    }

    pub fn from_coords(group: GradeGroup, degrees: &[&[i64]]) -> Result<Self> {
        let degrees = degrees
            .iter()
            .map(|d| group.element(d))
            .collect::<Result<Vec<_>>>()?;
        Ok(GradedBasis { group, degrees })
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn group(&self) -> &GradeGroup {
        &self.group
    }

    pub fn degrees(&self) -> &[GroupElement] {
        &self.degrees
    }

    pub fn degree(&self, i: usize) -> &GroupElement {
        &self.degrees[i]
    }

    /// Concatenation: degrees of `self` followed by those of `other`.
    pub fn concat(&self, other: &GradedBasis) -> Result<GradedBasis> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        let mut degrees = self.degrees.clone();
        degrees.extend(other.degrees.iter().cloned());
        Ok(GradedBasis {
            group: self.group.clone(),
            degrees,
        })
    }

    /// Pairs `(i, p)` in row-major order with degree `deg(i) + deg'(p)`.
    pub fn tensor(&self, other: &GradedBasis) -> Result<GradedBasis> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        let degrees = self
            .degrees
            .iter()
            .flat_map(|a| other.degrees.iter().map(move |b| self.group.add(a, b)))
            .collect();
        Ok(GradedBasis {
            group: self.group.clone(),
            degrees,
        })
    }

    /// `Some(a)` when every nonzero coordinate of `v` sits on a basis vector of
    /// degree `a`; the zero vector reports `None` (it has every degree).
    pub fn homogeneous_degree(&self, v: &Vector) -> std::result::Result<Option<&GroupElement>, ()> {
        let mut deg = None;
        for i in v.support() {
            match deg {
                None => deg = Some(&self.degrees[i]),
                Some(d) if d == &self.degrees[i] => {}
                Some(_) => return Err(()),
            }
        }
        Ok(deg)
    }

    /// Splits `v` into homogeneous components, one per degree present.
    pub fn homogeneous_components(&self, v: &Vector) -> Vec<(GroupElement, Vector)> {
        let mut parts: Vec<(GroupElement, Vector)> = Vec::new();
        for i in v.support() {
            let d = &self.degrees[i];
            let slot = match parts.iter().position(|(e, _)| e == d) {
                Some(p) => p,
                None => {
                    parts.push((d.clone(), Vector::zeros(v.field(), v.len())));
                    parts.len() - 1
                }
            };
            parts[slot].1.set(i, v.get(i).clone());
        }
        parts
    }
}

/// A linear map homogeneous of a declared degree `d`: it sends degree `a` into
/// degree `a + d`. Degree zero means even.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedLinearMap {
    source: GradedBasis,
    target: GradedBasis,
    matrix: Matrix,
    degree: GroupElement,
}

impl GradedLinearMap {
    /// An endomorphism of `basis`.
    pub fn new(basis: GradedBasis, matrix: Matrix, degree: GroupElement) -> Result<Self> {
        Self::between(basis.clone(), basis, matrix, degree)
    }

    pub fn even(basis: GradedBasis, matrix: Matrix) -> Result<Self> {
        let zero = basis.group().zero();
        Self::new(basis, matrix, zero)
    }

    pub fn between(
        source: GradedBasis,
        target: GradedBasis,
        matrix: Matrix,
        degree: GroupElement,
    ) -> Result<Self> {
        if source.group() != target.group() {
            return Err(Error::GroupMismatch);
        }
        if matrix.cols() != source.dim() {
            return Err(Error::DimensionMismatch {
                expected: source.dim(),
                found: matrix.cols(),
            });
        }
        if matrix.rows() != target.dim() {
            return Err(Error::DimensionMismatch {
                expected: target.dim(),
                found: matrix.rows(),
            });
        }
        if !source.group().contains(&degree) {
            return Err(Error::ElementLength {
                expected: source.group().generator_count(),
                found: degree.coords().len(),
            });
        }
        for col in 0..matrix.cols() {
            let shifted = source.group().add(source.degree(col), &degree);
            for row in 0..matrix.rows() {
                if !matrix.get(row, col).is_zero() && target.degree(row) != &shifted {
                    return Err(Error::Homogeneity { row, col });
                }
            }
        }
        Ok(GradedLinearMap {
            source,
            target,
            matrix,
            degree,
        })
    }

    pub fn identity(basis: GradedBasis, field: Field) -> Self {
        let m = Matrix::identity(field, basis.dim());
        Self::even(basis, m).expect("identity is even")
    }

    pub fn zero(basis: GradedBasis, field: Field) -> Self {
        let m = Matrix::zeros(field, basis.dim(), basis.dim());
        Self::even(basis, m).expect("zero is even")
    }

    /// `λ · id`
    pub fn scalar(basis: GradedBasis, s: &Scalar) -> Self {
        let m = Matrix::scalar(s.field(), basis.dim(), s);
        Self::even(basis, m).expect("scalar maps are even")
    }

    pub fn source(&self) -> &GradedBasis {
        &self.source
    }

    pub fn target(&self) -> &GradedBasis {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn degree(&self) -> &GroupElement {
        &self.degree
    }

    pub fn is_even(&self) -> bool {
        self.degree.is_zero()
    }

    pub fn is_endomorphism(&self) -> bool {
        self.source == self.target
    }

    pub fn field(&self) -> Field {
        self.matrix.field()
    }

    pub fn apply(&self, x: &Vector) -> Result<Vector> {
        if x.len() != self.source.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.source.dim(),
                found: x.len(),
            });
        }
        Ok(self.matrix.apply(x))
    }

    /// Image of `e_i`.
    pub fn image(&self, i: usize) -> Vector {
        self.matrix.column(i)
    }

    /// `self ∘ other`, of degree `deg(self) + deg(other)`.
    pub fn compose(&self, other: &GradedLinearMap) -> Result<GradedLinearMap> {
        if other.target != self.source {
            return Err(Error::DimensionMismatch {
                expected: self.source.dim(),
                found: other.target.dim(),
            });
        }
        let degree = self.source.group().add(&self.degree, &other.degree);
        Ok(GradedLinearMap {
            source: other.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.mul(&other.matrix),
            degree,
        })
    }

    /// Exact inverse of an even endomorphism; singular maps are not regular.
    pub fn inverse(&self) -> Result<GradedLinearMap> {
        if !self.is_even() {
            return Err(Error::NotEven);
        }
        let inv = self.matrix.inverse().ok_or(Error::NotRegular)?;
        Ok(GradedLinearMap {
            source: self.target.clone(),
            target: self.source.clone(),
            matrix: inv,
            degree: self.degree.clone(),
        })
    }

    /// `self^n` for an even endomorphism.
    pub fn pow(&self, n: u32) -> GradedLinearMap {
        assert!(self.is_endomorphism() && self.is_even());
        GradedLinearMap {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.pow(n),
            degree: self.degree.clone(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.is_endomorphism() && self.matrix.is_identity()
    }
}

/// Dense tensor `c[i][j][k]` with `e_i · e_j = Σ_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StructureTensor {
    field: Field,
    dim: usize,
    data: Vec<Scalar>,
}

impl StructureTensor {
    pub fn zeros(field: Field, dim: usize) -> Self {
        StructureTensor {
            field,
            dim,
            data: vec![field.zero(); dim * dim * dim],
        }
    }

    /// Builds from sparse `(i, j, k, value)` entries; later entries overwrite earlier ones.
    pub fn from_entries(field: Field, dim: usize, entries: &[(usize, usize, usize, Scalar)]) -> Result<Self> {
        let mut t = Self::zeros(field, dim);
        for (i, j, k, v) in entries {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: (*i).max(*j).max(*k) + 1,
                });
            }
            if v.field() != field {
                return Err(Error::FieldMismatch);
            }
            t.set(*i, *j, *k, v.clone());
        }
        Ok(t)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn index(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[self.index(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Scalar) {
        assert_eq!(value.field(), self.field, "scalar field mismatch");
        let idx = self.index(i, j, k);
        self.data[idx] = value;
    }

    /// The vector `e_i · e_j`.
    pub fn product(&self, i: usize, j: usize) -> Vector {
        let start = self.index(i, j, 0);
        Vector::from_coords(self.field, self.data[start..start + self.dim].to_vec())
            .expect("tensor scalars share the field")
    }

    pub fn set_product(&mut self, i: usize, j: usize, v: &Vector) {
        for k in 0..self.dim {
            self.set(i, j, k, v.get(k).clone());
        }
    }

    /// Nonzero entries in lexicographic `(i, j, k)` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> + '_ {
        let n = self.dim;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(idx, v)| (idx / (n * n), (idx / n) % n, idx % n, v))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }
}

/// A color Hom-algebra `(A, ·, ε, α)`: a graded space with an even product, a
/// bicharacter on the grading group, and an even twisting map.
///
/// Immutable once built; constructions produce new algebras.
#[derive(Clone, Debug)]
pub struct ColorHomAlgebra {
    basis: GradedBasis,
    bicharacter: Bicharacter,
    structure: StructureTensor,
    alpha: GradedLinearMap,
    // ε(deg e_i, deg e_j), cached
    signs: Vec<Scalar>,
}

impl PartialEq for ColorHomAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis
            && self.bicharacter == other.bicharacter
            && self.structure == other.structure
            && self.alpha == other.alpha
    }
}

impl ColorHomAlgebra {
    /// Validates and assembles an algebra. Rejects, in order: group or field
    /// mismatches, shape mismatches, the first `(i, j, k)` where the product
    /// leaves degree `deg i + deg j`, and a non-even or non-endomorphic `α`.
    pub fn new(
        basis: GradedBasis,
        bicharacter: Bicharacter,
        structure: StructureTensor,
        alpha: GradedLinearMap,
    ) -> Result<Self> {
        if basis.group() != bicharacter.group() {
            return Err(Error::GroupMismatch);
        }
        let field = bicharacter.field();
        if structure.field() != field || alpha.field() != field {
            return Err(Error::FieldMismatch);
        }
        if structure.dim() != basis.dim() {
            return Err(Error::DimensionMismatch {
                expected: basis.dim(),
                found: structure.dim(),
            });
        }
        let group = basis.group();
        for (i, j, k, _) in structure.entries() {
            if basis.degree(k) != &group.add(basis.degree(i), basis.degree(j)) {
                return Err(Error::Evenness { i, j, k });
            }
        }
        if alpha.source() != &basis || alpha.target() != &basis {
            return Err(Error::DimensionMismatch {
                expected: basis.dim(),
                found: alpha.source().dim(),
            });
        }
        if !alpha.is_even() {
            return Err(Error::NotEven);
        }
        let n = basis.dim();
        let mut signs = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                signs.push(bicharacter.eval(basis.degree(i), basis.degree(j)));
            }
        }
        Ok(ColorHomAlgebra {
            basis,
            bicharacter,
            structure,
            alpha,
            signs,
        })
    }

    /// Same bicharacter and basis, with a new product and twisting map.
    pub fn with_parts(&self, structure: StructureTensor, alpha: GradedLinearMap) -> Result<Self> {
        Self::new(self.basis.clone(), self.bicharacter.clone(), structure, alpha)
    }

    pub fn with_structure(&self, structure: StructureTensor) -> Result<Self> {
        self.with_parts(structure, self.alpha.clone())
    }

    pub fn with_alpha(&self, alpha: GradedLinearMap) -> Result<Self> {
        self.with_parts(self.structure.clone(), alpha)
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn field(&self) -> Field {
        self.bicharacter.field()
    }

    pub fn basis(&self) -> &GradedBasis {
        &self.basis
    }

    pub fn bicharacter(&self) -> &Bicharacter {
        &self.bicharacter
    }

    pub fn structure(&self) -> &StructureTensor {
        &self.structure
    }

    pub fn alpha(&self) -> &GradedLinearMap {
        &self.alpha
    }

    /// `ε(e_i, e_j)`
    pub fn sign(&self, i: usize, j: usize) -> &Scalar {
        &self.signs[i * self.dim() + j]
    }

    pub fn degree(&self, i: usize) -> &GroupElement {
        self.basis.degree(i)
    }

    pub fn unit(&self, i: usize) -> Vector {
        Vector::unit(self.field(), self.dim(), i)
    }

    pub fn zero_vector(&self) -> Vector {
        Vector::zeros(self.field(), self.dim())
    }

    pub fn identity_map(&self) -> GradedLinearMap {
        GradedLinearMap::identity(self.basis.clone(), self.field())
    }

    /// `e_i · e_j`
    pub fn basis_product(&self, i: usize, j: usize) -> Vector {
        self.structure.product(i, j)
    }

    /// Bilinear extension of the structure tensor.
    pub fn product(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        for v in [x, y] {
            if v.len() != self.dim() {
                return Err(Error::DimensionMismatch {
                    expected: self.dim(),
                    found: v.len(),
                });
            }
        }
        Ok(self.mul(x, y))
    }

    /// [`product`](Self::product) for vectors already known to have the right length.
    pub(crate) fn mul(&self, x: &Vector, y: &Vector) -> Vector {
        let n = self.dim();
        let mut out = self.zero_vector();
        for i in x.support() {
            for j in y.support() {
                let s = x.get(i) * y.get(j);
                for k in 0..n {
                    let c = self.structure.get(i, j, k);
                    if !c.is_zero() {
                        let v = out.get(k) + &(&s * c);
                        out.set(k, v);
                    }
                }
            }
        }
        out
    }

    pub fn alpha_of(&self, x: &Vector) -> Vector {
        self.alpha.matrix().apply(x)
    }

    /// Whether `α ∘ m = m ∘ α`, by exact matrix equality.
    pub fn map_commutes_with_alpha(&self, m: &GradedLinearMap) -> bool {
        let a = self.alpha.matrix();
        a.mul(m.matrix()) == m.matrix().mul(a)
    }

    pub fn is_zero_product(&self) -> bool {
        self.structure.is_zero()
    }
}
