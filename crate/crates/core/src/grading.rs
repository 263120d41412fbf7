//! Finitely generated abelian grading groups and skew-symmetric bicharacters.
//!
//! A group `Z^r ⊕ Z_{n_1} ⊕ … ⊕ Z_{n_t}` has elements written as integer
//! vectors whose last `t` coordinates are reduced modulo the torsion orders. A
//! bicharacter is stored by its values `E[i][j] = ε(g_i, g_j)` on generators
//! and extended bi-multiplicatively:
//!
//! ```text
//! ε(a, c) = Π_{i,j} E[i][j]^(a_i · c_j)
//! ```
//!
//! Over the rationals the only roots of unity are `±1`, so torsion generators
//! can only carry sign-valued bicharacters there; richer colorings need a prime
//! field with `p ≡ 1 (mod n)`.

use std::fmt;

use crate::scalar::{Field, Scalar};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradeGroup {
    free_rank: usize,
    torsion: Vec<u64>,
}

impl GradeGroup {
    pub fn new(free_rank: usize, torsion: Vec<u64>) -> Result<Self> {
        if let Some(&n) = torsion.iter().find(|&&n| n < 2) {
            return Err(Error::BadTorsionOrder(n));
        }
        Ok(GradeGroup { free_rank, torsion })
    }

    /// The trivial group; every algebra over it is ungraded.
    pub fn trivial() -> Self {
        GradeGroup {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    /// `Z_n`
    pub fn cyclic(n: u64) -> Result<Self> {
        Self::new(0, vec![n])
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion_orders(&self) -> &[u64] {
        &self.torsion
    }

    pub fn generator_count(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    /// Order of generator `i`, or `None` for a free generator.
    pub fn generator_order(&self, i: usize) -> Option<u64> {
        i.checked_sub(self.free_rank).map(|t| self.torsion[t])
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Canonicalizes `coords` (torsion residues reduced into `[0, n)`).
    pub fn element(&self, coords: &[i64]) -> Result<GroupElement> {
        if coords.len() != self.generator_count() {
            return Err(Error::ElementLength {
                expected: self.generator_count(),
                found: coords.len(),
            });
        }
        Ok(self.reduce(coords.to_vec()))
    }

    fn reduce(&self, mut coords: Vec<i64>) -> GroupElement {
        for (t, &n) in self.torsion.iter().enumerate() {
            let c = &mut coords[self.free_rank + t];
            *c = c.rem_euclid(n as i64);
        }
        GroupElement(coords)
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement(vec![0; self.generator_count()])
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.reduce(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        self.reduce(a.0.iter().map(|x| -x).collect())
    }

    pub fn contains(&self, a: &GroupElement) -> bool {
        a.0.len() == self.generator_count()
            && self
                .torsion
                .iter()
                .enumerate()
                .all(|(t, &n)| (0..n as i64).contains(&a.0[self.free_rank + t]))
    }

    /// Every element whose free coordinates lie in `free_range`, in lexicographic order.
    pub fn elements_in_box(&self, free_range: std::ops::RangeInclusive<i64>) -> Vec<GroupElement> {
        let mut out = vec![Vec::new()];
        for g in 0..self.generator_count() {
            let choices: Vec<i64> = match self.generator_order(g) {
                None => free_range.clone().collect(),
                Some(n) => (0..n as i64).collect(),
            };
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    choices.iter().map(move |&c| {
                        let mut v = prefix.clone();
                        v.push(c);
                        v
                    })
                })
                .collect();
        }
        out.into_iter().map(GroupElement).collect()
    }
}

/// A canonical group element; equal elements have equal coordinate vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(Vec<i64>);

impl GroupElement {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Which bicharacter axiom a generator table violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BicharacterAxiom {
    /// `E[i][j] · E[j][i] = 1`
    Skew,
    /// `E[i][j]^n = E[j][i]^n = 1` when generator `i` has order `n`
    TorsionCompatibility,
    /// every entry nonzero
    Invertibility,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BicharacterViolation {
    pub axiom: BicharacterAxiom,
    pub i: usize,
    pub j: usize,
}

impl fmt::Display for BicharacterViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.axiom {
            BicharacterAxiom::Skew => "skew",
            BicharacterAxiom::TorsionCompatibility => "torsion-compatibility",
            BicharacterAxiom::Invertibility => "invertibility",
        };
        write!(f, "{name} at generators ({}, {})", self.i, self.j)
    }
}

/// Outcome of [`validate_bicharacter`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ValidationReport {
    Pass,
    Violation(BicharacterViolation),
}

impl ValidationReport {
    pub fn passes(&self) -> bool {
        matches!(self, ValidationReport::Pass)
    }
}

/// Checks the generator table against the axioms, in the order skew,
/// torsion compatibility, invertibility. A table of the wrong shape or with
/// scalars from another field is a structural error rather than a violation.
pub fn validate_bicharacter(
    field: Field,
    group: &GradeGroup,
    table: &[Vec<Scalar>],
) -> Result<ValidationReport> {
    let n = group.generator_count();
    if table.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: table.len(),
        });
    }
    for row in table {
        if row.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: row.len(),
            });
        }
        if row.iter().any(|s| s.field() != field) {
            return Err(Error::FieldMismatch);
        }
    }
    let violation = |axiom, i, j| Ok(ValidationReport::Violation(BicharacterViolation { axiom, i, j }));
    for i in 0..n {
        for j in 0..n {
            if !(&table[i][j] * &table[j][i]).is_one() {
                return violation(BicharacterAxiom::Skew, i, j);
            }
        }
    }
    for i in 0..n {
        let Some(order) = group.generator_order(i) else {
            continue;
        };
        for j in 0..n {
            let ok = |s: &Scalar| s.pow(order as i128).is_some_and(|p| p.is_one());
            if !ok(&table[i][j]) || !ok(&table[j][i]) {
                return violation(BicharacterAxiom::TorsionCompatibility, i, j);
            }
        }
    }
    for (i, row) in table.iter().enumerate() {
        if let Some(j) = row.iter().position(Scalar::is_zero) {
            return violation(BicharacterAxiom::Invertibility, i, j);
        }
    }
    Ok(ValidationReport::Pass)
}

/// A validated skew-symmetric bicharacter `ε : G × G → K*`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bicharacter {
    field: Field,
    group: GradeGroup,
    table: Vec<Vec<Scalar>>,
}

impl Bicharacter {
    pub fn new(field: Field, group: GradeGroup, table: Vec<Vec<Scalar>>) -> Result<Self> {
        match validate_bicharacter(field, &group, &table)? {
            ValidationReport::Pass => Ok(Bicharacter { field, group, table }),
            ValidationReport::Violation(v) => Err(Error::Bicharacter(v)),
        }
    }

    /// `ε ≡ 1` on any group.
    pub fn trivial(field: Field, group: GradeGroup) -> Self {
        let n = group.generator_count();
        Bicharacter {
            field,
            group,
            table: vec![vec![field.one(); n]; n],
        }
    }

    /// The ungraded setting: trivial group, trivial bicharacter.
    pub fn ungraded(field: Field) -> Self {
        Self::trivial(field, GradeGroup::trivial())
    }

    /// The super sign `ε(a, b) = (-1)^{ab}` on `Z_2`.
    pub fn super_sign(field: Field) -> Self {
        let group = GradeGroup::cyclic(2).expect("Z_2");
        Bicharacter {
            field,
            group,
            table: vec![vec![field.int(-1)]],
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn group(&self) -> &GradeGroup {
        &self.group
    }

    pub fn table(&self) -> &[Vec<Scalar>] {
        &self.table
    }

    /// `ε(a, c)` for canonical elements of the group.
    pub fn eval(&self, a: &GroupElement, c: &GroupElement) -> Scalar {
        let mut acc = self.field.one();
        for (i, &ai) in a.coords().iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &cj) in c.coords().iter().enumerate() {
                if cj == 0 {
                    continue;
                }
                let mut e = ai as i128 * cj as i128;
                // E[i][j] has order dividing n_i (resp. n_j) when i (resp. j) is torsion.
                if let Some(n) = self.group.generator_order(i).or(self.group.generator_order(j)) {
                    e = e.rem_euclid(n as i128);
                }
                let factor = self.table[i][j].pow(e).expect("bicharacter entries are invertible");
                acc = &acc * &factor;
            }
        }
        acc
    }
}
