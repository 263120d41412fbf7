use super::{
    check_commutes_with_alpha, compare, require_even_endomorphism, scan_pairs, scan_singles, Side, Tables, Verdict,
};
use crate::graded::{ColorHomAlgebra, GradedLinearMap};
use crate::grading::GroupElement;
use crate::scalar::Scalar;
use crate::{Error, Result};

/// `f(x·y) = f(x)·'f(y)` for an even `f : A → A'`.
pub fn is_weak_morphism(a: &ColorHomAlgebra, target: &ColorHomAlgebra, f: &GradedLinearMap) -> Result<Verdict> {
    if f.source() != a.basis() || f.target() != target.basis() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: f.source().dim(),
        });
    }
    if a.field() != target.field() || f.field() != a.field() {
        return Err(Error::FieldMismatch);
    }
    if !f.is_even() {
        return Err(Error::NotEven);
    }
    let src = Tables::new(a);
    let tgt = Tables::new(target);
    let images: Vec<_> = (0..a.dim()).map(|i| f.image(i)).collect();
    Ok(scan_pairs(a.dim(), |i, j| {
        let left = f.matrix().apply(src.p(i, j));
        let right = tgt.mul(&images[i], &images[j]);
        compare("weak-morphism", &[i, j], left, right)
    }))
}

/// A weak morphism with `f ∘ α = α' ∘ f`.
pub fn is_morphism(a: &ColorHomAlgebra, target: &ColorHomAlgebra, f: &GradedLinearMap) -> Result<Verdict> {
    Ok(is_weak_morphism(a, target, f)?.and_then(|| {
        scan_singles(a.dim(), |i| {
            let left = f.matrix().apply(&a.alpha().image(i));
            let right = target.alpha_of(&f.image(i));
            compare("morphism-alpha", &[i], left, right)
        })
    }))
}

/// `D(x·y) = D(x)·y + ε(d, x) x·D(y)` for a map `D` of degree `d`.
pub fn is_derivation(a: &ColorHomAlgebra, d_map: &GradedLinearMap, degree: &GroupElement) -> Result<Verdict> {
    if d_map.source() != a.basis() || d_map.target() != a.basis() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: d_map.source().dim(),
        });
    }
    if d_map.degree() != degree {
        return Err(Error::Parameter(format!(
            "map has degree {}, derivation degree {} requested",
            d_map.degree(),
            degree
        )));
    }
    let t = Tables::new(a);
    let bich = a.bicharacter();
    let signs: Vec<Scalar> = (0..a.dim()).map(|i| bich.eval(degree, a.degree(i))).collect();
    let images: Vec<_> = (0..a.dim()).map(|i| d_map.image(i)).collect();
    Ok(scan_pairs(a.dim(), |i, j| {
        let left = d_map.matrix().apply(t.p(i, j));
        let right = t
            .mul(&images[i], &a.unit(j))
            .add(&t.mul(&a.unit(i), &images[j]).scale(&signs[i]));
        compare("leibniz", &[i, j], left, right)
    }))
}

/// Left: `β(x)·β(y) = β(β(x)·y)`; right: `β(x)·β(y) = β(x·β(y))`; after `α∘β = β∘α`.
pub fn is_averaging(a: &ColorHomAlgebra, beta: &GradedLinearMap, side: Side) -> Result<Verdict> {
    require_even_endomorphism(a, beta)?;
    let t = Tables::new(a);
    let images: Vec<_> = (0..a.dim()).map(|i| beta.image(i)).collect();
    let b = |v: &crate::Vector| beta.matrix().apply(v);
    Ok(check_commutes_with_alpha(a, beta).and_then(|| {
        scan_pairs(a.dim(), |i, j| {
            let both = t.mul(&images[i], &images[j]);
            if side.left() {
                let w = compare("left-averaging", &[i, j], both.clone(), b(&t.mul(&images[i], &a.unit(j))));
                if w.is_some() {
                    return w;
                }
            }
            if side.right() {
                return compare("right-averaging", &[i, j], both, b(&t.mul(&a.unit(i), &images[j])));
            }
            None
        })
    }))
}

/// Left: `β(x·y) = β(x)·y`; right: `β(x·y) = x·β(y)`; after `α∘β = β∘α`.
pub fn is_centroid(a: &ColorHomAlgebra, beta: &GradedLinearMap, side: Side) -> Result<Verdict> {
    require_even_endomorphism(a, beta)?;
    let t = Tables::new(a);
    let images: Vec<_> = (0..a.dim()).map(|i| beta.image(i)).collect();
    Ok(check_commutes_with_alpha(a, beta).and_then(|| {
        scan_pairs(a.dim(), |i, j| {
            let image = beta.matrix().apply(t.p(i, j));
            if side.left() {
                let w = compare("left-centroid", &[i, j], image.clone(), t.mul(&images[i], &a.unit(j)));
                if w.is_some() {
                    return w;
                }
            }
            if side.right() {
                return compare("right-centroid", &[i, j], image, t.mul(&a.unit(i), &images[j]));
            }
            None
        })
    }))
}

/// `R∘α = α∘R` and `[R(x), R(y)] = R([R(x), y] + [x, R(y)] + λ[x, y])`,
/// reading the product of `l` as the bracket.
pub fn is_rota_baxter(l: &ColorHomAlgebra, r: &GradedLinearMap, weight: &Scalar) -> Result<Verdict> {
    require_even_endomorphism(l, r)?;
    let t = Tables::new(l);
    let images: Vec<_> = (0..l.dim()).map(|i| r.image(i)).collect();
    Ok(check_commutes_with_alpha(l, r).and_then(|| {
        scan_pairs(l.dim(), |i, j| {
            let left = t.mul(&images[i], &images[j]);
            let inner = t
                .mul(&images[i], &l.unit(j))
                .add(&t.mul(&l.unit(i), &images[j]))
                .add(&t.p(i, j).scale(weight));
            compare("rota-baxter", &[i, j], left, r.matrix().apply(&inner))
        })
    }))
}
