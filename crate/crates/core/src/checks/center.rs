use super::{compare, require_even_endomorphism, scan_pairs, scan_triples, Tables, Verdict, Witness};
use crate::graded::{ColorHomAlgebra, GradedLinearMap};
use crate::linalg::Vector;
use crate::{Error, Result};

/// Whether `[x, α(y)] = 0` for every `y`, i.e. `x ∈ Z(α(L))`.
pub fn in_alpha_center(l: &ColorHomAlgebra, x: &Vector) -> Result<bool> {
    if x.len() != l.dim() {
        return Err(Error::DimensionMismatch {
            expected: l.dim(),
            found: x.len(),
        });
    }
    Ok(center_failure(&Tables::new(l), x).is_none())
}

fn center_failure(t: &Tables, x: &Vector) -> Option<(usize, Vector)> {
    (0..t.n()).find_map(|k| {
        let v = t.mul(x, t.al(k));
        (!v.is_zero()).then_some((k, v))
    })
}

/// For the product `x ∗ y = [f(x), y]` on a Hom-Lie algebra `l`:
///
/// * (f) `f([f(x), y] + [x, f(y)]) − [f(x), f(y)] ∈ Z(α(L))`, on basis pairs
///   `(i, j)`, reporting the offending `α(e_k)` as the third index;
/// * (g) `[f([f(x), y]), α(z)] = ε(y, z)[f([f(x), z]), α(y)]`, on basis triples.
pub fn check_f_conditions(l: &ColorHomAlgebra, f: &GradedLinearMap) -> Result<Verdict> {
    require_even_endomorphism(l, f)?;
    let t = Tables::new(l);
    let n = l.dim();
    let fm = f.matrix();
    let images: Vec<_> = (0..n).map(|i| f.image(i)).collect();
    Ok(scan_pairs(n, |i, j| {
        let inner = t.mul(&images[i], &l.unit(j)).add(&t.mul(&l.unit(i), &images[j]));
        let defect = fm.apply(&inner).sub(&t.mul(&images[i], &images[j]));
        center_failure(&t, &defect).map(|(k, v)| Witness {
            identity: "f-condition",
            indices: vec![i, j, k],
            left: v,
            right: l.zero_vector(),
        })
    })
    .and_then(|| {
        // f([f(e_i), e_j]) for all pairs
        let fb: Vec<_> = (0..n * n)
            .map(|ij| fm.apply(&t.mul(&images[ij / n], &l.unit(ij % n))))
            .collect();
        scan_triples(n, |i, j, k| {
            let left = t.mul(&fb[i * n + j], t.al(k));
            let right = t.mul(&fb[i * n + k], t.al(j)).scale(l.sign(j, k));
            compare("g-condition", &[i, j, k], left, right)
        })
    }))
}
