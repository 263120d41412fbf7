use super::{compare, scan_pairs, scan_singles, scan_triples, Tables, Verdict, Witness};
use crate::constructions::commutator_algebra;
use crate::graded::ColorHomAlgebra;

/// `x·y = ε(x, y) y·x`
pub fn check_epsilon_commutative(a: &ColorHomAlgebra) -> Verdict {
    let t = Tables::new(a);
    scan_pairs(a.dim(), |i, j| {
        compare("epsilon-commutativity", &[i, j], t.p(i, j).clone(), t.p(j, i).scale(a.sign(i, j)))
    })
}

/// `α(x)·(y·z) = (x·y)·α(z)`
pub fn check_hom_associative(a: &ColorHomAlgebra) -> Verdict {
    let t = Tables::new(a);
    scan_triples(a.dim(), |i, j, k| {
        let left = t.mul(t.al(i), t.p(j, k));
        let right = t.mul(t.p(i, j), t.al(k));
        compare("hom-associativity", &[i, j, k], left, right)
    })
}

fn n1(t: &Tables, i: usize, j: usize, k: usize) -> Option<Witness> {
    let left = t.mul(t.p(i, j), t.al(k));
    let right = t.mul(t.p(i, k), t.al(j)).scale(t.a.sign(j, k));
    compare("n1", &[i, j, k], left, right)
}

/// Hom-left-symmetric identity:
/// `(x·y)·α(z) − α(x)·(y·z) = ε(x, y)((y·x)·α(z) − α(y)·(x·z))`
fn left_symmetric(t: &Tables, name: &'static str, i: usize, j: usize, k: usize) -> Option<Witness> {
    let left = t.mul(t.p(i, j), t.al(k)).sub(&t.mul(t.al(i), t.p(j, k)));
    let right = t
        .mul(t.p(j, i), t.al(k))
        .sub(&t.mul(t.al(j), t.p(i, k)))
        .scale(t.a.sign(i, j));
    compare(name, &[i, j, k], left, right)
}

/// Both Hom-Novikov axioms: (n1) on every triple, then (n2).
pub fn check_hom_novikov(a: &ColorHomAlgebra) -> Verdict {
    let t = Tables::new(a);
    scan_triples(a.dim(), |i, j, k| n1(&t, i, j, k))
        .and_then(|| scan_triples(a.dim(), |i, j, k| left_symmetric(&t, "n2", i, j, k)))
}

pub fn check_left_symmetric(a: &ColorHomAlgebra) -> Verdict {
    let t = Tables::new(a);
    scan_triples(a.dim(), |i, j, k| left_symmetric(&t, "hom-left-symmetry", i, j, k))
}

/// Treats the product as a bracket: ε-skew-symmetry on pairs, then the
/// ε-Hom-Jacobi identity `Σ_cyclic ε(z, x)[α(x), [y, z]] = 0` on triples.
pub fn check_hom_lie(a: &ColorHomAlgebra) -> Verdict {
    let t = Tables::new(a);
    let n = a.dim();
    scan_pairs(n, |i, j| {
        let left = t.p(i, j).clone();
        let right = t.p(j, i).scale(&-a.sign(i, j));
        compare("epsilon-skew-symmetry", &[i, j], left, right)
    })
    .and_then(|| {
        scan_triples(n, |i, j, k| {
            let mut sum = t.mul(t.al(i), t.p(j, k)).scale(a.sign(k, i));
            sum = sum.add(&t.mul(t.al(j), t.p(k, i)).scale(a.sign(i, j)));
            sum = sum.add(&t.mul(t.al(k), t.p(i, j)).scale(a.sign(j, k)));
            compare("epsilon-hom-jacobi", &[i, j, k], sum, a.zero_vector())
        })
    })
}

/// The ε-commutator `x·y − ε(x, y) y·x` satisfies the ε-Hom-Jacobi identity.
pub fn check_lie_admissible(a: &ColorHomAlgebra) -> Verdict {
    check_hom_lie(&commutator_algebra(a))
}

/// The two cyclic identities satisfied by the commutator of a Hom-Novikov algebra:
///
/// ```text
/// ε(z,x)[x,y]·α(z) + ε(x,y)[y,z]·α(x) + ε(y,z)[z,x]·α(y) = 0
/// ε(z,x)α(x)·[y,z] + ε(x,y)α(y)·[z,x] + ε(y,z)α(z)·[x,y] = 0
/// ```
pub fn check_lemma_nl(a: &ColorHomAlgebra) -> Verdict {
    let t = Tables::new(a);
    let n = a.dim();
    let br: Vec<_> = (0..n * n).map(|ij| t.commutator(ij / n, ij % n)).collect();
    let b = |i: usize, j: usize| &br[i * n + j];
    scan_triples(n, |x, y, z| {
        let s = t.mul(b(x, y), t.al(z)).scale(a.sign(z, x));
        let s = s.add(&t.mul(b(y, z), t.al(x)).scale(a.sign(x, y)));
        let s = s.add(&t.mul(b(z, x), t.al(y)).scale(a.sign(y, z)));
        compare("commutator-right-cyclic", &[x, y, z], s, a.zero_vector())
    })
    .and_then(|| {
        scan_triples(n, |x, y, z| {
            let s = t.mul(t.al(x), b(y, z)).scale(a.sign(z, x));
            let s = s.add(&t.mul(t.al(y), b(z, x)).scale(a.sign(x, y)));
            let s = s.add(&t.mul(t.al(z), b(x, y)).scale(a.sign(y, z)));
            compare("commutator-left-cyclic", &[x, y, z], s, a.zero_vector())
        })
    })
}

/// `α(x·y) = α(x)·α(y)`
pub fn check_multiplicative(a: &ColorHomAlgebra) -> Verdict {
    let t = Tables::new(a);
    scan_pairs(a.dim(), |i, j| {
        compare("alpha-multiplicative", &[i, j], a.alpha_of(t.p(i, j)), t.mul(t.al(i), t.al(j)))
    })
}

/// `α` is an automorphism: multiplicative and invertible. A singular `α`
/// fails with a kernel vector on the left and zero on the right.
pub fn check_regular(a: &ColorHomAlgebra) -> Verdict {
    check_multiplicative(a).and_then(|| match a.alpha().matrix().kernel_vector() {
        None => Verdict::pass(),
        Some(v) => Verdict::fail(Witness {
            identity: "alpha-injective",
            indices: vec![],
            left: v,
            right: a.zero_vector(),
        }),
    })
}

/// `α² = id`
pub fn check_involutive(a: &ColorHomAlgebra) -> Verdict {
    scan_singles(a.dim(), |i| compare("alpha-involution", &[i], a.alpha_of(&a.alpha().image(i)), a.unit(i)))
}
