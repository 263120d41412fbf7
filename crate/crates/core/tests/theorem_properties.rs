//! Implications between identities, over the catalog and over random tensors.

use colorhom::catalog::{standard_recipes, InstanceRecipe};
use colorhom::checks::*;
use colorhom::constructions::commutator_algebra;
use colorhom::{ColorHomAlgebra, Field, GradedLinearMap, Matrix, StructureTensor};
use proptest::prelude::*;

fn instances() -> Vec<ColorHomAlgebra> {
    standard_recipes()
        .iter()
        .map(|r| r.materialize().unwrap().algebra)
        .collect()
}

fn assert_implications(a: &ColorHomAlgebra) {
    let novikov = check_hom_novikov(a).passes();
    if novikov {
        assert!(check_left_symmetric(a).passes());
        assert!(check_lemma_nl(a).passes());
        assert!(check_hom_lie(&commutator_algebra(a)).passes());
        assert!(check_lie_admissible(a).passes());
    }
    if check_hom_associative(a).passes() {
        assert!(check_lie_admissible(a).passes());
        if check_epsilon_commutative(a).passes() {
            assert!(novikov);
        }
    }
    if check_hom_lie(a).passes() {
        assert!(check_lie_admissible(a).passes());
    }
    // the second Novikov axiom is exactly the Hom-left-symmetric identity
    match check_hom_novikov(a).into_witness() {
        None => assert!(check_left_symmetric(a).passes()),
        Some(w) if w.identity == "n2" => {
            let l = check_left_symmetric(a).into_witness().unwrap();
            assert_eq!((l.indices, l.left, l.right), (w.indices, w.left, w.right));
        }
        Some(_) => {}
    }
}

#[test]
fn implications_over_catalog() {
    let all = instances();
    assert!(all.len() >= 15);
    for a in &all {
        assert_implications(a);
    }
}

#[test]
fn catalog_novikov_instances_are_lie_admissible() {
    let mut novikov = 0;
    for r in standard_recipes() {
        let inst = r.materialize().unwrap();
        if check_hom_novikov(&inst.algebra).passes() {
            novikov += 1;
            assert!(check_lemma_nl(&inst.algebra).passes(), "{r}");
            assert!(check_hom_lie(&commutator_algebra(&inst.algebra)).passes(), "{r}");
        }
    }
    assert!(novikov >= 12);
}

#[test]
fn colored_instance_is_genuinely_colored() {
    let p = InstanceRecipe::new("color_quantum_plane").materialize().unwrap().algebra;
    // y·x = ω⁻¹ x·y with ω ≠ ±1: the sign is neither commutative nor super
    let xy = p.basis_product(1, 2);
    let yx = p.basis_product(2, 1);
    assert_ne!(xy, yx);
    assert_ne!(xy, yx.scale(&p.field().int(-1)));
    assert!(check_hom_novikov(&p).passes());
    assert!(check_hom_lie(&commutator_algebra(&p)).passes());
}

const F5: Field = Field::Prime(5);

fn ungraded(dim: usize, entries: &[u8], alpha: Option<&[u8]>) -> ColorHomAlgebra {
    let base = colorhom::catalog::zero_algebra(F5, dim);
    let mut t = StructureTensor::zeros(F5, dim);
    for (idx, &v) in entries.iter().enumerate().take(dim * dim * dim) {
        t.set(idx / (dim * dim), (idx / dim) % dim, idx % dim, F5.int(v as i64));
    }
    let a = base.with_structure(t).unwrap();
    match alpha {
        None => a,
        Some(m) => {
            let rows: Vec<Vec<i64>> = (0..dim).map(|r| (0..dim).map(|c| m[r * dim + c] as i64).collect()).collect();
            let rows: Vec<&[i64]> = rows.iter().map(|r| &r[..]).collect();
            let map = GradedLinearMap::even(a.basis().clone(), Matrix::from_int_rows(F5, &rows)).unwrap();
            a.with_alpha(map).unwrap()
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn implications_over_random_tensors(
        dim in 1usize..=3,
        entries in prop::collection::vec(prop::sample::select(vec![0u8, 0, 0, 1, 2, 4]), 27),
        alpha in prop::option::of(prop::collection::vec(0u8..5, 9)),
    ) {
        let a = ungraded(dim, &entries, alpha.as_deref());
        assert_implications(&a);
    }

    #[test]
    fn commutator_is_skew_for_every_tensor(
        dim in 1usize..=3,
        entries in prop::collection::vec(0u8..5, 27),
    ) {
        let a = ungraded(dim, &entries, None);
        let c = commutator_algebra(&a);
        for i in 0..dim {
            for j in 0..dim {
                prop_assert_eq!(c.basis_product(i, j), c.basis_product(j, i).scale(&F5.int(-1)));
            }
        }
    }
}
