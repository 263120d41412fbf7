//! One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
//! Every comparison is exact.

use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};
use std::time::Instant;

use colorhom::catalog::{
    anti_diagonal_form, color_quantum_plane, dt_derivation, dt_novikov, euler_derivation, euler_novikov,
    involutive_quadratic, mixed_bicharacter, search_maps, solvable_bracket, standard_recipes, super_commutative_line,
    truncated_polynomial, SearchPredicate,
};
use colorhom::checks::{self, Verdict};
use colorhom::constructions::{self, Mode};
use colorhom::quadratic::{self, BilinearFormStructure};
use colorhom::{
    Bicharacter, ColorHomAlgebra, Error, Field, GradedLinearMap, GroupElement, Matrix, Scalar, StructureTensor, Vector,
};
use colorhom_cli::{parse, serialize};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const Q: Field = Field::Rational;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn verdict(v: &Verdict, what: &str) -> Result<(), String> {
    match v.witness() {
        None => Ok(()),
        Some(w) => Err(format!("{what}: {w}")),
    }
}

fn kernel<T>(r: colorhom::Result<T>, what: &str) -> Result<T, String> {
    r.map_err(|e| format!("{what}: {e}"))
}

/// Catalog instances that are Hom-Novikov, by name.
fn novikov_catalog() -> Result<Vec<(String, ColorHomAlgebra)>, String> {
    let mut out = Vec::new();
    for r in standard_recipes() {
        let inst = kernel(r.materialize(), "materialize")?;
        if checks::check_hom_novikov(&inst.algebra).passes() {
            out.push((inst.name, inst.algebra));
        }
    }
    ensure(out.len() >= 3, format!("only {} Novikov instances in the catalog", out.len()))?;
    Ok(out)
}

fn bicharacter_laws(bich: &Bicharacter, box_range: std::ops::RangeInclusive<i64>) -> Result<usize, String> {
    let g = bich.group();
    let elems = g.elements_in_box(box_range);
    let e = |a: &GroupElement, b: &GroupElement| bich.eval(a, b);
    let one = bich.field().one();
    let mut count = 0;
    for a in &elems {
        for b in &elems {
            ensure(&e(a, b) * &e(b, a) == one, format!("(i) fails at {a}, {b}"))?;
            for c in &elems {
                let ab = g.add(a, b);
                let bc = g.add(b, c);
                ensure(e(&ab, c) == &e(a, c) * &e(b, c), format!("(ii) fails at {a}, {b}, {c}"))?;
                ensure(e(a, &bc) == &e(a, b) * &e(a, c), format!("(iii) fails at {a}, {b}, {c}"))?;
                count += 1;
            }
        }
    }
    Ok(count)
}

fn criterion_1() -> Outcome {
    let sup = Bicharacter::super_sign(Q);
    let n_super = bicharacter_laws(&sup, 0..=0)?;
    let mixed = kernel(mixed_bicharacter(Field::Prime(7)), "mixed bicharacter")?;
    let n_mixed = bicharacter_laws(&mixed, -3..=3)?;
    ensure(n_mixed == 21 * 21 * 21, format!("mixed grid has {n_mixed} triples"))?;
    Ok(format!("{n_super} super triples, {n_mixed} mixed triples over F7"))
}

fn criterion_2() -> Outcome {
    let mut algebras: Vec<(String, ColorHomAlgebra)> =
        (1..=5).map(|n| (format!("K[t]/(t^{n})"), truncated_polynomial(n, Q))).collect();
    algebras.push(("super line".into(), super_commutative_line(Q)));
    for (name, a) in &algebras {
        verdict(&checks::check_epsilon_commutative(a), name)?;
        verdict(&checks::check_hom_associative(a), name)?;
        verdict(&checks::check_hom_novikov(a), name)?;
    }
    Ok(format!("{} algebras", algebras.len()))
}

fn criterion_3() -> Outcome {
    let mut failing = Vec::new();
    let mut total = 0;
    for field in [Q, Field::Prime(5)] {
        for n in 2..=5 {
            let a = truncated_polynomial(n, field);
            let out = kernel(
                constructions::derivation_product(&a, &dt_derivation(&a), Mode::Unchecked),
                "derivation_product",
            )?;
            total += 1;
            if let Some(w) = checks::check_hom_novikov(&out).witness() {
                failing.push(format!("{field} n={n} ({w})"));
            }
        }
    }
    let a = truncated_polynomial(3, Q);
    let out = kernel(
        constructions::derivation_product(&a, &dt_derivation(&a), Mode::Unchecked),
        "derivation_product",
    )?;
    let e1e2 = out.basis_product(1, 2);
    ensure(e1e2 == Vector::from_ints(Q, &[0, 0, 2]), format!("e_1*e_2 = {e1e2}"))?;
    if failing.is_empty() {
        Ok(format!("{total} cases, e_1*e_2 = 2e_2"))
    } else {
        Err(format!("{} of {total} cases fail: {}", failing.len(), failing.join("; ")))
    }
}

fn criterion_4() -> Outcome {
    let instances = novikov_catalog()?;
    for (name, a) in &instances {
        verdict(&checks::check_lemma_nl(a), name)?;
        verdict(&checks::check_hom_lie(&constructions::commutator_algebra(a)), name)?;
        verdict(&checks::check_lie_admissible(a), name)?;
    }
    Ok(format!("{} instances", instances.len()))
}

fn perturbed(a: &ColorHomAlgebra, i: usize, j: usize, k: usize) -> Result<ColorHomAlgebra, String> {
    let mut t: StructureTensor = a.structure().clone();
    let v = a.structure().get(i, j, k) + &a.field().one();
    t.set(i, j, k, v);
    kernel(a.with_structure(t), "perturb")
}

/// Runs `f` on every map across threads; the first error in map order wins.
fn for_each_map(
    maps: &[GradedLinearMap],
    f: impl Fn(&GradedLinearMap) -> Result<(), String> + Sync,
) -> Result<usize, String> {
    let threads = std::thread::available_parallelism().map_or(1, |t| t.get());
    let chunk = maps.len().div_ceil(threads).max(1);
    std::thread::scope(|s| {
        let handles: Vec<_> = maps
            .chunks(chunk)
            .map(|part| s.spawn(|| part.iter().try_for_each(&f)))
            .collect();
        handles.into_iter().try_for_each(|h| h.join().expect("worker panicked"))
    })?;
    Ok(maps.len())
}

fn criterion_5() -> Outcome {
    let mut pairs = 0;
    let mut morphism_pairs = 0;
    for (name, a) in novikov_catalog()?.into_iter().filter(|(_, a)| a.dim() <= 3) {
        let weak = kernel(search_maps(&a, &SearchPredicate::WeakMorphism, 0, 10_000), "search")?;
        pairs += for_each_map(&weak, |beta| {
            let out = kernel(constructions::yau_twist(&a, beta, Mode::Strict), "yau_twist")?;
            verdict(&checks::check_hom_novikov(&out), &format!("{name} twisted by {}", beta.matrix()))
        })?;
        if checks::check_multiplicative(&a).passes() {
            let morphisms = kernel(search_maps(&a, &SearchPredicate::Morphism, 0, 10_000), "search")?;
            morphism_pairs += for_each_map(&morphisms, |beta| {
                let out = kernel(constructions::yau_twist(&a, beta, Mode::Strict), "yau_twist")?;
                verdict(&checks::check_multiplicative(&out), &format!("{name} twisted by {}", beta.matrix()))
            })?;
        }
    }
    ensure(pairs > 0 && morphism_pairs > 0, "search found nothing")?;

    let a = euler_novikov(3, Q);
    let beta = GradedLinearMap::even(a.basis().clone(), Matrix::from_int_rows(Q, &[&[1, 0, 0], &[0, 2, 0], &[0, 0, 4]]))
        .map_err(|e| e.to_string())?;
    let twisted = kernel(constructions::yau_twist(&a, &beta, Mode::Strict), "yau_twist")?;
    verdict(&checks::check_hom_novikov(&twisted), "control before perturbation")?;
    let broken = perturbed(&twisted, 0, 2, 2)?;
    let w = checks::check_hom_novikov(&broken);
    let w = w.witness().ok_or("perturbed constant still passes")?;
    ensure(w.indices.len() == 3, "witness is not a triple")?;
    Ok(format!(
        "{pairs} weak-morphism twists Novikov, {morphism_pairs} morphism twists multiplicative; perturbed: {w}"
    ))
}

fn criterion_6() -> Outcome {
    let instances = novikov_catalog()?;
    for (name, a) in &instances {
        for lambda in [1, 2, -1] {
            let beta = GradedLinearMap::scalar(a.basis().clone(), &a.field().int(lambda));
            let out = kernel(constructions::centroid_twist(a, &beta, Mode::Strict), "centroid_twist")?;
            verdict(&checks::check_hom_novikov(&out), &format!("{name}, lambda = {lambda}"))?;
        }
    }
    let a = truncated_polynomial(3, Q);
    let out = kernel(constructions::xi_square_twist(&a, &a.unit(1), Mode::Strict), "xi_square_twist")?;
    verdict(&checks::check_hom_associative(&out), "xi twist")?;
    verdict(&checks::check_epsilon_commutative(&out), "xi twist")?;
    ensure(out.alpha() == &a.alpha().pow(2), "xi twist map is not alpha squared")?;
    for i in 0..3 {
        for j in 0..3 {
            let expected = if i + j + 1 < 3 { a.unit(i + j + 1) } else { a.zero_vector() };
            ensure(out.basis_product(i, j) == expected, format!("e_{i}*e_{j} = {}", out.basis_product(i, j)))?;
        }
    }
    Ok(format!("{} instances x 3 scalars; e_i*e_j = e_(i+j+1)", instances.len()))
}

fn criterion_7() -> Outcome {
    let square = truncated_polynomial(2, Q);
    // The derivations of K[t]/(t^2) are the multiples of t d/dt. The d/dt
    // product is Novikov all the same, so both serve as first factor.
    let euler_nov = kernel(
        constructions::derivation_product(&square, &euler_derivation(&square), Mode::Strict),
        "derivation_product",
    )?;
    let nov = kernel(
        constructions::derivation_product(&square, &dt_derivation(&square), Mode::Unchecked),
        "derivation_product",
    )?;
    verdict(&checks::check_hom_novikov(&nov), "d/dt factor")?;
    for (name, first) in [("t d/dt", &euler_nov), ("d/dt", &nov)] {
        let t = kernel(constructions::tensor_product(first, &square, Mode::Strict), "tensor_product")?;
        ensure(t.dim() == 4, format!("{name} tensor has dimension {}", t.dim()))?;
        verdict(&checks::check_hom_novikov(&t), &format!("{name} tensor"))?;
    }

    let cubic = truncated_polynomial(3, Q);
    let euler = kernel(
        constructions::derivation_product(&cubic, &euler_derivation(&cubic), Mode::Strict),
        "derivation_product",
    )?;
    let sum = kernel(constructions::direct_sum(&euler, &dt_novikov(2, Q)), "direct_sum")?;
    verdict(&checks::check_hom_novikov(&sum), "direct sum")?;

    match constructions::tensor_product(&nov, &solvable_bracket(Q), Mode::Strict) {
        Err(Error::Precondition { hypothesis, .. }) => Ok(format!("dim 4 tensor; rejected: {hypothesis}")),
        Err(e) => Err(format!("wrong rejection: {e}")),
        Ok(_) => Err("non-commutative second factor accepted".into()),
    }
}

fn criterion_8() -> Outcome {
    let a = truncated_polynomial(3, Q);
    let anti = anti_diagonal_form(&a);
    ensure(anti.determinant() == Q.int(-1), format!("det = {}", anti.determinant()))?;
    verdict(&kernel(quadratic::check_quadratic_structure(&a, &anti), "quadratic")?, "anti-diagonal")?;

    let ident = kernel(BilinearFormStructure::plain(&a, Matrix::identity(Q, 3)), "identity form")?;
    let v = kernel(quadratic::check_quadratic_structure(&a, &ident), "quadratic")?;
    let w = v.witness().ok_or("identity form passes")?;
    ensure(
        w.identity == "(d) invariance" && w.indices == [1, 1, 0],
        format!("identity form witness: {w}"),
    )?;

    let (bracket, form) = kernel(quadratic::quadratic_commutator(&a, &anti, Mode::Strict), "quadratic_commutator")?;
    let mut triples = 0;
    for x in 0..3 {
        for y in 0..3 {
            for z in 0..3 {
                let left = form.eval(&bracket.basis_product(x, y), &a.unit(z));
                let right = form.eval(&a.unit(x), &bracket.basis_product(y, z));
                ensure(left == right, format!("bracket invariance fails at ({x}, {y}, {z})"))?;
                triples += 1;
            }
        }
    }

    let pred = SearchPredicate::SymmetricAutomorphism(anti.clone());
    let found = kernel(search_maps(&a, &pred, 0, 10_000), "search")?;
    let nontrivial: Vec<_> = found.iter().filter(|m| !m.is_identity()).collect();
    ensure(!nontrivial.is_empty(), "no non-identity symmetric automorphism found")?;
    for beta in &nontrivial {
        let (tw, f) = kernel(quadratic::quadratic_yau_twist(&a, &anti, beta, Mode::Strict), "quadratic_yau_twist")?;
        verdict(&kernel(quadratic::check_quadratic_structure(&tw, &f), "quadratic")?, "quadratic yau twist")?;
    }

    let (inv, inv_form) = involutive_quadratic(Q);
    let (un, _) = kernel(
        quadratic::quadratic_untwist_involutive(&inv, &inv_form, Mode::Strict),
        "quadratic_untwist_involutive",
    )?;
    verdict(&checks::check_hom_novikov(&un), "untwisted")?;
    ensure(un.alpha().is_identity(), "untwisted map is not the identity")?;
    Ok(format!(
        "det -1; identity form fails at {:?}; {triples} bracket triples; {} symmetric automorphisms",
        w.indices,
        nontrivial.len()
    ))
}

/// Evaluates identities on arbitrary vectors straight from the structure
/// constants, splitting each vector into homogeneous components for the signs.
struct Oracle<'a> {
    a: &'a ColorHomAlgebra,
}

type Hom = (GroupElement, Vec<Scalar>);

impl<'a> Oracle<'a> {
    fn zero(&self) -> Vec<Scalar> {
        vec![self.a.field().zero(); self.a.dim()]
    }

    fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.a.dim();
        let mut out = self.zero();
        for i in 0..n {
            for j in 0..n {
                let xy = &x[i] * &y[j];
                if xy.is_zero() {
                    continue;
                }
                for (k, o) in out.iter_mut().enumerate() {
                    *o += &(&xy * self.a.structure().get(i, j, k));
                }
            }
        }
        out
    }

    fn alpha(&self, x: &[Scalar]) -> Vec<Scalar> {
        let m = self.a.alpha().matrix();
        (0..self.a.dim())
            .map(|r| x.iter().enumerate().fold(self.a.field().zero(), |acc, (c, v)| &acc + &(m.get(r, c) * v)))
            .collect()
    }

    fn eps(&self, g: &GroupElement, h: &GroupElement) -> Scalar {
        self.a.bicharacter().eval(g, h)
    }

    fn components(&self, x: &[Scalar]) -> Vec<Hom> {
        let mut out: Vec<Hom> = Vec::new();
        for (i, v) in x.iter().enumerate() {
            let d = self.a.degree(i);
            let slot = match out.iter().position(|(g, _)| g == d) {
                Some(p) => p,
                None => {
                    out.push((d.clone(), self.zero()));
                    out.len() - 1
                }
            };
            out[slot].1[i] = v.clone();
        }
        out
    }

    fn bracket(&self, x: &Hom, y: &Hom) -> Vec<Scalar> {
        sub(&self.mul(&x.1, &y.1), &scale(&self.mul(&y.1, &x.1), &self.eps(&x.0, &y.0)))
    }
}

fn sub(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

fn add(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

fn scale(x: &[Scalar], s: &Scalar) -> Vec<Scalar> {
    x.iter().map(|a| a * s).collect()
}

/// Residuals of one identity on homogeneous arguments.
type Identity = fn(&Oracle, &Hom, &Hom, &Hom) -> Vec<Vec<Scalar>>;

fn identities() -> Vec<(&'static str, fn(&ColorHomAlgebra) -> Verdict, Identity)> {
    vec![
        ("epsilon_commutative", checks::check_epsilon_commutative, |o, x, y, _| {
            vec![sub(&o.mul(&x.1, &y.1), &scale(&o.mul(&y.1, &x.1), &o.eps(&x.0, &y.0)))]
        }),
        ("hom_associative", checks::check_hom_associative, |o, x, y, z| {
            vec![sub(&o.mul(&o.alpha(&x.1), &o.mul(&y.1, &z.1)), &o.mul(&o.mul(&x.1, &y.1), &o.alpha(&z.1)))]
        }),
        ("hom_novikov", checks::check_hom_novikov, |o, x, y, z| {
            let n1 = sub(
                &o.mul(&o.mul(&x.1, &y.1), &o.alpha(&z.1)),
                &scale(&o.mul(&o.mul(&x.1, &z.1), &o.alpha(&y.1)), &o.eps(&y.0, &z.0)),
            );
            vec![n1, left_symmetry(o, x, y, z)]
        }),
        ("left_symmetric", checks::check_left_symmetric, |o, x, y, z| vec![left_symmetry(o, x, y, z)]),
        ("hom_lie", checks::check_hom_lie, |o, x, y, z| {
            let skew = add(&o.mul(&x.1, &y.1), &scale(&o.mul(&y.1, &x.1), &o.eps(&x.0, &y.0)));
            let jac = |p: &Hom, q: &Hom, r: &Hom| scale(&o.mul(&o.alpha(&p.1), &o.mul(&q.1, &r.1)), &o.eps(&r.0, &p.0));
            vec![skew, add(&add(&jac(x, y, z), &jac(y, z, x)), &jac(z, x, y))]
        }),
        ("lie_admissible", checks::check_lie_admissible, |o, x, y, z| {
            let jac = |p: &Hom, q: &Hom, r: &Hom| {
                let qr = (o.a.bicharacter().group().add(&q.0, &r.0), o.bracket(q, r));
                let ap = (p.0.clone(), o.alpha(&p.1));
                scale(&o.bracket(&ap, &qr), &o.eps(&r.0, &p.0))
            };
            vec![add(&add(&jac(x, y, z), &jac(y, z, x)), &jac(z, x, y))]
        }),
        ("lemma_nl", checks::check_lemma_nl, |o, x, y, z| {
            let right = |p: &Hom, q: &Hom, r: &Hom| scale(&o.mul(&o.bracket(p, q), &o.alpha(&r.1)), &o.eps(&r.0, &p.0));
            let left = |p: &Hom, q: &Hom, r: &Hom| scale(&o.mul(&o.alpha(&p.1), &o.bracket(q, r)), &o.eps(&r.0, &p.0));
            vec![
                add(&add(&right(x, y, z), &right(y, z, x)), &right(z, x, y)),
                add(&add(&left(x, y, z), &left(y, z, x)), &left(z, x, y)),
            ]
        }),
        ("multiplicative", checks::check_multiplicative, |o, x, y, _| {
            vec![sub(&o.alpha(&o.mul(&x.1, &y.1)), &o.mul(&o.alpha(&x.1), &o.alpha(&y.1)))]
        }),
    ]
}

fn left_symmetry(o: &Oracle, x: &Hom, y: &Hom, z: &Hom) -> Vec<Scalar> {
    let l = sub(&o.mul(&o.mul(&x.1, &y.1), &o.alpha(&z.1)), &o.mul(&o.alpha(&x.1), &o.mul(&y.1, &z.1)));
    let r = sub(&o.mul(&o.mul(&y.1, &x.1), &o.alpha(&z.1)), &o.mul(&o.alpha(&y.1), &o.mul(&x.1, &z.1)));
    sub(&l, &scale(&r, &o.eps(&x.0, &y.0)))
}

fn criterion_9() -> Outcome {
    let instances = vec![
        ("euler_novikov(3)", euler_novikov(3, Q)),
        ("dt_novikov(3)", dt_novikov(3, Q)),
        ("color_quantum_plane", kernel(color_quantum_plane(Field::Prime(7)), "color plane")?),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut failing_checks = 0;
    let mut comparisons = 0;
    for (name, a) in &instances {
        let o = Oracle { a };
        let random = |rng: &mut ChaCha8Rng| -> Vec<Scalar> {
            (0..a.dim()).map(|_| a.field().int(rng.gen_range(-5..=5))).collect()
        };
        let tuples: Vec<[Vec<Scalar>; 3]> = (0..100).map(|_| [random(&mut rng), random(&mut rng), random(&mut rng)]).collect();
        for (id, check, eval) in identities() {
            let passes = check(a).passes();
            let mut all_zero = true;
            'tuples: for [x, y, z] in &tuples {
                for xh in o.components(x) {
                    for yh in o.components(y) {
                        for zh in o.components(z) {
                            if eval(&o, &xh, &yh, &zh).iter().flatten().any(|s| !s.is_zero()) {
                                all_zero = false;
                                break 'tuples;
                            }
                        }
                    }
                }
            }
            ensure(
                passes == all_zero,
                format!("{name} {id}: checker says {passes}, random evaluation says {all_zero}"),
            )?;
            failing_checks += usize::from(!passes);
            comparisons += 1;
        }
    }
    Ok(format!("{comparisons} checker/oracle comparisons agree ({failing_checks} failing checks)"))
}

fn suites_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("suites")
}

fn run_cli(args: &[&str]) -> Result<(i32, String), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_colorhom"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    Ok((out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned()))
}

fn criterion_10() -> Outcome {
    let dir = suites_dir().join("instances");
    let mut docs = 0;
    for entry in std::fs::read_dir(&dir).map_err(|e| e.to_string())? {
        let path = entry.map_err(|e| e.to_string())?.path();
        let text = std::fs::read_to_string(&path).map_err(|e| e.to_string())?;
        let doc = parse(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        ensure(serialize(&doc) == text, format!("{} does not round-trip", path.display()))?;
        docs += 1;
    }

    let manifest = suites_dir().join("theorems.json");
    let (code, report) = run_cli(&["suite", manifest.to_str().unwrap()])?;
    ensure(code == 0, format!("suite exited {code}:\n{report}"))?;
    let summary = report.lines().last().unwrap_or_default().to_string();

    let original = dir.join("euler_novikov.json");
    let (code, _) = run_cli(&["check", original.to_str().unwrap(), "hom_novikov"])?;
    ensure(code == 0, format!("uncorrupted check exited {code}"))?;
    let text = std::fs::read_to_string(&original).map_err(|e| e.to_string())?;
    let corrupted = text.replace(r#"[0, 2, 2, "2"]"#, r#"[0, 2, 2, "3"]"#);
    ensure(corrupted != text, "corruption target not found")?;
    let tmp = tempfile::tempdir().map_err(|e| e.to_string())?;
    let bad = tmp.path().join("corrupted.json");
    std::fs::write(&bad, corrupted).map_err(|e| e.to_string())?;
    let (code, report) = run_cli(&["check", bad.to_str().unwrap(), "hom_novikov", "--format", "machine"])?;
    ensure(code == 1, format!("corrupted check exited {code}"))?;
    let json: serde_json::Value = serde_json::from_str(&report).map_err(|e| e.to_string())?;
    let indices = &json["verdict"]["witness"]["indices"];
    ensure(
        indices.as_array().is_some_and(|a| a.len() == 3),
        format!("machine report has no witness triple: {report}"),
    )?;
    Ok(format!("{docs} documents round-trip; suite: {summary}; corrupted witness at {indices}"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("bicharacter laws", criterion_1),
        ("commutative Hom-associative algebras are Hom-Novikov", criterion_2),
        ("d/dt derivation product on K[t]/(t^n)", criterion_3),
        ("commutator of a Hom-Novikov algebra", criterion_4),
        ("Yau twists by weak morphisms", criterion_5),
        ("centroid and xi twists", criterion_6),
        ("tensor products and direct sums", criterion_7),
        ("quadratic structures", criterion_8),
        ("basis sufficiency", criterion_9),
        ("CLI round trip and exit statuses", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{secs:.2}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail} [{secs:.2}s]", i + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
