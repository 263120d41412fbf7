use std::path::{Path, PathBuf};
use std::process::Command;

use colorhom::catalog::{truncated_polynomial, zero_algebra};
use colorhom::{Bicharacter, ColorHomAlgebra, Field, GradeGroup, GradedBasis, GradedLinearMap, Matrix, StructureTensor};
use colorhom_cli::{parse, serialize, AlgebraDocument, DocError};
use proptest::prelude::*;

fn suites() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("suites")
}

fn instance(name: &str) -> PathBuf {
    suites().join("instances").join(name)
}

fn colorhom(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_colorhom")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn shipped_documents_are_canonical() {
    let mut n = 0;
    for entry in std::fs::read_dir(suites().join("instances")).unwrap() {
        let path = entry.unwrap().path();
        let text = std::fs::read_to_string(&path).unwrap();
        let doc = parse(&text).unwrap();
        assert_eq!(serialize(&doc), text, "{}", path.display());
        assert_eq!(parse(&serialize(&doc)).unwrap(), doc);
        n += 1;
    }
    assert!(n >= 10);
}

#[test]
fn truncated_cubic_document_matches_the_recipe() {
    let text = std::fs::read_to_string(instance("truncated_cubic.json")).unwrap();
    let doc = parse(&text).unwrap();
    assert_eq!(doc.algebra, truncated_polynomial(3, Field::Rational));
}

#[test]
fn minimal_document_is_the_ground_field() {
    let doc = parse(r#"{"field": {"kind": "rational"}, "basis": [[]], "product": [[0, 0, 0, 1]]}"#).unwrap();
    assert_eq!(doc.algebra, truncated_polynomial(1, Field::Rational));
    let empty = parse(r#"{"field": {"kind": "prime", "p": 5}, "basis": [[], []]}"#).unwrap();
    assert_eq!(empty.algebra, zero_algebra(Field::Prime(5), 2));
}

#[test]
fn loose_input_is_normalized() {
    let doc = parse(
        r#"{"field": {"kind": "rational"}, "basis": [[], []],
            "product": [[1, 1, 1, "6/8"], [0, 0, 0, 2]],
            "alpha": {"dense": [[1, 0], [0, "-4/2"]]}}"#,
    )
    .unwrap();
    let text = serialize(&doc);
    assert!(text.contains(r#"[1, 1, 1, "3/4"]"#));
    assert!(text.contains(r#"[1, 1, "-2"]"#));
    assert!(text.find("[0, 0, 0, \"2\"]").unwrap() < text.find("[1, 1, 1,").unwrap());
    assert_eq!(parse(&text).unwrap(), doc);
    assert_eq!(serialize(&parse(&text).unwrap()), text);
}

#[test]
fn odd_product_landing_in_even_degree_is_rejected() {
    let text = r#"{
  "field": {"kind": "rational"},
  "group": {"free_rank": 0, "torsion_orders": [2]},
  "bicharacter": [["-1"]],
  "basis": [[0], [1]],
  "product": [[0, 1, 0, "1"]]
}"#;
    match parse(text).unwrap_err() {
        DocError::Section { section, line, message } => {
            assert_eq!(section, "product");
            assert_eq!(line, 6);
            assert!(message.contains("e_0·e_1") && message.contains("e_0 of the wrong degree"), "{message}");
        }
        other => panic!("{other}"),
    }
}

#[test]
fn structural_errors_carry_context() {
    match parse("{\"field\": {\"kind\": \"rational\"},\n \"basis\": [[]] \"product\": []}").unwrap_err() {
        DocError::Syntax { line, .. } => assert_eq!(line, 2),
        other => panic!("{other}"),
    }
    let bad_bich = r#"{"field": {"kind": "rational"}, "group": {"free_rank": 1, "torsion_orders": []},
        "bicharacter": [["2"]], "basis": [[0]]}"#;
    assert!(matches!(parse(bad_bich), Err(DocError::Section { section, .. }) if section == "bicharacter"));
    let unknown = r#"{"field": {"kind": "rational"}, "basis": [[]], "extra": 1}"#;
    assert!(matches!(parse(unknown), Err(DocError::Syntax { .. })));
    let companion = r#"{"field": {"kind": "rational"}, "basis": [[]], "forms": {"b": {"companion": "nope", "gram": [[0, 0, 1]]}}}"#;
    assert!(matches!(parse(companion), Err(DocError::Section { section, .. }) if section == "forms.b"));
}

fn graded_doc(entries: &[u8], alpha: &[u8], graded: bool) -> AlgebraDocument {
    let f = Field::Prime(5);
    let (group, degrees): (GradeGroup, Vec<Vec<i64>>) = if graded {
        (GradeGroup::new(0, vec![2]).unwrap(), vec![vec![0], vec![1], vec![0]])
    } else {
        (GradeGroup::trivial(), vec![vec![]; 3])
    };
    let bich = if graded {
        Bicharacter::super_sign(f)
    } else {
        Bicharacter::ungraded(f)
    };
    let refs: Vec<&[i64]> = degrees.iter().map(|d| &d[..]).collect();
    let basis = GradedBasis::from_coords(group.clone(), &refs).unwrap();
    let mut t = StructureTensor::zeros(f, 3);
    for (idx, &v) in entries.iter().enumerate() {
        let (i, j, k) = (idx / 9, (idx / 3) % 3, idx % 3);
        if basis.degree(k) == &group.add(basis.degree(i), basis.degree(j)) {
            t.set(i, j, k, f.int(v as i64));
        }
    }
    let mut m = Matrix::zeros(f, 3, 3);
    for (idx, &v) in alpha.iter().enumerate() {
        let (r, c) = (idx / 3, idx % 3);
        if basis.degree(r) == basis.degree(c) {
            m.set(r, c, f.int(v as i64));
        }
    }
    let alpha = GradedLinearMap::even(basis.clone(), m).unwrap();
    let mut doc = AlgebraDocument::new(ColorHomAlgebra::new(basis, bich, t, alpha.clone()).unwrap());
    doc.maps.insert("a".into(), alpha);
    doc
}

proptest! {
    #[test]
    fn round_trip_is_exact(
        entries in prop::collection::vec(0u8..5, 27),
        alpha in prop::collection::vec(0u8..5, 9),
        graded in any::<bool>(),
    ) {
        let doc = graded_doc(&entries, &alpha, graded);
        let text = serialize(&doc);
        let back = parse(&text).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(serialize(&back), text);
    }
}

#[test]
fn check_exit_statuses() {
    let dir = tempfile::tempdir().unwrap();
    let product = dir.path().join("product.json");
    let (code, _, _) = colorhom(&[
        "construct",
        p(&instance("truncated_cubic_f3.json")),
        "derivation_product",
        "ddt",
        "--out",
        p(&product),
    ]);
    assert_eq!(code, 0);
    let (code, out, _) = colorhom(&["check", p(&product), "check_hom_novikov"]);
    assert_eq!((code, out.trim_end().ends_with("pass")), (0, true));

    // e_1∗e_2 = 2e_2 becomes e_2
    let text = std::fs::read_to_string(&product).unwrap();
    let corrupted = text.replace(r#"[1, 2, 2, "2"]"#, r#"[1, 2, 2, "1"]"#);
    assert_ne!(corrupted, text);
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, corrupted).unwrap();
    let (code, out, _) = colorhom(&["check", p(&bad), "check_hom_novikov", "--format", "machine"]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["verdict"]["passes"], false);
    assert_eq!(v["verdict"]["witness"]["indices"].as_array().unwrap().len(), 3);
    assert_ne!(v["verdict"]["witness"]["left"], v["verdict"]["witness"]["right"]);

    let (code, _, err) = colorhom(&["check", p(&product), "check_nonsense"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown check"));
    let (code, _, _) = colorhom(&["check", p(&dir.path().join("missing.json")), "check_hom_novikov"]);
    assert_eq!(code, 2);
    let (code, _, _) = colorhom(&["check", p(&product), "is_derivation", "no_such_map"]);
    assert_eq!(code, 2);
    let (code, _, _) = colorhom(&["frobnicate"]);
    assert_eq!(code, 2);
}

#[test]
fn constructions_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out.json");
    let input = instance("euler_novikov.json");
    let (code, _, _) = colorhom(&["construct", p(&input), "yau_twist", "identity", "--out", p(&out)]);
    assert_eq!(code, 0);
    let twisted = parse(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let original = parse(&std::fs::read_to_string(&input).unwrap()).unwrap();
    assert_eq!(twisted.algebra, original.algebra);
    let prov = twisted.provenance.unwrap();
    assert_eq!((prov.construction.as_str(), prov.args.as_slice()), ("yau_twist", &["identity".to_string()][..]));
    let digest = colorhom_cli::sha256_hex(&std::fs::read(&input).unwrap());
    assert_eq!(prov.inputs_sha256, vec![digest]);

    // commutator of the d/dt product on F_3[t]/(t^3): [e_1, e_2] = e_2
    let product = dir.path().join("product.json");
    colorhom(&["construct", p(&instance("truncated_cubic_f3.json")), "derivation_product", "ddt", "--out", p(&product)]);
    let (code, text, _) = colorhom(&["construct", p(&product), "commutator_algebra"]);
    assert_eq!(code, 0);
    assert!(text.contains(r#"[1, 2, 2, "1"]"#));

    let (code, _, _) = colorhom(&[
        "construct",
        p(&instance("dt_novikov_square.json")),
        "tensor_product",
        p(&instance("truncated_square.json")),
        "--out",
        p(&out),
    ]);
    assert_eq!(code, 0);
    let t = parse(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(t.algebra.dim(), 4);
    assert_eq!(t.provenance.unwrap().inputs_sha256.len(), 2);

    // strict mode: a precondition failure is a mathematical failure
    let (code, out_text, _) = colorhom(&[
        "construct",
        p(&instance("truncated_cubic.json")),
        "derivation_product",
        "ddt",
        "--format",
        "machine",
    ]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out_text).unwrap();
    assert_eq!(v["hypothesis"], "derivation");
    assert!(v["witness"].is_object());
    let (code, _, _) = colorhom(&["construct", p(&instance("truncated_cubic.json")), "derivation_product", "ddt", "--unchecked"]);
    assert_eq!(code, 0);
}

#[test]
fn suite_verb() {
    let (code, out, _) = colorhom(&["suite", p(&suites().join("theorems.json"))]);
    assert_eq!(code, 0, "{out}");
    assert!(out.lines().filter(|l| l.starts_with("PASS")).count() >= 50);

    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.json");
    std::fs::write(&empty, r#"{"rows": []}"#).unwrap();
    let (code, out, _) = colorhom(&["suite", p(&empty), "--format", "machine"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 0);

    let missing = dir.path().join("missing.json");
    std::fs::write(&missing, r#"{"rows": [{"name": "gone", "instance": "nowhere.json", "conclusions": ["check_hom_lie"]}]}"#).unwrap();
    assert_eq!(colorhom(&["suite", p(&missing)]).0, 2);
    assert_eq!(colorhom(&["suite", p(&dir.path().join("no_manifest.json"))]).0, 2);

    let failing = dir.path().join("failing.json");
    std::fs::write(
        &failing,
        r#"{"rows": [
            {"name": "holds", "recipe": "euler_novikov n=3", "conclusions": ["check_hom_novikov"]},
            {"name": "fails", "recipe": "dt_novikov n=3", "conclusions": ["check_hom_novikov"]}]}"#,
    )
    .unwrap();
    let (code, out, _) = colorhom(&["suite", p(&failing)]);
    assert_eq!(code, 1);
    let lines: Vec<&str> = out.lines().collect();
    assert!(lines[0].starts_with("PASS  holds"));
    assert!(lines[1].starts_with("FAIL  fails: conclusion check_hom_novikov: n2 at (0, 2, 2)"), "{}", lines[1]);
}

#[test]
fn catalog_verb() {
    let (code, out, _) = colorhom(&["catalog"]);
    assert_eq!(code, 0);
    assert!(out.contains("truncated_polynomial"));
    let (code, out, _) = colorhom(&["catalog", "truncated_polynomial", "n=3"]);
    assert_eq!(code, 0);
    assert_eq!(out, std::fs::read_to_string(instance("truncated_cubic.json")).unwrap());
    assert_eq!(colorhom(&["catalog", "no_such_recipe"]).0, 2);

    let (code, out, _) = colorhom(&["catalog", "--search", "is_derivation", "--input", p(&instance("truncated_cubic.json")), "--budget", "40"]);
    assert_eq!(code, 0);
    let doc = parse(&out).unwrap();
    // the multiples −1, 1, 2 of t·d/dt are not reached with two nonzero entries
    assert!(doc.maps.contains_key("derivation_0"));
    assert_eq!(doc.maps["derivation_0"].matrix(), &Matrix::zeros(Field::Rational, 3, 3));
}
