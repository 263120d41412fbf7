use std::path::Path;

use colorhom::catalog::{search_maps, InstanceRecipe, SearchPredicate, RECIPES};
use colorhom::checks::{self, Side, Verdict};
use colorhom::constructions::{self as cons, Mode};
use colorhom::quadratic::{self as quad, BilinearFormStructure};
use colorhom::{ColorHomAlgebra, Error, GradedLinearMap, Vector};
use serde_json::json;

use crate::document::{serialize, AlgebraDocument, NamedForm, Provenance};
use crate::report::{pretty, verdict_json, verdict_text, witness_json, witness_text, Format};
use crate::{load, write_file, CliError, Outcome, Status};

/// Construction names with their argument lists.
pub const CONSTRUCTIONS: [(&str, &[&str]); 18] = [
    ("yau_twist", &["MAP"]),
    ("power_twist", &["N"]),
    ("centroid_twist", &["MAP"]),
    ("xi_square_twist", &["XI"]),
    ("commutator_algebra", &[]),
    ("averaging_product", &["MAP"]),
    ("derivation_product", &["MAP"]),
    ("composed_derivation_product", &["MAP"]),
    ("bracket_operator_product", &["MAP"]),
    ("direct_sum", &["FILE"]),
    ("tensor_product", &["FILE"]),
    ("untwist_involutive", &[]),
    ("regular_lie_untwist", &[]),
    ("quadratic_yau_twist", &["FORM", "MAP"]),
    ("quadratic_power_twist", &["FORM", "N"]),
    ("quadratic_commutator", &["FORM"]),
    ("regular_quadratic_commutator", &["FORM"]),
    ("quadratic_untwist_involutive", &["FORM"]),
];

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn expect_args(what: &str, args: &[String], n: usize, shape: &str) -> Result<(), CliError> {
    if args.len() == n {
        Ok(())
    } else {
        Err(usage(format!("{what} expects {n} argument(s) {shape}, got {}", args.len())))
    }
}

fn map_arg(doc: &AlgebraDocument, name: &str) -> Result<GradedLinearMap, CliError> {
    doc.map(name).ok_or_else(|| usage(format!("no map named {name:?} in the document")))
}

fn form_arg<'d>(doc: &'d AlgebraDocument, name: &str) -> Result<&'d BilinearFormStructure, CliError> {
    doc.forms
        .get(name)
        .map(|f| &f.form)
        .ok_or_else(|| usage(format!("no form named {name:?} in the document")))
}

fn bare(name: &str) -> &str {
    name.strip_prefix("check_").or_else(|| name.strip_prefix("is_")).unwrap_or(name)
}

/// Runs a check by name. Algebra checks take no arguments; operator checks
/// take a map name (`rota_baxter` an optional weight, `averaging`/`centroid`
/// an optional side); form checks take a form name, and
/// `symmetric_automorphism` a form and a map.
pub fn evaluate_check(doc: &AlgebraDocument, name: &str, args: &[String]) -> Result<Verdict, CliError> {
    let a = &doc.algebra;
    let algebra_check: Option<fn(&ColorHomAlgebra) -> Verdict> = match bare(name) {
        "epsilon_commutative" => Some(checks::check_epsilon_commutative),
        "hom_associative" => Some(checks::check_hom_associative),
        "hom_novikov" => Some(checks::check_hom_novikov),
        "left_symmetric" => Some(checks::check_left_symmetric),
        "hom_lie" => Some(checks::check_hom_lie),
        "lie_admissible" => Some(checks::check_lie_admissible),
        "lemma_nl" => Some(checks::check_lemma_nl),
        "multiplicative" => Some(checks::check_multiplicative),
        "regular" => Some(checks::check_regular),
        "involutive" => Some(checks::check_involutive),
        _ => None,
    };
    if let Some(check) = algebra_check {
        expect_args(name, args, 0, "")?;
        return Ok(check(a));
    }
    match bare(name) {
        "quadratic_structure" => {
            expect_args(name, args, 1, "FORM")?;
            Ok(quad::check_quadratic_structure(a, form_arg(doc, &args[0])?)?)
        }
        "invariance" => {
            expect_args(name, args, 1, "FORM")?;
            Ok(quad::check_invariance(a, form_arg(doc, &args[0])?)?)
        }
        "symmetric_automorphism" => {
            expect_args(name, args, 2, "FORM MAP")?;
            Ok(quad::is_symmetric_automorphism(a, form_arg(doc, &args[0])?, &map_arg(doc, &args[1])?)?)
        }
        "rota_baxter" if args.len() == 2 => {
            let weight = a.field().parse(&args[1])?;
            Ok(checks::is_rota_baxter(a, &map_arg(doc, &args[0])?, &weight)?)
        }
        "averaging" | "centroid" if args.len() == 2 => {
            let side: Side = args[1].parse()?;
            let m = map_arg(doc, &args[0])?;
            Ok(if bare(name) == "averaging" {
                checks::is_averaging(a, &m, side)?
            } else {
                checks::is_centroid(a, &m, side)?
            })
        }
        _ => {
            let predicate = SearchPredicate::from_name(name, a.field(), None).map_err(|e| match e {
                Error::UnknownPredicate(_) => usage(format!("unknown check {name:?}")),
                other => CliError::Kernel(other),
            })?;
            expect_args(name, args, 1, "MAP")?;
            Ok(predicate.evaluate(a, &map_arg(doc, &args[0])?)?)
        }
    }
}

fn xi_arg(a: &ColorHomAlgebra, text: &str) -> Result<Vector, CliError> {
    if let Some(i) = text.strip_prefix('e').and_then(|s| s.parse::<usize>().ok()) {
        if i >= a.dim() {
            return Err(usage(format!("basis index {i} out of range")));
        }
        return Ok(a.unit(i));
    }
    let coords = text
        .split(',')
        .map(|c| a.field().parse(c))
        .collect::<Result<Vec<_>, _>>()?;
    if coords.len() != a.dim() {
        return Err(usage(format!("xi needs {} coordinates, got {}", a.dim(), coords.len())));
    }
    Ok(Vector::from_coords(a.field(), coords)?)
}

fn n_arg(text: &str) -> Result<u32, CliError> {
    text.parse().map_err(|_| usage(format!("expected a non-negative integer, got {text:?}")))
}

/// Names the companion of a form in `doc`, adding a map when it is neither
/// the identity nor `α`.
fn attach_form(doc: &mut AlgebraDocument, name: &str, form: BilinearFormStructure) {
    let companion = if form.companion() == &doc.algebra.identity_map() {
        "identity".to_string()
    } else if form.companion() == doc.algebra.alpha() {
        "alpha".to_string()
    } else {
        let c = format!("{name}_companion");
        doc.maps.insert(c.clone(), form.companion().clone());
        c
    };
    doc.forms.insert(name.to_string(), NamedForm { form, companion });
}

/// Applies a named construction. `other` loads the second operand of
/// `direct_sum` and `tensor_product` and returns it with its digest. The
/// result keeps the input's maps when the basis is unchanged; quadratic
/// constructions store the new form under the input form's name.
pub fn apply_construction(
    doc: &AlgebraDocument,
    name: &str,
    args: &[String],
    mode: Mode,
    other: &dyn Fn(&str) -> Result<(AlgebraDocument, String), CliError>,
) -> Result<(AlgebraDocument, Vec<String>), CliError> {
    let a = &doc.algebra;
    let shape = CONSTRUCTIONS
        .iter()
        .find(|(c, _)| *c == name)
        .map(|(_, s)| *s)
        .ok_or_else(|| {
            let known: Vec<String> = CONSTRUCTIONS
                .iter()
                .map(|(c, a)| [*c].iter().chain(a.iter()).copied().collect::<Vec<_>>().join(" "))
                .collect();
            usage(format!("unknown construction {name:?}; known:\n  {}", known.join("\n  ")))
        })?;
    expect_args(name, args, shape.len(), &shape.join(" "))?;
    let mut digests = Vec::new();
    let mut form_out = None;
    let result = match name {
        "yau_twist" => cons::yau_twist(a, &map_arg(doc, &args[0])?, mode)?,
        "power_twist" => cons::power_twist(a, n_arg(&args[0])?, mode)?,
        "centroid_twist" => cons::centroid_twist(a, &map_arg(doc, &args[0])?, mode)?,
        "xi_square_twist" => cons::xi_square_twist(a, &xi_arg(a, &args[0])?, mode)?,
        "commutator_algebra" => cons::commutator_algebra(a),
        "averaging_product" => cons::averaging_product(a, &map_arg(doc, &args[0])?, mode)?,
        "derivation_product" => cons::derivation_product(a, &map_arg(doc, &args[0])?, mode)?,
        "composed_derivation_product" => cons::composed_derivation_product(a, &map_arg(doc, &args[0])?, mode)?,
        "bracket_operator_product" => cons::bracket_operator_product(a, &map_arg(doc, &args[0])?, mode)?,
        "direct_sum" | "tensor_product" => {
            let (second, digest) = other(&args[0])?;
            digests.push(digest);
            if name == "direct_sum" {
                cons::direct_sum(a, &second.algebra)?
            } else {
                cons::tensor_product(a, &second.algebra, mode)?
            }
        }
        "untwist_involutive" => cons::untwist_involutive(a, mode)?,
        "regular_lie_untwist" => cons::regular_lie_untwist(a, mode)?,
        _ => {
            let form = form_arg(doc, &args[0])?;
            let (b, f) = match name {
                "quadratic_yau_twist" => quad::quadratic_yau_twist(a, form, &map_arg(doc, &args[1])?, mode)?,
                "quadratic_power_twist" => quad::quadratic_power_twist(a, form, n_arg(&args[1])?, mode)?,
                "quadratic_commutator" => quad::quadratic_commutator(a, form, mode)?,
                "regular_quadratic_commutator" => quad::regular_quadratic_commutator(a, form, mode)?,
                "quadratic_untwist_involutive" => quad::quadratic_untwist_involutive(a, form, mode)?,
                _ => unreachable!("listed in CONSTRUCTIONS"),
            };
            form_out = Some((args[0].clone(), f));
            b
        }
    };
    let same_basis = result.basis() == a.basis();
    let mut out = AlgebraDocument::new(result);
    if same_basis {
        out.maps = doc.maps.clone();
    }
    if let Some((fname, f)) = form_out {
        attach_form(&mut out, &fname, f);
    }
    Ok((out, digests))
}

fn emit(format: Format, text: String, machine: serde_json::Value) -> String {
    match format {
        Format::Text => text,
        Format::Machine => pretty(&machine),
    }
}

pub fn run_check(path: &Path, name: &str, args: &[String], format: Format) -> Result<Outcome, CliError> {
    let (doc, _) = load(path)?;
    let verdict = evaluate_check(&doc, name, args)?;
    let status = if verdict.passes() { Status::Pass } else { Status::Fail };
    let mut label = name.to_string();
    for a in args {
        label.push(' ');
        label.push_str(a);
    }
    let report = emit(
        format,
        format!("{}: {label}: {}\n", path.display(), verdict_text(&verdict)),
        json!({
            "command": "check",
            "file": path.display().to_string(),
            "check": name,
            "args": args,
            "verdict": verdict_json(&verdict),
        }),
    );
    Ok(Outcome { status, report })
}

/// Writes the constructed document to `out` (stdout when absent). A failed
/// hypothesis in strict mode is a mathematical failure: exit status 1 with
/// the witness, nothing written.
pub fn run_construct(
    path: &Path,
    name: &str,
    args: &[String],
    mode: Mode,
    out: Option<&Path>,
    format: Format,
) -> Result<Outcome, CliError> {
    let (doc, digest) = load(path)?;
    let base = path.parent().unwrap_or(Path::new("."));
    let other = |p: &str| {
        let p = Path::new(p);
        if p.is_absolute() || p.exists() {
            load(p)
        } else {
            load(&base.join(p))
        }
    };
    match apply_construction(&doc, name, args, mode, &other) {
        Ok((mut result, digests)) => {
            result.provenance = Some(Provenance {
                construction: name.to_string(),
                args: args.to_vec(),
                inputs_sha256: std::iter::once(digest).chain(digests).collect(),
            });
            let text = serialize(&result);
            let report = match out {
                Some(o) => {
                    write_file(o, &text)?;
                    emit(
                        format,
                        format!("{name}: wrote {} (dimension {})\n", o.display(), result.algebra.dim()),
                        json!({"command": "construct", "construction": name, "passes": true, "out": o.display().to_string()}),
                    )
                }
                None => text,
            };
            Ok(Outcome {
                status: Status::Pass,
                report,
            })
        }
        Err(CliError::Kernel(Error::Precondition {
            construction,
            hypothesis,
            witness,
        })) => {
            let detail = witness.as_deref().map(witness_text).unwrap_or_default();
            let report = emit(
                format,
                format!("{construction}: hypothesis `{hypothesis}` fails {detail}\n"),
                json!({
                    "command": "construct",
                    "construction": construction,
                    "passes": false,
                    "hypothesis": hypothesis,
                    "witness": witness.as_deref().map(witness_json),
                }),
            );
            Ok(Outcome {
                status: Status::Fail,
                report,
            })
        }
        Err(e) => Err(e),
    }
}

/// Materializes a catalog instance as a document.
pub fn recipe_document(recipe: &InstanceRecipe) -> Result<AlgebraDocument, CliError> {
    let inst = recipe.materialize()?;
    let mut doc = AlgebraDocument::new(inst.algebra);
    doc.maps = inst.maps;
    for (name, form) in inst.forms {
        attach_form(&mut doc, &name, form);
    }
    Ok(doc)
}

/// No words: list recipes. Otherwise the words form a recipe
/// (`name key=value ...`) written to `out` or stdout.
pub fn run_catalog(words: &[String], out: Option<&Path>, format: Format) -> Result<Outcome, CliError> {
    if words.is_empty() {
        let mut text = String::new();
        for (name, about) in RECIPES {
            text.push_str(&format!("{name:<22} {about}\n"));
        }
        let machine = json!(RECIPES.iter().map(|(n, a)| json!({"name": n, "about": a})).collect::<Vec<_>>());
        return Ok(Outcome {
            status: Status::Pass,
            report: emit(format, text, machine),
        });
    }
    let recipe: InstanceRecipe = words.join(" ").parse()?;
    let text = serialize(&recipe_document(&recipe)?);
    let report = match out {
        Some(o) => {
            write_file(o, &text)?;
            format!("{recipe}: wrote {}\n", o.display())
        }
        None => text,
    };
    Ok(Outcome {
        status: Status::Pass,
        report,
    })
}

/// Adds every hit of `predicate` to the document as maps `<predicate>_<i>`.
/// A search with no hits is still a pass.
pub fn run_search(
    path: &Path,
    predicate: &str,
    form: Option<&str>,
    seed: u64,
    budget: usize,
    out: Option<&Path>,
) -> Result<Outcome, CliError> {
    let (mut doc, _) = load(path)?;
    let form = form.map(|f| form_arg(&doc, f).cloned()).transpose()?;
    let pred = SearchPredicate::from_name(predicate, doc.algebra.field(), form.as_ref())?;
    let hits = search_maps(&doc.algebra, &pred, seed, budget)?;
    let stem = bare(predicate);
    for (i, m) in hits.iter().enumerate() {
        doc.maps.insert(format!("{stem}_{i}"), m.clone());
    }
    let text = serialize(&doc);
    let report = match out {
        Some(o) => {
            write_file(o, &text)?;
            format!("{predicate}: {} hit(s), wrote {}\n", hits.len(), o.display())
        }
        None => text,
    };
    Ok(Outcome {
        status: Status::Pass,
        report,
    })
}
