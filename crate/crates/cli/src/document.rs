//! The algebra file format: JSON with lowercase keys.
//!
//! ```json
//! {
//!   "field": {"kind": "prime", "p": 5},
//!   "group": {"free_rank": 0, "torsion_orders": [2]},
//!   "bicharacter": [["-1"]],
//!   "basis": [[0], [1]],
//!   "product": [
//!     [0, 1, 1, "1"]
//!   ],
//!   "alpha": [
//!     [0, 0, "1"],
//!     [1, 1, "1"]
//!   ]
//! }
//! ```
//!
//! Scalars are strings (`"3/4"`, `"-2"`) or JSON integers. `product` lists
//! sparse `[i, j, k, c]` meaning `e_i·e_j` has coefficient `c` on `e_k`;
//! omitted entries are zero. Matrices (`alpha`, map entries, Gram matrices)
//! are sparse `[row, col, value]` lists or `{"dense": [[...], ...]}`. A missing
//! `alpha` means the identity, a missing `group` the trivial group, a missing
//! `bicharacter` the all-ones table. Optional sections: `maps` (name to
//! `{"degree": [...], "entries": ...}`), `forms` (name to `{"companion": map
//! name, "alpha" or "identity", "gram": ...}`), and `provenance`.
//!
//! [`serialize`] writes the canonical form: every section present except empty
//! `maps`/`forms` and absent `provenance`, entries sorted, zeros dropped, scalars
//! as reduced strings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use colorhom::quadratic::BilinearFormStructure;
use colorhom::{
    Bicharacter, ColorHomAlgebra, Error, Field, GradeGroup, GradedBasis, GradedLinearMap, Matrix, Scalar,
    StructureTensor,
};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraDocument {
    pub provenance: Option<Provenance>,
    pub algebra: ColorHomAlgebra,
    pub maps: BTreeMap<String, GradedLinearMap>,
    pub forms: BTreeMap<String, NamedForm>,
}

/// A form together with the name its companion map was given in the file.
#[derive(Clone, Debug, PartialEq)]
pub struct NamedForm {
    pub form: BilinearFormStructure,
    pub companion: String,
}

/// Which construction produced a document, with what arguments, from which
/// inputs (SHA-256 of each input file, hex).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Provenance {
    pub construction: String,
    pub args: Vec<String>,
    pub inputs_sha256: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DocError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("section `{section}` (line {line}): {message}")]
    Section { section: String, line: usize, message: String },
}

impl AlgebraDocument {
    pub fn new(algebra: ColorHomAlgebra) -> Self {
        AlgebraDocument {
            provenance: None,
            algebra,
            maps: BTreeMap::new(),
            forms: BTreeMap::new(),
        }
    }

    /// A map by name; `alpha` and `identity` resolve to the twisting map and
    /// the identity unless the document defines maps with those names.
    pub fn map(&self, name: &str) -> Option<GradedLinearMap> {
        match (self.maps.get(name), name) {
            (Some(m), _) => Some(m.clone()),
            (None, "alpha") => Some(self.algebra.alpha().clone()),
            (None, "identity") => Some(self.algebra.identity_map()),
            _ => None,
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawScalar {
    Int(i64),
    Text(String),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawMatrix {
    Sparse(Vec<(usize, usize, RawScalar)>),
    Dense { dense: Vec<Vec<RawScalar>> },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawField {
    kind: String,
    p: Option<u64>,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct RawGroup {
    #[serde(default)]
    free_rank: usize,
    #[serde(default)]
    torsion_orders: Vec<u64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMap {
    #[serde(default)]
    degree: Vec<i64>,
    entries: RawMatrix,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawForm {
    #[serde(default = "identity_name")]
    companion: String,
    gram: RawMatrix,
}

fn identity_name() -> String {
    "identity".to_string()
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    provenance: Option<Provenance>,
    field: RawField,
    #[serde(default)]
    group: RawGroup,
    bicharacter: Option<Vec<Vec<RawScalar>>>,
    basis: Vec<Vec<i64>>,
    #[serde(default)]
    product: Vec<(usize, usize, usize, RawScalar)>,
    alpha: Option<RawMatrix>,
    #[serde(default)]
    maps: BTreeMap<String, RawMap>,
    #[serde(default)]
    forms: BTreeMap<String, RawForm>,
}

/// Line of the first `"key":` occurrence, 0 when absent.
fn key_line(text: &str, key: &str) -> usize {
    let needle = format!("\"{key}\"");
    text.lines()
        .position(|l| l.find(&needle).is_some_and(|at| l[at + needle.len()..].trim_start().starts_with(':')))
        .map_or(0, |i| i + 1)
}

struct Ctx<'t> {
    text: &'t str,
}

impl Ctx<'_> {
    fn err(&self, section: &str, message: impl ToString) -> DocError {
        let key = section.split(['.', '[']).next().unwrap_or(section);
        DocError::Section {
            section: section.to_string(),
            line: key_line(self.text, key),
            message: message.to_string(),
        }
    }
}

fn scalar(field: Field, raw: &RawScalar) -> Result<Scalar, Error> {
    match raw {
        RawScalar::Int(n) => Ok(field.int(*n)),
        RawScalar::Text(s) => field.parse(s),
    }
}

fn matrix(ctx: &Ctx, section: &str, field: Field, n: usize, raw: &RawMatrix) -> Result<Matrix, DocError> {
    let mut m = Matrix::zeros(field, n, n);
    match raw {
        RawMatrix::Sparse(entries) => {
            let mut seen = std::collections::BTreeSet::new();
            for (r, c, v) in entries {
                if *r >= n || *c >= n {
                    return Err(ctx.err(section, format!("entry ({r}, {c}) outside a {n}x{n} matrix")));
                }
                if !seen.insert((*r, *c)) {
                    return Err(ctx.err(section, format!("duplicate entry ({r}, {c})")));
                }
                m.set(*r, *c, scalar(field, v).map_err(|e| ctx.err(section, e))?);
            }
        }
        RawMatrix::Dense { dense } => {
            if dense.len() != n || dense.iter().any(|row| row.len() != n) {
                return Err(ctx.err(section, format!("dense matrix must be {n}x{n}")));
            }
            for (r, row) in dense.iter().enumerate() {
                for (c, v) in row.iter().enumerate() {
                    m.set(r, c, scalar(field, v).map_err(|e| ctx.err(section, e))?);
                }
            }
        }
    }
    Ok(m)
}

pub fn parse(text: &str) -> Result<AlgebraDocument, DocError> {
    let raw: RawDocument = serde_json::from_str(text).map_err(|e| DocError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let ctx = Ctx { text };

    let field = match (raw.field.kind.as_str(), raw.field.p) {
        ("rational", None) => Field::Rational,
        ("prime", Some(p)) => Field::prime(p).map_err(|e| ctx.err("field", e))?,
        _ => return Err(ctx.err("field", "expected {\"kind\": \"rational\"} or {\"kind\": \"prime\", \"p\": p}")),
    };
    let group = GradeGroup::new(raw.group.free_rank, raw.group.torsion_orders).map_err(|e| ctx.err("group", e))?;
    let bicharacter = match raw.bicharacter {
        None => Bicharacter::trivial(field, group.clone()),
        Some(rows) => {
            let table = rows
                .iter()
                .map(|row| row.iter().map(|v| scalar(field, v)).collect::<Result<Vec<_>, _>>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| ctx.err("bicharacter", e))?;
            Bicharacter::new(field, group.clone(), table).map_err(|e| ctx.err("bicharacter", e))?
        }
    };
    let degrees = raw
        .basis
        .iter()
        .map(|d| group.element(d))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| ctx.err("basis", e))?;
    let basis = GradedBasis::new(group.clone(), degrees).map_err(|e| ctx.err("basis", e))?;
    let n = basis.dim();

    let mut entries = Vec::with_capacity(raw.product.len());
    let mut seen = std::collections::BTreeSet::new();
    for (i, j, k, v) in &raw.product {
        if !seen.insert((*i, *j, *k)) {
            return Err(ctx.err("product", format!("duplicate entry ({i}, {j}, {k})")));
        }
        entries.push((*i, *j, *k, scalar(field, v).map_err(|e| ctx.err("product", e))?));
    }
    let structure = StructureTensor::from_entries(field, n, &entries).map_err(|e| ctx.err("product", e))?;
    let alpha = match &raw.alpha {
        None => GradedLinearMap::identity(basis.clone(), field),
        Some(m) => {
            let m = matrix(&ctx, "alpha", field, n, m)?;
            GradedLinearMap::even(basis.clone(), m).map_err(|e| ctx.err("alpha", e))?
        }
    };
    let algebra = ColorHomAlgebra::new(basis.clone(), bicharacter, structure, alpha).map_err(|e| {
        let section = match e {
            Error::NotEven | Error::Homogeneity { .. } => "alpha",
            _ => "product",
        };
        ctx.err(section, e)
    })?;

    let mut maps = BTreeMap::new();
    for (name, m) in &raw.maps {
        let section = format!("maps.{name}");
        let degree = if m.degree.is_empty() {
            group.zero()
        } else {
            group.element(&m.degree).map_err(|e| ctx.err(&section, e))?
        };
        let matrix = matrix(&ctx, &section, field, n, &m.entries)?;
        let map = GradedLinearMap::new(basis.clone(), matrix, degree).map_err(|e| ctx.err(&section, e))?;
        maps.insert(name.clone(), map);
    }
    let mut doc = AlgebraDocument {
        provenance: raw.provenance,
        algebra,
        maps,
        forms: BTreeMap::new(),
    };
    for (name, f) in &raw.forms {
        let section = format!("forms.{name}");
        let companion = doc
            .map(&f.companion)
            .ok_or_else(|| ctx.err(&section, format!("unknown companion map {:?}", f.companion)))?;
        let gram = matrix(&ctx, &section, field, n, &f.gram)?;
        let form = BilinearFormStructure::new(gram, companion).map_err(|e| ctx.err(&section, e))?;
        doc.forms.insert(
            name.clone(),
            NamedForm {
                form,
                companion: f.companion.clone(),
            },
        );
    }
    Ok(doc)
}

fn quoted(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

fn ints<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = xs.into_iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

/// `[]`, or one item per line at `indent + 2` with the bracket at `indent`.
fn block(items: &[String], indent: usize) -> String {
    if items.is_empty() {
        return "[]".to_string();
    }
    let pad = " ".repeat(indent + 2);
    let body: Vec<String> = items.iter().map(|s| format!("{pad}{s}")).collect();
    format!("[\n{}\n{}]", body.join(",\n"), " ".repeat(indent))
}

fn sparse(m: &Matrix) -> Vec<String> {
    let mut out = Vec::new();
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            let v = m.get(r, c);
            if !v.is_zero() {
                out.push(format!("[{r}, {c}, {}]", quoted(&v.to_string())));
            }
        }
    }
    out
}

pub fn serialize(doc: &AlgebraDocument) -> String {
    let a = &doc.algebra;
    let mut sections: Vec<String> = Vec::new();
    if let Some(p) = &doc.provenance {
        sections.push(format!(
            "\"provenance\": {{\"construction\": {}, \"args\": [{}], \"inputs_sha256\": [{}]}}",
            quoted(&p.construction),
            p.args.iter().map(|s| quoted(s)).collect::<Vec<_>>().join(", "),
            p.inputs_sha256.iter().map(|s| quoted(s)).collect::<Vec<_>>().join(", "),
        ));
    }
    sections.push(match a.field() {
        Field::Rational => "\"field\": {\"kind\": \"rational\"}".to_string(),
        Field::Prime(p) => format!("\"field\": {{\"kind\": \"prime\", \"p\": {p}}}"),
    });
    let group = a.basis().group();
    sections.push(format!(
        "\"group\": {{\"free_rank\": {}, \"torsion_orders\": {}}}",
        group.free_rank(),
        ints(group.torsion_orders())
    ));
    let table: Vec<String> = a
        .bicharacter()
        .table()
        .iter()
        .map(|row| format!("[{}]", row.iter().map(|v| quoted(&v.to_string())).collect::<Vec<_>>().join(", ")))
        .collect();
    sections.push(format!("\"bicharacter\": [{}]", table.join(", ")));
    let degrees: Vec<String> = a.basis().degrees().iter().map(|d| ints(d.coords())).collect();
    sections.push(format!("\"basis\": [{}]", degrees.join(", ")));
    let product: Vec<String> = a
        .structure()
        .entries()
        .map(|(i, j, k, v)| format!("[{i}, {j}, {k}, {}]", quoted(&v.to_string())))
        .collect();
    sections.push(format!("\"product\": {}", block(&product, 2)));
    sections.push(format!("\"alpha\": {}", block(&sparse(a.alpha().matrix()), 2)));
    if !doc.maps.is_empty() {
        let maps: Vec<String> = doc
            .maps
            .iter()
            .map(|(name, m)| {
                format!(
                    "    {}: {{\"degree\": {}, \"entries\": {}}}",
                    quoted(name),
                    ints(m.degree().coords()),
                    block(&sparse(m.matrix()), 4)
                )
            })
            .collect();
        sections.push(format!("\"maps\": {{\n{}\n  }}", maps.join(",\n")));
    }
    if !doc.forms.is_empty() {
        let forms: Vec<String> = doc
            .forms
            .iter()
            .map(|(name, f)| {
                format!(
                    "    {}: {{\"companion\": {}, \"gram\": {}}}",
                    quoted(name),
                    quoted(&f.companion),
                    block(&sparse(f.form.gram()), 4)
                )
            })
            .collect();
        sections.push(format!("\"forms\": {{\n{}\n  }}", forms.join(",\n")));
    }
    let mut out = String::from("{\n");
    for (idx, s) in sections.iter().enumerate() {
        let comma = if idx + 1 < sections.len() { "," } else { "" };
        let _ = writeln!(out, "  {s}{comma}");
    }
    out.push_str("}\n");
    out
}
