//! JSON documents: one structure per document, tagged by `"kind"`, every
//! scalar a `"p/q"` string.

use num_traits::Zero;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::exact_math::{format_rational, parse_rational, Matrix, Rational};
use crate::homalg::{
    AxiomReport, HomAlgebra, HomCoalgebra, HomComodule, HomModule, LinearMap, Violation,
};
use crate::recseq::{BiPoly, BiSequence, Boundary};
use crate::sweedler::{
    make_poly_quotient, make_qplane_quotient, make_tensor_quotient, QuotientFamily,
    QuotientPresentation,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MorphismCategory {
    Algebra,
    Coalgebra,
    Module,
    Comodule,
}

impl MorphismCategory {
    fn name(self) -> &'static str {
        match self {
            MorphismCategory::Algebra => "algebra",
            MorphismCategory::Coalgebra => "coalgebra",
            MorphismCategory::Module => "module",
            MorphismCategory::Comodule => "comodule",
        }
    }
}

/// A linear map together with the structures it is claimed to connect.
#[derive(Clone, Debug)]
pub struct MorphismDoc {
    pub category: MorphismCategory,
    pub source: Box<Document>,
    pub target: Box<Document>,
    pub map: LinearMap,
}

#[derive(Clone, Debug)]
pub enum Document {
    Algebra(HomAlgebra),
    Coalgebra(HomCoalgebra),
    Module(HomModule),
    Comodule(HomComodule),
    Quotient(QuotientPresentation),
    BiPoly(BiPoly),
    Table(BiSequence),
    Boundary(Boundary),
    Morphism(MorphismDoc),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Algebra(_) => "hom-algebra",
            Document::Coalgebra(_) => "hom-coalgebra",
            Document::Module(_) => "hom-module",
            Document::Comodule(_) => "hom-comodule",
            Document::Quotient(_) => "quotient",
            Document::BiPoly(_) => "bipoly",
            Document::Table(_) => "bisequence",
            Document::Boundary(_) => "boundary",
            Document::Morphism(_) => "morphism",
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Document::Algebra(a) => algebra_json(a),
            Document::Coalgebra(c) => coalgebra_json(c),
            Document::Module(m) => module_json(m),
            Document::Comodule(c) => comodule_json(c),
            Document::Quotient(q) => quotient_json(q),
            Document::BiPoly(h) => bipoly_json(h),
            Document::Table(t) => table_json(t),
            Document::Boundary(b) => boundary_json(b),
            Document::Morphism(m) => json!({
                "kind": "morphism",
                "category": m.category.name(),
                "source": m.source.to_json(),
                "target": m.target.to_json(),
                "matrix": matrix_json(m.map.matrix()),
            }),
        }
    }
}

fn field_err(path: &str, msg: impl std::fmt::Display) -> Error {
    Error::Input(format!("field `{path}`: {msg}"))
}

fn join(path: &str, key: &str) -> String {
    if path.is_empty() {
        key.to_string()
    } else {
        format!("{path}.{key}")
    }
}

fn object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| field_err(path_or_root(path), "expected an object"))
}

fn path_or_root(path: &str) -> &str {
    if path.is_empty() {
        "<root>"
    } else {
        path
    }
}

fn get<'a>(obj: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Value> {
    obj.get(key)
        .ok_or_else(|| field_err(&join(path, key), "missing"))
}

fn array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| field_err(path, "expected an array"))
}

fn index(v: &Value, path: &str) -> Result<usize> {
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| field_err(path, "expected a non-negative integer"))
}

fn scalar(v: &Value, path: &str) -> Result<Rational> {
    let s = v
        .as_str()
        .ok_or_else(|| field_err(path, "expected a rational string such as \"3/2\""))?;
    parse_rational(s).map_err(|e| field_err(path, e))
}

fn opt_scalar(v: &Value, path: &str) -> Result<Option<Rational>> {
    if v.is_null() {
        Ok(None)
    } else {
        scalar(v, path).map(Some)
    }
}

fn scalar_vec(v: &Value, path: &str) -> Result<Vec<Rational>> {
    array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, x)| scalar(x, &format!("{path}[{i}]")))
        .collect()
}

fn matrix(v: &Value, path: &str) -> Result<Matrix> {
    let rows = array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, r)| scalar_vec(r, &format!("{path}[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    if rows.is_empty() {
        return Ok(Matrix::zeros(0, 0));
    }
    Matrix::from_rows(rows).map_err(|e| field_err(path, e))
}

fn square(v: &Value, n: usize, path: &str) -> Result<Matrix> {
    let m = matrix(v, path)?;
    if m.rows() != n || m.cols() != n {
        return Err(field_err(
            path,
            format!("expected a {n}x{n} matrix, got {}x{}", m.rows(), m.cols()),
        ));
    }
    Ok(m)
}

fn tuple<'a>(v: &'a Value, len: usize, path: &str) -> Result<&'a [Value]> {
    let items = array(v, path)?;
    if items.len() != len {
        return Err(field_err(path, format!("expected {len} entries")));
    }
    Ok(items)
}

fn bounded(i: usize, n: usize, path: &str) -> Result<usize> {
    if i >= n {
        return Err(field_err(path, format!("index {i} out of range 0..{n}")));
    }
    Ok(i)
}

/// Parses any document kind, checking the schema before building anything.
pub fn parse_document(v: &Value) -> Result<Document> {
    parse_at(v, "")
}

fn parse_at(v: &Value, path: &str) -> Result<Document> {
    let obj = object(v, path)?;
    let kind = get(obj, "kind", path)?
        .as_str()
        .ok_or_else(|| field_err(&join(path, "kind"), "expected a string"))?;
    Ok(match kind {
        "hom-algebra" => Document::Algebra(parse_algebra(obj, path)?),
        "hom-coalgebra" => Document::Coalgebra(parse_coalgebra(obj, path)?),
        "hom-module" => Document::Module(parse_module(obj, path)?),
        "hom-comodule" => Document::Comodule(parse_comodule(obj, path)?),
        "quotient" => Document::Quotient(parse_quotient(obj, path)?),
        "bipoly" => Document::BiPoly(parse_bipoly(obj, path)?),
        "bisequence" => Document::Table(parse_table(obj, path)?),
        "boundary" => Document::Boundary(parse_boundary(obj, path)?),
        "morphism" => Document::Morphism(parse_morphism(obj, path)?),
        other => return Err(field_err(&join(path, "kind"), format!("unknown kind {other:?}"))),
    })
}

fn parse_algebra(obj: &Map<String, Value>, path: &str) -> Result<HomAlgebra> {
    let n = index(get(obj, "dim", path)?, &join(path, "dim"))?;
    let mut mul = vec![Rational::zero(); n * n * n];
    let pp = join(path, "products");
    for (t, item) in array(get(obj, "products", path)?, &pp)?.iter().enumerate() {
        let p = format!("{pp}[{t}]");
        let item = tuple(item, 3, &p)?;
        let i = bounded(index(&item[0], &p)?, n, &p)?;
        let j = bounded(index(&item[1], &p)?, n, &p)?;
        let vp = format!("{p}[2]");
        let coeffs = scalar_vec(&item[2], &vp)?;
        if coeffs.len() != n {
            return Err(field_err(&vp, format!("expected {n} coefficients")));
        }
        for (k, c) in coeffs.into_iter().enumerate() {
            mul[(i * n + j) * n + k] = c;
        }
    }
    let twist = square(get(obj, "twist", path)?, n, &join(path, "twist"))?;
    HomAlgebra::new(n, mul, twist)
}

fn parse_coalgebra(obj: &Map<String, Value>, path: &str) -> Result<HomCoalgebra> {
    let n = index(get(obj, "dim", path)?, &join(path, "dim"))?;
    let mut comul = vec![Rational::zero(); n * n * n];
    let cp = join(path, "coproducts");
    for (t, item) in array(get(obj, "coproducts", path)?, &cp)?.iter().enumerate() {
        let p = format!("{cp}[{t}]");
        let item = tuple(item, 4, &p)?;
        let k = bounded(index(&item[0], &p)?, n, &p)?;
        let i = bounded(index(&item[1], &p)?, n, &p)?;
        let j = bounded(index(&item[2], &p)?, n, &p)?;
        comul[(k * n + i) * n + j] = scalar(&item[3], &format!("{p}[3]"))?;
    }
    let twist = square(get(obj, "twist", path)?, n, &join(path, "twist"))?;
    HomCoalgebra::new(n, comul, twist)
}

fn nested_algebra(obj: &Map<String, Value>, key: &str, path: &str) -> Result<HomAlgebra> {
    let p = join(path, key);
    parse_algebra(object(get(obj, key, path)?, &p)?, &p)
}

fn nested_coalgebra(obj: &Map<String, Value>, key: &str, path: &str) -> Result<HomCoalgebra> {
    let p = join(path, key);
    parse_coalgebra(object(get(obj, key, path)?, &p)?, &p)
}

fn parse_module(obj: &Map<String, Value>, path: &str) -> Result<HomModule> {
    let algebra = nested_algebra(obj, "algebra", path)?;
    let n = algebra.dim();
    let m = index(get(obj, "dim", path)?, &join(path, "dim"))?;
    let mut action = vec![Rational::zero(); m * n * m];
    let ap = join(path, "actions");
    for (t, item) in array(get(obj, "actions", path)?, &ap)?.iter().enumerate() {
        let p = format!("{ap}[{t}]");
        let item = tuple(item, 3, &p)?;
        let a = bounded(index(&item[0], &p)?, m, &p)?;
        let i = bounded(index(&item[1], &p)?, n, &p)?;
        let vp = format!("{p}[2]");
        let coeffs = scalar_vec(&item[2], &vp)?;
        if coeffs.len() != m {
            return Err(field_err(&vp, format!("expected {m} coefficients")));
        }
        for (b, c) in coeffs.into_iter().enumerate() {
            action[(a * n + i) * m + b] = c;
        }
    }
    let twist = square(get(obj, "twist", path)?, m, &join(path, "twist"))?;
    HomModule::new(algebra, m, action, twist)
}

fn parse_comodule(obj: &Map<String, Value>, path: &str) -> Result<HomComodule> {
    let coalgebra = nested_coalgebra(obj, "coalgebra", path)?;
    let n = coalgebra.dim();
    let m = index(get(obj, "dim", path)?, &join(path, "dim"))?;
    let mut coaction = vec![Rational::zero(); m * m * n];
    let cp = join(path, "coactions");
    for (t, item) in array(get(obj, "coactions", path)?, &cp)?.iter().enumerate() {
        let p = format!("{cp}[{t}]");
        let item = tuple(item, 4, &p)?;
        let a = bounded(index(&item[0], &p)?, m, &p)?;
        let b = bounded(index(&item[1], &p)?, m, &p)?;
        let i = bounded(index(&item[2], &p)?, n, &p)?;
        coaction[(a * m + b) * n + i] = scalar(&item[3], &format!("{p}[3]"))?;
    }
    let twist = square(get(obj, "twist", path)?, m, &join(path, "twist"))?;
    HomComodule::new(coalgebra, m, coaction, twist)
}

fn parse_quotient(obj: &Map<String, Value>, path: &str) -> Result<QuotientPresentation> {
    let fp = join(path, "family");
    let family = get(obj, "family", path)?
        .as_str()
        .ok_or_else(|| field_err(&fp, "expected a string"))?;
    let int = |key: &str| index(get(obj, key, path)?, &join(path, key));
    let rat = |key: &str| scalar(get(obj, key, path)?, &join(path, key));
    let named = |key: &str, e: Error| match e {
        Error::Input(msg) if msg.contains("nonzero") => field_err(&join(path, key), msg),
        other => other,
    };
    match family {
        "poly" => make_poly_quotient(int("N")?, rat("k")?).map_err(|e| named("k", e)),
        "tensor" => {
            let tp = join(path, "twists");
            let twists = scalar_vec(get(obj, "twists", path)?, &tp)?;
            make_tensor_quotient(int("alphabet")?, int("length")?, twists)
                .map_err(|e| named("twists", e))
        }
        "qplane" => {
            let (q, k) = (rat("q")?, rat("k")?);
            let bad = if q.is_zero() { "q" } else { "k" };
            make_qplane_quotient(int("R")?, int("S")?, q, k).map_err(|e| named(bad, e))
        }
        other => Err(field_err(&fp, format!("unknown family {other:?}"))),
    }
}

/// Inline quotient syntax: `poly:N=5,k=2`, `tensor:alphabet=2,length=3,twists=2;3`,
/// `qplane:R=2,S=2,q=2,k=3`.
pub fn parse_quotient_spec(spec: &str) -> Result<QuotientPresentation> {
    let (family, rest) = spec
        .split_once(':')
        .ok_or_else(|| Error::Input(format!("quotient spec {spec:?} has no family prefix")))?;
    let mut obj = Map::new();
    obj.insert("family".into(), Value::String(family.trim().into()));
    for part in rest.split(',').filter(|p| !p.trim().is_empty()) {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| Error::Input(format!("quotient spec entry {part:?} is not key=value")))?;
        let key = key.trim();
        let v = match key {
            "N" | "alphabet" | "length" | "R" | "S" => Value::from(
                value
                    .trim()
                    .parse::<u64>()
                    .map_err(|_| field_err(key, "expected a non-negative integer"))?,
            ),
            "twists" => Value::Array(
                value
                    .split(';')
                    .map(|t| Value::String(t.trim().into()))
                    .collect(),
            ),
            _ => Value::String(value.trim().into()),
        };
        obj.insert(key.into(), v);
    }
    parse_quotient(&obj, "")
}

fn parse_grid(v: &Value, path: &str) -> Result<Vec<Vec<Option<Rational>>>> {
    array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let rp = format!("{path}[{i}]");
            array(row, &rp)?
                .iter()
                .enumerate()
                .map(|(j, x)| opt_scalar(x, &format!("{rp}[{j}]")))
                .collect()
        })
        .collect()
}

fn check_extent(grid: &[Vec<Option<Rational>>], rows: usize, cols: usize, path: &str) -> Result<()> {
    if grid.len() != rows + 1 {
        return Err(field_err(path, format!("expected {} rows", rows + 1)));
    }
    for (i, r) in grid.iter().enumerate() {
        if r.len() != cols + 1 {
            return Err(field_err(&format!("{path}[{i}]"), format!("expected {} entries", cols + 1)));
        }
    }
    Ok(())
}

fn parse_bipoly(obj: &Map<String, Value>, path: &str) -> Result<BiPoly> {
    let r = index(get(obj, "r", path)?, &join(path, "r"))?;
    let s = index(get(obj, "s", path)?, &join(path, "s"))?;
    let cp = join(path, "coeffs");
    let grid = parse_grid(get(obj, "coeffs", path)?, &cp)?;
    check_extent(&grid, r, s, &cp)?;
    BiPoly::from_grid(grid).map_err(|e| field_err(&cp, e))
}

fn table_grid(obj: &Map<String, Value>, path: &str) -> Result<(usize, usize, Vec<Vec<Option<Rational>>>)> {
    let m = index(get(obj, "M", path)?, &join(path, "M"))?;
    let n = index(get(obj, "N", path)?, &join(path, "N"))?;
    let ep = join(path, "entries");
    let grid = parse_grid(get(obj, "entries", path)?, &ep)?;
    check_extent(&grid, m, n, &ep)?;
    Ok((m, n, grid))
}

fn parse_table(obj: &Map<String, Value>, path: &str) -> Result<BiSequence> {
    let (_, _, grid) = table_grid(obj, path)?;
    let ep = join(path, "entries");
    let rows = grid
        .into_iter()
        .enumerate()
        .map(|(i, row)| {
            row.into_iter()
                .enumerate()
                .map(|(j, x)| x.ok_or_else(|| field_err(&format!("{ep}[{i}][{j}]"), "missing value")))
                .collect()
        })
        .collect::<Result<Vec<Vec<Rational>>>>()?;
    BiSequence::from_rows(rows)
}

fn parse_boundary(obj: &Map<String, Value>, path: &str) -> Result<Boundary> {
    let (_, _, grid) = table_grid(obj, path)?;
    Boundary::from_rows(grid)
}

/// A boundary file may be a `"boundary"` document or a `"bisequence"`-shaped
/// one with nulls on the interior.
pub fn parse_boundary_document(v: &Value) -> Result<Boundary> {
    let obj = object(v, "")?;
    match get(obj, "kind", "")?.as_str() {
        Some("boundary") | Some("bisequence") => parse_boundary(obj, ""),
        _ => Err(field_err("kind", "expected \"boundary\" or \"bisequence\"")),
    }
}

fn parse_morphism(obj: &Map<String, Value>, path: &str) -> Result<MorphismDoc> {
    let cp = join(path, "category");
    let category = match get(obj, "category", path)?.as_str() {
        Some("algebra") => MorphismCategory::Algebra,
        Some("coalgebra") => MorphismCategory::Coalgebra,
        Some("module") => MorphismCategory::Module,
        Some("comodule") => MorphismCategory::Comodule,
        _ => {
            return Err(field_err(
                &cp,
                "expected \"algebra\", \"coalgebra\", \"module\" or \"comodule\"",
            ))
        }
    };
    let sp = join(path, "source");
    let tp = join(path, "target");
    let source = parse_at(get(obj, "source", path)?, &sp)?;
    let target = parse_at(get(obj, "target", path)?, &tp)?;
    let expected = match category {
        MorphismCategory::Algebra => "hom-algebra",
        MorphismCategory::Coalgebra => "hom-coalgebra",
        MorphismCategory::Module => "hom-module",
        MorphismCategory::Comodule => "hom-comodule",
    };
    for (doc, p) in [(&source, &sp), (&target, &tp)] {
        if doc.kind() != expected {
            return Err(field_err(p, format!("expected a {expected} document")));
        }
    }
    let map = LinearMap::new(matrix(get(obj, "matrix", path)?, &join(path, "matrix"))?);
    Ok(MorphismDoc {
        category,
        source: Box::new(source),
        target: Box::new(target),
        map,
    })
}

pub fn rational_json(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

pub fn vector_json(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational_json).collect())
}

pub fn matrix_json(m: &Matrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| vector_json(r)).collect())
}

fn is_zero(v: &[Rational]) -> bool {
    crate::exact_math::is_zero_vec(v)
}

fn algebra_body(a: &HomAlgebra) -> Map<String, Value> {
    let n = a.dim();
    let mut products = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let v = a.basis_product(i, j);
            if !is_zero(v) {
                products.push(json!([i, j, vector_json(v)]));
            }
        }
    }
    let mut m = Map::new();
    m.insert("kind".into(), "hom-algebra".into());
    m.insert("dim".into(), n.into());
    m.insert("products".into(), Value::Array(products));
    m.insert("twist".into(), matrix_json(a.twist()));
    m
}

pub fn algebra_json(a: &HomAlgebra) -> Value {
    Value::Object(algebra_body(a))
}

pub fn coalgebra_json(c: &HomCoalgebra) -> Value {
    let n = c.dim();
    let mut coproducts = Vec::new();
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let v = c.structure_constant(k, i, j);
                if !v.is_zero() {
                    coproducts.push(json!([k, i, j, rational_json(v)]));
                }
            }
        }
    }
    json!({
        "kind": "hom-coalgebra",
        "dim": n,
        "coproducts": coproducts,
        "twist": matrix_json(c.twist()),
    })
}

pub fn module_json(m: &HomModule) -> Value {
    let (n, md) = (m.algebra().dim(), m.mdim());
    let mut actions = Vec::new();
    for a in 0..md {
        for i in 0..n {
            let v = m.basis_action(a, i);
            if !is_zero(v) {
                actions.push(json!([a, i, vector_json(v)]));
            }
        }
    }
    json!({
        "kind": "hom-module",
        "algebra": algebra_json(m.algebra()),
        "dim": md,
        "actions": actions,
        "twist": matrix_json(m.twist()),
    })
}

pub fn comodule_json(c: &HomComodule) -> Value {
    let (n, md) = (c.coalgebra().dim(), c.mdim());
    let mut coactions = Vec::new();
    for a in 0..md {
        let phi = c.basis_coaction(a);
        for b in 0..md {
            for i in 0..n {
                let v = &phi[b * n + i];
                if !v.is_zero() {
                    coactions.push(json!([a, b, i, rational_json(v)]));
                }
            }
        }
    }
    json!({
        "kind": "hom-comodule",
        "coalgebra": coalgebra_json(c.coalgebra()),
        "dim": md,
        "coactions": coactions,
        "twist": matrix_json(c.twist()),
    })
}

pub fn quotient_json(q: &QuotientPresentation) -> Value {
    match q.family() {
        QuotientFamily::Poly { degree, k } => json!({
            "kind": "quotient", "family": "poly", "N": degree, "k": rational_json(k),
        }),
        QuotientFamily::Tensor {
            alphabet,
            length,
            twists,
        } => json!({
            "kind": "quotient", "family": "tensor", "alphabet": alphabet, "length": length,
            "twists": vector_json(twists),
        }),
        QuotientFamily::QPlane { r, s, q, k } => json!({
            "kind": "quotient", "family": "qplane", "R": r, "S": s,
            "q": rational_json(q), "k": rational_json(k),
        }),
    }
}

fn grid_json(grid: &[Vec<Option<Rational>>]) -> Value {
    Value::Array(
        grid.iter()
            .map(|row| {
                Value::Array(
                    row.iter()
                        .map(|x| x.as_ref().map_or(Value::Null, rational_json))
                        .collect(),
                )
            })
            .collect(),
    )
}

pub fn bipoly_json(h: &BiPoly) -> Value {
    json!({
        "kind": "bipoly",
        "r": h.r(),
        "s": h.s(),
        "coeffs": grid_json(&h.grid()),
    })
}

pub fn table_json(t: &BiSequence) -> Value {
    json!({
        "kind": "bisequence",
        "M": t.m_max(),
        "N": t.n_max(),
        "entries": Value::Array(t.rows().iter().map(|r| vector_json(r)).collect()),
    })
}

pub fn boundary_json(b: &Boundary) -> Value {
    json!({
        "kind": "boundary",
        "M": b.m_max(),
        "N": b.n_max(),
        "entries": grid_json(&b.rows()),
    })
}

pub fn violation_json(v: &Violation) -> Value {
    json!({
        "axiom": v.axiom,
        "indices": v.indices,
        "lhs": vector_json(&v.lhs),
        "rhs": vector_json(&v.rhs),
    })
}

pub fn report_violations(r: &AxiomReport) -> Vec<Value> {
    r.violations.iter().map(violation_json).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_math::rat;
    use crate::homalg::zoo;

    #[test]
    fn algebra_roundtrip() {
        let a = zoo::truncated_poly(3, rat(2));
        match parse_document(&algebra_json(&a)).unwrap() {
            Document::Algebra(b) => assert_eq!(a, b),
            other => panic!("wrong kind {}", other.kind()),
        }
    }

    #[test]
    fn errors_name_the_field() {
        let mut v = algebra_json(&zoo::dual_numbers());
        v["products"][0][2][1] = json!(3);
        let err = parse_document(&v).unwrap_err().to_string();
        assert!(err.contains("products[0][2][1]"), "{err}");
        let v = json!({"kind": "quotient", "family": "poly", "N": 3, "k": "0"});
        let err = parse_document(&v).unwrap_err().to_string();
        assert!(err.contains("`k`"), "{err}");
    }

    #[test]
    fn inline_quotients() {
        assert_eq!(parse_quotient_spec("poly:N=3,k=2").unwrap().dim(), 4);
        assert_eq!(parse_quotient_spec("tensor:alphabet=2,length=2,twists=2;3").unwrap().dim(), 7);
        assert_eq!(parse_quotient_spec("qplane:R=1,S=2,q=2,k=3").unwrap().dim(), 6);
        assert!(parse_quotient_spec("poly:N=3").is_err());
    }
}
