//! Command-line front end.
//!
//! Every subcommand prints one pretty-printed JSON report on standard output
//! with keys in sorted order, so identical inputs give byte-identical output.
//! Exit codes: 0 pass, 1 verification failed, 2 input error.

pub mod json;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact_math::{parse_rational, Rational};
use crate::homalg::{
    check_algebra_morphism, check_coalgebra_morphism, check_comodule_morphism,
    check_module_morphism, dualize_algebra, dualize_algebra_morphism, dualize_module,
    dualize_module_morphism, verify_hom_algebra, verify_hom_coalgebra, verify_hom_comodule,
    verify_hom_module, AxiomReport,
};
use crate::qplane::{self, QParams, QPoly};
use crate::recseq::{self, BiPoly, BiSequence, Boundary, CaseId};
use crate::sweedler::{
    quotient_dual_coalgebra, sweedler_delta, sweedler_twist, QuotientFamily,
    QuotientPresentation, SweedlerFunctional,
};
use json::{
    parse_boundary_document, parse_document, parse_quotient_spec, rational_json,
    report_violations, vector_json, Document, MorphismCategory, MorphismDoc,
};

#[derive(Parser, Debug)]
#[command(name = "homdual", version, about = "Exact Hom-algebra, Sweedler dual and recursive sequence toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the axioms of a structure document, or of every `*.json` in a directory.
    Verify {
        file: Option<PathBuf>,
        #[arg(long, value_name = "DIR", conflicts_with = "file")]
        all: Option<PathBuf>,
    },
    /// Dualize an algebra, module or morphism document.
    Dualize { file: PathBuf },
    /// Coproduct and twist of a functional on a quotient presentation.
    SweedlerDelta {
        /// A quotient document or an inline spec such as `poly:N=3,k=2`.
        #[arg(long)]
        quotient: String,
        /// Comma-separated dual-basis coordinates.
        #[arg(long, allow_hyphen_values = true)]
        functional: String,
    },
    /// Expand a quantum-plane expression into normal form.
    Expand {
        #[arg(long, value_enum)]
        op: ExpandOp,
        /// A word in `x` and `y`, for `normal-order`.
        #[arg(long)]
        word: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        q: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        k: String,
    },
    /// Fill a table from a boundary with one of the three case recursions.
    SeqGen {
        #[arg(long)]
        h: PathBuf,
        #[arg(long)]
        case: u8,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        /// Twist parameter; when given, the stencil is derived from the twisted product.
        #[arg(long, allow_hyphen_values = true)]
        k: Option<String>,
        /// A boundary document, or `ones`.
        #[arg(long)]
        boundary: String,
        #[arg(long = "M")]
        m: usize,
        #[arg(long = "N")]
        n: usize,
    },
    /// Evaluate the annihilation residuals of a table.
    SeqOracle {
        #[arg(long)]
        table: PathBuf,
        #[arg(long)]
        h: PathBuf,
        #[arg(long)]
        case: u8,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long, allow_hyphen_values = true)]
        k: String,
        /// A single index `m,n`.
        #[arg(long, conflicts_with = "all")]
        at: Option<String>,
        #[arg(long)]
        all: bool,
    },
    /// Search for the smallest annihilating bivariate polynomial of a table.
    SeqMinpoly {
        #[arg(long)]
        table: PathBuf,
        #[arg(long)]
        rmax: usize,
        #[arg(long)]
        smax: usize,
    },
    /// Quantum convolution of two tables.
    Convolve {
        #[arg(long)]
        f: PathBuf,
        #[arg(long)]
        g: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long = "M")]
        m: usize,
        #[arg(long = "N")]
        n: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ExpandOp {
    NormalOrder,
    HomPower,
    QbinomFormula,
}

/// What a run produced: exit code and the two output streams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Status {
    Pass,
    Fail,
}

struct Success {
    status: Status,
    violations: Vec<Value>,
    result: Value,
}

impl Success {
    fn pass(result: Value) -> Self {
        Success {
            status: Status::Pass,
            violations: Vec::new(),
            result,
        }
    }

    fn checked(violations: Vec<Value>, result: Value) -> Self {
        Success {
            status: if violations.is_empty() {
                Status::Pass
            } else {
                Status::Fail
            },
            violations,
            result,
        }
    }
}

/// Runs the command line `args` (program name first) in process.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let argv: Vec<String> = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let name = command_name(&cli.command);
    match dispatch(cli.command) {
        Ok(s) => {
            let (code, status) = match s.status {
                Status::Pass => (0, "pass"),
                Status::Fail => (1, "fail"),
            };
            let report = json!({
                "command": name,
                "argv": argv,
                "status": status,
                "violations": s.violations,
                "result": s.result,
            });
            let stderr = if code == 1 {
                format!("{name}: {} violation(s)\n", s.violations.len())
            } else {
                String::new()
            };
            Outcome {
                code,
                stdout: render(&report),
                stderr,
            }
        }
        Err(e) => {
            let report = json!({
                "command": name,
                "argv": argv,
                "status": "error",
                "error": e.to_string(),
                "violations": [],
                "result": null,
            });
            Outcome {
                code: 2,
                stdout: render(&report),
                stderr: format!("error: {e}\n"),
            }
        }
    }
}

fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Verify { .. } => "verify",
        Command::Dualize { .. } => "dualize",
        Command::SweedlerDelta { .. } => "sweedler-delta",
        Command::Expand { .. } => "expand",
        Command::SeqGen { .. } => "seq-gen",
        Command::SeqOracle { .. } => "seq-oracle",
        Command::SeqMinpoly { .. } => "seq-minpoly",
        Command::Convolve { .. } => "convolve",
    }
}

fn dispatch(command: Command) -> Result<Success> {
    match command {
        Command::Verify { file: Some(f), .. } => verify(&read_document(&f)?),
        Command::Verify { all: Some(dir), .. } => verify_dir(&dir),
        Command::Verify { .. } => Err(Error::Input("verify needs a file or --all <dir>".into())),
        Command::Dualize { file } => dualize(read_document(&file)?),
        Command::SweedlerDelta {
            quotient,
            functional,
        } => delta(&quotient, &functional),
        Command::Expand { op, word, n, q, k } => {
            let params = QParams::new(arg_rational("q", &q)?, arg_rational("k", &k)?)?;
            expand(op, word.as_deref(), n, &params)
        }
        Command::SeqGen {
            h,
            case,
            q,
            k,
            boundary,
            m,
            n,
        } => {
            let h = read_bipoly(&h)?;
            let case = CaseId::try_from(case)?;
            let q = arg_rational("q", &q)?;
            let boundary = read_boundary(&boundary, &h, m, n)?;
            let table = match k {
                None => recseq::generate_sequence(&h, case, &q, &boundary)?,
                Some(k) => {
                    let params = QParams::new(q, arg_rational("k", &k)?)?;
                    recseq::generate_sequence_derived(&h, case, &params, &boundary)?
                }
            };
            Ok(Success::pass(json::table_json(&table)))
        }
        Command::SeqOracle {
            table,
            h,
            case,
            q,
            k,
            at,
            ..
        } => {
            let table = read_table(&table)?;
            let h = read_bipoly(&h)?;
            let case = CaseId::try_from(case)?;
            let params = QParams::new(arg_rational("q", &q)?, arg_rational("k", &k)?)?;
            oracle(&table, &h, case, &params, at.as_deref())
        }
        Command::SeqMinpoly { table, rmax, smax } => {
            let table = read_table(&table)?;
            let found = recseq::minimal_bipoly(&table, rmax, smax)?;
            Ok(Success::pass(json!({
                "bipoly": found.as_ref().map_or(Value::Null, json::bipoly_json),
                "text": found.as_ref().map_or(Value::Null, |h| Value::String(h.to_string())),
            })))
        }
        Command::Convolve { f, g, q, m, n } => {
            let (f, g) = (read_table(&f)?, read_table(&g)?);
            let q = arg_rational("q", &q)?;
            let out = recseq::quantum_convolution(&f, &g, &q, m, n)?;
            Ok(Success::pass(json::table_json(&out)))
        }
    }
}

fn arg_rational(name: &str, s: &str) -> Result<Rational> {
    parse_rational(s).map_err(|e| Error::Input(format!("argument --{name}: {e}")))
}

fn read_json(path: &Path) -> Result<Value> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Error::Input(format!("{} is not valid JSON: {e}", path.display())))
}

fn in_file(path: &Path, e: Error) -> Error {
    match e {
        Error::Input(msg) => Error::Input(format!("{}: {msg}", path.display())),
        other => other,
    }
}

fn read_document(path: &Path) -> Result<Document> {
    parse_document(&read_json(path)?).map_err(|e| in_file(path, e))
}

fn read_bipoly(path: &Path) -> Result<BiPoly> {
    match read_document(path)? {
        Document::BiPoly(h) => Ok(h),
        other => Err(Error::Input(format!(
            "{}: field `kind`: expected \"bipoly\", got {:?}",
            path.display(),
            other.kind()
        ))),
    }
}

fn read_table(path: &Path) -> Result<BiSequence> {
    match read_document(path)? {
        Document::Table(t) => Ok(t),
        other => Err(Error::Input(format!(
            "{}: field `kind`: expected \"bisequence\", got {:?}",
            path.display(),
            other.kind()
        ))),
    }
}

fn read_boundary(spec: &str, h: &BiPoly, m: usize, n: usize) -> Result<Boundary> {
    if spec == "ones" {
        return Ok(Boundary::constant(h.r(), h.s(), m, n, &Rational::one()));
    }
    let path = Path::new(spec);
    let b = parse_boundary_document(&read_json(path)?).map_err(|e| in_file(path, e))?;
    if b.m_max() != m || b.n_max() != n {
        return Err(Error::ParamMismatch(format!(
            "{}: boundary extent ({}, {}) does not match --M {m} --N {n}",
            path.display(),
            b.m_max(),
            b.n_max()
        )));
    }
    Ok(b)
}

fn stability_bound(q: &QuotientPresentation) -> usize {
    match q.family() {
        QuotientFamily::Poly { degree, .. } => degree + 1,
        QuotientFamily::Tensor { length, .. } => length + 1,
        QuotientFamily::QPlane { r, s, .. } => r.max(s) + 1,
    }
}

fn check_morphism(m: &MorphismDoc) -> Result<AxiomReport> {
    match (m.category, m.source.as_ref(), m.target.as_ref()) {
        (MorphismCategory::Algebra, Document::Algebra(s), Document::Algebra(t)) => {
            check_algebra_morphism(s, t, &m.map)
        }
        (MorphismCategory::Coalgebra, Document::Coalgebra(s), Document::Coalgebra(t)) => {
            check_coalgebra_morphism(s, t, &m.map)
        }
        (MorphismCategory::Module, Document::Module(s), Document::Module(t)) => {
            check_module_morphism(s, t, &m.map)
        }
        (MorphismCategory::Comodule, Document::Comodule(s), Document::Comodule(t)) => {
            check_comodule_morphism(s, t, &m.map)
        }
        _ => unreachable!("parser enforces matching kinds"),
    }
}

fn verify(doc: &Document) -> Result<Success> {
    let report = match doc {
        Document::Algebra(a) => verify_hom_algebra(a),
        Document::Coalgebra(c) => verify_hom_coalgebra(c),
        Document::Module(m) => verify_hom_module(m),
        Document::Comodule(c) => verify_hom_comodule(c),
        Document::Quotient(q) => verify_hom_algebra(q.algebra())
            .merge(q.check_ideal_stability(stability_bound(q))?)
            .merge(verify_hom_coalgebra(&quotient_dual_coalgebra(q))),
        Document::Morphism(m) => check_morphism(m)?,
        Document::BiPoly(_) | Document::Table(_) | Document::Boundary(_) => AxiomReport::default(),
    };
    Ok(Success::checked(
        report_violations(&report),
        json!({ "kind": doc.kind() }),
    ))
}

fn verify_dir(dir: &Path) -> Result<Success> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| Error::Input(format!("cannot read directory {}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    let outcomes: Vec<(String, Result<(String, Success)>)> = std::thread::scope(|scope| {
        let handles: Vec<_> = files
            .iter()
            .map(|p| {
                scope.spawn(move || {
                    let name = p
                        .file_name()
                        .map(|n| n.to_string_lossy().into_owned())
                        .unwrap_or_default();
                    let r = read_document(p).and_then(|d| {
                        let kind = d.kind().to_string();
                        verify(&d).map(|s| (kind, s))
                    });
                    (name, r)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verifier thread panicked"))
            .collect()
    });
    let mut entries = Vec::new();
    let mut violations = Vec::new();
    let mut first_error = None;
    for (name, r) in outcomes {
        match r {
            Ok((kind, s)) => {
                let status = if s.status == Status::Pass { "pass" } else { "fail" };
                entries.push(json!({
                    "file": name, "kind": kind, "status": status,
                    "violations": s.violations.len(),
                }));
                violations.extend(s.violations.into_iter().map(|mut v| {
                    v["file"] = Value::String(name.clone());
                    v
                }));
            }
            Err(e) => {
                entries.push(json!({ "file": name, "status": "error", "error": e.to_string() }));
                first_error.get_or_insert(e);
            }
        }
    }
    if let Some(e) = first_error {
        return Err(e);
    }
    Ok(Success::checked(violations, json!({ "files": entries })))
}

fn dualize(doc: Document) -> Result<Success> {
    let out = match doc {
        Document::Algebra(a) => Document::Coalgebra(dualize_algebra(&a)),
        Document::Module(m) => Document::Comodule(dualize_module(&m)),
        Document::Morphism(m) => {
            let (category, map) = match m.category {
                MorphismCategory::Algebra => {
                    (MorphismCategory::Coalgebra, dualize_algebra_morphism(&m.map))
                }
                MorphismCategory::Module => {
                    (MorphismCategory::Comodule, dualize_module_morphism(&m.map))
                }
                _ => {
                    return Err(Error::Input(
                        "only algebra and module morphisms can be dualized".into(),
                    ))
                }
            };
            let dual = |d: &Document| match d {
                Document::Algebra(a) => Document::Coalgebra(dualize_algebra(a)),
                Document::Module(m) => Document::Comodule(dualize_module(m)),
                _ => unreachable!("parser enforces matching kinds"),
            };
            Document::Morphism(MorphismDoc {
                category,
                source: Box::new(dual(&m.target)),
                target: Box::new(dual(&m.source)),
                map,
            })
        }
        other => {
            return Err(Error::Input(format!(
                "field `kind`: cannot dualize a {:?} document",
                other.kind()
            )))
        }
    };
    Ok(Success::pass(out.to_json()))
}

fn read_quotient(spec: &str) -> Result<QuotientPresentation> {
    let path = Path::new(spec);
    if path.exists() {
        return match read_document(path)? {
            Document::Quotient(q) => Ok(q),
            other => Err(Error::Input(format!(
                "{}: field `kind`: expected \"quotient\", got {:?}",
                path.display(),
                other.kind()
            ))),
        };
    }
    parse_quotient_spec(spec)
}

fn delta(quotient: &str, functional: &str) -> Result<Success> {
    let q = read_quotient(quotient)?;
    let coeffs = functional
        .split(',')
        .map(|c| arg_rational("functional", c))
        .collect::<Result<Vec<_>>>()?;
    let f = SweedlerFunctional::new(&q, coeffs)
        .map_err(|e| Error::Input(format!("argument --functional: {e}")))?;
    let d = sweedler_delta(&q, &f)?;
    let t = sweedler_twist(&q, &f)?;
    let terms: Vec<Value> = d
        .terms()
        .iter()
        .map(|(c, i, j)| json!([i, j, rational_json(c)]))
        .collect();
    Ok(Success::pass(json!({
        "quotient": json::quotient_json(&q),
        "labels": q.labels().iter().map(|m| m.to_string()).collect::<Vec<_>>(),
        "functional": vector_json(f.coeffs()),
        "delta": terms,
        "twist": vector_json(t.coeffs()),
    })))
}

fn poly_result(p: &QPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .iter()
        .map(|(&(m, n), c)| json!([m, n, rational_json(c)]))
        .collect();
    json!({ "polynomial": p.to_string(), "terms": terms })
}

fn expand(op: ExpandOp, word: Option<&str>, n: Option<usize>, params: &QParams) -> Result<Success> {
    let need_n = || n.ok_or_else(|| Error::Input("argument --n is required for this op".into()));
    let p = match op {
        ExpandOp::NormalOrder => {
            let word = word
                .ok_or_else(|| Error::Input("argument --word is required for normal-order".into()))?;
            qplane::normal_order(&qplane::parse_word(word)?, params)
        }
        ExpandOp::HomPower => {
            let base = QPoly::x(params.clone()).add(&QPoly::y(params.clone()))?;
            qplane::hom_power_left(&base, need_n()?)
        }
        ExpandOp::QbinomFormula => qplane::quantum_binomial_expand(need_n()?, params),
    };
    Ok(Success::pass(poly_result(&p)))
}

fn parse_at(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::Input(format!("argument --at: expected m,n, got {s:?}"));
    let (m, n) = s.split_once(',').ok_or_else(bad)?;
    Ok((
        m.trim().parse().map_err(|_| bad())?,
        n.trim().parse().map_err(|_| bad())?,
    ))
}

fn oracle(
    table: &BiSequence,
    h: &BiPoly,
    case: CaseId,
    params: &QParams,
    at: Option<&str>,
) -> Result<Success> {
    let residuals = match at {
        Some(s) => {
            let (m, n) = parse_at(s)?;
            vec![(m, n, recseq::annihilation_residual(table, h, case, m, n, params)?)]
        }
        None => recseq::annihilation_residuals(table, h, case, params)?,
    };
    let violations = residuals
        .iter()
        .filter(|(_, _, r)| !r.is_zero())
        .map(|(m, n, r)| json!({ "axiom": "annihilation", "indices": [m, n], "residual": rational_json(r) }))
        .collect();
    let grid: Vec<Value> = residuals
        .iter()
        .map(|(m, n, r)| json!([m, n, rational_json(r)]))
        .collect();
    Ok(Success::checked(violations, json!({ "residuals": grid })))
}
