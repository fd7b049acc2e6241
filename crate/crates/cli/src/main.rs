use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use bicompat::algebra::{
    annihilator, center, centroid, find_units, format_with_labels, is_idempotent_algebra, Algebra, Product, Side,
    Verdict,
};
use bicompat::compat::{all_members_associative, check, solve_linear_with, CompatKind};
use bicompat::constructions::{
    example_3dim, example_6dim, example_band22, matrix_algebra, path_algebra, rectangular_band_algebra, zero_algebra,
    BandSpec, QuiverSpec,
};
use bicompat::free::{
    extend_star, star_condition, truncated_centroid_dim, verify_id_matching_truncated_with, FreeKind,
};
use bicompat::io::{self, TableFile};
use bicompat::linalg::Subspace;
use bicompat::{suite, Error, Field};

mod render;

/// Exact checks and solvers for pairs of associative products.
#[derive(Parser)]
#[command(name = "bicompat", version)]
struct Cli {
    /// Line-delimited JSON reports instead of human-readable text.
    #[arg(long, global = true)]
    machine: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a built-in algebra or product as a JSON file.
    #[command(subcommand)]
    Gen(Gen),
    /// Check a product against an algebra for the given relations.
    Check {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        product: PathBuf,
        /// Comma-separated relations; all five by default.
        #[arg(long, value_delimiter = ',')]
        kinds: Vec<CompatKind>,
    },
    /// Every product in the given relation with an algebra's product.
    Solve {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        kind: CompatKind,
        /// Also decide whether every member of the space is associative.
        #[arg(long)]
        associativity: bool,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Associativity, units, idempotency, center, centroid and annihilator.
    Invariants {
        #[arg(long)]
        algebra: PathBuf,
    },
    /// Free-algebra tools.
    #[command(subcommand)]
    Free(Free),
    /// Run the built-in verification suite.
    Paper {
        /// Only these entry ids (comma-separated or repeated).
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// List entry ids and exit.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Args)]
struct FieldArg {
    /// `Q` or `F<p>` for a prime p.
    #[arg(long, default_value = "Q", value_parser = parse_field)]
    field: Field,
}

#[derive(Subcommand)]
enum Gen {
    /// Semigroup algebra of the rows x cols rectangular band.
    Band {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[command(flatten)]
        field: FieldArg,
    },
    /// n x n matrices.
    Matrix {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Zero multiplication on an n-dimensional space.
    Zero {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Path algebra of an acyclic quiver `{"vertices": n, "arrows": [[s, t], ...]}`.
    Path {
        #[arg(long)]
        quiver: PathBuf,
        #[command(flatten)]
        field: FieldArg,
    },
    /// One of the worked examples; `--product` selects its extra product.
    Example {
        #[arg(long)]
        name: ExampleName,
        #[arg(long, default_value = "dot")]
        product: ExampleProduct,
        #[command(flatten)]
        field: FieldArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ExampleName {
    #[value(name = "3dim")]
    ThreeDim,
    #[value(name = "6dim")]
    SixDim,
    #[value(name = "band22")]
    Band22,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExampleProduct {
    Dot,
    Star,
    Star2,
}

#[derive(Subcommand)]
enum Free {
    /// Check the star condition of a star map file.
    CheckStar {
        #[arg(long)]
        star: PathBuf,
    },
    /// Evaluate the extended product a ∗ b; polynomials as `[["word", "coeff"], ...]`.
    Extend {
        #[arg(long)]
        star: PathBuf,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Check the extended product on all word triples of total length ≤ degree.
    Verify {
        #[arg(long)]
        star: PathBuf,
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Dimension of the truncated centroid of a free algebra.
    CentroidDim {
        #[arg(long)]
        kind: FreeKind,
        /// Variable names, e.g. `xy`.
        #[arg(long)]
        vars: String,
        #[arg(long)]
        degree: usize,
    },
}

fn parse_field(s: &str) -> Result<Field, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A failed command: message and exit code.
struct Failure(String, u8);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::NotPrime(_) => 2,
            Error::FieldMismatch(..)
            | Error::DimensionMismatch { .. }
            | Error::IndexOutOfRange { .. }
            | Error::ZeroDimension
            | Error::ShapeMismatch(_)
            | Error::AlphabetMismatch(..)
            | Error::WrongVariableCount { .. } => 3,
            Error::NonAssociative(..)
            | Error::NonAssociativeBase(..)
            | Error::NotInCentroid
            | Error::NotInAnnihilator
            | Error::CyclicQuiver
            | Error::NonzeroConstantTerm
            | Error::ConditionNotVerified(..)
            | Error::Undecided { .. }
            | Error::DivisionByZero => 4,
            Error::InternalContradiction { .. } => 1,
        };
        Failure(e.to_string(), code)
    }
}

/// Collected output and whether every checked property held.
struct Report {
    out: String,
    ok: bool,
}

impl Report {
    fn new() -> Self {
        Report {
            out: String::new(),
            ok: true,
        }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.out.push_str(s.as_ref());
        self.out.push('\n');
    }

    fn json(&mut self, v: &Value) {
        self.line(serde_json::to_string(v).expect("serializable"));
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(format!("cannot read {}: {e}", path.display()), 2))
}

fn read_table(path: &Path) -> Result<TableFile, Failure> {
    Ok(io::read_table(&read(path)?)?)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(report) => {
            print!("{}", report.out);
            ExitCode::from(if report.ok { 0 } else { 1 })
        }
        Err(Failure(msg, code)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> Result<Report, Failure> {
    let m = cli.machine;
    match cli.command {
        Command::Gen(g) => cmd_gen(g),
        Command::Check {
            algebra,
            product,
            kinds,
        } => cmd_check(m, &algebra, &product, &kinds),
        Command::Solve {
            algebra,
            kind,
            associativity,
            workers,
        } => cmd_solve(m, &algebra, kind, associativity, workers),
        Command::Invariants { algebra } => cmd_invariants(m, &algebra),
        Command::Free(f) => cmd_free(m, f),
        Command::Paper { only, workers, list } => cmd_paper(m, &only, workers, list),
    }
}

fn cmd_gen(g: Gen) -> Result<Report, Failure> {
    let text = match g {
        Gen::Band { rows, cols, field } => {
            io::algebra_to_json(&rectangular_band_algebra(BandSpec::new(rows, cols)?, field.field)?)
        }
        Gen::Matrix { n, field } => io::algebra_to_json(&matrix_algebra(n, field.field)?),
        Gen::Zero { n, field } => io::algebra_to_json(&zero_algebra(n, field.field)?),
        Gen::Path { quiver, field } => {
            let spec: QuiverFile =
                serde_json::from_str(&read(&quiver)?).map_err(|e| Failure(format!("quiver file: {e}"), 2))?;
            let spec = QuiverSpec {
                vertices: spec.vertices,
                arrows: spec.arrows,
            };
            io::algebra_to_json(&path_algebra(&spec, field.field)?)
        }
        Gen::Example { name, product, field } => {
            let f = field.field;
            let (a, extra): (Algebra, Vec<Product>) = match name {
                ExampleName::ThreeDim => {
                    let (a, s, s2) = example_3dim(f)?;
                    (a, vec![s, s2])
                }
                ExampleName::SixDim => {
                    let (a, s) = example_6dim(f)?;
                    (a, vec![s])
                }
                ExampleName::Band22 => {
                    let (a, s) = example_band22(f)?;
                    (a, vec![s])
                }
            };
            let pick = match product {
                ExampleProduct::Dot => None,
                ExampleProduct::Star => Some(0),
                ExampleProduct::Star2 => Some(1),
            };
            match pick {
                None => io::algebra_to_json(&a),
                Some(i) => {
                    let p = extra
                        .get(i)
                        .ok_or_else(|| Failure("this example has a single extra product".into(), 2))?;
                    io::product_to_json(p, Some(a.labels()))
                }
            }
        }
    };
    let mut r = Report::new();
    r.line(text);
    Ok(r)
}

#[derive(serde::Deserialize)]
#[serde(deny_unknown_fields)]
struct QuiverFile {
    vertices: usize,
    arrows: Vec<(usize, usize)>,
}

fn cmd_check(machine: bool, algebra: &Path, product: &Path, kinds: &[CompatKind]) -> Result<Report, Failure> {
    let a = read_table(algebra)?;
    let star = read_table(product)?.product;
    let labels = a.labels_or_default();
    let kinds = if kinds.is_empty() { &CompatKind::ALL[..] } else { kinds };
    let mut r = Report::new();
    for &kind in kinds {
        let report = check(kind, &star, &a.product)?;
        r.ok &= report.holds;
        if machine {
            r.json(&serde_json::to_value(&report).expect("serializable"));
        } else {
            render::compat_report(&mut r.out, &labels, &report);
        }
    }
    Ok(r)
}

fn cmd_solve(
    machine: bool,
    algebra: &Path,
    kind: CompatKind,
    associativity: bool,
    workers: usize,
) -> Result<Report, Failure> {
    let a = read_table(algebra)?;
    let labels = a.labels_or_default();
    let ps = solve_linear_with(kind, &a.product, workers.max(1))?;
    let mut r = Report::new();
    if machine {
        r.json(&io::space_report(&ps));
    } else {
        render::product_space(&mut r.out, &labels, &ps);
    }
    if associativity {
        let verdict = all_members_associative(&ps)?;
        r.ok = verdict.is_pass();
        if machine {
            r.json(&json!({
                "check": "all-members-associative",
                "pass": verdict.is_pass(),
                "witness": verdict.witness(),
            }));
        } else {
            match verdict {
                Verdict::Pass => r.line("every member is associative"),
                Verdict::Fail(w) => {
                    let (i, j, k) = w.triple;
                    r.line(format!(
                        "non-associative member (coordinates {}) at ({}, {}, {})",
                        w.coords.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", "),
                        labels[i],
                        labels[j],
                        labels[k]
                    ));
                }
            }
        }
    }
    Ok(r)
}

fn subspace_value(s: &Subspace) -> Value {
    json!({ "dim": s.dim(), "basis": s.basis_vectors() })
}

fn cmd_invariants(machine: bool, algebra: &Path) -> Result<Report, Failure> {
    let a = read_table(algebra)?;
    let labels = a.labels_or_default();
    let p = &a.product;
    let mut r = Report::new();
    let assoc = p.is_associative();
    r.ok = assoc.is_pass();
    let units = [Side::Left, Side::Right, Side::TwoSided]
        .into_iter()
        .map(|side| Ok((side, find_units(p, side)?)))
        .collect::<Result<Vec<_>, Error>>()?;
    let idempotent = is_idempotent_algebra(p);
    let structures = [
        ("center", center(p)),
        ("centroid", centroid(p)),
        ("annihilator", annihilator(p)),
    ];
    if machine {
        r.json(&json!({"invariant": "associative", "value": assoc.is_pass(), "witness": assoc.witness()}));
        for (side, u) in &units {
            let side = render::side_name(*side);
            r.json(&match u {
                None => json!({"invariant": "unit", "side": side, "exists": false}),
                Some(aff) => json!({
                    "invariant": "unit",
                    "side": side,
                    "exists": true,
                    "particular": aff.particular,
                    "directions": subspace_value(&aff.directions),
                }),
            });
        }
        r.json(&json!({"invariant": "idempotent-algebra", "value": idempotent}));
        for (name, s) in &structures {
            let mut v = subspace_value(s);
            v["invariant"] = json!(name);
            r.json(&v);
        }
    } else {
        let yes_no = |b: bool| if b { "yes" } else { "no" };
        match assoc {
            Verdict::Pass => r.line("associative        yes"),
            Verdict::Fail((i, j, k)) => r.line(format!(
                "associative        no, at ({}, {}, {})",
                labels[i], labels[j], labels[k]
            )),
        }
        for (side, u) in &units {
            let name = format!("{} unit", render::side_name(*side));
            match u {
                None => r.line(format!("{name:<18} none")),
                Some(aff) if aff.dim() == 0 => {
                    r.line(format!("{name:<18} {}", format_with_labels(&labels, &aff.particular)))
                }
                Some(aff) => r.line(format!(
                    "{name:<18} {} + a {}-dim space",
                    format_with_labels(&labels, &aff.particular),
                    aff.dim()
                )),
            }
        }
        r.line(format!("A·A = A            {}", yes_no(idempotent)));
        for (name, s) in &structures {
            r.line(format!("{name:<18} dim {}", s.dim()));
            if *name != "centroid" {
                for v in s.basis_vectors() {
                    r.line(format!("  {}", format_with_labels(&labels, &v)));
                }
            }
        }
    }
    Ok(r)
}

fn cmd_free(machine: bool, f: Free) -> Result<Report, Failure> {
    let mut r = Report::new();
    match f {
        Free::CheckStar { star } => {
            let sm = io::read_star_map(&read(&star)?)?;
            let verdict = star_condition(&sm);
            r.ok = verdict.is_pass();
            let witness = verdict.witness().map(|w| {
                json!({
                    "x": w.x.to_string(), "y": w.y.to_string(), "z": w.z.to_string(),
                    "lhs": io::ncpoly_to_value(&w.lhs), "rhs": io::ncpoly_to_value(&w.rhs),
                })
            });
            if machine {
                r.json(&json!({"check": "star-condition", "pass": r.ok, "witness": witness}));
            } else if let Some(w) = verdict.witness() {
                r.line(format!("star condition fails at ({}, {}, {})", w.x, w.y, w.z));
                r.line(format!("  lhs: {}", w.lhs));
                r.line(format!("  rhs: {}", w.rhs));
            } else {
                r.line("star condition holds");
            }
        }
        Free::Extend { star, a, b } => {
            let sm = io::read_star_map(&read(&star)?)?;
            let poly = |s: &str| -> Result<_, Failure> {
                let v: Value = serde_json::from_str(s).map_err(|e| Failure(format!("polynomial: {e}"), 2))?;
                Ok(io::ncpoly_from_value(&v, sm.vars(), sm.field())?)
            };
            let (a, b) = (poly(&a)?, poly(&b)?);
            let c = extend_star(&sm, &a, &b)?;
            if machine {
                r.json(&json!({"product": io::ncpoly_to_value(&c)}));
            } else {
                r.line(format!("({a}) ∗ ({b}) = {c}"));
            }
        }
        Free::Verify { star, degree, workers } => {
            let sm = io::read_star_map(&read(&star)?)?;
            let verdict = verify_id_matching_truncated_with(&sm, degree, workers.max(1))?;
            r.ok = verdict.is_pass();
            if machine {
                r.json(&json!({
                    "check": "id-matching-truncated",
                    "degree": degree,
                    "pass": r.ok,
                    "witness": verdict.witness(),
                }));
            } else if let Some(w) = verdict.witness() {
                r.line(format!("{} fails at a = {}, b = {}, c = {}", w.identity, w.a, w.b, w.c));
                r.line(format!("  lhs: {}", w.lhs));
                r.line(format!("  rhs: {}", w.rhs));
            } else {
                r.line(format!(
                    "id-matching and associative on all word triples of total length <= {degree}"
                ));
            }
        }
        Free::CentroidDim { kind, vars, degree } => {
            let letters: Vec<char> = vars.chars().collect();
            let dim = truncated_centroid_dim(kind, &letters, degree)?;
            if machine {
                r.json(&json!({"kind": kind.to_string(), "vars": vars, "degree": degree, "dim": dim}));
            } else {
                r.line(format!(
                    "truncated centroid, {kind} on {{{vars}}}, degree {degree}: dim {dim}"
                ));
            }
        }
    }
    Ok(r)
}

fn cmd_paper(machine: bool, only: &[String], workers: usize, list: bool) -> Result<Report, Failure> {
    let mut r = Report::new();
    if list {
        for e in suite::entries() {
            r.line(format!("{:<22} {}", e.id, e.title));
        }
        return Ok(r);
    }
    let selected: Vec<&'static suite::Entry> = if only.is_empty() {
        suite::entries().iter().collect()
    } else {
        only.iter()
            .map(|id| suite::find(id).ok_or_else(|| Failure(format!("unknown suite entry {id:?}"), 2)))
            .collect::<Result<_, _>>()?
    };
    let reports = suite::run_entries(&selected, workers);
    for rep in &reports {
        r.ok &= rep.pass;
        if machine {
            r.json(&serde_json::to_value(rep).expect("serializable"));
        } else {
            let _ = writeln!(
                r.out,
                "{} {:<22} {}\n       {}",
                if rep.pass { "PASS" } else { "FAIL" },
                rep.id,
                rep.title,
                rep.detail
            );
        }
    }
    if !machine {
        let passed = reports.iter().filter(|x| x.pass).count();
        r.line(format!("{passed}/{} passed", reports.len()));
    }
    Ok(r)
}
