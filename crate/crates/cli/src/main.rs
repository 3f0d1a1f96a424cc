//! `assoc`: tables and reports for the associahedral resolution of the
//! n-cycle ideal.

use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use assoc_core::betti::{betti_table, face_bound, Method};
use assoc_core::complex::{build, f_formula};
use assoc_core::morse::{self, critical_cells, d2_matching, greedy_extend, validate};
use assoc_core::polygon::{count_by_support, count_trees, dissections, is_tree};
use assoc_core::resolution::{minimality_witnesses, verify_supports_resolution_capped, DEFAULT_MAX_N};
use assoc_core::tableaux::{enumerate_syt, hook_count, involution, verify_involution, Shape, Tableau, TableauFamily};
use assoc_core::{Error, FieldKind};

#[derive(Parser)]
#[command(
    name = "assoc",
    version,
    about = "Associahedra, Betti numbers of the n-cycle ideal, and related tableaux"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Cap the worker thread count.
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Face numbers of A_n, enumerated and by formula.
    Fvector { n: usize },
    /// Betti numbers of R/J_n.
    Betti {
        n: usize,
        #[arg(long, value_enum, default_value = "all")]
        method: MethodArg,
    },
    /// Check that every restriction of A_n is acyclic or empty.
    VerifyResolution {
        n: usize,
        #[arg(long, value_enum, default_value = "gf2")]
        field: FieldArg,
        /// Raise the size cap (default 8).
        #[arg(long, value_name = "N")]
        max_n: Option<usize>,
    },
    /// Cover pairs of A_n with equal labels.
    Minimality { n: usize },
    /// The rank-two Morse matching and its critical cells.
    Morse {
        n: usize,
        /// Greedily add further equal-label pairs.
        #[arg(long)]
        extend: bool,
    },
    /// Standard Young tableaux of a shape or family.
    Syt(SytArgs),
    /// The tableau involution on associahedron tableaux of type (n, d).
    Involution {
        n: usize,
        d: usize,
        /// Only report the exhaustive check.
        #[arg(long)]
        verify: bool,
    },
    /// Dissections of the n-gon with d diagonals.
    Dissections {
        n: usize,
        d: usize,
        /// Histogram by number of endpoints.
        #[arg(long)]
        by_support: bool,
        /// Count trees among the dissections.
        #[arg(long)]
        trees: bool,
    },
    /// Betti numbers against face numbers for n = 6..9.
    Tables,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("source").required(true).args(["shape", "family"]))]
struct SytArgs {
    /// Comma-separated parts, e.g. 3,2,1.
    #[arg(long, value_delimiter = ',')]
    shape: Option<Vec<usize>>,
    #[arg(long, value_enum, requires_all = ["n", "d"])]
    family: Option<FamilyArg>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    /// List every tableau.
    #[arg(long)]
    enumerate: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Hochster,
    Closed,
    Recursion,
    All,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Hochster => Method::Hochster,
            MethodArg::Closed => Method::Closed,
            MethodArg::Recursion => Method::Recursion,
            MethodArg::All => Method::All,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FieldArg {
    Gf2,
    Rational,
}

impl From<FieldArg> for FieldKind {
    fn from(f: FieldArg) -> Self {
        match f {
            FieldArg::Gf2 => FieldKind::Gf2,
            FieldArg::Rational => FieldKind::Rational,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Assoc,
    Syzygy,
}

enum Failure {
    /// Bad input: exit 2.
    Usage(String),
    /// A check did not hold: exit 1.
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::MethodMismatch { .. }
            | Error::BoundarySquared { .. }
            | Error::Orientation(_)
            | Error::Involution(_)
            | Error::Overflow(_) => Failure::Check(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// What a subcommand produced: text, its JSON form, and whether all checks
/// held.
struct Output {
    text: String,
    json: Value,
    ok: bool,
}

fn row<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn compact(t: &Tableau) -> String {
    t.rows()
        .iter()
        .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join("/")
}

fn fvector_rows(n: usize) -> Result<(Vec<u128>, Vec<u128>), Failure> {
    let enumerated: Vec<u128> = build(n)?.face_counts().into_iter().map(|c| c as u128).collect();
    let mut formula = (0..=n - 3).map(|d| f_formula(n, d)).collect::<Result<Vec<_>, _>>()?;
    formula.push(1);
    Ok((enumerated, formula))
}

fn fvector(n: usize) -> Result<Output, Failure> {
    let (enumerated, formula) = fvector_rows(n)?;
    let ok = enumerated == formula;
    let mut text = format!("f({n}, d-1): {}\n", row(&enumerated));
    let _ = writeln!(text, "formula:    {}", row(&formula));
    let _ = writeln!(text, "{}", if ok { "agree" } else { "MISMATCH" });
    let json = json!({"n": n, "enumerated": enumerated, "formula": formula, "agree": ok});
    Ok(Output { text, json, ok })
}

fn betti(n: usize, method: Method) -> Result<Output, Failure> {
    let table = betti_table(n, method)?;
    let (violations, eq_at_one) = face_bound(&table)?;
    let ok = table.is_palindromic() && table.is_almost_linear() && violations.is_empty() && eq_at_one;
    let mut text = format!("{table}\n");
    for ((d, j), v) in table.entries() {
        let _ = writeln!(text, "  β_{{{d},{j}}} = {v}");
    }
    if matches!(method, Method::All) {
        text.push_str("hochster = closed = recursion\n");
    }
    if !ok {
        text.push_str("CHECK FAILED: palindromy, almost-linearity or the face bound\n");
    }
    let json = json!({"method": method, "table": table, "agree": true, "checks_pass": ok});
    Ok(Output { text, json, ok })
}

fn verify_resolution(n: usize, field: FieldKind, max_n: Option<usize>) -> Result<Output, Failure> {
    eprintln!("checking {} restrictions of A_{n} over {field}", 1u64 << n);
    let report = verify_supports_resolution_capped(n, field, max_n.unwrap_or(DEFAULT_MAX_N))?;
    let ok = report.passed();
    let mut text = format!(
        "A_{n} over {field}: {} restrictions checked, {} failures\n",
        report.checked,
        report.failures.len()
    );
    if let Some(first) = report.failures.first() {
        let _ = writeln!(text, "first failure at sigma = {}: {:?}", first.sigma, first.kind);
    }
    let _ = writeln!(
        text,
        "minimal: {} ({} equal-label cover pairs)",
        if report.minimal { "yes" } else { "no" },
        report.witnesses.len()
    );
    let json = serde_json::to_value(&report).expect("report serializes");
    Ok(Output { text, json, ok })
}

fn minimality(n: usize) -> Result<Output, Failure> {
    let a = build(n)?;
    let pairs = minimality_witnesses(&a);
    let mut text = String::new();
    let mut list = Vec::new();
    for &(lo, hi) in &pairs {
        let (f, g) = (a.face(lo), a.face(hi));
        let _ = writeln!(text, "{f} < {g}  label {}", f.label);
        list.push(json!({"lower": f.to_string(), "upper": g.to_string(), "label": f.label}));
    }
    let _ = writeln!(
        text,
        "{} pairs; minimal: {}",
        pairs.len(),
        if pairs.is_empty() { "yes" } else { "no" }
    );
    let json = json!({"n": n, "minimal": pairs.is_empty(), "witnesses": list});
    Ok(Output { text, json, ok: true })
}

fn morse_cmd(n: usize, extend: bool) -> Result<Output, Failure> {
    let a = build(n)?;
    let betti = betti_table(n, Method::Closed)?.totals();
    // critical cells of dimension k sit against β_{k+1}
    let target: Vec<u128> = betti[1..].to_vec();
    let m = d2_matching(&a)?;
    let report = validate(&m, &a);
    let critical = critical_cells(&m, &a);
    let mut ok = report.valid;
    let mut text = format!(
        "A_{n}: {} matched pairs, {}\n",
        m.len(),
        if report.valid { "valid" } else { "INVALID" }
    );
    for v in &report.violations {
        let _ = writeln!(text, "  {v}");
    }
    let _ = writeln!(text, "critical cells: {}", row(&critical));
    let _ = writeln!(text, "betti numbers:  {}", row(&target));
    let mut json = json!({
        "n": n,
        "pairs": m.len(),
        "validation": report,
        "critical": critical,
        "betti": target,
    });
    if n >= 6 {
        let formulas = morse::count_formulas(n)?;
        let counted = morse::count_by_enumeration(&a);
        let edges_ok = formulas == counted
            && critical.get(1).map(|&c| c as u64) == Some(formulas.critical_edges)
            && target.get(1).map(|&b| b as u64) == Some(formulas.critical_edges);
        ok &= edges_ok;
        let _ = writeln!(
            text,
            "proper two-diagonal sets {}, inscribed triangles {}, critical edges {} ({})",
            formulas.proper_d2,
            formulas.inscribed_triangles,
            formulas.critical_edges,
            if edges_ok {
                "matches β_2 and enumeration"
            } else {
                "MISMATCH"
            }
        );
        json["formulas"] = json!(formulas);
        json["formulas_agree"] = json!(edges_ok);
    }
    if n == 7 {
        let e = morse::n7_extension_counts()?;
        let _ = writeln!(
            text,
            "extension families {}/{}/{}/{}, critical edges/2-faces/3-faces {}/{}/{}",
            e.superproper_d2, e.subproper_d3, e.superproper_d3, e.subproper_d4, e.edges, e.two_faces, e.three_faces
        );
        json["n7_extension"] = json!(e);
    }
    if extend {
        let g = greedy_extend(&m, &a);
        let greport = validate(&g, &a);
        let gcrit = critical_cells(&g, &a);
        let attains = gcrit.iter().zip(&target).all(|(&c, &b)| c as u128 == b);
        ok &= greport.valid;
        let _ = writeln!(
            text,
            "greedy extension: {} pairs, {}, critical cells {} ({})",
            g.len(),
            if greport.valid { "valid" } else { "INVALID" },
            row(&gcrit),
            if attains {
                "attains the Betti numbers"
            } else {
                "does not attain the Betti numbers"
            }
        );
        json["extension"] =
            json!({"pairs": g.len(), "validation": greport, "critical": gcrit, "attains_betti": attains});
    }
    Ok(Output { text, json, ok })
}

fn syt(args: &SytArgs) -> Result<Output, Failure> {
    let (label, shape) = match (&args.shape, args.family) {
        (Some(parts), _) => {
            let s = Shape::new(parts.clone())?;
            ("shape".to_string(), s)
        }
        (None, Some(f)) => {
            let (n, d) = (args.n.unwrap_or(0), args.d.unwrap_or(0));
            let fam = match f {
                FamilyArg::Assoc => TableauFamily::Associahedron { n, d },
                FamilyArg::Syzygy => TableauFamily::Syzygy { n, d },
            };
            (fam.to_string(), fam.shape()?)
        }
        (None, None) => return Err(Failure::Usage("one of --shape or --family is required".into())),
    };
    let count = hook_count(&shape);
    let mut text = format!("{label}: shape {shape}, {count} standard tableaux\n");
    let mut json = json!({"shape": shape, "count": count});
    let mut ok = true;
    if args.enumerate {
        let all = enumerate_syt(&shape)?;
        ok = all.len() as u128 == count;
        for t in &all {
            text.push_str(&t.to_string());
        }
        if !ok {
            let _ = writeln!(text, "MISMATCH: enumerated {} tableaux", all.len());
        }
        json["tableaux"] = json!(all);
    }
    Ok(Output { text, json, ok })
}

fn involution_cmd(n: usize, d: usize, verify_only: bool) -> Result<Output, Failure> {
    let check = verify_involution(n, d)?;
    let ok = check.passed();
    let mut text = String::new();
    let mut images = Vec::new();
    if !verify_only {
        for t in (TableauFamily::Associahedron { n, d }).enumerate()? {
            let img = involution(&t, n, d)?;
            let tag = if img.fixed {
                "fixed".to_string()
            } else {
                format!("d={}", img.d)
            };
            let _ = writeln!(text, "{} -> {} ({tag})", compact(&t), compact(&img.tableau));
            images.push(json!({"tableau": t, "image": img.tableau, "d": img.d, "fixed": img.fixed}));
        }
    }
    let _ = writeln!(
        text,
        "(n, d) = ({n}, {d}): {} tableaux, {} fixed (β = {}), {} raised, {} lowered; involution {}",
        check.tableaux,
        check.fixed,
        check.syzygy,
        check.raised,
        check.lowered,
        if ok { "verified" } else { "FAILED" }
    );
    for f in &check.failures {
        let _ = writeln!(text, "  {f}");
    }
    let mut json = json!({"check": check, "passed": ok});
    if !verify_only {
        json["images"] = Value::Array(images);
    }
    Ok(Output { text, json, ok })
}

fn dissections_cmd(n: usize, d: usize, by_support: bool, trees: bool) -> Result<Output, Failure> {
    let mut text = String::new();
    let mut json = json!({"n": n, "d": d});
    if by_support {
        let hist = count_by_support(n, d)?;
        let parts: Vec<String> = hist.iter().map(|(s, c)| format!("{s}:{c}")).collect();
        let _ = writeln!(text, "{}", parts.join(" "));
        json["by_support"] = json!(hist);
    }
    if trees {
        let t = count_trees(n, d)?;
        let _ = writeln!(text, "trees: {t}");
        json["trees"] = json!(t);
    }
    if !by_support && !trees {
        let all = dissections(n, d)?;
        for x in &all {
            let _ = writeln!(text, "{x}{}", if is_tree(x) { "" } else { "  (cycle)" });
        }
        json["count"] = json!(all.len());
        json["dissections"] = json!(all.iter().map(|x| x.pairs()).collect::<Vec<_>>());
    }
    Ok(Output { text, json, ok: true })
}

fn tables() -> Result<Output, Failure> {
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut ok = true;
    for n in 6..=9 {
        let b = betti_table(n, Method::All)?.totals();
        let (enumerated, formula) = fvector_rows(n)?;
        ok &= enumerated == formula;
        let header: Vec<usize> = (0..b.len()).collect();
        let _ = writeln!(text, "d: {}", row(&header));
        let _ = writeln!(text, "β^{n}_d: {}", row(&b));
        let _ = writeln!(text, "f({n}, d-1): {}", row(&enumerated));
        text.push('\n');
        rows.push(json!({"n": n, "betti": b, "faces": enumerated}));
    }
    if !ok {
        text.push_str("MISMATCH between enumerated and formula face numbers\n");
    }
    Ok(Output {
        text,
        json: Value::Array(rows),
        ok,
    })
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Fvector { n } => fvector(*n),
        Command::Betti { n, method } => betti(*n, (*method).into()),
        Command::VerifyResolution { n, field, max_n } => verify_resolution(*n, (*field).into(), *max_n),
        Command::Minimality { n } => minimality(*n),
        Command::Morse { n, extend } => morse_cmd(*n, *extend),
        Command::Syt(args) => syt(args),
        Command::Involution { n, d, verify } => involution_cmd(*n, *d, *verify),
        Command::Dissections {
            n,
            d,
            by_support,
            trees,
        } => dissections_cmd(*n, *d, *by_support, *trees),
        Command::Tables => tables(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(out) => {
            let body = if cli.json {
                serde_json::to_string_pretty(&out.json).expect("JSON output") + "\n"
            } else {
                out.text
            };
            // a closed pipe (e.g. `| head`) is not an error
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
    }
}
