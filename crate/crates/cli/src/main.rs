//! `qcoset`: double cosets, linear relations and colligations over finite
//! fields from the command line.
//!
//! Exit status: 0 success, 1 a check failed, 2 bad input, 3 the operation is
//! undefined for valid inputs (not composable, singular pencil, too large).

use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qcoset::coset::{
    canonical_kappa, canonical_window, enumerate_cosets, render_diagram, CosetJson,
};
use qcoset::relation::RelJson;
use qcoset::verify::{
    check_associativity, check_colligation, check_completeness, check_isomorphism, check_structure,
    check_well_definedness, objects, run_all, CheckReport, Sizes,
};
use qcoset::{Colligation, Coset, Error, Gf, LinRel, Mat, Object, Window};

#[derive(Parser)]
#[command(
    name = "qcoset",
    version,
    about = "Double cosets Q\\GL/Q over finite fields"
)]
struct Cli {
    /// Characteristic
    #[arg(long, global = true, default_value_t = 2)]
    p: u32,
    /// Extension degree
    #[arg(long, global = true, default_value_t = 1)]
    l: u32,
    /// Monic modulus, coefficients from the constant term up, e.g. 1,1,1
    #[arg(long, global = true, value_delimiter = ',')]
    modulus: Vec<u32>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 100)]
    trials: u64,
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,
    /// How `coset star` computes the product
    #[arg(long, global = true, value_enum, default_value_t = PathMode::Invariant)]
    path: PathMode,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PathMode {
    Matrix,
    Invariant,
    Both,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the field parameters
    Field,
    #[command(subcommand)]
    Rel(RelCmd),
    #[command(subcommand)]
    Coset(CosetCmd),
    #[command(subcommand)]
    Colligation(ColligationCmd),
    /// Run verification checks; no selector runs nothing
    Verify(VerifyArgs),
}

/// Inputs are files, `-` or nothing for stdin. Relations are `m n` followed
/// by spanning rows, or JSON.
#[derive(Subcommand)]
enum RelCmd {
    /// `A∘B`, with B applied first
    Compose { a: PathBuf, b: PathBuf },
    /// Pseudoinverse
    Inv { input: Option<PathBuf> },
    /// Kernel, image, domain, indefiniteness and rank
    Invariants { input: Option<PathBuf> },
}

/// Morphisms are window text or coset JSON.
#[derive(Subcommand)]
enum CosetCmd {
    /// The invariant pair of a window
    Chi {
        input: Option<PathBuf>,
    },
    /// Product `A⋆B : γ → α` of `A : β → α` and `B : γ → β`
    Star {
        a: PathBuf,
        b: PathBuf,
        /// Also print the product window (matrix path)
        #[arg(long)]
        window: bool,
    },
    /// κ-table and canonical 0-1 window
    Canon {
        input: Option<PathBuf>,
    },
    Diagram {
        input: Option<PathBuf>,
    },
    /// All morphisms β → α with η up to a bound
    Enum {
        #[arg(long, value_parser = parse_object, allow_hyphen_values = true)]
        alpha: Object,
        #[arg(long, value_parser = parse_object, allow_hyphen_values = true)]
        beta: Object,
        #[arg(long, default_value_t = 1)]
        eta_max: usize,
    },
    /// Exponent of the point mass
    Weight {
        input: Option<PathBuf>,
    },
}

/// Colligations are `m n` followed by the `(m+n)`-square matrix.
#[derive(Subcommand)]
enum ColligationCmd {
    Circ {
        a: PathBuf,
        b: PathBuf,
    },
    /// `a + λ b (1 - λ d)^-1 c`
    Transfer {
        input: Option<PathBuf>,
        #[arg(long, conflicts_with = "sweep", required_unless_present = "sweep")]
        lambda: Option<String>,
        /// Every λ in the field; singular points are flagged
        #[arg(long)]
        sweep: bool,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: Option<Suite>,
    /// Field order; overrides --p and --l
    #[arg(long)]
    q: Option<u32>,
    /// Comma-separated sizes, meaning depends on the suite
    #[arg(long, value_delimiter = ',')]
    sizes: Vec<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    WellDefined,
    Assoc,
    Iso,
    Completeness,
    Structure,
    Colligation,
    All,
}

enum Fail {
    Input(String),
    Domain(String),
    Check(String),
}

impl Fail {
    fn code(&self) -> u8 {
        match self {
            Fail::Check(_) => 1,
            Fail::Input(_) => 2,
            Fail::Domain(_) => 3,
        }
    }
}

type Res<T> = std::result::Result<T, Fail>;

fn bad_input(e: Error) -> Fail {
    Fail::Input(e.to_string())
}

fn domain(e: Error) -> Fail {
    Fail::Domain(e.to_string())
}

fn parse_object(s: &str) -> std::result::Result<Object, String> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    let (lo, hi) = s.split_once(',').ok_or("expected lo,hi")?;
    let lo = lo.trim().parse::<i64>().map_err(|e| e.to_string())?;
    let hi = hi.trim().parse::<i64>().map_err(|e| e.to_string())?;
    Object::new(lo, hi).map_err(|e| e.to_string())
}

fn read(path: Option<&PathBuf>) -> Res<String> {
    let mut text = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            text =
                fs::read_to_string(p).map_err(|e| Fail::Input(format!("{}: {e}", p.display())))?;
        }
        _ => {
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Fail::Input(format!("stdin: {e}")))?;
        }
    }
    Ok(text)
}

fn is_json(text: &str) -> bool {
    text.trim_start().starts_with('{')
}

enum Morphism {
    Window(Window),
    Coset(Coset),
}

impl Morphism {
    fn coset(&self) -> Coset {
        match self {
            Morphism::Window(w) => w.coset(),
            Morphism::Coset(c) => c.clone(),
        }
    }

    fn window(&self) -> Res<Window> {
        match self {
            Morphism::Window(w) => Ok(w.clone()),
            Morphism::Coset(c) => canonical_window(c).map_err(domain),
        }
    }
}

fn morphism(field: &Gf, text: &str) -> Res<Morphism> {
    if is_json(text) {
        let j: CosetJson = serde_json::from_str(text).map_err(|e| Fail::Input(e.to_string()))?;
        Ok(Morphism::Coset(Coset::from_json(&j).map_err(bad_input)?))
    } else {
        Ok(Morphism::Window(
            Window::parse_text(field, text).map_err(bad_input)?,
        ))
    }
}

fn relation(field: &Gf, text: &str) -> Res<LinRel> {
    if is_json(text) {
        let j: RelJson = serde_json::from_str(text).map_err(|e| Fail::Input(e.to_string()))?;
        LinRel::from_json(field, &j).map_err(bad_input)
    } else {
        LinRel::parse_text(field, text).map_err(bad_input)
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data");
    s.push('\n');
    s
}

fn coset_text(c: &Coset) -> String {
    format!(
        "alpha {}\nbeta {}\neta {}\nchi {}",
        c.alpha(),
        c.beta(),
        c.eta(),
        c.chi().to_text()
    )
}

fn matrix_json(field: &Gf, m: &Mat) -> Value {
    let rows: Vec<Vec<String>> = m
        .row_vecs()
        .iter()
        .map(|r| r.iter().map(|&e| field.format_elem(e)).collect())
        .collect();
    json!(rows)
}

fn rows_text(field: &Gf, m: &Mat) -> String {
    let mut out = String::new();
    for r in m.row_vecs() {
        let row: Vec<String> = r.iter().map(|&e| field.format_elem(e)).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

struct Ctx {
    field: Gf,
    seed: u64,
    trials: u64,
    output: Output,
    path: PathMode,
}

impl Ctx {
    fn emit(&self, text: String, value: impl FnOnce() -> Value) -> String {
        match self.output {
            Output::Text => text,
            Output::Json => pretty(&value()),
        }
    }

    fn coset(&self, c: &Coset) -> String {
        self.emit(coset_text(c), || {
            serde_json::to_value(c.to_json()).expect("plain data")
        })
    }

    fn relation(&self, r: &LinRel) -> String {
        self.emit(r.to_text(), || {
            serde_json::to_value(r.to_json()).expect("plain data")
        })
    }
}

fn cmd_field(ctx: &Ctx) -> Res<String> {
    let f = &ctx.field;
    let modulus: Vec<String> = f.modulus().iter().map(u32::to_string).collect();
    let text = format!(
        "p {}\nl {}\nq {}\nmodulus {}\n",
        f.characteristic(),
        f.degree(),
        f.order(),
        modulus.join(",")
    );
    Ok(ctx.emit(text, || json!({"p": f.characteristic(), "l": f.degree(), "q": f.order(), "modulus": f.modulus()})))
}

fn cmd_rel(ctx: &Ctx, cmd: &RelCmd) -> Res<String> {
    match cmd {
        RelCmd::Compose { a, b } => {
            let a = relation(&ctx.field, &read(Some(a))?)?;
            let b = relation(&ctx.field, &read(Some(b))?)?;
            Ok(ctx.relation(&a.compose(&b).map_err(domain)?))
        }
        RelCmd::Inv { input } => {
            let r = relation(&ctx.field, &read(input.as_ref())?)?;
            Ok(ctx.relation(&r.pseudoinverse()))
        }
        RelCmd::Invariants { input } => {
            let r = relation(&ctx.field, &read(input.as_ref())?)?;
            let inv = r.invariants();
            let f = &ctx.field;
            let spaces = [
                ("ker", &inv.ker),
                ("im", &inv.im),
                ("dom", &inv.dom),
                ("indef", &inv.indef),
            ];
            let mut text = String::new();
            for (name, s) in spaces {
                text.push_str(&format!("{name} {}\n", s.dim()));
                for v in s.vectors() {
                    let row: Vec<String> = v.iter().map(|&e| f.format_elem(e)).collect();
                    text.push_str(&format!("  {}\n", row.join(" ")));
                }
            }
            text.push_str(&format!("rank {}\n", inv.rk));
            Ok(ctx.emit(text, || {
                let mut obj = serde_json::Map::new();
                for (name, s) in spaces {
                    obj.insert(name.into(), matrix_json(f, s.basis()));
                }
                obj.insert("rank".into(), json!(inv.rk));
                Value::Object(obj)
            }))
        }
    }
}

fn cmd_coset(ctx: &Ctx, cmd: &CosetCmd) -> Res<String> {
    let f = &ctx.field;
    match cmd {
        CosetCmd::Chi { input } => {
            let text = read(input.as_ref())?;
            let w = Window::parse_text(f, &text).map_err(bad_input)?;
            Ok(ctx.coset(&w.coset()))
        }
        CosetCmd::Star { a, b, window } => {
            let a = morphism(f, &read(Some(a))?)?;
            let b = morphism(f, &read(Some(b))?)?;
            let invariant = match ctx.path {
                PathMode::Matrix => None,
                _ => Some(a.coset().star(&b.coset()).map_err(domain)?),
            };
            let product = match (ctx.path, window) {
                (PathMode::Invariant, false) => None,
                _ => Some(a.window()?.star(&b.window()?).map_err(domain)?),
            };
            let matrix = product
                .as_ref()
                .filter(|_| ctx.path != PathMode::Invariant)
                .map(Window::coset);
            if let (Some(x), Some(y)) = (&invariant, &matrix) {
                if x != y {
                    return Err(Fail::Check(format!(
                        "paths disagree\ninvariant:\n{}matrix:\n{}",
                        coset_text(x),
                        coset_text(y)
                    )));
                }
            }
            let c = invariant.or(matrix).expect("one path ran");
            match product.filter(|_| *window) {
                None => Ok(ctx.coset(&c)),
                Some(w) => Ok(ctx.emit(
                    format!("{}window\n{}", coset_text(&c), w.to_text()),
                    || json!({"coset": c.to_json(), "window": w.to_text()}),
                )),
            }
        }
        CosetCmd::Canon { input } => {
            let c = morphism(f, &read(input.as_ref())?)?.coset();
            let k = canonical_kappa(&c).map_err(domain)?;
            let w = canonical_window(&c).map_err(domain)?;
            if w.coset() != c {
                return Err(Fail::Check(format!(
                    "canonical window does not reproduce\n{}",
                    coset_text(&c)
                )));
            }
            Ok(ctx.emit(
                format!("kappa\n{k}window\n{}", w.to_text()),
                || json!({"kappa": k, "window": w.to_text()}),
            ))
        }
        CosetCmd::Diagram { input } => {
            let c = morphism(f, &read(input.as_ref())?)?.coset();
            let d = render_diagram(&c).map_err(domain)?;
            Ok(ctx.emit(d.clone(), || json!({"diagram": d})))
        }
        CosetCmd::Enum {
            alpha,
            beta,
            eta_max,
        } => {
            let all = enumerate_cosets(f, *beta, *alpha, *eta_max).map_err(domain)?;
            let text = all.iter().map(coset_text).collect::<Vec<_>>().join("\n");
            Ok(ctx.emit(text, || {
                json!(all.iter().map(Coset::to_json).collect::<Vec<_>>())
            }))
        }
        CosetCmd::Weight { input } => {
            let c = morphism(f, &read(input.as_ref())?)?.coset();
            let w = c.measure_weight();
            Ok(ctx.emit(format!("{w}\n"), || json!({"weight": w})))
        }
    }
}

fn colligation(field: &Gf, path: Option<&PathBuf>) -> Res<Colligation> {
    Colligation::parse_text(field, &read(path)?).map_err(bad_input)
}

fn cmd_colligation(ctx: &Ctx, cmd: &ColligationCmd) -> Res<String> {
    let f = &ctx.field;
    match cmd {
        ColligationCmd::Circ { a, b } => {
            let g = colligation(f, Some(a))?
                .circ(&colligation(f, Some(b))?)
                .map_err(domain)?;
            Ok(ctx.emit(
                g.to_text(),
                || json!({"m": g.m(), "matrix": matrix_json(f, g.mat())}),
            ))
        }
        ColligationCmd::Transfer {
            input,
            lambda,
            sweep,
        } => {
            let g = colligation(f, input.as_ref())?;
            if *sweep {
                let points = g.transfer_sweep();
                let mut text = String::new();
                for (l, t) in &points {
                    text.push_str(&format!("lambda {}\n", f.format_elem(*l)));
                    match t {
                        Some(t) => text.push_str(&rows_text(f, t)),
                        None => text.push_str("singular\n"),
                    }
                }
                Ok(ctx.emit(text, || {
                    json!(points
                        .iter()
                        .map(|(l, t)| json!({
                            "lambda": f.format_elem(*l),
                            "value": t.as_ref().map(|t| matrix_json(f, t)),
                        }))
                        .collect::<Vec<_>>())
                }))
            } else {
                let text = lambda
                    .as_deref()
                    .expect("clap requires --lambda without --sweep");
                let l = f.parse_elem(text).map_err(bad_input)?;
                let t = g.transfer(l).map_err(domain)?;
                Ok(ctx.emit(rows_text(f, &t), || matrix_json(f, &t)))
            }
        }
    }
}

fn sizes_or<const N: usize>(given: &[usize], default: [usize; N]) -> Res<[usize; N]> {
    if given.is_empty() {
        return Ok(default);
    }
    given
        .try_into()
        .map_err(|_| Fail::Input(format!("--sizes needs {N} values for this suite")))
}

fn cmd_verify(ctx: &Ctx, args: &VerifyArgs) -> Res<String> {
    let Some(suite) = args.suite else {
        return Ok(ctx.emit("no checks selected\n".into(), || json!([])));
    };
    let field = match args.q {
        Some(q) => Gf::of_order(q).map_err(bad_input)?,
        None => ctx.field.clone(),
    };
    let (seed, trials) = (ctx.seed, ctx.trials);
    let units: Vec<Object> = objects(&[0, 1], 1)
        .into_iter()
        .filter(|o| o.size() == 1)
        .collect();
    let window_sizes = |s: &[usize]| {
        sizes_or(s, [2, 2]).map(|[b, p]| Sizes {
            max_block: b,
            max_pad: p,
        })
    };
    let reports: Vec<CheckReport> = match suite {
        Suite::WellDefined => {
            vec![
                check_well_definedness(&field, window_sizes(&args.sizes)?, trials, seed)
                    .map_err(domain)?,
            ]
        }
        Suite::Assoc => {
            vec![
                check_associativity(&field, &units, 1, trials, window_sizes(&args.sizes)?, seed)
                    .map_err(domain)?,
            ]
        }
        Suite::Iso => vec![
            check_isomorphism(&field, window_sizes(&args.sizes)?, trials, seed).map_err(domain)?,
        ],
        Suite::Completeness => {
            let default = if field.order() == 2 {
                [1; 6]
            } else {
                [1, 1, 0, 1, 1, 0]
            };
            vec![check_completeness(&field, sizes_or(&args.sizes, default)?).map_err(domain)?]
        }
        Suite::Structure => {
            let [m, k] = sizes_or(&args.sizes, [2, 2])?;
            vec![check_structure(&field, m, k).map_err(domain)?]
        }
        Suite::Colligation => {
            let [m, n] = sizes_or(&args.sizes, [2, 3])?;
            vec![check_colligation(&field, m, n, trials, seed).map_err(domain)?]
        }
        Suite::All => run_all(&field, seed, trials).map_err(domain)?,
    };
    let mut text = String::new();
    for r in &reports {
        text.push_str(&r.summary());
        text.push('\n');
        for (k, v) in &r.metrics {
            text.push_str(&format!("  {k} {v}\n"));
        }
        for w in &r.witnesses {
            text.push_str(&format!("  witness {w}\n"));
        }
    }
    let out = ctx.emit(text, || json!(reports));
    if reports.iter().all(CheckReport::passed) {
        Ok(out)
    } else {
        Err(Fail::Check(out))
    }
}

fn run(cli: &Cli) -> Res<String> {
    let modulus = (!cli.modulus.is_empty()).then(|| cli.modulus.clone());
    let ctx = Ctx {
        field: Gf::new(cli.p, cli.l, modulus).map_err(bad_input)?,
        seed: cli.seed,
        trials: cli.trials,
        output: cli.output,
        path: cli.path,
    };
    match &cli.cmd {
        Cmd::Field => cmd_field(&ctx),
        Cmd::Rel(c) => cmd_rel(&ctx, c),
        Cmd::Coset(c) => cmd_coset(&ctx, c),
        Cmd::Colligation(c) => cmd_colligation(&ctx, c),
        Cmd::Verify(a) => cmd_verify(&ctx, a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(fail) => {
            match &fail {
                Fail::Check(out) => print!("{out}"),
                Fail::Input(msg) => eprintln!("error: {msg}"),
                Fail::Domain(msg) => eprintln!("error: {msg}"),
            }
            ExitCode::from(fail.code())
        }
    }
}
