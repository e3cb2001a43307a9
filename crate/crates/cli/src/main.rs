use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use symtab_core::bkinv::{bk_a, bk_c};
use symtab_core::enumerate::{enumerate_kt, enumerate_ssyt, Alphabet};
use symtab_core::knuth::{canonical_word_c, knuth_equiv_a, knuth_equiv_c};
use symtab_core::symfunc::{schur_poly, sp_poly, ssot_poly, Family};
use symtab_core::verify::{self, Report};
use symtab_core::{
    berele_insert, enumerate_ot, enumerate_ssot, inverse_rs_a, inverse_rs_c, inverse_rsk_a, inverse_rsk_c,
    row_insert, rs_a, rs_c, rsk_a, rsk_c, Error, KingTableau, Letter, OscillatingTableau, Partition, Ssot, Tableau,
    TwoLineArray, Word,
};

mod render;

#[derive(Parser)]
#[command(name = "symtab", version, about = "Young tableaux of types A and C")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Ascii,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    A,
    C,
}

#[derive(Subcommand)]
enum Command {
    /// Insert one letter into a tableau (Schensted for type a, Berele for type c).
    Insert {
        #[arg(long = "type", value_enum)]
        kind: Kind,
        /// Tableau JSON, or `-` for stdin.
        tableau: String,
        /// Signed letter: 3 is 3, -3 is 3̄.
        #[arg(allow_negative_numbers = true)]
        letter: i64,
    },
    /// Apply RS to a word (JSON array) or RSK to a two-line array (JSON object).
    Rsk {
        #[arg(long = "type", value_enum)]
        kind: Kind,
        /// Word or two-line array JSON, or `-` for stdin.
        input: String,
    },
    /// Invert RS or RSK. The result is a word when Q is standard (type a) or
    /// an oscillating tableau (type c), and a two-line array otherwise.
    Inverse {
        #[arg(long = "type", value_enum)]
        kind: Kind,
        p: String,
        q: String,
    },
    /// List tableaux of a given shape in canonical order.
    Enumerate {
        #[arg(value_enum)]
        family: Enumerable,
        #[arg(long)]
        k: u16,
        /// Comma-separated row lengths; empty for the empty shape.
        #[arg(long, default_value = "")]
        shape: String,
        /// Length, for oscillating families.
        #[arg(long)]
        n: Option<usize>,
        /// Use the barred alphabet for ssyt.
        #[arg(long)]
        barred: bool,
    },
    /// Decide Knuth equivalence of two words.
    Knuth {
        #[arg(long = "type", value_enum)]
        kind: Kind,
        w1: String,
        w2: String,
    },
    /// Apply a Bender-Knuth involution to a tableau (type a) or SSOT (type c).
    Bk {
        #[arg(long = "type", value_enum)]
        kind: Kind,
        #[arg(long)]
        i: u32,
        /// Alphabet size; defaults to the smallest that fits the input and i.
        #[arg(long)]
        k: Option<u32>,
        input: String,
    },
    /// Generating polynomials.
    Poly {
        #[arg(value_enum)]
        which: PolyKind,
        #[arg(long)]
        k: u16,
        #[arg(long, default_value = "")]
        shape: String,
        /// Length, for ssot.
        #[arg(long)]
        n: Option<usize>,
        /// Variables for schur.
        #[arg(long, value_enum, default_value_t = Var::Y)]
        family: Var,
    },
    /// Run a verification suite.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Enumerable {
    Ssyt,
    Kt,
    Ot,
    Ssot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolyKind {
    Schur,
    Sp,
    Ssot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Var {
    X,
    Y,
}

#[derive(Args)]
struct KN {
    #[arg(long, default_value_t = 2)]
    k: u16,
    #[arg(long, default_value_t = 4)]
    n: usize,
}

#[derive(Subcommand)]
enum Suite {
    /// Type-A RSK over [k].
    BijectionA(KN),
    /// Berele's RS correspondence over [k̄].
    BijectionC(KN),
    /// Type-C RSK with top entries in [l] and bottom letters in [k̄].
    RskC {
        #[arg(long, default_value_t = 2)]
        k: u16,
        #[arg(long, default_value_t = 2)]
        l: u32,
        #[arg(long, default_value_t = 4)]
        n: usize,
    },
    /// Both expansions of the Cauchy product.
    Cauchy {
        #[arg(long, default_value_t = 2)]
        k: u16,
        #[arg(long, default_value_t = 4)]
        degree: u32,
    },
    /// Symmetry of one SSOT polynomial.
    SsotSymmetry {
        #[arg(long)]
        k: u16,
        #[arg(long)]
        shape: String,
        #[arg(long)]
        n: usize,
    },
    /// Symmetry of all SSOT and symplectic Schur polynomials up to a size.
    Symmetry {
        #[arg(long, default_value_t = 2)]
        k: u16,
        #[arg(long, default_value_t = 3)]
        size: usize,
    },
    /// Knuth closure against insertion classes over [k], and ≡A ⇒ ≡C over [c̄].
    Knuth {
        #[arg(long, default_value_t = 3)]
        k: u16,
        #[arg(long, default_value_t = 2)]
        c: u16,
        #[arg(long, default_value_t = 4)]
        n: usize,
    },
    /// Bender-Knuth involutions on the standard families.
    Bk,
    /// Horizontal strips of weakly increasing insertions.
    Strips {
        #[arg(long, default_value_t = 2)]
        k: u16,
        #[arg(long, default_value_t = 4)]
        size: usize,
        #[arg(long, default_value_t = 4)]
        n: usize,
    },
    /// Berele insertion round trip and P_C(row T) = T.
    Berele {
        #[arg(long, default_value_t = 2)]
        k: u16,
        #[arg(long, default_value_t = 4)]
        size: usize,
    },
    /// Jeu de taquin confluence.
    Jdt {
        #[arg(long, default_value_t = 2)]
        k: u16,
        #[arg(long, default_value_t = 6)]
        inner: usize,
        #[arg(long, default_value_t = 6)]
        boxes: usize,
    },
    /// Every suite at its default scale.
    All,
}

enum Failure {
    Input(String),
    Invariant(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Invariant(_) => 3,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::InvalidLetter(_)
            | Error::InvalidShape(_)
            | Error::ShapeMismatch(_)
            | Error::RowLengthMismatch
            | Error::IndexOutOfRange { .. } => Failure::Input(e.to_string()),
            _ => Failure::Invariant(e.to_string()),
        }
    }
}

/// Command output: JSON plus its human-readable rendering, and whether a
/// verification failed.
struct Output {
    json: Value,
    ascii: String,
    failed: bool,
}

impl Output {
    fn new(json: Value, ascii: String) -> Output {
        Output { json, ascii, failed: false }
    }
}

fn read_arg(arg: &str) -> Result<String, Failure> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Input(e.to_string()))?;
        Ok(s)
    } else {
        Ok(arg.to_string())
    }
}

fn parse<T: DeserializeOwned>(arg: &str) -> Result<T, Failure> {
    serde_json::from_str(&read_arg(arg)?).map_err(|e| Failure::Input(e.to_string()))
}

fn parse_shape(s: &str) -> Result<Partition, Failure> {
    let s = s.trim().trim_start_matches('[').trim_end_matches(']');
    if s.trim().is_empty() {
        return Ok(Partition::empty());
    }
    let rows = s
        .split(',')
        .map(|part| part.trim().parse::<usize>().map_err(|e| Failure::Input(format!("bad shape {s:?}: {e}"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Partition::new(rows)?)
}

fn king(t: Tableau<Letter>) -> Result<KingTableau, Failure> {
    Ok(KingTableau::new(t)?)
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn insert(kind: Kind, tableau: &str, letter: i64) -> Result<Output, Failure> {
    let t: Tableau<Letter> = parse(tableau)?;
    let x = Letter::from_signed(letter)?;
    match kind {
        Kind::A => {
            if !t.is_semistandard() {
                return Err(Error::NotSemistandard.into());
            }
            let (out, cell) = row_insert(&t, x);
            let ascii = format!("{}\nadded {cell}", render::tableau(&out));
            Ok(Output::new(json!({"tableau": out, "step": {"kind": "added", "cell": cell}}), ascii))
        }
        Kind::C => {
            let (out, step) = berele_insert(&king(t)?, x);
            let verb = if step.is_deletion() { "deleted" } else { "added" };
            let ascii = format!("{}\n{verb} {}", render::tableau(out.as_tableau()), step.cell);
            Ok(Output::new(json!({"tableau": out, "step": step}), ascii))
        }
    }
}

fn rsk(kind: Kind, input: &str) -> Result<Output, Failure> {
    let value: Value = parse(input)?;
    let word = || serde_json::from_value::<Word>(value.clone()).map_err(|e| Failure::Input(e.to_string()));
    let array = || serde_json::from_value::<TwoLineArray>(value.clone()).map_err(|e| Failure::Input(e.to_string()));
    Ok(match (kind, value.is_array()) {
        (Kind::A, true) => {
            let (p, q) = rs_a(&word()?);
            pair_a(&p, &q)
        }
        (Kind::A, false) => {
            let (p, q) = rsk_a(&array()?);
            pair_a(&p, &q)
        }
        (Kind::C, true) => {
            let (p, q) = rs_c(&word()?);
            let ascii = format!("P:\n{}\nQ:\n{}", render::tableau(p.as_tableau()), render::oscillating(&q));
            Output::new(json!({"p": p, "q": q}), ascii)
        }
        (Kind::C, false) => {
            let out = rsk_c(&array()?);
            let ascii = format!("P:\n{}\nQ:\n{}", render::tableau(out.p.as_tableau()), render::ssot(&out.q));
            Output::new(to_json(&out), ascii)
        }
    })
}

fn pair_a(p: &Tableau<Letter>, q: &Tableau<u32>) -> Output {
    let ascii = format!("P:\n{}\nQ:\n{}", render::tableau(p), render::tableau(q));
    Output::new(json!({"p": p, "q": q}), ascii)
}

fn word_output(w: &Word) -> Output {
    Output::new(to_json(w), w.to_string())
}

fn array_output(a: &TwoLineArray) -> Output {
    Output::new(to_json(a), render::array(a))
}

fn inverse(kind: Kind, p: &str, q: &str) -> Result<Output, Failure> {
    let p: Tableau<Letter> = parse(p)?;
    match kind {
        Kind::A => {
            let q: Tableau<u32> = parse(q)?;
            if !p.is_semistandard() || !q.is_semistandard() {
                return Err(Error::NotSemistandard.into());
            }
            if q.is_standard() {
                Ok(word_output(&inverse_rs_a(&p, &q)?))
            } else {
                Ok(array_output(&inverse_rsk_a(&p, &q)?))
            }
        }
        Kind::C => {
            let p = king(p)?;
            let q: Value = parse(q)?;
            if q.get("shapes").is_some() {
                let q: OscillatingTableau = serde_json::from_value(q).map_err(|e| Failure::Input(e.to_string()))?;
                Ok(word_output(&inverse_rs_c(&p, &q)?))
            } else {
                let q: Ssot = serde_json::from_value(q).map_err(|e| Failure::Input(e.to_string()))?;
                Ok(array_output(&inverse_rsk_c(&p, &q)?))
            }
        }
    }
}

fn enumerate(family: Enumerable, k: u16, shape: &str, n: Option<usize>, barred: bool) -> Result<Output, Failure> {
    let shape = parse_shape(shape)?;
    let need_n = || n.ok_or_else(|| Failure::Input("--n is required for oscillating families".into()));
    let (json, ascii) = match family {
        Enumerable::Ssyt => {
            let alphabet = if barred { Alphabet::Barred(k) } else { Alphabet::Plain(k) };
            let all = enumerate_ssyt(alphabet, &shape);
            (to_json(&all), all.iter().map(render::tableau).collect::<Vec<_>>())
        }
        Enumerable::Kt => {
            let all = enumerate_kt(k, &shape);
            (to_json(&all), all.iter().map(|t| render::tableau(t.as_tableau())).collect())
        }
        Enumerable::Ot => {
            let all = enumerate_ot(k as usize, need_n()?, &shape);
            (to_json(&all), all.iter().map(render::oscillating).collect())
        }
        Enumerable::Ssot => {
            let all = enumerate_ssot(k as u32, need_n()?, &shape);
            (to_json(&all), all.iter().map(render::ssot).collect())
        }
    };
    let ascii = format!("{} found\n\n{}", ascii.len(), ascii.join("\n\n"));
    Ok(Output::new(json, ascii.trim_end().to_string()))
}

fn knuth(kind: Kind, w1: &str, w2: &str) -> Result<Output, Failure> {
    let u: Word = parse(w1)?;
    let v: Word = parse(w2)?;
    let (equivalent, canonical) = match kind {
        Kind::A => (knuth_equiv_a(&u, &v), rs_a(&u).0.row_word()),
        Kind::C => (knuth_equiv_c(&u, &v), canonical_word_c(&u)),
    };
    let ascii = format!("{}\ncanonical: {canonical}", if equivalent { "equivalent" } else { "not equivalent" });
    Ok(Output::new(json!({"equivalent": equivalent, "canonical": canonical}), ascii))
}

fn bk(kind: Kind, i: u32, k: Option<u32>, input: &str) -> Result<Output, Failure> {
    match kind {
        Kind::A => {
            let t: Tableau<u32> = parse(input)?;
            let k = k.unwrap_or_else(|| t.rows().iter().flatten().copied().max().unwrap_or(0).max(i + 1));
            let f = bk_a(&t, i, k)?;
            Ok(Output::new(to_json(&f), render::tableau(&f)))
        }
        Kind::C => {
            let s: Ssot = parse(input)?;
            let k = k.unwrap_or_else(|| s.max_entry().max(s.max_rows() as u32).max(i + 1));
            let g = bk_c(&s, i, k)?;
            Ok(Output::new(to_json(&g), render::ssot(&g)))
        }
    }
}

fn poly(which: PolyKind, k: u16, shape: &str, n: Option<usize>, family: Var) -> Result<Output, Failure> {
    let shape = parse_shape(shape)?;
    let p = match which {
        PolyKind::Schur => schur_poly(&shape, k, if family == Var::X { Family::X } else { Family::Y }),
        PolyKind::Sp => sp_poly(&shape, k),
        PolyKind::Ssot => {
            let n = n.ok_or_else(|| Failure::Input("--n is required for ssot".into()))?;
            ssot_poly(&shape, k, n)
        }
    };
    Ok(Output::new(to_json(&p), p.to_string()))
}

fn run_suite(suite: Suite) -> Result<Output, Failure> {
    let reports = match suite {
        Suite::BijectionA(a) => vec![verify::bijection_a(a.k, a.n)],
        Suite::BijectionC(a) => vec![verify::bijection_c(a.k, a.n)],
        Suite::RskC { k, l, n } => vec![verify::rsk_c_suite(k, l, n)],
        Suite::Cauchy { k, degree } => vec![verify::cauchy(k, degree)],
        Suite::SsotSymmetry { k, shape, n } => vec![verify::ssot_symmetry(k, &parse_shape(&shape)?, n)],
        Suite::Symmetry { k, size } => vec![verify::symmetry(k, size)],
        Suite::Knuth { k, c, n } => vec![verify::knuth(k, c, n)],
        Suite::Bk => vec![verify::bk()],
        Suite::Strips { k, size, n } => vec![verify::strips(k, size, n)],
        Suite::Berele { k, size } => vec![verify::berele(k, size)],
        Suite::Jdt { k, inner, boxes } => vec![verify::jdt_confluence(k, inner, boxes)],
        Suite::All => verify::all_suites(),
    };
    let failed = reports.iter().any(|r| !r.passed);
    let ascii = reports.iter().map(render::report).collect::<Vec<_>>().join("\n");
    let json = match reports.as_slice() {
        [one] => to_json(one),
        many => to_json(&many.iter().collect::<Vec<&Report>>()),
    };
    Ok(Output { json, ascii, failed })
}

fn run(cli: Cli) -> Result<Output, Failure> {
    match cli.command {
        Command::Insert { kind, tableau, letter } => insert(kind, &tableau, letter),
        Command::Rsk { kind, input } => rsk(kind, &input),
        Command::Inverse { kind, p, q } => inverse(kind, &p, &q),
        Command::Enumerate { family, k, shape, n, barred } => enumerate(family, k, &shape, n, barred),
        Command::Knuth { kind, w1, w2 } => knuth(kind, &w1, &w2),
        Command::Bk { kind, i, k, input } => bk(kind, i, k, &input),
        Command::Poly { which, k, shape, n, family } => poly(which, k, &shape, n, family),
        Command::Verify { suite } => run_suite(suite),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(out) => {
            match format {
                Format::Json => println!("{}", out.json),
                Format::Ascii => println!("{}", out.ascii),
            }
            ExitCode::from(if out.failed { 1 } else { 0 })
        }
        Err(failure) => {
            let (Failure::Input(msg) | Failure::Invariant(msg)) = &failure;
            eprintln!("error: {msg}");
            ExitCode::from(failure.code())
        }
    }
}
