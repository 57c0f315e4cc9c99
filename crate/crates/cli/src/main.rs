//! JSON-in, JSON-out command line interface to the crystal combinatorics
//! library.
//!
//! Exit codes: 0 success, 1 domain error, 2 bound exceeded, 3 verification
//! failure, 64 usage error. Every error prints a single JSON diagnostic line
//! to stderr. The zero result of a partial operator is a value, printed as
//! `{"null":true}` with exit 0.

mod selfcheck;

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crystal_core::graph::{
    build_binf, build_from_elements, component_of, enumerate_multisegments, lambda_window,
    verify_blambda, CrystalGraph,
};
use crystal_core::partitions::{enumerate_kleshchev_bounded, is_kleshchev, Multipartition};
use crystal_core::seg_crystal::{
    apply_e, apply_e_hat, apply_f, apply_f_hat, cyclotomic_check, eps, hw_path, minimal_weight,
    phi,
};
use crystal_core::segments::{Content, Multisegment, Weight};
use crystal_core::tensor::TensorElement;
use crystal_core::transport::seg_to_mp;
use crystal_core::{bounds, characters, mp_crystal, Error};

const EXIT_DOMAIN: u8 = 1;
const EXIT_BOUND: u8 = 2;
const EXIT_VERIFY: u8 = 3;
const EXIT_USAGE: u8 = 64;

struct Failure {
    code: u8,
    kind: &'static str,
    detail: String,
}

impl Failure {
    fn usage(detail: impl Into<String>) -> Failure {
        Failure { code: EXIT_USAGE, kind: "usage", detail: detail.into() }
    }

    fn verify(detail: impl Into<String>) -> Failure {
        Failure { code: EXIT_VERIFY, kind: "verification", detail: detail.into() }
    }

    fn io(detail: impl ToString) -> Failure {
        Failure { code: EXIT_USAGE, kind: "io", detail: detail.to_string() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let (code, kind) = match &e {
            Error::BoundExceeded { .. } => (EXIT_BOUND, "BoundExceeded"),
            Error::NotCyclotomic(_) => (EXIT_DOMAIN, "NotCyclotomic"),
            Error::MalformedLevel1(_) => (EXIT_DOMAIN, "MalformedLevel1"),
            Error::MalformedSingleEnd(_) => (EXIT_DOMAIN, "MalformedSingleEnd"),
            Error::LengthMismatch { .. } => (EXIT_DOMAIN, "LengthMismatch"),
            Error::TransportFailure(_) => (EXIT_DOMAIN, "TransportFailure"),
        };
        Failure { code, kind, detail: e.to_string() }
    }
}

#[derive(Parser)]
#[command(name = "crystal", version, about = "Crystal graph combinatorics on multisegments, multipartitions, and tensor products")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Operators and statistics on multisegments
    Seg {
        #[command(subcommand)]
        cmd: SegCmd,
    },
    /// Membership tests
    Check {
        #[command(subcommand)]
        cmd: CheckCmd,
    },
    /// Conversion between realizations
    Convert {
        #[command(subcommand)]
        cmd: ConvertCmd,
    },
    /// Operators on colored multipartitions
    Mp {
        #[command(subcommand)]
        cmd: MpCmd,
    },
    /// Character of the module induced from a segment list
    Char(CharArgs),
    /// Graph builders, serialization, and isomorphism verification
    Graph {
        #[command(subcommand)]
        cmd: GraphCmd,
    },
    /// Run the invariant suites
    Selfcheck {
        #[arg(long, value_enum, default_value_t = selfcheck::Level::Quick)]
        level: selfcheck::Level,
    },
}

#[derive(Args)]
struct InputArg {
    /// Read the input JSON from this file instead of stdin
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum SegCmd {
    /// Count of uncanceled minus symbols at label i
    Eps {
        #[arg(long, allow_negative_numbers = true)]
        i: Content,
        #[command(flatten)]
        input: InputArg,
    },
    /// Count of uncanceled plus symbols at label i
    Phi {
        #[arg(long, allow_negative_numbers = true)]
        i: Content,
        #[command(flatten)]
        input: InputArg,
    },
    /// Apply E_i (reps times)
    E(SegOpArgs),
    /// Apply F_i (reps times)
    F(SegOpArgs),
    /// Apply the hatted Ê_i (reps times)
    Ehat(SegOpArgs),
    /// Apply the hatted F̂_i (reps times)
    Fhat(SegOpArgs),
    /// Emit the segments in right or left order
    Order {
        #[arg(long, value_enum)]
        mode: OrderMode,
        #[command(flatten)]
        input: InputArg,
    },
    /// The componentwise-minimal weight for which the input is cyclotomic
    Minlambda {
        #[command(flatten)]
        input: InputArg,
    },
    /// The distinguished path to the empty multisegment (smallest label first)
    Path {
        #[command(flatten)]
        input: InputArg,
    },
}

#[derive(Args)]
struct SegOpArgs {
    #[arg(long, allow_negative_numbers = true)]
    i: Content,
    /// Number of repeated applications
    #[arg(long, default_value_t = 1)]
    reps: usize,
    #[command(flatten)]
    input: InputArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderMode {
    Right,
    Left,
}

#[derive(Subcommand)]
enum CheckCmd {
    /// Whether the multisegment is cyclotomic for the given weight
    Cyclotomic {
        #[arg(long)]
        lambda: String,
        #[command(flatten)]
        input: InputArg,
    },
    /// Whether the multipartition satisfies the Kleshchev condition
    Kleshchev {
        #[command(flatten)]
        input: InputArg,
    },
}

#[derive(Subcommand)]
enum ConvertCmd {
    /// Multisegment to Kleshchev multipartition (crystal-path transport)
    Seg2mp {
        #[arg(long)]
        lambda: String,
        #[command(flatten)]
        input: InputArg,
    },
    /// Multipartition to multisegment (row-by-row conversion)
    Mp2seg {
        #[command(flatten)]
        input: InputArg,
    },
}

#[derive(Subcommand)]
enum MpCmd {
    Eps {
        #[arg(long, allow_negative_numbers = true)]
        i: Content,
        #[command(flatten)]
        input: InputArg,
    },
    E {
        #[arg(long, allow_negative_numbers = true)]
        i: Content,
        #[command(flatten)]
        input: InputArg,
    },
    F {
        #[arg(long, allow_negative_numbers = true)]
        i: Content,
        #[command(flatten)]
        input: InputArg,
    },
}

#[derive(Args)]
struct CharArgs {
    #[command(subcommand)]
    cmd: Option<CharCmd>,
    /// Maximum total segment length
    #[arg(long)]
    bound: Option<usize>,
    #[command(flatten)]
    input: InputArg,
}

#[derive(Subcommand)]
enum CharCmd {
    /// Multiplicity of a word in the induced character
    Mult {
        /// The word as a JSON array, e.g. `[1,2,2]`
        #[arg(long)]
        word: String,
        #[arg(long)]
        bound: Option<usize>,
        #[command(flatten)]
        input: InputArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Args)]
struct GraphOutArgs {
    #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
    format: GraphFormat,
    /// Write to this path instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum GraphCmd {
    /// All multisegments over a content range, with E-edges
    Binf {
        /// Inclusive content range, e.g. -2..2
        #[arg(long, allow_hyphen_values = true)]
        contents: String,
        #[arg(long)]
        max_n: usize,
        #[command(flatten)]
        out: GraphOutArgs,
    },
    /// Cyclotomic multisegments for a weight
    BlambdaSeg {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        max_n: usize,
        /// Override the default content window
        #[arg(long, allow_hyphen_values = true)]
        contents: Option<String>,
        #[command(flatten)]
        out: GraphOutArgs,
    },
    /// Kleshchev multipartitions for a weight
    BlambdaMp {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        max_n: usize,
        #[arg(long, allow_hyphen_values = true)]
        contents: Option<String>,
        #[command(flatten)]
        out: GraphOutArgs,
    },
    /// Component of the all-empty node in the tensor of level-1 crystals
    Tensor {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        max_n: usize,
        #[arg(long, allow_hyphen_values = true)]
        contents: Option<String>,
        #[command(flatten)]
        out: GraphOutArgs,
    },
    /// Three-way isomorphism check; exit 0 iff all realizations agree
    Verify {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        max_n: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            emit_failure(&Failure::usage(e.to_string()));
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            emit_failure(&f);
            ExitCode::from(f.code)
        }
    }
}

fn emit_failure(f: &Failure) {
    eprintln!("{}", json!({ "error": f.kind, "detail": f.detail }));
}

fn read_input(input: &InputArg) -> Result<Value, Failure> {
    let text = match &input.file {
        Some(path) => fs::read_to_string(path).map_err(Failure::io)?,
        None => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf).map_err(Failure::io)?;
            buf
        }
    };
    serde_json::from_str(&text).map_err(|e| Failure::usage(format!("invalid JSON input: {e}")))
}

fn read_multisegment(input: &InputArg) -> Result<Multisegment, Failure> {
    let v = read_input(input)?;
    Multisegment::from_json(&v)
        .ok_or_else(|| Failure::usage("expected {\"segments\": [[i, j], ...]} with i <= j"))
}

fn read_multipartition(input: &InputArg) -> Result<Multipartition, Failure> {
    let v = read_input(input)?;
    Multipartition::from_json(&v).ok_or_else(|| {
        Failure::usage("expected {\"components\": [{\"color\": i, \"parts\": [..]}], ...}")
    })
}

fn parse_weight(text: &str) -> Result<Weight, Failure> {
    let v: Value = serde_json::from_str(text)
        .map_err(|e| Failure::usage(format!("invalid weight JSON: {e}")))?;
    Weight::from_json(&v)
        .ok_or_else(|| Failure::usage("expected a color array like [1,0] or {\"lambda\": [..]}"))
}

fn parse_contents(text: &str) -> Result<Vec<Content>, Failure> {
    let (lo, hi) = text
        .split_once("..")
        .ok_or_else(|| Failure::usage("contents must be an inclusive range like -2..2"))?;
    let lo: Content = lo.trim().parse().map_err(|_| Failure::usage("bad range start"))?;
    let hi: Content = hi.trim().parse().map_err(|_| Failure::usage("bad range end"))?;
    if lo > hi {
        return Err(Failure::usage("empty content range"));
    }
    Ok((lo..=hi).collect())
}

fn print_json(v: &Value) {
    println!("{v}");
}

fn null_result() -> Value {
    json!({ "null": true })
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.cmd {
        Cmd::Seg { cmd } => run_seg(cmd),
        Cmd::Check { cmd } => run_check(cmd),
        Cmd::Convert { cmd } => run_convert(cmd),
        Cmd::Mp { cmd } => run_mp(cmd),
        Cmd::Char(args) => run_char(args),
        Cmd::Graph { cmd } => run_graph(cmd),
        Cmd::Selfcheck { level } => selfcheck::run(level).map_err(Failure::verify),
    }
}

fn run_seg(cmd: SegCmd) -> Result<(), Failure> {
    match cmd {
        SegCmd::Eps { i, input } => {
            let d = read_multisegment(&input)?;
            print_json(&json!({ "eps": eps(&d, i) }));
        }
        SegCmd::Phi { i, input } => {
            let d = read_multisegment(&input)?;
            print_json(&json!({ "phi": phi(&d, i) }));
        }
        SegCmd::E(args) => seg_partial_op(&args, apply_e)?,
        SegCmd::Ehat(args) => seg_partial_op(&args, apply_e_hat)?,
        SegCmd::F(args) => seg_total_op(&args, apply_f)?,
        SegCmd::Fhat(args) => seg_total_op(&args, apply_f_hat)?,
        SegCmd::Order { mode, input } => {
            let d = read_multisegment(&input)?;
            let segs = match mode {
                OrderMode::Right => d.right_order().to_vec(),
                OrderMode::Left => d.left_order(),
            };
            let pairs: Vec<Value> = segs.iter().map(|s| json!([s.start(), s.end()])).collect();
            print_json(&json!({ "segments": pairs }));
        }
        SegCmd::Minlambda { input } => {
            let d = read_multisegment(&input)?;
            print_json(&minimal_weight(&d).to_json());
        }
        SegCmd::Path { input } => {
            let d = read_multisegment(&input)?;
            print_json(&json!({ "path": hw_path(&d) }));
        }
    }
    Ok(())
}

fn seg_partial_op(
    args: &SegOpArgs,
    op: impl Fn(&Multisegment, Content) -> Option<Multisegment>,
) -> Result<(), Failure> {
    let mut cur = Some(read_multisegment(&args.input)?);
    for _ in 0..args.reps {
        cur = cur.and_then(|d| op(&d, args.i));
    }
    print_json(&cur.map_or_else(null_result, |d| d.to_json()));
    Ok(())
}

fn seg_total_op(
    args: &SegOpArgs,
    op: impl Fn(&Multisegment, Content) -> Multisegment,
) -> Result<(), Failure> {
    let mut cur = read_multisegment(&args.input)?;
    for _ in 0..args.reps {
        cur = op(&cur, args.i);
    }
    print_json(&cur.to_json());
    Ok(())
}

fn run_check(cmd: CheckCmd) -> Result<(), Failure> {
    match cmd {
        CheckCmd::Cyclotomic { lambda, input } => {
            let lam = parse_weight(&lambda)?;
            let d = read_multisegment(&input)?;
            print_json(&json!({ "cyclotomic": cyclotomic_check(&d, &lam) }));
        }
        CheckCmd::Kleshchev { input } => {
            let mp = read_multipartition(&input)?;
            print_json(&json!({ "kleshchev": is_kleshchev(&mp) }));
        }
    }
    Ok(())
}

fn run_convert(cmd: ConvertCmd) -> Result<(), Failure> {
    match cmd {
        ConvertCmd::Seg2mp { lambda, input } => {
            let lam = parse_weight(&lambda)?;
            let d = read_multisegment(&input)?;
            let mp = seg_to_mp(&d, &lam)?;
            print_json(&mp.to_json());
        }
        ConvertCmd::Mp2seg { input } => {
            let mp = read_multipartition(&input)?;
            print_json(&mp.to_multisegment().to_json());
        }
    }
    Ok(())
}

fn run_mp(cmd: MpCmd) -> Result<(), Failure> {
    match cmd {
        MpCmd::Eps { i, input } => {
            let mp = read_multipartition(&input)?;
            print_json(&json!({ "eps": mp_crystal::eps_mp(&mp, i) }));
        }
        MpCmd::E { i, input } => {
            let mp = read_multipartition(&input)?;
            print_json(
                &mp_crystal::apply_e_mp(&mp, i).map_or_else(null_result, |m| m.to_json()),
            );
        }
        MpCmd::F { i, input } => {
            let mp = read_multipartition(&input)?;
            print_json(
                &mp_crystal::apply_f_mp(&mp, i).map_or_else(null_result, |m| m.to_json()),
            );
        }
    }
    Ok(())
}

fn run_char(args: CharArgs) -> Result<(), Failure> {
    match args.cmd {
        None => {
            let d = read_multisegment(&args.input)?;
            let bound = args.bound.unwrap_or_else(bounds::char_bound);
            let ch = characters::char_of_ind_bounded(d.right_order(), bound)?;
            print_json(&ch.to_json());
        }
        Some(CharCmd::Mult { word, bound, input }) => {
            let v: Value = serde_json::from_str(&word)
                .map_err(|e| Failure::usage(format!("invalid word JSON: {e}")))?;
            let letters = v
                .as_array()
                .and_then(|arr| arr.iter().map(Value::as_i64).collect::<Option<Vec<_>>>())
                .ok_or_else(|| Failure::usage("word must be an integer array"))?;
            let d = read_multisegment(&input)?;
            let bound = bound.unwrap_or_else(bounds::char_bound);
            let ch = characters::char_of_ind_bounded(d.right_order(), bound)?;
            let mult = ch.multiplicity(&characters::CharWord(letters))?;
            print_json(&json!({ "mult": mult }));
        }
    }
    Ok(())
}

fn emit_graph(g: &CrystalGraph, out: &GraphOutArgs) -> Result<(), Failure> {
    let text = match out.format {
        GraphFormat::Dot => g.to_dot(),
        GraphFormat::Json => format!("{}\n", g.to_json()),
    };
    match &out.out {
        Some(path) => fs::write(path, text).map_err(Failure::io)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run_graph(cmd: GraphCmd) -> Result<(), Failure> {
    match cmd {
        GraphCmd::Binf { contents, max_n, out } => {
            let contents = parse_contents(&contents)?;
            let g = build_binf(&contents, max_n)?;
            emit_graph(&g, &out)
        }
        GraphCmd::BlambdaSeg { lambda, max_n, contents, out } => {
            let lam = parse_weight(&lambda)?;
            let window = resolve_window(&lam, max_n, contents.as_deref())?;
            check_graph_bound(max_n)?;
            let elements: Vec<Multisegment> = enumerate_multisegments(&window, max_n)
                .into_iter()
                .filter(|d| cyclotomic_check(d, &lam))
                .collect();
            emit_graph(&build_from_elements(&elements, &window), &out)
        }
        GraphCmd::BlambdaMp { lambda, max_n, contents, out } => {
            let lam = parse_weight(&lambda)?;
            let window = resolve_window(&lam, max_n, contents.as_deref())?;
            check_graph_bound(max_n)?;
            let mut elements: Vec<Multipartition> = Vec::new();
            for k in 0..=max_n {
                elements.extend(enumerate_kleshchev_bounded(&lam, k, usize::MAX)?);
            }
            emit_graph(&build_from_elements(&elements, &window), &out)
        }
        GraphCmd::Tensor { lambda, max_n, contents, out } => {
            let lam = parse_weight(&lambda)?;
            let window = resolve_window(&lam, max_n, contents.as_deref())?;
            let start = TensorElement::new(Multipartition::empty(&lam).components().to_vec());
            let g = component_of(&start, &window, max_n)?;
            emit_graph(&g, &out)
        }
        GraphCmd::Verify { lambda, max_n } => {
            let lam = parse_weight(&lambda)?;
            let check = verify_blambda(&lam, max_n)?;
            if check.ok {
                print_json(&json!({ "ok": true }));
                Ok(())
            } else {
                print_json(&json!({ "ok": false, "certificate": check.certificate }));
                Err(Failure::verify(check.certificate.unwrap_or_default()))
            }
        }
    }
}

fn resolve_window(
    lam: &Weight,
    max_n: usize,
    contents: Option<&str>,
) -> Result<Vec<Content>, Failure> {
    match contents {
        Some(text) => parse_contents(text),
        None => Ok(lambda_window(lam, max_n)),
    }
}

fn check_graph_bound(max_n: usize) -> Result<(), Failure> {
    let bound = bounds::graph_bound();
    if max_n > bound {
        return Err(Error::BoundExceeded { requested: max_n, max: bound }.into());
    }
    Ok(())
}
