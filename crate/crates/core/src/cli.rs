//! The `gqt` command line.
//!
//! Every successful run prints one JSON report (or a CSV catalog) whose
//! header echoes the parsed configuration and the field. Exit status is 0 on
//! success, 1 for domain errors (reported as a JSON error object on stdout)
//! and 2 for usage errors.

use std::collections::BTreeMap;
use std::io::Write;
use std::sync::Arc;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::galois::{arith, build_field, theory_coordinates, ArithOp, ArithOperand, FieldSpec, FieldSpecJson};
use crate::geocode::{
    agree_parameters, ciphertext_bits, geo_decode, geo_encode_trace, geo_roundtrip_batch, geo_transmit, Bitstream,
    GeoCiphertext, BIT_LAYOUT,
};
use crate::hermitian::{standard_form, FieldVector};
use crate::kernelgeo::{enumerate_kernel, verify_one_or_all, EnumerationOptions, KernelCatalog, KernelGeometry};
use crate::nogo::{f2_orthogonal_special_case, scan_pairs, ObstructionKind};
use crate::protocols::{
    sdc_run, teleport, teleport_all_branches, teleport_char2, teleport_char2_all_branches, SdcMessage,
};

const TOOL: &str = "gqt";

#[derive(Parser, Debug)]
#[command(name = "gqt", version, about = "Exact quantum theory over finite fields GF(q^2)")]
pub struct Cli {
    /// Omit the timestamp so identical runs give identical bytes.
    #[arg(long, global = true)]
    pub deterministic: bool,
    /// Write the report here instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Lift the enumeration size guard (also GQT_GUARD_OVERRIDE=1).
    #[arg(long, global = true, env = "GQT_GUARD_OVERRIDE", value_parser = clap::builder::BoolishValueParser::new())]
    pub guard_override: bool,
    /// Partition enumeration over threads; output is unchanged.
    #[arg(long, global = true)]
    pub parallel: bool,
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug, Clone)]
pub struct FieldArgs {
    /// Characteristic.
    #[arg(long)]
    pub p: u64,
    /// Extension degree.
    #[arg(long, default_value_t = 2)]
    pub k: u32,
    /// Monic modulus coefficients c0,c1,...,1 (default: smallest irreducible).
    #[arg(long, value_delimiter = ',')]
    pub modulus: Option<Vec<u32>>,
}

impl FieldArgs {
    fn build(&self) -> Result<Arc<FieldSpec>> {
        build_field(self.p, self.k, self.modulus.as_deref())
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Describe a field and optionally evaluate one operation.
    Field {
        #[command(flatten)]
        field: FieldArgs,
        /// First operand.
        #[arg(long)]
        x: Option<String>,
        #[arg(long, value_enum, requires = "x")]
        op: Option<FieldOp>,
        /// Second operand (an integer exponent for pow).
        #[arg(long)]
        y: Option<String>,
    },
    /// Kernel point/line catalogs.
    Kernel {
        #[command(subcommand)]
        action: KernelAction,
    },
    /// Check the incidence structure of the kernel.
    Verify {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value_t = 4)]
        dim: usize,
    },
    /// Teleport α|0⟩ + β|1⟩.
    Teleport {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
        /// Use the characteristic-2 procedure.
        #[arg(long)]
        char2: bool,
        #[arg(long)]
        seed: u64,
        /// Emit every possible branch instead of one seeded choice.
        #[arg(long)]
        all_branches: bool,
    },
    /// Super-dense coding of a two-bit message.
    Sdc {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        message: String,
    },
    /// Transport a state as three kernel points.
    Geocode {
        #[command(subcommand)]
        action: GeocodeAction,
    },
    /// Exhaustive cloning obstruction scan.
    Noclone {
        #[command(subcommand)]
        action: ScanAction,
    },
    /// Exhaustive deleting obstruction scan.
    Nodelete {
        #[command(subcommand)]
        action: ScanAction,
    },
    /// Coordinates (i, m, p) of a finite modal theory.
    Theory {
        #[arg(long)]
        i: u32,
        #[arg(long)]
        m: u32,
        /// Characteristic p.
        #[arg(long)]
        pp: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
    Inv,
    Pow,
    Conj,
    Norm,
    Decompose,
    Born,
}

#[derive(Subcommand, Debug)]
pub enum KernelAction {
    Enumerate {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value_t = 4)]
        dim: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum ScanAction {
    Scan {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value_t = 2)]
        dim: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum GeocodeAction {
    /// Encode, transmit and decode seeded random states.
    Roundtrip {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Seed for the random states (defaults to the parameter seed).
        #[arg(long)]
        state_seed: Option<u64>,
    },
    /// Encode one state; coordinates separated by ',' or ';'.
    Encode {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        state: String,
    },
    /// Decode a hex bitstream produced by `geocode encode`.
    Decode {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        hex: String,
        /// Bit length (defaults to three points of dimension 4).
        #[arg(long)]
        bits: Option<usize>,
    },
}

/// Configuration echoed into every report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub command: String,
    pub p: Option<u64>,
    pub k: Option<u32>,
    pub modulus: Option<Vec<u32>>,
    pub dim: Option<usize>,
    pub seed: Option<u64>,
    pub format: Format,
    pub out: Option<String>,
    pub parallel: bool,
    pub guard_override: bool,
    pub verbosity: u8,
    pub args: BTreeMap<String, String>,
}

impl RunConfig {
    fn from_cli(cli: &Cli) -> Self {
        let mut cfg = RunConfig {
            command: String::new(),
            p: None,
            k: None,
            modulus: None,
            dim: None,
            seed: None,
            format: cli.format,
            out: cli.out.clone(),
            parallel: cli.parallel,
            guard_override: cli.guard_override,
            verbosity: cli.verbose,
            args: BTreeMap::new(),
        };
        let field = |cfg: &mut RunConfig, f: &FieldArgs| {
            cfg.p = Some(f.p);
            cfg.k = Some(f.k);
            cfg.modulus = f.modulus.clone();
        };
        match &cli.command {
            Command::Field { field: f, x, op, y } => {
                cfg.command = "field".into();
                field(&mut cfg, f);
                for (key, v) in [("x", x.clone()), ("op", op.map(|o| format!("{o:?}").to_lowercase())), ("y", y.clone())]
                {
                    if let Some(v) = v {
                        cfg.args.insert(key.into(), v);
                    }
                }
            }
            Command::Kernel { action: KernelAction::Enumerate { field: f, dim } } => {
                cfg.command = "kernel enumerate".into();
                field(&mut cfg, f);
                cfg.dim = Some(*dim);
            }
            Command::Verify { field: f, dim } => {
                cfg.command = "verify".into();
                field(&mut cfg, f);
                cfg.dim = Some(*dim);
            }
            Command::Teleport { field: f, alpha, beta, char2, seed, all_branches } => {
                cfg.command = "teleport".into();
                field(&mut cfg, f);
                cfg.seed = Some(*seed);
                cfg.args.insert("alpha".into(), alpha.clone());
                cfg.args.insert("beta".into(), beta.clone());
                cfg.args.insert("char2".into(), char2.to_string());
                cfg.args.insert("all_branches".into(), all_branches.to_string());
            }
            Command::Sdc { field: f, message } => {
                cfg.command = "sdc".into();
                field(&mut cfg, f);
                cfg.args.insert("message".into(), message.clone());
            }
            Command::Geocode { action } => {
                cfg.dim = Some(4);
                match action {
                    GeocodeAction::Roundtrip { field: f, seed, trials, state_seed } => {
                        cfg.command = "geocode roundtrip".into();
                        field(&mut cfg, f);
                        cfg.seed = Some(*seed);
                        cfg.args.insert("trials".into(), trials.to_string());
                        cfg.args.insert("state_seed".into(), state_seed.unwrap_or(*seed).to_string());
                    }
                    GeocodeAction::Encode { field: f, seed, state } => {
                        cfg.command = "geocode encode".into();
                        field(&mut cfg, f);
                        cfg.seed = Some(*seed);
                        cfg.args.insert("state".into(), state.clone());
                    }
                    GeocodeAction::Decode { field: f, seed, hex, bits } => {
                        cfg.command = "geocode decode".into();
                        field(&mut cfg, f);
                        cfg.seed = Some(*seed);
                        cfg.args.insert("hex".into(), hex.clone());
                        if let Some(b) = bits {
                            cfg.args.insert("bits".into(), b.to_string());
                        }
                    }
                }
            }
            Command::Noclone { action: ScanAction::Scan { field: f, dim } }
            | Command::Nodelete { action: ScanAction::Scan { field: f, dim } } => {
                cfg.command =
                    if matches!(cli.command, Command::Noclone { .. }) { "noclone scan" } else { "nodelete scan" }.into();
                field(&mut cfg, f);
                cfg.dim = Some(*dim);
            }
            Command::Theory { i, m, pp } => {
                cfg.command = "theory".into();
                cfg.p = Some(*pp);
                cfg.args.insert("i".into(), i.to_string());
                cfg.args.insert("m".into(), m.to_string());
            }
        }
        cfg
    }
}

#[derive(Debug, Serialize)]
struct Report<'a> {
    tool: &'static str,
    version: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    generated_at_unix: Option<u64>,
    config: &'a RunConfig,
    #[serde(skip_serializing_if = "Option::is_none")]
    field: Option<FieldSpecJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    result: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<ErrorObject>,
}

#[derive(Debug, Serialize)]
struct ErrorObject {
    code: &'static str,
    message: String,
}

enum Output {
    Json { field: Option<FieldSpecJson>, result: Value },
    Text(String),
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn parse_state(spec: &Arc<FieldSpec>, text: &str) -> Result<FieldVector> {
    let sep = if text.contains(';') { ';' } else { ',' };
    let parts: Vec<&str> = text.split(sep).map(str::trim).collect();
    FieldVector::parse(spec, &parts)
}

fn kernel(spec: &Arc<FieldSpec>, dim: usize, cli: &Cli) -> Result<KernelGeometry> {
    let form = standard_form(spec, dim)?;
    enumerate_kernel(&form, EnumerationOptions { guard_override: cli.guard_override, parallel: cli.parallel })
}

fn field_command(spec: &Arc<FieldSpec>, x: Option<&str>, op: Option<FieldOp>, y: Option<&str>) -> Result<Value> {
    let mut out = json!({
        "order": spec.order(),
        "characteristic": spec.characteristic(),
        "has_involution": spec.has_involution(),
        "q": spec.q(),
    });
    if spec.has_involution() {
        out["kappa"] = json!(spec.kappa()?.to_string());
        out["subfield_order"] = json!(spec.subfield()?.len());
    }
    let Some(x) = x else { return Ok(out) };
    let xe = spec.parse_element(x)?;
    out["x"] = json!({"text": xe.to_string(), "coeffs": xe.coeffs()});
    let Some(op) = op else { return Ok(out) };
    let y_elem = || -> Result<_> {
        let y = y.ok_or_else(|| Error::InvalidArgument("this operation needs --y".into()))?;
        spec.parse_element(y)
    };
    let elem = |e: crate::galois::FieldElement| json!({"text": e.to_string(), "coeffs": e.coeffs()});
    let result = match op {
        FieldOp::Add => elem(arith(ArithOp::Add, &xe, Some(&ArithOperand::Element(y_elem()?)))?),
        FieldOp::Sub => elem(arith(ArithOp::Sub, &xe, Some(&ArithOperand::Element(y_elem()?)))?),
        FieldOp::Mul => elem(arith(ArithOp::Mul, &xe, Some(&ArithOperand::Element(y_elem()?)))?),
        FieldOp::Div => elem(xe.try_div(&y_elem()?)?),
        FieldOp::Inv => elem(arith(ArithOp::Inv, &xe, None)?),
        FieldOp::Pow => {
            let n: i64 = y
                .ok_or_else(|| Error::InvalidArgument("pow needs --y N".into()))?
                .trim()
                .parse()
                .map_err(|_| Error::InvalidArgument("pow exponent must be an integer".into()))?;
            elem(arith(ArithOp::Pow, &xe, Some(&ArithOperand::Integer(n)))?)
        }
        FieldOp::Conj => elem(xe.frobenius_involution()?),
        FieldOp::Norm => elem(xe.norm()?),
        FieldOp::Decompose => {
            let (a, b) = xe.decompose()?;
            json!({"a": elem(a), "b": elem(b), "kappa": spec.kappa()?.to_string()})
        }
        FieldOp::Born => {
            let bq = xe.born_quantities()?;
            json!({"norm": elem(bq.norm), "sum_of_squares": elem(bq.sum_of_squares), "agree": bq.agree})
        }
    };
    out["op"] = json!(format!("{op:?}").to_lowercase());
    out["result"] = result;
    Ok(out)
}

fn execute(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Field { field, x, op, y } => {
            let spec = field.build()?;
            let result = field_command(&spec, x.as_deref(), *op, y.as_deref())?;
            Ok(Output::Json { field: Some(spec.to_json()), result })
        }
        Command::Kernel { action: KernelAction::Enumerate { field, dim } } => {
            let spec = field.build()?;
            let geom = kernel(&spec, *dim, cli)?;
            let catalog = KernelCatalog::from_geometry(&geom);
            match cli.format {
                Format::Csv => Ok(Output::Text(catalog.to_csv(&geom))),
                Format::Json => Ok(Output::Json { field: Some(spec.to_json()), result: to_value(&catalog) }),
            }
        }
        Command::Verify { field, dim } => {
            let spec = field.build()?;
            let geom = kernel(&spec, *dim, cli)?;
            let report = verify_one_or_all(&geom);
            let (points_by_lines, lines_by_points) = geom.double_count();
            let result = json!({
                "passed": report.passed(),
                "one_or_all": report,
                "regularity": geom.regularity().map(|(r, s)| json!({"lines_per_point": r, "points_per_line": s})),
                "double_count": {"sum_point_degrees": points_by_lines, "sum_line_sizes": lines_by_points},
            });
            Ok(Output::Json { field: Some(spec.to_json()), result })
        }
        Command::Teleport { field, alpha, beta, char2, seed, all_branches } => {
            let spec = field.build()?;
            let a = spec.parse_element(alpha)?;
            let b = spec.parse_element(beta)?;
            let result = match (*char2, *all_branches) {
                (false, false) => to_value(&teleport(&a, &b, *seed)?.to_json()),
                (true, false) => to_value(&teleport_char2(&a, &b, *seed)?.to_json()),
                (false, true) => to_value(&teleport_all_branches(&a, &b)?.iter().map(|t| t.to_json()).collect::<Vec<_>>()),
                (true, true) => {
                    to_value(&teleport_char2_all_branches(&a, &b)?.iter().map(|t| t.to_json()).collect::<Vec<_>>())
                }
            };
            Ok(Output::Json { field: Some(spec.to_json()), result })
        }
        Command::Sdc { field, message } => {
            let spec = field.build()?;
            let msg: SdcMessage = message.parse()?;
            Ok(Output::Json { field: Some(spec.to_json()), result: to_value(&sdc_run(msg, &spec)?) })
        }
        Command::Geocode { action } => geocode_command(action, cli),
        Command::Noclone { action: ScanAction::Scan { field, dim } }
        | Command::Nodelete { action: ScanAction::Scan { field, dim } } => {
            let kind = if matches!(cli.command, Command::Noclone { .. }) {
                ObstructionKind::Cloning
            } else {
                ObstructionKind::Deleting
            };
            let spec = field.build()?;
            let scan = scan_pairs(&spec, *dim, kind)?;
            let mut result = to_value(&scan);
            if kind == ObstructionKind::Cloning {
                result["f2_special_case"] = to_value(&f2_orthogonal_special_case());
            }
            Ok(Output::Json { field: Some(spec.to_json()), result })
        }
        Command::Theory { i, m, pp } => {
            let d = theory_coordinates(*i, *m, *pp)?;
            let field = d.build_field().ok().map(|s| s.to_json());
            Ok(Output::Json { field, result: to_value(&d) })
        }
    }
}

fn geocode_command(action: &GeocodeAction, cli: &Cli) -> Result<Output> {
    let (field, seed) = match action {
        GeocodeAction::Roundtrip { field, seed, .. }
        | GeocodeAction::Encode { field, seed, .. }
        | GeocodeAction::Decode { field, seed, .. } => (field, *seed),
    };
    let spec = field.build()?;
    let geom = Arc::new(kernel(&spec, 4, cli)?);
    let params = agree_parameters(geom, seed)?;
    let result = match action {
        GeocodeAction::Roundtrip { trials, state_seed, .. } => {
            let report = geo_roundtrip_batch(&params, *trials, state_seed.unwrap_or(seed), cli.parallel);
            json!({"layout": BIT_LAYOUT, "params": params.summary(), "report": report})
        }
        GeocodeAction::Encode { state, .. } => {
            let v = parse_state(&spec, state)?;
            let trace = geo_encode_trace(&v, &params)?;
            let ct = trace.ciphertext.clone().ok_or(Error::DegenerateSpan { rank: trace.span_rank })?;
            let (_, transmit) = geo_transmit(&ct, &spec)?;
            json!({
                "params": params.summary(),
                "x": trace.x.coords().to_strings(),
                "curve_size": trace.curve_size,
                "meets": trace.meets,
                "span_rank": trace.span_rank,
                "no_unitary_transport": trace.no_unitary_transport,
                "ciphertext": ct.to_strings(),
                "transmit": transmit,
            })
        }
        GeocodeAction::Decode { hex, bits, .. } => {
            let bit_len = bits.unwrap_or_else(|| ciphertext_bits(&spec, 4, 3));
            let points = Bitstream::from_hex(hex, bit_len)?.to_points(&spec, 4)?;
            let ct = GeoCiphertext { points };
            let x = geo_decode(&ct, &params)?;
            json!({
                "params": params.summary(),
                "layout": BIT_LAYOUT,
                "ciphertext": ct.to_strings(),
                "decoded": x.coords().to_strings(),
            })
        }
    };
    Ok(Output::Json { field: Some(spec.to_json()), result })
}

fn timestamp(cli: &Cli) -> Option<u64> {
    if cli.deterministic {
        None
    } else {
        SystemTime::now().duration_since(UNIX_EPOCH).ok().map(|d| d.as_secs())
    }
}

fn render(report: &Report<'_>) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run_with<I, S>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let config = RunConfig::from_cli(&cli);
    if cli.format == Format::Csv && !matches!(cli.command, Command::Kernel { .. }) {
        let _ = writeln!(stderr, "error: --format csv is only available for `kernel enumerate`");
        return 2;
    }
    let header = |field, result, error| Report {
        tool: TOOL,
        version: env!("CARGO_PKG_VERSION"),
        generated_at_unix: timestamp(&cli),
        config: &config,
        field,
        result,
        error,
    };
    match execute(&cli) {
        Ok(output) => {
            let text = match output {
                Output::Json { field, result } => render(&header(field, Some(result), None)),
                Output::Text(t) => t,
            };
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &text).map_err(|e| format!("cannot write {path}: {e}")),
                None => stdout.write_all(text.as_bytes()).map_err(|e| e.to_string()),
            };
            match written {
                Ok(()) => 0,
                Err(msg) => {
                    let err = ErrorObject { code: "Io", message: msg };
                    let _ = stdout.write_all(render(&header(None, None, Some(err))).as_bytes());
                    1
                }
            }
        }
        Err(e) => {
            let field = config
                .p
                .and_then(|p| build_field(p, config.k.unwrap_or(2), config.modulus.as_deref()).ok())
                .map(|s| s.to_json());
            let err = ErrorObject { code: e.code(), message: e.to_string() };
            let _ = stdout.write_all(render(&header(field, None, Some(err))).as_bytes());
            1
        }
    }
}

pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout(), &mut std::io::stderr())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("gqt").chain(args.iter().copied());
        let code = run_with(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    fn json_of(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn kernel_enumerate_counts() {
        let (code, out, _) = run_capture(&["kernel", "enumerate", "--p", "2", "--k", "2", "--dim", "4", "--deterministic"]);
        assert_eq!(code, 0);
        let v = json_of(&out);
        assert_eq!(v["result"]["header"]["point_count"], 45);
        assert_eq!(v["result"]["header"]["line_count"], 27);
        assert_eq!(v["field"]["modulus"], json!([1, 1, 1]));
        assert_eq!(v["config"]["command"], "kernel enumerate");
        assert!(v.get("generated_at_unix").is_none());
    }

    #[test]
    fn sdc_and_theory() {
        let (code, out, _) = run_capture(&["sdc", "--p", "3", "--k", "2", "--message", "01", "--deterministic"]);
        assert_eq!(code, 0);
        assert_eq!(json_of(&out)["result"]["decoded"], "01");
        let (code, out, _) = run_capture(&["theory", "--i", "1", "--m", "2", "--pp", "5", "--deterministic"]);
        assert_eq!(code, 0);
        let v = json_of(&out);
        assert_eq!(v["result"]["field_order"], 25);
        assert_eq!(v["result"]["subfield_order"], 5);
        assert_eq!(v["result"]["dimension"], 2);
    }

    #[test]
    fn exit_codes() {
        let (code, out, _) = run_capture(&["sdc", "--p", "2", "--k", "2", "--message", "10"]);
        assert_eq!(code, 1);
        assert_eq!(json_of(&out)["error"]["code"], "Char2MessageUnsupported");
        let (code, _, err) = run_capture(&["bogus"]);
        assert_eq!(code, 2);
        assert!(!err.is_empty());
        let (code, _, _) = run_capture(&["teleport", "--p", "3", "--alpha", "1", "--beta", "1"]);
        assert_eq!(code, 2, "seed is required");
    }

    #[test]
    fn deterministic_output() {
        let args = ["teleport", "--p", "3", "--k", "2", "--alpha", "1", "--beta", "2", "--seed", "5", "--deterministic"];
        let (_, a, _) = run_capture(&args);
        let (_, b, _) = run_capture(&args);
        assert_eq!(a, b);
        assert_eq!(json_of(&a)["result"]["recovered"], true);
    }
}
