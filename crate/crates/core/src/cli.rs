//! The `hopf-adjoint` command line. [`run`] is the whole program; the
//! binary only prints what it returns.
//!
//! Exit codes: 0 success, 1 domain error (error JSON on stdout) or a failed
//! acceptance row, 2 usage error.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::acceptance;
use crate::cohomology::table::{bilinear_json, bilinear_table, render_table};
use crate::cohomology::{
    cohomology, diagonal_2cocycles, group_3cocycles, AdjointComplex,
    Cochain, CohomologyOptions, GroupFunction, Mutation,
};
use crate::constructions::builtin_algebra;
use crate::deformation::{check_deformed_ybe, residuals};
use crate::error::{Error, Result};
use crate::groupoid::{
    check_rack_2cocycle, check_rack_3cocycle, conjugate_groupoid, groupoid_cocycle_space, rack_2cocycle_from,
    rack_3cocycle_from,
};
use crate::groups::{group_from_spec, FiniteGroup, GroupSpec};
use crate::hopf::schema::data_from_json;
use crate::hopf::{
    check_adjoint_conditions, check_hopf_axioms, check_ybe, r_matrix, r_matrix_inverse, HopfAlgebra,
    HopfData,
};
use crate::linalg::{char_poly, det, min_poly, LinearMap, SparseVec};
use crate::scalar::FieldSpec;

/// Optional override for the worker-thread count.
pub const THREADS_ENV: &str = "HOPF_ADJOINT_THREADS";

#[derive(Debug, Parser)]
#[command(name = "hopf-adjoint", version, about = "Adjoint cohomology of finite-dimensional Hopf algebras")]
struct Cli {
    /// Output mode.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct AlgebraArgs {
    /// `builtin:kg:<group>`, `builtin:fun:<group>`, `builtin:superline`, or a JSON file.
    #[arg(long)]
    algebra: String,
    /// `Q` or `Fp:<p>`. Defaults to `Q` for built-ins and to the file's field otherwise.
    #[arg(long)]
    field: Option<String>,
}

#[derive(Debug, Args)]
struct GroupArgs {
    /// `c<n>`, `s<n>`, `d<n>`, or a JSON file.
    #[arg(long)]
    group: String,
    #[arg(long, default_value = "Q")]
    field: String,
}

impl GroupArgs {
    fn parse(&self) -> Result<(GroupSpec, FiniteGroup, FieldSpec)> {
        let field: FieldSpec = self.field.parse()?;
        let spec: GroupSpec = self.group.parse()?;
        let g = group_from_spec(&spec)?;
        Ok((spec, g, field))
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the Hopf axioms and the adjoint conditions.
    Check {
        #[command(flatten)]
        algebra: AlgebraArgs,
    },
    /// Table of `ad(a ⊗ b)`.
    AdTable {
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Write the matrix of `ad` as (row, col, value) triples.
        #[arg(long)]
        dump_matrix: Option<PathBuf>,
    },
    /// YBE for `R_ad` and invertibility.
    Ybe {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long)]
        dump_matrix: Option<PathBuf>,
    },
    /// Determinant, characteristic and minimal polynomial of `R_ad`.
    Charpoly {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long)]
        dump_matrix: Option<PathBuf>,
    },
    /// `Zⁿ`, `Bⁿ`, `Hⁿ` of the adjoint complex.
    Cohomology {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long)]
        degree: usize,
        /// Include a cocycle basis.
        #[arg(long)]
        basis: bool,
        /// Ignore the degree-3 size policy.
        #[arg(long)]
        allow_large: bool,
        /// Write the matrix of `Dₙ` as (row, col, value) triples.
        #[arg(long)]
        dump_matrix: Option<PathBuf>,
    },
    /// First-order deformation `ad + tφ` along a 2-cocycle.
    Deform {
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Index into the computed basis of `Z²`.
        #[arg(long)]
        cocycle_index: usize,
        /// Also check this many random combinations of the basis.
        #[arg(long, default_value_t = 0)]
        random_combos: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Cocycle space of the conjugate groupoid.
    Groupoid {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        basis: bool,
    },
    /// Rack 2-cocycles ψ (degree 2) or 3-cocycles θ (degree 3) from group data.
    QuandleFromGroupoid {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        degree: usize,
    },
    /// Run the acceptance table.
    Accept {
        /// `all`, a tag (superline, group, function, groupoid, complex, ybe, deform, quandle, axioms) or a row number.
        #[arg(default_value = "all")]
        suite: String,
        /// Run against a deliberately broken differential.
        #[arg(long, hide = true)]
        mutate: Option<MutationArg>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MutationArg {
    OmitRTerm,
}

/// Parses `argv` (including the program name), runs the command and returns
/// the exit code with the text to print. Exit code 2 output belongs on stderr.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    init_threads();
    let format = cli.format;
    let start = Instant::now();
    match execute(&cli.command, format) {
        Ok(Output { result, text, failed }) => {
            let out = match format {
                Format::Text => text,
                Format::Json => {
                    let report = json!({
                        "command": command_name(&cli.command),
                        "inputs_digest": inputs_digest(&argv, &cli.command),
                        "result": result,
                        "wall_time": start.elapsed().as_secs_f64(),
                        "version": env!("CARGO_PKG_VERSION"),
                    });
                    serde_json::to_string_pretty(&report).unwrap()
                }
            };
            (i32::from(failed), out)
        }
        Err(e) => (1, serde_json::to_string_pretty(&json!({ "error": e.code(), "message": e.to_string() })).unwrap()),
    }
}

fn init_threads() {
    if let Some(n) = std::env::var(THREADS_ENV).ok().and_then(|s| s.parse::<usize>().ok()) {
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Check { .. } => "check",
        Command::AdTable { .. } => "ad-table",
        Command::Ybe { .. } => "ybe",
        Command::Charpoly { .. } => "charpoly",
        Command::Cohomology { .. } => "cohomology",
        Command::Deform { .. } => "deform",
        Command::Groupoid { .. } => "groupoid",
        Command::QuandleFromGroupoid { .. } => "quandle-from-groupoid",
        Command::Accept { .. } => "accept",
    }
}

/// SHA-256 over the arguments (minus the program name and output flags)
/// and the contents of any input file.
fn inputs_digest(argv: &[std::ffi::OsString], c: &Command) -> String {
    let mut hasher = Sha256::new();
    let mut skip_next = false;
    for a in argv.iter().skip(1) {
        let s = a.to_string_lossy();
        if std::mem::take(&mut skip_next) {
            continue;
        }
        if s == "--format" {
            skip_next = true;
            continue;
        }
        if s.starts_with("--format=") {
            continue;
        }
        hasher.update(s.as_bytes());
        hasher.update([0]);
    }
    let file = match c {
        Command::Check { algebra }
        | Command::AdTable { algebra, .. }
        | Command::Ybe { algebra, .. }
        | Command::Charpoly { algebra, .. }
        | Command::Cohomology { algebra, .. }
        | Command::Deform { algebra, .. } => (!algebra.algebra.starts_with("builtin:")).then(|| algebra.algebra.clone()),
        Command::Groupoid { group, .. } | Command::QuandleFromGroupoid { group, .. } => match group.group.parse() {
            Ok(GroupSpec::File(p)) => Some(p),
            _ => None,
        },
        Command::Accept { .. } => None,
    };
    if let Some(bytes) = file.and_then(|p| std::fs::read(p).ok()) {
        hasher.update(&bytes);
    }
    hasher.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

struct Output {
    result: Value,
    text: String,
    failed: bool,
}

impl Output {
    fn ok(result: Value, text: String) -> Self {
        Output { result, text, failed: false }
    }
}

fn load_data(args: &AlgebraArgs) -> Result<HopfData> {
    let field = args.field.as_deref().map(str::parse::<FieldSpec>).transpose()?;
    if args.algebra.starts_with("builtin:") {
        return Ok(builtin_algebra(&args.algebra, field.unwrap_or(FieldSpec::Rationals))?.data().clone());
    }
    let text = std::fs::read_to_string(&args.algebra)?;
    let value: Value = serde_json::from_str(&text)?;
    let data = data_from_json(&value)?;
    match field {
        Some(f) if f != data.field => Err(Error::FieldMismatch(f, data.field)),
        _ => Ok(data),
    }
}

fn load(args: &AlgebraArgs) -> Result<HopfAlgebra> {
    HopfAlgebra::new(load_data(args)?)
}

fn dump(path: &Option<PathBuf>, m: &LinearMap) -> Result<()> {
    if let Some(p) = path {
        std::fs::write(p, serde_json::to_string(&m.to_json())?)?;
    }
    Ok(())
}

fn dump_columns(path: &Option<PathBuf>, field: FieldSpec, rows: usize, cols: &[SparseVec]) -> Result<()> {
    if let Some(p) = path {
        let entries: Vec<Value> =
            cols.iter().enumerate().flat_map(|(j, c)| c.iter().map(move |(i, x)| json!([i, j, x.to_json()]))).collect();
        let m = json!({ "field": field.to_string(), "rows": rows, "cols": cols.len(), "entries": entries });
        std::fs::write(p, serde_json::to_string(&m)?)?;
    }
    Ok(())
}

fn execute(c: &Command, format: Format) -> Result<Output> {
    match c {
        Command::Check { algebra } => check(algebra),
        Command::AdTable { algebra, dump_matrix } => {
            let h = load(algebra)?;
            dump(dump_matrix, h.ad())?;
            let text = render_table(&h, &bilinear_table(&h, h.ad()));
            Ok(Output::ok(json!({ "dim": h.dim(), "ad": bilinear_json(&h, h.ad()) }), text))
        }
        Command::Ybe { algebra, dump_matrix } => {
            let h = load(algebra)?;
            let r = r_matrix(&h);
            dump(dump_matrix, &r)?;
            let ybe = check_ybe(&r)?;
            let inverse_ok = match r_matrix_inverse(&h) {
                Ok(ri) => {
                    let idn = LinearMap::identity(h.field(), h.dim(), 2);
                    ri.compose(&r)? == idn && r.compose(&ri)? == idn
                }
                Err(Error::AntipodeNotInvertible) => false,
                Err(e) => return Err(e),
            };
            let text = format!("YBE: {ybe}\ninverse: {inverse_ok}\n");
            Ok(Output::ok(json!({ "ybe": ybe, "inverse_ok": inverse_ok }), text))
        }
        Command::Charpoly { algebra, dump_matrix } => {
            let h = load(algebra)?;
            let r = r_matrix(&h);
            dump(dump_matrix, &r)?;
            let (d, cp, mp) = (det(&r)?, char_poly(&r)?, min_poly(&r)?);
            let text = format!(
                "det: {d}\ncharacteristic: {}\nminimal: {}\n",
                cp.factored_string(),
                mp.factored_string()
            );
            Ok(Output::ok(
                json!({
                    "det": d.to_string(),
                    "charpoly": cp.factored_string(),
                    "minpoly": mp.factored_string(),
                    "charpoly_coeffs": cp.coeff_strings(),
                    "minpoly_coeffs": mp.coeff_strings(),
                }),
                text,
            ))
        }
        Command::Cohomology { algebra, degree, basis, allow_large, dump_matrix } => {
            let h = load(algebra)?;
            let degree = *degree;
            let opts = CohomologyOptions { basis: *basis || format == Format::Text, allow_large: *allow_large, ..Default::default() };
            let report = cohomology(&h, degree, opts)?;
            if dump_matrix.is_some() {
                let cx = AdjointComplex::new(&h);
                // D₁ is only defined on C¹, so its columns are taken on the C¹ basis
                let cols = if degree == 1 {
                    cx.c1_basis().vectors().iter().map(|v| cx.apply(1, v)).collect::<Result<Vec<_>>>()?
                } else {
                    cx.columns(degree)?
                };
                dump_columns(dump_matrix, h.field(), crate::cohomology::space_dim(h.dim(), degree + 1)?, &cols)?;
            }
            let mut result = serde_json::to_value(&report)?;
            let cochains = report.basis(h.field(), h.dim());
            if *basis {
                result["basis"] = Value::Array(cochains.iter().flatten().map(Cochain::to_json).collect());
            }
            let mut text = format!(
                "degree {}: dim C = {}, dim Z = {}, dim B = {}, dim H = {}\n",
                report.degree, report.dim_c, report.dim_z, report.dim_b, report.dim_h
            );
            if degree == 2 {
                for (i, z) in cochains.iter().flatten().enumerate() {
                    if let Cochain::Deg2(m) = z {
                        text.push_str(&format!("\ncocycle {i}:\n"));
                        text.push_str(&render_table(&h, &bilinear_table(&h, m)));
                    }
                }
            }
            Ok(Output::ok(result, text))
        }
        Command::Deform { algebra, cocycle_index, random_combos, seed } => {
            deform(algebra, *cocycle_index, *random_combos, *seed)
        }
        Command::Groupoid { group, degree, basis } => {
            let (spec, g, field) = group.parse()?;
            let z = groupoid_cocycle_space(&conjugate_groupoid(&g), *degree, field)?;
            let mut result = json!({ "degree": degree, "dim": z.dim() });
            if *basis {
                result["basis"] = Value::Array(
                    z.vectors().iter().map(|v| Value::Array(v.to_dense(z.ambient_dim(), field).iter().map(|s| s.to_json()).collect())).collect(),
                );
            }
            let text = format!("conjugate groupoid of {spec} over {field}: degree {degree} cocycles, dim {}\n", z.dim());
            Ok(Output::ok(result, text))
        }
        Command::QuandleFromGroupoid { group, degree } => quandle(group, *degree),
        Command::Accept { suite, mutate } => {
            let ids = acceptance::select(suite).ok_or_else(|| Error::Parse(format!("unknown suite {suite:?}")))?;
            let mutation = match mutate {
                Some(MutationArg::OmitRTerm) => Mutation::OmitRTerm,
                None => Mutation::None,
            };
            let rows = acceptance::run(&ids, mutation)?;
            let failed = rows.iter().any(|r| !r.pass);
            let text = rows.iter().map(|r| r.line() + "\n").collect();
            Ok(Output { result: json!({ "suite": suite, "rows": rows, "all_pass": !failed }), text, failed })
        }
    }
}

fn check(args: &AlgebraArgs) -> Result<Output> {
    let data = load_data(args)?;
    let report = check_hopf_axioms(&data)?;
    if let Some(fail) = report.first_failure() {
        let witness = fail.witness.as_ref().map(|w| w.join(" ⊗ ")).unwrap_or_default();
        return Err(Error::AxiomViolation(format!("{} fails at {witness}", fail.axiom.name())));
    }
    let h = HopfAlgebra::new(data)?;
    let cond = check_adjoint_conditions(&h);
    let text = format!(
        "dim {} over {}: Hopf axioms hold\nad is a module map: {}\nad is braided: {}\n",
        h.dim(),
        h.field(),
        cond.module,
        cond.braided
    );
    Ok(Output::ok(
        json!({
            "dim": h.dim(),
            "field": h.field().to_string(),
            "axioms": report.to_json(),
            "adjoint_conditions": { "module": cond.module, "braided": cond.braided },
        }),
        text,
    ))
}

fn deform(args: &AlgebraArgs, index: usize, combos: usize, seed: u64) -> Result<Output> {
    let h = load(args)?;
    let f = h.field();
    let z = cohomology(&h, 2, CohomologyOptions { basis: true, ..Default::default() })?;
    let basis = z.cocycles.expect("basis requested");
    let v = basis.vectors().get(index).ok_or(Error::IndexOutOfRange { index, order: basis.dim() })?;
    let phi = Cochain::from_vector(f, h.dim(), 2, v)?;
    let ybe = check_deformed_ybe(&h, &phi)?;
    let norms = residuals(&h, &phi)?.norms();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut combos_ok = 0;
    for _ in 0..combos {
        let w = basis.vectors().iter().fold(SparseVec::new(), |acc, b| acc.add_scaled(&f.from_i64(rng.gen_range(-9..=9)), b));
        combos_ok += usize::from(check_deformed_ybe(&h, &Cochain::from_vector(f, h.dim(), 2, &w)?)?);
    }
    let text = format!(
        "cocycle {index} of {}: deformed YBE {ybe}, residual entries [{}, {}]\nrandom combinations: {combos_ok}/{combos}\n",
        basis.dim(),
        norms[0],
        norms[1]
    );
    Ok(Output::ok(
        json!({
            "cocycle_index": index,
            "dim_z2": basis.dim(),
            "ybe": ybe,
            "residual_norms": norms,
            "random_combos": { "count": combos, "ybe": combos_ok },
        }),
        text,
    ))
}

fn quandle(args: &GroupArgs, degree: usize) -> Result<Output> {
    if !(2..=3).contains(&degree) {
        return Err(Error::UnsupportedDegree(degree));
    }
    let (spec, g, f) = args.parse()?;
    let n = g.order();
    let (space, arity) = if degree == 2 { (diagonal_2cocycles(&g, f), 2) } else { (group_3cocycles(&g, f), 3) };
    let funcs = space
        .vectors()
        .iter()
        .map(|v| {
            let src = GroupFunction::from_vector(f, n, arity, v);
            if degree == 2 {
                rack_2cocycle_from(&g, &src)
            } else {
                rack_3cocycle_from(&g, &src)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let all_ok = funcs
        .iter()
        .all(|t| if degree == 2 { check_rack_2cocycle(&g, t) } else { check_rack_3cocycle(&g, t) });
    let name = if degree == 2 { "ψ" } else { "θ" };
    let mut text = format!("{} {name} tables from {} over {f}; all rack cocycles: {all_ok}\n", funcs.len(), spec);
    for (i, t) in funcs.iter().enumerate() {
        text.push_str(&format!("\n{name}{i}:\n"));
        for (k, v) in t.values.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            let args: Vec<&str> = crate::linalg::index_to_tuple(k, n, arity).iter().map(|&x| g.label(x)).collect();
            text.push_str(&format!("  {name}({}) = {v}\n", args.join(", ")));
        }
    }
    let tables: Vec<Value> = funcs.iter().map(|t| t.to_labelled_json(&g)).collect();
    Ok(Output::ok(json!({ "degree": degree, "count": tables.len(), "all_rack_cocycles": all_ok, "tables": tables }), text))
}
