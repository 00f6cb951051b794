//! `gradedalg`: Gröbner bases, resolutions, regularity, Hilbert series and
//! the built-in example families from the command line.
//!
//! Exit codes: 0 success, 1 a mathematical check failed, 2 bad input.

mod input;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gradedalg::families::{self, CountMode, Surface, SumsetParams};
use gradedalg::matrix::GradedFreeModule;
use gradedalg::modules::{ext_cyclic, PresentedModule};
use gradedalg::resolution::{depth_of_quotient, minimal_free_resolution, regularity, resolve_quotient};
use gradedalg::suites::{run_suite, SUITES};
use gradedalg::{
    buchsbaum_eisenbud, hilbert, monomial_curve_ideal, BettiTable, Field, GradedComplex, Ideal, MonomialOrder,
    Polynomial, PrimeField, Rationals, Ring,
};

use input::{render_ideals, FieldChoice, InputFile};

#[derive(Parser)]
#[command(name = "gradedalg", version, about = "Exact graded commutative algebra over Q and F_p")]
struct Cli {
    /// Monomial order used by `gb`, `member` and `eliminate`.
    #[arg(long, global = true, value_enum, default_value_t = OrderArg::Grevlex)]
    order: OrderArg,
    /// Field characteristic (0 for Q); overrides the `field:` line.
    #[arg(long = "char", global = true, value_name = "P")]
    characteristic: Option<u64>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write the result to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Grevlex,
    Lex,
}

#[derive(Args, Clone)]
struct Source {
    /// Ideal file.
    #[arg(long, value_name = "FILE")]
    ideal: PathBuf,
    /// Which ideal of the file to use (default: the first).
    #[arg(long)]
    name: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ComplexFamily {
    /// `γ_J, η` for the colon ideal of the three-component complete intersection.
    ThreeComponentJ,
    /// `γ_K, ψ, φ` for its radical.
    ThreeComponentK,
    /// The displayed resolution of the (1,6,8) curve.
    Curve168,
    /// `γ, ψ, φ` for the radical of `I_{m,n}`.
    Cm,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyKind {
    ThreeComponent,
    Curve168,
    Cm,
    P4,
    SurfaceSocle,
    SurfaceDepth,
}

#[derive(Clone, Copy, ValueEnum)]
enum CountArg {
    Oracle,
    Closed,
    Both,
}

#[derive(Subcommand)]
enum Cmd {
    /// Reduced Gröbner basis.
    Gb(Source),
    /// Ideal membership of a polynomial.
    Member {
        #[command(flatten)]
        src: Source,
        /// Polynomial in the file's variables.
        #[arg(long)]
        poly: String,
    },
    /// `I : J`.
    Quotient {
        #[command(flatten)]
        src: Source,
        /// Name of `J` in the same file.
        #[arg(long)]
        by: String,
        #[arg(long = "as", default_value = "Q")]
        result: String,
    },
    /// `I : J^∞`.
    Saturate {
        #[command(flatten)]
        src: Source,
        /// Name of `J` in the same file.
        #[arg(long)]
        by: String,
        /// Name given to the result.
        #[arg(long = "as", default_value = "S")]
        result: String,
    },
    /// `I ∩ J`.
    Intersect {
        #[command(flatten)]
        src: Source,
        #[arg(long, visible_alias = "by")]
        with: String,
        #[arg(long = "as", default_value = "K")]
        result: String,
    },
    /// `I ∩ k[remaining variables]`.
    Eliminate {
        #[command(flatten)]
        src: Source,
        /// Variables to eliminate, separated by spaces or commas.
        #[arg(long)]
        vars: String,
        #[arg(long = "as", default_value = "E")]
        result: String,
    },
    /// Ideal of the projective monomial curve `(1 : w^{a_1} : … : w^{a_n})`.
    Curve {
        /// Increasing positive degrees, e.g. `1,6,8`.
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<u32>,
        /// Variable names (default `x y z t` / `x y z u v` / `x0 …`).
        #[arg(long)]
        vars: Option<String>,
        #[arg(long = "as", default_value = "C")]
        result: String,
    },
    /// Minimal free resolution of `R/I`, as a complex file.
    Resolve(Source),
    /// Graded Betti table of `I`.
    Betti(Source),
    /// Castelnuovo–Mumford regularity of `I`.
    Reg(Source),
    /// `depth R/I`.
    Depth(Source),
    /// Hilbert series of `R/I`.
    Hilbert {
        #[command(flatten)]
        src: Source,
        /// Also list the Hilbert function in degrees `0..=D`.
        #[arg(long, value_name = "D")]
        upto: Option<i64>,
    },
    /// Krull dimension of `R/I`.
    Dim(Source),
    /// Degree of `R/I`.
    Deg(Source),
    /// Buchsbaum–Eisenbud exactness check of a complex of free modules.
    VerifyComplex {
        /// Complex file (`map: target -> source` blocks).
        #[arg(long, value_name = "FILE", conflicts_with = "family", required_unless_present = "family")]
        complex: Option<PathBuf>,
        #[arg(long, value_enum)]
        family: Option<ComplexFamily>,
        #[arg(long, default_value_t = 1)]
        m: u64,
        #[arg(long, default_value_t = 1)]
        n: u64,
    },
    /// Whether `√I = √J`.
    SameRadical {
        #[command(flatten)]
        src: Source,
        #[arg(long, visible_alias = "by")]
        with: String,
    },
    /// `Ext^q(R/I, R(-w))`.
    Ext {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        q: usize,
        /// Twist of the target, `R(-w)`.
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        w: i64,
    },
    /// Socle degrees of `R/I`, or of `Ext^q(R/I, R(-w))` with `--ext q`.
    Socle {
        #[command(flatten)]
        src: Source,
        #[arg(long, value_name = "Q")]
        ext: Option<usize>,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        w: i64,
    },
    /// `dim H^i_m(R/I)_α` for `α` in `from..=to`.
    LcDims {
        #[command(flatten)]
        src: Source,
        /// Cohomological index `i`.
        #[arg(long = "i")]
        index: usize,
        /// First degree `α`.
        #[arg(long, allow_negative_numbers = true)]
        from: i64,
        #[arg(long, allow_negative_numbers = true)]
        to: i64,
    },
    /// Named ideals of a built-in family, in the ideal-file format.
    Family {
        #[arg(long, value_enum)]
        kind: FamilyKind,
        #[arg(long, default_value_t = 1)]
        m: u64,
        #[arg(long, default_value_t = 3)]
        n: u64,
    },
    /// `|S_α|` for the sumset family, by direct count and/or closed form.
    AppendixCount {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        alpha: u64,
        #[arg(long, value_enum, default_value_t = CountArg::Both)]
        mode: CountArg,
    },
    /// Run a named check suite.
    Suite {
        #[arg(value_parser = SUITES)]
        name: String,
    },
}

struct Output {
    text: String,
    json: Value,
    ok: bool,
}

impl Output {
    fn new(text: String, json: Value) -> Self {
        Output { text, json, ok: true }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match execute(&cli).and_then(|out| emit(&cli, &out).map(|_| out.ok)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn emit(cli: &Cli, out: &Output) -> anyhow::Result<()> {
    let mut body = if cli.json { serde_json::to_string_pretty(&out.json)? } else { out.text.clone() };
    if !body.ends_with('\n') {
        body.push('\n');
    }
    match &cli.out {
        Some(path) => fs::write(path, body).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn read_input(path: &Path) -> anyhow::Result<InputFile> {
    let src = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    InputFile::parse(&src).map_err(|e| anyhow!("{}: {e}", path.display()))
}

fn field_choice(cli: &Cli, file: Option<&InputFile>, default: FieldChoice) -> anyhow::Result<FieldChoice> {
    match cli.characteristic {
        Some(ch) => FieldChoice::from_characteristic(ch).map_err(|e| anyhow!(e)),
        None => Ok(file.map_or(default, |f| f.field)),
    }
}

/// Calls `$body` with `$field` bound to the concrete field of `$choice`.
macro_rules! with_field {
    ($choice:expr, $field:ident => $body:expr) => {
        match $choice {
            FieldChoice::Rationals => {
                let $field = Rationals;
                $body
            }
            FieldChoice::Prime(p) => {
                let $field = PrimeField::new(p)?;
                $body
            }
        }
    };
}

fn execute(cli: &Cli) -> anyhow::Result<Output> {
    match &cli.command {
        Cmd::Suite { name } => {
            let report = run_suite(name, cli.characteristic)?;
            Ok(Output { text: report.to_text(), json: serde_json::to_value(&report)?, ok: report.passed })
        }
        Cmd::AppendixCount { m, n, alpha, mode } => appendix_count(*m, *n, *alpha, *mode),
        Cmd::Curve { degrees, vars, result } => {
            let fs = field_choice(cli, None, FieldChoice::Rationals)?;
            with_field!(fs, f => curve(f, fs, degrees, vars.as_deref(), result))
        }
        Cmd::Family { kind, m, n } => {
            let surface = matches!(kind, FamilyKind::SurfaceSocle | FamilyKind::SurfaceDepth);
            let fs = field_choice(cli, None, if surface { FieldChoice::Prime(101) } else { FieldChoice::Rationals })?;
            with_field!(fs, f => family(f, fs, *kind, *m, *n))
        }
        Cmd::VerifyComplex { complex: Some(path), .. } => {
            let file = read_input(path)?;
            let fs = field_choice(cli, Some(&file), FieldChoice::Rationals)?;
            with_field!(fs, f => {
                let ring = file.ring(f).map_err(|e| anyhow!("{}: {e}", path.display()))?;
                let maps = file.matrices(&ring).map_err(|e| anyhow!("{}: {e}", path.display()))?;
                verify(&GradedComplex::new(maps)?)
            })
        }
        Cmd::VerifyComplex { family, m, n, .. } => {
            let fs = field_choice(cli, None, FieldChoice::Rationals)?;
            let family = family.expect("clap enforces --complex or --family");
            with_field!(fs, f => verify(&family_complex(f, family, *m, *n)?))
        }
        Cmd::Gb(src)
        | Cmd::Member { src, .. }
        | Cmd::Quotient { src, .. }
        | Cmd::Saturate { src, .. }
        | Cmd::Intersect { src, .. }
        | Cmd::Eliminate { src, .. }
        | Cmd::Resolve(src)
        | Cmd::Betti(src)
        | Cmd::Reg(src)
        | Cmd::Depth(src)
        | Cmd::Hilbert { src, .. }
        | Cmd::Dim(src)
        | Cmd::Deg(src)
        | Cmd::SameRadical { src, .. }
        | Cmd::Ext { src, .. }
        | Cmd::Socle { src, .. }
        | Cmd::LcDims { src, .. } => {
            let file = read_input(&src.ideal)?;
            let fs = field_choice(cli, Some(&file), FieldChoice::Rationals)?;
            with_field!(fs, f => on_ideal(cli, f, fs, &file, src))
        }
    }
}

/// Everything that reads one ideal (and possibly a second one) from a file.
fn on_ideal<F: Field>(cli: &Cli, field: F, fs: FieldChoice, file: &InputFile, src: &Source) -> anyhow::Result<Output> {
    let at = |e: input::InputError| anyhow!("{}: {e}", src.ideal.display());
    let ring = file.ring(field).map_err(at)?;
    let (name, ideal) = file.ideal(&ring, src.name.as_deref()).map_err(at)?;
    let other = |n: &str| file.ideal(&ring, Some(n)).map(|(_, i)| i).map_err(at);
    let bundle = |result: &str, gens: &[Polynomial<F>]| -> Output {
        let text = render_ideals(fs, gens.first().map_or(&ring, |g| g.ring()), &[(result, gens)]);
        let json = json!({
            "field": fs.to_string(),
            "vars": gens.first().map_or(&ring, |g| g.ring()).vars(),
            "name": result,
            "generators": strings(gens),
        });
        Output::new(text, json)
    };
    match &cli.command {
        Cmd::Gb(_) => {
            Ok(bundle(&name, &ideal.gb_in(&order_of(cli)).polynomials()))
        }
        Cmd::Member { poly, .. } => {
            let f = ring.parse(poly).with_context(|| format!("--poly `{poly}`"))?;
            let ordered = ring.reordered(order_of(cli))?;
            let member = Ideal::new(&ordered, in_ring_all(ideal.gens(), &ordered)?)?.contains(&f.in_ring(&ordered)?)?;
            Ok(Output::new(format!("member = {member}"), json!({ "member": member })))
        }
        Cmd::Quotient { by, result, .. } => Ok(bundle(result, &tidy(&ideal.quotient(&other(by)?)?)?)),
        Cmd::Saturate { by, result, .. } => {
            let (sat, steps) = ideal.saturate(&other(by)?)?;
            let mut out = bundle(result, &tidy(&sat)?);
            out.text.push_str(&format!("# colon steps: {steps}\n"));
            out.json["steps"] = json!(steps);
            Ok(out)
        }
        Cmd::Intersect { with, result, .. } => Ok(bundle(result, &tidy(&ideal.intersect(&other(with)?)?)?)),
        Cmd::Eliminate { vars, result, .. } => {
            let names: Vec<&str> = vars.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()).collect();
            let sub = ring.reordered(order_of(cli))?;
            let ordered = Ideal::new(&sub, in_ring_all(ideal.gens(), &sub)?)?;
            Ok(bundle(result, &tidy(&ordered.eliminate(&names)?)?))
        }
        Cmd::Resolve(_) => {
            let res = resolve_quotient(&ideal)?;
            let mut text = format!("field: {fs}\nvars: {}\n", ring.vars().join(" "));
            for (j, twists) in res.modules().iter().enumerate() {
                text.push_str(&format!("# F_{j} = {}\n", GradedFreeModule::new(twists.clone()).display()));
            }
            let mut maps = Vec::new();
            for m in res.maps() {
                text.push_str(&format!("map: {} -> {}\n", join(m.target()), join(m.source())));
                for row in m.rows() {
                    text.push_str(&format!("  {}\n", strings(row).join(", ")));
                }
                maps.push(json!({
                    "target": m.target(),
                    "source": m.source(),
                    "rows": m.rows().iter().map(|r| strings(r)).collect::<Vec<_>>(),
                }));
            }
            Ok(Output::new(text, json!({ "modules": res.modules(), "maps": maps })))
        }
        Cmd::Betti(_) => {
            let table = minimal_free_resolution(&ideal)?.betti();
            Ok(Output::new(table.to_text(), serde_json::to_value(&table)?))
        }
        Cmd::Reg(_) => {
            let reg = regularity(&ideal)?;
            let shown = reg.map_or("-inf".to_string(), |r| r.to_string());
            Ok(Output::new(format!("reg = {shown}"), json!({ "reg": reg })))
        }
        Cmd::Depth(_) => {
            let d = depth_of_quotient(&ideal)?;
            Ok(Output::new(format!("depth = {d}"), json!({ "depth": d })))
        }
        Cmd::Hilbert { upto, .. } => {
            let hs = hilbert::hilbert_numerator(&ideal)?;
            let mut text = hs.to_string();
            let mut js = json!({ "series": hs.to_string(), "nvars": hs.nvars(), "numerator": hs.numerator() });
            if let Some(d) = upto {
                let values: Vec<i64> = (0..=*d).map(|k| hs.hilbert_function(k)).collect();
                text.push_str(&format!("\nHF(0..={d}) = {}", list(&values)));
                js["hilbert_function"] = json!(values);
            }
            Ok(Output::new(text, js))
        }
        Cmd::Dim(_) => {
            let d = hilbert::dimension(&ideal)?;
            Ok(Output::new(format!("dim = {d}"), json!({ "dim": d })))
        }
        Cmd::Deg(_) => {
            let d = hilbert::degree(&ideal)?;
            Ok(Output::new(format!("deg = {d}"), json!({ "deg": d })))
        }
        Cmd::SameRadical { with, .. } => {
            let same = ideal.same_radical(&other(with)?)?;
            Ok(Output::new(format!("same radical = {same}"), json!({ "same_radical": same })))
        }
        Cmd::Ext { q, w, .. } => {
            let e = ext_cyclic(&ideal, *q, *w)?;
            Ok(module_output(&format!("Ext^{q}(R/{name}, R({}))", -w), &e))
        }
        Cmd::Socle { ext, w, .. } => {
            let (label, module) = match ext {
                Some(q) => (format!("Ext^{q}(R/{name}, R({}))", -w), ext_cyclic(&ideal, *q, *w)?),
                None => (format!("R/{name}"), PresentedModule::cyclic(&ideal)?),
            };
            let degrees = module.socle_degrees()?;
            Ok(Output::new(
                format!("socle degrees of {label} = {}", list(&degrees)),
                json!({ "module": label, "socle_degrees": degrees }),
            ))
        }
        Cmd::LcDims { index, from, to, .. } => {
            if from > to {
                bail!("--from {from} exceeds --to {to}");
            }
            let dims = PresentedModule::cyclic(&ideal)?.local_cohomology_dims(*index, *from..=*to)?;
            let text: Vec<String> = (*from..=*to).zip(&dims).map(|(a, d)| format!("{a}: {d}")).collect();
            Ok(Output::new(
                text.join("\n"),
                json!({ "i": index, "from": from, "to": to, "dims": dims }),
            ))
        }
        _ => unreachable!("dispatched in execute"),
    }
}

fn order_of(cli: &Cli) -> MonomialOrder {
    match cli.order {
        OrderArg::Grevlex => MonomialOrder::GrevLex,
        OrderArg::Lex => MonomialOrder::Lex,
    }
}

fn in_ring_all<F: Field>(gens: &[Polynomial<F>], ring: &Ring<F>) -> gradedalg::Result<Vec<Polynomial<F>>> {
    gens.iter().map(|g| g.in_ring(ring)).collect()
}

/// Minimal generators when homogeneous, otherwise the reduced Gröbner basis.
fn tidy<F: Field>(i: &Ideal<F>) -> gradedalg::Result<Vec<Polynomial<F>>> {
    if i.is_homogeneous() {
        let c = i.canonical();
        c.minimal_generators()
    } else {
        Ok(i.canonical().gens().to_vec())
    }
}

fn strings<F: Field>(ps: &[Polynomial<F>]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

fn join(xs: &[i64]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn list<T: ToString>(xs: &[T]) -> String {
    format!("[{}]", xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))
}

fn module_output<F: Field>(label: &str, m: &PresentedModule<F>) -> Output {
    let hs = m.hilbert_series();
    let text = format!(
        "{label}\ngenerators in degrees {}\nrelations: {}\nHilbert series: {hs}",
        list(m.generator_degrees()),
        m.relations().ncols()
    );
    let json = json!({
        "module": label,
        "generator_degrees": m.generator_degrees(),
        "relations": m.relations().ncols(),
        "hilbert_series": hs.to_string(),
        "numerator": hs.numerator(),
    });
    Output::new(text, json)
}

fn verify<F: Field>(c: &GradedComplex<F>) -> anyhow::Result<Output> {
    let report = buchsbaum_eisenbud(c)?;
    let betti = BettiTable::from_modules(&c.modules());
    let mut text = report.to_text();
    text.push_str("twists:\n");
    text.push_str(&betti.to_text());
    Ok(Output { text, json: serde_json::to_value(&report)?, ok: report.verdict })
}

fn family_complex<F: Field>(field: F, which: ComplexFamily, m: u64, n: u64) -> anyhow::Result<GradedComplex<F>> {
    Ok(match which {
        ComplexFamily::ThreeComponentJ => families::three_component_ci(field)?.j_complex,
        ComplexFamily::ThreeComponentK => families::three_component_ci(field)?.k_complex,
        ComplexFamily::Curve168 => families::curve_168(field)?.complex,
        ComplexFamily::Cm => families::cm_family(field, m, n)?.complex,
    })
}

fn family<F: Field>(field: F, fs: FieldChoice, kind: FamilyKind, m: u64, n: u64) -> anyhow::Result<Output> {
    let named: Vec<(&str, Vec<Polynomial<F>>)>;
    let ring: Ring<F>;
    let mut params = json!({});
    match kind {
        FamilyKind::ThreeComponent => {
            let t = families::three_component_ci(field)?;
            ring = t.ring.clone();
            named = vec![("I", t.i.gens().to_vec()), ("J", t.j.gens().to_vec()), ("K", t.k.gens().to_vec())];
        }
        FamilyKind::Curve168 => {
            let c = families::curve_168(field)?;
            ring = c.ring.clone();
            named = vec![("B", c.b.gens().to_vec()), ("zJ", c.z_j.gens().to_vec())];
        }
        FamilyKind::Cm => {
            let c = families::cm_family(field, m, n)?;
            ring = c.ring.clone();
            params = json!({ "m": m, "n": n, "expected": c.expected });
            named = vec![
                ("I", c.ideal.gens().to_vec()),
                ("radical", c.radical.gens().to_vec()),
                ("curve", c.curve.gens().to_vec()),
                ("line_xz", c.line_xz.gens().to_vec()),
                ("line_zt", c.line_zt.gens().to_vec()),
            ];
        }
        FamilyKind::P4 => {
            let p = families::p4_family(field, m, n)?;
            ring = p.ring.clone();
            params = json!({ "m": m, "n": n, "expected": p.expected });
            named = vec![
                ("CI", p.ci.gens().to_vec()),
                ("colon_by", p.colon_by.gens().to_vec()),
                ("J", p.j.gens().to_vec()),
                ("curve", p.curve.gens().to_vec()),
                ("L", p.l.gens().to_vec()),
            ];
        }
        FamilyKind::SurfaceSocle | FamilyKind::SurfaceDepth => {
            let which = if matches!(kind, FamilyKind::SurfaceSocle) { Surface::SocleWitness } else { Surface::DepthJump };
            let q = families::surface_ideal(field, which)?;
            ring = q.ring().clone();
            params = json!({ "parametrization": which.parametrization() });
            named = vec![("q", q.gens().to_vec())];
        }
    }
    let refs: Vec<(&str, &[Polynomial<F>])> = named.iter().map(|(n, g)| (*n, g.as_slice())).collect();
    let text = render_ideals(fs, &ring, &refs);
    let ideals: serde_json::Map<String, Value> = named.iter().map(|(n, g)| (n.to_string(), json!(strings(g)))).collect();
    let json = json!({ "field": fs.to_string(), "vars": ring.vars(), "ideals": ideals, "parameters": params });
    Ok(Output::new(text, json))
}

fn curve<F: Field>(field: F, fs: FieldChoice, degrees: &[u32], vars: Option<&str>, result: &str) -> anyhow::Result<Output> {
    let names: Vec<String> = match vars {
        Some(v) => v.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()).map(String::from).collect(),
        None => match degrees.len() {
            3 => ["x", "y", "z", "t"].map(String::from).to_vec(),
            4 => ["x", "y", "z", "u", "v"].map(String::from).to_vec(),
            k => (0..=k).map(|i| format!("x{i}")).collect(),
        },
    };
    let ring = Ring::new(field, &names)?;
    let ideal = monomial_curve_ideal(&ring, degrees)?;
    let gens = ideal.minimal_generators()?;
    let text = render_ideals(fs, &ring, &[(result, &gens)]);
    let json = json!({ "field": fs.to_string(), "vars": ring.vars(), "name": result, "generators": strings(&gens) });
    Ok(Output::new(text, json))
}

fn appendix_count(m: u64, n: u64, alpha: u64, mode: CountArg) -> anyhow::Result<Output> {
    let params = SumsetParams::new(m, n)?;
    let oracle = || families::sumset_count(&params, alpha, CountMode::Oracle);
    let closed = || families::sumset_count(&params, alpha, CountMode::Closed);
    let base = json!({ "m": m, "n": n, "alpha": alpha });
    Ok(match mode {
        CountArg::Oracle => {
            let v = oracle()?;
            Output::new(v.to_string(), json!({ "oracle": v, "query": base }))
        }
        CountArg::Closed => {
            let v = closed()?;
            Output::new(v.to_string(), json!({ "closed": v, "query": base }))
        }
        CountArg::Both => {
            let (a, b) = (oracle()?, closed()?);
            Output { text: format!("{a} {b}"), json: json!({ "oracle": a, "closed": b, "query": base }), ok: a == b }
        }
    })
}
