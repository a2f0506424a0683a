//! Command-line front end.
//!
//! Exit status is 0 on success, 1 on bad input and 2 when a formula and the
//! HOMFLY oracle disagree.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::diagram::{OrientedDiagram, PdCode};
use crate::homfly::{
    morton_bounds_check, mwf_lower_bound, HomflyConfig, HomflyEngine, HomflyError,
};
use crate::montesinos::{
    braid_index_montesinos, has_unreduced, MontesinosPresentation, OrientedMontesinos,
};
use crate::rational::{
    braid_index_rational, odd_continued_fraction, orientations, parse_pair, Choice, Form, Fraction,
    OrientedRational, RationalError,
};
use crate::reduction::{reduction_montesinos, reduction_rational};
use crate::verify::{
    cross_check_montesinos, cross_check_rational, run_family, write_report, Family, Status,
    VerificationRecord,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_DISAGREE: i32 = 2;

const DEFAULT_CAP: usize = 20;

#[derive(Debug, Parser)]
#[command(
    name = "braidex",
    version,
    about = "Braid index of alternating two-bridge and Montesinos links"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Two-bridge link b(alpha, beta), given as alpha/beta.
    Rational {
        fraction: String,
        /// A, B, knot or all.
        #[arg(long, default_value = "all")]
        orientation: String,
        /// Check against the HOMFLY polynomial.
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        json: bool,
        /// Crossing cap for the HOMFLY engine.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Montesinos link, given as b1/a1,b2/a2,...,e=n.
    Montesinos {
        #[arg(allow_hyphen_values = true)]
        presentation: String,
        /// An orientation index or all.
        #[arg(long, default_value = "all")]
        orientation: String,
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// HOMFLY polynomial of a diagram in a PD-code JSON file.
    Homfly {
        #[arg(long)]
        pd: PathBuf,
        /// Write the resolving tree as JSON lines to this file, `-` for stderr.
        #[arg(long)]
        trace: Option<PathBuf>,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Formula against oracle over a whole family.
    Verify {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        max_crossings: u32,
        #[arg(long, default_value_t = 4)]
        max_tangles: usize,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// JSON-lines report; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Add per-record runtimes, which makes reports differ between runs.
        #[arg(long)]
        timings: bool,
        /// Worker threads; overrides BRAIDEX_THREADS.
        #[arg(long)]
        threads: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Rational,
    Montesinos,
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

macro_rules! fail {
    ($io:expr, $($arg:tt)*) => {{
        let _ = writeln!($io.err, "error: {}", format!($($arg)*));
        return EXIT_INPUT;
    }};
}

/// Parses `args` and runs the command, writing to the given streams.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut io = Io { out, err };
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(io.err, "{e}")
            } else {
                write!(io.out, "{e}")
            };
            return code;
        }
    };
    match cli.command {
        Command::Rational {
            fraction,
            orientation,
            verify,
            json,
            cap,
        } => rational(&mut io, &fraction, &orientation, verify, json, cap),
        Command::Montesinos {
            presentation,
            orientation,
            verify,
            json,
            cap,
        } => montesinos(&mut io, &presentation, &orientation, verify, json, cap),
        Command::Homfly {
            pd,
            trace,
            json,
            cap,
        } => homfly(&mut io, &pd, trace.as_deref(), json, cap),
        Command::Verify {
            family,
            max_crossings,
            max_tangles,
            cap,
            out,
            timings,
            threads,
        } => {
            let family = match family {
                FamilyArg::Rational => Family::Rational,
                FamilyArg::Montesinos => Family::Montesinos,
            };
            verify(
                &mut io,
                family,
                max_crossings,
                max_tangles,
                cap,
                out,
                timings,
                threads,
            )
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let (mut out, mut err) = (io::stdout().lock(), io::stderr().lock());
    run_with(std::env::args_os(), &mut out, &mut err)
}

fn engine(io: &mut Io<'_>, cap: usize) -> HomflyEngine {
    if cap > DEFAULT_CAP {
        let _ = writeln!(
            io.err,
            "warning: crossing cap {cap} is above {DEFAULT_CAP}; evaluation may take minutes"
        );
    }
    HomflyEngine::new(HomflyConfig {
        cap,
        ..HomflyConfig::default()
    })
}

fn verify_json(r: &VerificationRecord) -> serde_json::Value {
    json!({
        "homfly_E": r.homfly_e_max,
        "homfly_e": r.homfly_e_min,
        "mwf": r.mwf_b,
        "agree": r.agree,
        "status": r.status,
        "s": r.s,
        "w": r.w,
        "r_plus": r.r_plus,
        "r_minus": r.r_minus,
        "E": r.homfly_e_max,
        "e": r.homfly_e_min,
        "base_equations_hold": r.base_equations_hold,
    })
}

fn print_json(io: &mut Io<'_>, v: &impl Serialize) {
    let _ = writeln!(
        io.out,
        "{}",
        serde_json::to_string_pretty(v).expect("output serializes")
    );
}

fn verdict(io: &mut Io<'_>, records: &[VerificationRecord]) -> i32 {
    let bad: Vec<&VerificationRecord> = records
        .iter()
        .filter(|r| r.status == Status::Disagree)
        .collect();
    for r in &bad {
        let _ = writeln!(
            io.err,
            "disagreement: {} orientation {}",
            r.presentation, r.orientation
        );
        if let Some(pd) = &r.dump {
            let _ = writeln!(io.err, "  pd: {}", pd.to_json());
        }
    }
    if bad.is_empty() {
        EXIT_OK
    } else {
        EXIT_DISAGREE
    }
}

fn parse_rational(io: &mut Io<'_>, s: &str) -> Result<Fraction, String> {
    let (alpha, beta) = parse_pair(s).map_err(|e| e.to_string())?;
    if alpha == 0 {
        return Err(format!("{s}: alpha must be positive"));
    }
    let reduced = beta % alpha;
    if reduced != beta {
        let _ = writeln!(
            io.err,
            "warning: {alpha}/{beta} reduced to {alpha}/{reduced}"
        );
    }
    Fraction::new(alpha, reduced).map_err(|e| match e {
        RationalError::NotCoprime { .. } => format!("{s}: non-coprime"),
        e => e.to_string(),
    })
}

fn rational(
    io: &mut Io<'_>,
    input: &str,
    orientation: &str,
    verify: bool,
    json: bool,
    cap: usize,
) -> i32 {
    let f = match parse_rational(io, input) {
        Ok(f) => f,
        Err(e) => fail!(io, "{e}"),
    };
    let cf = odd_continued_fraction(f);
    let all = match orientations(&cf) {
        Ok(v) => v,
        Err(e) => fail!(io, "{e}"),
    };
    let wanted: Vec<&OrientedRational> = if orientation == "all" {
        all.iter().collect()
    } else {
        match orientation.parse::<Choice>() {
            Ok(c) if all.iter().any(|o| o.choice == c) => {
                all.iter().filter(|o| o.choice == c).collect()
            }
            _ => fail!(
                io,
                "orientation `{orientation}` is not available for b({},{})",
                f.alpha,
                f.beta
            ),
        }
    };
    let records = if verify {
        match cross_check_rational(&engine(io, cap), f, false) {
            Ok(r) => Some(r),
            Err(e) => fail!(io, "{e}"),
        }
    } else {
        None
    };
    let mut rows = Vec::new();
    let mut checked = Vec::new();
    for o in &wanted {
        let b = match braid_index_rational(&o.signed, Form::Standard) {
            Ok(b) => b,
            Err(e) => fail!(io, "{e}"),
        };
        let idx = all
            .iter()
            .position(|x| x.choice == o.choice)
            .expect("listed");
        let rec = records.as_ref().map(|r| r[idx].clone());
        rows.push((o, b, reduction_rational(&o.signed), rec.clone()));
        checked.extend(rec);
    }
    if json {
        let vectors: Vec<_> = rows
            .iter()
            .map(|(o, b, red, rec)| {
                let mut v = json!({
                    "choice": o.choice,
                    "vector": o.signed,
                    "blocks": o.signed.block_values(),
                    "braid_index": b,
                    "reduction": red,
                });
                if let Some(r) = rec {
                    v["verify"] = verify_json(r);
                }
                v
            })
            .collect();
        print_json(
            io,
            &json!({
                "alpha": f.alpha,
                "beta": f.beta,
                "cf": cf,
                "components": all[0].diagram.diagram.component_count(),
                "signed_vectors": vectors,
                "braid_index": rows.iter().map(|r| r.1).min(),
            }),
        );
    } else {
        let _ = writeln!(
            io.out,
            "b({},{})  cf {}  crossings {}",
            f.alpha,
            f.beta,
            cf,
            cf.crossing_count()
        );
        for (o, b, red, rec) in &rows {
            let s = o.diagram.diagram.seifert_circle_count();
            let _ = write!(
                io.out,
                "  {:<5} {:<28} blocks {:<2} s {:<3} r {}+{}  braid index {}",
                o.choice.to_string(),
                o.signed.to_string(),
                o.signed.blocks().len(),
                s,
                red.r_plus,
                red.r_minus,
                b
            );
            write_check(io, rec.as_ref());
        }
    }
    verdict(io, &checked)
}

fn write_check(io: &mut Io<'_>, rec: Option<&VerificationRecord>) {
    match rec {
        Some(r) if r.status == Status::FormulaOnly => {
            let _ = writeln!(io.out, "  [above crossing cap, formula only]");
        }
        Some(r) => {
            let _ = writeln!(
                io.out,
                "  [E {} e {} mwf {} {}]",
                r.homfly_e_max.unwrap_or_default(),
                r.homfly_e_min.unwrap_or_default(),
                r.mwf_b.unwrap_or_default(),
                if r.agree { "agree" } else { "DISAGREE" }
            );
        }
        None => {
            let _ = writeln!(io.out);
        }
    }
}

fn montesinos(
    io: &mut Io<'_>,
    input: &str,
    orientation: &str,
    verify: bool,
    json: bool,
    cap: usize,
) -> i32 {
    let p: MontesinosPresentation = match input.parse() {
        Ok(p) => p,
        Err(e) => fail!(io, "{e}"),
    };
    if has_unreduced(input) {
        let _ = writeln!(io.err, "warning: fractions reduced to lowest terms");
    }
    let normalized = p.to_string();
    let _ = writeln!(io.err, "note: normalized presentation {normalized}");
    let result = match braid_index_montesinos(&p) {
        Ok(r) => r,
        Err(e) => fail!(io, "{e}"),
    };
    let wanted: Vec<&OrientedMontesinos> = if orientation == "all" {
        result.orientations.iter().collect()
    } else {
        match orientation.parse::<usize>() {
            Ok(i) if result.orientations.iter().any(|o| o.choice == i) => result
                .orientations
                .iter()
                .filter(|o| o.choice == i)
                .collect(),
            _ => fail!(
                io,
                "orientation `{orientation}` is not available for {normalized}"
            ),
        }
    };
    let records = if verify {
        match cross_check_montesinos(&engine(io, cap), &p, false) {
            Ok(r) => Some(r),
            Err(e) => fail!(io, "{e}"),
        }
    } else {
        None
    };
    // records come sorted by orientation index, one per orientation
    let rec_of = |choice: usize| records.as_ref().map(|r| r[choice].clone());
    let checked: Vec<VerificationRecord> = records.clone().unwrap_or_default();
    let best = wanted
        .iter()
        .min_by_key(|o| o.braid_index)
        .expect("at least one orientation");
    if json {
        let tangles_json = |o: &OrientedMontesinos| -> Vec<serde_json::Value> {
            o.tangles
                .iter()
                .map(|t| {
                    json!({
                        "fraction": t.fraction,
                        "cf": t.cf,
                        "signed": t.signed,
                        "parity": t.parity,
                        "delta": t.delta(),
                    })
                })
                .collect()
        };
        let per: Vec<_> = wanted
            .iter()
            .map(|o| {
                let mut v = json!({
                    "choice": o.choice,
                    "class": o.class.class,
                    "eta": o.class.eta,
                    "omega2": o.class.omega2,
                    "omega3": o.class.omega3,
                    "tangles": tangles_json(o),
                    "delta0": o.delta0,
                    "braid_index": o.braid_index,
                    "reduction": reduction_montesinos(o, p.e),
                });
                if let Some(r) = rec_of(o.choice) {
                    v["verify"] = verify_json(&r);
                }
                v
            })
            .collect();
        let inadmissible: Vec<_> = result
            .inadmissible
            .iter()
            .map(|o| json!({"choice": o.choice, "reason": o.reason}))
            .collect();
        let mut top = json!({
            "presentation": normalized,
            "tangles_normalized": p.tangles,
            "e": p.e,
            "mirror": p.mirror,
            "class": best.class.class,
            "eta": best.class.eta,
            "tangles": tangles_json(best),
            "delta0": best.delta0,
            "braid_index": best.braid_index,
            "components": best.diagram.diagram.component_count(),
            "orientations": per,
            "inadmissible": inadmissible,
        });
        if let Some(r) = rec_of(best.choice) {
            top["verify"] = verify_json(&r);
        }
        print_json(io, &top);
    } else {
        let _ = writeln!(io.out, "{normalized}  crossings {}", p.crossing_count());
        for o in &wanted {
            let vectors: Vec<String> = o
                .tangles
                .iter()
                .map(|t| format!("{}p{}", t.signed, t.parity))
                .collect();
            let red = reduction_montesinos(o, p.e);
            let _ = write!(
                io.out,
                "  #{} class {} eta {}  {}  r {}+{}  braid index {}",
                o.choice,
                o.class.class,
                o.class.eta,
                vectors.join(" "),
                red.r_plus,
                red.r_minus,
                o.braid_index
            );
            write_check(io, rec_of(o.choice).as_ref());
        }
        for o in &result.inadmissible {
            let _ = writeln!(io.out, "  #{} not covered: {}", o.choice, o.reason);
        }
        if wanted.len() > 1 {
            let _ = writeln!(
                io.out,
                "  unoriented braid index (minimum) {}",
                best.braid_index
            );
        }
    }
    verdict(io, &checked)
}

fn homfly(
    io: &mut Io<'_>,
    path: &std::path::Path,
    trace: Option<&std::path::Path>,
    json: bool,
    cap: usize,
) -> i32 {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => fail!(io, "{}: {e}", path.display()),
    };
    let d = match PdCode::from_json(&text).and_then(|pd| OrientedDiagram::from_pd(&pd)) {
        Ok(d) => d,
        Err(e) => fail!(io, "{}: {e}", path.display()),
    };
    let eng = engine(io, cap);
    let h = match trace {
        Some(t) if t.as_os_str() == "-" => eng.homfly_traced(&d, io.err),
        Some(t) => match fs::File::create(t) {
            Ok(f) => {
                let mut w = io::BufWriter::new(f);
                let h = eng.homfly_traced(&d, &mut w);
                h.and_then(|h| w.flush().map(|_| h).map_err(HomflyError::from))
            }
            Err(e) => fail!(io, "{}: {e}", t.display()),
        },
        None => eng.homfly(&d),
    };
    let h = match h {
        Ok(h) => h,
        Err(e) => fail!(io, "{e}"),
    };
    let ex = match h.a_extremes() {
        Ok(x) => x,
        Err(e) => fail!(io, "{e}"),
    };
    let mwf = mwf_lower_bound(&h);
    let morton = morton_bounds_check(&d, &h);
    if json {
        print_json(
            io,
            &json!({
                "polynomial": h,
                "E": ex.e_max,
                "e": ex.e_min,
                "mwf": mwf.as_ref().ok(),
                "s": d.seifert_circle_count(),
                "w": d.writhe(),
                "crossings": d.crossing_count(),
                "components": d.component_count(),
                "morton": morton.as_ref().ok(),
            }),
        );
    } else {
        let _ = writeln!(io.out, "H = {h}");
        let _ = writeln!(io.out, "E = {}  e = {}", ex.e_max, ex.e_min);
        if let Ok(m) = &mwf {
            let _ = writeln!(io.out, "braid index >= {m}");
        }
        let _ = writeln!(
            io.out,
            "s = {}  w = {}",
            d.seifert_circle_count(),
            d.writhe()
        );
    }
    match (mwf, morton) {
        (Ok(_), Ok(_)) => EXIT_OK,
        (Err(e), _) | (_, Err(e)) => {
            let _ = writeln!(io.err, "error: {e}");
            EXIT_DISAGREE
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn verify(
    io: &mut Io<'_>,
    family: Family,
    max_crossings: u32,
    max_tangles: usize,
    cap: usize,
    out: Option<PathBuf>,
    timings: bool,
    threads: Option<usize>,
) -> i32 {
    if max_crossings < 2 {
        fail!(io, "--max-crossings must be at least 2");
    }
    if max_tangles < 2 {
        fail!(io, "--max-tangles must be at least 2");
    }
    let threads = threads.or_else(|| {
        std::env::var("BRAIDEX_THREADS")
            .ok()
            .and_then(|v| v.parse().ok())
    });
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(threads.unwrap_or(0))
        .build()
    {
        Ok(p) => p,
        Err(e) => fail!(io, "{e}"),
    };
    let eng = engine(io, cap);
    let records =
        match pool.install(|| run_family(&eng, family, max_crossings, max_tangles, timings)) {
            Ok(r) => r,
            Err(e) => fail!(io, "{e}"),
        };
    let summary = match &out {
        Some(path) => {
            let written = fs::File::create(path).and_then(|f| {
                let mut w = io::BufWriter::new(f);
                let s = write_report(&records, &mut w)?;
                w.flush()?;
                Ok(s)
            });
            match written {
                Ok(s) => s,
                Err(e) => fail!(io, "{}: {e}", path.display()),
            }
        }
        None => match write_report(&records, io.out) {
            Ok(s) => s,
            Err(e) => fail!(io, "{e}"),
        },
    };
    let _ = writeln!(
        io.err,
        "{} records: {} verified, {} formula-only, {} not covered, {} disagreements",
        summary.records,
        summary.verified,
        summary.formula_only,
        summary.inadmissible,
        summary.disagree
    );
    verdict(io, &records)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run_with(
            std::iter::once("braidex").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn rational_json() {
        let (code, out, _) = run(&["rational", "17426/4117", "--json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        let b: Vec<(String, u64)> = v["signed_vectors"]
            .as_array()
            .unwrap()
            .iter()
            .map(|x| {
                (
                    x["choice"].as_str().unwrap().to_string(),
                    x["braid_index"].as_u64().unwrap(),
                )
            })
            .collect();
        assert_eq!(b, vec![("A".to_string(), 10), ("B".to_string(), 9)]);
    }

    #[test]
    fn input_errors() {
        let (code, _, err) = run(&["rational", "4/2"]);
        assert_eq!(code, 1);
        assert!(err.contains("non-coprime"));
        assert_eq!(run(&["rational", "banana"]).0, 1);
        assert_eq!(run(&["rational", "3/1", "--orientation", "A"]).0, 1);
        assert_eq!(run(&["montesinos", "1/2"]).0, 1);
        assert_eq!(run(&["frobnicate"]).0, 1);
        assert_eq!(run(&["rational", "3/1", "--bogus"]).0, 1);
        assert_eq!(run(&["homfly", "--pd", "/nonexistent.json"]).0, 1);
        assert_eq!(run(&["--help"]).0, 0);
    }

    #[test]
    fn rational_beta_reduced() {
        let (code, out, err) = run(&["rational", "3/4"]);
        assert_eq!(code, 0);
        assert!(err.contains("reduced to 3/1"));
        assert!(out.contains("braid index 2"));
    }

    #[test]
    fn montesinos_verify() {
        let (code, out, _) = run(&["montesinos", "7/19,1/3,1/2,e=0", "--verify", "--json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["braid_index"], 5);
        assert_eq!(v["class"], "B");
        assert_eq!(v["verify"]["agree"], true);
        let (code, out, _) = run(&["montesinos", "-7/19,-1/3,-1/2", "--json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(
            (v["braid_index"].as_u64(), v["mirror"].as_bool()),
            (Some(5), Some(true))
        );
    }

    #[test]
    fn deterministic_output() {
        let a = run(&["montesinos", "12/19,2/3,2", "--verify", "--json"]);
        let b = run(&["montesinos", "12/19,2/3,2", "--verify", "--json"]);
        assert_eq!(a, b);
    }
}
