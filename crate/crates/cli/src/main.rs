//! `monoscroll`: command line front end to the monomial-curve toolkit.
//!
//! Exit codes: 0 success, 1 usage error, 2 precondition violated, 3 fixture mismatch.
//! Every failure prints exactly one line `error[CODE]: message` on stderr.

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use monoscroll::catalog::{self, canonical_json, CurveReport, Filter};
use monoscroll::scrollcalc::{self, ChowClass, ChowProduct, DivisorClass, Scroll};
use monoscroll::scrollfit::{self, scroll_matrix};
use monoscroll::{Error, MonomialCurve};

#[derive(Parser, Debug)]
#[command(name = "monoscroll", version, about = "Canonical models, gonality and scrolls of monomial curves")]
struct Cli {
    /// Output format; `csv` is only accepted by `enumerate`.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full report for the curve (1 : t^a1 : … : t^an).
    Analyze {
        #[arg(value_parser = parse_list)]
        exponents: List,
    },
    /// Canonical exponent set A.
    Canonical {
        #[arg(value_parser = parse_list)]
        exponents: List,
    },
    /// Gonality with a witnessing difference and partition.
    Gonality {
        #[arg(value_parser = parse_list)]
        exponents: List,
    },
    /// Partition of an exponent set into maximal progressions of difference r.
    Scrollfit {
        /// Exponent set; 0 may be included.
        #[arg(value_parser = parse_list)]
        set: List,
        #[arg(long)]
        r: u32,
    },
    /// h⁰(O_S(aH + bF)) in closed form and by enumeration.
    #[command(name = "scroll-h0", allow_negative_numbers = true)]
    ScrollH0 {
        #[arg(long = "type", value_parser = parse_list)]
        scroll_type: List,
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: i64,
    },
    /// Invariants of a complete intersection of d−1 divisors on a scroll.
    #[command(name = "scroll-genus-ci", allow_negative_numbers = true)]
    ScrollGenusCi {
        #[arg(long = "type", value_parser = parse_list)]
        scroll_type: List,
        /// `a1,b1;a2,b2;…`
        #[arg(long, value_parser = parse_classes, allow_hyphen_values = true)]
        classes: Classes,
    },
    /// Intersection product of divisor classes.
    #[command(name = "scroll-chow", allow_negative_numbers = true)]
    ScrollChow {
        #[arg(long = "type", value_parser = parse_list)]
        scroll_type: List,
        #[arg(long, value_parser = parse_classes, allow_hyphen_values = true)]
        classes: Classes,
    },
    /// One-point curves of every semigroup of the given genus.
    Enumerate {
        /// `G` or `LO..HI`.
        #[arg(long, value_parser = parse_genus_range)]
        genus: (u32, u32),
        /// Repeatable: gonality=N, non-gorenstein, kunz, nearly-gorenstein, nearly-normal, genus=LO..HI.
        #[arg(long)]
        filter: Vec<Filter>,
        /// Worker threads for the enumeration; results do not depend on it.
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Recompute the embedded table fixtures.
    Tables,
}

/// Comma separated nonnegative integers, kept as one argument.
#[derive(Clone, Debug)]
struct List(Vec<u32>);

#[derive(Clone, Debug)]
struct Classes(Vec<DivisorClass>);

fn parse_list(s: &str) -> Result<List, String> {
    s.split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| format!("malformed list {s:?}")))
        .collect::<Result<_, _>>()
        .map(List)
}

fn parse_classes(s: &str) -> Result<Classes, String> {
    let bad = || format!("malformed classes {s:?}, expected a1,b1;a2,b2;…");
    s.split(';')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            let (a, b) = t.split_once(',').ok_or_else(bad)?;
            Ok(DivisorClass::new(a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
        })
        .collect::<Result<_, _>>()
        .map(Classes)
}

fn parse_genus_range(s: &str) -> Result<(u32, u32), String> {
    let bad = || format!("malformed genus {s:?}, expected G or LO..HI");
    let (lo, hi) = s.split_once("..").unwrap_or((s, s));
    let lo: u32 = lo.parse().map_err(|_| bad())?;
    let hi: u32 = hi.parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

enum Failure {
    Usage(String),
    Precondition(Error),
    Mismatch(usize),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Precondition(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let text = e.to_string();
            let first = text.lines().next().unwrap_or("").trim_start_matches("error: ");
            eprintln!("error[E_USAGE]: {first}");
            return ExitCode::from(1);
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out).and_then(|()| out.flush().map_err(Failure::Io)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error[E_USAGE]: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Precondition(e)) => {
            eprintln!("error[{}]: {e}", e.code());
            ExitCode::from(2)
        }
        Err(Failure::Mismatch(n)) => {
            eprintln!("error[E_FIXTURE_MISMATCH]: {n} fixture(s) do not match");
            ExitCode::from(3)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error[E_IO]: {e}");
            ExitCode::from(2)
        }
    }
}

fn emit<T: Serialize>(out: &mut impl Write, x: &T) -> io::Result<()> {
    writeln!(out, "{}", canonical_json(x))
}

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

fn scroll_name(m: &[u32]) -> String {
    format!("S_{{{}}}", join(m, ","))
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), Failure> {
    let format = cli.format;
    if format == Format::Csv && !matches!(cli.command, Command::Enumerate { .. }) {
        return Err(Failure::Usage("--format csv is only supported by enumerate".into()));
    }
    match cli.command {
        Command::Analyze { exponents: List(exponents) } => {
            let report = CurveReport::new(&MonomialCurve::new(&exponents)?);
            if format == Format::Json {
                writeln!(out, "{}", report.to_json_line())?;
            } else {
                write_report_text(out, &report)?;
            }
        }
        Command::Canonical { exponents: List(exponents) } => {
            let a = MonomialCurve::new(&exponents)?.canonical_model()?;
            if format == Format::Json {
                emit(out, &json!({ "exponents": exponents, "canonical_exponents": a }))?;
            } else {
                writeln!(out, "{}", join(a.as_slice(), ","))?;
            }
        }
        Command::Gonality { exponents: List(exponents) } => {
            let gon = scrollfit::curve_gonality(&MonomialCurve::new(&exponents)?);
            let best = gon.best.as_ref();
            if format == Format::Json {
                emit(
                    out,
                    &json!({
                        "gonality": gon.gonality,
                        "r": best.map(|b| b.fit.r),
                        "minimizers": best.map(|b| b.minimizers.clone()).unwrap_or_default(),
                        "parts": best.map(|b| b.fit.parts.clone()).unwrap_or_default(),
                    }),
                )?;
            } else {
                writeln!(out, "{}", gon.gonality)?;
                if let Some(b) = best {
                    let parts: Vec<String> = b.fit.parts.iter().map(|p| format!("{{{}}}", join(p, ","))).collect();
                    writeln!(out, "r = {}: {}", b.fit.r, parts.join(" "))?;
                }
            }
        }
        Command::Scrollfit { set: List(set), r } => {
            let fit = scrollfit::fit_with_difference(&set, r)?;
            let matrix = scroll_matrix(&set, r)?;
            if format == Format::Json {
                emit(out, &json!({ "fit": fit, "matrix": matrix.blocks }))?;
            } else {
                writeln!(out, "r = {r}, {} ({})", scroll_name(&fit.scroll_type), smooth_word(fit.smooth))?;
                for p in &fit.parts {
                    writeln!(out, "  {{{}}}", join(p, ","))?;
                }
                write!(out, "{matrix}")?;
            }
        }
        Command::ScrollH0 { scroll_type: List(scroll_type), a, b } => {
            let s = Scroll::new(&scroll_type)?;
            if a < 0 {
                return Err(Failure::Usage(format!("--a must be nonnegative, got {a}")));
            }
            let closed = scrollcalc::h0_closed(&s, a, b);
            let enumerated = scrollcalc::h0_enum(&s, a, b);
            if format == Format::Json {
                emit(
                    out,
                    &json!({ "closed": closed.value, "in_regime": closed.in_regime, "enumerated": enumerated }),
                )?;
            } else {
                writeln!(out, "{enumerated}")?;
                let regime = if closed.in_regime { "in regime" } else { "outside regime" };
                writeln!(out, "closed {} ({regime}), enumerated {enumerated}", closed.value)?;
            }
        }
        Command::ScrollGenusCi { scroll_type: List(scroll_type), classes: Classes(classes) } => {
            let s = Scroll::new(&scroll_type)?;
            let inv = scrollcalc::ci_invariants(&s, &classes)?;
            if format == Format::Json {
                emit(out, &inv)?;
            } else {
                writeln!(out, "ell {}", inv.ell)?;
                writeln!(out, "degree {}", inv.degree)?;
                writeln!(out, "genus {} (closed), {} (intersection product)", inv.genus_closed, inv.genus_koszul)?;
                writeln!(out, "effective {}", inv.effective)?;
            }
        }
        Command::ScrollChow { scroll_type: List(scroll_type), classes: Classes(classes) } => {
            let s = Scroll::new(&scroll_type)?;
            let factors: Vec<ChowClass> = classes.into_iter().map(ChowClass::from).collect();
            let product = scrollcalc::chow_product(&s, &factors);
            if format == Format::Json {
                emit(out, &product)?;
            } else {
                match product {
                    ChowProduct::Degree(n) => writeln!(out, "{n}")?,
                    ChowProduct::Zero => writeln!(out, "0 (codimension exceeds {})", s.dim())?,
                    ChowProduct::Class(c) => writeln!(out, "{} H^{} + {} H^{} F", c.h, c.codim, c.hf, c.codim.saturating_sub(1))?,
                }
            }
        }
        Command::Enumerate { genus: (lo, hi), filter, threads } => {
            let reports = match threads {
                Some(n) => rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build()
                    .map_err(|e| Failure::Usage(e.to_string()))?
                    .install(|| catalog::build_catalog(lo, hi, &filter))?,
                None => catalog::build_catalog(lo, hi, &filter)?,
            };
            match format {
                Format::Json => catalog::write_json_lines(&mut *out, &reports)?,
                Format::Csv => catalog::write_csv(&mut *out, &reports).map_err(|e| Failure::Io(io::Error::other(e)))?,
                Format::Text => {
                    for r in &reports {
                        writeln!(
                            out,
                            "g={:<2} gon={} label={:<4} ({})  A={{{}}}",
                            r.genus,
                            r.gonality,
                            format!("{:?}", r.label()),
                            join(&r.exponents, ","),
                            r.canonical_exponents.as_deref().map(|a| join(a, ",")).unwrap_or_default(),
                        )?;
                    }
                }
            }
        }
        Command::Tables => {
            let verdicts = catalog::reproduce_paper_fixtures();
            for (f, v) in catalog::FIXTURES.iter().zip(&verdicts) {
                if format == Format::Json {
                    emit(out, v)?;
                } else {
                    writeln!(
                        out,
                        "{} ({})  ell={} {}",
                        if v.all_match() { "MATCH   " } else { "MISMATCH" },
                        join(f.exponents, ","),
                        f.ell,
                        scroll_name(f.scroll_type),
                    )?;
                }
            }
            let bad = verdicts.iter().filter(|v| !v.all_match()).count();
            if bad > 0 {
                out.flush()?;
                return Err(Failure::Mismatch(bad));
            }
        }
    }
    Ok(())
}

fn smooth_word(smooth: bool) -> &'static str {
    if smooth {
        "smooth"
    } else {
        "cone"
    }
}

fn write_report_text(out: &mut impl Write, r: &CurveReport) -> io::Result<()> {
    let c = &r.classification;
    writeln!(out, "curve (1:{})", join(&r.exponents, ","))?;
    writeln!(out, "genus {} (delta_P {}, delta_Q {})", r.genus, r.s_p.delta, r.s_q.delta)?;
    writeln!(out, "S_P <{}>, S_Q <{}>", join(&r.s_p.generators, ","), join(&r.s_q.generators, ","))?;
    writeln!(
        out,
        "gorenstein {} (P {}, Q {}), eta {}, mu {}, kunz {}, nearly gorenstein {}, nearly normal {}",
        c.gorenstein, c.gorenstein_p, c.gorenstein_q, c.eta, c.mu, c.kunz, c.nearly_gorenstein, c.nearly_normal
    )?;
    if let Some(a) = &r.canonical_exponents {
        writeln!(out, "canonical exponents {{{}}}, g' {}", join(a, ","), r.g_prime)?;
    }
    writeln!(out, "gonality {}", r.gonality)?;
    if let Some(fit) = &r.best_fit {
        writeln!(
            out,
            "scroll {} with r = {} ({}), minimizing r: {}",
            scroll_name(&fit.scroll_type),
            fit.r,
            smooth_word(fit.smooth),
            join(&r.minimizing_r, ",")
        )?;
    }
    Ok(())
}
