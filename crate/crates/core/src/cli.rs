//! The `loopkit` command line.
//!
//! Exit codes: 0 when everything requested holds, 1 when a property is
//! false or a statement is violated, 2 for usage, parse and I/O errors.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand};

use crate::autotopy::{self, Triple};
use crate::enumerate::{EnumerationJob, Filter};
use crate::error::{Error, Result};
use crate::isotopy::{self, QuasigroupTable};
use crate::perm::Perm;
use crate::props::Property;
use crate::registry::{self, Verdict};
use crate::table::LoopTable;
use crate::text;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "loopkit", version, about = "Identities, autotopisms, isotopes and exhaustive checks for finite loops")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate identities on a Cayley table.
    Check {
        file: PathBuf,
        /// Comma-separated property names; defaults to the standard report.
        #[arg(long, value_delimiter = ',')]
        props: Vec<String>,
        #[arg(long)]
        machine: bool,
    },
    /// Generate every loop of order N with identity 0.
    Enumerate {
        n: usize,
        /// Comma-separated property names that every table must satisfy.
        #[arg(long, value_delimiter = ',')]
        filter: Vec<String>,
        /// Print only the number of tables.
        #[arg(long, conflicts_with = "out")]
        count: bool,
        /// Write one file per table into this directory.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Allow orders above the default enumeration cap.
        #[arg(long)]
        force_order: bool,
    },
    /// Check a registered statement (or `all`) over every loop up to an order.
    Verify {
        id: String,
        #[arg(long, default_value_t = 5)]
        max_order: usize,
        #[arg(long)]
        machine: bool,
    },
    /// List the autotopism group, one triple `U V W` per line, sorted.
    Autotopisms { file: PathBuf },
    /// Build an isotope from a principal pair or an explicit triple.
    Isotope(IsotopeArgs),
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("mode").required(true).args(["a", "u"])))]
pub struct IsotopeArgs {
    file: PathBuf,
    /// Principal isotope x∘y = (x R_a⁻¹)·(y L_b⁻¹).
    #[arg(long, requires = "b", conflicts_with_all = ["u", "v", "w"])]
    a: Option<usize>,
    #[arg(long, requires = "a")]
    b: Option<usize>,
    /// Image lists such as `2,3,0,1` for the triple (U, V, W).
    #[arg(long, requires_all = ["v", "w"])]
    u: Option<String>,
    #[arg(long, requires_all = ["u", "w"])]
    v: Option<String>,
    #[arg(long, requires_all = ["u", "v"])]
    w: Option<String>,
    /// Keep the raw isotope instead of relabelling its identity to 0.
    #[arg(long)]
    no_normalize: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn execute(command: &Command, out: &mut dyn Write) -> Result<i32> {
    let (code, text) = match command {
        Command::Check { file, props, machine } => cmd_check(file, props, *machine)?,
        Command::Enumerate { n, filter, count, out: dir, force_order } => {
            cmd_enumerate(*n, filter, *count, dir.as_deref(), *force_order)?
        }
        Command::Verify { id, max_order, machine } => cmd_verify(id, *max_order, *machine)?,
        Command::Autotopisms { file } => cmd_autotopisms(file)?,
        Command::Isotope(args) => cmd_isotope(args)?,
    };
    out.write_all(text.as_bytes()).map_err(|e| Error::io("<stdout>", e))?;
    Ok(code)
}

fn load(path: &Path) -> Result<LoopTable> {
    let src = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    text::parse(&src).map_err(|e| match e {
        Error::Parse { line, message } => Error::Parse { line, message: format!("{}: {message}", path.display()) },
        other => other,
    })
}

fn parse_properties(names: &[String]) -> Result<Vec<Property>> {
    names.iter().map(|n| n.trim().parse()).collect()
}

fn join(t: &[usize]) -> String {
    t.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

pub fn cmd_check(file: &Path, props: &[String], machine: bool) -> Result<(i32, String)> {
    let l = load(file)?;
    let props = if props.is_empty() { Property::DEFAULT_REPORT.to_vec() } else { parse_properties(props)? };
    let mut s = String::new();
    if !machine {
        let name = l.label().map(str::to_string).unwrap_or_else(|| file.display().to_string());
        writeln!(s, "{name} (order {})", l.order()).unwrap();
    }
    let mut all = true;
    for p in props {
        let cex = p.counterexample(&l);
        all &= cex.is_none();
        match (&cex, machine) {
            (None, true) => writeln!(s, "property={p} holds=true"),
            (Some(t), true) => writeln!(s, "property={p} holds=false witness={}", join(t)),
            (None, false) => writeln!(s, "  {:<16} holds", p.name()),
            (Some(t), false) => writeln!(s, "  {:<16} fails at {:?}", p.name(), t),
        }
        .unwrap();
    }
    Ok((if all { EXIT_OK } else { EXIT_FALSE }, s))
}

pub fn cmd_enumerate(n: usize, filters: &[String], count_only: bool, dir: Option<&Path>, force: bool) -> Result<(i32, String)> {
    let props = parse_properties(filters)?;
    let preds: Vec<_> = props.iter().map(|&p| move |t: &LoopTable| p.holds(t)).collect();
    let mut job = EnumerationJob::new(n);
    for f in &preds {
        job = job.filter(f as Filter);
    }
    if force {
        job = job.allow_large_orders();
    }
    if count_only {
        return Ok((EXIT_OK, format!("{}\n", job.count()?)));
    }
    let tables = job.collect_par()?;
    let mut s = String::new();
    match dir {
        Some(dir) => {
            std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
            let width = tables.len().to_string().len().max(5);
            for (i, t) in tables.iter().enumerate() {
                let path = dir.join(format!("{i:0width$}.txt"));
                let body = text::emit_grid(Some(&format!("order {n} loop {i}")), &t.rows());
                std::fs::write(&path, body).map_err(|e| Error::io(&path, e))?;
            }
            writeln!(s, "{}", tables.len()).unwrap();
        }
        None => {
            for (i, t) in tables.iter().enumerate() {
                s.push_str(&text::emit_grid(Some(&format!("order {n} loop {i}")), &t.rows()));
                s.push('\n');
            }
            writeln!(s, "# {} loops", tables.len()).unwrap();
        }
    }
    Ok((EXIT_OK, s))
}

pub fn cmd_verify(id: &str, max_order: usize, machine: bool) -> Result<(i32, String)> {
    let reports = if id == "all" { registry::verify_all(max_order)? } else { vec![registry::verify(id, max_order)?] };
    let s = if machine { registry::render_machine(&reports) } else { registry::render_human(&reports) };
    let violated = reports.iter().any(|r| r.verdict == Verdict::Violated);
    Ok((if violated { EXIT_FALSE } else { EXIT_OK }, s))
}

pub fn cmd_autotopisms(file: &Path) -> Result<(i32, String)> {
    let l = load(file)?;
    let mut s = String::new();
    for t in autotopy::autotopism_group(&l)? {
        writeln!(s, "{t}").unwrap();
    }
    Ok((EXIT_OK, s))
}

pub fn cmd_isotope(args: &IsotopeArgs) -> Result<(i32, String)> {
    let l = load(&args.file)?;
    let (q, origin) = match (args.a, args.b, &args.u, &args.v, &args.w) {
        (Some(a), Some(b), ..) => (isotopy::principal_isotope(&l, a, b)?, format!("principal isotope a={a} b={b}")),
        (_, _, Some(u), Some(v), Some(w)) => {
            let t = Triple::new(u.parse::<Perm>()?, v.parse()?, w.parse()?)?;
            (isotopy::isotope(&l, &t)?, format!("isotope by {t}"))
        }
        _ => unreachable!("clap enforces one isotope mode"),
    };
    let body = render_isotope(&q, &origin, args.no_normalize);
    match &args.out {
        Some(path) => {
            std::fs::write(path, body).map_err(|e| Error::io(path, e))?;
            Ok((EXIT_OK, String::new()))
        }
        None => Ok((EXIT_OK, body)),
    }
}

fn render_isotope(q: &QuasigroupTable, origin: &str, no_normalize: bool) -> String {
    if !no_normalize {
        if let Some((l, _)) = isotopy::normalize_with_relabel(q) {
            return text::emit_grid(Some(origin), &l.rows());
        }
    }
    text::emit_grid(Some(origin), &q.rows())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("loopkit").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn counts() {
        assert_eq!(run_capture(&["enumerate", "5", "--count"]), (0, "56\n".into(), String::new()));
        assert_eq!(run_capture(&["enumerate", "4", "--count", "--filter", "c"]).1, "4\n");
        assert_eq!(run_capture(&["enumerate", "1", "--count"]).1, "1\n");
        assert_eq!(run_capture(&["enumerate", "7", "--count"]).0, 2);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_capture(&[]).0, 2);
        assert_eq!(run_capture(&["verify", "X9.9"]).0, 2);
        assert_eq!(run_capture(&["enumerate", "3", "--count", "--out", "x"]).0, 2);
        assert_eq!(run_capture(&["enumerate", "3", "--filter", "bogus"]).0, 2);
        assert_eq!(run_capture(&["--help"]).0, 0);
        assert_eq!(run_capture(&["isotope", "t.txt"]).0, 2);
        assert_eq!(run_capture(&["isotope", "t.txt", "--a", "1", "--b", "0", "--u", "0"]).0, 2);
    }

    #[test]
    fn verify_reports() {
        let (code, out, _) = run_capture(&["verify", "L0.1", "--max-order", "4", "--machine"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("id=L0.1 verdict=holds max_order=4 swept=7"));
    }
}
