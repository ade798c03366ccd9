use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use kdecomp::enumerate::{extendability_scan, random_walks, threshold_scan, ScanMode, ScanOptions, ScanReport};
use kdecomp::io::{parse_complex, parse_trace, serialize_trace, ComplexDocument, Labels};
use kdecomp::{
    certify_trace, is_shedding_face, is_shedding_face_direct, CertifyReport, Complex, ConeContext, Decider, Error,
    Extender, ExtensionTrace, PrefixStatus, Verdict, VertexSet,
};

use crate::{Cli, Command, Global, Mode, Target};

pub const EXIT_YES: u8 = 0;
pub const EXIT_NO: u8 = 1;
pub const EXIT_INCONCLUSIVE: u8 = 2;
pub const EXIT_ERROR: u8 = 3;

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Io(PathBuf, io::Error),
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::Inconclusive(_)) => EXIT_INCONCLUSIVE,
            CliError::Core(Error::NotDecomposable { .. }) => EXIT_NO,
            _ => EXIT_ERROR,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(path, e) => write!(f, "{}: {e}", path.display()),
            CliError::Usage(m) => write!(f, "{m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

type Outcome = Result<u8, CliError>;

pub fn run(cli: &Cli) -> Outcome {
    let g = &cli.global;
    match &cli.command {
        Command::Check { file, k } => check(g, file, *k),
        Command::Shed { file, face } => shed(g, file, face),
        Command::Extend { file, target, cone_labels, out } => extend(g, file, *target, cone_labels, out.as_deref()),
        Command::Verify { file } => verify(g, file),
        Command::Enumerate { n, d, mode, samples, max_classes } => enumerate(g, *n, *d, *mode, *samples, *max_classes),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

fn load(path: &Path) -> Result<ComplexDocument, CliError> {
    parse_complex(&read(path)?).map_err(|e| match e {
        Error::Parse { line, message } => CliError::Usage(format!("{}:{line}: {message}", path.display())),
        other => CliError::Core(other),
    })
}

fn decider(g: &Global) -> Decider {
    g.budget.map_or_else(Decider::new, Decider::with_budget)
}

fn stdout_line(text: impl fmt::Display) -> Result<(), CliError> {
    writeln!(io::stdout().lock(), "{text}").map_err(|e| CliError::Io(PathBuf::from("<stdout>"), e))
}

fn check(g: &Global, file: &Path, k: usize) -> Outcome {
    let doc = load(file)?;
    match decider(g).decide(&doc.complex, k) {
        Verdict::Decomposable(tree) => {
            stdout_line("YES")?;
            if !g.quiet {
                stdout_line(format!("witness: {}", tree.render(&|v| doc.labels.name(v))))?;
            }
            Ok(EXIT_YES)
        }
        Verdict::NotDecomposable => {
            stdout_line("NO")?;
            Ok(EXIT_NO)
        }
        Verdict::Inconclusive => {
            stdout_line("INCONCLUSIVE")?;
            Ok(EXIT_INCONCLUSIVE)
        }
    }
}

fn face_tokens(raw: &[String]) -> Vec<&str> {
    raw.iter().flat_map(|s| s.split(|c: char| c.is_whitespace() || c == ',')).filter(|t| !t.is_empty()).collect()
}

fn shed(g: &Global, file: &Path, face: &[String]) -> Outcome {
    let doc = load(file)?;
    let f = doc.labels.set(face_tokens(face))?;
    let gluing = is_shedding_face(&doc.complex, f)?;
    let direct = is_shedding_face_direct(&doc.complex, f)?;
    if gluing != direct {
        return Err(Error::Internal(format!(
            "criteria disagree on {}: gluing {gluing}, direct {direct}",
            doc.labels.render(f)
        ))
        .into());
    }
    stdout_line(if gluing { "SHEDDING" } else { "NOT SHEDDING" })?;
    if !g.quiet {
        let yes_no = |b: bool| if b { "yes" } else { "no" };
        stdout_line(format!("gluing: {}, direct: {}", yes_no(gluing), yes_no(direct)))?;
    }
    Ok(if gluing { EXIT_YES } else { EXIT_NO })
}

fn cone_ids(labels: &mut Labels, names: &[String], count: usize) -> Result<VertexSet, CliError> {
    let names = face_tokens(names);
    if names.is_empty() {
        return Ok(labels.add_fresh(count)?);
    }
    if names.len() != count {
        return Err(CliError::Usage(format!("expected {count} cone labels, got {}", names.len())));
    }
    names.into_iter().map(|n| labels.push(n).map_err(CliError::from)).collect()
}

fn build_trace(
    extender: &mut Extender,
    c: &Complex,
    labels: &mut Labels,
    target: Target,
    names: &[String],
) -> Result<ExtensionTrace, CliError> {
    match target {
        Target::Simplex => {
            let ctx = ConeContext::fresh(c)?;
            if !labels.is_empty() && labels.len() != ctx.cone.min().map_or(labels.len(), |v| v as usize) {
                return Err(Error::Internal("label table does not end at the largest vertex".into()).into());
            }
            let ids = cone_ids(labels, names, ctx.cone.len())?;
            if ids != ctx.cone {
                return Err(Error::Internal("cone labels do not match the fresh vertices".into()).into());
            }
            Ok(extender.extend_main(c)?)
        }
        Target::Cocl => {
            let d = c.dimension().unwrap_or(0).max(0) as usize;
            let count = if names.is_empty() { d.saturating_sub(2) } else { face_tokens(names).len() };
            let h = cone_ids(labels, names, count)?;
            Ok(extender.extend_to_cocl(c, h)?)
        }
        Target::Full => {
            if !names.is_empty() {
                return Err(CliError::Usage("--cone-labels does not apply to --target full".into()));
            }
            Ok(extender.extend_to_full_2d(c)?)
        }
    }
}

fn extend(g: &Global, file: &Path, target: Target, names: &[String], out: Option<&Path>) -> Outcome {
    let ComplexDocument { complex, mut labels } = load(file)?;
    let mut extender = Extender::with_decider(decider(g));
    let trace = match build_trace(&mut extender, &complex, &mut labels, target, names) {
        Ok(t) => t,
        Err(CliError::Core(Error::NotDecomposable { k, report })) => {
            if !g.quiet {
                eprintln!("{report}");
            }
            return Err(Error::NotDecomposable { k, report }.into());
        }
        Err(e) => return Err(e),
    };
    let text = serialize_trace(&trace, 1, &labels);
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| CliError::Io(path.to_path_buf(), e))?;
            if !g.quiet {
                stdout_line(format!("wrote {} steps to {}", trace.len(), path.display()))?;
            }
        }
        None => {
            io::stdout().lock().write_all(text.as_bytes()).map_err(|e| CliError::Io(PathBuf::from("<stdout>"), e))?
        }
    }
    Ok(EXIT_YES)
}

fn report_code(report: &CertifyReport) -> u8 {
    match report.first_failure() {
        None => EXIT_YES,
        Some(_)
            if report
                .entries
                .iter()
                .all(|e| e.status == PrefixStatus::Pass || e.status == PrefixStatus::Inconclusive)
                && report.entries.iter().all(|e| e.shedding_ok != Some(false)) =>
        {
            EXIT_INCONCLUSIVE
        }
        Some(_) => EXIT_NO,
    }
}

fn verify(g: &Global, file: &Path) -> Outcome {
    let doc = parse_trace(&read(file)?).map_err(|e| match e {
        Error::Parse { line, message } => CliError::Usage(format!("{}:{line}: {message}", file.display())),
        other => CliError::Core(other),
    })?;
    let report = certify_trace(&doc.trace, doc.k, &mut decider(g));
    if g.quiet {
        let last = report.to_string();
        stdout_line(last.lines().last().unwrap_or_default())?;
    } else {
        stdout_line(&report)?;
    }
    Ok(report_code(&report))
}

fn enumerate(g: &Global, n: usize, d: usize, mode: Mode, samples: usize, max_classes: usize) -> Outcome {
    let options = ScanOptions { budget: g.budget, max_classes };
    let report: ScanReport = match mode {
        Mode::Extendability => extendability_scan(n, d, &options)?,
        Mode::Thresholds => threshold_scan(n, d, &options)?,
    };
    if g.quiet {
        stdout_line(report.to_string().lines().last().unwrap_or_default())?;
    } else {
        stdout_line(&report)?;
    }
    let mut code = match report.mode {
        ScanMode::Extendability if report.total_dead_ends() > 0 => EXIT_NO,
        _ if report.truncated || report.total_inconclusive() > 0 => EXIT_INCONCLUSIVE,
        _ => EXIT_YES,
    };
    if samples > 0 {
        let walks = random_walks(n, d, samples, g.seed, &options)?;
        let completed = walks.iter().filter(|w| w.completed).count();
        stdout_line(format!("random walks (seed {}): {completed}/{} reached the full skeleton", g.seed, walks.len()))?;
        if completed < walks.len() {
            code = EXIT_NO;
        }
    }
    Ok(code)
}
