//! `matlis`: batch front end for the computations in `matlis-core`.
//!
//! Exit status: 0 success or certified, 1 verification failure, 2
//! inconclusive, 64 usage error or degenerate input.

mod config;

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use config::{Format, SessionConfig, CONFIG_ENV};
use matlis_core::cech::{identify_basis, verify_realization, CechError};
use matlis_core::duality::{
    gamma_of_shape, is_torsion, matlis_pair, pairing_perfection_check, regular_on_dual_check,
    tensor_surjectivity_witness, DualityError,
};
use matlis_core::expr_io::{
    default_variable_names, serialize_with_names, DecompositionDocument, ElementDocument, GammaReport, PairDocument, ShiftDocument, WitnessDocument,
};
use matlis_core::independence::{
    decompose_r, delta, independence_certificate, make_d, plane_dual_shape, shift_equiv_window,
};
use matlis_core::suite::run_suite;
use matlis_core::{
    derivation_act, parse_element, quotient_by_series_var, read_document, ring_act, serialize_element,
    write_document, AlgebraError, Body, DeltaEntry, DeltaSequence, Document, Element, Exponent, Field,
    IndependenceError, ModuleShape, Role, ShiftOutcome, Suite, TruncationBox,
};

const EXIT_FAIL: u8 = 1;
const EXIT_INCONCLUSIVE: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser, Debug)]
#[command(name = "matlis", version, about = "Truncated local cohomology, Matlis duals and independence certificates")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Coefficient field: `rational` or `prime:<p>`.
    #[arg(long, global = true)]
    field: Option<String>,
    /// Box bounds: one bound for every variable, or a comma-separated list.
    #[arg(long, global = true)]
    trunc: Option<String>,
    /// Write the output to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for sampled checks.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Output format.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Configuration file; defaults to `matlis.toml` in the working directory.
    #[arg(long, global = true, env = CONFIG_ENV)]
    config: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
struct Indices {
    /// Number of variables.
    #[arg(long)]
    n: Option<usize>,
    /// Cohomological index: the ideal is (X1, ..., Xi).
    #[arg(long)]
    i: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Čech cohomology dimensions over a window of multidegrees.
    Cohomology {
        #[command(flatten)]
        idx: Indices,
        /// Multidegrees range over |a_j| <= window.
        #[arg(long, default_value_t = 3)]
        window: u64,
    },
    /// Certify that sum_j r_j d_j is nonzero in k[Y^-1][[X]].
    Indep {
        /// Coefficients r_1, r_2, ... in k[[X,Y]], in order.
        #[arg(long = "r", required = true)]
        r: Vec<String>,
        #[arg(long, default_value_t = 30)]
        lmax: u64,
    },
    /// Run a bundled invariant suite.
    Check {
        #[arg(long)]
        suite: Suite,
    },
    /// The pairing D(H^i) x H^i -> E.
    Pair {
        #[command(flatten)]
        idx: Indices,
        /// Element of the dual D(H^i).
        #[arg(long)]
        d: String,
        /// Element of H^i.
        #[arg(long)]
        m: String,
    },
    /// Check that the socle pairing of the box bases is perfect.
    Perfect {
        #[command(flatten)]
        idx: Indices,
    },
    /// Decomposable preimage of an E-monomial under the pairing.
    Witness {
        #[command(flatten)]
        idx: Indices,
        /// A monomial of E, e.g. `X1^-1*X3^-2`.
        #[arg(long)]
        target: String,
    },
    /// The δ invariant of an element of k[Y^-1][[X]].
    Delta {
        #[arg(long)]
        d: String,
        #[arg(long, default_value_t = 0)]
        start: u64,
        /// Last X-degree; defaults to the X bound of the box.
        #[arg(long)]
        end: Option<u64>,
    },
    /// The element d_n = sum_l Y^(-l^n) X^l truncated at l <= lmax.
    Dfam {
        #[arg(long)]
        power: u32,
        #[arg(long)]
        lmax: u64,
    },
    /// Multiply a module element by a ring element.
    Act {
        /// R, E, H<i>, D<i>, or role letters such as `SI`.
        #[arg(long)]
        shape: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        r: String,
        #[arg(long)]
        m: String,
    },
    /// Apply the partial derivation d/dX_j (j counted from 1).
    Derive {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        m: String,
    },
    /// Image of an element in M / X_j M (j counted from 1).
    Quotient {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        m: String,
    },
    /// The torsion functor of a shaped module for a set of variables.
    Gamma {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        n: Option<usize>,
        /// Comma-separated variable indices, counted from 1.
        #[arg(long)]
        gens: String,
        /// Optional element for the elementwise cross-check.
        #[arg(long)]
        m: Option<String>,
    },
    /// Check that X1..Xi is a regular sequence on D(H^i).
    Regular {
        #[command(flatten)]
        idx: Indices,
    },
    /// The H^i basis monomial of the Čech class in a multidegree.
    Identify {
        #[command(flatten)]
        idx: Indices,
        /// Comma-separated multidegree, e.g. `-2,-1,4`.
        #[arg(long, allow_hyphen_values = true)]
        degree: String,
    },
    /// Write r = X^(a+1) h + X^a g with g(0) of Y-order b.
    Decompose {
        #[arg(long)]
        r: String,
    },
    /// Search for a shift witness between two δ sequences.
    Shift {
        /// First element, or `d<n>` for the family member d_n.
        #[arg(long)]
        first: String,
        #[arg(long)]
        second: String,
        #[arg(long, default_value_t = 0)]
        start: u64,
        #[arg(long, default_value_t = 10)]
        end: u64,
        #[arg(long, default_value_t = 5)]
        bound: u64,
    },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Io(String),
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<DualityError> for CliError {
    fn from(e: DualityError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<CechError> for CliError {
    fn from(e: CechError) -> Self {
        CliError::Usage(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Outcome {
    Success,
    Failure,
    Inconclusive,
}

/// Command-line flags merged over the configuration file.
struct Session {
    n: usize,
    field: Field,
    trunc: Option<Vec<u64>>,
    seed: u64,
    format: Format,
    out: Option<PathBuf>,
}

impl Session {
    fn new(common: &Common) -> Result<Session, CliError> {
        let cfg = SessionConfig::load(common.config.as_deref()).map_err(CliError::Usage)?;
        let field_text = common.field.clone().or(cfg.field).unwrap_or_else(|| "rational".into());
        let field: Field = field_text.parse().map_err(|e| CliError::Usage(format!("--field: {e}")))?;
        let trunc = match &common.trunc {
            Some(t) => Some(parse_list::<u64>(t, "--trunc")?),
            None => cfg.trunc,
        };
        Ok(Session {
            n: cfg.n.unwrap_or(2),
            field,
            trunc,
            seed: common.seed.or(cfg.seed).unwrap_or(0),
            format: common.format.or(cfg.format).unwrap_or(Format::Human),
            out: common.out.clone(),
        })
    }

    fn n(&self, flag: Option<usize>) -> Result<usize, CliError> {
        match flag.unwrap_or(self.n) {
            0 => Err(CliError::Usage("--n must be at least 1".into())),
            n => Ok(n),
        }
    }

    /// Box for `n` variables: `--trunc` expanded if uniform, else `default`.
    fn bounds(&self, n: usize, default: u64) -> Result<TruncationBox, CliError> {
        match &self.trunc {
            None => Ok(TruncationBox::uniform(n, default)),
            Some(v) if v.len() == 1 => Ok(TruncationBox::uniform(n, v[0])),
            Some(v) if v.len() == n => Ok(TruncationBox(v.clone())),
            Some(v) => Err(CliError::Usage(format!("--trunc has {} bounds for {n} variables", v.len()))),
        }
    }

    fn uniform_bound(&self, default: u64) -> Result<u64, CliError> {
        match self.trunc.as_deref() {
            None => Ok(default),
            Some([b]) => Ok(*b),
            Some(v) if v.windows(2).all(|w| w[0] == w[1]) && !v.is_empty() => Ok(v[0]),
            Some(_) => Err(CliError::Usage("this command needs a single --trunc bound".into())),
        }
    }

    fn element(&self, source: &str, shape: &ModuleShape, bounds: &TruncationBox) -> Result<Element, CliError> {
        if let Some(path) = source.strip_prefix('@') {
            let text = fs::read_to_string(path).map_err(|e| CliError::Io(format!("{path}: {e}")))?;
            let e = read_document(&text)
                .and_then(|d| d.into_element())
                .map_err(|e| CliError::Usage(format!("{path}: {e}")))?;
            if e.shape() != shape {
                return Err(CliError::Usage(format!("{path}: element has shape {}, expected {shape}", e.shape())));
            }
            return Ok(e);
        }
        parse_element(source, shape, bounds, self.field).map_err(|e| CliError::Usage(format!("`{source}`: {e}")))
    }

    fn emit(&self, human: String, body: Body) -> Result<(), CliError> {
        let text = match self.format {
            Format::Human => human,
            Format::Document => write_document(&Document::new(body)),
        };
        match &self.out {
            Some(path) => fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}

fn parse_list<T: std::str::FromStr>(text: &str, what: &str) -> Result<Vec<T>, CliError> {
    text.split(',')
        .map(|s| s.trim().parse::<T>().map_err(|_| CliError::Usage(format!("{what}: cannot parse `{s}`"))))
        .collect()
}

/// `R`, `E`, `H<i>`, `D<i>` on `n` variables, or explicit role letters.
fn parse_shape(text: &str, n: usize) -> Result<ModuleShape, CliError> {
    let index = |rest: &str| -> Result<usize, CliError> {
        let i: usize = rest.parse().map_err(|_| CliError::Usage(format!("bad shape `{text}`")))?;
        if i > n {
            return Err(CliError::Usage(format!("shape `{text}` needs i <= n = {n}")));
        }
        Ok(i)
    };
    match text {
        "R" => Ok(ModuleShape::ring(n)),
        "E" => Ok(ModuleShape::injective_hull(n)),
        _ if text.starts_with('H') && text.len() > 1 => Ok(ModuleShape::local_cohomology(n, index(&text[1..])?)),
        _ if text.starts_with('D') && text.len() > 1 => Ok(ModuleShape::matlis_dual(n, index(&text[1..])?)),
        _ if !text.is_empty() && text.chars().all(|c| c == 'S' || c == 'I') => Ok(ModuleShape(
            text.chars().map(|c| if c == 'S' { Role::Series } else { Role::Inverse }).collect(),
        )),
        _ => Err(CliError::Usage(format!("bad shape `{text}`: use R, E, H<i>, D<i> or letters S/I"))),
    }
}

fn shape_and_box(session: &Session, shape: &str, n: Option<usize>, default: u64) -> Result<(ModuleShape, TruncationBox), CliError> {
    let n = session.n(n)?;
    let shape = parse_shape(shape, n)?;
    let bounds = session.bounds(shape.arity(), default)?;
    Ok((shape, bounds))
}

fn variable(j: usize, n: usize) -> Result<usize, CliError> {
    if j == 0 || j > n {
        return Err(CliError::Usage(format!("variable index {j} outside 1..={n}")));
    }
    Ok(j - 1)
}

fn element_text(e: &Element) -> String {
    let mut s = serialize_element(e);
    if !e.is_exact() {
        s.push_str("  (truncated)");
    }
    s.push('\n');
    s
}

fn element_body(e: &Element) -> Body {
    Body::Element(ElementDocument::from_element(e))
}

fn delta_text(seq: &DeltaSequence) -> String {
    let mut s = String::new();
    for (k, e) in seq.entries.iter().enumerate() {
        let v = match e {
            DeltaEntry::MinExponent(v) => v.to_string(),
            DeltaEntry::ZeroCoefficient => "zero".into(),
        };
        let _ = writeln!(s, "l = {:>3}: {v}", seq.start + k as u64);
    }
    s
}

fn verdict(passed: bool) -> Outcome {
    if passed {
        Outcome::Success
    } else {
        Outcome::Failure
    }
}

fn pass_word(passed: bool) -> &'static str {
    if passed {
        "pass"
    } else {
        "FAIL"
    }
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let s = Session::new(&cli.common)?;
    match cli.command {
        Command::Cohomology { idx, window } => {
            let n = s.n(idx.n)?;
            let t = verify_realization(n, idx.i, window)?;
            let mut h = format!(
                "H^{} of k[[X1..X{n}]] over |a_j| <= {window}: {}, {} of {} degrees nonzero\n",
                idx.i,
                pass_word(t.passed),
                t.nonzero_count(),
                t.entries.len()
            );
            for e in t.entries.iter().filter(|e| e.dims.iter().any(|&d| d > 0)) {
                let _ = writeln!(h, "  {}  dims {:?}", e.degree, e.dims);
            }
            let passed = t.passed;
            s.emit(h, Body::CohomologyTable(t))?;
            Ok(verdict(passed))
        }
        Command::Indep { r, lmax } => {
            let shape = ModuleShape::ring(2);
            let bounds = s.bounds(2, 8)?;
            let r_list = r.iter().map(|t| s.element(t, &shape, &bounds)).collect::<Result<Vec<_>, _>>()?;
            match independence_certificate(&r_list, lmax) {
                Ok(c) => {
                    let h = format!(
                        "certified: sum of {} terms is nonzero; m0 = {}, (a, b) = ({}, {}), tail -(l-{})^{} + {} on [{}, {lmax}]\n",
                        r_list.len(),
                        c.m0,
                        c.a,
                        c.b,
                        c.a,
                        c.m0,
                        c.b,
                        c.tail_start
                    );
                    s.emit(h, Body::IndependenceCertificate(c))?;
                    Ok(Outcome::Success)
                }
                Err(IndependenceError::Inconclusive { reason, required_lmax }) => {
                    let need = required_lmax.map(|l| format!("; rerun with --lmax {l}")).unwrap_or_default();
                    eprintln!("inconclusive: {reason}{need}");
                    Ok(Outcome::Inconclusive)
                }
                Err(e @ (IndependenceError::PatternMismatch { .. } | IndependenceError::Overflow { .. })) => {
                    eprintln!("error: {e}");
                    Ok(Outcome::Failure)
                }
                Err(e) => Err(CliError::Usage(e.to_string())),
            }
        }
        Command::Check { suite } => {
            let report = run_suite(suite, s.seed);
            let mut h = format!("suite {} (seed {})\n", report.suite, report.seed);
            for inv in &report.invariants {
                let _ = writeln!(h, "  {:<36} {:>7} instances  {}", inv.name, inv.instances, pass_word(inv.passed));
                if let Some(f) = &inv.first_failure {
                    let _ = writeln!(h, "    first failure: {f}");
                }
            }
            let _ = writeln!(h, "{}", if report.passed { "all invariants hold" } else { "FAILED" });
            let passed = report.passed;
            s.emit(h, Body::CheckReport(report))?;
            Ok(verdict(passed))
        }
        Command::Pair { idx, d, m } => {
            let n = s.n(idx.n)?;
            if idx.i > n {
                return Err(CliError::Usage(format!("need i <= n, got i = {}, n = {n}", idx.i)));
            }
            let bounds = s.bounds(n, 4)?;
            let primal = ModuleShape::local_cohomology(n, idx.i);
            let d = s.element(&d, &primal.dual(), &bounds)?;
            let m = s.element(&m, &primal, &bounds)?;
            let p = matlis_pair(&d, &m)?;
            let socle = p.coeff(&Exponent::zero(n)).to_string();
            let h = format!("{}socle coefficient: {socle}\n", element_text(&p));
            s.emit(h, Body::Pair(PairDocument { product: ElementDocument::from_element(&p), socle }))?;
            Ok(Outcome::Success)
        }
        Command::Perfect { idx } => {
            let n = s.n(idx.n)?;
            let report = pairing_perfection_check(n, idx.i, s.uniform_bound(3)?, s.field)?;
            let h = format!(
                "socle pairing, n = {n}, i = {}, box {}: {} x {} bases, {}\n",
                idx.i,
                report.bound,
                report.dual_basis.len(),
                report.primal_basis.len(),
                if report.passed { "perfect (permutation matrix)" } else { "NOT perfect" }
            );
            let passed = report.passed;
            s.emit(h, Body::PairingReport(report))?;
            Ok(verdict(passed))
        }
        Command::Witness { idx, target } => {
            let n = s.n(idx.n)?;
            let bounds = s.bounds(n, 3)?;
            let e = s.element(&target, &ModuleShape::injective_hull(n), &bounds)?;
            let mut terms = e.terms();
            let (Some((x, c)), None) = (terms.next(), terms.next()) else {
                return Err(CliError::Usage("--target must be a single monomial".into()));
            };
            if !c.is_one() {
                return Err(CliError::Usage("--target must have coefficient 1".into()));
            }
            let (m, d) = tensor_surjectivity_witness(x, idx.i, &bounds, s.field)?;
            let verified = matlis_pair(&d, &m)? == e;
            let h = format!(
                "m = {}\nd = {}\n<d, m> = {} ({})\n",
                serialize_element(&m),
                serialize_element(&d),
                serialize_element(&e),
                if verified { "verified" } else { "MISMATCH" }
            );
            let doc = WitnessDocument {
                target: x.clone(),
                primal: ElementDocument::from_element(&m),
                dual: ElementDocument::from_element(&d),
                verified,
            };
            s.emit(h, Body::Witness(doc))?;
            Ok(verdict(verified))
        }
        Command::Delta { d, start, end } => {
            let bounds = s.bounds(2, 64)?;
            let d = s.element(&d, &plane_dual_shape(), &bounds)?;
            let end = end.unwrap_or(d.bounds().bound(0));
            let seq = delta(&d, start, end).map_err(|e| CliError::Usage(e.to_string()))?;
            s.emit(delta_text(&seq), Body::DeltaSequence(seq))?;
            Ok(Outcome::Success)
        }
        Command::Dfam { power, lmax } => {
            let bounds = match &s.trunc {
                Some(_) => Some(s.bounds(2, 0)?),
                None => None,
            };
            let d = make_d(power, lmax, bounds, s.field).map_err(|e| CliError::Usage(e.to_string()))?;
            s.emit(element_text(&d), element_body(&d))?;
            Ok(Outcome::Success)
        }
        Command::Act { shape, n, r, m } => {
            let (shape, bounds) = shape_and_box(&s, &shape, n, 4)?;
            let m = s.element(&m, &shape, &bounds)?;
            let r = s.element(&r, &ModuleShape::ring(shape.arity()), &bounds)?;
            let out = ring_act(&r, &m)?;
            s.emit(element_text(&out), element_body(&out))?;
            Ok(Outcome::Success)
        }
        Command::Derive { shape, n, j, m } => {
            let (shape, bounds) = shape_and_box(&s, &shape, n, 4)?;
            let j = variable(j, shape.arity())?;
            let m = s.element(&m, &shape, &bounds)?;
            let out = derivation_act(j, &m)?;
            s.emit(element_text(&out), element_body(&out))?;
            Ok(Outcome::Success)
        }
        Command::Quotient { shape, n, j, m } => {
            let (shape, bounds) = shape_and_box(&s, &shape, n, 4)?;
            let j = variable(j, shape.arity())?;
            let m = s.element(&m, &shape, &bounds)?;
            let out = quotient_by_series_var(j, &m)?;
            let mut names = default_variable_names(shape.arity());
            names.remove(j);
            let mut h = serialize_with_names(&out, &names);
            h.push('\n');
            s.emit(h, element_body(&out))?;
            Ok(Outcome::Success)
        }
        Command::Gamma { shape, n, gens, m } => {
            let (shape, bounds) = shape_and_box(&s, &shape, n, 4)?;
            let gens = parse_list::<usize>(&gens, "--gens")?
                .into_iter()
                .map(|j| variable(j, shape.arity()))
                .collect::<Result<Vec<_>, _>>()?;
            let torsion = gamma_of_shape(&shape, &gens);
            let element_is_torsion = match m {
                Some(text) => {
                    let e = s.element(&text, &shape, &bounds)?;
                    Some(is_torsion(&e, &gens, bounds.max_bound() + 1)?)
                }
                None => None,
            };
            let mut h = format!("Γ of {shape}: {torsion:?}\n");
            if let Some(t) = element_is_torsion {
                let _ = writeln!(h, "element is torsion: {t}");
            }
            let consistent = element_is_torsion.is_none_or(|t| t || torsion == matlis_core::Torsion::Zero);
            s.emit(h, Body::Gamma(GammaReport { roles: shape, gens, torsion, element_is_torsion }))?;
            Ok(verdict(consistent))
        }
        Command::Regular { idx } => {
            let n = s.n(idx.n)?;
            let report = regular_on_dual_check(n, idx.i, s.uniform_bound(4)?, s.field)?;
            let mut h = format!("X1..X{} on D(H^{}), n = {n}, box {}:\n", idx.i, idx.i, report.bound);
            for st in &report.steps {
                let _ = writeln!(h, "  X{}: kernel {} on {} monomials", st.variable + 1, st.kernel_dim, st.sub_box_size);
            }
            let _ = writeln!(
                h,
                "  quotient {} with {} monomials; {}",
                report.quotient_shape,
                report.quotient_basis_size,
                if report.passed { "regular" } else { "NOT regular" }
            );
            let passed = report.passed;
            s.emit(h, Body::RegularityReport(report))?;
            Ok(verdict(passed))
        }
        Command::Identify { idx, degree } => {
            let n = s.n(idx.n)?;
            let a = Exponent(parse_list::<i64>(&degree, "--degree")?);
            let bound = a.0.iter().map(|v| v.unsigned_abs()).max().unwrap_or(0);
            let bounds = s.bounds(n, bound)?;
            match identify_basis(n, idx.i, &a, bounds) {
                Ok(e) => {
                    s.emit(element_text(&e), element_body(&e))?;
                    Ok(Outcome::Success)
                }
                Err(CechError::NoClass(a)) => {
                    eprintln!("no class: H^{} vanishes in degree {a}", idx.i);
                    Ok(Outcome::Failure)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Decompose { r } => {
            let bounds = s.bounds(2, 8)?;
            let r = s.element(&r, &ModuleShape::ring(2), &bounds)?;
            let dec = decompose_r(&r).map_err(|e| CliError::Usage(e.to_string()))?;
            let doc = DecompositionDocument {
                a: dec.a,
                b: dec.b,
                g: serialize_element(&dec.g),
                h: serialize_element(&dec.h),
            };
            let h = format!("a = {}, b = {}\ng = {}\nh = {}\n", doc.a, doc.b, doc.g, doc.h);
            s.emit(h, Body::Decomposition(doc))?;
            Ok(Outcome::Success)
        }
        Command::Shift { first, second, start, end, bound } => {
            let load = |text: &str| -> Result<DeltaSequence, CliError> {
                let d = match text.strip_prefix('d').and_then(|p| p.parse::<u32>().ok()) {
                    Some(power) => make_d(power, end, None, s.field).map_err(|e| CliError::Usage(e.to_string()))?,
                    None => s.element(text, &plane_dual_shape(), &s.bounds(2, 64)?)?,
                };
                delta(&d, start, end).map_err(|e| CliError::Usage(e.to_string()))
            };
            let (a, b) = (load(&first)?, load(&second)?);
            let outcome = shift_equiv_window(&a, &b, bound);
            let h = match outcome {
                ShiftOutcome::Witness(w) => format!("witness N = {}, M = {}, p = {}\n", w.n, w.m, w.p),
                ShiftOutcome::NoWitness => format!("no witness with N, M <= {bound}\n"),
                ShiftOutcome::Inconclusive => "inconclusive: window too short\n".to_string(),
            };
            s.emit(h, Body::Shift(ShiftDocument { first: a, second: b, search_bound: bound, outcome }))?;
            Ok(if outcome == ShiftOutcome::Inconclusive { Outcome::Inconclusive } else { Outcome::Success })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::Failure) => ExitCode::from(EXIT_FAIL),
        Ok(Outcome::Inconclusive) => ExitCode::from(EXIT_INCONCLUSIVE),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(CliError::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_FAIL)
        }
    }
}
