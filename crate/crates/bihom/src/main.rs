//! Command-line front end.
//!
//! Exit codes: 0 = verified/pass, 1 = mathematical violation or
//! inequivalence, 2 = input error, 3 = undecided.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use bihom::algebra::{AxiomReport, LieCheck, Violation};
use bihom::cohomology::{compute_h2, d2};
use bihom::ext::{
    check_exact, classify, decompose_split_extension, ext_class, ext_classes_equivalent,
    find_section, semidirect_sum, Decision, SectionSearch, SplitExtensionData,
};
use bihom::io::{
    self, algebra_from_doc, cochain2_from_doc, cohomology_to_doc, extension_from_doc,
    extension_to_doc, matrix_to_doc, representation_from_doc, split_data_to_doc, AlgebraDoc,
    Cochain2Doc, Config, ExtensionDoc, RepresentationDoc,
};
use bihom::linalg::format_rat;
use bihom::rep::{check_representation, check_representation_both, is_cochain2, Axiom2Reading};
use bihom::{Error, Matrix};

#[derive(Parser)]
#[command(name = "bihom", about = "Exact-arithmetic toolkit for BiHom-Lie algebras")]
struct Cli {
    /// Output rendering
    #[arg(long, global = true, value_enum, default_value_t = OutMode::Text)]
    out: OutMode,
    /// Configuration file (JSON) selecting the representation-axiom reading
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutMode {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Verify the BiHom-Lie axioms of an algebra file
    Check { algebra: PathBuf },
    /// Verify the representation axioms of a module/action file
    RepCheck {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        rep: PathBuf,
    },
    /// Verify skew-symmetry and the 2-cocycle condition of a cochain file
    CocycleCheck {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        rep: PathBuf,
        #[arg(long)]
        cocycle: PathBuf,
    },
    /// Compute dim Z², dim B², dim H² and representative cocycles
    Cohomology {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        rep: PathBuf,
    },
    /// Build the semidirect sum L⊕V of an algebra, representation, cocycle
    Semidirect {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        rep: PathBuf,
        #[arg(long)]
        cocycle: PathBuf,
        /// Write the extension document here as well
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Recover split-extension data from an extension file
    Decompose {
        #[arg(long)]
        extension: PathBuf,
    },
    /// Decide equivalence of two cocycles or two split abelian extensions
    Equiv {
        #[arg(long, value_enum)]
        mode: EquivMode,
        /// cocycles mode: the base algebra
        #[arg(long)]
        algebra: Option<PathBuf>,
        /// cocycles mode: the representation
        #[arg(long)]
        rep: Option<PathBuf>,
        /// cocycles mode: first cocycle
        #[arg(long)]
        theta: Option<PathBuf>,
        /// cocycles mode: second cocycle
        #[arg(long)]
        theta2: Option<PathBuf>,
        /// extensions mode: first extension
        #[arg(long)]
        ext1: Option<PathBuf>,
        /// extensions mode: second extension
        #[arg(long)]
        ext2: Option<PathBuf>,
    },
    /// Report the abelian/central/split/trivial flags of an extension
    Classify {
        #[arg(long)]
        extension: PathBuf,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EquivMode {
    Cocycles,
    Extensions,
}

/// A finished command: exit code plus a structured payload rendered in
/// either mode.
struct Outcome {
    code: u8,
    status: &'static str,
    text: Vec<String>,
    payload: Value,
}

impl Outcome {
    fn new(code: u8, status: &'static str, payload: Value) -> Self {
        Outcome {
            code,
            status,
            text: Vec::new(),
            payload,
        }
    }

    fn line(mut self, s: impl Into<String>) -> Self {
        self.text.push(s.into());
        self
    }

    fn lines(mut self, it: impl IntoIterator<Item = String>) -> Self {
        self.text.extend(it);
        self
    }
}

#[derive(Serialize)]
struct Report {
    status: String,
    payload: Value,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            match cli.out {
                OutMode::Text => {
                    println!("status: {}", outcome.status);
                    for line in &outcome.text {
                        println!("{line}");
                    }
                }
                OutMode::Json => {
                    let report = Report {
                        status: outcome.status.to_string(),
                        payload: outcome.payload,
                    };
                    println!("{}", io::to_json_string(&report));
                }
            }
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            let code = error_code(&e);
            match cli.out {
                OutMode::Text => {
                    println!("status: error");
                    println!("error: {e}");
                }
                OutMode::Json => {
                    let report = Report {
                        status: "error".to_string(),
                        payload: json!({ "error": e.to_string() }),
                    };
                    println!("{}", io::to_json_string(&report));
                }
            }
            ExitCode::from(code)
        }
    }
}

fn error_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::DimensionMismatch(_) | Error::Invalid(_) => 2,
        Error::Precondition(_) | Error::Containment(_) => 1,
    }
}

fn read_file(path: &Path) -> bihom::Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn load<T: for<'de> serde::Deserialize<'de>>(path: &Path) -> bihom::Result<T> {
    let raw = read_file(path)?;
    io::from_json_str(&raw).map_err(|e| match e {
        Error::Parse(msg) => Error::Parse(format!("{}: {msg}", path.display())),
        other => other,
    })
}

fn load_config(cli: &Cli) -> bihom::Result<Config> {
    match &cli.config {
        Some(path) => load(path),
        None => Ok(Config::default()),
    }
}

fn violation_lines(report: &AxiomReport) -> Vec<String> {
    report.violations.iter().map(violation_line).collect()
}

fn violation_line(v: &Violation) -> String {
    let idx: Vec<String> = v.indices.iter().map(|i| i.to_string()).collect();
    let fmt = |vals: &[bihom::Rat]| {
        let parts: Vec<String> = vals.iter().map(format_rat).collect();
        format!("[{}]", parts.join(", "))
    };
    format!(
        "witness {}({}): lhs = {}, rhs = {}",
        v.axiom,
        idx.join(","),
        fmt(&v.lhs),
        fmt(&v.rhs)
    )
}

fn violations_json(report: &AxiomReport) -> Value {
    Value::Array(
        report
            .violations
            .iter()
            .map(|v| {
                json!({
                    "axiom": v.axiom,
                    "indices": v.indices,
                    "lhs": v.lhs.iter().map(format_rat).collect::<Vec<_>>(),
                    "rhs": v.rhs.iter().map(format_rat).collect::<Vec<_>>(),
                })
            })
            .collect(),
    )
}

/// pass/fail line per axiom, with the first witness of each failing one.
fn axiom_lines(report: &AxiomReport, axioms: &[&str]) -> Vec<String> {
    let mut out = Vec::new();
    for axiom in axioms {
        let first = report.violations.iter().find(|v| v.axiom == *axiom);
        match first {
            None => out.push(format!("axiom {axiom}: pass")),
            Some(v) => {
                out.push(format!("axiom {axiom}: fail"));
                out.push(format!("  {}", violation_line(v)));
            }
        }
    }
    out
}

fn lie_check_outcome(check: &LieCheck) -> Outcome {
    let axioms = [
        "commuting_twists",
        "skew_symmetry",
        "bihom_jacobi",
        "multiplicative_alpha",
        "multiplicative_beta",
    ];
    let payload = json!({
        "is_bihom_lie": check.is_bihom_lie,
        "is_multiplicative": check.is_multiplicative,
        "violations": violations_json(&check.report),
    });
    let (code, status) = if check.passed() { (0, "pass") } else { (1, "fail") };
    Outcome::new(code, status, payload)
        .lines(axiom_lines(&check.report, &axioms))
        .line(format!("is_bihom_lie: {}", check.is_bihom_lie))
        .line(format!("is_multiplicative: {}", check.is_multiplicative))
}

fn matrix_lines(label: &str, m: &Matrix) -> Vec<String> {
    let mut out = vec![format!("{label}:")];
    for row in matrix_to_doc(m) {
        out.push(format!("  [{}]", row.join(", ")));
    }
    out
}

fn run(cli: &Cli) -> bihom::Result<Outcome> {
    let config = load_config(cli)?;
    let reading: Axiom2Reading = config.axiom2_reading.into();
    match &cli.cmd {
        Cmd::Check { algebra } => {
            let doc: AlgebraDoc = load(algebra)?;
            let l = algebra_from_doc(&doc)?;
            Ok(lie_check_outcome(&l.check_bihom_lie()))
        }
        Cmd::RepCheck { algebra, rep } => {
            let l = algebra_from_doc(&load::<AlgebraDoc>(algebra)?)?;
            let (module, act) = representation_from_doc(&load::<RepresentationDoc>(rep)?, l.dim())?;
            let report = check_representation(&l, &module, &act, reading)?;
            let (right, left) = check_representation_both(&l, &module, &act)?;
            let readings_agree = right.passed() == left.passed();
            let payload = json!({
                "passed": report.passed(),
                "readings_agree": readings_agree,
                "violations": violations_json(&report),
            });
            let (code, status) = if report.passed() { (0, "pass") } else { (1, "fail") };
            Ok(Outcome::new(code, status, payload)
                .lines(axiom_lines(
                    &report,
                    &["representation_axiom_1", "representation_axiom_2"],
                ))
                .line(format!("readings_agree: {readings_agree}")))
        }
        Cmd::CocycleCheck {
            algebra,
            rep,
            cocycle,
        } => {
            let l = algebra_from_doc(&load::<AlgebraDoc>(algebra)?)?;
            let (module, act) = representation_from_doc(&load::<RepresentationDoc>(rep)?, l.dim())?;
            let theta = cochain2_from_doc(&load::<Cochain2Doc>(cocycle)?, l.dim(), module.dim())?;
            let skew = is_cochain2(&l, &theta)?;
            let closed = d2(&l, &module, &act, &theta)?.is_zero();
            let pass = skew && closed;
            let payload = json!({ "skew": skew, "cocycle": closed });
            let (code, status) = if pass { (0, "pass") } else { (1, "fail") };
            Ok(Outcome::new(code, status, payload)
                .line(format!("skew: {skew}"))
                .line(format!("cocycle: {closed}")))
        }
        Cmd::Cohomology { algebra, rep } => {
            let l = algebra_from_doc(&load::<AlgebraDoc>(algebra)?)?;
            let (module, act) = representation_from_doc(&load::<RepresentationDoc>(rep)?, l.dim())?;
            let rep_report = check_representation(&l, &module, &act, reading)?;
            if !rep_report.passed() {
                let payload = json!({
                    "error": "representation axioms fail",
                    "violations": violations_json(&rep_report),
                });
                return Ok(Outcome::new(1, "fail", payload)
                    .line("representation axioms fail".to_string())
                    .lines(violation_lines(&rep_report)));
            }
            let result = compute_h2(&l, &module, &act)?;
            let doc = cohomology_to_doc(&result, l.dim(), module.dim())?;
            let mut outcome = Outcome::new(0, "pass", serde_json::to_value(&doc).unwrap()).line(
                format!("Z2={} B2={} H2={}", doc.dim_z2, doc.dim_b2, doc.dim_h2),
            );
            for (k, rep_c) in result.representatives.iter().enumerate() {
                outcome = outcome.line(format!("representative {k}:"));
                for (i, j, vals) in io::tensor_to_sparse(rep_c.tensor()) {
                    outcome =
                        outcome.line(format!("  theta(e{},e{}) = [{}]", i + 1, j + 1, vals.join(", ")));
                }
            }
            Ok(outcome)
        }
        Cmd::Semidirect {
            algebra,
            rep,
            cocycle,
            output,
        } => {
            let l = algebra_from_doc(&load::<AlgebraDoc>(algebra)?)?;
            let (module, act) = representation_from_doc(&load::<RepresentationDoc>(rep)?, l.dim())?;
            let theta = cochain2_from_doc(&load::<Cochain2Doc>(cocycle)?, l.dim(), module.dim())?;
            let data = SplitExtensionData::abelian(l.clone(), module.clone(), act.clone(), theta.clone());
            let (sum, seq) = semidirect_sum(&data)?;
            let check = sum.check_bihom_lie();
            let rep_ok = check_representation(&l, &module, &act, reading)?.passed();
            let cocycle_ok = is_cochain2(&l, &theta)? && d2(&l, &module, &act, &theta)?.is_zero();
            let ext_doc = extension_to_doc(&seq, None);
            if let Some(path) = output {
                std::fs::write(path, io::to_json_string(&ext_doc))
                    .map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
            }
            let payload = json!({
                "sum_is_bihom_lie": check.is_bihom_lie,
                "sum_is_multiplicative": check.is_multiplicative,
                "representation_passes": rep_ok,
                "cocycle_passes": cocycle_ok,
                "violations": violations_json(&check.report),
                "extension": serde_json::to_value(&ext_doc).unwrap(),
            });
            let (code, status) = if check.is_bihom_lie { (0, "pass") } else { (1, "fail") };
            let mut outcome = Outcome::new(code, status, payload)
                .line(format!("sum_is_bihom_lie: {}", check.is_bihom_lie))
                .line(format!("sum_is_multiplicative: {}", check.is_multiplicative))
                .line(format!("representation_passes: {rep_ok}"))
                .line(format!("cocycle_passes: {cocycle_ok}"));
            if let Some(v) = check.report.violations.first() {
                outcome = outcome.line(violation_line(v));
            }
            Ok(outcome)
        }
        Cmd::Decompose { extension } => {
            let (seq, section) = extension_from_doc(&load::<ExtensionDoc>(extension)?)?;
            let exact = check_exact(&seq)?;
            if !exact.passed() {
                return Ok(Outcome::new(
                    1,
                    "fail",
                    json!({ "violations": violations_json(&exact) }),
                )
                .line("extension is not exact".to_string())
                .lines(violation_lines(&exact)));
            }
            let section = match section {
                Some(s) => SectionSearch::Found(s),
                None => find_section(&seq)?,
            };
            match section {
                SectionSearch::Found(s) => {
                    let data = decompose_split_extension(&seq, &s)?;
                    let doc = split_data_to_doc(&data);
                    Ok(Outcome::new(0, "pass", serde_json::to_value(&doc).unwrap())
                        .lines(matrix_lines("section", &s.matrix))
                        .line(format!("module_dim: {}", data.module.dim()))
                        .line(format!("mu_is_zero: {}", data.mu_is_zero()))
                        .line(io::to_json_string(&doc)))
                }
                SectionSearch::NoSection => Ok(Outcome::new(
                    1,
                    "fail",
                    json!({ "error": "no complementary subalgebra exists" }),
                )
                .line("no complementary subalgebra exists".to_string())),
                SectionSearch::Undecided => Ok(Outcome::new(
                    3,
                    "undecided",
                    json!({ "error": "section search exceeded its completeness bound" }),
                )
                .line("section search exceeded its completeness bound".to_string())),
            }
        }
        Cmd::Equiv {
            mode,
            algebra,
            rep,
            theta,
            theta2,
            ext1,
            ext2,
        } => match mode {
            EquivMode::Cocycles => {
                let (Some(algebra), Some(rep), Some(theta), Some(theta2)) =
                    (algebra, rep, theta, theta2)
                else {
                    return Err(Error::Invalid(
                        "equiv --mode cocycles requires --algebra, --rep, --theta, --theta2"
                            .to_string(),
                    ));
                };
                let l = algebra_from_doc(&load::<AlgebraDoc>(algebra)?)?;
                let (module, act) =
                    representation_from_doc(&load::<RepresentationDoc>(rep)?, l.dim())?;
                let t1 = cochain2_from_doc(&load::<Cochain2Doc>(theta)?, l.dim(), module.dim())?;
                let t2 = cochain2_from_doc(&load::<Cochain2Doc>(theta2)?, l.dim(), module.dim())?;
                match bihom::cohomology::cocycles_cohomologous(&l, &module, &act, &t1, &t2)? {
                    Some(h) => Ok(Outcome::new(
                        0,
                        "pass",
                        json!({
                            "equivalent": true,
                            "h": matrix_to_doc(h.matrix()),
                        }),
                    )
                    .line("equivalent: true".to_string())
                    .lines(matrix_lines("h", h.matrix()))),
                    None => Ok(Outcome::new(1, "fail", json!({ "equivalent": false }))
                        .line("equivalent: false".to_string())),
                }
            }
            EquivMode::Extensions => {
                let (Some(ext1), Some(ext2)) = (ext1, ext2) else {
                    return Err(Error::Invalid(
                        "equiv --mode extensions requires --ext1 and --ext2".to_string(),
                    ));
                };
                let mut classes = Vec::new();
                for path in [ext1, ext2] {
                    let (seq, section) = extension_from_doc(&load::<ExtensionDoc>(path)?)?;
                    let exact = check_exact(&seq)?;
                    if !exact.passed() {
                        return Err(Error::Precondition(format!(
                            "{}: extension is not exact",
                            path.display()
                        )));
                    }
                    let section = match section {
                        Some(s) => s,
                        None => match find_section(&seq)? {
                            SectionSearch::Found(s) => s,
                            SectionSearch::NoSection => {
                                return Err(Error::Precondition(format!(
                                    "{}: extension is not split",
                                    path.display()
                                )))
                            }
                            SectionSearch::Undecided => {
                                return Ok(Outcome::new(
                                    3,
                                    "undecided",
                                    json!({ "error": "section search exceeded its completeness bound" }),
                                )
                                .line("section search exceeded its completeness bound".to_string()))
                            }
                        },
                    };
                    classes.push(ext_class(&seq, Some(&section))?);
                }
                let b = classes.pop().unwrap();
                let a = classes.pop().unwrap();
                match ext_classes_equivalent(&a, &b)? {
                    Some(h) => {
                        let n = a.l.dim();
                        let m = a.module.dim();
                        let phi = Matrix::from_fn(n + m, n + m, |r, c| {
                            use num::{One, Zero};
                            if r == c {
                                bihom::Rat::one()
                            } else if r >= n && c < n {
                                -h.matrix().get(r - n, c).clone()
                            } else {
                                bihom::Rat::zero()
                            }
                        });
                        Ok(Outcome::new(
                            0,
                            "pass",
                            json!({
                                "equivalent": true,
                                "h": matrix_to_doc(h.matrix()),
                                "phi": matrix_to_doc(&phi),
                            }),
                        )
                        .line("equivalent: true".to_string())
                        .lines(matrix_lines("h", h.matrix()))
                        .lines(matrix_lines("phi", &phi)))
                    }
                    None => Ok(Outcome::new(1, "fail", json!({ "equivalent": false }))
                        .line("equivalent: false".to_string())),
                }
            }
        },
        Cmd::Classify { extension } => {
            let (seq, _) = extension_from_doc(&load::<ExtensionDoc>(extension)?)?;
            let exact = check_exact(&seq)?;
            if !exact.passed() {
                return Ok(Outcome::new(
                    1,
                    "fail",
                    json!({ "violations": violations_json(&exact) }),
                )
                .line("extension is not exact".to_string())
                .lines(violation_lines(&exact)));
            }
            let flags = classify(&seq)?;
            let split = match flags.split {
                Decision::Yes => "yes",
                Decision::No => "no",
                Decision::Undecided => "undecided",
            };
            let payload = json!({
                "abelian": flags.abelian,
                "central": flags.central,
                "split": split,
                "trivial": flags.trivial,
            });
            let code = if flags.split == Decision::Undecided { 3 } else { 0 };
            let status = if code == 3 { "undecided" } else { "pass" };
            Ok(Outcome::new(code, status, payload)
                .line(format!("abelian: {}", flags.abelian))
                .line(format!("central: {}", flags.central))
                .line(format!("split: {split}"))
                .line(format!("trivial: {}", flags.trivial)))
        }
    }
}
