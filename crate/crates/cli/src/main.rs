//! Command-line frontend: stable, line-oriented text output for scripting
//! and golden-file tests. Exit codes: 0 success, 1 domain errors (bad input,
//! violated preconditions), 2 internal inconsistency.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::Signed;

use cayley_core::algebra::{atom_partition, cone_decompose, ConeFailure};
use cayley_core::cyclotomic::CycContext;
use cayley_core::diophantine::{
    build_counterexample_5, normalized_solutions_5, solutions_three_squares,
    verify_counterexample, DiophantineError, VerifyError,
};
use cayley_core::groups::parse::{
    format_element, format_group_spec, format_multiset, parse_group_spec, parse_multiset,
};
use cayley_core::groups::{GMultiset, GroupError, GroupSpec, Q8Elem};
use cayley_core::oracle::{oracle_check, OracleError};
use cayley_core::selftest::run_selftest;
use cayley_core::spectra::{
    char_sum, characters, elementary_abelian_analysis, hamiltonian_conditions, is_integral_abelian,
    spectrum, HamiltonianReport, SpectraError,
};

#[derive(Parser)]
#[command(
    name = "cayley",
    about = "Exact spectra and integrality certificates for Cayley multigraphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the atoms of the boolean algebra of normal subgroups, one class per line
    Atoms { groupspec: String },
    /// Exact spectrum of Cay(G, S)
    Spectrum { groupspec: String, multiset: PathBuf },
    /// Integrality decision plus cone membership
    Check { groupspec: String, multiset: PathBuf },
    /// Group-level predicate, or the full three-condition report for a multiset
    Hamiltonian {
        groupspec: String,
        multiset: Option<PathBuf>,
    },
    /// Brute-force verdict from the integer characteristic polynomial
    Oracle {
        groupspec: String,
        multiset: PathBuf,
        /// Also dump the characteristic polynomial coefficients
        #[arg(long)]
        charpoly: bool,
    },
    /// Emit integral-but-not-in-cone generating multisets over Q8 x C_p
    Counterexample {
        #[arg(long)]
        p: u64,
        /// How many multisets to construct (p = 5)
        #[arg(long, default_value_t = 3)]
        count: usize,
        /// Search bound for the three-squares probe (p = 7)
        #[arg(long, default_value_t = 50)]
        bound: u64,
        /// Directory for the emitted multiset files
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Elementary-abelian analysis over Q8 x C_p^d
    Pgeometry { groupspec: String, multiset: PathBuf },
    /// Run the built-in verification suites
    Selftest {
        #[arg(long, default_value_t = 0xcab1e5eed)]
        seed: u64,
    },
}

enum CliError {
    Domain(String),
    Inconsistency(String),
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<SpectraError> for CliError {
    fn from(e: SpectraError) -> Self {
        match e {
            SpectraError::DualPathMismatch { .. } => CliError::Inconsistency(e.to_string()),
            other => CliError::Domain(other.to_string()),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<DiophantineError> for CliError {
    fn from(e: DiophantineError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Spectra(inner) => inner.into(),
            VerifyError::Oracle(inner) => inner.into(),
        }
    }
}

fn load_multiset(spec: &GroupSpec, path: &Path) -> Result<GMultiset, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Domain(format!("cannot read {}: {e}", path.display())))?;
    Ok(parse_multiset(spec, &text)?)
}

fn cone_failure_text(sub: &GroupSpec, failure: &ConeFailure) -> String {
    format!(
        "mu({}) = {} but mu({}) = {} on one atom",
        format_element(sub, &failure.witness.0),
        failure.multiplicities.0,
        format_element(sub, &failure.witness.1),
        failure.multiplicities.1
    )
}

/// One-line reason for the first failing condition of a report.
fn failure_reason(sub: &GroupSpec, report: &HamiltonianReport) -> String {
    if let Some(w) = &report.cond_i_witness {
        return format!(
            "condition (i) fails at B_{}: {}",
            w.q.symbol(),
            cone_failure_text(sub, &w.failure)
        );
    }
    if let Some(w) = &report.cond_ii_witness {
        return format!(
            "condition (ii) fails at B_{} + B_{}: {}",
            w.q.symbol(),
            w.q.negate().symbol(),
            cone_failure_text(sub, &w.failure)
        );
    }
    if let Some(entry) = report.cond_iii_witness() {
        return match &entry.h_rational {
            Some(h) => format!(
                "condition (iii) fails at character {}: h = {} is not a negative perfect square",
                entry.label(),
                h
            ),
            None => format!(
                "condition (iii) fails at character {}: h = {} is not a rational integer",
                entry.label(),
                entry.h
            ),
        };
    }
    "no failing condition".into()
}

fn cmd_atoms(groupspec: &str) -> Result<(), CliError> {
    let spec = parse_group_spec(groupspec)?;
    let partition = atom_partition(&spec);
    for class in partition.classes() {
        let members: Vec<String> = class.iter().map(|x| format_element(&spec, x)).collect();
        println!("{{{}}}", members.join(","));
    }
    Ok(())
}

fn cmd_spectrum(groupspec: &str, path: &Path) -> Result<(), CliError> {
    let spec = parse_group_spec(groupspec)?;
    let s = load_multiset(&spec, path)?;
    let sp = spectrum(&spec, &s)?;
    let verdict = if sp.is_integral() { "INTEGRAL" } else { "NOT INTEGRAL" };
    println!("{verdict}; spectrum: {}", sp.render_line());
    Ok(())
}

fn cmd_check(groupspec: &str, path: &Path) -> Result<(), CliError> {
    let spec = parse_group_spec(groupspec)?;
    let s = load_multiset(&spec, path)?;
    let in_cone = cone_decompose(&spec, &s).is_ok();
    let cone_text = if in_cone { "S in C(G)" } else { "S NOT in C(G)" };
    if spec.is_quaternion_product() {
        let report = hamiltonian_conditions(&spec, &s)?;
        if report.overall {
            println!("INTEGRAL (conditions i,ii,iii hold); {cone_text}");
        } else {
            let sub = spec.abelian_subspec();
            println!("NOT INTEGRAL ({}); {cone_text}", failure_reason(&sub, &report));
        }
    } else {
        let group = spec.abelian_part();
        let integral = is_integral_abelian(group, &s)?;
        if integral {
            println!("INTEGRAL (all character sums are rational integers); {cone_text}");
        } else {
            let ctx = CycContext::new(group.exponent());
            let witness = characters(group)
                .into_iter()
                .find_map(|chi| {
                    let sum = char_sum(group, &ctx, &chi, &s);
                    if ctx.as_rational_integer(&sum).is_none() {
                        Some((chi, sum))
                    } else {
                        None
                    }
                })
                .expect("a non-integral abelian multiset has an irrational character sum");
            println!(
                "NOT INTEGRAL (character sum at {} is not a rational integer: {}); {cone_text}",
                witness.0.label(),
                witness.1
            );
        }
    }
    Ok(())
}

fn cmd_hamiltonian(groupspec: &str, path: Option<&Path>) -> Result<(), CliError> {
    let spec = parse_group_spec(groupspec)?;
    let Some(path) = path else {
        println!("hamiltonian: {}", spec.is_hamiltonian());
        return Ok(());
    };
    let s = load_multiset(&spec, path)?;
    let report = hamiltonian_conditions(&spec, &s)?;
    let sub = spec.abelian_subspec();
    println!(
        "group: {} (hamiltonian: {})",
        format_group_spec(&spec),
        spec.is_hamiltonian()
    );
    match &report.cond_i_witness {
        None => println!("condition (i): PASS"),
        Some(w) => println!(
            "condition (i): FAIL (B_{}: {})",
            w.q.symbol(),
            cone_failure_text(&sub, &w.failure)
        ),
    }
    match &report.cond_ii_witness {
        None => println!("condition (ii): PASS"),
        Some(w) => println!(
            "condition (ii): FAIL (B_{} + B_{}: {})",
            w.q.symbol(),
            w.q.negate().symbol(),
            cone_failure_text(&sub, &w.failure)
        ),
    }
    println!("condition (iii): {}", if report.cond_iii { "PASS" } else { "FAIL" });
    for entry in &report.characters {
        match (&entry.h_rational, &entry.alpha) {
            (Some(h), Some(alpha)) => println!("  {}: h = {h}; alpha = {alpha}", entry.label()),
            (Some(h), None) => println!(
                "  {}: h = {h} is not a negative perfect square",
                entry.label()
            ),
            (None, _) => println!(
                "  {}: h = {} is not a rational integer",
                entry.label(),
                entry.h
            ),
        }
    }
    println!(
        "overall: {}",
        if report.overall { "INTEGRAL" } else { "NOT INTEGRAL" }
    );
    Ok(())
}

fn cmd_oracle(groupspec: &str, path: &Path, charpoly: bool) -> Result<(), CliError> {
    let spec = parse_group_spec(groupspec)?;
    let s = load_multiset(&spec, path)?;
    let verdict = oracle_check(&spec, &s)?;
    if charpoly {
        let coeffs: Vec<String> = verdict
            .char_poly
            .coefficients()
            .iter()
            .map(|c| c.to_string())
            .collect();
        println!("charpoly coefficients (constant first): {}", coeffs.join(" "));
    }
    match verdict.spectrum {
        Some(eigenvalues) => {
            let parts: Vec<String> = eigenvalues
                .iter()
                .map(|(v, m)| format!("{v} x{m}"))
                .collect();
            println!("INTEGRAL; spectrum: {}", parts.join("; "));
        }
        None => println!("NOT INTEGRAL"),
    }
    Ok(())
}

fn cmd_counterexample(p: u64, count: usize, bound: u64, out: &Path) -> Result<(), CliError> {
    match p {
        5 => {
            println!("p = 5: building from primitive solutions of x^2 + y^2 = 5*z^2");
            let solutions = normalized_solutions_5(count);
            for (idx, sol) in solutions.iter().enumerate() {
                let (spec, s) = build_counterexample_5(sol)?;
                let path = out.join(format!("counterexample_p5_{}.ms", idx + 1));
                let mut text = format!(
                    "# x^2 + y^2 = 5 z^2 solution (m, n, alpha) = ({}, {}, {})\n",
                    sol.x, sol.y, sol.z
                );
                text.push_str(&format_multiset(&spec, &s));
                std::fs::write(&path, text)
                    .map_err(|e| CliError::Domain(format!("cannot write {}: {e}", path.display())))?;
                let verified = verify_counterexample(&spec, &s)?;
                let report = hamiltonian_conditions(&spec, &s)?;
                let expected_alpha = BigInt::from(10 * sol.z);
                let alpha_ok = report
                    .characters
                    .iter()
                    .filter(|c| c.index.iter().any(|&a| a != 0))
                    .all(|c| c.alpha.as_ref() == Some(&expected_alpha));
                let in_cone = cone_decompose(&spec, &s).is_ok();
                println!(
                    "solution (m,n,alpha) = ({},{},{}): wrote {}; total(S) = {}; integral: {}; S in C(G): {}; alpha_lambda = 10*alpha = {} at all non-principal characters: {}; {}",
                    sol.x,
                    sol.y,
                    sol.z,
                    path.display(),
                    s.total(),
                    report.overall,
                    in_cone,
                    expected_alpha,
                    alpha_ok,
                    if verified && alpha_ok { "VERIFIED" } else { "NOT VERIFIED" }
                );
            }
            Ok(())
        }
        7 => {
            println!(
                "p = 7: searching primitive solutions of x^2 + y^2 + z^2 = 7*alpha^2 with alpha <= {bound}"
            );
            let sols = solutions_three_squares(7, bound);
            if sols.is_empty() {
                println!(
                    "no primitive solutions exist: 7*alpha^2 always has the form 4^a*(8b+7), \
                     which is never a sum of three squares; no counterexamples are emitted on this route"
                );
                Ok(())
            } else {
                Err(CliError::Inconsistency(
                    "three-square search for p = 7 returned a solution".into(),
                ))
            }
        }
        other => Err(CliError::Domain(format!(
            "counterexample families are implemented for p = 5 and probed for p = 7, got p = {other}"
        ))),
    }
}

fn cmd_pgeometry(groupspec: &str, path: &Path) -> Result<(), CliError> {
    let spec = parse_group_spec(groupspec)?;
    let s = load_multiset(&spec, path)?;
    let report = elementary_abelian_analysis(&spec, &s)?;
    println!("group: {}", format_group_spec(&spec));
    println!(
        "identity coefficient T(e) = {}; expected {}; {}",
        report.identity_coefficient,
        report.expected_identity_coefficient,
        if report.identity_ok { "PASS" } else { "FAIL" }
    );
    println!(
        "off-identity coefficient sum = {}; expected {}; {}",
        report.off_identity_sum,
        -&report.expected_identity_coefficient,
        if report.coefficient_sum_ok { "PASS" } else { "FAIL" }
    );
    if report.atom_constant {
        println!("coefficients constant on atoms: yes");
        let values: Vec<String> = report.atom_values.iter().map(|b| b.to_string()).collect();
        println!("atom values b_r: {}", values.join(", "));
        for h in &report.hyperplanes {
            let index: Vec<String> = h.character_index.iter().map(|a| a.to_string()).collect();
            match &h.alpha {
                Some(alpha) => println!(
                    "hyperplane ker a=({}): alpha^2 = {}; perfect square: yes (alpha = {alpha})",
                    index.join(","),
                    h.alpha_squared
                ),
                None => println!(
                    "hyperplane ker a=({}): alpha^2 = {}; perfect square: no",
                    index.join(","),
                    h.alpha_squared
                ),
            }
        }
        println!(
            "all alpha^2 perfect squares: {}",
            if report.all_squares { "yes" } else { "no" }
        );
    } else {
        let (x, y, vx, vy) = report.nonconstant_witness.as_ref().expect("witness recorded");
        let sub = spec.abelian_subspec();
        println!(
            "coefficients constant on atoms: no (a_{} = {vx} but a_{} = {vy})",
            format_element(&sub, x),
            format_element(&sub, y)
        );
    }
    Ok(())
}

fn cmd_selftest(seed: u64) -> Result<(), CliError> {
    let outcomes = run_selftest(seed);
    let mut all_passed = true;
    for o in &outcomes {
        println!(
            "suite {}: {} ({})",
            o.name,
            if o.passed { "PASS" } else { "FAIL" },
            o.detail
        );
        all_passed &= o.passed;
    }
    if all_passed {
        println!("selftest: ALL PASS (seed {seed})");
        Ok(())
    } else {
        println!("selftest: FAILURES (seed {seed})");
        Err(CliError::Domain("selftest failed".into()))
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Atoms { groupspec } => cmd_atoms(&groupspec),
        Command::Spectrum { groupspec, multiset } => cmd_spectrum(&groupspec, &multiset),
        Command::Check { groupspec, multiset } => cmd_check(&groupspec, &multiset),
        Command::Hamiltonian { groupspec, multiset } => {
            cmd_hamiltonian(&groupspec, multiset.as_deref())
        }
        Command::Oracle { groupspec, multiset, charpoly } => {
            cmd_oracle(&groupspec, &multiset, charpoly)
        }
        Command::Counterexample { p, count, bound, out } => {
            cmd_counterexample(p, count, bound, &out)
        }
        Command::Pgeometry { groupspec, multiset } => cmd_pgeometry(&groupspec, &multiset),
        Command::Selftest { seed } => cmd_selftest(seed),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    return ExitCode::SUCCESS;
                }
                _ => {
                    eprint!("{e}");
                    return ExitCode::from(1);
                }
            }
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Inconsistency(msg)) => {
            eprintln!("internal inconsistency: {msg}");
            ExitCode::from(2)
        }
    }
}
