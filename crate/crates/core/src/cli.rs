//! The `hsg` command line. Every invocation prints a report whose last line
//! is `result: <token>`, and exits with 0 (success or true), 1 (false or not
//! found), 2 (bad input) or 3 (search budget exhausted).

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::algebra::{parse_semigroup, FiniteSemigroup, Group, ObstructionReport};
use crate::catalog;
use crate::clifford::{embed_clifford, verify_certificate, EmbeddingCertificate};
use crate::constructions::{
    attach_zero, brandt, direct_product, holomorph, rees_quotient, semidirect_product, GroupAction,
};
use crate::error::{Error, Result};
use crate::hyperspace::{classify_subset, PowerSemigroup};
use crate::search::{find_embedding, SearchBudget, SearchOutcome};
use crate::subset::Subset;

#[derive(Parser, Debug)]
#[command(
    name = "hsg",
    version,
    about = "Finite semigroups and their embeddings into power semigroups of groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Class flags, idempotents and their order.
    Classify {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The power semigroup of a group.
    Exp {
        group: PathBuf,
        /// Also classify every subset by its coset decomposition.
        #[arg(long)]
        classify_elements: bool,
        /// Largest group order to tabulate (default from HSG_MAX_TABLE, 12).
        #[arg(long)]
        max_order: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Embedding certificate for a Clifford inverse semigroup.
    EmbedClifford {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Backtracking search for an embedding of S into T.
    SearchEmbed {
        source: PathBuf,
        target: PathBuf,
        #[arg(long, default_value_t = SearchBudget::default().max_nodes)]
        max_nodes: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a derived semigroup table.
    Construct {
        #[command(subcommand)]
        what: Construction,
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Re-check an embedding certificate against its source table.
    VerifyCert {
        certificate: PathBuf,
        source: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Necessary conditions for embedding into a power semigroup.
    Obstruct {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum Construction {
    /// Brandt semigroup over a group with KAPPA indices.
    Brandt { group: PathBuf, kappa: usize },
    /// Attach a zero.
    Zero { file: PathBuf },
    /// Semidirect product by a group action (`g: p0 p1 ...` per line).
    Semidirect {
        semigroup: PathBuf,
        group: PathBuf,
        action: PathBuf,
    },
    /// Semidirect product with the automorphism group.
    Holomorph { file: PathBuf },
    /// Direct product of one or more tables.
    Product {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// The three-element semilattice {e, f, ef}.
    E3,
    /// Rees quotient by an ideal given as `{i,j,...}`.
    Rees { file: PathBuf, ideal: String },
}

/// What a verb produced.
struct Outcome {
    code: i32,
    token: &'static str,
    /// A table or certificate; written to `--out` when given.
    artifact: Option<String>,
    report: String,
}

impl Outcome {
    fn report(code: i32, token: &'static str, report: String) -> Self {
        Outcome {
            code,
            token,
            artifact: None,
            report,
        }
    }

    fn artifact(artifact: String, report: String) -> Self {
        Outcome {
            code: 0,
            token: "ok",
            artifact: Some(artifact),
            report,
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code with everything meant for standard output.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let token = if code == 0 { "ok" } else { "usage-error" };
            return (code, format!("{}result: {token}\n", e.render()));
        }
    };
    let out = match &cli.command {
        Command::Classify { out, .. }
        | Command::Exp { out, .. }
        | Command::EmbedClifford { out, .. }
        | Command::SearchEmbed { out, .. }
        | Command::Construct { out, .. }
        | Command::VerifyCert { out, .. }
        | Command::Obstruct { out, .. } => out.clone(),
    };
    let outcome = match dispatch(cli.command) {
        Ok(o) => o,
        Err(e) => return (2, format!("error: {e}\nresult: error\n")),
    };
    let mut stdout = String::new();
    match out {
        Some(path) => {
            let body = match &outcome.artifact {
                Some(a) => {
                    stdout.push_str(&outcome.report);
                    a.clone()
                }
                None => outcome.report.clone(),
            };
            if let Err(e) = std::fs::write(&path, body) {
                return (
                    2,
                    format!("error: cannot write {}: {e}\nresult: error\n", path.display()),
                );
            }
            let _ = writeln!(stdout, "wrote {}", path.display());
        }
        None => {
            if let Some(a) = &outcome.artifact {
                stdout.push_str(a);
            }
            stdout.push_str(&outcome.report);
        }
    }
    let _ = writeln!(stdout, "result: {}", outcome.token);
    (outcome.code, stdout)
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("cannot read {}: {e}", path.display())))
}

fn load(path: &Path) -> Result<FiniteSemigroup> {
    parse_semigroup(&read(path)?).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn load_group(path: &Path) -> Result<Group> {
    Group::new(load(path)?)
}

fn dispatch(command: Command) -> Result<Outcome> {
    match command {
        Command::Classify { file, .. } => classify(&load(&file)?),
        Command::Exp {
            group,
            classify_elements,
            max_order,
            ..
        } => exp(&group, classify_elements, max_order),
        Command::EmbedClifford { file, .. } => embed(&load(&file)?),
        Command::SearchEmbed {
            source,
            target,
            max_nodes,
            ..
        } => search_embed(&load(&source)?, &load(&target)?, max_nodes),
        Command::Construct { what, .. } => construct(what),
        Command::VerifyCert {
            certificate, source, ..
        } => verify(&read(&certificate)?, &load(&source)?),
        Command::Obstruct { file, .. } => obstruct(&load(&file)?),
    }
}

fn labels(s: &FiniteSemigroup, xs: &[usize]) -> String {
    if xs.is_empty() {
        return "none".into();
    }
    xs.iter().map(|&x| s.label(x)).collect::<Vec<_>>().join(" ")
}

fn classify(s: &FiniteSemigroup) -> Result<Outcome> {
    let mut r = String::new();
    let _ = writeln!(r, "elements: {}", s.len());
    let _ = writeln!(r, "flags: {}", s.class_flags());
    let poset = s.idempotent_poset();
    let _ = writeln!(r, "idempotents: {}", labels(s, poset.idempotents()));
    let relations: Vec<String> = poset
        .strict_relations()
        .iter()
        .map(|&(e, f)| format!("{}<{}", s.label(e), s.label(f)))
        .collect();
    let _ = writeln!(
        r,
        "order: {}",
        if relations.is_empty() {
            "none".into()
        } else {
            relations.join(" ")
        }
    );
    let groups: Vec<String> = poset
        .idempotents()
        .iter()
        .map(|&e| format!("{}:{}", s.label(e), s.maximal_subgroup(e).map_or(0, |h| h.count())))
        .collect();
    let _ = writeln!(r, "maximal subgroup orders: {}", groups.join(" "));
    Ok(Outcome::report(0, "ok", r))
}

fn exp(path: &Path, classify_elements: bool, max_order: Option<usize>) -> Result<Outcome> {
    let g = load_group(path)?;
    let p = match max_order {
        Some(m) => PowerSemigroup::with_max_order(&g, m)?,
        None => PowerSemigroup::new(&g)?,
    };
    let artifact = format!(
        "# exp of {} order {}\n{}",
        path.display(),
        g.len(),
        p.semigroup().to_cayley()
    );
    let mut r = String::new();
    if classify_elements {
        for k in p.subsets() {
            let c = classify_subset(&g, &k)?;
            let text = match (&c.coset, c.is_idempotent, c.is_group_element) {
                (_, true, _) => "idempotent".to_string(),
                (Some((h, _)), false, true) => format!("group element (coset of {h})"),
                (Some((h, x)), false, false) => format!(
                    "regular (coset of {h} by {x}, inverse {})",
                    c.unique_inverse.as_ref().expect("cosets have inverses")
                ),
                (None, _, _) => "not regular".to_string(),
            };
            let _ = writeln!(r, "{k}: {text}");
        }
    }
    Ok(Outcome::artifact(artifact, r))
}

fn embed(s: &FiniteSemigroup) -> Result<Outcome> {
    match embed_clifford(s) {
        Ok(cert) => Ok(Outcome::artifact(cert.to_text(), String::new())),
        Err(Error::NotClifford(why)) => Ok(Outcome::report(
            1,
            "not-clifford",
            format!("not a Clifford inverse semigroup: {why}\n"),
        )),
        Err(e) => Err(e),
    }
}

fn search_embed(s: &FiniteSemigroup, t: &FiniteSemigroup, max_nodes: u64) -> Result<Outcome> {
    let outcome = find_embedding(s, t, SearchBudget::nodes(max_nodes))?;
    let mut r = String::new();
    let _ = writeln!(r, "outcome: {}", outcome.token());
    let code = match &outcome {
        SearchOutcome::Found(m) => {
            for (x, &y) in m.map().iter().enumerate() {
                let _ = writeln!(r, "{x} -> {y} ({} -> {})", s.label(x), t.label(y));
            }
            0
        }
        SearchOutcome::NoneExhaustive => 1,
        SearchOutcome::NoneBudget => 3,
    };
    Ok(Outcome {
        code,
        token: outcome.token(),
        artifact: None,
        report: r,
    })
}

fn construct(what: Construction) -> Result<Outcome> {
    let (description, table) = match what {
        Construction::Brandt { group, kappa } => (
            format!("brandt of {} kappa {kappa}", group.display()),
            brandt(&load_group(&group)?, kappa)?,
        ),
        Construction::Zero { file } => (
            format!("zero attached to {}", file.display()),
            attach_zero(&load(&file)?)?,
        ),
        Construction::Semidirect {
            semigroup,
            group,
            action,
        } => {
            let act = GroupAction::parse(load_group(&group)?, load(&semigroup)?, &read(&action)?)?;
            (
                format!("semidirect product of {} by {}", semigroup.display(), group.display()),
                semidirect_product(&act)?,
            )
        }
        Construction::Holomorph { file } => (format!("holomorph of {}", file.display()), holomorph(&load(&file)?)?),
        Construction::Product { files } => {
            let parts = files.iter().map(|f| load(f)).collect::<Result<Vec<_>>>()?;
            let refs: Vec<&FiniteSemigroup> = parts.iter().collect();
            let names: Vec<String> = files.iter().map(|f| f.display().to_string()).collect();
            (format!("product of {}", names.join(" ")), direct_product(&refs)?)
        }
        Construction::E3 => ("semilattice e3".into(), catalog::e3()),
        Construction::Rees { file, ideal } => {
            let s = load(&file)?;
            let i = Subset::parse(s.len(), &ideal)?;
            (
                format!("rees quotient of {} by {ideal}", file.display()),
                rees_quotient(&s, &i)?,
            )
        }
    };
    Ok(Outcome::artifact(
        format!("# {description}\n{}", table.to_cayley()),
        String::new(),
    ))
}

fn verify(text: &str, s: &FiniteSemigroup) -> Result<Outcome> {
    let cert = EmbeddingCertificate::parse(text, s)?;
    let report = verify_certificate(&cert)?;
    let mut r = format!("{report}\n");
    if let Some(h) = &report.tightened_target {
        let _ = writeln!(r, "tightened target: {h}");
    }
    Ok(if report.passed() {
        Outcome::report(0, "verified", r)
    } else {
        Outcome::report(1, "failed", r)
    })
}

fn obstruct(s: &FiniteSemigroup) -> Result<Outcome> {
    let report = s.class_h_obstructions();
    let mut r = String::new();
    for v in report.violations() {
        let _ = writeln!(r, "{}", v.describe(s));
    }
    let _ = writeln!(r, "{report}");
    Ok(match report {
        ObstructionReport::NotApplicable => Outcome::report(0, "not-applicable", r),
        _ if report.is_clear() => Outcome::report(0, "no-obstruction", r),
        _ => Outcome::report(1, "obstructed", r),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn write(dir: &Path, name: &str, s: &FiniteSemigroup) -> String {
        let p = dir.join(name);
        std::fs::write(&p, s.to_cayley()).unwrap();
        p.display().to_string()
    }

    fn hsg(args: &[&str]) -> (i32, String) {
        run(std::iter::once("hsg").chain(args.iter().copied()))
    }

    #[test]
    fn classify_brandt() {
        let dir = tempfile::tempdir().unwrap();
        let f = write(dir.path(), "b.cay", &catalog::brandt_z1_2());
        let (code, out) = hsg(&["classify", &f]);
        assert_eq!(code, 0);
        assert!(out.contains("inverse=yes clifford=no"));
        assert!(out.ends_with("result: ok\n"));
    }

    #[test]
    fn exp_classifies_z2() {
        let dir = tempfile::tempdir().unwrap();
        let f = write(dir.path(), "z2.cay", catalog::cyclic(2).semigroup());
        let (code, out) = hsg(&["exp", &f, "--classify-elements"]);
        assert_eq!(code, 0);
        assert!(out.contains("{0}: idempotent\n{1}: group element (coset of {0})\n{0,1}: idempotent\n"));
        assert!(out.starts_with("# exp of "));
    }

    #[test]
    fn obstruct_exit_codes() {
        let dir = tempfile::tempdir().unwrap();
        let b = write(dir.path(), "b.cay", &catalog::brandt_z1_2());
        let (code, out) = hsg(&["obstruct", &b]);
        assert_eq!(code, 1);
        assert!(out.contains("violation square-inverse-idempotent: x=(0,e,1)"));
        let z = write(dir.path(), "z.cay", &catalog::z2_zero());
        assert_eq!(hsg(&["obstruct", &z]).0, 0);
    }

    #[test]
    fn input_errors_exit_2() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("bad.cay");
        std::fs::write(&p, "2\n1 0\n0 0\n").unwrap();
        let (code, out) = hsg(&["classify", p.to_str().unwrap()]);
        assert_eq!(code, 2);
        assert!(out.contains("not associative"));
        assert!(out.ends_with("result: error\n"));
        assert_eq!(hsg(&["frobnicate"]).0, 2);
        assert_eq!(hsg(&["classify", "/nonexistent/file.cay"]).0, 2);
    }

    #[test]
    fn out_writes_parseable_files() {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("e3.cay");
        let (code, stdout) = hsg(&["construct", "e3", "--out", out.to_str().unwrap()]);
        assert_eq!(code, 0);
        assert!(stdout.ends_with("result: ok\n"));
        let parsed = parse_semigroup(&std::fs::read_to_string(&out).unwrap()).unwrap();
        assert_eq!(parsed, catalog::e3());
    }
}
