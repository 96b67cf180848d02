//! Command dispatch. Exit codes: 0 when every check passes, 1 when a
//! claim fails, 2 on usage, parse, or resource errors.

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use classprod::classes::{all_classes, eta_of_class_square};
use classprod::constructions;
use classprod::table::format_table;
use classprod::theorems::{self, TheoremReport};
use classprod::{Element, Group, Limits};

use crate::elem::parse_element;
use crate::expr::{parse_group_expr, resolve, ResolvedGroup};
use crate::output::{render_reports, Format, OutputRecord};
use crate::{CliError, CliResult};

#[derive(Parser, Debug)]
#[command(name = "classprod", version, about = "conjugacy-class product computations in finite groups")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "human")]
    pub format: Format,

    /// Largest group order allowed for full enumeration.
    #[arg(long, global = true, env = "CLASSPROD_MAX_ENUMERATE")]
    pub max_enumerate: Option<u64>,

    /// Cap on conjugation-orbit size.
    #[arg(long, global = true, env = "CLASSPROD_MAX_ORBIT")]
    pub max_orbit: Option<usize>,

    /// Cap on class-product pair expansion.
    #[arg(long, global = true, env = "CLASSPROD_MAX_PRODUCT")]
    pub max_product: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Class sizes and eta of class squares for one element or all classes.
    Analyze {
        #[arg(long)]
        group: String,
        #[arg(long, conflicts_with = "all_classes")]
        element: Option<String>,
        #[arg(long)]
        all_classes: bool,
    },
    /// Run a named claim verifier.
    Verify {
        /// One of: A, B, C, lemma1, lemma5.1, prop5.4, remark-a, remark-b, tower.
        #[arg(long)]
        claim: String,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        group: Option<String>,
        #[arg(long)]
        element: Option<String>,
        #[arg(long)]
        base: Option<String>,
    },
    /// Print the finite set S_n.
    Sn {
        #[arg(long)]
        n: u64,
    },
    /// Theorem A and Theorem C sweeps over the standard corpus.
    Sweep {
        #[arg(long, default_value = "default")]
        corpus: String,
    },
    /// Write the Cayley table of an enumerable group.
    ExportTable {
        #[arg(long)]
        group: String,
        #[arg(long)]
        out: PathBuf,
    },
}

impl Cli {
    pub fn limits(&self) -> Limits {
        let mut limits = Limits::default();
        if let Some(v) = self.max_enumerate {
            limits.max_enumerate = v;
        }
        if let Some(v) = self.max_orbit {
            limits.max_orbit = v;
        }
        if let Some(v) = self.max_product {
            limits.max_product_pairs = v;
        }
        limits
    }
}

pub fn run(cli: &Cli) -> u8 {
    let limits = cli.limits();
    match dispatch(cli, &limits) {
        Ok((text, all_passed)) => {
            println!("{text}");
            if all_passed {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn dispatch(cli: &Cli, limits: &Limits) -> CliResult<(String, bool)> {
    match &cli.command {
        Command::Analyze {
            group,
            element,
            all_classes,
        } => analyze(cli.format, group, element.as_deref(), *all_classes, limits),
        Command::Verify {
            claim,
            p,
            n,
            group,
            element,
            base,
        } => verify(
            cli.format,
            claim,
            *p,
            *n,
            group.as_deref(),
            element.as_deref(),
            base.as_deref(),
            limits,
        ),
        Command::Sn { n } => sn(cli.format, *n),
        Command::Sweep { corpus } => sweep(cli.format, corpus, limits),
        Command::ExportTable { group, out } => export_table(cli.format, group, out, limits),
    }
}

fn resolve_text(text: &str, limits: &Limits) -> CliResult<ResolvedGroup> {
    resolve(&parse_group_expr(text)?, limits)
}

fn analyze(
    format: Format,
    group_text: &str,
    element: Option<&str>,
    all: bool,
    limits: &Limits,
) -> CliResult<(String, bool)> {
    let resolved = resolve_text(group_text, limits)?;
    let mut params = BTreeMap::new();
    params.insert("group".to_string(), group_text.to_string());
    let mut rows: Vec<(Element, usize, usize)> = Vec::new();
    if all {
        for class in all_classes(&resolved.group, limits)? {
            let stats = eta_of_class_square(&resolved.group, &class.rep, limits)?;
            rows.push((class.rep, stats.class_size, stats.eta));
        }
    } else {
        let text = element
            .ok_or_else(|| CliError::Usage("analyze needs --element or --all-classes".into()))?;
        params.insert("element".to_string(), text.to_string());
        let a = parse_element(&resolved.group, resolved.distinguished.as_ref(), text)?;
        let stats = eta_of_class_square(&resolved.group, &a, limits)?;
        rows.push((a, stats.class_size, stats.eta));
    }
    let text = match format {
        Format::Human => rows
            .iter()
            .map(|(rep, size, eta)| format!("class rep={rep} size={size} eta={eta}"))
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Json => {
            let payload = serde_json::json!({
                "classes": rows
                    .iter()
                    .map(|(rep, size, eta)| serde_json::json!({
                        "rep": rep.to_string(),
                        "size": size,
                        "eta": eta,
                    }))
                    .collect::<Vec<_>>(),
            });
            serde_json::to_string_pretty(&OutputRecord::new("analyze", params, payload))
                .expect("serialize")
        }
    };
    Ok((text, true))
}

fn need_p(p: Option<u64>) -> CliResult<u64> {
    p.ok_or_else(|| CliError::Usage("this claim needs --p".into()))
}

#[allow(clippy::too_many_arguments)]
fn verify(
    format: Format,
    claim: &str,
    p: Option<u64>,
    n: Option<u64>,
    group: Option<&str>,
    element: Option<&str>,
    base: Option<&str>,
    limits: &Limits,
) -> CliResult<(String, bool)> {
    let mut params = BTreeMap::new();
    params.insert("claim".to_string(), claim.to_string());
    let reports: Vec<TheoremReport> = match claim {
        "A" => {
            let group_text =
                group.ok_or_else(|| CliError::Usage("claim A needs --group".into()))?;
            let resolved = resolve_text(group_text, limits)?;
            let a = match element {
                Some(text) => parse_element(&resolved.group, resolved.distinguished.as_ref(), text)?,
                None => resolved.distinguished.clone().ok_or_else(|| {
                    CliError::Usage("claim A needs --element for this group".into())
                })?,
            };
            vec![theorems::verify_theorem_a(&resolved.group, &a, limits)?]
        }
        "B" => {
            // Default corpus: Heisenberg(3) x Q8.
            let parts = vec![
                constructions::heisenberg(3)?,
                constructions::catalog_entry("q8")?,
            ];
            vec![theorems::verify_theorem_b(&parts, n.unwrap_or(6), limits)?]
        }
        "C" => {
            let group_text =
                group.ok_or_else(|| CliError::Usage("claim C needs --group".into()))?;
            let resolved = resolve_text(group_text, limits)?;
            vec![theorems::verify_theorem_c(&resolved.group, limits)?]
        }
        "lemma1" => {
            let group_text =
                group.ok_or_else(|| CliError::Usage("claim lemma1 needs --group".into()))?;
            let resolved = resolve_text(group_text, limits)?;
            lemma1_sweep(&resolved.group, limits)?
        }
        "lemma5.1" => {
            let base_text =
                base.ok_or_else(|| CliError::Usage("claim lemma5.1 needs --base".into()))?;
            let resolved = resolve_text(base_text, limits)?;
            let distinguished = resolved.distinguished.clone().ok_or_else(|| {
                CliError::Usage("the base expression has no distinguished element".into())
            })?;
            let inst = constructions::FamilyInstance {
                group: resolved.group,
                distinguished,
                family_name: resolved.label.clone(),
                params: Vec::new(),
            };
            vec![theorems::verify_construction_lemma(
                &inst,
                need_p(p)?,
                limits,
            )?]
        }
        "prop5.4" => vec![theorems::verify_prop_notforsuper(need_p(p)?, limits)?],
        "remark-a" => vec![theorems::verify_remark_a(need_p(p)?, limits)?],
        "remark-b" => vec![theorems::verify_remark_b(need_p(p)?, limits)?],
        "tower" => {
            let n = n.ok_or_else(|| CliError::Usage("claim tower needs --n".into()))?;
            vec![theorems::verify_tower(need_p(p)?, n, limits)?]
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown claim {other:?}; expected A, B, C, lemma1, lemma5.1, prop5.4, remark-a, remark-b, or tower"
            )))
        }
    };
    let all_passed = reports.iter().all(TheoremReport::passed);
    Ok((render_reports(format, "verify", params, &reports), all_passed))
}

/// Every central element of prime order paired with every class
/// representative a and b = a^-1.
fn lemma1_sweep(group: &Group, limits: &Limits) -> CliResult<Vec<TheoremReport>> {
    let mut reports = Vec::new();
    let identity = group.identity().clone();
    for z in group.center(limits)? {
        if z == identity {
            continue;
        }
        if !classprod::spec::is_prime(group.element_order(&z)?) {
            continue;
        }
        for class in all_classes(group, limits)? {
            let b = group.invert(&class.rep)?;
            reports.push(theorems::verify_lemma1(group, &z, &class.rep, &b, limits)?);
        }
    }
    if reports.is_empty() {
        return Err(CliError::Usage(
            "the group has no central element of prime order".into(),
        ));
    }
    Ok(reports)
}

fn sn(format: Format, n: u64) -> CliResult<(String, bool)> {
    let sn = theorems::compute_sn(n);
    let text = match format {
        Format::Human => sn
            .values
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(" "),
        Format::Json => {
            let mut params = BTreeMap::new();
            params.insert("n".to_string(), n.to_string());
            serde_json::to_string_pretty(&OutputRecord::new(
                "sn",
                params,
                serde_json::json!({ "values": sn.values }),
            ))
            .expect("serialize")
        }
    };
    Ok((text, true))
}

/// Theorem A over every class of every corpus group, Theorem C per
/// group, plus the tight tower and remark instances.
fn sweep(format: Format, corpus: &str, limits: &Limits) -> CliResult<(String, bool)> {
    if corpus != "default" {
        return Err(CliError::Usage(format!("unknown corpus {corpus:?}")));
    }
    let mut reports = Vec::new();
    for inst in constructions::catalog()? {
        for class in all_classes(&inst.group, limits)? {
            let mut report = theorems::verify_theorem_a(&inst.group, &class.rep, limits)?;
            report
                .params
                .insert("group".to_string(), inst.family_name.clone());
            reports.push(report);
        }
        let mut report = theorems::verify_theorem_c(&inst.group, limits)?;
        report
            .params
            .insert("group".to_string(), inst.family_name.clone());
        reports.push(report);
    }
    for (p, n) in [(2, 1), (2, 2), (3, 1), (3, 2)] {
        reports.push(theorems::verify_tower(p, n, limits)?);
    }
    for p in [2, 3] {
        reports.push(theorems::verify_remark_b(p, limits)?);
    }
    for p in [3, 5] {
        reports.push(theorems::verify_remark_a(p, limits)?);
    }
    let mut params = BTreeMap::new();
    params.insert("corpus".to_string(), corpus.to_string());
    let all_passed = reports.iter().all(TheoremReport::passed);
    Ok((render_reports(format, "sweep", params, &reports), all_passed))
}

fn export_table(
    format: Format,
    group_text: &str,
    out: &PathBuf,
    limits: &Limits,
) -> CliResult<(String, bool)> {
    let resolved = resolve_text(group_text, limits)?;
    let (n, table) = resolved.group.to_table(limits)?;
    std::fs::write(out, format_table(n, &table))?;
    let text = match format {
        Format::Human => format!("wrote order-{n} table to {}", out.display()),
        Format::Json => {
            let mut params = BTreeMap::new();
            params.insert("group".to_string(), group_text.to_string());
            params.insert("out".to_string(), out.display().to_string());
            serde_json::to_string_pretty(&OutputRecord::new(
                "export-table",
                params,
                serde_json::json!({ "order": n }),
            ))
            .expect("serialize")
        }
    };
    Ok((text, true))
}
