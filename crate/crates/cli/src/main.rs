use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use pbasic::altchar::alt_table;
use pbasic::basicsets::{
    construct_alt_basic, construct_sym_basic, construct_wreath_basic, verify_c_basic, verify_isometry_in,
    verify_osima_step_in, BasicSetClaim, CharLabel, IsometryReport,
};
use pbasic::decomp::{
    check_d_b, eps_column_action, eps_row_permutation, expansion_matrix, extract_dnp, relations_check,
    reorder_alt, transfer_to_alternating, wedge_shape, LabeledIntMatrix,
};
use pbasic::partitions::{from_core_quotient, p_core, p_quotient};
use pbasic::symchar::{p_blocks, sym_table};
use pbasic::wreath::{base_group_l, base_group_n, wreath_table};
use pbasic::{BlockDescriptor, MultiPartition, Partition};

const MAX_N: usize = 14;
const MAX_W: usize = 5;

#[derive(Parser)]
#[command(name = "pbasic", version, about = "Basic sets, character tables and decomposition data for S_n, A_n and wreath products")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Lift the size caps (n ≤ 14, w ≤ 5).
    #[arg(long, global = true)]
    force: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Sym,
    Alt,
    Wreath,
}

#[derive(Subcommand)]
enum Command {
    /// p-core of a partition.
    Core {
        partition: String,
        #[arg(long)]
        p: usize,
    },
    /// p-quotient of a partition, or with --core the partition with the given core and quotient.
    Quotient {
        input: String,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        core: Option<String>,
    },
    /// Bar partition of a self-conjugate partition.
    Bar { partition: String },
    /// Character table of S_n, A_n or (Z_p ⋊ Z_{p-1}) ≀ S_w.
    Chartable {
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        w: Option<usize>,
        /// Check both orthogonality relations.
        #[arg(long)]
        verify: bool,
    },
    /// p-blocks of S_n.
    Blocks {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
    },
    /// The basic set B_∅.
    Basicset {
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        w: Option<usize>,
        #[arg(long)]
        verify: bool,
    },
    /// Gram comparison between blocks of S_n and (Z_p ⋊ Z_{p-1}) ≀ S_w.
    Isometry {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        /// Only the block with this core.
        #[arg(long)]
        core: Option<String>,
    },
    /// Gram comparison between blocks of S_n and Z_p ≀ S_w.
    Osima {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        core: Option<String>,
    },
    /// Expansion matrix P_B of Irr(S_n) over B_∅ on p-regular classes.
    Expansion {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
    },
    /// ε-action on the columns of D_B.
    Epsaction {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// D_B and D'_{n,p} to the A_n matrix.
    Transfer {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        dprime: PathBuf,
    },
    /// Check an A_n matrix against D_B.
    Relations {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        alt: PathBuf,
    },
    /// Wedge-shape certificate, lifted to D'_{n,p} when given.
    Wedge {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        dprime: Option<PathBuf>,
    },
}

struct Report {
    text: String,
    json: Value,
    csv: Option<String>,
    ok: bool,
}

impl Report {
    fn new(text: String, json: Value) -> Self {
        Report { text, json, csv: None, ok: true }
    }

    fn failing(mut self, ok: bool) -> Self {
        self.ok = ok;
        self
    }

    fn with_csv(mut self, csv: String) -> Self {
        self.csv = Some(csv);
        self
    }
}

fn partition(s: &str) -> Result<Partition> {
    s.parse().with_context(|| format!("bad partition {s:?}"))
}

fn read_matrix(path: &Path) -> Result<LabeledIntMatrix> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    LabeledIntMatrix::parse(&text).with_context(|| format!("in {}", path.display()))
}

fn csv_of(write: impl FnOnce(&mut Vec<u8>) -> pbasic::Result<()>) -> Result<String> {
    let mut buf = Vec::new();
    write(&mut buf)?;
    Ok(String::from_utf8(buf)?)
}

fn need(v: Option<usize>, flag: &str) -> Result<usize> {
    v.with_context(|| format!("--{flag} is required"))
}

fn caps(force: bool, n: Option<usize>, w: Option<usize>) -> Result<()> {
    if force {
        return Ok(());
    }
    if let Some(n) = n.filter(|&n| n > MAX_N) {
        bail!("n = {n} exceeds {MAX_N}; pass --force to run anyway");
    }
    if let Some(w) = w.filter(|&w| w > MAX_W) {
        bail!("w = {w} exceeds {MAX_W}; pass --force to run anyway");
    }
    Ok(())
}

fn check_p(p: usize) -> Result<()> {
    if p < 2 {
        bail!("p must be at least 2");
    }
    Ok(())
}

fn labels(members: &[CharLabel]) -> Vec<String> {
    members.iter().map(|m| m.to_string()).collect()
}

fn matrix_report(m: &LabeledIntMatrix) -> Result<Report> {
    Ok(Report::new(m.to_string(), serde_json::to_value(m)?).with_csv(csv_of(|b| m.write_csv(b))?))
}

fn basic_set_report(claim: &BasicSetClaim, verify: bool) -> Result<Report> {
    let mut text = format!("group {}\nsize {}\nmembers {}\n", claim.group, claim.members.len(), labels(&claim.members).join(" "));
    let mut json = json!({ "claim": claim, "size": claim.members.len() });
    let mut ok = true;
    if verify {
        let verdict = verify_c_basic(claim, None)?;
        ok = verdict.holds;
        text.push_str(&format!("verified {}\nrank {}\n", verdict.holds, verdict.rank));
        for e in &verdict.expansions {
            let c: Vec<String> = e.coefficients.iter().map(|x| x.to_string()).collect();
            text.push_str(&format!("  {} = [{}]\n", e.character, c.join(" ")));
        }
        if let Some(w) = &verdict.witness {
            text.push_str(&format!("witness {}\n", serde_json::to_string(w)?));
        }
        json["verdict"] = serde_json::to_value(&verdict)?;
    }
    let csv: String = std::iter::once("member\n".to_string())
        .chain(claim.members.iter().map(|m| format!("\"{m}\"\n")))
        .collect();
    Ok(Report::new(text, json).with_csv(csv).failing(ok))
}

fn isometry_reports(n: usize, p: usize, core: Option<String>, osima: bool) -> Result<Report> {
    let core = core.as_deref().map(partition).transpose()?;
    let blocks: Vec<BlockDescriptor> = p_blocks(n, p)
        .into_iter()
        .filter(|b| b.weight > 0 && core.as_ref().is_none_or(|c| &b.core == c))
        .collect();
    if blocks.is_empty() {
        bail!("no block of positive weight matches");
    }
    let sym = sym_table(n);
    let mut reports: Vec<IsometryReport> = Vec::new();
    for b in &blocks {
        let base = if osima { base_group_l(p)? } else { base_group_n(p)? };
        let wt = wreath_table(&base, b.weight);
        reports.push(if osima { verify_osima_step_in(b, &sym, &wt)? } else { verify_isometry_in(b, &sym, &wt)? });
    }
    let mut text = String::new();
    for r in &reports {
        text.push_str(&format!(
            "block core ({}) weight {} -> {}: {}\n",
            r.block.core, r.block.weight, r.target, r.verdict
        ));
        for ((l, a), (s, c)) in r.bijection.iter().zip(r.signs.iter().zip(&r.candidate_signs)) {
            text.push_str(&format!("  {l} -> {a}  sign {s:+}  candidate {c:+}\n"));
        }
        text.push_str(&format!("  candidate signs consistent: {}\n", r.candidate_consistent));
        if let Some(v) = &r.violation {
            text.push_str(&format!("  violation at ({}, {}): {} vs {}\n", v.row, v.col, v.source, v.target));
        }
    }
    let ok = reports.iter().all(|r| r.verdict);
    Ok(Report::new(text, serde_json::to_value(&reports)?).failing(ok))
}

fn run(cli: Cli) -> Result<Report> {
    let force = cli.force;
    Ok(match cli.command {
        Command::Core { partition: s, p } => {
            check_p(p)?;
            let c = p_core(&partition(&s)?, p);
            Report::new(format!("{c}\n"), json!({ "core": c }))
        }
        Command::Quotient { input, p, core: None } => {
            check_p(p)?;
            let lambda = partition(&input)?;
            let (c, q) = (p_core(&lambda, p), p_quotient(&lambda, p));
            Report::new(format!("{q}\n"), json!({ "core": c, "quotient": q }))
        }
        Command::Quotient { input, p, core: Some(core) } => {
            check_p(p)?;
            let wrapped = if input.trim_start().starts_with('(') { input.clone() } else { format!("({input})") };
            let q: MultiPartition = wrapped.parse().with_context(|| format!("bad quotient {input:?}"))?;
            let lambda = from_core_quotient(&partition(&core)?, &q, p)?;
            Report::new(format!("{lambda}\n"), json!({ "partition": lambda }))
        }
        Command::Bar { partition: s } => {
            let b = partition(&s)?.bar()?;
            Report::new(format!("{b}\n"), json!({ "bar": b }))
        }
        Command::Chartable { family, n, p, w, verify } => match family {
            Family::Sym => {
                let n = need(n, "n")?;
                caps(force, Some(n), None)?;
                let t = sym_table(n);
                let ok = !verify || t.verify_orthogonality();
                let csv = csv_of(|b| t.write_csv(b))?;
                let values: Vec<Vec<i64>> = (0..t.characters().len())
                    .map(|i| (0..t.classes().len()).map(|j| t.value(i, j)).collect())
                    .collect();
                let json = json!({ "group": format!("S{n}"), "classes": t.classes(), "characters": t.characters(), "values": values, "orthogonal": verify.then_some(ok) });
                let mut text = csv_table_text(&csv);
                if verify {
                    text.push_str(&format!("orthogonality {ok}\n"));
                }
                Report::new(text, json).with_csv(csv).failing(ok)
            }
            Family::Alt => {
                let n = need(n, "n")?;
                caps(force, Some(n), None)?;
                let t = alt_table(n)?;
                let ok = !verify || t.verify_orthogonality()?;
                let csv = csv_of(|b| t.write_csv(b))?;
                let values: Vec<Vec<String>> = t.values().iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect();
                let json = json!({ "group": format!("A{n}"), "classes": t.classes(), "characters": t.characters(), "values": values, "orthogonal": verify.then_some(ok) });
                let mut text = csv_table_text(&csv);
                if verify {
                    text.push_str(&format!("orthogonality {ok}\n"));
                }
                Report::new(text, json).with_csv(csv).failing(ok)
            }
            Family::Wreath => {
                let (p, w) = (need(p, "p")?, need(w, "w")?);
                caps(force, None, Some(w))?;
                let t = wreath_table(&base_group_n(p)?, w);
                let ok = !verify || t.verify_orthogonality()?;
                let csv = csv_of(|b| t.write_csv(b))?;
                let values: Vec<Vec<String>> = (0..t.characters().len())
                    .map(|i| (0..t.classes().len()).map(|j| t.value(i, j).to_string()).collect())
                    .collect();
                let json = json!({ "group": format!("N{p} wr S{w}"), "classes": t.classes(), "characters": t.characters(), "values": values, "orthogonal": verify.then_some(ok) });
                let mut text = csv_table_text(&csv);
                if verify {
                    text.push_str(&format!("orthogonality {ok}\n"));
                }
                Report::new(text, json).with_csv(csv).failing(ok)
            }
        },
        Command::Blocks { n, p } => {
            check_p(p)?;
            caps(force, Some(n), None)?;
            let blocks = p_blocks(n, p);
            let mut text = String::new();
            let mut csv = String::from("core,weight,members\n");
            for b in &blocks {
                let members: Vec<String> = b.members.iter().map(|m| m.to_string()).collect();
                text.push_str(&format!("core ({}) weight {}: {}\n", b.core, b.weight, members.join(" ")));
                csv.push_str(&format!("\"{}\",{},\"{}\"\n", b.core, b.weight, members.join(" ")));
            }
            Report::new(text, serde_json::to_value(&blocks)?).with_csv(csv)
        }
        Command::Basicset { family, n, p, w, verify } => {
            let claim = match family {
                Family::Sym => {
                    let n = need(n, "n")?;
                    caps(force, Some(n), None)?;
                    construct_sym_basic(n, p)?
                }
                Family::Alt => {
                    let n = need(n, "n")?;
                    caps(force, Some(n), None)?;
                    construct_alt_basic(n, p)?
                }
                Family::Wreath => {
                    let w = need(w, "w")?;
                    caps(force, None, Some(w))?;
                    construct_wreath_basic(p, w)?
                }
            };
            basic_set_report(&claim, verify)?
        }
        Command::Isometry { n, p, core } => {
            caps(force, Some(n), None)?;
            isometry_reports(n, p, core, false)?
        }
        Command::Osima { n, p, core } => {
            caps(force, Some(n), None)?;
            isometry_reports(n, p, core, true)?
        }
        Command::Expansion { n, p } => {
            caps(force, Some(n), None)?;
            matrix_report(&expansion_matrix(&construct_sym_basic(n, p)?)?)?
        }
        Command::Epsaction { input } => {
            let d = read_matrix(&input)?;
            check_d_b(&d)?;
            let pairing = eps_column_action(&d, &eps_row_permutation(&d)?)?;
            let dnp = extract_dnp(&d, &pairing);
            let pair_text = |labels: &[String], perm: &[usize]| -> String {
                (0..perm.len())
                    .map(|i| format!("{} <-> {}", labels[i], labels[perm[i]]))
                    .collect::<Vec<_>>()
                    .join("\n")
            };
            let (tr_p, tr_q) = (pairing.fixed_rows().len(), pairing.fixed_cols().len());
            let text = format!(
                "rows\n{}\ncolumns\n{}\nTr(P) = {tr_p}\nTr(Q) = {tr_q}\nD_np\n{dnp}",
                pair_text(&d.row_labels, &pairing.rows),
                pair_text(&d.col_labels, &pairing.cols)
            );
            let json = json!({ "pairing": pairing, "trace_p": tr_p, "trace_q": tr_q, "dnp": dnp });
            Report::new(text, json).with_csv(csv_of(|b| dnp.write_csv(b))?).failing(tr_p == tr_q)
        }
        Command::Transfer { input, dprime } => {
            let d = read_matrix(&input)?;
            check_d_b(&d)?;
            let pairing = eps_column_action(&d, &eps_row_permutation(&d)?)?;
            let alt = transfer_to_alternating(&d, &pairing, &read_matrix(&dprime)?)?;
            let report = relations_check(&d, &alt, &pairing);
            let r = matrix_report(&alt)?;
            r.failing(report.ok())
        }
        Command::Relations { input, alt } => {
            let d = read_matrix(&input)?;
            let pairing = eps_column_action(&d, &eps_row_permutation(&d)?)?;
            let report = relations_check(&d, &read_matrix(&alt)?, &pairing);
            let mut text = format!("checked {}\nviolations {}\n", report.checked, report.violations.len());
            for v in &report.violations {
                text.push_str(&format!("  ({}) row {} column {}: {}\n", v.identity, v.row, v.col, v.detail));
            }
            Report::new(text, serde_json::to_value(&report)?).failing(report.ok())
        }
        Command::Wedge { input, dprime } => {
            let m = read_matrix(&input)?;
            match wedge_shape(&m) {
                None => Report::new("no wedge shape\n".into(), json!({ "wedge": false })).failing(false),
                Some(cert) => {
                    let order = |labels: &[String], idx: &[usize]| idx.iter().map(|&i| labels[i].clone()).collect::<Vec<_>>();
                    let mut text = format!(
                        "wedge shape\nrows {}\ncolumns {}\n",
                        order(&m.row_labels, &cert.row_order).join(" "),
                        order(&m.col_labels, &cert.col_order).join(" ")
                    );
                    let mut json = json!({ "wedge": true, "certificate": cert });
                    if let Some(path) = dprime {
                        let dp = read_matrix(&path)?;
                        let lifted = reorder_alt(&cert, &dp)?;
                        text.push_str(&format!(
                            "lifted rows {}\nlifted columns {}\n",
                            order(&dp.row_labels, &lifted.row_order).join(" "),
                            order(&dp.col_labels, &lifted.col_order).join(" ")
                        ));
                        json["lifted"] = serde_json::to_value(&lifted)?;
                    }
                    Report::new(text, json)
                }
            }
        }
    })
}

/// Tab-separated rendering of a CSV table for the terminal.
fn csv_table_text(csv: &str) -> String {
    csv.lines()
        .map(|l| {
            let mut cells = Vec::new();
            let mut cur = String::new();
            let mut quoted = false;
            for ch in l.chars() {
                match ch {
                    '"' => quoted = !quoted,
                    ',' if !quoted => cells.push(std::mem::take(&mut cur)),
                    _ => cur.push(ch),
                }
            }
            cells.push(cur);
            cells.join("\t") + "\n"
        })
        .collect()
}

fn emit(report: &Report, format: Format, out: Option<&Path>) -> Result<()> {
    let body = match format {
        Format::Text => report.text.clone(),
        Format::Json => serde_json::to_string_pretty(&report.json)? + "\n",
        Format::Csv => report.csv.clone().context("this command has no CSV output")?,
    };
    match out {
        Some(path) => fs::write(path, body).with_context(|| format!("cannot write {}", path.display())),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (format, out) = (cli.format, cli.out.clone());
    match run(cli).and_then(|r| emit(&r, format, out.as_deref()).map(|_| r.ok)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
