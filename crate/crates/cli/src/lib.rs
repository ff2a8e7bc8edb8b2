//! Document types and renderers behind the `holrep` binary.
//!
//! Every command builds a serde document first; JSON output is that document
//! verbatim and text output is rendered from it, so both are deterministic.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use holrep::holgroup::DEFAULT_ENUMERATION_BUDGET;
use holrep::quasiperm::{degrees_report, p_of_group_oracle, DEFAULT_CLASS_BUDGET, DEFAULT_ORACLE_BOUND};
use holrep::ratreps::{galois_classes, render_wedderburn, schur_index_report, wedderburn};
use holrep::verify::{self, VerifyConfig, VerifyReport};
use holrep::{
    CharacterTable, Cyclotomic, DegreesReport, Element, Error, Holomorph, IrrepParams, SchurStatus, Subgroup,
    WedderburnComponent,
};

#[derive(Parser, Debug)]
#[command(name = "holrep", version, about = "Exact representation tables for Hol(C_{p^n})")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Complex character table.
    Ctable(Common),
    /// Wedderburn decomposition of the rational group algebra.
    Wedderburn(Common),
    /// Rational character table (sums over Galois classes).
    Rattable(Common),
    /// Minimal faithful quasi-permutation and permutation degrees.
    Degrees {
        #[command(flatten)]
        common: Common,
        /// Also run the subgroup-enumeration oracle for p(G).
        #[arg(long)]
        oracle: bool,
    },
    /// Run the full invariant suite.
    Verify(Common),
    /// Least-index core-free subgroup by brute force.
    Oracle(Common),
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub n: u32,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Cap on enumerated group and class sizes.
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,
    /// Largest |G| for which the subgroup oracle runs.
    #[arg(long, default_value_t = DEFAULT_ORACLE_BOUND, value_parser = clap::value_parser!(u64).range(1..))]
    pub oracle_bound: u64,
    /// Largest number of nontrivial Galois classes for the subset search.
    #[arg(long, default_value_t = DEFAULT_CLASS_BUDGET as u64, value_parser = clap::value_parser!(u64).range(1..64))]
    pub class_budget: u64,
    /// Write output here instead of stdout.
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

pub mod exit {
    pub const OK: i32 = 0;
    pub const VERIFY_FAILED: i32 = 1;
    pub const INVALID_INPUT: i32 = 2;
    pub const BUDGET_EXCEEDED: i32 = 3;
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => exit::BUDGET_EXCEEDED,
        Error::Falsified(_) => exit::VERIFY_FAILED,
        _ => exit::INVALID_INPUT,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassDoc {
    pub representative: Element,
    pub size: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RowDoc {
    pub degree: u64,
    pub parameters: IrrepParams,
    pub values: Vec<Cyclotomic>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CtableDoc {
    pub p: u64,
    pub n: u32,
    pub order: u64,
    pub classes: Vec<ClassDoc>,
    pub rows: Vec<RowDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WedderburnDoc {
    pub p: u64,
    pub n: u32,
    pub components: Vec<WedderburnComponent>,
    pub rendering: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalRowDoc {
    pub degree: u64,
    pub complex_degree: u64,
    pub galois_order: u64,
    pub field_conductor: u64,
    pub paper_label: u64,
    pub schur_index: u64,
    pub schur_status: SchurStatus,
    /// Rows of the complex table summed into this one.
    pub members: Vec<usize>,
    pub values: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RattableDoc {
    pub p: u64,
    pub n: u32,
    pub order: u64,
    pub classes: Vec<ClassDoc>,
    pub rows: Vec<RationalRowDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleDoc {
    pub p: u64,
    pub n: u32,
    pub order: u64,
    pub subgroups: usize,
    pub core_free: usize,
    pub p_oracle: u64,
    pub witness: Subgroup,
}

fn classes_doc(t: &CharacterTable) -> Vec<ClassDoc> {
    t.classes()
        .classes
        .iter()
        .map(|c| ClassDoc {
            representative: c.representative,
            size: c.size,
        })
        .collect()
}

fn build_table(c: &Common) -> holrep::Result<CharacterTable> {
    let group = Holomorph::from_pn(c.p, c.n)?;
    CharacterTable::compute(&group, c.budget)
}

pub fn ctable(c: &Common) -> holrep::Result<CtableDoc> {
    let t = build_table(c)?;
    Ok(CtableDoc {
        p: c.p,
        n: c.n,
        order: t.group().order(),
        classes: classes_doc(&t),
        rows: t
            .irreps()
            .iter()
            .map(|x| RowDoc {
                degree: x.degree,
                parameters: x.params,
                values: x.values.clone(),
            })
            .collect(),
    })
}

pub fn wedderburn_doc(c: &Common) -> holrep::Result<WedderburnDoc> {
    let t = build_table(c)?;
    let components = wedderburn(&galois_classes(&t)?);
    Ok(WedderburnDoc {
        p: c.p,
        n: c.n,
        rendering: render_wedderburn(&components),
        components,
    })
}

pub fn rattable(c: &Common) -> holrep::Result<RattableDoc> {
    let t = build_table(c)?;
    let classes = galois_classes(&t)?;
    let schur = schur_index_report(&t, &classes)?;
    Ok(RattableDoc {
        p: c.p,
        n: c.n,
        order: t.group().order(),
        classes: classes_doc(&t),
        rows: classes
            .iter()
            .zip(schur)
            .map(|(r, s)| RationalRowDoc {
                degree: r.degree,
                complex_degree: r.complex_degree,
                galois_order: r.galois_order(),
                field_conductor: r.field_conductor,
                paper_label: r.paper_label,
                schur_index: r.schur_index,
                schur_status: s,
                members: r.members.clone(),
                values: r.psi.clone(),
            })
            .collect(),
    })
}

pub fn degrees(c: &Common, oracle: bool) -> holrep::Result<DegreesReport> {
    let t = build_table(c)?;
    let classes = galois_classes(&t)?;
    let schur = schur_index_report(&t, &classes)?;
    degrees_report(&t, &classes, &schur, oracle.then_some(c.oracle_bound), c.budget)
}

pub fn oracle(c: &Common) -> holrep::Result<OracleDoc> {
    let group = Holomorph::from_pn(c.p, c.n)?;
    let (p_oracle, witness) = p_of_group_oracle(&group, c.oracle_bound)?;
    let subgroups = group.all_subgroups(c.oracle_bound)?;
    Ok(OracleDoc {
        p: c.p,
        n: c.n,
        order: group.order(),
        subgroups: subgroups.len(),
        core_free: subgroups.iter().filter(|h| group.is_core_free(h)).count(),
        p_oracle,
        witness,
    })
}

pub fn verify_report(c: &Common) -> holrep::Result<VerifyReport> {
    let config = VerifyConfig {
        budget: c.budget,
        oracle_bound: c.oracle_bound,
        class_budget: c.class_budget as usize,
    };
    verify::run(c.p, c.n, &config)
}

fn columns(out: &mut String, header: &[String], rows: &[Vec<String>]) {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |out: &mut String, cells: &[String]| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .enumerate()
            .map(|(i, (s, &w))| if i == 0 { format!("{s:<w$}") } else { format!("{s:>w$}") })
            .collect();
        writeln!(out, "{}", padded.join("  ").trim_end()).unwrap();
    };
    line(out, header);
    for row in rows {
        line(out, row);
    }
}

fn group_name(p: u64, n: u32) -> String {
    format!("Hol(C_{})", p.pow(n))
}

fn class_header(classes: &[ClassDoc]) -> Vec<String> {
    let mut h = vec![String::new()];
    h.extend(classes.iter().map(|c| c.representative.to_string()));
    h
}

fn params_label(p: &IrrepParams) -> String {
    let mut s = format!("k={} w=z{}^{}", p.orbit, p.omega_root, p.omega_exp);
    if let Some(e) = p.epsilon {
        write!(s, " e={e}").unwrap();
    }
    s
}

impl CtableDoc {
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{}: order {}, {} classes\n",
            group_name(self.p, self.n),
            self.order,
            self.classes.len()
        );
        let mut sizes = vec!["size".to_string()];
        sizes.extend(self.classes.iter().map(|c| c.size.to_string()));
        let mut rows = vec![sizes];
        for (i, r) in self.rows.iter().enumerate() {
            let mut row = vec![format!("chi{i} [{}]", params_label(&r.parameters))];
            row.extend(r.values.iter().map(ToString::to_string));
            rows.push(row);
        }
        columns(&mut out, &class_header(&self.classes), &rows);
        out
    }
}

impl WedderburnDoc {
    pub fn to_text(&self) -> String {
        format!("Q[{}] = {}\n", group_name(self.p, self.n), self.rendering)
    }
}

impl RattableDoc {
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{}: {} rational irreducibles\n",
            group_name(self.p, self.n),
            self.rows.len()
        );
        let mut rows = Vec::new();
        for (i, r) in self.rows.iter().enumerate() {
            let mut row = vec![format!(
                "psi{i} [deg {}x{} Q(z{}) {}]",
                r.galois_order, r.complex_degree, r.paper_label, r.schur_status
            )];
            row.extend(r.values.iter().map(ToString::to_string));
            rows.push(row);
        }
        columns(&mut out, &class_header(&self.classes), &rows);
        out
    }
}

pub fn degrees_text(p: u64, n: u32, r: &DegreesReport) -> String {
    let mut out = format!("{}\n", group_name(p, n));
    writeln!(out, "c(G) = {}  (faithful row {})", r.c, r.witnesses.c_row).unwrap();
    writeln!(out, "q(G) = {}  (Schur index premise {})", r.q, r.schur_premise).unwrap();
    writeln!(out, "p(G) = {}  (closed form)", r.p_formula).unwrap();
    match (&r.p_oracle, &r.oracle_skipped) {
        (Some(v), _) => {
            let gens: Vec<String> = r
                .witnesses
                .p_subgroup
                .iter()
                .flat_map(|h| h.generators().iter().map(ToString::to_string))
                .collect();
            writeln!(out, "p(G) = {v}  (oracle, witness <{}>)", gens.join(", ")).unwrap();
        }
        (None, Some(why)) => writeln!(out, "oracle skipped: {why}").unwrap(),
        (None, None) => {}
    }
    out
}

impl OracleDoc {
    pub fn to_text(&self) -> String {
        let gens: Vec<String> = self.witness.generators().iter().map(ToString::to_string).collect();
        format!(
            "{}: order {}, {} subgroups, {} core-free\np(G) = {}  (witness <{}> of order {})\n",
            group_name(self.p, self.n),
            self.order,
            self.subgroups,
            self.core_free,
            self.p_oracle,
            gens.join(", "),
            self.witness.order()
        )
    }
}

/// Output of one invocation: the bytes to emit and the exit status.
pub struct Outcome {
    pub body: String,
    pub code: i32,
}

fn render<T: Serialize>(format: Format, doc: &T, text: impl FnOnce(&T) -> String) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(doc).expect("documents serialize") + "\n",
        Format::Text => text(doc),
    }
}

pub fn run(command: &Command) -> Result<Outcome, Error> {
    let ok = |body| Outcome { body, code: exit::OK };
    Ok(match command {
        Command::Ctable(c) => ok(render(c.format, &ctable(c)?, CtableDoc::to_text)),
        Command::Wedderburn(c) => ok(render(c.format, &wedderburn_doc(c)?, WedderburnDoc::to_text)),
        Command::Rattable(c) => ok(render(c.format, &rattable(c)?, RattableDoc::to_text)),
        Command::Degrees { common: c, oracle } => {
            let r = degrees(c, *oracle)?;
            ok(render(c.format, &r, |r| degrees_text(c.p, c.n, r)))
        }
        Command::Oracle(c) => ok(render(c.format, &oracle(c)?, OracleDoc::to_text)),
        Command::Verify(c) => {
            let r = verify_report(c)?;
            let code = if r.passed() { exit::OK } else { exit::VERIFY_FAILED };
            Outcome {
                body: render(c.format, &r, |r| format!("{r}\n")),
                code,
            }
        }
    })
}

impl Command {
    pub fn common(&self) -> &Common {
        match self {
            Command::Ctable(c)
            | Command::Wedderburn(c)
            | Command::Rattable(c)
            | Command::Verify(c)
            | Command::Oracle(c)
            | Command::Degrees { common: c, .. } => c,
        }
    }
}
