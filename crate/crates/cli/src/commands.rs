//! Subcommand implementations. Each returns an [`Output`] holding both the
//! JSON document and the TSV tables.

use std::time::Instant;

use clap::ValueEnum;
use reciprocity_core::gamma::{chromatic_via_m, gamma_fourier, gamma_value, verify_reciprocity};
use reciprocity_core::graphs::{chromatic_oracle, class_containment, iso_class_blocks};
use reciprocity_core::posetlin::{PolyMatrix, PosetAlgebra, RationalMatrix};
use reciprocity_core::reference::{self, Printed};
use reciprocity_core::{
    AllowedSet, EdgeSet, Girth, Limits, Method, Rational, RationalPoly, SubgraphPoset,
};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::output::{Output, Table};
use crate::spec::{render_mask, AllowedSpec, GroupSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum MethodArg {
    Brute,
    Cycle,
    Fourier,
    #[default]
    Auto,
}

impl MethodArg {
    fn exact(self) -> Option<Method> {
        match self {
            MethodArg::Brute => Some(Method::BruteForce),
            MethodArg::Cycle => Some(Method::CycleSpace),
            MethodArg::Auto => Some(Method::Auto),
            MethodArg::Fourier => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MatrixName {
    Zeta,
    Mobius,
    #[value(name = "J")]
    J,
    #[value(name = "Jinv")]
    Jinv,
    #[value(name = "M")]
    M,
}

impl MatrixName {
    fn name(self) -> &'static str {
        match self {
            MatrixName::Zeta => "zeta",
            MatrixName::Mobius => "mobius",
            MatrixName::J => "J",
            MatrixName::Jinv => "Jinv",
            MatrixName::M => "M",
        }
    }
}

/// Everything a command needs besides its own positional arguments.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub v: usize,
    pub group: Option<GroupSpec>,
    pub allowed: Option<AllowedSpec>,
    pub method: MethodArg,
    pub budget: Option<u128>,
    pub paper_order: bool,
    pub timing: bool,
}

impl RunConfig {
    pub fn new(v: usize) -> Self {
        RunConfig {
            v,
            group: None,
            allowed: None,
            method: MethodArg::Auto,
            budget: None,
            paper_order: false,
            timing: false,
        }
    }

    pub fn with_allowed(mut self, group: &str, allowed: &str) -> Result<Self, CliError> {
        self.group = Some(group.parse()?);
        self.allowed = Some(allowed.parse()?);
        Ok(self)
    }

    pub fn limits(&self) -> Limits {
        let limits = Limits::default();
        match self.budget {
            Some(b) => limits.with_budget(b),
            None => limits,
        }
    }

    fn poset(&self) -> Result<SubgraphPoset, CliError> {
        Ok(SubgraphPoset::enumerate_with(self.v, &self.limits())?)
    }

    fn allowed_set(&self) -> Result<(GroupSpec, AllowedSpec, AllowedSet), CliError> {
        let group = self
            .group
            .clone()
            .ok_or_else(|| CliError::parse("--group is required"))?;
        let allowed = self
            .allowed
            .clone()
            .ok_or_else(|| CliError::parse("--allowed is required"))?;
        let set = allowed.build(&group.build()?)?;
        Ok((group, allowed, set))
    }
}

/// Edge list without the vertex count, `{}` for no edges.
pub fn short_label(e: &EdgeSet) -> String {
    let s: Vec<String> = e.edges().map(|(i, j)| format!("{i}{j}")).collect();
    if s.is_empty() {
        "{}".into()
    } else {
        s.join(",")
    }
}

fn girth_json(g: Girth) -> Value {
    match g {
        Girth::Finite(n) => json!(n),
        Girth::Infinite => json!("inf"),
    }
}

fn class_labels(poset: &SubgraphPoset) -> Vec<String> {
    let mut labels = vec![String::new(); poset.len()];
    for class in iso_class_blocks(poset) {
        for &m in &class.members {
            labels[m] = class.label.clone();
        }
    }
    labels
}

pub fn cmd_poset(cfg: &RunConfig) -> Result<Output, CliError> {
    let poset = cfg.poset()?;
    let labels = class_labels(&poset);
    let mut table = Table::new(&["index", "mask", "edges", "e", "c", "girth", "class"]);
    let mut members = Vec::new();
    for (i, e) in poset.members().iter().enumerate() {
        table.push(vec![
            i.to_string(),
            render_mask(e),
            short_label(e),
            e.len().to_string(),
            e.components().to_string(),
            e.girth().to_string(),
            labels[i].clone(),
        ]);
        members.push(json!({
            "index": i,
            "mask": e.mask(),
            "edges": short_label(e),
            "e": e.len(),
            "c": e.components(),
            "girth": girth_json(e.girth()),
            "class": labels[i],
        }));
    }
    let json = json!({ "v": cfg.v, "count": poset.len(), "members": members });
    Ok(Output::new(json, vec![table]))
}

enum Cells {
    Symbolic(PolyMatrix),
    Evaluated(RationalMatrix),
}

impl Cells {
    fn render(&self, h: usize, e: usize) -> String {
        match self {
            Cells::Symbolic(m) => m.get(h, e).render("r"),
            Cells::Evaluated(m) => m.get(h, e).to_string(),
        }
    }
}

fn build_matrix(
    alg: &PosetAlgebra,
    which: MatrixName,
    r: Option<&Rational>,
) -> Result<Cells, CliError> {
    Ok(match r {
        None => Cells::Symbolic(match which {
            MatrixName::Zeta => alg.zeta_matrix(),
            MatrixName::Mobius => alg.mobius_matrix(),
            MatrixName::J => alg.j_matrix(),
            MatrixName::Jinv => alg.j_inverse(),
            MatrixName::M => alg.m_matrix()?,
        }),
        Some(r) => Cells::Evaluated(match which {
            MatrixName::Zeta => alg.zeta_integers(),
            MatrixName::Mobius => alg.mobius_integers(),
            MatrixName::J => alg.j_matrix_at(r),
            MatrixName::Jinv => alg.j_inverse_at(r),
            MatrixName::M => alg.m_matrix_at(r)?,
        }),
    })
}

/// One value per pair of isomorphism classes, or `None` where the entries
/// inside the block differ.
fn block_values(poset: &SubgraphPoset, cells: &Cells) -> (Vec<String>, Vec<Vec<Option<String>>>) {
    let classes = iso_class_blocks(poset);
    let labels = classes.iter().map(|c| c.label.clone()).collect();
    let values = classes
        .iter()
        .map(|up| {
            classes
                .iter()
                .map(|low| {
                    let mut seen: Option<String> = None;
                    for &h in &up.members {
                        for &e in &low.members {
                            if !poset.member(e).is_subset_of(&poset.member(h)) {
                                continue;
                            }
                            let cell = cells.render(h, e);
                            match &seen {
                                None => seen = Some(cell),
                                Some(s) if *s == cell => {}
                                Some(_) => return None,
                            }
                        }
                    }
                    Some(seen.unwrap_or_else(|| "0".into()))
                })
                .collect()
        })
        .collect();
    (labels, values)
}

fn printed_text(p: &Printed, var: &str) -> String {
    match p {
        Printed::Poly(c) => reference::poly(c).render(var),
        Printed::Placeholder(s) => s.to_string(),
    }
}

fn errata_rows(
    alg: &PosetAlgebra,
    poset: &SubgraphPoset,
    which: MatrixName,
) -> Result<Table, CliError> {
    let mut table = Table::new(&[
        "matrix",
        "row_class",
        "col_class",
        "printed",
        "computed",
        "status",
        "reason",
    ]);
    let (errata, cells) = match which {
        MatrixName::M => (
            &reference::M_V4_ERRATA[..],
            Cells::Symbolic(alg.m_matrix()?),
        ),
        MatrixName::J => (
            &reference::J_ALPHA_V4_ERRATA[..],
            Cells::Symbolic(alg.j_matrix()),
        ),
        _ => return Ok(table),
    };
    let (labels, blocks) = block_values(poset, &cells);
    for erratum in errata {
        let row = reference::V4_CLASSES[erratum.row_class];
        let col = reference::V4_CLASSES[erratum.col_class];
        let (ri, ci) = (position(&labels, row), position(&labels, col));
        let computed = blocks[ri][ci].clone().unwrap_or_else(|| "mixed".into());
        let expected = reference::poly(erratum.computed).render("r");
        let status = if computed == expected {
            "erratum"
        } else {
            "MISMATCH"
        };
        table.push(vec![
            erratum.matrix.into(),
            row.into(),
            col.into(),
            printed_text(&erratum.printed, "r"),
            computed,
            status.into(),
            erratum.reason.into(),
        ]);
    }
    Ok(table)
}

fn position(labels: &[String], label: &str) -> usize {
    labels
        .iter()
        .position(|l| l == label)
        .expect("class label present")
}

pub fn cmd_matrix(
    cfg: &RunConfig,
    which: MatrixName,
    r: Option<&Rational>,
    blocks: bool,
    errata: bool,
) -> Result<Output, CliError> {
    let poset = cfg.poset()?;
    let alg = PosetAlgebra::new(&poset);
    let cells = build_matrix(&alg, which, r)?;
    let n = poset.len();
    let order: Vec<usize> = if cfg.paper_order {
        (0..n).rev().collect()
    } else {
        (0..n).collect()
    };
    let names: Vec<String> = order
        .iter()
        .map(|&i| short_label(&poset.member(i)))
        .collect();

    let mut header = vec!["H\\E".to_string()];
    header.extend(names.iter().cloned());
    let mut table = Table {
        columns: header,
        ..Default::default()
    };
    let mut rows = Vec::new();
    for &h in &order {
        let row: Vec<String> = order.iter().map(|&e| cells.render(h, e)).collect();
        let mut line = vec![short_label(&poset.member(h))];
        line.extend(row.iter().cloned());
        table.push(line);
        rows.push(row);
    }
    let mut tables = vec![table];
    let mut json = json!({
        "v": cfg.v,
        "which": which.name(),
        "r": r.map(|r| r.to_string()),
        "order": if cfg.paper_order { "reversed" } else { "poset" },
        "index": names,
        "rows": rows,
    });

    if blocks {
        let (labels, values) = block_values(&poset, &cells);
        let counts = class_containment(&poset, &iso_class_blocks(&poset));
        let mut t = Table::new(&["row_class", "col_class", "per_row", "per_col", "entry"]);
        let mut list = Vec::new();
        for (a, up) in labels.iter().enumerate() {
            for (b, low) in labels.iter().enumerate() {
                let Some(c) = counts[a][b] else { continue };
                if c.per_upper == 0 {
                    continue;
                }
                let entry = values[a][b].clone().unwrap_or_else(|| "mixed".into());
                t.push(vec![
                    up.clone(),
                    low.clone(),
                    c.per_upper.to_string(),
                    c.per_lower.to_string(),
                    entry.clone(),
                ]);
                list.push(json!({
                    "row_class": up, "col_class": low,
                    "per_row": c.per_upper, "per_col": c.per_lower, "entry": entry,
                }));
            }
        }
        json["blocks"] = json!(list);
        tables.push(t);
    }

    let mut mismatch = false;
    if errata {
        let mut t = if cfg.v == 4 {
            errata_rows(&alg, &poset, which)?
        } else {
            Table::new(&[
                "matrix",
                "row_class",
                "col_class",
                "printed",
                "computed",
                "status",
                "reason",
            ])
        };
        if t.rows.is_empty() {
            t.notes.push(format!(
                "no documented errata for {} at v={}",
                which.name(),
                cfg.v
            ));
        }
        mismatch = t.rows.iter().any(|r| r[5] == "MISMATCH");
        json["errata"] = json!(t
            .rows
            .iter()
            .map(|r| json!({
                "matrix": r[0], "row_class": r[1], "col_class": r[2],
                "printed": r[3], "computed": r[4], "status": r[5], "reason": r[6],
            }))
            .collect::<Vec<_>>());
        tables.push(t);
    }
    Ok(Output::new(json, tables).failing_if(mismatch))
}

pub fn cmd_gamma(cfg: &RunConfig) -> Result<Output, CliError> {
    let poset = cfg.poset()?;
    let (group, allowed, set) = cfg.allowed_set()?;
    let limits = cfg.limits();
    let method_name = match cfg.method.exact() {
        Some(m) => m.name(),
        None => "fourier",
    };
    let mut columns = vec!["index", "edges", "value", "method"];
    if cfg.timing {
        columns.push("micros");
    }
    let mut table = Table::new(&columns);
    let mut records = Vec::new();
    for (i, e) in poset.members().iter().enumerate() {
        let start = Instant::now();
        let (text, value) = match cfg.method.exact() {
            Some(m) => {
                let x = gamma_value(e, &set, m, &limits)?;
                (x.to_string(), json!(x.to_string()))
            }
            None => {
                let x = gamma_fourier(e, &set, &limits)?;
                (format!("{x:.12}"), json!(x))
            }
        };
        let micros = start.elapsed().as_micros();
        let mut row = vec![i.to_string(), short_label(e), text, method_name.into()];
        let mut rec = json!({
            "index": i, "mask": e.mask(), "edges": short_label(e),
            "value": value, "method": method_name,
        });
        if cfg.timing {
            row.push(micros.to_string());
            rec["micros"] = json!(micros as u64);
        }
        table.push(row);
        records.push(rec);
    }
    let json = json!({
        "v": cfg.v,
        "group": group.to_string(),
        "allowed": allowed.to_string(),
        "alpha": set.alpha().to_string(),
        "values": records,
    });
    Ok(Output::new(json, vec![table]))
}

pub fn cmd_verify(cfg: &RunConfig) -> Result<Output, CliError> {
    let poset = cfg.poset()?;
    let (group, allowed, set) = cfg.allowed_set()?;
    let method = cfg
        .method
        .exact()
        .ok_or_else(|| CliError::parse("verify needs an exact method (brute, cycle or auto)"))?;
    let report = verify_reciprocity(&poset, &set, method, &cfg.limits())?;
    let mut table = Table::new(&[
        "index",
        "edges",
        "gamma",
        "gamma_bar",
        "lhs",
        "rhs",
        "agree",
    ]);
    let mut coords = Vec::new();
    for i in 0..poset.len() {
        let e = poset.member(i);
        let row = vec![
            i.to_string(),
            short_label(&e),
            report.gamma[i].to_string(),
            report.gamma_bar[i].to_string(),
            report.lhs[i].to_string(),
            report.rhs[i].to_string(),
            report.agree[i].to_string(),
        ];
        coords.push(json!({
            "index": i, "edges": row[1], "gamma": row[2], "gamma_bar": row[3],
            "lhs": row[4], "rhs": row[5], "agree": report.agree[i],
        }));
        table.push(row);
    }
    let verdict = if report.passed() { "PASS" } else { "FAIL" };
    table
        .notes
        .push(format!("{verdict} {}/{}", report.agreeing(), poset.len()));
    let json = json!({
        "v": cfg.v,
        "group": group.to_string(),
        "allowed": allowed.to_string(),
        "method": method.name(),
        "alpha": report.alpha.to_string(),
        "alpha_bar": report.alpha_bar.to_string(),
        "passed": report.passed(),
        "agreeing": report.agreeing(),
        "total": poset.len(),
        "coordinates": coords,
    });
    Ok(Output::new(json, vec![table]).failing_if(!report.passed()))
}

/// Chromatic polynomials through the transfer matrix, checked against
/// deletion-contraction. With `edges`, only that graph is reported.
pub fn cmd_chromatic(cfg: &RunConfig, edges: Option<&EdgeSet>) -> Result<Output, CliError> {
    let v = edges.map_or(cfg.v, EdgeSet::v);
    let poset = SubgraphPoset::enumerate_with(v, &cfg.limits())?;
    let alg = PosetAlgebra::new(&poset);
    let targets: Vec<EdgeSet> = match edges {
        Some(e) => vec![*e],
        None => poset.members().to_vec(),
    };
    let m = if targets.iter().any(|e| poset.index_of(e).is_some()) {
        Some(alg.m_matrix()?)
    } else {
        None
    };
    let mut table = Table::new(&["edges", "via_M", "oracle", "agree"]);
    let mut list = Vec::new();
    let mut failed = false;
    for e in &targets {
        let oracle = chromatic_oracle(e);
        let via: Option<RationalPoly> = match (poset.index_of(e), &m) {
            (Some(i), Some(m)) => Some(chromatic_via_m(&poset, m, i)?),
            _ => None,
        };
        let agree = via.as_ref().map(|p| *p == oracle);
        failed |= agree == Some(false);
        let via_text = via.as_ref().map_or("n/a".to_string(), |p| p.render("f"));
        let agree_text = agree.map_or("n/a".to_string(), |b| b.to_string());
        table.push(vec![
            short_label(e),
            via_text.clone(),
            oracle.render("f"),
            agree_text,
        ]);
        list.push(json!({
            "mask": e.mask(), "edges": short_label(e),
            "via_m": via.map(|p| p.render("f")),
            "oracle": oracle.render("f"),
            "agree": agree,
        }));
    }
    if edges.is_some_and(|e| poset.index_of(e).is_none()) {
        table
            .notes
            .push("graph has a bridge; only the deletion-contraction value applies".into());
    }
    let json = json!({ "v": v, "graphs": list, "passed": !failed });
    Ok(Output::new(json, vec![table]).failing_if(failed))
}

pub use crate::examples::cmd_examples;
