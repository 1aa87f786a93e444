use std::fmt::Write as _;
use std::path::Path;

use critgroup::{
    critical_group, critical_group_closed, groups_isomorphic, is_unimodular, smith_normal_form,
    spanning_tree_count, tree_number_closed, AbelianGroup, IntMatrix, Multigraph,
};
use num_bigint::BigInt;
use rayon::prelude::*;

use crate::args::{Family, GraphArgs, SnfArgs, SweepArgs};
use crate::error::{exit, from_data, from_param, CliError, CliResult};
use crate::record::{
    decimal, to_json, GraphDescriptor, Method, OutputRecord, SnfRecord, SweepCell, SweepReport,
    Witness,
};

pub const MAX_DIM_VAR: &str = "CRITGROUP_MAX_DIM";
const DEFAULT_MAX_DIM: usize = 4096;

/// Text for stdout plus the exit code.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

pub fn max_dim() -> CliResult<usize> {
    match std::env::var(MAX_DIM_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{MAX_DIM_VAR}={v:?} is not a nonnegative integer"))),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_MAX_DIM),
        Err(e) => Err(CliError::Usage(format!("{MAX_DIM_VAR}: {e}"))),
    }
}

fn check_dim(dim: usize, limit: usize) -> CliResult<()> {
    if dim > limit {
        return Err(CliError::Usage(format!(
            "matrix order {dim} exceeds {MAX_DIM_VAR}={limit}"
        )));
    }
    Ok(())
}

fn read_file(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))
}

enum Source {
    KmCn(usize, usize),
    Graph(Multigraph),
}

fn resolve(args: &GraphArgs) -> CliResult<(GraphDescriptor, Source)> {
    if let (Some(m), Some(n)) = (args.km, args.cn) {
        if m == 0 || n == 0 {
            return Err(CliError::Usage("--km and --cn must be at least 1".into()));
        }
        return Ok((GraphDescriptor::KmCn { m, n }, Source::KmCn(m, n)));
    }
    if let Some(path) = &args.file {
        let g = Multigraph::parse_edge_list(&read_file(path)?).map_err(from_data)?;
        let desc = GraphDescriptor::File {
            path: path.display().to_string(),
        };
        return Ok((desc, Source::Graph(g)));
    }
    if let (Some(family), Some(size)) = (args.family, args.size) {
        let (desc, g) = match family {
            Family::Complete => (GraphDescriptor::Complete { size }, Multigraph::complete(size)),
            Family::Cycle => (GraphDescriptor::Cycle { size }, Multigraph::cycle(size)),
            Family::Path => (GraphDescriptor::Path { size }, Multigraph::path(size)),
        };
        return Ok((desc, Source::Graph(g.map_err(from_param)?)));
    }
    Err(CliError::Usage("no graph source given".into()))
}

struct Evaluation {
    graph: GraphDescriptor,
    method: Method,
    formula: Option<(AbelianGroup, BigInt)>,
    computed: Option<(AbelianGroup, BigInt)>,
}

impl Evaluation {
    fn agreement(&self) -> Option<bool> {
        match (&self.formula, &self.computed) {
            (Some((fg, ft)), Some((cg, ct))) => Some(groups_isomorphic(fg, cg) && ft == ct),
            _ => None,
        }
    }

    fn record(&self) -> OutputRecord {
        // Prefer the direct computation when both are present.
        let (group, trees) = self
            .computed
            .as_ref()
            .or(self.formula.as_ref())
            .expect("at least one method ran");
        OutputRecord::new(self.graph.clone(), self.method, group, trees, self.agreement())
    }

    fn code(&self) -> i32 {
        match self.agreement() {
            Some(false) => exit::DISAGREEMENT,
            _ => exit::OK,
        }
    }
}

fn direct(g: &Multigraph, limit: usize) -> CliResult<(AbelianGroup, BigInt)> {
    check_dim(g.vertex_count(), limit)?;
    if g.vertex_count() == 0 {
        return Err(CliError::Data("graph has no vertices".into()));
    }
    let group = critical_group(g).map_err(from_data)?;
    let trees = spanning_tree_count(g).map_err(from_data)?;
    Ok((group, trees))
}

fn evaluate(args: &GraphArgs) -> CliResult<Evaluation> {
    let limit = max_dim()?;
    let (graph, source) = resolve(args)?;
    match source {
        Source::KmCn(m, n) => {
            let method = args.method.unwrap_or(Method::Both);
            let formula = if method == Method::Snf {
                None
            } else {
                let closed = critical_group_closed(m, n).map_err(from_param)?;
                Some((closed.group, tree_number_closed(m, n).map_err(from_param)?))
            };
            let computed = if method == Method::Formula {
                None
            } else {
                check_dim(m.saturating_mul(n), limit)?;
                let g = Multigraph::km_cn(m, n).map_err(from_param)?;
                Some(direct(&g, limit)?)
            };
            Ok(Evaluation { graph, method, formula, computed })
        }
        Source::Graph(g) => {
            let method = args.method.unwrap_or(Method::Snf);
            if method != Method::Snf {
                return Err(CliError::Usage(format!(
                    "--method {method} needs a K_m x C_n source (--km M --cn N)"
                )));
            }
            let computed = Some(direct(&g, limit)?);
            Ok(Evaluation { graph, method, formula: None, computed })
        }
    }
}

pub fn group(args: &GraphArgs) -> CliResult<Outcome> {
    let eval = evaluate(args)?;
    let record = eval.record();
    let stdout = if args.json {
        to_json(&record)
    } else {
        let mut out = format!("{}\n", record.group_display);
        if let Some(agree) = record.agreement {
            writeln!(out, "agreement: {agree}").unwrap();
            if !agree {
                let (fg, _) = eval.formula.as_ref().unwrap();
                let (cg, _) = eval.computed.as_ref().unwrap();
                writeln!(out, "formula: {fg}\nsnf: {cg}").unwrap();
            }
        }
        out
    };
    Ok(Outcome { stdout, code: eval.code() })
}

pub fn trees(args: &GraphArgs) -> CliResult<Outcome> {
    let eval = evaluate(args)?;
    let record = eval.record();
    let stdout = if args.json {
        to_json(&record)
    } else {
        let mut out = format!("{}\n", record.tree_count);
        if let (Some((_, ft)), Some((_, ct))) = (&eval.formula, &eval.computed) {
            writeln!(out, "formula: {ft}\nmatrix-tree: {ct}\nagreement: {}", ft == ct).unwrap();
        }
        out
    };
    let code = match (&eval.formula, &eval.computed) {
        (Some((_, ft)), Some((_, ct))) if ft != ct => exit::DISAGREEMENT,
        _ => exit::OK,
    };
    Ok(Outcome { stdout, code })
}

/// Rejects oversized matrices from the header alone, before anything is allocated.
fn check_header(text: &str, limit: usize) -> CliResult<()> {
    let header = text.lines().map(str::trim).find(|l| !l.is_empty());
    if let Some(line) = header {
        let dims: Vec<usize> = line.split_whitespace().filter_map(|t| t.parse().ok()).collect();
        if let [rows, cols] = dims[..] {
            check_dim(rows.max(cols), limit)?;
        }
    }
    Ok(())
}

fn rows_of(a: &IntMatrix) -> Vec<Vec<String>> {
    (0..a.rows()).map(|r| decimal(a.row(r))).collect()
}

pub fn snf(args: &SnfArgs) -> CliResult<Outcome> {
    let limit = max_dim()?;
    let text = read_file(&args.matrix)?;
    check_header(&text, limit)?;
    let a = IntMatrix::parse_text(&text).map_err(from_data)?;
    let snf = smith_normal_form(&a);

    let witness = args.witness.then(|| {
        let verified =
            snf.verify(&a).is_ok() && is_unimodular(&snf.left) && is_unimodular(&snf.right);
        Witness {
            left: rows_of(&snf.left),
            right: rows_of(&snf.right),
            verified,
        }
    });
    let code = match &witness {
        Some(w) if !w.verified => exit::DISAGREEMENT,
        _ => exit::OK,
    };

    let stdout = if args.json {
        to_json(&SnfRecord {
            rows: a.rows(),
            cols: a.cols(),
            diagonal: decimal(&snf.diag),
            witness,
        })
    } else {
        let mut out = format!("{}\n", decimal(&snf.diag).join(" "));
        if let Some(w) = witness {
            write!(out, "left:\n{}right:\n{}", snf.left.to_text(), snf.right.to_text()).unwrap();
            if w.verified {
                out.push_str("verified: left * A * right = diag, left and right unimodular\n");
            } else {
                out.push_str("verification FAILED\n");
            }
        }
        out
    };
    Ok(Outcome { stdout, code })
}

fn sweep_cell(m: usize, n: usize) -> SweepCell {
    let mut cell = SweepCell {
        m,
        n,
        agreement: false,
        formula_group: None,
        snf_group: None,
        formula_tree_count: None,
        matrix_tree_count: None,
        error: None,
    };
    let run = || -> critgroup::Result<_> {
        let closed = critical_group_closed(m, n)?;
        let closed_trees = tree_number_closed(m, n)?;
        let g = Multigraph::km_cn(m, n)?;
        Ok((closed.group, closed_trees, critical_group(&g)?, spanning_tree_count(&g)?))
    };
    match run() {
        Ok((fg, ft, cg, ct)) => {
            cell.agreement = groups_isomorphic(&fg, &cg) && ft == ct;
            cell.formula_group = Some(fg.to_string());
            cell.snf_group = Some(cg.to_string());
            cell.formula_tree_count = Some(ft.to_string());
            cell.matrix_tree_count = Some(ct.to_string());
        }
        Err(e) => cell.error = Some(e.to_string()),
    }
    cell
}

fn cell_line(c: &SweepCell) -> String {
    let head = format!("m={} n={}", c.m, c.n);
    if let Some(e) = &c.error {
        return format!("{head} ERROR {e}");
    }
    let fg = c.formula_group.as_deref().unwrap_or_default();
    let ft = c.formula_tree_count.as_deref().unwrap_or_default();
    if c.agreement {
        format!("{head} OK trees={ft} group={fg}")
    } else {
        format!(
            "{head} MISMATCH formula: trees={ft} group={fg}; snf: trees={} group={}",
            c.matrix_tree_count.as_deref().unwrap_or_default(),
            c.snf_group.as_deref().unwrap_or_default()
        )
    }
}

pub fn sweep(args: &SweepArgs) -> CliResult<Outcome> {
    let limit = max_dim()?;
    let (m_lo, m_hi) = args.m_range;
    let (n_lo, n_hi) = args.n_range;
    check_dim(m_hi.saturating_mul(n_hi), limit)?;

    let grid: Vec<(usize, usize)> = (m_lo..=m_hi)
        .flat_map(|m| (n_lo..=n_hi).map(move |n| (m, n)))
        .collect();
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = args.jobs {
        builder = builder.num_threads(jobs as usize);
    }
    let pool = builder
        .build()
        .map_err(|e| CliError::Internal(format!("thread pool: {e}")))?;
    // `collect` on an indexed parallel iterator keeps grid order.
    let cells: Vec<SweepCell> = pool.install(|| grid.par_iter().map(|&(m, n)| sweep_cell(m, n)).collect());

    let agreed = cells.iter().filter(|c| c.agreement).count();
    let total = cells.len();
    let code = if agreed == total { exit::OK } else { exit::DISAGREEMENT };
    let stdout = if args.json {
        to_json(&SweepReport {
            m_range: args.m_range,
            n_range: args.n_range,
            cells,
            agreed,
            total,
        })
    } else {
        let mut out = String::new();
        for c in &cells {
            writeln!(out, "{}", cell_line(c)).unwrap();
        }
        writeln!(out, "{agreed} of {total} cells agree").unwrap();
        out
    };
    Ok(Outcome { stdout, code })
}
