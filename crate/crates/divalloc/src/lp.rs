//! Grid LPs: the full/partial upper-bound programs over allocation
//! values `A(t1, t2)`, and the `Q, R` synthesis program whose optimal
//! solution powers the partial-family mechanism.
//!
//! Instances are explicit row lists with descriptive tags, so they can
//! be exported to a text format, solved through a pluggable backend,
//! and independently re-checked: a reported optimum is never trusted
//! until every row is verified against the values at `1e-7`.
//!
//! The full strategyproofness family has a cubic number of rows; each
//! row carries a `seed` flag and the solver activates non-seed rows
//! lazily (solve on the seeds, add violated rows, repeat), which makes
//! the unpruned instances tractable because the pruned neighbor rows
//! are believed — and empirically observed — to imply the rest.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::piecewise::PiecewiseFunction;
use crate::two_item::QRTables;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

/// Which constraint family a row belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowTag {
    Sp,
    Competitiveness,
    Fullness,
    Feasibility,
    Nonnegativity,
}

impl RowTag {
    fn as_str(&self) -> &'static str {
        match self {
            RowTag::Sp => "sp",
            RowTag::Competitiveness => "competitiveness",
            RowTag::Fullness => "fullness",
            RowTag::Feasibility => "feasibility",
            RowTag::Nonnegativity => "nonnegativity",
        }
    }

    fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "sp" => RowTag::Sp,
            "competitiveness" => RowTag::Competitiveness,
            "fullness" => RowTag::Fullness,
            "feasibility" => RowTag::Feasibility,
            "nonnegativity" => RowTag::Nonnegativity,
            other => return Err(Error::Parse(format!("unknown row tag {other}"))),
        })
    }
}

/// One constraint row: `sum coef * var  rel  rhs`.
#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub name: String,
    /// `(variable index, coefficient)`, indices into the instance's
    /// variable list; merged (no repeated indices).
    pub terms: Vec<(usize, f64)>,
    pub relation: Relation,
    pub rhs: f64,
    pub tag: RowTag,
    /// Rows the lazy solver starts from; non-seed rows are activated
    /// only when the current optimum violates them.
    pub seed: bool,
}

/// An LP over nonnegative variables (lower bound 0, no upper bound),
/// maximizing a linear objective.
#[derive(Debug, Clone, PartialEq)]
pub struct LPInstance {
    pub variables: Vec<String>,
    /// `(variable index, coefficient)` of the maximized objective.
    pub objective: Vec<(usize, f64)>,
    pub rows: Vec<Row>,
}

impl LPInstance {
    /// Checks that every row and the objective reference declared
    /// variables only.
    pub fn validate(&self) -> Result<()> {
        let n = self.variables.len();
        for (j, _) in &self.objective {
            if *j >= n {
                return Err(Error::Lp(format!("objective references variable {j} of {n}")));
            }
        }
        for row in &self.rows {
            for (j, _) in &row.terms {
                if *j >= n {
                    return Err(Error::Lp(format!(
                        "row {} references variable {j} of {n}",
                        row.name
                    )));
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

/// A solver's answer; `values` aligns with the instance's variables.
#[derive(Debug, Clone, PartialEq)]
pub struct LPSolution {
    pub status: SolveStatus,
    pub objective_value: f64,
    pub names: Vec<String>,
    pub values: Vec<f64>,
}

impl LPSolution {
    pub fn value(&self, name: &str) -> Option<f64> {
        self.names.iter().position(|n| n == name).map(|i| self.values[i])
    }
}

/// Abstract solver: given an instance and a set of active rows, return
/// an optimum of the sub-instance.
pub trait SolverBackend {
    fn solve_subset(&self, lp: &LPInstance, active: &[bool]) -> Result<LPSolution>;
    fn name(&self) -> &'static str;

    /// Whether the backend would rather be handed the whole instance
    /// than go through lazy row activation.
    fn prefers_full(&self) -> bool {
        false
    }
}

/// Backend built on the embedded sparse-simplex crate.
pub struct MicrolpBackend;

impl SolverBackend for MicrolpBackend {
    fn solve_subset(&self, lp: &LPInstance, active: &[bool]) -> Result<LPSolution> {
        use microlp::{ComparisonOp, OptimizationDirection, Problem};
        let mut prob = Problem::new(OptimizationDirection::Maximize);
        let mut obj = vec![0.0; lp.variables.len()];
        for (j, c) in &lp.objective {
            obj[*j] += c;
        }
        let vars: Vec<_> = obj
            .iter()
            .map(|c| prob.add_var(*c, (0.0, f64::INFINITY)))
            .collect();
        for (row, on) in lp.rows.iter().zip(active) {
            if !on {
                continue;
            }
            let op = match row.relation {
                Relation::Le => ComparisonOp::Le,
                Relation::Eq => ComparisonOp::Eq,
                Relation::Ge => ComparisonOp::Ge,
            };
            let terms: Vec<_> = row.terms.iter().map(|(j, c)| (vars[*j], *c)).collect();
            prob.add_constraint(terms, op, row.rhs);
        }
        match prob.solve() {
            Ok(sol) => Ok(LPSolution {
                status: SolveStatus::Optimal,
                objective_value: sol.objective(),
                names: lp.variables.clone(),
                values: vars.iter().map(|v| sol[*v]).collect(),
            }),
            Err(microlp::Error::Infeasible) => Ok(LPSolution {
                status: SolveStatus::Infeasible,
                objective_value: f64::NAN,
                names: lp.variables.clone(),
                values: vec![],
            }),
            Err(microlp::Error::Unbounded) => Ok(LPSolution {
                status: SolveStatus::Unbounded,
                objective_value: f64::INFINITY,
                names: lp.variables.clone(),
                values: vec![],
            }),
            Err(e) => Err(Error::SolverStatus(e.to_string())),
        }
    }

    fn name(&self) -> &'static str {
        "microlp"
    }
}

/// Backend built on the embedded interior-point crate. Unlike the
/// simplex backend it digests the large design LPs whole, so it skips
/// lazy activation.
pub struct ClarabelBackend;

impl SolverBackend for ClarabelBackend {
    fn solve_subset(&self, lp: &LPInstance, active: &[bool]) -> Result<LPSolution> {
        use clarabel::algebra::CscMatrix;
        use clarabel::solver::{
            DefaultSettingsBuilder, DefaultSolver, IPSolver, SolverStatus, SupportedConeT,
        };
        let n = lp.variables.len();
        // conic form: A x + s = b with s in Zero (equalities) then
        // Nonnegative (<= rows, then the x >= 0 bounds)
        let eq: Vec<&Row> = lp
            .rows
            .iter()
            .zip(active)
            .filter(|(r, on)| **on && r.relation == Relation::Eq)
            .map(|(r, _)| r)
            .collect();
        let ineq: Vec<&Row> = lp
            .rows
            .iter()
            .zip(active)
            .filter(|(r, on)| **on && r.relation != Relation::Eq)
            .map(|(r, _)| r)
            .collect();
        let m = eq.len() + ineq.len() + n;
        let mut ti = Vec::new();
        let mut tj = Vec::new();
        let mut tv = Vec::new();
        let mut b = Vec::with_capacity(m);
        let mut row_idx = 0;
        for row in eq.iter().chain(&ineq) {
            let sign = if row.relation == Relation::Ge { -1.0 } else { 1.0 };
            for (j, c) in &row.terms {
                ti.push(row_idx);
                tj.push(*j);
                tv.push(sign * c);
            }
            b.push(sign * row.rhs);
            row_idx += 1;
        }
        for j in 0..n {
            ti.push(row_idx + j);
            tj.push(j);
            tv.push(-1.0);
            b.push(0.0);
        }
        let a = CscMatrix::new_from_triplets(m, n, ti, tj, tv);
        let p = CscMatrix::new(n, n, vec![0; n + 1], vec![], vec![]);
        // maximize c'x == minimize (-c)'x
        let mut q = vec![0.0; n];
        for (j, c) in &lp.objective {
            q[*j] -= c;
        }
        let cones = [
            SupportedConeT::ZeroConeT(eq.len()),
            SupportedConeT::NonnegativeConeT(ineq.len() + n),
        ];
        let settings = DefaultSettingsBuilder::default()
            .verbose(false)
            .tol_feas(1e-10)
            .tol_gap_abs(1e-10)
            .tol_gap_rel(1e-10)
            .max_iter(200)
            .build()
            .map_err(|e| Error::SolverStatus(e.to_string()))?;
        let mut solver = DefaultSolver::new(&p, &q, &a, &b, &cones, settings)
            .map_err(|e| Error::SolverStatus(e.to_string()))?;
        solver.solve();
        let sol = solver.solution;
        match sol.status {
            SolverStatus::Solved | SolverStatus::AlmostSolved => Ok(LPSolution {
                status: SolveStatus::Optimal,
                objective_value: -sol.obj_val,
                names: lp.variables.clone(),
                values: sol.x,
            }),
            SolverStatus::PrimalInfeasible | SolverStatus::AlmostPrimalInfeasible => {
                Ok(LPSolution {
                    status: SolveStatus::Infeasible,
                    objective_value: f64::NAN,
                    names: lp.variables.clone(),
                    values: vec![],
                })
            }
            SolverStatus::DualInfeasible | SolverStatus::AlmostDualInfeasible => Ok(LPSolution {
                status: SolveStatus::Unbounded,
                objective_value: f64::INFINITY,
                names: lp.variables.clone(),
                values: vec![],
            }),
            other => Err(Error::SolverStatus(format!("{other:?}"))),
        }
    }

    fn name(&self) -> &'static str {
        "clarabel"
    }

    fn prefers_full(&self) -> bool {
        true
    }
}

/// Backend chosen from the `DIVALLOC_SOLVER` environment variable:
/// `clarabel` (the default) or `microlp`.
pub fn backend_from_env() -> Result<Box<dyn SolverBackend>> {
    match std::env::var("DIVALLOC_SOLVER") {
        Ok(name) if name == "microlp" => Ok(Box::new(MicrolpBackend)),
        Ok(name) if name != "clarabel" => {
            Err(Error::InvalidInput(format!("unknown solver backend {name}")))
        }
        _ => Ok(Box::new(ClarabelBackend)),
    }
}

/// Violation of one row at the given values (positive = violated).
pub fn row_violation(row: &Row, values: &[f64]) -> f64 {
    let lhs: f64 = row.terms.iter().map(|(j, c)| c * values[*j]).sum();
    match row.relation {
        Relation::Le => lhs - row.rhs,
        Relation::Ge => row.rhs - lhs,
        Relation::Eq => (lhs - row.rhs).abs(),
    }
}

/// Independent re-check of a claimed optimum: every row within `tol`,
/// plus variable nonnegativity. Returns the largest violation.
pub fn verify_solution(lp: &LPInstance, sol: &LPSolution, tol: f64) -> Result<f64> {
    if sol.status != SolveStatus::Optimal {
        return Err(Error::SolverStatus(format!("cannot verify a {:?} solution", sol.status)));
    }
    if sol.values.len() != lp.variables.len() {
        return Err(Error::DimensionMismatch(lp.variables.len(), sol.values.len()));
    }
    let mut worst = 0.0_f64;
    let mut worst_name = String::new();
    for row in &lp.rows {
        let v = row_violation(row, &sol.values);
        if v > worst {
            worst = v;
            worst_name = row.name.clone();
        }
    }
    for (j, v) in sol.values.iter().enumerate() {
        if -v > worst {
            worst = -v;
            worst_name = format!("bound {}", lp.variables[j]);
        }
    }
    if worst > tol {
        return Err(Error::Lp(format!(
            "solution violates {worst_name} by {worst:.3e} (tol {tol:.0e})"
        )));
    }
    Ok(worst)
}

/// Solves to optimality with lazy row activation: start from the seed
/// rows, re-solve while the optimum violates inactive rows, and
/// independently verify the final answer against the full row set.
pub fn solve(lp: &LPInstance, backend: &dyn SolverBackend) -> Result<LPSolution> {
    lp.validate()?;
    let mut active: Vec<bool> = lp.rows.iter().map(|r| r.seed).collect();
    if backend.prefers_full() || active.iter().all(|a| !a) {
        active.iter_mut().for_each(|a| *a = true);
    }
    // cap how many rows join per round: activating every violated row
    // at once can balloon the working instance to nearly the full row
    // set, which defeats the purpose of laziness
    let batch = (lp.variables.len() * 2).max(256);
    for _ in 0..400 {
        let sol = backend.solve_subset(lp, &active)?;
        if sol.status != SolveStatus::Optimal {
            return Ok(sol);
        }
        let mut violated: Vec<(usize, f64)> = lp
            .rows
            .iter()
            .enumerate()
            .filter(|(i, row)| !active[*i] && row_violation(row, &sol.values) > 1e-9)
            .map(|(i, row)| (i, row_violation(row, &sol.values)))
            .collect();
        if violated.is_empty() {
            verify_solution(lp, &sol, 1e-7)?;
            return Ok(sol);
        }
        violated.sort_by(|a, b| b.1.total_cmp(&a.1));
        for &(i, _) in violated.iter().take(batch) {
            active[i] = true;
        }
    }
    Err(Error::SolverStatus("lazy row activation did not converge".into()))
}

/// Full (`A + A' = 1`) or partial (`A + A' <= 1`) variant of the
/// upper-bound LP.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GcVariant {
    Full,
    Partial,
}

fn merge(terms: HashMap<usize, f64>) -> Vec<(usize, f64)> {
    let mut v: Vec<(usize, f64)> = terms.into_iter().filter(|(_, c)| *c != 0.0).collect();
    v.sort_by_key(|(j, _)| *j);
    v
}

/// Builds the grid upper-bound LP: variables `A(t1,t2)` on the
/// `(n+1)^2` grid plus `lambda`, maximizing `lambda` subject to
/// truthfulness rows, competitiveness rows `SW >= (1 + |t1-t2|) lambda`,
/// and fullness rows (equalities, or `<= 1` for the partial variant).
/// With `prune`, only truthfulness rows between adjacent grid types
/// (`|t1 - t1'| = 1/n`) are emitted; without it all rows are present
/// but the adjacent ones are flagged as solver seeds.
pub fn build_gc_lp(n: usize, variant: GcVariant, prune: bool) -> Result<LPInstance> {
    if n < 2 {
        return Err(Error::InvalidInput("n must be at least 2".into()));
    }
    let nn = n + 1;
    let vid = |i: usize, j: usize| i * nn + j;
    let lam = nn * nn;
    let mut variables: Vec<String> = Vec::with_capacity(nn * nn + 1);
    for i in 0..nn {
        for j in 0..nn {
            variables.push(format!("A_{i}_{j}"));
        }
    }
    variables.push("lambda".into());
    let t = |i: usize| i as f64 / n as f64;
    let mut rows = Vec::new();
    // truthfulness: u_hat(t1, t2) >= t1 A(t1', t2) + (1-t1) A(1-t1', 1-t2)
    for i1 in 0..nn {
        let t1 = t(i1);
        for i1p in 0..nn {
            if i1p == i1 {
                continue;
            }
            let adjacent = i1.abs_diff(i1p) == 1;
            if prune && !adjacent {
                continue;
            }
            for i2 in 0..nn {
                let mut terms = HashMap::new();
                let mut acc = |k: usize, v: f64| *terms.entry(k).or_insert(0.0) += v;
                acc(vid(i1p, i2), t1);
                acc(vid(n - i1p, n - i2), 1.0 - t1);
                acc(vid(i1, i2), -t1);
                acc(vid(n - i1, n - i2), -(1.0 - t1));
                rows.push(Row {
                    name: format!("sp_{i1}_{i1p}_{i2}"),
                    terms: merge(terms),
                    relation: Relation::Le,
                    rhs: 0.0,
                    tag: RowTag::Sp,
                    seed: adjacent,
                });
            }
        }
    }
    // competitiveness: (1 + |t1 - t2|) lambda - SW(t1, t2) <= 0
    for i1 in 0..nn {
        for i2 in 0..nn {
            let (t1, t2) = (t(i1), t(i2));
            let mut terms = HashMap::new();
            let mut acc = |k: usize, v: f64| *terms.entry(k).or_insert(0.0) += v;
            acc(lam, 1.0 + (t1 - t2).abs());
            acc(vid(i1, i2), -t1);
            acc(vid(n - i1, n - i2), -(1.0 - t1));
            acc(vid(i2, i1), -t2);
            acc(vid(n - i2, n - i1), -(1.0 - t2));
            rows.push(Row {
                name: format!("comp_{i1}_{i2}"),
                terms: merge(terms),
                relation: Relation::Le,
                rhs: 0.0,
                tag: RowTag::Competitiveness,
                seed: true,
            });
        }
    }
    // fullness, one row per unordered pair
    for i1 in 0..nn {
        for i2 in i1..nn {
            let mut terms = HashMap::new();
            let mut acc = |k: usize, v: f64| *terms.entry(k).or_insert(0.0) += v;
            acc(vid(i1, i2), 1.0);
            acc(vid(i2, i1), 1.0);
            rows.push(Row {
                name: format!("full_{i1}_{i2}"),
                terms: merge(terms),
                relation: match variant {
                    GcVariant::Full => Relation::Eq,
                    GcVariant::Partial => Relation::Le,
                },
                rhs: 1.0,
                tag: RowTag::Fullness,
                seed: true,
            });
        }
    }
    Ok(LPInstance {
        variables,
        objective: vec![(lam, 1.0)],
        rows,
    })
}

/// Builds the `Q, R` synthesis LP: `A(t1,t2) = Q(t2) f1(t1) + R(t2)`
/// for `t1 <= 1/2`, extended past `1/2` by `Q(1-t2) f2(t1)`, with
/// feasibility-with-headroom rows `A + A' <= 1 - delta` and the same
/// competitiveness rows as the grid LP, maximizing `lambda`.
pub fn build_qr_lp(
    n: usize,
    delta: f64,
    f1: &PiecewiseFunction,
    f2: &PiecewiseFunction,
) -> Result<LPInstance> {
    if n < 2 {
        return Err(Error::InvalidInput("n must be at least 2".into()));
    }
    if !(0.0..1.0).contains(&delta) {
        return Err(Error::InvalidInput(format!("delta = {delta} outside [0, 1)")));
    }
    let nn = n + 1;
    let qv = |i: usize| i;
    let rv = |i: usize| nn + i;
    let lam = 2 * nn;
    let mut variables = Vec::with_capacity(2 * nn + 1);
    for i in 0..nn {
        variables.push(format!("Q_{i}"));
    }
    for i in 0..nn {
        variables.push(format!("R_{i}"));
    }
    variables.push("lambda".into());
    let t = |i: usize| i as f64 / n as f64;
    let f1_half = f1.eval(0.5);
    // A(t1, t2) as linear terms in Q, R
    let a_terms = |i1: usize, i2: usize, weight: f64, terms: &mut HashMap<usize, f64>| {
        let t1 = t(i1);
        let mut acc = |k: usize, v: f64| *terms.entry(k).or_insert(0.0) += v;
        if 2 * i1 <= n {
            acc(qv(i2), weight * f1.eval(t1));
            acc(rv(i2), weight);
        } else {
            acc(qv(i2), weight * f1_half);
            acc(rv(i2), weight);
            acc(qv(n - i2), weight * f2.eval(t1));
        }
    };
    // seed a coarse sub-grid (plus the boundary and diagonal); the
    // lazy solver pulls in the remaining rows only where violated,
    // which keeps large instances tractable
    let stride = (n / 25).max(1);
    let seeded =
        |i1: usize, i2: usize| (i1 % stride == 0 && i2 % stride == 0) || i1 == i2 || i2 == n;
    let mut rows = Vec::new();
    for i1 in 0..nn {
        for i2 in i1..nn {
            let seed = seeded(i1, i2);
            let mut terms = HashMap::new();
            a_terms(i1, i2, 1.0, &mut terms);
            a_terms(i2, i1, 1.0, &mut terms);
            rows.push(Row {
                name: format!("feas_{i1}_{i2}"),
                terms: merge(terms),
                relation: Relation::Le,
                rhs: 1.0 - delta,
                tag: RowTag::Feasibility,
                seed,
            });
            let (t1, t2) = (t(i1), t(i2));
            let mut terms = HashMap::new();
            terms.insert(lam, 1.0 + (t2 - t1).abs());
            a_terms(i1, i2, -t1, &mut terms);
            a_terms(n - i1, n - i2, -(1.0 - t1), &mut terms);
            a_terms(i2, i1, -t2, &mut terms);
            a_terms(n - i2, n - i1, -(1.0 - t2), &mut terms);
            rows.push(Row {
                name: format!("comp_{i1}_{i2}"),
                terms: merge(terms),
                relation: Relation::Le,
                rhs: 0.0,
                tag: RowTag::Competitiveness,
                seed,
            });
        }
    }
    Ok(LPInstance {
        variables,
        objective: vec![(lam, 1.0)],
        rows,
    })
}

/// Packages a solved `Q, R` program into tables for the mechanism.
pub fn extract_qr_tables(sol: &LPSolution, n: usize, delta: f64) -> Result<QRTables> {
    if sol.status != SolveStatus::Optimal {
        return Err(Error::SolverStatus(format!(
            "cannot extract tables from a {:?} solution",
            sol.status
        )));
    }
    let lookup = |name: String| {
        sol.value(&name)
            .ok_or_else(|| Error::Lp(format!("solution has no variable {name}")))
    };
    let mut q = Vec::with_capacity(n + 1);
    let mut r = Vec::with_capacity(n + 1);
    for i in 0..=n {
        // clip the solver's tiny negative roundoff on bound-active vars
        q.push(lookup(format!("Q_{i}"))?.max(0.0));
        r.push(lookup(format!("R_{i}"))?.max(0.0));
    }
    QRTables::new(n, q, r, delta, sol.objective_value)
}

fn relation_str(r: Relation) -> &'static str {
    match r {
        Relation::Le => "le",
        Relation::Eq => "eq",
        Relation::Ge => "ge",
    }
}

/// Writes the text form: header, objective, variable list, then one
/// row per line as `name tag relation rhs seed term term ...` with
/// terms `var:coef`. Coefficients print with shortest round-trip
/// formatting, so import reproduces the exact floats.
pub fn export_lp(lp: &LPInstance, path: &Path) -> Result<()> {
    lp.validate()?;
    let mut out = String::new();
    out.push_str("divalloc-lp 1\n");
    out.push_str("objective maximize");
    for (j, c) in &lp.objective {
        write!(out, " {}:{}", lp.variables[*j], c).unwrap();
    }
    out.push('\n');
    writeln!(out, "variables {}", lp.variables.len()).unwrap();
    for v in &lp.variables {
        out.push_str(v);
        out.push('\n');
    }
    writeln!(out, "rows {}", lp.rows.len()).unwrap();
    for row in &lp.rows {
        write!(
            out,
            "{} {} {} {} {}",
            row.name,
            row.tag.as_str(),
            relation_str(row.relation),
            row.rhs,
            u8::from(row.seed)
        )
        .unwrap();
        for (j, c) in &row.terms {
            write!(out, " {}:{}", lp.variables[*j], c).unwrap();
        }
        out.push('\n');
    }
    out.push_str("end\n");
    std::fs::write(path, out)?;
    Ok(())
}

/// Reads the format written by [`export_lp`].
pub fn import_lp(path: &Path) -> Result<LPInstance> {
    let text = std::fs::read_to_string(path)?;
    let mut lines = text.lines();
    let mut next = || lines.next().ok_or_else(|| Error::Parse("truncated lp file".into()));
    if next()? != "divalloc-lp 1" {
        return Err(Error::Parse("not a divalloc-lp file".into()));
    }
    let obj_line = next()?;
    let head = next()?;
    let var_count: usize = head
        .strip_prefix("variables ")
        .ok_or_else(|| Error::Parse(format!("expected variables header, got {head}")))?
        .parse()
        .map_err(|e: std::num::ParseIntError| Error::Parse(e.to_string()))?;
    let mut variables = Vec::with_capacity(var_count);
    let mut index = HashMap::new();
    for _ in 0..var_count {
        let name = next()?.to_string();
        index.insert(name.clone(), variables.len());
        variables.push(name);
    }
    let parse_terms = |fields: &mut std::str::SplitWhitespace| -> Result<Vec<(usize, f64)>> {
        let mut terms = Vec::new();
        for field in fields {
            let (name, coef) = field
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("bad term {field}")))?;
            let j = *index
                .get(name)
                .ok_or_else(|| Error::Parse(format!("unknown variable {name}")))?;
            terms.push((j, coef.parse().map_err(|e: std::num::ParseFloatError| Error::Parse(e.to_string()))?));
        }
        Ok(terms)
    };
    let mut obj_fields = obj_line.split_whitespace();
    if (obj_fields.next(), obj_fields.next()) != (Some("objective"), Some("maximize")) {
        return Err(Error::Parse("expected objective maximize line".into()));
    }
    let objective = parse_terms(&mut obj_fields)?;
    let head = next()?;
    let row_count: usize = head
        .strip_prefix("rows ")
        .ok_or_else(|| Error::Parse(format!("expected rows header, got {head}")))?
        .parse()
        .map_err(|e: std::num::ParseIntError| Error::Parse(e.to_string()))?;
    let mut rows = Vec::with_capacity(row_count);
    for _ in 0..row_count {
        let line = next()?;
        let mut fields = line.split_whitespace();
        let mut take =
            || fields.next().ok_or_else(|| Error::Parse(format!("short row line: {line}")));
        let name = take()?.to_string();
        let tag = RowTag::parse(take()?)?;
        let relation = match take()? {
            "le" => Relation::Le,
            "eq" => Relation::Eq,
            "ge" => Relation::Ge,
            other => return Err(Error::Parse(format!("unknown relation {other}"))),
        };
        let rhs: f64 = take()?.parse().map_err(|e: std::num::ParseFloatError| Error::Parse(e.to_string()))?;
        let seed = match take()? {
            "0" => false,
            "1" => true,
            other => return Err(Error::Parse(format!("bad seed flag {other}"))),
        };
        let terms = parse_terms(&mut fields)?;
        rows.push(Row { name, terms, relation, rhs, tag, seed });
    }
    if next()? != "end" {
        return Err(Error::Parse("missing end marker".into()));
    }
    let lp = LPInstance { variables, objective, rows };
    lp.validate()?;
    Ok(lp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::two_item::{partial_f1, partial_f2};

    fn lambda_of(lp: &LPInstance) -> f64 {
        solve(lp, &MicrolpBackend).unwrap().objective_value
    }

    #[test]
    fn trivial_instance_solves() {
        let lp = LPInstance {
            variables: vec!["lambda".into()],
            objective: vec![(0, 1.0)],
            rows: vec![Row {
                name: "cap".into(),
                terms: vec![(0, 1.0)],
                relation: Relation::Le,
                rhs: 0.5,
                tag: RowTag::Competitiveness,
                seed: true,
            }],
        };
        let sol = solve(&lp, &MicrolpBackend).unwrap();
        assert_eq!(sol.status, SolveStatus::Optimal);
        assert!((sol.objective_value - 0.5).abs() < 1e-9);
        assert!((sol.value("lambda").unwrap() - 0.5).abs() < 1e-9);
    }

    #[test]
    fn infeasible_and_unbounded_are_surfaced() {
        let mut lp = LPInstance {
            variables: vec!["x".into()],
            objective: vec![(0, 1.0)],
            rows: vec![Row {
                name: "impossible".into(),
                terms: vec![(0, 1.0)],
                relation: Relation::Le,
                rhs: -1.0,
                tag: RowTag::Feasibility,
                seed: true,
            }],
        };
        assert_eq!(solve(&lp, &MicrolpBackend).unwrap().status, SolveStatus::Infeasible);
        lp.rows.clear();
        lp.rows.push(Row {
            name: "loose".into(),
            terms: vec![(0, 1.0)],
            relation: Relation::Ge,
            rhs: 1.0,
            tag: RowTag::Feasibility,
            seed: true,
        });
        assert_eq!(solve(&lp, &MicrolpBackend).unwrap().status, SolveStatus::Unbounded);
    }

    #[test]
    fn gc_row_and_variable_counts() {
        let nn = 51usize;
        let unpruned = build_gc_lp(50, GcVariant::Full, false).unwrap();
        assert_eq!(unpruned.variables.len(), nn * nn + 1);
        let sp = unpruned.rows.iter().filter(|r| r.tag == RowTag::Sp).count();
        assert_eq!(sp, nn * (nn - 1) * nn); // (n+1) * n misreport pairs * (n+1) opponents
        let pruned = build_gc_lp(50, GcVariant::Full, true).unwrap();
        let sp = pruned.rows.iter().filter(|r| r.tag == RowTag::Sp).count();
        assert_eq!(sp, 2 * 50 * nn);
        // fullness emitted once per unordered pair
        let full = pruned.rows.iter().filter(|r| r.tag == RowTag::Fullness).count();
        assert_eq!(full, nn * (nn + 1) / 2);
    }

    #[test]
    fn gc_lambda_orderings_at_small_n() {
        let full_12 = lambda_of(&build_gc_lp(12, GcVariant::Full, false).unwrap());
        let full_12_pruned = lambda_of(&build_gc_lp(12, GcVariant::Full, true).unwrap());
        let partial_12 = lambda_of(&build_gc_lp(12, GcVariant::Partial, false).unwrap());
        let full_24 = lambda_of(&build_gc_lp(24, GcVariant::Full, true).unwrap());
        // pruning keeps a subset of rows; empirically it is tight
        assert!(full_12_pruned >= full_12 - 1e-9);
        assert!((full_12_pruned - full_12).abs() < 1e-6);
        // relaxing fullness to <= can only help
        assert!(partial_12 >= full_12 - 1e-9);
        // grid refinement of a divisor grid can only lower the bound
        assert!(full_24 <= full_12 + 1e-9);
        // all bounds live above the attained 5/6
        for v in [full_12, partial_12, full_24] {
            assert!(v >= 5.0 / 6.0 - 1e-9 && v <= 1.0, "lambda = {v}");
        }
    }

    #[test]
    fn qr_instance_solves_and_extracts() {
        let n = 40;
        let delta = 2.92 / (2.0 * n as f64);
        let lp = build_qr_lp(n, delta, &partial_f1(), &partial_f2()).unwrap();
        let sol = solve(&lp, &MicrolpBackend).unwrap();
        assert_eq!(sol.status, SolveStatus::Optimal);
        assert!(sol.objective_value > 0.5 && sol.objective_value < 1.0);
        let tables = extract_qr_tables(&sol, n, delta).unwrap();
        assert_eq!(tables.q_values.len(), n + 1);
        assert!((tables.lambda - sol.objective_value).abs() < 1e-12);
        // headroom relaxation: delta = 0 can only raise the optimum
        let relaxed = build_qr_lp(n, 0.0, &partial_f1(), &partial_f2()).unwrap();
        assert!(lambda_of(&relaxed) >= sol.objective_value - 1e-9);

        assert!(extract_qr_tables(
            &LPSolution {
                status: SolveStatus::Infeasible,
                objective_value: f64::NAN,
                names: vec![],
                values: vec![]
            },
            n,
            delta
        )
        .is_err());
    }

    #[test]
    fn export_round_trips_exactly() {
        let dir = tempfile::tempdir().unwrap();
        for lp in [
            build_gc_lp(4, GcVariant::Full, true).unwrap(),
            build_gc_lp(3, GcVariant::Partial, false).unwrap(),
            build_qr_lp(5, 0.01, &partial_f1(), &partial_f2()).unwrap(),
        ] {
            let path = dir.path().join("instance.lp");
            export_lp(&lp, &path).unwrap();
            let back = import_lp(&path).unwrap();
            assert_eq!(lp, back);
        }
        let lp = build_gc_lp(4, GcVariant::Full, true).unwrap();
        assert_eq!(lp.variables.len(), 26);
        assert!(lp.rows.iter().any(|r| r.name == "sp_0_1_0"));
    }

    #[test]
    fn verification_rejects_tampered_solutions() {
        let lp = build_gc_lp(6, GcVariant::Full, false).unwrap();
        let mut sol = solve(&lp, &MicrolpBackend).unwrap();
        let violation = verify_solution(&lp, &sol, 1e-7).unwrap();
        assert!(violation <= 1e-7);
        sol.values[3] += 0.1;
        assert!(verify_solution(&lp, &sol, 1e-7).is_err());
    }

    #[test]
    fn backends_agree_on_a_small_instance() {
        let lp = build_gc_lp(12, GcVariant::Full, false).unwrap();
        let simplex = solve(&lp, &MicrolpBackend).unwrap().objective_value;
        let interior = solve(&lp, &ClarabelBackend).unwrap().objective_value;
        assert!(
            (simplex - interior).abs() < 1e-7,
            "{simplex} vs {interior}"
        );
    }
}
