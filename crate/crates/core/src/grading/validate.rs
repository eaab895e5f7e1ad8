use std::fmt;

use crate::temperley_lieb::{check_jw_homogeneity, TlError, TwoColorDegreeData, MAX_STRANDS};

use super::{CartanSpec, CoxeterMatrix, GradingError, GradingSpec};

/// One of the conditions a grading must meet to extend to the Hecke category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Clause {
    /// Sizes agree and the Cartan data is a valid realization.
    Realization,
    /// deg α_s = f_s + g_s.
    RootDegrees { s: usize },
    /// f_s + g_s = f_t + g_t when a pairing between s and t is nonzero.
    LinkedSums { s: usize, t: usize },
    /// For(f_s) = For(g_s) = 1 and For(deg α_s) = 2.
    ForgetfulMap,
    /// pos is positive on all declared V-degrees.
    Positivity,
    /// bar swaps f_s ↔ −g_s and negates V-degrees.
    Bar,
    /// The Jones–Wenzl projector of the pair (s, t) is homogeneous.
    JwHomogeneity { s: usize, t: usize },
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Clause::Realization => write!(f, "realization"),
            Clause::RootDegrees { s } => write!(f, "root degree of {s}"),
            Clause::LinkedSums { s, t } => write!(f, "linked sums ({s},{t})"),
            Clause::ForgetfulMap => write!(f, "forgetful map"),
            Clause::Positivity => write!(f, "positivity"),
            Clause::Bar => write!(f, "bar involution"),
            Clause::JwHomogeneity { s, t } => write!(f, "JW homogeneity ({s},{t})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail(String),
    /// Not checked by computation; the reason says why.
    Skipped(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClauseResult {
    pub clause: Clause,
    pub status: Status,
}

#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    pub results: Vec<ClauseResult>,
    pub notes: Vec<String>,
}

pub const H3_NOTE: &str = "Homogeneity of the Zamolodchikov relations is not checked; it holds \
automatically for every rank three finite parabolic, including type H3.";

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.first_failure().is_none()
    }

    pub fn first_failure(&self) -> Option<&ClauseResult> {
        self.results.iter().find(|r| matches!(r.status, Status::Fail(_)))
    }

    fn push(&mut self, clause: Clause, status: Status) {
        self.results.push(ClauseResult { clause, status });
    }

    fn check(&mut self, clause: Clause, ok: bool, why: impl FnOnce() -> String) {
        let status = if ok { Status::Pass } else { Status::Fail(why()) };
        self.push(clause, status);
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            match &r.status {
                Status::Pass => writeln!(f, "pass  {}", r.clause)?,
                Status::Fail(why) => writeln!(f, "FAIL  {}: {why}", r.clause)?,
                Status::Skipped(why) => writeln!(f, "skip  {}: {why}", r.clause)?,
            }
        }
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        Ok(())
    }
}

/// Checks every clause; all clauses are reported, not only the first failure.
pub fn validate(spec: &GradingSpec, matrix: &CoxeterMatrix, cartan: &CartanSpec) -> ValidationReport {
    let mut report = ValidationReport::default();
    let n = matrix.size();
    report.notes.push(H3_NOTE.to_string());
    let sized = [spec.f.len(), spec.g.len(), spec.root_degrees.len(), cartan.size()].iter().all(|&k| k == n);
    if !sized {
        report.push(Clause::Realization, Status::Fail("size mismatch between matrix, Cartan data and grading".into()));
        return report;
    }
    match cartan.check_realization(matrix) {
        Ok(()) => report.push(Clause::Realization, Status::Pass),
        Err(e) => {
            report.push(Clause::Realization, Status::Fail(e.to_string()));
            return report;
        }
    }

    let sums: Vec<_> = (0..n).map(|s| spec.f[s].add(&spec.g[s])).collect();
    for s in 0..n {
        report.check(Clause::RootDegrees { s }, sums[s] == spec.root_degrees[s], || {
            format!("f+g = {} but deg α = {}", sums[s], spec.root_degrees[s])
        });
    }
    for (s, t) in matrix.pairs() {
        if cartan.linked(s, t) {
            report.check(Clause::LinkedSums { s, t }, sums[s] == sums[t], || format!("{} ≠ {}", sums[s], sums[t]));
        }
    }

    if let Some(h) = &spec.for_map {
        let status = forgetful(spec, h);
        report.push(Clause::ForgetfulMap, status);
    }
    if let Some(pos) = &spec.pos {
        let status = match spec.verify_pos(pos) {
            Ok(true) => Status::Pass,
            Ok(false) => Status::Fail("not positive on every declared V-degree".into()),
            Err(e) => Status::Fail(e.to_string()),
        };
        report.push(Clause::Positivity, status);
    }
    if let Some(bar) = &spec.bar {
        let bad_fg = (0..n).find(|&s| bar.apply(&spec.f[s]) != spec.g[s].neg() || bar.apply(&spec.g[s]) != spec.f[s].neg());
        let bad_v = spec.v_degrees().find(|d| bar.apply(d) != d.neg());
        let status = match (bad_fg, bad_v) {
            (Some(s), _) => Status::Fail(format!("bar does not swap f and −g for {s}")),
            (None, Some(d)) => Status::Fail(format!("bar does not negate {d}")),
            (None, None) => Status::Pass,
        };
        report.push(Clause::Bar, status);
    }

    for (s, t) in matrix.pairs() {
        let clause = Clause::JwHomogeneity { s, t };
        let Some(m) = matrix.get(s, t) else {
            report.push(clause, Status::Skipped("m is infinite, no relation".into()));
            continue;
        };
        if cartan.linked(s, t) {
            // with equal sums every diagram has degree zero
            let status = if sums[s] == sums[t] {
                Status::Pass
            } else {
                Status::Fail("follows the linked-sums failure".into())
            };
            report.push(clause, status);
            continue;
        }
        if m == 2 {
            report.push(clause, Status::Pass);
            continue;
        }
        let k = m as usize - 1;
        if k > MAX_STRANDS {
            report.push(clause, Status::Skipped(format!("JW_{k} exceeds the size limit")));
            continue;
        }
        let data = TwoColorDegreeData::new(spec.f[s].clone(), spec.g[s].clone(), spec.f[t].clone(), spec.g[t].clone());
        let status = match check_jw_homogeneity(k, cartan.characteristic(), &data) {
            Ok(r) if r.homogeneous() => Status::Pass,
            Ok(r) => {
                let (d, c, deg) = &r.violators[0];
                Status::Fail(format!("{} diagrams of nonzero degree, e.g. {d} with coefficient {c} in degree {deg}", r.violators.len()))
            }
            Err(TlError::ProjectorMissing(why)) => Status::Fail(why),
            Err(e) => Status::Fail(e.to_string()),
        };
        report.push(clause, status);
    }
    report
}

fn forgetful(spec: &GradingSpec, h: &[i64]) -> Status {
    let ev = |x| spec.group.evaluate(h, x);
    let run = || -> Result<Option<String>, GradingError> {
        for s in 0..spec.size() {
            if ev(&spec.f[s])? != 1 || ev(&spec.g[s])? != 1 {
                return Ok(Some(format!("For(f) or For(g) is not 1 for {s}")));
            }
            if ev(&spec.root_degrees[s])? != 2 {
                return Ok(Some(format!("For(deg α) is not 2 for {s}")));
            }
        }
        Ok(None)
    };
    match run() {
        Ok(None) => Status::Pass,
        Ok(Some(why)) => Status::Fail(why),
        Err(e) => Status::Fail(e.to_string()),
    }
}
