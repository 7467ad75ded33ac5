//! Running verification suites over lattice families and rendering the
//! results as JSON lines.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use sps_core::swing::{
    boundary_reachability_persistence, lemma_suite, verify_prime_projectivity_lemma, verify_swing_lemma, Discrepancy,
    LemmaReport, VerifyReport,
};
use sps_core::{ConstructionError, PlanarLattice};

/// Environment variable capping the number of worker threads.
pub const WORKERS_ENV: &str = "SPS_WORKERS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    /// Oracle collapse against swing witnesses.
    Swing,
    /// Oracle collapse against prime-projectivity witnesses.
    Pproj,
    /// Structural checks on each lattice.
    Lemmas,
    /// Boundary reachability after every single fork insertion.
    Persistence,
}

/// A lattice to check, with a display name.
#[derive(Clone, Debug)]
pub struct Subject {
    pub name: String,
    pub depth: Option<usize>,
    pub lattice: PlanarLattice,
}

#[derive(Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
enum Line<'a> {
    Discrepancy {
        lattice: &'a str,
        kind: String,
        p: String,
        q: String,
        collapsed: bool,
        witness: Option<String>,
        detail: &'a str,
    },
    Violation {
        lattice: &'a str,
        check: &'a str,
        soft: bool,
        detail: &'a str,
    },
    Lattice {
        lattice: &'a str,
        #[serde(skip_serializing_if = "Option::is_none")]
        depth: Option<usize>,
        n: usize,
        #[serde(flatten)]
        counts: BTreeMap<&'static str, usize>,
    },
    Summary {
        suite: &'static str,
        lattices: usize,
        #[serde(flatten)]
        counts: BTreeMap<&'static str, usize>,
        failures: usize,
        passed: bool,
    },
}

fn render(line: &Line) -> String {
    serde_json::to_string(line).expect("plain data serializes")
}

/// Rendered report lines and the number of hard failures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub lines: Vec<String>,
    pub failures: usize,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn text(&self) -> String {
        let mut s = self.lines.join("\n");
        s.push('\n');
        s
    }
}

/// Thread pool sized by [`WORKERS_ENV`] when set to a positive integer.
pub fn worker_pool() -> rayon::ThreadPool {
    let workers = std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or(0);
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("thread pool")
}

fn suite_name(suite: Suite) -> &'static str {
    match suite {
        Suite::Swing => "swing",
        Suite::Pproj => "pproj",
        Suite::Lemmas => "lemmas",
        Suite::Persistence => "persistence",
    }
}

/// Runs an oracle or lemma suite on every subject in parallel. Output order
/// follows `subjects`, whatever the worker count. On explicit subjects the
/// persistence suite reduces to the lemma suite, whose boundary checks are
/// the per-lattice part of it.
pub fn run_on_subjects(suite: Suite, subjects: &[Subject]) -> SuiteOutcome {
    match suite {
        Suite::Swing | Suite::Pproj => {
            let reports: Vec<VerifyReport> = worker_pool().install(|| {
                subjects
                    .par_iter()
                    .map(|s| match suite {
                        Suite::Swing => verify_swing_lemma(&s.lattice),
                        _ => verify_prime_projectivity_lemma(&s.lattice),
                    })
                    .collect()
            });
            verify_lines(suite, subjects, &reports)
        }
        Suite::Lemmas | Suite::Persistence => {
            let reports: Vec<LemmaReport> =
                worker_pool().install(|| subjects.par_iter().map(|s| lemma_suite(&s.lattice)).collect());
            lemma_lines(subjects, &reports)
        }
    }
}

fn discrepancy_line<'a>(l: &PlanarLattice, lattice: &'a str, d: &'a Discrepancy) -> Line<'a> {
    Line::Discrepancy {
        lattice,
        kind: format!("{:?}", d.kind),
        p: l.describe(d.p),
        q: l.describe(d.q),
        collapsed: d.collapsed,
        witness: d.witness.as_ref().map(|w| w.describe(l)),
        detail: &d.detail,
    }
}

fn verify_lines(suite: Suite, subjects: &[Subject], reports: &[VerifyReport]) -> SuiteOutcome {
    let mut lines = Vec::new();
    let mut total = BTreeMap::from([("pairs", 0), ("collapsed", 0), ("witnesses", 0), ("discrepancies", 0)]);
    for (s, r) in subjects.iter().zip(reports) {
        for d in &r.discrepancies {
            lines.push(render(&discrepancy_line(&s.lattice, &s.name, d)));
        }
        let counts = BTreeMap::from([
            ("pairs", r.pairs),
            ("collapsed", r.collapsed),
            ("witnesses", r.witnesses),
            ("discrepancies", r.discrepancies.len()),
        ]);
        for (k, v) in &counts {
            *total.get_mut(k).unwrap() += v;
        }
        lines.push(render(&Line::Lattice {
            lattice: &s.name,
            depth: s.depth,
            n: s.lattice.len(),
            counts,
        }));
    }
    let failures = total["discrepancies"];
    lines.push(render(&Line::Summary {
        suite: suite_name(suite),
        lattices: subjects.len(),
        counts: total,
        failures,
        passed: failures == 0,
    }));
    SuiteOutcome { lines, failures }
}

fn lemma_lines(subjects: &[Subject], reports: &[LemmaReport]) -> SuiteOutcome {
    let mut lines = Vec::new();
    let mut failures = 0;
    let mut merged = LemmaReport::default();
    for (s, r) in subjects.iter().zip(reports) {
        for c in &r.checks {
            for v in &c.violations {
                lines.push(render(&Line::Violation {
                    lattice: &s.name,
                    check: c.name,
                    soft: c.soft,
                    detail: v,
                }));
            }
        }
        let counts = r
            .checks
            .iter()
            .filter(|c| !c.violations.is_empty())
            .map(|c| (c.name, c.violations.len()))
            .collect();
        lines.push(render(&Line::Lattice {
            lattice: &s.name,
            depth: s.depth,
            n: s.lattice.len(),
            counts,
        }));
        merged.merge(r.clone());
    }
    let mut counts = BTreeMap::new();
    for c in &merged.checks {
        counts.insert(c.name, c.instances);
        if !c.soft {
            failures += c.violations.len();
        }
    }
    lines.push(render(&Line::Summary {
        suite: "lemmas",
        lattices: subjects.len(),
        counts,
        failures,
        passed: failures == 0,
    }));
    SuiteOutcome { lines, failures }
}

/// The persistence suite: boundary reachability on the result of every
/// fork insertion up to `max_forks`.
pub fn run_persistence(max_forks: usize) -> Result<SuiteOutcome, ConstructionError> {
    let r = boundary_reachability_persistence(max_forks)?;
    let mut lines = Vec::new();
    for f in &r.failures {
        let detail = format!(
            "insertion at parent L{:03}, {} side, target {}..{}",
            f.parent,
            if f.left { "left" } else { "right" },
            f.target.bottom,
            f.target.top
        );
        lines.push(render(&Line::Violation {
            lattice: "",
            check: "boundary_reachability",
            soft: false,
            detail: &detail,
        }));
    }
    let failures = r.failures.len();
    lines.push(render(&Line::Summary {
        suite: "persistence",
        lattices: r.insertions,
        counts: BTreeMap::from([("insertions", r.insertions), ("queries", r.queries)]),
        failures,
        passed: failures == 0,
    }));
    Ok(SuiteOutcome { lines, failures })
}
