//! Built-in benchmark equations and multi-seed success reports.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::equation::{DiophantineEquation, WeightVector};
use crate::error::{Error, Result};
use crate::oracle::{box_size, enumerate_solutions, SolutionSet, DEFAULT_CAP};
use crate::solver::{solve, SolveStatus, SolverConfig};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchCase {
    pub name: String,
    pub equation: DiophantineEquation,
    /// Published solution tuple, if any.
    pub known_solution: Option<WeightVector>,
    /// Published iteration count; informational only.
    pub published_iterations: Option<u64>,
}

impl BenchCase {
    fn new(name: String, powers: Vec<u32>, target: u64, known: &[u64], iterations: u64) -> Self {
        Self {
            name,
            equation: DiophantineEquation::new(powers, target).expect("built-in equation is valid"),
            known_solution: Some(
                WeightVector::new(known.to_vec()).expect("built-in tuple is valid"),
            ),
            published_iterations: Some(iterations),
        }
    }
}

const TABLE1: [(u64, &[u64], u64); 9] = [
    (149, &[10, 7], 10),
    (244, &[12, 6, 8], 6),
    (295, &[1, 2, 13, 11], 51),
    (325, &[1, 5, 9, 7, 13], 33),
    (420, &[1, 1, 2, 7, 13, 14], 97),
    (450, &[1, 1, 2, 2, 10, 14, 12], 457),
    (590, &[1, 1, 1, 1, 5, 13, 14, 14], 1669),
    (720, &[1, 1, 1, 2, 2, 14, 12, 12, 15], 1373),
    (956, &[1, 1, 1, 1, 1, 1, 1, 15, 20, 18], 9068),
];

const TABLE2: [(u32, u64, [u64; 2], u64); 9] = [
    (2, 625, [20, 15], 7),
    (3, 1008, [2, 10], 23),
    (4, 1921, [6, 5], 10),
    (5, 19932, [7, 5], 9),
    (6, 47385, [6, 3], 6),
    (7, 4799353, [9, 4], 5),
    (8, 16777472, [8, 2], 2),
    (9, 1000019683, [3, 10], 12),
    (10, 1356217073, [7, 8], 4),
];

/// Equations with 2..=10 squared variables.
pub fn table1() -> Vec<BenchCase> {
    TABLE1
        .iter()
        .enumerate()
        .map(|(i, &(target, known, iters))| {
            BenchCase::new(
                format!("table1-{}", i + 1),
                vec![2; known.len()],
                target,
                known,
                iters,
            )
        })
        .collect()
}

/// Two-variable equations with degrees 2..=10.
pub fn table2() -> Vec<BenchCase> {
    TABLE2
        .iter()
        .enumerate()
        .map(|(i, &(p, target, known, iters))| {
            BenchCase::new(
                format!("table2-{}", i + 1),
                vec![p, p],
                target,
                &known,
                iters,
            )
        })
        .collect()
}

/// `x1^2 + x2^2 = 4000`, the convergence-trace example.
pub fn convergence() -> Vec<BenchCase> {
    vec![BenchCase {
        name: "eq12".into(),
        equation: DiophantineEquation::new(vec![2, 2], 4000).expect("valid"),
        known_solution: None,
        published_iterations: None,
    }]
}

pub fn suite(name: &str) -> Result<Vec<BenchCase>> {
    match name {
        "table1" => Ok(table1()),
        "table2" => Ok(table2()),
        "eq12" => Ok(convergence()),
        "all" => Ok([table1(), table2(), convergence()].concat()),
        other => Err(Error::UnknownSuite(other.to_string())),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunSummary {
    pub seed: u64,
    pub status: SolveStatus,
    pub total_iterations: u64,
    pub restarts_used: u32,
    pub solution: Option<WeightVector>,
    /// Found, evaluates to the target and, when enumerable, is an oracle member.
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseReport {
    pub name: String,
    pub equation: String,
    pub success_count: usize,
    pub seed_count: usize,
    /// Over verified successes.
    pub median_iterations: Option<f64>,
    pub min_iterations: Option<u64>,
    pub max_iterations: Option<u64>,
    pub example_solution: Option<WeightVector>,
    pub published_iterations: Option<u64>,
    /// Size of the oracle solution set when the box was enumerable.
    pub oracle_solutions: Option<usize>,
    pub runs: Vec<RunSummary>,
}

impl CaseReport {
    pub fn success_rate(&self) -> f64 {
        self.success_count as f64 / self.seed_count as f64
    }

    pub fn successful_iterations(&self) -> Vec<u64> {
        self.runs
            .iter()
            .filter(|r| r.verified)
            .map(|r| r.total_iterations)
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub cases: Vec<CaseReport>,
    pub success_rate: f64,
}

pub fn median(values: &[u64]) -> Option<f64> {
    if values.is_empty() {
        return None;
    }
    let mut v = values.to_vec();
    v.sort_unstable();
    let mid = v.len() / 2;
    Some(if v.len() % 2 == 1 {
        v[mid] as f64
    } else {
        (v[mid - 1] as f64 + v[mid] as f64) / 2.0
    })
}

/// Solves every case once per seed. `config.seed` is replaced by each seed
/// and traces are not recorded. Failures, including overflow, are counted
/// per case and never abort the suite.
pub fn run_suite(cases: &[BenchCase], seeds: &[u64], config: &SolverConfig) -> Result<BenchReport> {
    if seeds.is_empty() {
        return Err(Error::NoSeeds);
    }
    config.validate()?;

    let cases: Vec<CaseReport> = std::thread::scope(|s| {
        let handles: Vec<_> = cases
            .iter()
            .map(|case| s.spawn(move || run_case(case, seeds, config)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("suite worker panicked"))
            .collect()
    });

    let total: usize = cases.iter().map(|c| c.seed_count).sum();
    let ok: usize = cases.iter().map(|c| c.success_count).sum();
    Ok(BenchReport {
        success_rate: if total == 0 {
            0.0
        } else {
            ok as f64 / total as f64
        },
        cases,
    })
}

fn run_case(case: &BenchCase, seeds: &[u64], config: &SolverConfig) -> CaseReport {
    let eq = &case.equation;
    let oracle: Option<SolutionSet> = (box_size(eq) <= DEFAULT_CAP)
        .then(|| enumerate_solutions(eq, Some(DEFAULT_CAP)).ok())
        .flatten();

    let runs: Vec<RunSummary> = seeds
        .iter()
        .map(|&seed| {
            let cfg = SolverConfig {
                seed,
                record_trace: false,
                ..config.clone()
            };
            match solve(eq, &cfg) {
                Ok(r) => {
                    let verified = r.status == SolveStatus::Found
                        && r.solution.as_ref().is_some_and(|w| {
                            eq.is_solution(w) && oracle.as_ref().is_none_or(|o| o.contains(w))
                        });
                    RunSummary {
                        seed,
                        status: r.status,
                        total_iterations: r.total_iterations,
                        restarts_used: r.restarts_used,
                        solution: r.solution,
                        verified,
                    }
                }
                // config was validated up front; treat anything else as a failed run
                Err(_) => RunSummary {
                    seed,
                    status: SolveStatus::Overflow,
                    total_iterations: 0,
                    restarts_used: 0,
                    solution: None,
                    verified: false,
                },
            }
        })
        .collect();

    let iters: Vec<u64> = runs
        .iter()
        .filter(|r| r.verified)
        .map(|r| r.total_iterations)
        .collect();
    CaseReport {
        name: case.name.clone(),
        equation: eq.to_string(),
        success_count: iters.len(),
        seed_count: runs.len(),
        median_iterations: median(&iters),
        min_iterations: iters.iter().copied().min(),
        max_iterations: iters.iter().copied().max(),
        example_solution: runs
            .iter()
            .find(|r| r.verified)
            .and_then(|r| r.solution.clone()),
        published_iterations: case.published_iterations,
        oracle_solutions: oracle.map(|o| o.len()),
        runs,
    }
}

impl BenchReport {
    /// Aligned plain-text table.
    pub fn to_table(&self) -> String {
        let rows: Vec<[String; 7]> = self
            .cases
            .iter()
            .map(|c| {
                let opt = |v: Option<u64>| v.map_or("-".to_string(), |x| x.to_string());
                [
                    c.name.clone(),
                    c.equation.clone(),
                    format!("{}/{}", c.success_count, c.seed_count),
                    c.median_iterations.map_or("-".into(), |m| format!("{m}")),
                    format!("{}..{}", opt(c.min_iterations), opt(c.max_iterations)),
                    opt(c.published_iterations),
                    c.example_solution
                        .as_ref()
                        .map_or("-".into(), |w| w.to_string()),
                ]
            })
            .collect();
        let header = [
            "case",
            "equation",
            "found",
            "median",
            "range",
            "published",
            "example",
        ]
        .map(String::from);
        let mut widths = header.clone().map(|h| h.len());
        for r in &rows {
            for (w, cell) in widths.iter_mut().zip(r) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let mut out = String::new();
        for r in std::iter::once(&header).chain(&rows) {
            let line: Vec<String> = r
                .iter()
                .zip(widths)
                .map(|(cell, w)| format!("{cell:<w$}"))
                .collect();
            let _ = writeln!(out, "{}", line.join("  ").trim_end());
        }
        let _ = writeln!(out, "overall success rate: {:.3}", self.success_rate);
        out
    }
}
