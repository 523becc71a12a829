//! Fixtures shared by the criterion benchmarks in `benches/`.

use powersum_core::suite::{self, BenchCase};
use powersum_core::{DiophantineEquation, SolverConfig, SolverState, WeightVector};

/// Default budgets without trace recording, so timings cover the search only.
pub fn quiet(seed: u64) -> SolverConfig {
    SolverConfig {
        record_trace: false,
        ..SolverConfig::with_seed(seed)
    }
}

/// Built-in cases that solve in well under a millisecond per seed.
pub fn fast_cases() -> Vec<BenchCase> {
    let mut cases = suite::table1();
    cases.extend(
        suite::table2()
            .into_iter()
            .filter(|c| matches!(c.name.as_str(), "table2-7" | "table2-8" | "table2-9")),
    );
    cases
}

/// `x1^2 + x2^2 = 4000` from unit weights: long Case 2 descents, so step
/// throughput is measured on realistic states.
pub fn step_fixture() -> (DiophantineEquation, SolverState) {
    let eq = suite::convergence().remove(0).equation;
    let state = SolverState::new(WeightVector::new(vec![1, 1]).expect("valid weights"));
    (eq, state)
}

/// A ten-variable equation in the text notation.
pub fn wide_equation_text() -> String {
    let terms: Vec<String> = (1..=10).map(|i| format!("x{i}^{}", i % 4 + 1)).collect();
    format!("{} = 123456789", terms.join(" + "))
}
