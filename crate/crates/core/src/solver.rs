//! The network training loop.
//!
//! The weights of the input→hidden connections are the candidate solution.
//! Each iteration feeds forward `Q = Σ w_i^{p_i}`, compares it with the target
//! and applies one of three integer update rules:
//!
//! * **Case 1** (undershoot): every weight grows by `max(1, |E| / (Max·n))`.
//! * **Case 2** (overshoot, all weights above 1): the focused weight drops by 1.
//! * **Case 3** (overshoot, some `w_j = 1`): `w_j` gets a momentum kick equal to
//!   the pending overshoot count and its cyclic successor drops by 1.
//!
//! The focused weight for Case 2 advances by one position after every Case 1
//! update and every Case 3 kick, so a descent works on one coordinate until
//! it either undershoots or bottoms out at 1.
//!
//! An attempt ends when the target is hit, the iteration budget runs out, the
//! arithmetic overflows, or the dynamics revisit an earlier state. Since the
//! update map is deterministic, a revisited state means the attempt can never
//! succeed; the solver then restarts from fresh random weights.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::equation::{direction, evaluate_raw, DiophantineEquation, WeightVector};
use crate::error::{Error, Result};
use crate::oracle::bound_box;
use crate::trace::TraceRecord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Case {
    Case1,
    Case2,
    Case3,
    Solved,
}

impl Case {
    pub fn as_str(self) -> &'static str {
        match self {
            Case::Case1 => "Case1",
            Case::Case2 => "Case2",
            Case::Case3 => "Case3",
            Case::Solved => "Solved",
        }
    }
}

impl std::fmt::Display for Case {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolverConfig {
    pub seed: u64,
    pub init_lo: u64,
    pub init_hi: u64,
    pub max_iters_per_attempt: u64,
    pub max_restarts: u32,
    /// Added to both ends of the initial range on each restart; see
    /// [`SolverConfig::restart_ranges`] for how the offset wraps.
    pub restart_range_shift: u64,
    /// End an attempt as soon as the dynamics revisit a state.
    pub detect_cycles: bool,
    /// Keep one [`TraceRecord`] per iteration in the result.
    pub record_trace: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            init_lo: 1,
            init_hi: 10,
            max_iters_per_attempt: 100_000,
            max_restarts: 200,
            restart_range_shift: 10,
            detect_cycles: true,
            record_trace: true,
        }
    }
}

impl SolverConfig {
    pub fn with_seed(seed: u64) -> Self {
        Self {
            seed,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.init_lo == 0 || self.init_lo > self.init_hi {
            return Err(Error::InvalidConfig(format!(
                "initial range {}:{} must satisfy 1 <= lo <= hi",
                self.init_lo, self.init_hi
            )));
        }
        if self.max_iters_per_attempt == 0 {
            return Err(Error::InvalidConfig(
                "max_iters_per_attempt must be at least 1".into(),
            ));
        }
        if self.restart_range_shift == 0 {
            return Err(Error::InvalidConfig(
                "restart_range_shift must be at least 1".into(),
            ));
        }
        Ok(())
    }

    /// Initial weight range for the given restart, as used by coordinates
    /// with the largest bound `reach = max_i floor(N^(1/p_i))`. The offset
    /// wraps after the first range that lies entirely above `reach`.
    pub fn restart_range(&self, eq: &DiophantineEquation, restart: u32) -> (u64, u64) {
        let reach = bound_box(eq).into_iter().max().unwrap_or(1);
        // windows up to the reach, plus one lying wholly above it
        let windows = if reach < self.init_lo {
            2
        } else {
            (reach - self.init_lo) / self.restart_range_shift + 2
        };
        let offset = self.restart_range_shift * (restart as u64 % windows);
        (
            self.init_lo.saturating_add(offset),
            self.init_hi.saturating_add(offset),
        )
    }

    /// Per-coordinate initial ranges for the given restart. Coordinates whose
    /// bound `floor(N^(1/p_i))` is the largest use [`Self::restart_range`].
    /// The others shift through windows of their own and are clipped to their
    /// bound, so a low-reach coordinate never starts in a hopeless range.
    /// With equal powers every coordinate gets `restart_range`.
    pub fn restart_ranges(&self, eq: &DiophantineEquation, restart: u32) -> Vec<(u64, u64)> {
        let bounds = bound_box(eq);
        let top = bounds.iter().copied().max().unwrap_or(1);
        let shared = self.restart_range(eq, restart);
        bounds
            .into_iter()
            .map(|reach| {
                if reach == top {
                    return shared;
                }
                let windows = if reach < self.init_lo {
                    1
                } else {
                    (reach - self.init_lo) / self.restart_range_shift + 1
                };
                let offset = self.restart_range_shift * (restart as u64 % windows);
                let lo = self.init_lo.saturating_add(offset);
                let hi = self.init_hi.saturating_add(offset).min(reach.max(lo));
                (lo, hi)
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverState {
    pub weights: WeightVector,
    /// Iterations completed so far, across all attempts.
    pub iteration: u64,
    pub restart_index: u32,
    /// Consecutive overshoot iterations ending at the latest one.
    pub overshoot_streak: u64,
    /// Overshoot iterations not yet spent by a Case 3 kick; this is the
    /// momentum factor. Equals `overshoot_streak` until the first kick of a
    /// streak.
    pub momentum: u64,
    /// Coordinate decremented by Case 2.
    pub focus: usize,
    pub solved: bool,
}

impl SolverState {
    pub fn new(weights: WeightVector) -> Self {
        Self {
            weights,
            iteration: 0,
            restart_index: 0,
            overshoot_streak: 0,
            momentum: 0,
            focus: 0,
            solved: false,
        }
    }

    /// Fresh attempt with new weights; global counters are kept.
    fn restart(&mut self, weights: WeightVector, restart_index: u32) {
        self.weights = weights;
        self.restart_index = restart_index;
        self.overshoot_streak = 0;
        self.momentum = 0;
        self.focus = 0;
        self.solved = false;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepOutcome {
    pub case_applied: Case,
    pub deltas: Vec<i128>,
    pub new_weights: WeightVector,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SolveStatus {
    Found,
    BudgetExhausted,
    Overflow,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    pub status: SolveStatus,
    pub solution: Option<WeightVector>,
    pub total_iterations: u64,
    pub restarts_used: u32,
    pub trace: Vec<TraceRecord>,
}

/// Deterministic generator for a run seed.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n` weights drawn independently and uniformly from `lo..=hi`.
pub fn init_weights<R: Rng + ?Sized>(n: usize, lo: u64, hi: u64, rng: &mut R) -> WeightVector {
    assert!(
        n >= 1 && lo >= 1 && lo <= hi,
        "need n >= 1 and 1 <= lo <= hi"
    );
    WeightVector::from_raw((0..n).map(|_| rng.gen_range(lo..=hi)).collect())
}

/// One weight per `(lo, hi)` range, each drawn uniformly.
pub fn init_weights_in<R: Rng + ?Sized>(ranges: &[(u64, u64)], rng: &mut R) -> WeightVector {
    assert!(
        !ranges.is_empty() && ranges.iter().all(|&(lo, hi)| lo >= 1 && lo <= hi),
        "need at least one range with 1 <= lo <= hi"
    );
    WeightVector::from_raw(
        ranges
            .iter()
            .map(|&(lo, hi)| rng.gen_range(lo..=hi))
            .collect(),
    )
}

/// Case 1 step magnitude `max(1, floor(|E| / (Max·n)))`.
pub fn base_step(eq: &DiophantineEquation, error: i128) -> u128 {
    let denom = eq.max_power() as u128 * eq.arity() as u128;
    (error.unsigned_abs() / denom).max(1)
}

pub fn classify_case(state: &SolverState, error: i128) -> Case {
    match direction(error) {
        0 => Case::Solved,
        1 => Case::Case1,
        _ if state.weights.as_slice().contains(&1) => Case::Case3,
        _ => Case::Case2,
    }
}

/// Every weight grows by `step`.
pub fn apply_case1(state: &SolverState, step: u128) -> Result<StepOutcome> {
    let step64 = u64::try_from(step).map_err(|_| Error::Overflow)?;
    let new = state
        .weights
        .as_slice()
        .iter()
        .map(|&w| w.checked_add(step64).ok_or(Error::Overflow))
        .collect::<Result<Vec<_>>>()?;
    Ok(StepOutcome {
        case_applied: Case::Case1,
        deltas: vec![step as i128; new.len()],
        new_weights: WeightVector::from_raw(new),
    })
}

/// The focused weight drops by one; requires every weight above 1.
pub fn apply_case2(state: &SolverState) -> StepOutcome {
    let n = state.weights.len();
    let focus = state.focus % n;
    let mut deltas = vec![0i128; n];
    deltas[focus] = -1;
    let new = state
        .weights
        .as_slice()
        .iter()
        .zip(&deltas)
        .map(|(&w, &d)| if d < 0 { (w - 1).max(1) } else { w })
        .collect();
    StepOutcome {
        case_applied: Case::Case2,
        deltas,
        new_weights: WeightVector::from_raw(new),
    }
}

/// Momentum kick for the first unit weight `w_j`, unit decrement of its
/// cyclic successor. With one variable both deltas land on the same weight.
/// Results are clamped to 1; `deltas` report the change actually applied.
pub fn apply_case3(state: &SolverState) -> Result<StepOutcome> {
    let w = state.weights.as_slice();
    let n = w.len();
    let j = w
        .iter()
        .position(|&x| x == 1)
        .expect("Case 3 requires a unit weight");
    let next = (j + 1) % n;
    let kick = state.momentum.max(1);

    let mut raw: Vec<i128> = w.iter().map(|&x| x as i128).collect();
    raw[j] += kick as i128;
    raw[next] -= 1;
    let mut new = Vec::with_capacity(n);
    let mut deltas = Vec::with_capacity(n);
    for (&old, v) in w.iter().zip(raw) {
        let v = u64::try_from(v.max(1)).map_err(|_| Error::Overflow)?;
        deltas.push(v as i128 - old as i128);
        new.push(v);
    }
    Ok(StepOutcome {
        case_applied: Case::Case3,
        deltas,
        new_weights: WeightVector::from_raw(new),
    })
}

/// One feed-forward / update iteration. `state` is left untouched on error.
pub fn step(eq: &DiophantineEquation, state: &mut SolverState) -> Result<TraceRecord> {
    assert!(!state.solved, "step called on a solved state");
    let output = evaluate_raw(eq.powers(), state.weights.as_slice()).ok_or(Error::Overflow)?;
    let error = output as i128 - eq.target() as i128;
    let case = classify_case(state, error);

    let outcome = match case {
        Case::Solved => StepOutcome {
            case_applied: Case::Solved,
            deltas: vec![0; eq.arity()],
            new_weights: state.weights.clone(),
        },
        Case::Case1 => apply_case1(state, base_step(eq, error))?,
        Case::Case2 => apply_case2(state),
        Case::Case3 => apply_case3(state)?,
    };

    let n = eq.arity();
    match case {
        Case::Solved => {
            state.solved = true;
            state.overshoot_streak = 0;
        }
        Case::Case1 => {
            state.overshoot_streak = 0;
            state.momentum = 0;
            state.focus = (state.focus + 1) % n;
        }
        Case::Case2 => {
            state.overshoot_streak += 1;
            state.momentum += 1;
        }
        Case::Case3 => {
            state.overshoot_streak += 1;
            state.momentum = 0;
            state.focus = (state.focus + 1) % n;
        }
    }
    state.weights = outcome.new_weights;
    state.iteration += 1;

    let learning_rate = outcome.deltas.iter().map(|d| d.unsigned_abs()).sum();
    Ok(TraceRecord {
        iteration: state.iteration,
        restart_index: state.restart_index,
        weights: state.weights.clone(),
        output,
        error,
        direction: direction(error),
        case_applied: case,
        streak: state.overshoot_streak,
        deltas: outcome.deltas,
        learning_rate,
    })
}

/// Brent-style repeat detector over the part of the state that drives the
/// dynamics: weights, momentum and focus.
struct CycleDetector {
    saved: Option<(Vec<u64>, u64, usize)>,
    power: u64,
    since: u64,
}

impl CycleDetector {
    fn new() -> Self {
        Self {
            saved: None,
            power: 1,
            since: 0,
        }
    }

    fn revisits(&mut self, state: &SolverState) -> bool {
        let key = (state.weights.as_slice(), state.momentum, state.focus);
        if let Some((w, m, f)) = &self.saved {
            if (w.as_slice(), *m, *f) == key {
                return true;
            }
        }
        self.since += 1;
        if self.since == self.power {
            self.saved = Some((key.0.to_vec(), key.1, key.2));
            self.power *= 2;
            self.since = 0;
        }
        false
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum AttemptEnd {
    Solved,
    Budget,
    Cycle,
    Overflow,
}

/// Runs attempts until a solution is found or the restart budget is spent.
/// Fully determined by `eq` and `config`.
pub fn solve(eq: &DiophantineEquation, config: &SolverConfig) -> Result<SolveResult> {
    config.validate()?;
    let mut rng = seeded_rng(config.seed);
    let mut trace = Vec::new();
    let mut state: Option<SolverState> = None;
    let mut all_overflowed = true;

    for restart in 0..=config.max_restarts {
        let ranges = config.restart_ranges(eq, restart);
        let weights = init_weights_in(&ranges, &mut rng);
        let st = match state.as_mut() {
            Some(st) => {
                st.restart(weights, restart);
                st
            }
            None => state.insert(SolverState::new(weights)),
        };

        let end = run_attempt(eq, st, config, &mut trace);
        if end == AttemptEnd::Solved {
            return Ok(SolveResult {
                status: SolveStatus::Found,
                solution: Some(st.weights.clone()),
                total_iterations: st.iteration,
                restarts_used: restart,
                trace,
            });
        }
        all_overflowed &= end == AttemptEnd::Overflow;
    }

    let total_iterations = state.map_or(0, |s| s.iteration);
    Ok(SolveResult {
        status: if all_overflowed {
            SolveStatus::Overflow
        } else {
            SolveStatus::BudgetExhausted
        },
        solution: None,
        total_iterations,
        restarts_used: config.max_restarts,
        trace,
    })
}

fn run_attempt(
    eq: &DiophantineEquation,
    state: &mut SolverState,
    config: &SolverConfig,
    trace: &mut Vec<TraceRecord>,
) -> AttemptEnd {
    let mut cycles = CycleDetector::new();
    for _ in 0..config.max_iters_per_attempt {
        let record = match step(eq, state) {
            Ok(r) => r,
            Err(_) => return AttemptEnd::Overflow,
        };
        if config.record_trace {
            trace.push(record);
        }
        if state.solved {
            return AttemptEnd::Solved;
        }
        if config.detect_cycles && cycles.revisits(state) {
            return AttemptEnd::Cycle;
        }
    }
    AttemptEnd::Budget
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eq(powers: &[u32], target: u64) -> DiophantineEquation {
        DiophantineEquation::new(powers.to_vec(), target).unwrap()
    }

    fn state(w: &[u64], streak: u64) -> SolverState {
        let mut s = SolverState::new(WeightVector::new(w.to_vec()).unwrap());
        s.overshoot_streak = streak;
        s.momentum = streak;
        s
    }

    fn weights(o: &StepOutcome) -> &[u64] {
        o.new_weights.as_slice()
    }

    #[test]
    fn init_weights_examples() {
        let mut rng = seeded_rng(7);
        assert_eq!(init_weights(3, 5, 5, &mut rng).as_slice(), &[5, 5, 5]);
        assert_eq!(init_weights(1, 1, 1, &mut rng).as_slice(), &[1]);
        let a = init_weights(2, 1, 10, &mut seeded_rng(42));
        let b = init_weights(2, 1, 10, &mut seeded_rng(42));
        assert_eq!(a, b);
        assert!(a.as_slice().iter().all(|&w| (1..=10).contains(&w)));
    }

    #[test]
    fn base_step_examples() {
        assert_eq!(base_step(&eq(&[2, 2], 4000), -3800), 950);
        assert_eq!(base_step(&eq(&[2, 2], 4000), -3), 1);
        assert_eq!(base_step(&eq(&[10, 10], 4000), 100), 5);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_case(&state(&[10, 7], 0), 0), Case::Solved);
        assert_eq!(classify_case(&state(&[1, 5], 0), -10), Case::Case1);
        assert_eq!(classify_case(&state(&[7, 5], 0), 10), Case::Case2);
        assert_eq!(classify_case(&state(&[1, 5], 0), 10), Case::Case3);
    }

    #[test]
    fn case1_examples() {
        assert_eq!(
            weights(&apply_case1(&state(&[1, 1], 0), 950).unwrap()),
            &[951, 951]
        );
        assert_eq!(
            weights(&apply_case1(&state(&[5, 9], 0), 1).unwrap()),
            &[6, 10]
        );
        assert_eq!(
            weights(&apply_case1(&state(&[1, 1, 1], 0), 2).unwrap()),
            &[3, 3, 3]
        );
        assert_eq!(
            apply_case1(&state(&[u64::MAX, 1], 0), 1),
            Err(Error::Overflow)
        );
        assert_eq!(
            apply_case1(&state(&[1, 1], 0), u64::MAX as u128 + 1),
            Err(Error::Overflow)
        );
    }

    #[test]
    fn case1_from_unit_weights_overshoots_4000() {
        let e = eq(&[2, 2], 4000);
        let o = apply_case1(&state(&[1, 1], 0), base_step(&e, -3998)).unwrap();
        assert_eq!(weights(&o), &[1000, 1000]);
        assert!(e.evaluate(&o.new_weights).unwrap() > 4000);
    }

    #[test]
    fn case2_examples() {
        let o = apply_case2(&state(&[12, 12], 0));
        assert_eq!(weights(&o), &[11, 12]);
        assert_eq!(o.deltas, vec![-1, 0]);
        assert_eq!(weights(&apply_case2(&state(&[2, 2], 0))), &[1, 2]);
        assert_eq!(weights(&apply_case2(&state(&[951, 951], 0))), &[950, 951]);
        let mut s = state(&[5, 6, 7], 0);
        s.focus = 2;
        assert_eq!(weights(&apply_case2(&s)), &[5, 6, 6]);
    }

    #[test]
    fn case3_examples() {
        assert_eq!(
            weights(&apply_case3(&state(&[1, 14], 3)).unwrap()),
            &[4, 13]
        );
        assert_eq!(weights(&apply_case3(&state(&[1, 2], 0)).unwrap()), &[2, 1]);
        // single variable: +2 and -1 compose on w1
        let o = apply_case3(&state(&[1], 2)).unwrap();
        assert_eq!(weights(&o), &[2]);
        assert_eq!(o.deltas, vec![1]);
        // successor wraps from the last coordinate to the first
        assert_eq!(
            weights(&apply_case3(&state(&[5, 3, 1], 2)).unwrap()),
            &[4, 3, 3]
        );
        // clamp when the successor is already 1
        let o = apply_case3(&state(&[1, 1], 4)).unwrap();
        assert_eq!(weights(&o), &[5, 1]);
        assert_eq!(o.deltas, vec![4, 0]);
    }

    #[test]
    fn step_examples() {
        let e = eq(&[2, 2], 149);
        let mut s = state(&[10, 7], 0);
        let r = step(&e, &mut s).unwrap();
        assert_eq!(r.case_applied, Case::Solved);
        assert_eq!(r.learning_rate, 0);
        assert!(s.solved);
        assert_eq!(s.weights.as_slice(), &[10, 7]);

        let e = eq(&[2, 2], 4000);
        let mut s = state(&[1, 1], 0);
        let r = step(&e, &mut s).unwrap();
        assert_eq!(r.case_applied, Case::Case1);
        assert_eq!(r.error, -3998);
        assert_eq!(r.deltas, vec![999, 999]);
        assert_eq!(r.learning_rate, 1998);

        let e = eq(&[2, 2], 149);
        let mut s = state(&[12, 12], 0);
        let r = step(&e, &mut s).unwrap();
        assert_eq!(r.case_applied, Case::Case2);
        assert_eq!(s.weights.as_slice(), &[11, 12]);
        assert_eq!(r.streak, 1);
        assert_eq!(r.output, 288);
        assert_eq!(r.error, 139);
    }

    #[test]
    fn focus_moves_after_case1_and_case3() {
        let e = eq(&[2, 2, 2], 20);
        // (2, 2, 5) overshoots: w1 goes to 1, then the kick moves focus on
        let mut s = state(&[2, 2, 5], 0);
        assert_eq!(step(&e, &mut s).unwrap().case_applied, Case::Case2);
        assert_eq!((s.weights.as_slice(), s.focus), (&[1, 2, 5][..], 0));
        assert_eq!(step(&e, &mut s).unwrap().case_applied, Case::Case3);
        assert_eq!(
            (s.weights.as_slice(), s.focus, s.momentum),
            (&[2, 1, 5][..], 1, 0)
        );
        // w2 = 1 now: a second kick, focus moves to w3
        assert_eq!(step(&e, &mut s).unwrap().case_applied, Case::Case3);
        assert_eq!((s.weights.as_slice(), s.focus), (&[2, 2, 4][..], 2));
        assert_eq!(s.overshoot_streak, 3);

        let mut s = state(&[1, 1, 1], 0);
        s.focus = 2;
        assert_eq!(step(&e, &mut s).unwrap().case_applied, Case::Case1);
        assert_eq!(s.focus, 0);
    }

    #[test]
    fn step_overflow_leaves_state() {
        let e = eq(&[40, 40], 5);
        let mut s = state(&[1 << 20, 3], 0);
        let before = s.clone();
        assert_eq!(step(&e, &mut s), Err(Error::Overflow));
        assert_eq!(s, before);
    }

    #[test]
    fn solve_examples() {
        let r = solve(&eq(&[2, 2], 149), &SolverConfig::default()).unwrap();
        assert_eq!(r.status, SolveStatus::Found);
        let sol = r.solution.unwrap();
        assert!(sol.as_slice() == [7, 10] || sol.as_slice() == [10, 7]);

        let r = solve(&eq(&[3, 3], 1008), &SolverConfig::with_seed(3)).unwrap();
        assert_eq!(r.status, SolveStatus::Found);
        let sol = r.solution.unwrap();
        assert!(sol.as_slice() == [2, 10] || sol.as_slice() == [10, 2]);

        let cfg = SolverConfig {
            max_iters_per_attempt: 1000,
            max_restarts: 2,
            ..SolverConfig::default()
        };
        let r = solve(&eq(&[2, 2], 3), &cfg).unwrap();
        assert_eq!(r.status, SolveStatus::BudgetExhausted);
        assert_eq!(r.solution, None);
        assert_eq!(r.restarts_used, 2);
    }

    #[test]
    fn single_variable() {
        let r = solve(&eq(&[1], 37), &SolverConfig::default()).unwrap();
        assert_eq!(r.solution.unwrap().as_slice(), &[37]);
        let r = solve(&eq(&[3], 27), &SolverConfig::default()).unwrap();
        assert_eq!(r.solution.unwrap().as_slice(), &[3]);
    }

    #[test]
    fn restart_ranges_wrap_within_reach() {
        let cfg = SolverConfig::default();
        let e = eq(&[2, 2], 149); // reach 12
        assert_eq!(cfg.restart_range(&e, 0), (1, 10));
        assert_eq!(cfg.restart_range(&e, 1), (11, 20));
        assert_eq!(cfg.restart_range(&e, 2), (21, 30));
        assert_eq!(cfg.restart_range(&e, 3), (1, 10));
        let e = eq(&[5, 5], 19932); // reach 7
        assert_eq!(cfg.restart_range(&e, 1), (11, 20));
        assert_eq!(cfg.restart_range(&e, 2), (1, 10));
    }

    #[test]
    fn restart_ranges_per_coordinate() {
        let cfg = SolverConfig::default();
        let e = eq(&[2, 2], 149);
        assert_eq!(cfg.restart_ranges(&e, 1), vec![(11, 20), (11, 20)]);
        // bounds 149, 12, 5: the low-reach coordinates are clipped and wrap early
        let e = eq(&[1, 2, 3], 149);
        assert_eq!(cfg.restart_ranges(&e, 0), vec![(1, 10), (1, 10), (1, 5)]);
        assert_eq!(cfg.restart_ranges(&e, 1), vec![(11, 20), (11, 12), (1, 5)]);
        assert_eq!(cfg.restart_ranges(&e, 2), vec![(21, 30), (1, 10), (1, 5)]);
        assert_eq!(cfg.restart_ranges(&e, 5), vec![(51, 60), (11, 12), (1, 5)]);
        assert_eq!(cfg.restart_ranges(&e, 16), vec![(1, 10), (1, 10), (1, 5)]);
    }

    #[test]
    fn init_in_ranges_matches_uniform_draw() {
        let a = init_weights(3, 4, 9, &mut seeded_rng(5));
        let b = init_weights_in(&[(4, 9); 3], &mut seeded_rng(5));
        assert_eq!(a, b);
        let w = init_weights_in(&[(1, 1), (7, 7)], &mut seeded_rng(0));
        assert_eq!(w.as_slice(), &[1, 7]);
    }

    #[test]
    fn invalid_config() {
        let e = eq(&[2], 4);
        for cfg in [
            SolverConfig {
                init_lo: 0,
                ..SolverConfig::default()
            },
            SolverConfig {
                init_lo: 5,
                init_hi: 4,
                ..SolverConfig::default()
            },
            SolverConfig {
                max_iters_per_attempt: 0,
                ..SolverConfig::default()
            },
            SolverConfig {
                restart_range_shift: 0,
                ..SolverConfig::default()
            },
        ] {
            assert!(matches!(solve(&e, &cfg), Err(Error::InvalidConfig(_))));
        }
    }
}
