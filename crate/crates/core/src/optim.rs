//! Derivative-free minimization over a box.
//!
//! Nelder-Mead with reflection 1, expansion 2, contraction 0.5 and shrink 0.5.
//! Trial points that leave the box are clamped back onto it, so the objective
//! is only ever evaluated at feasible points.

use crate::error::{Error, Result};

/// Stand-in for non-finite objective values away from the start point.
pub const PENALTY: f64 = 1e30;

const REFLECT: f64 = 1.0;
const EXPAND: f64 = 2.0;
const CONTRACT: f64 = 0.5;
const SHRINK: f64 = 0.5;
const INITIAL_STEP: f64 = 0.1;

pub struct BoundedProblem<F> {
    lower: Vec<f64>,
    upper: Vec<f64>,
    objective: F,
}

impl<F: Fn(&[f64]) -> f64> BoundedProblem<F> {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>, objective: F) -> Result<Self> {
        if lower.is_empty() || lower.len() != upper.len() {
            return Err(Error::Argument(format!(
                "bounds must be non-empty and equal length (got {} and {})",
                lower.len(),
                upper.len()
            )));
        }
        if let Some(i) = (0..lower.len()).find(|&i| !(lower[i] < upper[i])) {
            return Err(Error::Argument(format!(
                "coordinate {i}: lower {} not below upper {}",
                lower[i], upper[i]
            )));
        }
        Ok(Self {
            lower,
            upper,
            objective,
        })
    }

    pub fn dimension(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dimension()
            && x.iter()
                .enumerate()
                .all(|(i, &v)| v >= self.lower[i] && v <= self.upper[i])
    }

    pub fn evaluate(&self, x: &[f64]) -> f64 {
        (self.objective)(x)
    }

    fn clamp(&self, x: &mut [f64]) {
        for (i, v) in x.iter_mut().enumerate() {
            *v = v.clamp(self.lower[i], self.upper[i]);
        }
    }

    /// Cell-centered grid with `k` points per coordinate, in lexicographic order.
    pub fn grid(&self, k: usize) -> Vec<Vec<f64>> {
        let n = self.dimension();
        let axes: Vec<Vec<f64>> = (0..n)
            .map(|i| {
                let w = self.upper[i] - self.lower[i];
                (0..k)
                    .map(|j| self.lower[i] + w * (j as f64 + 0.5) / k as f64)
                    .collect()
            })
            .collect();
        let total = k.pow(n as u32);
        (0..total)
            .map(|mut idx| {
                let mut p = vec![0.0; n];
                for i in (0..n).rev() {
                    p[i] = axes[i][idx % k];
                    idx /= k;
                }
                p
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OptimResult {
    pub argmin: Vec<f64>,
    pub value: f64,
    pub evaluations: usize,
    pub converged: bool,
}

struct Counted<'a, F> {
    problem: &'a BoundedProblem<F>,
    evaluations: usize,
}

impl<F: Fn(&[f64]) -> f64> Counted<'_, F> {
    fn eval(&mut self, x: &[f64]) -> f64 {
        self.evaluations += 1;
        let v = self.problem.evaluate(x);
        if v.is_finite() {
            v
        } else {
            PENALTY
        }
    }
}

pub fn minimize_bounded<F: Fn(&[f64]) -> f64>(
    problem: &BoundedProblem<F>,
    start: &[f64],
    tol: f64,
    max_evals: usize,
) -> Result<OptimResult> {
    if !(tol > 0.0) {
        return Err(Error::Argument(format!("tolerance {tol} must be positive")));
    }
    if !problem.contains(start) {
        return Err(Error::Argument(format!("start {start:?} outside bounds")));
    }
    let f0 = problem.evaluate(start);
    if !f0.is_finite() {
        return Err(Error::Argument(format!(
            "objective is {f0} at start {start:?}"
        )));
    }

    let mut f = Counted {
        problem,
        evaluations: 1,
    };
    let (argmin, value, converged) = descend(&mut f, start, f0, tol, max_evals);
    Ok(OptimResult {
        argmin,
        value,
        evaluations: f.evaluations,
        converged,
    })
}

fn descend<F: Fn(&[f64]) -> f64>(
    f: &mut Counted<'_, F>,
    start: &[f64],
    f0: f64,
    tol: f64,
    max_evals: usize,
) -> (Vec<f64>, f64, bool) {
    let problem = f.problem;
    let n = problem.dimension();
    let mut simplex: Vec<(Vec<f64>, f64)> = Vec::with_capacity(n + 1);
    simplex.push((start.to_vec(), f0));
    for i in 0..n {
        let step = INITIAL_STEP * (problem.upper[i] - problem.lower[i]);
        let mut p = start.to_vec();
        p[i] = if p[i] + step <= problem.upper[i] {
            p[i] + step
        } else {
            p[i] - step
        };
        let v = f.eval(&p);
        simplex.push((p, v));
    }

    let mut converged = false;
    loop {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        if simplex[n].1 - simplex[0].1 < tol {
            converged = true;
            break;
        }
        if f.evaluations >= max_evals {
            break;
        }

        let mut centroid = vec![0.0; n];
        for (p, _) in &simplex[..n] {
            for (c, x) in centroid.iter_mut().zip(p) {
                *c += x / n as f64;
            }
        }
        let worst = simplex[n].clone();
        let along = |coef: f64, from: &[f64]| -> Vec<f64> {
            let mut p: Vec<f64> = centroid
                .iter()
                .zip(from)
                .map(|(c, x)| c + coef * (x - c))
                .collect();
            problem.clamp(&mut p);
            p
        };

        let xr = along(-REFLECT, &worst.0);
        let fr = f.eval(&xr);
        if fr < simplex[0].1 {
            let xe = along(-EXPAND, &worst.0);
            let fe = f.eval(&xe);
            simplex[n] = if fe < fr { (xe, fe) } else { (xr, fr) };
        } else if fr < simplex[n - 1].1 {
            simplex[n] = (xr, fr);
        } else {
            // outside contraction when the reflection improved on the worst point
            let xc = if fr < worst.1 {
                along(CONTRACT, &xr)
            } else {
                along(CONTRACT, &worst.0)
            };
            let fc = f.eval(&xc);
            if fc < fr.min(worst.1) {
                simplex[n] = (xc, fc);
            } else {
                let best = simplex[0].0.clone();
                for (p, v) in simplex.iter_mut().skip(1) {
                    for (x, b) in p.iter_mut().zip(&best) {
                        *x = b + SHRINK * (*x - b);
                    }
                    *v = f.eval(p);
                }
            }
        }
    }

    let (argmin, value) = simplex.swap_remove(0);
    (argmin, value, converged)
}

/// Runs [`minimize_bounded`] from every start and keeps the lowest value.
/// Ties keep the earliest start.
pub fn minimize_from_starts<F: Fn(&[f64]) -> f64>(
    problem: &BoundedProblem<F>,
    starts: &[Vec<f64>],
    tol: f64,
    max_evals: usize,
) -> Result<OptimResult> {
    let mut best: Option<OptimResult> = None;
    let mut total = 0;
    for s in starts {
        let r = minimize_bounded(problem, s, tol, max_evals)?;
        total += r.evaluations;
        if best.as_ref().map_or(true, |b| r.value < b.value) {
            best = Some(r);
        }
    }
    let mut best = best.ok_or_else(|| Error::Argument("no start points".into()))?;
    best.evaluations = total;
    Ok(best)
}

/// Multistart from the cell-centered grid with `grid_points_per_dim` points
/// along each coordinate. One point per coordinate is the box center.
pub fn multistart_minimize<F: Fn(&[f64]) -> f64>(
    problem: &BoundedProblem<F>,
    grid_points_per_dim: usize,
    tol: f64,
    max_evals: usize,
) -> Result<OptimResult> {
    if grid_points_per_dim == 0 {
        return Err(Error::Argument(
            "grid needs at least one point per dimension".into(),
        ));
    }
    minimize_from_starts(problem, &problem.grid(grid_points_per_dim), tol, max_evals)
}
