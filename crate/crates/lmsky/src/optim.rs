//! Bounded Levenberg-Marquardt over a numerically differentiated residual
//! vector. Small and self-contained: the parameter spaces here are at most
//! nine-dimensional, so the normal equations are solved with a dense
//! Cholesky factorization.

#[derive(Clone, Debug)]
pub struct LmOptions {
    pub max_iterations: usize,
    /// Convergence threshold on relative cost decrease.
    pub tolerance: f64,
    /// Central-difference step in the (transformed) parameter space.
    pub fd_step: f64,
    pub lambda_init: f64,
}

impl Default for LmOptions {
    fn default() -> Self {
        LmOptions {
            max_iterations: 60,
            tolerance: 1e-6,
            fd_step: 1e-4,
            lambda_init: 1e-3,
        }
    }
}

#[derive(Clone, Debug)]
pub struct LmOutcome {
    pub x: Vec<f64>,
    pub cost: f64,
    pub iterations: usize,
    pub converged: bool,
    /// Accepted cost after each iteration; non-increasing by construction.
    pub cost_history: Vec<f64>,
}

fn cost_of(residuals: &[f64]) -> f64 {
    residuals.iter().map(|r| r * r).sum()
}

/// Central-difference Jacobian, column-major per parameter. Perturbed points
/// are clamped to the box and the divisor uses the actual step taken.
pub fn numerical_jacobian<F>(
    f: &mut F,
    x: &[f64],
    lower: &[f64],
    upper: &[f64],
    step: f64,
) -> Vec<Vec<f64>>
where
    F: FnMut(&[f64]) -> Vec<f64>,
{
    let n = x.len();
    let mut cols = Vec::with_capacity(n);
    for k in 0..n {
        let hi = (x[k] + step).min(upper[k]);
        let lo = (x[k] - step).max(lower[k]);
        let mut xp = x.to_vec();
        xp[k] = hi;
        let rp = f(&xp);
        xp[k] = lo;
        let rm = f(&xp);
        let h = hi - lo;
        cols.push(
            rp.iter()
                .zip(&rm)
                .map(|(p, m)| if h > 0.0 { (p - m) / h } else { 0.0 })
                .collect(),
        );
    }
    cols
}

/// Solve A x = b for symmetric positive definite A (row-major n*n).
fn solve_spd(a: &[f64], b: &[f64], n: usize) -> Option<Vec<f64>> {
    // Cholesky A = L L^T.
    let mut l = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..=i {
            let mut s = a[i * n + j];
            for k in 0..j {
                s -= l[i * n + k] * l[j * n + k];
            }
            if i == j {
                if s <= 0.0 {
                    return None;
                }
                l[i * n + i] = s.sqrt();
            } else {
                l[i * n + j] = s / l[j * n + j];
            }
        }
    }
    // Forward then back substitution.
    let mut y = vec![0.0; n];
    for i in 0..n {
        let mut s = b[i];
        for k in 0..i {
            s -= l[i * n + k] * y[k];
        }
        y[i] = s / l[i * n + i];
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let mut s = y[i];
        for k in i + 1..n {
            s -= l[k * n + i] * x[k];
        }
        x[i] = s / l[i * n + i];
    }
    Some(x)
}

/// Minimize sum of squared residuals subject to box bounds.
pub fn minimize<F>(
    mut f: F,
    x0: &[f64],
    lower: &[f64],
    upper: &[f64],
    opts: &LmOptions,
) -> LmOutcome
where
    F: FnMut(&[f64]) -> Vec<f64>,
{
    let n = x0.len();
    let mut x: Vec<f64> = x0
        .iter()
        .zip(lower.iter().zip(upper))
        .map(|(v, (lo, hi))| v.clamp(*lo, *hi))
        .collect();
    let mut residuals = f(&x);
    let mut cost = cost_of(&residuals);
    let mut lambda = opts.lambda_init;
    let mut history = vec![cost];
    let mut converged = false;
    let mut iterations = 0;

    for _ in 0..opts.max_iterations {
        iterations += 1;
        let jac = numerical_jacobian(&mut f, &x, lower, upper, opts.fd_step);
        // Normal equations: (J^T J + lambda diag(J^T J)) delta = -J^T r.
        let mut jtj = vec![0.0; n * n];
        let mut jtr = vec![0.0; n];
        for i in 0..n {
            for j in 0..=i {
                let s: f64 = jac[i].iter().zip(&jac[j]).map(|(a, b)| a * b).sum();
                jtj[i * n + j] = s;
                jtj[j * n + i] = s;
            }
            jtr[i] = jac[i].iter().zip(&residuals).map(|(a, r)| a * r).sum();
        }

        let mut accepted = false;
        for _try in 0..10 {
            let mut damped = jtj.clone();
            for i in 0..n {
                let d = jtj[i * n + i];
                damped[i * n + i] += lambda * if d > 0.0 { d } else { 1.0 };
            }
            let rhs: Vec<f64> = jtr.iter().map(|v| -v).collect();
            let Some(delta) = solve_spd(&damped, &rhs, n) else {
                lambda *= 10.0;
                continue;
            };
            let candidate: Vec<f64> = x
                .iter()
                .zip(&delta)
                .zip(lower.iter().zip(upper))
                .map(|((xi, di), (lo, hi))| (xi + di).clamp(*lo, *hi))
                .collect();
            let cand_res = f(&candidate);
            let cand_cost = cost_of(&cand_res);
            if cand_cost < cost {
                let rel_decrease = (cost - cand_cost) / cost.max(1e-300);
                x = candidate;
                residuals = cand_res;
                cost = cand_cost;
                lambda = (lambda / 3.0).max(1e-12);
                accepted = true;
                history.push(cost);
                if rel_decrease < opts.tolerance {
                    converged = true;
                }
                break;
            }
            lambda *= 4.0;
        }
        if !accepted {
            // No downhill step found at any damping: treat as converged.
            converged = true;
            break;
        }
        if converged {
            break;
        }
    }

    LmOutcome {
        x,
        cost,
        iterations,
        converged,
        cost_history: history,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn fits_rosenbrock_residuals() {
        // Rosenbrock as least squares: r = [10(y - x^2), 1 - x].
        let f = |x: &[f64]| vec![10.0 * (x[1] - x[0] * x[0]), 1.0 - x[0]];
        let out = minimize(
            f,
            &[-1.2, 1.0],
            &[-5.0, -5.0],
            &[5.0, 5.0],
            &LmOptions {
                max_iterations: 200,
                tolerance: 1e-12,
                ..Default::default()
            },
        );
        assert_relative_eq!(out.x[0], 1.0, epsilon = 1e-4);
        assert_relative_eq!(out.x[1], 1.0, epsilon = 1e-4);
    }

    #[test]
    fn respects_bounds() {
        // Unconstrained minimum at x = 3, bound at 2.
        let f = |x: &[f64]| vec![x[0] - 3.0];
        let out = minimize(f, &[0.0], &[-2.0], &[2.0], &LmOptions::default());
        assert_relative_eq!(out.x[0], 2.0, epsilon = 1e-8);
    }

    #[test]
    fn cost_history_non_increasing() {
        let f = |x: &[f64]| vec![x[0] * x[0] - 2.0, x[1] - 1.0, (x[0] - x[1]).sin()];
        let out = minimize(
            f,
            &[3.0, -2.0],
            &[-10.0, -10.0],
            &[10.0, 10.0],
            &LmOptions::default(),
        );
        for w in out.cost_history.windows(2) {
            assert!(w[1] <= w[0] + 1e-15);
        }
    }

    #[test]
    fn linear_problem_one_step() {
        let f = |x: &[f64]| vec![2.0 * x[0] - 4.0, x[1] + 1.0];
        let out = minimize(f, &[0.0, 0.0], &[-10.0, -10.0], &[10.0, 10.0], &LmOptions::default());
        assert_relative_eq!(out.x[0], 2.0, epsilon = 1e-6);
        assert_relative_eq!(out.x[1], -1.0, epsilon = 1e-6);
        assert!(out.converged);
    }
}
