//! Derivative-free simplex descent with restarts on collapse.

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NmOptions {
    pub max_evals: usize,
    /// Stop once the spread of simplex values falls below this.
    pub ftol: f64,
    /// Restart from the best vertex when the simplex volume (relative to the
    /// initial one) drops below this.
    pub collapse: f64,
    pub max_restarts: usize,
}

impl Default for NmOptions {
    fn default() -> Self {
        NmOptions {
            max_evals: 4000,
            ftol: 1e-12,
            collapse: 1e-14,
            max_restarts: 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NmResult {
    pub x: Vec<f64>,
    pub fx: f64,
    pub evals: usize,
}

fn volume(simplex: &[Vec<f64>], steps: &[f64]) -> f64 {
    // Product of per-axis extents, normalised by the initial steps.
    let n = steps.len();
    let mut v = 1.0;
    for i in 0..n {
        let (lo, hi) = simplex
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), p| (lo.min(p[i]), hi.max(p[i])));
        v *= (hi - lo) / steps[i];
    }
    v
}

pub fn nelder_mead(mut f: impl FnMut(&[f64]) -> f64, x0: &[f64], steps: &[f64], opts: NmOptions) -> NmResult {
    let n = x0.len();
    let mut evals = 0usize;
    let mut eval = |x: &[f64], evals: &mut usize| {
        *evals += 1;
        let v = f(x);
        if v.is_nan() {
            f64::INFINITY
        } else {
            v
        }
    };
    let mut best_x = x0.to_vec();
    let mut best_f = eval(x0, &mut evals);
    if n == 0 {
        return NmResult { x: best_x, fx: best_f, evals };
    }
    let mut restarts = 0;
    let mut scale = 1.0;
    'outer: loop {
        let mut simplex: Vec<Vec<f64>> = vec![best_x.clone()];
        let mut vals = vec![best_f];
        for i in 0..n {
            let mut p = best_x.clone();
            p[i] += steps[i] * scale;
            vals.push(eval(&p, &mut evals));
            simplex.push(p);
        }
        loop {
            let mut idx: Vec<usize> = (0..=n).collect();
            idx.sort_by(|&a, &b| vals[a].total_cmp(&vals[b]).then(a.cmp(&b)));
            simplex = idx.iter().map(|&i| simplex[i].clone()).collect();
            vals = idx.iter().map(|&i| vals[i]).collect();
            if vals[0] < best_f {
                best_f = vals[0];
                best_x = simplex[0].clone();
            }
            if evals >= opts.max_evals {
                break 'outer;
            }
            let spread = vals[n] - vals[0];
            let collapsed = volume(&simplex, steps) < opts.collapse;
            if (spread.is_finite() && spread <= opts.ftol * (1.0 + vals[0].abs())) || collapsed {
                break;
            }
            let mut centroid = vec![0.0; n];
            for p in &simplex[..n] {
                for i in 0..n {
                    centroid[i] += p[i] / n as f64;
                }
            }
            let along = |t: f64| -> Vec<f64> { (0..n).map(|i| centroid[i] + t * (simplex[n][i] - centroid[i])).collect() };
            let xr = along(-1.0);
            let fr = eval(&xr, &mut evals);
            if fr < vals[0] {
                let xe = along(-2.0);
                let fe = eval(&xe, &mut evals);
                if fe < fr {
                    simplex[n] = xe;
                    vals[n] = fe;
                } else {
                    simplex[n] = xr;
                    vals[n] = fr;
                }
            } else if fr < vals[n - 1] {
                simplex[n] = xr;
                vals[n] = fr;
            } else {
                let (xc, fc) = if fr < vals[n] {
                    let x = along(-0.5);
                    let v = eval(&x, &mut evals);
                    (x, v)
                } else {
                    let x = along(0.5);
                    let v = eval(&x, &mut evals);
                    (x, v)
                };
                if fc < vals[n].min(fr) {
                    simplex[n] = xc;
                    vals[n] = fc;
                } else {
                    for j in 1..=n {
                        for i in 0..n {
                            simplex[j][i] = simplex[0][i] + 0.5 * (simplex[j][i] - simplex[0][i]);
                        }
                        vals[j] = eval(&simplex[j], &mut evals);
                    }
                }
            }
        }
        restarts += 1;
        if restarts > opts.max_restarts {
            break;
        }
        scale *= 0.1;
    }
    NmResult {
        x: best_x,
        fx: best_f,
        evals,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rosenbrock() {
        let f = |x: &[f64]| (1.0 - x[0]).powi(2) + 100.0 * (x[1] - x[0] * x[0]).powi(2);
        let r = nelder_mead(f, &[-1.2, 1.0], &[0.5, 0.5], NmOptions { max_evals: 5000, ..Default::default() });
        assert!(r.fx < 1e-10, "{r:?}");
        assert!((r.x[0] - 1.0).abs() < 1e-4);
    }

    #[test]
    fn never_worse_than_start() {
        let f = |x: &[f64]| if x[0].abs() > 1e-3 { f64::INFINITY } else { x[0] * x[0] };
        let r = nelder_mead(f, &[5e-4], &[1.0], NmOptions::default());
        assert!(r.fx <= 2.5e-7);
    }

    #[test]
    fn deterministic() {
        let f = |x: &[f64]| (x[0] - 0.3).abs() + (x[1] + 0.1).abs().max((x[0] * x[1]).abs());
        let a = nelder_mead(f, &[1.0, 1.0], &[0.2, 0.2], NmOptions::default());
        let b = nelder_mead(f, &[1.0, 1.0], &[0.2, 0.2], NmOptions::default());
        assert_eq!(a, b);
    }
}
