//! Damped Newton-Raphson for small nonlinear systems.

use nalgebra::{DMatrix, DVector};

#[derive(Debug, Clone)]
pub struct NewtonOutcome {
    pub x: DVector<f64>,
    pub iterations: usize,
    pub converged: bool,
}

fn inf_norm(v: &DVector<f64>) -> f64 {
    v.iter().fold(0.0f64, |m, x| m.max(x.abs()))
}

/// Solve F(x) = 0 from x0. Steps are damped by successive halving whenever a
/// full step fails to reduce the residual; a singular Jacobian ends the
/// iteration with `converged = false` rather than panicking.
pub fn newton_system<F, J>(
    f: F,
    jac: J,
    x0: &DVector<f64>,
    tol: f64,
    max_iter: usize,
) -> NewtonOutcome
where
    F: Fn(&DVector<f64>) -> DVector<f64>,
    J: Fn(&DVector<f64>) -> DMatrix<f64>,
{
    let mut x = x0.clone();
    let mut fx = f(&x);
    for iter in 0..max_iter {
        let res = inf_norm(&fx);
        if res <= tol {
            return NewtonOutcome {
                x,
                iterations: iter,
                converged: true,
            };
        }
        let j = jac(&x);
        let lu = j.lu();
        let step = match lu.solve(&fx) {
            Some(s) => s,
            None => {
                return NewtonOutcome {
                    x,
                    iterations: iter,
                    converged: false,
                }
            }
        };
        let mut damping = 1.0f64;
        let mut accepted = false;
        for _ in 0..12 {
            let trial = &x - &step * damping;
            let ftrial = f(&trial);
            if ftrial.iter().all(|v| v.is_finite()) && inf_norm(&ftrial) < res {
                x = trial;
                fx = ftrial;
                accepted = true;
                break;
            }
            damping *= 0.5;
        }
        if !accepted {
            // take the smallest damped step anyway to escape flat spots
            x -= &step * damping;
            fx = f(&x);
            if !fx.iter().all(|v| v.is_finite()) {
                return NewtonOutcome {
                    x,
                    iterations: iter + 1,
                    converged: false,
                };
            }
        }
    }
    let converged = inf_norm(&fx) <= tol;
    NewtonOutcome {
        x,
        iterations: max_iter,
        converged,
    }
}
