//! Central finite differences with one Richardson extrapolation step.
//!
//! Both helpers combine steps `h` and `h/2`, cancelling the `h^2` error
//! term of the central stencil, so the remaining error is `O(h^4)`.

use core::ops::{Add, Mul, Sub};

pub fn first_derivative<T, F>(mut f: F, x: f64, h: f64) -> T
where
    T: Copy + Add<Output = T> + Sub<Output = T> + Mul<f64, Output = T>,
    F: FnMut(f64) -> T,
{
    let mut central = |h: f64| (f(x + h) - f(x - h)) * (0.5 / h);
    let coarse = central(h);
    let fine = central(0.5 * h);
    richardson(coarse, fine)
}

pub fn second_derivative<T, F>(mut f: F, x: f64, h: f64) -> T
where
    T: Copy + Add<Output = T> + Sub<Output = T> + Mul<f64, Output = T>,
    F: FnMut(f64) -> T,
{
    let centre = f(x);
    let mut central = |h: f64| (f(x + h) - centre * 2.0 + f(x - h)) * (1.0 / (h * h));
    let coarse = central(h);
    let fine = central(0.5 * h);
    richardson(coarse, fine)
}

fn richardson<T>(coarse: T, fine: T) -> T
where
    T: Copy + Add<Output = T> + Sub<Output = T> + Mul<f64, Output = T>,
{
    fine + (fine - coarse) * (1.0 / 3.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_on_quartics() {
        let f = |x: f64| x * x * x * x - 3.0 * x * x + x;
        // f' = 4x^3 - 6x + 1, f'' = 12x^2 - 6; Richardson is exact through degree 4/5.
        let d1 = first_derivative(f, 0.7, 0.1);
        let d2 = second_derivative(f, 0.7, 0.1);
        assert!((d1 - (4.0 * 0.343 - 4.2 + 1.0)).abs() < 1e-12);
        assert!((d2 - (12.0 * 0.49 - 6.0)).abs() < 1e-10);
    }

    #[test]
    fn exponential() {
        let d2 = second_derivative(libm::exp, 0.0, 1e-2);
        assert!((d2 - 1.0).abs() < 1e-9);
    }
}
