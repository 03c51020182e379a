//! Hermite polynomials and L²-normalized Hermite functions.

use std::f64::consts::PI;

/// Physicists' Hermite polynomial H_n(x).
///
/// Three-term recurrence H_{k+1} = 2x H_k - 2k H_{k-1}. Overflows for large
/// n·x²; callers needing large n must use [`hermite_function`].
pub fn hermite_h(n: usize, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut hm = 1.0; // H_0
    let mut h = 2.0 * x; // H_1
    for k in 1..n {
        let hp = 2.0 * x * h - 2.0 * (k as f64) * hm;
        hm = h;
        h = hp;
    }
    h
}

/// Normalized Hermite function h_n(x) = H_n(x) e^{-x²/2} / sqrt(2^n n! √π).
///
/// Satisfies ∫ h_n h_m dx = δ_{nm}. Computed by a recurrence directly on
/// h_n so that no 2^n n! factor is ever formed:
///
/// h_{k+1} = x sqrt(2/(k+1)) h_k - sqrt(k/(k+1)) h_{k-1}
pub fn hermite_function(n: usize, x: f64) -> f64 {
    let mut buf = [0.0; 2];
    hermite_recurrence(n, x, &mut buf);
    buf[1]
}

/// h_0(x), ..., h_{n_max}(x) in one pass of the normalized recurrence.
pub fn hermite_function_series(n_max: usize, x: f64) -> Vec<f64> {
    let h0 = PI.powf(-0.25) * (-0.5 * x * x).exp();
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(h0);
    if n_max == 0 {
        return out;
    }
    out.push(std::f64::consts::SQRT_2 * x * h0);
    for k in 1..n_max {
        let kf = k as f64;
        let next = x * (2.0 / (kf + 1.0)).sqrt() * out[k] - (kf / (kf + 1.0)).sqrt() * out[k - 1];
        out.push(next);
    }
    out
}

/// d/dx h_n(x) = sqrt(n/2) h_{n-1}(x) - sqrt((n+1)/2) h_{n+1}(x).
pub fn hermite_function_derivative(n: usize, x: f64) -> f64 {
    let series = hermite_function_series(n + 1, x);
    let lower = if n == 0 { 0.0 } else { (n as f64 / 2.0).sqrt() * series[n - 1] };
    lower - ((n as f64 + 1.0) / 2.0).sqrt() * series[n + 1]
}

// Runs the normalized recurrence keeping only the last two values;
// buf = [h_{n-1}, h_n] on return (buf[0] = 0 for n = 0).
fn hermite_recurrence(n: usize, x: f64, buf: &mut [f64; 2]) {
    let h0 = PI.powf(-0.25) * (-0.5 * x * x).exp();
    if n == 0 {
        *buf = [0.0, h0];
        return;
    }
    let mut hm = h0;
    let mut h = std::f64::consts::SQRT_2 * x * h0;
    for k in 1..n {
        let kf = k as f64;
        let hp = x * (2.0 / (kf + 1.0)).sqrt() * h - (kf / (kf + 1.0)).sqrt() * hm;
        hm = h;
        h = hp;
    }
    *buf = [hm, h];
}
