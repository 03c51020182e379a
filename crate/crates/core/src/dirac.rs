//! Dirac matrices in the standard representation.

use nalgebra::{Matrix4, Vector4};
use num_complex::Complex64;

/// A 4-component Dirac spinor value.
pub type Spinor = Vector4<Complex64>;

/// Minkowski metric g = diag(+, -, -, -).
pub const METRIC: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

/// The four gamma matrices in the standard (Dirac) representation, with the
/// derived α_i = γ⁰γ^i, β = γ⁰ and σ^{μν} = (i/2)[γ^μ, γ^ν].
///
/// Satisfies the Clifford algebra {γ^μ, γ^ν} = 2 g^{μν} I with
/// g = diag(+,-,-,-), exactly in floating point (entries are 0, ±1, ±i).
#[derive(Debug, Clone)]
pub struct GammaRep {
    pub gamma: [Matrix4<Complex64>; 4],
    pub alpha: [Matrix4<Complex64>; 3],
    pub beta: Matrix4<Complex64>,
}

impl Default for GammaRep {
    fn default() -> Self {
        Self::standard()
    }
}

impl GammaRep {
    pub fn standard() -> Self {
        let o = Complex64::ZERO;
        let one = Complex64::ONE;
        let i = Complex64::I;
        let gamma0 = Matrix4::from_diagonal(&Vector4::new(one, one, -one, -one));
        // γ^k = [[0, σ_k], [-σ_k, 0]]
        let gamma1 = Matrix4::new(
            o, o, o, one, //
            o, o, one, o, //
            o, -one, o, o, //
            -one, o, o, o,
        );
        let gamma2 = Matrix4::new(
            o, o, o, -i, //
            o, o, i, o, //
            o, i, o, o, //
            -i, o, o, o,
        );
        let gamma3 = Matrix4::new(
            o, o, one, o, //
            o, o, o, -one, //
            -one, o, o, o, //
            o, one, o, o,
        );
        let alpha = [gamma0 * gamma1, gamma0 * gamma2, gamma0 * gamma3];
        Self { gamma: [gamma0, gamma1, gamma2, gamma3], alpha, beta: gamma0 }
    }

    /// σ^{μν} = (i/2)[γ^μ, γ^ν].
    pub fn sigma(&self, mu: usize, nu: usize) -> Matrix4<Complex64> {
        let g = &self.gamma;
        (g[mu] * g[nu] - g[nu] * g[mu]).map(|e| Complex64::new(0.0, 0.5) * e)
    }

    /// Σ_{μν} σ^{μν} F_{μν} for a field-strength matrix with lower indices.
    pub fn sigma_contract(&self, f_lower: &[[f64; 4]; 4]) -> Matrix4<Complex64> {
        let mut out = Matrix4::<Complex64>::zeros();
        for mu in 0..4 {
            for nu in 0..4 {
                if f_lower[mu][nu] != 0.0 {
                    out += self.sigma(mu, nu).map(|e| e * Complex64::from(f_lower[mu][nu]));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn max_abs(m: &Matrix4<Complex64>) -> f64 {
        m.iter().map(|e| e.norm()).fold(0.0, f64::max)
    }

    #[test]
    fn clifford_algebra() {
        let rep = GammaRep::standard();
        for mu in 0..4 {
            for nu in 0..4 {
                let anti = rep.gamma[mu] * rep.gamma[nu] + rep.gamma[nu] * rep.gamma[mu];
                let metric = if mu == nu { 2.0 * METRIC[mu] } else { 0.0 };
                let expect = Matrix4::identity().map(|e: Complex64| e * Complex64::from(metric));
                assert!(max_abs(&(anti - expect)) <= 1e-15, "mu={mu} nu={nu}");
            }
        }
    }

    #[test]
    fn alpha_and_beta_square_to_identity() {
        let rep = GammaRep::standard();
        assert!(max_abs(&(rep.beta * rep.beta - Matrix4::identity())) == 0.0);
        for a in &rep.alpha {
            assert!(max_abs(&(a * a - Matrix4::identity())) == 0.0);
        }
    }

    #[test]
    fn sigma_is_antisymmetric_in_indices() {
        let rep = GammaRep::standard();
        for mu in 0..4 {
            for nu in 0..4 {
                assert!(max_abs(&(rep.sigma(mu, nu) + rep.sigma(nu, mu))) <= 1e-15);
            }
        }
    }

    #[test]
    fn sigma_beta_conjugation() {
        // β σ^{μν}† β = σ^{μν}, from γ^μ† = γ⁰ γ^μ γ⁰.
        let rep = GammaRep::standard();
        for mu in 0..4 {
            for nu in 0..4 {
                let s = rep.sigma(mu, nu);
                let conj = rep.beta * s.adjoint() * rep.beta;
                assert!(max_abs(&(conj - s)) <= 1e-15);
            }
        }
    }
}
