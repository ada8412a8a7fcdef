//! Multivector-valued polynomial and radial-rational calculus.
//!
//! Variables are real scalars and commute with everything; coefficients live
//! in the (noncommutative) Clifford algebra. The first `2m+2` variables are
//! always the coordinates `x_0..x_{2m+1}`; additional formal variables (the
//! `λ_i` of the generating function, the `y_i` of the kernel expansions) may
//! be appended after them.

mod poly;
mod radial;

pub use poly::{CompiledPoly, MvPolynomial};
pub use radial::RadialRational;

use crate::algebra::{AlgebraConfig, Multivector};
use crate::numutil::binomial;
use crate::Scalar;

/// Common surface of the classes closed under the Dirac-operator calculus.
///
/// `dirac` is the left action `D p = Σ e_i ∂_i p`, `dirac_star` its conjugate
/// `D* p = ∂_0 p - Σ_{i>=1} e_i ∂_i p`, and `laplacian` iterates
/// `Δ = Σ ∂_i^2 = D D* = D* D`.
pub trait DiracCalculus: Clone + Sized {
    fn config(&self) -> AlgebraConfig;
    fn dirac(&self) -> Self;
    fn dirac_star(&self) -> Self;
    fn laplacian(&self, times: u32) -> Self;
    /// Identically zero as a function (for rational functions: numerator
    /// identically zero after cross-multiplied normalization).
    fn is_identically_zero(&self) -> bool;

    /// `D p = 0` everywhere.
    fn is_monogenic(&self) -> bool {
        self.dirac().is_identically_zero()
    }

    /// `D Δ^m p = 0` everywhere (away from singularities for rational
    /// functions).
    fn is_holomorphic_cliffordian(&self) -> bool {
        self.laplacian(self.config().m()).dirac().is_identically_zero()
    }

    /// The first-order system equivalent to `D Δ^m p = 0`: starting from
    /// `f_1 = p`, alternately apply `D` and `D*`; the returned chain has
    /// `2m + 2` entries and ends with `D f_{2m+1} = D Δ^m p`.
    fn holomorphy_chain(&self) -> Vec<Self> {
        let m = self.config().m();
        let mut chain = vec![self.clone()];
        for _ in 0..m {
            let last = chain.last().expect("nonempty");
            chain.push(last.dirac());
            let last = chain.last().expect("nonempty");
            chain.push(last.dirac_star());
        }
        let last = chain.last().expect("nonempty");
        chain.push(last.dirac());
        chain
    }
}

/// `Re((x_0 + i r)^n)` with `r = |x⃗|`, as a polynomial in `x`. Only even
/// powers of `r` occur, so substituting `r² = Σ_{i>=1} x_i²` stays
/// polynomial. By the harmonicity of the real part in `(x_0, r)` this is an
/// `(m+1)`-polyharmonic function of `x` for every `m`.
pub fn radial_real_power(config: AlgebraConfig, n: u32) -> MvPolynomial {
    radial_scaled_derivative(config, n, 0)
}

/// `(r^{-1} ∂_r)^k Re((x_0 + i r)^n)` substituted back to `x`-variables.
/// Writing the function in `(x_0, s)` with `s = r²` turns `r^{-1} ∂_r` into
/// `2 ∂_s`, which keeps everything polynomial.
pub fn radial_scaled_derivative(config: AlgebraConfig, n: u32, k: u32) -> MvPolynomial {
    // coefficients of x_0^{n-2j} s^j in Re((x_0 + i r)^n)
    let mut coeffs: Vec<(u32, u32, Scalar)> = Vec::new();
    for j in 0..=(n / 2) {
        let mut c = Scalar::from_integer(binomial(n, 2 * j));
        if j % 2 == 1 {
            c = -c;
        }
        coeffs.push((n - 2 * j, j, c));
    }
    // apply (2 d/ds)^k
    for _ in 0..k {
        let mut next = Vec::new();
        for (a, j, c) in coeffs {
            if j > 0 {
                next.push((a, j - 1, c * Scalar::from_integer((2 * i64::from(j)).into())));
            }
        }
        coeffs = next;
    }
    // substitute s = Σ_{i>=1} x_i²
    let cc = config.coord_count();
    let mut s_poly = MvPolynomial::zero(config);
    for i in 1..cc {
        let mut exps = vec![0u16; cc];
        exps[i] = 2;
        s_poly = &s_poly
            + &MvPolynomial::monomial(config, exps, Multivector::scalar(config, Scalar::from_integer(1.into())));
    }
    let mut out = MvPolynomial::zero(config);
    for (a, j, c) in coeffs {
        let mut exps = vec![0u16; cc];
        exps[0] = a as u16;
        let mut term = MvPolynomial::monomial(config, exps, Multivector::scalar(config, c));
        for _ in 0..j {
            term = &term * &s_poly;
        }
        out = &out + &term;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radial_family_is_polyharmonic() {
        // Δ^{m+1} Re((x_0 + i|x⃗|)^n) = 0 and the scaled-derivative ladder
        // Δ^k f = 2m(2m-2)...(2m-2k+2) (r^{-1}∂_r)^k f holds exactly.
        for m in [1u32, 2] {
            let config = AlgebraConfig::new(m).unwrap();
            for n in [3u32, 5, 8] {
                let f = radial_real_power(config, n);
                assert!(f.laplacian(m + 1).is_zero(), "m={m}, n={n}");
                for k in 1..=m + 1 {
                    let mut coef = Scalar::from_integer(1.into());
                    for i in 0..k {
                        coef = coef
                            * Scalar::from_integer((2 * i64::from(m) - 2 * i64::from(i)).into());
                    }
                    let lhs = f.laplacian(k);
                    let rhs = radial_scaled_derivative(config, n, k).scale(&coef);
                    assert_eq!(lhs, rhs, "m={m}, n={n}, k={k}");
                }
            }
        }
    }
}
