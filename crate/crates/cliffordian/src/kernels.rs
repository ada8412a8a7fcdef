//! Cauchy kernels and their expansions.
//!
//! `E(x) = (1/ω_m) x*/|x|^{2m+2}` is the monogenic Cauchy kernel and
//! `N(x) = ε_m x^{-1}` the holomorphic Cliffordian one, tied together by
//! `Δ^m N = E`. The exact layer carries `π^{m+1}` as a formal symbol so the
//! constant chain `ε_m · c_m · ω_m = 1` can be checked without floats.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{AlgebraConfig, Blade, FMultivector, FParavector};
use crate::basisfun::{multi_indices, p_alpha, s_beta};
use crate::numutil::factorial;
use crate::polycalc::{DiracCalculus, MvPolynomial, RadialRational};
use crate::{Error, Result, Scalar};

/// An exact rational multiple of an integer power of π.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiScaled {
    pub coef: Scalar,
    pub pi_power: i32,
}

impl PiScaled {
    pub fn new(coef: Scalar, pi_power: i32) -> Self {
        Self { coef, pi_power }
    }

    pub fn one() -> Self {
        Self::new(Scalar::one(), 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.coef * &other.coef, self.pi_power + other.pi_power)
    }

    pub fn mul_rational(&self, factor: &Scalar) -> Self {
        Self::new(&self.coef * factor, self.pi_power)
    }

    pub fn is_one(&self) -> bool {
        self.pi_power == 0 && self.coef.is_one()
    }

    pub fn to_f64(&self) -> f64 {
        num_traits::ToPrimitive::to_f64(&self.coef).unwrap_or(f64::NAN)
            * std::f64::consts::PI.powi(self.pi_power)
    }
}

/// The three constants of the kernel chain for a fixed `m`.
///
/// `ω_m = 2π^{m+1}/m!` is the area of the unit sphere in `R^{2m+2}` and
/// `c_m = (-1)^m 2^{2m} (m!)²` the constant in `Δ^m(x^{-1}) = c_m x*/ρ^{2m+2}`.
/// `ε_m` is defined by the requirement `Δ^m N = E`, i.e. `ε_m = 1/(c_m ω_m) =
/// (-1)^m / (2^{2m+1} m! π^{m+1})`, which reduces to `1/(2π)` at `m = 0`.
#[derive(Debug, Clone)]
pub struct KernelConstants {
    pub m: u32,
    pub omega: PiScaled,
    pub epsilon: PiScaled,
    pub c: Scalar,
}

impl KernelConstants {
    pub fn new(m: u32) -> Self {
        let mfact = Scalar::from_integer(factorial(m));
        let omega = PiScaled::new(Scalar::from_integer(2.into()) / &mfact, m as i32 + 1);
        let sign = if m.is_multiple_of(2) {
            Scalar::one()
        } else {
            -Scalar::one()
        };
        let c = &sign * Scalar::from_integer(num_bigint::BigInt::from(1) << (2 * m)) * &mfact
            * &mfact;
        let eps_coef = sign
            / (Scalar::from_integer(num_bigint::BigInt::from(1) << (2 * m + 1)) * &mfact);
        let epsilon = PiScaled::new(eps_coef, -(m as i32 + 1));
        Self {
            m,
            omega,
            epsilon,
            c,
        }
    }

    /// `ε_m · c_m · ω_m`, exactly; must be 1.
    pub fn chain_product(&self) -> PiScaled {
        self.epsilon.mul_rational(&self.c).mul(&self.omega)
    }

    pub fn omega_f64(&self) -> f64 {
        self.omega.to_f64()
    }

    pub fn epsilon_f64(&self) -> f64 {
        self.epsilon.to_f64()
    }
}

/// `E(x) = (1/ω_m) x*/|x|^{2m+2}` at a float point; errors at the origin.
pub fn cauchy_kernel_e(m: u32, x: &FParavector) -> Result<FParavector> {
    let n2 = x.norm_sq();
    if n2 == 0.0 {
        return Err(Error::KernelSingularity);
    }
    let constants = KernelConstants::new(m);
    let scale = 1.0 / (constants.omega_f64() * n2.powi(m as i32 + 1));
    Ok(x.conjugate().scale(scale))
}

/// `N(x) = ε_m x^{-1}` at a float point; errors at the origin.
pub fn kernel_n_f64(m: u32, x: &FParavector) -> Result<FParavector> {
    let n2 = x.norm_sq();
    if n2 == 0.0 {
        return Err(Error::KernelSingularity);
    }
    let constants = KernelConstants::new(m);
    Ok(x.conjugate().scale(constants.epsilon_f64() / n2))
}

/// Exact form of the kernel `N`: the ε factor is carried symbolically so
/// identities on the radial-rational part stay exact.
#[derive(Debug, Clone)]
pub struct ExactKernelN {
    pub scale: PiScaled,
    pub value: RadialRational,
}

pub fn kernel_n_exact(config: AlgebraConfig) -> ExactKernelN {
    ExactKernelN {
        scale: KernelConstants::new(config.m()).epsilon,
        value: RadialRational::x_inverse(config),
    }
}

/// Coefficient `a_j` in `Δ^j (x^{-1}) = a_j x*/ρ^{2j+2}`:
/// `a_j = (-1)^j 2^j j! · (2m)(2m-2)...(2m-2j+2)`, with `a_0 = 1` and
/// `a_m = c_m`.
pub fn laplacian_inverse_coefficient(m: u32, j: u32) -> Scalar {
    // one Δ step multiplies by -2(i+1)(2m-2i)
    let mut acc = Scalar::one();
    for i in 0..i64::from(j) {
        acc *= Scalar::from_integer((-2 * (i + 1) * (2 * i64::from(m) - 2 * i)).into());
    }
    acc
}

/// Compute `Δ^m (x^{-1})` by the exact radial-rational calculus and verify it
/// equals `c_m x*/ρ^{2m+2}`; a mismatch is an identity violation.
pub fn laplacian_power_of_inverse(config: AlgebraConfig) -> Result<RadialRational> {
    let m = config.m();
    let inv = RadialRational::x_inverse(config);
    let got = inv.laplacian(m);
    let constants = KernelConstants::new(m);
    let want = RadialRational::x_inverse(config)
        .scale(&constants.c)
        .mul(&RadialRational::rho_inverse_power(config, m));
    if !got.eq_cross(&want) {
        return Err(Error::IdentityViolation(format!(
            "Δ^{m}(x^-1) does not equal c_m x*/ρ^(2m+2) for m = {m}"
        )));
    }
    Ok(got)
}

/// A function of the single radial variable ρ: `c·ln ρ + Σ_p c_p ρ^p`.
#[derive(Debug, Clone, PartialEq)]
pub struct RhoExpr {
    ln_coef: Scalar,
    powers: BTreeMap<i32, Scalar>,
}

impl RhoExpr {
    pub fn ln_rho() -> Self {
        Self {
            ln_coef: Scalar::one(),
            powers: BTreeMap::new(),
        }
    }

    pub fn zero() -> Self {
        Self {
            ln_coef: Scalar::zero(),
            powers: BTreeMap::new(),
        }
    }

    fn add_power(&mut self, p: i32, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.powers.entry(p).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.powers.remove(&p);
        }
    }

    pub fn d_rho(&self) -> Self {
        let mut out = Self::zero();
        if !self.ln_coef.is_zero() {
            out.add_power(-1, self.ln_coef.clone());
        }
        for (&p, c) in &self.powers {
            if p != 0 {
                out.add_power(p - 1, c * Scalar::from_integer(p.into()));
            }
        }
        out
    }

    /// `Δ_ρ = d²/dρ² + ((2m+1)/ρ) d/dρ`.
    pub fn radial_laplacian(&self, m: u32) -> Self {
        let d1 = self.d_rho();
        let d2 = d1.d_rho();
        let mut out = d2;
        let factor = Scalar::from_integer((2 * m as i64 + 1).into());
        if !d1.ln_coef.is_zero() {
            // (1/ρ)·(c ln ρ)' never appears; d_rho removes the log
            unreachable!("derivative of a RhoExpr has no log part");
        }
        for (&p, c) in &d1.powers {
            out.add_power(p - 1, c * &factor);
        }
        out
    }

    /// The coefficient if the expression is exactly `c · ρ^p`, or zero.
    pub fn single_power(&self) -> Option<(i32, Scalar)> {
        if !self.ln_coef.is_zero() {
            return None;
        }
        if self.powers.is_empty() {
            return Some((0, Scalar::zero()));
        }
        if self.powers.len() == 1 {
            let (&p, c) = self.powers.iter().next().expect("len 1");
            return Some((p, c.clone()));
        }
        None
    }
}

/// Apply `Δ_ρ` to `ln ρ` exactly `k` times and return the verified
/// coefficient of `ρ^{-2k}`:
/// `(-1)^{k+1} 2^{k-1} (k-1)! · (2m)(2m-2)...(2m-2k+2)`.
/// At `k = m+1` the product contains the factor 0, so the iterate vanishes.
pub fn radial_ln_laplacian(k: u32, m: u32) -> Result<Scalar> {
    if k < 1 {
        return Err(Error::InvalidInput("k must be >= 1".into()));
    }
    let mut expr = RhoExpr::ln_rho();
    for _ in 0..k {
        expr = expr.radial_laplacian(m);
    }
    let (power, coef) = expr
        .single_power()
        .ok_or_else(|| Error::IdentityViolation("radial iterate is not a single power".into()))?;
    if !coef.is_zero() && power != -(2 * k as i32) {
        return Err(Error::IdentityViolation(format!(
            "radial iterate has power {power}, expected {}",
            -(2 * k as i32)
        )));
    }
    // closed form, asserted against the symbolic route
    let mut want = if k.is_multiple_of(2) {
        -Scalar::one()
    } else {
        Scalar::one()
    };
    want *= Scalar::from_integer(num_bigint::BigInt::from(1) << (k - 1));
    want *= Scalar::from_integer(factorial(k - 1));
    for i in 0..k {
        want *= Scalar::from_integer((2 * m as i64 - 2 * i as i64).into());
    }
    if coef != want {
        return Err(Error::IdentityViolation(format!(
            "radial ln coefficient mismatch at k={k}, m={m}: symbolic {coef} vs closed form {want}"
        )));
    }
    Ok(coef)
}

/// Per-degree outcome of a kernel-expansion identity.
#[derive(Debug, Clone, Serialize)]
pub struct SeriesDegree {
    pub degree: u32,
    pub exact_match: bool,
}

/// Truncated Taylor kernel: for each x-degree `n < N`, the identity
/// `Σ_{|α|=n+1} P_α(x) Y^α = (y* x)^n y*` as polynomials in the doubled
/// variable set, both sides sitting over `|y|^{2n+2}`.
#[derive(Debug, Clone)]
pub struct TaylorTruncation {
    /// Numerators per degree; variables are `x_0..` then `y_0..`.
    pub numerators: Vec<MvPolynomial>,
    /// Denominator powers `|y|^{2(n+1)}` per degree.
    pub rho_y_powers: Vec<u32>,
    pub matches: Vec<SeriesDegree>,
}

/// Build the Taylor kernel truncation of order `N` (degrees `0..N` in x) and
/// verify it degree-by-degree against the Neumann expansion of `(y-x)^{-1}`.
pub fn taylor_kernel_truncation(config: AlgebraConfig, n: u32) -> Result<TaylorTruncation> {
    if n < 1 {
        return Err(Error::InvalidInput("truncation must be >= 1".into()));
    }
    let cc = config.coord_count();
    let nvars = 2 * cc;

    // y* and x as polynomials over (x, y)
    let mut y_conj = MvPolynomial::zero_with_vars(config, nvars);
    let mut x_poly = MvPolynomial::zero_with_vars(config, nvars);
    for i in 0..cc {
        let mut ye = vec![0u16; nvars];
        ye[cc + i] = 1;
        let mut unit = crate::algebra::Multivector::unit(config, i as u32)?;
        if i > 0 {
            unit = unit.scale(&-Scalar::one());
        }
        y_conj = &y_conj + &MvPolynomial::monomial(config, ye, unit);
        let mut xe = vec![0u16; nvars];
        xe[i] = 1;
        x_poly = &x_poly
            + &MvPolynomial::monomial(
                config,
                xe,
                crate::algebra::Multivector::unit(config, i as u32)?,
            );
    }

    let mut numerators = Vec::new();
    let mut rho_y_powers = Vec::new();
    let mut matches = Vec::new();
    let mut neumann = y_conj.clone(); // (y* x)^n y*, starting at n = 0
    for degree in 0..n {
        // Σ_{|α|=degree+1} P_α(x) Y^α with Y^α = y_0^{α_0} Π (-y_i)^{α_i}
        let mut lhs = MvPolynomial::zero_with_vars(config, nvars);
        for alpha in multi_indices(config, degree + 1) {
            let pa = p_alpha(config, &alpha)?.extend_vars(nvars);
            let mut signed = Scalar::one();
            let mut exps = vec![0u16; nvars];
            for (i, &a) in alpha.entries().iter().enumerate() {
                exps[cc + i] = a as u16;
                if i > 0 && a % 2 == 1 {
                    signed = -signed;
                }
            }
            let mono = MvPolynomial::monomial(
                config,
                exps,
                crate::algebra::Multivector::scalar(config, signed),
            );
            lhs = &lhs + &(&pa * &mono);
        }
        let exact = lhs == neumann;
        matches.push(SeriesDegree {
            degree,
            exact_match: exact,
        });
        numerators.push(lhs);
        rho_y_powers.push(degree + 1);
        neumann = &(&y_conj * &x_poly) * &neumann;
    }
    Ok(TaylorTruncation {
        numerators,
        rho_y_powers,
        matches,
    })
}

/// Truncated Laurent kernel: for each y-degree `k <= N`, the identity
/// `Σ_{|β|=k} S_β(x) y^β = (x^{-1} y)^k x^{-1}` of radial rationals in x with
/// polynomial y-dependence.
#[derive(Debug, Clone)]
pub struct LaurentTruncation {
    /// Per y-degree sums `Σ_{|β|=k} S_β(x) y^β` (variables x then y).
    pub terms: Vec<RadialRational>,
    pub matches: Vec<SeriesDegree>,
}

pub fn laurent_kernel_truncation(config: AlgebraConfig, n: u32) -> Result<LaurentTruncation> {
    let cc = config.coord_count();
    let nvars = 2 * cc;

    // ŷ = Σ e_i y_i as a polynomial in the y block
    let mut y_poly = MvPolynomial::zero_with_vars(config, nvars);
    for i in 0..cc {
        let mut ye = vec![0u16; nvars];
        ye[cc + i] = 1;
        y_poly = &y_poly
            + &MvPolynomial::monomial(
                config,
                ye,
                crate::algebra::Multivector::unit(config, i as u32)?,
            );
    }
    let x_inv = RadialRational::new(
        crate::polycalc::RadialRational::x_inverse(config)
            .numerator()
            .extend_vars(nvars),
        1,
    );

    let mut terms = Vec::new();
    let mut matches = Vec::new();
    let mut neumann = x_inv.clone(); // (x^{-1} y)^k x^{-1}, starting at k = 0
    for k in 0..=n {
        let mut lhs: Option<RadialRational> = None;
        for beta in multi_indices(config, k) {
            let sb = s_beta(config, &beta)?;
            let sb = RadialRational::new(sb.numerator().extend_vars(nvars), sb.rho_power());
            let mut exps = vec![0u16; nvars];
            for (i, &b) in beta.entries().iter().enumerate() {
                exps[cc + i] = b as u16;
            }
            let mono = MvPolynomial::monomial(
                config,
                exps,
                crate::algebra::Multivector::scalar(config, Scalar::one()),
            );
            let term = sb.mul_poly(&mono);
            lhs = Some(match lhs {
                None => term,
                Some(acc) => acc.add(&term),
            });
        }
        let lhs = lhs.expect("at least one beta");
        let exact = lhs.eq_cross(&neumann);
        matches.push(SeriesDegree {
            degree: k,
            exact_match: exact,
        });
        terms.push(lhs);
        neumann = neumann.mul_poly(&y_poly).mul(&x_inv);
    }
    Ok(LaurentTruncation { terms, matches })
}

/// Float remainder of the Taylor kernel series:
/// `|(y-x)^{-1} - Σ_{k<n} (y^{-1}x)^k y^{-1}|` at a point pair.
pub fn taylor_remainder(config: AlgebraConfig, x: &FParavector, y: &FParavector, n: u32) -> Result<f64> {
    let diff = y.sub(x);
    let target = diff.inverse()?.to_multivector();
    let y_inv = y.inverse()?.to_multivector();
    let x_mv = x.to_multivector();
    let mut sum = FMultivector::zero(config);
    let mut power = y_inv.clone(); // (y^{-1} x)^k y^{-1}
    for _ in 0..n {
        sum.add_assign(&power);
        power = y_inv.mul(&x_mv).mul(&power);
    }
    Ok(target.sub(&sum).norm())
}

/// Float remainder of the Laurent kernel series:
/// `|(x-y)^{-1} - Σ_{k<n} (x^{-1}y)^k x^{-1}|` at a point pair.
pub fn laurent_remainder(config: AlgebraConfig, x: &FParavector, y: &FParavector, n: u32) -> Result<f64> {
    let diff = x.sub(y);
    let target = diff.inverse()?.to_multivector();
    let x_inv = x.inverse()?.to_multivector();
    let y_mv = y.to_multivector();
    let mut sum = FMultivector::zero(config);
    let mut power = x_inv.clone();
    for _ in 0..n {
        sum.add_assign(&power);
        power = x_inv.mul(&y_mv).mul(&power);
    }
    Ok(target.sub(&sum).norm())
}

/// Pointwise check of the closed-form identity
/// `D*(e^{λx_0} cos(λ|x⃗|)) = λ e^{λx_0} (cos(λ|x⃗|) + (x⃗/|x⃗|) sin(λ|x⃗|))`.
///
/// The left side is assembled from the analytic gradient of the scalar field
/// (never finite differences), the right side from the displayed closed form;
/// the return value is the relative residual between the two.
pub fn exp_identity_pointcheck(lambda: f64, x: &FParavector) -> Result<f64> {
    let config = x.config();
    let coords = x.coords();
    let r2: f64 = coords[1..].iter().map(|c| c * c).sum();
    if r2 == 0.0 {
        return Err(Error::ZeroVectorPart);
    }
    let r = r2.sqrt();
    let ex0 = (lambda * coords[0]).exp();
    let cos = (lambda * r).cos();
    let sin = (lambda * r).sin();

    // D* g = ∂_0 g - Σ e_i ∂_i g with g = e^{λ x_0} cos(λ |x⃗|):
    //   ∂_0 g = λ e^{λ x_0} cos(λ r)
    //   ∂_i g = -λ e^{λ x_0} sin(λ r) x_i / r
    let mut lhs = FMultivector::zero(config);
    lhs.set(Blade::SCALAR, lambda * ex0 * cos);
    for i in 1..config.coord_count() {
        let blade = Blade::generator(&config, i as u32)?;
        let partial = -lambda * ex0 * sin * coords[i] / r;
        lhs.set(blade, -partial);
    }

    let mut rhs = FMultivector::zero(config);
    rhs.set(Blade::SCALAR, lambda * ex0 * cos);
    for i in 1..config.coord_count() {
        let blade = Blade::generator(&config, i as u32)?;
        rhs.set(blade, lambda * ex0 * sin * coords[i] / r);
    }

    let scale = lhs.norm().max(rhs.norm());
    let diff = lhs.sub(&rhs).norm();
    Ok(if scale == 0.0 { diff } else { diff / scale })
}

/// Status of one verified identity, used by the machine-readable reports.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "status")]
pub enum IdentityStatus {
    #[serde(rename = "exact-pass")]
    ExactPass,
    #[serde(rename = "float-pass")]
    FloatPass { max_residual: f64 },
    #[serde(rename = "fail")]
    Fail { detail: String },
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub m: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub truncation: Option<u32>,
    #[serde(flatten)]
    pub status: IdentityStatus,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        !matches!(self.status, IdentityStatus::Fail { .. })
    }
}
