//! Rational functions of the form `P(x) / |x|^{2k}`, closed under partial
//! derivatives. This is the natural home of `x^{-1} = x*/|x|^2` and of the
//! singular basis family.

use std::fmt;

use num_traits::One;
use serde_json::{json, Value};

use crate::algebra::{AlgebraConfig, FMultivector, FParavector, Multivector};
use crate::{Error, Result, Scalar};

use super::poly::MvPolynomial;
use super::DiracCalculus;

/// `numerator / (ρ²)^k` with `ρ² = Σ_{i<2m+2} x_i²`. No cancellation of ρ²
/// factors is ever attempted; equality is tested cross-multiplied. The
/// numerator may declare extra formal variables beyond the coordinates; the
/// radial denominator always refers to the coordinate block.
#[derive(Debug, Clone)]
pub struct RadialRational {
    numerator: MvPolynomial,
    rho_power: u32,
}

impl RadialRational {
    pub fn new(numerator: MvPolynomial, rho_power: u32) -> Self {
        Self {
            numerator,
            rho_power,
        }
    }

    pub fn from_poly(numerator: MvPolynomial) -> Self {
        Self::new(numerator, 0)
    }

    /// `x^{-1} = x*/ρ²` as a radial rational function.
    pub fn x_inverse(config: AlgebraConfig) -> Self {
        Self::new(conjugate_identity(config, config.coord_count()), 1)
    }

    /// `1/ρ^{2k}`.
    pub fn rho_inverse_power(config: AlgebraConfig, k: u32) -> Self {
        Self::new(
            MvPolynomial::scalar_constant(config, Scalar::one()),
            k,
        )
    }

    pub fn numerator(&self) -> &MvPolynomial {
        &self.numerator
    }

    pub fn rho_power(&self) -> u32 {
        self.rho_power
    }

    pub fn nvars(&self) -> usize {
        self.numerator.nvars()
    }

    /// Exact formal partial derivative; stays in the class by the quotient
    /// rule `∂_i (P/ρ^{2k}) = (ρ² ∂_i P - 2k x_i P) / ρ^{2(k+1)}` for
    /// coordinate variables.
    pub fn partial(&self, index: usize) -> Result<Self> {
        if index >= self.nvars() {
            return Err(Error::UnknownVariable {
                index,
                nvars: self.nvars(),
            });
        }
        Ok(self.d(index))
    }

    pub(crate) fn d(&self, index: usize) -> Self {
        let cc = self.config().coord_count();
        let dp = self.numerator.d(index);
        if index >= cc || self.rho_power == 0 {
            if self.rho_power == 0 {
                return Self::new(dp, 0);
            }
            return Self::new(dp, self.rho_power);
        }
        let rho2 = rho2(self.config(), self.nvars());
        let two_k = Scalar::from_integer((2 * self.rho_power).into());
        let num = &(&rho2 * &dp) - &self.numerator.mul_var(index, 1).scale(&two_k);
        Self::new(num, self.rho_power + 1)
    }

    pub fn scale(&self, factor: &Scalar) -> Self {
        Self::new(self.numerator.scale(factor), self.rho_power)
    }

    pub fn left_mul(&self, factor: &Multivector) -> Self {
        Self::new(self.numerator.left_mul(factor), self.rho_power)
    }

    pub fn right_mul(&self, factor: &Multivector) -> Self {
        Self::new(self.numerator.right_mul(factor), self.rho_power)
    }

    pub fn add(&self, other: &Self) -> Self {
        let k = self.rho_power.max(other.rho_power);
        let a = self.raise_power(k);
        let b = other.raise_power(k);
        Self::new(&a.numerator + &b.numerator, k)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(
            &self.numerator * &other.numerator,
            self.rho_power + other.rho_power,
        )
    }

    /// Multiply by a polynomial (e.g. powers of formal variables).
    pub fn mul_poly(&self, poly: &MvPolynomial) -> Self {
        Self::new(&self.numerator * poly, self.rho_power)
    }

    fn raise_power(&self, k: u32) -> Self {
        debug_assert!(k >= self.rho_power);
        let mut num = self.numerator.clone();
        let rho2 = rho2(self.config(), self.nvars());
        for _ in self.rho_power..k {
            num = &num * &rho2;
        }
        Self::new(num, k)
    }

    /// Equality as rational functions: `A/ρ^{2a} = B/ρ^{2b}` iff
    /// `A (ρ²)^b = B (ρ²)^a` as polynomials.
    pub fn eq_cross(&self, other: &Self) -> bool {
        let k = self.rho_power.max(other.rho_power);
        self.raise_power(k).numerator == other.raise_power(k).numerator
    }

    pub fn eval_f64(&self, point: &FParavector) -> Result<FMultivector> {
        let n2 = point.norm_sq();
        if n2 == 0.0 && self.rho_power > 0 {
            return Err(Error::KernelSingularity);
        }
        let num = self.numerator.eval_f64(point.coords())?;
        Ok(num.scale(n2.powi(-(self.rho_power as i32))))
    }

    /// JSON: the numerator polynomial plus a `rho_power` field.
    pub fn to_json(&self) -> Value {
        json!({
            "numerator": self.numerator.to_json(),
            "rho_power": self.rho_power,
        })
    }

    pub fn from_json(config: AlgebraConfig, value: &Value) -> Result<Self> {
        let num = MvPolynomial::from_json(
            config,
            value
                .get("numerator")
                .ok_or_else(|| Error::InvalidInput("missing numerator".into()))?,
        )?;
        let k = value
            .get("rho_power")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::InvalidInput("missing rho_power".into()))?;
        Ok(Self::new(num, k as u32))
    }
}

/// Structural equality is not rational-function equality; use `eq_cross`.
impl PartialEq for RadialRational {
    fn eq(&self, other: &Self) -> bool {
        self.eq_cross(other)
    }
}

impl DiracCalculus for RadialRational {
    fn config(&self) -> AlgebraConfig {
        self.numerator.config()
    }

    fn dirac(&self) -> Self {
        let cc = self.config().coord_count();
        let mut out = self.d(0); // e_0 = 1
        for i in 1..cc {
            let unit = Multivector::unit(self.config(), i as u32).expect("in range");
            out = out.add(&self.d(i).left_mul(&unit));
        }
        out
    }

    fn dirac_star(&self) -> Self {
        let cc = self.config().coord_count();
        let mut out = self.d(0);
        for i in 1..cc {
            let unit = Multivector::unit(self.config(), i as u32).expect("in range");
            out = out.sub(&self.d(i).left_mul(&unit));
        }
        out
    }

    fn laplacian(&self, times: u32) -> Self {
        let cc = self.config().coord_count();
        let mut p = self.clone();
        for _ in 0..times {
            let mut next: Option<Self> = None;
            for i in 0..cc {
                let dd = p.d(i).d(i);
                next = Some(match next {
                    None => dd,
                    Some(acc) => acc.add(&dd),
                });
            }
            p = next.expect("at least one coordinate");
        }
        p
    }

    fn is_identically_zero(&self) -> bool {
        self.numerator.is_zero()
    }
}

/// `ρ² = Σ_{i < coord_count} x_i²` as a polynomial over `nvars` variables.
pub(crate) fn rho2(config: AlgebraConfig, nvars: usize) -> MvPolynomial {
    let mut p = MvPolynomial::zero_with_vars(config, nvars);
    for i in 0..config.coord_count() {
        let mut exps = vec![0u16; nvars];
        exps[i] = 2;
        p.add_term(exps, Multivector::scalar(config, Scalar::one()));
    }
    p
}

/// `x* = x_0 - Σ e_i x_i` as a polynomial.
pub(crate) fn conjugate_identity(config: AlgebraConfig, nvars: usize) -> MvPolynomial {
    let mut p = MvPolynomial::zero_with_vars(config, nvars);
    for i in 0..config.coord_count() {
        let mut exps = vec![0u16; nvars];
        exps[i] = 1;
        let mut unit = Multivector::unit(config, i as u32).expect("in range");
        if i > 0 {
            unit = unit.scale(&-Scalar::one());
        }
        p.add_term(exps, unit);
    }
    p
}

impl fmt::Display for RadialRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / rho^{}", self.numerator, 2 * self.rho_power)
    }
}
