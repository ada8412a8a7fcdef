//! Sparse polynomials with multivector coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::algebra::{AlgebraConfig, FMultivector, Multivector, Paravector};
use crate::{Error, Result, Scalar};

use super::DiracCalculus;

/// Multivector-valued polynomial: a sparse map from exponent vectors to
/// Clifford coefficients. Exponent vectors have length `nvars`; the first
/// `config.coord_count()` variables are the coordinates `x_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MvPolynomial {
    config: AlgebraConfig,
    nvars: usize,
    terms: BTreeMap<Vec<u16>, Multivector>,
}

impl MvPolynomial {
    pub fn zero(config: AlgebraConfig) -> Self {
        Self::zero_with_vars(config, config.coord_count())
    }

    /// Zero polynomial with `nvars >= coord_count` declared variables.
    pub fn zero_with_vars(config: AlgebraConfig, nvars: usize) -> Self {
        assert!(nvars >= config.coord_count(), "too few variables");
        Self {
            config,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(value: Multivector) -> Self {
        let nvars = value.config().coord_count();
        Self::constant_with_vars(value, nvars)
    }

    pub fn constant_with_vars(value: Multivector, nvars: usize) -> Self {
        let mut p = Self::zero_with_vars(value.config(), nvars);
        p.add_term(vec![0; nvars], value);
        p
    }

    pub fn scalar_constant(config: AlgebraConfig, value: Scalar) -> Self {
        Self::constant(Multivector::scalar(config, value))
    }

    /// Monomial `coeff * Π v_i^{exps[i]}`.
    pub fn monomial(config: AlgebraConfig, exps: Vec<u16>, coeff: Multivector) -> Self {
        assert!(exps.len() >= config.coord_count());
        let nvars = exps.len();
        let mut p = Self::zero_with_vars(config, nvars);
        p.add_term(exps, coeff);
        p
    }

    /// The identity function `x = Σ e_i x_i` as a degree-1 polynomial.
    pub fn identity(config: AlgebraConfig) -> Self {
        Self::identity_with_vars(config, config.coord_count())
    }

    pub fn identity_with_vars(config: AlgebraConfig, nvars: usize) -> Self {
        let mut p = Self::zero_with_vars(config, nvars);
        for i in 0..config.coord_count() {
            let mut exps = vec![0u16; nvars];
            exps[i] = 1;
            let unit = Multivector::unit(config, i as u32).expect("index in range");
            p.add_term(exps, unit);
        }
        p
    }

    /// `x^n`, the n-th power of the identity paravector polynomial.
    pub fn identity_power(config: AlgebraConfig, n: u32) -> Self {
        let x = Self::identity(config);
        let mut acc = Self::scalar_constant(config, Scalar::one());
        for _ in 0..n {
            acc = &acc * &x;
        }
        acc
    }

    pub fn config(&self) -> AlgebraConfig {
        self.config
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u16>, &Multivector)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> usize {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as usize).sum())
            .max()
            .unwrap_or(0)
    }

    pub(crate) fn add_term(&mut self, exps: Vec<u16>, coeff: Multivector) {
        debug_assert_eq!(exps.len(), self.nvars);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Reinterpret over a larger variable set (new variables appended).
    pub fn extend_vars(&self, nvars: usize) -> Self {
        assert!(nvars >= self.nvars);
        let mut p = Self::zero_with_vars(self.config, nvars);
        for (exps, coeff) in &self.terms {
            let mut e = exps.clone();
            e.resize(nvars, 0);
            p.add_term(e, coeff.clone());
        }
        p
    }

    pub fn scale(&self, factor: &Scalar) -> Self {
        if factor.is_zero() {
            return Self::zero_with_vars(self.config, self.nvars);
        }
        let mut p = Self::zero_with_vars(self.config, self.nvars);
        for (exps, coeff) in &self.terms {
            p.add_term(exps.clone(), coeff.scale(factor));
        }
        p
    }

    /// Multiply every coefficient by a constant multivector on the left.
    pub fn left_mul(&self, factor: &Multivector) -> Self {
        let mut p = Self::zero_with_vars(self.config, self.nvars);
        for (exps, coeff) in &self.terms {
            p.add_term(exps.clone(), factor * coeff);
        }
        p
    }

    /// Multiply every coefficient by a constant multivector on the right.
    pub fn right_mul(&self, factor: &Multivector) -> Self {
        let mut p = Self::zero_with_vars(self.config, self.nvars);
        for (exps, coeff) in &self.terms {
            p.add_term(exps.clone(), coeff * factor);
        }
        p
    }

    /// Multiply by the monomial `v_index^power`.
    pub fn mul_var(&self, index: usize, power: u16) -> Self {
        let mut p = Self::zero_with_vars(self.config, self.nvars);
        for (exps, coeff) in &self.terms {
            let mut e = exps.clone();
            e[index] += power;
            p.add_term(e, coeff.clone());
        }
        p
    }

    /// Exact formal partial derivative with respect to variable `index`.
    pub fn partial(&self, index: usize) -> Result<Self> {
        if index >= self.nvars {
            return Err(Error::UnknownVariable {
                index,
                nvars: self.nvars,
            });
        }
        Ok(self.d(index))
    }

    pub(crate) fn d(&self, index: usize) -> Self {
        let mut p = Self::zero_with_vars(self.config, self.nvars);
        for (exps, coeff) in &self.terms {
            let k = exps[index];
            if k == 0 {
                continue;
            }
            let mut e = exps.clone();
            e[index] = k - 1;
            p.add_term(e, coeff.scale(&Scalar::from_integer(k.into())));
        }
        p
    }

    /// Part of the polynomial of total degree exactly `degree`.
    pub fn homogeneous_part(&self, degree: usize) -> Self {
        let mut p = Self::zero_with_vars(self.config, self.nvars);
        for (exps, coeff) in &self.terms {
            if exps.iter().map(|&x| x as usize).sum::<usize>() == degree {
                p.add_term(exps.clone(), coeff.clone());
            }
        }
        p
    }

    /// Discard all terms of total degree above `degree`.
    pub fn truncate_degree(&self, degree: usize) -> Self {
        let mut p = Self::zero_with_vars(self.config, self.nvars);
        for (exps, coeff) in &self.terms {
            if exps.iter().map(|&x| x as usize).sum::<usize>() <= degree {
                p.add_term(exps.clone(), coeff.clone());
            }
        }
        p
    }

    /// Right action of the Dirac operator: `p D = Σ (∂_i p) e_i`.
    pub fn dirac_right(&self) -> Self {
        let cc = self.config.coord_count();
        let mut out = Self::zero_with_vars(self.config, self.nvars);
        for i in 0..cc {
            let unit = Multivector::unit(self.config, i as u32).expect("in range");
            out = &out + &self.d(i).right_mul(&unit);
        }
        out
    }

    /// Blade components as scalar-coefficient polynomials, keyed by blade.
    pub fn blade_components(&self) -> BTreeMap<crate::algebra::Blade, MvPolynomial> {
        let mut out: BTreeMap<crate::algebra::Blade, MvPolynomial> = BTreeMap::new();
        for (exps, coeff) in &self.terms {
            for (blade, c) in coeff.terms() {
                out.entry(*blade)
                    .or_insert_with(|| Self::zero_with_vars(self.config, self.nvars))
                    .add_term(
                        exps.clone(),
                        Multivector::scalar(self.config, c.clone()),
                    );
            }
        }
        out
    }

    /// Exact evaluation at a rational point (one value per variable).
    pub fn eval(&self, point: &[Scalar]) -> Result<Multivector> {
        if point.len() != self.nvars {
            return Err(Error::InvalidInput(format!(
                "expected {} values, got {}",
                self.nvars,
                point.len()
            )));
        }
        let mut acc = Multivector::zero(self.config);
        for (exps, coeff) in &self.terms {
            let mut mono = Scalar::one();
            for (v, &e) in point.iter().zip(exps.iter()) {
                for _ in 0..e {
                    mono *= v;
                }
            }
            acc = &acc + &coeff.scale(&mono);
        }
        Ok(acc)
    }

    pub fn eval_paravector(&self, point: &Paravector) -> Result<Multivector> {
        self.eval(point.coords())
    }

    /// Float evaluation (for quadrature); exact coefficients are converted on
    /// the fly. Prefer [`MvPolynomial::compile`] inside node loops.
    pub fn eval_f64(&self, point: &[f64]) -> Result<FMultivector> {
        Ok(self.compile().eval(point))
    }

    /// Precompute a float form for repeated evaluation.
    pub fn compile(&self) -> CompiledPoly {
        let terms = self
            .terms
            .iter()
            .map(|(exps, coeff)| (exps.clone(), coeff.to_float()))
            .collect();
        CompiledPoly {
            config: self.config,
            nvars: self.nvars,
            terms,
        }
    }

    /// JSON encoding: list of `{exponents, coeff}` with the multivector
    /// encoding of `coeff`.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(exps, coeff)| {
                    json!({
                        "exponents": exps.iter().map(|&e| e as u64).collect::<Vec<_>>(),
                        "coeff": coeff.to_json(),
                    })
                })
                .collect(),
        )
    }

    pub fn from_json(config: AlgebraConfig, value: &Value) -> Result<Self> {
        let items = value
            .as_array()
            .ok_or_else(|| Error::InvalidInput("polynomial JSON must be an array".into()))?;
        let mut nvars = config.coord_count();
        let mut parsed = Vec::new();
        for item in items {
            let exps: Vec<u16> = item
                .get("exponents")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::InvalidInput("term missing exponents".into()))?
                .iter()
                .map(|v| {
                    v.as_u64()
                        .map(|u| u as u16)
                        .ok_or_else(|| Error::InvalidInput("exponent must be an integer".into()))
                })
                .collect::<Result<_>>()?;
            let coeff = Multivector::from_json(
                config,
                item.get("coeff")
                    .ok_or_else(|| Error::InvalidInput("term missing coeff".into()))?,
            )?;
            nvars = nvars.max(exps.len());
            parsed.push((exps, coeff));
        }
        let mut p = Self::zero_with_vars(config, nvars);
        for (mut exps, coeff) in parsed {
            exps.resize(nvars, 0);
            p.add_term(exps, coeff);
        }
        Ok(p)
    }
}

impl DiracCalculus for MvPolynomial {
    fn config(&self) -> AlgebraConfig {
        self.config
    }

    fn dirac(&self) -> Self {
        let cc = self.config.coord_count();
        let mut out = Self::zero_with_vars(self.config, self.nvars);
        for i in 0..cc {
            let unit = Multivector::unit(self.config, i as u32).expect("in range");
            out = &out + &self.d(i).left_mul(&unit);
        }
        out
    }

    fn dirac_star(&self) -> Self {
        let cc = self.config.coord_count();
        let mut out = self.d(0);
        for i in 1..cc {
            let unit = Multivector::unit(self.config, i as u32).expect("in range");
            out = &out - &self.d(i).left_mul(&unit);
        }
        out
    }

    fn laplacian(&self, times: u32) -> Self {
        let cc = self.config.coord_count();
        let mut p = self.clone();
        for _ in 0..times {
            let mut next = Self::zero_with_vars(self.config, self.nvars);
            for i in 0..cc {
                next = &next + &p.d(i).d(i);
            }
            p = next;
        }
        p
    }

    fn is_identically_zero(&self) -> bool {
        self.is_zero()
    }
}

/// Float-compiled polynomial for hot evaluation loops.
#[derive(Debug, Clone)]
pub struct CompiledPoly {
    config: AlgebraConfig,
    nvars: usize,
    terms: Vec<(Vec<u16>, FMultivector)>,
}

impl CompiledPoly {
    pub fn eval(&self, point: &[f64]) -> FMultivector {
        debug_assert_eq!(point.len(), self.nvars);
        let mut acc = FMultivector::zero(self.config);
        for (exps, coeff) in &self.terms {
            let mut mono = 1.0;
            for (v, &e) in point.iter().zip(exps.iter()) {
                mono *= v.powi(e as i32);
            }
            acc.add_scaled(coeff, mono);
        }
        acc
    }
}

impl Add for &MvPolynomial {
    type Output = MvPolynomial;
    fn add(self, rhs: &MvPolynomial) -> MvPolynomial {
        assert_eq!(self.config, rhs.config, "algebra mismatch");
        assert_eq!(self.nvars, rhs.nvars, "variable sets differ");
        let mut out = self.clone();
        for (exps, coeff) in &rhs.terms {
            out.add_term(exps.clone(), coeff.clone());
        }
        out
    }
}

impl Sub for &MvPolynomial {
    type Output = MvPolynomial;
    fn sub(self, rhs: &MvPolynomial) -> MvPolynomial {
        assert_eq!(self.config, rhs.config, "algebra mismatch");
        assert_eq!(self.nvars, rhs.nvars, "variable sets differ");
        let mut out = self.clone();
        for (exps, coeff) in &rhs.terms {
            out.add_term(exps.clone(), -coeff);
        }
        out
    }
}

impl Neg for &MvPolynomial {
    type Output = MvPolynomial;
    fn neg(self) -> MvPolynomial {
        let mut out = MvPolynomial::zero_with_vars(self.config, self.nvars);
        for (exps, coeff) in &self.terms {
            out.add_term(exps.clone(), -coeff);
        }
        out
    }
}

impl Mul for &MvPolynomial {
    type Output = MvPolynomial;
    fn mul(self, rhs: &MvPolynomial) -> MvPolynomial {
        assert_eq!(self.config, rhs.config, "algebra mismatch");
        assert_eq!(self.nvars, rhs.nvars, "variable sets differ");
        let mut out = MvPolynomial::zero_with_vars(self.config, self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let exps: Vec<u16> = ea.iter().zip(eb.iter()).map(|(a, b)| a + b).collect();
                out.add_term(exps, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for MvPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, coeff) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({coeff})")?;
            for (i, &e) in exps.iter().enumerate() {
                if e == 1 {
                    write!(f, "*x{i}")?;
                } else if e > 1 {
                    write!(f, "*x{i}^{e}")?;
                }
            }
        }
        Ok(())
    }
}
