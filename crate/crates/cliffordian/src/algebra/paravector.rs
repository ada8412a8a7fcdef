//! Paravectors: elements of `S ⊕ V`, identified with points of `R^{2m+2}`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::Value;

use crate::{Error, Result, Scalar};

use super::float::FParavector;
use super::multivector::rational_to_f64;
use super::{AlgebraConfig, Blade, Multivector};

/// Exact paravector `x = x_0 + Σ_{i>=1} e_i x_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Paravector {
    config: AlgebraConfig,
    coords: Vec<Scalar>,
}

impl Paravector {
    pub fn new(config: AlgebraConfig, coords: Vec<Scalar>) -> Result<Self> {
        if coords.len() != config.coord_count() {
            return Err(Error::InvalidInput(format!(
                "paravector needs {} coordinates, got {}",
                config.coord_count(),
                coords.len()
            )));
        }
        Ok(Self { config, coords })
    }

    pub fn zero(config: AlgebraConfig) -> Self {
        let coords = vec![Scalar::zero(); config.coord_count()];
        Self { config, coords }
    }

    /// Basis point `e_index` (index 0 is the scalar direction).
    pub fn unit(config: AlgebraConfig, index: usize) -> Result<Self> {
        let mut pv = Self::zero(config);
        if index >= pv.coords.len() {
            return Err(Error::GeneratorOutOfRange {
                index: index as u32,
                max: config.generator_count(),
            });
        }
        pv.coords[index] = Scalar::one();
        Ok(pv)
    }

    pub fn config(&self) -> AlgebraConfig {
        self.config
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    /// Principal involution on paravectors: `x* = x_0 - Σ e_i x_i`.
    pub fn conjugate(&self) -> Self {
        let mut coords = self.coords.clone();
        for c in coords.iter_mut().skip(1) {
            *c = -c.clone();
        }
        Self {
            config: self.config,
            coords,
        }
    }

    /// `|x|^2 = Σ x_i^2`, an exact rational.
    pub fn norm_sq(&self) -> Scalar {
        self.coords.iter().map(|c| c * c).sum()
    }

    /// `x^{-1} = x*/|x|^2`; errors on the zero paravector.
    pub fn inverse(&self) -> Result<Self> {
        let n2 = self.norm_sq();
        if n2.is_zero() {
            return Err(Error::DivisionByZero("paravector inverse of zero"));
        }
        let conj = self.conjugate();
        let coords = conj.coords.into_iter().map(|c| c / &n2).collect();
        Ok(Self {
            config: self.config,
            coords,
        })
    }

    /// Embed into the full algebra, using only grade-0 and grade-1 blades.
    pub fn to_multivector(&self) -> Multivector {
        let mut mv = Multivector::zero(self.config);
        for (i, c) in self.coords.iter().enumerate() {
            let blade = Blade::unit(&self.config, i as u32).expect("index in range");
            mv.add_term(blade, c.clone());
        }
        mv
    }

    pub fn to_float(&self) -> FParavector {
        FParavector::new(
            self.config,
            self.coords.iter().map(rational_to_f64).collect(),
        )
        .expect("length matches")
    }

    /// JSON encoding: array of `"num/den"` strings, bit-exact round trip.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.coords
                .iter()
                .map(|c| Value::String(format!("{}/{}", c.numer(), c.denom())))
                .collect(),
        )
    }

    pub fn from_json(config: AlgebraConfig, value: &Value) -> Result<Self> {
        let items = value
            .as_array()
            .ok_or_else(|| Error::InvalidInput("paravector JSON must be an array".into()))?;
        let coords: Vec<Scalar> = items
            .iter()
            .map(|v| match v {
                Value::String(s) => parse_rational(s),
                Value::Number(n) => {
                    let i = n
                        .as_i64()
                        .ok_or_else(|| Error::InvalidInput(format!("non-integer number {n}")))?;
                    Ok(Scalar::from_integer(BigInt::from(i)))
                }
                other => Err(Error::InvalidInput(format!("bad coordinate {other}"))),
            })
            .collect::<Result<_>>()?;
        Self::new(config, coords)
    }
}

fn parse_rational(s: &str) -> Result<Scalar> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|e| Error::InvalidInput(format!("bad numerator {num:?}: {e}")))?;
    let den: BigInt = den
        .parse()
        .map_err(|e| Error::InvalidInput(format!("bad denominator {den:?}: {e}")))?;
    if den.is_zero() {
        return Err(Error::DivisionByZero("zero denominator"));
    }
    Ok(Scalar::new(num, den))
}

impl fmt::Display for Paravector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_multivector())
    }
}
