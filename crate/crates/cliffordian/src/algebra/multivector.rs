//! Sparse multivectors with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::{Error, Result, Scalar};

use super::blade::blade_product;
use super::float::FMultivector;
use super::{AlgebraConfig, Blade};

/// Element of `R_{0,2m+1}` as a sparse map from blades to exact rationals.
/// Zero coefficients are never stored, so structural equality is semantic
/// equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multivector {
    config: AlgebraConfig,
    coeffs: BTreeMap<Blade, Scalar>,
}

impl Multivector {
    pub fn zero(config: AlgebraConfig) -> Self {
        Self {
            config,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn scalar(config: AlgebraConfig, value: Scalar) -> Self {
        let mut mv = Self::zero(config);
        mv.add_term(Blade::SCALAR, value);
        mv
    }

    pub fn from_blade(config: AlgebraConfig, blade: Blade, value: Scalar) -> Self {
        let mut mv = Self::zero(config);
        mv.add_term(blade, value);
        mv
    }

    /// `e_index` with the paravector convention (`e_0` = scalar unit).
    pub fn unit(config: AlgebraConfig, index: u32) -> Result<Self> {
        Ok(Self::from_blade(
            config,
            Blade::unit(&config, index)?,
            Scalar::one(),
        ))
    }

    pub fn config(&self) -> AlgebraConfig {
        self.config
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, blade: Blade) -> Scalar {
        self.coeffs.get(&blade).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &Scalar)> {
        self.coeffs.iter()
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    /// Grades present, in increasing order.
    pub fn grades(&self) -> Vec<u32> {
        let mut gs: Vec<u32> = self.coeffs.keys().map(Blade::grade).collect();
        gs.sort_unstable();
        gs.dedup();
        gs
    }

    pub fn scalar_part(&self) -> Scalar {
        self.coefficient(Blade::SCALAR)
    }

    pub(crate) fn add_term(&mut self, blade: Blade, value: Scalar) {
        if value.is_zero() {
            return;
        }
        match self.coeffs.entry(blade) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(value);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += value;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Geometric (Clifford) product; the operands must share a configuration.
    pub fn geo_product(&self, other: &Self) -> Result<Self> {
        self.config.check_same(&other.config)?;
        let mut out = Self::zero(self.config);
        for (&ba, ca) in &self.coeffs {
            for (&bb, cb) in &other.coeffs {
                let (negative, blade) = blade_product(ba, bb);
                let mut c = ca * cb;
                if negative {
                    c = -c;
                }
                out.add_term(blade, c);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &Scalar) -> Self {
        if factor.is_zero() {
            return Self::zero(self.config);
        }
        Self {
            config: self.config,
            coeffs: self
                .coeffs
                .iter()
                .map(|(b, c)| (*b, c * factor))
                .collect(),
        }
    }

    pub fn to_float(&self) -> FMultivector {
        let mut out = FMultivector::zero(self.config);
        for (blade, c) in &self.coeffs {
            out.set(*blade, rational_to_f64(c));
        }
        out
    }

    /// JSON encoding: a list of `{blade, num, den}` objects with the blade as
    /// its sorted generator indices and the coefficient as integer strings.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.coeffs
                .iter()
                .map(|(blade, c)| {
                    json!({
                        "blade": blade.generators(),
                        "num": c.numer().to_string(),
                        "den": c.denom().to_string(),
                    })
                })
                .collect(),
        )
    }

    pub fn from_json(config: AlgebraConfig, value: &Value) -> Result<Self> {
        let items = value
            .as_array()
            .ok_or_else(|| Error::InvalidInput("multivector JSON must be an array".into()))?;
        let mut mv = Self::zero(config);
        for item in items {
            let gens: Vec<u32> = item
                .get("blade")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::InvalidInput("term missing blade array".into()))?
                .iter()
                .map(|v| {
                    v.as_u64()
                        .map(|u| u as u32)
                        .ok_or_else(|| Error::InvalidInput("blade index must be an integer".into()))
                })
                .collect::<Result<_>>()?;
            let blade = Blade::from_generators(&config, &gens)?;
            let num = parse_bigint(item.get("num"))?;
            let den = parse_bigint(item.get("den"))?;
            if den.is_zero() {
                return Err(Error::DivisionByZero("zero denominator in JSON"));
            }
            mv.add_term(blade, Scalar::new(num, den));
        }
        Ok(mv)
    }
}

fn parse_bigint(value: Option<&Value>) -> Result<BigInt> {
    let s = value
        .and_then(Value::as_str)
        .ok_or_else(|| Error::InvalidInput("num/den must be integer strings".into()))?;
    BigInt::from_str(s).map_err(|e| Error::InvalidInput(format!("bad integer {s:?}: {e}")))
}

pub(crate) fn rational_to_f64(value: &Scalar) -> f64 {
    num_traits::ToPrimitive::to_f64(value).unwrap_or(f64::NAN)
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (blade, c)) in self.coeffs.iter().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if a.is_one() && !blade.is_scalar() {
                write!(f, "{blade}")?;
            } else if blade.is_scalar() {
                write!(f, "{a}")?;
            } else {
                write!(f, "{a}*{blade}")?;
            }
        }
        Ok(())
    }
}

impl Add for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: &Multivector) -> Multivector {
        assert_eq!(self.config, rhs.config, "algebra mismatch");
        let mut out = self.clone();
        for (&b, c) in &rhs.coeffs {
            out.add_term(b, c.clone());
        }
        out
    }
}

impl Sub for &Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        assert_eq!(self.config, rhs.config, "algebra mismatch");
        let mut out = self.clone();
        for (&b, c) in &rhs.coeffs {
            out.add_term(b, -c.clone());
        }
        out
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        Multivector {
            config: self.config,
            coeffs: self.coeffs.iter().map(|(b, c)| (*b, -c.clone())).collect(),
        }
    }
}

impl Mul for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: &Multivector) -> Multivector {
        self.geo_product(rhs).expect("algebra mismatch")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numutil::integer;

    fn cfg() -> AlgebraConfig {
        AlgebraConfig::new(1).unwrap()
    }

    fn e(i: u32) -> Multivector {
        Multivector::unit(cfg(), i).unwrap()
    }

    #[test]
    fn generator_square_is_minus_one() {
        assert_eq!(&e(1) * &e(1), Multivector::scalar(cfg(), integer(-1)));
    }

    #[test]
    fn generators_anticommute() {
        assert_eq!(&e(1) * &e(2), -&(&e(2) * &e(1)));
    }

    #[test]
    fn bilinearity_example() {
        // (1 + e1)(1 - e1) = 1 - e1 + e1 - e1 e1 = 2, by the four-term
        // expansion done by hand.
        let one = Multivector::scalar(cfg(), integer(1));
        let a = &one + &e(1);
        let b = &one - &e(1);
        assert_eq!(&a * &b, Multivector::scalar(cfg(), integer(2)));
    }

    #[test]
    fn mismatched_configs_error() {
        let other = Multivector::unit(AlgebraConfig::new(2).unwrap(), 1).unwrap();
        assert!(matches!(
            e(1).geo_product(&other),
            Err(Error::ConfigMismatch { .. })
        ));
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        let mut mv = Multivector::zero(cfg());
        mv.add_term(Blade::SCALAR, crate::numutil::rational(-7, 3));
        mv.add_term(
            Blade::from_generators(&cfg(), &[1, 3]).unwrap(),
            crate::numutil::rational(22, 7),
        );
        let back = Multivector::from_json(cfg(), &mv.to_json()).unwrap();
        assert_eq!(mv, back);
    }
}
