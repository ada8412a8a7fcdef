//! Dense double-precision layer for quadrature and pointwise kernel
//! evaluation. Conversion from the exact layer is explicit and one-way.

use crate::{Error, Result};

use super::blade::blade_product;
use super::{AlgebraConfig, Blade};

/// Dense multivector over `f64`, one slot per blade mask.
#[derive(Debug, Clone, PartialEq)]
pub struct FMultivector {
    config: AlgebraConfig,
    coeffs: Vec<f64>,
}

impl FMultivector {
    pub fn zero(config: AlgebraConfig) -> Self {
        Self {
            config,
            coeffs: vec![0.0; config.blade_count()],
        }
    }

    pub fn scalar(config: AlgebraConfig, value: f64) -> Self {
        let mut mv = Self::zero(config);
        mv.coeffs[0] = value;
        mv
    }

    pub fn config(&self) -> AlgebraConfig {
        self.config
    }

    pub fn get(&self, blade: Blade) -> f64 {
        self.coeffs[blade.mask() as usize]
    }

    pub fn set(&mut self, blade: Blade, value: f64) {
        self.coeffs[blade.mask() as usize] = value;
    }

    pub fn scalar_part(&self) -> f64 {
        self.coeffs[0]
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
    }

    pub fn add_scaled(&mut self, other: &Self, factor: f64) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += factor * b;
        }
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self {
            config: self.config,
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a -= b;
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.config, other.config);
        let n = self.coeffs.len();
        let mut out = Self::zero(self.config);
        for a in 0..n {
            let ca = self.coeffs[a];
            if ca == 0.0 {
                continue;
            }
            for b in 0..n {
                let cb = other.coeffs[b];
                if cb == 0.0 {
                    continue;
                }
                let (negative, blade) =
                    blade_product(Blade::from_mask(a as u32), Blade::from_mask(b as u32));
                let term = if negative { -ca * cb } else { ca * cb };
                out.coeffs[blade.mask() as usize] += term;
            }
        }
        out
    }

    /// Largest absolute blade coefficient.
    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()))
    }

    /// Euclidean norm over all blade coefficients.
    pub fn norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c * c).sum::<f64>().sqrt()
    }
}

/// Double-precision paravector for quadrature nodes and kernel arguments.
#[derive(Debug, Clone, PartialEq)]
pub struct FParavector {
    config: AlgebraConfig,
    coords: Vec<f64>,
}

impl FParavector {
    pub fn new(config: AlgebraConfig, coords: Vec<f64>) -> Result<Self> {
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
        let coords = vec![0.0; config.coord_count()];
        Self { config, coords }
    }

    pub fn config(&self) -> AlgebraConfig {
        self.config
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn conjugate(&self) -> Self {
        let mut coords = self.coords.clone();
        for c in coords.iter_mut().skip(1) {
            *c = -*c;
        }
        Self {
            config: self.config,
            coords,
        }
    }

    pub fn norm_sq(&self) -> f64 {
        self.coords.iter().map(|c| c * c).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn dot(&self, other: &Self) -> f64 {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            config: self.config,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self {
            config: self.config,
            coords: self.coords.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        let n2 = self.norm_sq();
        if n2 == 0.0 {
            return Err(Error::DivisionByZero("paravector inverse of zero"));
        }
        Ok(self.conjugate().scale(1.0 / n2))
    }

    pub fn to_multivector(&self) -> FMultivector {
        let mut mv = FMultivector::zero(self.config);
        for (i, &c) in self.coords.iter().enumerate() {
            let blade = Blade::unit(&self.config, i as u32).expect("index in range");
            mv.set(blade, mv.get(blade) + c);
        }
        mv
    }
}
