//! Exact arithmetic in the Clifford algebra `R_{0,2m+1}`.
//!
//! The algebra is generated by `e_1, ..., e_{2m+1}` with `e_i^2 = -1` and
//! anticommuting distinct generators; `e_0 = 1` is the scalar unit. Points of
//! `R^{2m+2}` are identified with paravectors `x = x_0 + Σ e_i x_i`.

mod blade;
mod float;
mod multivector;
mod paravector;

pub use blade::Blade;
pub use float::{FMultivector, FParavector};
pub use multivector::Multivector;
pub use paravector::Paravector;

use crate::{Error, Result};

/// Default bound on `m`; `blade_count = 2^{2m+1} <= 128` keeps exact products
/// cheap. Use [`AlgebraConfig::with_relaxed_bound`] to go beyond it.
pub const DEFAULT_MAX_M: u32 = 3;

/// Parameters of the algebra `R_{0,2m+1}`. Every multivector, paravector and
/// polynomial carries one of these; mixing configurations is an error.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AlgebraConfig {
    m: u32,
}

impl AlgebraConfig {
    pub fn new(m: u32) -> Result<Self> {
        if m > DEFAULT_MAX_M {
            return Err(Error::AlgebraTooLarge {
                m,
                max: DEFAULT_MAX_M,
            });
        }
        Ok(Self { m })
    }

    /// Construct without the practical bound on `m`.
    pub fn with_relaxed_bound(m: u32) -> Self {
        Self { m }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Number of anticommuting generators, `2m + 1`.
    pub fn generator_count(&self) -> u32 {
        2 * self.m + 1
    }

    /// Number of basis blades, `2^{2m+1}`.
    pub fn blade_count(&self) -> usize {
        1usize << self.generator_count()
    }

    /// Number of paravector coordinates, `2m + 2` (`x_0` through `x_{2m+1}`).
    pub fn coord_count(&self) -> usize {
        self.generator_count() as usize + 1
    }

    pub(crate) fn check_same(&self, other: &Self) -> Result<()> {
        if self != other {
            return Err(Error::ConfigMismatch {
                left: self.m,
                right: other.m,
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_counts() {
        let cfg = AlgebraConfig::new(1).unwrap();
        assert_eq!(cfg.generator_count(), 3);
        assert_eq!(cfg.blade_count(), 8);
        assert_eq!(cfg.coord_count(), 4);
    }

    #[test]
    fn config_bound() {
        assert!(AlgebraConfig::new(4).is_err());
        assert_eq!(AlgebraConfig::with_relaxed_bound(4).blade_count(), 512);
    }
}
