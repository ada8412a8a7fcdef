//! Basis blades encoded as generator bitmasks.

use std::fmt;

use crate::{Error, Result};

use super::AlgebraConfig;

/// A product of distinct generators, stored as a bitmask: bit `i-1` set means
/// generator `e_i` participates. The empty mask is the scalar unit `e_0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Blade(u32);

impl Blade {
    /// The scalar unit `e_0` (empty generator set).
    pub const SCALAR: Blade = Blade(0);

    /// Blade for a single index using the paravector convention: index 0 is
    /// the scalar unit, indices `1..=2m+1` are the generators.
    pub fn unit(config: &AlgebraConfig, index: u32) -> Result<Self> {
        if index == 0 {
            return Ok(Self::SCALAR);
        }
        Self::generator(config, index)
    }

    /// Blade for the generator `e_index`, `1 <= index <= 2m+1`.
    pub fn generator(config: &AlgebraConfig, index: u32) -> Result<Self> {
        if index == 0 || index > config.generator_count() {
            return Err(Error::GeneratorOutOfRange {
                index,
                max: config.generator_count(),
            });
        }
        Ok(Blade(1 << (index - 1)))
    }

    /// Blade from a strictly increasing list of generator indices.
    pub fn from_generators(config: &AlgebraConfig, indices: &[u32]) -> Result<Self> {
        let mut mask = 0u32;
        for &i in indices {
            let bit = Self::generator(config, i)?.0;
            if mask & bit != 0 || bit < mask {
                return Err(Error::InvalidInput(format!(
                    "generator list {indices:?} is not strictly increasing"
                )));
            }
            mask |= bit;
        }
        Ok(Blade(mask))
    }

    pub(crate) fn from_mask(mask: u32) -> Self {
        Blade(mask)
    }

    pub(crate) fn mask(&self) -> u32 {
        self.0
    }

    /// Generator indices in increasing order; empty for the scalar unit.
    pub fn generators(&self) -> Vec<u32> {
        (0..32)
            .filter(|b| self.0 & (1 << b) != 0)
            .map(|b| b + 1)
            .collect()
    }

    pub fn grade(&self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_scalar(&self) -> bool {
        self.0 == 0
    }
}

/// Product of two basis blades under the negative-definite signature.
///
/// Returns `(negative, blade)` where `blade = a XOR b` and the sign collects
/// one flip per transposition needed to interleave the generator lists plus
/// one flip per contracted generator (`e_i^2 = -1`).
pub(crate) fn blade_product(a: Blade, b: Blade) -> (bool, Blade) {
    let mut swaps = 0u32;
    let mut rest = a.0 >> 1;
    while rest != 0 {
        swaps += (rest & b.0).count_ones();
        rest >>= 1;
    }
    let contractions = (a.0 & b.0).count_ones();
    ((swaps + contractions) & 1 == 1, Blade(a.0 ^ b.0))
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_scalar() {
            return write!(f, "e0");
        }
        for g in self.generators() {
            write!(f, "e{g}")?;
        }
        Ok(())
    }
}
