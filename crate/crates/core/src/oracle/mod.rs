//! Brute-force symmetric-group layer.
//!
//! Everything here works with explicit group elements and explicit bases of
//! permutation modules, and is deliberately independent of the structural
//! formulas in [`crate::contingency`] and [`crate::kronecker`]. It is meant for
//! desk-scale verification; the expensive entry points refuse inputs above an
//! [`OracleBudget`].

mod character;
mod orbit;
mod perm;
mod specht;

pub use character::{
    character_scalar_product, character_table, characteristic_map, cycle_type_data,
    permutation_character, specht_character, CharacterTable, CharacterVector, CycleClass,
    CycleTypeData,
};
pub use orbit::{tensor_orbit_decompose, DissectionPair, Orbit, OrbitDecomposition};
pub use perm::{act, enumerate_tuples, IndexTuple, Permutation};
pub use specht::{specht_generator, specht_generator_rank};

use crate::error::{Error, Result};
use crate::factorial;

/// Size caps for the brute-force routines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    /// Largest `dim M^λ · dim M^μ` the orbit decomposition will enumerate.
    pub max_basis_pairs: u128,
    /// Largest `d` for which a routine may walk the whole group `S_d`.
    pub max_group_degree: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_basis_pairs: 200_000,
            max_group_degree: 8,
        }
    }
}

impl OracleBudget {
    pub fn check_pairs(&self, required: Option<u128>) -> Result<()> {
        match required {
            Some(n) if n <= self.max_basis_pairs => Ok(()),
            _ => Err(Error::BudgetExceeded {
                what: "basis pairs",
                required: required.map_or_else(|| "more than 2^128".to_owned(), |n| n.to_string()),
                cap: self.max_basis_pairs.to_string(),
            }),
        }
    }

    pub fn check_group(&self, d: usize) -> Result<()> {
        if d <= self.max_group_degree {
            Ok(())
        } else {
            Err(Error::BudgetExceeded {
                what: "group order",
                required: format!("{d}!"),
                cap: format!(
                    "{}! = {}",
                    self.max_group_degree,
                    factorial(self.max_group_degree)
                ),
            })
        }
    }
}
