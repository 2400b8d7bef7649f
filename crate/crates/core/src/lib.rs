//! Exact computations in the ring of symmetric functions and with permutation
//! modules of the symmetric groups.
//!
//! The crate is organised bottom-up:
//!
//! * [`combinat`]: partitions, compositions, dominance order and tableau counts.
//! * [`contingency`]: nonnegative integer matrices with prescribed margins and the
//!   decomposition of tensor products of permutation modules they index.
//! * [`symfunc`]: homogeneous symmetric functions over the rationals in the
//!   monomial, elementary, complete, power-sum and Schur bases.
//! * [`kronecker`]: the internal (Kronecker) product and Kronecker coefficients.
//! * [`oracle`]: a brute-force symmetric-group layer (explicit permutation
//!   modules, orbits, characters) used to cross-check everything above.

mod cache;
pub mod combinat;
pub mod contingency;
mod error;
pub mod kronecker;
pub mod oracle;
pub mod symfunc;

pub use combinat::{Composition, Partition};
pub use contingency::{ContingencyMatrix, ModuleDecomposition};
pub use error::{Error, Result};
pub use symfunc::{Basis, Rational, SymFunc};

pub(crate) fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// `d! / (c_1! c_2! ...)` where `d = sum(c)`; `None` on overflow.
pub fn multinomial(parts: &[usize]) -> Option<u128> {
    // Built up as a product of binomials so intermediate values stay small.
    let mut total: usize = 0;
    let mut acc: u128 = 1;
    for &p in parts {
        for k in 1..=p {
            total += 1;
            acc = acc.checked_mul(total as u128)? / k as u128;
        }
    }
    Some(acc)
}
