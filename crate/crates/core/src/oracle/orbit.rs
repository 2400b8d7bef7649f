use std::collections::VecDeque;

use super::perm::{IndexTuple, TupleBasis};
use super::OracleBudget;
use crate::combinat::Composition;
use crate::contingency::{ContingencyMatrix, ModuleDecomposition};
use crate::error::{Error, Result};
use crate::multinomial;

/// A basis element `d_i ⊗ d_j` of `M^λ ⊗ M^μ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DissectionPair {
    pub left: IndexTuple,
    pub right: IndexTuple,
}

impl DissectionPair {
    /// `A[s][t] = |{p : left_p = s+1, right_p = t+1}|`, the block
    /// intersection sizes of the two dissections.
    pub fn intersection_matrix(&self, m: usize, n: usize) -> ContingencyMatrix {
        let mut rows = vec![vec![0usize; n]; m];
        for (&a, &b) in self.left.entries().iter().zip(self.right.entries()) {
            rows[a - 1][b - 1] += 1;
        }
        ContingencyMatrix::from_rows(rows, n).expect("rows have n entries")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    /// The intersection matrix shared by every member.
    pub intersection: ContingencyMatrix,
    pub size: usize,
    /// First member in the enumeration order.
    pub representative: DissectionPair,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitDecomposition {
    pub decomposition: ModuleDecomposition,
    pub orbits: Vec<Orbit>,
    pub basis_size: usize,
}

/// Splits the basis `{d_i ⊗ d_j}` of `M^λ ⊗ M^μ` into `S_d`-orbits by
/// breadth-first closure under adjacent transpositions, and reads off the
/// isomorphism class `M^A` of each orbit.
///
/// For every orbit this checks that all members share one intersection matrix
/// `A` and that the orbit has `multinomial(d; A)` elements; a failure is
/// reported as [`Error::Verification`].
pub fn tensor_orbit_decompose(
    lambda: &Composition,
    mu: &Composition,
    budget: &OracleBudget,
) -> Result<OrbitDecomposition> {
    Error::check_degrees(lambda.degree(), mu.degree())?;
    let pairs = multinomial(lambda.parts()).and_then(|a| a.checked_mul(multinomial(mu.parts())?));
    budget.check_pairs(pairs)?;

    let left = TupleBasis::new(lambda);
    let right = TupleBasis::new(mu);
    let (m, n) = (lambda.len(), mu.len());
    let width = right.tuples.len();
    let total = left.tuples.len() * width;
    let generators = lambda.degree().saturating_sub(1);
    let pair_at = |id: usize| DissectionPair {
        left: left.tuples[id / width].clone(),
        right: right.tuples[id % width].clone(),
    };

    let mut visited = vec![false; total];
    let mut queue = VecDeque::new();
    let mut orbits = Vec::new();
    let mut decomposition = ModuleDecomposition::new();
    for start in 0..total {
        if visited[start] {
            continue;
        }
        let representative = pair_at(start);
        let intersection = representative.intersection_matrix(m, n);
        visited[start] = true;
        queue.push_back(start);
        let mut size = 0;
        while let Some(id) = queue.pop_front() {
            size += 1;
            let member = pair_at(id);
            if member.intersection_matrix(m, n) != intersection {
                return Err(Error::Verification(format!(
                    "orbit of {} ⊗ {} contains {} ⊗ {} with a different intersection matrix",
                    representative.left, representative.right, member.left, member.right
                )));
            }
            let (li, ri) = (id / width, id % width);
            for s in 0..generators {
                let next = left.swaps[li][s] * width + right.swaps[ri][s];
                if !visited[next] {
                    visited[next] = true;
                    queue.push_back(next);
                }
            }
        }
        let expected = multinomial(intersection.as_composition().parts());
        if expected != Some(size as u128) {
            return Err(Error::Verification(format!(
                "orbit with intersection matrix {:?} has {size} elements, expected {expected:?}",
                intersection.rows()
            )));
        }
        decomposition.insert(intersection.module_class(), 1);
        orbits.push(Orbit {
            intersection,
            size,
            representative,
        });
    }

    Ok(OrbitDecomposition {
        decomposition,
        orbits,
        basis_size: total,
    })
}
