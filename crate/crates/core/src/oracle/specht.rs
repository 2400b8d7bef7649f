use std::collections::VecDeque;

use num_traits::Zero;

use super::perm::{act, enumerate_tuples, IndexTuple, Permutation, TupleBasis};
use super::OracleBudget;
use crate::combinat::Partition;
use crate::error::Result;
use crate::symfunc::Rational;

/// The tuple that numbers the boxes of each column of `lambda` from the top:
/// for `(4,3,3,1)` it is `(1,2,3,4, 1,2,3, 1,2,3, 1)`.
fn column_reading_tuple(lambda: &Partition) -> IndexTuple {
    IndexTuple::new(
        lambda
            .conjugate()
            .parts()
            .iter()
            .flat_map(|&height| 1..=height)
            .collect(),
    )
}

/// Every permutation of the consecutive blocks of sizes `blocks`, with its
/// sign.
fn young_subgroup(blocks: &[usize]) -> Vec<(Permutation, i64)> {
    let d: usize = blocks.iter().sum();
    let mut out = vec![(Permutation::identity(d), 1)];
    let mut offset = 0;
    for &size in blocks {
        let mut next = Vec::with_capacity(out.len());
        for local in all_permutations(size) {
            let mut images: Vec<usize> = (0..d).collect();
            for (k, &x) in local.iter().enumerate() {
                images[offset + k] = offset + x;
            }
            let block = Permutation::from_images(images).expect("block permutation");
            let sign = block.sign();
            for (g, s) in &out {
                next.push((g.compose(&block), s * sign));
            }
        }
        out = next;
        offset += size;
    }
    out
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut current: Vec<usize> = (0..n).collect();
    let mut out = vec![current.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let j = (i..n)
            .rev()
            .find(|&j| current[j] > current[i - 1])
            .expect("exists");
        current.swap(i - 1, j);
        current[i..].reverse();
        out.push(current.clone());
    }
}

/// `v_λ = Σ_{σ ∈ S_{λ'}} sgn(σ) σ·e_{i'_λ}` as a coefficient vector over the
/// tuples of `λ` (in [`enumerate_tuples`] order).
pub fn specht_generator(lambda: &Partition) -> Vec<i64> {
    let tuples = enumerate_tuples(&lambda.as_composition());
    let seed = column_reading_tuple(lambda);
    let mut v = vec![0i64; tuples.len()];
    for (sigma, sign) in young_subgroup(lambda.conjugate().parts()) {
        let image = act(&sigma, &seed).expect("same degree");
        let k = tuples
            .binary_search(&image)
            .expect("image belongs to lambda");
        v[k] += sign;
    }
    v
}

/// Reduced row echelon basis over the rationals, grown one vector at a time.
struct Echelon {
    rows: Vec<(usize, Vec<Rational>)>,
}

impl Echelon {
    fn reduce(&self, mut v: Vec<Rational>) -> Vec<Rational> {
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let factor = v[*pivot].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &factor * r;
                }
            }
        }
        v
    }

    /// Adds `v` if it is independent of the current rows.
    fn insert(&mut self, v: Vec<Rational>) -> bool {
        let v = self.reduce(v);
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let scale = v[pivot].clone();
        let row = v.into_iter().map(|x| x / &scale).collect();
        self.rows.push((pivot, row));
        true
    }
}

/// Dimension of the submodule of `M^λ` generated by `v_λ`, computed as the
/// rank of the span of its `S_d`-orbit over the rationals.
pub fn specht_generator_rank(lambda: &Partition, budget: &OracleBudget) -> Result<usize> {
    budget.check_group(lambda.degree())?;
    let basis = TupleBasis::new(&lambda.as_composition());
    let generators = lambda.degree().saturating_sub(1);
    let start: Vec<Rational> = specht_generator(lambda)
        .into_iter()
        .map(|x| Rational::from_integer(x.into()))
        .collect();

    // Close the span under adjacent transpositions, which generate S_d.
    let mut echelon = Echelon { rows: Vec::new() };
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        if !echelon.insert(v.clone()) {
            continue;
        }
        for s in 0..generators {
            let mut moved = vec![Rational::zero(); v.len()];
            for (k, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    moved[basis.swaps[k][s]] = x.clone();
                }
            }
            queue.push_back(moved);
        }
    }
    Ok(echelon.rows.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{count_standard_tableaux, enumerate_partitions};
    use crate::error::Error;
    use crate::oracle::specht_character;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn column_tuple_example() {
        assert_eq!(
            column_reading_tuple(&p(&[4, 3, 3, 1])).entries(),
            &[1, 2, 3, 4, 1, 2, 3, 1, 2, 3, 1]
        );
        assert!(column_reading_tuple(&p(&[3, 1])).belongs_to(&p(&[3, 1]).as_composition()));
    }

    #[test]
    fn young_subgroup_orders() {
        assert_eq!(young_subgroup(&[3, 2]).len(), 12);
        assert_eq!(young_subgroup(&[]).len(), 1);
        let signs: i64 = young_subgroup(&[3]).iter().map(|(_, s)| s).sum();
        assert_eq!(signs, 0);
    }

    #[test]
    fn generator_of_sign_module() {
        // lambda = (1,1): v = e_(1,2) - e_(2,1)
        assert_eq!(specht_generator(&p(&[1, 1])), vec![1, -1]);
        assert_eq!(specht_generator(&p(&[3])), vec![1]);
    }

    #[test]
    fn rank_examples() {
        let b = OracleBudget::default();
        assert_eq!(specht_generator_rank(&p(&[5]), &b).unwrap(), 1);
        assert_eq!(specht_generator_rank(&p(&[1, 1]), &b).unwrap(), 1);
        assert_eq!(specht_generator_rank(&p(&[2, 1]), &b).unwrap(), 2);
        assert_eq!(specht_generator_rank(&Partition::empty(), &b).unwrap(), 1);
    }

    #[test]
    fn ranks_match_dimensions() {
        let b = OracleBudget::default();
        for d in 0..=5 {
            for lambda in enumerate_partitions(d) {
                let rank = specht_generator_rank(&lambda, &b).unwrap();
                assert_eq!(rank as u64, count_standard_tableaux(&lambda));
                assert_eq!(
                    rank as i64,
                    specht_character(&lambda).value(&Partition::column(d))
                );
            }
        }
    }

    #[test]
    fn group_budget() {
        let b = OracleBudget {
            max_basis_pairs: 1,
            max_group_degree: 3,
        };
        assert!(matches!(
            specht_generator_rank(&p(&[2, 2]), &b),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
