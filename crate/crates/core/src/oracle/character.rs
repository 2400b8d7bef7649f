use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, LazyLock};

use num_traits::Zero;

use crate::cache::TableCache;
use crate::combinat::{enumerate_partitions, Composition, Partition, PartitionIndex};
use crate::error::{Error, Result};
use crate::factorial;
use crate::symfunc::{kostka_table, Basis, Rational, SymFunc};

/// Order of the centraliser of a permutation of cycle type `rho`:
/// `z_ρ = Π_k k^{m_k} m_k!`.
fn centralizer_order(rho: &Partition) -> u128 {
    rho.multiplicities()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, &m)| (k as u128).pow(m as u32) * factorial(m))
        .product()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleClass {
    pub cycle_type: Partition,
    pub centralizer_order: u128,
    pub class_size: u128,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleTypeData {
    pub degree: usize,
    /// One entry per cycle type, canonical order.
    pub classes: Vec<CycleClass>,
}

pub fn cycle_type_data(d: usize) -> CycleTypeData {
    let order = factorial(d);
    CycleTypeData {
        degree: d,
        classes: enumerate_partitions(d)
            .into_iter()
            .map(|rho| {
                let z = centralizer_order(&rho);
                CycleClass {
                    cycle_type: rho,
                    centralizer_order: z,
                    class_size: order / z,
                }
            })
            .collect(),
    }
}

/// An integer-valued class function on `S_d`, one value per cycle type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterVector {
    degree: usize,
    values: BTreeMap<Partition, i64>,
}

impl CharacterVector {
    /// Takes values for every cycle type of `degree`; missing ones are an error.
    pub fn new(degree: usize, values: impl IntoIterator<Item = (Partition, i64)>) -> Result<Self> {
        let values: BTreeMap<Partition, i64> = values.into_iter().collect();
        for rho in values.keys() {
            Error::check_degrees(degree, rho.degree())?;
        }
        let expected = enumerate_partitions(degree).len();
        if values.len() != expected {
            return Err(Error::Internal(format!(
                "class function of degree {degree} needs {expected} values, got {}",
                values.len()
            )));
        }
        Ok(CharacterVector { degree, values })
    }

    pub fn trivial(degree: usize) -> Self {
        CharacterVector {
            degree,
            values: enumerate_partitions(degree)
                .into_iter()
                .map(|rho| (rho, 1))
                .collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn value(&self, rho: &Partition) -> i64 {
        self.values.get(rho).copied().unwrap_or(0)
    }

    /// `(cycle type, value)` pairs in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, i64)> + '_ {
        self.values.iter().rev().map(|(p, &v)| (p, v))
    }

    /// Character of the tensor product with the diagonal action.
    pub fn pointwise_mul(&self, other: &CharacterVector) -> Result<CharacterVector> {
        Error::check_degrees(self.degree, other.degree)?;
        Ok(CharacterVector {
            degree: self.degree,
            values: self
                .values
                .iter()
                .map(|(rho, v)| (rho.clone(), v * other.value(rho)))
                .collect(),
        })
    }

    pub fn checked_add(&self, other: &CharacterVector) -> Result<CharacterVector> {
        Error::check_degrees(self.degree, other.degree)?;
        Ok(CharacterVector {
            degree: self.degree,
            values: self
                .values
                .iter()
                .map(|(rho, v)| (rho.clone(), v + other.value(rho)))
                .collect(),
        })
    }

    pub fn scale(&self, k: i64) -> CharacterVector {
        CharacterVector {
            degree: self.degree,
            values: self
                .values
                .iter()
                .map(|(rho, v)| (rho.clone(), v * k))
                .collect(),
        }
    }
}

impl fmt::Display for CharacterVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (rho, v)) in self.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{rho}: {v}")?;
        }
        Ok(())
    }
}

/// Number of tuples of `lambda`'s labels constant on every cycle of
/// `rho`, i.e. the number of basis tuples of `M^λ` fixed by a permutation of
/// cycle type `rho`. Each fixed tuple is a labelling of the cycles.
fn fixed_tuple_count(lambda: &[usize], rho: &Partition) -> u64 {
    fn go(
        cycles: &[usize],
        room: &mut Vec<usize>,
        memo: &mut HashMap<(usize, Vec<usize>), u64>,
    ) -> u64 {
        let Some((&len, rest)) = cycles.split_first() else {
            return u64::from(room.iter().all(|&r| r == 0));
        };
        let key = (cycles.len(), room.clone());
        if let Some(&hit) = memo.get(&key) {
            return hit;
        }
        let mut total = 0;
        for label in 0..room.len() {
            if room[label] >= len {
                room[label] -= len;
                total += go(rest, room, memo);
                room[label] += len;
            }
        }
        memo.insert(key, total);
        total
    }
    go(rho.parts(), &mut lambda.to_vec(), &mut HashMap::new())
}

/// Character of the permutation module `M^λ`: at each cycle type, the
/// number of basis tuples fixed by the canonical permutation of that type.
pub fn permutation_character(lambda: &Composition) -> CharacterVector {
    let d = lambda.degree();
    CharacterVector {
        degree: d,
        values: enumerate_partitions(d)
            .into_iter()
            .map(|rho| {
                let fixed = fixed_tuple_count(lambda.parts(), &rho);
                (
                    rho,
                    i64::try_from(fixed).expect("character value fits in i64"),
                )
            })
            .collect(),
    }
}

/// `⟨φ, ψ⟩ = (1/d!) Σ_π φ(π) ψ(π⁻¹)`, summed class by class.
pub fn character_scalar_product(phi: &CharacterVector, psi: &CharacterVector) -> Result<Rational> {
    Error::check_degrees(phi.degree, psi.degree)?;
    let data = cycle_type_data(phi.degree);
    let sum = data.classes.iter().fold(Rational::zero(), |acc, class| {
        let term = num_bigint::BigInt::from(class.class_size)
            * num_bigint::BigInt::from(phi.value(&class.cycle_type))
            * num_bigint::BigInt::from(psi.value(&class.cycle_type));
        acc + Rational::from_integer(term)
    });
    Ok(sum / Rational::from_integer(factorial(phi.degree).into()))
}

/// Irreducible characters of `S_d`, rows indexed by partitions and columns by
/// cycle types, both in canonical order.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    index: PartitionIndex,
    values: Vec<Vec<i64>>,
    centralizers: Vec<u128>,
}

impl CharacterTable {
    pub fn degree(&self) -> usize {
        self.index.degree()
    }

    pub fn partitions(&self) -> &[Partition] {
        self.index.partitions()
    }

    /// `χ^{λ_i}(ρ_j)` by canonical positions.
    pub fn value_at(&self, lambda: usize, rho: usize) -> i64 {
        self.values[lambda][rho]
    }

    pub fn value(&self, lambda: &Partition, rho: &Partition) -> Option<i64> {
        Some(self.values[self.index.position(lambda)?][self.index.position(rho)?])
    }

    pub fn centralizer_order(&self, rho: usize) -> u128 {
        self.centralizers[rho]
    }

    pub fn character(&self, lambda: &Partition) -> Option<CharacterVector> {
        let row = &self.values[self.index.position(lambda)?];
        Some(CharacterVector {
            degree: self.degree(),
            values: self
                .partitions()
                .iter()
                .cloned()
                .zip(row.iter().copied())
                .collect(),
        })
    }
}

/// Inverts `φ^μ = Σ_λ K_{λμ} χ^λ` using the Kostka table.
fn build_character_table(d: usize) -> CharacterTable {
    let index = PartitionIndex::new(d);
    let kostka = kostka_table(d);
    let n = index.len();
    let perm: Vec<Vec<i64>> = index
        .partitions()
        .iter()
        .map(|mu| {
            let phi = permutation_character(&mu.as_composition());
            index
                .partitions()
                .iter()
                .map(|rho| phi.value(rho))
                .collect()
        })
        .collect();
    // χ^λ = Σ_μ (K⁻¹)_{μλ} φ^μ
    let values = (0..n)
        .map(|lam| {
            (0..n)
                .map(|rho| {
                    (0..n)
                        .map(|mu| kostka.inverse()[mu][lam] * perm[mu][rho])
                        .sum()
                })
                .collect()
        })
        .collect();
    let centralizers = index.partitions().iter().map(centralizer_order).collect();
    CharacterTable {
        index,
        values,
        centralizers,
    }
}

static CHARACTERS: LazyLock<TableCache<usize, CharacterTable>> = LazyLock::new(TableCache::new);

pub fn character_table(d: usize) -> Arc<CharacterTable> {
    CHARACTERS.get_or_build(d, || build_character_table(d))
}

/// The irreducible character `χ^λ`.
pub fn specht_character(lambda: &Partition) -> CharacterVector {
    character_table(lambda.degree())
        .character(lambda)
        .expect("partition of the table's degree")
}

/// `ch(φ) = Σ_ρ z_ρ⁻¹ φ(ρ) p_ρ`, in the power-sum basis.
pub fn characteristic_map(phi: &CharacterVector) -> SymFunc {
    SymFunc::from_terms(
        Basis::PowerSum,
        phi.degree,
        phi.values.iter().map(|(rho, &v)| {
            let z = Rational::from_integer(centralizer_order(rho).into());
            (rho.clone(), Rational::from_integer(v.into()) / z)
        }),
    )
    .expect("cycle types have the character's degree")
}
