//! Change of basis, products and the scalar product.
//!
//! Every basis is converted through the Schur basis:
//!
//! * `h → s` by Kostka numbers, `h_λ = Σ_μ K_{μλ} s_μ`; `s → h` by Jacobi–Trudi.
//! * `m → s` by the inverse Kostka matrix; `s → m` by `s_λ = Σ_μ K_{λμ} m_μ`.
//! * `e → s` by writing `e_n = s_{(1^n)}` in the complete basis, multiplying out
//!   and applying `h → s`; `s → e` is the exact inverse of that matrix.
//! * `p → s` by `p_ρ = Σ_λ χ^λ(ρ) s_λ`; `s → p` by `s_λ = Σ_ρ z_ρ⁻¹ χ^λ(ρ) p_ρ`.

use std::collections::BTreeMap;
use std::sync::{Arc, LazyLock};

use num_traits::{One, Zero};

use super::{jacobi_trudi, kostka_table, rational, Basis, Rational, SymFunc};
use crate::cache::TableCache;
use crate::combinat::{Partition, PartitionIndex};
use crate::oracle::character_table;

/// Sparse rows: row `i` is the expansion of the `i`-th basis element.
type Rows = Vec<Vec<(usize, Rational)>>;

struct Transition {
    index: PartitionIndex,
    to_schur: Rows,
    from_schur: Rows,
}

static TRANSITIONS: LazyLock<TableCache<(Basis, usize), Transition>> =
    LazyLock::new(TableCache::new);

fn transition(basis: Basis, d: usize) -> Arc<Transition> {
    TRANSITIONS.get_or_build((basis, d), || build_transition(basis, d))
}

fn sparse(row: impl IntoIterator<Item = (usize, Rational)>) -> Vec<(usize, Rational)> {
    row.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

fn int(n: i64) -> Rational {
    rational(n)
}

fn build_transition(basis: Basis, d: usize) -> Transition {
    let index = PartitionIndex::new(d);
    let n = index.len();
    let identity = || -> Rows { (0..n).map(|i| vec![(i, Rational::one())]).collect() };
    let (to_schur, from_schur) = match basis {
        Basis::Schur => (identity(), identity()),
        Basis::Complete => {
            let k = kostka_table(d);
            let to = (0..n)
                .map(|lam| sparse((0..n).map(|mu| (mu, int(k.matrix()[mu][lam])))))
                .collect();
            let from = index
                .partitions()
                .iter()
                .map(|lam| coefficient_row(&index, &jacobi_trudi(lam)))
                .collect();
            (to, from)
        }
        Basis::Monomial => {
            let k = kostka_table(d);
            let to = (0..n)
                .map(|mu| sparse((0..n).map(|lam| (lam, int(k.inverse()[mu][lam])))))
                .collect();
            let from = (0..n)
                .map(|lam| sparse((0..n).map(|mu| (mu, int(k.matrix()[lam][mu])))))
                .collect();
            (to, from)
        }
        Basis::Elementary => {
            let h_to_s = transition(Basis::Complete, d);
            let to: Rows = index
                .partitions()
                .iter()
                .map(|lam| {
                    let mut in_h = SymFunc::one(Basis::Complete);
                    for &part in lam.parts() {
                        let e_part = jacobi_trudi(&Partition::column(part));
                        in_h = concatenate(&in_h, &e_part);
                    }
                    apply(&h_to_s.to_schur, &index, &in_h)
                })
                .collect();
            let from = invert(&to, n);
            (to, from)
        }
        Basis::PowerSum => {
            let chars = character_table(d);
            let to = (0..n)
                .map(|rho| sparse((0..n).map(|lam| (lam, int(chars.value_at(lam, rho))))))
                .collect();
            let from = (0..n)
                .map(|lam| {
                    sparse((0..n).map(|rho| {
                        let z = Rational::from_integer(chars.centralizer_order(rho).into());
                        (rho, int(chars.value_at(lam, rho)) / z)
                    }))
                })
                .collect();
            (to, from)
        }
    };
    Transition {
        index,
        to_schur,
        from_schur,
    }
}

/// Coefficients of `f` in its own basis, as a sparse row.
fn coefficient_row(index: &PartitionIndex, f: &SymFunc) -> Vec<(usize, Rational)> {
    let mut row: Vec<_> = f
        .terms
        .iter()
        .map(|(p, c)| (index.position(p).expect("same degree"), c.clone()))
        .collect();
    row.sort_by_key(|(i, _)| *i);
    row
}

/// Row vector `f` (in the basis the rows describe) times the matrix.
fn apply(rows: &Rows, index: &PartitionIndex, f: &SymFunc) -> Vec<(usize, Rational)> {
    let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
    for (p, c) in &f.terms {
        let i = index.position(p).expect("term degree matches table");
        for (j, t) in &rows[i] {
            *acc.entry(*j).or_insert_with(Rational::zero) += c * t;
        }
    }
    sparse(acc)
}

/// Gauss–Jordan inverse of a nonsingular sparse matrix.
fn invert(rows: &Rows, n: usize) -> Rows {
    let mut a: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| {
            let mut dense = vec![Rational::zero(); n];
            for (j, c) in r {
                dense[*j] = c.clone();
            }
            dense
        })
        .collect();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("transition matrix is invertible");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let scale = a[col][col].clone();
        for j in 0..n {
            a[col][j] /= &scale;
            inv[col][j] /= &scale;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for j in 0..n {
                let (pa, pi) = (a[col][j].clone(), inv[col][j].clone());
                a[r][j] -= &factor * pa;
                inv[r][j] -= &factor * pi;
            }
        }
    }
    inv.into_iter()
        .map(|r| sparse(r.into_iter().enumerate()))
        .collect()
}

/// Product in a multiplicative basis: indices concatenate.
fn concatenate(f: &SymFunc, g: &SymFunc) -> SymFunc {
    debug_assert!(f.basis == g.basis && f.basis.is_multiplicative());
    let mut out = SymFunc::zero(f.basis, f.degree + g.degree);
    for (a, x) in &f.terms {
        for (b, y) in &g.terms {
            let mut parts = [a.parts(), b.parts()].concat();
            parts.sort_unstable_by(|u, v| v.cmp(u));
            out.add_term(Partition::new(parts).expect("sorted positive parts"), x * y);
        }
    }
    out
}

/// Rewrites `f` in the `target` basis.
pub fn convert(f: &SymFunc, target: Basis) -> SymFunc {
    if f.basis == target {
        return f.clone();
    }
    let d = f.degree;
    let source = transition(f.basis, d);
    let in_schur = apply(&source.to_schur, &source.index, f);
    let dest = transition(target, d);
    let mut out = SymFunc::zero(target, d);
    for (i, c) in in_schur {
        for (j, t) in &dest.from_schur[i] {
            out.add_term(dest.index.get(*j).clone(), &c * t);
        }
    }
    out
}

/// Ring product, returned in the basis of `f`. Computed in the complete basis.
pub fn multiply(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let product = concatenate(&convert(f, Basis::Complete), &convert(g, Basis::Complete));
    convert(&product, f.basis)
}

/// The pairing for which `h` and `m` are dual bases. Functions of different
/// degrees pair to zero.
pub fn scalar_product(f: &SymFunc, g: &SymFunc) -> Rational {
    if f.degree != g.degree {
        return Rational::zero();
    }
    let fh = convert(f, Basis::Complete);
    let gm = convert(g, Basis::Monomial);
    fh.terms
        .iter()
        .filter_map(|(p, c)| gm.terms.get(p).map(|k| c * k))
        .fold(Rational::zero(), |acc, x| acc + x)
}
