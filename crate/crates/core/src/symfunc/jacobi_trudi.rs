use num_traits::One;

use super::{Basis, Rational, SymFunc};
use crate::combinat::Partition;

/// `s_λ` in the complete basis: the signed expansion of `det(h_{λ_i - i + j})`
/// with `h_0 = 1` and `h_k = 0` for `k < 0`.
pub fn jacobi_trudi(lambda: &Partition) -> SymFunc {
    expand_determinant(Basis::Complete, lambda)
}

/// `s_λ` in the elementary basis: the signed expansion of
/// `det(e_{λ'_i - i + j})` over the conjugate partition.
pub fn dual_jacobi_trudi(lambda: &Partition) -> SymFunc {
    expand_determinant(Basis::Elementary, &lambda.conjugate())
}

/// Expands `det(b_{λ_i - i + j})` for a multiplicative basis `b`; every
/// surviving permutation contributes `±b_{sorted indices}`.
fn expand_determinant(basis: Basis, lambda: &Partition) -> SymFunc {
    debug_assert!(basis.is_multiplicative());
    let n = lambda.len();
    let mut out = SymFunc::zero(basis, lambda.degree());
    let mut chosen = Vec::with_capacity(n);
    let mut used = vec![false; n];
    expand_rows(lambda.parts(), 0, &mut used, &mut chosen, false, &mut out);
    out
}

fn expand_rows(
    lambda: &[usize],
    row: usize,
    used: &mut [bool],
    chosen: &mut Vec<usize>,
    odd: bool,
    out: &mut SymFunc,
) {
    if row == lambda.len() {
        let mut parts: Vec<usize> = chosen.iter().copied().filter(|&k| k > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let p = Partition::new(parts).expect("sorted positive parts");
        let sign = if odd {
            -Rational::one()
        } else {
            Rational::one()
        };
        out.add_term(p, sign);
        return;
    }
    for col in 0..lambda.len() {
        if used[col] {
            continue;
        }
        // entry index λ_row - row + col, zero entries pruned
        let Some(k) = (lambda[row] + col).checked_sub(row) else {
            continue;
        };
        // Inversions added: free columns left of `col` go to later rows.
        let flips = used[..col].iter().filter(|&&u| !u).count() % 2 == 1;
        used[col] = true;
        chosen.push(k);
        expand_rows(lambda, row + 1, used, chosen, odd ^ flips, out);
        chosen.pop();
        used[col] = false;
    }
}
