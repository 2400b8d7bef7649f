//! The internal (Kronecker) product of symmetric functions of equal degree.
//!
//! On the complete basis it is computed structurally from the decomposition
//! of tensor products of permutation modules:
//! `h_λ ∗ h_μ = Σ_{A ∈ A^λ_μ} h_{sort(A)}`.
//! Characters are never consulted here; [`crate::oracle`] provides them as an
//! independent check.

use num_traits::Signed;

use crate::combinat::{Composition, Partition};
use crate::contingency::decompose_permutation_tensor;
use crate::error::{Error, Result};
use crate::symfunc::{basis_element, convert, rational, scalar_product, Basis, SymFunc};

/// `h_λ ∗ h_μ`, in the complete basis.
pub fn kronecker_h(lambda: &Partition, mu: &Partition) -> Result<SymFunc> {
    let d = lambda.degree();
    let classes = decompose_permutation_tensor(&Composition::from(lambda), &Composition::from(mu))?;
    SymFunc::from_terms(
        Basis::Complete,
        d,
        classes.iter().map(|(p, m)| (p.clone(), rational(m as i64))),
    )
}

/// `f ∗ g`, returned in the basis of `f`.
pub fn kronecker(f: &SymFunc, g: &SymFunc) -> Result<SymFunc> {
    Error::check_degrees(f.degree(), g.degree())?;
    let (fh, gh) = (convert(f, Basis::Complete), convert(g, Basis::Complete));
    let mut out = SymFunc::zero(Basis::Complete, f.degree());
    for (a, x) in fh.terms() {
        for (b, y) in gh.terms() {
            let product = kronecker_h(a, b)?.scale(&(x * y));
            out = out.checked_add(&product)?;
        }
    }
    Ok(convert(&out, f.basis()))
}

/// The Kronecker coefficient `g^ν_{λμ} = ⟨s_λ ∗ s_μ, s_ν⟩`.
///
/// A negative or fractional value means the structural product is broken and
/// is reported as [`Error::Internal`].
pub fn kronecker_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    Error::check_degrees(lambda.degree(), mu.degree())?;
    Error::check_degrees(lambda.degree(), nu.degree())?;
    let product = kronecker(
        &basis_element(Basis::Schur, lambda.clone()),
        &basis_element(Basis::Schur, mu.clone()),
    )?;
    let g = scalar_product(&product, &basis_element(Basis::Schur, nu.clone()));
    if !g.is_integer() || g.is_negative() {
        return Err(Error::Internal(format!(
            "Kronecker coefficient g[{nu}; {lambda}, {mu}] evaluated to {g}"
        )));
    }
    g.to_integer()
        .try_into()
        .map_err(|_| Error::Internal(format!("Kronecker coefficient {g} does not fit in u64")))
}
