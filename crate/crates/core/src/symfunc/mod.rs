//! Homogeneous symmetric functions of a fixed degree with exact rational
//! coefficients, in the monomial, elementary, complete, power-sum and Schur
//! bases.

mod jacobi_trudi;
mod kostka;
mod transition;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::combinat::Partition;
use crate::error::{Error, Result};

pub use jacobi_trudi::{dual_jacobi_trudi, jacobi_trudi};
pub use kostka::{build_kostka_table, kostka_table, KostkaTable};
pub use transition::{convert, multiply, scalar_product};

pub type Rational = num_rational::BigRational;

pub(crate) fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Basis {
    Monomial,
    Elementary,
    Complete,
    PowerSum,
    Schur,
}

impl Basis {
    pub const ALL: [Basis; 5] = [
        Basis::Monomial,
        Basis::Elementary,
        Basis::Complete,
        Basis::PowerSum,
        Basis::Schur,
    ];

    pub fn symbol(self) -> char {
        match self {
            Basis::Monomial => 'm',
            Basis::Elementary => 'e',
            Basis::Complete => 'h',
            Basis::PowerSum => 'p',
            Basis::Schur => 's',
        }
    }

    pub fn from_symbol(c: char) -> Option<Basis> {
        Basis::ALL.into_iter().find(|b| b.symbol() == c)
    }

    /// Bases whose elements multiply by concatenating partitions.
    pub fn is_multiplicative(self) -> bool {
        matches!(self, Basis::Elementary | Basis::Complete | Basis::PowerSum)
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownBasis(pub String);

impl fmt::Display for UnknownBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown basis {:?}; expected one of m, e, h, p, s",
            self.0
        )
    }
}

impl std::error::Error for UnknownBasis {}

impl FromStr for Basis {
    type Err = UnknownBasis;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut chars = s.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => Basis::from_symbol(c).ok_or_else(|| UnknownBasis(s.to_owned())),
            _ => Err(UnknownBasis(s.to_owned())),
        }
    }
}

impl From<Basis> for String {
    fn from(b: Basis) -> String {
        b.symbol().to_string()
    }
}

impl TryFrom<String> for Basis {
    type Error = UnknownBasis;

    fn try_from(s: String) -> Result<Self, UnknownBasis> {
        s.parse()
    }
}

/// A homogeneous symmetric function: a sparse rational combination of basis
/// elements indexed by partitions of `degree`. Zero coefficients are never
/// stored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SymFuncJson", into = "SymFuncJson")]
pub struct SymFunc {
    basis: Basis,
    degree: usize,
    terms: BTreeMap<Partition, Rational>,
}

impl SymFunc {
    pub fn zero(basis: Basis, degree: usize) -> Self {
        SymFunc {
            basis,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// The unit of the ring, living in degree 0.
    pub fn one(basis: Basis) -> Self {
        basis_element(basis, Partition::empty())
    }

    pub fn from_terms(
        basis: Basis,
        degree: usize,
        terms: impl IntoIterator<Item = (Partition, Rational)>,
    ) -> Result<Self> {
        let mut f = SymFunc::zero(basis, degree);
        for (p, c) in terms {
            Error::check_degrees(degree, p.degree())?;
            f.add_term(p, c);
        }
        Ok(f)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, p: &Partition) -> Rational {
        self.terms.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in canonical partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> + '_ {
        self.terms.iter().rev()
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn convert(&self, target: Basis) -> SymFunc {
        convert(self, target)
    }

    pub(crate) fn add_term(&mut self, p: Partition, c: Rational) {
        debug_assert_eq!(p.degree(), self.degree);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(p) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Sum of two functions in the same basis. A zero operand is homogeneous
    /// of every degree and never causes a degree mismatch.
    pub fn checked_add(&self, other: &SymFunc) -> Result<SymFunc> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch {
                left: self.basis.symbol(),
                right: other.basis.symbol(),
            });
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        Error::check_degrees(self.degree, other.degree)?;
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, k: &Rational) -> SymFunc {
        if k.is_zero() {
            return SymFunc::zero(self.basis, self.degree);
        }
        SymFunc {
            basis: self.basis,
            degree: self.degree,
            terms: self.terms.iter().map(|(p, c)| (p.clone(), c * k)).collect(),
        }
    }
}

/// `1 * b_λ`.
pub fn basis_element(basis: Basis, lambda: Partition) -> SymFunc {
    let degree = lambda.degree();
    let mut f = SymFunc::zero(basis, degree);
    f.add_term(lambda, Rational::one());
    f
}

impl Add for &SymFunc {
    type Output = SymFunc;

    /// Panics on basis or degree mismatch; see [`SymFunc::checked_add`].
    fn add(self, rhs: &SymFunc) -> SymFunc {
        self.checked_add(rhs).expect("SymFunc addition")
    }
}

impl Sub for &SymFunc {
    type Output = SymFunc;

    fn sub(self, rhs: &SymFunc) -> SymFunc {
        self + &(-rhs)
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;

    fn neg(self) -> SymFunc {
        SymFunc {
            basis: self.basis,
            degree: self.degree,
            terms: self.terms.iter().map(|(p, c)| (p.clone(), -c)).collect(),
        }
    }
}

impl Mul<&SymFunc> for &Rational {
    type Output = SymFunc;

    fn mul(self, rhs: &SymFunc) -> SymFunc {
        rhs.scale(self)
    }
}

impl fmt::Display for SymFunc {
    /// `s[2,1] + 2*s[1,1,1]`, `-1/2*p[1,1]`, `s[]` for the unit, `0` for zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (p, c)) in self.terms().enumerate() {
            let magnitude = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !magnitude.is_one() {
                write!(f, "{magnitude}*")?;
            }
            write!(f, "{}[", self.basis.symbol())?;
            for (k, part) in p.parts().iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{part}")?;
            }
            f.write_str("]")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct SymFuncJson {
    basis: Basis,
    degree: usize,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    partition: Partition,
    coeff: String,
}

impl From<SymFunc> for SymFuncJson {
    fn from(f: SymFunc) -> Self {
        SymFuncJson {
            basis: f.basis,
            degree: f.degree,
            terms: f
                .terms()
                .map(|(p, c)| TermJson {
                    partition: p.clone(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<SymFuncJson> for SymFunc {
    type Error = String;

    fn try_from(j: SymFuncJson) -> Result<Self, String> {
        let terms = j
            .terms
            .into_iter()
            .map(|t| {
                let c = Rational::from_str(&t.coeff)
                    .map_err(|e| format!("bad coefficient {:?}: {e}", t.coeff))?;
                Ok((t.partition, c))
            })
            .collect::<Result<Vec<_>, String>>()?;
        SymFunc::from_terms(j.basis, j.degree, terms).map_err(|e| e.to_string())
    }
}
