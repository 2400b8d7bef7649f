//! Invariant suites run by `symkron verify`.
//!
//! Each suite checks a family of identities for every degree up to the
//! requested one. A check covers one identity at one degree and records how
//! many cases it ran and the first few failures.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde::Serialize;
use symkron::combinat::{count_standard_tableaux, enumerate_partitions};
use symkron::contingency::decompose_permutation_tensor;
use symkron::kronecker::{kronecker_coefficient, kronecker_h};
use symkron::oracle::{
    act, character_scalar_product, characteristic_map, enumerate_tuples, permutation_character,
    specht_character, specht_generator_rank, tensor_orbit_decompose, OracleBudget, Permutation,
};
use symkron::symfunc::{
    basis_element, convert, dual_jacobi_trudi, jacobi_trudi, kostka_table, scalar_product,
};
use symkron::{multinomial, Basis, Error, Partition, Rational, SymFunc};

/// Failures listed per check before the rest are only counted.
const MAX_LISTED_FAILURES: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Monoidal,
    Orthonormality,
    Kostka,
    JacobiTrudi,
    Characters,
    Specht,
    Kronecker,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 8] = [
        "monoidal",
        "orthonormality",
        "kostka",
        "jacobi-trudi",
        "characters",
        "specht",
        "kronecker",
        "all",
    ];

    const ALL: [Suite; 8] = [
        Suite::Monoidal,
        Suite::Orthonormality,
        Suite::Kostka,
        Suite::JacobiTrudi,
        Suite::Characters,
        Suite::Specht,
        Suite::Kronecker,
        Suite::All,
    ];

    pub fn name(self) -> &'static str {
        Self::NAMES[Self::ALL.iter().position(|&s| s == self).expect("listed")]
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("unknown suite {0:?}; expected one of {names}", names = Suite::NAMES.join(", "))]
pub struct UnknownSuite(pub String);

impl FromStr for Suite {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Self, UnknownSuite> {
        Self::NAMES
            .iter()
            .position(|&n| n == s)
            .map(|k| Self::ALL[k])
            .ok_or_else(|| UnknownSuite(s.to_owned()))
    }
}

/// Limits and seed for a verification run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub budget: OracleBudget,
    /// Largest degree for the symmetric-function and character suites.
    pub max_degree: usize,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            budget: OracleBudget::default(),
            max_degree: 10,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: Suite,
    pub degree: usize,
    pub identity: String,
    pub cases: usize,
    pub failures: Vec<String>,
    pub failed: usize,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: Suite,
    pub max_degree: usize,
    pub seed: u64,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            writeln!(
                f,
                "{status} {:<14} d={:<2} {} ({} cases)",
                c.suite.name(),
                c.degree,
                c.identity,
                c.cases
            )?;
            for why in &c.failures {
                writeln!(f, "       {why}")?;
            }
            if c.failed > c.failures.len() {
                writeln!(f, "       ... and {} more", c.failed - c.failures.len())?;
            }
        }
        let passed = self.checks.iter().filter(|c| c.passed()).count();
        write!(
            f,
            "{}: suite {} up to d={}, {passed}/{} checks passed",
            if self.passed { "PASS" } else { "FAIL" },
            self.suite,
            self.max_degree,
            self.checks.len()
        )
    }
}

struct Recorder {
    suite: Suite,
    checks: Vec<Check>,
}

impl Recorder {
    /// Runs `test` on every case. `Ok(None)` passes, `Ok(Some(why))` fails;
    /// a budget error aborts the run and any other error counts as a failure.
    fn check<T>(
        &mut self,
        degree: usize,
        identity: &str,
        cases: impl IntoIterator<Item = T>,
        mut test: impl FnMut(&T) -> symkron::Result<Option<String>>,
    ) -> symkron::Result<()> {
        let mut check = Check {
            suite: self.suite,
            degree,
            identity: identity.to_owned(),
            cases: 0,
            failures: Vec::new(),
            failed: 0,
        };
        for case in cases {
            check.cases += 1;
            let why = match test(&case) {
                Ok(None) => continue,
                Ok(Some(why)) => why,
                Err(e @ Error::BudgetExceeded { .. }) => return Err(e),
                Err(e) => e.to_string(),
            };
            check.failed += 1;
            if check.failures.len() < MAX_LISTED_FAILURES {
                check.failures.push(why);
            }
        }
        self.checks.push(check);
        Ok(())
    }
}

fn pairs(d: usize) -> Vec<(Partition, Partition)> {
    let parts = enumerate_partitions(d);
    parts
        .iter()
        .flat_map(|a| parts.iter().map(move |b| (a.clone(), b.clone())))
        .collect()
}

fn expect_eq<T: PartialEq + fmt::Display>(
    what: impl FnOnce() -> String,
    got: T,
    want: T,
) -> Option<String> {
    (got != want).then(|| format!("{}: got {got}, expected {want}", what()))
}

fn delta(a: &Partition, b: &Partition) -> Rational {
    if a == b {
        Rational::one()
    } else {
        Rational::zero()
    }
}

fn el(b: Basis, lambda: &Partition) -> SymFunc {
    basis_element(b, lambda.clone())
}

/// Refuses a run whose most expensive case would exceed `config`, before any
/// work is done.
pub fn check_budget(suite: Suite, d: usize, config: &RunConfig) -> symkron::Result<()> {
    let too_deep = |what| Error::BudgetExceeded {
        what,
        required: d.to_string(),
        cap: config.max_degree.to_string(),
    };
    if d > config.max_degree {
        return Err(too_deep("degree"));
    }
    if matches!(suite, Suite::Monoidal | Suite::All) {
        // the largest tensor basis is M^(1^d) ⊗ M^(1^d)
        let regular = multinomial(&vec![1; d]);
        config
            .budget
            .check_pairs(regular.and_then(|n| n.checked_mul(n)))?;
    }
    if matches!(suite, Suite::Monoidal | Suite::Specht | Suite::All) {
        config.budget.check_group(d)?;
    }
    Ok(())
}

/// Runs `suite` for every degree `0..=d`.
pub fn run_verify(suite: Suite, d: usize, config: &RunConfig) -> symkron::Result<Report> {
    check_budget(suite, d, config)?;
    let members: Vec<Suite> = if suite == Suite::All {
        Suite::ALL[..Suite::ALL.len() - 1].to_vec()
    } else {
        vec![suite]
    };
    let mut checks = Vec::new();
    for member in members {
        let mut rec = Recorder {
            suite: member,
            checks: Vec::new(),
        };
        for n in 0..=d {
            match member {
                Suite::Monoidal => monoidal(&mut rec, n, config)?,
                Suite::Orthonormality => orthonormality(&mut rec, n)?,
                Suite::Kostka => kostka(&mut rec, n)?,
                Suite::JacobiTrudi => jacobi_trudi_duality(&mut rec, n)?,
                Suite::Characters => characters(&mut rec, n)?,
                Suite::Specht => specht(&mut rec, n, config)?,
                Suite::Kronecker => kronecker(&mut rec, n)?,
                Suite::All => unreachable!("expanded above"),
            }
        }
        checks.extend(rec.checks);
    }
    Ok(Report {
        suite,
        max_degree: d,
        seed: config.seed,
        passed: checks.iter().all(Check::passed),
        checks,
    })
}

fn monoidal(rec: &mut Recorder, d: usize, config: &RunConfig) -> symkron::Result<()> {
    rec.check(
        d,
        "contingency decomposition = orbit decomposition",
        pairs(d),
        |(a, b)| {
            let (a, b) = (a.as_composition(), b.as_composition());
            let rule = decompose_permutation_tensor(&a, &b)?;
            let orbits = tensor_orbit_decompose(&a, &b, &config.budget)?;
            Ok(expect_eq(
                || format!("M[{a}] ⊗ M[{b}]"),
                orbits.decomposition,
                rule,
            ))
        },
    )?;
    rec.check(d, "ch(φ^λ φ^μ) = h_λ ∗ h_μ", pairs(d), |(a, b)| {
        let phi = permutation_character(&a.as_composition())
            .pointwise_mul(&permutation_character(&b.as_composition()))?;
        let via_characters = convert(&characteristic_map(&phi), Basis::Complete);
        Ok(expect_eq(
            || format!("({a}, {b})"),
            via_characters,
            kronecker_h(a, b)?,
        ))
    })?;

    // The permutation characters are tabulated at one representative per
    // cycle type; spot-check random conjugates against the literal action.
    let mut rng = StdRng::seed_from_u64(config.seed ^ d as u64);
    let spots: Vec<(Partition, Partition, Permutation)> = pairs(d)
        .into_iter()
        .map(|(lambda, rho)| {
            let mut images: Vec<usize> = (0..d).collect();
            images.shuffle(&mut rng);
            let tau = Permutation::from_images(images).expect("shuffled identity");
            let sigma = tau
                .compose(&Permutation::of_cycle_type(&rho))
                .compose(&tau.inverse());
            (lambda, rho, sigma)
        })
        .collect();
    rec.check(
        d,
        "φ^λ(τστ⁻¹) = #fixed tuples, random τ",
        spots,
        |(lambda, rho, sigma)| {
            let fixed = enumerate_tuples(&lambda.as_composition())
                .iter()
                .map(|t| act(sigma, t).map(|moved| moved == *t))
                .collect::<symkron::Result<Vec<bool>>>()?
                .into_iter()
                .filter(|&x| x)
                .count() as i64;
            let tabulated = permutation_character(&lambda.as_composition()).value(rho);
            Ok(expect_eq(
                || format!("φ^{lambda} at a conjugate of type {rho}"),
                fixed,
                tabulated,
            ))
        },
    )
}

fn orthonormality(rec: &mut Recorder, d: usize) -> symkron::Result<()> {
    rec.check(d, "⟨s_λ, s_μ⟩ = δ", pairs(d), |(a, b)| {
        let got = scalar_product(&el(Basis::Schur, a), &el(Basis::Schur, b));
        Ok(expect_eq(|| format!("({a}, {b})"), got, delta(a, b)))
    })?;
    rec.check(d, "⟨h_λ, m_μ⟩ = δ", pairs(d), |(a, b)| {
        let got = scalar_product(&el(Basis::Complete, a), &el(Basis::Monomial, b));
        Ok(expect_eq(|| format!("({a}, {b})"), got, delta(a, b)))
    })?;
    rec.check(d, "⟨χ^λ, χ^μ⟩ = δ", pairs(d), |(a, b)| {
        let got = character_scalar_product(&specht_character(a), &specht_character(b))?;
        Ok(expect_eq(|| format!("({a}, {b})"), got, delta(a, b)))
    })?;
    rec.check(
        d,
        "⟨ch φ^λ, ch φ^μ⟩ = ⟨φ^λ, φ^μ⟩",
        pairs(d),
        |(a, b)| {
            let (phi, psi) = (
                permutation_character(&a.as_composition()),
                permutation_character(&b.as_composition()),
            );
            let got = scalar_product(&characteristic_map(&phi), &characteristic_map(&psi));
            Ok(expect_eq(
                || format!("({a}, {b})"),
                got,
                character_scalar_product(&phi, &psi)?,
            ))
        },
    )
}

fn kostka(rec: &mut Recorder, d: usize) -> symkron::Result<()> {
    let table = kostka_table(d);
    let parts = enumerate_partitions(d);
    rec.check(d, "K_λλ = 1", parts.clone(), |l| {
        Ok(expect_eq(|| format!("K[{l}; {l}]"), table.entry(l, l), 1))
    })?;
    rec.check(d, "K_λμ ≠ 0 iff μ ⊴ λ", pairs(d), |(l, m)| {
        let nonzero = table.entry(l, m) != 0;
        Ok(expect_eq(
            || format!("K[{l}; {m}] ≠ 0"),
            nonzero,
            m.dominated_by(l)?,
        ))
    })?;
    rec.check(d, "h_λ = Σ_μ K_μλ s_μ", parts.clone(), |l| {
        let expected = SymFunc::from_terms(
            Basis::Schur,
            d,
            parts
                .iter()
                .map(|m| (m.clone(), Rational::from_integer(table.entry(m, l).into()))),
        )?;
        Ok(expect_eq(
            || format!("h[{l}]"),
            convert(&el(Basis::Complete, l), Basis::Schur),
            expected,
        ))
    })?;
    rec.check(d, "φ^μ = Σ_λ K_λμ χ^λ", parts.clone(), |m| {
        let mut sum = symkron::oracle::CharacterVector::trivial(d).scale(0);
        for l in &parts {
            sum = sum.checked_add(&specht_character(l).scale(table.entry(l, m)))?;
        }
        Ok(expect_eq(
            || format!("φ^{m}"),
            sum,
            permutation_character(&m.as_composition()),
        ))
    })
}

fn jacobi_trudi_duality(rec: &mut Recorder, d: usize) -> symkron::Result<()> {
    rec.check(
        d,
        "det(h_{λ_i-i+j}) = det(e_{λ'_i-i+j}) = s_λ",
        enumerate_partitions(d),
        |l| {
            let via_h = convert(&jacobi_trudi(l), Basis::Schur);
            let via_e = convert(&dual_jacobi_trudi(l), Basis::Schur);
            Ok(
                expect_eq(|| format!("h-determinant of {l}"), &via_h, &via_e)
                    .or_else(|| expect_eq(|| format!("s[{l}]"), &via_h, &el(Basis::Schur, l))),
            )
        },
    )
}

fn characters(rec: &mut Recorder, d: usize) -> symkron::Result<()> {
    let parts = enumerate_partitions(d);
    rec.check(d, "ch(χ^λ) = s_λ", parts.clone(), |l| {
        let got = convert(&characteristic_map(&specht_character(l)), Basis::Schur);
        Ok(expect_eq(|| format!("ch(χ^{l})"), got, el(Basis::Schur, l)))
    })?;
    rec.check(d, "ch(φ^λ) = h_λ", parts, |l| {
        let got = convert(
            &characteristic_map(&permutation_character(&l.as_composition())),
            Basis::Complete,
        );
        Ok(expect_eq(
            || format!("ch(φ^{l})"),
            got,
            el(Basis::Complete, l),
        ))
    })?;
    rec.check(d, "ch(φ^(d)) = h_d", [Partition::row(d)], |row| {
        let got = convert(
            &characteristic_map(&permutation_character(&row.as_composition())),
            Basis::Complete,
        );
        Ok(expect_eq(
            || "ch of the trivial character".to_owned(),
            got,
            el(Basis::Complete, row),
        ))
    })
}

fn specht(rec: &mut Recorder, d: usize, config: &RunConfig) -> symkron::Result<()> {
    rec.check(
        d,
        "rank ⟨S_d v_λ⟩ = f^λ = χ^λ(1^d)",
        enumerate_partitions(d),
        |l| {
            let rank = specht_generator_rank(l, &config.budget)? as i64;
            let f = count_standard_tableaux(l) as i64;
            let chi = specht_character(l).value(&Partition::column(d));
            Ok(expect_eq(|| format!("rank for {l} vs f"), rank, f)
                .or_else(|| expect_eq(|| format!("f vs χ(1) for {l}"), f, chi)))
        },
    )?;
    rec.check(d, "Σ_λ (f^λ)² = d!", [d], |&d| {
        let sum: u128 = enumerate_partitions(d)
            .iter()
            .map(|l| u128::from(count_standard_tableaux(l)).pow(2))
            .sum();
        let order = multinomial(&vec![1; d]).expect("d! fits for budgeted d");
        Ok(expect_eq(|| "sum of squares".to_owned(), sum, order))
    })
}

fn kronecker(rec: &mut Recorder, d: usize) -> symkron::Result<()> {
    let parts = enumerate_partitions(d);
    let triples: Vec<(Partition, Partition, Partition)> = pairs(d)
        .into_iter()
        .flat_map(|(a, b)| parts.iter().map(move |c| (a.clone(), b.clone(), c.clone())))
        .collect();
    // kronecker_coefficient itself rejects negative or fractional values
    rec.check(
        d,
        "g_λμν ∈ ℕ, symmetric in λ, μ, ν",
        triples,
        |(a, b, c)| {
            let g = kronecker_coefficient(a, b, c)?;
            for (x, y, z) in [(a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
                let h = kronecker_coefficient(x, y, z)?;
                if h != g {
                    return Ok(Some(format!(
                        "g[{a}; {b}; {c}] = {g} but g[{x}; {y}; {z}] = {h}"
                    )));
                }
            }
            Ok(None)
        },
    )?;
    rec.check(d, "g_(d)λλ = 1", parts.clone(), |l| {
        Ok(expect_eq(
            || format!("λ = {l}"),
            kronecker_coefficient(&Partition::row(d), l, l)?,
            1,
        ))
    })?;
    rec.check(d, "g_(1^d)λλ' = 1", parts, |l| {
        let g = kronecker_coefficient(&Partition::column(d), l, &l.conjugate())?;
        Ok(expect_eq(|| format!("λ = {l}"), g, 1))
    })
}
