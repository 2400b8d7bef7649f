//! Acceptance checks, one line per criterion. Run with
//! `cargo test -p symkron-cli --test acceptance`.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use symkron::combinat::{count_standard_tableaux, enumerate_partitions};
use symkron::contingency::decompose_permutation_tensor;
use symkron::kronecker::{kronecker_coefficient, kronecker_h};
use symkron::oracle::{
    character_scalar_product, characteristic_map, permutation_character, specht_character,
    specht_generator_rank, tensor_orbit_decompose, CharacterVector, OracleBudget,
};
use symkron::symfunc::{
    basis_element, convert, dual_jacobi_trudi, jacobi_trudi, kostka_table, scalar_product,
};
use symkron::{multinomial, Basis, Partition, Rational, SymFunc};

type Outcome = Result<(), String>;

fn ensure(ok: bool, why: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

fn pairs(d: usize) -> Vec<(Partition, Partition)> {
    let parts = enumerate_partitions(d);
    parts
        .iter()
        .flat_map(|a| parts.iter().map(move |b| (a.clone(), b.clone())))
        .collect()
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

fn worked_example() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_symkron");
    let run = |args: &[&str]| -> Result<String, String> {
        let out = Command::new(bin)
            .args(args)
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.success(), || {
            format!("{args:?} exited with {}", out.status)
        })?;
        String::from_utf8(out.stdout).map_err(|e| e.to_string())
    };
    let matrices = run(&["contingency", "--lambda", "3,1", "--mu", "2,1,1"])?;
    let expected = "2 1 0\n0 0 1\n\n2 0 1\n0 1 0\n\n1 1 1\n1 0 0\n";
    ensure(matrices == expected, || {
        format!("contingency printed {matrices:?}")
    })?;
    let dec = run(&["decompose-perm", "--lambda", "3,1", "--mu", "2,1,1"])?;
    ensure(dec == "2*M[2,1,1] + M[1,1,1,1]\n", || {
        format!("decompose-perm printed {dec:?}")
    })
}

fn monoidal() -> Outcome {
    let budget = OracleBudget::default();
    for d in 0..=5 {
        for (a, b) in pairs(d) {
            let (a, b) = (a.as_composition(), b.as_composition());
            let rule = decompose_permutation_tensor(&a, &b).map_err(|e| e.to_string())?;
            // per-orbit constancy and size checks run inside the oracle
            let oracle = tensor_orbit_decompose(&a, &b, &budget).map_err(|e| e.to_string())?;
            ensure(oracle.decomposition == rule, || {
                format!("{a} x {b}: {} vs {rule}", oracle.decomposition)
            })?;
            let sizes: usize = oracle.orbits.iter().map(|o| o.size).sum();
            ensure(sizes == oracle.basis_size, || {
                format!("{a} x {b}: orbits do not cover the basis")
            })?;
        }
    }
    Ok(())
}

fn character_monoidal() -> Outcome {
    for d in 0..=6 {
        for (a, b) in pairs(d) {
            let phi = permutation_character(&a.as_composition())
                .pointwise_mul(&permutation_character(&b.as_composition()))
                .map_err(|e| e.to_string())?;
            let via_chars = convert(&characteristic_map(&phi), Basis::Complete);
            let structural = kronecker_h(&a, &b).map_err(|e| e.to_string())?;
            ensure(via_chars == structural, || {
                format!("({a}, {b}): {via_chars} vs {structural}")
            })?;
        }
    }
    Ok(())
}

fn isometry() -> Outcome {
    for d in 0..=6 {
        for (a, b) in pairs(d) {
            let (phi, psi) = (
                permutation_character(&a.as_composition()),
                permutation_character(&b.as_composition()),
            );
            let lhs = scalar_product(&characteristic_map(&phi), &characteristic_map(&psi));
            let rhs = character_scalar_product(&phi, &psi).map_err(|e| e.to_string())?;
            ensure(lhs == rhs, || format!("({a}, {b}): {lhs} vs {rhs}"))?;
        }
    }
    Ok(())
}

fn dictionary() -> Outcome {
    for d in 0..=6 {
        for l in enumerate_partitions(d) {
            let s = convert(&characteristic_map(&specht_character(&l)), Basis::Schur);
            ensure(s == el(Basis::Schur, &l), || format!("ch(χ^{l}) = {s}"))?;
            let h = convert(
                &characteristic_map(&permutation_character(&l.as_composition())),
                Basis::Complete,
            );
            ensure(h == el(Basis::Complete, &l), || format!("ch(φ^{l}) = {h}"))?;
        }
        let trivial = characteristic_map(&CharacterVector::trivial(d));
        let row = Partition::row(d);
        ensure(
            permutation_character(&row.as_composition()) == CharacterVector::trivial(d),
            || format!("φ^({d}) is not trivial"),
        )?;
        ensure(
            convert(&trivial, Basis::Complete) == el(Basis::Complete, &row),
            || format!("ch(1) ≠ h_{d}"),
        )?;
    }
    Ok(())
}

fn kostka() -> Outcome {
    for d in 0..=6 {
        let table = kostka_table(d);
        let parts = enumerate_partitions(d);
        for (l, m) in pairs(d) {
            let k = table.entry(&l, &m);
            if l == m {
                ensure(k == 1, || format!("K[{l}; {l}] = {k}"))?;
            }
            let dominated = m.dominated_by(&l).map_err(|e| e.to_string())?;
            ensure((k != 0) == dominated, || {
                format!("K[{l}; {m}] = {k}, dominance {dominated}")
            })?;
        }
        for l in &parts {
            let expected = SymFunc::from_terms(
                Basis::Schur,
                d,
                parts
                    .iter()
                    .map(|m| (m.clone(), Rational::from_integer(table.entry(m, l).into()))),
            )
            .map_err(|e| e.to_string())?;
            let h = convert(&el(Basis::Complete, l), Basis::Schur);
            ensure(h == expected, || format!("h[{l}] = {h}"))?;

            let mut sum = CharacterVector::trivial(d).scale(0);
            for lam in &parts {
                sum = sum
                    .checked_add(&specht_character(lam).scale(table.entry(lam, l)))
                    .map_err(|e| e.to_string())?;
            }
            ensure(sum == permutation_character(&l.as_composition()), || {
                format!("φ^{l} ≠ Σ K χ")
            })?;
        }
    }
    Ok(())
}

fn jacobi_trudi_duality() -> Outcome {
    for d in 0..=6 {
        for l in enumerate_partitions(d) {
            let via_h = convert(&jacobi_trudi(&l), Basis::Schur);
            let via_e = convert(&dual_jacobi_trudi(&l), Basis::Schur);
            ensure(via_h == via_e, || format!("{l}: {via_h} vs {via_e}"))?;
            ensure(via_h == el(Basis::Schur, &l), || {
                format!("{l}: determinant is {via_h}")
            })?;
        }
    }
    Ok(())
}

fn specht_ranks() -> Outcome {
    let budget = OracleBudget::default();
    for d in 0..=5 {
        let mut squares = 0u128;
        for l in enumerate_partitions(d) {
            let rank = specht_generator_rank(&l, &budget).map_err(|e| e.to_string())? as u64;
            let f = count_standard_tableaux(&l);
            let chi = specht_character(&l).value(&Partition::column(d));
            ensure(rank == f && f as i64 == chi, || {
                format!("{l}: rank {rank}, f {f}, χ(1) {chi}")
            })?;
            squares += u128::from(f).pow(2);
        }
        let order = multinomial(&vec![1; d]).expect("small");
        ensure(squares == order, || format!("d={d}: Σ f² = {squares}"))?;
    }
    Ok(())
}

fn kronecker_coefficients() -> Outcome {
    for d in 0..=5 {
        let parts = enumerate_partitions(d);
        for a in &parts {
            let unit =
                kronecker_coefficient(&Partition::row(d), a, a).map_err(|e| e.to_string())?;
            ensure(unit == 1, || format!("g[(d); {a}; {a}] = {unit}"))?;
            let twist = kronecker_coefficient(&Partition::column(d), a, &a.conjugate())
                .map_err(|e| e.to_string())?;
            ensure(twist == 1, || format!("g[(1^d); {a}; {a}'] = {twist}"))?;
            for b in &parts {
                for c in &parts {
                    // u64 result: nonnegative integrality is enforced by the call
                    let g = kronecker_coefficient(a, b, c).map_err(|e| e.to_string())?;
                    for (x, y, z) in [(a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
                        let h = kronecker_coefficient(x, y, z).map_err(|e| e.to_string())?;
                        ensure(g == h, || {
                            format!("g[{a}; {b}; {c}] = {g}, g[{x}; {y}; {z}] = {h}")
                        })?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn orthonormality() -> Outcome {
    for d in 0..=8 {
        for (a, b) in pairs(d) {
            let ss = scalar_product(&el(Basis::Schur, &a), &el(Basis::Schur, &b));
            ensure(ss == delta(&a, &b), || format!("⟨s{a}, s{b}⟩ = {ss}"))?;
            let hm = scalar_product(&el(Basis::Complete, &a), &el(Basis::Monomial, &b));
            ensure(hm == delta(&a, &b), || format!("⟨h{a}, m{b}⟩ = {hm}"))?;
        }
    }
    Ok(())
}

struct Criterion {
    id: u8,
    title: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion {
            id: 1,
            title: "worked example (3,1) x (2,1,1)",
            limit: Some(secs(1)),
            run: worked_example,
        },
        Criterion {
            id: 2,
            title: "contingency rule = orbit oracle, d <= 5",
            limit: Some(secs(120)),
            run: monoidal,
        },
        Criterion {
            id: 3,
            title: "ch(φ^λ φ^μ) = h_λ * h_μ, d <= 6",
            limit: Some(secs(60)),
            run: character_monoidal,
        },
        Criterion {
            id: 4,
            title: "characteristic map is an isometry, d <= 6",
            limit: None,
            run: isometry,
        },
        Criterion {
            id: 5,
            title: "ch(χ^λ) = s_λ, ch(φ^λ) = h_λ, trivial -> h_d, d <= 6",
            limit: None,
            run: dictionary,
        },
        Criterion {
            id: 6,
            title: "Kostka relations, d <= 6",
            limit: None,
            run: kostka,
        },
        Criterion {
            id: 7,
            title: "Jacobi-Trudi h/e determinants agree, d <= 6",
            limit: None,
            run: jacobi_trudi_duality,
        },
        Criterion {
            id: 8,
            title: "Specht ranks = f^λ = χ^λ(1), Σ f² = d!, d <= 5",
            limit: None,
            run: specht_ranks,
        },
        Criterion {
            id: 9,
            title: "Kronecker coefficient laws, d <= 5",
            limit: None,
            run: kronecker_coefficients,
        },
        Criterion {
            id: 10,
            title: "⟨s,s⟩ and ⟨h,m⟩ orthonormal, d <= 8",
            limit: Some(secs(30)),
            run: orthonormality,
        },
    ];

    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = (c.run)();
        let elapsed = start.elapsed();
        let verdict = match (&result, c.limit) {
            (Err(why), _) => Err(why.clone()),
            (Ok(()), Some(limit)) if elapsed > limit => {
                Err(format!("took {elapsed:.2?}, limit {limit:?}"))
            }
            (Ok(()), _) => Ok(()),
        };
        match verdict {
            Ok(()) => println!("[PASS] AC-{:<2} {} ({elapsed:.2?})", c.id, c.title),
            Err(why) => {
                failed += 1;
                println!("[FAIL] AC-{:<2} {} ({elapsed:.2?}): {why}", c.id, c.title);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
