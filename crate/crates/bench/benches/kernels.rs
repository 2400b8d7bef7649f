use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use symkron::combinat::enumerate_partitions;
use symkron::contingency::{contingency_matrices, hom_dimension};
use symkron::kronecker::{kronecker, kronecker_h};
use symkron::oracle::{tensor_orbit_decompose, OracleBudget};
use symkron::symfunc::{basis_element, build_kostka_table};
use symkron::{Basis, Composition, Partition};

fn c(parts: &[usize]) -> Composition {
    Composition::new(parts.to_vec())
}

fn contingency(cr: &mut Criterion) {
    let mut group = cr.benchmark_group("contingency");
    for (name, lambda, mu) in [
        ("(4,3,2,1)x(4,3,2,1)", c(&[4, 3, 2, 1]), c(&[4, 3, 2, 1])),
        ("(3,3,3)x(2,2,2,2,1)", c(&[3, 3, 3]), c(&[2, 2, 2, 2, 1])),
    ] {
        group.bench_with_input(
            BenchmarkId::new("enumerate", name),
            &(lambda.clone(), mu.clone()),
            |b, (l, m)| {
                b.iter(|| {
                    contingency_matrices(black_box(l), black_box(m))
                        .unwrap()
                        .len()
                })
            },
        );
        group.bench_with_input(
            BenchmarkId::new("count", name),
            &(lambda, mu),
            |b, (l, m)| b.iter(|| hom_dimension(black_box(l), black_box(m)).unwrap()),
        );
    }
    let regular = c(&[1; 12]);
    group.bench_function("count (1^12)x(1^12)", |b| {
        b.iter(|| hom_dimension(black_box(&regular), black_box(&regular)).unwrap())
    });
    group.finish();
}

fn kostka(cr: &mut Criterion) {
    let mut group = cr.benchmark_group("kostka_table");
    group.sample_size(10);
    for d in [8, 12] {
        group.bench_with_input(BenchmarkId::from_parameter(d), &d, |b, &d| {
            b.iter(|| build_kostka_table(d))
        });
    }
    group.finish();
}

fn kron(cr: &mut Criterion) {
    let mut group = cr.benchmark_group("kronecker");
    let (lambda, mu) = (
        Partition::new(vec![3, 2, 1]).unwrap(),
        Partition::new(vec![2, 2, 1, 1]).unwrap(),
    );
    group.bench_function("h(3,2,1) * h(2,2,1,1)", |b| {
        b.iter(|| kronecker_h(black_box(&lambda), black_box(&mu)).unwrap())
    });
    let schur: Vec<_> = enumerate_partitions(6)
        .into_iter()
        .map(|l| basis_element(Basis::Schur, l))
        .collect();
    group.bench_function("s * s, all pairs of degree 6", |b| {
        b.iter(|| {
            for x in &schur {
                for y in &schur {
                    black_box(kronecker(x, y).unwrap());
                }
            }
        })
    });
    group.finish();
}

fn orbit_oracle(cr: &mut Criterion) {
    let (lambda, mu) = (c(&[2, 2, 1]), c(&[3, 1, 1]));
    cr.bench_function("orbit_oracle (2,2,1)x(3,1,1)", |b| {
        b.iter(|| {
            tensor_orbit_decompose(black_box(&lambda), black_box(&mu), &OracleBudget::default())
                .unwrap()
        })
    });
}

criterion_group!(benches, contingency, kostka, kron, orbit_oracle);
criterion_main!(benches);
