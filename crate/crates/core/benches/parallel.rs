use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use pseudotqft::brauer::{Sign, SignedSequence};
use pseudotqft::exact::rat;
use pseudotqft::fincat::FiniteMonoid;
use pseudotqft::pseudochar::{degree_with, MonoidTrace, PseudoCharacter, RepData, char_of_rep};
use pseudotqft::universal::state_space_field_with;
use pseudotqft::Execution;

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn field_state_space(c: &mut Criterion) {
    let z3 = FiniteMonoid::cyclic(3);
    let cat = z3.to_category();
    let alpha = char_of_rep(&z3, &RepData::regular(&z3).unwrap()).unwrap().to_evaluation(&cat);
    let obj = SignedSequence(vec![(0, Sign::Plus), (0, Sign::Minus), (0, Sign::Plus), (0, Sign::Minus)]);
    let mut group = c.benchmark_group("field_state_space_z3");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| state_space_field_with(&cat, &obj, &alpha, 3, exec).unwrap())
        });
    }
    group.finish();
}

fn pseudochar_degree(c: &mut Criterion) {
    let s3 = FiniteMonoid::symmetric3();
    // fixed points of each permutation
    let a = PseudoCharacter::from_element_values(&s3, &[3, 1, 1, 0, 0, 1].map(rat)).unwrap();
    let alg = MonoidTrace { monoid: &s3, alpha: &a };
    let elems: Vec<usize> = (0..6).collect();
    let mut group = c.benchmark_group("degree_s3_permutation");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| degree_with(&alg, &elems, 4, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, field_state_space, pseudochar_degree);
criterion_main!(benches);
