use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use mumford_rr::goppa::{generator_matrix, mds_check_with, min_distance_bruteforce_with, EvaluationSet};
use mumford_rr::{Execution, Field, GeneratorMatrix, HyperellipticCurve, MumfordDivisor, Polynomial};

fn code(p: u64, f: &[i64], n: usize, k: usize, distinct: bool) -> GeneratorMatrix {
    let field = Field::prime(p).unwrap();
    let curve = HyperellipticCurve::new(Polynomial::from_ints(&field, f), Polynomial::zero(&field)).unwrap();
    let delta = MumfordDivisor::zero(&curve);
    let mut points = curve.enumerate_points().unwrap();
    if distinct {
        points.dedup_by(|a, b| a.x == b.x);
    }
    points.truncate(n);
    assert_eq!(points.len(), n, "curve has too few points");
    let set = EvaluationSet::new(points, delta.u(), delta.v(), curve.h()).unwrap();
    generator_matrix(delta.u(), delta.v(), curve.h(), curve.genus(), k, &set).unwrap()
}

fn modes() -> [(&'static str, Execution); 2] {
    [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)]
}

fn bench_mds(c: &mut Criterion) {
    let mut group = c.benchmark_group("mds_check");
    group.sample_size(10);
    // genus 4 over GF(61), k <= g + 1 so the code is MDS and every minor is visited
    for (n, k) in [(24, 4), (30, 5)] {
        let g = code(61, &[5, 2, 0, 0, 0, 0, 0, 0, 0, 1], n, k, true);
        for (name, exec) in modes() {
            group.bench_with_input(BenchmarkId::new(name, format!("n{n}_k{k}")), &g, |b, g| {
                b.iter(|| black_box(mds_check_with(g, exec).unwrap()))
            });
        }
    }
    group.finish();
}

fn bench_min_distance(c: &mut Criterion) {
    let mut group = c.benchmark_group("min_distance");
    group.sample_size(10);
    // genus 1 over GF(11): 11^4 and 11^5 messages
    for (n, k) in [(10, 4), (12, 5)] {
        let g = code(11, &[3, 1, 0, 1], n, k, false);
        for (name, exec) in modes() {
            group.bench_with_input(BenchmarkId::new(name, format!("n{n}_k{k}")), &g, |b, g| {
                b.iter(|| black_box(min_distance_bruteforce_with(g, exec).unwrap()))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, bench_mds, bench_min_distance);
criterion_main!(benches);
