use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use newtonpoly::par::Exec;
use newtonpoly::polyhedra::{colength_growth_oracle_with, mixed_covolume_with, NewtonPolyhedron};
use newtonpoly::text::parse_ypoly;
use newtonpoly::ypoly::shifted_resultant_with;

const MODES: [(&str, Exec); 2] = [
    ("parallel", Exec::Parallel),
    ("sequential", Exec::Sequential),
];

fn shifted_resultant(c: &mut Criterion) {
    let p1 = parse_ypoly("y^3 + 2*x^2*y^2 - x^3*y + x^5").unwrap();
    let p2 = parse_ypoly("y^3 - x*y^2 + 3*x^4*y - x^7").unwrap();
    let mut g = c.benchmark_group("shifted_resultant");
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| shifted_resultant_with(exec, &p1, &p2).unwrap())
        });
    }
    g.finish();
}

fn colength(c: &mut Criterion) {
    let gens = vec![vec![3, 0, 0], vec![0, 2, 0], vec![0, 0, 4], vec![1, 1, 1]];
    let mut g = c.benchmark_group("colength_growth_oracle");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| colength_growth_oracle_with(exec, 3, &gens, 10).unwrap())
        });
    }
    g.finish();
}

fn mixed_covolume(c: &mut Criterion) {
    let n = |pts: &[&[u64]]| {
        let pts: Vec<Vec<u64>> = pts.iter().map(|p| p.to_vec()).collect();
        NewtonPolyhedron::from_support(3, &pts).unwrap()
    };
    let ns = [
        n(&[&[4, 0, 0], &[0, 3, 0], &[0, 0, 5], &[1, 1, 1]]),
        n(&[&[2, 0, 0], &[0, 5, 0], &[0, 0, 2], &[1, 2, 0]]),
        n(&[&[3, 0, 0], &[0, 3, 0], &[0, 0, 3]]),
    ];
    let mut g = c.benchmark_group("mixed_covolume");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| mixed_covolume_with(exec, &ns, &[1, 1, 1]).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, shifted_resultant, colength, mixed_covolume);
criterion_main!(benches);
