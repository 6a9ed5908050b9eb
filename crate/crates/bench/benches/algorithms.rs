use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use spo_bench::{admissible_up_to, short_partitions};
use spo_core::character::{wcf_so_odd, wcf_spo};
use spo_core::littlewood::{tor_m, verify_balance};
use spo_core::oracle::lr_by_monomials;
use spo_core::schur::lr_product;
use spo_core::superweyl::verify_commutator_suite;
use spo_core::zmodule::z_hilbert;
use spo_core::{modrule_border, modrule_weyl, Partition};

fn modification_rule(c: &mut Criterion) {
    let shapes = Partition::all_up_to(12);
    c.bench_function("modrule_weyl |μ|≤12 m=2", |b| {
        b.iter(|| shapes.iter().filter_map(|p| modrule_weyl(black_box(p), 2).index()).count())
    });
    c.bench_function("modrule_border |μ|≤12 m=2", |b| {
        b.iter(|| shapes.iter().filter_map(|p| modrule_border(black_box(p), 2).index()).count())
    });
}

fn characters(c: &mut Criterion) {
    let shapes = short_partitions(5, 2);
    c.bench_function("wcf_so_odd ℓ≤2 |λ|≤5", |b| {
        b.iter(|| shapes.iter().map(|p| wcf_so_odd(p, 2).unwrap().len()).sum::<usize>())
    });
    c.bench_function("wcf_spo ℓ≤2 |λ|≤5", |b| {
        b.iter(|| shapes.iter().map(|p| wcf_spo(p, 2).unwrap().len()).sum::<usize>())
    });
}

fn littlewood_richardson(c: &mut Criterion) {
    let shapes = Partition::all_up_to(4);
    c.bench_function("lr_product |μ|,|ν|≤4", |b| {
        b.iter(|| shapes.iter().flat_map(|x| shapes.iter().map(move |y| lr_product(x, y, None).len())).sum::<usize>())
    });
    c.bench_function("lr_by_monomials |μ|,|ν|≤4", |b| {
        b.iter(|| shapes.iter().flat_map(|x| shapes.iter().map(move |y| lr_by_monomials(x, y).len())).sum::<usize>())
    });
}

fn resolutions(c: &mut Criterion) {
    let shapes = admissible_up_to(4, 1);
    c.bench_function("tor_m m=1 |λ|≤4 i≤3", |b| {
        b.iter(|| shapes.iter().map(|p| tor_m(p, 1, 3).unwrap().rows.len()).sum::<usize>())
    });
    let mut group = c.benchmark_group("identities");
    group.sample_size(10);
    group.bench_function("balance m=1 n=2 D=6", |b| b.iter(|| verify_balance(1, 2, 6).passed()));
    group.bench_function("z_hilbert m=2 n=2 D=8", |b| b.iter(|| z_hilbert(2, 2, 8).unwrap().len()));
    group.bench_function("commutators m=1 n=2 D=3", |b| b.iter(|| verify_commutator_suite(1, 2, 3).unwrap().passed()));
    group.finish();
}

criterion_group!(benches, modification_rule, characters, littlewood_richardson, resolutions);
criterion_main!(benches);
