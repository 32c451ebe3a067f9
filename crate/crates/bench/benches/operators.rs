use criterion::{criterion_group, criterion_main, Criterion};
use gaugealg::coulomb::{gl2_base_point, Coulomb};
use gaugealg::morphism::compose_all;
use gaugealg::presets;
use gaugealg::steinberg::Steinberg;
use std::hint::black_box;

fn higgs(c: &mut Criterion) {
    let st = Steinberg::new(&presets::gl2_running()).unwrap();
    let a = st.objects[0].clone();
    let b = st.objects[st.objects.len() - 1].clone();
    let there = st.wall(&b, &a).unwrap();
    let back = st.wall(&a, &b).unwrap();
    c.bench_function("higgs wall round trip", |bn| {
        bn.iter(|| black_box(compose_all(&[back.clone(), there.clone()]).unwrap()))
    });
    let loop_ = compose_all(&[back.clone(), there.clone()]).unwrap();
    c.bench_function("higgs express in basis", |bn| bn.iter(|| black_box(st.express_in_basis(&loop_).unwrap())));
    c.bench_function("higgs relations, 10 probes", |bn| bn.iter(|| black_box(st.verify_relations(10, 2, 1).unwrap())));
}

fn coulomb(c: &mut Criterion) {
    let co = Coulomb::new(&presets::gl2_running());
    let (w1, z1) = co.anchor_generators(&gl2_base_point(), 0).unwrap();
    c.bench_function("coulomb anchor product", |bn| bn.iter(|| black_box(z1.then_after(&w1).unwrap())));
    let m = w1.then_after(&z1).unwrap();
    c.bench_function("coulomb normal form", |bn| bn.iter(|| black_box(co.normal_form(&m).unwrap())));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = higgs, coulomb
}
criterion_main!(benches);
