use criterion::{criterion_group, criterion_main, Criterion};
use stabcat::harness::par::{degrees, map_ordered, map_sequential};
use stabcat::harness::registry;
use stabcat::modules::{CoverMode, Tower};
use stabcat::tate::{hat_ext, regular_bimodule, TateClass};
use std::hint::black_box;

// One fresh Hochschild tower per degree, so no layer is shared between
// iterations or between workers.
fn hh_degree(n: i32) -> usize {
    let fx = registry("s3-c3").unwrap();
    let r = regular_bimodule(&fx.a);
    let t = Tower::new(&r, CoverMode::Minimal);
    let classes = TateClass::basis(&t, &r, n);
    hat_ext(&t, &r, -1 - n).dim() + classes.len()
}

fn engine(c: &mut Criterion) {
    let ds = degrees((-3, 3));
    let mut g = c.benchmark_group("hh-window");
    g.sample_size(10);
    g.bench_function("sequential", |b| b.iter(|| black_box(map_sequential(&ds, |&n| hh_degree(n)))));
    g.bench_function("ordered", |b| b.iter(|| black_box(map_ordered(&ds, |&n| hh_degree(n)))));
    g.finish();
}

criterion_group!(benches, engine);
criterion_main!(benches);
