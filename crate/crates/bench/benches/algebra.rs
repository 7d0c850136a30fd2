use std::hint::black_box;
use std::sync::Arc;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use rif_forge::algebra::{check_laws, eval_term};
use rif_forge::inclusion::{classify, k0, k1};
use rif_forge::random::{random_set_hgos, random_wqrif_term};
use rif_forge::rational::ratio;
use rif_forge::table::EquivalenceRelation;
use rif_forge::{AlgebraTerm, Environment, GranularSpace};

/// Power-set space over `n` objects split into blocks of two.
fn paired_space(n: usize) -> Arc<GranularSpace> {
    let carrier: Vec<String> = (0..n).map(|i| format!("o{i}")).collect();
    let blocks = carrier.chunks(2).map(<[String]>::to_vec).collect();
    Arc::new(
        EquivalenceRelation::new(carrier, blocks)
            .unwrap()
            .to_set_hgos()
            .unwrap(),
    )
}

fn bench_eval(c: &mut Criterion) {
    let mut group = c.benchmark_group("eval_term");
    let term = AlgebraTerm::parse("oplus(1/3, sharp(otimes(k0, k1)), flat(sigma(k2)))").unwrap();
    for n in [3, 4, 5] {
        let s = paired_space(n);
        let env = Environment::with_builtins(&s);
        group.bench_with_input(BenchmarkId::from_parameter(n), &env, |b, env| {
            b.iter(|| eval_term(black_box(&term), env).unwrap())
        });
    }
    group.finish();
}

fn bench_classify(c: &mut Criterion) {
    let mut group = c.benchmark_group("classify");
    for n in [3, 4, 5] {
        let s = paired_space(n);
        let f = k1(&s).unwrap();
        group.bench_with_input(BenchmarkId::new("k1", n), &f, |b, f| {
            b.iter(|| classify(black_box(f)))
        });
    }
    group.finish();
}

fn bench_laws(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let s = random_set_hgos(&mut rng, 3, 3).unwrap();
    let env = Environment::with_builtins(&s);
    let mut fns = vec![k0(&s).unwrap()];
    fns.extend((0..2).map(|_| eval_term(&random_wqrif_term(&mut rng, 2), &env).unwrap()));
    let alphas = [ratio(1, 3), ratio(1, 2)];
    c.bench_function("check_laws/3x2", |b| {
        b.iter(|| check_laws(black_box(&s), &fns, &alphas).unwrap())
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = bench_eval, bench_classify, bench_laws
}
criterion_main!(benches);
