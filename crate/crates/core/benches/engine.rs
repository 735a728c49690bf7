use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gtc_core::derived::total_graph;
use gtc_core::engine::{check_group_choosable, CheckOptions, Engine, Exec};
use gtc_core::graph::{cycle, path, wheel, Graph};
use gtc_core::group::Group;

fn workloads() -> Vec<(&'static str, Graph, Group, usize, Engine)> {
    let z4 = Group::parse("Z4").unwrap();
    let z5 = Group::parse("Z5").unwrap();
    let klein = Group::parse("Z2xZ2").unwrap();
    vec![
        ("total-path4-Z4", total_graph(&path(4).unwrap()).graph, z4, 4, Engine::Frontier),
        ("total-cycle4-Z5", total_graph(&cycle(4).unwrap()).graph, z5.clone(), 5, Engine::Frontier),
        ("wheel5-Z2xZ2", wheel(5).unwrap(), klein.clone(), 4, Engine::Frontier),
        ("cycle5-Z2xZ2-enumerate", cycle(5).unwrap(), klein, 3, Engine::Enumerate),
    ]
}

fn exec_modes(c: &mut Criterion) {
    let mut group = c.benchmark_group("choosability");
    group.sample_size(10);
    for (name, g, grp, k, engine) in workloads() {
        for exec in [Exec::Parallel, Exec::Sequential] {
            let opts = CheckOptions { engine, exec, ..CheckOptions::default() };
            group.bench_with_input(BenchmarkId::new(format!("{exec:?}"), name), &opts, |b, opts| {
                b.iter(|| check_group_choosable(&g, &grp, k, opts).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, exec_modes);
criterion_main!(benches);
