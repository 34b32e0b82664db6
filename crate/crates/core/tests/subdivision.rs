//! Cluster-diameters under edge subdivision.
//!
//! Subdividing every edge into `t` edges keeps each original cluster inside
//! one cluster and multiplies distances by `t`, so `t·Δ_s(G)` is a lower bound
//! on `Δ_s` of the subdivided graph for every original start `s`. Equality
//! fails in general: the triangle has `Δ_s = 1`, while its 3-subdivision
//! `C_9` has `Δ_s = 4`.

use treelike::generators::{clique, cycle, random_connected};
use treelike::layering::{cluster_diameter_at, layering_partition};
use treelike::{DistanceMatrix, Graph};

fn delta(g: &Graph, s: usize) -> u32 {
    let dm = DistanceMatrix::new(g).unwrap();
    cluster_diameter_at(&dm, &layering_partition(g, &dm, s).unwrap())
}

#[test]
fn subdivision_never_shrinks_scaled_clusters() {
    for seed in 0..200u64 {
        let n = 3 + (seed % 6) as usize;
        let g = random_connected(n, [0.2, 0.4, 0.6][(seed % 3) as usize], seed).unwrap();
        for t in 2..=3 {
            let h = g.subdivide(t).unwrap();
            for s in g.vertices() {
                assert!(delta(&h, s) >= t as u32 * delta(&g, s), "seed {seed}, t {t}, s {s}");
            }
        }
    }
}

#[test]
fn exact_scaling_fails_on_the_triangle() {
    let k3 = clique(3).unwrap();
    assert_eq!(delta(&k3, 0), 1);
    assert_eq!(delta(&k3.subdivide(3).unwrap(), 0), 4);
}

#[test]
fn cycles_of_length_divisible_by_four_scale_exactly() {
    for n in [4, 8, 12] {
        let c = cycle(n).unwrap();
        for t in 1..=3 {
            assert_eq!(delta(&c.subdivide(t).unwrap(), 0), t as u32 * delta(&c, 0));
        }
    }
}

#[test]
fn subdivided_cycle_is_a_longer_cycle() {
    let h = cycle(4).unwrap().subdivide(2).unwrap();
    assert_eq!((h.n(), h.m()), (8, 8));
    assert!(h.vertices().all(|v| h.degree(v) == 2));
    assert!(h.is_connected());
    let p = Graph::from_edges(2, &[(0, 1)]).unwrap().subdivide(3).unwrap();
    assert_eq!((p.n(), p.m()), (4, 3));
}
