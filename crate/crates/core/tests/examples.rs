//! Worked examples on small fixed spaces, checked against the brute-force
//! oracles in `common`.

mod common;

use std::collections::BTreeSet;
use std::f64::consts::SQRT_2;

use common::*;
use dualcech::bifiltration::*;
use dualcech::homology::*;
use dualcech::interleaving::*;
use dualcech::*;

fn l3() -> FiniteMetricSpace {
    FiniteMetricSpace::from_points(vec![[0.0, 0.0], [1.0, 0.0], [3.0, 0.0]]).unwrap()
}

/// Unit square, corners in cyclic order.
fn s4() -> FiniteMetricSpace {
    FiniteMetricSpace::from_points(vec![[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]).unwrap()
}

fn set(v: &[&[usize]]) -> BTreeSet<Vec<usize>> {
    v.iter().map(|s| s.to_vec()).collect()
}

#[test]
fn intrinsic_l3_slices_match_enumeration() {
    let (space, mu) = (l3(), DiscreteMeasure::counting(3).unwrap());
    let k = intrinsic_dc(&space, &mu, 3).unwrap();
    let all = [0, 1, 2];
    for &(m, r) in &[(2.0, 1.0), (3.0, 2.0), (1.0, 0.0), (1.0, 2.5), (2.0, 3.0)] {
        assert_eq!(as_sets(&k.complex_at(m, r)), brute_dc(&space, &mu, &all, m, r, 3), "at ({m},{r})");
    }
    assert_eq!(as_sets(&k.complex_at(2.0, 1.0)), set(&[&[0], &[1], &[0, 1]]));
    assert_eq!(as_sets(&k.complex_at(3.0, 2.0)).len(), 7);
    let (rs, ms) = k.critical_grid();
    assert!(rs.iter().all(|r| [0.0, 1.0, 2.0, 3.0].contains(r)));
    assert!(ms.iter().all(|m| [1.0, 2.0, 3.0].contains(m)));
}

#[test]
fn square_at_unit_radius_is_a_sphere() {
    let (space, mu) = (s4(), DiscreteMeasure::counting(4).unwrap());
    let k = intrinsic_dc(&space, &mu, 3).unwrap();
    let slice = as_sets(&k.complex_at(1.0, 1.0));
    assert_eq!(slice, brute_dc(&space, &mu, &[0, 1, 2, 3], 1.0, 1.0, 3));
    let triangles: Vec<_> = slice.iter().filter(|s| s.len() == 3).cloned().collect();
    assert_eq!(triangles, vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]);
    assert!(!slice.contains(&vec![0, 1, 2, 3]));
    assert_eq!(dense_betti(&slice, 2), vec![1, 0, 1]);
    let table = betti_table(&k, &[1.0], &[1.0], 2).unwrap();
    assert_eq!(table.get(0, 0), &vec![1, 0, 1]);
}

#[test]
fn square_slice_has_a_sphere_bar() {
    let k = intrinsic_dc(&s4(), &DiscreteMeasure::counting(4).unwrap(), 3).unwrap();
    let path = MonotonePath::horizontal_exact(1.0, &[&k]).unwrap();
    let bars = slice_persistence(&k, &path, 2);
    assert_eq!(bars.in_dim(2), vec![(1.0, SQRT_2)]);
}

#[test]
fn l3_horizontal_slice_bars() {
    let k = intrinsic_dc(&l3(), &DiscreteMeasure::counting(3).unwrap(), 3).unwrap();
    let path = MonotonePath::horizontal_exact(1.0, &[&k]).unwrap();
    let mut h0 = slice_persistence(&k, &path, 1).in_dim(0);
    h0.sort_by(|a, b| a.1.partial_cmp(&b.1).unwrap());
    assert_eq!(h0, vec![(0.0, 1.0), (0.0, 2.0), (0.0, f64::INFINITY)]);
}

#[test]
fn ambient_finite_uses_witnesses_outside_the_support() {
    let space = l3();
    let mu = DiscreteMeasure::new(vec![1.0, 0.0, 1.0]).unwrap();
    let k = ambient_dc_finite(&space, &mu, 3).unwrap();
    assert_eq!(k.staircase(&sx(&[0, 2])).unwrap().value(2.0), Some(2.0));
    for &(m, r) in &[(1.0, 1.0), (2.0, 2.0), (1.0, 1.5), (2.0, 3.0)] {
        assert_eq!(as_sets(&k.complex_at(m, r)), brute_dc(&space, &mu, &[0, 1, 2], m, r, 3));
    }
    // the same complex from the dual over the whole space
    let lambda = DowkerDissimilarity::from_metric(&space);
    let full = dowker_dual(&lambda, &degree_bifiltration(&lambda, &mu).unwrap(), 3).unwrap();
    assert_eq!(restrict_to_support(&full, &[0, 2]), k);
}

#[test]
fn planar_square_diagonal() {
    let (space, mu) = (s4(), DiscreteMeasure::counting(4).unwrap());
    let k = ambient_dc_planar(&space, &mu, 3, None).unwrap();
    let diag = k.staircase(&sx(&[0, 2])).unwrap();
    assert!((diag.start_r() - SQRT_2 / 2.0).abs() < 1e-12);
    assert_eq!(diag.value(diag.start_r()), Some(4.0));
    let at_half = as_sets(&k.complex_at(1.0, 0.5));
    assert!(at_half.contains(&vec![0, 1]));
    assert!(!at_half.contains(&vec![0, 2]));
    let (rs, _) = k.critical_grid();
    for r in rs {
        assert_eq!(as_sets(&k.complex_at(1.0, r)), cech_complex(space.coords().unwrap(), &[0, 1, 2, 3], r, 3));
    }
}

#[test]
fn rectangle_nerve_and_dual_agree_on_l3() {
    let space = l3();
    let lambda = DowkerDissimilarity::from_metric(&space);
    let f = degree_bifiltration(&lambda, &DiscreteMeasure::counting(3).unwrap()).unwrap();
    let e = rectangle_complex(&lambda, &f, 3.0, 2.0, 3).unwrap();
    let nf = nerve_bifiltration(&f, 3).unwrap().complex_at(3.0, 2.0);
    let d = dowker_dual(&lambda, &f, 3).unwrap().complex_at(3.0, 2.0);
    for k in [&e, &nf, &d] {
        assert_eq!(dense_betti(&as_sets(k), 2), vec![1, 0, 0]);
    }
}

#[test]
fn cover_nerve_of_l3() {
    let (space, mu) = (l3(), DiscreteMeasure::counting(3).unwrap());
    assert_eq!(measure_bifiltration_points(&space, &mu, 3.0, 2.0).unwrap(), vec![1]);
    let nerve = as_sets(&cover_nerve(&space, &mu, 3.0, 2.0, 3).unwrap());
    let direct: BTreeSet<Vec<usize>> = subsets(&[0, 1, 2], 3)
        .into_iter()
        .filter(|tau| tau.iter().all(|&y| space.d(y, 1) <= 2.0))
        .collect();
    assert_eq!(nerve, direct);
    assert_eq!(nerve.len(), 7);
    assert!(cover_nerve(&space, &mu, 4.0, 5.0, 3).unwrap().simplices().is_empty());
}

#[test]
fn bottleneck_example() {
    let (a, b) = ([(0.0, 2.0)], [(0.0, 3.0)]);
    assert_eq!(exhaustive_bottleneck(&a, &b), 1.0);
    assert_eq!(bottleneck_distance(&a, &b), 1.0);
    assert_eq!(bottleneck_distance(&a, &[]), 1.0);
}

#[test]
fn prohorov_examples() {
    let two = validate_metric(vec![vec![0.0, 0.3], vec![0.3, 0.0]], None).unwrap();
    let d0 = DiscreteMeasure::new(vec![1.0, 0.0]).unwrap();
    let d1 = DiscreteMeasure::new(vec![0.0, 1.0]).unwrap();
    let p = prohorov_distance(&two, &d0, &d1).unwrap();
    assert_eq!(p, brute_prohorov(&two, &d0, &d1));
    assert!((p - 0.3).abs() < 1e-15);
    assert!(prohorov_check(&two, &d0, &d1, p).unwrap().passed);
    assert!(!prohorov_check(&two, &d0, &d1, p - 1e-6).unwrap().passed);
    assert!(prohorov_check(&two, &d0, &d1, f64::INFINITY).unwrap().passed);

    let unit = validate_metric(vec![vec![0.0, 1.0], vec![1.0, 0.0]], None).unwrap();
    let half = DiscreteMeasure::new(vec![0.5, 0.5]).unwrap();
    let dirac = DiscreteMeasure::new(vec![1.0, 0.0]).unwrap();
    assert_eq!(prohorov_distance(&unit, &half, &dirac).unwrap(), 0.5);
    assert_eq!(brute_prohorov(&unit, &half, &dirac), 0.5);
}

#[test]
fn gp_bound_of_two_diracs() {
    let t = 0.7;
    let ambient = validate_metric(vec![vec![0.0, t], vec![t, 0.0]], None).unwrap();
    let point = validate_metric(vec![vec![0.0]], None).unwrap();
    let emb = CommonEmbedding::new(ambient, &point, vec![0], &point, vec![1]).unwrap();
    let unit = DiscreteMeasure::new(vec![1.0]).unwrap();
    assert_eq!(gp_upper_bound(&unit, &unit, &emb).unwrap(), t);
}

#[test]
fn identity_interleaves_measures_at_their_prohorov_distance() {
    let space = FiniteMetricSpace::from_points(vec![[0.0, 0.0], [0.4, 0.0], [1.0, 0.3], [0.2, 0.9]]).unwrap();
    let mu0 = DiscreteMeasure::new(vec![1.0, 2.0, 0.0, 1.0]).unwrap();
    let mu1 = DiscreteMeasure::new(vec![2.0, 1.0, 1.0, 0.0]).unwrap();
    let delta = prohorov_distance(&space, &mu0, &mu1).unwrap();
    assert_eq!(delta, brute_prohorov(&space, &mu0, &mu1));
    let lambda = DowkerDissimilarity::from_metric(&space);
    let f0 = degree_bifiltration(&lambda, &mu0).unwrap();
    let f1 = degree_bifiltration(&lambda, &mu1).unwrap();
    let id: Vec<usize> = (0..4).collect();
    let rep = verify_set_interleaving_eps(&f0, &f1, &id, &id, delta, None, 3).unwrap();
    assert!(rep.passed, "{rep}");
    // rerun below the binding slack
    let tight = verify_set_interleaving_eps(&f0, &f1, &id, &id, delta - 1e-6, None, 3).unwrap();
    let fail = tight.first_failure().expect("fails below the distance");
    assert!(fail.witness.is_some());
    let additive = ForwardShift::additive(delta).unwrap();
    let shifted =
        verify_set_interleaving_shift(&f0, &f1, &id, &id, &additive, &additive, CompositeReading::Standard, None, 3).unwrap();
    assert_eq!(shifted.passed, rep.passed);
    assert_eq!(shifted.worst_slack(), rep.worst_slack());
}

#[test]
fn perturbed_clouds_are_interleaved_at_complex_level() {
    let base = [[0.0, 0.0], [1.0, 0.1], [0.4, 0.8], [0.9, 0.9]];
    let moves = [[0.02, -0.01], [-0.03, 0.0], [0.0, 0.025], [0.01, 0.01]];
    let mut pts = base.to_vec();
    pts.extend(base.iter().zip(&moves).map(|(p, d)| [p[0] + d[0], p[1] + d[1]]));
    let space = FiniteMetricSpace::from_points(pts).unwrap();
    let delta = moves.iter().map(|d| d[0].hypot(d[1])).fold(0.0, f64::max);
    let mu0 = DiscreteMeasure::counting_on(8, &[0, 1, 2, 3]).unwrap();
    let mu1 = DiscreteMeasure::counting_on(8, &[4, 5, 6, 7]).unwrap();
    let k0 = intrinsic_dc(&space, &mu0, 2).unwrap();
    let k1 = intrinsic_dc(&space, &mu1, 2).unwrap();
    let p1 = nearest_neighbor_projection(&space, &[4, 5, 6, 7]).unwrap();
    let p0 = nearest_neighbor_projection(&space, &[0, 1, 2, 3]).unwrap();
    let shift = ForwardShift::doubling(delta + 0.01).unwrap();
    let rep =
        verify_complex_interleaving(&k0, &k1, &p1[..4], &p0[4..], &shift, &shift, CompositeReading::Standard).unwrap();
    assert!(rep.passed, "{rep}");
}

#[test]
fn sandwich_is_tight_on_the_square_diagonal() {
    let (space, mu) = (s4(), DiscreteMeasure::counting(4).unwrap());
    let int = intrinsic_dc(&space, &mu, 3).unwrap();
    let amb = ambient_dc_planar(&space, &mu, 3, None).unwrap();
    let rep = verify_sandwich(&int, &amb).unwrap();
    assert!(rep.passed);
    let diag = sx(&[0, 2]);
    let (a, i) = (amb.staircase(&diag).unwrap(), int.staircase(&diag).unwrap());
    assert!((a.start_r() - SQRT_2 / 2.0).abs() < 1e-12);
    // a corner's unit ball holds both ends of the diagonal
    assert_eq!(i.start_r(), 1.0);
    assert_eq!(i.value(2.0 * a.start_r()), a.value(a.start_r()));
    // full support: the first inclusion is an equality
    let fin = ambient_dc_finite(&space, &mu, 3).unwrap();
    assert_eq!(fin, int);
}

#[test]
fn nearest_neighbour_examples() {
    let space = l3();
    assert_eq!(nearest_neighbor_projection(&space, &[0, 2]).unwrap(), vec![0, 0, 2]);
    let sym = FiniteMetricSpace::from_points(vec![[0.0, 0.0], [1.0, 0.0], [2.0, 0.0]]).unwrap();
    assert_eq!(nearest_neighbor_projection(&sym, &[0, 2]).unwrap()[1], 0);
    assert_eq!(nearest_neighbor_projection(&sym, &[]), Err(Error::EmptyTarget));
}

#[test]
fn betti_examples_against_dense_rank() {
    let full = set(&[&[0], &[1], &[2], &[0, 1], &[0, 2], &[1, 2], &[0, 1, 2]]);
    let hollow = set(&[&[0], &[1], &[2], &[0, 1], &[0, 2], &[1, 2]]);
    let sphere: BTreeSet<Vec<usize>> = subsets(&[0, 1, 2, 3], 3).into_iter().collect();
    for (s, want) in [(&full, vec![1, 0, 0]), (&hollow, vec![1, 1, 0]), (&sphere, vec![1, 0, 1])] {
        assert_eq!(dense_betti(s, 2), want);
        let k = SimplicialComplex::new(vec![0, 1, 2, 3], s.iter().map(|v| sx(v))).unwrap();
        assert_eq!(betti(&k, 2), want);
    }
}
