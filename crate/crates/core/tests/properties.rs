mod common;

use std::collections::BTreeSet;

use common::*;
use dualcech::bifiltration::*;
use dualcech::homology::*;
use dualcech::interleaving::*;
use dualcech::io::{parse_staircases, write_staircases};
use dualcech::random::*;
use dualcech::staircase::with_midpoints;
use dualcech::*;
use proptest::prelude::*;
use rand::Rng;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, ..ProptestConfig::default() }
}

/// A random graph metric with an integer measure, some weights possibly zero.
fn instance(seed: u64, max_n: usize) -> (FiniteMetricSpace, DiscreteMeasure) {
    let mut rng = trial_rng(seed, 0);
    let n = rng.random_range(1..=max_n);
    let space = graph_metric(&mut rng, n, 4);
    let zeros = rng.random_range(0..n);
    let mu = integer_measure(&mut rng, n, zeros);
    (space, mu)
}

fn planar_points() -> impl Strategy<Value = Vec<[f64; 2]>> {
    prop::collection::vec((0.0..1.0f64, 0.0..1.0f64).prop_map(|(x, y)| [x, y]), 1..=6)
}

fn builders(space: &FiniteMetricSpace, mu: &DiscreteMeasure) -> Vec<BifilteredComplex> {
    let lambda = DowkerDissimilarity::from_metric(space);
    let f = degree_bifiltration(&lambda, mu).unwrap();
    vec![
        intrinsic_dc(space, mu, 3).unwrap(),
        ambient_dc_finite(space, mu, 3).unwrap(),
        nerve_bifiltration(&f, 3).unwrap(),
        dowker_dual(&lambda, &f, 3).unwrap(),
    ]
}

fn subset_of(a: &SimplicialComplex, b: &SimplicialComplex) -> bool {
    a.simplices().is_subset(b.simplices())
}

proptest! {
    #![proptest_config(config(48))]

    #[test]
    fn builder_outputs_are_bifiltrations(seed in any::<u64>()) {
        let (space, mu) = instance(seed, 6);
        for k in builders(&space, &mu) {
            prop_assert!(k.validate().is_ok());
            let (rs, ms) = k.critical_grid();
            let (rs, mut ms) = (with_midpoints(&rs), with_midpoints(&ms));
            ms.insert(0, -1.0);
            for (i, &m) in ms.iter().enumerate() {
                for (j, &r) in rs.iter().enumerate() {
                    let here = k.complex_at(m, r);
                    prop_assert!(here.validate().is_ok());
                    if j + 1 < rs.len() {
                        prop_assert!(subset_of(&here, &k.complex_at(m, rs[j + 1])));
                    }
                    if i > 0 {
                        prop_assert!(subset_of(&here, &k.complex_at(ms[i - 1], r)));
                    }
                }
            }
        }
    }

    #[test]
    fn dc_builders_match_witness_enumeration(seed in any::<u64>()) {
        let (space, mu) = instance(seed, 6);
        let support = mu.support();
        let everything: Vec<usize> = (0..space.len()).collect();
        let int = intrinsic_dc(&space, &mu, 3).unwrap();
        let amb = ambient_dc_finite(&space, &mu, 3).unwrap();
        let mut rs = space.distance_values();
        rs.push(f64::INFINITY);
        let ms = [0.0, 0.5, 1.0, 2.0, 3.5, 5.0, 8.0];
        for &m in &ms {
            for &r in &rs {
                prop_assert_eq!(as_sets(&int.complex_at(m, r)), brute_dc(&space, &mu, &support, m, r, 3));
                prop_assert_eq!(as_sets(&amb.complex_at(m, r)), brute_dc(&space, &mu, &everything, m, r, 3));
            }
        }
    }

    #[test]
    fn balls_grow_with_radius(seed in any::<u64>()) {
        let mut rng = trial_rng(seed, 0);
        let space = graph_metric(&mut rng, 8, 4);
        let rs = space.distance_values();
        let set = subset(&mut rng, 8, 3);
        let sigma = Simplex::new(set.clone()).unwrap();
        for w in rs.windows(2) {
            for x in 0..8 {
                let (a, b) = (space.ball(x, w[0]).unwrap(), space.ball(x, w[1]).unwrap());
                prop_assert!(a.contains(&x));
                prop_assert!(a.iter().all(|y| b.contains(y)));
            }
            let (a, b) = (space.common_ball(&sigma, w[0]).unwrap(), space.common_ball(&sigma, w[1]).unwrap());
            prop_assert!(a.iter().all(|y| b.contains(y)));
            let face = Simplex::new(set[..2].to_vec()).unwrap();
            prop_assert!(a.iter().all(|y| space.common_ball(&face, w[0]).unwrap().contains(y)));
            let (a, b) = (space.offset(&set, w[0]).unwrap(), space.offset(&set, w[1]).unwrap());
            prop_assert!(set.iter().all(|y| a.contains(y)));
            prop_assert!(a.iter().all(|y| b.contains(y)));
        }
    }

    #[test]
    fn set_bifiltrations_are_order_preserving_dowker_pairs(seed in any::<u64>(), p in 0.25..3.0f64) {
        let mut rng = trial_rng(seed, 0);
        let (nx, ny) = (rng.random_range(1..=5), rng.random_range(1..=5));
        let lambda = dissimilarity(&mut rng, nx, ny, 4);
        let zeros = rng.random_range(0..ny);
        let mu = integer_measure(&mut rng, ny, zeros);
        let rs = [0.0, 0.5, 1.0, 2.0, 3.0, 4.0, f64::INFINITY];
        for f in [degree_bifiltration(&lambda, &mu).unwrap(), dtm_bifiltration(&lambda, &mu, p).unwrap()] {
            prop_assert!(f.check_dowker_pair(&lambda, 3).is_ok());
            for sigma in dualcech::simplex::subsets_up_to(&(0..nx).collect::<Vec<_>>(), 3) {
                for w in rs.windows(2) {
                    let v = f.eval(&sigma, w[0]).unwrap();
                    prop_assert!(v <= f.eval(&sigma, w[1]).unwrap());
                    for face in sigma.facets() {
                        prop_assert!(v <= f.eval(&face, w[0]).unwrap());
                    }
                    if v > 0.0 {
                        prop_assert!(!lambda.common_ball(&sigma, w[0]).unwrap().is_empty());
                    }
                }
            }
        }
    }

    #[test]
    fn betti_matches_dense_rank(mask in prop::collection::vec(any::<bool>(), 35)) {
        // generators: the edges, triangles and tetrahedra of 6 vertices selected by `mask`
        let gens: Vec<Vec<usize>> = subsets(&[0, 1, 2, 3, 4, 5], 4).into_iter().filter(|s| s.len() >= 2).collect();
        let chosen: Vec<Simplex> = gens.iter().zip(mask.iter().cycle()).filter(|(_, &b)| b).map(|(s, _)| sx(s)).collect();
        let k = SimplicialComplex::closure((0..6).collect(), chosen).unwrap();
        let sets = as_sets(&k);
        let b = betti(&k, 3);
        prop_assert_eq!(&b, &dense_betti(&sets, 3));
        let euler: i64 = sets.iter().map(|s| if s.len() % 2 == 1 { 1 } else { -1 }).sum();
        prop_assert_eq!(euler, b.iter().enumerate().map(|(d, &x)| if d % 2 == 0 { x as i64 } else { -(x as i64) }).sum::<i64>());
    }

    #[test]
    fn slice_bars_count_betti(seed in any::<u64>()) {
        let (space, mu) = instance(seed, 6);
        let k = intrinsic_dc(&space, &mu, 3).unwrap();
        let m = mu.weights().iter().copied().fold(0.0, f64::max);
        let path = MonotonePath::horizontal_exact(m, &[&k]).unwrap();
        let bars = slice_persistence(&k, &path, 2);
        for p in path.points() {
            let here = betti(&k.complex_at(p.m, p.r), 2);
            for (d, &b) in here.iter().enumerate() {
                prop_assert_eq!(bars.rank_at(d, p.t), b);
            }
        }
    }

    #[test]
    fn bottleneck_is_a_metric_and_matches_exhaustive_matching(
        a in prop::collection::vec((0u8..6, 1u8..5), 0..4),
        b in prop::collection::vec((0u8..6, 1u8..5), 0..4),
        c in prop::collection::vec((0u8..6, 1u8..5), 0..4),
        essential in any::<bool>(),
    ) {
        let bars = |v: &[(u8, u8)]| -> Vec<(f64, f64)> {
            let mut out: Vec<(f64, f64)> = v.iter().map(|&(s, l)| (s as f64, (s + l) as f64)).collect();
            if essential {
                out.push((v.len() as f64, f64::INFINITY));
            }
            out
        };
        let (a, b, c) = (bars(&a), bars(&b), bars(&c));
        let ab = bottleneck_distance(&a, &b);
        prop_assert_eq!(ab, exhaustive_bottleneck(&a, &b));
        prop_assert_eq!(ab, bottleneck_distance(&b, &a));
        prop_assert!(bottleneck_distance(&a, &c) <= ab + bottleneck_distance(&b, &c));
        prop_assert_eq!(bottleneck_distance(&a, &a), 0.0);
    }

    #[test]
    fn staircase_tables_round_trip(seed in any::<u64>()) {
        let (space, mu) = instance(seed, 6);
        for k in builders(&space, &mu) {
            prop_assert_eq!(parse_staircases(&write_staircases(&k)).unwrap(), k);
        }
    }

    #[test]
    fn restriction_of_dual_equals_dual_of_restriction(seed in any::<u64>()) {
        let (space, mu) = instance(seed, 6);
        let lambda = DowkerDissimilarity::from_metric(&space);
        let full = dowker_dual(&lambda, &degree_bifiltration(&lambda, &mu).unwrap(), 3).unwrap();
        let s = mu.support();
        let narrow = lambda.restrict_y(&s);
        let direct = dowker_dual(&narrow, &degree_bifiltration(&narrow, &mu.restrict(&s).unwrap()).unwrap(), 3);
        // restrict_y keeps the labels, the measure is reindexed to the kept columns
        prop_assert_eq!(restrict_to_support(&full, &s), direct.unwrap());
        prop_assert_eq!(restrict_to_support(&full, &(0..space.len()).collect::<Vec<_>>()), full);
    }

    #[test]
    fn reindex_halves_radii(seed in any::<u64>()) {
        let (space, mu) = instance(seed, 5);
        let lambda = DowkerDissimilarity::from_metric(&space);
        let nf = nerve_bifiltration(&degree_bifiltration(&lambda, &mu).unwrap(), 3).unwrap();
        let half = measure_dowker_reindex(&nf);
        let (rs, ms) = nf.critical_grid();
        for &m in &with_midpoints(&ms) {
            for &r in &with_midpoints(&rs) {
                prop_assert_eq!(half.complex_at(m, r / 2.0), nf.complex_at(m, r));
            }
        }
        let quarter = measure_dowker_reindex(&half);
        prop_assert_eq!(quarter, nf.rescale_radius(4.0));
    }

    #[test]
    fn sandwich_holds_on_random_spaces(seed in any::<u64>()) {
        let (space, mu) = instance(seed, 7);
        let rep = verify_sandwich(&intrinsic_dc(&space, &mu, 3).unwrap(), &ambient_dc_finite(&space, &mu, 3).unwrap()).unwrap();
        prop_assert!(rep.passed, "{}", rep);
    }

    #[test]
    fn pushforward_keeps_mass(seed in any::<u64>()) {
        let mut rng = trial_rng(seed, 0);
        let n = rng.random_range(1..=6);
        let mu = integer_measure(&mut rng, n, 0);
        let iota: Vec<usize> = (0..n).map(|_| rng.random_range(0..4)).collect();
        let push = pushforward(&mu, &iota, 4).unwrap();
        prop_assert_eq!(push.total(), mu.total());
    }
}

proptest! {
    #![proptest_config(config(24))]

    #[test]
    fn planar_counting_slice_is_the_cech_complex(pts in planar_points()) {
        let n = pts.len();
        let space = FiniteMetricSpace::from_points(pts.clone()).unwrap();
        let mu = DiscreteMeasure::counting(n).unwrap();
        let k = match ambient_dc_planar(&space, &mu, 3, None) {
            Err(Error::DegenerateConfiguration { .. }) => return Ok(()),
            other => other.unwrap(),
        };
        let vertices: Vec<usize> = (0..n).collect();
        for r in k.critical_grid().0 {
            prop_assert_eq!(as_sets(&k.complex_at(1.0, r)), cech_complex(&pts, &vertices, r, 3));
        }
        let int = intrinsic_dc(&space, &mu, 3).unwrap();
        for r in space.distance_values() {
            let dowker: BTreeSet<Vec<usize>> = subsets(&vertices, 4)
                .into_iter()
                .filter(|tau| vertices.iter().any(|&x| tau.iter().all(|&y| space.d(x, y) <= r)))
                .collect();
            prop_assert_eq!(as_sets(&int.complex_at(1.0, r)), dowker);
        }
    }

    #[test]
    fn prohorov_matches_brute_force_and_is_a_metric(seed in any::<u64>()) {
        let mut rng = trial_rng(seed, 0);
        let n = rng.random_range(1..=6);
        let space = if rng.random_bool(0.5) { graph_metric(&mut rng, n, 4) } else { planar_space(&mut rng, n) };
        let ms: Vec<DiscreteMeasure> = (0..3).map(|_| { let z = rng.random_range(0..n); integer_measure(&mut rng, n, z) }).collect();
        let p = |i: usize, j: usize| prohorov_distance(&space, &ms[i], &ms[j]).unwrap();
        prop_assert_eq!(p(0, 1), brute_prohorov(&space, &ms[0], &ms[1]));
        prop_assert_eq!(p(0, 1), p(1, 0));
        prop_assert!(p(0, 2) <= p(0, 1) + p(1, 2) + 1e-12);
        prop_assert_eq!(p(0, 0), 0.0);
        let d = p(0, 1);
        prop_assert!(prohorov_check(&space, &ms[0], &ms[1], d).unwrap().passed);
        if d > 1e-6 {
            prop_assert!(!prohorov_check(&space, &ms[0], &ms[1], d - 1e-6).unwrap().passed);
        }
    }
}
