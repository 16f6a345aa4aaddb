use super::*;
use crate::linalg::{int, rat};
use proptest::prelude::*;

fn j() -> IntMatrix {
    IntMatrix::from_dense(&[vec![0, -1], vec![1, 0]]).unwrap()
}

fn v(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| int(x)).collect()
}

#[test]
fn hopf_lines() {
    let fib = build_fibration(1, 3).unwrap();
    assert_eq!(fib.generators().matrices, vec![j()]);
    assert_eq!((fib.p(), fib.q(), fib.n()), (1, 2, 3));
    assert!(invariant_failures(&fib).is_empty());
}

#[test]
fn inadmissible_pairs() {
    assert_eq!(
        build_fibration(2, 5),
        Err(Error::NotRealizable {
            p: 2,
            n: 5,
            rho_q: 1
        })
    );
    assert!(matches!(build_fibration(4, 4), Err(Error::NoBase { .. })));
    assert!(build_fibration(1, 16).is_err());
}

#[test]
fn eight_twenty_four() {
    let fib = build_fibration(8, 24).unwrap();
    assert_eq!(fib.generators().p(), 8);
    assert_eq!(fib.q(), 16);
    assert!(invariant_failures(&fib).is_empty());
}

#[test]
fn fibers_of_the_hopf_lines() {
    let fib = build_fibration(1, 3).unwrap();
    let horizontal = fiber_through(&fib, &v(&[0, 0]));
    assert_eq!(horizontal.basepoint, v(&[0, 0, 0]));
    assert_eq!(horizontal.directions, vec![v(&[1, 0, 0])]);

    // {(xi, 1, xi)}
    let f = fiber_through(&fib, &v(&[1, 0]));
    assert_eq!(f.basepoint, v(&[0, 1, 0]));
    assert_eq!(f.directions, vec![v(&[1, 0, 1])]);
    assert!(f.contains(&v(&[5, 1, 5])));
    assert!(!f.contains(&v(&[5, 1, 4])));
}

#[test]
fn directions_are_orthogonal() {
    let fib = build_fibration(3, 7).unwrap();
    let f = fiber_through(&fib, &v(&[1, 0, 0, 0]));
    for (i, a) in f.directions.iter().enumerate() {
        for (k, b) in f.directions.iter().enumerate() {
            assert_eq!(dot(a, b), if i == k { int(2) } else { int(0) });
        }
    }
}

#[test]
fn projection_examples() {
    let fib = build_fibration(1, 3).unwrap();
    assert_eq!(project(&fib, &v(&[0, 4, -7])), v(&[4, -7]));
    assert_eq!(project(&fib, &v(&[1, 1, 1])), v(&[1, 0]));
    let y0 = vec![rat(3, 7), rat(-5, 2)];
    let f = fiber_through(&fib, &y0);
    assert_eq!(project(&fib, &f.point_at(&[rat(-9, 4)])), y0);
}

#[test]
fn projection_falls_back_to_elimination() {
    // a non-orthogonal but invertible family still projects exactly
    let m = IntMatrix::from_dense(&[vec![0, 2], vec![1, 0]]).unwrap();
    let fib = SkewFibration::from_generators_unchecked(2, vec![m]);
    let y = v(&[2, -3]);
    let point = fib.point_on_fiber(&y, &[rat(1, 3)]);
    assert_eq!(project(&fib, &point), y);
}

#[test]
#[should_panic(expected = "singular")]
fn singular_projection_aborts() {
    let fib = SkewFibration::from_generators_unchecked(2, vec![IntMatrix::identity(2).neg()]);
    project(&fib, &v(&[1, 3, 4]));
}

#[test]
fn skewness_verdicts() {
    let fib = build_fibration(1, 3).unwrap();
    assert_eq!(
        check_pairwise_skew(&fib, &v(&[1, 2]), &v(&[1, 2])),
        SkewVerdict::SameFiber
    );
    assert_eq!(
        check_pairwise_skew(&fib, &v(&[1, 0]), &v(&[0, 0])),
        SkewVerdict::Skew
    );

    // M1 = 0: every fiber is a horizontal line, so all are parallel
    let flat = SkewFibration::from_generators_unchecked(2, vec![IntMatrix::zeros(2, 2)]);
    match check_pairwise_skew(&flat, &v(&[1, 0]), &v(&[0, 0])) {
        SkewVerdict::Violation { kernel } => {
            assert_eq!(kernel.len(), 1);
            assert_eq!(kernel[0], v(&[1, 0]));
        }
        other => panic!("expected a violation, got {other:?}"),
    }
}

#[test]
fn kernel_checker_agrees_with_affine_test() {
    let fib = build_fibration(3, 7).unwrap();
    let mut s = RationalSampler::new(11);
    for _ in 0..40 {
        let (a, b) = (s.vector(4), s.vector(4));
        let direct = affine_skewness(&fiber_through(&fib, &a), &fiber_through(&fib, &b));
        assert_eq!(
            check_pairwise_skew(&fib, &a, &b).is_skew(),
            direct.is_skew()
        );
    }
}

#[test]
fn restrictions() {
    let f37 = build_fibration(3, 7).unwrap();
    let f26 = restrict(&f37).unwrap();
    assert_eq!((f26.p(), f26.n()), (2, 6));
    assert_eq!(
        f26.generators().matrices,
        f37.generators().matrices[..2].to_vec()
    );
    assert!(invariant_failures(&f26).is_empty());

    let points = restrict(&build_fibration(1, 3).unwrap()).unwrap();
    assert_eq!((points.p(), points.n()), (0, 2));
    assert_eq!(restrict(&points), Err(Error::RestrictPoints));

    let f = restrict(&restrict(&build_fibration(7, 15).unwrap()).unwrap()).unwrap();
    assert_eq!((f.p(), f.n()), (5, 13));
    assert!(crate::rho::fiber_dims(13).unwrap().contains(&5));
}

#[test]
fn gram_matrices() {
    let fib = build_fibration(1, 3).unwrap();
    assert!(gram(&fib, &v(&[0, 0])).is_scalar(&int(0)));
    // A(y) = [[-b, a], [a, b]]
    let a = fib.a_matrix(&v(&[3, 5]));
    assert_eq!(a.row(0), &v(&[-5, 3])[..]);
    assert_eq!(a.row(1), &v(&[3, 5])[..]);
    assert!(gram_identity_holds(&fib));
    let g = gram_symbolic(&fib);
    assert_eq!(g[0][0].to_string(), "y1^2 + y2^2");
    assert!(g[0][1].is_zero());

    let big = build_fibration(8, 24).unwrap();
    let y = RationalSampler::new(5).vector(16);
    assert!(gram(&big, &y).is_scalar(&dot(&y, &y)));
}

#[test]
fn degenerate_gram_fails() {
    let fib = SkewFibration::from_generators_unchecked(2, vec![IntMatrix::identity(2)]);
    assert!(!gram_identity_holds(&fib));
    assert!(SkewFibration::from_generators(NormalizedFamily {
        q: 2,
        matrices: vec![IntMatrix::identity(2)]
    })
    .is_err());
}

#[test]
fn validated_constructor_checks_admissibility() {
    let two = normalize_last_identity(&construct_family(6).unwrap()).unwrap();
    assert!(SkewFibration::from_generators(two.clone()).is_ok());
    // duplicate generators pass shape checks but not the invariants
    let dup = NormalizedFamily {
        q: 6,
        matrices: vec![two.matrices[0].clone(), two.matrices[0].clone()],
    };
    assert!(matches!(
        SkewFibration::from_generators(dup),
        Err(Error::NotRealizable { .. })
    ));
}

#[test]
fn compositions() {
    let c = compose(
        &build_fibration(3, 7).unwrap(),
        &build_fibration(1, 3).unwrap(),
    )
    .unwrap();
    assert_eq!((c.p(), c.n(), c.base_dim()), (1, 7, 6));
    let mut s = RationalSampler::new(21);
    for i in 0..200 {
        let b1 = s.vector(6);
        let mut b2 = s.vector(6);
        if i % 4 == 0 {
            // same outer fiber, different inner fiber
            b2[..4].clone_from_slice(&b1[..4]);
        }
        assert!(c.check_pairwise_skew(&b1, &b2).is_skew());
    }
    assert_eq!(
        c.check_pairwise_skew(&v(&[1; 6]), &v(&[1; 6])),
        SkewVerdict::SameFiber
    );

    // the composed fiber lies inside the outer fiber and projects back
    let base = s.vector(6);
    let f = c.fiber_through(&base);
    let outer = fiber_through(c.outer(), &base[..4]);
    let pt = f.point_at(&[rat(2, 3)]);
    assert!(outer.contains(&pt));
    assert_eq!(c.project(&pt), base);

    assert!(compose(
        &build_fibration(3, 7).unwrap(),
        &build_fibration(1, 7).unwrap()
    )
    .is_err());
}

#[test]
fn composition_with_points() {
    let outer = build_fibration(1, 3).unwrap();
    let points = build_fibration(0, 1).unwrap();
    let c = compose(&outer, &points).unwrap();
    assert_eq!(c.p(), 0);
    let f = c.fiber_through(&v(&[1, 2, 3]));
    assert_eq!(f.basepoint, outer.point_on_fiber(&v(&[1, 2]), &v(&[3])));
    assert!(c
        .check_pairwise_skew(&v(&[1, 2, 3]), &v(&[1, 2, 4]))
        .is_skew());
}

#[test]
fn deep_composition() {
    let c = compose(
        &build_fibration(7, 15).unwrap(),
        &build_fibration(3, 7).unwrap(),
    )
    .unwrap();
    assert_eq!((c.p(), c.n()), (3, 15));
    let mut s = RationalSampler::new(2);
    for _ in 0..20 {
        assert!(c
            .check_pairwise_skew(&s.vector(12), &s.vector(12))
            .is_skew());
    }
}

#[test]
fn hyperboloid_rulings() {
    let fib = build_fibration(1, 3).unwrap();
    for c in [int(1), int(2)] {
        let bases = circle_base_points(&c, 8);
        for y in &bases {
            assert_eq!(dot(y, y), &c * &c);
            // x2^2 + x3^2 - c^2 x1^2 = c^2 along the whole line
            let f = fiber_through(&fib, y);
            for t in [int(-2), rat(1, 3), int(5)] {
                let x = f.point_at(&[t]);
                assert_eq!(
                    &x[1] * &x[1] + &x[2] * &x[2] - &c * &c * &x[0] * &x[0],
                    &c * &c
                );
            }
        }
        let samples = export_fiber_samples(&fib, &bases, (&int(-1), &int(1)), 2);
        assert_eq!(samples.len(), 16);
        assert_eq!(samples[1].fiber_id, 0);
        assert_eq!(samples[2].fiber_id, 1);
    }
    assert!(export_fiber_samples(&fib, &[], (&int(-1), &int(1)), 2).is_empty());
}

#[test]
fn sample_formats() {
    let fib = build_fibration(1, 3).unwrap();
    let samples = export_fiber_samples(&fib, &[v(&[1, 0])], (&int(0), &int(1)), 2);
    assert_eq!(
        samples_to_csv(&samples, 3),
        "fiber_id,x1,x2,x3\n0,0,1,0\n0,1,1,1\n"
    );
    let jl = samples_to_jsonl(&samples);
    assert_eq!(
        jl.lines().next().unwrap(),
        r#"{"fiber_id":0,"base":[[1,1],[0,1]],"point":[0.0,1.0,0.0]}"#
    );
}

#[test]
fn json_round_trip() {
    let fib = build_fibration(3, 7).unwrap();
    let text = fib.to_json();
    assert_eq!(SkewFibration::from_json(&text).unwrap(), fib);
    assert!(text.starts_with(r#"{"p":3,"q":4,"generators":[[[0,"#));
    assert!(SkewFibration::from_json(r#"{"p":1,"q":2,"generators":[[[1,0],[0,1]]]}"#).is_err());
}

#[test]
fn scaling_equivariance() {
    let fib = build_fibration(3, 7).unwrap();
    let y = v(&[1, -2, 0, 3]);
    let lambda = rat(-5, 3);
    let scaled: Vec<Rational> = y.iter().map(|x| x * &lambda).collect();
    let f = fiber_through(&fib, &scaled);
    for (i, (d, m)) in f
        .directions
        .iter()
        .zip(&fib.generators().matrices)
        .enumerate()
    {
        let my: Vec<Rational> = m.mul_vec(&y).iter().map(|x| x * &lambda).collect();
        assert_eq!(d[i], int(1));
        assert_eq!(&d[3..], &my[..]);
    }
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=7).prop_map(|(n, d)| rat(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn projection_round_trip(point in prop::collection::vec(small_rational(), 15)) {
        let fib = build_fibration(7, 15).unwrap();
        let y = project(&fib, &point);
        prop_assert!(fiber_through(&fib, &y).contains(&point));
    }

    #[test]
    fn fiber_points_project_home(y in prop::collection::vec(small_rational(), 8),
                                 xi in prop::collection::vec(small_rational(), 7)) {
        let fib = build_fibration(7, 15).unwrap();
        prop_assert_eq!(project(&fib, &fib.point_on_fiber(&y, &xi)), y);
    }

    #[test]
    fn distinct_fibers_are_skew(a in prop::collection::vec(small_rational(), 16),
                                b in prop::collection::vec(small_rational(), 16)) {
        let fib = build_fibration(8, 24).unwrap();
        let verdict = check_pairwise_skew(&fib, &a, &b);
        prop_assert_eq!(verdict.is_skew(), a != b);
    }
}
