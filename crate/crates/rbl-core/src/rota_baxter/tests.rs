use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::system::sign_normalize;
use super::*;
use crate::lie::{sl2, LieAlgebra, OperatorMatrix, Vector};
use crate::scalar::{parse_ratfun, Bindings, RatFun, Rational, Scalar, ZeroTest};

fn no_params() -> Bindings {
    Bindings::Exact(BTreeMap::new())
}

fn bind_a(p: i64, q: i64) -> Bindings {
    Bindings::exact_rationals([("a", Rational::new(p, q))])
}

#[test]
fn catalog_has_22_families_with_expected_parameters() {
    let cat = catalog();
    assert_eq!(cat.len(), 22);
    for (k, e) in cat.iter().enumerate() {
        assert_eq!(e.index, k + 1);
        assert_eq!(e.id, format!("P{}", k + 1));
    }
    let one_param = [6, 7, 8, 11, 12, 13, 14, 16, 17, 18, 19, 20, 21];
    for e in cat {
        if e.index == 22 {
            assert_eq!(e.params, ["a", "b"]);
            assert!(e.branch.is_some());
        } else if one_param.contains(&e.index) {
            assert_eq!(e.params, ["a"]);
            assert!(e.branch.is_none());
        } else {
            assert!(e.params.is_empty());
            assert!(e.constraints.is_empty());
        }
    }
    assert_eq!(entry_by_id("p19").unwrap().index, 19);
    assert!(entry_by_id("P23").is_none());
}

#[test]
fn every_catalog_family_satisfies_the_identity_symbolically() {
    let g = sl2();
    let zero = Scalar::zero();
    for e in catalog() {
        let report = check_rb(&g, &e.operator().unwrap(), &zero).unwrap();
        assert!(
            report.holds(ZeroTest::Exact).unwrap(),
            "{} fails at {:?}",
            e.id,
            report.failing_pairs(ZeroTest::Exact).unwrap()
        );
    }
}

#[test]
fn checker_distinguishes_weights() {
    let g = sl2();
    let zero_op = OperatorMatrix::new(&g, matrix::zeros(3, 3)).unwrap();
    assert!(check_rb(&g, &zero_op, &Scalar::zero())
        .unwrap()
        .holds(ZeroTest::Exact)
        .unwrap());

    let id = OperatorMatrix::new(&g, matrix::identity(3)).unwrap();
    let report = check_rb(&g, &id, &Scalar::zero()).unwrap();
    assert!(!report.holds(ZeroTest::Exact).unwrap());
    // At the (e, f) pair both sides are multiples of [e, f], leaving -h.
    let r = report.residual(0, 1).unwrap();
    assert_eq!(
        r.coords,
        vec![Scalar::zero(), Scalar::zero(), Scalar::from_int(-1)]
    );
    // The identity map satisfies the weight -1 variant instead.
    assert!(check_rb(&g, &id, &Scalar::from_int(-1))
        .unwrap()
        .holds(ZeroTest::Exact)
        .unwrap());
}

#[test]
fn generated_system_matches_the_printed_nine_equations() {
    let sys = generate_rb_system(&sl2()).unwrap();
    assert_eq!(
        sys.unknowns,
        ["r11", "r12", "r13", "r21", "r22", "r23", "r31", "r32", "r33"]
    );
    // The nine coefficient comparisons, written as LHS - RHS.
    let printed = [
        "4*r13*r21 - (r11 + r22)*r31",
        "4*r12*r23 - (r11 + r22)*r32",
        "4*r23*r13 - (r11 + r22)*r33 - r12*r21 + r11*r22",
        "2*r13*r31 - 2*r12*r21 - r32*r31 + 2*r11^2",
        "4*r12*r33 - 2*r12*r22 - r32^2 + 2*r11*r12 - 2*r13*r32",
        "r11*r32 - 2*r12*r23 - r32*r33 + 2*(r11 + r33)*r13 - r12*r31",
        "4*r21*r33 - 2*r23*r31 - 2*r21*r11 - r31^2 + 2*r22*r21",
        "2*r22^2 + 2*r23*r32 - 2*r21*r12 - r31*r32",
        "r21*r32 - r22*r31 - 2*(r22 + r33)*r23 + 2*r21*r13 + r31*r33",
    ];
    assert_eq!(sys.equations.len(), printed.len());
    for (k, (got, text)) in sys.equations.iter().zip(printed).enumerate() {
        let want = parse_ratfun(text).unwrap();
        assert!(want.den().is_one());
        let want = RatFun::from_poly(sign_normalize(want.num()));
        assert_eq!(got, &want, "equation {}", k + 1);
    }
}

#[test]
fn degenerate_algebras_have_expected_systems() {
    // 1-dimensional abelian: every operator is Rota-Baxter.
    let abelian = LieAlgebra::new(
        vec!["x".into()],
        vec![vec![vec![Scalar::zero()]]],
        ZeroTest::Exact,
    )
    .unwrap();
    assert!(generate_rb_system(&abelian).unwrap().equations.is_empty());

    // 2-dimensional [x, y] = y: solve the system by brute force over a small
    // grid and cross-check every verdict against the residual checker.
    let z = || vec![Scalar::zero(); 2];
    let mut c = vec![vec![z(), z()], vec![z(), z()]];
    c[0][1][1] = Scalar::one();
    c[1][0][1] = Scalar::from_int(-1);
    let aff = LieAlgebra::new(vec!["x".into(), "y".into()], c, ZeroTest::Exact).unwrap();
    let sys = generate_rb_system(&aff).unwrap();
    assert_eq!(sys.unknowns, ["r11", "r12", "r21", "r22"]);
    assert!(!sys.equations.is_empty());
    let mut solutions = 0usize;
    for m11 in -2..=2i64 {
        for m12 in -2..=2i64 {
            for m21 in -2..=2i64 {
                for m22 in -2..=2i64 {
                    let m = matrix::from_ints(&[&[m11, m12], &[m21, m22]]);
                    let vanish = sys
                        .vanishes_at(&sys.bind_matrix(&m).unwrap(), ZeroTest::Exact)
                        .unwrap();
                    let op = OperatorMatrix::new(&aff, m).unwrap();
                    let rb = check_rb(&aff, &op, &Scalar::zero())
                        .unwrap()
                        .holds(ZeroTest::Exact)
                        .unwrap();
                    assert_eq!(vanish, rb, "at {m11} {m12} {m21} {m22}");
                    solutions += usize::from(rb);
                }
            }
        }
    }
    // The zero operator is always there; the grid finds more.
    assert!(solutions > 1);
}

#[test]
fn system_and_checker_agree_on_random_matrices() {
    let g = sl2();
    let sys = generate_rb_system(&g).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5C12_0003);
    let mut agree_true = 0usize;
    for round in 0..500 {
        let m: Vec<Vec<Scalar>> = if round % 25 == 0 {
            // Mix in guaranteed solutions so the "true" branch is exercised.
            let e = &catalog()[round / 25 % 22];
            let b = Bindings::exact_rationals([
                ("a", Rational::new(2, 1)),
                ("b", Rational::new(3, 1)),
            ]);
            e.specialize(&b).unwrap().matrix().clone()
        } else {
            (0..3)
                .map(|_| {
                    (0..3)
                        .map(|_| Scalar::rational(rng.gen_range(-3..=3), rng.gen_range(1..=3)))
                        .collect()
                })
                .collect()
        };
        let vanish = sys
            .vanishes_at(&sys.bind_matrix(&m).unwrap(), ZeroTest::Exact)
            .unwrap();
        let op = OperatorMatrix::new(&g, m).unwrap();
        let rb = check_rb(&g, &op, &Scalar::zero())
            .unwrap()
            .holds(ZeroTest::Exact)
            .unwrap();
        assert_eq!(vanish, rb, "round {round}");
        agree_true += usize::from(rb);
    }
    assert!(agree_true >= 20, "catalog specializations must all verify");
}

#[test]
fn specialization_follows_the_constraints() {
    let p6 = entry_by_id("P6").unwrap();
    let op = p6.specialize(&bind_a(3, 1)).unwrap();
    assert!(matrix::eq(
        op.matrix(),
        &matrix::from_ints(&[&[0, 0, 0], &[1, 0, 3], &[0, 0, 0]]),
        ZeroTest::Exact
    )
    .unwrap());

    let p7 = entry_by_id("P7").unwrap();
    let err = p7.specialize(&bind_a(0, 1)).unwrap_err();
    assert!(matches!(err, Error::ConstraintViolated(ref id, _) if id == "P7"));

    let p22 = entry_by_id("P22").unwrap();
    let ones = Bindings::exact_rationals([
        ("a", Rational::new(1, 1)),
        ("b", Rational::new(1, 1)),
    ]);
    let op = p22.specialize(&ones).unwrap();
    assert_eq!(op.entry(2, 2), &Scalar::rational(17, 4));
    assert_eq!(p22.branch_vanishes(&ones).unwrap(), Some(false));
    let split = Bindings::exact_rationals([
        ("a", Rational::new(1, 16)),
        ("b", Rational::new(1, 1)),
    ]);
    assert_eq!(p22.branch_vanishes(&split).unwrap(), Some(true));
    assert_eq!(
        entry_by_id("P1").unwrap().branch_vanishes(&no_params()).unwrap(),
        None
    );

    // Constant families specialize with an empty binding.
    let p1 = entry_by_id("P1").unwrap().specialize(&no_params()).unwrap();
    assert!(matrix::eq(
        p1.matrix(),
        &matrix::from_ints(&[&[0, 0, 0], &[0, 0, 1], &[0, 0, 0]]),
        ZeroTest::Exact
    )
    .unwrap());
}

#[test]
fn matrix_denominators_stay_inside_the_constraint_locus() {
    for e in catalog() {
        let allowed: Vec<String> = e.params.iter().map(|p| p.to_string()).collect();
        for row in &e.matrix {
            for cell in row {
                let den = cell.as_exact().unwrap().den();
                if den.is_one() {
                    continue;
                }
                assert_eq!(den.num_terms(), 1, "{}: denominator must be a monomial", e.id);
                for v in den.variables() {
                    let name = crate::scalar::vars::var_name(v);
                    assert!(
                        allowed.contains(&name),
                        "{}: denominator variable {name} lacks a constraint",
                        e.id
                    );
                }
            }
        }
    }
}

#[test]
fn scaling_preserves_the_identity() {
    let g = sl2();
    let bind = Bindings::exact_rationals([
        ("a", Rational::new(2, 1)),
        ("b", Rational::new(-1, 2)),
    ]);
    let lambdas = [
        Scalar::from_int(7),
        Scalar::rational(-1, 3),
        crate::scalar::parse_scalar("i").unwrap(),
    ];
    for e in catalog() {
        let p = e.specialize(&bind).unwrap();
        for l in &lambdas {
            let scaled = OperatorMatrix::new(&g, matrix::scale(p.matrix(), l).unwrap()).unwrap();
            assert!(check_rb(&g, &scaled, &Scalar::zero())
                .unwrap()
                .holds(ZeroTest::Exact)
                .unwrap());
        }
    }
}

#[test]
fn skew_census_in_the_orthonormal_basis() {
    let n = orthonormal_basis();
    let mut skew = Vec::new();
    for e in catalog() {
        let op = e.operator().unwrap();
        if e.index != 2 && is_skew_in_basis(&op, n, ZeroTest::Exact).unwrap() {
            skew.push(e.index);
        }
    }
    assert_eq!(skew, [10, 15, 20]);

    let s = |rows: [[&str; 3]; 3]| -> Matrix {
        rows.iter()
            .map(|r| r.iter().map(|t| parse_scalar(t).unwrap()).collect())
            .collect()
    };
    let targets = [
        (10usize, s([["0", "0", "i"], ["0", "0", "1"], ["-i", "-1", "0"]])),
        (15, s([["0", "0", "-i"], ["0", "0", "1"], ["i", "-1", "0"]])),
        (
            20,
            s([
                ["0", "a*i", "(1 - a^2)/2*i"],
                ["-a*i", "0", "-(1 + a^2)/2"],
                ["(a^2 - 1)/2*i", "(1 + a^2)/2", "0"],
            ]),
        ),
    ];
    for (idx, want) in &targets {
        let e = &catalog()[idx - 1];
        let conj = conjugate(e.operator().unwrap().matrix(), n, ZeroTest::Exact).unwrap();
        assert!(
            matrix::eq(&conj, want, ZeroTest::Exact).unwrap(),
            "conjugate of {} does not match",
            e.id
        );
    }
}

#[test]
fn ray_comparison_detects_scalar_multiples() {
    let g = sl2();
    let p1 = entry_by_id("P1").unwrap().specialize(&no_params()).unwrap();
    let scaled = OperatorMatrix::new(
        &g,
        matrix::scale(p1.matrix(), &Scalar::from_int(5)).unwrap(),
    )
    .unwrap();
    assert_eq!(
        same_ray(&p1, &scaled, ZeroTest::Exact).unwrap(),
        Some(Scalar::from_int(5))
    );

    let p2 = entry_by_id("P2").unwrap().specialize(&no_params()).unwrap();
    assert_eq!(same_ray(&p1, &p2, ZeroTest::Exact).unwrap(), None);
    assert_eq!(
        same_ray(&p2, &p2, ZeroTest::Exact).unwrap(),
        Some(Scalar::one())
    );

    let p7 = entry_by_id("P7").unwrap();
    let at2 = p7.specialize(&bind_a(2, 1)).unwrap();
    let at3 = p7.specialize(&bind_a(3, 1)).unwrap();
    assert_eq!(same_ray(&at2, &at3, ZeroTest::Exact).unwrap(), None);
}

#[test]
fn conjugation_by_automorphisms_preserves_the_identity() {
    let g = sl2();
    // e and f swap while h flips sign.
    let swap = matrix::from_ints(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, -1]]);
    // The inner automorphism exp(ad e): f goes to -e + f + h, h to -2e + h.
    let unipotent = matrix::from_ints(&[&[1, 0, 0], &[-1, 1, 1], &[-2, 0, 1]]);
    for n in [&swap, &unipotent] {
        // Both matrices define Lie algebra automorphisms of sl2.
        let moved = g
            .change_basis(n, vec!["e".into(), "f".into(), "h".into()], ZeroTest::Exact)
            .unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(moved.basis_bracket(i, j), g.basis_bracket(i, j));
            }
        }
        for id in ["P1", "P6", "P20"] {
            let e = entry_by_id(id).unwrap();
            let p = e.specialize(&bind_a(3, 1)).unwrap();
            let conj = conjugate(p.matrix(), n, ZeroTest::Exact).unwrap();
            let q = OperatorMatrix::new(&g, conj).unwrap();
            assert!(
                check_rb(&g, &q, &Scalar::zero())
                    .unwrap()
                    .holds(ZeroTest::Exact)
                    .unwrap(),
                "{id} conjugated by an automorphism must stay Rota-Baxter"
            );
        }
    }
}

#[test]
fn report_is_usable_for_debugging() {
    let g = sl2();
    // Corrupt one entry of a valid family and confirm the report localizes
    // the breakage.
    let mut m = entry_by_id("P10").unwrap().matrix.clone();
    m[2][1] = Scalar::from_int(7);
    let op = OperatorMatrix::new(&g, m).unwrap();
    let report = check_rb(&g, &op, &Scalar::zero()).unwrap();
    let failing = report.failing_pairs(ZeroTest::Exact).unwrap();
    assert!(!failing.is_empty());
    for (i, j) in &failing {
        let r = report.residual(*i, *j).unwrap();
        assert!(r.coords.iter().any(|c| !c.is_structural_zero()));
        // Residuals are honest vectors in the algebra.
        assert!(Vector::new(&g, r.coords.clone()).is_ok());
    }
}
