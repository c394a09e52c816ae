use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cybe::{check_cybe, Tensor2};
use crate::error::Error;
use crate::lie::{matrix, sl2, OperatorMatrix};
use crate::rota_baxter::{catalog, entry_by_id};
use crate::scalar::{Bindings, Rational, Scalar, ZeroTest};

use super::classes::{classify_against, parse_combination, six_dim_grid, PROOF_ROWS};
use super::*;

fn labels(n: usize) -> Vec<String> {
    (1..=n).map(|k| format!("e{k}")).collect()
}

fn zero_table(dim: usize) -> Vec<Vec<Vec<Scalar>>> {
    vec![vec![vec![Scalar::zero(); dim]; dim]; dim]
}

fn family_prelie(id: &str) -> PreLie {
    let p = entry_by_id(id).unwrap().operator().unwrap();
    prelie_from_rb(p.algebra(), &p, ZeroTest::Exact).unwrap()
}

fn family_prelie_at(id: &str, bindings: &Bindings, zt: ZeroTest) -> PreLie {
    let entry = entry_by_id(id).unwrap();
    let p = match bindings {
        Bindings::Exact(_) => entry.specialize(bindings).unwrap(),
        Bindings::Numeric(_) => entry.specialize_numeric(bindings, zt).unwrap(),
    };
    prelie_from_rb(p.algebra(), &p, zt).unwrap()
}

#[test]
fn product_tables_validate_and_reject_counterexamples() {
    assert_eq!(
        check_prelie(&zero_table(3), ZeroTest::Exact).unwrap(),
        PreLieVerdict::Holds
    );
    for cls in canonical_classes() {
        assert_eq!(
            check_prelie(&cls.prelie().c, ZeroTest::Exact).unwrap(),
            PreLieVerdict::Holds,
            "{}",
            cls.name
        );
    }

    // {e1,e1} = e2 and {e2,e1} = e1 break the identity at (e1, e2, e1):
    // the defect there is -2 e2.
    let mut bad = zero_table(2);
    bad[0][0][1] = Scalar::one();
    bad[1][0][0] = Scalar::one();
    assert_eq!(
        check_prelie(&bad, ZeroTest::Exact).unwrap(),
        PreLieVerdict::FailsAt(0, 1, 0)
    );
    assert!(matches!(
        PreLie::new(labels(2), bad, ZeroTest::Exact),
        Err(Error::NotPreLie(0, 1, 0))
    ));

    let ragged = vec![vec![vec![Scalar::zero(); 2]; 2]];
    assert!(matches!(
        check_prelie(&ragged, ZeroTest::Exact),
        Err(Error::DimensionMismatch(_))
    ));

    let mut mixed = zero_table(2);
    mixed[1][1][1] = Scalar::numeric(Complex64::new(0.0, 0.0));
    assert!(matches!(
        check_prelie(&mixed, ZeroTest::Tol(1e-12)),
        Err(Error::TagMismatch)
    ));
}

#[test]
fn rb_operators_induce_prelie_products_for_every_family() {
    for entry in catalog() {
        let p = entry.operator().unwrap();
        let g = p.algebra();
        let a = prelie_from_rb(g, &p, ZeroTest::Exact).unwrap();
        assert_eq!(a.labels(), g.labels());
        // Independent route: {b_i, -} is the adjoint action of P(b_i).
        for i in 0..3 {
            let ad = g.ad(p.apply_basis(i)).unwrap();
            for j in 0..3 {
                for k in 0..3 {
                    assert!(
                        ZeroTest::Exact
                            .eq(a.product_constant(i, j, k), &ad[k][j])
                            .unwrap(),
                        "{} at ({i}, {j}, {k})",
                        entry.id
                    );
                }
            }
        }
    }

    let id_op = OperatorMatrix::new(&sl2(), matrix::identity(3)).unwrap();
    assert!(matches!(
        prelie_from_rb(&sl2(), &id_op, ZeroTest::Exact),
        Err(Error::NotRotaBaxter(0, 1))
    ));
}

#[test]
fn subadjacent_brackets_are_commutators() {
    // The operator fixing h and killing e, f: {h,-} = [h,-] and the rest
    // vanishes, so the commutator algebra has [h,e] = 2e, [h,f] = -2f,
    // [e,f] = 0.
    let g = subadjacent(&family_prelie("P4"), ZeroTest::Exact).unwrap();
    let id3 = matrix::identity(3);
    let two_e = vec![Scalar::from_int(2), Scalar::zero(), Scalar::zero()];
    let minus_two_f = vec![Scalar::zero(), Scalar::from_int(-2), Scalar::zero()];
    assert_eq!(g.bracket_coords(&id3[2], &id3[0]).unwrap(), two_e);
    assert_eq!(g.bracket_coords(&id3[2], &id3[1]).unwrap(), minus_two_f);
    assert_eq!(
        g.bracket_coords(&id3[0], &id3[1]).unwrap(),
        vec![Scalar::zero(); 3]
    );

    let abelian = subadjacent(canonical_class(ClassName::Trivial).prelie(), ZeroTest::Exact)
        .unwrap();
    for i in 0..3 {
        for j in 0..3 {
            assert_eq!(
                abelian.bracket_coords(&id3[i], &id3[j]).unwrap(),
                vec![Scalar::zero(); 3]
            );
        }
    }

    // On random vectors the bracket and the commutator of products agree.
    let a = canonical_class(ClassName::D1Bar8).prelie();
    let g = subadjacent(a, ZeroTest::Exact).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5C12_000B);
    let mut vec3 = |rng: &mut ChaCha8Rng| -> Vec<Scalar> {
        (0..3).map(|_| Scalar::from_int(rng.gen_range(-3..=3))).collect()
    };
    for _ in 0..20 {
        let x = vec3(&mut rng);
        let y = vec3(&mut rng);
        let lhs = g.bracket_coords(&x, &y).unwrap();
        let xy = a.product_coords(&x, &y).unwrap();
        let yx = a.product_coords(&y, &x).unwrap();
        for k in 0..3 {
            let rhs = xy[k].sub(&yx[k]).unwrap();
            assert!(ZeroTest::Exact.eq(&lhs[k], &rhs).unwrap());
        }
    }
}

#[test]
fn left_multiplication_satisfies_the_commutation_law() {
    for entry in catalog() {
        let p = entry.operator().unwrap();
        let a = prelie_from_rb(p.algebra(), &p, ZeroTest::Exact).unwrap();
        left_mult_rep(&a, ZeroTest::Exact).unwrap();
    }
    for cls in canonical_classes() {
        let rep = left_mult_rep(cls.prelie(), ZeroTest::Exact).unwrap();
        match cls.name {
            ClassName::Trivial => {
                for i in 0..3 {
                    assert_eq!(rep.matrix(i), &matrix::zeros(3, 3));
                }
            }
            ClassName::D1Bar8 => {
                assert_eq!(
                    rep.matrix(1),
                    &matrix::from_ints(&[&[0, 1, 0], &[0, 0, -1], &[0, 0, 0]])
                );
            }
            _ => {}
        }
    }

    // A table smuggled past validation: {e1,e2} = e1 alone fails the
    // identity, its commutator algebra is still Lie, and the failure
    // surfaces as a representation-law violation.
    let mut c = zero_table(2);
    c[0][1][0] = Scalar::one();
    let rogue = PreLie {
        labels: labels(2),
        c,
    };
    assert!(matches!(
        left_mult_rep(&rogue, ZeroTest::Exact),
        Err(Error::RepresentationLawViolated(0, 1))
    ));

    // A table whose commutators break the Jacobi identity is rejected a
    // step earlier, when the subadjacent algebra is built.
    let mut c = zero_table(3);
    c[0][1][2] = Scalar::one();
    c[0][2][2] = Scalar::one();
    c[1][2][1] = Scalar::one();
    let rogue = PreLie {
        labels: labels(3),
        c,
    };
    assert!(matches!(
        subadjacent(&rogue, ZeroTest::Exact),
        Err(Error::NotLieAlgebra(_))
    ));
}

fn strings(rows: &[[&str; 3]; 3]) -> Vec<Vec<String>> {
    rows.iter()
        .map(|r| r.iter().map(|s| s.to_string()).collect())
        .collect()
}

#[test]
fn basis_changes_reproduce_the_recorded_normal_forms() {
    let a4 = family_prelie("P4");
    let n4 = proof_basis("P4", None, None).unwrap();
    assert_eq!(
        characteristic_matrix_prelie(&a4, &n4, ZeroTest::Exact).unwrap(),
        strings(&[["0", "0", "0"], ["0", "0", "0"], ["e1", "-e2", "0"]])
    );

    let a10 = family_prelie("P10");
    let n10 = proof_basis("P10", None, None).unwrap();
    assert_eq!(
        characteristic_matrix_prelie(&a10, &n10, ZeroTest::Exact).unwrap(),
        strings(&[["0", "0", "0"], ["0", "e1", "-e2"], ["e1", "0", "-e3"]])
    );

    let a2 = family_prelie("P2");
    assert_eq!(
        characteristic_matrix_prelie(&a2, &matrix::identity(3), ZeroTest::Exact).unwrap(),
        strings(&[["0", "0", "0"], ["0", "0", "0"], ["0", "0", "0"]])
    );

    let mut singular = matrix::identity(3);
    singular[2] = vec![Scalar::zero(); 3];
    assert!(matches!(
        a4.change_basis(&singular, labels(3), ZeroTest::Exact),
        Err(Error::SingularBasis)
    ));
}

#[test]
fn every_family_classifies_to_its_recorded_class() {
    for row in &PROOF_ROWS {
        // The two rows that need a bound parameter before their radicals
        // make sense are covered by the sampling test.
        if row.id == "P7" || row.on_locus == Some(true) {
            continue;
        }
        if row.id == "P17" {
            // The recorded P17 row lands on (-e1, e2, 0) instead of
            // (e1, -e2, 0): its third vector carries a dropped sign. The
            // mismatch is pinned here and the claim itself is verified
            // through the corrected basis.
            match classify("P17", None, ZeroTest::Exact) {
                Err(Error::ClassMismatch { id, expected, i, j }) => {
                    assert_eq!(id, "P17");
                    assert_eq!(expected, "(D_{-1}-1)");
                    assert_eq!((i, j), (2, 0));
                }
                other => panic!("expected the recorded mismatch, got {other:?}"),
            }
            let a = family_prelie("P17");
            let n = corrected_proof_basis("P17", None, None).unwrap();
            assert_eq!(
                classify_against(&a, &n, "P17", ClassName::DNeg11, ZeroTest::Exact).unwrap(),
                ClassName::DNeg11
            );
            continue;
        }
        assert_eq!(
            classify(row.id, None, ZeroTest::Exact).unwrap(),
            row.class,
            "{}",
            row.id
        );
    }
}

#[test]
fn radical_rows_classify_at_sampled_and_perfect_square_points() {
    // Exact points: a perfect-square radicand collapses to a rational, any
    // other rational stays a formal square root; both must classify.
    for a in [Rational::new(4, 1), Rational::new(7, 1)] {
        let b = Bindings::exact_rationals([("a", a)]);
        assert_eq!(
            classify("P7", Some(&b), ZeroTest::Exact).unwrap(),
            ClassName::DNeg11
        );
    }
    let b = Bindings::exact_rationals([("a", Rational::new(3, 1))]);
    assert_eq!(
        classify("P20", Some(&b), ZeroTest::Exact).unwrap(),
        ClassName::D1Bar8
    );
    // On the branch locus the recorded rows land exactly at b = 1 only;
    // elsewhere {e2, e1} comes out as -b e3, so the recorded mismatch is
    // pinned and the claim verified through the corrected basis.
    let b1 = Bindings::exact_rationals([
        ("a", Rational::new(1, 16)),
        ("b", Rational::new(1, 1)),
    ]);
    assert_eq!(
        classify("P22", Some(&b1), ZeroTest::Exact).unwrap(),
        ClassName::H6
    );
    for (a, bv) in [((1, 1024), (4, 1)), ((1, 432), (3, 1))] {
        let b = Bindings::exact_rationals([
            ("a", Rational::new(a.0, a.1)),
            ("b", Rational::new(bv.0, bv.1)),
        ]);
        match classify("P22", Some(&b), ZeroTest::Exact) {
            Err(Error::ClassMismatch { id, expected, i, j }) => {
                assert_eq!(id, "P22");
                assert_eq!(expected, "(H-6)");
                assert_eq!((i, j), (1, 0));
            }
            other => panic!("expected the recorded mismatch, got {other:?}"),
        }
        let alg = family_prelie_at("P22", &b, ZeroTest::Exact);
        let n = corrected_proof_basis("P22", Some(true), Some(&b)).unwrap();
        assert_eq!(
            classify_against(&alg, &n, "P22", ClassName::H6, ZeroTest::Exact).unwrap(),
            ClassName::H6,
            "corrected basis at b = {}/{}",
            bv.0,
            bv.1
        );
    }

    let tol = ZeroTest::Tol(1e-9);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5C12_000C);
    let mut sample = |rng: &mut ChaCha8Rng| {
        Complex64::new(rng.gen_range(0.6..1.8), rng.gen_range(-0.5..0.5))
    };
    for _ in 0..5 {
        let b = Bindings::numeric_from([("a", sample(&mut rng))]);
        assert_eq!(classify("P7", Some(&b), tol).unwrap(), ClassName::DNeg11);

        let b = Bindings::numeric_from([("a", sample(&mut rng))]);
        assert_eq!(classify("P20", Some(&b), tol).unwrap(), ClassName::D1Bar8);

        let bv = sample(&mut rng);
        let av = Complex64::new(1.0, 0.0) / (16.0 * bv * bv * bv);
        let b = Bindings::numeric_from([("a", av), ("b", bv)]);
        let alg = family_prelie_at("P22", &b, tol);
        let n = corrected_proof_basis("P22", Some(true), Some(&b)).unwrap();
        assert_eq!(
            classify_against(&alg, &n, "P22", ClassName::H6, tol).unwrap(),
            ClassName::H6
        );
    }
    // One verbatim numeric sample still reports the recorded defect.
    let bv = Complex64::new(1.4, 0.2);
    let av = Complex64::new(1.0, 0.0) / (16.0 * bv * bv * bv);
    let b = Bindings::numeric_from([("a", av), ("b", bv)]);
    assert!(matches!(
        classify("P22", Some(&b), tol),
        Err(Error::ClassMismatch { i: 1, j: 0, .. })
    ));

    // Off the locus the same family lands in the generic class.
    let b = Bindings::numeric_from([
        ("a", Complex64::new(1.9, 0.3)),
        ("b", Complex64::new(0.9, -0.2)),
    ]);
    assert_eq!(classify("P22", Some(&b), tol).unwrap(), ClassName::N1Neg1);
}

#[test]
fn classification_mismatches_are_reported_verbatim() {
    let a4 = family_prelie("P4");
    let n4 = proof_basis("P4", None, None).unwrap();
    match classify_against(&a4, &n4, "P4", ClassName::H6, ZeroTest::Exact) {
        Err(Error::ClassMismatch { id, expected, i, j }) => {
            assert_eq!(id, "P4");
            assert_eq!(expected, "(H-6)");
            assert_eq!((i, j), (1, 0));
        }
        other => panic!("expected a class mismatch, got {other:?}"),
    }

    let a = canonical_class(ClassName::DNeg11).prelie();
    match classify_against(
        a,
        &matrix::identity(3),
        "table",
        ClassName::N1Neg1,
        ZeroTest::Exact,
    ) {
        Err(Error::ClassMismatch { i, j, .. }) => assert_eq!((i, j), (2, 0)),
        other => panic!("expected a class mismatch, got {other:?}"),
    }
}

#[test]
fn canonical_tensor_solves_the_equation_on_every_double() {
    let dual_labels = ["e1", "e2", "e3", "e1*", "e2*", "e3*"];
    for cls in canonical_classes() {
        let r = canonical_r(cls.prelie(), ZeroTest::Exact).unwrap();
        assert!(r.is_skew(ZeroTest::Exact).unwrap());
        assert!(
            check_cybe(&r, ZeroTest::Exact).unwrap().holds(),
            "{}",
            cls.name
        );
        let got: Vec<&str> = r.algebra().labels().iter().map(String::as_str).collect();
        assert_eq!(got, dual_labels);
    }
    // Doubles of operator-induced products, including a parametric one.
    for id in ["P4", "P10", "P6"] {
        let r = canonical_r(&family_prelie(id), ZeroTest::Exact).unwrap();
        assert!(check_cybe(&r, ZeroTest::Exact).unwrap().holds(), "{id}");
    }
}

#[test]
fn six_dimensional_tables_match_except_two_recorded_slots() {
    let checks = five_algebras().unwrap();
    let order: Vec<ClassName> = checks.iter().map(|c| c.class).collect();
    assert_eq!(
        order,
        vec![
            ClassName::N1Neg1,
            ClassName::H6,
            ClassName::DNeg11,
            ClassName::E6,
            ClassName::D1Bar8,
        ]
    );

    for check in &checks {
        if check.class == ClassName::E6 {
            // Two recorded entries disagree with the computed bracket: the
            // table prints e2* where [e2,e2*] and [e3,e2*] both come out
            // as e3*. Reported, not corrected.
            assert_eq!(check.mismatches, vec![(4, 1), (4, 2)]);
            match check.verdict() {
                Err(Error::MatrixMismatch { id, entries }) => {
                    assert_eq!(id, "(E-6)");
                    assert_eq!(entries, vec![(4, 1), (4, 2)]);
                }
                other => panic!("expected a matrix mismatch, got {other:?}"),
            }
            let computed = check.algebra.characteristic_matrix();
            assert_eq!(computed[1][4].to_string(), "e3*");
            assert_eq!(computed[2][4].to_string(), "e3*");
        } else {
            assert!(check.mismatches.is_empty(), "{}", check.class);
            assert!(check.verdict().is_ok());
        }

        // The recorded grids are antisymmetric with zero diagonals, typos
        // included, so the transposed-slot reading is self-consistent.
        let grid = six_dim_grid(check.class).unwrap();
        let lbls = check.algebra.labels();
        for i in 0..6 {
            assert_eq!(grid[i][i], "0");
            for j in 0..6 {
                let x = parse_combination(grid[i][j], lbls).unwrap();
                let y = parse_combination(grid[j][i], lbls).unwrap();
                for k in 0..6 {
                    let s = x[k].add(&y[k]).unwrap();
                    assert!(ZeroTest::Exact.is_zero(&s).unwrap());
                }
            }
        }

        // Each constructed double carries the canonical solution.
        let mut terms = Vec::new();
        for i in 0..3 {
            terms.push(((i, i + 3), Scalar::one()));
            terms.push(((i + 3, i), Scalar::one().neg()));
        }
        let r = Tensor2::new(&check.algebra, terms).unwrap();
        assert!(
            check_cybe(&r, ZeroTest::Exact).unwrap().holds(),
            "{}",
            check.class
        );
    }
}
