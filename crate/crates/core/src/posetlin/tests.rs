use super::*;
use crate::graphs::EdgeSet;
use crate::{int, rat};

fn poly(c: &[i64]) -> RationalPoly {
    RationalPoly::from_integers(c)
}

fn idx(p: &SubgraphPoset, edges: &[(usize, usize)]) -> usize {
    p.index_of(&EdgeSet::from_edges(p.v(), edges).unwrap())
        .unwrap()
}

struct V4 {
    p: SubgraphPoset,
    empty: usize,
    tri: usize,
    c4: usize,
    k4e: usize,
    k4: usize,
}

fn v4() -> V4 {
    let p = SubgraphPoset::enumerate(4).unwrap();
    V4 {
        empty: 0,
        tri: idx(&p, &[(0, 1), (0, 2), (1, 2)]),
        c4: idx(&p, &[(0, 1), (1, 2), (2, 3), (0, 3)]),
        k4e: idx(&p, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
        k4: p.len() - 1,
        p,
    }
}

#[test]
fn zeta_examples() {
    let p3 = SubgraphPoset::enumerate(3).unwrap();
    let z = zeta_matrix(&p3);
    assert_eq!(z.row(0), &[poly(&[1]), poly(&[])]);
    assert_eq!(z.row(1), &[poly(&[1]), poly(&[1])]);

    let V4 { p, k4, .. } = v4();
    let z = zeta_matrix(&p);
    let sum: usize = z.row(k4).iter().filter(|x| !x.is_zero()).count();
    assert_eq!(sum, 15);
    for i in 0..p.len() {
        assert_eq!(z.get(i, i), &poly(&[1]));
    }
    assert!(z.is_lower_triangular());
}

#[test]
fn mobius_examples() {
    let p3 = SubgraphPoset::enumerate(3).unwrap();
    assert_eq!(PosetAlgebra::new(&p3).mobius(0, 1), -1);

    let V4 {
        p,
        empty,
        tri,
        k4e,
        k4,
        c4,
    } = v4();
    let alg = PosetAlgebra::new(&p);
    assert_eq!(alg.mobius(empty, k4), -6);
    assert_eq!(alg.mobius(tri, k4), 2);
    assert_eq!(alg.mobius(empty, k4e), 2);
    assert_eq!(alg.mobius(c4, k4), 1);
    assert_eq!(alg.mobius(tri, c4), 0);
}

#[test]
fn zeta_times_mobius_is_identity() {
    for v in 2..=5 {
        let alg = PosetAlgebra::new(&SubgraphPoset::enumerate(v).unwrap());
        let prod = alg.zeta_integers().mul(&alg.mobius_integers()).unwrap();
        assert!(prod.is_identity(), "v={v}");
        let prod = alg.mobius_integers().mul(&alg.zeta_integers()).unwrap();
        assert!(prod.is_identity(), "v={v}");
    }
}

#[test]
fn j_examples() {
    let p3 = SubgraphPoset::enumerate(3).unwrap();
    assert_eq!(j_matrix(&p3).get(1, 0), &poly(&[0, 0, 0, 1]));

    let V4 { p, tri, k4, .. } = v4();
    let alg = PosetAlgebra::new(&p);
    assert_eq!(alg.j_matrix().get(k4, tri), &poly(&[0, 0, 0, 1]));
    assert!(alg.j_matrix_at(&int(0)).is_identity());
    assert!(alg.j_matrix().mul(&alg.j_inverse()).unwrap().is_identity());
    // J_r = r^e j r^{-e} at a sample point
    let r = rat(2, 7);
    let w = evaluate(&alg.weight_matrix(), &r);
    let w_inv = evaluate(&alg.weight_matrix(), &(Rational::one() / &r));
    let conj = w.mul(&alg.zeta_integers()).unwrap().mul(&w_inv).unwrap();
    assert_eq!(conj, alg.j_matrix_at(&r));
}

#[test]
fn m_v3_matches_two_by_two() {
    let m = m_matrix(&SubgraphPoset::enumerate(3).unwrap()).unwrap();
    assert_eq!(m.row(0), &[poly(&[1]), poly(&[])]);
    assert_eq!(m.row(1), &[poly(&[1, -3, 3]), poly(&[-1])]);
    let paper_order = m.reversed();
    assert_eq!(paper_order.row(0), &[poly(&[-1]), poly(&[1, -3, 3])]);
    assert_eq!(paper_order.row(1), &[poly(&[]), poly(&[1])]);
}

#[test]
fn m_v4_entries() {
    let V4 {
        p,
        empty,
        tri,
        c4,
        k4e,
        k4,
    } = v4();
    let m = m_matrix(&p).unwrap();
    assert_eq!(m.get(k4, empty), &poly(&[1, -6, 15, -16]));
    assert_eq!(m.get(c4, empty), &poly(&[1, -4, 6, -4]));
    assert_eq!(m.get(k4, tri), &poly(&[-1, 3]));
    assert_eq!(m.get(k4e, empty), &poly(&[1, -5, 10, -8]));
    assert_eq!(m.get(k4, k4e), &poly(&[-1]));
    assert_eq!(m.get(k4, c4), &poly(&[1]));
    assert_eq!(m.get(tri, empty), &poly(&[1, -3, 3]));
}

#[test]
fn evaluation_examples() {
    let V4 { p, k4, .. } = v4();
    let alg = PosetAlgebra::new(&p);
    let m = alg.m_matrix().unwrap();
    let at0 = evaluate(&m, &int(0));
    assert_eq!(at0, alg.j_matrix_at(&int(1)).mul(&alg.sign_at()).unwrap());
    let ones = alloc::vec![int(1); p.len()];
    assert_eq!(evaluate(&m, &rat(1, 2)).apply(&ones).unwrap()[0], int(1));
    let at1 = evaluate(&m, &int(1));
    let row: Rational = at1.row(k4).iter().sum();
    assert_eq!(row, int(0));

    let p3 = SubgraphPoset::enumerate(3).unwrap();
    let at1 = evaluate(&m_matrix(&p3).unwrap(), &int(1));
    assert_eq!(at1.row(1).iter().sum::<Rational>(), int(0));
}

#[test]
fn m_symbolic_involution_up_to_v4() {
    for v in 2..=4 {
        let m = m_matrix(&SubgraphPoset::enumerate(v).unwrap()).unwrap();
        assert!(m.mul(&reflect(&m)).unwrap().is_identity(), "v={v}");
    }
}

#[test]
fn evaluated_m_agrees_with_symbolic_and_vector_action() {
    let alg = PosetAlgebra::new(&v4().p);
    let m = alg.m_matrix().unwrap();
    let x: Vec<Rational> = (0..alg.len()).map(|i| rat(i as i64 + 1, 3)).collect();
    for r in [rat(0, 1), rat(1, 3), rat(-5, 2), rat(7, 4)] {
        let at = alg.m_matrix_at(&r).unwrap();
        assert_eq!(at, evaluate(&m, &r));
        assert_eq!(at.apply(&x).unwrap(), alg.apply_m(&r, &x));
        assert_eq!(
            alg.j_inverse_at(&r).apply(&x).unwrap(),
            alg.apply_j_inverse(&r, &x)
        );
    }
}

#[test]
fn row_sums_and_first_row() {
    for v in 2..=5 {
        let p = SubgraphPoset::enumerate(v).unwrap();
        let alg = PosetAlgebra::new(&p);
        let at1 = alg.m_matrix_at(&int(1)).unwrap();
        for h in 0..p.len() {
            let s: Rational = at1.row(h).iter().sum();
            assert_eq!(s, if h == 0 { int(1) } else { int(0) }, "v={v} row {h}");
        }
        let m = alg.m_matrix_at(&rat(3, 11)).unwrap();
        assert_eq!(m.get(0, 0), &int(1));
        assert!((1..p.len()).all(|h| m.get(0, h).is_zero()));
    }
}

#[test]
fn bottom_column_has_unit_constant_term_and_bounded_degree() {
    let V4 { p, tri, c4, k4, .. } = v4();
    let m = m_matrix(&p).unwrap();
    for e in [tri, c4, k4] {
        let entry = m.get(e, 0);
        assert_eq!(entry.coeff(0), int(1));
        assert!(entry.degree().unwrap() <= p.member(e).len());
    }
}
