mod common;

use common::{
    fixture, matrix, matrix_semiring_axioms, max_plus, plain, scalar, square_triple,
    triple_loop_product, MaxPlus,
};
use minplus_core::{Matrix, TropicalScalar};
use proptest::prelude::*;

fn zero_diagonal(n: usize) -> impl Strategy<Value = Matrix> {
    matrix(n, n).prop_map(move |a| {
        Matrix::from_fn(n, n, |i, j| {
            if i == j {
                TropicalScalar::Finite(0)
            } else {
                a[(i, j)]
            }
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn min_plus_matrix_semiring((a, b, c) in square_triple(scalar())) {
        matrix_semiring_axioms(&a, &b, &c)?;
    }

    #[test]
    fn max_plus_matrix_semiring((a, b, c) in square_triple(max_plus())) {
        matrix_semiring_axioms::<MaxPlus>(&a, &b, &c)?;
    }

    #[test]
    fn mul_matches_triple_loop(
        (a, b) in (1usize..=5, 1usize..=5, 1usize..=5)
            .prop_flat_map(|(m, k, n)| (matrix(m, k), matrix(k, n)))
    ) {
        prop_assert_eq!(plain(&a.mul(&b).unwrap()), triple_loop_product(&a, &b));
    }

    #[test]
    fn power_is_a_monoid_action(a in matrix(4, 4), i in 0usize..=4, j in 0usize..=4) {
        let lhs = a.power(i + j).unwrap();
        let rhs = a.power(i).unwrap().mul(&a.power(j).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn zero_diagonal_powers_are_non_increasing(a in (1usize..=5).prop_flat_map(zero_diagonal)) {
        let mut prev = a.clone();
        for k in 2..=6 {
            let next = a.power(k).unwrap();
            for (p, q) in prev.entries().iter().zip(next.entries()) {
                prop_assert!(q <= p, "A^({k}) entry {q} above A^({}) entry {p}", k - 1);
            }
            prev = next;
        }
    }

    #[test]
    fn stabilized_power_agrees_with_power(a in (1usize..=5).prop_flat_map(zero_diagonal)) {
        let (p, at) = a.stabilized_power(64).unwrap();
        match at {
            Some(k) => {
                prop_assert_eq!(&p, &a.power(k).unwrap());
                prop_assert_eq!(&p, &a.power(k + 1).unwrap());
                if k > 1 {
                    prop_assert_ne!(&p, &a.power(k - 1).unwrap());
                }
            }
            None => prop_assert_eq!(p, a.power(64).unwrap()),
        }
    }

    #[test]
    fn scalar_mul_distributes(a in matrix(3, 3), b in matrix(3, 3), alpha in scalar()) {
        prop_assert_eq!(
            a.add(&b).unwrap().scalar_mul(alpha).unwrap(),
            a.scalar_mul(alpha).unwrap().add(&b.scalar_mul(alpha).unwrap()).unwrap()
        );
    }
}

#[test]
fn worked_powers_are_non_increasing() {
    let a = fixture("p34_A.txt");
    let mut prev = a.clone();
    for k in 2..=8 {
        let next = a.power(k).unwrap();
        assert!(prev
            .entries()
            .iter()
            .zip(next.entries())
            .all(|(p, q)| q <= p));
        prev = next;
    }
}

#[test]
fn worked_powers_stabilize_at_four() {
    let a = fixture("p34_A.txt");
    assert_eq!(a.power(2).unwrap(), fixture("p34_A2.txt"));
    assert_eq!(a.power(3).unwrap(), fixture("p34_A3.txt"));
    assert_eq!(a.power(4).unwrap(), fixture("p34_A4.txt"));
    assert_eq!(a.power(5).unwrap(), a.power(4).unwrap());
    assert_eq!(
        a.stabilized_power(10).unwrap(),
        (fixture("p34_A4.txt"), Some(4))
    );
}

#[test]
fn worked_add_mul_smul() {
    let sum = fixture("p31_A.txt").add(&fixture("p31_B.txt")).unwrap();
    assert_eq!(sum, fixture("p31_sum.txt"));
    let product = fixture("p32_A.txt").mul(&fixture("p32_B.txt")).unwrap();
    assert_eq!(product, fixture("p32_product.txt"));
    let scaled = fixture("p33_A.txt")
        .scalar_mul(TropicalScalar::Finite(-5))
        .unwrap();
    assert_eq!(scaled, fixture("p33_scaled.txt"));
}
