use exactnum::Scalar;
use kaluza::{reduce_form, reduce_group};
use liealg::{canonical_three_form, so12_so3};
use multilinear::{mask_indices, KForm};
use proptest::prelude::*;

fn form(dim: usize, degree: usize, coeffs: &[i64]) -> KForm<Scalar> {
    let terms: Vec<(Vec<usize>, Scalar)> = (0u16..(1 << dim))
        .filter(|m| m.count_ones() as usize == degree)
        .zip(coeffs.iter().cycle())
        .map(|(m, &c)| (mask_indices(m), Scalar::from(c)))
        .collect();
    KForm::from_terms(dim, degree, terms)
}

proptest! {
    #[test]
    fn round_trip_and_horizontality(
        degree in 1usize..5,
        coeffs in prop::collection::vec(-3i64..=3, 10),
        xi in prop::collection::vec(-2i64..=2, 5),
        a in prop::collection::vec(-2i64..=2, 5),
    ) {
        let xi: Vec<Scalar> = xi.into_iter().map(Scalar::from).collect();
        let pivot = xi.iter().position(|c| !c.is_zero());
        prop_assume!(pivot.is_some());
        let p = pivot.unwrap();
        // α = a − (a(ξ) − 1)/ξ_p e^p, so that α(ξ) = 1
        let mut a: Vec<Scalar> = a.into_iter().map(Scalar::from).collect();
        let ax: Scalar = a.iter().zip(&xi).map(|(x, y)| x * y).sum();
        a[p] = &a[p] - &(&(&ax - &Scalar::one()) / &xi[p]);
        let alpha = KForm::one_form(a);
        let f = form(5, degree, &coeffs);
        let r = reduce_form(&f, &alpha, &xi).unwrap();
        prop_assert_eq!(r.reassemble(&alpha), f);
        prop_assert!(r.is_horizontal(&xi));
    }

    #[test]
    fn so12_so3_reductions_along_irrational_units(x in prop::collection::vec(-2i64..=2, 6)) {
        let g = so12_so3(&Scalar::one(), &Scalar::one()).unwrap();
        let x: Vec<Scalar> = x.into_iter().map(Scalar::from).collect();
        prop_assume!(g.pair(&x, &x).is_positive());
        let r = reduce_group(&g, &canonical_three_form(&g).unwrap().neg(), &x).unwrap();
        prop_assert!(r.passed(), "{}", r.report);
    }
}
