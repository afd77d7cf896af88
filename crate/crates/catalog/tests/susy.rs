use catalog::expr::{eval, Bindings};
use catalog::{realize, susy_count, CatalogError, DilatonChoice, GeometryProduct};
use exactnum::Scalar;
use proptest::prelude::*;
use sugra::{constant_form, dilatino_kernel, verify_typeii_common};

fn accepted() -> Vec<GeometryProduct> {
    catalog::enumerate_parallelisable(10)
        .into_iter()
        .filter(|g| catalog::solve_dilaton(g).unwrap().accepted().is_some())
        .collect()
}

#[test]
fn both_torsion_signs_give_the_same_counts() {
    for g in accepted() {
        let mut b = realize(&g, DilatonChoice::Nonconstant).unwrap();
        let before = dilatino_kernel(&b).unwrap();
        let h = constant_form(&b.fluxes["H3"]).unwrap().neg();
        b = b.with_constant_flux("H3", &h);
        assert!(verify_typeii_common(&b).unwrap().passed(), "{}", g.name());
        assert_eq!(dilatino_kernel(&b).unwrap(), before, "{}", g.name());
    }
}

#[test]
fn realized_backgrounds_solve_the_equations() {
    for g in accepted() {
        for choice in [DilatonChoice::Constant, DilatonChoice::Nonconstant] {
            match susy_count(&g, choice) {
                Ok(c) => assert!(c.equations.passed(), "{}: {}", g.name(), c.equations),
                Err(CatalogError::NoConstantDilaton(_)) => assert_eq!(choice, DilatonChoice::Constant),
                Err(e) => panic!("{}: {e}", g.name()),
            }
        }
    }
}

#[test]
fn dilaton_slope_off_the_balance_fails() {
    let g = GeometryProduct::parse("AdS3 x S3 x S3 x E").unwrap();
    let mut b = realize(&g, DilatonChoice::Constant).unwrap();
    let y = b.geometry.dim() - 1;
    b.dilaton.as_mut().unwrap().gradient[y] = Scalar::one();
    let r = verify_typeii_common(&b).unwrap();
    let w = r.failures().find(|c| c.name.starts_with("|dphi|^2")).and_then(|c| c.witness.clone()).unwrap();
    assert_eq!(w, "|dphi|^2 - 1/4 |H|^2 = 1");
    assert_eq!(dilatino_kernel(&b).unwrap().iia, 0);
}

#[test]
fn non_backgrounds_cannot_be_realized() {
    for name in ["AdS3 x S7", "AdS3 x E^7", "CW4(A) x S3 x S3", "E^{1,0} x S3 x S3 x S3"] {
        let g = GeometryProduct::parse(name).unwrap();
        assert!(matches!(realize(&g, DilatonChoice::Nonconstant), Err(CatalogError::NotABackground(_))), "{name}");
    }
}

proptest! {
    #[test]
    fn expressions_agree_with_exact_arithmetic(a in -50i64..50, b in 1i64..30, c in -20i64..20, k in 0u32..4) {
        let params: Bindings = [("x".to_string(), Scalar::from(c))].into_iter().collect();
        let text = format!("{a}/{b} - x^{k} * (1 + {b})");
        let expected = &Scalar::ratio(a, b) - &(&Scalar::from(c).pow(k) * &Scalar::from(1 + b));
        prop_assert_eq!(eval(&text, &params).unwrap(), expected);
    }

    #[test]
    fn geometry_names_round_trip(i in 0usize..17) {
        let g = &catalog::enumerate_parallelisable(10)[i];
        prop_assert_eq!(&GeometryProduct::parse(&g.name()).unwrap(), g);
    }
}
