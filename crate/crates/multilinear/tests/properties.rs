use exactnum::Scalar;
use multilinear::{kulkarni_nomizu, plucker_check, KForm, QuadraticSpace};
use nalgebra::DMatrix;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..(1 << n))
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m & (1 << i) != 0).collect())
        .collect()
}

fn random_form(rng: &mut ChaCha8Rng, n: usize, k: usize, density: f64) -> KForm<Scalar> {
    let mut f = KForm::zero(n, k);
    for idx in subsets(n, k) {
        if rng.gen_bool(density) {
            let c = Scalar::from(rng.gen_range(-3i64..=3));
            f = f.add(&KForm::basis(n, &idx).scale(&c));
        }
    }
    f
}

fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> Vec<Scalar> {
    (0..n).map(|_| Scalar::from(rng.gen_range(-2i64..=2))).collect()
}

fn spaces() -> Vec<QuadraticSpace> {
    vec![
        QuadraticSpace::euclidean(5),
        QuadraticSpace::minkowski(5),
        QuadraticSpace::pseudo_euclidean(2, 3),
        QuadraticSpace::lightcone(3),
        QuadraticSpace::diagonal(&[Scalar::from(-2), Scalar::from(3), Scalar::ratio(1, 2), Scalar::from(8), Scalar::from(1)])
            .unwrap(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn interior_is_antiderivation(seed in any::<u64>(), ka in 0usize..4, kb in 0usize..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = 6;
        let a = random_form(&mut rng, n, ka, 0.4);
        let b = random_form(&mut rng, n, kb, 0.4);
        let v = random_vector(&mut rng, n);
        let lhs = a.wedge(&b).interior_scalar(&v);
        let sign = if ka % 2 == 0 { Scalar::one() } else { Scalar::from(-1) };
        let rhs = a.interior_scalar(&v).wedge(&b).add(&a.wedge(&b.interior_scalar(&v)).scale(&sign));
        prop_assert_eq!(lhs, rhs);
        prop_assert!(a.interior_scalar(&v).interior_scalar(&v).is_zero());
    }

    #[test]
    fn wedge_adjoint_to_interior(seed in any::<u64>(), which in 0usize..5, k in 0usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let space = &spaces()[which];
        let n = space.dim();
        let a = random_form(&mut rng, n, k + 1, 0.5);
        let b = random_form(&mut rng, n, 1, 0.7);
        let c = random_form(&mut rng, n, k, 0.5);
        let lhs = a.inner(&b.wedge(&c), space).unwrap();
        let rhs = a.interior_scalar(&space.sharp(&b)).inner(&c, space).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn kulkarni_nomizu_symmetries(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = 4;
        let mut k = vec![vec![Scalar::zero(); n]; n];
        for i in 0..n {
            for j in i..n {
                let x = Scalar::from(rng.gen_range(-4i64..=4));
                k[i][j] = x.clone();
                k[j][i] = x;
            }
        }
        let g = QuadraticSpace::minkowski(n).metric().to_vec();
        let t = kulkarni_nomizu(&g, &k);
        prop_assert_eq!(t.symmetry_violation(), None);
    }
}

#[test]
fn hodge_involution_sign_law() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 1..=13usize {
        for t in 0..=2usize.min(n) {
            let space = QuadraticSpace::pseudo_euclidean(t, n - t);
            for k in 0..=n {
                let density = (6.0 / subsets(n, k).len() as f64).min(1.0);
                let mut a = random_form(&mut rng, n, k, density);
                if a.is_zero() {
                    a = KForm::basis(n, &(0..k).collect::<Vec<_>>());
                }
                let exponent = k * (n - k) + t;
                let sign = if exponent % 2 == 0 { Scalar::one() } else { Scalar::from(-1) };
                assert_eq!(a.hodge(&space).hodge(&space), a.scale(&sign), "n={n} t={t} k={k}");
            }
        }
    }
}

#[test]
fn hodge_sign_law_lightcone_frame() {
    let space = QuadraticSpace::lightcone(9);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for k in 0..=11usize {
        let a = random_form(&mut rng, 11, k, (8.0 / subsets(11, k).len() as f64).min(1.0));
        let sign = if (k * (11 - k) + 1) % 2 == 0 { Scalar::one() } else { Scalar::from(-1) };
        assert_eq!(a.hodge(&space).hodge(&space), a.scale(&sign));
    }
}

/// Rank of the span of all triple contractions `ι_u ι_v ι_w F`, in floating
/// point via SVD.
fn contraction_rank(f: &KForm<Scalar>) -> usize {
    let n = f.dim();
    let triples = subsets(n, 3);
    let mut data = Vec::new();
    for t in &triples {
        let one = f.interior_basis(t[0]).interior_basis(t[1]).interior_basis(t[2]);
        for i in 0..n {
            data.push(one.get(&[i]).to_f64());
        }
    }
    let m = DMatrix::from_row_slice(triples.len(), n, &data);
    m.rank(1e-9)
}

#[test]
fn plucker_matches_rank_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut decomposable = 0usize;
    let samples = 10_000;
    for s in 0..samples {
        let n = rng.gen_range(4..=8usize);
        let f = if s % 3 == 0 {
            let mut acc = KForm::constant(n, Scalar::one());
            for _ in 0..4 {
                let v: Vec<Scalar> = (0..n).map(|_| Scalar::from(rng.gen_range(-1i64..=1))).collect();
                acc = acc.wedge(&KForm::one_form(v));
            }
            acc
        } else {
            let terms = rng.gen_range(1..=4usize);
            let all = subsets(n, 4);
            let mut acc = KForm::zero(n, 4);
            for _ in 0..terms {
                let idx = &all[rng.gen_range(0..all.len())];
                let c = Scalar::from(if rng.gen_bool(0.5) { 1 } else { -1 });
                acc = acc.add(&KForm::basis(n, idx).scale(&c));
            }
            acc
        };
        let exact = plucker_check(&f).unwrap().is_decomposable();
        let oracle = contraction_rank(&f) <= 4;
        assert_eq!(exact, oracle, "disagreement on {f:?}");
        decomposable += exact as usize;
    }
    assert!(decomposable > 1000 && decomposable < samples - 1000, "unbalanced sample: {decomposable}");
}
