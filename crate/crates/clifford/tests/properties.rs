use clifford::{build_gamma, kernel, FrameClifford, SpinMatrix};
use exactnum::Scalar;
use multilinear::KForm;
use nalgebra::DMatrix;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn diag_metric(entries: &[i64]) -> Vec<Vec<Scalar>> {
    let n = entries.len();
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Scalar::from(entries[i]) } else { Scalar::zero() }).collect())
        .collect()
}

fn lightcone_metric(n: usize) -> Vec<Vec<Scalar>> {
    let mut g = diag_metric(&vec![1; n]);
    g[0][0] = Scalar::zero();
    g[1][1] = Scalar::zero();
    g[0][1] = Scalar::one();
    g[1][0] = Scalar::one();
    g
}

fn to_float(m: &SpinMatrix<Scalar>) -> DMatrix<f64> {
    let n = m.size();
    let mut out = DMatrix::zeros(n, n);
    for (i, j, x) in m.entries() {
        out[(i, j)] = x.to_f64();
    }
    out
}

fn float_rank(rows: &DMatrix<f64>) -> usize {
    let svd = rows.clone().svd(false, false);
    svd.singular_values.iter().filter(|&&s| s > 1e-9).count()
}

#[test]
fn clifford_relations_all_signatures() {
    for (t, s) in [(1, 10), (1, 9), (1, 5), (0, 1), (0, 2), (0, 3), (0, 7)] {
        let rep = build_gamma(t, s).unwrap();
        for a in 0..t + s {
            for b in 0..t + s {
                let ac = rep.gamma(a).anticommutator(rep.gamma(b));
                let expected = if a == b { Scalar::from(2 * rep.eta(a)) } else { Scalar::zero() };
                assert!(ac.is_multiple_of_identity(&expected), "({t},{s}) a={a} b={b}");
            }
        }
    }
}

#[test]
fn pairing_sign_is_recorded() {
    for (t, s) in [(1, 10), (1, 9), (1, 5)] {
        let rep = build_gamma(t, s).unwrap();
        let sigma = rep.pairing_sign().expect("γ₀ pairing must have a definite sign");
        assert_eq!(sigma, -1);
        let mut rng = ChaCha8Rng::seed_from_u64(7 + s as u64);
        let n = rep.spinor_dim();
        let psi: Vec<Scalar> = (0..n).map(|_| Scalar::from(rng.gen_range(-3i64..=3))).collect();
        let chi: Vec<Scalar> = (0..n).map(|_| Scalar::from(rng.gen_range(-3i64..=3))).collect();
        for a in 0..t + s {
            let lhs = rep.bilinear(&rep.gamma(a).apply(&psi), &chi).unwrap();
            let rhs = rep.bilinear(&psi, &rep.gamma(a).apply(&chi)).unwrap();
            assert_eq!(lhs, &rhs * &Scalar::from(sigma as i64));
        }
    }
}

#[test]
fn eleven_dimensional_volume_is_minus_one() {
    let rep = build_gamma(1, 10).unwrap();
    assert!(rep.volume_element().is_multiple_of_identity(&Scalar::from(-1)));
}

#[test]
fn iib_chirality() {
    let rep = build_gamma(1, 9).unwrap();
    let chi = rep.chirality().unwrap();
    let plus = kernel(&[chi.sub(&SpinMatrix::identity(32))]).unwrap();
    let minus = kernel(&[chi.add(&SpinMatrix::identity(32))]).unwrap();
    assert_eq!((plus.dim, minus.dim), (16, 16));
}

fn disjoint_pair(n: usize) -> impl Strategy<Value = (Vec<usize>, Vec<usize>, Vec<i64>, Vec<i64>)> {
    (proptest::sample::subsequence((0..n).collect::<Vec<_>>(), 0..=n), any::<u64>()).prop_map(move |(all, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut a = Vec::new();
        let mut b = Vec::new();
        for i in all {
            if rng.gen_bool(0.5) {
                a.push(i)
            } else {
                b.push(i)
            }
        }
        let ca = (0..3).map(|_| rng.gen_range(-2i64..=2)).collect();
        let cb = (0..3).map(|_| rng.gen_range(-2i64..=2)).collect();
        (a, b, ca, cb)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// For forms with disjoint supports in an orthonormal frame, Clifford
    /// multiplication and the wedge product agree.
    #[test]
    fn wedge_is_product_on_disjoint_supports((a, b, _ca, _cb) in disjoint_pair(7)) {
        let frame = FrameClifford::new(diag_metric(&[-1, 1, 1, 1, 1, 1, 1])).unwrap();
        let alpha: KForm<Scalar> = KForm::basis(7, &a);
        let beta: KForm<Scalar> = KForm::basis(7, &b);
        let lhs = frame.clifford_action(&alpha.wedge(&beta));
        let rhs = frame.clifford_action(&alpha).mul(&frame.clifford_action(&beta));
        prop_assert_eq!(lhs, rhs);
    }

    /// The same in a lightcone frame, for forms built on disjoint index sets
    /// that do not mix the null pair.
    #[test]
    fn wedge_is_product_lightcone((a, b, ca, cb) in disjoint_pair(6)) {
        let frame = FrameClifford::new(lightcone_metric(6)).unwrap();
        let a_sets: Vec<usize> = a.iter().map(|i| i + 2).filter(|&i| i < 6).collect();
        let b_sets: Vec<usize> = b.iter().map(|i| i + 2).filter(|&i| i < 6).collect();
        let alpha = KForm::<Scalar>::basis(6, &a_sets).scale(&Scalar::from(ca[0].max(1)));
        let mut beta_idx = b_sets.clone();
        beta_idx.push(0);
        let beta = KForm::<Scalar>::basis(6, &beta_idx).scale(&Scalar::from(cb[0]));
        let lhs = frame.clifford_action(&alpha.wedge(&beta));
        let rhs = frame.clifford_action(&alpha).mul(&frame.clifford_action(&beta));
        prop_assert_eq!(lhs, rhs);
    }
}

/// Exact kernel dimensions of random sums of gamma products match a
/// floating point SVD rank computation.
#[test]
fn kernel_matches_svd_oracle() {
    let frame = FrameClifford::new(diag_metric(&[-1, 1, 1, 1, 1, 1])).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut nontrivial = 0;
    for trial in 0..200 {
        let nops = 1 + trial % 3;
        let mut ops = Vec::new();
        for _ in 0..nops {
            let mut form: KForm<Scalar> = KForm::zero(6, 0);
            let deg = rng.gen_range(0..=3);
            let nterms = if rng.gen_bool(0.7) { 1 } else { rng.gen_range(2..=3) };
            for _ in 0..nterms {
                let mut idx: Vec<usize> = (0..6).collect();
                for i in (1..idx.len()).rev() {
                    idx.swap(i, rng.gen_range(0..=i));
                }
                idx.truncate(deg);
                let term = KForm::basis(6, &idx).scale(&Scalar::from(if nterms == 1 { 1 } else { rng.gen_range(-2i64..=2) }));
                form = form.add(&term);
            }
            let shift = Scalar::from(if rng.gen_bool(0.5) { 1 } else { -1 });
            ops.push(frame.clifford_action(&form).add(&SpinMatrix::identity(16).scale(&shift)));
        }
        let exact = kernel(&ops).unwrap();
        let stacked = DMatrix::from_fn(16 * ops.len(), 16, |r, c| to_float(&ops[r / 16])[(r % 16, c)]);
        assert_eq!(exact.dim, 16 - float_rank(&stacked), "trial {trial}");
        for v in &exact.basis {
            for op in &ops {
                assert!(op.apply(v).iter().all(|x| x.is_zero()));
            }
        }
        if exact.dim > 0 && exact.dim < 16 {
            nontrivial += 1;
        }
    }
    assert!(nontrivial > 10, "oracle comparison should exercise proper kernels");
}
