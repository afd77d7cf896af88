//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on
//! any failure.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use catalog::commands::{documented_perturbations, verify_command};
use catalog::{
    compute_tables, realization, realize, render_dilatons, render_factors, render_geometries, render_supersymmetry,
    resolve_builtin, su3, DilatonChoice, FactorKind, Overrides, OUT_OF_SCOPE,
};
use exactnum::{linalg, Scalar};
use geometry::{flat_torsion_consequences, group_curvature_with_torsion};
use kaluza::{reduce_group, unit_spacelike_sample, Reduction, ReductionData};
use liealg::{
    anti_selfdual_filter, canonical_three_form, cw_canonicalize, d6_catalog, double_extension, e15, nw6, so12_so3, so3,
    CwData, D6Case, LieAlgebra, MetricLieAlgebra,
};
use multilinear::KForm;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sugra::builtins::{builtin, cw10, cw11, group_d6, nw6_background, so12_so3_background};
use sugra::{nw6_chart, supercovariant_flatness, verify, verify_d6, Geometry, Status, Theory, VerificationReport};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn s(x: i64) -> Scalar {
    Scalar::from(x)
}

fn require(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn passes(r: &VerificationReport, checks: &[&str]) -> Result<(), String> {
    for c in checks {
        match r.checks.iter().find(|x| x.name.starts_with(c)) {
            Some(x) if x.status == Status::Pass => {}
            Some(x) => return Err(format!("{}: `{}` fails: {}", r.background, x.name, x.witness.clone().unwrap_or_default())),
            None => return Err(format!("{}: no check `{c}`", r.background)),
        }
    }
    Ok(())
}

fn within(t: Duration, limit: u64, what: &str) -> Result<(), String> {
    require(t.as_secs_f64() < limit as f64, format!("{what} took {:.1} s, target < {limit} s", t.as_secs_f64()))
}

fn d11_catalog() -> Outcome {
    let checks = ["einstein", "maxwell", "closure dF = 0", "parallel flux nabla F = 0", "riemann formula", "plucker identity"];
    let mut times = Vec::new();
    for (id, param, value) in [("ads7xs4", "R", 6), ("ads4xs7", "R", -6), ("cw11", "mu", 6)] {
        let start = Instant::now();
        let o = Overrides { params: [(param.to_string(), s(value))].into_iter().collect(), ..Overrides::default() };
        let b = resolve_builtin(id, &o, true).map_err(|e| e.to_string())?;
        let r = verify(&b).map_err(|e| e.to_string())?;
        passes(&r, &checks)?;
        let t = start.elapsed();
        within(t, 10, id)?;
        times.push(format!("{id} {:.2} s", t.as_secs_f64()));
    }
    Ok(format!("field equations, parallel flux, curvature formula and Plücker pass ({})", times.join(", ")))
}

fn cw11_flatness() -> Outcome {
    let start = Instant::now();
    let f = supercovariant_flatness(&cw11(&s(6)).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let t = start.elapsed();
    require(f.flat && f.curvature_witness.is_none(), format!("R^D != 0: {:?}", f.curvature_witness))?;
    require(f.nu_value() == Scalar::one() && f.rank == 32, format!("nu = {}", f.nu))?;
    require(f.trace_witness.is_none(), format!("trace: {:?}", f.trace_witness))?;
    require(f.clifford_trace_witness.is_none(), format!("clifford trace: {:?}", f.clifford_trace_witness))?;
    within(t, 60, "cw11 flatness")?;
    Ok(format!("R^D = 0 on 32x32 spinors, nu = 1, traceless, e^i.R(X, e_i) = 0 ({:.2} s)", t.as_secs_f64()))
}

fn iib_catalog() -> Outcome {
    let start = Instant::now();
    let r = verify(&builtin("ads5xs5").map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    passes(&r, &["riemann formula", "plucker-jacobi identity", "F = G + *G"])?;
    let b = cw10(&s(1)).map_err(|e| e.to_string())?;
    let r = verify(&b).map_err(|e| e.to_string())?;
    passes(&r, &["riemann formula", "plucker-jacobi identity", "F = G + *G", "supercovariant flatness"])?;
    require(r.invariants.get("nu").map(String::as_str) == Some("1"), format!("cw10 nu = {:?}", r.invariants.get("nu")))?;
    let t = start.elapsed();
    within(t, 60, "IIB catalog")?;
    Ok(format!("AdS5 x S5 (R = 5) and CW10 (mu = 1, nu = 1) pass ({:.2} s)", t.as_secs_f64()))
}

fn six_dimensional() -> Outcome {
    let start = Instant::now();
    let r = verify_d6(&nw6_background().map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    passes(&r, &["closure dH = 0", "anti-selfduality", "einstein", "flat parallelising connection"])?;
    let chart = verify_d6(&nw6_chart(&Scalar::one()).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let scales = chart.invariants.get("torsion scales c with R^D(cH) = 0").cloned().ok_or("no torsion scale reported")?;
    let params = [(1, 1), (2, 1), (1, 3)].map(|(p, q)| Scalar::ratio(p, q));
    for a in &params {
        for b in &params {
            let r = verify_d6(&so12_so3_background(a, b).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
            let asd = r.status_of("anti-selfduality *H = -H") == Some(Status::Pass);
            require(asd == (a == b), format!("so(1,2)+so(3) at alpha = {a}, beta = {b}: anti-selfdual = {asd}"))?;
        }
    }
    let kept: Vec<D6Case> = anti_selfdual_filter(&d6_catalog()).map_err(|e| e.to_string())?.into_iter().map(|e| e.case).collect();
    require(
        kept == [D6Case::Minkowski, D6Case::So12PlusSo3, D6Case::DoubleExtension],
        format!("filter kept {kept:?}"),
    )?;
    let t = start.elapsed();
    within(t, 10, "d6 checks")?;
    Ok(format!(
        "NW6 passes; chart torsion scales c = {scales}; anti-selfdual iff beta = alpha; filter drops E^{{1,2}}+so(3) and E^3+so(1,2) ({:.2} s)",
        t.as_secs_f64()
    ))
}

fn flat_with_canonical_torsion(g: &MetricLieAlgebra) -> Result<(), String> {
    let h = canonical_three_form(g).map_err(|e| e.to_string())?;
    let rd = group_curvature_with_torsion(g, &h).map_err(|e| format!("{}: {e}", g.name()))?;
    require(rd.first_nonzero().is_none(), format!("{}: R^D != 0", g.name()))?;
    let c = flat_torsion_consequences(g, &h);
    require(c.flat && c.parallel && c.jacobi, format!("{}: {:?}", g.name(), c.witness))
}

fn random_double_extension(rng: &mut ChaCha8Rng) -> MetricLieAlgebra {
    let n = rng.gen_range(1..=4);
    let signs: Vec<i64> = (0..n).map(|i| if i == 0 && rng.gen_bool(0.3) { -1 } else { 1 }).collect();
    let flat_metric: Vec<Vec<Scalar>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { s(signs[i]) } else { Scalar::zero() }).collect()).collect();
    let mut base = MetricLieAlgebra::new("flat", LieAlgebra::abelian(n), flat_metric).unwrap();
    let with_so3 = rng.gen_bool(0.5);
    if with_so3 {
        base = MetricLieAlgebra::new("so3", so3(), linalg::identity(3)).unwrap().direct_sum(&base);
    }
    let dim = base.dim();
    let offset = if with_so3 { 3 } else { 0 };
    let mut j = vec![vec![Scalar::zero(); dim]; dim];
    // J = ad_z on so(3) plus a skew map on the flat part
    if with_so3 {
        let z: Vec<Scalar> = (0..dim).map(|i| if i < 3 { s(rng.gen_range(-3..=3)) } else { Scalar::zero() }).collect();
        for i in 0..3 {
            let mut e = vec![Scalar::zero(); dim];
            e[i] = Scalar::one();
            let col = base.algebra().bracket(&z, &e);
            for (k, v) in col.into_iter().enumerate() {
                j[k][i] = v;
            }
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            let v = Scalar::ratio(rng.gen_range(-4..=4), rng.gen_range(1..=3));
            j[offset + a][offset + b] = &v * &s(signs[a]);
            j[offset + b][offset + a] = -&(&v * &s(signs[b]));
        }
    }
    let b = Scalar::ratio(rng.gen_range(-2..=2), 1);
    double_extension(&base, &j, b).unwrap()
}

fn catalog_algebras() -> Result<Vec<MetricLieAlgebra>, String> {
    let mut out: Vec<MetricLieAlgebra> = d6_catalog().into_iter().map(|e| e.algebra).collect();
    out.push(nw6());
    for (a, b) in [(1, 1), (1, 2), (3, 1)] {
        out.push(so12_so3(&s(a), &s(b)).map_err(|e| e.to_string())?);
    }
    out.push(MetricLieAlgebra::new("su3", su3(), linalg::identity(8)).map_err(|e| e.to_string())?);
    for k in [FactorKind::Ads3, FactorKind::S3, FactorKind::Cw(2), FactorKind::Cw(3), FactorKind::Cw(4), FactorKind::Cw(5)] {
        out.push(realization(k, &Scalar::one()).map_err(|e| e.to_string())?);
    }
    for g in catalog::enumerate_parallelisable(10) {
        if let Ok(b) = realize(&g, DilatonChoice::Nonconstant) {
            if let Geometry::Group(a) = b.geometry {
                out.push(a);
            }
        }
    }
    Ok(out)
}

fn flat_torsion_property() -> Outcome {
    let algebras = catalog_algebras()?;
    for g in &algebras {
        flat_with_canonical_torsion(g)?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let count = 120;
    for _ in 0..count {
        flat_with_canonical_torsion(&random_double_extension(&mut rng))?;
    }
    Ok(format!("R^D = 0, nabla H = 0 and cyclic T identity on {} catalog algebras and {count} random double extensions", algebras.len()))
}

fn random_orthogonal(rng: &mut ChaCha8Rng, m: usize) -> Vec<Vec<Scalar>> {
    // Cayley transform (1 - S)(1 + S)^{-1} of a rational skew S
    let mut skew = vec![vec![Scalar::zero(); m]; m];
    for (i, j) in (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))) {
        let v = Scalar::ratio(rng.gen_range(-3..=3), rng.gen_range(1..=3));
        skew[j][i] = -&v;
        skew[i][j] = v;
    }
    let id: Vec<Vec<Scalar>> = linalg::identity(m);
    let minus: Vec<Vec<Scalar>> = (0..m).map(|i| (0..m).map(|j| &id[i][j] - &skew[i][j]).collect()).collect();
    let plus: Vec<Vec<Scalar>> = (0..m).map(|i| (0..m).map(|j| &id[i][j] + &skew[i][j]).collect()).collect();
    linalg::mat_mul(&minus, &linalg::inverse(&plus).unwrap())
}

fn conjugate(o: &[Vec<Scalar>], a: &[Vec<Scalar>], c: &Scalar) -> Vec<Vec<Scalar>> {
    let m = a.len();
    let ot: Vec<Vec<Scalar>> = (0..m).map(|i| (0..m).map(|j| o[j][i].clone()).collect()).collect();
    linalg::mat_mul(&linalg::mat_mul(o, a), &ot).into_iter().map(|r| r.into_iter().map(|x| &x * c).collect()).collect()
}

fn cw_moduli() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let trials = 1000;
    let mut degenerate = 0;
    for t in 0..trials {
        let m = rng.gen_range(1..=4);
        let d: Vec<Scalar> = (0..m).map(|_| s(rng.gen_range(-5..=5))).collect();
        if d.iter().all(Scalar::is_zero) {
            continue;
        }
        let a = conjugate(&random_orthogonal(&mut rng, m), CwData::diagonal(&d).matrix(), &Scalar::one());
        let c = Scalar::ratio(rng.gen_range(1..=9), rng.gen_range(1..=9));
        let b = conjugate(&random_orthogonal(&mut rng, m), &a, &c);
        let ca = cw_canonicalize(&CwData::new(a.clone()).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let cb = cw_canonicalize(&CwData::new(b).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        require(ca == cb, format!("trial {t}: {ca:?} != {cb:?}"))?;
        require(matches!(ca.eigenvalues, liealg::Spectrum::Exact(_)), format!("trial {t}: inexact spectrum"))?;
        let singular = linalg::determinant(&a).map_err(|e| e.to_string())?.is_zero();
        require(ca.degenerate == singular, format!("trial {t}: degenerate = {}, det(A) = 0 is {singular}", ca.degenerate))?;
        degenerate += usize::from(singular);
    }
    for id in ["cw11", "cw10"] {
        let b = builtin(id).map_err(|e| e.to_string())?;
        let a = match id {
            "cw11" => sugra::builtins::cw11_matrix(&b.params["mu"]),
            _ => CwData::diagonal(&vec![-&(&b.params["mu"] * &b.params["mu"]); 8]).matrix().to_vec(),
        };
        let c = cw_canonicalize(&CwData::new(a).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        require(!c.degenerate, format!("{id} flagged degenerate"))?;
    }
    Ok(format!("{trials} random (O, c) pairs give identical canonical tuples; {degenerate} singular A all flagged; builtin waves nondegenerate"))
}

fn kaluza_klein() -> Outcome {
    let flat = builtin("flat11").map_err(|e| e.to_string())?;
    let mut xi = vec![Scalar::zero(); 11];
    xi[10] = Scalar::one();
    let Reduction::Flat(r) = ReductionData::new(flat, xi).and_then(|d| d.reduce()).map_err(|e| e.to_string())? else {
        return Err("flat11 did not reduce as a chart".into());
    };
    require(r.report.passed(), r.report.to_string())?;
    let down = r.downstairs.clone().ok_or("no downstairs background")?;
    require(down.theory == Theory::Iia && down.fluxes.values().all(KForm::is_zero), "downstairs is not flat IIA")?;
    require(down.dilaton.as_ref().is_none_or(|d| d.is_constant()), "downstairs dilaton is not constant")?;

    let points = 50;
    let asd = [
        ("so(1,2)+so(3)", group_d6("ads3xs3", so12_so3(&s(1), &s(1)).unwrap()).unwrap()),
        ("nw6", group_d6("nw6", nw6()).unwrap()),
        ("E^{1,5}", group_d6("flat6", e15()).unwrap()),
    ];
    for (name, b) in &asd {
        let Geometry::Group(g) = &b.geometry else { unreachable!() };
        let h = b.constant_flux("H3", 3).map_err(|e| e.to_string())?;
        for x in unit_spacelike_sample(g.space(), points, 7).map_err(|e| e.to_string())? {
            let red = reduce_group(g, &h, &x).map_err(|e| format!("{name}: {e}"))?;
            passes(&red.report, &["F = G2", "H = *_h G2 + alpha ^ G2"]).map_err(|e| format!("{name} along {x:?}: {e}"))?;
        }
    }
    let mut families = 0;
    for e in d6_catalog() {
        let b = group_d6("family", e.algebra).map_err(|e| e.to_string())?;
        let Geometry::Group(g) = &b.geometry else { unreachable!() };
        let h = b.constant_flux("H3", 3).map_err(|e| e.to_string())?;
        for x in unit_spacelike_sample(g.space(), points, 11).map_err(|e| e.to_string())? {
            let red = reduce_group(g, &h, &x).map_err(|e| e.to_string())?;
            passes(&red.report, &["F = G2"]).map_err(|e| format!("{:?}: {e}", e))?;
        }
        families += 1;
    }
    Ok(format!(
        "flat11 reduces to flat IIA with zero fluxes and constant dilaton; F = G2 and H = *_h G2 + alpha ^ G2 at {points} unit points of each anti-selfdual algebra; F = G2 at {points} points of all {families} families"
    ))
}

fn golden(name: &str) -> Result<String, String> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))
}

fn tables() -> Outcome {
    let start = Instant::now();
    let t = compute_tables().map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    require(t.geometries.len() == 17, format!("{} geometries", t.geometries.len()))?;
    require(t.dilatons.len() == 12, format!("{} dilaton rows", t.dilatons.len()))?;
    for (g, needle) in [
        ("AdS3 x E^7", "|H|^2 < 0"),
        ("E^{1,0} x S3 x S3 x S3", "dphi is timelike"),
        ("CW4(A) x S3 x S3", "dphi is null"),
    ] {
        let r = t.rejected.iter().find(|r| r.geometry == g).ok_or(format!("{g} not rejected"))?;
        require(r.reason.contains(needle), format!("{g}: {}", r.reason))?;
    }
    let mut sixteens = 0;
    for row in &t.supersymmetry {
        for (cell, expected) in [(Some(&row.nonconstant), 16), (row.constant.as_ref(), if row.geometry == "E^{1,9}" { 32 } else { 16 })] {
            if let Some(c) = cell {
                require(c.equations_pass, format!("{}: field equations fail", row.geometry))?;
                require(c.iia == expected && c.iib == expected, format!("{}: {} / {}", row.geometry, c.iia, c.iib))?;
                sixteens += usize::from(expected == 16);
            }
        }
    }
    for (file, text) in [
        ("factors.txt", render_factors(&t)),
        ("geometries.txt", render_geometries(&t)),
        ("dilatons.txt", render_dilatons(&t)),
        ("supersymmetry.txt", render_supersymmetry(&t)),
    ] {
        require(golden(file)? == text, format!("{file} differs from the rendered table"))?;
    }
    within(elapsed, 5, "tables")?;
    Ok(format!(
        "17 geometries, 12 dilaton rows, 3 stated rejections, the 32 and {sixteens} frame-constant 16s; golden files match ({:.2} s)",
        elapsed.as_secs_f64()
    ))
}

fn negative_controls() -> Outcome {
    let mut lines = Vec::new();
    for (id, o) in documented_perturbations() {
        let b = resolve_builtin(id, &o, true).map_err(|e| e.to_string())?;
        let r = verify(&b).map_err(|e| e.to_string())?;
        require(!r.passed(), format!("{} passes", b.id))?;
        for c in r.failures() {
            require(c.witness.as_deref().is_some_and(|w| !w.is_empty()), format!("{}: `{}` fails without a witness", b.id, c.name))?;
        }
        lines.push(id);
    }
    let summary = verify_command(&["all".to_string()], &Overrides::default()).map_err(|e| e.to_string())?;
    require(summary.passed, "an unperturbed builtin fails")?;
    require(golden("verify.txt")? == catalog::commands::verification_summary().map_err(|e| e.to_string())?, "verify.txt differs")?;
    Ok(format!("{} perturbations fail with witnesses; all builtins pass", lines.len()))
}

fn out_of_scope_declared() -> Outcome {
    let runs: [&[&str]; 4] =
        [&["verify", "all"], &["enumerate", "--tables"], &["susy", "CW10(A)"], &["verify", "cw11", "--perturb", "A11=+1"]];
    for args in runs {
        let o = Command::new(env!("CARGO_BIN_EXE_catalog")).args(args).output().map_err(|e| e.to_string())?;
        let text = String::from_utf8_lossy(&o.stdout);
        for decl in OUT_OF_SCOPE {
            require(text.contains(decl), format!("`catalog {}` lacks: {decl}", args.join(" ")))?;
        }
        let o = Command::new(env!("CARGO_BIN_EXE_catalog")).args(args).args(["--format", "json"]).output().map_err(|e| e.to_string())?;
        let env: catalog::Envelope = serde_json::from_slice(&o.stdout).map_err(|e| e.to_string())?;
        require(env.out_of_scope == OUT_OF_SCOPE, "json report lacks the declarations")?;
    }
    Ok(format!("{} declarations present verbatim in text and JSON reports", OUT_OF_SCOPE.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("eleven-dimensional catalog", d11_catalog),
        ("CW11 supercovariant flatness", cw11_flatness),
        ("IIB catalog", iib_catalog),
        ("six-dimensional backgrounds", six_dimensional),
        ("flat parallelising torsion", flat_torsion_property),
        ("Cahen-Wallach moduli", cw_moduli),
        ("Kaluza-Klein reductions", kaluza_klein),
        ("parallelisable tables", tables),
        ("negative controls", negative_controls),
        ("out-of-scope declarations", out_of_scope_declared),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
