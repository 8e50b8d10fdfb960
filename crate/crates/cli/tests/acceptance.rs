//! The ten acceptance criteria, run in order with their time limits. Prints
//! one PASS/FAIL line per criterion and exits non-zero if any fails.

use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use graph_zeta::algebra::{
    column_constant_inverse, rat, schur_complement, Matrix, Pivot, Poly, QFunc, RatFunc, Rational, Ring,
    TruncatedSeries,
};
use graph_zeta::classical::bass_ihara_classical;
use graph_zeta::digraph::{Digraph, Graph};
use graph_zeta::io::parse_spec;
use graph_zeta::lyndon::fz_truncated_check;
use graph_zeta::paths::{euler_expression_truncated, exp_expression_truncated, n_m, PathOptions};
use graph_zeta::weights::{edge_matrix, Preset, WeightScheme};
use graph_zeta::zeta::{hashimoto_polynomial, ihara_data, verify_main_theorem};
use graph_zeta_cli::{EXIT_OK, EXIT_REJECTED, EXIT_RESOURCE, EXIT_USAGE};

type Check = Result<String, String>;

fn manifest_path(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(rel)
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(-5..=5), rng.gen_range(1..=4))
}

fn random_rationals(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    (0..n).map(|_| random_rational(rng)).collect()
}

fn random_digraph(rng: &mut ChaCha8Rng, max_vertices: usize, max_arcs: usize) -> Digraph {
    let n = rng.gen_range(1..=max_vertices);
    let m = rng.gen_range(0..=max_arcs);
    let arcs = (0..m)
        .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
        .collect();
    Digraph::new(n, arcs).expect("endpoints in range")
}

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix<Rational> {
    Matrix::from_fn(rows, cols, |_, _| random_rational(rng))
}

const SWEEP_PRESETS: [Preset; 6] = [
    Preset::Ihara,
    Preset::BowenLanford,
    Preset::MizunoSato,
    Preset::Sato,
    Preset::General,
    Preset::Bartholdi,
];

fn scheme_for(preset: Preset, arcs: usize, rng: &mut ChaCha8Rng) -> WeightScheme<Rational> {
    match preset {
        Preset::Ihara => WeightScheme::ihara(arcs),
        Preset::BowenLanford => WeightScheme::bowen_lanford(random_rationals(rng, arcs)),
        Preset::MizunoSato => WeightScheme::mizuno_sato(random_rationals(rng, arcs)),
        Preset::Sato => WeightScheme::sato(random_rationals(rng, arcs)),
        Preset::General => {
            WeightScheme::general(random_rationals(rng, arcs), random_rationals(rng, arcs)).expect("lengths match")
        }
        Preset::Bartholdi => WeightScheme::bartholdi(arcs, &rat(2, 3)),
    }
}

fn within(elapsed: Duration, limit: Option<Duration>) -> Result<(), String> {
    match limit {
        Some(l) if elapsed >= l => Err(format!("took {elapsed:.2?}, limit {l:?}")),
        _ => Ok(()),
    }
}

fn worked_example() -> Result<Digraph, String> {
    let text = std::fs::read_to_string(manifest_path("fixtures/worked_example.json")).map_err(|e| e.to_string())?;
    Ok(parse_spec(&text).map_err(|e| e.to_string())?.digraph)
}

fn criterion_1() -> Check {
    let d = worked_example()?;
    if (d.vertex_count(), d.arc_count()) != (3, 8) {
        return Err("fixture is not 3 vertices and 8 arcs".into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for i in 0..25 {
        let s = WeightScheme::general(random_rationals(&mut rng, 8), random_rationals(&mut rng, 8)).unwrap();
        let r = verify_main_theorem(&d, &s).map_err(|e| e.to_string())?;
        if !r.identity_holds {
            return Err(format!("assignment {i}: {:?} != {:?}", r.hashimoto, r.ihara));
        }
    }
    Ok("25 random assignments, exact equality".into())
}

fn criterion_2() -> Check {
    let d = worked_example()?;
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let tau = random_rationals(&mut rng, 8);
    let ups = random_rationals(&mut rng, 8);
    let s = WeightScheme::general(tau.clone(), ups.clone()).unwrap();
    let data = ihara_data(&d, &s).map_err(|e| e.to_string())?;
    let (t, u) = (|i: usize| tau[i - 1].clone(), |i: usize| ups[i - 1].clone());
    let one = Rational::one();
    let zero = Rational::zero();
    let quad = |c: Rational| Poly::new(vec![one.clone(), zero.clone(), c.neg()]);
    let expected_f = [
        ((0, 0), Poly::new(vec![one.clone(), u(1).add(&u(2))])),
        ((0, 1), quad(u(3).mul(&u(4)))),
        ((0, 2), Poly::one()),
        ((1, 2), quad(u(5).add(&u(6)).mul(&u(7)))),
    ];
    for ((a, b), f) in &expected_f {
        if data.f(*a, *b) != *f {
            return Err(format!("f({a},{b}) = {:?}", data.f(*a, *b)));
        }
    }
    if data.f_pairs.len() != 4 {
        return Err(format!("{} pairs in Phi, expected 4", data.f_pairs.len()));
    }
    if *data.a_weighted.get(2, 0) != RatFunc::constant(t(8)) {
        return Err("A(t) entry (v3, v1) differs from tau(a8)".into());
    }
    let d11 = RatFunc::new(Poly::constant(t(3).mul(&u(4))), quad(u(3).mul(&u(4)))).unwrap();
    if *data.d_weighted.get(0, 0) != d11 {
        return Err("D(t) entry (v1, v1) differs".into());
    }
    Ok("four f polynomials, A(v3,v1) and D(v1,v1) exact".into())
}

fn criterion_3() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut runs = 0;
    for i in 0..200 {
        let d = random_digraph(&mut rng, 4, 8);
        for preset in SWEEP_PRESETS {
            let s = scheme_for(preset, d.arc_count(), &mut rng);
            let r = verify_main_theorem(&d, &s).map_err(|e| e.to_string())?;
            if !r.identity_holds {
                return Err(format!("instance {i} {preset}: {:?} arcs", d.arcs()));
            }
            runs += 1;
        }
    }
    Ok(format!("{runs} digraph/preset pairs match"))
}

fn criterion_4() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let opts = PathOptions::default();
    for i in 0..20 {
        let d = random_digraph(&mut rng, 4, 5);
        let s = WeightScheme::general(random_rationals(&mut rng, d.arc_count()), random_rationals(&mut rng, d.arc_count()))
            .unwrap();
        let err = |e: graph_zeta::Error| e.to_string();
        let det = hashimoto_polynomial(&d, &s).map_err(err)?;
        let inverse = TruncatedSeries::from_poly(&det, 10).inverse().map_err(err)?;
        let exp = exp_expression_truncated(&d, &s, 10, &opts).map_err(err)?;
        let euler = euler_expression_truncated(&d, &s, 10, &opts).map_err(err)?;
        if inverse != exp || exp != euler {
            return Err(format!("instance {i} ({:?}) disagrees", d.arcs()));
        }
    }
    Ok("20 instances agree to order 10".into())
}

fn criterion_5() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let opts = PathOptions::default();
    let mut checks = 0;
    for i in 0..20 {
        let d = random_digraph(&mut rng, 4, 8);
        for preset in SWEEP_PRESETS {
            let s = scheme_for(preset, d.arc_count(), &mut rng);
            let m = edge_matrix(&d, &s).map_err(|e| e.to_string())?;
            let mut power = Matrix::identity(d.arc_count());
            for len in 1..=6 {
                power = power.mul(&m).unwrap();
                let trace = power.trace().unwrap();
                let count = n_m(&d, &s, len, &opts).map_err(|e| e.to_string())?;
                if count != trace {
                    return Err(format!("instance {i} {preset} m={len}: {count} != {trace}"));
                }
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} values of N_m equal traces"))
}

fn criterion_6() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for i in 0..20 {
        let m = random_matrix(&mut rng, 4, 4);
        if !fz_truncated_check(&m, 8).map_err(|e| e.to_string())? {
            return Err(format!("matrix {i}: {m:?}"));
        }
    }
    Ok("20 random 4x4 matrices to order 8".into())
}

fn evaluate(p: &Poly<QFunc>, q: &Rational) -> Result<Poly<Rational>, String> {
    let coeffs = p
        .coeffs()
        .iter()
        .map(|c| c.eval(q).ok_or_else(|| "pole".to_string()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Poly::new(coeffs))
}

fn criterion_7() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let q = QFunc::var();
    for i in 0..10 {
        let d = random_digraph(&mut rng, 4, 8);
        let n = d.arc_count();
        let err = |e: graph_zeta::Error| e.to_string();
        let symbolic = hashimoto_polynomial(&d, &WeightScheme::bartholdi(n, &q)).map_err(err)?;
        let ihara = hashimoto_polynomial(&d, &WeightScheme::<Rational>::ihara(n)).map_err(err)?;
        let bl = hashimoto_polynomial(&d, &WeightScheme::bowen_lanford(vec![Rational::one(); n])).map_err(err)?;
        if evaluate(&symbolic, &Rational::zero())? != ihara {
            return Err(format!("instance {i}: q=0 differs from IHARA"));
        }
        if evaluate(&symbolic, &Rational::one())? != bl {
            return Err(format!("instance {i}: q=1 differs from BOWEN_LANFORD"));
        }
    }
    Ok("10 instances over Q(q) at q=0 and q=1".into())
}

/// Laplace expansion along the first row, skipping zero entries.
fn cofactor_det(m: &[Vec<Poly<Rational>>]) -> Poly<Rational> {
    if m.is_empty() {
        return Poly::one();
    }
    let mut acc = Poly::zero();
    for (j, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly<Rational>>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = entry.mul(&cofactor_det(&minor));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

fn criterion_8() -> Check {
    let mut graphs = 0;
    for n in 0..=5usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges = pairs.iter().enumerate().filter(|&(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
            let g = Graph::new(n, edges).unwrap();
            let d = g.symmetric_digraph().digraph;
            let h = hashimoto_polynomial(&d, &WeightScheme::<Rational>::ihara(d.arc_count())).map_err(|e| e.to_string())?;
            let c = bass_ihara_classical::<Rational>(&g).map_err(|e| e.to_string())?;
            if h != c {
                return Err(format!("graph {:?} on {n} vertices", g.edges()));
            }
            graphs += 1;
        }
    }

    let k4 = Graph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    let d = k4.symmetric_digraph().digraph;
    let arcs = d.arc_count();
    let rows: Vec<Vec<Poly<Rational>>> = (0..arcs)
        .map(|a| {
            (0..arcs)
                .map(|b| {
                    let follows = d.head(a) == d.tail(b) && d.head(b) != d.tail(a);
                    let delta = if a == b { Rational::one() } else { Rational::zero() };
                    let slope = if follows { Rational::one().neg() } else { Rational::zero() };
                    Poly::new(vec![delta, slope])
                })
                .collect()
        })
        .collect();
    let brute = cofactor_det(&rows);
    let lin = |c: i64| Poly::new(vec![rat(1, 1), rat(c, 1)]);
    let factored = lin(-1)
        .pow(3)
        .mul(&lin(1).pow(2))
        .mul(&lin(-2))
        .mul(&Poly::new(vec![rat(1, 1), rat(1, 1), rat(2, 1)]).pow(3));
    let ours = hashimoto_polynomial(&d, &WeightScheme::<Rational>::ihara(arcs)).map_err(|e| e.to_string())?;
    if brute != factored || ours != factored {
        return Err("K4 factorization differs from the brute-force expansion".into());
    }
    Ok(format!("{graphs} simple graphs; K4 factors confirmed"))
}

fn criterion_9() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let t = RatFunc::<Rational>::var();
    for i in 0..100 {
        let n = rng.gen_range(1..=5);
        let row = random_rationals(&mut rng, n);
        let m = Matrix::from_fn(n, n, |_, j| row[j].clone());
        let rho = row.iter().fold(Rational::zero(), |acc, x| acc.add(x));
        if m.mul(&m).unwrap() != m.scale(&rho) {
            return Err(format!("column constant {i}: M^2 != rho M"));
        }
        let i_plus = Matrix::<Rational>::identity(n).add(&m).unwrap();
        if i_plus.det_over_field().unwrap() != Rational::one().add(&rho) {
            return Err(format!("column constant {i}: det(I + M) != 1 + rho"));
        }
        let lifted = Matrix::identity(n).add(&m.map(|x| t.mul(&RatFunc::constant(x.clone())))).unwrap();
        let inv = column_constant_inverse(&m).map_err(|e| e.to_string())?;
        if inv.mul(&lifted).unwrap() != Matrix::identity(n) {
            return Err(format!("column constant {i}: explicit inverse fails"));
        }
    }

    let mut done = 0;
    while done < 100 {
        let (k, l) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let m = random_matrix(&mut rng, k + l, k + l);
        let (a, d) = (m.submatrix(0..k, 0..k), m.submatrix(k..k + l, k..k + l));
        let (det_a, det_d) = (a.det_over_field().unwrap(), d.det_over_field().unwrap());
        if det_a.is_zero() || det_d.is_zero() {
            continue;
        }
        let det_m = m.det_over_field().unwrap();
        let via_a = det_a.mul(&schur_complement(&m, k, Pivot::A).unwrap().det_over_field().unwrap());
        let via_d = det_d.mul(&schur_complement(&m, k, Pivot::D).unwrap().det_over_field().unwrap());
        let b = random_matrix(&mut rng, k, l);
        let c = random_matrix(&mut rng, l, k);
        let bc = Matrix::identity(k).sub(&b.mul(&c).unwrap()).unwrap();
        let cb = Matrix::identity(l).sub(&c.mul(&b).unwrap()).unwrap();
        if det_m != via_a || det_m != via_d || bc.det_over_field().unwrap() != cb.det_over_field().unwrap() {
            return Err(format!("Schur identity fails on instance {done}"));
        }
        done += 1;
    }

    let mut done = 0;
    while done < 100 {
        let (n, k) = (rng.gen_range(1..=4), rng.gen_range(1..=3));
        let a = random_matrix(&mut rng, n, n);
        let c = random_matrix(&mut rng, k, k);
        let u = random_matrix(&mut rng, n, k);
        let v = random_matrix(&mut rng, k, n);
        let (Ok(a_inv), Ok(c_inv)) = (a.inverse(), c.inverse()) else {
            continue;
        };
        let Ok(lhs) = a.add(&u.mul(&c).unwrap().mul(&v).unwrap()).unwrap().inverse() else {
            continue;
        };
        let Ok(core) = c_inv.add(&v.mul(&a_inv).unwrap().mul(&u).unwrap()).unwrap().inverse() else {
            continue;
        };
        let correction = a_inv.mul(&u).unwrap().mul(&core).unwrap().mul(&v).unwrap().mul(&a_inv).unwrap();
        if lhs != a_inv.sub(&correction).unwrap() {
            return Err(format!("Woodbury fails on instance {done}"));
        }
        done += 1;
    }
    Ok("100 instances each: column constant, Schur, Woodbury".into())
}

fn cli(args: &[&str]) -> Result<(i32, String), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_graphzeta"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    Ok((out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned()))
}

fn criterion_10() -> Check {
    let fixture = manifest_path("fixtures/worked_example.json");
    let fixture = fixture.to_str().unwrap();
    let golden = |name: &str| std::fs::read_to_string(manifest_path(&format!("tests/golden/{name}"))).map_err(|e| e.to_string());
    let cases: [(&[&str], &str); 2] = [
        (&["verify", "--input", fixture], "verify_worked_example.txt"),
        (&["series", "--input", fixture, "-T", "7"], "series_worked_example.txt"),
    ];
    for (args, name) in cases {
        let (code, out) = cli(args)?;
        if code != EXIT_OK || out != golden(name)? {
            return Err(format!("{} differs from {name} (exit {code})", args[0]));
        }
    }
    let codes: [(&[&str], i32); 3] = [
        (&["series", "--input", fixture, "-T", "10"], EXIT_RESOURCE),
        (&["verify", "--input", fixture, "--scheme", "BOWEN_LANFORD", "--reduced"], EXIT_REJECTED),
        (&["verify", "--input", "/nonexistent/graph.json"], EXIT_USAGE),
    ];
    for (args, want) in codes {
        let (code, _) = cli(args)?;
        if code != want {
            return Err(format!("{args:?} exited {code}, expected {want}"));
        }
    }
    Ok("golden verify/series identical; exit codes 0, 1, 3, 4".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check, Option<u64>); 10] = [
        ("worked example identity", criterion_1, Some(2)),
        ("worked example structure", criterion_2, None),
        ("main theorem sweep", criterion_3, Some(60)),
        ("three expressions agree", criterion_4, Some(30)),
        ("N_m equals trace", criterion_5, None),
        ("Lyndon product", criterion_6, None),
        ("Bartholdi interpolation", criterion_7, None),
        ("classical Bass-Ihara recovery", criterion_8, Some(120)),
        ("block matrix lemmas", criterion_9, None),
        ("CLI golden files and exit codes", criterion_10, None),
    ];
    let mut failed = 0;
    for (k, (name, run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = run().and_then(|detail| {
            within(start.elapsed(), limit.map(Duration::from_secs))?;
            Ok(detail)
        });
        let elapsed = start.elapsed();
        match result {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{elapsed:.2?}]", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} [{elapsed:.2?}]", k + 1);
            }
        }
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
