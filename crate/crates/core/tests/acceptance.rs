//! Acceptance criteria 1-10. Each criterion prints one PASS/FAIL line; the
//! binary exits nonzero if any criterion fails.
//!
//! The oracles here are written independently of the library: plain integer
//! matrices, a separate Smith form, direct enumeration, hand-written words,
//! and exact evaluation/interpolation for the slice degree.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::f64::consts::PI;
use std::panic;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use wpi_core::group::{
    abelianization, check_representation, matrix_group_closure, sl2_images, todd_coxeter,
    CosetOutcome,
};
use wpi_core::hl::{
    closed_form_values, continue_critical_points, lambda_crit, pencil_roots, verify_circles,
    verify_hl_match, verify_largest, verify_root_of_unity_invariance, GParams, HLParams,
};
use wpi_core::lattice::{build_graph, build_index_set};
use wpi_core::numerology::{degrees, verify_balance};
use wpi_core::polyalg::{sample_slice, weierstrass_slice_zdegree};
use wpi_core::presentation::{delta_word, special_fixture, Letter, Meta};
use wpi_core::{
    build_elliptic, build_presentation, build_zariski, BigInt, BuildOptions, Complex64,
    Presentation, RelationKind, Variant, Word,
};

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

type Criterion = (u32, &'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (1, "SL2(Z) representation of the elliptic presentation", criterion_1),
        (2, "abelianizations via Smith normal form", criterion_2),
        (3, "index set and lattice graph combinatorics", criterion_3),
        (4, "delta words and transcribed asymptotic relations", criterion_4),
        (5, "Hefez-Lazzeri critical values", criterion_5),
        (6, "degree numerology", criterion_6),
        (7, "Weierstrass slice z-degree", criterion_7),
        (8, "family G continuation and largest value", criterion_8),
        (9, "Todd-Coxeter and matrix closure sanity", criterion_9),
        (10, "scope of desk-scale verification", criterion_10),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for (k, title, run) in criteria {
        let start = Instant::now();
        let result = panic::catch_unwind(run).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            outcome(false, format!("panicked: {msg}"))
        });
        let mark = if result.passed { "PASS" } else { "FAIL" };
        failures += usize::from(!result.passed);
        println!(
            "{mark} criterion {k:>2} ({title}): {} [{:.2}s]",
            result.detail,
            start.elapsed().as_secs_f64()
        );
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failures} criterion/criteria failed");
        ExitCode::FAILURE
    }
}

fn within(start: Instant, budget: Duration) -> bool {
    start.elapsed() < budget
}

// ---------------------------------------------------------------- words

/// Letters as nonzero integers: `g + 1` for `t_g`, `-(g + 1)` for its inverse.
type RawWord = Vec<i64>;

fn raw(w: &Word) -> RawWord {
    w.letters()
        .iter()
        .map(|l| {
            let g = l.generator() as i64 + 1;
            if l.is_inverse() {
                -g
            } else {
                g
            }
        })
        .collect()
}

fn reduce(w: &[i64]) -> RawWord {
    let mut out: RawWord = Vec::new();
    for &x in w {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

fn cyclic(w: &[i64]) -> RawWord {
    let mut w = reduce(w);
    while w.len() >= 2 && w[0] == -w[w.len() - 1] {
        w = w[1..w.len() - 1].to_vec();
    }
    w
}

fn inverse(w: &[i64]) -> RawWord {
    w.iter().rev().map(|x| -x).collect()
}

fn relator(lhs: &[i64], rhs: &[i64]) -> RawWord {
    let mut r = lhs.to_vec();
    r.extend(inverse(rhs));
    r
}

/// Conjugate in the free group, up to inversion.
fn conjugate_or_inverse(a: &[i64], b: &[i64]) -> bool {
    let a = cyclic(a);
    let rotations_of = |w: &RawWord| -> HashSet<RawWord> {
        (0..w.len().max(1))
            .map(|k| {
                let mut r = w[k.min(w.len())..].to_vec();
                r.extend_from_slice(&w[..k.min(w.len())]);
                r
            })
            .collect()
    };
    let rots = rotations_of(&a);
    rots.contains(&cyclic(b)) || rots.contains(&cyclic(&inverse(b)))
}

// ------------------------------------------------------------ criterion 1

type M2 = [[i64; 2]; 2];

fn mul2(a: M2, b: M2) -> M2 {
    [
        [a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]],
        [a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]],
    ]
}

fn pow2(a: M2, k: u32) -> M2 {
    (0..k).fold([[1, 0], [0, 1]], |acc, _| mul2(acc, a))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let s1: M2 = [[1, 1], [0, 1]];
    let s2: M2 = [[1, 0], [-1, 1]];
    let braid = mul2(mul2(s1, s2), s1) == mul2(mul2(s2, s1), s2);
    let s = mul2(s1, s2);
    let cube = pow2(s, 3) == [[-1, 0], [0, -1]];
    let sixth = pow2(s, 6) == [[1, 0], [0, 1]];

    let p = build_elliptic();
    let report = check_representation(&p, &sl2_images(), None).expect("dimensions agree");
    let elapsed_ok = within(start, Duration::from_secs(1));
    outcome(
        braid && cube && sixth && report.all_hold && p.relations.len() == 2 && elapsed_ok,
        format!(
            "oracle braid={braid} (s1 s2)^3=-I {cube} (s1 s2)^6=I {sixth}; library relations hold={}",
            report.all_hold
        ),
    )
}

// ------------------------------------------------------------ criterion 2

fn exponent_matrix(p: &Presentation) -> Vec<Vec<i128>> {
    p.relations
        .iter()
        .map(|r| {
            let mut row = vec![0i128; p.generators.len()];
            for &x in &relator(&raw(&r.lhs), &raw(&r.rhs)) {
                row[(x.unsigned_abs() - 1) as usize] += x.signum() as i128;
            }
            row
        })
        .collect()
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Invariant factors of `Z^cols / rowspace`, dropping the 1s.
fn invariant_factors(mut m: Vec<Vec<i128>>, cols: usize) -> Vec<i128> {
    let rows = m.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let pivot = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| m[i][j] != 0)
            .min_by_key(|&(i, j)| m[i][j].abs());
        let Some((pi, pj)) = pivot else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                let q = m[i][t] / m[t][t];
                if q != 0 {
                    for j in t..cols {
                        m[i][j] -= q * m[t][j];
                    }
                }
                if m[i][t] != 0 {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                let q = m[t][j] / m[t][t];
                if q != 0 {
                    for i in t..rows {
                        m[i][j] -= q * m[i][t];
                    }
                }
                if m[t][j] != 0 {
                    clean = false;
                }
            }
            if clean {
                break;
            }
            let (pi, pj) = (t..rows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| (i == t || j == t) && m[i][j] != 0)
                .min_by_key(|&(i, j)| m[i][j].abs())
                .expect("nonzero entry in pivot cross");
            m.swap(t, pi);
            for row in m.iter_mut() {
                row.swap(t, pj);
            }
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    diag.extend(std::iter::repeat_n(0, cols - diag.len()));
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let g = gcd(diag[i], diag[j]);
            let l = if g == 0 { 0 } else { diag[i] / g * diag[j] };
            diag[i] = g;
            diag[j] = l;
        }
    }
    let mut out: Vec<i128> = diag.into_iter().filter(|&x| x != 1).collect();
    // Zeros (free factors) sort after torsion.
    out.sort_by_key(|&x| (x == 0, x));
    out
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let disc = |n, d| build_presentation(n, d, Variant::Discriminant, BuildOptions::default()).unwrap();
    let cases: Vec<(&str, Presentation, Vec<i128>)> = vec![
        ("elliptic", build_elliptic(), vec![12]),
        ("zariski l=3", build_zariski(3).unwrap(), vec![4]),
        ("discriminant (1,1)", disc(1, 1), vec![0]),
        ("discriminant (1,2)", disc(1, 2), vec![0]),
        ("discriminant (2,1)", disc(2, 1), vec![0]),
        (
            "moduli (1,2)",
            build_presentation(1, 2, Variant::Moduli, BuildOptions::default()).unwrap(),
            vec![60],
        ),
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, p, expected) in &cases {
        let oracle = invariant_factors(exponent_matrix(p), p.generators.len());
        let library: Vec<i128> = abelianization(p).as_i64().into_iter().map(i128::from).collect();
        let agree = &oracle == expected && &library == expected;
        ok &= agree;
        parts.push(format!("{name} {library:?}"));
    }
    let elapsed_ok = within(start, Duration::from_secs(5));
    outcome(ok && elapsed_ok, parts.join(", "))
}

// ------------------------------------------------------------ criterion 3

fn own_index_set(n: usize, d: u32) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = vec![vec![1], vec![2]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (1..=3 * d - 1).map(move |k| {
                    let mut w = v.clone();
                    w.push(k);
                    w
                })
            })
            .collect();
    }
    out
}

fn own_edge(a: &[u32], b: &[u32]) -> bool {
    let step = |x: &[u32], y: &[u32]| x.iter().zip(y).all(|(p, q)| *p == *q || *p == *q + 1);
    a != b && (step(a, b) || step(b, a))
}

fn criterion_3() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for n in 0..=3usize {
        for d in 1..=3u32 {
            let expected = 2 * (3 * d as usize - 1).pow(n as u32);
            let mine = own_index_set(n, d);
            let g = build_graph(n, d).unwrap();
            let lib: BTreeSet<Vec<u32>> = g.vertices.iter().map(|v| v.0.clone()).collect();
            let own: BTreeSet<Vec<u32>> = mine.iter().cloned().collect();
            ok &= mine.len() == expected && g.vertices.len() == expected && lib == own;

            let lib_edges: BTreeSet<(Vec<u32>, Vec<u32>)> = g
                .edges
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (g.vertices[a].0.clone(), g.vertices[b].0.clone());
                    if x < y { (x, y) } else { (y, x) }
                })
                .collect();
            let mut own_edges = BTreeSet::new();
            for (k, a) in mine.iter().enumerate() {
                for b in &mine[k + 1..] {
                    if own_edge(a, b) {
                        own_edges.insert(if a < b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) });
                    }
                }
            }
            ok &= lib_edges == own_edges;

            // BFS over the oracle edges.
            let mut seen = BTreeSet::from([mine[0].clone()]);
            let mut queue = VecDeque::from([mine[0].clone()]);
            while let Some(v) = queue.pop_front() {
                for w in &mine {
                    if own_edge(&v, w) && seen.insert(w.clone()) {
                        queue.push_back(w.clone());
                    }
                }
            }
            let connected = seen.len() == mine.len() && g.is_connected();
            ok &= connected;
        }
    }

    let g11 = build_graph(1, 1).unwrap();
    let v = own_index_set(1, 1);
    let mut triangles = 0;
    for a in 0..v.len() {
        for b in a + 1..v.len() {
            for c in b + 1..v.len() {
                if own_edge(&v[a], &v[b]) && own_edge(&v[b], &v[c]) && own_edge(&v[a], &v[c]) {
                    triangles += 1;
                }
            }
        }
    }
    let g11_ok = g11.edges.len() == 5 && triangles == 2 && g11.triangles().len() == 2;
    ok &= g11_ok;
    notes.push(format!("G11 edges {} triangles {}", g11.edges.len(), g11.triangles().len()));

    let v12 = own_index_set(1, 2);
    let mut agree = true;
    for a in &v12 {
        for b in &v12 {
            if a == b {
                continue;
            }
            let di0 = a[0] as i64 - b[0] as i64;
            let di1 = a[1] as i64 - b[1] as i64;
            let condition = di1.abs() <= 1 && di0 * di1 >= 0;
            agree &= condition == own_edge(a, b);
        }
    }
    ok &= agree;
    notes.push(format!("(1,2) rule matches transcribed condition: {agree}"));
    notes.push("cardinalities, edges and connectivity agree for n<=3, d<=3".into());
    outcome(ok, notes.join("; "))
}

// ------------------------------------------------------------ criterion 4

fn criterion_4() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();

    for d in [1u32, 2] {
        // ≺₀ is lexicographic with each coordinate reversed.
        let mut order = own_index_set(1, d);
        order.sort_by(|a, b| b.cmp(a));
        let id = |m: &[u32]| order.iter().position(|v| v == m).unwrap() as i64 + 1;
        let expected: RawWord = (1..=3 * d - 1)
            .flat_map(|k| [id(&[2, k]), id(&[1, k])])
            .collect();
        let got = raw(&delta_word(1, d, 1).unwrap());
        ok &= got == expected;
    }
    notes.push("delta_1 = t21 t11 t22 t12 ... for d=1,2".into());

    for (n, d) in [(1usize, 1u32), (1, 2), (2, 1), (2, 2), (3, 1)] {
        let mut order = own_index_set(n, d);
        order.sort_by(|a, b| b.cmp(a));
        let lib = build_index_set(n, d).unwrap();
        let ids: Vec<usize> = delta_word(n, d, 0)
            .unwrap()
            .letters()
            .iter()
            .map(|l| l.generator())
            .collect();
        let as_indices: Vec<Vec<u32>> = ids.iter().map(|&g| lib[g].0.clone()).collect();
        ok &= as_indices == order;
    }
    notes.push("delta_0 is the ascending product".into());

    // Relations as printed for (n,d) = (1,1), labels t1=(1,1) t2=(1,2) t3=(2,1) t4=(2,2).
    let printed: [(&str, RawWord, RawWord); 2] = [
        ("t_1_1", vec![4, 3, 2, 4, 3, 2, 1], vec![1, 4, 3, 2, 4, 3, 2]),
        ("t_2_2", vec![3, 2, 1, 3, 2, 1, 4], vec![4, 3, 2, 1, 3, 2, 1]),
    ];
    let generated = build_presentation(1, 1, Variant::Discriminant, BuildOptions::default()).unwrap();
    let fixture = special_fixture("n1d1").unwrap();
    let label = ["t_1_1", "t_1_2", "t_2_1", "t_2_2"];
    let to_printed = |x: i64| {
        let name = &generated.generators[(x.unsigned_abs() - 1) as usize];
        let k = label.iter().position(|l| l == name).unwrap() as i64 + 1;
        k * x.signum()
    };
    let asymptotic: Vec<_> = generated.relations_of(RelationKind::Asymptotic).collect();
    ok &= asymptotic.len() == 4;
    let mut matched = 0;
    for (name, lhs, rhs) in &printed {
        let i = generated.generator_index(name).unwrap();
        let r = asymptotic[i];
        let mine: RawWord = reduce(&relator(&raw(&r.lhs), &raw(&r.rhs)))
            .into_iter()
            .map(to_printed)
            .collect();
        let theirs = relator(lhs, rhs);
        if conjugate_or_inverse(&mine, &theirs) {
            matched += 1;
        }
        // The transcription in the library matches the printed text.
        ok &= fixture
            .relations
            .iter()
            .any(|f| raw(&f.lhs) == *lhs && raw(&f.rhs) == *rhs);
    }
    ok &= matched == printed.len();
    notes.push(format!(
        "type-iv relations conjugate to printed ones: {matched}/{} (the printed list has relations for t1 and t4 only)",
        printed.len()
    ));
    outcome(ok, notes.join("; "))
}

// ------------------------------------------------------------ criterion 5

fn match_multisets(a: &[Complex64], b: &[Complex64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    let mut used = vec![false; b.len()];
    let mut worst: f64 = 0.0;
    for x in a {
        let (k, dist) = b
            .iter()
            .enumerate()
            .filter(|(k, _)| !used[*k])
            .map(|(k, y)| (k, (x - y).norm()))
            .min_by(|p, q| p.1.total_cmp(&q.1))
            .unwrap();
        used[k] = true;
        worst = worst.max(dist);
    }
    worst
}

/// Critical values of `y³ − 3v₀y + Σ (x_κ^{3d} − 3d v_κ x_κ)` by solving each
/// summand's critical equation and substituting.
fn own_critical_values(n: usize, d: u32, v: &[f64]) -> Vec<Complex64> {
    let m = 3 * d - 1;
    let mut values: Vec<Complex64> = [1.0, -1.0]
        .iter()
        .map(|s| {
            let y = Complex64::new(s * v[0].sqrt(), 0.0);
            y * y * y - 3.0 * v[0] * y
        })
        .collect();
    for kappa in 1..=n {
        let r = v[kappa].powf(1.0 / m as f64);
        let part: Vec<Complex64> = (0..m)
            .map(|j| {
                let x = Complex64::from_polar(r, 2.0 * PI * j as f64 / m as f64);
                x.powu(3 * d) - (3 * d) as f64 * v[kappa] * x
            })
            .collect();
        values = values.iter().flat_map(|a| part.iter().map(move |b| a + b)).collect();
    }
    values
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let tol = 1e-9;
    let mut ok = true;
    let mut worst: f64 = 0.0;
    for (n, d) in [(1usize, 1u32), (1, 2), (2, 1)] {
        let p = HLParams::canonical(n, d).unwrap();
        let v: Vec<f64> = p.v.iter().map(|z| z.re).collect();
        let own: Vec<Complex64> = own_critical_values(n, d, &v).into_iter().map(|z| -z).collect();
        let closed = closed_form_values(&p).unwrap().values();
        let pencil = pencil_roots(&p);
        let e1 = match_multisets(&closed, &own);
        let e2 = match_multisets(&pencil, &own);
        worst = worst.max(e1).max(e2);
        ok &= closed.len() == 2 * (3 * d as usize - 1).pow(n as u32) && e1 <= tol && e2 <= tol;

        ok &= verify_hl_match(&p, tol).unwrap().matched;
        ok &= verify_root_of_unity_invariance(&p, tol).invariant;
        let circles = verify_circles(&p, tol).unwrap();
        ok &= circles.on_circles;

        // Oracle circle check: each value sits at distance (3d−1)v_n^{3d/(3d−1)}
        // from the value of its truncated index.
        let m = (3 * d - 1) as f64;
        let radius = m * v[n].powf(3.0 * d as f64 / m);
        let lower = own_critical_values(n - 1, d, &v[..n]);
        for z in &own {
            let residual = lower
                .iter()
                .map(|c| ((z + c).norm() - radius).abs())
                .fold(f64::INFINITY, f64::min);
            ok &= residual <= tol;
        }
        // Rotating v₀ by a cube root of unity permutes the values.
        let mut rotated = p.clone();
        rotated.v[0] *= Complex64::from_polar(1.0, 2.0 * PI / 3.0);
        let rot_err = match_multisets(&pencil, &pencil_roots(&rotated));
        ok &= rot_err <= tol;
    }
    let elapsed_ok = within(start, Duration::from_secs(10));
    outcome(
        ok && elapsed_ok,
        format!("(1,1),(1,2),(2,1): closed form vs independent evaluation max distance {worst:.2e} (tol 1e-9); invariance and circles hold"),
    )
}

// ------------------------------------------------------------ criterion 6

/// `∫ c(T X)` for a complete intersection of `k` hypersurfaces of degree `e`
/// in `ℙⁿ`: the `h^{n−k}` coefficient of `e^k (1+h)^{n+1} / (1+eh)^k`.
fn chern_euler(n: u32, e: i128, k: u32) -> i128 {
    if k > n {
        return 0;
    }
    let n = n as usize;
    let top = n - k as usize;
    let mut series: Vec<i128> = (0..=top).map(|j| binom(n as i128 + 1, j as i128)).collect();
    for _ in 0..k {
        // multiply by 1/(1+eh) = Σ (−e)^j h^j
        let mut next = vec![0i128; top + 1];
        for i in 0..=top {
            let mut p = 1i128;
            for j in 0..=top - i {
                next[i + j] += series[i] * p;
                p *= -e;
            }
        }
        series = next;
    }
    e.pow(k) * series[top]
}

fn binom(n: i128, k: i128) -> i128 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let report = verify_balance(6, 6).unwrap();
    let mut ok = report.passed();
    let mut oracle_checks = 0;
    let big = |x: &BigInt| x.to_string().parse::<i128>().unwrap();
    for n in 1..=6u32 {
        let sign: i128 = if n % 2 == 0 { 1 } else { -1 };
        for d in 1..=6u32 {
            let r = degrees(n, d).unwrap();
            let e = 3 * d as i128;
            let pn = n as i128 + 1;
            let pn1 = n as i128;
            let hyp = chern_euler(n, e, 1);
            let hyp1 = chern_euler(n - 1, e, 1);
            let ci = chern_euler(n, e, 2);
            let deg_p = big(&r.deg_p);
            let deg_z_p = big(&r.deg_z_p);
            ok &= sign * (2 * pn - 4 * hyp + 2 * ci) == deg_p;
            ok &= sign * (2 * pn - 2 * pn1 - 2 * hyp + 2 * hyp1) == deg_z_p;
            ok &= deg_z_p == 2 * (3 * d as i128 - 1).pow(n);
            oracle_checks += 3;
            if n >= 2 {
                let lower = big(&degrees(n - 1, d).unwrap().deg_p);
                ok &= deg_p - deg_z_p == (3 * d as i128 - 1) * lower;
                oracle_checks += 1;
            }
        }
    }
    let elapsed_ok = within(start, Duration::from_secs(1));
    outcome(
        ok && elapsed_ok,
        format!(
            "{} library identities, {} violations; {oracle_checks} Chern-class oracle checks for 1<=n,d<=6",
            report.checks,
            report.violations.len()
        ),
    )
}

// ------------------------------------------------------------ criterion 7

fn int(x: i64) -> BigInt {
    BigInt::from(x)
}

fn zero() -> BigInt {
    BigInt::from(0)
}

/// Fraction-free determinant.
fn bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return int(1);
    }
    let mut sign = 1;
    let mut prev = int(1);
    for k in 0..n - 1 {
        if m[k][k] == zero() {
            let Some(swap) = (k + 1..n).find(|&i| m[i][k] != zero()) else {
                return zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Resultant of two univariate polynomials given constant term first.
fn resultant(f: &[BigInt], g: &[BigInt]) -> BigInt {
    let (m, n) = (f.len() - 1, g.len() - 1);
    let size = m + n;
    let mut s = vec![vec![zero(); size]; size];
    for r in 0..n {
        for (k, c) in f.iter().rev().enumerate() {
            s[r][r + k] = c.clone();
        }
    }
    for r in 0..m {
        for (k, c) in g.iter().rev().enumerate() {
            s[n + r][r + k] = c.clone();
        }
    }
    bareiss(s)
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `disc_x(Δ) / Res_x(B, C + z x^6)^3` at an integer `z`, or `None` where the
/// evaluation is not valid (leading coefficient or contact resultant vanishes).
fn corrected_at(d: u32, b: &[i64], c: &[i64], z: i64) -> Option<BigInt> {
    let b: Vec<BigInt> = b.iter().map(|&x| int(x)).collect();
    let mut pencil: Vec<BigInt> = c.iter().map(|&x| int(x)).collect();
    pencil[3 * d as usize] += int(z);
    let b3 = poly_mul(&poly_mul(&b, &b), &b);
    let c2 = poly_mul(&pencil, &pencil);
    let delta: Vec<BigInt> = (0..b3.len().max(c2.len()))
        .map(|k| {
            int(4) * b3.get(k).cloned().unwrap_or_else(zero)
                + int(27) * c2.get(k).cloned().unwrap_or_else(zero)
        })
        .collect();
    let deg = delta.len() - 1;
    let lc = delta[deg].clone();
    let contact = resultant(&b, &pencil);
    if lc == zero() || contact == zero() {
        return None;
    }
    let derivative: Vec<BigInt> = (1..=deg).map(|k| &delta[k] * int(k as i64)).collect();
    let res = resultant(&delta, &derivative);
    let sign = if (deg * (deg - 1) / 2).is_multiple_of(2) { int(1) } else { int(-1) };
    let disc = sign * res / lc;
    let cube = &contact * &contact * &contact;
    Some(disc / cube)
}

/// Degree of the polynomial through equally spaced samples, from finite
/// differences; `None` for the zero polynomial.
fn degree_from_samples(mut values: Vec<BigInt>) -> Option<usize> {
    let mut degree = None;
    let mut order = 0;
    while !values.is_empty() {
        if values.iter().any(|v| *v != zero()) {
            degree = Some(order);
        }
        values = values.windows(2).map(|w| &w[1] - &w[0]).collect();
        order += 1;
    }
    degree
}

fn oracle_slice_degree(d: u32, b: &[i64], c: &[i64]) -> Option<usize> {
    // Bound: disc_x(Δ) has z-degree at most 2(6d − 1) = 22 for d = 2.
    let samples = 2 * (6 * d as usize - 1) + 2;
    let mut start = 0i64;
    'search: loop {
        let mut values = Vec::with_capacity(samples);
        for k in 0..samples as i64 {
            match corrected_at(d, b, c, start + k) {
                Some(v) => values.push(v),
                None => {
                    start += k + 1;
                    continue 'search;
                }
            }
        }
        return degree_from_samples(values);
    }
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let d = 2;
    let expected = 2 * (3 * d - 1);
    let (mut raw_exact, mut raw_exceeded) = (0, 0);
    let (mut exact, mut exceeded) = (0, 0);
    let mut agree = true;
    let mut raw = Vec::new();
    for seed in 0..10u64 {
        let r = weierstrass_slice_zdegree(d, seed).unwrap();
        let (b, c) = sample_slice(d, seed);
        let oracle = oracle_slice_degree(d, &b, &c).map(|x| x as u32);
        agree &= oracle == r.z_degree && r.raw_matches_correction();
        let raw_z = r.raw_z_degree.unwrap_or(0);
        raw_exact += usize::from(r.raw_z_degree == Some(expected));
        raw_exceeded += usize::from(raw_z > expected);
        let z = r.z_degree.unwrap_or(0);
        exact += usize::from(r.z_degree == Some(expected));
        exceeded += usize::from(z > expected);
        raw.push(r.raw_z_degree.map_or("-".into(), |x| x.to_string()));
    }
    let elapsed_ok = within(start, Duration::from_secs(300));
    outcome(
        raw_exact >= 9 && raw_exceeded == 0 && elapsed_ok,
        format!(
            "disc_x z-degree 10 in {raw_exact}/10 seeds, {raw_exceeded} above 10 (degrees: {}); \
             after removing the Res(B, C+zx^6)^3 factor: 10 in {exact}/10, {exceeded} above 10, \
             interpolation oracle agrees: {agree}",
            raw.join(",")
        ),
    )
}

// ------------------------------------------------------------ criterion 8

/// `f` and its gradient written out directly.
fn own_f(g: &GParams, p: &[Complex64]) -> (Complex64, Vec<Complex64>) {
    let (n, d) = (g.n, g.d);
    let d3 = 3.0 * d as f64;
    let m = d3 - 1.0;
    let lam = g.lambda;
    let y = p[0];
    let xn = p[n];
    let mut f = y.powu(3) - 3.0 * g.lambda0 * y + xn.powu(3 * d) - d3 * g.lambda_n * xn
        - d3 / m * g.lambda_n_prime * xn.powu(3 * d - 1)
        - 3.0 * lam * g.lambda0 * y * xn.powu(2 * d);
    let mut grad = vec![Complex64::new(0.0, 0.0); n + 1];
    grad[0] = 3.0 * y * y - 3.0 * g.lambda0 - 3.0 * lam * g.lambda0 * xn.powu(2 * d);
    let mut dxn = d3 * xn.powu(3 * d - 1)
        - d3 * g.lambda_n
        - d3 * g.lambda_n_prime * xn.powu(3 * d - 2)
        - 3.0 * lam * g.lambda0 * y * (2 * d) as f64 * xn.powu(2 * d - 1);
    for i in 1..n {
        let (x, l) = (p[i], g.lambda_i[i - 1]);
        f += x.powu(3 * d) - d3 * l * x - 3.0 * lam * d as f64 * l * x * xn.powu(3 * d - 1);
        grad[i] = d3 * x.powu(3 * d - 1) - d3 * l - 3.0 * lam * d as f64 * l * xn.powu(3 * d - 1);
        dxn -= 3.0 * lam * d as f64 * l * x * m * xn.powu(3 * d - 2);
    }
    grad[n] = dxn;
    (f, grad)
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let mut ok = true;
    let mut worst_identity: f64 = 0.0;
    let mut worst_gradient: f64 = 0.0;
    let mut min_margin = f64::INFINITY;
    let mut literal_f_largest = 0;
    let mut cases = 0;
    for n in [1usize, 2] {
        for seed in 0..5u64 {
            cases += 1;
            let g = GParams::sample(n, 1, seed).unwrap();
            let crit = lambda_crit(&g).unwrap();
            let target = 0.5 * crit;
            let cont = continue_critical_points(&g, target).unwrap();
            let gl = g.with_lambda(target);
            ok &= cont.all_succeeded() && cont.points.len() == 2 * 2usize.pow(n as u32);

            let mut values = Vec::new();
            for pt in &cont.points {
                let (f, grad) = own_f(&gl, &pt.coordinates);
                let gnorm = grad.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
                // −2λ₀y − (3d−1)λ_n x_n − λ_n′x_n^{3d−1}/(3d−1) − (3d−1)Σλ_i x_i at d = 1
                let c = &pt.coordinates;
                let mut by_identity = -2.0 * gl.lambda0 * c[0]
                    - 2.0 * gl.lambda_n * c[n]
                    - gl.lambda_n_prime * c[n].powu(2) / 2.0;
                for i in 1..n {
                    by_identity -= 2.0 * gl.lambda_i[i - 1] * c[i];
                }
                worst_identity = worst_identity.max((f - by_identity).norm());
                worst_gradient = worst_gradient.max(gnorm);
                values.push((pt.seed, f));
            }
            let largest = verify_largest(&g, target, 1e-9).unwrap();
            ok &= largest.holds;
            min_margin = min_margin.min(largest.margin);

            // Pencil-root convention: −f at the all-positive point has the
            // largest real part.
            let star = values.iter().find(|(s, _)| *s == 0).unwrap().1;
            let top = values
                .iter()
                .filter(|(s, _)| *s != 0)
                .all(|(_, f)| (-star).re >= (-*f).re - 1e-9);
            ok &= top;
            literal_f_largest += usize::from(
                values.iter().filter(|(s, _)| *s != 0).all(|(_, f)| star.re >= f.re),
            );
        }
    }
    ok &= worst_identity <= 1e-8 && worst_gradient <= 1e-8;
    let elapsed_ok = within(start, Duration::from_secs(60));
    outcome(
        ok && elapsed_ok,
        format!(
            "{cases} parameter sets (n=1,2; d=1; lambda=0.5 lambda_crit): identity error {worst_identity:.1e}, \
             gradient {worst_gradient:.1e}, distinguished point largest as pencil root -f with margin {min_margin:.3} \
             (largest Re f itself in {literal_f_largest}/{cases})"
        ),
    )
}

// ------------------------------------------------------------ criterion 9

type Perm = Vec<usize>;

fn compose(a: &Perm, b: &Perm) -> Perm {
    // apply a then b
    a.iter().map(|&x| b[x]).collect()
}

fn closure(gens: &[Perm]) -> usize {
    let id: Perm = (0..gens[0].len()).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = compose(&x, g);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.len()
}

fn permutations(k: usize) -> Vec<Perm> {
    if k == 0 {
        return vec![vec![]];
    }
    permutations(k - 1)
        .into_iter()
        .flat_map(|p| {
            (0..k).map(move |pos| {
                let mut q: Perm = p.clone();
                q.insert(pos, k - 1);
                q
            })
        })
        .collect()
}

fn sl2_order_mod(p: u64) -> (usize, usize) {
    let mut count = 0;
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    if (a * d + p * p - b * c % p) % p == 1 {
                        count += 1;
                    }
                }
            }
        }
    }
    let mul = |x: [u64; 4], y: [u64; 4]| {
        [
            (x[0] * y[0] + x[1] * y[2]) % p,
            (x[0] * y[1] + x[1] * y[3]) % p,
            (x[2] * y[0] + x[3] * y[2]) % p,
            (x[2] * y[1] + x[3] * y[3]) % p,
        ]
    };
    let gens = [[1, 1, 0, 1], [1, 0, p - 1, 1]];
    let mut seen = HashSet::from([[1, 0, 0, 1]]);
    let mut queue = VecDeque::from([[1u64, 0, 0, 1]]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = mul(x, g);
            if seen.insert(y) {
                queue.push_back(y);
            }
        }
    }
    (count, seen.len())
}

fn criterion_9() -> Outcome {
    let a = Letter::pos(0);
    let b = Letter::pos(1);
    let p = Presentation {
        meta: Meta {
            n: None,
            d: None,
            variant: Variant::Fixture,
            pact_exponent: None,
            l: None,
            fixture: None,
        },
        generators: vec!["a".into(), "b".into()],
        relations: vec![
            wpi_core::Relation::new(Word(vec![a, a]), Word::empty(), RelationKind::Power),
            wpi_core::Relation::new(Word(vec![b, b]), Word::empty(), RelationKind::Power),
            wpi_core::Relation::new(Word(vec![a, b, a, b, a, b]), Word::empty(), RelationKind::Power),
        ],
    };
    let outcome_tc = todd_coxeter(&p, &[], 1000);
    let (index, table_ok, regular) = match &outcome_tc {
        CosetOutcome::Closed(t) => {
            let perm = |col: usize| -> Perm { t.rows.iter().map(|r| r[col]).collect() };
            let order = closure(&[perm(0), perm(2)]);
            (t.index(), t.satisfies(&p.relators()), order == t.index())
        }
        CosetOutcome::Exceeded { .. } => (0, false, false),
    };

    // Largest group generated by a pair of permutations on 3 points that
    // satisfies the relations.
    let mut oracle = 0;
    for x in permutations(3) {
        for y in permutations(3) {
            let xy = compose(&x, &y);
            let id: Perm = (0..3).collect();
            if compose(&x, &x) == id && compose(&y, &y) == id && compose(&compose(&xy, &xy), &xy) == id {
                oracle = oracle.max(closure(&[x.clone(), y.clone()]));
            }
        }
    }

    let (count2, bfs2) = sl2_order_mod(2);
    let (count3, bfs3) = sl2_order_mod(3);
    let lib2 = matrix_group_closure(&sl2_images(), 2, 1000).unwrap();
    let lib3 = matrix_group_closure(&sl2_images(), 3, 1000).unwrap();
    let ok = index == 6
        && oracle == 6
        && table_ok
        && regular
        && (count2, bfs2, lib2) == (6, 6, 6)
        && (count3, bfs3, lib3) == (24, 24, 24);
    outcome(
        ok,
        format!(
            "coset index {index} (permutation oracle {oracle}); SL2 closure mod 2 = {lib2} (|SL2(F2)| = {count2}), \
             mod 3 = {lib3} (|SL2(F3)| = {count3})"
        ),
    )
}

// ----------------------------------------------------------- criterion 10

fn criterion_10() -> Outcome {
    // The presentations being the fundamental groups, irreducibility,
    // coprimality and the stack statements are taken as given. What is
    // checked is structural: every emitted relator is nontrivial after cyclic
    // reduction and refers only to listed generators.
    let mut ok = true;
    let mut count = 0;
    for (n, d) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        for variant in [Variant::Singularity, Variant::Discriminant, Variant::Moduli] {
            let opts = BuildOptions {
                allow_odd_d: true,
                ..BuildOptions::default()
            };
            let p = build_presentation(n, d, variant, opts).unwrap();
            ok &= p.validate().is_ok();
            for r in &p.relations {
                count += 1;
                ok &= !cyclic(&relator(&raw(&r.lhs), &raw(&r.rhs))).is_empty();
            }
        }
    }
    outcome(
        ok,
        format!(
            "informational: topological identifications are not desk-checkable; {count} generated relators are nontrivial and well formed"
        ),
    )
}
