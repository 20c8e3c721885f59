//! Acceptance gate: the eight end-to-end criteria, one report line each.
//!
//! Expected values are either transcribed from the published tables and
//! worked computations, or recomputed here by code paths that share nothing
//! with the routine under test (integer principal minors for Cartan types,
//! explicit braid-group operators for the braid equation, dense vs sparse
//! elimination for ranks).

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use nichols_cli::run;
use nichols_core::criteria::{orbit_verdict, pair_verdict, recheck_step, OrbitOutcome, Outcome, RepSpec, Rule};
use nichols_core::cyclo::Cyclotomic;
use nichols_core::diagonal::{components, is_finite_type, ComponentKind, Gcm};
use nichols_core::nichols::{braid_action, hilbert_prefix, RankRoute, DEFAULT_BUDGET};
use nichols_core::perm::{symmetric_group, CycleType};
use nichols_core::reps::resolve_label;
use nichols_core::ydmod::{braiding, diagonalize_abelian_class, verify_axioms, YdModule};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::Value;

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn within(elapsed: Duration, limit_secs: f64) -> Check {
    ensure!(
        elapsed.as_secs_f64() < limit_secs,
        "took {:.2}s, limit {limit_secs}s",
        elapsed.as_secs_f64()
    );
    Ok(format!("{:.2}s", elapsed.as_secs_f64()))
}

fn table_rows(which: &str) -> Result<Vec<Value>, String> {
    let out = run(["nichols", "table", which, "--format", "json"]);
    ensure!(out.code == 0, "exit {}: {}", out.code, out.stderr);
    let doc: Value = serde_json::from_str(&out.stdout).map_err(|e| e.to_string())?;
    Ok(doc["rows"].as_array().cloned().unwrap_or_default())
}

/// Rows as (orbit, representation, dim, reference); dim `None` is ∞. The
/// published references map to rule ids: trivial braiding, the odd-order
/// theorem, the cycle lemma (real class) and the two-transposition theorem.
fn compare_table(which: &str, expected: &[(&str, &str, Option<u64>, &str)]) -> Check {
    let rows = table_rows(which)?;
    ensure!(rows.len() == expected.len(), "{} rows, expected {}", rows.len(), expected.len());
    for (row, &(orbit, rep, dim, reference)) in rows.iter().zip(expected) {
        let got = (
            row["orbit"].as_str().unwrap_or(""),
            row["representation"].as_str().unwrap_or(""),
            row["dim"].as_u64(),
            row["reference"].as_str().unwrap_or(""),
        );
        ensure!(got == (orbit, rep, dim, reference), "row {got:?}, expected {:?}", (orbit, rep, dim, reference));
        let value = if dim.is_some() { "finite" } else { "infinite" };
        ensure!(row["value"] == value, "row {orbit} {rep}: value {}", row["value"]);
    }
    Ok(format!("{} rows", rows.len()))
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let rows = compare_table(
        "s3",
        &[
            ("e", "any", None, "trivial-braiding"),
            ("O₃", "any", None, "odd-order"),
            ("O₂", "ε", None, "trivial-braiding"),
            ("O₂", "sgn", Some(12), "ms"),
        ],
    )?;
    Ok(format!("{rows}, (∞, ∞, ∞, 12), {}", within(start.elapsed(), 1.0)?))
}

fn criterion_2() -> Check {
    let start = Instant::now();
    let rows = compare_table(
        "s4",
        &[
            ("e", "any", None, "trivial-braiding"),
            ("O₂,₂", "any", None, "dosdos"),
            ("O₄", "ε", None, "trivial-braiding"),
            ("O₄", "χ₄ or χ₄³", None, "real-class"),
            ("O₄", "χ₄²", Some(576), "AG2 6.12"),
            ("O₃", "any", None, "odd-order"),
            ("O₂", "ε or ε ⊕ sgn", None, "trivial-braiding"),
            ("O₂", "sgn ⊕ ε", Some(576), "FK"),
            ("O₂", "sgn ⊕ sgn", Some(576), "ms"),
        ],
    )?;
    Ok(format!("{rows}, ∞×6 and 576×3, {}", within(start.elapsed(), 5.0)?))
}

fn criterion_3() -> Check {
    let start = Instant::now();
    let s = CycleType::parse("2^2", 4).map_err(|e| e.to_string())?.representative();
    let rho = resolve_label(&"d4:rho2".parse().map_err(|e| format!("{e}"))?, &s).map_err(|e| e.to_string())?;
    let m = YdModule::for_pair(&s, rho).map_err(|e| e.to_string())?;
    let d = diagonalize_abelian_class(&m).map_err(|e| e.to_string())?;
    let q = d.braiding.matrix();
    ensure!(q.len() == 6, "rank {}", q.len());
    let minus_one = Cyclotomic::from_int(-1);
    ensure!((0..6).all(|i| q[i][i] == minus_one), "some q_ii ≠ -1");
    // With q_ii = -1 the Cartan entry is 0 when q_ij q_ji = 1 and -1 when it is -1.
    let mut a = vec![vec![0i64; 6]; 6];
    for i in 0..6 {
        for j in 0..6 {
            let prod = &q[i][j] * &q[j][i];
            a[i][j] = if i == j {
                2
            } else if prod.is_one() {
                0
            } else if prod == minus_one {
                -1
            } else {
                return Err(format!("q_{i}{j} q_{j}{i} = {prod} is not ±1"));
            };
        }
    }
    let gcm = Gcm::new(a).map_err(|e| e.to_string())?;
    let comps = components(&gcm);
    let mut sizes: Vec<usize> = comps.iter().map(Vec::len).collect();
    sizes.sort_unstable();
    ensure!(sizes == [3, 3], "component sizes {sizes:?}");
    let report = is_finite_type(&gcm);
    ensure!(!report.finite, "classified as finite");
    let affine_a2 = vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]];
    for c in &report.components {
        ensure!(c.gcm.rows() == affine_a2.as_slice(), "component {:?} has GCM {:?}", c.vertices, c.gcm.rows());
        ensure!(
            matches!(&c.kind, ComponentKind::Affine(Some(name)) if name == "A2^(1)"),
            "component {:?} classified {}",
            c.vertices,
            c.kind
        );
        // Independent check: affine means singular with positive proper minors.
        ensure!(det(c.gcm.rows()) == 0 && kac_finite(&c.gcm.rows()[..2].iter().map(|r| r[..2].to_vec()).collect::<Vec<_>>()), "not affine");
    }
    let shown: Vec<String> = comps
        .iter()
        .map(|c| format!("{{{}}}", c.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(",")))
        .collect();
    Ok(format!("components {} both affine A2^(1), {}", shown.join(" "), within(start.elapsed(), 1.0)?))
}

fn criterion_4() -> Check {
    let start = Instant::now();
    let s3 = CycleType::parse("2", 3).map_err(|e| e.to_string())?.representative();
    let sgn = resolve_label(&"sgn".parse().map_err(|e| format!("{e}"))?, &s3).map_err(|e| e.to_string())?;
    let m = YdModule::for_pair(&s3, sgn).map_err(|e| e.to_string())?;
    let dims = hilbert_prefix(&m, 5, DEFAULT_BUDGET, RankRoute::Sparse).map_err(|e| e.to_string())?;
    ensure!(dims.dims == [1, 3, 4, 3, 1, 0], "dims {:?}", dims.dims);
    ensure!(dims.exhausted && dims.total() == 12, "exhausted {} total {}", dims.exhausted, dims.total());
    let s3_time = within(start.elapsed(), 10.0)?;

    let s4 = CycleType::parse("4", 4).map_err(|e| e.to_string())?.representative();
    let chi = resolve_label(&"chi4^2".parse().map_err(|e| format!("{e}"))?, &s4).map_err(|e| e.to_string())?;
    let m = YdModule::for_pair(&s4, chi).map_err(|e| e.to_string())?;
    let sparse = hilbert_prefix(&m, 3, DEFAULT_BUDGET, RankRoute::Sparse).map_err(|e| e.to_string())?;
    let dense = hilbert_prefix(&m, 3, DEFAULT_BUDGET, RankRoute::Dense).map_err(|e| e.to_string())?;
    ensure!(sparse == dense, "sparse {:?} vs dense {:?}", sparse.dims, dense.dims);
    ensure!(sparse.dims[..2] == [1, 6], "O4 prefix {:?}", sparse.dims);
    Ok(format!(
        "S3 sgn dims {:?} total 12 in {s3_time}; O4 χ4² prefix {:?} dense = sparse",
        dims.dims, sparse.dims
    ))
}

fn criterion_5() -> Check {
    let start = Instant::now();
    let mut checked = 0;
    let mut sweep = |n: usize, t: &CycleType| -> Result<(), String> {
        let v = orbit_verdict(n, t);
        ensure!(v.outcome == OrbitOutcome::InfiniteForAllRho, "S{n} type {t}: {:?}", v.outcome);
        ensure!(v.trace.iter().any(|s| s.fired), "S{n} type {t}: no fired step");
        for step in &v.trace {
            recheck_step(step).map_err(|e| format!("S{n} type {t}: {e}"))?;
        }
        let s = t.representative();
        ensure!(s.reversal_involution().act(&s) == s.inverse(), "S{n} type {t}: class not real");
        checked += 1;
        Ok(())
    };
    let mut odd = 0;
    for n in 3..=6 {
        for t in CycleType::all(n).iter().filter(|t| t.order() % 2 == 1) {
            sweep(n, t)?;
            odd += 1;
        }
    }
    let mut two_two = 0;
    for n in 4..=8 {
        let matching = CycleType::all(n)
            .into_iter()
            .filter(|t| t.multiplicity(2) == 2 && t.lengths().iter().all(|&l| l == 2 || l % 2 == 1));
        for t in matching {
            sweep(n, &t)?;
            two_two += 1;
        }
    }
    Ok(format!(
        "{checked} classes ({odd} odd-order in S3-S6, {two_two} of type (1^a, 2^2, odd) in S4-S8), {}",
        within(start.elapsed(), 30.0)?
    ))
}

/// Random element of `Q(ζ_60)`: a short rational combination of roots of unity.
fn random_cyclotomic(rng: &mut StdRng) -> Cyclotomic {
    const CONDUCTORS: [u32; 7] = [1, 3, 4, 5, 6, 12, 15];
    let terms = rng.gen_range(0..4);
    (0..terms).fold(Cyclotomic::zero(), |acc, _| {
        let n = CONDUCTORS[rng.gen_range(0..CONDUCTORS.len())];
        let k = rng.gen_range(0..n as i64);
        let c = Cyclotomic::from_fraction(rng.gen_range(-5..=5), rng.gen_range(1..=4));
        acc + c * Cyclotomic::root_of_unity(n, k)
    })
}

fn criterion_6() -> Check {
    let start = Instant::now();
    let mut modules = 0;
    for (n, t, label) in [(3, "2", "sgn"), (4, "4", "chi4^2"), (4, "2", "sgn*eps"), (4, "2", "sgn*sgn")] {
        let ty = CycleType::parse(t, n).map_err(|e| e.to_string())?;
        let s = ty.representative();
        let rho = resolve_label(&label.parse().map_err(|e| format!("{e}"))?, &s).map_err(|e| e.to_string())?;
        let m = YdModule::for_pair(&s, rho).map_err(|e| e.to_string())?;
        let report = verify_axioms(&m);
        ensure!(report.passed() && report.exhaustive, "S{n} {t} {label}: {report:?}");

        // Independent checks over the whole group: grading is conjugation
        // covariant and the action is multiplicative.
        let group: Vec<_> = symmetric_group(n).collect();
        let class = m.section().class_list();
        for g in &group {
            let op = m.action(g);
            for (i, t_i) in class.iter().enumerate() {
                let moved = m.section().index_of(&g.act(t_i));
                ensure!(moved == Some(op.targets[i]), "S{n} {t} {label}: g = {g} breaks the grading");
            }
            for h in &group {
                ensure!(
                    m.action(&g.mul(h)) == op.compose(&m.action(h)),
                    "S{n} {t} {label}: action of {g}·{h} is not multiplicative"
                );
            }
        }

        // Braid relation on V^{⊗3} from explicit leg operators.
        let c = braiding(&m);
        let s1 = braid_action(&c, 3, 1).map_err(|e| e.to_string())?;
        let s2 = braid_action(&c, 3, 2).map_err(|e| e.to_string())?;
        ensure!(
            s1.compose(&s2).compose(&s1) == s2.compose(&s1).compose(&s2),
            "S{n} {t} {label}: braid relation fails"
        );
        modules += 1;
    }

    let mut rng = StdRng::seed_from_u64(0xc1c1_0);
    let cases = 10_000;
    for case in 0..cases {
        let (a, b, c) = (random_cyclotomic(&mut rng), random_cyclotomic(&mut rng), random_cyclotomic(&mut rng));
        let fail = |what: &str| format!("case {case}: {what} fails for a = {a}, b = {b}, c = {c}");
        ensure!(&a + &b == &b + &a, "{}", fail("commutative +"));
        ensure!(&a * &b == &b * &a, "{}", fail("commutative ×"));
        ensure!((&a + &b) + &c == &a + &(&b + &c), "{}", fail("associative +"));
        ensure!((&a * &b) * &c == &a * &(&b * &c), "{}", fail("associative ×"));
        ensure!(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), "{}", fail("distributive"));
        ensure!(&a - &a == Cyclotomic::zero() && &a * &Cyclotomic::one() == a, "{}", fail("identities"));
        if !a.is_zero() {
            let inv = a.inv().map_err(|e| fail(&e.to_string()))?;
            ensure!((&a * &inv).is_one(), "{}", fail("inverse"));
        }
    }

    let mut elements = 0;
    for n in 3..=6 {
        for p in symmetric_group(n) {
            let sigma = p.reversal_involution();
            ensure!(sigma.act(&p) == p.inverse(), "σ does not invert {p}");
            ensure!(sigma.mul(&sigma).is_identity(), "σ = {sigma} is not an involution");
            elements += 1;
        }
    }
    Ok(format!(
        "{modules} registry modules exhaustive, {cases} field cases, {elements} reversal checks, {:.2}s",
        start.elapsed().as_secs_f64()
    ))
}

fn det(m: &[Vec<i64>]) -> i64 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect())
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

/// Finite type iff every principal minor is positive.
fn kac_finite(a: &[Vec<i64>]) -> bool {
    let n = a.len();
    (1u32..(1 << n)).all(|mask| {
        let idx: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let sub: Vec<Vec<i64>> = idx.iter().map(|&i| idx.iter().map(|&j| a[i][j]).collect()).collect();
        det(&sub) > 0
    })
}

fn criterion_7() -> Check {
    let start = Instant::now();
    let mut total = 0;
    let mut finite = 0;
    for rank in 1..=3usize {
        let pairs: Vec<(usize, usize)> = (0..rank).flat_map(|i| (i + 1..rank).map(move |j| (i, j))).collect();
        let choices = 25u32.pow(pairs.len() as u32);
        for code in 0..choices {
            let mut a = vec![vec![0i64; rank]; rank];
            (0..rank).for_each(|i| a[i][i] = 2);
            let mut rest = code;
            let mut valid = true;
            for &(i, j) in &pairs {
                let (x, y) = ((rest % 5) as i64, (rest / 5 % 5) as i64);
                rest /= 25;
                a[i][j] = -x;
                a[j][i] = -y;
                valid &= (x == 0) == (y == 0);
            }
            if !valid {
                continue;
            }
            let gcm = Gcm::new(a.clone()).map_err(|e| format!("{a:?}: {e}"))?;
            let oracle = kac_finite(&a);
            ensure!(is_finite_type(&gcm).finite == oracle, "{a:?}: oracle says finite = {oracle}");
            total += 1;
            finite += oracle as usize;
        }
    }
    Ok(format!("{total} GCMs, {finite} finite, {}", within(start.elapsed(), 10.0)?))
}

fn criterion_8() -> Check {
    let t = CycleType::parse("2", 6).map_err(|e| e.to_string())?;
    let mut notes = Vec::new();
    for label in ["sgn*eps", "sgn*sgn"] {
        let v = pair_verdict(6, &t, &RepSpec::Label(label.parse().map_err(|e| format!("{e}"))?))
            .map_err(|e| e.to_string())?;
        ensure!(v.outcome == Outcome::Unknown, "{label}: {:?} via {:?}", v.outcome, v.deciding_rule());
        ensure!(
            v.trace.iter().any(|s| s.rule == Rule::DiagonalCartan),
            "{label}: the diagonal search was not attempted"
        );
        notes.push(label);
    }
    Ok(format!("O₂ in S6 with {} stays Unknown", notes.join(", ")))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Check); 8] = [
        ("S3 table reproduction", criterion_1),
        ("S4 table reproduction", criterion_2),
        ("O_(2,2) diagonal subspace", criterion_3),
        ("Hilbert series of dimension 12", criterion_4),
        ("odd-order and two-transposition sweep", criterion_5),
        ("axiom property suite", criterion_6),
        ("finite-type oracle equivalence", criterion_7),
        ("honest Unknown for O₂ in S6", criterion_8),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let result = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            Err(e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        match result {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", i + 1),
            Err(why) => {
                println!("criterion {}: FAIL {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
