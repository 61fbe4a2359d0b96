//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines always appear in `cargo test` output.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use constacyclic::chainring::{parse_ambient, psi_map, AmbientElement, BigQuotientElement, RingElement};
use constacyclic::codes::{build_code, dual_code, enumerate_codes, self_dual_codes, CodeIndex};
use constacyclic::decomposition::{compute_decomposition, Decomposition};
use constacyclic::fieldpoly::{factor_xn_minus_delta, Field, Poly};
use constacyclic::oracle::{check_duality, check_record, check_self_dual, euclidean_dual, span_ideal};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const E: [&str; 3] = [
    "{x}^{6}+ ( {u}^{2}+1 ) {x}^{5}+{x}^{4}+ ( {u}^{2}+1) {x}^{3}+{x}^{2}+ ( {u}^{2}+1 ) x+1",
    "{x}^{4}+{x}^{2}+ ( {u}^{2}+1 ) x+1",
    "{x}^{6}+ ( {u}^{2}+1 ) {x}^{5}+ ( {u}^{2}+1 ) {x}^{3}+1",
];

const SELF_DUAL: [(&str, &str); 5] = [
    ("(2,0,4)", "{u}^{2}{x}^{6}+{u}^{2}{x}^{5}+ ( {u}^{2}+1 ) {x}^{4}+{u}^{2}{x}^{3}+ ( {u}^{2}+1 ) {x}^{2}+x+{u}^{2}+1"),
    (
        "(2,1,3)",
        " ( {u}^{3}+{u}^{2} ) {x}^{6}+ ( {u}^{3}+{u}^{2}) {x}^{5}+ ( {u}^{2}+u ) {x}^{4}+ ( {u}^{3}+{u}^{2} ) {x}^{3}\
         + ( {u}^{2}+u ) {x}^{2}+ ( {u}^{3}+{u}^{2}+u ) x+{u}^{3}+{u}^{2}+u",
    ),
    ("(2,2,2)", "u^2"),
    (
        "(2,3,1)",
        " ( {u}^{2}+u ) {x}^{6}+ ( {u}^{3}+{u}^{2}+u ) {x}^{5}+ ( {u}^{3}+{u}^{2} ) {x}^{4}+ ( {u}^{3}+{u}^{2} ) {x}^{2}\
         + ( {u}^{3}+{u}^{2}+u ) {x}^{3}+ ( {u}^{3}+{u}^{2} ) x+{u}^{3}+{u}^{2}+u",
    ),
    ("(2,4,0)", " ( {u}^{2}+1 ) {x}^{6}+{x}^{5}+{x}^{4}{u}^{2}+{x}^{3}+{x}^{2}{u}^{2}+x{u}^{2}+{u}^{2}+1"),
];

type Criterion = (&'static str, Duration, fn() -> Outcome);

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn worked_example() -> (Field, Decomposition) {
    let fd = Field::gf(2, 1).unwrap();
    let d = compute_decomposition(&fd, 7, fd.one(), fd.one()).unwrap();
    (fd, d)
}

fn listed_poly(s: &str, fd: &Field) -> AmbientElement {
    parse_ambient(s, 7, RingElement::from_encs(fd, [1, 0, 1, 0]).unwrap(), fd).unwrap()
}

fn factorization() -> Outcome {
    let fd = Field::gf(2, 1).unwrap();
    let fz = factor_xn_minus_delta(&fd, 7, fd.one()).unwrap();
    let got: Vec<String> = fz.polys().map(|p| p.to_string()).collect();
    outcome(got == ["x + 1", "x^3 + x + 1", "x^3 + x^2 + 1"], got.join(", "))
}

fn idempotents() -> Outcome {
    let (fd, d) = worked_example();
    let matches = d.factors.iter().zip(E).filter(|(rec, s)| rec.e == listed_poly(s, &fd)).count();
    let ok = matches == 3 && d.tau == [0, 2, 1] && d.rho == Some(1) && d.eps_pairs == Some(1) && d.verify().is_ok();
    outcome(ok, format!("{matches}/3 e_j match, tau(2) = {}, rho = {:?}, eps = {:?}", d.tau[1] + 1, d.rho, d.eps_pairs))
}

fn enumeration() -> Outcome {
    let (fd, d) = worked_example();
    let (mut count, mut formula, mut oracle) = (0, 0, 0);
    for rec in enumerate_codes(&d) {
        let l: Vec<usize> = rec.index.ls().iter().map(|&x| x as usize).collect();
        let expected = 28 - (l[0] + 3 * (l[1] + l[2]));
        count += 1;
        formula += (rec.log_q_size == expected) as usize;
        oracle += (span_ideal(&rec.generator, &fd).dim() == expected) as usize;
    }
    outcome(
        count == 125 && formula == 125 && oracle == 125,
        format!("{count} codes, formula {formula}/125, oracle rank {oracle}/125"),
    )
}

fn duality() -> Outcome {
    let (fd, d) = worked_example();
    let mut good = 0;
    for rec in enumerate_codes(&d) {
        let dual = dual_code(&d, &rec.index).unwrap();
        let c = span_ideal(&rec.generator, &fd);
        let cd = span_ideal(&dual.generator, &fd);
        let ok = check_duality(&c, &cd, &fd)
            && c.dim() + cd.dim() == 28
            && euclidean_dual(&c, &fd).unwrap() == cd
            && rec.log_q_size + dual.log_q_size == 28;
        good += ok as usize;
    }
    outcome(good == 125, format!("{good}/125 orthogonal with |C||C^perp| = 2^28"))
}

fn self_dual() -> Outcome {
    let (fd, d) = worked_example();
    let got: Vec<(String, AmbientElement)> =
        self_dual_codes(&d).unwrap().map(|r| (r.index.to_string(), r.generator)).collect();
    let listed: Vec<(String, AmbientElement)> =
        SELF_DUAL.iter().map(|(i, g)| (i.to_string(), listed_poly(g, &fd))).collect();
    let by_oracle = enumerate_codes(&d).filter(|r| check_self_dual(r, &fd).unwrap()).count();
    outcome(
        got == listed && by_oracle == 5,
        format!(
            "{} generated, {} match the listed g, {by_oracle}/125 self-dual by oracle",
            got.len(),
            got.iter().zip(&listed).filter(|(a, b)| a == b).count()
        ),
    )
}

/// One randomized instance of the property suite.
fn property_instance(fd: &Field, n: usize, delta: u32, alpha: u32, rng: &mut ChaCha8Rng) -> Result<String, String> {
    let (delta, alpha) = (fd.elem(delta).unwrap(), fd.elem(alpha).unwrap());
    let d = compute_decomposition(fd, n, delta, alpha).map_err(|e| e.to_string())?;
    let lambda = d.lambda();

    // idempotent identities in the ambient
    let one = AmbientElement::one(n, lambda).unwrap();
    let mut sum = AmbientElement::zero(n, lambda).unwrap();
    for (j, a) in d.factors.iter().enumerate() {
        if a.e.mul(&a.e, fd).unwrap() != a.e {
            return Err(format!("e_{j} not idempotent"));
        }
        for b in &d.factors[j + 1..] {
            if !a.e.mul(&b.e, fd).unwrap().is_zero() {
                return Err("e_i e_j != 0".into());
            }
        }
        sum = sum.add(&a.e, fd).unwrap();
    }
    if sum != one {
        return Err("sum of e_j != 1".into());
    }
    // Bézout witnesses and ω_j
    for (j, rec) in d.factors.iter().enumerate() {
        let f2 = rec.f.mul(&rec.f, fd);
        let cof2 = rec.cofactor.mul(&rec.cofactor, fd);
        if !rec.g.mul(&cof2, fd).add(&rec.h.mul(&f2, fd), fd).is_one() {
            return Err(format!("Bezout identity fails for factor {j}"));
        }
        if !rec.omega.mul(&rec.omega_inv, fd).rem(&f2, fd).unwrap().is_one() {
            return Err(format!("omega_{j} not invertible mod f_{j}^2"));
        }
        if d.local_ring(j).unwrap().v_nilpotency_index().unwrap() != 4 {
            return Err(format!("v in K_{j} + vK_{j} does not have nilpotency index 4"));
        }
    }
    // Ψ is a ring homomorphism
    let random_poly = |rng: &mut ChaCha8Rng| Poly::new((0..2 * n).map(|_| fd.random(rng)).collect());
    for _ in 0..20 {
        let a = BigQuotientElement::new(fd, n, delta, alpha, random_poly(rng), random_poly(rng)).unwrap();
        let b = BigQuotientElement::new(fd, n, delta, alpha, random_poly(rng), random_poly(rng)).unwrap();
        let (pa, pb) = (psi_map(&a, fd).unwrap(), psi_map(&b, fd).unwrap());
        if psi_map(&a.mul(&b, fd).unwrap(), fd).unwrap() != pa.mul(&pb, fd).unwrap()
            || psi_map(&a.add(&b, fd).unwrap(), fd).unwrap() != pa.add(&pb, fd).unwrap()
        {
            return Err("Psi is not a homomorphism".into());
        }
    }
    // oracle agreement on random indices
    let r = d.r();
    for _ in 0..50 {
        let idx = CodeIndex::new((0..r).map(|_| rng.random_range(0..=4u8)).collect()).unwrap();
        let rec = build_code(&d, &idx).unwrap();
        let dual = dual_code(&d, &idx).unwrap();
        let c = check_record(&rec, &dual, fd).map_err(|e| e.to_string())?;
        if !(c.cardinality && c.constacyclic && c.ideal && c.duality) {
            return Err(format!("oracle disagrees at {idx}: {c:?}"));
        }
    }
    Ok(format!("q={} n={n} r={r}", fd.q()))
}

fn property_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xACCE);
    let fields: Vec<Field> = [(2, 1), (3, 1), (2, 2), (2, 3)].iter().map(|&(p, m)| Field::gf(p, m).unwrap()).collect();
    let mut lines = Vec::new();
    let mut failures = Vec::new();
    for k in 0..12 {
        let fd = &fields[k % fields.len()];
        let p = fd.p() as usize;
        let n = loop {
            let n = rng.random_range(2..=15usize);
            if n % p != 0 {
                break n;
            }
        };
        let delta = rng.random_range(1..fd.q());
        let alpha = rng.random_range(1..fd.q());
        match property_instance(fd, n, delta, alpha, &mut rng) {
            Ok(s) => lines.push(format!("{s} δ={delta} α={alpha}")),
            Err(e) => failures.push(format!("q={} n={n} δ={delta} α={alpha}: {e}", fd.q())),
        }
    }
    if failures.is_empty() {
        outcome(true, format!("{} instances: {}", lines.len(), lines.join("; ")))
    } else {
        outcome(false, failures.join("; "))
    }
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_constacyclic");
    let seven = ["--n", "7", "--output", "json"];
    let runs: [&[&str]; 6] = [
        &["factor"],
        &["idempotents"],
        &["codes"],
        &["selfdual"],
        &["verify", "--no-timing"],
        &["verify", "--no-timing", "--jobs", "4"],
    ];
    let invoke = |args: &[&str]| {
        let out = Command::new(bin).args(args).args(seven).env_remove("CONSTACYCLIC_SEED").output().unwrap();
        (out.status.code(), out.stdout)
    };
    let mut mismatches = Vec::new();
    let mut bytes = 0;
    for args in runs {
        let (a, b) = (invoke(args), invoke(args));
        bytes += a.1.len();
        if a != b || a.0 != Some(0) || a.1.is_empty() {
            mismatches.push(args.join(" "));
        }
    }
    let serial = invoke(runs[4]).1;
    if serial != invoke(runs[5]).1 {
        mismatches.push("verify serial vs --jobs 4".into());
    }
    if mismatches.is_empty() {
        outcome(true, format!("{} commands identical across runs ({bytes} bytes)", runs.len()))
    } else {
        outcome(false, format!("differs: {}", mismatches.join(", ")))
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("1 factorization of x^7 - 1 over F_2", Duration::from_secs(1), factorization),
        ("2 idempotents e_1, e_2, e_3 and tau", Duration::from_secs(1), idempotents),
        ("3 125 codes, sizes by formula and oracle", Duration::from_secs(10), enumeration),
        ("4 duality for all 125 codes", Duration::from_secs(30), duality),
        ("5 the 5 self-dual codes", Duration::from_secs(30), self_dual),
        ("6 randomized property suite", Duration::from_secs(300), property_suite),
        ("7 byte-identical JSON across runs", Duration::from_secs(60), determinism),
    ];
    let mut failed = 0;
    for (name, budget, run) in criteria {
        let start = Instant::now();
        let out = run();
        let elapsed = start.elapsed();
        let ok = out.ok && elapsed <= budget;
        failed += !ok as usize;
        println!(
            "{} [{name}] {:.3}s (limit {}s): {}",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            budget.as_secs(),
            out.detail
        );
    }
    if failed == 0 {
        println!("acceptance: all 7 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
