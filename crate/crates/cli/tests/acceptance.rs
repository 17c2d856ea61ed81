//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest harness so the
//! lines are always printed; exits nonzero if any criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use pairmds::code::cyclic_generators;
use pairmds::distance::{dh_bruteforce, dh_repeated_root, radix_weight, Distance};
use pairmds::families::{build_family, FamilyName};
use pairmds::metric::{hamming_weight, is_mds_hamming, pair_weight, run_profile};
use pairmds::pairsearch::{dp_bruteforce, exact_pair_distance};
use pairmds::{ConstacyclicCode, Polynomial, PrimeField};
use pairmds_cli::Report;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const BIN: &str = env!("CARGO_BIN_EXE_pairmds");

type Outcome = Result<String, String>;
type Criterion = (&'static str, Box<dyn Fn() -> Outcome>);

fn family_via_cli(
    name: &str,
    p: u64,
    threads: Option<usize>,
) -> Result<(Report, Duration), String> {
    let mut cmd = Command::new(BIN);
    cmd.args([
        "family",
        "--name",
        name,
        "--p",
        &p.to_string(),
        "--json",
        "-",
        "-q",
    ]);
    if let Some(t) = threads {
        cmd.args(["--threads", &t.to_string()]);
    }
    let start = Instant::now();
    let out = cmd.output().map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    if out.status.code() != Some(0) {
        return Err(format!(
            "exit {:?}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    let report = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    Ok((report, elapsed))
}

fn example(
    name: &str,
    p: u64,
    expect: (usize, usize, usize, usize),
    threads: Option<usize>,
    limit: Duration,
) -> Outcome {
    let (r, elapsed) = family_via_cli(name, p, threads)?;
    let got = (r.code.n, r.code.k, r.hamming.d_h, r.d_p().unwrap_or(0));
    if got != expect {
        return Err(format!(
            "got [n, k, d_H] d_p = {got:?}, expected {expect:?}"
        ));
    }
    if elapsed > limit {
        return Err(format!("took {elapsed:.2?}, limit {limit:?}"));
    }
    Ok(format!(
        "[{}, {}, {}] d_p = {} in {elapsed:.2?}",
        got.0, got.1, got.2, got.3
    ))
}

fn thm1_primes() -> Outcome {
    let mut seen = Vec::new();
    for p in [5u64, 13, 17, 3, 7] {
        let code = build_family(FamilyName::Thm1, p).map_err(|e| e.to_string())?;
        let cert = exact_pair_distance(&code).map_err(|e| e.to_string())?;
        if cert.d_p != 7 || !cert.is_mds_pair {
            return Err(format!("p = {p}: d_p = {}", cert.d_p));
        }
        seen.push(p.to_string());
    }
    Ok(format!("d_p = 7 for p in {{{}}}", seen.join(", ")))
}

fn oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut pool = Vec::new();
    for (p, n) in [(3u64, 6usize), (3, 12), (3, 15), (5, 10), (5, 15), (5, 20)] {
        let f = PrimeField::new(p).unwrap();
        for g in cyclic_generators(f, n).map_err(|e| e.to_string())? {
            let code = ConstacyclicCode::cyclic(f, n, g).map_err(|e| e.to_string())?;
            if code.k() >= 1 && code.size().is_some_and(|s| s <= 100_000) {
                pool.push(code);
            }
        }
    }
    pool.shuffle(&mut rng);
    let mut checked = 0;
    let mut discrepancies = Vec::new();
    for code in &pool {
        if checked == 60 {
            break;
        }
        let dh_oracle = dh_bruteforce(code).map_err(|e| e.to_string())?;
        if dh_oracle < Distance::Finite(2) {
            continue;
        }
        checked += 1;
        let dh = dh_repeated_root(code).map_err(|e| e.to_string())?.d_h;
        let dp = exact_pair_distance(code).map_err(|e| e.to_string())?.d_p;
        let dp_oracle = dp_bruteforce(code).map_err(|e| e.to_string())?;
        if Distance::Finite(dh) != dh_oracle || Distance::Finite(dp) != dp_oracle {
            discrepancies.push(format!("{} n={}", code.generator(), code.n()));
        }
    }
    if checked < 50 {
        return Err(format!("only {checked} codes sampled"));
    }
    if !discrepancies.is_empty() {
        return Err(format!("discrepancies: {discrepancies:?}"));
    }
    Ok(format!("{checked} random codes, 0 discrepancies"))
}

fn radix_identity() -> Outcome {
    let mut count = 0;
    for p in [3u64, 5, 7] {
        let f = PrimeField::new(p).unwrap();
        let x_minus_one = Polynomial::linear(f.one());
        let mut power = Polynomial::one(f);
        for t in 0..p * p {
            if radix_weight(t, p) != power.hamming_weight() as u64 {
                return Err(format!("p = {p}, t = {t}"));
            }
            power = &power * &x_minus_one;
            count += 1;
        }
    }
    Ok(format!("{count} (t, p) pairs"))
}

fn run_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let primes = [2u64, 3, 5, 7, 11, 13, 31, 101];
    for i in 0..10_000 {
        let p = primes[rng.gen_range(0..primes.len())];
        let n = rng.gen_range(2..=64);
        let density = rng.gen_range(0.0..=1.0);
        let x: Vec<u64> = (0..n)
            .map(|_| {
                if rng.gen_bool(density) {
                    rng.gen_range(1..p)
                } else {
                    0
                }
            })
            .collect();
        let wp = pair_weight(&x).map_err(|e| e.to_string())?;
        // independent run count: nonzero positions preceded cyclically by a zero
        let starts = (0..n)
            .filter(|&j| x[j] != 0 && x[(j + n - 1) % n] == 0)
            .count();
        let w = hamming_weight(&x);
        let expected = if w == n { n } else { w + starts };
        let prof = run_profile(&x);
        if wp != expected || (!prof.full_support && prof.run_count() != starts) {
            return Err(format!("vector {i}: {x:?}"));
        }
    }
    Ok("10000 random vectors".into())
}

fn hamming_gap() -> Outcome {
    let mut cases: Vec<(FamilyName, u64)> = [3u64, 5, 7, 13, 17]
        .iter()
        .map(|&p| (FamilyName::Thm1, p))
        .collect();
    for p in [11u64, 31] {
        cases.push((FamilyName::Thm2, p));
        cases.push((FamilyName::Thm3, p));
    }
    for &(name, p) in &cases {
        let code = build_family(name, p).map_err(|e| e.to_string())?;
        let cert = exact_pair_distance(&code).map_err(|e| e.to_string())?;
        let (n, k) = (code.n(), code.k());
        if cert.d_p < cert.d_h + 2 || is_mds_hamming(n, k, cert.d_h) || k + cert.d_h > n {
            return Err(format!(
                "{name} p = {p}: d_H = {}, d_p = {}, k = {k}",
                cert.d_h, cert.d_p
            ));
        }
    }
    Ok(format!("{} family codes", cases.len()))
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        (
            "thm1 p=5 gives [20, 15, 4], d_p = 7, single-threaded < 10 s",
            Box::new(|| example("thm1", 5, (20, 15, 4, 7), Some(1), Duration::from_secs(10))),
        ),
        (
            "thm2 p=11 gives [55, 50, 4], d_p = 7, single-threaded < 60 s",
            Box::new(|| example("thm2", 11, (55, 50, 4, 7), Some(1), Duration::from_secs(60))),
        ),
        (
            "thm3 p=31 gives [155, 149, 4], d_p = 8, parallel < 10 min",
            Box::new(|| example("thm3", 31, (155, 149, 4, 8), None, Duration::from_secs(600))),
        ),
        (
            "thm1 d_p = 7 at p in {5, 13, 17, 3, 7}",
            Box::new(thm1_primes),
        ),
        (
            "exact distances equal enumeration on >= 50 random codes",
            Box::new(oracle_equivalence),
        ),
        (
            "radix weight equals w_H((x-1)^t) for t < p^2, p in {3, 5, 7}",
            Box::new(radix_identity),
        ),
        (
            "pair weight equals w_H + runs (n for full support)",
            Box::new(run_identity),
        ),
        (
            "family codes have d_p >= d_H + 2 and are not Hamming MDS",
            Box::new(hamming_gap),
        ),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {}: {name} ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {}: {name} ({why})", i + 1);
            }
        }
    }
    println!(
        "{}/{} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
