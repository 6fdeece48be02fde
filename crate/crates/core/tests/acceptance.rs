//! Acceptance suite. Runs every criterion in sequence, prints one
//! `[PASS]`/`[FAIL]` line each, and exits nonzero if any criterion fails or
//! exceeds its time budget.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use schubert_core::bases::{
    chm_product, constructive_sem, elementary_poly, homogeneous_poly, sem_basis, sem_expand,
    sem_product, single_sem_of, ChmVector, SemSystem, SemVector,
};
use schubert_core::perm::lehmer_rules_check;
use schubert_core::pipedream::{enumerate_reduced, schubert_from_pipedreams, PipeDream};
use schubert_core::schubert::{expand_schubert_basis, schubert_divdiff, SchubertCache};
use schubert_core::verify::{conjecture_scan, run_suite, ScanConfig};
use schubert_core::{IntPolynomial, Permutation};

type Outcome = Result<String, String>;

struct Criterion {
    id: &'static str,
    name: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn p(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn avoids(w: &Permutation, pats: &[&str]) -> bool {
    pats.iter().all(|q| w.avoids(&p(q)))
}

/// Catalan numbers from the recurrence `C_{m+1} = Σ C_i C_{m-i}`.
fn catalan(n: usize) -> usize {
    let mut c = vec![1usize];
    for m in 0..n {
        c.push((0..=m).map(|i| c[i] * c[m - i]).sum());
    }
    c[n]
}

/// `F_1 = F_2 = 1`.
fn fibonacci(m: usize) -> usize {
    let (mut a, mut b) = (0usize, 1usize);
    for _ in 0..m {
        (a, b) = (b, a + b);
    }
    a
}

fn figure_reproduction() -> Outcome {
    let s4132 = schubert_divdiff(&p("4132"));
    let expected = IntPolynomial::from_terms([(vec![3, 0, 1], 1), (vec![3, 1], 1)]);
    ensure(s4132 == expected, || format!("S_4132 = {s4132}"))?;
    ensure(s4132.to_string() == "x1^3*x3 + x1^3*x2", || format!("rendered {s4132}"))?;
    let dreams = enumerate_reduced(&p("4132")).map_err(|e| e.to_string())?;
    ensure(dreams.len() == 2, || format!("|RC(4132)| = {}", dreams.len()))?;

    let w = p("35427861");
    let product = [(2, 1), (3, 3), (6, 2), (7, 7)]
        .iter()
        .fold(IntPolynomial::one(), |acc, &(i, j)| &acc * &elementary_poly(i, j));
    let s = schubert_divdiff(&w);
    ensure(s == product, || "S_35427861 differs from e[2,1]*e[3,3]*e[6,2]*e[7,7]".into())?;
    let e = sem_expand(&s, 8).map_err(|e| e.to_string())?;
    let single = SemVector::new(vec![0, 1, 3, 0, 0, 2, 7]);
    ensure(e.single() == Some(&single), || format!("SEM expansion {e}"))?;
    Ok(format!("S_4132 = {s4132}; |RC(4132)| = 2; S_35427861 = {e}"))
}

fn cross_method_oracle() -> Outcome {
    let mut checked = 0;
    for w in Permutation::all(6) {
        let a = schubert_divdiff(&w);
        let b = schubert_from_pipedreams(&w).map_err(|e| e.to_string())?;
        ensure(a == b, || format!("methods disagree at {w}"))?;
        checked += 1;
    }
    Ok(format!("{checked} permutations of S_6 agree"))
}

fn single_monomial_characterization() -> Outcome {
    let cache = SchubertCache::new();
    let mut counts = Vec::new();
    for n in 1..=7 {
        let mut count = 0;
        for w in Permutation::all(n) {
            let one_term = cache.divdiff(&w).len() == 1;
            let av = avoids(&w, &["132"]);
            let noninc = w.lehmer_code().is_nonincreasing();
            ensure(one_term == av && av == noninc, || format!("mismatch at {w}"))?;
            count += one_term as usize;
        }
        ensure(count == catalan(n), || format!("n={n}: {count} != C_{n} = {}", catalan(n)))?;
        counts.push(count);
    }
    ensure(counts[2] == 5, || "C_3 != 5".into())?;
    Ok(format!("counts n=1..7 {counts:?} are Catalan"))
}

fn single_sem_characterization() -> Outcome {
    let mut counts = Vec::new();
    for n in 1..=6 {
        let mut count = 0;
        for w in Permutation::all(n) {
            let e = sem_expand(&schubert_divdiff(&w), n).map_err(|e| e.to_string())?;
            let one_term = e.terms.len() == 1;
            let av = avoids(&w, &["312", "1432"]);
            let rules = lehmer_rules_check(w.lehmer_code().entries()).all_ok();
            ensure(one_term == av && av == rules, || format!("mismatch at {w}: {e}"))?;
            count += one_term as usize;
        }
        counts.push(count);
    }
    ensure(counts[2] == 5 && counts[3] == 13, || format!("counts {counts:?}"))?;
    for (i, &c) in counts.iter().enumerate() {
        let n = i + 1;
        ensure(c == fibonacci(2 * n - 1), || format!("n={n}: {c} != F_{}", 2 * n - 1))?;
    }
    Ok(format!(
        "counts n=1..6 {counts:?} = F_(2n-1) with F_1 = F_2 = 1 (F_(2n) when F_0 = F_1 = 1)"
    ))
}

fn single_chm_characterization() -> Outcome {
    let cache = SchubertCache::new();
    let mut counts = Vec::new();
    for n in 1..=7 {
        let mut count = 0;
        for w in Permutation::all(n) {
            let h = chm_product(&ChmVector::new(w.lehmer_code().entries().to_vec()));
            let is_chm = *cache.divdiff(&w) == h;
            let av = avoids(&w, &["321", "231"]);
            ensure(is_chm == av, || format!("mismatch at {w}"))?;
            if n <= 6 {
                let clear = PipeDream::bottom(&w).diagonal_clearance().map_err(|e| e.to_string())?;
                ensure(clear == av, || format!("diagonal clearance mismatch at {w}"))?;
            }
            count += is_chm as usize;
        }
        ensure(count == 1 << (n - 1), || format!("n={n}: {count} != 2^{}", n - 1))?;
        counts.push(count);
    }
    Ok(format!("counts n=1..7 {counts:?} = 2^(n-1); clearance agrees for n <= 6"))
}

fn inversions(word: &[u32]) -> usize {
    (0..word.len())
        .flat_map(|i| (i + 1..word.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| word[i] > word[j])
        .count()
}

fn monk_rule() -> Outcome {
    let mut pairs = 0;
    for w in Permutation::all(5) {
        let big = w.embed(6);
        let len = inversions(big.word());
        for k in 1..=4 {
            let mut expected = BTreeSet::new();
            for a in 1..=k {
                for b in k + 1..=6 {
                    let mut word = big.word().to_vec();
                    word.swap(a - 1, b - 1);
                    if inversions(&word) == len + 1 {
                        expected.insert(Permutation::from_word(word).unwrap());
                    }
                }
            }
            let product = &elementary_poly(k, 1) * &schubert_divdiff(&w);
            let got = expand_schubert_basis(&product, 6).map_err(|e| e.to_string())?;
            ensure(got.terms.values().all(|c| *c == BigInt::from(1)), || {
                format!("coefficient other than 1 for {w}, k={k}")
            })?;
            let support: BTreeSet<Permutation> = got.terms.keys().cloned().collect();
            ensure(support == expected, || format!("support differs for {w}, k={k}"))?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} (w, k) pairs match the cover sets"))
}

fn e_oracle(k: usize, j: i64) -> IntPolynomial {
    if j < 0 || j as usize > k {
        return IntPolynomial::zero();
    }
    if j == 0 {
        return IntPolynomial::one();
    }
    &e_oracle(k - 1, j) + &(&IntPolynomial::var(k) * &e_oracle(k - 1, j - 1))
}

fn h_oracle(k: usize, j: i64) -> IntPolynomial {
    if j < 0 || (k == 0 && j > 0) {
        return IntPolynomial::zero();
    }
    if j == 0 {
        return IntPolynomial::one();
    }
    &h_oracle(k - 1, j) + &(&IntPolynomial::var(k) * &h_oracle(k, j - 1))
}

fn random_poly(rng: &mut ChaCha8Rng) -> IntPolynomial {
    let terms = (0..rng.gen_range(0..6)).map(|_| {
        let vars = rng.gen_range(1..=5);
        let mut exps = vec![0u32; vars];
        for _ in 0..rng.gen_range(0..=5) {
            exps[rng.gen_range(0..vars)] += 1;
        }
        (exps, rng.gen_range(-4i64..=4))
    });
    IntPolynomial::from_terms(terms)
}

fn divided_difference_identities() -> Outcome {
    let mut grid = 0;
    for i in 1..=6 {
        for k in 1..=6 {
            for j in 0..=6usize {
                let de = elementary_poly(k, j).divided_difference(i);
                let want = if i == k { e_oracle(k - 1, j as i64 - 1) } else { IntPolynomial::zero() };
                ensure(de == want, || format!("d_{i} e[{k},{j}]"))?;
                let dh = homogeneous_poly(k, j).divided_difference(i);
                let want = if i == k { h_oracle(k + 1, j as i64 - 1) } else { IntPolynomial::zero() };
                ensure(dh == want, || format!("d_{i} h[{k},{j}]"))?;
                grid += 2;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for case in 0..200 {
        let (f, g, i) = (random_poly(&mut rng), random_poly(&mut rng), rng.gen_range(1..=4));
        let lhs = (&f * &g).divided_difference(i);
        let rhs = &(&f.divided_difference(i) * &g) + &(&f.swap_action(i) * &g.divided_difference(i));
        ensure(lhs == rhs, || format!("twisted Leibniz fails in case {case}"))?;
        ensure(f.divided_difference(i).divided_difference(i).is_zero(), || {
            format!("d_i d_i != 0 in case {case}")
        })?;
    }
    Ok(format!("{grid} grid identities; 200 random Leibniz and d_i^2 = 0 cases"))
}

fn sem_basis_soundness() -> Outcome {
    let mut vectors = 0;
    for n in 1..=5 {
        for d in 0..=(n * (n - 1) / 2) as u32 {
            let system = SemSystem::build(n, d);
            ensure(system.rank() == system.monomials.len() && system.basis.len() == system.monomials.len(), || {
                format!("rank deficient at n={n}, d={d}")
            })?;
            if d <= 6 {
                for a in sem_basis(n, d) {
                    let e = sem_expand(&sem_product(&a), n).map_err(|e| e.to_string())?;
                    ensure(e.terms == BTreeMap::from([(a.clone(), BigInt::from(1))]), || {
                        format!("round trip fails for {a} at n={n}")
                    })?;
                    vectors += 1;
                }
            }
        }
        for w in Permutation::all(n) {
            let s = schubert_divdiff(&w);
            let e = sem_expand(&s, n).map_err(|e| e.to_string())?;
            ensure(e.reconstruct() == s, || format!("expansion of S_{w} does not reconstruct"))?;
        }
    }
    Ok(format!("full rank for n <= 5; {vectors} round trips; integral expansions for all of S_1..S_5"))
}

fn constructive_path() -> Outcome {
    let mut checked = 0;
    for w in Permutation::all(6) {
        if !lehmer_rules_check(w.lehmer_code().entries()).all_ok() {
            continue;
        }
        let c = constructive_sem(&w).map_err(|e| e.to_string())?;
        ensure(sem_product(&c.sem) == schubert_divdiff(&w), || format!("product differs at {w}"))?;
        let single = single_sem_of(&w).map_err(|e| e.to_string())?;
        ensure(single.as_ref() == Some(&c.sem), || format!("detector differs at {w}"))?;
        checked += 1;
    }
    ensure(checked == fibonacci(11), || format!("{checked} Lehmer-rules permutations"))?;
    Ok(format!("{checked} Lehmer-rules permutations of S_6"))
}

fn conjecture() -> Outcome {
    let mut found = Vec::new();
    let mut nonneg = Vec::new();
    for n in 1..=6 {
        let row = conjecture_scan(n).map_err(|e| e.to_string())?;
        nonneg.push(row.nonnegative);
        found.extend(row.counterexamples);
    }
    if found.is_empty() {
        Ok(format!("0 counterexamples for n <= 6 (nonnegative expansions per n: {nonneg:?})"))
    } else {
        Ok(format!("{} counterexample(s) reported, not asserted: {found:?}", found.len()))
    }
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let config = |jobs: usize, cache: bool| ScanConfig {
        n_max: 6,
        jobs,
        cache_dir: cache.then(|| dir.path().to_path_buf()),
        ..ScanConfig::default()
    };
    let run = |c: ScanConfig| run_suite(&c).map_err(|e| e.to_string());
    let cold = run(config(1, true))?;
    let warm = run(config(4, true))?;
    let uncached = run(config(3, false))?;
    let path = schubert_core::verify::cache_path(dir.path(), 5);
    let text = std::fs::read_to_string(&path).map_err(|e| e.to_string())?;
    std::fs::write(&path, text.replacen("\"1\"", "\"7\"", 1)).map_err(|e| e.to_string())?;
    let corrupted = run(config(2, true))?;
    ensure(corrupted.cache.iter().any(|c| c.n == 5 && c.status.starts_with("rejected")), || {
        "corrupted cache file was not rejected".into()
    })?;
    ensure(warm.cache.iter().all(|c| c.status == "loaded"), || "warm run did not load the cache".into())?;
    let reference = cold.canonical_json();
    for (label, r) in [("warm", &warm), ("uncached", &uncached), ("corrupted", &corrupted)] {
        ensure(r.canonical_json() == reference, || format!("{label} report differs"))?;
    }
    ensure(cold.pass && cold.exit_code() == 0, || "reference scan did not pass".into())?;
    Ok("n <= 6 reports identical for jobs 1/2/3/4 and cold, warm, absent, corrupted caches".into())
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: "AC1", name: "figure reproduction", budget: secs(1), run: figure_reproduction },
        Criterion { id: "AC2", name: "divided differences agree with pipe dreams on S_6", budget: secs(60), run: cross_method_oracle },
        Criterion { id: "AC3", name: "single monomial <=> 132-avoiding <=> nonincreasing code (n <= 7)", budget: secs(120), run: single_monomial_characterization },
        Criterion { id: "AC4", name: "single SEM <=> {312,1432}-avoiding <=> Lehmer rules (n <= 6)", budget: secs(600), run: single_sem_characterization },
        Criterion { id: "AC5", name: "single CHM <=> {321,231}-avoiding (n <= 7), diagonal clearance", budget: secs(120), run: single_chm_characterization },
        Criterion { id: "AC6", name: "Monk's rule on S_5", budget: secs(120), run: monk_rule },
        Criterion { id: "AC7", name: "divided-difference identities", budget: secs(30), run: divided_difference_identities },
        Criterion { id: "AC8", name: "SEM basis soundness", budget: secs(120), run: sem_basis_soundness },
        Criterion { id: "AC9", name: "constructive SEM path on S_6", budget: secs(120), run: constructive_path },
        Criterion { id: "AC10", name: "nonnegativity conjecture scan (reported)", budget: secs(600), run: conjecture },
        Criterion { id: "AC11", name: "scan determinism across jobs and cache states", budget: secs(600), run: determinism },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if elapsed <= c.budget => (true, d),
            Ok(d) => (false, format!("{d}; over budget")),
            Err(e) => (false, e),
        };
        failed += !ok as usize;
        println!(
            "[{}] {} {} ({:.2}s / budget {}s): {}",
            if ok { "PASS" } else { "FAIL" },
            c.id,
            c.name,
            elapsed.as_secs_f64(),
            c.budget.as_secs(),
            detail
        );
    }
    println!("acceptance: {} passed, {} failed", criteria.len() - failed, failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
