//! Exhaustive verification over `S_n`: classification of every permutation,
//! the pattern-avoidance characterizations, enumeration counts, the SEM
//! positivity conjecture, report assembly, and the on-disk Schubert cache.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::bases::{chm_product, constructive_sem, sem_expand, ChmVector};
use crate::error::{Error, Result};
use crate::perm::{LehmerCode, Permutation};
use crate::pipedream::PipeDream;
use crate::poly::{ExponentVector, IntPolynomial};
use crate::schubert::SchubertCache;

pub const CACHE_FORMAT_VERSION: u32 = 1;
pub const DEFAULT_N_MAX: usize = 7;
pub const DEFAULT_SEM_MAX: usize = 6;

/// Notes on how ambiguous conventions were resolved. Copied verbatim into
/// every report.
pub const ASSUMPTIONS: &[&str] = &[
    "Lattice-path steps are U = (1,1), D = (1,-1), H = (1,0); a down-step written as (-1,1) is read as (1,-1).",
    "Fibonacci numbers use F_1 = F_2 = 1 (F_0 = 0, F_-1 = 1). The {312,1432}-avoider count in S_n is F_{2n-1}, which is F_{2n} under F_0 = F_1 = 1. The sum over k of C(n,k) F_{n-k-1} equals that count, so it matches F_{2n-1}, not F_{2n}, in any single indexing.",
    "Monk's rule uses the stated length criterion l(w(i1,i2)) = l(w) + 1. For transpositions this is a strong Bruhat cover, although it is sometimes described as a weak-order cover. Products are formed in S_{max(n,k)+1}, and trailing fixed points are trimmed.",
    "1427356 has Lehmer code (0,2,0,3,0,0,0), so its bottom pipe dream has crosses in rows 2 and 4 (rows numbered from 1 at the top). The 231 pattern 473 and the diagonal-clearance failure are both confirmed at those rows.",
    "Term order: monomials are compared at the largest variable index where they differ, and the larger exponent wins.",
];

fn pattern(word: &[u32]) -> Permutation {
    Permutation::from_word(word.to_vec()).expect("fixed pattern is a permutation")
}

/// Containment of the five patterns that appear in the characterizations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternFlags {
    pub p132: bool,
    pub p312: bool,
    pub p1432: bool,
    pub p321: bool,
    pub p231: bool,
}

impl PatternFlags {
    pub fn of(w: &Permutation) -> Self {
        PatternFlags {
            p132: w.contains_pattern(&pattern(&[1, 3, 2])),
            p312: w.contains_pattern(&pattern(&[3, 1, 2])),
            p1432: w.contains_pattern(&pattern(&[1, 4, 3, 2])),
            p321: w.contains_pattern(&pattern(&[3, 2, 1])),
            p231: w.contains_pattern(&pattern(&[2, 3, 1])),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub w: Permutation,
    pub code: LehmerCode,
    pub is_monomial: bool,
    pub is_chm: bool,
    /// SEM fields are `None` when the SEM solve was skipped for this size.
    pub is_sem: Option<bool>,
    pub sem_terms: Option<usize>,
    pub sem_nonneg: Option<bool>,
    /// Whether the outer-column construction matches the expansion; only
    /// set when the Lehmer rules hold and the SEM solve ran.
    pub constructive_agrees: Option<bool>,
    pub pattern_flags: PatternFlags,
    pub nonincreasing_code: bool,
    pub lehmer_rules_ok: bool,
    pub diagonal_clearance: bool,
}

/// Classifies `w` in every basis, using the process-wide Schubert cache.
pub fn classify(w: &Permutation) -> Result<ClassificationRecord> {
    classify_with(w, SchubertCache::global(), true)
}

/// Pattern flags are computed from the word alone and never from the
/// algebraic side.
pub fn classify_with(w: &Permutation, cache: &SchubertCache, with_sem: bool) -> Result<ClassificationRecord> {
    let code = w.lehmer_code();
    let s = cache.divdiff(w);
    let code_monomial = ExponentVector::new(code.entries().to_vec());
    let is_monomial = s.len() == 1 && s.coefficient(&code_monomial) == 1.into();
    let is_chm = chm_product(&ChmVector::new(code.entries().to_vec())) == *s;
    let rules_ok = code.rules().all_ok();

    let (mut is_sem, mut sem_terms, mut sem_nonneg, mut constructive_agrees) = (None, None, None, None);
    if with_sem {
        let expansion = sem_expand(&s, w.n())?;
        let single = expansion.single().cloned();
        is_sem = Some(single.is_some());
        sem_terms = Some(expansion.terms.len());
        sem_nonneg = Some(expansion.is_nonnegative());
        if rules_ok {
            let built = constructive_sem(w)?;
            constructive_agrees = Some(
                single.as_ref() == Some(&built.sem) && crate::bases::sem_product(&built.sem) == *s,
            );
        }
    }

    Ok(ClassificationRecord {
        w: w.clone(),
        is_monomial,
        is_chm,
        is_sem,
        sem_terms,
        sem_nonneg,
        constructive_agrees,
        pattern_flags: PatternFlags::of(w),
        nonincreasing_code: code.is_nonincreasing(),
        lehmer_rules_ok: rules_ok,
        diagonal_clearance: PipeDream::bottom(w).diagonal_clearance()?,
        code,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremResult {
    pub n: usize,
    pub checked: usize,
    pub pass: bool,
    pub counterexamples: Vec<Permutation>,
}

impl TheoremResult {
    fn from_records(n: usize, records: &[ClassificationRecord], holds: impl Fn(&ClassificationRecord) -> bool) -> Self {
        let counterexamples: Vec<Permutation> = records
            .iter()
            .filter(|r| !holds(r))
            .map(|r| r.w.clone())
            .collect();
        TheoremResult {
            n,
            checked: records.len(),
            pass: counterexamples.is_empty(),
            counterexamples,
        }
    }
}

/// The characterization checks at one size, keyed by name.
pub type TheoremSection = BTreeMap<String, TheoremResult>;

fn all_equal(values: &[bool]) -> bool {
    values.windows(2).all(|p| p[0] == p[1])
}

fn theorems_from_records(n: usize, records: &[ClassificationRecord], with_sem: bool) -> TheoremSection {
    let mut out = TheoremSection::new();
    out.insert(
        "monomial".into(),
        TheoremResult::from_records(n, records, |r| {
            all_equal(&[r.is_monomial, !r.pattern_flags.p132, r.nonincreasing_code])
        }),
    );
    out.insert(
        "lehmer_rules".into(),
        TheoremResult::from_records(n, records, |r| {
            r.lehmer_rules_ok == (!r.pattern_flags.p312 && !r.pattern_flags.p1432)
        }),
    );
    out.insert(
        "chm".into(),
        TheoremResult::from_records(n, records, |r| {
            all_equal(&[
                r.is_chm,
                !r.pattern_flags.p321 && !r.pattern_flags.p231,
                r.diagonal_clearance,
            ])
        }),
    );
    if with_sem {
        out.insert(
            "sem".into(),
            TheoremResult::from_records(n, records, |r| {
                let avoids = !r.pattern_flags.p312 && !r.pattern_flags.p1432;
                r.is_sem == Some(avoids)
                    && avoids == r.lehmer_rules_ok
                    && r.constructive_agrees.unwrap_or(true)
            }),
        );
    }
    out
}

pub fn catalan(n: usize) -> u128 {
    binomial(2 * n, n) / (n as u128 + 1)
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k.min(n - k)).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

/// `F_m` with `F_1 = F_2 = 1`, extended by `F_0 = 0`, `F_{-1} = 1`.
pub fn fibonacci(m: i64) -> u128 {
    if m == -1 {
        return 1;
    }
    assert!(m >= 0, "fibonacci index {m} below -1");
    let (mut a, mut b) = (0u128, 1u128);
    for _ in 0..m {
        (a, b) = (b, a + b);
    }
    a
}

/// Smallest `m >= 1` with `F_m == value`.
pub fn fibonacci_index(value: u128) -> Option<i64> {
    let (mut a, mut b, mut m) = (1u128, 1u128, 1i64);
    while a < value {
        (a, b) = (b, a.checked_add(b)?);
        m += 1;
    }
    (a == value).then_some(m)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRow {
    pub n: usize,
    /// Algebraic counts, from the classification records.
    pub monomial: usize,
    pub chm: usize,
    pub sem: Option<usize>,
    /// Independent counts from pattern avoidance alone.
    pub avoid_132: usize,
    pub avoid_321_231: usize,
    pub avoid_312_1432: usize,
    pub catalan: u128,
    pub power_of_two: u128,
    pub fibonacci_index: Option<i64>,
    pub fibonacci_expected_index: i64,
    /// `Σ_k C(n,k) F_{n-k-1}`.
    pub lattice_path_sum: u128,
    pub pass: bool,
}

fn count_from_records(n: usize, records: &[ClassificationRecord]) -> CountRow {
    let perms: Vec<&Permutation> = records.iter().map(|r| &r.w).collect();
    let (p132, p312, p1432, p321, p231) = (
        pattern(&[1, 3, 2]),
        pattern(&[3, 1, 2]),
        pattern(&[1, 4, 3, 2]),
        pattern(&[3, 2, 1]),
        pattern(&[2, 3, 1]),
    );
    let avoid_132 = perms.iter().filter(|w| w.avoids(&p132)).count();
    let avoid_321_231 = perms.iter().filter(|w| w.avoids(&p321) && w.avoids(&p231)).count();
    let avoid_312_1432 = perms.iter().filter(|w| w.avoids(&p312) && w.avoids(&p1432)).count();

    let monomial = records.iter().filter(|r| r.is_monomial).count();
    let chm = records.iter().filter(|r| r.is_chm).count();
    let sem = records
        .iter()
        .map(|r| r.is_sem)
        .collect::<Option<Vec<bool>>>()
        .map(|v| v.into_iter().filter(|&b| b).count());

    let catalan = catalan(n);
    let power_of_two = 1u128 << (n - 1);
    let fibonacci_expected_index = 2 * n as i64 - 1;
    let fibonacci_index = fibonacci_index(avoid_312_1432 as u128);
    let lattice_path_sum = (0..=n)
        .map(|k| binomial(n, k) * fibonacci(n as i64 - k as i64 - 1))
        .sum();

    let pass = monomial == avoid_132
        && avoid_132 as u128 == catalan
        && chm == avoid_321_231
        && avoid_321_231 as u128 == power_of_two
        && sem.map_or(true, |s| s == avoid_312_1432)
        && avoid_312_1432 as u128 == fibonacci(fibonacci_expected_index)
        && lattice_path_sum == avoid_312_1432 as u128;
    CountRow {
        n,
        monomial,
        chm,
        sem,
        avoid_132,
        avoid_321_231,
        avoid_312_1432,
        catalan,
        power_of_two,
        fibonacci_index,
        fibonacci_expected_index,
        lattice_path_sum,
        pass,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureRow {
    pub n: usize,
    pub checked: usize,
    pub nonnegative: usize,
    pub single_sem: usize,
    /// Nonnegative SEM expansions that are not a single SEM.
    pub counterexamples: Vec<Permutation>,
}

fn conjecture_from_records(n: usize, records: &[ClassificationRecord]) -> ConjectureRow {
    let nonneg: Vec<&ClassificationRecord> = records.iter().filter(|r| r.sem_nonneg == Some(true)).collect();
    ConjectureRow {
        n,
        checked: records.len(),
        nonnegative: nonneg.len(),
        single_sem: records.iter().filter(|r| r.is_sem == Some(true)).count(),
        counterexamples: nonneg
            .iter()
            .filter(|r| r.is_sem != Some(true))
            .map(|r| r.w.clone())
            .collect(),
    }
}

fn classify_all(n: usize, cache: &SchubertCache, with_sem: bool) -> Result<Vec<ClassificationRecord>> {
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    perms
        .par_iter()
        .map(|w| classify_with(w, cache, with_sem))
        .collect()
}

/// Checks every characterization over `S_n`. The SEM check runs when
/// `n <= DEFAULT_SEM_MAX`.
pub fn theorem_scan(n: usize) -> Result<TheoremSection> {
    let with_sem = n <= DEFAULT_SEM_MAX;
    let records = classify_all(n, SchubertCache::global(), with_sem)?;
    Ok(theorems_from_records(n, &records, with_sem))
}

/// Brute-force counts against their closed forms.
pub fn count_scan(n: usize) -> Result<CountRow> {
    let with_sem = n <= DEFAULT_SEM_MAX;
    let records = classify_all(n, SchubertCache::global(), with_sem)?;
    Ok(count_from_records(n, &records))
}

/// Nonnegative SEM expansions that fail to be a single SEM. Reported, never
/// asserted.
pub fn conjecture_scan(n: usize) -> Result<ConjectureRow> {
    let records = classify_all(n, SchubertCache::global(), true)?;
    Ok(conjecture_from_records(n, &records))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checks {
    pub theorems: bool,
    pub counts: bool,
    pub conjecture: bool,
}

impl Default for Checks {
    fn default() -> Self {
        Checks {
            theorems: true,
            counts: true,
            conjecture: true,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ScanConfig {
    pub n_max: usize,
    /// Largest size at which SEM expansions are solved.
    pub sem_max: usize,
    pub checks: Checks,
    /// Worker threads; 0 lets rayon decide.
    pub jobs: usize,
    pub cache_dir: Option<PathBuf>,
    pub report_path: Option<PathBuf>,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            n_max: DEFAULT_N_MAX,
            sem_max: DEFAULT_SEM_MAX,
            checks: Checks::default(),
            jobs: 0,
            cache_dir: None,
            report_path: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureSection {
    pub rows: Vec<ConjectureRow>,
    pub counterexample_total: usize,
    pub status: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEvent {
    pub n: usize,
    pub status: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub n: usize,
    pub sem_max: usize,
    pub pass: bool,
    pub theorems: BTreeMap<String, Vec<TheoremResult>>,
    pub counts: Vec<CountRow>,
    pub conjecture: Option<ConjectureSection>,
    pub assumptions: Vec<String>,
    pub timing_ms: BTreeMap<String, u128>,
    pub cache: Vec<CacheEvent>,
}

impl ScanReport {
    /// Pretty JSON of everything except the run-dependent `timing_ms` and
    /// `cache` fields.
    pub fn canonical_json(&self) -> String {
        let mut value = serde_json::to_value(self).expect("report serializes");
        if let Some(obj) = value.as_object_mut() {
            obj.remove("timing_ms");
            obj.remove("cache");
        }
        serde_json::to_string_pretty(&value).expect("report serializes")
    }

    pub fn conjecture_counterexamples(&self) -> usize {
        self.conjecture.as_ref().map_or(0, |c| c.counterexample_total)
    }

    /// 0 when every asserted check passes, 1 when one fails, 3 when all pass
    /// but the conjecture scan found a counterexample.
    pub fn exit_code(&self) -> i32 {
        if !self.pass {
            1
        } else if self.conjecture_counterexamples() > 0 {
            3
        } else {
            0
        }
    }
}

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    w: Permutation,
    poly: IntPolynomial,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    format_version: u32,
    n: usize,
    checksum: String,
    entries: Vec<CacheEntry>,
}

fn checksum(entries: &[CacheEntry]) -> String {
    let body = serde_json::to_string(entries).expect("cache entries serialize");
    hex::encode(Sha256::digest(body.as_bytes()))
}

pub fn cache_path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("schubert-s{n}.json"))
}

/// Loads one size into `cache`. Returns a status string: `loaded`,
/// `missing`, or `rejected: <reason>` for anything that fails to parse or
/// verify.
pub fn load_cache(dir: &Path, n: usize, cache: &SchubertCache) -> String {
    let path = cache_path(dir, n);
    let Ok(text) = fs::read_to_string(&path) else {
        return "missing".into();
    };
    let file: CacheFile = match serde_json::from_str(&text) {
        Ok(f) => f,
        Err(e) => return format!("rejected: {e}"),
    };
    if file.format_version != CACHE_FORMAT_VERSION {
        return format!("rejected: format version {}", file.format_version);
    }
    if file.n != n || file.entries.iter().any(|e| e.w.n() != n) {
        return "rejected: size mismatch".into();
    }
    if checksum(&file.entries) != file.checksum {
        return "rejected: checksum mismatch".into();
    }
    for e in file.entries {
        cache.insert(e.w, e.poly);
    }
    "loaded".into()
}

pub fn store_cache(dir: &Path, n: usize, cache: &SchubertCache) -> Result<()> {
    let io = |path: &Path| {
        let path = path.to_path_buf();
        move |source| Error::Io { path, source }
    };
    fs::create_dir_all(dir).map_err(io(dir))?;
    let entries: Vec<CacheEntry> = cache
        .entries(n)
        .into_iter()
        .map(|(w, p)| CacheEntry { w, poly: (*p).clone() })
        .collect();
    let file = CacheFile {
        format_version: CACHE_FORMAT_VERSION,
        n,
        checksum: checksum(&entries),
        entries,
    };
    let path = cache_path(dir, n);
    let tmp = path.with_extension("json.tmp");
    let body = serde_json::to_string(&file).map_err(|source| Error::Json {
        path: tmp.clone(),
        source,
    })?;
    fs::write(&tmp, body).map_err(io(&tmp))?;
    fs::rename(&tmp, &path).map_err(io(&path))?;
    Ok(())
}

/// Runs the configured checks for every `n` in `1..=n_max` and writes the
/// report when a path is configured.
pub fn run_suite(config: &ScanConfig) -> Result<ScanReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .expect("thread pool");
    pool.install(|| run_suite_inner(config))
}

fn run_suite_inner(config: &ScanConfig) -> Result<ScanReport> {
    let started = Instant::now();
    let cache = SchubertCache::new();
    let mut theorems: BTreeMap<String, Vec<TheoremResult>> = BTreeMap::new();
    let mut counts = Vec::new();
    let mut conjecture_rows = Vec::new();
    let mut cache_events = Vec::new();
    let mut timing_ms = BTreeMap::new();

    for n in 1..=config.n_max {
        if let Some(dir) = &config.cache_dir {
            cache_events.push(CacheEvent {
                n,
                status: load_cache(dir, n, &cache),
            });
        }
        let with_sem = n <= config.sem_max;
        let t = Instant::now();
        let records = classify_all(n, &cache, with_sem)?;
        timing_ms.insert(format!("classify_s{n}"), t.elapsed().as_millis());

        if config.checks.theorems {
            for (name, result) in theorems_from_records(n, &records, with_sem) {
                theorems.entry(name).or_default().push(result);
            }
        }
        if config.checks.counts {
            counts.push(count_from_records(n, &records));
        }
        if config.checks.conjecture && with_sem {
            conjecture_rows.push(conjecture_from_records(n, &records));
        }
        if let Some(dir) = &config.cache_dir {
            store_cache(dir, n, &cache)?;
        }
    }

    let conjecture = config.checks.conjecture.then(|| {
        let total: usize = conjecture_rows.iter().map(|r| r.counterexamples.len()).sum();
        let reach = conjecture_rows.last().map_or(0, |r| r.n);
        let status = if total == 0 {
            format!("no counterexample for n <= {reach}")
        } else {
            format!("{total} counterexample(s) for n <= {reach}")
        };
        ConjectureSection {
            rows: conjecture_rows,
            counterexample_total: total,
            status,
        }
    });

    let pass = theorems.values().flatten().all(|t| t.pass) && counts.iter().all(|c| c.pass);
    timing_ms.insert("total".into(), started.elapsed().as_millis());
    let report = ScanReport {
        n: config.n_max,
        sem_max: config.sem_max,
        pass,
        theorems,
        counts,
        conjecture,
        assumptions: ASSUMPTIONS.iter().map(|s| s.to_string()).collect(),
        timing_ms,
        cache: cache_events,
    };

    if let Some(path) = &config.report_path {
        let body = serde_json::to_string_pretty(&report).map_err(|source| Error::Json {
            path: path.clone(),
            source,
        })?;
        fs::write(path, body + "\n").map_err(|source| Error::Io {
            path: path.clone(),
            source,
        })?;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn classify_examples() {
        let r = classify(&Permutation::identity(3)).unwrap();
        assert!(r.is_monomial && r.is_chm && r.is_sem == Some(true));
        assert_eq!(r.sem_terms, Some(1));

        let r = classify(&p("312")).unwrap();
        assert!(r.is_monomial);
        assert_eq!(r.is_sem, Some(false));
        assert_eq!(r.sem_terms, Some(2));
        assert_eq!(r.sem_nonneg, Some(false));
        assert!(r.pattern_flags.p312 && !r.pattern_flags.p132);

        let r = classify(&p("35427861")).unwrap();
        assert_eq!(r.is_sem, Some(true));
        assert_eq!(r.constructive_agrees, Some(true));
    }

    #[test]
    fn record_invariants() {
        for w in Permutation::all(4) {
            let r = classify(&w).unwrap();
            if r.is_sem == Some(true) {
                assert_eq!(r.sem_terms, Some(1));
                assert_eq!(r.sem_nonneg, Some(true));
            }
        }
    }

    #[test]
    fn closed_forms() {
        assert_eq!((1..=7).map(catalan).collect::<Vec<_>>(), vec![1, 2, 5, 14, 42, 132, 429]);
        assert_eq!(
            (-1..=8).map(fibonacci).collect::<Vec<_>>(),
            vec![1, 0, 1, 1, 2, 3, 5, 8, 13, 21]
        );
        assert_eq!(fibonacci_index(13), Some(7));
        assert_eq!(fibonacci_index(1), Some(1));
        assert_eq!(fibonacci_index(4), None);
        assert_eq!(fibonacci_index(0), None);
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(3, 5), 0);
    }

    #[test]
    fn theorem_scan_small() {
        for n in 1..=4 {
            let section = theorem_scan(n).unwrap();
            assert_eq!(section.len(), 4);
            assert!(section.values().all(|t| t.pass && t.checked > 0), "n={n}");
        }
    }

    #[test]
    fn count_scan_examples() {
        let c = count_scan(3).unwrap();
        assert_eq!((c.monomial, c.sem, c.chm), (5, Some(5), 4));
        assert_eq!(c.catalan, 5);
        assert!(c.pass);
        let c = count_scan(4).unwrap();
        assert_eq!(c.monomial, 14);
        assert_eq!(c.sem, Some(13));
        assert_eq!(c.fibonacci_index, Some(7));
        let c = count_scan(1).unwrap();
        assert_eq!((c.monomial, c.sem, c.chm), (1, Some(1), 1));
        assert!(c.pass);
    }

    #[test]
    fn conjecture_scan_small() {
        let c = conjecture_scan(3).unwrap();
        assert!(c.counterexamples.is_empty());
        assert_eq!(c.single_sem, 5);
        assert_eq!(c.nonnegative, 5);
        let c = conjecture_scan(1).unwrap();
        assert!(c.counterexamples.is_empty());
    }

    #[test]
    fn suite_small_report() {
        let report = run_suite(&ScanConfig {
            n_max: 3,
            ..ScanConfig::default()
        })
        .unwrap();
        assert!(report.pass);
        assert_eq!(report.exit_code(), 0);
        assert_eq!(report.counts[2].monomial, 5);
        assert_eq!(report.assumptions.len(), ASSUMPTIONS.len());
        assert!(!report.canonical_json().contains("timing_ms"));

        let trivial = run_suite(&ScanConfig {
            n_max: 1,
            ..ScanConfig::default()
        })
        .unwrap();
        assert!(trivial.pass);
        assert_eq!(trivial.counts.len(), 1);
    }

    #[test]
    fn corrupt_cache_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let cache = SchubertCache::new();
        for w in Permutation::all(3) {
            cache.divdiff(&w);
        }
        store_cache(dir.path(), 3, &cache).unwrap();
        assert_eq!(load_cache(dir.path(), 3, &SchubertCache::new()), "loaded");
        assert_eq!(load_cache(dir.path(), 4, &SchubertCache::new()), "missing");

        let path = cache_path(dir.path(), 3);
        let tampered = fs::read_to_string(&path).unwrap().replace("\"1\"", "\"2\"");
        fs::write(&path, tampered).unwrap();
        let fresh = SchubertCache::new();
        assert_eq!(load_cache(dir.path(), 3, &fresh), "rejected: checksum mismatch");
        assert!(fresh.is_empty());

        fs::write(&path, "{not json").unwrap();
        assert!(load_cache(dir.path(), 3, &fresh).starts_with("rejected"));
    }
}
