//! Schubert polynomials by divided differences, expansion in the Schubert
//! basis, and Monk's rule.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{LehmerCode, Permutation};
use crate::pipedream::schubert_from_pipedreams;
use crate::poly::{write_signed_sum, ExponentVector, IntPolynomial};

/// `x_1^{n-1} x_2^{n-2} ... x_{n-1}`, the Schubert polynomial of `w_0 ∈ S_n`.
pub fn staircase_monomial(n: usize) -> IntPolynomial {
    let exps = (1..=n).map(|i| (n - i) as u32).collect();
    IntPolynomial::monomial(ExponentVector::new(exps), 1)
}

/// Memo table for divided-difference Schubert polynomials, keyed by the full
/// one-line word (so `n` is part of the key).
///
/// Reads take a shared lock; inserts take the write lock only for the
/// insertion itself.
#[derive(Default)]
pub struct SchubertCache {
    table: RwLock<HashMap<Permutation, Arc<IntPolynomial>>>,
}

impl SchubertCache {
    pub fn new() -> Self {
        SchubertCache::default()
    }

    /// Process-wide cache used by [`schubert_divdiff`].
    pub fn global() -> &'static SchubertCache {
        static GLOBAL: OnceLock<SchubertCache> = OnceLock::new();
        GLOBAL.get_or_init(SchubertCache::new)
    }

    pub fn get(&self, w: &Permutation) -> Option<Arc<IntPolynomial>> {
        self.table.read().unwrap().get(w).cloned()
    }

    pub fn insert(&self, w: Permutation, poly: IntPolynomial) -> Arc<IntPolynomial> {
        let poly = Arc::new(poly);
        self.table
            .write()
            .unwrap()
            .entry(w)
            .or_insert_with(|| poly.clone())
            .clone()
    }

    pub fn len(&self) -> usize {
        self.table.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Cached entries of size `n`, sorted by word.
    pub fn entries(&self, n: usize) -> Vec<(Permutation, Arc<IntPolynomial>)> {
        let mut out: Vec<_> = self
            .table
            .read()
            .unwrap()
            .iter()
            .filter(|(w, _)| w.n() == n)
            .map(|(w, p)| (w.clone(), p.clone()))
            .collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }

    /// `𝔖_w` from the staircase monomial of `w_0`, climbing through the
    /// smallest ascent at each step and caching every intermediate result.
    pub fn divdiff(&self, w: &Permutation) -> Arc<IntPolynomial> {
        if let Some(hit) = self.get(w) {
            return hit;
        }
        let top = Permutation::longest(w.n());
        let mut chain = Vec::new();
        let mut current = w.clone();
        let mut base = loop {
            if let Some(hit) = self.get(&current) {
                break (*hit).clone();
            }
            if current == top {
                break staircase_monomial(w.n());
            }
            let i = current.ascent_set()[0];
            let up = current.swap_adjacent(i).expect("ascent is in range");
            chain.push((std::mem::replace(&mut current, up), i));
        };
        if chain.is_empty() {
            return self.insert(current, base);
        }
        self.insert(current, base.clone());
        let mut result = None;
        for (v, i) in chain.into_iter().rev() {
            base = base.divided_difference(i);
            result = Some(self.insert(v, base.clone()));
        }
        result.expect("chain was nonempty")
    }
}

/// `𝔖_w` by divided differences, memoized in [`SchubertCache::global`].
pub fn schubert_divdiff(w: &Permutation) -> IntPolynomial {
    (*SchubertCache::global().divdiff(w)).clone()
}

/// `𝔖_w` along a caller-chosen reduced word: at each step `choose` receives
/// the ascent set of the current permutation and picks one of its entries.
/// No caching.
pub fn schubert_divdiff_along(
    w: &Permutation,
    mut choose: impl FnMut(&[usize]) -> usize,
) -> IntPolynomial {
    let top = Permutation::longest(w.n());
    let mut path = Vec::new();
    let mut current = w.clone();
    while current != top {
        let ascents = current.ascent_set();
        let i = choose(&ascents);
        assert!(ascents.contains(&i), "{i} is not an ascent of {current}");
        path.push(i);
        current = current.swap_adjacent(i).expect("ascent is in range");
    }
    path.into_iter()
        .rev()
        .fold(staircase_monomial(w.n()), |f, i| f.divided_difference(i))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Method {
    #[default]
    DivDiff,
    PipeDream,
    /// Both methods, compared before returning.
    Checked,
}

impl FromStr for Method {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "divdiff" => Ok(Method::DivDiff),
            "pipedream" => Ok(Method::PipeDream),
            "checked" => Ok(Method::Checked),
            other => Err(format!(
                "unknown method '{other}' (expected divdiff, pipedream or checked)"
            )),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::DivDiff => "divdiff",
            Method::PipeDream => "pipedream",
            Method::Checked => "checked",
        })
    }
}

pub fn schubert(w: &Permutation, method: Method) -> Result<IntPolynomial> {
    match method {
        Method::DivDiff => Ok(schubert_divdiff(w)),
        Method::PipeDream => schubert_from_pipedreams(w),
        Method::Checked => {
            let divdiff = schubert_divdiff(w);
            let pipedream = schubert_from_pipedreams(w)?;
            if divdiff != pipedream {
                return Err(Error::MethodMismatch {
                    divdiff: Box::new(divdiff),
                    pipedream: Box::new(pipedream),
                });
            }
            Ok(divdiff)
        }
    }
}

/// `f = Σ c_w 𝔖_w` over `w ∈ S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchubertExpansion {
    pub n: usize,
    pub terms: BTreeMap<Permutation, BigInt>,
}

impl SchubertExpansion {
    pub fn reconstruct(&self) -> IntPolynomial {
        let mut out = IntPolynomial::zero();
        for (w, c) in &self.terms {
            out = &out + &schubert_divdiff(w).scale(c);
        }
        out
    }
}

impl fmt::Display for SchubertExpansion {
    /// `S[132] - S[213]`, ascending by word.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        write_signed_sum(
            f,
            self.terms.iter().map(|(w, c)| (c.clone(), format!("S[{w}]"), false)),
        )
    }
}

#[derive(Serialize, Deserialize)]
struct SchubertTermJson {
    w: Permutation,
    coeff: String,
}

impl Serialize for SchubertExpansion {
    /// `[{"w": [...], "coeff": "..."}, ...]` sorted by word.
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.terms.iter().map(|(w, c)| SchubertTermJson {
            w: w.clone(),
            coeff: c.to_string(),
        }))
    }
}

impl<'de> Deserialize<'de> for SchubertExpansion {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<SchubertTermJson>::deserialize(d)?;
        let n = raw.iter().map(|t| t.w.n()).max().unwrap_or(1);
        let mut terms = BTreeMap::new();
        for t in raw {
            let c: BigInt = t.coeff.parse().map_err(serde::de::Error::custom)?;
            terms.insert(t.w.embed(n), c);
        }
        Ok(SchubertExpansion { n, terms })
    }
}

/// Checks that every monomial has `exponent(x_i) <= n - i`.
pub(crate) fn check_staircase(f: &IntPolynomial, n: usize) -> Result<()> {
    for (e, _) in f.terms() {
        let inside = e
            .as_slice()
            .iter()
            .enumerate()
            .all(|(i, &x)| i + 1 < n && x as usize <= n - i - 1);
        if !inside {
            return Err(Error::StaircaseViolation {
                exponents: e.as_slice().to_vec(),
                n,
            });
        }
    }
    Ok(())
}

/// Greedy expansion: the leading monomial `x^c` of what remains names the
/// next basis element `𝔖_w` with `L(w) = c`, whose own leading term is
/// `x^c` with coefficient 1.
pub fn expand_schubert_basis(f: &IntPolynomial, n: usize) -> Result<SchubertExpansion> {
    check_staircase(f, n)?;
    let mut rest = f.clone();
    let mut terms = BTreeMap::new();
    while !rest.is_zero() {
        let (lead, c) = rest.leading_term()?;
        let (lead, c) = (lead.clone(), c.clone());
        let code = LehmerCode::new(lead.padded(n)).expect("staircase monomials are codes");
        let w = Permutation::from_code(&code);
        let s = SchubertCache::global().divdiff(&w);
        debug_assert_eq!(s.leading_term().unwrap(), (&lead, &BigInt::one()));
        rest = &rest - &s.scale(&c);
        terms.insert(w, c);
    }
    Ok(SchubertExpansion { n, terms })
}

/// Size in which Monk's rule for `(w, k)` is evaluated: one past both `n`
/// and `k`, so no cover is cut off.
fn monk_ambient(w: &Permutation, k: usize) -> usize {
    w.n().max(k) + 1
}

/// Covers `w·(i1, i2)` with `i1 <= k < i2` and length one more than `w`,
/// trimmed of trailing fixed points and sorted.
pub fn monk_products(w: &Permutation, k: usize) -> Result<Vec<Permutation>> {
    if k == 0 {
        return Err(Error::InvalidMonkIndex { k });
    }
    let m = monk_ambient(w, k);
    let big = w.embed(m);
    let mut covers = Vec::new();
    for i1 in 1..=k {
        for i2 in k + 1..=m {
            if big.is_length_cover(i1, i2) {
                covers.push(big.transpose(i1, i2)?.trimmed());
            }
        }
    }
    covers.sort();
    Ok(covers)
}

/// `(x_1 + ... + x_k) · 𝔖_w` expanded in the Schubert basis of the Monk
/// ambient size.
pub fn monk_expansion(w: &Permutation, k: usize) -> Result<SchubertExpansion> {
    if k == 0 {
        return Err(Error::InvalidMonkIndex { k });
    }
    let m = monk_ambient(w, k);
    let linear = (1..=k).fold(IntPolynomial::zero(), |acc, i| &acc + &IntPolynomial::var(i));
    let product = &linear * &*SchubertCache::global().divdiff(&w.embed(m));
    expand_schubert_basis(&product, m)
}

/// Whether the combinatorial rule matches the algebraic expansion exactly,
/// every coefficient being 1.
pub fn verify_monk(w: &Permutation, k: usize) -> Result<bool> {
    let covers = monk_products(w, k)?;
    let expansion = monk_expansion(w, k)?;
    let algebraic: Vec<Permutation> = expansion.terms.keys().map(Permutation::trimmed).collect();
    Ok(expansion.terms.values().all(One::is_one) && algebraic == covers)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn poly(terms: &[(&[u32], i64)]) -> IntPolynomial {
        IntPolynomial::from_terms(terms.iter().map(|(e, c)| (e.to_vec(), *c)))
    }

    #[test]
    fn divdiff_examples() {
        assert_eq!(schubert_divdiff(&Permutation::longest(3)), poly(&[(&[2, 1], 1)]));
        assert_eq!(schubert_divdiff(&Permutation::identity(4)), IntPolynomial::one());
        assert_eq!(
            schubert_divdiff(&p("4132")),
            poly(&[(&[3, 0, 1], 1), (&[3, 1], 1)])
        );
        assert_eq!(schubert_divdiff(&p("132")), poly(&[(&[1], 1), (&[0, 1], 1)]));
        assert_eq!(schubert_divdiff(&p("1")), IntPolynomial::one());
    }

    #[test]
    fn private_cache_agrees_with_global() {
        let cache = SchubertCache::new();
        for w in Permutation::all(4) {
            assert_eq!(*cache.divdiff(&w), schubert_divdiff(&w));
        }
        assert_eq!(cache.entries(4).len(), 24);
        assert!(cache.entries(3).is_empty());
    }

    #[test]
    fn independent_of_reduced_word() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in 1..=5 {
            for w in Permutation::all(n) {
                let alt = schubert_divdiff_along(&w, |a| a[rng.gen_range(0..a.len())]);
                let last = schubert_divdiff_along(&w, |a| *a.last().unwrap());
                assert_eq!(alt, schubert_divdiff(&w), "{w}");
                assert_eq!(last, alt, "{w}");
            }
        }
    }

    #[test]
    fn method_dispatch() {
        let id = Permutation::identity(3);
        assert_eq!(schubert(&id, Method::Checked).unwrap(), IntPolynomial::one());
        let s = schubert(&p("4132"), Method::Checked).unwrap();
        assert_eq!(s.to_string(), "x1^3*x3 + x1^3*x2");
        assert_eq!(schubert(&p("4132"), Method::PipeDream).unwrap(), s);
        assert_eq!("checked".parse::<Method>().unwrap(), Method::Checked);
        assert!("fast".parse::<Method>().is_err());
    }

    #[test]
    fn descent_ascent_law() {
        for n in 1..=6 {
            for w in Permutation::all(n) {
                let s = schubert_divdiff(&w);
                for i in 1..n {
                    let d = s.divided_difference(i);
                    if w.is_descent(i) {
                        assert_eq!(d, schubert_divdiff(&w.swap_adjacent(i).unwrap()), "{w} {i}");
                    } else {
                        assert!(d.is_zero(), "{w} {i}");
                    }
                }
            }
        }
    }

    #[test]
    fn stable_under_embedding() {
        for n in 1..=5 {
            for w in Permutation::all(n) {
                assert_eq!(schubert_divdiff(&w), schubert_divdiff(&w.embed(n + 1)));
            }
        }
    }

    #[test]
    fn leading_monomial_is_code() {
        for n in 1..=6 {
            for w in Permutation::all(n) {
                let s = schubert_divdiff(&w);
                let (lead, c) = s.leading_term().unwrap();
                assert!(c.is_one());
                assert_eq!(lead, &ExponentVector::new(w.lehmer_code().entries().to_vec()));
                assert!(s.all_coefficients_positive());
            }
        }
    }

    #[test]
    fn expansion_examples() {
        let e = expand_schubert_basis(&schubert_divdiff(&p("4132")), 4).unwrap();
        assert_eq!(e.terms, BTreeMap::from([(p("4132"), BigInt::one())]));

        let e = expand_schubert_basis(&IntPolynomial::var(1), 2).unwrap();
        assert_eq!(e.terms, BTreeMap::from([(p("21"), BigInt::one())]));
        assert_eq!(schubert_divdiff(&p("213")), IntPolynomial::var(1));

        let f = &(&IntPolynomial::var(1) + &IntPolynomial::var(2)) * &IntPolynomial::var(1);
        let e = expand_schubert_basis(&f, 3).unwrap();
        assert_eq!(
            e.terms,
            BTreeMap::from([(p("231"), BigInt::one()), (p("312"), BigInt::one())])
        );
        assert_eq!(e.reconstruct(), f);
        assert_eq!(monk_products(&p("213"), 2).unwrap(), vec![p("231"), p("312")]);
    }

    #[test]
    fn expansion_with_signs() {
        // x_2 = 𝔖_132 - 𝔖_213.
        let e = expand_schubert_basis(&IntPolynomial::var(2), 3).unwrap();
        assert_eq!(
            e.terms,
            BTreeMap::from([(p("132"), BigInt::one()), (p("213"), BigInt::from(-1))])
        );
        assert!(expand_schubert_basis(&IntPolynomial::zero(), 3).unwrap().terms.is_empty());
    }

    #[test]
    fn staircase_rejected() {
        let f = IntPolynomial::from_terms([(vec![0, 2], 1)]);
        assert!(matches!(
            expand_schubert_basis(&f, 3),
            Err(Error::StaircaseViolation { .. })
        ));
        assert!(expand_schubert_basis(&IntPolynomial::var(3), 3).is_err());
    }

    #[test]
    fn expansion_round_trip_s5() {
        for w in Permutation::all(5) {
            let e = expand_schubert_basis(&schubert_divdiff(&w), 5).unwrap();
            assert_eq!(e.terms, BTreeMap::from([(w, BigInt::one())]));
        }
    }

    #[test]
    fn monk_examples() {
        assert_eq!(monk_products(&p("12"), 1).unwrap(), vec![p("21")]);
        assert!(verify_monk(&Permutation::identity(2), 1).unwrap());
        assert!(verify_monk(&p("213"), 2).unwrap());
        assert!(matches!(monk_products(&p("12"), 0), Err(Error::InvalidMonkIndex { k: 0 })));
        // w(n) != n: the cover 1243 lives in S_4.
        let covers = monk_products(&p("123"), 3).unwrap();
        assert_eq!(covers, vec![p("1243")]);
    }

    #[test]
    fn monk_exhaustive_s4() {
        for w in Permutation::all(4) {
            for k in 1..=3 {
                assert!(verify_monk(&w, k).unwrap(), "{w} k={k}");
            }
        }
    }

    #[test]
    fn json_form() {
        let e = SchubertExpansion {
            n: 3,
            terms: BTreeMap::from([(p("312"), BigInt::from(-1)), (p("231"), BigInt::one())]),
        };
        let s = serde_json::to_string(&e).unwrap();
        assert_eq!(s, r#"[{"w":[2,3,1],"coeff":"1"},{"w":[3,1,2],"coeff":"-1"}]"#);
        let back: SchubertExpansion = serde_json::from_str(&s).unwrap();
        assert_eq!(back, e);
    }
}
