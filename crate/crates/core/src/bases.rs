//! Elementary and complete homogeneous generators, standard elementary
//! monomials (SEMs) `e_a = e^1_{a_1} e^2_{a_2} ...`, complete homogeneous
//! monomials (CHMs) `h_a = h^1_{a_1} h^2_{a_2} ...`, and SEM expansion of
//! staircase polynomials.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::perm::{LehmerCode, Permutation};
use crate::pipedream::PipeDream;
use crate::poly::{write_signed_sum, ExponentVector, IntPolynomial};
use crate::schubert::{check_staircase, SchubertCache};

/// `e^i_j`: the sum of all squarefree degree-`j` monomials in `x_1..x_i`.
pub fn elementary_poly(i: usize, j: usize) -> IntPolynomial {
    let mut out = IntPolynomial::zero();
    let mut chosen = Vec::with_capacity(j);
    subsets(1, i, j, &mut chosen, &mut |vars| {
        let mut exps = vec![0; i];
        for &v in vars {
            exps[v - 1] = 1;
        }
        out.add_term(ExponentVector::new(exps), BigInt::one());
    });
    out
}

fn subsets(start: usize, i: usize, j: usize, chosen: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if chosen.len() == j {
        f(chosen);
        return;
    }
    for v in start..=i {
        chosen.push(v);
        subsets(v + 1, i, j, chosen, f);
        chosen.pop();
    }
}

/// `h^i_j`: the sum of all degree-`j` monomials in `x_1..x_i`.
pub fn homogeneous_poly(i: usize, j: usize) -> IntPolynomial {
    let mut out = IntPolynomial::zero();
    let mut exps = vec![0u32; i];
    compositions(&mut exps, 0, j as u32, &mut |e| {
        out.add_term(ExponentVector::new(e.to_vec()), BigInt::one());
    });
    out
}

/// Every way to distribute `remaining` over `exps[at..]`.
fn compositions(exps: &mut [u32], at: usize, remaining: u32, f: &mut impl FnMut(&[u32])) {
    if at == exps.len() {
        if remaining == 0 {
            f(exps);
        }
        return;
    }
    for e in 0..=remaining {
        exps[at] = e;
        compositions(exps, at + 1, remaining - e, f);
    }
    exps[at] = 0;
}

macro_rules! index_vector {
    ($name:ident, $letter:literal) => {
        #[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name(Vec<u32>);

        impl $name {
            /// Trailing zeros are trimmed.
            pub fn new(mut a: Vec<u32>) -> Self {
                while a.last() == Some(&0) {
                    a.pop();
                }
                $name(a)
            }

            pub fn as_slice(&self) -> &[u32] {
                &self.0
            }

            /// `a_i` for 1-based `i`.
            pub fn get(&self, i: usize) -> u32 {
                self.0.get(i.wrapping_sub(1)).copied().unwrap_or(0)
            }

            pub fn degree(&self) -> u32 {
                self.0.iter().sum()
            }
        }

        impl fmt::Display for $name {
            /// Nonzero factors as `e[i,j]` (or `h[i,j]`), joined by `*`.
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let factors: Vec<String> = self
                    .0
                    .iter()
                    .enumerate()
                    .filter(|(_, &a)| a > 0)
                    .map(|(i, a)| format!("{}[{},{}]", $letter, i + 1, a))
                    .collect();
                if factors.is_empty() {
                    f.write_str("1")
                } else {
                    f.write_str(&factors.join("*"))
                }
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}{:?}", stringify!($name), self.0)
            }
        }

        impl Serialize for $name {
            fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                self.0.serialize(s)
            }
        }

        impl<'de> Deserialize<'de> for $name {
            fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                Ok($name::new(Vec::deserialize(d)?))
            }
        }
    };
}

index_vector!(SemVector, "e");
index_vector!(ChmVector, "h");

impl SemVector {
    /// `0 <= a_i <= i`, so that `e_a` is a basis element.
    pub fn is_standard(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &a)| a as usize <= i + 1)
    }
}

pub fn sem_product(a: &SemVector) -> IntPolynomial {
    a.0.iter()
        .enumerate()
        .fold(IntPolynomial::one(), |acc, (i, &aj)| {
            &acc * &elementary_poly(i + 1, aj as usize)
        })
}

pub fn chm_product(a: &ChmVector) -> IntPolynomial {
    a.0.iter()
        .enumerate()
        .fold(IntPolynomial::one(), |acc, (i, &aj)| {
            &acc * &homogeneous_poly(i + 1, aj as usize)
        })
}

/// SEM vectors `a` with `a_i <= i` for `i <= n-1` and `Σ a_i = d`, sorted
/// lexicographically.
pub fn sem_basis(n: usize, d: u32) -> Vec<SemVector> {
    let bounds: Vec<u32> = (1..n as u32).collect();
    let mut out = Vec::new();
    bounded_vectors(&bounds, d, &mut |v| out.push(SemVector::new(v.to_vec())));
    out.sort();
    out
}

/// Staircase monomials `x^c` with `c_i <= n-i` and `Σ c_i = d`, sorted by
/// term order.
pub fn staircase_monomials(n: usize, d: u32) -> Vec<ExponentVector> {
    let bounds: Vec<u32> = (1..n as u32).rev().collect();
    let mut out = Vec::new();
    bounded_vectors(&bounds, d, &mut |v| out.push(ExponentVector::new(v.to_vec())));
    out.sort();
    out
}

fn bounded_vectors(bounds: &[u32], total: u32, f: &mut impl FnMut(&[u32])) {
    fn go(bounds: &[u32], at: usize, left: u32, cur: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
        if at == bounds.len() {
            if left == 0 {
                f(cur);
            }
            return;
        }
        for v in 0..=bounds[at].min(left) {
            cur.push(v);
            go(bounds, at + 1, left - v, cur, f);
            cur.pop();
        }
    }
    go(bounds, 0, total, &mut Vec::with_capacity(bounds.len()), f);
}

/// The degree-`d` component of the staircase space in the SEM basis.
/// Rows are staircase monomials, columns SEM vectors; entry `(r, c)` is the
/// coefficient of monomial `r` in `e_c`.
pub struct SemSystem {
    pub n: usize,
    pub degree: u32,
    pub basis: Vec<SemVector>,
    pub monomials: Vec<ExponentVector>,
    pub matrix: Matrix,
}

impl SemSystem {
    pub fn build(n: usize, degree: u32) -> Self {
        let basis = sem_basis(n, degree);
        let monomials = staircase_monomials(n, degree);
        let row_of: HashMap<&ExponentVector, usize> =
            monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut matrix = vec![vec![BigInt::zero(); basis.len()]; monomials.len()];
        for (col, a) in basis.iter().enumerate() {
            for (m, c) in sem_product(a).terms() {
                let row = row_of[m];
                matrix[row][col] = c.clone();
            }
        }
        SemSystem {
            n,
            degree,
            basis,
            monomials,
            matrix,
        }
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.matrix)
    }
}

/// Largest size solved by peeling. The peel indexes monomials densely over
/// all `n!` staircase exponent vectors.
const PEEL_MAX_N: usize = 9;

/// Mixed-radix index of staircase monomials: `x_v` has radix `n - v + 1`.
/// Products of SEMs stay inside the staircase, so keys add without carries.
struct StaircaseIndex {
    strides: Vec<usize>,
    size: usize,
}

impl StaircaseIndex {
    fn new(n: usize) -> Self {
        let mut strides = Vec::with_capacity(n);
        let mut size = 1;
        for v in 1..=n {
            strides.push(size);
            size *= n - v + 1;
        }
        StaircaseIndex { strides, size }
    }

    fn key(&self, exps: &[u32]) -> usize {
        exps.iter().zip(&self.strides).map(|(&e, &s)| e as usize * s).sum()
    }

    fn var(&self, v: usize) -> usize {
        self.strides[v - 1]
    }
}

/// Solver for one graded component.
///
/// The SEM matrix is not triangular in any term order, but it can be
/// permuted to unitriangular form. `Peel` records that form: `order` lists
/// `(row, pivot column, pivot coefficient)` such that each pivot column has
/// no entry in any later row. When the peel stalls, the solver falls back
/// to the dense integer inverse.
enum SemSolver {
    Peel {
        basis: Vec<SemVector>,
        index: StaircaseIndex,
        col_of: Vec<u32>,
        ncols: usize,
        rows: Vec<Vec<(u32, i64)>>,
        order: Vec<(u32, u32, i64)>,
    },
    Dense {
        system: SemSystem,
        inverse: Matrix,
        row_of: HashMap<ExponentVector, usize>,
    },
}

/// Every `e_a` of degree `d` as a sparse row over `col_of`, built by a DFS
/// that shares prefix products.
fn sem_rows(n: usize, d: u32, index: &StaircaseIndex, col_of: &[u32]) -> (Vec<SemVector>, Vec<Vec<(u32, i64)>>) {
    let elementary: Vec<Vec<Vec<usize>>> = (0..n)
        .map(|k| {
            (0..=k)
                .map(|j| {
                    let mut out = Vec::new();
                    subsets(1, k, j, &mut Vec::new(), &mut |vars| {
                        out.push(vars.iter().map(|&v| index.var(v)).sum());
                    });
                    out
                })
                .collect()
        })
        .collect();

    struct Walk<'a> {
        n: usize,
        elementary: &'a [Vec<Vec<usize>>],
        col_of: &'a [u32],
        scratch: Vec<i64>,
        basis: Vec<SemVector>,
        rows: Vec<Vec<(u32, i64)>>,
    }
    fn go(w: &mut Walk, level: usize, left: u32, prefix: &[(usize, i64)], a: &mut Vec<u32>) {
        if level == w.n {
            if left == 0 {
                w.basis.push(SemVector::new(a.clone()));
                w.rows.push(prefix.iter().map(|&(k, c)| (w.col_of[k], c)).collect());
            }
            return;
        }
        let capacity: usize = (level + 1..w.n).sum();
        let lo = (left as usize).saturating_sub(capacity);
        for j in lo..=level.min(left as usize) {
            a.push(j as u32);
            if j == 0 {
                go(w, level + 1, left, prefix, a);
            } else {
                // Coefficients are positive, so a zero slot means untouched.
                let mut touched = Vec::new();
                for &(m, c) in prefix {
                    for &e in &w.elementary[level][j] {
                        let slot = &mut w.scratch[m + e];
                        if *slot == 0 {
                            touched.push(m + e);
                        }
                        *slot += c;
                    }
                }
                let next: Vec<(usize, i64)> = touched
                    .into_iter()
                    .map(|k| (k, std::mem::take(&mut w.scratch[k])))
                    .collect();
                go(w, level + 1, left - j as u32, &next, a);
            }
            a.pop();
        }
    }
    let mut walk = Walk {
        n,
        elementary: &elementary,
        col_of,
        scratch: vec![0; index.size],
        basis: Vec::new(),
        rows: Vec::new(),
    };
    go(&mut walk, 1, d, &[(0, 1)], &mut Vec::with_capacity(n));
    (walk.basis, walk.rows)
}

/// Repeatedly takes a column with a single live row; that row is solved
/// next. Returns `None` when no such column remains before every row is
/// used.
fn peel_order(rows: &[Vec<(u32, i64)>], ncols: usize) -> Option<Vec<(u32, u32, i64)>> {
    let mut col_rows: Vec<Vec<u32>> = vec![Vec::new(); ncols];
    for (r, row) in rows.iter().enumerate() {
        for &(c, _) in row {
            col_rows[c as usize].push(r as u32);
        }
    }
    let mut live: Vec<usize> = col_rows.iter().map(Vec::len).collect();
    let mut done = vec![false; rows.len()];
    let mut queue: Vec<u32> = (0..ncols as u32).filter(|&c| live[c as usize] == 1).collect();
    let mut order = Vec::with_capacity(rows.len());
    while let Some(col) = queue.pop() {
        if live[col as usize] != 1 {
            continue;
        }
        let row = *col_rows[col as usize].iter().find(|&&r| !done[r as usize])?;
        done[row as usize] = true;
        let pivot = rows[row as usize]
            .iter()
            .find(|&&(c, _)| c == col)
            .map(|&(_, v)| v)?;
        order.push((row, col, pivot));
        for &(c, _) in &rows[row as usize] {
            live[c as usize] -= 1;
            if live[c as usize] == 1 {
                queue.push(c);
            }
        }
    }
    (order.len() == rows.len()).then_some(order)
}

impl SemSolver {
    fn build(n: usize, degree: u32) -> Self {
        if n <= PEEL_MAX_N {
            if let Some(peel) = Self::build_peel(n, degree) {
                return peel;
            }
        }
        Self::build_dense(n, degree)
    }

    fn build_peel(n: usize, degree: u32) -> Option<Self> {
        let monomials = staircase_monomials(n, degree);
        let index = StaircaseIndex::new(n);
        let mut col_of = vec![u32::MAX; index.size];
        for (i, m) in monomials.iter().enumerate() {
            col_of[index.key(m.as_slice())] = i as u32;
        }
        let (basis, rows) = sem_rows(n, degree, &index, &col_of);
        assert_eq!(
            basis.len(),
            monomials.len(),
            "SEM count and staircase dimension differ at n = {n}, degree {degree}"
        );
        let order = peel_order(&rows, monomials.len())?;
        Some(SemSolver::Peel {
            basis,
            index,
            col_of,
            ncols: monomials.len(),
            rows,
            order,
        })
    }

    fn build_dense(n: usize, degree: u32) -> Self {
        let system = SemSystem::build(n, degree);
        assert_eq!(
            system.basis.len(),
            system.monomials.len(),
            "SEM count and staircase dimension differ at n = {n}, degree {degree}"
        );
        let inverse = linalg::integer_inverse(&system.matrix).unwrap_or_else(|| {
            panic!("SEM system at n = {n}, degree {degree} is not unimodular")
        });
        let row_of = system
            .monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        SemSolver::Dense {
            system,
            inverse,
            row_of,
        }
    }

    fn solve(&self, f: &IntPolynomial) -> BTreeMap<SemVector, BigInt> {
        match self {
            SemSolver::Peel {
                basis,
                index,
                col_of,
                ncols,
                rows,
                order,
            } => {
                let mut residual = vec![BigInt::zero(); *ncols];
                for (m, c) in f.terms() {
                    residual[col_of[index.key(m.as_slice())] as usize] = c.clone();
                }
                let mut terms = BTreeMap::new();
                for &(row, col, pivot) in order {
                    let c = &residual[col as usize];
                    if c.is_zero() {
                        continue;
                    }
                    let q = c / pivot;
                    assert!((&q * pivot - c).is_zero(), "non-integral SEM coefficient");
                    for &(cc, v) in &rows[row as usize] {
                        residual[cc as usize] -= &q * v;
                    }
                    terms.insert(basis[row as usize].clone(), q);
                }
                terms
            }
            SemSolver::Dense {
                system,
                inverse,
                row_of,
            } => {
                let mut rhs = vec![BigInt::zero(); system.monomials.len()];
                for (m, c) in f.terms() {
                    rhs[row_of[m]] = c.clone();
                }
                system
                    .basis
                    .iter()
                    .zip(linalg::mat_vec(inverse, &rhs))
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(a, c)| (a.clone(), c))
                    .collect()
            }
        }
    }

    #[cfg(test)]
    fn is_peel(&self) -> bool {
        matches!(self, SemSolver::Peel { .. })
    }

    fn cached(n: usize, degree: u32) -> Arc<SemSolver> {
        static SOLVERS: OnceLock<RwLock<HashMap<(usize, u32), Arc<SemSolver>>>> = OnceLock::new();
        let table = SOLVERS.get_or_init(Default::default);
        if let Some(s) = table.read().unwrap().get(&(n, degree)) {
            return s.clone();
        }
        let solver = Arc::new(SemSolver::build(n, degree));
        table
            .write()
            .unwrap()
            .entry((n, degree))
            .or_insert(solver)
            .clone()
    }
}

/// `f = Σ c_a e_a` over standard SEM vectors of the ambient size `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemExpansion {
    pub n: usize,
    pub degree: u32,
    pub terms: BTreeMap<SemVector, BigInt>,
}

impl SemExpansion {
    pub fn reconstruct(&self) -> IntPolynomial {
        self.terms
            .iter()
            .fold(IntPolynomial::zero(), |acc, (a, c)| &acc + &sem_product(a).scale(c))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// The vector when the expansion is exactly one SEM with coefficient 1.
    pub fn single(&self) -> Option<&SemVector> {
        match self.terms.iter().next() {
            Some((a, c)) if self.terms.len() == 1 && c.is_one() => Some(a),
            _ => None,
        }
    }
}

impl fmt::Display for SemExpansion {
    /// Terms in descending lexicographic order of `a`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let terms = self
            .terms
            .iter()
            .rev()
            .map(|(a, c)| (c.clone(), a.to_string(), a.as_slice().is_empty()));
        write_signed_sum(f, terms)
    }
}

#[derive(Serialize, Deserialize)]
struct SemExpansionJson {
    n: usize,
    degree: u32,
    terms: Vec<SemTermJson>,
}

#[derive(Serialize, Deserialize)]
struct SemTermJson {
    a: SemVector,
    coeff: String,
}

impl Serialize for SemExpansion {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SemExpansionJson {
            n: self.n,
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(a, c)| SemTermJson {
                    a: a.clone(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SemExpansion {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = SemExpansionJson::deserialize(d)?;
        let mut terms = BTreeMap::new();
        for t in raw.terms {
            let c: BigInt = t.coeff.parse().map_err(serde::de::Error::custom)?;
            if !c.is_zero() {
                terms.insert(t.a, c);
            }
        }
        Ok(SemExpansion {
            n: raw.n,
            degree: raw.degree,
            terms,
        })
    }
}

/// Expands a homogeneous staircase polynomial in the SEM basis by an exact
/// triangular solve on its graded component. The result is checked by
/// multiplying the SEMs back out.
pub fn sem_expand(f: &IntPolynomial, n: usize) -> Result<SemExpansion> {
    let Some(degree) = f.homogeneous_degree()? else {
        return Ok(SemExpansion {
            n,
            degree: 0,
            terms: BTreeMap::new(),
        });
    };
    check_staircase(f, n)?;
    let terms = SemSolver::cached(n, degree).solve(f);
    let expansion = SemExpansion { n, degree, terms };
    assert_eq!(&expansion.reconstruct(), f, "SEM expansion does not reconstruct its input");
    Ok(expansion)
}

/// One outer column: crosses in rows `top..=bottom`, all in `column`.
/// Contributes the factor `e^{bottom}_{bottom - top + 1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OuterColumn {
    pub column: usize,
    pub top: usize,
    pub bottom: usize,
}

impl OuterColumn {
    pub fn len(&self) -> usize {
        self.bottom - self.top + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// The bottom pipe dream of `w` split into the bottom pipe dream of a
/// dominant core plus outer columns.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemConstruction {
    pub core: Permutation,
    pub outer_columns: Vec<OuterColumn>,
    pub sem: SemVector,
}

/// Reads the SEM of `𝔖_w` off the bottom pipe dream, for `w` obeying the
/// Lehmer rules.
///
/// Each strict increase between rows `j` and `j+1` opens an outer column
/// that runs down to the first row `k > j` with more crosses than row
/// `k+1`; those rows each lose their last cross to the core. The core's
/// descents contribute `e^i_i` and each column `e^k_{k-j}`.
pub fn constructive_sem(w: &Permutation) -> Result<SemConstruction> {
    let code = w.lehmer_code();
    if !code.rules().all_ok() {
        return Err(Error::LehmerRulesViolated {
            word: w.word().to_vec(),
        });
    }
    let n = w.n();
    let bottom = PipeDream::bottom(w);
    let rows: Vec<usize> = (1..=n).map(|r| bottom.row_count(r)).collect();
    let row = |r: usize| rows.get(r - 1).copied().unwrap_or(0);

    let mut core = rows.clone();
    let mut outer_columns = Vec::new();
    let mut r = 1;
    while r < n {
        if row(r) < row(r + 1) {
            let top = r + 1;
            let mut k = top;
            while row(k) <= row(k + 1) {
                k += 1;
            }
            for i in top..=k {
                core[i - 1] -= 1;
            }
            outer_columns.push(OuterColumn {
                column: row(top),
                top,
                bottom: k,
            });
            r = k;
        } else {
            r += 1;
        }
    }

    let core_code = LehmerCode::new(core.iter().map(|&c| c as u32).collect())
        .expect("removing crosses keeps the code in range");
    debug_assert!(core_code.is_nonincreasing());
    let core = Permutation::from_code(&core_code);

    let mut a = vec![0u32; n];
    for i in core.descent_set() {
        a[i - 1] += i as u32;
    }
    for col in &outer_columns {
        a[col.bottom - 1] += col.len() as u32;
    }
    Ok(SemConstruction {
        core,
        outer_columns,
        sem: SemVector::new(a),
    })
}

/// `Some(a)` exactly when `𝔖_w = e_a`.
pub fn single_sem_of(w: &Permutation) -> Result<Option<SemVector>> {
    single_sem_with(w, SchubertCache::global())
}

pub(crate) fn single_sem_with(w: &Permutation, cache: &SchubertCache) -> Result<Option<SemVector>> {
    let expansion = sem_expand(&cache.divdiff(w), w.n())?;
    let single = expansion.single().cloned();
    if let Ok(built) = constructive_sem(w) {
        assert_eq!(
            single.as_ref(),
            Some(&built.sem),
            "constructive SEM disagrees with the expansion for {w}"
        );
    }
    Ok(single)
}

/// `Some(L(w))` exactly when `𝔖_w = h_{L(w)}`; `L(w)` is the only possible
/// CHM since it carries the leading monomial.
pub fn single_chm_of(w: &Permutation) -> Option<ChmVector> {
    single_chm_with(w, SchubertCache::global())
}

pub(crate) fn single_chm_with(w: &Permutation, cache: &SchubertCache) -> Option<ChmVector> {
    let candidate = ChmVector::new(w.lehmer_code().entries().to_vec());
    (chm_product(&candidate) == *cache.divdiff(w)).then_some(candidate)
}

/// `Some(L(w))` exactly when `𝔖_w` is the single monomial `x^{L(w)}`.
pub fn single_monomial_of(w: &Permutation) -> Option<ExponentVector> {
    single_monomial_with(w, SchubertCache::global())
}

pub(crate) fn single_monomial_with(w: &Permutation, cache: &SchubertCache) -> Option<ExponentVector> {
    let s = cache.divdiff(w);
    let code = ExponentVector::new(w.lehmer_code().entries().to_vec());
    (s.len() == 1 && s.coefficient(&code).is_one()).then_some(code)
}
