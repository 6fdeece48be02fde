//! Permutations in one-line notation, Lehmer codes, pattern containment and
//! the lattice-path view of Lehmer codes.
//!
//! All public positions and values are 1-based.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `{1..n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Permutation {
    word: Vec<u32>,
}

impl Permutation {
    /// Validates a one-line word. The error names the first offending index
    /// (1-based).
    pub fn from_word(word: Vec<u32>) -> Result<Self> {
        let n = word.len();
        if n == 0 {
            return Err(Error::InvalidPermutation {
                index: 0,
                reason: "empty word".into(),
            });
        }
        let mut seen = vec![false; n + 1];
        for (idx, &v) in word.iter().enumerate() {
            if v == 0 || v as usize > n {
                return Err(Error::InvalidPermutation {
                    index: idx + 1,
                    reason: format!("value {v} out of range 1..={n}"),
                });
            }
            if std::mem::replace(&mut seen[v as usize], true) {
                return Err(Error::InvalidPermutation {
                    index: idx + 1,
                    reason: format!("duplicate value {v}"),
                });
            }
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n as u32).collect(),
        }
    }

    /// The longest element `w_0 = n (n-1) ... 1`.
    pub fn longest(n: usize) -> Self {
        Permutation {
            word: (1..=n as u32).rev().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    /// `w(i)` for a 1-based position.
    pub fn at(&self, i: usize) -> u32 {
        self.word[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        self.lehmer_code().entries.iter().map(|&l| l as usize).sum()
    }

    pub fn lehmer_code(&self) -> LehmerCode {
        let w = &self.word;
        let entries = (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&v| v < w[i]).count() as u32)
            .collect();
        LehmerCode { entries }
    }

    /// Inverse of [`Permutation::lehmer_code`].
    pub fn from_code(code: &LehmerCode) -> Self {
        let n = code.entries.len();
        let mut remaining: Vec<u32> = (1..=n as u32).collect();
        let word = code
            .entries
            .iter()
            .map(|&l| remaining.remove(l as usize))
            .collect();
        Permutation { word }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        Permutation { word: inv }
    }

    pub fn is_descent(&self, i: usize) -> bool {
        i >= 1 && i < self.n() && self.word[i - 1] > self.word[i]
    }

    /// Positions `i` in `1..n` with `w_i > w_{i+1}`.
    pub fn descent_set(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.is_descent(i)).collect()
    }

    pub fn ascent_set(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| !self.is_descent(i)).collect()
    }

    /// `w·(i1, i2)`: the values at positions `i1` and `i2` swapped.
    pub fn transpose(&self, i1: usize, i2: usize) -> Result<Self> {
        let n = self.n();
        for p in [i1, i2] {
            if p == 0 || p > n {
                return Err(Error::PositionOutOfRange { position: p, n });
            }
        }
        let mut word = self.word.clone();
        word.swap(i1 - 1, i2 - 1);
        Ok(Permutation { word })
    }

    /// `w·s_i`, swapping positions `i` and `i+1`.
    pub fn swap_adjacent(&self, i: usize) -> Result<Self> {
        self.transpose(i, i + 1)
    }

    /// Whether `l(w·(i1,i2)) == l(w) + 1`.
    ///
    /// Holds exactly when `w(i1) < w(i2)` and no position strictly between
    /// carries a value strictly between them.
    pub fn is_length_cover(&self, i1: usize, i2: usize) -> bool {
        if i1 == 0 || i1 >= i2 || i2 > self.n() {
            return false;
        }
        let (lo, hi) = (self.at(i1), self.at(i2));
        lo < hi
            && self.word[i1..i2 - 1]
                .iter()
                .all(|&v| v < lo || v > hi)
    }

    /// Whether some subsequence of `self` is order-isomorphic to `pattern`.
    pub fn contains_pattern(&self, pattern: &Permutation) -> bool {
        let k = pattern.n();
        if k > self.n() {
            return false;
        }
        let mut chosen = Vec::with_capacity(k);
        contains_from(&self.word, &pattern.word, 0, &mut chosen)
    }

    pub fn avoids(&self, pattern: &Permutation) -> bool {
        !self.contains_pattern(pattern)
    }

    /// Appends fixed points up to size `m` (no-op when `m <= n`).
    pub fn embed(&self, m: usize) -> Self {
        let mut word = self.word.clone();
        word.extend(self.n() as u32 + 1..=m as u32);
        Permutation { word }
    }

    /// Drops trailing fixed points, keeping at least one entry.
    pub fn trimmed(&self) -> Self {
        let mut len = self.n();
        while len > 1 && self.word[len - 1] as usize == len {
            len -= 1;
        }
        Permutation {
            word: self.word[..len].to_vec(),
        }
    }

    /// Every element of `S_n` in lexicographic order.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations {
            next: (n > 0).then(|| (1..=n as u32).collect()),
        }
    }
}

fn contains_from(word: &[u32], pattern: &[u32], start: usize, chosen: &mut Vec<u32>) -> bool {
    let k = chosen.len();
    if k == pattern.len() {
        return true;
    }
    // Not enough entries left to finish the pattern.
    if word.len() - start < pattern.len() - k {
        return false;
    }
    for pos in start..word.len() {
        let v = word[pos];
        let consistent = chosen
            .iter()
            .zip(pattern)
            .all(|(&c, &p)| (v < c) == (pattern[k] < p));
        if consistent {
            chosen.push(v);
            if contains_from(word, pattern, pos + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let word = Vec::<u32>::deserialize(de)?;
        Permutation::from_word(word).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Permutation {
    /// Contiguous digits for `n <= 9`, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n() <= 9 { "" } else { "," };
        let parts: Vec<String> = self.word.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(sep))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let tokens: Vec<&str> = if s.contains(',') {
            s.split(',').map(str::trim).collect()
        } else {
            s.split("").filter(|t| !t.is_empty()).collect()
        };
        let mut word = Vec::with_capacity(tokens.len());
        for (idx, tok) in tokens.iter().enumerate() {
            match tok.parse::<u32>() {
                Ok(v) => word.push(v),
                Err(_) => {
                    return Err(Error::InvalidPermutation {
                        index: idx + 1,
                        reason: format!("token '{tok}' is not a positive integer"),
                    })
                }
            }
        }
        Permutation::from_word(word)
    }
}

/// Lexicographic iterator over `S_n`.
pub struct AllPermutations {
    next: Option<Vec<u32>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_lexicographic(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { word: current })
    }
}

fn next_lexicographic(a: &mut [u32]) -> bool {
    let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) else {
        return false;
    };
    let j = (i..a.len()).rev().find(|&j| a[j] > a[i - 1]).unwrap();
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Lehmer code `L_i = #{j > i : w(j) < w(i)}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct LehmerCode {
    entries: Vec<u32>,
}

impl LehmerCode {
    /// Checks `L_i <= n - i` where `n` is the number of entries.
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        let n = entries.len();
        for (idx, &l) in entries.iter().enumerate() {
            let max = n - idx - 1;
            if l as usize > max {
                return Err(Error::InvalidCode {
                    position: idx + 1,
                    value: l,
                    max,
                });
            }
        }
        Ok(LehmerCode { entries })
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn is_nonincreasing(&self) -> bool {
        self.entries.windows(2).all(|p| p[0] >= p[1])
    }

    pub fn rules(&self) -> RuleReport {
        lehmer_rules_check(&self.entries)
    }
}

impl<'de> Deserialize<'de> for LehmerCode {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let entries = Vec::<u32>::deserialize(de)?;
        LehmerCode::new(entries).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleViolation {
    pub rule: u8,
    pub position: usize,
}

/// Outcome of checking the three Lehmer rules.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleReport {
    pub rule1_ok: bool,
    pub rule2_ok: bool,
    pub rule3_ok: bool,
    pub violations: Vec<RuleViolation>,
}

impl RuleReport {
    pub fn all_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Rule 1: `L_i - L_{i+1} <= 1`. Rule 2: `L_i - L_{i+1} >= -1`. Rule 3: two
/// strict increases are always separated by a strict decrease.
///
/// Takes raw entries so that sequences which are not codes of any
/// permutation of their own length can still be classified.
pub fn lehmer_rules_check(code: &[u32]) -> RuleReport {
    let mut violations = Vec::new();
    // Position of the last strict increase not yet followed by a decrease.
    let mut open_increase: Option<usize> = None;
    for (idx, pair) in code.windows(2).enumerate() {
        let position = idx + 1;
        let diff = pair[0] as i64 - pair[1] as i64;
        if diff > 1 {
            violations.push(RuleViolation { rule: 1, position });
        }
        if diff < -1 {
            violations.push(RuleViolation { rule: 2, position });
        }
        if diff < 0 {
            if open_increase.is_some() {
                violations.push(RuleViolation { rule: 3, position });
            }
            open_increase = Some(position);
        } else if diff > 0 {
            open_increase = None;
        }
    }
    let ok = |r: u8| violations.iter().all(|v| v.rule != r);
    RuleReport {
        rule1_ok: ok(1),
        rule2_ok: ok(2),
        rule3_ok: ok(3),
        violations,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Step {
    U,
    D,
    H,
}

/// Lattice path through `(0, L_n), (1, L_{n-1}), ..., (n-1, L_1)` with steps
/// `U = (1,1)`, `D = (1,-1)`, `H = (1,0)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeanderPath {
    pub steps: Vec<Step>,
    pub heights: Vec<i64>,
    pub is_meander: bool,
    pub d_steps_separated_by_u: bool,
}

/// Builds the lattice path of a code. Fails on any jump of absolute size
/// greater than one, which is exactly a violation of Lehmer rule 1 or 2.
pub fn motzkin_path(code: &[u32]) -> Result<MeanderPath> {
    let heights: Vec<i64> = code.iter().rev().map(|&l| l as i64).collect();
    let mut steps = Vec::with_capacity(heights.len().saturating_sub(1));
    for (t, pair) in heights.windows(2).enumerate() {
        let change = pair[1] - pair[0];
        steps.push(match change {
            1 => Step::U,
            -1 => Step::D,
            0 => Step::H,
            _ => {
                return Err(Error::NotAPath {
                    // Code position whose entry sits at the left end of this step.
                    position: code.len() - t - 1,
                    change,
                })
            }
        });
    }
    let is_meander = heights.first().map_or(true, |&h| h == 0) && heights.iter().all(|&h| h >= 0);
    let mut d_steps_separated_by_u = true;
    let mut seen_d = false;
    for s in &steps {
        match s {
            Step::D if seen_d => d_steps_separated_by_u = false,
            Step::D => seen_d = true,
            Step::U => seen_d = false,
            Step::H => {}
        }
    }
    Ok(MeanderPath {
        steps,
        heights,
        is_meander,
        d_steps_separated_by_u,
    })
}
