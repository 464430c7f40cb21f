//! Numerical semigroups and the single-point bounds built on them.
//!
//! A semigroup is stored through its Apéry set with respect to the
//! multiplicity `m`: for every residue `r mod m` we keep the least member
//! congruent to `r`. Membership, gaps, genus and conductor all follow from
//! that table, so nothing here depends on a bounded window.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use thiserror::Error;

/// Largest accepted generator. Keeps every Apéry element below 2^62.
pub const MAX_GENERATOR: i64 = 1 << 31;
/// Largest accepted multiplicity (size of the residue table).
pub const MAX_MULTIPLICITY: i64 = 1 << 22;
const ARITH_LIMIT: i64 = 1 << 62;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemigroupError {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generator {0} is not positive")]
    NonPositiveGenerator(i64),
    #[error("generators have gcd {0}; the semigroup would have infinitely many gaps")]
    NonCoprimeGenerators(i64),
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("base {0} is not an element of the semigroup")]
    BaseNotInSemigroup(i64),
    #[error("shift factor must be positive, got {0}")]
    NonPositiveShift(i64),
    #[error("field size must be at least 2, got {0}")]
    InvalidFieldSize(i64),
}

pub(crate) fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn checked(value: Option<i64>, what: &str) -> Result<i64, SemigroupError> {
    match value {
        Some(v) if v.abs() < ARITH_LIMIT => Ok(v),
        _ => Err(SemigroupError::TooLarge(what.to_string())),
    }
}

/// A co-finite additive submonoid of the non-negative integers.
#[derive(Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    minimal_generators: Vec<i64>,
    multiplicity: i64,
    /// `residues[r]` is the least element congruent to `r` modulo the multiplicity.
    residues: Vec<i64>,
    conductor: i64,
    genus: i64,
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup{self}")
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.minimal_generators.iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", gens.join(", "))
    }
}

impl NumericalSemigroup {
    /// Builds the semigroup of all finite sums of `gens`.
    pub fn from_generators(gens: &[i64]) -> Result<Self, SemigroupError> {
        if gens.is_empty() {
            return Err(SemigroupError::EmptyGenerators);
        }
        if let Some(&bad) = gens.iter().find(|&&g| g <= 0) {
            return Err(SemigroupError::NonPositiveGenerator(bad));
        }
        if let Some(&big) = gens.iter().find(|&&g| g > MAX_GENERATOR) {
            return Err(SemigroupError::TooLarge(format!(
                "generator {big} exceeds {MAX_GENERATOR}"
            )));
        }
        let common = gens.iter().fold(0, |acc, &g| gcd(acc, g));
        if common != 1 {
            return Err(SemigroupError::NonCoprimeGenerators(common));
        }
        let mut generators = gens.to_vec();
        generators.sort_unstable();
        generators.dedup();
        let multiplicity = generators[0];
        if multiplicity > MAX_MULTIPLICITY {
            return Err(SemigroupError::TooLarge(format!(
                "multiplicity {multiplicity} exceeds {MAX_MULTIPLICITY}"
            )));
        }

        let residues = residue_minima(multiplicity, &generators[1..]);
        let max_residue = residues.iter().copied().max().unwrap_or(0);
        let conductor = max_residue - multiplicity + 1;
        let genus = residues
            .iter()
            .enumerate()
            .map(|(r, &w)| (w - r as i64) / multiplicity)
            .sum();

        let mut semigroup = NumericalSemigroup {
            generators,
            minimal_generators: Vec::new(),
            multiplicity,
            residues,
            conductor,
            genus,
        };
        semigroup.minimal_generators = semigroup.compute_minimal_generators();
        Ok(semigroup)
    }

    /// The semigroup of all non-negative integers.
    pub fn naturals() -> Self {
        Self::from_generators(&[1]).expect("<1> is valid")
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    /// Minimal generating set, ascending. Its first element is the multiplicity.
    pub fn minimal_generators(&self) -> &[i64] {
        &self.minimal_generators
    }

    /// Smallest nonzero element.
    pub fn multiplicity(&self) -> i64 {
        self.multiplicity
    }

    /// Least `c` with `[c, oo)` inside the semigroup.
    pub fn conductor(&self) -> i64 {
        self.conductor
    }

    /// Largest gap, or -1 for the naturals.
    pub fn frobenius_number(&self) -> i64 {
        self.conductor - 1
    }

    /// Number of gaps.
    pub fn genus(&self) -> i64 {
        self.genus
    }

    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            return false;
        }
        if x >= self.conductor {
            return true;
        }
        x >= self.residues[(x % self.multiplicity) as usize]
    }

    pub fn gaps(&self) -> Vec<i64> {
        let m = self.multiplicity;
        let mut out: Vec<i64> = self
            .residues
            .iter()
            .enumerate()
            .flat_map(|(r, &w)| (r as i64..w).step_by(m as usize))
            .collect();
        out.sort_unstable();
        out
    }

    /// Elements of the semigroup in `[0, bound]`, ascending.
    pub fn elements_up_to(&self, bound: i64) -> impl Iterator<Item = i64> + '_ {
        (0..=bound).filter(move |&x| self.contains(x))
    }

    /// Ap(H, e) for `e` in H: the least element of each residue class mod `e`.
    pub fn apery_set(&self, e: i64) -> Result<AperySet, SemigroupError> {
        if e <= 0 || !self.contains(e) {
            return Err(SemigroupError::BaseNotInSemigroup(e));
        }
        if e > MAX_MULTIPLICITY {
            return Err(SemigroupError::TooLarge(format!("Apéry base {e}")));
        }
        let elements = (0..e)
            .map(|i| {
                let mut x = i;
                while !self.contains(x) {
                    x += e;
                }
                x
            })
            .collect();
        Ok(AperySet { base: e, elements })
    }

    /// The finite set `H \ (e H* + H)`, ascending.
    ///
    /// `e H* + H` is the union of `e a + H` over the minimal generators `a`,
    /// since any nonzero element is a generator plus an element of H. Per
    /// residue class `r mod m` the union starts at
    /// `T_r = min_a (e a + w_{(r - e a) mod m})`, so the complement in class
    /// `r` is `w_r, w_r + m, ..., T_r - m`.
    pub fn shifted_sum_complement(&self, e: i64) -> Result<Vec<i64>, SemigroupError> {
        let thresholds = self.shift_thresholds(e)?;
        let m = self.multiplicity;
        let mut out: Vec<i64> = self
            .residues
            .iter()
            .zip(&thresholds)
            .flat_map(|(&w, &t)| (w..t).step_by(m as usize))
            .collect();
        out.sort_unstable();
        Ok(out)
    }

    /// `#(H \ (e H* + H))` without materialising the set.
    pub fn shifted_sum_complement_len(&self, e: i64) -> Result<i64, SemigroupError> {
        let thresholds = self.shift_thresholds(e)?;
        Ok(self
            .residues
            .iter()
            .zip(&thresholds)
            .map(|(&w, &t)| (t - w) / self.multiplicity)
            .sum())
    }

    fn shift_thresholds(&self, e: i64) -> Result<Vec<i64>, SemigroupError> {
        if e <= 0 {
            return Err(SemigroupError::NonPositiveShift(e));
        }
        let m = self.multiplicity;
        let top = self.minimal_generators.last().copied().unwrap_or(m);
        checked(
            e.checked_mul(top).and_then(|v| v.checked_add(self.conductor + m)),
            "shift times generator",
        )?;
        let thresholds = (0..m)
            .map(|r| {
                self.minimal_generators
                    .iter()
                    .map(|&a| {
                        let shift = e * a;
                        let class = (r - shift).rem_euclid(m);
                        shift + self.residues[class as usize]
                    })
                    .min()
                    .expect("at least one generator")
            })
            .collect();
        Ok(thresholds)
    }

    /// `#(H \ (q H* + H)) + 1`.
    pub fn geil_matsumoto_bound(&self, q: i64) -> Result<i64, SemigroupError> {
        check_field_size(q)?;
        Ok(self.shifted_sum_complement_len(q)? + 1)
    }

    /// Gonality bound `q * m + 1`.
    pub fn lewittes_bound(&self, q: i64) -> Result<i64, SemigroupError> {
        check_field_size(q)?;
        checked(
            q.checked_mul(self.multiplicity).and_then(|v| v.checked_add(1)),
            "q times multiplicity",
        )
    }

    /// `#(H \ ((q-1) H* + H))`. Bounds only the places where the coordinate
    /// functions are units; callers add the excluded places themselves.
    pub fn single_point_t_bound(&self, q: i64) -> Result<i64, SemigroupError> {
        check_field_size(q)?;
        self.shifted_sum_complement_len(q - 1)
    }

    fn compute_minimal_generators(&self) -> Vec<i64> {
        let m = self.multiplicity;
        let nonzero: Vec<i64> = self.residues.iter().copied().filter(|&w| w != 0).collect();
        let mut out = vec![m];
        for &w in &nonzero {
            let reducible = nonzero
                .iter()
                .any(|&v| v < w && self.contains(w - v));
            if !reducible {
                out.push(w);
            }
        }
        out.sort_unstable();
        out
    }
}

/// Least element of each residue class mod `m`, by shortest paths on
/// `Z/mZ` with one edge per generator.
fn residue_minima(m: i64, others: &[i64]) -> Vec<i64> {
    let size = m as usize;
    let mut dist = vec![i64::MAX; size];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0i64, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &g in others {
            let next = ((r as i64 + g) % m) as usize;
            let nd = d + g;
            if nd < dist[next] {
                dist[next] = nd;
                heap.push(Reverse((nd, next)));
            }
        }
    }
    dist
}

fn check_field_size(q: i64) -> Result<(), SemigroupError> {
    if q < 2 {
        Err(SemigroupError::InvalidFieldSize(q))
    } else {
        Ok(())
    }
}

/// Ap(H, e) = {w_0 = 0, w_1, ..., w_{e-1}} with `w_i` the least element
/// congruent to `i` modulo `e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AperySet {
    pub base: i64,
    pub elements: Vec<i64>,
}

impl AperySet {
    /// Decomposes `x` in H as `w_i + k e`.
    pub fn decompose(&self, x: i64) -> Option<(usize, i64)> {
        if x < 0 {
            return None;
        }
        let i = (x % self.base) as usize;
        let w = self.elements[i];
        (x >= w).then(|| (i, (x - w) / self.base))
    }
}

/// Hasse-Weil: `q + 1 + floor(2 g sqrt(q))`, with the root taken exactly.
pub fn hasse_weil_bound(genus: i64, q: i64) -> Result<i64, SemigroupError> {
    check_field_size(q)?;
    if genus < 0 {
        return Err(SemigroupError::TooLarge(format!("negative genus {genus}")));
    }
    let radicand = checked(
        (4 * genus as i128 * genus as i128 * q as i128).try_into().ok(),
        "4 g^2 q",
    )?;
    checked((q + 1).checked_add(isqrt(radicand)), "Hasse-Weil bound")
}

/// Largest `s` with `s * s <= n`.
pub fn isqrt(n: i64) -> i64 {
    assert!(n >= 0, "isqrt of negative number");
    let mut s = (n as f64).sqrt() as i64;
    while s * s > n {
        s -= 1;
    }
    while (s + 1) * (s + 1) <= n {
        s += 1;
    }
    s
}
