//! Partitions, residue diagrams and the bijection between t-cores and
//! zero-sum integer vectors.
//!
//! A partition is stored as its nonincreasing sequence of positive parts.
//! Core computations run on beta-numbers (first-column hook lengths laid
//! out on a t-runner abacus) rather than by rim-hook surgery, so removal
//! order never enters the picture.

use serde::Serialize;

use crate::error::{Error, Result};

/// A partition: nonincreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Build a partition from arbitrary parts; zeros are dropped and the
    /// rest sorted nonincreasing.
    pub fn from_parts(mut parts: Vec<u64>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Parse a comma/space separated list of positive integers.
    /// The empty string denotes the empty partition.
    pub fn parse(text: &str) -> Result<Self> {
        let mut parts = Vec::new();
        for tok in text.split(|c: char| c == ',' || c.is_whitespace()) {
            if tok.is_empty() {
                continue;
            }
            let p: i64 = tok
                .parse()
                .map_err(|_| Error::Parse(format!("not an integer: {tok:?}")))?;
            if p <= 0 {
                return Err(Error::Parse(format!("part must be positive: {p}")));
            }
            parts.push(p as u64);
        }
        Ok(Self::from_parts(parts))
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn norm(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Conjugate (transpose of the Young diagram).
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0) as usize;
        let mut parts = Vec::with_capacity(cols);
        for j in 1..=cols {
            parts.push(self.parts.iter().filter(|&&p| p >= j as u64).count() as u64);
        }
        Partition { parts }
    }

    /// Counts of cells per residue label (j - i) mod s in the s-residue diagram.
    pub fn r_vector(&self, s: usize) -> Result<RVector> {
        if s < 2 {
            return Err(Error::Domain(format!("modulus must be >= 2, got {s}")));
        }
        let mut counts = vec![0u64; s];
        for (row, &lambda) in self.parts.iter().enumerate() {
            let i = row as i64 + 1;
            for j in 1..=lambda as i64 {
                counts[(j - i).rem_euclid(s as i64) as usize] += 1;
            }
        }
        Ok(RVector { counts })
    }

    /// Beta-set of size m >= number of parts: {lambda_k + m - k, k = 1..m}.
    pub fn beta_set(&self, m: usize) -> Vec<u64> {
        assert!(m >= self.parts.len());
        (1..=m)
            .map(|k| self.parts.get(k - 1).copied().unwrap_or(0) + (m - k) as u64)
            .collect()
    }

    /// Recover a partition from a set of distinct beta-numbers.
    pub fn from_beta_set(mut beta: Vec<u64>) -> Partition {
        beta.sort_unstable_by(|a, b| b.cmp(a));
        let m = beta.len() as u64;
        let parts = beta
            .iter()
            .enumerate()
            .map(|(idx, &b)| b - (m - 1 - idx as u64))
            .collect();
        Self::from_parts(parts)
    }

    /// True iff no hook length is divisible by t.
    pub fn is_t_core(&self, t: usize) -> bool {
        assert!(t >= 2, "modulus must be >= 2");
        let beta: std::collections::HashSet<u64> = self.beta_set(self.parts.len()).into_iter().collect();
        for &b in &beta {
            if b >= t as u64 && !beta.contains(&(b - t as u64)) {
                return false;
            }
        }
        true
    }

    /// The t-core: push every bead maximally down its runner on the abacus.
    pub fn t_core_of(&self, t: usize) -> Partition {
        assert!(t >= 2, "modulus must be >= 2");
        let m = self.parts.len().div_ceil(t).max(1) * t;
        let beta = self.beta_set(m);
        let mut runner_counts = vec![0usize; t];
        for &b in &beta {
            runner_counts[(b as usize) % t] += 1;
        }
        let mut collapsed = Vec::with_capacity(m);
        for (r, &c) in runner_counts.iter().enumerate() {
            for k in 0..c {
                collapsed.push((r + k * t) as u64);
            }
        }
        Partition::from_beta_set(collapsed)
    }

    /// GKS coordinates of a t-core.
    pub fn core_to_nvec(&self, t: usize) -> Result<NVector> {
        if !self.is_t_core(t) {
            return Err(Error::Domain(format!("{self:?} is not a {t}-core")));
        }
        Ok(self.r_vector(t)?.n_vector())
    }

    /// Side of the Durfee square.
    pub fn durfee(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .filter(|&(i, &p)| p >= i as u64 + 1)
            .count()
    }

    /// Split along the main diagonal; the diagonal cells belong to both halves.
    pub fn diagonal_split(&self) -> DiagonalSplit {
        let d = self.durfee();
        let pi1 = Partition::from_parts(
            (1..=d).map(|i| self.parts[i - 1] - i as u64 + 1).collect(),
        );
        let conj = self.conjugate();
        let pi2 = Partition::from_parts(
            (1..=d).map(|j| conj.parts[j - 1] - j as u64 + 1).collect(),
        )
        .conjugate();
        DiagonalSplit { pi1, pi2, d }
    }

    /// The N/E words of the extended t-residue diagram over the given
    /// region window. Letter r of word i is E iff an exposed cell labelled
    /// i lies in region r.
    pub fn word_window(&self, t: usize, region_lo: i64, region_hi: i64) -> Vec<Vec<Letter>> {
        assert!(region_lo <= region_hi);
        let width = (region_hi - region_lo + 1) as usize;
        let mut words = vec![vec![Letter::N; width]; t];
        let mark = |diag: i64, words: &mut Vec<Vec<Letter>>| {
            let label = diag.rem_euclid(t as i64) as usize;
            let region = diag.div_euclid(t as i64) + 1;
            if region >= region_lo && region <= region_hi {
                words[label][(region - region_lo) as usize] = Letter::E;
            }
        };
        for (row, &lambda) in self.parts.iter().enumerate() {
            mark(lambda as i64 - (row as i64 + 1), &mut words);
        }
        // rows below the last part expose column-0 cells
        let nu = self.parts.len() as i64;
        let k_max = (t as i64) * (1 - region_lo);
        for k in (nu + 1)..=k_max.max(nu) {
            mark(-k, &mut words);
        }
        words
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// One letter of a runner word in the extended residue diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Letter {
    N,
    E,
}

/// Residue cell counts r_0..r_{s-1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RVector {
    counts: Vec<u64>,
}

impl RVector {
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn modulus(&self) -> usize {
        self.counts.len()
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Cyclic consecutive differences n_i = r_i - r_{i+1}, n_{s-1} = r_{s-1} - r_0.
    pub fn n_vector(&self) -> NVector {
        let s = self.counts.len();
        let coords = (0..s)
            .map(|i| self.counts[i] as i64 - self.counts[(i + 1) % s] as i64)
            .collect();
        NVector { coords }
    }
}

/// Zero-sum integer coordinates of a t-core under the GKS bijection.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct NVector {
    coords: Vec<i64>,
}

impl NVector {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::Domain(format!(
                "n-vector needs length >= 2, got {}",
                coords.len()
            )));
        }
        if coords.iter().sum::<i64>() != 0 {
            return Err(Error::Domain(format!("n-vector must sum to zero: {coords:?}")));
        }
        Ok(NVector { coords })
    }

    pub fn zero(t: usize) -> Self {
        NVector { coords: vec![0; t] }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn modulus(&self) -> usize {
        self.coords.len()
    }

    /// Norm of the encoded t-core: (t/2)|n|^2 + b_t . n  (b_t = (0,1,..,t-1)).
    pub fn core_norm(&self) -> u64 {
        let t = self.coords.len() as i64;
        let twice: i64 = self
            .coords
            .iter()
            .enumerate()
            .map(|(i, &n)| t * n * n + 2 * i as i64 * n)
            .sum();
        debug_assert!(twice >= 0 && twice % 2 == 0);
        (twice / 2) as u64
    }

    /// Image of conjugation: (n_0,..,n_{t-1}) -> (-n_{t-1},..,-n_0).
    pub fn conjugate(&self) -> NVector {
        NVector {
            coords: self.coords.iter().rev().map(|&n| -n).collect(),
        }
    }

    /// The t-core this vector encodes: runner i of the bi-infinite abacus
    /// holds beads in regions <= n_i.
    pub fn to_core(&self) -> Partition {
        let t = self.coords.len();
        let shift = self.coords.iter().map(|&n| -n).max().unwrap().max(0) + 1;
        let mut beta = Vec::new();
        for (i, &n) in self.coords.iter().enumerate() {
            let count = n + shift; // beads at i + t*k, 0 <= k < count
            for k in 0..count {
                beta.push(i as u64 + t as u64 * k as u64);
            }
        }
        debug_assert_eq!(beta.len() as i64, t as i64 * shift);
        Partition::from_beta_set(beta)
    }
}

/// Partition cut along the main diagonal. The `d` diagonal cells are
/// counted in both halves, so |pi| = |pi1| + |pi2| - d.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalSplit {
    pub pi1: Partition,
    pub pi2: Partition,
    pub d: usize,
}

/// All partitions of norm exactly n.
pub fn partitions_of(n: u64) -> Vec<Partition> {
    fn rec(remaining: u64, max_part: u64, acc: &mut Vec<u64>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_parts(acc.clone()));
            return;
        }
        let hi = remaining.min(max_part);
        for p in (1..=hi).rev() {
            acc.push(p);
            rec(remaining - p, p, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n.max(1), &mut Vec::new(), &mut out);
    out
}

/// All partitions of norm <= n.
pub fn partitions_up_to(n: u64) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

/// All zero-sum t-vectors whose encoded core norm is strictly below the
/// bound, i.e. all t-cores of norm < bound in GKS coordinates.
pub fn zero_sum_vectors_below(t: usize, norm_bound: u64) -> Vec<NVector> {
    assert!(t >= 2);
    if norm_bound == 0 {
        return Vec::new();
    }
    let limit2 = 2 * (norm_bound as i64 - 1); // twice the largest admissible norm
    let ti = t as i64;
    let term2 = |i: i64, n: i64| ti * n * n + 2 * i * n;
    // minimum of term2 over integers, per coordinate
    let min_term2 = |i: i64| -> i64 {
        let a = (-i).div_euclid(ti);
        term2(i, a).min(term2(i, a + 1))
    };
    let suffix_min: Vec<i64> = {
        let mut v = vec![0i64; t + 1];
        for i in (0..t).rev() {
            v[i] = v[i + 1] + min_term2(i as i64);
        }
        v
    };
    let mut out = Vec::new();
    let mut coords = vec![0i64; t];
    fn rec(
        i: usize,
        t: usize,
        partial2: i64,
        sum: i64,
        limit2: i64,
        term2: &dyn Fn(i64, i64) -> i64,
        suffix_min: &[i64],
        coords: &mut Vec<i64>,
        out: &mut Vec<NVector>,
    ) {
        if i == t - 1 {
            let n_last = -sum;
            let total2 = partial2 + term2(i as i64, n_last);
            if total2 <= limit2 {
                coords[i] = n_last;
                out.push(NVector {
                    coords: coords.clone(),
                });
            }
            return;
        }
        let budget = limit2 - partial2 - suffix_min[i + 1];
        // scan outward from the integer minimizer of the per-coordinate parabola
        let a = (-(i as i64)).div_euclid(t as i64);
        let center = if term2(i as i64, a) <= term2(i as i64, a + 1) {
            a
        } else {
            a + 1
        };
        for dir in [1i64, -1] {
            let mut n = if dir == 1 { center } else { center - 1 };
            while term2(i as i64, n) <= budget {
                coords[i] = n;
                rec(
                    i + 1,
                    t,
                    partial2 + term2(i as i64, n),
                    sum + n,
                    limit2,
                    term2,
                    suffix_min,
                    coords,
                    out,
                );
                n += dir;
            }
        }
    }
    rec(0, t, 0, 0, limit2, &term2, &suffix_min, &mut coords, &mut out);
    out.sort();
    out
}
