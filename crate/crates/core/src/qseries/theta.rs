//! Bivariate theta machinery for the 4-core decomposition: the 27 lattice
//! sums s_j(z, q) indexed by residue classes of n-vectors mod 3, the theta
//! factor they share, shift functional equations, and evaluations at the
//! special points z = -q^{3c}.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{eta_quotient, g_omega_eta, r1, r2, EtaQuotientSpec, QSeries};
use crate::error::{Error, Result};
use crate::gbg::TABLE1_VECTORS;

/// A Laurent series in q, exact for exponents below `order`. Coefficients
/// are stored densely from `shift` (the lowest possibly nonzero exponent).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentQ {
    shift: i64,
    order: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentQ {
    pub fn zero(order: i64) -> Self {
        LaurentQ {
            shift: order,
            order,
            coeffs: Vec::new(),
        }
    }

    pub fn monomial(exp: i64, order: i64) -> Self {
        if exp >= order {
            return Self::zero(order);
        }
        let mut s = LaurentQ {
            shift: exp,
            order,
            coeffs: vec![BigInt::zero(); (order - exp) as usize],
        };
        s.coeffs[0] = BigInt::from(1);
        s
    }

    pub fn from_map(map: &BTreeMap<i64, BigInt>, order: i64) -> Self {
        let shift = map
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(&e, _)| e)
            .min()
            .unwrap_or(order)
            .min(order);
        let mut coeffs = vec![BigInt::zero(); (order - shift) as usize];
        for (&e, c) in map {
            if e >= shift && e < order {
                coeffs[(e - shift) as usize] = c.clone();
            }
        }
        LaurentQ {
            shift,
            order,
            coeffs,
        }
    }

    pub fn from_qseries(s: &QSeries) -> Self {
        LaurentQ {
            shift: 0,
            order: s.order() as i64,
            coeffs: s.coeffs().to_vec(),
        }
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        if exp < self.shift || exp >= self.order {
            BigInt::zero()
        } else {
            self.coeffs[(exp - self.shift) as usize].clone()
        }
    }

    pub fn is_zero_to_order(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn neg(&self) -> Self {
        LaurentQ {
            shift: self.shift,
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let shift = self.shift.min(other.shift).min(order);
        let mut coeffs = vec![BigInt::zero(); (order - shift) as usize];
        for (e, c) in coeffs.iter_mut().enumerate() {
            let exp = shift + e as i64;
            *c = self.coeff(exp) + other.coeff(exp);
        }
        LaurentQ {
            shift,
            order,
            coeffs,
        }
    }

    /// Exact below min(a.order + b.shift, b.order + a.shift): the tail of
    /// one factor can only pollute exponents at or above that line.
    pub fn mul(&self, other: &Self) -> Self {
        let order = (self.order + other.shift).min(other.order + self.shift);
        let shift = (self.shift + other.shift).min(order);
        let mut coeffs = vec![BigInt::zero(); (order - shift) as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let exp = self.shift + i as i64 + other.shift + j as i64;
                if exp < order {
                    coeffs[(exp - shift) as usize] += a * b;
                }
            }
        }
        LaurentQ {
            shift,
            order,
            coeffs,
        }
    }

    /// First exponent below the given order where the two series differ.
    pub fn first_discrepancy(&self, other: &Self, order: i64) -> Option<i64> {
        let ord = order.min(self.order).min(other.order);
        let lo = self.shift.min(other.shift);
        (lo..ord).find(|&e| self.coeff(e) != other.coeff(e))
    }
}

/// A finite family of Laurent q-series indexed by the z-exponent. Complete
/// below `order`: any z-exponent absent from the map has no q-term there.
#[derive(Debug, Clone)]
pub struct LaurentTheta {
    order: i64,
    entries: BTreeMap<i64, LaurentQ>,
}

impl LaurentTheta {
    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn z_exponents(&self) -> impl Iterator<Item = i64> + '_ {
        self.entries.keys().copied()
    }

    pub fn entry(&self, w: i64) -> LaurentQ {
        self.entries
            .get(&w)
            .cloned()
            .unwrap_or_else(|| LaurentQ::zero(self.order))
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let mut entries = BTreeMap::new();
        for &w in self.entries.keys().chain(other.entries.keys()) {
            entries
                .entry(w)
                .or_insert_with(|| self.entry(w).add(&other.entry(w)));
        }
        LaurentTheta { order, entries }
    }

    /// Multiply every entry by a z-free series.
    pub fn mul_q(&self, f: &LaurentQ) -> Self {
        LaurentTheta {
            order: self.order + f.shift.min(0),
            entries: self
                .entries
                .iter()
                .map(|(&w, s)| (w, s.mul(f)))
                .collect(),
        }
    }

    /// First (z-exponent, q-exponent) where the two disagree below order.
    pub fn first_discrepancy(&self, other: &Self, order: i64) -> Option<(i64, i64)> {
        let ord = order.min(self.order).min(other.order);
        let mut keys: Vec<i64> = self
            .entries
            .keys()
            .chain(other.entries.keys())
            .copied()
            .collect();
        keys.sort_unstable();
        keys.dedup();
        for w in keys {
            if let Some(e) = self.entry(w).first_discrepancy(&other.entry(w), ord) {
                return Some((w, e));
            }
        }
        None
    }
}

fn quad(n: i64, lin: i64) -> i64 {
    2 * n * n + lin * n
}

/// Minimizer of 2n^2 + lin*n over n congruent to rep mod 3. The vertex
/// sits within [-2, 2] for every linear term used here, so a small window
/// scan suffices.
fn class_argmin(rep: i64, lin: i64) -> i64 {
    debug_assert!(lin.abs() <= 8);
    let mut best = rep.rem_euclid(3) - 9;
    let mut n = best + 3;
    while n <= 9 {
        if quad(n, lin) < quad(best, lin) {
            best = n;
        }
        n += 3;
    }
    best
}

/// Visit every n in Z^4 with n_i congruent to rep_i mod 3 and
/// sum_i (2 n_i^2 + lin_i n_i) < order. Convexity in each coordinate
/// lets us scan outward from the per-coordinate minimizer.
fn class_lattice_sum(
    rep: &[i64; 4],
    lin: &[i64; 4],
    order: i64,
    visit: &mut dyn FnMut(&[i64; 4], i64),
) {
    let centers: [i64; 4] = std::array::from_fn(|i| class_argmin(rep[i], lin[i]));
    let mins: [i64; 4] = std::array::from_fn(|i| quad(centers[i], lin[i]));
    let mut suffix = [0i64; 5];
    for i in (0..4).rev() {
        suffix[i] = suffix[i + 1] + mins[i];
    }
    let mut n = [0i64; 4];
    rec(0, 0, &centers, lin, &suffix, order, &mut n, visit);

    #[allow(clippy::too_many_arguments)]
    fn rec(
        i: usize,
        partial: i64,
        centers: &[i64; 4],
        lin: &[i64; 4],
        suffix: &[i64; 5],
        order: i64,
        n: &mut [i64; 4],
        visit: &mut dyn FnMut(&[i64; 4], i64),
    ) {
        if i == 4 {
            visit(n, partial);
            return;
        }
        let budget = order - 1 - partial - suffix[i + 1];
        let mut v = centers[i];
        while quad(v, lin[i]) <= budget {
            n[i] = v;
            rec(i + 1, partial + quad(v, lin[i]), centers, lin, suffix, order, n, visit);
            v += 3;
        }
        v = centers[i] - 3;
        while quad(v, lin[i]) <= budget {
            n[i] = v;
            rec(i + 1, partial + quad(v, lin[i]), centers, lin, suffix, order, n, visit);
            v -= 3;
        }
    }
}

fn rep_of(j: usize) -> Result<[i64; 4]> {
    if !(1..=27).contains(&j) {
        return Err(Error::Domain(format!("s_j index {j} out of 1..=27")));
    }
    let row = TABLE1_VECTORS[j - 1];
    Ok(std::array::from_fn(|i| row[i].rem_euclid(3)))
}

/// s_j(z, q): the sum of q^{2|n|^2 + b.n} z^{(n.1)/3} over the j-th
/// residue class of n mod 3, with b = (0, 1, 2, 3).
pub fn s_j(j: usize, order: i64) -> Result<LaurentTheta> {
    let rep = rep_of(j)?;
    let mut maps: BTreeMap<i64, BTreeMap<i64, BigInt>> = BTreeMap::new();
    class_lattice_sum(&rep, &[0, 1, 2, 3], order, &mut |n, e| {
        let w = n.iter().sum::<i64>() / 3;
        *maps.entry(w).or_default().entry(e).or_insert_with(BigInt::zero) += 1;
    });
    Ok(LaurentTheta {
        order,
        entries: maps
            .into_iter()
            .map(|(w, m)| (w, LaurentQ::from_map(&m, order)))
            .collect(),
    })
}

/// z q^9 s_j(z q^9, q): substituting shifts each term to
/// q^{e + 9w + 9} z^{w + 1}, which is again a class lattice sum.
pub fn s_j_shifted(j: usize, order: i64) -> Result<LaurentTheta> {
    let rep = rep_of(j)?;
    let mut maps: BTreeMap<i64, BTreeMap<i64, BigInt>> = BTreeMap::new();
    class_lattice_sum(&rep, &[3, 4, 5, 6], order - 9, &mut |n, e| {
        let w = n.iter().sum::<i64>() / 3;
        *maps
            .entry(w + 1)
            .or_default()
            .entry(e + 9)
            .or_insert_with(BigInt::zero) += 1;
    });
    Ok(LaurentTheta {
        order,
        entries: maps
            .into_iter()
            .map(|(w, m)| (w, LaurentQ::from_map(&m, order)))
            .collect(),
    })
}

/// s_j at z = -q^{3c}.
pub fn s_j_eval(j: usize, c: i64, order: i64) -> Result<LaurentQ> {
    let rep = rep_of(j)?;
    let lin: [i64; 4] = std::array::from_fn(|i| i as i64 + c);
    let mut map: BTreeMap<i64, BigInt> = BTreeMap::new();
    class_lattice_sum(&rep, &lin, order, &mut |n, e| {
        let w = n.iter().sum::<i64>() / 3;
        let sign = if w.rem_euclid(2) == 0 { 1 } else { -1 };
        *map.entry(e).or_insert_with(BigInt::zero) += sign;
    });
    Ok(LaurentQ::from_map(&map, order))
}

/// Sum of s_j over an index range.
pub fn s_sum(range: RangeInclusive<usize>, order: i64) -> Result<LaurentTheta> {
    let mut acc = LaurentTheta {
        order,
        entries: BTreeMap::new(),
    };
    for j in range {
        acc = acc.add(&s_j(j, order)?);
    }
    Ok(acc)
}

fn s_eval_sum(indices: &[usize], c: i64, order: i64) -> Result<LaurentQ> {
    let mut acc = LaurentQ::zero(order);
    for &j in indices {
        acc = acc.add(&s_j_eval(j, c, order)?);
    }
    Ok(acc)
}

/// Theta(z) = sum_n q^{9n(n+1)/2} z^n.
pub fn theta_factor(order: i64) -> LaurentTheta {
    let mut entries = BTreeMap::new();
    let mut n = 0i64;
    loop {
        let mut any = false;
        for m in [n, -1 - n] {
            let e = 9 * m * (m + 1) / 2;
            if e < order {
                entries.insert(m, LaurentQ::monomial(e, order));
                any = true;
            }
        }
        if !any {
            break;
        }
        n += 1;
    }
    LaurentTheta { order, entries }
}

/// Theta at z = -q^{3c}: sum_n (-1)^n q^{9n(n+1)/2 + 3cn}.
pub fn theta_eval(c: i64, order: i64) -> LaurentQ {
    let mut map: BTreeMap<i64, BigInt> = BTreeMap::new();
    let bound = order.abs() + 3 * c.abs() + 4;
    for n in -bound..=bound {
        let e = 9 * n * (n + 1) / 2 + 3 * c * n;
        if e < order {
            let sign = if n.rem_euclid(2) == 0 { 1 } else { -1 };
            *map.entry(e).or_insert_with(BigInt::zero) += sign;
        }
    }
    LaurentQ::from_map(&map, order)
}

/// The shift functional equation z q^9 s_i(z q^9, q) = s_j(z, q),
/// verified below the given order.
pub fn functional_equation_check(i: usize, j: usize, order: i64) -> Result<bool> {
    let lhs = s_j_shifted(i, order)?;
    let rhs = s_j(j, order)?;
    Ok(lhs.first_discrepancy(&rhs, order).is_none())
}

/// Index pairs (i, j) satisfying the shift functional equation, grouped by
/// the three orbit families (twelve, six, and two sets of four).
pub const FUNCTIONAL_PAIRS: [(usize, usize); 26] = [
    (2, 3),
    (3, 4),
    (4, 5),
    (5, 2),
    (6, 7),
    (7, 8),
    (8, 9),
    (9, 6),
    (10, 11),
    (11, 12),
    (12, 13),
    (13, 10),
    (14, 15),
    (15, 16),
    (16, 17),
    (17, 14),
    (18, 19),
    (19, 18),
    (20, 21),
    (21, 22),
    (22, 23),
    (23, 20),
    (24, 25),
    (25, 26),
    (26, 27),
    (27, 24),
];

/// Report of one theta-side identity check.
#[derive(Debug, Clone)]
pub struct ThetaReport {
    pub id: String,
    pub order: i64,
    pub holds: bool,
    pub first_discrepancy: Option<(i64, i64)>,
}

/// Identity ids the theta registry knows about.
pub const THETA_IDS: [&str; 16] = [
    "4.20",
    "4.22",
    "4.22-cycle",
    "4.25",
    "4.27",
    "4.28",
    "4.29",
    "4.33",
    "4.33-cycle",
    "4.35",
    "4.36",
    "4.39.0",
    "4.39.1",
    "4.39-cycle",
    "4.39-tail.0",
    "4.39-tail.1",
];

fn report(id: &str, order: i64, disc: Option<(i64, i64)>) -> ThetaReport {
    ThetaReport {
        id: id.to_string(),
        order,
        holds: disc.is_none(),
        first_discrepancy: disc,
    }
}

fn vanish_report(id: &str, order: i64, sums: Vec<LaurentQ>) -> ThetaReport {
    let zero = LaurentQ::zero(order);
    let disc = sums
        .iter()
        .filter_map(|s| s.first_discrepancy(&zero, order))
        .min()
        .map(|e| (0, e));
    report(id, order, disc)
}

fn cycle_report(id: &str, pairs: &[(usize, usize)], order: i64) -> Result<ThetaReport> {
    let mut disc = None;
    for &(i, j) in pairs {
        let d = s_j_shifted(i, order)?.first_discrepancy(&s_j(j, order)?, order);
        if let Some(d) = d {
            disc = Some(disc.map_or(d, |f: (i64, i64)| f.min(d)));
        }
    }
    Ok(report(id, order, disc))
}

/// Check one theta-side identity by expansion to the given order.
pub fn check_theta_identity(id: &str, order: i64) -> Result<ThetaReport> {
    if order < 12 {
        return Err(Error::Domain("order must be >= 12".into()));
    }
    let n = order;
    let nu = n as usize;
    let rep = match id {
        "4.20" => {
            // the z-free part of the twelve-term sum is R_1 itself
            let lhs = s_sum(2..=13, n)?.entry(0);
            let rhs = LaurentQ::from_qseries(&r1(nu));
            report(id, n, lhs.first_discrepancy(&rhs, n).map(|e| (0, e)))
        }
        "4.22" => {
            let lhs = s_sum(2..=13, n)?;
            let rhs = theta_factor(n).mul_q(&LaurentQ::from_qseries(&r1(nu)));
            report(id, n, lhs.first_discrepancy(&rhs, n))
        }
        "4.22-cycle" => cycle_report(id, &FUNCTIONAL_PAIRS[0..12], n)?,
        "4.25" => {
            // z q^9 Theta(z q^9) = Theta(z): the substituted term for index w
            // is q^{9w(w+1)/2 + 9w + 9} z^{w+1}
            let theta = theta_factor(n);
            let mut entries = BTreeMap::new();
            let bound = n + 4;
            for w in -bound..=bound {
                let e = 9 * w * (w + 1) / 2 + 9 * w + 9;
                if e < n {
                    entries.insert(w + 1, LaurentQ::monomial(e, n));
                }
            }
            let shifted = LaurentTheta { order: n, entries };
            report(id, n, shifted.first_discrepancy(&theta, n))
        }
        "4.27" => vanish_report(
            id,
            n,
            vec![
                s_j_eval(4, -2, n)?,
                s_j_eval(8, -2, n)?,
                s_j_eval(11, -2, n)?,
            ],
        ),
        "4.28" => vanish_report(
            id,
            n,
            vec![
                s_eval_sum(&[3, 9], -2, n)?,
                s_eval_sum(&[5, 12], -2, n)?,
            ],
        ),
        "4.29" => {
            let lhs = s_eval_sum(&[2, 6, 7, 10, 13], -2, n)?;
            let rhs = LaurentQ::from_qseries(&r1(nu)).mul(&theta_eval(-2, n));
            report(id, n, lhs.first_discrepancy(&rhs, n).map(|e| (0, e)))
        }
        "4.33" => {
            let lhs = s_sum(14..=19, n)?;
            let rhs = theta_factor(n).mul_q(&LaurentQ::from_qseries(&r2(nu)));
            report(id, n, lhs.first_discrepancy(&rhs, n))
        }
        "4.33-cycle" => cycle_report(id, &FUNCTIONAL_PAIRS[12..18], n)?,
        "4.35" => vanish_report(
            id,
            n,
            vec![
                s_j_eval(14, -1, n)?,
                s_j_eval(15, -1, n)?,
                s_j_eval(19, -1, n)?,
            ],
        ),
        "4.36" => {
            let lhs = s_eval_sum(&[16, 17, 18], -1, n)?;
            let rhs = LaurentQ::from_qseries(&r2(nu)).mul(&theta_eval(-1, n));
            report(id, n, lhs.first_discrepancy(&rhs, n).map(|e| (0, e)))
        }
        "4.39.0" | "4.39.1" => {
            let alpha = if id.ends_with('0') { 0 } else { 1 };
            let lhs = s_sum(20 + 4 * alpha..=23 + 4 * alpha, n)?;
            let rhs = theta_factor(n).mul_q(&LaurentQ::from_qseries(&g_omega_eta(nu)));
            report(id, n, lhs.first_discrepancy(&rhs, n))
        }
        "4.39-cycle" => cycle_report(id, &FUNCTIONAL_PAIRS[18..26], n)?,
        "4.39-tail.0" | "4.39-tail.1" => {
            // at z = -q^{6(1 - 2 alpha)} the first three terms of the block
            // vanish and the last collapses to (-1)^{alpha+1} q^{6 alpha - 4}
            // times an eta product. Evaluating the right side of the block
            // identity with Theta(-q^6) = -q^{-6} E(q^3) and
            // Theta(-q^{-6}) = E(q^3) pins the q^{6 alpha - 4} power.
            let alpha: usize = if id.ends_with('0') { 0 } else { 1 };
            let c = 2 - 4 * alpha as i64;
            let mut disc = vanish_report(
                id,
                n,
                vec![
                    s_j_eval(20 + 4 * alpha, c, n)?,
                    s_j_eval(21 + 4 * alpha, c, n)?,
                    s_j_eval(22 + 4 * alpha, c, n)?,
                ],
            )
            .first_discrepancy;
            let last = s_j_eval(23 + 4 * alpha, c, n)?;
            let eta = eta_quotient(
                &EtaQuotientSpec::new(0, vec![(9, 2), (12, 1), (36, 1)]),
                nu + 4,
            );
            let shifted = LaurentQ::from_qseries(&eta)
                .mul(&LaurentQ::monomial(6 * alpha as i64 - 4, n + 4));
            let signed = if alpha == 0 { shifted.neg() } else { shifted };
            if let Some(e) = last.first_discrepancy(&signed, n) {
                disc = Some(disc.map_or((0, e), |f| f.min((0, e))));
            }
            report(id, n, disc)
        }
        _ => return Err(Error::UnknownIdentity(id.to_string())),
    };
    Ok(rep)
}
