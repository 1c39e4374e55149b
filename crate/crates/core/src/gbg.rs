//! The GBG-rank statistic: direct computation from the residue diagram,
//! the closed form on GKS coordinates, the s = 2 specialization, and the
//! census of distinct values over t-cores.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::cyclotomic::CycInt;
use crate::error::{Error, Result};
use crate::partition::{NVector, Partition};

/// A GBG-rank value: a canonical element of Z[omega_s].
pub type GbgValue = CycInt;

/// GBG-rank of pi mod s, straight from the residue counts: sum r_i omega^i.
pub fn gbg_direct(pi: &Partition, s: usize) -> Result<GbgValue> {
    let r = pi.r_vector(s)?;
    let mut acc = CycInt::zero(s);
    for (i, &c) in r.counts().iter().enumerate() {
        acc = acc.add(&CycInt::root_power(s, i as i64).scale(c))?;
    }
    Ok(acc)
}

/// GBG-rank of the t-core encoded by n, via the closed form
/// sum_i omega^{i+1}(omega^{t n_i} - 1) / ((1 - omega)(1 - omega^t)),
/// evaluated by exact division in Z[omega_s].
pub fn gbg_formula(n: &NVector, s: usize) -> Result<GbgValue> {
    let t = n.modulus();
    if s < 2 {
        return Err(Error::Domain(format!("modulus must be >= 2, got {s}")));
    }
    if s.gcd(&t) != 1 {
        return Err(Error::Domain(format!("need gcd(s, t) = 1, got s = {s}, t = {t}")));
    }
    let one = CycInt::from_integer(s, 1);
    let mut num = CycInt::zero(s);
    for (i, &ni) in n.coords().iter().enumerate() {
        let term = CycInt::root_power(s, t as i64 * ni)
            .sub(&one)?
            .mul(&CycInt::root_power(s, i as i64 + 1))?;
        num = num.add(&term)?;
    }
    let denom = one
        .sub(&CycInt::root_power(s, 1))?
        .mul(&one.sub(&CycInt::root_power(s, t as i64))?)?;
    num.div_exact(&denom)
}

/// GBG-rank additivity across the main diagonal. The split halves keep
/// their cells in place, so row k of the upper wedge carries residues
/// 0..len-1 and column j of the lower wedge carries 0..-(len-1); diagonal
/// cells are counted by both wedges, hence the -D correction:
/// rank(pi) = rank(upper) + rank(lower) - D.
pub fn diagonal_additivity_check(pi: &Partition, s: usize) -> Result<bool> {
    if s < 2 {
        return Err(Error::Domain(format!("modulus must be >= 2, got {s}")));
    }
    let split = pi.diagonal_split();
    let wedge = |lens: &[u64], sign: i64| -> Result<CycInt> {
        let mut acc = CycInt::zero(s);
        for &len in lens {
            for r in 0..len as i64 {
                acc = acc.add(&CycInt::root_power(s, sign * r))?;
            }
        }
        Ok(acc)
    };
    let upper = wedge(split.pi1.parts(), 1)?;
    let lower = wedge(split.pi2.conjugate().parts(), -1)?;
    let sum = upper
        .add(&lower)?
        .sub(&CycInt::from_integer(s, split.d as i64))?;
    Ok(gbg_direct(pi, s)? == sum)
}

/// GBG-rank mod 2 of a t-core for odd t: (1 - sum_i (-1)^{i + n_i}) / 4.
pub fn gbg_mod2(n: &NVector) -> Result<i64> {
    let t = n.modulus();
    if t % 2 == 0 {
        return Err(Error::Domain(format!("t must be odd, got {t}")));
    }
    let sum: i64 = n
        .coords()
        .iter()
        .enumerate()
        .map(|(i, &ni)| if (i as i64 + ni).rem_euclid(2) == 0 { 1 } else { -1 })
        .sum();
    let num = 1 - sum;
    debug_assert_eq!(num.rem_euclid(4), 0);
    Ok(num / 4)
}

/// The census of distinct GBG-rank values over t-cores mod s.
#[derive(Debug, Clone)]
pub struct ValueCensus {
    pub s: usize,
    pub t: usize,
    pub values: BTreeSet<GbgValue>,
    pub bound: u64,
}

impl ValueCensus {
    pub fn count(&self) -> u64 {
        self.values.len() as u64
    }

    /// Whether the Anderson-number bound is attained.
    pub fn attains_bound(&self) -> bool {
        self.count() == self.bound
    }
}

/// binom(s+t, s) / (s+t); an exact integer when gcd(s, t) = 1.
pub fn nu_bound(s: usize, t: usize) -> Result<u64> {
    if s.gcd(&t) != 1 {
        return Err(Error::Domain(format!("need gcd(s, t) = 1, got s = {s}, t = {t}")));
    }
    let mut binom = BigInt::one();
    for k in 1..=s {
        binom = binom * BigInt::from(t + k) / BigInt::from(k);
    }
    let (q, r) = binom.div_rem(&BigInt::from(s + t));
    debug_assert!(r.is_zero(), "binom(s+t, s) not divisible by s+t");
    q.to_u64()
        .ok_or_else(|| Error::Domain("census bound overflows u64".into()))
}

/// Enumerate all distinct GBG-rank values of t-cores mod s. The closed form
/// depends only on n_i mod s, so the s^{t-1} residue classes are exhaustive;
/// each class is lifted to a genuine zero-sum vector before evaluation.
pub fn nu(s: usize, t: usize, budget: u64) -> Result<ValueCensus> {
    if s.gcd(&t) != 1 {
        return Err(Error::Domain(format!("need gcd(s, t) = 1, got s = {s}, t = {t}")));
    }
    let candidates = (s as u64).checked_pow(t as u32 - 1);
    match candidates {
        Some(c) if c <= budget => {}
        _ => return Err(Error::BudgetExceeded(budget)),
    }
    let mut values = BTreeSet::new();
    let mut residues = vec![0u64; t - 1];
    loop {
        // lift: free coordinates as-is, last balances the sum
        let mut coords: Vec<i64> = residues.iter().map(|&m| m as i64).collect();
        coords.push(-coords.iter().sum::<i64>());
        let n = NVector::new(coords).unwrap();
        values.insert(gbg_formula(&n, s)?);
        // odometer
        let mut pos = 0;
        loop {
            if pos == t - 1 {
                return Ok(ValueCensus {
                    s,
                    t,
                    values,
                    bound: nu_bound(s, t)?,
                });
            }
            residues[pos] += 1;
            if residues[pos] < s as u64 {
                break;
            }
            residues[pos] = 0;
            pos += 1;
        }
    }
}

/// a_r(s, t): the number of nondecreasing vectors in [0, s-1]^t whose
/// entry sum is congruent to r mod s.
pub fn a_r(s: usize, t: usize, r: usize) -> u64 {
    a_r_census(s, t)[r % s]
}

/// The full residue census (a_0, .., a_{s-1}).
pub fn a_r_census(s: usize, t: usize) -> Vec<u64> {
    fn rec(s: usize, remaining: usize, lo: usize, sum: usize, out: &mut [u64]) {
        if remaining == 0 {
            out[sum % s] += 1;
            return;
        }
        for e in lo..s {
            rec(s, remaining - 1, e, sum + e, out);
        }
    }
    let mut out = vec![0u64; s];
    rec(s, t, 0, 0, &mut out);
    out
}

/// The 27 residue-class representatives (table index 1..27) of 4-core
/// n-vectors mod 3, ordered by their GBG-rank mod 3 values.
pub const TABLE1_VECTORS: [[i64; 4]; 27] = [
    [0, -1, 1, 0],
    [0, 0, 0, 0],
    [1, 1, -2, 0],
    [-1, -1, 1, 1],
    [0, -1, -1, 2],
    [1, -1, 0, 0],
    [0, 1, -2, 1],
    [2, -1, -1, 0],
    [0, 0, 1, -1],
    [0, 1, -1, 0],
    [-1, 0, 1, 0],
    [1, -1, 1, -1],
    [0, -1, 0, 1],
    [1, 1, 0, -2],
    [-1, 1, -1, 1],
    [2, 0, -1, -1],
    [1, 0, 0, -1],
    [1, 1, -1, -1],
    [-1, 0, 0, 1],
    [1, 0, -1, 0],
    [1, 0, -2, 1],
    [1, -1, -1, 1],
    [0, 0, -1, 1],
    [-1, 1, 0, 0],
    [-1, 1, 1, -1],
    [-1, 2, 0, -1],
    [0, 1, 0, -1],
];

/// The five GBG-rank mod 3 values a 4-core may assume, in table order:
/// -1, 0, 1, -omega, -omega^2.
pub fn table1_values() -> [GbgValue; 5] {
    [
        CycInt::from_integer(3, -1),
        CycInt::zero(3),
        CycInt::from_integer(3, 1),
        CycInt::root_power(3, 1).neg(),
        CycInt::root_power(3, 2).neg(),
    ]
}

/// One classified row of the 27-entry table.
#[derive(Debug, Clone)]
pub struct Table1Row {
    /// 1-based table index.
    pub index: usize,
    pub nvec: NVector,
    pub value: GbgValue,
}

/// Classify all 27 residue-class vectors for (s, t) = (3, 4) by their
/// GBG-rank value.
pub fn table1() -> Vec<Table1Row> {
    TABLE1_VECTORS
        .iter()
        .enumerate()
        .map(|(idx, coords)| {
            let nvec = NVector::new(coords.to_vec()).expect("table vectors sum to zero");
            let value = gbg_formula(&nvec, 3).expect("gcd(3, 4) = 1");
            Table1Row {
                index: idx + 1,
                nvec,
                value,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::zero_sum_vectors_below;

    fn p(text: &str) -> Partition {
        Partition::parse(text).unwrap()
    }

    #[test]
    fn direct_values() {
        assert!(gbg_direct(&Partition::empty(), 5).unwrap().is_zero());
        // (4,2) mod 3: r = (3,1,2) -> 3 + w + 2w^2 = 1 - w canonically
        let v = gbg_direct(&p("4,2"), 3).unwrap();
        let expect = CycInt::from_integer(3, 1).sub(&CycInt::root_power(3, 1)).unwrap();
        assert_eq!(v, expect);
        assert_eq!(v.pretty(), "1 - w");
        // the 4-core of (0,-1,1,0) has GBG-rank -1 mod 3
        let core = NVector::new(vec![0, -1, 1, 0]).unwrap().to_core();
        assert_eq!(gbg_direct(&core, 3).unwrap(), CycInt::from_integer(3, -1));
    }

    #[test]
    fn formula_values() {
        let n = NVector::new(vec![0, -1, 1, 0]).unwrap();
        assert_eq!(gbg_formula(&n, 3).unwrap(), CycInt::from_integer(3, -1));
        assert!(gbg_formula(&NVector::zero(4), 3).unwrap().is_zero());
        let n20 = NVector::new(vec![1, 0, -1, 0]).unwrap();
        assert_eq!(gbg_formula(&n20, 3).unwrap(), CycInt::root_power(3, 1).neg());
        // gcd(s, t) = 1 required
        assert!(gbg_formula(&NVector::zero(4), 2).is_err());
    }

    #[test]
    fn formula_matches_direct() {
        for (s, t) in [(2usize, 3usize), (3, 2), (3, 4), (4, 3), (5, 2), (2, 5), (5, 4)] {
            for n in zero_sum_vectors_below(t, 26) {
                let direct = gbg_direct(&n.to_core(), s).unwrap();
                assert_eq!(gbg_formula(&n, s).unwrap(), direct, "(s,t)=({s},{t}), n={n:?}");
            }
        }
    }

    #[test]
    fn additivity_across_the_diagonal() {
        for s in 2..=4usize {
            for pi in crate::partition::partitions_up_to(10) {
                assert!(
                    diagonal_additivity_check(&pi, s).unwrap(),
                    "s = {s}, pi = {:?}",
                    pi.parts()
                );
            }
        }
        assert!(diagonal_additivity_check(&Partition::empty(), 1).is_err());
    }

    #[test]
    fn mod2_specialization() {
        let n = NVector::new(vec![2, -1, -1]).unwrap();
        assert_eq!(gbg_mod2(&n).unwrap(), 0);
        assert_eq!(gbg_direct(&p("4,2"), 2).unwrap(), CycInt::zero(2));
        assert_eq!(gbg_mod2(&NVector::zero(3)).unwrap(), 0);
        assert!(gbg_mod2(&NVector::zero(4)).is_err());
        // agrees with gbg_direct at s = 2 and satisfies the bounds
        for t in [3usize, 5, 7] {
            for n in zero_sum_vectors_below(t, 16) {
                let v = gbg_mod2(&n).unwrap();
                let direct = gbg_direct(&n.to_core(), 2).unwrap();
                assert_eq!(direct, CycInt::from_integer(2, v));
                let t_i = t as i64;
                assert!(-((t_i - 1) / 4) <= v && v <= (t_i + 1) / 4);
            }
        }
    }

    #[test]
    fn census_3_4() {
        let census = nu(3, 4, 1_000_000).unwrap();
        assert_eq!(census.count(), 5);
        assert_eq!(census.bound, 5);
        let expect: std::collections::BTreeSet<_> = table1_values().into_iter().collect();
        assert_eq!(census.values, expect);
    }

    #[test]
    fn census_small_cases() {
        let c = nu(2, 3, 1_000).unwrap();
        assert_eq!(c.count(), 2);
        assert_eq!(c.bound, 2);
        let c45 = nu(4, 5, 1_000_000).unwrap();
        assert_eq!(c45.bound, 14);
        assert!(c45.count() < 14, "s composite, t >= 2 p_s: strict inequality");
        assert!(nu(2, 4, 1_000).is_err());
        assert!(matches!(nu(3, 20, 10).unwrap_err(), Error::BudgetExceeded(_)));
    }

    #[test]
    fn bound_values() {
        assert_eq!(nu_bound(3, 4).unwrap(), 5);
        assert_eq!(nu_bound(2, 3).unwrap(), 2);
        assert_eq!(nu_bound(5, 6).unwrap(), 42);
        assert_eq!(nu_bound(4, 5).unwrap(), 14);
        assert!(nu_bound(4, 6).is_err());
    }

    #[test]
    fn residue_census() {
        assert_eq!(a_r_census(3, 2), vec![2, 2, 2]);
        let c41 = a_r_census(4, 1);
        assert_eq!(c41, vec![1, 1, 1, 1]);
        let c42 = a_r_census(4, 2);
        assert_eq!(c42.iter().sum::<u64>(), 10);
        assert!(c42.iter().any(|&x| x != c42[0]), "gcd(4,2) != 1 breaks equidistribution");
        // Observation 3: equidistribution for coprime pairs
        for (s, t) in [(3usize, 4usize), (5, 3), (7, 2), (4, 3)] {
            let c = a_r_census(s, t);
            assert!(c.iter().all(|&x| x == c[0]), "(s,t)=({s},{t})");
        }
        assert_eq!(a_r(3, 2, 1), 2);
    }

    #[test]
    fn table1_classification() {
        let rows = table1();
        assert_eq!(rows.len(), 27);
        let [m1, z, p1, mw, mw2] = table1_values();
        let expected: Vec<&GbgValue> = std::iter::empty()
            .chain(std::iter::repeat_n(&m1, 1))
            .chain(std::iter::repeat_n(&z, 12))
            .chain(std::iter::repeat_n(&p1, 6))
            .chain(std::iter::repeat_n(&mw, 4))
            .chain(std::iter::repeat_n(&mw2, 4))
            .collect();
        for (row, want) in rows.iter().zip(expected) {
            assert_eq!(&row.value, want, "row {}", row.index);
        }
    }
}
