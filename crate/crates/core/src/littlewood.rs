//! Littlewood decomposition of a partition into its t-core and t-quotient,
//! invariance of the GBG-rank under s-core reduction, simultaneous
//! (s,t)-cores, and injectivity of the GBG-rank on them.

use num_integer::Integer;

use crate::cyclotomic::{is_prime, smallest_prime_divisor, CycInt};
use crate::error::{Error, Result};
use crate::gbg::{self, GbgValue};
use crate::partition::{zero_sum_vectors_below, Partition};

/// A partition split into its t-core and the t-quotient. Runner i of the
/// beta-set abacus (beta-numbers congruent to i mod t, beta-set size a
/// multiple of t) yields quotient component i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LittlewoodDecomposition {
    pub core: Partition,
    pub quotient: Vec<Partition>,
    pub t: usize,
}

impl LittlewoodDecomposition {
    pub fn quotient_norm(&self) -> u64 {
        self.quotient.iter().map(|p| p.norm()).sum()
    }

    /// |pi| = |core| + t * sum |quotient_i|.
    pub fn norm(&self) -> u64 {
        self.core.norm() + self.t as u64 * self.quotient_norm()
    }
}

/// Split a partition into t-core and t-quotient on the abacus.
pub fn decompose(pi: &Partition, t: usize) -> Result<LittlewoodDecomposition> {
    if t < 2 {
        return Err(Error::Domain(format!("modulus t = {t} must be >= 2")));
    }
    let m = (pi.len().div_ceil(t)).max(1) * t;
    let beta = pi.beta_set(m);
    let mut runners: Vec<Vec<u64>> = vec![Vec::new(); t];
    for &b in &beta {
        runners[(b % t as u64) as usize].push(b / t as u64);
    }
    let quotient: Vec<Partition> = runners
        .iter()
        .map(|pos| Partition::from_beta_set(pos.clone()))
        .collect();
    // collapse each runner to its bottom positions
    let mut core_beta = Vec::with_capacity(m);
    for (r, pos) in runners.iter().enumerate() {
        for k in 0..pos.len() as u64 {
            core_beta.push(r as u64 + t as u64 * k);
        }
    }
    let core = Partition::from_beta_set(core_beta);
    debug_assert!(core.is_t_core(t));
    Ok(LittlewoodDecomposition {
        core,
        quotient,
        t,
    })
}

/// Inverse of decompose.
pub fn recompose(d: &LittlewoodDecomposition) -> Result<Partition> {
    let t = d.t;
    if t < 2 {
        return Err(Error::Domain(format!("modulus t = {t} must be >= 2")));
    }
    if d.quotient.len() != t {
        return Err(Error::Domain(format!(
            "quotient has {} components, expected {t}",
            d.quotient.len()
        )));
    }
    if !d.core.is_t_core(t) {
        return Err(Error::Domain(format!(
            "core component {:?} is not a {t}-core",
            d.core.parts()
        )));
    }
    let longest = d.quotient.iter().map(|p| p.len()).max().unwrap_or(0);
    let depth = d.core.len().div_ceil(t) + longest + 1;
    let beta = d.core.beta_set(depth * t);
    let mut counts = vec![0usize; t];
    for &b in &beta {
        counts[(b % t as u64) as usize] += 1;
    }
    let mut out_beta = Vec::with_capacity(depth * t);
    for r in 0..t {
        for pos in d.quotient[r].beta_set(counts[r]) {
            out_beta.push(r as u64 + t as u64 * pos);
        }
    }
    Ok(Partition::from_beta_set(out_beta))
}

/// GBG-rank is blind to s-rim-hook removal: each removed hook covers every
/// residue once and contributes 1 + w + ... + w^{s-1} = 0.
pub fn s_core_gbg_invariance_check(pi: &Partition, s: usize) -> Result<bool> {
    let whole = gbg::gbg_direct(pi, s)?;
    let core = gbg::gbg_direct(&pi.t_core_of(s), s)?;
    Ok(whole == core)
}

/// The s-core of a t-core is again a t-core; checked over all t-cores of
/// norm below the bound.
pub fn olsson_check(s: usize, t: usize, norm_bound: u64) -> Result<bool> {
    check_coprime(s, t)?;
    for n in zero_sum_vectors_below(t, norm_bound) {
        let core = n.to_core();
        if !core.t_core_of(s).is_t_core(t) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The simultaneous (s,t)-cores for a coprime pair.
#[derive(Debug, Clone)]
pub struct StCoreSet {
    pub s: usize,
    pub t: usize,
    pub cores: Vec<Partition>,
}

impl StCoreSet {
    pub fn len(&self) -> usize {
        self.cores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cores.is_empty()
    }
}

/// Enumerate the (s,t)-cores: t-cores of norm at most (s^2-1)(t^2-1)/24
/// that are also s-cores. The count binom(s+t,s)/(s+t) certifies that the
/// norm bound lost nothing.
pub fn st_cores(s: usize, t: usize) -> Result<StCoreSet> {
    check_coprime(s, t)?;
    let bound = ((s * s - 1) * (t * t - 1) / 24) as u64;
    let mut cores: Vec<Partition> = zero_sum_vectors_below(t, bound + 1)
        .iter()
        .map(|n| n.to_core())
        .filter(|p| p.is_t_core(s))
        .collect();
    cores.sort_by_key(|p| (p.norm(), p.parts().to_vec()));
    let expected = gbg::nu_bound(s, t)?;
    if cores.len() as u64 != expected {
        return Err(Error::Domain(format!(
            "({s},{t})-core enumeration found {} cores, count formula says {expected}",
            cores.len()
        )));
    }
    Ok(StCoreSet { s, t, cores })
}

/// Whether GBG-rank mod s separates the (s,t)-cores, with the colliding
/// fibers when it does not.
#[derive(Debug, Clone)]
pub struct InjectivityReport {
    pub s: usize,
    pub t: usize,
    pub injective: bool,
    pub collisions: Vec<(GbgValue, Vec<Partition>)>,
    pub predicted_injective: bool,
}

pub fn gbg_injectivity_check(s: usize, t: usize) -> Result<InjectivityReport> {
    let set = st_cores(s, t)?;
    let mut fibers: Vec<(GbgValue, Vec<Partition>)> = Vec::new();
    for core in &set.cores {
        let v = gbg::gbg_direct(core, s)?;
        match fibers.iter_mut().find(|(w, _)| *w == v) {
            Some((_, members)) => members.push(core.clone()),
            None => fibers.push((v, vec![core.clone()])),
        }
    }
    let collisions: Vec<_> = fibers
        .into_iter()
        .filter(|(_, members)| members.len() > 1)
        .collect();
    let predicted_injective = is_prime(s) || t < 2 * smallest_prime_divisor(s);
    Ok(InjectivityReport {
        s,
        t,
        injective: collisions.is_empty(),
        collisions,
        predicted_injective,
    })
}

/// The partition (1 + s/2, 2, 1^{s/2 - 1}): for even s > 2 and suitable t
/// an (s,t)-core sharing GBG-rank 0 with the empty partition.
pub fn counterexample_partition(s: usize, t: usize) -> Result<Partition> {
    if s < 4 || s % 2 != 0 {
        return Err(Error::Domain(format!("s = {s} must be even and > 2")));
    }
    if t <= 1 + s / 2 || t == s + 1 {
        return Err(Error::Domain(format!(
            "t = {t} must exceed 1 + s/2 = {} and differ from s + 1",
            1 + s / 2
        )));
    }
    check_coprime(s, t)?;
    let mut parts = vec![1 + s as u64 / 2, 2];
    parts.extend(std::iter::repeat(1).take(s / 2 - 1));
    let pi = Partition::from_parts(parts);
    if !pi.is_t_core(s) || !pi.is_t_core(t) {
        return Err(Error::Domain(format!(
            "{:?} is not an ({s},{t})-core",
            pi.parts()
        )));
    }
    if gbg::gbg_direct(&pi, s)? != CycInt::zero(s) {
        return Err(Error::Domain(format!(
            "{:?} has nonzero GBG-rank mod {s}",
            pi.parts()
        )));
    }
    Ok(pi)
}

fn check_coprime(s: usize, t: usize) -> Result<()> {
    if s < 2 || t < 2 {
        return Err(Error::Domain(format!("moduli ({s},{t}) must be >= 2")));
    }
    if s.gcd(&t) != 1 {
        return Err(Error::Domain(format!("moduli ({s},{t}) are not coprime")));
    }
    Ok(())
}
