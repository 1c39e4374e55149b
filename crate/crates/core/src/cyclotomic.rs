//! Exact arithmetic in the ring of integers Z[omega_s], omega_s a primitive
//! s-th root of unity. Elements are kept as canonical remainders modulo the
//! s-th cyclotomic polynomial, so equality is literal coefficient equality.
//! No floating complex numbers anywhere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

// ---------------------------------------------------------------------------
// dense integer polynomials, little-endian coefficient order
// ---------------------------------------------------------------------------

pub(crate) fn poly_trim(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    poly_trim(&mut out);
    out
}

/// Remainder of `a` modulo the monic polynomial `m`.
pub(crate) fn poly_rem_monic(a: &[BigInt], m: &[BigInt]) -> Vec<BigInt> {
    assert!(m.last().is_some_and(|c| c.is_one()), "modulus must be monic");
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = r.pop().unwrap();
        if lead.is_zero() {
            continue;
        }
        let shift = r.len() - dm;
        for (k, mk) in m.iter().take(dm).enumerate() {
            r[shift + k] -= &lead * mk;
        }
    }
    poly_trim(&mut r);
    r
}

/// Exact quotient of `a` by the monic polynomial `m`; panics if the
/// division leaves a remainder.
fn poly_div_exact_monic(a: &[BigInt], m: &[BigInt]) -> Vec<BigInt> {
    assert!(m.last().is_some_and(|c| c.is_one()));
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let dm = m.len() - 1;
    if r.is_empty() {
        return Vec::new();
    }
    assert!(r.len() > dm || r.len() == dm + 1 || dm == 0 || r.len() <= dm);
    let mut q = vec![BigInt::zero(); r.len().saturating_sub(dm)];
    while r.len() > dm {
        let lead = r.pop().unwrap();
        if lead.is_zero() {
            continue;
        }
        let shift = r.len() - dm;
        q[shift] = lead.clone();
        for (k, mk) in m.iter().take(dm).enumerate() {
            r[shift + k] -= &lead * mk;
        }
    }
    poly_trim(&mut r);
    assert!(r.is_empty(), "division was not exact");
    q
}

// rational polynomials, used for the Newton recursion and exact division
type RPoly = Vec<BigRational>;

fn rpoly_trim(p: &mut RPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn rpoly_divrem(a: &RPoly, b: &RPoly) -> (RPoly, RPoly) {
    let mut r = a.clone();
    rpoly_trim(&mut r);
    let db = b.len() - 1;
    let lead_b = &b[db];
    let mut q = vec![BigRational::zero(); r.len().saturating_sub(db)];
    while r.len() > db {
        let lead = r.pop().unwrap();
        if lead.is_zero() {
            continue;
        }
        let c = lead / lead_b;
        let shift = r.len() - db;
        q[shift] = c.clone();
        for (k, bk) in b.iter().take(db).enumerate() {
            let t = &c * bk;
            r[shift + k] -= t;
        }
    }
    rpoly_trim(&mut r);
    (q, r)
}

fn rpoly_mul(a: &RPoly, b: &RPoly) -> RPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    rpoly_trim(&mut out);
    out
}

fn rpoly_sub(a: &RPoly, b: &RPoly) -> RPoly {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, ai) in a.iter().enumerate() {
        out[i] += ai;
    }
    for (i, bi) in b.iter().enumerate() {
        out[i] -= bi;
    }
    rpoly_trim(&mut out);
    out
}

/// Inverse of `a` modulo `m` over Q, via the extended Euclidean algorithm.
/// Returns None when a shares a factor with m.
fn rpoly_invert_mod(a: &RPoly, m: &RPoly) -> Option<RPoly> {
    // invariant: r0 = s0*a (mod m), r1 = s1*a (mod m)
    let mut r0 = m.clone();
    let mut r1 = a.clone();
    rpoly_trim(&mut r1);
    let mut s0: RPoly = Vec::new();
    let mut s1: RPoly = vec![BigRational::one()];
    while !r1.is_empty() {
        let (q, r) = rpoly_divrem(&r0, &r1);
        let s = rpoly_sub(&s0, &rpoly_mul(&q, &s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    if r0.len() != 1 {
        return None; // gcd not a unit
    }
    let inv_lead = BigRational::one() / r0[0].clone();
    Some(s0.iter().map(|c| c * &inv_lead).collect())
}

// ---------------------------------------------------------------------------
// cyclotomic polynomials
// ---------------------------------------------------------------------------

/// The s-th cyclotomic polynomial as little-endian integer coefficients,
/// computed by dividing x^s - 1 by Phi_d over all proper divisors d of s.
pub fn cyclotomic_polynomial(s: usize) -> Vec<BigInt> {
    assert!(s >= 1);
    let mut phi: Vec<Vec<BigInt>> = Vec::with_capacity(s + 1);
    phi.push(Vec::new()); // index 0 unused
    for d in 1..=s {
        if s % d != 0 {
            phi.push(Vec::new());
            continue;
        }
        // x^d - 1
        let mut num = vec![BigInt::zero(); d + 1];
        num[0] = -BigInt::one();
        num[d] = BigInt::one();
        for e in 1..d {
            if d % e == 0 {
                num = poly_div_exact_monic(&num, &phi[e]);
            }
        }
        phi.push(num);
    }
    phi.pop().unwrap()
}

fn euler_phi_degree(s: usize) -> usize {
    cyclotomic_polynomial(s).len() - 1
}

// ---------------------------------------------------------------------------
// CycInt
// ---------------------------------------------------------------------------

/// An element of Z[omega_s] in canonical form: the remainder modulo Phi_s,
/// i.e. an integer polynomial in omega_s of degree < phi(s).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycInt {
    s: usize,
    coeffs: Vec<BigInt>, // fixed length phi(s)
}

impl CycInt {
    pub fn zero(s: usize) -> Self {
        assert!(s >= 1);
        CycInt {
            s,
            coeffs: vec![BigInt::zero(); euler_phi_degree(s)],
        }
    }

    pub fn from_integer(s: usize, n: impl Into<BigInt>) -> Self {
        let mut v = Self::zero(s);
        v.coeffs[0] = n.into();
        v
    }

    /// omega_s^k (k taken mod s).
    pub fn root_power(s: usize, k: i64) -> Self {
        let e = k.rem_euclid(s as i64) as usize;
        let mut poly = vec![BigInt::zero(); e + 1];
        poly[e] = BigInt::one();
        Self::from_poly(s, poly)
    }

    /// Reduce an arbitrary integer polynomial in omega_s to canonical form.
    pub fn from_poly(s: usize, poly: Vec<BigInt>) -> Self {
        let modulus = cyclotomic_polynomial(s);
        let mut coeffs = poly_rem_monic(&poly, &modulus);
        coeffs.resize(modulus.len() - 1, BigInt::zero());
        CycInt { s, coeffs }
    }

    pub fn modulus(&self) -> usize {
        self.s
    }

    /// Canonical coefficients over the basis 1, omega, .., omega^{phi(s)-1}.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The rational integer this element equals, if it is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.s != other.s {
            return Err(Error::ModulusMismatch(self.s, other.s));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CycInt { s: self.s, coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(CycInt { s: self.s, coeffs })
    }

    pub fn neg(&self) -> Self {
        CycInt {
            s: self.s,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self::from_poly(self.s, poly_mul(&self.coeffs, &other.coeffs)))
    }

    pub fn scale(&self, k: impl Into<BigInt>) -> Self {
        let k = k.into();
        CycInt {
            s: self.s,
            coeffs: self.coeffs.iter().map(|c| c * &k).collect(),
        }
    }

    /// Exact division: self / d within Z[omega_s]. The quotient is computed
    /// through the rational inverse of d modulo Phi_s and must come out with
    /// integer coefficients; a fractional result is a domain error.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        self.check_same(d)?;
        if d.is_zero() {
            return Err(Error::Domain("division by zero in Z[omega_s]".into()));
        }
        let modulus: RPoly = cyclotomic_polynomial(self.s)
            .iter()
            .map(|c| BigRational::from(c.clone()))
            .collect();
        let d_rat: RPoly = d.coeffs.iter().map(|c| BigRational::from(c.clone())).collect();
        let mut d_rat = d_rat;
        rpoly_trim(&mut d_rat);
        let inv = rpoly_invert_mod(&d_rat, &modulus)
            .ok_or_else(|| Error::Domain("divisor is a zero divisor mod Phi_s".into()))?;
        let num: RPoly = self.coeffs.iter().map(|c| BigRational::from(c.clone())).collect();
        let prod = rpoly_mul(&num, &inv);
        let (_, rem) = rpoly_divrem(&prod, &modulus);
        let mut coeffs = Vec::with_capacity(euler_phi_degree(self.s));
        for c in &rem {
            if !c.denom().is_one() {
                return Err(Error::Domain(format!(
                    "quotient is not integral in Z[omega_{}]",
                    self.s
                )));
            }
            coeffs.push(c.numer().clone());
        }
        coeffs.resize(euler_phi_degree(self.s), BigInt::zero());
        Ok(CycInt { s: self.s, coeffs })
    }

    /// Image under the ring automorphism omega -> omega^k, gcd(k, s) = 1.
    pub fn galois(&self, k: i64) -> Result<Self> {
        let s = self.s as i64;
        if k.rem_euclid(s).gcd(&s) != 1 {
            return Err(Error::Domain(format!("omega -> omega^{k} is not an automorphism mod {s}")));
        }
        let mut acc = CycInt::zero(self.s);
        for (i, c) in self.coeffs.iter().enumerate() {
            let term = Self::root_power(self.s, k * i as i64).scale(c.clone());
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    /// Human-readable rendering, "1 - w" style (w = omega_s).
    pub fn pretty(&self) -> String {
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            let coeff_str = if mag.is_one() && i > 0 { String::new() } else { mag.to_string() };
            let var_str = match i {
                0 => String::new(),
                1 => "w".to_string(),
                _ => format!("w^{i}"),
            };
            out.push_str(&coeff_str);
            out.push_str(&var_str);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

// ---------------------------------------------------------------------------
// exponent vectors and symmetric functions at root-of-unity arguments
// ---------------------------------------------------------------------------

/// A nondecreasing vector of exponents j_0 <= .. <= j_{t-1} in [0, s-1].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentVector {
    s: usize,
    exps: Vec<u32>,
}

impl ExponentVector {
    pub fn new(s: usize, mut exps: Vec<u32>) -> Result<Self> {
        if s < 2 {
            return Err(Error::Domain(format!("modulus must be >= 2, got {s}")));
        }
        if exps.iter().any(|&e| e as usize >= s) {
            return Err(Error::Domain(format!("exponents must lie in [0, {})", s)));
        }
        exps.sort_unstable();
        Ok(ExponentVector { s, exps })
    }

    pub fn modulus(&self) -> usize {
        self.s
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// h_k = sum_i omega_s^{k j_i}.
    pub fn power_sum(&self, k: i64) -> CycInt {
        let mut acc = CycInt::zero(self.s);
        for &j in &self.exps {
            acc = acc.add(&CycInt::root_power(self.s, k * j as i64)).unwrap();
        }
        acc
    }

    /// sigma_k of the root powers omega_s^{j_i}.
    pub fn elementary_symmetric(&self, k: usize) -> Result<CycInt> {
        let t = self.exps.len();
        if k > t {
            return Err(Error::Domain(format!("sigma_{k} undefined for t = {t}")));
        }
        // dp over prod (y + omega^{j_i}); coefficient of y^{t-k} is sigma_k
        let mut dp = vec![CycInt::zero(self.s); t + 1];
        dp[0] = CycInt::from_integer(self.s, 1);
        for (used, &j) in self.exps.iter().enumerate() {
            let root = CycInt::root_power(self.s, j as i64);
            for d in (0..=used).rev() {
                let bump = dp[d].mul(&root)?;
                dp[d + 1] = dp[d + 1].add(&bump)?;
            }
        }
        Ok(dp[k].clone())
    }

    /// sigma_k evaluated at the inverse root powers.
    pub fn elementary_symmetric_star(&self, k: usize) -> Result<CycInt> {
        let inv: Vec<u32> = self
            .exps
            .iter()
            .map(|&j| ((self.s as i64 - j as i64).rem_euclid(self.s as i64)) as u32)
            .collect();
        ExponentVector::new(self.s, inv)?.elementary_symmetric(k)
    }
}

/// Checks the identity sigma_t * sigma_k^* = sigma_{t-k} exactly.
pub fn sigma_star_relation_check(v: &ExponentVector, k: usize) -> Result<bool> {
    let t = v.len();
    if k == 0 || k >= t {
        return Err(Error::Domain(format!("need 1 <= k <= t-1, got k = {k}, t = {t}")));
    }
    let lhs = v.elementary_symmetric(t)?.mul(&v.elementary_symmetric_star(k)?)?;
    Ok(lhs == v.elementary_symmetric(t - k)?)
}

/// Outcome of the Newton-identities comparison of two exponent vectors.
#[derive(Debug, Clone)]
pub struct NewtonCheck {
    /// h_k(v) == h_k(w) for 1 <= k <= kmax
    pub power_sums_equal: bool,
    /// sigma_k(v) == sigma_k(w) for 1 <= k <= kmax
    pub sigmas_equal: bool,
    pub sigma_v: Vec<CycInt>,
    pub sigma_w: Vec<CycInt>,
}

impl NewtonCheck {
    /// True iff equal power sums h_1..h_kmax came with equal sigma_1..sigma_kmax.
    pub fn holds(&self) -> bool {
        self.power_sums_equal && self.sigmas_equal
    }
}

/// Verify that equality of h_1..h_kmax forces equality of sigma_1..sigma_kmax.
/// The sigmas are recomputed from the power sums through the Newton recursion
/// in exact rational arithmetic and cross-checked against the direct
/// expansion; a disagreement would be an internal error.
pub fn newton_identities_check(v: &ExponentVector, w: &ExponentVector, kmax: usize) -> Result<NewtonCheck> {
    if v.modulus() != w.modulus() || v.len() != w.len() {
        return Err(Error::Domain("exponent vectors must share s and t".into()));
    }
    if kmax > v.len() {
        return Err(Error::Domain(format!("kmax = {kmax} exceeds t = {}", v.len())));
    }
    let s = v.modulus();
    let modulus: RPoly = cyclotomic_polynomial(s)
        .iter()
        .map(|c| BigRational::from(c.clone()))
        .collect();
    let reduce = |p: RPoly| -> RPoly { rpoly_divrem(&p, &modulus).1 };
    let newton_sigmas = |ev: &ExponentVector| -> Vec<CycInt> {
        // sigma_k = (1/k) sum_{i=1..k} (-1)^{i-1} sigma_{k-i} h_i
        let h: Vec<RPoly> = (1..=kmax)
            .map(|k| {
                ev.power_sum(k as i64)
                    .coeffs()
                    .iter()
                    .map(|c| BigRational::from(c.clone()))
                    .collect()
            })
            .collect();
        let mut sigma: Vec<RPoly> = vec![vec![BigRational::one()]];
        for k in 1..=kmax {
            let mut acc: RPoly = Vec::new();
            for i in 1..=k {
                let term = rpoly_mul(&sigma[k - i], &h[i - 1]);
                let term = if i % 2 == 1 { term } else { term.iter().map(|c| -c).collect() };
                acc = rpoly_sub(&acc, &term.iter().map(|c| -c).collect());
            }
            let inv_k = BigRational::from(BigInt::from(k as i64)).recip();
            let scaled: RPoly = acc.iter().map(|c| c * &inv_k).collect();
            sigma.push(reduce(scaled));
        }
        sigma
            .into_iter()
            .skip(1)
            .map(|p| {
                let mut coeffs: Vec<BigInt> = p
                    .iter()
                    .map(|c| {
                        assert!(c.denom().is_one(), "Newton recursion left a fraction");
                        c.numer().clone()
                    })
                    .collect();
                coeffs.resize(euler_phi_degree(s), BigInt::zero());
                CycInt { s, coeffs }
            })
            .collect()
    };

    let power_sums_equal = (1..=kmax as i64).all(|k| v.power_sum(k) == w.power_sum(k));
    let sigma_v: Vec<CycInt> = (1..=kmax).map(|k| v.elementary_symmetric(k).unwrap()).collect();
    let sigma_w: Vec<CycInt> = (1..=kmax).map(|k| w.elementary_symmetric(k).unwrap()).collect();
    // Newton route must reproduce the direct expansion
    assert_eq!(newton_sigmas(v), sigma_v);
    assert_eq!(newton_sigmas(w), sigma_w);
    let sigmas_equal = sigma_v == sigma_w;
    Ok(NewtonCheck {
        power_sums_equal,
        sigmas_equal,
        sigma_v,
        sigma_w,
    })
}

// ---------------------------------------------------------------------------
// the equal-vectors decision procedure and its counterexample families
// ---------------------------------------------------------------------------

pub fn smallest_prime_divisor(s: usize) -> usize {
    assert!(s >= 2);
    (2..).find(|p| s % p == 0).unwrap()
}

pub fn is_prime(s: usize) -> bool {
    s >= 2 && smallest_prime_divisor(s) == s
}

/// Result of testing a pair of exponent vectors against the two exact
/// conditions (equal sums of root powers, equal products of root powers).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Lemma14Outcome {
    pub conditions_hold: bool,
    pub equal_forced: bool,
}

/// Tests the sum and product conditions exactly and reports whether the
/// vectors are in fact equal. When s is prime, or s is composite with
/// t < 2 p_s, the conditions force equality.
pub fn lemma14_decide(j: &ExponentVector, jt: &ExponentVector) -> Result<Lemma14Outcome> {
    if j.modulus() != jt.modulus() || j.len() != jt.len() {
        return Err(Error::Domain("exponent vectors must share s and t".into()));
    }
    let s = j.modulus();
    let t = j.len();
    if t < 2 || s.gcd(&t) != 1 {
        return Err(Error::Domain(format!("need t >= 2 and gcd(s, t) = 1, got s = {s}, t = {t}")));
    }
    let sums_equal = j.power_sum(1) == jt.power_sum(1);
    let prod = |v: &ExponentVector| {
        let total: i64 = v.exponents().iter().map(|&e| e as i64).sum();
        CycInt::root_power(s, total)
    };
    let products_equal = prod(j) == prod(jt);
    Ok(Lemma14Outcome {
        conditions_hold: sums_equal && products_equal,
        equal_forced: j == jt,
    })
}

/// A pair of distinct exponent vectors satisfying both selection
/// conditions (equal power sum and equal product).
/// Defined for composite s with t >= 2 p_s and gcd(s, t) = 1; the special
/// vectors are used for s in {4, 6, 9}, the general two-term family
/// otherwise (which requires s > 3 p_s). The returned pair is verified
/// internally.
pub fn counterexample_family(s: usize, t: usize) -> Result<(ExponentVector, ExponentVector)> {
    if s < 4 || is_prime(s) {
        return Err(Error::Domain(format!("s = {s} must be composite")));
    }
    let p = smallest_prime_divisor(s);
    if s.gcd(&t) != 1 {
        return Err(Error::Domain(format!("gcd({s}, {t}) must be 1")));
    }
    if t < 2 * p {
        return Err(Error::Domain(format!("need t >= 2 p_s = {}, got t = {t}", 2 * p)));
    }
    let (mut a, mut b): (Vec<u32>, Vec<u32>) = match s {
        4 => (vec![1, 1, 3, 3], vec![0, 0, 2, 2]),
        6 => (vec![1, 1, 4, 4], vec![0, 2, 3, 5]),
        9 => (vec![3, 3, 6, 6], vec![1, 2, 4, 5, 7, 8]),
        _ => {
            if s <= 3 * p {
                return Err(Error::Domain(format!(
                    "family undefined for composite s = {s} with s <= 3 p_s"
                )));
            }
            let c = (s / p) as u32;
            let mut a = Vec::new();
            let mut b = Vec::new();
            for k in 0..p as u32 {
                a.push(2 + c * k);
                a.push(2 + c * k);
                b.push(1 + c * k);
                b.push(3 + c * k);
            }
            (a, b)
        }
    };
    if a.len() > t || b.len() > t {
        return Err(Error::Domain(format!(
            "t = {t} too small for the s = {s} family"
        )));
    }
    // pad with zeros on the left to length t
    a.resize(t, 0);
    b.resize(t, 0);
    let j = ExponentVector::new(s, a)?;
    let jt = ExponentVector::new(s, b)?;
    let outcome = lemma14_decide(&j, &jt)?;
    assert!(
        outcome.conditions_hold && !outcome.equal_forced,
        "family for s = {s}, t = {t} failed its own conditions"
    );
    Ok((j, jt))
}
