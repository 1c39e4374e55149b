//! End-to-end acceptance gate. Each test prints one pass/fail line; all
//! arithmetic is exact, so every comparison is an equality with zero
//! tolerance.

use num_integer::Integer;

use tcores::cyclotomic::{
    counterexample_family, is_prime, lemma14_decide, smallest_prime_divisor, CycInt,
    ExponentVector,
};
use tcores::gbg;
use tcores::littlewood;
use tcores::partition::{partitions_up_to, zero_sum_vectors_below, Partition};
use tcores::qseries;
use tcores::qseries::theta;

fn report(n: usize, desc: &str, result: Result<(), String>) {
    match result {
        Ok(()) => println!("criterion {n:2}: {desc} ... pass"),
        Err(e) => {
            println!("criterion {n:2}: {desc} ... FAIL: {e}");
            panic!("criterion {n} failed: {e}");
        }
    }
}

fn coprime_pairs(max_s: usize, max_t: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for s in 2..=max_s {
        for t in 2..=max_t {
            if s != t && s.gcd(&t) == 1 {
                out.push((s, t));
            }
        }
    }
    out
}

#[test]
fn criterion_01_value_table_classification() {
    report(1, "27-row value table reproduced", (|| {
        let rows = gbg::table1();
        if rows.len() != 27 {
            return Err(format!("{} rows", rows.len()));
        }
        let [m1, z, p1, mw, mw2] = gbg::table1_values();
        for row in &rows {
            let want = match row.index {
                1 => &m1,
                2..=13 => &z,
                14..=19 => &p1,
                20..=23 => &mw,
                _ => &mw2,
            };
            if &row.value != want {
                return Err(format!(
                    "row {}: value {} but group says {}",
                    row.index,
                    row.value.pretty(),
                    want.pretty()
                ));
            }
        }
        // group sizes 1 / 12 / 6 / 4 / 4
        let sizes = [
            rows.iter().filter(|r| r.value == m1).count(),
            rows.iter().filter(|r| r.value == z).count(),
            rows.iter().filter(|r| r.value == p1).count(),
            rows.iter().filter(|r| r.value == mw).count(),
            rows.iter().filter(|r| r.value == mw2).count(),
        ];
        if sizes != [1, 12, 6, 4, 4] {
            return Err(format!("group sizes {sizes:?}"));
        }
        Ok(())
    })());
}

#[test]
fn criterion_02_census_3_4() {
    report(2, "census (3,4) has exactly the 5 table values", (|| {
        let census = gbg::nu(3, 4, 1_000_000).map_err(|e| e.to_string())?;
        if census.count() != 5 {
            return Err(format!("count {}", census.count()));
        }
        let want: std::collections::BTreeSet<_> = gbg::table1_values().into_iter().collect();
        if census.values != want {
            return Err("value set differs from the table".into());
        }
        Ok(())
    })());
}

#[test]
fn criterion_03_closed_form_vs_direct() {
    report(3, "closed form = residue count on all small cores", (|| {
        for (s, t) in coprime_pairs(5, 5) {
            for n in zero_sum_vectors_below(t, 26) {
                let via_formula = gbg::gbg_formula(&n, s).map_err(|e| e.to_string())?;
                let via_cells = gbg::gbg_direct(&n.to_core(), s).map_err(|e| e.to_string())?;
                if via_formula != via_cells {
                    return Err(format!("(s,t)=({s},{t}), n={:?}", n.coords()));
                }
            }
        }
        Ok(())
    })());
}

#[test]
fn criterion_04_census_bound_and_equality_cases() {
    report(4, "census bound, with equality iff s prime or t < 2 p_s", (|| {
        for (s, t) in coprime_pairs(6, 6) {
            let census = gbg::nu(s, t, 10_000_000).map_err(|e| e.to_string())?;
            let bound = gbg::nu_bound(s, t).map_err(|e| e.to_string())?;
            if census.count() > bound {
                return Err(format!("({s},{t}): {} > bound {bound}", census.count()));
            }
            let expect_equal = is_prime(s) || t < 2 * smallest_prime_divisor(s);
            if (census.count() == bound) != expect_equal {
                return Err(format!(
                    "({s},{t}): count {}, bound {bound}, equality expected: {expect_equal}",
                    census.count()
                ));
            }
        }
        let c45 = gbg::nu(4, 5, 10_000_000).map_err(|e| e.to_string())?;
        if c45.count() >= 14 {
            return Err(format!("(4,5) count {} not strictly below 14", c45.count()));
        }
        Ok(())
    })());
}

#[test]
fn criterion_05_counterexample_families() {
    report(5, "collision families satisfy both conditions with j != j~", (|| {
        for (s, t) in [(4usize, 5usize), (6, 5), (9, 8)] {
            let (j, jt) = counterexample_family(s, t).map_err(|e| e.to_string())?;
            let out = lemma14_decide(&j, &jt).map_err(|e| e.to_string())?;
            if !out.conditions_hold || out.equal_forced {
                return Err(format!("family ({s},{t}) not a collision"));
            }
        }
        // the general two-term family written out for (10, 4); the moduli
        // share a factor, so the guarded constructor refuses the pair and
        // the two conditions are checked directly instead
        let j = ExponentVector::new(10, vec![2, 2, 7, 7]).map_err(|e| e.to_string())?;
        let jt = ExponentVector::new(10, vec![1, 3, 6, 8]).map_err(|e| e.to_string())?;
        if j == jt {
            return Err("(10,4) vectors coincide".into());
        }
        if j.power_sum(1) != jt.power_sum(1) {
            return Err("(10,4) power sums differ".into());
        }
        let prod = |v: &ExponentVector| {
            CycInt::root_power(10, v.exponents().iter().map(|&e| e as i64).sum())
        };
        if prod(&j) != prod(&jt) {
            return Err("(10,4) products differ".into());
        }
        Ok(())
    })());
}

#[test]
fn criterion_06_core_counting_identity() {
    report(6, "lattice and product forms of the core series agree to 60", (|| {
        let rep = qseries::check_identity("4.5", 60).map_err(|e| e.to_string())?;
        if !rep.holds {
            return Err(format!("first discrepancy at {:?}", rep.first_discrepancy));
        }
        Ok(())
    })());
}

#[test]
fn criterion_07_component_series_identities() {
    report(7, "component generating functions match eta products to 60", (|| {
        for id in ["4.7", "4.8", "4.9", "4.10", "4.11", "4.12", "4.13", "4.14"] {
            let rep = qseries::check_identity(id, 60).map_err(|e| e.to_string())?;
            if !rep.holds {
                return Err(format!("{id}: discrepancy at {:?}", rep.first_discrepancy));
            }
        }
        let values = gbg::table1_values();
        let g = qseries::g_c_enumerated(&values[0], 60).map_err(|e| e.to_string())?;
        for k in 0..5 {
            if !num_traits::Zero::is_zero(g.coeff(k)) {
                return Err(format!("minus-one series has a term at q^{k}"));
            }
        }
        if g.coeff(5) != &num_bigint::BigInt::from(1) {
            return Err(format!("minus-one series opens with {}", g.coeff(5)));
        }
        let ga = qseries::g_c_enumerated(&values[3], 60).map_err(|e| e.to_string())?;
        let gb = qseries::g_c_enumerated(&values[4], 60).map_err(|e| e.to_string())?;
        if ga != gb {
            return Err("conjugate components differ".into());
        }
        Ok(())
    })());
}

#[test]
fn criterion_08_bracket_identities() {
    report(8, "bracket identities hold to order 48", (|| {
        for id in ["4.17", "4.18", "4.19", "4.30", "4.31", "4.32", "4.37", "4.38"] {
            let rep = qseries::check_identity(id, 48).map_err(|e| e.to_string())?;
            if !rep.holds {
                return Err(format!("{id}: discrepancy at {:?}", rep.first_discrepancy));
            }
        }
        Ok(())
    })());
}

#[test]
fn criterion_09_bivariate_machinery() {
    report(9, "shift pairs and evaluation vanishings hold to order 36", (|| {
        for &(i, j) in &theta::FUNCTIONAL_PAIRS {
            if !theta::functional_equation_check(i, j, 36).map_err(|e| e.to_string())? {
                return Err(format!("pair ({i},{j})"));
            }
        }
        for id in ["4.27", "4.35", "4.39-tail.0", "4.39-tail.1"] {
            let rep = theta::check_theta_identity(id, 36).map_err(|e| e.to_string())?;
            if !rep.holds {
                return Err(format!("{id}: discrepancy at {:?}", rep.first_discrepancy));
            }
        }
        Ok(())
    })());
}

#[test]
fn criterion_10_core_of_core() {
    report(10, "s-core of a t-core stays a t-core (norm < 40)", (|| {
        for (s, t) in coprime_pairs(5, 5) {
            if !littlewood::olsson_check(s, t, 40).map_err(|e| e.to_string())? {
                return Err(format!("({s},{t})"));
            }
        }
        Ok(())
    })());
}

#[test]
fn criterion_11_simultaneous_core_counts() {
    report(11, "simultaneous core counts match the binomial formula", (|| {
        for (s, t) in coprime_pairs(9, 9) {
            if s + t > 11 {
                continue;
            }
            let set = littlewood::st_cores(s, t).map_err(|e| e.to_string())?;
            let want = gbg::nu_bound(s, t).map_err(|e| e.to_string())?;
            if set.len() as u64 != want {
                return Err(format!("({s},{t}): {} vs {want}", set.len()));
            }
        }
        for ((s, t), want) in [((2, 3), 2), ((3, 4), 5), ((4, 5), 14), ((5, 6), 42)] {
            let got = littlewood::st_cores(s, t).map_err(|e| e.to_string())?.len();
            if got != want {
                return Err(format!("({s},{t}): {got} vs {want}"));
            }
        }
        Ok(())
    })());
}

#[test]
fn criterion_12_injectivity_boundary() {
    report(12, "rank separates small simultaneous cores, fails at (4,7)", (|| {
        for (s, t) in [(3, 4), (2, 3), (5, 4)] {
            let rep = littlewood::gbg_injectivity_check(s, t).map_err(|e| e.to_string())?;
            if !rep.injective {
                return Err(format!("({s},{t}) unexpectedly collides"));
            }
        }
        let rep = littlewood::gbg_injectivity_check(4, 7).map_err(|e| e.to_string())?;
        if rep.injective {
            return Err("(4,7) unexpectedly injective".into());
        }
        let zero_fiber = rep
            .collisions
            .iter()
            .find(|(v, _)| *v == CycInt::zero(4))
            .ok_or("no collision at rank 0")?;
        let witness = Partition::parse("3,2,1").map_err(|e| e.to_string())?;
        if !zero_fiber.1.contains(&Partition::empty()) || !zero_fiber.1.contains(&witness) {
            return Err("expected witnesses missing from the zero fiber".into());
        }
        Ok(())
    })());
}

#[test]
fn criterion_13_structural_properties() {
    report(13, "bijections, norms, conjugation, split additivity, bounds", (|| {
        // core <-> vector round trips and the norm formula
        for t in 2..=5usize {
            for n in zero_sum_vectors_below(t, 30) {
                let core = n.to_core();
                if core.norm() != n.core_norm() {
                    return Err(format!("norm formula fails at {:?}", n.coords()));
                }
                if core.core_to_nvec(t).map_err(|e| e.to_string())? != n {
                    return Err(format!("vector round trip fails at {:?}", n.coords()));
                }
                // conjugation rule
                let conj = core.conjugate().core_to_nvec(t).map_err(|e| e.to_string())?;
                if conj != n.conjugate() {
                    return Err(format!("conjugation rule fails at {:?}", n.coords()));
                }
                // positive coordinates sum to the Durfee side
                let pos: i64 = n.coords().iter().filter(|&&c| c > 0).sum();
                if pos != core.durfee() as i64 {
                    return Err(format!("Durfee identity fails at {:?}", n.coords()));
                }
            }
        }
        // quotient round trips and the norm identity
        for t in 2..=5usize {
            for pi in partitions_up_to(12) {
                let d = littlewood::decompose(&pi, t).map_err(|e| e.to_string())?;
                if d.norm() != pi.norm() || littlewood::recompose(&d).map_err(|e| e.to_string())? != pi
                {
                    return Err(format!("quotient round trip fails for {pi}, t = {t}"));
                }
            }
        }
        // conjugation acts on the rank as the order-reversing automorphism
        for s in 2..=5usize {
            for pi in partitions_up_to(15) {
                let direct = gbg::gbg_direct(&pi, s).map_err(|e| e.to_string())?;
                let conj = gbg::gbg_direct(&pi.conjugate(), s).map_err(|e| e.to_string())?;
                if conj != direct.galois(s as i64 - 1).map_err(|e| e.to_string())? {
                    return Err(format!("conjugation automorphism fails for {pi}, s = {s}"));
                }
            }
        }
        // diagonal split additivity
        for s in 2..=5usize {
            for pi in partitions_up_to(20) {
                if !gbg::diagonal_additivity_check(&pi, s).map_err(|e| e.to_string())? {
                    return Err(format!("split additivity fails for {pi}, s = {s}"));
                }
            }
        }
        // mod-2 rank bounds for odd t
        for t in [3usize, 5, 7] {
            let lo = -((t as i64 - 1) / 4);
            let hi = (t as i64 + 1) / 4;
            for n in zero_sum_vectors_below(t, 30) {
                let v = gbg::gbg_mod2(&n).map_err(|e| e.to_string())?;
                if v < lo || v > hi {
                    return Err(format!("mod-2 bound fails at {:?}: {v}", n.coords()));
                }
                let direct = gbg::gbg_direct(&n.to_core(), 2).map_err(|e| e.to_string())?;
                if direct.as_integer() != Some(num_bigint::BigInt::from(v)) {
                    return Err(format!("mod-2 value mismatch at {:?}", n.coords()));
                }
            }
        }
        Ok(())
    })());
}
