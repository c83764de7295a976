//! Conversion between Gopakumar-Vafa and Gromov-Witten invariant tables.
//!
//! The forward direction expands each GV entry n^g_β through the
//! multiple-cover kernels (2 sin(mλ/2))^(2g-2); the inverse directions
//! solve the resulting triangular system by increasing degree. Genus 0
//! admits the closed Möbius-style divisor-sum inversion
//! `N⁰_β = Σ_{k|β} n⁰_{β/k}/k³`.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use serde::Serialize;

use crate::rational::{format_rational, is_integer, rat, Rational};
use crate::series::{gv_kernel, CurveClass, DegreeFunctional, LambdaSeries};
use crate::{Error, Result};

/// Genus-indexed invariant values over a curve-class lattice.
///
/// The same shape holds GV tables (conjecturally integer n^g_β; rationals
/// are representable so failed integrality is reportable) and GW tables
/// (rational N^g_β). The zero class is excluded and genera are capped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantTable {
    rank: usize,
    degree_cap: u64,
    genus_cap: u32,
    entries: BTreeMap<(CurveClass, u32), Rational>,
}

impl InvariantTable {
    pub fn new(rank: usize, degree_cap: u64, genus_cap: u32) -> Self {
        InvariantTable {
            rank,
            degree_cap,
            genus_cap,
            entries: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn degree_cap(&self) -> u64 {
        self.degree_cap
    }

    pub fn genus_cap(&self) -> u32 {
        self.genus_cap
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn insert(&mut self, class: CurveClass, genus: u32, value: Rational) -> Result<()> {
        if class.rank() != self.rank {
            return Err(Error::RankMismatch {
                class: class.to_string(),
                expected: self.rank,
                found: class.rank(),
            });
        }
        if class.is_zero() {
            return Err(Error::ZeroClass);
        }
        if genus > self.genus_cap {
            return Err(Error::GenusCapExceeded {
                genus,
                cap: self.genus_cap,
            });
        }
        if self.entries.contains_key(&(class.clone(), genus)) {
            return Err(Error::DuplicateEntry {
                class: class.to_string(),
                genus,
            });
        }
        self.entries.insert((class, genus), value);
        Ok(())
    }

    fn add_value(&mut self, class: CurveClass, genus: u32, value: Rational) {
        let slot = self
            .entries
            .entry((class, genus))
            .or_insert_with(Rational::zero);
        *slot += value;
    }

    /// Value at (β, g), zero when absent.
    pub fn get(&self, class: &CurveClass, genus: u32) -> Rational {
        self.entries
            .get(&(class.clone(), genus))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&CurveClass, u32, &Rational)> {
        self.entries.iter().map(|((c, g), v)| (c, *g, v))
    }

    /// Support classes, each listed once.
    pub fn classes(&self) -> BTreeSet<CurveClass> {
        self.entries.keys().map(|(c, _)| c.clone()).collect()
    }

    /// Equality as functions lattice × genus → ℚ: entries absent on one
    /// side compare as zero.
    pub fn same_values(&self, other: &InvariantTable) -> bool {
        if self.rank != other.rank {
            return false;
        }
        let keys: BTreeSet<_> = self
            .entries
            .keys()
            .chain(other.entries.keys())
            .cloned()
            .collect();
        keys.iter()
            .all(|(c, g)| self.get(c, *g) == other.get(c, *g))
    }

    fn check_degrees(&self, functional: &DegreeFunctional) -> Result<()> {
        for (class, _) in self.entries.keys() {
            let degree = functional.degree(class);
            if degree > self.degree_cap {
                return Err(Error::DegreeCapExceeded {
                    class: class.to_string(),
                    degree,
                    cap: self.degree_cap,
                });
            }
        }
        Ok(())
    }

    /// Support classes together with every coordinatewise divisor, in
    /// ascending (coordinate-sum, lexicographic) order. Any divisor chain
    /// is strictly increasing for this order, which is all the triangular
    /// solves need.
    fn divisor_closure(&self) -> Vec<CurveClass> {
        let mut closure: BTreeSet<CurveClass> = BTreeSet::new();
        for class in self.classes() {
            for k in 1..=class.divisor_bound() {
                if let Some(q) = class.divided_by(k) {
                    closure.insert(q);
                }
            }
        }
        let mut ordered: Vec<CurveClass> = closure.into_iter().collect();
        ordered.sort_by_key(|c| (c.coord_sum(), c.clone()));
        ordered
    }
}

/// Series truncation matching a genus budget: enough to read λ^(2g-2)
/// for every g up to the cap.
pub fn truncation_for_genus_cap(genus_cap: u32) -> i64 {
    2 * genus_cap as i64 + 2
}

/// Forward multiple-cover expansion: GV table to GW table.
///
/// For every GV entry (β, g′) and every cover degree m with
/// `degree(mβ) <= degree_cap`, the class mβ receives
/// `n^g′_β/m · [λ^(2g-2)] (2 sin(mλ/2))^(2g′-2)` at each genus g up to
/// the cap.
pub fn gw_from_gv(gv: &InvariantTable, functional: &DegreeFunctional) -> Result<InvariantTable> {
    gv.check_degrees(functional)?;
    let order = truncation_for_genus_cap(gv.genus_cap);
    let mut out = InvariantTable::new(gv.rank, gv.degree_cap, gv.genus_cap);
    let mut kernels: BTreeMap<(u32, u64), LambdaSeries> = BTreeMap::new();
    for (beta, g_src, value) in gv.entries() {
        if value.is_zero() {
            continue;
        }
        let beta_degree = functional.degree(beta);
        let mut m = 1u64;
        while m * beta_degree <= gv.degree_cap {
            let kernel = kernels
                .entry((g_src, m))
                .or_insert_with(|| gv_kernel(g_src, m, order));
            let covered = beta.scale(m);
            let weight = value / rat(m as i64);
            for g in 0..=gv.genus_cap {
                let c = kernel.coeff(2 * g as i64 - 2);
                if !c.is_zero() {
                    out.add_value(covered.clone(), g, &weight * c);
                }
            }
            m += 1;
        }
    }
    Ok(out)
}

/// Genus-0 inversion of the divisor sum `N⁰_β = Σ_{k|β} n⁰_{β/k}/k³`.
///
/// Only genus-0 entries of the input are consulted. The solve runs over
/// the divisor closure of the support in ascending order, so every needed
/// n⁰ is already determined when subtracted.
pub fn gv_from_gw_genus0(gw: &InvariantTable) -> InvariantTable {
    let mut out = InvariantTable::new(gw.rank, gw.degree_cap, gw.genus_cap);
    let mut genus0 = InvariantTable::new(gw.rank, gw.degree_cap, gw.genus_cap);
    for (c, g, v) in gw.entries() {
        if g == 0 {
            genus0.add_value(c.clone(), 0, v.clone());
        }
    }
    for class in genus0.divisor_closure() {
        let mut value = gw.get(&class, 0);
        for k in 2..=class.divisor_bound() {
            if let Some(q) = class.divided_by(k) {
                let n = out.get(&q, 0);
                if !n.is_zero() {
                    value -= n / rat((k * k * k) as i64);
                }
            }
        }
        out.add_value(class, 0, value);
    }
    out
}

/// All-genus inversion of the multiple-cover expansion.
///
/// Classes are processed in ascending order. For each class B the
/// determined contributions of proper divisors at cover degrees m >= 2 are
/// subtracted from Σ_g N^g_B λ^(2g-2); the remainder is expanded in the
/// unitriangular kernel basis (2 sin(λ/2))^(2g-2) to read off n^g_B.
pub fn gv_from_gw_all_genus(gw: &InvariantTable) -> InvariantTable {
    let order = truncation_for_genus_cap(gw.genus_cap);
    let mut out = InvariantTable::new(gw.rank, gw.degree_cap, gw.genus_cap);
    for class in gw.divisor_closure() {
        let mut remainder = LambdaSeries::zero(-2, order);
        for g in 0..=gw.genus_cap {
            remainder.set_coeff(2 * g as i64 - 2, gw.get(&class, g));
        }
        for m in 2..=class.divisor_bound() {
            if let Some(q) = class.divided_by(m) {
                for g_src in 0..=gw.genus_cap {
                    let n = out.get(&q, g_src);
                    if !n.is_zero() {
                        let kernel = gv_kernel(g_src, m, order).scale(&(n / rat(m as i64)));
                        remainder = remainder.sub(&kernel);
                    }
                }
            }
        }
        for g in 0..=gw.genus_cap {
            let n = remainder.coeff(2 * g as i64 - 2);
            if !n.is_zero() {
                remainder = remainder.sub(&gv_kernel(g, 1, order).scale(&n));
            }
            out.add_value(class.clone(), g, n);
        }
    }
    out
}

/// One non-integer entry found by the integrality audit.
#[derive(Clone, Debug, Serialize)]
pub struct IntegralityFailure {
    pub class: Vec<u64>,
    pub genus: u32,
    pub value: String,
}

/// Result of scanning a GV table for non-integer entries.
#[derive(Clone, Debug, Serialize)]
pub struct IntegralityReport {
    pub failures: Vec<IntegralityFailure>,
}

impl IntegralityReport {
    pub fn is_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

impl std::fmt::Display for IntegralityReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_pass() {
            return write!(f, "integrality audit: PASS");
        }
        writeln!(
            f,
            "integrality audit: FAIL ({} non-integer entries)",
            self.failures.len()
        )?;
        for failure in &self.failures {
            writeln!(
                f,
                "  class ({coords}), genus {g}: {v}",
                coords = failure
                    .class
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
                g = failure.genus,
                v = failure.value
            )?;
        }
        Ok(())
    }
}

/// Lists every entry with a non-unit denominator. An empty report means
/// the integrality conjecture holds for this table.
pub fn integrality_check(gv: &InvariantTable) -> IntegralityReport {
    let failures = gv
        .entries()
        .filter(|(_, _, v)| !is_integer(v))
        .map(|(c, g, v)| IntegralityFailure {
            class: c.coords().to_vec(),
            genus: g,
            value: format_rational(v),
        })
        .collect();
    IntegralityReport { failures }
}

/// Multiplicities n₁..n_ℓ of the thickened curves C₁..C_ℓ at their Hilbert
/// scheme points; inputs to the local contribution formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalMultiplicities {
    values: Vec<i64>,
}

impl LocalMultiplicities {
    /// Length must be between 1 and 6, matching a contraction case.
    pub fn new(values: Vec<i64>) -> Result<Self> {
        if values.is_empty() || values.len() > 6 {
            return Err(Error::IndexOutOfRange {
                index: values.len() as u64,
                min: 1,
                max: 6,
            });
        }
        Ok(LocalMultiplicities { values })
    }

    pub fn length(&self) -> usize {
        self.values.len()
    }

    /// n_i, with n_i = 0 beyond the length.
    pub fn multiplicity(&self, i: u64) -> i64 {
        if i >= 1 && (i as usize) <= self.values.len() {
            self.values[i as usize - 1]
        } else {
            0
        }
    }
}

/// Contribution of a contractible curve to the genus-0 invariant at class
/// d[C]: the divisor sum `Σ_{k|d} n_{d/k}/k³`.
pub fn local_contribution(mult: &LocalMultiplicities, d: u64) -> Rational {
    assert!(d >= 1, "cover degree must be positive");
    let mut total = Rational::zero();
    for k in 1..=d {
        if d.is_multiple_of(k) {
            let n = mult.multiplicity(d / k);
            if n != 0 {
                total += rat(n) / rat((k * k * k) as i64);
            }
        }
    }
    total
}
