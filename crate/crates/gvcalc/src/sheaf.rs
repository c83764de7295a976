//! Hilbert-polynomial comparisons and stability audits for pure
//! dimension-1 sheaves on the thickened curves.
//!
//! A dimension-1 sheaf F has Hilbert polynomial `(L·ch₂(F))n + χ(F)`.
//! Dividing by the slope gives the reduced polynomial `n + χ/slope`;
//! (semi)stability is eventual comparison of reduced polynomials, which
//! after reduction is comparison of the constant terms.

use std::cmp::Ordering;

use num_traits::Signed;
use serde::Serialize;

use crate::ade::euler_char_chain;
use crate::rational::{format_rational, rat, Rational};
use crate::{Error, Result};

/// Degree-1 Hilbert polynomial `slope·n + chi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertPoly1D {
    pub slope: Rational,
    pub chi: Rational,
}

impl HilbertPoly1D {
    pub fn new(slope: Rational, chi: Rational) -> Self {
        HilbertPoly1D { slope, chi }
    }
}

/// Reduced Hilbert polynomial `n + constant` (leading coefficient 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedPoly {
    pub constant: Rational,
}

/// Normalizes by the slope. A nonpositive slope means the sheaf is not of
/// pure dimension 1 and is rejected.
pub fn reduced_poly(p: &HilbertPoly1D) -> Result<ReducedPoly> {
    if !p.slope.is_positive() {
        return Err(Error::NotPureDimensionOne);
    }
    Ok(ReducedPoly {
        constant: &p.chi / &p.slope,
    })
}

/// Eventual ("for large n") comparison of reduced Hilbert polynomials.
/// The leading terms agree after reduction, so only the constants matter.
pub fn compare_reduced(g: &HilbertPoly1D, f: &HilbertPoly1D) -> Result<Ordering> {
    let rg = reduced_poly(g)?;
    let rf = reduced_poly(f)?;
    Ok(rg.constant.cmp(&rf.constant))
}

/// Outcome of testing a subsheaf G against a sheaf F with χ(F) = 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum StabilityVerdict {
    /// p_G < p_F strictly; G does not destabilize.
    NotDestabilizing,
    /// Reduced polynomials are equal, which forces χ(G) = 1 and
    /// slope(G) = slope(F), i.e. G = F.
    EqualityForcesIdentity,
    /// p_G > p_F; F would not be semistable with such a subsheaf.
    Destabilizing,
}

/// Semistability test for a subsheaf of a sheaf with χ(F) = 1: compares
/// χ(G)/slope(G) against 1/slope(F). Requires slope(G) <= slope(F), as
/// holds for any subsheaf.
pub fn stability_audit_sx_beta(
    chi_g: i64,
    slope_g: &Rational,
    slope_f: &Rational,
) -> Result<StabilityVerdict> {
    if !slope_g.is_positive() || !slope_f.is_positive() {
        return Err(Error::NotPureDimensionOne);
    }
    assert!(slope_g <= slope_f, "a subsheaf cannot have larger slope");
    let lhs = rat(chi_g) / slope_g;
    let rhs = Rational::from_integer(1.into()) / slope_f;
    Ok(match lhs.cmp(&rhs) {
        Ordering::Less => StabilityVerdict::NotDestabilizing,
        Ordering::Greater => StabilityVerdict::Destabilizing,
        Ordering::Equal => {
            // χ(G)/slope(G) = 1/slope(F) with slope(G) <= slope(F) and
            // integer χ(G) forces χ(G) = 1 and equal slopes.
            assert_eq!(chi_g, 1);
            assert_eq!(slope_g, slope_f);
            StabilityVerdict::EqualityForcesIdentity
        }
    })
}

/// One comparison row of the subcurve stability audit.
#[derive(Clone, Debug, Serialize)]
pub struct SubcurveComparison {
    pub j: u32,
    /// Reduced constant of the ideal sheaf I_{C_j, C_i} (always 0).
    pub sub_constant: String,
    /// Reduced constant of O_{C_i}: 1/(i·LC).
    pub full_constant: String,
    pub strict: bool,
    pub margin: String,
}

/// Report of the subobject case analysis for O_{C_i}.
#[derive(Clone, Debug, Serialize)]
pub struct LemmaIvReport {
    pub i: u32,
    pub lc: u64,
    pub rows: Vec<SubcurveComparison>,
    /// Zero-dimensional quotients: χ drops by χ(O_Z) > 0, so they never
    /// destabilize.
    pub zero_dimensional_ok: bool,
}

impl LemmaIvReport {
    pub fn all_strict(&self) -> bool {
        self.rows.iter().all(|r| r.strict) && self.zero_dimensional_ok
    }
}

impl std::fmt::Display for LemmaIvReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "stability audit for C_{} (L·C = {}):", self.i, self.lc)?;
        if self.rows.is_empty() {
            writeln!(f, "  no proper subcurves: vacuous pass")?;
        }
        for row in &self.rows {
            writeln!(
                f,
                "  j={}: n + {} < n + {} ({}, margin {})",
                row.j,
                row.sub_constant,
                row.full_constant,
                if row.strict { "strict" } else { "NOT STRICT" },
                row.margin
            )?;
        }
        writeln!(
            f,
            "  zero-dimensional quotients: {}",
            if self.zero_dimensional_ok { "ok" } else { "FAIL" }
        )
    }
}

/// Verifies, for every proper subcurve C_j of C_i, that the reduced
/// Hilbert polynomial of the ideal sheaf I_{C_j,C_i} lies strictly below
/// that of O_{C_i}. The Euler characteristics come from the restriction
/// chain, so the ideal sheaf has χ = 0 and reduced polynomial n, while
/// O_{C_i} has reduced polynomial n + 1/(i·LC).
pub fn lemma_iv_audit(i: u32, lc: u64) -> Result<LemmaIvReport> {
    if !(1..=6).contains(&i) {
        return Err(Error::IndexOutOfRange {
            index: i as u64,
            min: 1,
            max: 6,
        });
    }
    if lc == 0 {
        return Err(Error::NotPureDimensionOne);
    }
    let chi_ci = rat(euler_char_chain(i)?);
    let full = HilbertPoly1D::new(rat((i as u64 * lc) as i64), chi_ci.clone());
    let full_reduced = reduced_poly(&full)?;
    let mut rows = Vec::new();
    for j in 1..i {
        let chi_cj = rat(euler_char_chain(j)?);
        // P_{I_{C_j,C_i}} = P_{C_i} - P_{C_j} = (i-j)(L·C) n + (χ_i - χ_j)
        let ideal = HilbertPoly1D::new(
            rat(((i - j) as u64 * lc) as i64),
            &chi_ci - &chi_cj,
        );
        let ideal_reduced = reduced_poly(&ideal)?;
        let margin = &full_reduced.constant - &ideal_reduced.constant;
        rows.push(SubcurveComparison {
            j,
            sub_constant: format_rational(&ideal_reduced.constant),
            full_constant: format_rational(&full_reduced.constant),
            strict: compare_reduced(&ideal, &full)? == Ordering::Less,
            margin: format_rational(&margin),
        });
    }
    // χ_{I_Z} = χ_{C_i} - χ(O_Z) < χ_{C_i} whenever χ(O_Z) > 0
    let zero_dimensional_ok = {
        let chi_oz = rat(1);
        &chi_ci - &chi_oz < chi_ci
    };
    Ok(LemmaIvReport {
        i,
        lc,
        rows,
        zero_dimensional_ok,
    })
}

/// The moduli space of stable sheaves at class d[C].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ModuliEnumeration {
    /// A single point, the structure sheaf of the thickened curve C_d.
    SinglePoint { d: u64 },
    /// Empty when d exceeds the length of the curve.
    Empty,
}

/// Proposition-level enumeration: one point O_{C_d} when d <= ℓ, empty
/// when d > ℓ.
pub fn moduli_enumeration(d: u64, ell: u32) -> ModuliEnumeration {
    if d >= 1 && d <= ell as u64 {
        ModuliEnumeration::SinglePoint { d }
    } else {
        ModuliEnumeration::Empty
    }
}
