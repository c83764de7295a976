//! Truncated Laurent series in the genus parameter λ, curve classes, and
//! degree functionals.
//!
//! A [`LambdaSeries`] stores exact rational coefficients for the exponent
//! window `lowest_exponent .. truncation_order` (exclusive upper bound).
//! Negative exponents are allowed; the genus-0 multiple-cover kernel lives
//! at λ⁻². Binary operations truncate to the tightest window on which the
//! result is actually determined by the operands.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rational::{factorial, pow_u, Rational};
use crate::{Error, Result};

/// Truncated Laurent series Σ c_e λ^e over exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaSeries {
    lowest: i64,
    /// `coeffs[i]` is the coefficient of λ^(lowest + i).
    coeffs: Vec<Rational>,
}

impl LambdaSeries {
    pub fn new(lowest: i64, coeffs: Vec<Rational>) -> Self {
        LambdaSeries { lowest, coeffs }
    }

    /// The zero series on the window `lowest..truncation`.
    pub fn zero(lowest: i64, truncation: i64) -> Self {
        let len = (truncation - lowest).max(0) as usize;
        LambdaSeries {
            lowest,
            coeffs: vec![Rational::zero(); len],
        }
    }

    /// Constant series with window `0..truncation`.
    pub fn constant(value: Rational, truncation: i64) -> Self {
        let mut s = Self::zero(0, truncation);
        if !s.coeffs.is_empty() {
            s.coeffs[0] = value;
        }
        s
    }

    pub fn one(truncation: i64) -> Self {
        Self::constant(Rational::one(), truncation)
    }

    pub fn lowest_exponent(&self) -> i64 {
        self.lowest
    }

    /// Exclusive upper bound on exponents with known coefficients.
    pub fn truncation_order(&self) -> i64 {
        self.lowest + self.coeffs.len() as i64
    }

    /// Coefficient of λ^e. Zero below the window; panics at or above the
    /// truncation order, where the coefficient is unknown.
    pub fn coeff(&self, e: i64) -> Rational {
        assert!(
            e < self.truncation_order(),
            "coefficient of λ^{e} is beyond the truncation order {}",
            self.truncation_order()
        );
        if e < self.lowest {
            Rational::zero()
        } else {
            self.coeffs[(e - self.lowest) as usize].clone()
        }
    }

    pub fn set_coeff(&mut self, e: i64, value: Rational) {
        assert!(e >= self.lowest && e < self.truncation_order());
        self.coeffs[(e - self.lowest) as usize] = value;
    }

    /// Restricts the window to exponents below `truncation`.
    pub fn truncate_to(mut self, truncation: i64) -> Self {
        let len = (truncation - self.lowest).max(0) as usize;
        if len < self.coeffs.len() {
            self.coeffs.truncate(len);
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        LambdaSeries {
            lowest: self.lowest,
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Exact Cauchy product. The result window is the largest one on which
    /// every coefficient is determined: exponents below
    /// `min(a.trunc + b.lowest, b.trunc + a.lowest)`.
    pub fn mul(&self, other: &LambdaSeries) -> LambdaSeries {
        let lowest = self.lowest + other.lowest;
        let truncation = (self.truncation_order() + other.lowest)
            .min(other.truncation_order() + self.lowest);
        let mut out = LambdaSeries::zero(lowest, truncation);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= out.coeffs.len() {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }

    /// Pointwise sum on the common window.
    pub fn add(&self, other: &LambdaSeries) -> LambdaSeries {
        let lowest = self.lowest.min(other.lowest);
        let truncation = self.truncation_order().min(other.truncation_order());
        let mut out = LambdaSeries::zero(lowest, truncation);
        for e in lowest..truncation {
            let mut v = Rational::zero();
            if e >= self.lowest {
                v += self.coeff(e);
            }
            if e >= other.lowest {
                v += other.coeff(e);
            }
            out.set_coeff(e, v);
        }
        out
    }

    pub fn sub(&self, other: &LambdaSeries) -> LambdaSeries {
        self.add(&other.scale(&-Rational::one()))
    }

    /// Multiplicative inverse. The lowest exponent negates; the window
    /// shrinks to `a.trunc - 2·a.lowest`, which is where knowledge of the
    /// inverse coefficients runs out.
    pub fn invert(&self) -> Result<LambdaSeries> {
        let lead = self
            .coeffs
            .first()
            .ok_or(Error::NotInvertible)?;
        if lead.is_zero() {
            return Err(Error::NotInvertible);
        }
        let lead = lead.clone();
        let n = self.coeffs.len();
        let mut inv: Vec<Rational> = Vec::with_capacity(n);
        inv.push(Rational::one() / &lead);
        for m in 1..n {
            let mut acc = Rational::zero();
            for i in 1..=m {
                if !self.coeffs[i].is_zero() {
                    acc += &self.coeffs[i] * &inv[m - i];
                }
            }
            inv.push(-acc / &lead);
        }
        Ok(LambdaSeries {
            lowest: -self.lowest,
            coeffs: inv,
        })
    }

    /// True when the two series agree on the overlap of their windows.
    pub fn agrees_with(&self, other: &LambdaSeries) -> bool {
        let lo = self.lowest.min(other.lowest);
        let hi = self.truncation_order().min(other.truncation_order());
        (lo..hi).all(|e| {
            let a = if e < self.lowest { Rational::zero() } else { self.coeff(e) };
            let b = if e < other.lowest { Rational::zero() } else { other.coeff(e) };
            a == b
        })
    }
}

impl std::fmt::Display for LambdaSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = self.lowest + i as i64;
            if first {
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let c = if first || !c.is_negative() { c.clone() } else { -c };
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}·λ")?,
                _ => write!(f, "{c}·λ^{e}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Taylor expansion of `2·sin(mλ/2)` truncated below `order`.
///
/// The coefficient of λ^(2k+1) is `(-1)^k m^(2k+1) / (4^k (2k+1)!)`; even
/// exponents vanish. Requires `order >= 2` so the linear term is present.
pub fn two_sin_half(m: u64, order: i64) -> LambdaSeries {
    assert!(m >= 1, "cover degree must be positive");
    assert!(order >= 2, "order must be at least 2");
    let mut s = LambdaSeries::zero(1, order);
    let m_big = BigInt::from(m);
    let mut k = 0u64;
    loop {
        let e = (2 * k + 1) as i64;
        if e >= order {
            break;
        }
        let num = pow_u(&Rational::from_integer(m_big.clone()), (2 * k + 1) as u32);
        let den = Rational::from_integer(BigInt::from(4u8).pow(k as u32) * factorial(2 * k + 1));
        let mut c = num / den;
        if k % 2 == 1 {
            c = -c;
        }
        s.set_coeff(e, c);
        k += 1;
    }
    s
}

/// The multiple-cover kernel `(2 sin(mλ/2))^(2g-2)`.
///
/// Genus 1 gives the constant series 1; genus 0 uses series inversion and
/// has lowest exponent −2. Enough internal slack is carried so that the
/// returned window is exactly `2g-2 .. order`.
pub fn gv_kernel(g: u32, m: u64, order: i64) -> LambdaSeries {
    assert!(order >= 2, "order must be at least 2");
    let power = 2 * g as i64 - 2;
    match power {
        0 => LambdaSeries::one(order),
        p if p > 0 => {
            let s = two_sin_half(m, order);
            let mut acc = s.clone();
            for _ in 1..p {
                acc = acc.mul(&s);
            }
            acc.truncate_to(order)
        }
        _ => {
            // g = 0: compute 2 sin(mλ/2) three orders deep so the inverse
            // square is still valid below `order`.
            let s = two_sin_half(m, order + 3);
            s.mul(&s)
                .invert()
                .expect("sine expansion has nonzero leading term")
                .truncate_to(order)
        }
    }
}

/// Point β of the curve-class lattice, nonnegative coordinates in a fixed
/// basis of the effective classes.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CurveClass(Vec<u64>);

impl CurveClass {
    pub fn new(coords: Vec<u64>) -> Self {
        CurveClass(coords)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn scale(&self, m: u64) -> CurveClass {
        CurveClass(self.0.iter().map(|c| c * m).collect())
    }

    /// `k | β`: k divides every coordinate.
    pub fn divisible_by(&self, k: u64) -> bool {
        k >= 1 && self.0.iter().all(|c| c % k == 0)
    }

    /// Coordinatewise quotient β/k, when `k | β`.
    pub fn divided_by(&self, k: u64) -> Option<CurveClass> {
        if self.divisible_by(k) {
            Some(CurveClass(self.0.iter().map(|c| c / k).collect()))
        } else {
            None
        }
    }

    /// Upper bound for divisors: the smallest nonzero coordinate, since a
    /// divisor of β divides every nonzero coordinate. Zero for the zero
    /// class.
    pub fn divisor_bound(&self) -> u64 {
        self.0.iter().copied().filter(|&c| c > 0).min().unwrap_or(0)
    }

    /// Sum of coordinates; positive on every nonzero class, so it orders
    /// any divisor chain strictly.
    pub fn coord_sum(&self) -> u64 {
        self.0.iter().sum()
    }
}

impl std::fmt::Display for CurveClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Positive linear functional on the class lattice, used to bound the
/// multiple-cover sums.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeFunctional {
    weights: Vec<u64>,
}

impl DegreeFunctional {
    pub fn new(weights: Vec<u64>) -> Result<Self> {
        if weights.contains(&0) {
            return Err(Error::NonPositiveWeight);
        }
        Ok(DegreeFunctional { weights })
    }

    pub fn rank(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn degree(&self, class: &CurveClass) -> u64 {
        debug_assert_eq!(self.weights.len(), class.rank());
        class
            .coords()
            .iter()
            .zip(&self.weights)
            .map(|(c, w)| c * w)
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, rat};

    fn series(lowest: i64, coeffs: &[Rational]) -> LambdaSeries {
        LambdaSeries::new(lowest, coeffs.to_vec())
    }

    #[test]
    fn reciprocal_pair_multiplies_to_one() {
        // 1/λ² times λ²
        let a = series(-2, &[rat(1), rat(0), rat(0), rat(0)]);
        let b = series(2, &[rat(1), rat(0), rat(0), rat(0)]);
        let p = a.mul(&b);
        assert_eq!(p.lowest_exponent(), 0);
        assert_eq!(p.coeff(0), rat(1));
        assert_eq!(p.coeff(1), rat(0));
    }

    #[test]
    fn one_is_multiplicative_identity() {
        let a = series(1, &[rat(3), frac(-1, 24), rat(0), frac(7, 5)]);
        let p = a.mul(&LambdaSeries::one(20));
        assert!(p.agrees_with(&a));
        assert_eq!(p.truncation_order(), a.truncation_order());
    }

    #[test]
    fn sine_square_oracle() {
        // Oracle: square the sine Taylor series term by term.
        // (λ - λ³/24 + λ⁵/1920)² = λ² - λ⁴/12 + (1/1920·2 + 1/576)λ⁶ + ...
        let s = two_sin_half(1, 8);
        let sq = s.mul(&s);
        assert_eq!(sq.lowest_exponent(), 2);
        assert_eq!(sq.coeff(2), rat(1));
        assert_eq!(sq.coeff(3), rat(0));
        assert_eq!(sq.coeff(4), frac(-1, 12));
        // 2·(1/1920) + (1/24)² = 1/960 + 1/576 = 1/360
        assert_eq!(sq.coeff(6), frac(1, 360));
    }

    #[test]
    fn invert_constant() {
        let two = LambdaSeries::constant(rat(2), 6);
        let half = two.invert().unwrap();
        assert_eq!(half.coeff(0), frac(1, 2));
        assert!(half.coeff(1).is_zero());
    }

    #[test]
    fn invert_rejects_zero_leading_coefficient() {
        let z = LambdaSeries::zero(0, 4);
        assert!(matches!(z.invert(), Err(Error::NotInvertible)));
    }

    #[test]
    fn inverse_sine_square_long_division_oracle() {
        // Long-division oracle: solve (Σ a_i λ^i)(Σ d_j λ^j) = 1 by hand for
        // a = (2 sin(λ/2))² = λ² - λ⁴/12 + λ⁶/360:
        //   d₋₂ = 1, d₀ = 1/12, d₂ = 1/144 - 1/360 = 1/240.
        let s = two_sin_half(1, 10);
        let inv = s.mul(&s).invert().unwrap();
        assert_eq!(inv.lowest_exponent(), -2);
        assert_eq!(inv.coeff(-2), rat(1));
        assert_eq!(inv.coeff(-1), rat(0));
        assert_eq!(inv.coeff(0), frac(1, 12));
        assert_eq!(inv.coeff(2), frac(1, 240));
    }

    #[test]
    fn invert_is_involutive() {
        let a = series(0, &[rat(1), frac(2, 3), rat(-4), frac(5, 7), rat(0), rat(9)]);
        let back = a.invert().unwrap().invert().unwrap();
        assert!(back.agrees_with(&a));
    }

    #[test]
    fn two_sin_half_coefficients() {
        let s = two_sin_half(1, 8);
        assert_eq!(s.coeff(1), rat(1));
        assert_eq!(s.coeff(3), frac(-1, 24));
        assert_eq!(s.coeff(5), frac(1, 1920));
        let s2 = two_sin_half(2, 8);
        assert_eq!(s2.coeff(1), rat(2));
        for e in [2i64, 4, 6] {
            assert!(s.coeff(e).is_zero());
            assert!(s2.coeff(e).is_zero());
        }
    }

    #[test]
    fn kernel_genus_one_is_constant_one() {
        for m in 1..5 {
            let k = gv_kernel(1, m, 8);
            assert!(k.agrees_with(&LambdaSeries::one(8)));
        }
    }

    #[test]
    fn kernel_genus_zero_values() {
        let k = gv_kernel(0, 1, 6);
        assert_eq!(k.lowest_exponent(), -2);
        assert_eq!(k.coeff(-2), rat(1));
        assert_eq!(k.coeff(0), frac(1, 12));
        assert_eq!(k.truncation_order(), 6);
    }

    #[test]
    fn kernel_genus_two_matches_sine_square() {
        let k = gv_kernel(2, 1, 8);
        assert_eq!(k.lowest_exponent(), 2);
        assert_eq!(k.coeff(2), rat(1));
        assert_eq!(k.coeff(4), frac(-1, 12));
    }

    #[test]
    fn kernel_exponent_additivity() {
        for m in 1..=3u64 {
            for g1 in 0..=2u32 {
                for g2 in 0..=2u32 {
                    if g1 + g2 == 0 {
                        continue;
                    }
                    let lhs = gv_kernel(g1, m, 10).mul(&gv_kernel(g2, m, 10));
                    let rhs = gv_kernel(g1 + g2 - 1, m, 10);
                    assert!(lhs.agrees_with(&rhs), "g1={g1} g2={g2} m={m}");
                }
            }
        }
    }

    #[test]
    fn kernel_rescaling_in_m() {
        // coefficient at λ^e of the m-kernel is m^e times the 1-kernel's
        for g in 0..=2u32 {
            for m in [2u64, 3] {
                let k1 = gv_kernel(g, 1, 8);
                let km = gv_kernel(g, m, 8);
                let lo = km.lowest_exponent();
                for e in lo..km.truncation_order().min(k1.truncation_order()) {
                    let scale = if e >= 0 {
                        pow_u(&rat(m as i64), e as u32)
                    } else {
                        pow_u(&frac(1, m as i64), (-e) as u32)
                    };
                    assert_eq!(km.coeff(e), k1.coeff(e) * scale, "g={g} m={m} e={e}");
                }
            }
        }
    }

    #[test]
    fn curve_class_divisibility() {
        let b = CurveClass::new(vec![4, 6]);
        assert!(b.divisible_by(2));
        assert!(!b.divisible_by(4));
        assert_eq!(b.divided_by(2).unwrap(), CurveClass::new(vec![2, 3]));
        assert!(b.divided_by(5).is_none());
    }

    #[test]
    fn degree_functional_rejects_zero_weight() {
        assert!(DegreeFunctional::new(vec![1, 0]).is_err());
        let f = DegreeFunctional::new(vec![2, 3]).unwrap();
        assert_eq!(f.degree(&CurveClass::new(vec![1, 1])), 5);
    }
}
