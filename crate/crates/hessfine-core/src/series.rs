//! Truncated power series over the rationals, plus the catalog of
//! generating functions the verifier compares determinant sequences
//! against.
//!
//! A series knows its order: `coeffs[i]` is the coefficient of `x^i` and
//! exactly `order()` coefficients are meaningful. Arithmetic truncates to
//! the shorter operand, so precision loss is explicit rather than silent.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numeric::{rat_sqrt, rat_to_string, Integer, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    pub fn from_rationals(coeffs: Vec<Rational>) -> PowerSeries {
        PowerSeries { coeffs }
    }

    /// Polynomial coefficients, zero-padded to `order`.
    pub fn from_poly(poly: &[i64], order: usize) -> PowerSeries {
        let mut coeffs: Vec<Rational> = poly
            .iter()
            .take(order)
            .map(|&c| Rational::from(Integer::from(c)))
            .collect();
        coeffs.resize(order, Rational::zero());
        PowerSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize) -> Option<&Rational> {
        self.coeffs.get(i)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Index of the first nonzero coefficient, if any is visible.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        PowerSeries {
            coeffs: (0..order)
                .map(|i| &self.coeffs[i] + &rhs.coeffs[i])
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        PowerSeries {
            coeffs: (0..order)
                .map(|i| &self.coeffs[i] - &rhs.coeffs[i])
                .collect(),
        }
    }

    pub fn scale(&self, factor: &Rational) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn mul(&self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![Rational::zero(); order];
        for (i, a) in self.coeffs.iter().enumerate().take(order) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order - i) {
                coeffs[i + j] += a * b;
            }
        }
        PowerSeries { coeffs }
    }

    /// Truncated quotient. A common factor of `x^v` is cancelled first, so
    /// dividing by a series with positive valuation is fine as long as the
    /// numerator vanishes at least as fast. The result has order
    /// `min(orders) - v`.
    pub fn div(&self, rhs: &PowerSeries) -> Result<PowerSeries> {
        let Some(v) = rhs.valuation() else {
            return Err(Error::Domain(
                "division by a series that is zero to its whole order".into(),
            ));
        };
        if self.coeffs.iter().take(v).any(|c| !c.is_zero()) {
            return Err(Error::Domain(
                "denominator vanishes to higher order than numerator".into(),
            ));
        }
        let a = &self.coeffs[v.min(self.order())..];
        let b = &rhs.coeffs[v..];
        let order = a.len().min(b.len());
        let mut q: Vec<Rational> = Vec::with_capacity(order);
        for n in 0..order {
            let mut acc = a[n].clone();
            for (k, qk) in q.iter().enumerate() {
                acc -= qk * &b[n - k];
            }
            q.push(acc / &b[0]);
        }
        Ok(PowerSeries { coeffs: q })
    }

    /// Coefficient recurrence for the square root: with `y_0 = sqrt(a_0)`,
    /// `y_n = (a_n - sum_{k=1}^{n-1} y_k y_{n-k}) / (2 y_0)`. Requires a
    /// nonzero constant term that is a perfect rational square.
    pub fn sqrt(&self) -> Result<PowerSeries> {
        if self.order() == 0 {
            return Ok(PowerSeries { coeffs: vec![] });
        }
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::Domain(
                "square root requires a nonzero constant term".into(),
            ));
        }
        let y0 = rat_sqrt(c0).ok_or_else(|| {
            Error::Domain("constant term is not the square of a rational".into())
        })?;
        let two_y0 = &y0 + &y0;
        let mut y = vec![y0];
        for n in 1..self.order() {
            let mut acc = self.coeffs[n].clone();
            for k in 1..n {
                acc -= &y[k] * &y[n - k];
            }
            y.push(acc / &two_y0);
        }
        Ok(PowerSeries { coeffs: y })
    }

    /// Multiplication by `x^k` (k > 0) or exact division by `x^(-k)`
    /// (k < 0). Dividing demands that the dropped coefficients are zero.
    pub fn shift(&self, k: i64) -> Result<PowerSeries> {
        if k >= 0 {
            let k = k as usize;
            let mut coeffs = vec![Rational::zero(); k];
            coeffs.extend(self.coeffs.iter().cloned());
            return Ok(PowerSeries { coeffs });
        }
        let k = (-k) as usize;
        if self.order() < k || self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return Err(Error::Domain(format!(
                "cannot divide by x^{k}: low-order coefficients are not all zero"
            )));
        }
        Ok(PowerSeries {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// Coefficients rendered as exact strings, for serialization.
    pub fn coefficient_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(rat_to_string).collect()
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{}", rat_to_string(c))?,
                1 => write!(f, "{}*x", rat_to_string(c))?,
                _ => write!(f, "{}*x^{}", rat_to_string(c), i)?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order())
    }
}

// ---------------------------------------------------------------------------
// generating function catalog

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GfId {
    Catalan,
    LargeSchroeder,
    SmallSchroeder,
    Fine,
    A134425,
}

impl GfId {
    pub const ALL: [GfId; 5] = [
        GfId::Catalan,
        GfId::LargeSchroeder,
        GfId::SmallSchroeder,
        GfId::Fine,
        GfId::A134425,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            GfId::Catalan => "catalan",
            GfId::LargeSchroeder => "large-schroeder",
            GfId::SmallSchroeder => "small-schroeder",
            GfId::Fine => "fine",
            GfId::A134425 => "a134425",
        }
    }

    pub fn parse(s: &str) -> Result<GfId> {
        let norm = s.trim().to_ascii_lowercase().replace(['-', '_'], "");
        GfId::ALL
            .iter()
            .copied()
            .find(|id| id.tag().replace('-', "") == norm)
            .ok_or_else(|| Error::UnknownId(format!("generating function {s:?}")))
    }
}

/// Expands one of the closed-form generating functions to `order`
/// coefficients:
///
/// * catalan          `(1 - sqrt(1-4x)) / (2x)`
/// * large-schroeder  `(1 - x - sqrt(1-6x+x^2)) / (2x)`
/// * small-schroeder  `(1 + x - sqrt(1-6x+x^2)) / (4x)`
/// * fine             `(1 + 2x - sqrt(1-4x)) / (2(2+x))`
/// * a134425          `2 / (1 - 7x + sqrt(1-6x+x^2))`
pub fn gf_catalog(id: GfId, order: usize) -> PowerSeries {
    let half = Rational::new(Integer::one(), Integer::from(2));
    let quarter = Rational::new(Integer::one(), Integer::from(4));
    // the /x forms need one extra coefficient before shifting down
    let build = || -> Result<PowerSeries> {
        match id {
            GfId::Catalan => {
                let s = PowerSeries::from_poly(&[1, -4], order + 1).sqrt()?;
                let num = PowerSeries::from_poly(&[1], order + 1).sub(&s);
                Ok(num.shift(-1)?.scale(&half))
            }
            GfId::LargeSchroeder => {
                let s = PowerSeries::from_poly(&[1, -6, 1], order + 1).sqrt()?;
                let num = PowerSeries::from_poly(&[1, -1], order + 1).sub(&s);
                Ok(num.shift(-1)?.scale(&half))
            }
            GfId::SmallSchroeder => {
                let s = PowerSeries::from_poly(&[1, -6, 1], order + 1).sqrt()?;
                let num = PowerSeries::from_poly(&[1, 1], order + 1).sub(&s);
                Ok(num.shift(-1)?.scale(&quarter))
            }
            GfId::Fine => {
                let s = PowerSeries::from_poly(&[1, -4], order).sqrt()?;
                let num = PowerSeries::from_poly(&[1, 2], order).sub(&s);
                num.div(&PowerSeries::from_poly(&[4, 2], order))
            }
            GfId::A134425 => {
                let s = PowerSeries::from_poly(&[1, -6, 1], order).sqrt()?;
                let den = PowerSeries::from_poly(&[1, -7], order).add(&s);
                PowerSeries::from_poly(&[2], order).div(&den)
            }
        }
    };
    build().expect("catalog generating functions expand at any order")
}

// ---------------------------------------------------------------------------
// the series route to determinant sequences

/// `g(x) = sum_{i>=1} (-a0)^(i-1) a_i x^i`, the kernel series of a
/// determinant specification. Order is `entries.len() + 1` so every entry
/// contributes a visible coefficient.
pub fn g_from_spec(a0: &Integer, entries: &[Integer]) -> PowerSeries {
    let neg_a0 = -a0.clone();
    let mut coeffs = vec![Rational::zero(); entries.len() + 1];
    let mut pow = Integer::one();
    for (i, a) in entries.iter().enumerate() {
        coeffs[i + 1] = Rational::from(&pow * a);
        pow *= &neg_a0;
    }
    PowerSeries::from_rationals(coeffs)
}

/// `f = g / (1 - g)` for a kernel with zero constant term. The coefficient
/// of `x^n` in `f` is the order-n determinant of the specification behind
/// `g`, which is what makes this a checking route.
pub fn f_from_g(g: &PowerSeries) -> Result<PowerSeries> {
    if g.coeff(0).is_some_and(|c| !c.is_zero()) {
        return Err(Error::Domain(
            "kernel series must have zero constant term".into(),
        ));
    }
    let one = PowerSeries::from_poly(&[1], g.order());
    g.div(&one.sub(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences;

    fn rat(n: i64) -> Rational {
        Rational::from(Integer::from(n))
    }

    fn int_coeffs(s: &PowerSeries) -> Vec<Integer> {
        s.coeffs()
            .iter()
            .map(|c| {
                assert!(c.denom().is_one(), "expected integer coefficient");
                c.numer().clone()
            })
            .collect()
    }

    #[test]
    fn arithmetic_truncates_to_shorter_operand() {
        let a = PowerSeries::from_poly(&[1, 2, 3], 5);
        let b = PowerSeries::from_poly(&[1, 1], 3);
        assert_eq!(a.add(&b).order(), 3);
        assert_eq!(a.mul(&b).order(), 3);
        assert_eq!(
            a.mul(&b).coeffs(),
            &[rat(1), rat(3), rat(5)],
            "(1+2x+3x^2)(1+x) = 1+3x+5x^2+..."
        );
    }

    #[test]
    fn division_inverts_multiplication() {
        let a = PowerSeries::from_poly(&[1, -1], 8);
        let geometric = PowerSeries::from_poly(&[1], 8).div(&a).unwrap();
        assert_eq!(geometric.coeffs(), vec![rat(1); 8]);
        // (1 - x^2)/(1 - x) = 1 + x exactly
        let q = PowerSeries::from_poly(&[1, 0, -1], 6).div(&a).unwrap();
        assert_eq!(&q.coeffs()[..2], &[rat(1), rat(1)]);
        assert!(q.coeffs()[2..].iter().all(|c| c.is_zero()));
    }

    #[test]
    fn division_cancels_common_powers_of_x() {
        let num = PowerSeries::from_poly(&[0, 0, 1, 1], 6); // x^2 + x^3
        let den = PowerSeries::from_poly(&[0, 1], 6); // x
        let q = num.div(&den).unwrap();
        assert_eq!(q.order(), 5);
        assert_eq!(&q.coeffs()[..3], &[rat(0), rat(1), rat(1)]);
        // and refuses when the numerator does not vanish fast enough
        assert!(PowerSeries::from_poly(&[1], 4)
            .div(&den)
            .is_err());
        assert!(num
            .div(&PowerSeries::from_poly(&[0, 0, 0], 3))
            .is_err());
    }

    #[test]
    fn sqrt_squares_back() {
        let a = PowerSeries::from_poly(&[1, -4], 12);
        let s = a.sqrt().unwrap();
        assert_eq!(s.mul(&s), PowerSeries::from_poly(&[1, -4], 12));
        let b = PowerSeries::from_poly(&[1, -6, 1], 12);
        let s = b.sqrt().unwrap();
        assert_eq!(s.mul(&s), PowerSeries::from_poly(&[1, -6, 1], 12));
        assert!(PowerSeries::from_poly(&[2, 1], 4).sqrt().is_err());
        assert!(PowerSeries::from_poly(&[0, 1], 4).sqrt().is_err());
    }

    #[test]
    fn shift_round_trip() {
        let a = PowerSeries::from_poly(&[1, 2, 3], 3);
        let up = a.shift(2).unwrap();
        assert_eq!(up.order(), 5);
        assert_eq!(up.shift(-2).unwrap(), a);
        assert!(a.shift(-1).is_err());
    }

    #[test]
    fn catalog_matches_sequences() {
        let order = 15;
        assert_eq!(
            int_coeffs(&gf_catalog(GfId::Catalan, order)),
            (0..order).map(sequences::catalan).collect::<Vec<_>>()
        );
        assert_eq!(
            int_coeffs(&gf_catalog(GfId::LargeSchroeder, order)),
            (0..order)
                .map(sequences::large_schroeder)
                .collect::<Vec<_>>()
        );
        assert_eq!(
            int_coeffs(&gf_catalog(GfId::SmallSchroeder, order)),
            (0..order)
                .map(sequences::small_schroeder)
                .collect::<Vec<_>>()
        );
        assert_eq!(
            int_coeffs(&gf_catalog(GfId::Fine, order)),
            (0..order).map(sequences::fine).collect::<Vec<_>>()
        );
        let a: Vec<Integer> = int_coeffs(&gf_catalog(GfId::A134425, 5));
        assert_eq!(
            a,
            [1, 5, 27, 151, 861].map(Integer::from).to_vec()
        );
    }

    #[test]
    fn kernel_round_trip() {
        let entries: Vec<Integer> = [2, 6, 22, 90].map(Integer::from).to_vec();
        for a0 in [1i64, -1, 2] {
            let g = g_from_spec(&Integer::from(a0), &entries);
            assert!(g.coeff(0).unwrap().is_zero());
            let f = f_from_g(&g).unwrap();
            // f(1 - g) = g restricted to the common order
            let one = PowerSeries::from_poly(&[1], g.order());
            assert_eq!(f.mul(&one.sub(&g)), g);
        }
        let bad = PowerSeries::from_poly(&[1, 1], 3);
        assert!(f_from_g(&bad).is_err());
    }

    #[test]
    fn display_is_readable() {
        let a = PowerSeries::from_poly(&[1, 0, -4], 4);
        assert_eq!(a.to_string(), "1 + -4*x^2 + O(x^4)");
        assert_eq!(
            PowerSeries::from_poly(&[], 2).to_string(),
            "0 + O(x^2)"
        );
    }

    #[test]
    fn coefficient_strings_are_exact() {
        let s = PowerSeries::from_rationals(vec![
            rat(3),
            Rational::new(Integer::from(1), Integer::from(2)),
        ]);
        assert_eq!(s.coefficient_strings(), vec!["3", "1/2"]);
    }
}
