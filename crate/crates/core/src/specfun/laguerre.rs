use serde::Serialize;

use crate::error::{domain, Result};

/// Polynomial value together with its first derivative.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PolyEval {
    pub value: f64,
    pub first_derivative: f64,
}

/// Generalized (Sonine) Laguerre polynomial `L_k^(α)(x)` and its derivative.
///
/// Uses the three-term recurrence
/// `(m+1) L_{m+1} = (2m+1+α-x) L_m - (m+α) L_{m-1}`; the derivative comes
/// from `d/dx L_k^(α) = -L_{k-1}^(α+1)`.
pub fn laguerre(k: u32, alpha: f64, x: f64) -> Result<PolyEval> {
    if !(alpha > -1.0) {
        return Err(domain(format!("laguerre requires alpha > -1, got {alpha}")));
    }
    if !(x >= 0.0) || !x.is_finite() {
        return Err(domain(format!("laguerre requires finite x >= 0, got {x}")));
    }
    let value = laguerre_value(k, alpha, x);
    let first_derivative = if k == 0 { 0.0 } else { -laguerre_value(k - 1, alpha + 1.0, x) };
    Ok(PolyEval { value, first_derivative })
}

/// The `m`-th derivative of `L_k^(α)` at `x`, using
/// `d^m/dx^m L_k^(α) = (-1)^m L_{k-m}^(α+m)`. No domain checks.
pub(crate) fn laguerre_derivative(k: u32, alpha: f64, x: f64, m: u32) -> f64 {
    if m > k {
        return 0.0;
    }
    let v = laguerre_value(k - m, alpha + m as f64, x);
    if m.is_multiple_of(2) {
        v
    } else {
        -v
    }
}

pub(crate) fn laguerre_value(k: u32, alpha: f64, x: f64) -> f64 {
    let mut prev = 1.0;
    if k == 0 {
        return prev;
    }
    let mut curr = 1.0 + alpha - x;
    for m in 1..k {
        let m = m as f64;
        let next = ((2.0 * m + 1.0 + alpha - x) * curr - (m + alpha) * prev) / (m + 1.0);
        prev = curr;
        curr = next;
    }
    curr
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    /// Double-double number (unevaluated sum hi + lo), enough to sum the
    /// alternating explicit series without cancellation losses.
    #[derive(Clone, Copy)]
    struct Dd {
        hi: f64,
        lo: f64,
    }

    impl Dd {
        fn from(x: f64) -> Self {
            Dd { hi: x, lo: 0.0 }
        }
        fn add(self, o: Dd) -> Dd {
            let s = self.hi + o.hi;
            let bb = s - self.hi;
            let err = (self.hi - (s - bb)) + (o.hi - bb);
            quick(s, err + self.lo + o.lo)
        }
        fn mul(self, o: Dd) -> Dd {
            let p = self.hi * o.hi;
            let err = self.hi.mul_add(o.hi, -p);
            quick(p, err + self.hi * o.lo + self.lo * o.hi)
        }
        fn div_f64(self, d: f64) -> Dd {
            let q1 = self.hi / d;
            let r = self.add(Dd::from(d).mul(Dd::from(-q1)));
            let q2 = r.hi / d;
            quick(q1, q2)
        }
        fn neg(self) -> Dd {
            Dd { hi: -self.hi, lo: -self.lo }
        }
    }

    fn quick(a: f64, b: f64) -> Dd {
        let s = a + b;
        Dd { hi: s, lo: b - (s - a) }
    }

    /// Explicit sum `Σ_m (-1)^m C(k+α, k-m) x^m / m!` with the generalized
    /// binomial written as a Γ-free product, accumulated in double-double.
    fn series_oracle(k: u32, alpha: f64, x: f64) -> f64 {
        let mut total = Dd::from(0.0);
        let alpha = Dd::from(alpha);
        for m in 0..=k {
            // C(k+α, k-m) = Π_{j=1}^{k-m} (m+α+j) / j
            let mut binom = Dd::from(1.0);
            for j in 1..=(k - m) {
                let factor = alpha.add(Dd::from((m + j) as f64));
                binom = binom.mul(factor).div_f64(j as f64);
            }
            let mut pow_over_fact = Dd::from(1.0);
            for j in 1..=m {
                pow_over_fact = pow_over_fact.mul(Dd::from(x)).div_f64(j as f64);
            }
            let term = binom.mul(pow_over_fact);
            total = total.add(if m % 2 == 0 { term } else { term.neg() });
        }
        total.hi + total.lo
    }

    #[test]
    fn degree_zero_and_one() {
        let p = laguerre(0, 3.7, 12.0).unwrap();
        assert_eq!(p.value, 1.0);
        assert_eq!(p.first_derivative, 0.0);
        let p = laguerre(1, 2.0, 3.0).unwrap();
        assert_eq!(p.value, 0.0);
        assert_eq!(p.first_derivative, -1.0);
    }

    #[test]
    fn degree_two_matches_series() {
        let oracle = series_oracle(2, 1.0, 2.0);
        assert_relative_eq!(oracle, -1.0, epsilon = 1e-15);
        assert_relative_eq!(laguerre(2, 1.0, 2.0).unwrap().value, -1.0, epsilon = 1e-14);
    }

    #[test]
    fn derivative_against_series_difference() {
        // derivative of the series oracle, term by term
        let (k, alpha, x) = (6u32, 0.75, 3.3);
        let h = 1e-5;
        let fd = (series_oracle(k, alpha, x + h) - series_oracle(k, alpha, x - h)) / (2.0 * h);
        assert_relative_eq!(laguerre(k, alpha, x).unwrap().first_derivative, fd, max_relative = 1e-8);
    }

    #[test]
    fn rejects_bad_alpha() {
        assert!(laguerre(3, -1.0, 1.0).is_err());
        assert!(laguerre(3, -2.5, 1.0).is_err());
        assert!(laguerre(3, 0.0, -1.0).is_err());
    }

    proptest! {
        #[test]
        fn recurrence_matches_series(k in 0u32..=20, alpha in -0.9f64..10.0, x in 0.0f64..50.0) {
            let rec = laguerre(k, alpha, x).unwrap().value;
            let ser = series_oracle(k, alpha, x);
            prop_assert!((rec - ser).abs() <= 1e-10 * ser.abs(),
                "k={k} alpha={alpha} x={x} rec={rec} ser={ser}");
        }
    }
}
