//! Double-double arithmetic for the cancellation-heavy summation paths.
//!
//! A value is stored as an unevaluated sum `hi + lo` of two f64 with
//! `|lo| <= ulp(hi)/2`, giving roughly 32 significant decimal digits.
//! Only the operations the series evaluator needs are provided: field
//! arithmetic, `exp`, `ln`, and a Stirling-based `ln_gamma` for positive
//! arguments. The error model throughout is a few units in the last
//! (106-bit) place per operation; exp arguments of magnitude m carry an
//! irreducible absolute error of about `m * 2^-105`, which callers must
//! account for when they convert exponent error into term error.

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

const LN2: Dd = Dd {
    hi: 0.693_147_180_559_945_3,
    lo: 2.319_046_813_846_299_6e-17,
};

const HALF_LN_2PI: Dd = Dd {
    hi: 0.918_938_533_204_672_8,
    lo: -3.878_294_158_067_241_4e-17,
};

/// Error-free sum: returns (s, e) with s = fl(a + b) and a + b = s + e exactly.
#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

/// two_sum specialization valid when |a| >= |b|.
#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let e = b - (s - a);
    (s, e)
}

/// Error-free product via FMA: a * b = p + e exactly.
#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = a.mul_add(b, -p);
    (p, e)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    /// Exact sum of two f64, renormalized.
    #[inline]
    pub fn from_sum(a: f64, b: f64) -> Dd {
        let (hi, lo) = two_sum(a, b);
        Dd { hi, lo }
    }

    #[inline]
    pub fn add(self, other: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, other.hi);
        let e = e + self.lo + other.lo;
        let (hi, lo) = quick_two_sum(s, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn add_f64(self, other: f64) -> Dd {
        let (s, e) = two_sum(self.hi, other);
        let e = e + self.lo;
        let (hi, lo) = quick_two_sum(s, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn sub(self, other: Dd) -> Dd {
        self.add(other.neg())
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    #[inline]
    pub fn mul(self, other: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, other.hi);
        let e = e + self.hi * other.lo + self.lo * other.hi;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn mul_f64(self, other: f64) -> Dd {
        let (p, e) = two_prod(self.hi, other);
        let e = e + self.lo * other;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn div(self, other: Dd) -> Dd {
        let q0 = self.hi / other.hi;
        let r = self.sub(other.mul_f64(q0));
        let q1 = r.hi / other.hi;
        let r2 = r.sub(other.mul_f64(q1));
        let q2 = r2.hi / other.hi;
        let (hi, lo) = quick_two_sum(q0, q1);
        Dd { hi, lo }.add_f64(q2)
    }

    #[inline]
    pub fn recip(self) -> Dd {
        Dd::ONE.div(self)
    }

    /// Multiply by 2^n exactly.
    #[inline]
    fn ldexp(self, n: i32) -> Dd {
        let s = f64::powi(2.0, n);
        Dd {
            hi: self.hi * s,
            lo: self.lo * s,
        }
    }

    /// exp(self). Underflows to zero below -746, saturates to +inf above 710.
    pub fn exp(self) -> Dd {
        if self.hi < -746.0 {
            return Dd::ZERO;
        }
        if self.hi > 710.0 {
            return Dd::from_f64(f64::INFINITY);
        }
        let n = (self.hi / LN2.hi).round();
        let r = self.sub(LN2.mul_f64(n));
        // |r| <= ln2/2, so 26 Taylor terms reach below 2^-110.
        let mut sum = Dd::ONE.add(r);
        let mut term = r;
        for k in 2..=26 {
            term = term.mul(r).div(Dd::from_f64(k as f64));
            sum = sum.add(term);
            if term.hi.abs() < 1e-35 {
                break;
            }
        }
        sum.ldexp(n as i32)
    }

    /// Natural log for strictly positive finite values: one Newton step on
    /// exp from the f64 seed doubles the correct digits to full width.
    pub fn ln(self) -> Dd {
        debug_assert!(self.hi > 0.0 && self.hi.is_finite());
        let y0 = self.hi.ln();
        let e = Dd::from_f64(-y0).exp();
        let t = self.mul(e).add_f64(-1.0);
        Dd::from_f64(y0).add(t)
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }
}

/// Stirling coefficients B_{2n} / ((2n)(2n-1)) as exact integer ratios.
const STIRLING_FRACTIONS: [(f64, f64); 15] = [
    (1.0, 6.0),
    (-1.0, 30.0),
    (1.0, 42.0),
    (-1.0, 30.0),
    (5.0, 66.0),
    (-691.0, 2730.0),
    (7.0, 6.0),
    (-3617.0, 510.0),
    (43867.0, 798.0),
    (-174611.0, 330.0),
    (854513.0, 138.0),
    (-236364091.0, 2730.0),
    (8553103.0, 6.0),
    (-23749461029.0, 870.0),
    (8615841276005.0, 14322.0),
];

/// Threshold above which the Stirling tail alone is accurate to ~1e-38.
const STIRLING_MIN: f64 = 32.0;

/// ln Gamma(x) for x > 0 to double-double accuracy.
///
/// The argument is a Dd so callers can pass exactly-formed values like
/// alpha*k + beta without an f64 rounding of the argument itself. Below
/// STIRLING_MIN the argument is shifted up with
/// ln Gamma(x) = ln Gamma(x + m) - sum ln(x + i).
pub fn ln_gamma(x: Dd) -> Dd {
    debug_assert!(x.hi > 0.0 && x.hi.is_finite());
    let shift = if x.hi < STIRLING_MIN {
        (STIRLING_MIN - x.hi).ceil()
    } else {
        0.0
    };
    let y = x.add_f64(shift);
    let mut result = stirling(y);
    let mut i = 0.0;
    while i < shift {
        result = result.sub(x.add_f64(i).ln());
        i += 1.0;
    }
    result
}

/// Stirling series at y >= STIRLING_MIN:
/// (y - 1/2) ln y - y + ln(2 pi)/2 + sum_n c_n / y^(2n-1).
fn stirling(y: Dd) -> Dd {
    let ln_y = y.ln();
    let mut acc = y.add_f64(-0.5).mul(ln_y).sub(y).add(HALF_LN_2PI);
    let inv = y.recip();
    let inv2 = inv.mul(inv);
    let mut pow = inv;
    for (i, (num, den)) in STIRLING_FRACTIONS.into_iter().enumerate() {
        // Coefficient B_{2n} / ((2n)(2n-1)); both factors are exact in f64.
        let n2 = 2.0 * (i as f64 + 1.0);
        let coeff = Dd::from_f64(num).div(Dd::from_f64(den).mul_f64(n2 * (n2 - 1.0)));
        let term = pow.mul(coeff);
        acc = acc.add(term);
        if term.hi.abs() < 1e-36 * acc.hi.abs() {
            break;
        }
        pow = pow.mul(inv2);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_recovers_cancelled_bits() {
        // (1 + 1e-20) - 1 is lost in f64 but exact in double-double.
        let a = Dd::ONE.add_f64(1e-20);
        let d = a.add_f64(-1.0);
        assert_eq!(d.to_f64(), 1e-20);
    }

    #[test]
    fn mul_div_roundtrip() {
        let a = Dd::from_f64(std::f64::consts::PI);
        let b = Dd::from_f64(std::f64::consts::E);
        let r = a.mul(b).div(b).sub(a);
        assert!(r.to_f64().abs() < 1e-31);
    }

    #[test]
    fn exp_matches_f64_for_moderate_args() {
        for &x in &[-20.0, -3.2, -0.1, 0.0, 0.4, 1.0, 17.5, 300.0] {
            let e = Dd::from_f64(x).exp();
            let rel = (e.to_f64() - x.exp()).abs() / x.exp();
            assert!(rel < 1e-15, "x={x}: rel={rel:e}");
        }
    }

    #[test]
    fn exp_ln_roundtrip_to_dd_accuracy() {
        // The exp error scales with the argument magnitude |ln x| through
        // the range reduction, so the bound does too.
        for &x in &[1e-8, 0.5, 1.0, 2.5, 1e4, 1e150] {
            let l = Dd::from_f64(x).ln();
            let back = l.exp();
            let rel = back.sub(Dd::from_f64(x)).to_f64().abs() / x;
            let bound = (2.0 + l.to_f64().abs()) * 2e-30;
            assert!(rel < bound, "x={x}: rel={rel:e} bound={bound:e}");
        }
    }

    #[test]
    fn exp_hits_known_values_beyond_f64() {
        // e minus its nearest f64 is 1.4456468917292501e-16 (the decimal
        // expansion of the f64 continues ...0450907955, so the residual is
        // smaller than the 2.3536e-16 suggested by the printed digits).
        let e = Dd::ONE.exp();
        assert!((e.hi - 2.718281828459045).abs() < 1e-15);
        let tail = e.sub(Dd::from_f64(2.718281828459045)).to_f64();
        assert!((tail - 1.445_646_891_729_250_1e-16).abs() < 3e-31, "tail={tail:e}");
    }

    #[test]
    fn ln_gamma_matches_factorials() {
        // Gamma(n+1) = n!, exact in f64 for small n.
        let mut fact = 1.0f64;
        for n in 1..=20u32 {
            fact *= n as f64;
            let lg = ln_gamma(Dd::from_f64(n as f64 + 1.0));
            let rel = (lg.exp().to_f64() - fact).abs() / fact;
            assert!(rel < 1e-29, "n={n}: rel={rel:e}");
        }
    }

    #[test]
    fn ln_gamma_half_integer() {
        // ln Gamma(1/2) = ln sqrt(pi), reference split to double-double;
        // exercises the shifted-recurrence path.
        let want = Dd { hi: 0.5723649429247001, lo: 5.132975581353913e-18 };
        let got = ln_gamma(Dd::from_f64(0.5));
        let diff = got.sub(want).to_f64().abs();
        assert!(diff < 1e-29, "diff={diff:e}");
        // ln Gamma(3/2) = ln(sqrt(pi)/2).
        let want32 = Dd { hi: -0.12078223763524522, lo: -4.1797047492946264e-18 };
        let got32 = ln_gamma(Dd::from_f64(1.5));
        let diff32 = got32.sub(want32).to_f64().abs();
        assert!(diff32 < 1e-29, "diff={diff32:e}");
    }

    #[test]
    fn ln_gamma_large_argument() {
        // ln Gamma(171.5) = 709.14316303092824227... (extended precision).
        let lg = ln_gamma(Dd::from_f64(171.5)).to_f64();
        assert!((lg - 709.143_163_030_928_2).abs() < 1e-9, "lg={lg}");
    }
}
