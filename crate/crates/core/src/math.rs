//! Float math shim: std intrinsics when available, libm otherwise.
//!
//! The RNG path (`crate::rng`) calls libm directly regardless of features
//! so that noise draws are bitwise identical between std and no_std builds.

#[cfg(feature = "std")]
mod imp {
    #[inline(always)]
    pub fn sqrt(x: f64) -> f64 {
        x.sqrt()
    }
    #[inline(always)]
    pub fn powf(x: f64, y: f64) -> f64 {
        x.powf(y)
    }
    #[inline(always)]
    pub fn exp(x: f64) -> f64 {
        x.exp()
    }
    #[inline(always)]
    pub fn ln(x: f64) -> f64 {
        x.ln()
    }
    #[inline(always)]
    pub fn sin(x: f64) -> f64 {
        x.sin()
    }
    #[inline(always)]
    pub fn cos(x: f64) -> f64 {
        x.cos()
    }
    #[inline(always)]
    pub fn tanh(x: f64) -> f64 {
        x.tanh()
    }
    #[inline(always)]
    pub fn abs(x: f64) -> f64 {
        x.abs()
    }
}

#[cfg(not(feature = "std"))]
mod imp {
    #[inline(always)]
    pub fn sqrt(x: f64) -> f64 {
        libm::sqrt(x)
    }
    #[inline(always)]
    pub fn powf(x: f64, y: f64) -> f64 {
        libm::pow(x, y)
    }
    #[inline(always)]
    pub fn exp(x: f64) -> f64 {
        libm::exp(x)
    }
    #[inline(always)]
    pub fn ln(x: f64) -> f64 {
        libm::log(x)
    }
    #[inline(always)]
    pub fn sin(x: f64) -> f64 {
        libm::sin(x)
    }
    #[inline(always)]
    pub fn cos(x: f64) -> f64 {
        libm::cos(x)
    }
    #[inline(always)]
    pub fn tanh(x: f64) -> f64 {
        libm::tanh(x)
    }
    #[inline(always)]
    pub fn abs(x: f64) -> f64 {
        libm::fabs(x)
    }
}

pub use imp::*;

pub const PI: f64 = core::f64::consts::PI;

/// `sign(u) |u|^r`, the odd power used by both equation families.
/// Integer and half-integer exponents take branch-free fast paths.
#[inline]
pub fn odd_power(u: f64, r: f64) -> f64 {
    if r == 1.0 {
        u
    } else if r == 2.0 {
        u * abs(u)
    } else if r == 3.0 {
        u * u * u
    } else if r == 0.5 {
        if u >= 0.0 {
            sqrt(u)
        } else {
            -sqrt(-u)
        }
    } else {
        let a = abs(u);
        if a == 0.0 {
            0.0
        } else if u > 0.0 {
            powf(a, r)
        } else {
            -powf(a, r)
        }
    }
}

/// `r |u|^{r-1}`, the derivative of [`odd_power`] in `u`.
///
/// For exponents below one the derivative blows up at the origin; callers
/// that only need an approximate Jacobian clamp `|u|` away from zero.
#[inline]
pub fn odd_power_deriv(u: f64, r: f64, floor: f64) -> f64 {
    let a = abs(u).max(floor);
    if r == 1.0 {
        1.0
    } else if r == 2.0 {
        2.0 * a
    } else if r == 3.0 {
        3.0 * a * a
    } else {
        r * powf(a, r - 1.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_power_matches_generic_pow() {
        for &r in &[1.0, 2.0, 3.0, 0.5, 1.7, 2.4] {
            for &u in &[-2.5f64, -1.0, -1e-8, 0.0, 1e-8, 0.3, 4.0] {
                let expect = if u == 0.0 {
                    0.0
                } else {
                    u.signum() * abs(u).powf(r)
                };
                let got = odd_power(u, r);
                assert!(
                    (got - expect).abs() <= 1e-15 * expect.abs().max(1.0),
                    "r={r} u={u}: {got} vs {expect}"
                );
            }
        }
    }

    #[test]
    fn odd_power_deriv_is_nonnegative_and_floored() {
        let d = odd_power_deriv(0.0, 0.5, 1e-6);
        assert!(d.is_finite() && d > 0.0);
        assert!(odd_power_deriv(-2.0, 2.0, 0.0) == 4.0);
    }
}
