//! Rational parametrization of the unit circle supplying exact evaluation
//! points `omega`, `sqrt(omega)` and `x`.

use num::Zero;

use super::gauss::GaussRational;
use super::{rat, Rational};

/// An exact point on the unit circle together with its chosen square root
/// and the real coordinate `x = Re(sqrt(omega))`, so `2x = sqrt(omega) +
/// conj(sqrt(omega))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CirclePoint {
    pub v: Rational,
    pub sqrt_omega: GaussRational,
    pub omega: GaussRational,
    pub x: Rational,
}

/// Map the rational parameter `v` to `sqrt(omega) = ((1 - v^2) + 2iv) /
/// (1 + v^2)`.  The image is dense in the circle; `v = 0` gives
/// `omega = 1` and `x` sweeps `(-1, 1]`.
pub fn circle_param(v: &Rational) -> CirclePoint {
    let v2 = v * v;
    let den = rat(1) + v2.clone();
    let re = (rat(1) - v2) / den.clone();
    let im = (rat(2) * v) / den;
    let sqrt_omega = GaussRational::new(re.clone(), im);
    let omega = &sqrt_omega * &sqrt_omega;
    debug_assert!(sqrt_omega.is_on_unit_circle());
    CirclePoint { v: v.clone(), sqrt_omega, omega, x: re }
}

impl CirclePoint {
    /// True when `omega = 1`, where the vertex block of the signature
    /// construction degenerates.
    pub fn is_one(&self) -> bool {
        self.v.is_zero()
    }

    /// Display-only approximation of `arg(omega)` in radians.
    pub fn theta_approx(&self) -> f64 {
        use num::ToPrimitive;
        4.0 * self.v.to_f64().unwrap_or(f64::NAN).atan()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat_frac, Rational};
    use num::One;

    #[test]
    fn endpoints() {
        let p = circle_param(&rat(0));
        assert_eq!(p.sqrt_omega, GaussRational::one());
        assert_eq!(p.omega, GaussRational::one());
        assert_eq!(p.x, rat(1));

        let p = circle_param(&rat(1));
        assert_eq!(p.sqrt_omega, GaussRational::i());
        assert_eq!(p.omega, -GaussRational::one());
        assert_eq!(p.x, rat(0));
    }

    #[test]
    fn v_half() {
        let p = circle_param(&rat_frac(1, 2));
        assert_eq!(p.sqrt_omega, GaussRational::new(rat_frac(3, 5), rat_frac(4, 5)));
        assert_eq!(p.omega, GaussRational::new(rat_frac(-7, 25), rat_frac(24, 25)));
        assert_eq!(p.x, rat_frac(3, 5));
        assert!(p.omega.is_on_unit_circle());
    }

    #[test]
    fn random_rationals_stay_on_circle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..100 {
            let p: i64 = rng.gen_range(-40..=40);
            let q: i64 = rng.gen_range(1..=40);
            let v = Rational::new(p.into(), q.into());
            let pt = circle_param(&v);
            assert!(pt.omega.is_on_unit_circle());
            assert_eq!(pt.omega, &pt.sqrt_omega * &pt.sqrt_omega);
            assert_eq!(pt.x.clone() * rat(2), pt.sqrt_omega.re.clone() * rat(2));
            assert!(pt.x > rat(-1) && pt.x <= rat(1));
        }
    }
}
