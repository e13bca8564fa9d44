//! Klein (projective) model conversions and the Euclidean homothety of the
//! Klein ball with its exact length-distortion factors.
//!
//! A homothety of coefficient `lambda <= 1` centered at the Klein origin is a
//! map of H^3 that contracts radial tangent vectors by
//! `f_lambda(rho) = lambda (1 - rho^2) / (1 - lambda^2 rho^2)` and
//! perpendicular ones by
//! `g_lambda(rho) = lambda sqrt(1 - rho^2) / sqrt(1 - lambda^2 rho^2)`,
//! where `rho` is the Euclidean Klein radius of the point. Since both factors
//! decrease in `rho` and `f <= g`, the length of any curve inside a ball of
//! Klein radius `rho_B` shrinks by at most `f_lambda(rho_B)`.

use crate::error::{Error, Result};
use crate::hyperboloid::{HPoint, Vec4};
use crate::math;

/// A point of the Klein unit-ball model.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct KleinPoint {
    pub y1: f64,
    pub y2: f64,
    pub y3: f64,
}

impl KleinPoint {
    pub fn new(y1: f64, y2: f64, y3: f64) -> Result<Self> {
        let norm_sq = y1 * y1 + y2 * y2 + y3 * y3;
        if !(norm_sq < 1.0) {
            return Err(Error::OutsideKleinBall { norm_sq });
        }
        Ok(Self { y1, y2, y3 })
    }

    /// Euclidean norm of the radius vector.
    pub fn radius(&self) -> f64 {
        math::sqrt(self.y1 * self.y1 + self.y2 * self.y2 + self.y3 * self.y3)
    }

    pub fn scale(&self, s: f64) -> KleinPoint {
        KleinPoint {
            y1: self.y1 * s,
            y2: self.y2 * s,
            y3: self.y3 * s,
        }
    }
}

/// Central projection of the hyperboloid onto the Klein ball, `y_i = x_i/x0`.
pub fn to_klein(p: &HPoint) -> KleinPoint {
    let v = p.vec();
    KleinPoint {
        y1: v.x1 / v.x0,
        y2: v.x2 / v.x0,
        y3: v.x3 / v.x0,
    }
}

/// Inverse of [`to_klein`].
pub fn from_klein(k: &KleinPoint) -> Result<HPoint> {
    let norm_sq = k.y1 * k.y1 + k.y2 * k.y2 + k.y3 * k.y3;
    if !(norm_sq < 1.0) {
        return Err(Error::OutsideKleinBall { norm_sq });
    }
    let x0 = 1.0 / math::sqrt(1.0 - norm_sq);
    HPoint::new(
        Vec4::new(x0, k.y1 * x0, k.y2 * x0, k.y3 * x0),
        1e-6,
    )
}

/// Parameters of a Euclidean homothety of the Klein ball: coefficient
/// `lambda` in (0, 1] and the Euclidean radius `rho_b` in (0, 1) of the ball
/// the transform is applied within.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct HomothetyParams {
    pub lambda: f64,
    pub rho_b: f64,
}

impl HomothetyParams {
    pub fn new(lambda: f64, rho_b: f64) -> Result<Self> {
        if !(lambda > 0.0 && lambda <= 1.0) {
            return Err(Error::ParamRange("homothety coefficient must be in (0, 1]"));
        }
        if !(rho_b > 0.0 && rho_b < 1.0) {
            return Err(Error::ParamRange("ball radius must be in (0, 1)"));
        }
        Ok(Self { lambda, rho_b })
    }
}

fn check_factor_domain(lambda: f64, rho: f64) -> Result<()> {
    if !(lambda > 0.0 && lambda <= 1.0) {
        return Err(Error::ParamRange("homothety coefficient must be in (0, 1]"));
    }
    if !(rho >= 0.0 && rho < 1.0) {
        return Err(Error::ParamRange("Klein radius must be in [0, 1)"));
    }
    Ok(())
}

/// Radial distortion factor `f_lambda(rho) = lambda (1-rho^2)/(1-lambda^2 rho^2)`.
pub fn radial_factor(lambda: f64, rho: f64) -> Result<f64> {
    check_factor_domain(lambda, rho)?;
    Ok(lambda * (1.0 - rho * rho) / (1.0 - lambda * lambda * rho * rho))
}

/// Perpendicular distortion factor
/// `g_lambda(rho) = lambda sqrt(1-rho^2)/sqrt(1-lambda^2 rho^2)`.
pub fn perp_factor(lambda: f64, rho: f64) -> Result<f64> {
    check_factor_domain(lambda, rho)?;
    Ok(lambda * math::sqrt(1.0 - rho * rho) / math::sqrt(1.0 - lambda * lambda * rho * rho))
}

/// Applies the homothety to a point inside the declared ball.
pub fn homothety_apply(params: &HomothetyParams, p: &HPoint) -> Result<HPoint> {
    let k = to_klein(p);
    let rho = k.radius();
    if rho > params.rho_b {
        return Err(Error::OutsideDeclaredBall {
            rho,
            rho_b: params.rho_b,
        });
    }
    if params.lambda == 1.0 {
        return Ok(*p);
    }
    from_klein(&k.scale(params.lambda))
}

/// Guaranteed lower bound `f_lambda(rho_B) * length` on the length of the
/// homothety image of a curve of the given length inside the ball.
pub fn curve_length_lower_bound(params: &HomothetyParams, length: f64) -> Result<f64> {
    if length < 0.0 {
        return Err(Error::ParamRange("curve length must be nonnegative"));
    }
    Ok(radial_factor(params.lambda, params.rho_b)? * length)
}

/// Hyperboloid point and velocity of the straight Klein chord
/// `a + t (b - a)`, for feeding the arclength quadrature.
pub fn klein_chord_state(a: &KleinPoint, b: &KleinPoint, t: f64) -> (Vec4, Vec4) {
    let k = [
        a.y1 + t * (b.y1 - a.y1),
        a.y2 + t * (b.y2 - a.y2),
        a.y3 + t * (b.y3 - a.y3),
    ];
    let dk = [b.y1 - a.y1, b.y2 - a.y2, b.y3 - a.y3];
    let s = 1.0 - (k[0] * k[0] + k[1] * k[1] + k[2] * k[2]);
    let kdk = k[0] * dk[0] + k[1] * dk[1] + k[2] * dk[2];
    let inv = 1.0 / math::sqrt(s);
    let pos = Vec4::new(inv, k[0] * inv, k[1] * inv, k[2] * inv);
    // d/dt of (1, k)/sqrt(s): (0, dk)/sqrt(s) + (1, k) kdk / s^{3/2}.
    let c = kdk / (s * math::sqrt(s));
    let vel = Vec4::new(
        c,
        dk[0] * inv + k[0] * c,
        dk[1] * inv + k[1] * c,
        dk[2] * inv + k[2] * c,
    );
    (pos, vel)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperboloid::{dist, HPoint, Vec4};
    use crate::quadrature::curve_length;
    use crate::testutil::{random_hpoint, rng};
    use proptest::prelude::*;
    use rand::Rng;

    #[test]
    fn base_point_maps_to_origin() {
        let k = to_klein(&HPoint::origin());
        assert_eq!((k.y1, k.y2, k.y3), (0.0, 0.0, 0.0));
    }

    #[test]
    fn probe_point_projection() {
        let p = HPoint::new(Vec4::new(2f64.sqrt(), 1.0, 0.0, 0.0), 1e-9).unwrap();
        let k = to_klein(&p);
        assert!((k.y1 - 1.0 / 2f64.sqrt()).abs() < 1e-12);
        assert_eq!((k.y2, k.y3), (0.0, 0.0));
    }

    #[test]
    fn round_trip_on_random_points() {
        let mut rng = rng(41);
        for _ in 0..100 {
            let p = random_hpoint(&mut rng);
            let q = from_klein(&to_klein(&p)).unwrap();
            // Componentwise identity, relative to the point's cosh scale.
            let scale = p.vec().x0.max(1.0);
            assert!((p.vec() - q.vec()).max_abs() < 1e-12 * scale * scale);
        }
    }

    #[test]
    fn radial_factor_values() {
        assert!((radial_factor(0.5, 0.0).unwrap() - 0.5).abs() < 1e-15);
        assert!((radial_factor(1.0, 0.7).unwrap() - 1.0).abs() < 1e-15);
        // 0.5 * 0.75 / 0.9375
        assert!((radial_factor(0.5, 0.5).unwrap() - 0.4).abs() < 1e-15);
    }

    #[test]
    fn perp_factor_values() {
        assert!((perp_factor(0.5, 0.0).unwrap() - 0.5).abs() < 1e-15);
        assert!((perp_factor(1.0, 0.9).unwrap() - 1.0).abs() < 1e-15);
    }

    proptest! {
        #[test]
        fn perp_squared_is_lambda_times_radial(
            lambda in 0.05f64..1.0,
            rho in 0.0f64..0.99,
        ) {
            let f = radial_factor(lambda, rho).unwrap();
            let g = perp_factor(lambda, rho).unwrap();
            prop_assert!((g * g - lambda * f).abs() < 1e-12);
        }

        #[test]
        fn factors_are_ordered(
            lambda in 0.05f64..=1.0,
            rho in 0.0f64..0.99,
        ) {
            let f = radial_factor(lambda, rho).unwrap();
            let g = perp_factor(lambda, rho).unwrap();
            prop_assert!(f <= g + 1e-15);
            prop_assert!(g <= 1.0 + 1e-15);
        }
    }

    #[test]
    fn factors_decrease_in_rho() {
        // Grid check of monotonicity on [0, rho_b].
        for &lambda in &[0.3, 0.6, 0.9, 1.0] {
            let mut prev_f = f64::INFINITY;
            let mut prev_g = f64::INFINITY;
            for i in 0..=1000 {
                let rho = 0.95 * i as f64 / 1000.0;
                let f = radial_factor(lambda, rho).unwrap();
                let g = perp_factor(lambda, rho).unwrap();
                assert!(f <= prev_f + 1e-15);
                assert!(g <= prev_g + 1e-15);
                prev_f = f;
                prev_g = g;
            }
        }
    }

    #[test]
    fn homothety_identity_and_center() {
        let params = HomothetyParams::new(1.0, 0.9).unwrap();
        let p = HPoint::from_space(0.4, -0.1, 0.2);
        assert_eq!(homothety_apply(&params, &p).unwrap(), p);

        let params = HomothetyParams::new(0.37, 0.9).unwrap();
        let o = HPoint::origin();
        assert!(dist(&homothety_apply(&params, &o).unwrap(), &o) < 1e-15);
    }

    #[test]
    fn homothety_contracts_radial_distance() {
        // Klein (0.5, 0, 0) at lambda = 1/2 lands at (0.25, 0, 0); radial
        // hyperbolic distances are artanh of the Klein radius.
        let params = HomothetyParams::new(0.5, 0.8).unwrap();
        let p = from_klein(&KleinPoint::new(0.5, 0.0, 0.0).unwrap()).unwrap();
        let q = homothety_apply(&params, &p).unwrap();
        let k = to_klein(&q);
        assert!((k.y1 - 0.25).abs() < 1e-12);
        let o = HPoint::origin();
        assert!((dist(&o, &p) - 0.5f64.atanh()).abs() < 1e-12);
        assert!((dist(&o, &q) - 0.25f64.atanh()).abs() < 1e-12);
    }

    #[test]
    fn homothety_rejects_points_outside_ball() {
        let params = HomothetyParams::new(0.5, 0.3).unwrap();
        let p = from_klein(&KleinPoint::new(0.5, 0.0, 0.0).unwrap()).unwrap();
        assert!(matches!(
            homothety_apply(&params, &p),
            Err(Error::OutsideDeclaredBall { .. })
        ));
    }

    #[test]
    fn chord_quadrature_matches_endpoint_distance() {
        let mut rng = rng(42);
        for _ in 0..20 {
            let a = KleinPoint::new(
                rng.gen_range(-0.5..0.5),
                rng.gen_range(-0.5..0.5),
                rng.gen_range(-0.5..0.5),
            )
            .unwrap();
            let b = KleinPoint::new(
                rng.gen_range(-0.5..0.5),
                rng.gen_range(-0.5..0.5),
                rng.gen_range(-0.5..0.5),
            )
            .unwrap();
            let len = curve_length(|t| klein_chord_state(&a, &b, t), 0.0, 1.0, 1e-9);
            let d = dist(&from_klein(&a).unwrap(), &from_klein(&b).unwrap());
            assert!((len - d).abs() < 1e-7, "len {len} vs dist {d}");
        }
    }

    #[test]
    fn curve_bound_trivial_cases() {
        let params = HomothetyParams::new(1.0, 0.9).unwrap();
        assert!((curve_length_lower_bound(&params, 3.2).unwrap() - 3.2).abs() < 1e-15);
        let params = HomothetyParams::new(0.7, 0.9).unwrap();
        assert_eq!(curve_length_lower_bound(&params, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn homothety_image_length_respects_bound() {
        // Chords inside the rho_b ball: the measured image length must stay
        // above f_lambda(rho_b) times the original length.
        let mut rng = rng(43);
        for _ in 0..60 {
            let lambda = rng.gen_range(0.5..1.0);
            let params = HomothetyParams::new(lambda, 0.9).unwrap();
            let (a, b) = loop {
                let a = KleinPoint::new(
                    rng.gen_range(-0.6..0.6),
                    rng.gen_range(-0.6..0.6),
                    rng.gen_range(-0.6..0.6),
                )
                .unwrap();
                let b = KleinPoint::new(
                    rng.gen_range(-0.6..0.6),
                    rng.gen_range(-0.6..0.6),
                    rng.gen_range(-0.6..0.6),
                )
                .unwrap();
                if a.radius() < 0.9 && b.radius() < 0.9 {
                    break (a, b);
                }
            };
            let orig = curve_length(|t| klein_chord_state(&a, &b, t), 0.0, 1.0, 1e-9);
            let (la, lb) = (a.scale(lambda), b.scale(lambda));
            let image = curve_length(|t| klein_chord_state(&la, &lb, t), 0.0, 1.0, 1e-9);
            let bound = curve_length_lower_bound(&params, orig).unwrap();
            assert!(
                image >= bound - 1e-6,
                "image {image} below bound {bound} (lambda {lambda})"
            );
        }
    }

    #[test]
    fn example_bound_value() {
        // lambda = 0.9, rho_b = 0.8: f = 0.9 * 0.36 / 0.4816.
        let params = HomothetyParams::new(0.9, 0.8).unwrap();
        let b = curve_length_lower_bound(&params, 2.0).unwrap();
        assert!((b - 2.0 * (0.9 * 0.36 / 0.4816)).abs() < 1e-12);
        assert!((b - 1.345).abs() < 2e-3);
    }
}
