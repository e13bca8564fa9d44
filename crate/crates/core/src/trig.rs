//! Closed-form hyperbolic plane trigonometry: equidistant arc lengths,
//! right-triangle relations, laws of cosines, and angle-defect areas.
//!
//! Inverse-trig arguments are clamped when they drift out of domain by
//! rounding amounts and rejected when the drift is large enough to indicate
//! a logic error (see [`CLAMP_LIMIT`]).

use crate::error::{Error, Result};
use crate::math;

/// Deviations beyond this are reported as errors instead of clamped.
pub const CLAMP_LIMIT: f64 = 1e-6;

fn guarded_acos(x: f64) -> Result<f64> {
    let excess = math::abs(x) - 1.0;
    if excess > CLAMP_LIMIT {
        return Err(Error::TrigDomain { value: x, excess });
    }
    Ok(math::acos(x.clamp(-1.0, 1.0)))
}

fn guarded_acosh(x: f64) -> Result<f64> {
    let deficit = 1.0 - x;
    if deficit > CLAMP_LIMIT {
        return Err(Error::TrigDomain {
            value: x,
            excess: deficit,
        });
    }
    Ok(math::acosh(x.max(1.0)))
}

/// Sides of a hyperbolic triangle; `a` is opposite vertex A and so on.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TriangleSides {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

/// Vertex selector for [`angle_from_sides`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Vertex {
    A,
    B,
    C,
}

impl TriangleSides {
    /// Requires positive sides and strict triangle inequalities.
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if !(a > 0.0 && b > 0.0 && c > 0.0)
            || a >= b + c
            || b >= a + c
            || c >= a + b
            || !(a.is_finite() && b.is_finite() && c.is_finite())
        {
            return Err(Error::TriangleInequality { a, b, c });
        }
        Ok(Self { a, b, c })
    }

    fn opposite_and_adjacent(&self, at: Vertex) -> (f64, f64, f64) {
        match at {
            Vertex::A => (self.a, self.b, self.c),
            Vertex::B => (self.b, self.c, self.a),
            Vertex::C => (self.c, self.a, self.b),
        }
    }
}

/// Length `l cosh h` of the equidistant arc at height `h` over a geodesic
/// base segment of length `l`.
pub fn equidistant_length(l: f64, h: f64) -> Result<f64> {
    if l < 0.0 || h < 0.0 {
        return Err(Error::ParamRange("equidistant arc needs l >= 0 and h >= 0"));
    }
    Ok(l * math::cosh(h))
}

/// Hypotenuse of a right triangle with legs `a` and `b`:
/// `arcosh(cosh a cosh b)`.
pub fn right_hypotenuse(a: f64, b: f64) -> Result<f64> {
    if a < 0.0 || b < 0.0 {
        return Err(Error::ParamRange("right-triangle legs must be nonnegative"));
    }
    // cosh a cosh b >= 1 always; no clamp needed beyond rounding.
    guarded_acosh(math::cosh(a) * math::cosh(b))
}

/// Leg opposite the angle `alpha` in a right triangle with the given
/// hypotenuse: `arsinh(sin alpha sinh hyp)`.
pub fn sinh_opposite(alpha: f64, hyp: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha <= core::f64::consts::FRAC_PI_2) {
        return Err(Error::ParamRange("angle must lie in (0, pi/2]"));
    }
    if hyp < 0.0 {
        return Err(Error::ParamRange("hypotenuse must be nonnegative"));
    }
    Ok(math::asinh(math::sin(alpha) * math::sinh(hyp)))
}

/// Interior angle at the chosen vertex from the three side lengths
/// (hyperbolic law of cosines):
/// `cos A = (cosh b cosh c - cosh a) / (sinh b sinh c)`.
pub fn angle_from_sides(s: &TriangleSides, at: Vertex) -> Result<f64> {
    let (a, b, c) = s.opposite_and_adjacent(at);
    let cos_a = (math::cosh(b) * math::cosh(c) - math::cosh(a)) / (math::sinh(b) * math::sinh(c));
    guarded_acos(cos_a)
}

/// Side opposite the angle `big_a` enclosed by sides `b` and `c`:
/// `arcosh(cosh b cosh c - sinh b sinh c cos A)`.
pub fn side_from_sas(b: f64, c: f64, big_a: f64) -> Result<f64> {
    if !(b > 0.0 && c > 0.0) {
        return Err(Error::ParamRange("SAS sides must be positive"));
    }
    if !(big_a > 0.0 && big_a < core::f64::consts::PI) {
        return Err(Error::ParamRange("SAS angle must lie in (0, pi)"));
    }
    let cosh_a = math::cosh(b) * math::cosh(c) - math::sinh(b) * math::sinh(c) * math::cos(big_a);
    guarded_acosh(cosh_a)
}

/// Area of the triangle by angle defect, `pi - (A + B + C)`.
///
/// Evaluated through the half-perimeter product form
/// `tan(defect/4) = sqrt(tanh(p/2) tanh((p-a)/2) tanh((p-b)/2) tanh((p-c)/2))`,
/// which agrees with the angle sum but keeps full precision for tiny
/// triangles where three acos calls would cancel.
pub fn angle_defect_area(s: &TriangleSides) -> Result<f64> {
    let p = 0.5 * (s.a + s.b + s.c);
    let prod = math::tanh(0.5 * p)
        * math::tanh(0.5 * (p - s.a))
        * math::tanh(0.5 * (p - s.b))
        * math::tanh(0.5 * (p - s.c));
    if prod < 0.0 {
        return Err(Error::TriangleInequality {
            a: s.a,
            b: s.b,
            c: s.c,
        });
    }
    Ok(4.0 * libm::atan(math::sqrt(prod)))
}
