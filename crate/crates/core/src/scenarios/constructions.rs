//! Constructions behind each scenario, generic over the scalar backend.

use super::{Result, ScenarioError, ScenarioTrace};
use crate::geom::{
    angle_cos, cross, dot, foot_of_perpendicular, incenter_and_bisector_feet, internal_bisector_line,
    line_intersection, line_through, midpoint, squared_distance, Circle, IncenterFeet, Line, Point, Reflect, Scalar,
    Sign, Triangle, Vertex,
};

/// Angle at `vertex` between the rays to `p` and `q`, in radians.
pub fn angle_rad<S: Scalar>(vertex: &Point<S>, p: &Point<S>, q: &Point<S>) -> f64 {
    let u = p.clone() - vertex.clone();
    let v = q.clone() - vertex.clone();
    cross(&u, &v).to_f64().abs().atan2(dot(&u, &v).to_f64())
}

fn cos_at<S: Scalar>(vertex: &Point<S>, p: &Point<S>, q: &Point<S>) -> Result<f64> {
    Ok(angle_cos(vertex, p, q)?.value())
}

/// Midpoints `F` of `BC`, `D` of `CA`, `E` of `AB`; `G` the circumcenter of
/// `FDE`; `G'` the circumcenter of `CDF`.
#[derive(Clone, Debug)]
pub struct MedialCircumcenter<S> {
    pub f: Point<S>,
    pub d: Point<S>,
    pub e: Point<S>,
    pub g: Point<S>,
    pub g_prime: Point<S>,
    pub bisector: Line<S>,
}

pub fn medial_circumcenter<S: Scalar>(t: &Triangle<S>) -> Result<MedialCircumcenter<S>> {
    let [a, b, c] = t.vertices();
    let (f, d, e) = (midpoint(b, c), midpoint(c, a), midpoint(a, b));
    let g = Circle::through(&f, &d, &e)?.center;
    let g_prime = Circle::through(c, &d, &f)?.center;
    let bisector = internal_bisector_line(c, a, b)?;
    Ok(MedialCircumcenter {
        f,
        d,
        e,
        g,
        g_prime,
        bisector,
    })
}

impl<S: Scalar> MedialCircumcenter<S> {
    /// Signed distance from `G` to the internal bisector at `C`.
    pub fn residual(&self) -> f64 {
        self.bisector.signed_distance(&self.g)
    }

    pub(super) fn record(&self, trace: &mut ScenarioTrace) -> Result<()> {
        for (label, p) in [("F", &self.f), ("D", &self.d), ("E", &self.e), ("G", &self.g), ("G'", &self.g_prime)] {
            trace.point(label, p);
        }
        trace.angle("DGF", angle_rad(&self.g, &self.d, &self.f));
        trace.residual = self.residual();
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct IncenterSegments<S> {
    pub feet: IncenterFeet<S>,
}

pub fn incenter_segments<S: Scalar>(t: &Triangle<S>) -> Result<IncenterSegments<S>> {
    Ok(IncenterSegments {
        feet: incenter_and_bisector_feet(t)?,
    })
}

impl<S: Scalar> IncenterSegments<S> {
    /// `JA1^2 - JB1^2`.
    pub fn residual(&self) -> S {
        let f = &self.feet;
        squared_distance(&f.incenter, &f.a1) - squared_distance(&f.incenter, &f.b1)
    }

    pub(super) fn record(&self, t: &Triangle<S>, trace: &mut ScenarioTrace) -> Result<()> {
        let f = &self.feet;
        for (label, p) in [("J", &f.incenter), ("A1", &f.a1), ("B1", &f.b1), ("C1", &f.c1)] {
            trace.point(label, p);
        }
        let c = t.vertex(Vertex::C);
        let (ang_a, ang_b) = (t.angle_rad(Vertex::A), t.angle_rad(Vertex::B));
        trace.angle("CB1J", angle_rad(&f.b1, c, &f.incenter));
        trace.angle("CA1J", angle_rad(&f.a1, c, &f.incenter));
        // Exterior angles of ABB1 and ABA1.
        trace.angle("A+B/2", ang_a + ang_b / 2.0);
        trace.angle("B+A/2", ang_b + ang_a / 2.0);
        trace.residual = self.residual().to_f64();
        Ok(())
    }
}

/// Rectangle `MNPQ` with `M, N` on `AB`, `P` on `BC`, `Q` on `CA`, at height
/// `fraction` of the altitude from `C`; `O` its center.
#[derive(Clone, Debug)]
pub struct InscribedRectangle<S> {
    pub m: Point<S>,
    pub n: Point<S>,
    pub p: Point<S>,
    pub q: Point<S>,
    pub o: Point<S>,
    pub fraction: S,
    triangle: Triangle<S>,
}

/// Parameter of the projection of `x` onto `AB`, with `A -> 0`, `B -> 1`.
fn along_ab<S: Scalar>(x: &Point<S>, a: &Point<S>, b: &Point<S>) -> S {
    let ab = b.clone() - a.clone();
    dot(&(x.clone() - a.clone()), &ab) / ab.norm_sq()
}

pub fn inscribed_rectangle<S: Scalar>(t: &Triangle<S>, fraction: S) -> Result<InscribedRectangle<S>> {
    let one = S::one();
    if fraction.sign_within(1.0) != Sign::Positive || (one.clone() - fraction.clone()).sign_within(1.0) != Sign::Positive {
        return Err(ScenarioError::InvalidHeight(fraction.to_f64()));
    }
    let [a, b, c] = t.vertices();
    let q = a.clone() + (c.clone() - a.clone()).scaled(&fraction);
    let p = b.clone() + (c.clone() - b.clone()).scaled(&fraction);
    let base = line_through(a, b)?;
    let (m, n) = (foot_of_perpendicular(&q, &base), foot_of_perpendicular(&p, &base));
    let on_segment = |x: &Point<S>| {
        let s = along_ab(x, a, b);
        s.sign_within(1.0) != Sign::Negative && (one.clone() - s).sign_within(1.0) != Sign::Negative
    };
    if !on_segment(&m) || !on_segment(&n) {
        return Err(ScenarioError::FeetOffSegment);
    }
    let o = midpoint(&m, &p);
    Ok(InscribedRectangle {
        m,
        n,
        p,
        q,
        o,
        fraction,
        triangle: t.clone(),
    })
}

/// Height fraction at which the inscribed rectangle is a square:
/// `c / (c + h)` for base `c` and altitude `h`.
pub fn square_fraction<S: Scalar>(t: &Triangle<S>) -> Result<S> {
    let [a, b, c] = t.vertices();
    let base = line_through(a, b)?;
    let h_sq = squared_distance(c, &foot_of_perpendicular(c, &base));
    let h = h_sq.sqrt().ok_or(crate::geom::GeomError::NotRepresentable("altitude"))?;
    let len = t
        .side_sq(Vertex::C)
        .sqrt()
        .ok_or(crate::geom::GeomError::NotRepresentable("side length"))?;
    Ok(len.clone() / (len + h))
}

pub fn inscribed_square<S: Scalar>(t: &Triangle<S>) -> Result<InscribedRectangle<S>> {
    // Feet leave the segment for obtuse base angles; report that before the
    // altitude computation can fail for other reasons.
    let [a, b, c] = t.vertices();
    let s = along_ab(c, a, b);
    if s.sign_within(1.0) == Sign::Negative || (S::one() - s).sign_within(1.0) == Sign::Negative {
        return Err(ScenarioError::FeetOffSegment);
    }
    inscribed_rectangle(t, square_fraction(t)?)
}

impl<S: Scalar> InscribedRectangle<S> {
    /// `cos(ACO) - cos(BCO)`.
    pub fn residual(&self) -> Result<f64> {
        let [a, b, c] = self.triangle.vertices();
        Ok(cos_at(c, a, &self.o)? - cos_at(c, b, &self.o)?)
    }

    pub(super) fn record(&self, t: &Triangle<S>, trace: &mut ScenarioTrace) -> Result<()> {
        for (label, p) in [("M", &self.m), ("N", &self.n), ("P", &self.p), ("Q", &self.q), ("O", &self.o)] {
            trace.point(label, p);
        }
        let [a, b, c] = t.vertices();
        trace.angle("ACO", angle_rad(c, a, &self.o));
        trace.angle("BCO", angle_rad(c, b, &self.o));
        trace.angle("CQO", angle_rad(&self.q, c, &self.o));
        trace.angle("CPO", angle_rad(&self.p, c, &self.o));
        trace.angle("QOP", angle_rad(&self.o, &self.q, &self.p));
        trace.residual = self.residual()?;
        Ok(())
    }
}

/// Bisector feet `A1`, `B1`, incenter `J`, the mirror image `A'` of `A1` in
/// `BB1`, `E = A1B1 ∩ CJ` and `C1 = CJ ∩ AB`.
#[derive(Clone, Debug)]
pub struct Bisector30<S> {
    pub feet: IncenterFeet<S>,
    pub a_prime: Point<S>,
    triangle: Triangle<S>,
}

pub fn bisector_30<S: Scalar>(t: &Triangle<S>) -> Result<Bisector30<S>> {
    let feet = incenter_and_bisector_feet(t)?;
    let axis = line_through(t.vertex(Vertex::B), &feet.b1)?;
    let a_prime = feet.a1.reflect(&axis);
    Ok(Bisector30 {
        feet,
        a_prime,
        triangle: t.clone(),
    })
}

impl<S: Scalar> Bisector30<S> {
    /// `cos(BB1A1) - cos(30deg)`.
    pub fn residual(&self) -> Result<f64> {
        let b = self.triangle.vertex(Vertex::B);
        Ok(cos_at(&self.feet.b1, b, &self.feet.a1)? - 3f64.sqrt() / 2.0)
    }

    pub fn e(&self) -> Result<Point<S>> {
        let c = self.triangle.vertex(Vertex::C);
        Ok(line_intersection(
            &line_through(&self.feet.a1, &self.feet.b1)?,
            &line_through(c, &self.feet.incenter)?,
        )?)
    }

    pub(super) fn record(&self, t: &Triangle<S>, trace: &mut ScenarioTrace) -> Result<()> {
        let f = &self.feet;
        for (label, p) in [("J", &f.incenter), ("A1", &f.a1), ("B1", &f.b1), ("C1", &f.c1), ("A'", &self.a_prime)] {
            trace.point(label, p);
        }
        if let Ok(e) = self.e() {
            trace.point("E", &e);
        }
        let [a, b, c] = t.vertices();
        let half = |v| t.angle_rad(v) / 2.0;
        trace.angle("BB1A1", angle_rad(&f.b1, b, &f.a1));
        trace.angle("AB1A1", angle_rad(&f.b1, a, &f.a1));
        trace.angle("AA'A1", angle_rad(&self.a_prime, a, &f.a1));
        trace.angle("CA1B1", angle_rad(&f.a1, c, &f.b1));
        trace.angle("120+C/2-A/2", 120f64.to_radians() + half(Vertex::C) - half(Vertex::A));
        trace.angle("90+B/2", 90f64.to_radians() + half(Vertex::B));
        trace.residual = self.residual()?;
        Ok(())
    }
}
