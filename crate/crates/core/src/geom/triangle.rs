use std::fmt;

use serde::Serialize;

use super::primitives::{angle_cos, cross, dot, extent, squared_distance, Circle, Cosine, Line, Point, Reflect};
use super::{Float, GeomError, Result, Scalar, Sign};

/// Vertex label; a side is named by the vertex opposite it (`a = BC`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Vertex {
    A,
    B,
    C,
}

impl Vertex {
    pub const ALL: [Vertex; 3] = [Vertex::A, Vertex::B, Vertex::C];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Vertex {
        Vertex::ALL[i]
    }

    /// The two other vertices, in label order.
    pub fn others(self) -> (Vertex, Vertex) {
        match self {
            Vertex::A => (Vertex::B, Vertex::C),
            Vertex::B => (Vertex::A, Vertex::C),
            Vertex::C => (Vertex::A, Vertex::B),
        }
    }

    /// The vertex that is neither `self` nor `other`.
    pub fn third(self, other: Vertex) -> Vertex {
        debug_assert_ne!(self, other);
        Vertex::from_index(3 - self.index() - other.index())
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Three labeled, strictly non-collinear points.
#[derive(Clone, Debug, PartialEq)]
pub struct Triangle<S> {
    vertices: [Point<S>; 3],
}

impl<S: Scalar> Triangle<S> {
    pub fn new(a: Point<S>, b: Point<S>, c: Point<S>) -> Result<Self> {
        let scale = extent(&[&a, &b, &c]);
        let s2 = scale * scale;
        for (p, q) in [(&a, &b), (&b, &c), (&c, &a)] {
            if squared_distance(p, q).is_zero_length_sq(scale) {
                return Err(GeomError::Degenerate("triangle has coincident vertices"));
            }
        }
        let det = cross(&(b.clone() - a.clone()), &(c.clone() - a.clone()));
        if det.is_zero_within(s2) {
            return Err(GeomError::Degenerate("collinear triangle"));
        }
        Ok(Triangle { vertices: [a, b, c] })
    }

    pub fn vertex(&self, v: Vertex) -> &Point<S> {
        &self.vertices[v.index()]
    }

    pub fn vertices(&self) -> &[Point<S>; 3] {
        &self.vertices
    }

    /// Squared length of the side opposite `v`.
    pub fn side_sq(&self, opposite: Vertex) -> S {
        let (p, q) = opposite.others();
        squared_distance(self.vertex(p), self.vertex(q))
    }

    pub fn cos_at(&self, v: Vertex) -> Cosine<S> {
        let (p, q) = v.others();
        angle_cos(self.vertex(v), self.vertex(p), self.vertex(q)).expect("non-degenerate triangle")
    }

    /// Interior angle at `v` in radians, via `atan2` for full float accuracy.
    pub fn angle_rad(&self, v: Vertex) -> f64 {
        let (p, q) = v.others();
        let u = self.vertex(p).clone() - self.vertex(v).clone();
        let w = self.vertex(q).clone() - self.vertex(v).clone();
        cross(&u, &w).to_f64().abs().atan2(dot(&u, &w).to_f64())
    }

    pub fn orientation(&self) -> Sign {
        let [a, b, c] = &self.vertices;
        cross(&(b.clone() - a.clone()), &(c.clone() - a.clone())).sign_within(self.extent().powi(2))
    }

    pub fn extent(&self) -> f64 {
        let [a, b, c] = &self.vertices;
        extent(&[a, b, c])
    }

    /// Applies `f` to every vertex; the result must still be non-degenerate.
    pub fn map_points(&self, f: impl Fn(&Point<S>) -> Point<S>) -> Result<Triangle<S>> {
        let [a, b, c] = &self.vertices;
        Triangle::new(f(a), f(b), f(c))
    }

    pub fn to_f64(&self) -> [[f64; 2]; 3] {
        [self.vertices[0].to_f64(), self.vertices[1].to_f64(), self.vertices[2].to_f64()]
    }

    /// Rounds every coordinate into the float backend.
    pub fn to_float(&self, eps: f64) -> Result<Triangle<Float>> {
        let [a, b, c] = &self.vertices;
        Triangle::new(a.to_float(eps), b.to_float(eps), c.to_float(eps))
    }
}

impl<S: Scalar> Reflect<S> for Triangle<S> {
    fn reflect(&self, axis: &Line<S>) -> Self {
        let [a, b, c] = &self.vertices;
        // Reflection is an isometry, so non-degeneracy is preserved.
        Triangle {
            vertices: [a.reflect(axis), b.reflect(axis), c.reflect(axis)],
        }
    }
}

impl<S: Scalar> Circle<S> {
    pub fn through(a: &Point<S>, b: &Point<S>, c: &Point<S>) -> Result<Circle<S>> {
        let t = Triangle::new(a.clone(), b.clone(), c.clone())?;
        Ok(circumcircle(&t))
    }
}

pub fn circumcircle<S: Scalar>(t: &Triangle<S>) -> Circle<S> {
    let [a, b, c] = t.vertices();
    // Work relative to `a` to keep magnitudes small.
    let u = b.clone() - a.clone();
    let v = c.clone() - a.clone();
    let d = S::from_int(2) * cross(&u, &v);
    let (uu, vv) = (u.norm_sq(), v.norm_sq());
    let ox = (v.y.clone() * uu.clone() - u.y.clone() * vv.clone()) / d.clone();
    let oy = (u.x.clone() * vv - v.x.clone() * uu) / d;
    let offset = Point::new(ox, oy);
    let radius_sq = offset.norm_sq();
    Circle {
        center: a.clone() + offset,
        radius_sq,
    }
}

/// Incenter `J` and the feet of the three internal bisectors on the
/// opposite sides (`A1` on `BC`, `B1` on `CA`, `C1` on `AB`).
#[derive(Clone, Debug, PartialEq)]
pub struct IncenterFeet<S> {
    pub incenter: Point<S>,
    pub a1: Point<S>,
    pub b1: Point<S>,
    pub c1: Point<S>,
}

pub fn incenter_and_bisector_feet<S: Scalar>(t: &Triangle<S>) -> Result<IncenterFeet<S>> {
    let len = |v| {
        t.side_sq(v)
            .sqrt()
            .ok_or(GeomError::NotRepresentable("side length"))
    };
    let (a, b, c) = (len(Vertex::A)?, len(Vertex::B)?, len(Vertex::C)?);
    let [pa, pb, pc] = t.vertices();
    let weighted = |wp: &S, p: &Point<S>, wq: &S, q: &Point<S>| {
        (p.scaled(wp) + q.scaled(wq)).scaled(&(S::one() / (wp.clone() + wq.clone())))
    };
    let incenter = (pa.scaled(&a) + pb.scaled(&b) + pc.scaled(&c))
        .scaled(&(S::one() / (a.clone() + b.clone() + c.clone())));
    Ok(IncenterFeet {
        incenter,
        a1: weighted(&b, pb, &c, pc),
        b1: weighted(&a, pa, &c, pc),
        c1: weighted(&a, pa, &b, pb),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{line_through, point_on_line, Exact};

    fn ep(x: i64, y: i64) -> Point<Exact> {
        Point::new(Exact::from_int(x), Exact::from_int(y))
    }

    fn er(xn: i64, xd: i64, yn: i64, yd: i64) -> Point<Exact> {
        Point::new(Exact::from_ratio(xn, xd), Exact::from_ratio(yn, yd))
    }

    fn fp(x: f64, y: f64) -> Point<Float> {
        Point::new(Float::with_default_eps(x), Float::with_default_eps(y))
    }

    #[test]
    fn rejects_collinear_and_coincident() {
        assert_eq!(
            Triangle::new(ep(0, 0), ep(1, 0), ep(2, 0)).unwrap_err(),
            GeomError::Degenerate("collinear triangle")
        );
        assert!(Triangle::new(ep(0, 0), ep(0, 0), ep(2, 1)).is_err());
        assert!(Circle::through(&ep(0, 0), &ep(1, 0), &ep(2, 0)).is_err());
    }

    #[test]
    fn circumcircle_examples() {
        let t = Triangle::new(ep(0, 0), ep(2, 0), ep(0, 2)).unwrap();
        let k = circumcircle(&t);
        assert_eq!(k.center, ep(1, 1));
        assert_eq!(k.radius_sq, Exact::from_int(2));

        let h = 3f64.sqrt() / 2.0;
        let t = Triangle::new(fp(0.0, 0.0), fp(1.0, 0.0), fp(0.5, h)).unwrap();
        let k = circumcircle(&t);
        let [x, y] = k.center.to_f64();
        assert!((x - 0.5).abs() < 1e-12);
        assert!((y - 3f64.sqrt() / 6.0).abs() < 1e-12);
        for p in t.vertices() {
            assert!(k.contains(p));
        }
    }

    #[test]
    fn incenter_of_3_4_5() {
        let t = Triangle::new(ep(0, 0), ep(4, 0), ep(0, 3)).unwrap();
        let f = incenter_and_bisector_feet(&t).unwrap();
        assert_eq!(f.incenter, ep(1, 1));
        // The bisector of the right angle at the origin is y = x, and it
        // splits BC in the ratio AB:AC = 4:3 measured from B.
        assert_eq!(f.a1, er(12, 7, 12, 7));
        assert_eq!(f.b1, er(0, 1, 4, 3));
        assert_eq!(f.c1, er(3, 2, 0, 1));
        for (v, foot) in [(Vertex::A, &f.a1), (Vertex::B, &f.b1), (Vertex::C, &f.c1)] {
            let l = line_through(t.vertex(v), foot).unwrap();
            assert!(point_on_line(&f.incenter, &l, 1.0));
        }
    }

    #[test]
    fn incenter_of_equilateral_is_centroid() {
        let h = 3f64.sqrt() / 2.0;
        let t = Triangle::new(fp(0.0, 0.0), fp(1.0, 0.0), fp(0.5, h)).unwrap();
        let j = incenter_and_bisector_feet(&t).unwrap().incenter.to_f64();
        assert!((j[0] - 0.5).abs() < 1e-12 && (j[1] - h / 3.0).abs() < 1e-12);
    }

    #[test]
    fn incenter_needs_rational_sides_in_exact_backend() {
        let t = Triangle::new(ep(0, 0), ep(1, 0), ep(0, 1)).unwrap();
        assert_eq!(
            incenter_and_bisector_feet(&t).unwrap_err(),
            GeomError::NotRepresentable("side length")
        );
    }

    #[test]
    fn vertex_helpers() {
        assert_eq!(Vertex::A.third(Vertex::C), Vertex::B);
        assert_eq!(Vertex::B.others(), (Vertex::A, Vertex::C));
        let t = Triangle::new(ep(0, 0), ep(4, 0), ep(0, 3)).unwrap();
        assert_eq!(t.side_sq(Vertex::A), Exact::from_int(25));
        assert!((t.angle_rad(Vertex::A) - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
        assert_eq!(t.orientation(), Sign::Positive);
    }
}
