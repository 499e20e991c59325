use std::ops::{Add, Sub};

use super::{GeomError, Result, Scalar, Sign};

#[derive(Clone, Debug, PartialEq)]
pub struct Point<S> {
    pub x: S,
    pub y: S,
}

impl<S: Scalar> Point<S> {
    pub fn new(x: S, y: S) -> Self {
        Point { x, y }
    }

    pub fn origin() -> Self {
        Point::new(S::zero(), S::zero())
    }

    pub fn scaled(&self, k: &S) -> Self {
        Point::new(self.x.clone() * k.clone(), self.y.clone() * k.clone())
    }

    pub fn norm_sq(&self) -> S {
        dot(self, self)
    }

    pub fn to_f64(&self) -> [f64; 2] {
        [self.x.to_f64(), self.y.to_f64()]
    }

    pub fn to_float(&self, eps: f64) -> Point<super::Float> {
        Point::new(super::Float::new(self.x.to_f64(), eps), super::Float::new(self.y.to_f64(), eps))
    }

    pub fn coincides(&self, other: &Point<S>, scale: f64) -> bool {
        squared_distance(self, other).is_zero_length_sq(scale)
    }
}

impl<S: Scalar> Add for Point<S> {
    type Output = Point<S>;
    fn add(self, rhs: Point<S>) -> Point<S> {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl<S: Scalar> Sub for Point<S> {
    type Output = Point<S>;
    fn sub(self, rhs: Point<S>) -> Point<S> {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

pub fn dot<S: Scalar>(u: &Point<S>, v: &Point<S>) -> S {
    u.x.clone() * v.x.clone() + u.y.clone() * v.y.clone()
}

pub fn cross<S: Scalar>(u: &Point<S>, v: &Point<S>) -> S {
    u.x.clone() * v.y.clone() - u.y.clone() * v.x.clone()
}

pub fn squared_distance<S: Scalar>(p: &Point<S>, q: &Point<S>) -> S {
    (q.clone() - p.clone()).norm_sq()
}

pub fn midpoint<S: Scalar>(p: &Point<S>, q: &Point<S>) -> Point<S> {
    (p.clone() + q.clone()).scaled(&S::from_ratio(1, 2))
}

/// Size of the bounding box of `points` (larger of width and height).
pub fn extent<S: Scalar>(points: &[&Point<S>]) -> f64 {
    let mut lo = [f64::INFINITY; 2];
    let mut hi = [f64::NEG_INFINITY; 2];
    for p in points {
        let c = p.to_f64();
        for k in 0..2 {
            lo[k] = lo[k].min(c[k]);
            hi[k] = hi[k].max(c[k]);
        }
    }
    (hi[0] - lo[0]).max(hi[1] - lo[1]).max(f64::MIN_POSITIVE)
}

/// Cosine of an unsigned angle in `[0, pi]`, stored in the backend's
/// monotone encoding (see [`Scalar::encode_cos`]).
#[derive(Clone, Debug, PartialEq)]
pub struct Cosine<S>(S);

impl<S: Scalar> Cosine<S> {
    pub fn from_cos(cos: S) -> Self {
        Cosine(S::encode_known_cos(cos))
    }

    pub fn encoded(&self) -> &S {
        &self.0
    }

    pub fn value(&self) -> f64 {
        self.0.decode_cos()
    }

    pub fn radians(&self) -> f64 {
        self.value().clamp(-1.0, 1.0).acos()
    }

    pub fn eq_within(&self, other: &Cosine<S>) -> bool {
        self.0.eq_within(&other.0, 1.0)
    }

    pub fn negated(&self) -> Cosine<S> {
        Cosine(-self.0.clone())
    }

    pub fn sign(&self) -> Sign {
        self.0.sign_within(1.0)
    }
}

impl Cosine<super::Float> {
    pub fn from_degrees(degrees: f64) -> Self {
        Cosine(super::Float::new(degrees.to_radians().cos(), 0.0))
    }
}

/// Cosine of the angle at `vertex` between the rays to `end1` and `end2`.
pub fn angle_cos<S: Scalar>(vertex: &Point<S>, end1: &Point<S>, end2: &Point<S>) -> Result<Cosine<S>> {
    let scale = extent(&[vertex, end1, end2]);
    let u = end1.clone() - vertex.clone();
    let v = end2.clone() - vertex.clone();
    let (uu, vv) = (u.norm_sq(), v.norm_sq());
    if uu.is_zero_length_sq(scale) || vv.is_zero_length_sq(scale) {
        return Err(GeomError::Degenerate("angle ray of zero length"));
    }
    Ok(Cosine(S::encode_cos(dot(&u, &v), uu * vv)))
}

/// Two angles in `(0, pi)` sum to `pi` iff their cosines are opposite.
pub fn supplementary<S: Scalar>(cos1: &Cosine<S>, cos2: &Cosine<S>) -> bool {
    (cos1.0.clone() + cos2.0.clone()).is_zero_within(1.0)
}

/// `u*x + v*y + w = 0` with `(u, v) != (0, 0)`.
#[derive(Clone, Debug)]
pub struct Line<S> {
    pub u: S,
    pub v: S,
    pub w: S,
}

impl<S: Scalar> Line<S> {
    pub fn new(u: S, v: S, w: S) -> Result<Self> {
        let scale = u.to_f64().abs().max(v.to_f64().abs()).max(w.to_f64().abs());
        if u.is_zero_within(scale) && v.is_zero_within(scale) {
            return Err(GeomError::Degenerate("line normal is zero"));
        }
        Ok(Line { u, v, w })
    }

    pub fn eval(&self, p: &Point<S>) -> S {
        self.u.clone() * p.x.clone() + self.v.clone() * p.y.clone() + self.w.clone()
    }

    pub fn normal_sq(&self) -> S {
        self.u.clone() * self.u.clone() + self.v.clone() * self.v.clone()
    }

    /// Signed distance; needs a square root so it is a float quantity.
    pub fn signed_distance(&self, p: &Point<S>) -> f64 {
        self.eval(p).to_f64() / self.normal_sq().to_f64().sqrt()
    }

    /// Equality up to a non-zero common factor.
    pub fn same_line(&self, other: &Line<S>) -> bool {
        let scale = [&self.u, &self.v, &self.w, &other.u, &other.v, &other.w]
            .iter()
            .map(|c| c.to_f64().abs())
            .fold(0.0, f64::max);
        let s2 = scale * scale;
        let m = |a: &S, b: &S, c: &S, d: &S| (a.clone() * d.clone() - b.clone() * c.clone()).is_zero_within(s2);
        m(&self.u, &self.v, &other.u, &other.v)
            && m(&self.u, &self.w, &other.u, &other.w)
            && m(&self.v, &self.w, &other.v, &other.w)
    }
}

pub fn line_through<S: Scalar>(p: &Point<S>, q: &Point<S>) -> Result<Line<S>> {
    let scale = extent(&[p, q]).max(p.to_f64()[0].abs()).max(p.to_f64()[1].abs());
    if p.coincides(q, scale) {
        return Err(GeomError::Degenerate("line through coincident points"));
    }
    let d = q.clone() - p.clone();
    let u = d.y.clone();
    let v = -d.x;
    let w = -(u.clone() * p.x.clone() + v.clone() * p.y.clone());
    Line::new(u, v, w)
}

pub fn line_intersection<S: Scalar>(l1: &Line<S>, l2: &Line<S>) -> Result<Point<S>> {
    let det = l1.u.clone() * l2.v.clone() - l2.u.clone() * l1.v.clone();
    let scale = l1.normal_sq().to_f64().sqrt() * l2.normal_sq().to_f64().sqrt();
    if det.is_zero_within(scale) {
        return Err(GeomError::Parallel);
    }
    let x = (l1.v.clone() * l2.w.clone() - l2.v.clone() * l1.w.clone()) / det.clone();
    let y = (l2.u.clone() * l1.w.clone() - l1.u.clone() * l2.w.clone()) / det;
    Ok(Point::new(x, y))
}

pub fn foot_of_perpendicular<S: Scalar>(p: &Point<S>, line: &Line<S>) -> Point<S> {
    let t = line.eval(p) / line.normal_sq();
    Point::new(p.x.clone() - t.clone() * line.u.clone(), p.y.clone() - t * line.v.clone())
}

/// Whether `p` lies on `line`; `scale` is the configuration size.
pub fn point_on_line<S: Scalar>(p: &Point<S>, line: &Line<S>, scale: f64) -> bool {
    let n = line.normal_sq().to_f64().sqrt();
    line.eval(p).is_zero_within(n * scale)
}

/// Internal bisector of the angle at `vertex` between rays to `end1`, `end2`.
pub fn internal_bisector_line<S: Scalar>(vertex: &Point<S>, end1: &Point<S>, end2: &Point<S>) -> Result<Line<S>> {
    let u = end1.clone() - vertex.clone();
    let v = end2.clone() - vertex.clone();
    let lu = u.norm_sq().sqrt().ok_or(GeomError::NotRepresentable("ray length"))?;
    let lv = v.norm_sq().sqrt().ok_or(GeomError::NotRepresentable("ray length"))?;
    let scale = extent(&[vertex, end1, end2]);
    if lu.is_zero_within(scale) || lv.is_zero_within(scale) {
        return Err(GeomError::Degenerate("angle ray of zero length"));
    }
    let dir = u.scaled(&(S::one() / lu)) + v.scaled(&(S::one() / lv));
    if dir.norm_sq().is_zero_within(1.0) {
        return Err(GeomError::Degenerate("straight angle has no internal bisector"));
    }
    line_through(vertex, &(vertex.clone() + dir))
}

/// The 4x4 lift determinant `det[x, y, x^2 + y^2, 1]`.
pub fn concyclicity_determinant<S: Scalar>(p1: &Point<S>, p2: &Point<S>, p3: &Point<S>, p4: &Point<S>) -> S {
    // Translating by p4 leaves the determinant unchanged and zeroes the last row.
    let rows: Vec<(S, S, S)> = [p1, p2, p3]
        .iter()
        .map(|p| {
            let d = (*p).clone() - p4.clone();
            let lift = d.norm_sq();
            (d.x, d.y, lift)
        })
        .collect();
    let (a, b, c) = (&rows[0], &rows[1], &rows[2]);
    a.0.clone() * (b.1.clone() * c.2.clone() - b.2.clone() * c.1.clone())
        - a.1.clone() * (b.0.clone() * c.2.clone() - b.2.clone() * c.0.clone())
        + a.2.clone() * (b.0.clone() * c.1.clone() - b.1.clone() * c.0.clone())
}

pub fn concyclic<S: Scalar>(p1: &Point<S>, p2: &Point<S>, p3: &Point<S>, p4: &Point<S>) -> Result<bool> {
    let pts = [p1, p2, p3, p4];
    let scale = extent(&pts);
    for i in 0..4 {
        for j in (i + 1)..4 {
            if pts[i].coincides(pts[j], scale) {
                return Err(GeomError::TooFewPoints { expected: 4 });
            }
        }
    }
    for (i, j, k) in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)] {
        let area2 = cross(&(pts[j].clone() - pts[i].clone()), &(pts[k].clone() - pts[i].clone()));
        if area2.is_zero_within(scale * scale) {
            return Err(GeomError::Degenerate("three of the four points are collinear"));
        }
    }
    Ok(concyclicity_determinant(p1, p2, p3, p4).is_zero_within(scale.powi(4)))
}

#[derive(Clone, Debug)]
pub struct Circle<S> {
    pub center: Point<S>,
    pub radius_sq: S,
}

impl<S: Scalar> Circle<S> {
    pub fn contains(&self, p: &Point<S>) -> bool {
        let scale = self.radius_sq.to_f64().abs();
        squared_distance(&self.center, p).eq_within(&self.radius_sq, scale)
    }
}

/// Mirror images across a line.
pub trait Reflect<S: Scalar>: Sized {
    fn reflect(&self, axis: &Line<S>) -> Self;
}

impl<S: Scalar> Reflect<S> for Point<S> {
    fn reflect(&self, axis: &Line<S>) -> Self {
        let t = S::from_int(2) * axis.eval(self) / axis.normal_sq();
        Point::new(
            self.x.clone() - t.clone() * axis.u.clone(),
            self.y.clone() - t * axis.v.clone(),
        )
    }
}

pub fn reflect<S: Scalar, T: Reflect<S>>(obj: &T, axis: &Line<S>) -> T {
    obj.reflect(axis)
}
