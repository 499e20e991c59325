use super::primitives::{cross, dot, extent, squared_distance, Point};
use super::{GeomError, Result, Scalar};

/// `p -> R(theta) * M * p + t`, where `M` mirrors across the x-axis when
/// `mirror` is set. Rotation is stored as a `(cos, sin)` pair so rational
/// isometries stay exact.
#[derive(Clone, Debug, PartialEq)]
pub struct Isometry<S> {
    pub cos: S,
    pub sin: S,
    pub translation: Point<S>,
    pub mirror: bool,
}

impl<S: Scalar> Isometry<S> {
    pub fn identity() -> Self {
        Isometry {
            cos: S::one(),
            sin: S::zero(),
            translation: Point::origin(),
            mirror: false,
        }
    }

    pub fn new(cos: S, sin: S, translation: Point<S>, mirror: bool) -> Result<Self> {
        let iso = Isometry {
            cos,
            sin,
            translation,
            mirror,
        };
        if !iso.is_valid() {
            return Err(GeomError::Degenerate("rotation pair is not on the unit circle"));
        }
        Ok(iso)
    }

    /// `cos^2 + sin^2 = 1`.
    pub fn is_valid(&self) -> bool {
        (self.cos.clone() * self.cos.clone() + self.sin.clone() * self.sin.clone()).eq_within(&S::one(), 1.0)
    }

    fn linear(&self, p: &Point<S>) -> Point<S> {
        let y = if self.mirror { -p.y.clone() } else { p.y.clone() };
        Point::new(
            self.cos.clone() * p.x.clone() - self.sin.clone() * y.clone(),
            self.sin.clone() * p.x.clone() + self.cos.clone() * y,
        )
    }

    pub fn apply(&self, p: &Point<S>) -> Point<S> {
        self.linear(p) + self.translation.clone()
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Isometry<S>) -> Isometry<S> {
        // next(self(p)) = Rn Mn (Rs Ms p + ts) + tn, and M R(theta) = R(-theta) M.
        let (c1, s1) = (self.cos.clone(), self.sin.clone());
        let s1 = if next.mirror { -s1 } else { s1 };
        let cos = next.cos.clone() * c1.clone() - next.sin.clone() * s1.clone();
        let sin = next.sin.clone() * c1 + next.cos.clone() * s1;
        Isometry {
            cos,
            sin,
            translation: next.apply(&self.translation),
            mirror: self.mirror != next.mirror,
        }
    }

    /// The isometry taking `src.0 -> dst.0` and `src.1 -> dst.1`. With
    /// `mirror` unset it is a rotation plus translation; with it set, the
    /// orientation is reversed. Segment lengths must agree.
    pub fn taking_segment(src: (&Point<S>, &Point<S>), dst: (&Point<S>, &Point<S>), mirror: bool) -> Result<Self> {
        let len_src = squared_distance(src.0, src.1);
        let len_dst = squared_distance(dst.0, dst.1);
        let scale = extent(&[src.0, src.1]).max(extent(&[dst.0, dst.1]));
        if len_src.is_zero_length_sq(scale) {
            return Err(GeomError::Degenerate("zero-length segment"));
        }
        if !len_src.eq_within(&len_dst, scale * scale) {
            return Err(GeomError::LengthMismatch);
        }
        let mut u = src.1.clone() - src.0.clone();
        if mirror {
            u = Point::new(u.x, -u.y);
        }
        let v = dst.1.clone() - dst.0.clone();
        let cos = dot(&u, &v) / len_src.clone();
        let sin = cross(&u, &v) / len_src;
        let partial = Isometry {
            cos,
            sin,
            translation: Point::origin(),
            mirror,
        };
        let translation = dst.0.clone() - partial.apply(src.0);
        Ok(Isometry { translation, ..partial })
    }
}
