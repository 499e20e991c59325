//! Classical congruence criteria over measured triangle elements.
//!
//! Criteria compare squared side lengths and encoded angle cosines, so both
//! backends decide them without square roots. Criterion D has a third
//! outcome: when the matched angle is not opposite the strictly greater
//! matched side it does not apply, which is exactly the ambiguous regime
//! handled by [`crate::ssa`].

use std::fmt;

use serde::Serialize;

use crate::geom::{Cosine, Scalar, Triangle, Vertex};

/// Squared sides (keyed by opposite vertex) and angle cosines of a triangle.
#[derive(Clone, Debug)]
pub struct TriangleElements<S> {
    pub side_sq: [S; 3],
    pub cos: [Cosine<S>; 3],
}

impl<S: Scalar> TriangleElements<S> {
    pub fn of(t: &Triangle<S>) -> Self {
        TriangleElements {
            side_sq: Vertex::ALL.map(|v| t.side_sq(v)),
            cos: Vertex::ALL.map(|v| t.cos_at(v)),
        }
    }

    pub fn side(&self, opposite: Vertex) -> &S {
        &self.side_sq[opposite.index()]
    }

    pub fn angle(&self, at: Vertex) -> &Cosine<S> {
        &self.cos[at.index()]
    }
}

/// Bijection from the labels of one triangle to the labels of another:
/// `corr.map(v)` is the label in the second triangle matched with `v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Correspondence([Vertex; 3]);

impl Correspondence {
    pub const IDENTITY: Correspondence = Correspondence([Vertex::A, Vertex::B, Vertex::C]);

    pub fn new(images: [Vertex; 3]) -> Option<Self> {
        let mut seen = [false; 3];
        for v in images {
            if std::mem::replace(&mut seen[v.index()], true) {
                return None;
            }
        }
        Some(Correspondence(images))
    }

    /// All six permutations: identity, the three transpositions, then the two
    /// 3-cycles.
    pub fn all() -> [Correspondence; 6] {
        use Vertex::*;
        [[A, B, C], [B, A, C], [C, B, A], [A, C, B], [B, C, A], [C, A, B]].map(Correspondence)
    }

    pub fn map(&self, v: Vertex) -> Vertex {
        self.0[v.index()]
    }

    pub fn images(&self) -> [Vertex; 3] {
        self.0
    }

    pub fn inverse(&self) -> Correspondence {
        let mut inv = [Vertex::A; 3];
        for v in Vertex::ALL {
            inv[self.map(v).index()] = v;
        }
        Correspondence(inv)
    }

    fn rank(&self) -> usize {
        Correspondence::all().iter().position(|c| c == self).expect("permutation")
    }
}

impl fmt::Display for Correspondence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.0;
        write!(f, "A->{a} B->{b} C->{c}")
    }
}

/// Which two sides (named by their opposite vertices) and which angle are
/// claimed equal between two triangles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SidesAngle {
    pub sides: (Vertex, Vertex),
    pub angle: Vertex,
}

impl SidesAngle {
    pub fn new(side1: Vertex, side2: Vertex, angle: Vertex) -> Self {
        assert_ne!(side1, side2, "two distinct sides");
        SidesAngle {
            sides: (side1, side2),
            angle,
        }
    }

    /// The vertex between the two sides.
    pub fn included_vertex(&self) -> Vertex {
        self.sides.0.third(self.sides.1)
    }

    pub fn is_included(&self) -> bool {
        self.angle == self.included_vertex()
    }

    /// For a non-included angle: the matched side that is not opposite it.
    pub fn other_side(&self) -> Option<Vertex> {
        if self.angle == self.sides.0 {
            Some(self.sides.1)
        } else if self.angle == self.sides.1 {
            Some(self.sides.0)
        } else {
            None
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CriterionOutcome {
    Holds,
    Fails,
    NotApplicable,
}

fn side_eq<S: Scalar>(x: &S, y: &S) -> bool {
    let scale = x.to_f64().abs().max(y.to_f64().abs());
    x.eq_within(y, scale)
}

pub(crate) fn sides_match<S: Scalar>(t1: &TriangleElements<S>, t2: &TriangleElements<S>, corr: &Correspondence, v: Vertex) -> bool {
    side_eq(t1.side(v), t2.side(corr.map(v)))
}

pub(crate) fn angles_match<S: Scalar>(t1: &TriangleElements<S>, t2: &TriangleElements<S>, corr: &Correspondence, v: Vertex) -> bool {
    t1.angle(v).eq_within(t2.angle(corr.map(v)))
}

/// Two sides and the included angle.
pub fn criterion_a<S: Scalar>(t1: &TriangleElements<S>, t2: &TriangleElements<S>, corr: &Correspondence) -> bool {
    Vertex::ALL.iter().any(|&k| {
        let (i, j) = k.others();
        sides_match(t1, t2, corr, i) && sides_match(t1, t2, corr, j) && angles_match(t1, t2, corr, k)
    })
}

/// Two angles and a side.
pub fn criterion_b<S: Scalar>(t1: &TriangleElements<S>, t2: &TriangleElements<S>, corr: &Correspondence) -> bool {
    Vertex::ALL.iter().any(|&k| {
        let (i, j) = k.others();
        angles_match(t1, t2, corr, i)
            && angles_match(t1, t2, corr, j)
            && Vertex::ALL.iter().any(|&s| sides_match(t1, t2, corr, s))
    })
}

/// Three sides.
pub fn criterion_c<S: Scalar>(t1: &TriangleElements<S>, t2: &TriangleElements<S>, corr: &Correspondence) -> bool {
    Vertex::ALL.iter().all(|&v| sides_match(t1, t2, corr, v))
}

/// Two sides and the angle opposite the strictly greater of them.
pub fn criterion_d<S: Scalar>(
    t1: &TriangleElements<S>,
    t2: &TriangleElements<S>,
    corr: &Correspondence,
    matched: SidesAngle,
) -> CriterionOutcome {
    let Some(other) = matched.other_side() else {
        return CriterionOutcome::NotApplicable;
    };
    let (opp, adj) = (t1.side(matched.angle), t1.side(other));
    let scale = opp.to_f64().abs().max(adj.to_f64().abs());
    if !adj.lt_within(opp, scale) {
        return CriterionOutcome::NotApplicable;
    }
    let ok = sides_match(t1, t2, corr, matched.angle)
        && sides_match(t1, t2, corr, other)
        && angles_match(t1, t2, corr, matched.angle);
    if ok {
        CriterionOutcome::Holds
    } else {
        CriterionOutcome::Fails
    }
}

/// A correspondence under which the triangles are congruent, if any.
///
/// When several exist (isosceles or equilateral triangles) the choice is
/// made so that `congruent_any(t2, t1)` returns the inverse of
/// `congruent_any(t1, t2)`.
pub fn congruent_any<S: Scalar>(t1: &Triangle<S>, t2: &Triangle<S>) -> Option<Correspondence> {
    congruent_any_elements(&TriangleElements::of(t1), &TriangleElements::of(t2))
}

pub fn congruent_any_elements<S: Scalar>(e1: &TriangleElements<S>, e2: &TriangleElements<S>) -> Option<Correspondence> {
    Correspondence::all()
        .into_iter()
        .filter(|corr| criterion_c(e1, e2, corr))
        .min_by_key(|corr| {
            let (r, ri) = (corr.rank(), corr.inverse().rank());
            (r.min(ri), r)
        })
}
