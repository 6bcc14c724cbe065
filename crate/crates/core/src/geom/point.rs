use std::ops::{Add, Mul, Neg, Sub};

use num_traits::ToPrimitive;

use super::rational::Rational;

/// Floating point working vector used by every builder.
#[derive(Clone, Copy, Debug, Default, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct V2 {
    pub x: f64,
    pub y: f64,
}

impl V2 {
    pub const fn new(x: f64, y: f64) -> Self {
        V2 { x, y }
    }

    pub fn dot(self, o: V2) -> f64 {
        self.x * o.x + self.y * o.y
    }

    pub fn cross(self, o: V2) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm2(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    /// Counter-clockwise quarter turn.
    pub fn perp(self) -> V2 {
        V2::new(-self.y, self.x)
    }

    pub fn unit(self) -> V2 {
        let n = self.norm();
        V2::new(self.x / n, self.y / n)
    }

    pub fn dist(self, o: V2) -> f64 {
        (self - o).norm()
    }

    pub fn max_abs(self) -> f64 {
        self.x.abs().max(self.y.abs())
    }
}

impl Add for V2 {
    type Output = V2;
    fn add(self, o: V2) -> V2 {
        V2::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for V2 {
    type Output = V2;
    fn sub(self, o: V2) -> V2 {
        V2::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for V2 {
    type Output = V2;
    fn mul(self, s: f64) -> V2 {
        V2::new(self.x * s, self.y * s)
    }
}

impl Neg for V2 {
    type Output = V2;
    fn neg(self) -> V2 {
        V2::new(-self.x, -self.y)
    }
}

/// Exact input point with rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point2 {
    pub x: Rational,
    pub y: Rational,
}

impl Point2 {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point2 { x, y }
    }

    /// Exact image of a finite `f64` pair.
    pub fn from_f64(x: f64, y: f64) -> Self {
        Point2 { x: super::rational::rat_from_f64(x), y: super::rational::rat_from_f64(y) }
    }

    pub fn to_v2(&self) -> V2 {
        V2::new(self.x.to_f64().unwrap_or(f64::NAN), self.y.to_f64().unwrap_or(f64::NAN))
    }
}

impl serde::Serialize for Point2 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use super::rational::format_rational;
        [format_rational(&self.x), format_rational(&self.y)].serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for Point2 {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use super::rational::parse_rational;
        let [x, y] = <[String; 2]>::deserialize(d)?;
        let p = |v: &str| parse_rational(v).map_err(serde::de::Error::custom);
        Ok(Point2::new(p(&x)?, p(&y)?))
    }
}

/// Axis-aligned rectangle.
#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Rect {
    pub min: V2,
    pub max: V2,
}

impl Rect {
    pub fn new(min: V2, max: V2) -> Self {
        Rect { min, max }
    }

    pub fn unit() -> Self {
        Rect::new(V2::new(0.0, 0.0), V2::new(1.0, 1.0))
    }

    pub fn empty() -> Self {
        Rect::new(V2::new(f64::INFINITY, f64::INFINITY), V2::new(f64::NEG_INFINITY, f64::NEG_INFINITY))
    }

    pub fn is_empty(&self) -> bool {
        self.min.x > self.max.x || self.min.y > self.max.y
    }

    pub fn include(&mut self, p: V2) {
        self.min.x = self.min.x.min(p.x);
        self.min.y = self.min.y.min(p.y);
        self.max.x = self.max.x.max(p.x);
        self.max.y = self.max.y.max(p.y);
    }

    pub fn union(&self, o: &Rect) -> Rect {
        let mut r = *self;
        if !o.is_empty() {
            r.include(o.min);
            r.include(o.max);
        }
        r
    }

    pub fn width(&self) -> f64 {
        self.max.x - self.min.x
    }

    pub fn height(&self) -> f64 {
        self.max.y - self.min.y
    }

    pub fn center(&self) -> V2 {
        (self.min + self.max) * 0.5
    }

    pub fn contains(&self, p: V2) -> bool {
        p.x >= self.min.x && p.x <= self.max.x && p.y >= self.min.y && p.y <= self.max.y
    }

    pub fn contains_strict(&self, p: V2) -> bool {
        p.x > self.min.x && p.x < self.max.x && p.y > self.min.y && p.y < self.max.y
    }

    pub fn overlaps(&self, o: &Rect) -> bool {
        self.min.x <= o.max.x && o.min.x <= self.max.x && self.min.y <= o.max.y && o.min.y <= self.max.y
    }

    pub fn inflate(&self, d: f64) -> Rect {
        Rect::new(self.min - V2::new(d, d), self.max + V2::new(d, d))
    }

    /// Smallest square sharing this rectangle's center that contains it, with
    /// the side scaled by `factor`.
    pub fn square_scaled(&self, factor: f64) -> Rect {
        let c = self.center();
        let half = 0.5 * self.width().max(self.height()).max(1e-9) * factor;
        Rect::new(c - V2::new(half, half), c + V2::new(half, half))
    }
}
