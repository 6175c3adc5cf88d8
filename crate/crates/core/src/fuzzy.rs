//! Grades, t-norms with their residual implicators, and fuzzy regions.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::geometry::{contains_point, distance_point_geometry, Geometry, Point};

/// Values this close outside `[0, 1]` are snapped onto the interval.
pub const GRADE_SLACK: f64 = 1e-12;

/// A truth degree in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Grade(f64);

impl Grade {
    pub const ZERO: Grade = Grade(0.0);
    pub const ONE: Grade = Grade(1.0);

    /// Rejects values farther than [`GRADE_SLACK`] outside `[0, 1]` (and NaN);
    /// values within the slack are clamped.
    pub fn new(value: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&value) {
            Ok(Grade(value))
        } else if (-GRADE_SLACK..0.0).contains(&value) {
            Ok(Grade(0.0))
        } else if value > 1.0 && value <= 1.0 + GRADE_SLACK {
            Ok(Grade(1.0))
        } else {
            Err(Error::GradeOutOfRange(value))
        }
    }

    /// For values produced by the engine's own arithmetic, which stay
    /// inside `[0, 1]` up to rounding.
    pub(crate) fn saturating(value: f64) -> Self {
        debug_assert!(!value.is_nan());
        Grade(value.clamp(0.0, 1.0))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn complement(self) -> Grade {
        Grade(1.0 - self.0)
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl TryFrom<f64> for Grade {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Grade::new(value)
    }
}

impl From<Grade> for f64 {
    fn from(g: Grade) -> f64 {
        g.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum TNormKind {
    /// `max(0, a + b - 1)`
    #[default]
    Lukasiewicz,
    /// `min(a, b)`
    Minimum,
    /// `a * b`
    Product,
}

impl TNormKind {
    pub const ALL: [TNormKind; 3] = [
        TNormKind::Lukasiewicz,
        TNormKind::Minimum,
        TNormKind::Product,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TNormKind::Lukasiewicz => "lukasiewicz",
            TNormKind::Minimum => "minimum",
            TNormKind::Product => "product",
        }
    }

    pub fn tnorm(self, a: Grade, b: Grade) -> Grade {
        Grade(self.t(a.0, b.0))
    }

    pub fn residuum(self, a: Grade, b: Grade) -> Grade {
        Grade(self.implies(a.0, b.0))
    }

    /// Raw t-norm on values already known to lie in `[0, 1]`.
    ///
    /// The Łukasiewicz form orders its arguments and evaluates
    /// `lo - (1 - hi)` so that it is exactly commutative and `T(a, 1) == a`
    /// holds bit for bit.
    #[inline]
    pub(crate) fn t(self, a: f64, b: f64) -> f64 {
        match self {
            TNormKind::Lukasiewicz => {
                let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
                (lo - (1.0 - hi)).max(0.0)
            }
            TNormKind::Minimum => a.min(b),
            TNormKind::Product => a * b,
        }
    }

    /// Raw residual implicator `sup { c : T(a, c) <= b }`.
    #[inline]
    pub(crate) fn implies(self, a: f64, b: f64) -> f64 {
        if a <= b {
            return 1.0;
        }
        match self {
            TNormKind::Lukasiewicz => (b + (1.0 - a)).min(1.0),
            TNormKind::Minimum => b,
            TNormKind::Product => b / a,
        }
    }

    /// Left-associated fold, `T(T(T(1, g0), g1), ...)`.
    pub fn fold<I: IntoIterator<Item = Grade>>(self, grades: I) -> Grade {
        Grade(grades.into_iter().fold(1.0, |acc, g| self.t(acc, g.0)))
    }
}

impl FromStr for TNormKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "lukasiewicz" | "łukasiewicz" | "w" => Ok(TNormKind::Lukasiewicz),
            "minimum" | "min" | "m" => Ok(TNormKind::Minimum),
            "product" | "prod" | "p" => Ok(TNormKind::Product),
            other => Err(Error::InvalidParameter(format!("unknown t-norm {other:?}"))),
        }
    }
}

impl fmt::Display for TNormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A crisp core with a linear fuzzy halo of width `support_radius`.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzyRegion {
    core: Geometry,
    support_radius: f64,
}

impl FuzzyRegion {
    pub fn new(core: Geometry, support_radius: f64) -> Result<Self> {
        core.validate()?;
        check_radius(support_radius)?;
        Ok(FuzzyRegion {
            core,
            support_radius,
        })
    }

    /// Region with no halo.
    pub fn crisp(core: Geometry) -> Result<Self> {
        FuzzyRegion::new(core, 0.0)
    }

    pub fn core(&self) -> &Geometry {
        &self.core
    }

    pub fn support_radius(&self) -> f64 {
        self.support_radius
    }

    pub fn with_support_radius(&self, support_radius: f64) -> Result<Self> {
        check_radius(support_radius)?;
        Ok(FuzzyRegion {
            core: self.core.clone(),
            support_radius,
        })
    }

    pub fn is_empty(&self) -> bool {
        self.core.is_empty()
    }

    pub fn membership(&self, p: &Point) -> Grade {
        Grade(self.membership_raw(p))
    }

    #[inline]
    pub(crate) fn membership_raw(&self, p: &Point) -> f64 {
        if self.support_radius == 0.0 {
            return if contains_point(&self.core, p) { 1.0 } else { 0.0 };
        }
        halo_profile(self.support_radius, distance_point_geometry(p, &self.core))
    }
}

/// Membership as a function of the distance to the core.
#[inline]
pub(crate) fn halo_profile(support_radius: f64, distance: f64) -> f64 {
    if support_radius == 0.0 {
        return if distance <= 0.0 { 1.0 } else { 0.0 };
    }
    let m = 1.0 - distance / support_radius;
    if m < 0.0 {
        0.0
    } else {
        m
    }
}

fn check_radius(r: f64) -> Result<()> {
    if r.is_finite() && r >= 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "support radius must be a finite non-negative length, got {r}"
        )))
    }
}

pub fn tnorm(kind: TNormKind, a: Grade, b: Grade) -> Grade {
    kind.tnorm(a, b)
}

pub fn residuum(kind: TNormKind, a: Grade, b: Grade) -> Grade {
    kind.residuum(a, b)
}

pub fn membership(region: &FuzzyRegion, p: &Point) -> Grade {
    region.membership(p)
}
