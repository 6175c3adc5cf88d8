//! Nearness between points and the graded connection between fuzzy regions.
//!
//! The connection grade is
//!
//! ```text
//! C(A, B) = sup_p T(A(p), sup_q T(R(p, q), B(q)))
//! ```
//!
//! where `R` is the nearness relation. [`connect_grid`] approximates both
//! suprema over the lower-left corners of a `dd × dd` subdivision of each
//! core's bounding box; [`connect_oracle`] samples cell centres of a much
//! finer lattice spanning each region's halo and serves as the reference.
//!
//! Both evaluate `T(T(A(p), B(q)), R(p, q))` per sample pair. By
//! associativity this equals the nested form, and with an exactly
//! commutative `T` it makes `C(A, B) == C(B, A)` hold bit for bit. The
//! reduction is an exact `max`, so pruning and thread scheduling never
//! change the result.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fuzzy::{FuzzyRegion, Grade, TNormKind};
use crate::geometry::{bounding_box, BoundingBox, Point};

/// Parameters of the nearness relation: points within `alpha` are fully
/// near, points beyond `alpha + beta` are not near, linear in between.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NearnessParams {
    alpha: f64,
    beta: f64,
}

impl NearnessParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        for (name, v) in [("alpha", alpha), ("beta", beta)] {
            if !(v.is_finite() && v >= 0.0) {
                return Err(Error::InvalidParameter(format!(
                    "{name} must be a finite non-negative length, got {v}"
                )));
            }
        }
        Ok(NearnessParams { alpha, beta })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Distance beyond which nothing is near.
    pub fn reach(&self) -> f64 {
        self.alpha + self.beta
    }

    pub fn grade(&self, d: f64) -> Grade {
        Grade::saturating(self.raw(d))
    }

    #[inline]
    pub(crate) fn raw(&self, d: f64) -> f64 {
        if d <= self.alpha {
            1.0
        } else if d > self.alpha + self.beta {
            0.0
        } else {
            // d in (alpha, alpha + beta] implies beta > 0
            (self.alpha + self.beta - d) / self.beta
        }
    }
}

impl Default for NearnessParams {
    fn default() -> Self {
        NearnessParams {
            alpha: 0.0,
            beta: 0.01,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConnectionConfig {
    pub params: NearnessParams,
    pub tnorm: TNormKind,
    /// Grid divisions per axis.
    pub dd: usize,
}

impl ConnectionConfig {
    pub fn new(params: NearnessParams, tnorm: TNormKind, dd: usize) -> Result<Self> {
        let cfg = ConnectionConfig { params, tnorm, dd };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.dd == 0 {
            return Err(Error::InvalidParameter(
                "grid divisions must be at least 1".into(),
            ));
        }
        Ok(())
    }

    pub fn with_params(self, params: NearnessParams) -> Self {
        ConnectionConfig { params, ..self }
    }
}

impl Default for ConnectionConfig {
    fn default() -> Self {
        ConnectionConfig {
            params: NearnessParams::default(),
            tnorm: TNormKind::Lukasiewicz,
            dd: 8,
        }
    }
}

pub fn nearness(params: &NearnessParams, d: f64) -> Grade {
    params.grade(d)
}

/// A regular lattice of sample points with the membership of each point in
/// one region. Point `(i, j)` is `(xs[i], ys[j])`, stored row-major.
pub(crate) struct SampleLattice {
    xs: Vec<f64>,
    ys: Vec<f64>,
    membership: Vec<f64>,
}

impl SampleLattice {
    /// Lower-left corners of a `dd × dd` subdivision of the core's box.
    pub(crate) fn corners(region: &FuzzyRegion, dd: usize) -> Result<Self> {
        let bbox = bounding_box(region.core()).ok_or(Error::EmptyGeometry)?;
        let (mut xs, mut ys) = bbox.grid_lines(dd);
        xs.pop();
        ys.pop();
        Ok(Self::evaluate(region, xs, ys))
    }

    /// Centres of an `n × n` subdivision of `bbox`.
    pub(crate) fn centers(region: &FuzzyRegion, bbox: &BoundingBox, n: usize) -> Self {
        let (xs, ys) = bbox.grid_lines(n);
        let mid = |v: &[f64]| v.windows(2).map(|w| (w[0] + w[1]) / 2.0).collect();
        Self::evaluate(region, mid(&xs), mid(&ys))
    }

    fn evaluate(region: &FuzzyRegion, xs: Vec<f64>, ys: Vec<f64>) -> Self {
        let membership = ys
            .par_iter()
            .flat_map_iter(|&y| xs.iter().map(move |&x| region.membership_raw(&Point::new(x, y))))
            .collect();
        SampleLattice { xs, ys, membership }
    }

    pub(crate) fn len(&self) -> usize {
        self.membership.len()
    }

    pub(crate) fn point(&self, k: usize) -> Point {
        let n = self.xs.len();
        Point::new(self.xs[k % n], self.ys[k / n])
    }

    #[cfg(test)]
    fn membership(&self, k: usize) -> f64 {
        self.membership[k]
    }

    fn index_range(v: &[f64], lo: f64, hi: f64) -> std::ops::Range<usize> {
        v.partition_point(|&x| x < lo)..v.partition_point(|&x| x <= hi)
    }
}

/// `max_{p in a, q in b} T(T(a(p), b(q)), R(d(p, q)))`, exactly.
fn sup_connection(
    a: &SampleLattice,
    b: &SampleLattice,
    params: &NearnessParams,
    tnorm: TNormKind,
) -> f64 {
    let reach = params.reach();
    // Every candidate value for p is bounded by a(p), so visiting p in
    // decreasing membership lets the scan stop early.
    let mut order: Vec<usize> = (0..a.len()).filter(|&k| a.membership[k] > 0.0).collect();
    order.sort_by(|&i, &j| a.membership[j].total_cmp(&a.membership[i]).then(i.cmp(&j)));

    let best = AtomicU64::new(0.0f64.to_bits());
    let nb = b.xs.len();
    order.par_chunks(64).for_each(|chunk| {
        for &k in chunk {
            let ma = a.membership[k];
            let mut local = f64::from_bits(best.load(Ordering::Relaxed));
            if ma <= local {
                break;
            }
            let p = a.point(k);
            let cols = SampleLattice::index_range(&b.xs, p.x - reach, p.x + reach);
            let rows = SampleLattice::index_range(&b.ys, p.y - reach, p.y + reach);
            for j in rows {
                let qy = b.ys[j];
                for i in cols.clone() {
                    let mb = b.membership[j * nb + i];
                    if mb <= local {
                        continue;
                    }
                    let d = (p.x - b.xs[i]).hypot(p.y - qy);
                    if d > reach {
                        continue;
                    }
                    let v = tnorm.t(tnorm.t(ma, mb), params.raw(d));
                    if v > local {
                        local = v;
                    }
                }
            }
            // non-negative doubles order like their bit patterns
            best.fetch_max(local.to_bits(), Ordering::Relaxed);
            if local >= 1.0 {
                return;
            }
        }
    });
    f64::from_bits(best.into_inner())
}

fn check_pair(a: &FuzzyRegion, b: &FuzzyRegion) -> Result<bool> {
    a.core().validate()?;
    b.core().validate()?;
    Ok(!(a.is_empty() || b.is_empty()))
}

/// Grid-discretised connection grade between two fuzzy regions.
///
/// Samples the lower-left corner of every cell of a `cfg.dd × cfg.dd`
/// subdivision of each core's bounding box, cells outside the region
/// included (their membership weighs them out). Empty cores give 0.
pub fn connect_grid(a: &FuzzyRegion, b: &FuzzyRegion, cfg: &ConnectionConfig) -> Result<Grade> {
    cfg.validate()?;
    if !check_pair(a, b)? {
        return Ok(Grade::ZERO);
    }
    let sa = SampleLattice::corners(a, cfg.dd)?;
    let sb = SampleLattice::corners(b, cfg.dd)?;
    Ok(Grade::saturating(sup_connection(&sa, &sb, &cfg.params, cfg.tnorm)))
}

/// Reference connection grade from dense sampling.
///
/// Each region is sampled at the centres of a `dd_fine × dd_fine` lattice
/// over its bounding box grown by its support radius, so the fuzzy halo
/// is covered as well as the core.
pub fn connect_oracle(
    a: &FuzzyRegion,
    b: &FuzzyRegion,
    params: &NearnessParams,
    tnorm: TNormKind,
    dd_fine: usize,
) -> Result<Grade> {
    if dd_fine == 0 {
        return Err(Error::InvalidParameter(
            "grid divisions must be at least 1".into(),
        ));
    }
    if !check_pair(a, b)? {
        return Ok(Grade::ZERO);
    }
    let halo_lattice = |r: &FuzzyRegion| -> Result<SampleLattice> {
        let bbox = bounding_box(r.core())
            .ok_or(Error::EmptyGeometry)?
            .inflate(r.support_radius());
        Ok(SampleLattice::centers(r, &bbox, dd_fine))
    };
    let sa = halo_lattice(a)?;
    let sb = halo_lattice(b)?;
    Ok(Grade::saturating(sup_connection(&sa, &sb, params, tnorm)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{Geometry, Polygon};

    fn rect(x0: f64, y0: f64, x1: f64, y1: f64, sr: f64) -> FuzzyRegion {
        FuzzyRegion::new(Polygon::rect(x0, y0, x1, y1).unwrap().into(), sr).unwrap()
    }

    fn cfg(alpha: f64, beta: f64, tnorm: TNormKind, dd: usize) -> ConnectionConfig {
        ConnectionConfig::new(NearnessParams::new(alpha, beta).unwrap(), tnorm, dd).unwrap()
    }

    /// Straight double loop over both lattices, no pruning.
    fn naive(a: &SampleLattice, b: &SampleLattice, params: &NearnessParams, t: TNormKind) -> f64 {
        let mut best = 0.0f64;
        for ka in 0..a.len() {
            let inner = (0..b.len())
                .map(|kb| {
                    let d = a.point(ka).distance(&b.point(kb));
                    t.t(t.t(a.membership(ka), b.membership(kb)), params.raw(d))
                })
                .fold(0.0, f64::max);
            best = best.max(inner);
        }
        best
    }

    #[test]
    fn nearness_examples() {
        let p = NearnessParams::new(0.0, 0.01).unwrap();
        assert_eq!(nearness(&p, 0.0).value(), 1.0);
        assert_eq!(nearness(&p, 0.005).value(), 0.5);
        assert_eq!(nearness(&p, 0.02).value(), 0.0);
        let q = NearnessParams::new(1.0, 2.0).unwrap();
        assert_eq!(nearness(&q, 2.0).value(), 0.5);
        assert_eq!(nearness(&q, 1.0).value(), 1.0);
        assert_eq!(nearness(&q, 3.0).value(), 0.0);
        let crisp = NearnessParams::new(0.0, 0.0).unwrap();
        assert_eq!(nearness(&crisp, 0.001).value(), 0.0);
        assert_eq!(nearness(&crisp, 0.0).value(), 1.0);
        assert!(NearnessParams::new(-1.0, 0.0).is_err());
    }

    #[test]
    fn grid_examples() {
        let sq = rect(0.0, 0.0, 1.0, 1.0, 0.0);
        let c = connect_grid(&sq, &sq, &cfg(0.0, 0.01, TNormKind::Lukasiewicz, 8)).unwrap();
        assert_eq!(c.value(), 1.0);

        let far = rect(5.0, 0.0, 6.0, 1.0, 0.0);
        let c = connect_grid(&sq, &far, &cfg(0.0, 1.0, TNormKind::Lukasiewicz, 8)).unwrap();
        assert_eq!(c.value(), 0.0);
    }

    #[test]
    fn gap_example_matches_oracle() {
        let a = rect(0.0, 0.0, 1.0, 1.0, 0.25);
        let b = rect(1.5, 0.0, 2.5, 1.0, 0.25);
        let c = cfg(0.0, 0.5, TNormKind::Lukasiewicz, 8);
        let grid = connect_grid(&a, &b, &c).unwrap().value();
        let oracle = connect_oracle(&a, &b, &c.params, c.tnorm, 128).unwrap().value();
        // frozen from the dd_fine = 128 oracle run
        assert!(oracle < 1e-2, "oracle {oracle}");
        assert!((grid - oracle).abs() <= 0.1, "grid {grid} oracle {oracle}");
    }

    #[test]
    fn pruned_scan_matches_naive_loop() {
        let pairs = [
            (rect(0.0, 0.0, 1.0, 1.0, 0.3), rect(1.2, 0.1, 2.0, 0.9, 0.2)),
            (rect(0.0, 0.0, 1.0, 1.0, 0.0), rect(0.5, 0.5, 1.5, 1.5, 0.0)),
            (rect(0.0, 0.0, 2.0, 0.5, 0.5), rect(0.0, 1.5, 0.5, 3.0, 0.1)),
        ];
        for t in TNormKind::ALL {
            let params = NearnessParams::new(0.1, 0.6).unwrap();
            for (a, b) in &pairs {
                let bb = bounding_box(a.core()).unwrap().inflate(a.support_radius());
                let sa = SampleLattice::centers(a, &bb, 24);
                let sb = SampleLattice::corners(b, 24).unwrap();
                assert_eq!(
                    sup_connection(&sa, &sb, &params, t),
                    naive(&sa, &sb, &params, t),
                    "{t}"
                );
            }
        }
    }

    #[test]
    fn empty_core_gives_zero() {
        let sq = rect(0.0, 0.0, 1.0, 1.0, 0.0);
        let empty = FuzzyRegion::crisp(Geometry::Empty).unwrap();
        let c = ConnectionConfig::default();
        assert_eq!(connect_grid(&empty, &sq, &c).unwrap().value(), 0.0);
        assert_eq!(connect_grid(&empty, &empty, &c).unwrap().value(), 0.0);
        assert_eq!(
            connect_oracle(&sq, &empty, &c.params, c.tnorm, 16).unwrap().value(),
            0.0
        );
    }

    #[test]
    fn rejects_zero_divisions_and_invalid_geometry() {
        let sq = rect(0.0, 0.0, 1.0, 1.0, 0.0);
        let c = ConnectionConfig {
            dd: 0,
            ..Default::default()
        };
        assert!(connect_grid(&sq, &sq, &c).is_err());
        assert!(connect_oracle(&sq, &sq, &c.params, c.tnorm, 0).is_err());
        // invalid cores never make it into a region
        assert!(FuzzyRegion::crisp(Geometry::MultiPolygon(Vec::new())).is_err());
        assert!(FuzzyRegion::crisp(Geometry::Point(Point::new(f64::NAN, 0.0))).is_err());
    }

    #[test]
    fn point_cores_connect_by_distance() {
        let p = FuzzyRegion::crisp(Geometry::Point(Point::new(0.0, 0.0))).unwrap();
        let q = FuzzyRegion::crisp(Geometry::Point(Point::new(0.3, 0.4))).unwrap();
        let c = cfg(0.0, 1.0, TNormKind::Minimum, 4);
        let v = connect_grid(&p, &q, &c).unwrap().value();
        assert!((v - 0.5).abs() < 1e-12);
    }
}
