//! Graded RCC-8 relations built on nearness-based connection.
//!
//! Every relation is an outer `max`/`min` over a finite probe set and an
//! inner supremum or infimum over the whole plane. The inner quantifier
//! only depends on the probe's distance to the other region's core, so it
//! is evaluated in closed form:
//!
//! * closeness `sup_q T(R(p, q), B(q))`: how near `p` is to some point of `B`;
//! * interiority `inf_q I(R(p, q), B(q))`: how far inside `B` everything near
//!   `p` lies.
//!
//! Probes are the lower-left corners of a `dd × dd` grid over each region's
//! halo box plus every core vertex (contact probes), and the cell centres of
//! the same grids (overlap probes, which stay off shared boundaries).

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::connection::{ConnectionConfig, NearnessParams};
use crate::error::{Error, Result};
use crate::fuzzy::{halo_profile, FuzzyRegion, Grade, TNormKind};
use crate::geometry::{bounding_box, contains_point, BoundingBox, Point};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Relation {
    C,
    DC,
    O,
    P,
    PInv,
    EQ,
    PP,
    PPInv,
    PO,
    EC,
    TPP,
    TPPInv,
    NTPP,
    NTPPInv,
}

impl Relation {
    pub const ALL: [Relation; 14] = [
        Relation::C,
        Relation::DC,
        Relation::O,
        Relation::P,
        Relation::PInv,
        Relation::EQ,
        Relation::PP,
        Relation::PPInv,
        Relation::PO,
        Relation::EC,
        Relation::TPP,
        Relation::TPPInv,
        Relation::NTPP,
        Relation::NTPPInv,
    ];

    /// The eight jointly exhaustive base relations.
    pub const RCC8: [Relation; 8] = [
        Relation::DC,
        Relation::EC,
        Relation::PO,
        Relation::EQ,
        Relation::TPP,
        Relation::TPPInv,
        Relation::NTPP,
        Relation::NTPPInv,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Relation::C => "C",
            Relation::DC => "DC",
            Relation::O => "O",
            Relation::P => "P",
            Relation::PInv => "P_inv",
            Relation::EQ => "EQ",
            Relation::PP => "PP",
            Relation::PPInv => "PP_inv",
            Relation::PO => "PO",
            Relation::EC => "EC",
            Relation::TPP => "TPP",
            Relation::TPPInv => "TPP_inv",
            Relation::NTPP => "NTPP",
            Relation::NTPPInv => "NTPP_inv",
        }
    }

    /// Relations whose grade does not depend on argument order.
    pub fn is_symmetric(self) -> bool {
        matches!(
            self,
            Relation::C | Relation::DC | Relation::O | Relation::EQ | Relation::PO | Relation::EC
        )
    }

    /// The relation obtained by swapping the arguments.
    pub fn converse(self) -> Relation {
        match self {
            Relation::P => Relation::PInv,
            Relation::PInv => Relation::P,
            Relation::PP => Relation::PPInv,
            Relation::PPInv => Relation::PP,
            Relation::TPP => Relation::TPPInv,
            Relation::TPPInv => Relation::TPP,
            Relation::NTPP => Relation::NTPPInv,
            Relation::NTPPInv => Relation::NTPP,
            r => r,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_uppercase().replace('-', "_");
        let key = match key.as_str() {
            "PI" => "P_INV",
            "PPI" => "PP_INV",
            "TPPI" => "TPP_INV",
            "NTPPI" => "NTPP_INV",
            k => k,
        };
        Relation::ALL
            .into_iter()
            .find(|r| r.name().to_ascii_uppercase() == key)
            .ok_or_else(|| Error::UnknownRelation(s.to_string()))
    }
}

/// One grade per relation of the family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RelationVector {
    pub c: Grade,
    pub dc: Grade,
    pub o: Grade,
    pub p: Grade,
    pub p_inv: Grade,
    pub eq: Grade,
    pub pp: Grade,
    pub pp_inv: Grade,
    pub po: Grade,
    pub ec: Grade,
    pub tpp: Grade,
    pub tpp_inv: Grade,
    pub ntpp: Grade,
    pub ntpp_inv: Grade,
}

impl RelationVector {
    pub fn get(&self, r: Relation) -> Grade {
        match r {
            Relation::C => self.c,
            Relation::DC => self.dc,
            Relation::O => self.o,
            Relation::P => self.p,
            Relation::PInv => self.p_inv,
            Relation::EQ => self.eq,
            Relation::PP => self.pp,
            Relation::PPInv => self.pp_inv,
            Relation::PO => self.po,
            Relation::EC => self.ec,
            Relation::TPP => self.tpp,
            Relation::TPPInv => self.tpp_inv,
            Relation::NTPP => self.ntpp,
            Relation::NTPPInv => self.ntpp_inv,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (Relation, Grade)> + '_ {
        Relation::ALL.into_iter().map(move |r| (r, self.get(r)))
    }

    /// Grades for a pair where one core is empty: nothing holds but DC.
    fn disconnected() -> Self {
        let z = Grade::ZERO;
        RelationVector {
            c: z,
            dc: Grade::ONE,
            o: z,
            p: z,
            p_inv: z,
            eq: z,
            pp: z,
            pp_inv: z,
            po: z,
            ec: z,
            tpp: z,
            tpp_inv: z,
            ntpp: z,
            ntpp_inv: z,
        }
    }
}

/// `sup_{s in [0, d]} T(R(d - s), halo(s))`: the degree to which a point at
/// distance `d` from a core is near some point of the fuzzy region.
pub(crate) fn closeness(params: &NearnessParams, t: TNormKind, sr: f64, d: f64) -> f64 {
    if d <= 0.0 {
        return 1.0;
    }
    if sr == 0.0 {
        return params.raw(d);
    }
    let near = |s: f64| params.raw(d - s);
    let halo = |s: f64| halo_profile(sr, s);
    let knots = [0.0, d, d - params.alpha(), d - params.reach(), sr];
    extremum(&knots, 0.0, d, near, halo, |s| t.t(near(s), halo(s)), |a, b| a.max(b), t, false)
}

/// `inf_q I(R(p, q), B(q))` for a point at signed distance `signed` from the
/// core (negative inside): the degree to which every point near `p` belongs
/// to the fuzzy region. Exact for crisp regions and for convex cores.
pub(crate) fn interiority(params: &NearnessParams, t: TNormKind, sr: f64, signed: f64) -> f64 {
    if sr == 0.0 {
        return if signed > 0.0 {
            0.0
        } else {
            t.implies(params.raw(-signed), 0.0)
        };
    }
    let lo = signed.max(0.0);
    let hi = signed.max(sr);
    let near = |s: f64| params.raw(s - signed);
    let halo = |s: f64| halo_profile(sr, s);
    let knots = [
        lo,
        hi,
        signed + params.alpha(),
        signed + params.reach(),
        sr,
    ];
    extremum(
        &knots,
        lo,
        hi,
        near,
        halo,
        |s| t.implies(near(s), halo(s)),
        |a, b| a.min(b),
        t,
        true,
    )
}

/// Extremum of `value(s)` over `[lo, hi]` where `near` and `halo` are affine
/// between consecutive knots. Besides the knots this visits the crossings
/// of the two profiles and, for the product, the vertex of their product.
#[allow(clippy::too_many_arguments)]
fn extremum(
    knots: &[f64],
    lo: f64,
    hi: f64,
    near: impl Fn(f64) -> f64,
    halo: impl Fn(f64) -> f64,
    value: impl Fn(f64) -> f64,
    pick: impl Fn(f64, f64) -> f64,
    t: TNormKind,
    infimum: bool,
) -> f64 {
    let mut s: Vec<f64> = knots
        .iter()
        .copied()
        .filter(|k| *k >= lo && *k <= hi)
        .collect();
    s.sort_by(f64::total_cmp);
    s.dedup();
    let mut best = value(s[0]);
    for &k in &s[1..] {
        best = pick(best, value(k));
    }
    for w in s.windows(2) {
        let (s0, s1) = (w[0], w[1]);
        let span = s1 - s0;
        let (r0, r1) = (near(s0), near(s1));
        let (m0, m1) = (halo(s0), halo(s1));
        let (f0, f1) = (r0 - m0, r1 - m1);
        if (f0 > 0.0) != (f1 > 0.0) && f0 != f1 {
            let x = s0 + span * f0 / (f0 - f1);
            best = pick(best, value(x));
            if infimum && t == TNormKind::Minimum {
                // Gödel implication jumps to 1 at the crossing; its infimum
                // is the limit from the side where near > halo.
                best = pick(best, halo(x));
            }
        }
        if t == TNormKind::Product && !infimum {
            let (kr, km) = ((r1 - r0) / span, (m1 - m0) / span);
            if kr != 0.0 && km != 0.0 {
                let u = -(kr * m0 + km * r0) / (2.0 * kr * km);
                if u > 0.0 && u < span {
                    best = pick(best, value(s0 + u));
                }
            }
        }
    }
    best
}

/// Per-probe quantities for one region.
#[derive(Debug, Clone, Copy)]
struct Side {
    membership: f64,
    close: f64,
    interior: f64,
}

fn side(region: &FuzzyRegion, params: &NearnessParams, t: TNormKind, p: &Point) -> Side {
    let core = region.core();
    let sr = region.support_radius();
    let (distance, signed) = if contains_point(core, p) {
        (0.0, -core.boundary_distance(p))
    } else {
        let d = core.boundary_distance(p);
        (d, d)
    };
    Side {
        membership: halo_profile(sr, distance),
        close: closeness(params, t, sr, distance),
        interior: interiority(params, t, sr, signed),
    }
}

struct PairProbes {
    contact: Vec<(Side, Side)>,
    overlap: Vec<(f64, f64)>,
}

fn halo_box(region: &FuzzyRegion) -> Result<BoundingBox> {
    Ok(bounding_box(region.core())
        .ok_or(Error::EmptyGeometry)?
        .inflate(region.support_radius()))
}

impl PairProbes {
    fn new(a: &FuzzyRegion, b: &FuzzyRegion, cfg: &ConnectionConfig) -> Result<Self> {
        cfg.validate()?;
        let (params, t, dd) = (&cfg.params, cfg.tnorm, cfg.dd);
        let mut contact_points = Vec::new();
        let mut overlap_points = Vec::new();
        for r in [a, b] {
            let bbox = halo_box(r)?;
            let (xs, ys) = bbox.grid_lines(dd);
            for j in 0..dd {
                for i in 0..dd {
                    contact_points.push(Point::new(xs[i], ys[j]));
                    overlap_points.push(Point::new(
                        (xs[i] + xs[i + 1]) / 2.0,
                        (ys[j] + ys[j + 1]) / 2.0,
                    ));
                }
            }
            contact_points.extend(r.core().vertices());
        }
        let contact = contact_points
            .par_iter()
            .map(|p| (side(a, params, t, p), side(b, params, t, p)))
            .collect();
        let overlap = overlap_points
            .par_iter()
            .map(|p| (a.membership_raw(p), b.membership_raw(p)))
            .collect();
        Ok(PairProbes { contact, overlap })
    }

    fn connection(&self, t: TNormKind) -> f64 {
        self.contact
            .iter()
            .map(|(sa, sb)| t.t(sa.membership, sb.close).max(t.t(sb.membership, sa.close)))
            .fold(0.0, f64::max)
    }

    fn overlap(&self, t: TNormKind) -> f64 {
        self.overlap
            .iter()
            .map(|&(ma, mb)| t.t(ma, mb))
            .fold(0.0, f64::max)
    }

    /// Degree to which every point of the first region is near the second.
    fn part_of(&self, t: TNormKind, swapped: bool) -> f64 {
        self.contact
            .iter()
            .map(|(sa, sb)| {
                let (x, y) = if swapped { (sb, sa) } else { (sa, sb) };
                t.implies(x.membership, y.close)
            })
            .fold(1.0, f64::min)
    }

    /// Degree to which everything near the first region lies in the second.
    fn interior_part_of(&self, t: TNormKind, swapped: bool) -> f64 {
        self.contact
            .iter()
            .map(|(sa, sb)| {
                let (x, y) = if swapped { (sb, sa) } else { (sa, sb) };
                t.implies(x.membership, y.interior)
            })
            .fold(1.0, f64::min)
    }
}

fn nonempty_pair(a: &FuzzyRegion, b: &FuzzyRegion) -> Result<bool> {
    a.core().validate()?;
    b.core().validate()?;
    Ok(!(a.is_empty() || b.is_empty()))
}

/// Degree to which some point lies in both regions.
pub fn overlap(a: &FuzzyRegion, b: &FuzzyRegion, cfg: &ConnectionConfig) -> Result<Grade> {
    if !nonempty_pair(a, b)? {
        cfg.validate()?;
        return Ok(Grade::ZERO);
    }
    let probes = PairProbes::new(a, b, cfg)?;
    Ok(Grade::saturating(probes.overlap(cfg.tnorm)))
}

/// Degree to which every point of `a` is near some point of `b`.
pub fn part_of(a: &FuzzyRegion, b: &FuzzyRegion, cfg: &ConnectionConfig) -> Result<Grade> {
    if !nonempty_pair(a, b)? {
        cfg.validate()?;
        return Ok(Grade::ZERO);
    }
    let probes = PairProbes::new(a, b, cfg)?;
    Ok(Grade::saturating(probes.part_of(cfg.tnorm, false)))
}

pub fn relation_vector(
    a: &FuzzyRegion,
    b: &FuzzyRegion,
    cfg: &ConnectionConfig,
) -> Result<RelationVector> {
    if !nonempty_pair(a, b)? {
        cfg.validate()?;
        return Ok(RelationVector::disconnected());
    }
    let t = cfg.tnorm;
    let probes = PairProbes::new(a, b, cfg)?;
    let c = probes.connection(t);
    let o = probes.overlap(t);
    let p = probes.part_of(t, false);
    let p_inv = probes.part_of(t, true);
    let ntp = probes.interior_part_of(t, false);
    let ntp_inv = probes.interior_part_of(t, true);

    let not = |x: f64| 1.0 - x;
    let pp = t.t(p, not(p_inv));
    let pp_inv = t.t(p_inv, not(p));
    let ntpp = t.t(ntp, not(p_inv));
    let ntpp_inv = t.t(ntp_inv, not(p));
    let g = Grade::saturating;
    Ok(RelationVector {
        c: g(c),
        dc: g(not(c)),
        o: g(o),
        p: g(p),
        p_inv: g(p_inv),
        eq: g(t.t(p, p_inv)),
        pp: g(pp),
        pp_inv: g(pp_inv),
        po: g(t.t(o, t.t(not(p), not(p_inv)))),
        ec: g(t.t(c, not(o))),
        tpp: g(t.t(pp, not(ntpp))),
        tpp_inv: g(t.t(pp_inv, not(ntpp_inv))),
        ntpp: g(ntpp),
        ntpp_inv: g(ntpp_inv),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Polygon;

    fn rect(x0: f64, y0: f64, x1: f64, y1: f64, sr: f64) -> FuzzyRegion {
        FuzzyRegion::new(Polygon::rect(x0, y0, x1, y1).unwrap().into(), sr).unwrap()
    }

    fn cfg(alpha: f64, beta: f64, t: TNormKind, dd: usize) -> ConnectionConfig {
        ConnectionConfig::new(NearnessParams::new(alpha, beta).unwrap(), t, dd).unwrap()
    }

    fn near_profile(params: &NearnessParams, t: TNormKind, sr: f64, d: f64) -> f64 {
        // brute force along the segment towards the core
        let n = 20_000;
        (0..=n)
            .map(|k| {
                let s = d * k as f64 / n as f64;
                t.t(params.raw(d - s), halo_profile(sr, s))
            })
            .fold(0.0, f64::max)
    }

    fn interior_profile(params: &NearnessParams, t: TNormKind, sr: f64, signed: f64) -> f64 {
        let lo = signed.max(0.0) + 1e-12;
        let hi = signed.max(sr) + 1.0;
        let n = 40_000;
        (0..=n)
            .map(|k| {
                let s = lo + (hi - lo) * k as f64 / n as f64;
                t.implies(params.raw(s - signed), halo_profile(sr, s))
            })
            .fold(1.0, f64::min)
    }

    #[test]
    fn closeness_matches_brute_force() {
        for t in TNormKind::ALL {
            for (alpha, beta) in [(0.0, 0.5), (0.2, 1.0), (0.0, 0.0), (0.5, 0.1)] {
                let params = NearnessParams::new(alpha, beta).unwrap();
                for sr in [0.3, 1.0, 2.5] {
                    for d in [0.0, 0.05, 0.4, 0.9, 1.7, 3.0] {
                        let exact = closeness(&params, t, sr, d);
                        let brute = near_profile(&params, t, sr, d);
                        assert!(exact >= brute - 1e-12, "{t} {alpha} {beta} {sr} {d}");
                        assert!(exact - brute < 1e-3, "{t} {alpha} {beta} {sr} {d}: {exact} vs {brute}");
                    }
                }
            }
        }
    }

    #[test]
    fn interiority_matches_brute_force() {
        for t in TNormKind::ALL {
            for (alpha, beta) in [(0.0, 0.5), (0.2, 1.0), (0.5, 0.1)] {
                let params = NearnessParams::new(alpha, beta).unwrap();
                for sr in [0.3, 1.0, 2.5] {
                    for signed in [-2.0, -0.7, -0.1, 0.0, 0.2, 0.9, 3.0] {
                        let exact = interiority(&params, t, sr, signed);
                        let brute = interior_profile(&params, t, sr, signed);
                        assert!(exact <= brute + 1e-12, "{t} {alpha} {beta} {sr} {signed}");
                        assert!(
                            brute - exact < 2e-3,
                            "{t} {alpha} {beta} {sr} {signed}: {exact} vs {brute}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn identical_crisp_regions() {
        let a = rect(0.0, 0.0, 1.0, 1.0, 0.0);
        let v = relation_vector(&a, &a, &cfg(0.0, 0.01, TNormKind::Lukasiewicz, 8)).unwrap();
        assert_eq!(v.eq.value(), 1.0);
        assert_eq!(v.c.value(), 1.0);
        assert_eq!(v.dc.value(), 0.0);
        assert_eq!(v.pp.value(), 0.0);
    }

    #[test]
    fn far_apart_regions() {
        let a = rect(0.0, 0.0, 1.0, 1.0, 0.0);
        let b = rect(3.0, 0.0, 4.0, 1.0, 0.0);
        let v = relation_vector(&a, &b, &cfg(0.0, 0.5, TNormKind::Lukasiewicz, 8)).unwrap();
        for (r, g) in v.iter() {
            let expected = if r == Relation::DC { 1.0 } else { 0.0 };
            assert_eq!(g.value(), expected, "{r}");
        }
    }

    #[test]
    fn nested_regions() {
        let inner = rect(0.0, 0.0, 1.0, 1.0, 0.0);
        let outer = rect(-1.0, -1.0, 2.0, 2.0, 0.0);
        let c = cfg(0.0, 0.01, TNormKind::Lukasiewicz, 8);
        let v = relation_vector(&inner, &outer, &c).unwrap();
        assert_eq!(v.ntpp.value(), 1.0);
        assert_eq!(v.tpp.value(), 0.0);
        assert_eq!(v.po.value(), 0.0);
        assert_eq!(part_of(&inner, &outer, &c).unwrap().value(), 1.0);
        assert_eq!(part_of(&inner, &inner, &c).unwrap().value(), 1.0);
    }

    #[test]
    fn overlap_examples() {
        let c = cfg(0.0, 0.01, TNormKind::Lukasiewicz, 8);
        let a = rect(0.0, 0.0, 1.0, 1.0, 0.0);
        let shifted = rect(0.5, 0.0, 1.5, 1.0, 0.0);
        let apart = rect(1.2, 0.0, 2.0, 1.0, 0.0);
        let touching = rect(1.0, 0.0, 2.0, 1.0, 0.0);
        assert_eq!(overlap(&a, &a, &c).unwrap().value(), 1.0);
        assert_eq!(overlap(&a, &shifted, &c).unwrap().value(), 1.0);
        assert_eq!(overlap(&a, &apart, &c).unwrap().value(), 0.0);
        assert_eq!(overlap(&a, &touching, &c).unwrap().value(), 0.0);
    }

    #[test]
    fn relation_names_round_trip() {
        for r in Relation::ALL {
            assert_eq!(r.name().parse::<Relation>().unwrap(), r);
            assert_eq!(r.converse().converse(), r);
        }
        assert_eq!("tppi".parse::<Relation>().unwrap(), Relation::TPPInv);
        assert!(matches!("XYZ".parse::<Relation>(), Err(Error::UnknownRelation(_))));
    }
}
