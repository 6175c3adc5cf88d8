//! Crisp and fuzzy skylines over per-target distance or connection scores.
//!
//! Every dimension is "smaller is better". The fuzzy skyline grades each
//! candidate by how far it escapes domination, where a strict improvement
//! smaller than the nearness tolerance only counts partially.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::connection::{connect_grid, ConnectionConfig, NearnessParams};
use crate::dataset::RegionRecord;
use crate::error::{Error, Result};
use crate::fuzzy::{FuzzyRegion, Grade, TNormKind};
use crate::geometry::distance_geometry_geometry;

#[derive(Debug, Clone, PartialEq)]
pub struct CandidateTuple {
    pub region_id: i64,
    pub values: Vec<f64>,
}

impl CandidateTuple {
    pub fn new(region_id: i64, values: Vec<f64>) -> Result<Self> {
        if let Some(v) = values.iter().find(|v| !v.is_finite() || **v < 0.0) {
            return Err(Error::InvalidParameter(format!(
                "candidate {region_id} has non-finite or negative value {v}"
            )));
        }
        Ok(CandidateTuple { region_id, values })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SkylineMode {
    /// Values are core-to-core distances.
    #[default]
    DistanceOnly,
    /// Values are `1 - connection grade`.
    ConnectionBased,
}

#[derive(Debug, Clone)]
pub struct SkylineQuery {
    pub targets: Vec<FuzzyRegion>,
    pub mode: SkylineMode,
    pub params: NearnessParams,
    pub min_c: Grade,
    pub tnorm: TNormKind,
    pub cfg: ConnectionConfig,
}

impl SkylineQuery {
    pub fn validate(&self) -> Result<()> {
        if self.targets.is_empty() {
            return Err(Error::InvalidParameter(
                "a skyline query needs at least one target".into(),
            ));
        }
        self.cfg.validate()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SkylineEntry {
    pub region_id: i64,
    pub grade: Grade,
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct SkylineResult {
    pub entries: Vec<SkylineEntry>,
}

impl SkylineResult {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn ids(&self) -> BTreeSet<i64> {
        self.entries.iter().map(|e| e.region_id).collect()
    }
}

pub fn build_candidates(regions: &[RegionRecord], q: &SkylineQuery) -> Result<Vec<CandidateTuple>> {
    q.validate()?;
    if regions.is_empty() {
        return Err(Error::EmptyDataset);
    }
    regions
        .par_iter()
        .map(|r| {
            let values = q
                .targets
                .iter()
                .map(|t| match q.mode {
                    SkylineMode::DistanceOnly => {
                        Ok(distance_geometry_geometry(r.fuzzy.core(), t.core()))
                    }
                    SkylineMode::ConnectionBased => {
                        Ok(1.0 - connect_grid(&r.fuzzy, t, &q.cfg)?.value())
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            CandidateTuple::new(r.id, values)
        })
        .collect()
}

fn check_dims(cands: &[CandidateTuple]) -> Result<()> {
    if let Some(first) = cands.first() {
        let n = first.values.len();
        if let Some(bad) = cands.iter().find(|c| c.values.len() != n) {
            return Err(Error::InvalidParameter(format!(
                "candidate {} has {} values, expected {n}",
                bad.region_id,
                bad.values.len()
            )));
        }
    }
    Ok(())
}

fn dominates(u: &[f64], v: &[f64]) -> bool {
    u.iter().zip(v).all(|(a, b)| a <= b) && u.iter().zip(v).any(|(a, b)| a < b)
}

/// Block-nested-loop skyline with an in-memory window.
pub fn crisp_skyline(cands: &[CandidateTuple]) -> Result<BTreeSet<i64>> {
    check_dims(cands)?;
    let mut window: Vec<&CandidateTuple> = Vec::new();
    for c in cands {
        if window.iter().any(|w| dominates(&w.values, &c.values)) {
            continue;
        }
        window.retain(|w| !dominates(&c.values, &w.values));
        window.push(c);
    }
    Ok(window.iter().map(|c| c.region_id).collect())
}

/// Degree to which `u` strictly dominates `v`.
///
/// `u` must be at least as good as `v` on every dimension. It then
/// dominates to the degree that some improvement is not "near" zero:
/// `T(all_i [u_i <= v_i], max_i (1 - R(v_i - u_i)))`, the max running over
/// dimensions where `u` is strictly better.
pub fn fuzzy_dominance(
    u: &CandidateTuple,
    v: &CandidateTuple,
    params: &NearnessParams,
    tnorm: TNormKind,
) -> Grade {
    Grade::saturating(dominance_raw(&u.values, &v.values, params, tnorm))
}

fn dominance_raw(u: &[f64], v: &[f64], params: &NearnessParams, tnorm: TNormKind) -> f64 {
    let mut atleast = 1.0;
    let mut strictly = 0.0_f64;
    for (&a, &b) in u.iter().zip(v) {
        let ge = if a <= b { 1.0 } else { 0.0 };
        atleast = tnorm.t(atleast, ge);
        if a < b {
            strictly = strictly.max(1.0 - params.raw(b - a));
        }
    }
    tnorm.t(atleast, strictly)
}

pub fn fuzzy_skyline(cands: &[CandidateTuple], q: &SkylineQuery) -> Result<SkylineResult> {
    check_dims(cands)?;
    let mut entries: Vec<SkylineEntry> = cands
        .par_iter()
        .enumerate()
        .map(|(i, u)| {
            let worst = cands
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, v)| dominance_raw(&v.values, &u.values, &q.params, q.tnorm))
                .fold(0.0, f64::max);
            SkylineEntry {
                region_id: u.region_id,
                grade: Grade::saturating(1.0 - worst),
                values: u.values.clone(),
            }
        })
        .filter(|e| e.grade >= q.min_c)
        .collect();
    entries.sort_by(|a, b| {
        b.grade
            .value()
            .total_cmp(&a.grade.value())
            .then(a.region_id.cmp(&b.region_id))
    });
    Ok(SkylineResult { entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cand(id: i64, v: &[f64]) -> CandidateTuple {
        CandidateTuple::new(id, v.to_vec()).unwrap()
    }

    fn query(alpha: f64, beta: f64, min_c: f64) -> SkylineQuery {
        let params = NearnessParams::new(alpha, beta).unwrap();
        SkylineQuery {
            targets: Vec::new(),
            mode: SkylineMode::DistanceOnly,
            params,
            min_c: Grade::new(min_c).unwrap(),
            tnorm: TNormKind::Lukasiewicz,
            cfg: ConnectionConfig::default(),
        }
    }

    fn four() -> Vec<CandidateTuple> {
        vec![
            cand(1, &[1.0, 3.0]),
            cand(2, &[2.0, 2.0]),
            cand(3, &[3.0, 1.0]),
            cand(4, &[3.0, 3.0]),
        ]
    }

    #[test]
    fn crisp_examples() {
        let c = four();
        assert_eq!(crisp_skyline(&c[..3]).unwrap(), BTreeSet::from([1, 2, 3]));
        assert_eq!(crisp_skyline(&c).unwrap(), BTreeSet::from([1, 2, 3]));
        assert_eq!(crisp_skyline(&c[3..]).unwrap(), BTreeSet::from([4]));
        assert!(crisp_skyline(&[cand(1, &[1.0]), cand(2, &[1.0, 2.0])]).is_err());
    }

    #[test]
    fn dominance_examples() {
        let p = NearnessParams::new(0.0, 1.0).unwrap();
        let t = TNormKind::Lukasiewicz;
        let u = cand(1, &[1.0, 1.0]);
        let v = cand(2, &[2.0, 2.0]);
        assert_eq!(fuzzy_dominance(&u, &v, &p, t).value(), 1.0);
        assert_eq!(fuzzy_dominance(&u, &u, &p, t).value(), 0.0);
        // a slightly worse dimension blocks domination outright
        let w = cand(3, &[1.0, 2.4]);
        assert_eq!(fuzzy_dominance(&w, &cand(4, &[2.0, 2.0]), &p, t).value(), 0.0);
        // a small improvement only dominates partially
        let x = cand(5, &[1.5, 2.0]);
        assert_eq!(fuzzy_dominance(&x, &cand(6, &[2.0, 2.0]), &p, t).value(), 0.5);
    }

    #[test]
    fn zero_tolerance_matches_crisp() {
        let c = four();
        let r = fuzzy_skyline(&c, &query(0.0, 0.0, 0.5)).unwrap();
        assert_eq!(r.ids(), crisp_skyline(&c).unwrap());
        assert!(r.entries.iter().all(|e| e.grade == Grade::ONE));
    }

    #[test]
    fn min_c_zero_keeps_everything_sorted() {
        let c = four();
        let r = fuzzy_skyline(&c, &query(0.0, 0.0, 0.0)).unwrap();
        assert_eq!(r.len(), 4);
        let ids: Vec<_> = r.entries.iter().map(|e| e.region_id).collect();
        assert_eq!(ids, vec![1, 2, 3, 4]);
        assert_eq!(r.entries[3].grade, Grade::ZERO);
    }

    #[test]
    fn wide_tolerance_admits_dominated() {
        // (2,2) beats (3,3) by one unit per dimension, inside the tolerance
        let pair = [cand(2, &[2.0, 2.0]), cand(4, &[3.0, 3.0])];
        let r = fuzzy_skyline(&pair, &query(0.0, 2.0, 0.4)).unwrap();
        assert_eq!(r.len(), 2);
        let last = r.entries.last().unwrap();
        assert_eq!(last.region_id, 4);
        assert_eq!(last.grade.value(), 0.5);
        // (1,3) beats it by two, which is beyond the tolerance
        let r = fuzzy_skyline(&four(), &query(0.0, 2.0, 0.0)).unwrap();
        assert_eq!(r.entries[3].grade, Grade::ZERO);
    }

    #[test]
    fn rejects_bad_values() {
        assert!(CandidateTuple::new(1, vec![f64::NAN]).is_err());
        assert!(CandidateTuple::new(1, vec![-1.0]).is_err());
    }
}
