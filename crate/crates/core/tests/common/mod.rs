//! Fixtures shared by the integration tests.
#![allow(dead_code)]

use std::f64::consts::TAU;

use fuzzy_rcc::{FuzzyRegion, Geometry, Polygon, RegionRecord};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rect(x0: f64, y0: f64, x1: f64, y1: f64) -> Geometry {
    Polygon::rect(x0, y0, x1, y1).unwrap().into()
}

pub fn region(core: Geometry, sr: f64) -> FuzzyRegion {
    FuzzyRegion::new(core, sr).unwrap()
}

/// Regular `n`-gon around `(cx, cy)` with circumradius `r`, rotated by `phase`.
pub fn ngon(cx: f64, cy: f64, r: f64, n: usize, phase: f64) -> Geometry {
    let pts: Vec<(f64, f64)> = (0..n)
        .map(|k| {
            let a = phase + TAU * k as f64 / n as f64;
            (cx + r * a.cos(), cy + r * a.sin())
        })
        .collect();
    Polygon::from_coords(&pts).unwrap().into()
}

/// A random convex polygon (3 to 8 sides) of circumradius `r`.
pub fn random_convex(rng: &mut ChaCha8Rng, cx: f64, cy: f64, r: f64) -> Geometry {
    let n = rng.random_range(3..=8);
    let phase = rng.random_range(0.0..TAU);
    ngon(cx, cy, r, n, phase)
}

/// `n` convex regions scattered over a 12 x 12 square, ids `1..=n`, with
/// one numeric attribute `rate`.
pub fn synthetic_records(n: usize, seed: u64) -> Vec<RegionRecord> {
    let mut rng = rng(seed);
    (0..n)
        .map(|k| {
            let cx = rng.random_range(0.0..12.0);
            let cy = rng.random_range(0.0..12.0);
            let r = rng.random_range(0.3..0.9);
            let core = random_convex(&mut rng, cx, cy, r);
            let id = k as i64 + 1;
            let mut rec = RegionRecord::new(id, format!("area{id}"), region(core, 0.0));
            rec.attributes.insert("rate".into(), rng.random_range(0.0..100.0));
            rec
        })
        .collect()
}

pub fn features_json(records: &[RegionRecord]) -> String {
    fuzzy_rcc::dataset::to_geojson(&fuzzy_rcc::Dataset::new(records.to_vec(), "").unwrap())
}
