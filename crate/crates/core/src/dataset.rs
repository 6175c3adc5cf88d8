//! Region datasets: GeoJSON and WKT-per-line ingestion, support-radius
//! assignment, overlap reports and staged threshold classification.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use geojson::{Feature, FeatureCollection, GeoJson, GeometryValue, JsonObject, JsonValue};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::connection::{connect_grid, ConnectionConfig};
use crate::error::{Error, Result};
use crate::fuzzy::{FuzzyRegion, Grade};
use crate::geometry::{Geometry, Point, Polygon, Ring};
use crate::rcc::overlap;

#[derive(Debug, Clone, PartialEq)]
pub struct RegionRecord {
    pub id: i64,
    pub name: String,
    pub fuzzy: FuzzyRegion,
    pub attributes: BTreeMap<String, f64>,
}

impl RegionRecord {
    pub fn new(id: i64, name: impl Into<String>, fuzzy: FuzzyRegion) -> Self {
        RegionRecord {
            id,
            name: name.into(),
            fuzzy,
            attributes: BTreeMap::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Dataset {
    pub records: Vec<RegionRecord>,
    pub units_note: String,
}

impl Dataset {
    /// Checks id uniqueness and attribute finiteness.
    pub fn new(records: Vec<RegionRecord>, units_note: impl Into<String>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for r in &records {
            if !seen.insert(r.id) {
                return Err(Error::DuplicateId(r.id));
            }
            if let Some((k, v)) = r.attributes.iter().find(|(_, v)| !v.is_finite()) {
                return Err(Error::InvalidParameter(format!(
                    "region {}: attribute {k} is not finite ({v})",
                    r.id
                )));
            }
        }
        Ok(Dataset {
            records,
            units_note: units_note.into(),
        })
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn get(&self, id: i64) -> Result<&RegionRecord> {
        self.records
            .iter()
            .find(|r| r.id == id)
            .ok_or(Error::UnknownId(id))
    }

    fn require_nonempty(&self) -> Result<()> {
        if self.is_empty() {
            Err(Error::EmptyDataset)
        } else {
            Ok(())
        }
    }
}

const GEOGRAPHIC_NOTE: &str =
    "coordinates look geographic (degrees); distances are planar in coordinate units";

fn units_note(records: &[RegionRecord]) -> String {
    let geographic = records.iter().all(|r| {
        r.fuzzy
            .core()
            .vertices()
            .iter()
            .all(|p| p.x.abs() <= 180.0 && p.y.abs() <= 90.0)
    });
    if geographic {
        GEOGRAPHIC_NOTE.to_string()
    } else {
        "planar coordinates".to_string()
    }
}

/// Reads a GeoJSON FeatureCollection, or a text file of `id<TAB>WKT` lines.
/// Files ending in `.geojson`/`.json`, or starting with `{`, are GeoJSON.
pub fn load_regions(path: &Path) -> Result<Dataset> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let location = path.display().to_string();
    let is_json = matches!(
        path.extension().and_then(|e| e.to_str()),
        Some("geojson" | "json")
    ) || text.trim_start().starts_with('{');
    if is_json {
        parse_geojson(&text, &location)
    } else {
        parse_wkt_lines(&text, &location)
    }
}

fn finish(records: Vec<RegionRecord>, rejected: Vec<i64>) -> Result<Dataset> {
    if !rejected.is_empty() {
        return Err(Error::RejectedFeatures(rejected));
    }
    if records.is_empty() {
        return Err(Error::EmptyDataset);
    }
    let note = units_note(&records);
    Dataset::new(records, note)
}

pub fn parse_geojson(text: &str, location: &str) -> Result<Dataset> {
    let gj = GeoJson::from_str(text).map_err(|e| Error::parse(location, e.to_string()))?;
    let fc = match gj {
        GeoJson::FeatureCollection(fc) => fc,
        _ => return Err(Error::parse(location, "expected a FeatureCollection")),
    };
    let mut records = Vec::with_capacity(fc.features.len());
    let mut rejected = Vec::new();
    for (k, f) in fc.features.iter().enumerate() {
        let at = |msg: String| Error::parse(format!("{location}: feature {k}"), msg);
        let props = f.properties.as_ref();
        let id = props
            .and_then(|p| p.get("id"))
            .and_then(JsonValue::as_i64)
            .or(match &f.id {
                Some(geojson::feature::Id::Number(n)) => n.as_i64(),
                _ => None,
            })
            .ok_or_else(|| at("missing integer id".into()))?;
        let core = match f.geometry.as_ref().map(|g| &g.value) {
            Some(GeometryValue::Polygon { coordinates }) => {
                Geometry::Polygon(polygon_from_rings(coordinates).map_err(|e| at(e.to_string()))?)
            }
            Some(GeometryValue::MultiPolygon { coordinates }) => {
                let polys = coordinates
                    .iter()
                    .map(|p| polygon_from_rings(p))
                    .collect::<Result<Vec<_>>>()
                    .map_err(|e| at(e.to_string()))?;
                Geometry::multi_polygon(polys).map_err(|e| at(e.to_string()))?
            }
            _ => {
                rejected.push(id);
                continue;
            }
        };
        let mut rec = RegionRecord::new(
            id,
            props
                .and_then(|p| p.get("name"))
                .and_then(JsonValue::as_str)
                .map_or_else(|| id.to_string(), str::to_string),
            FuzzyRegion::crisp(core).map_err(|e| at(e.to_string()))?,
        );
        if let Some(p) = props {
            for (key, value) in p {
                if key != "id" {
                    if let Some(x) = value.as_f64() {
                        rec.attributes.insert(key.clone(), x);
                    }
                }
            }
        }
        records.push(rec);
    }
    finish(records, rejected)
}

fn polygon_from_rings(rings: &[Vec<geojson::Position>]) -> Result<Polygon> {
    let mut rings = rings.iter().map(|ring| {
        Ring::new(
            ring.iter()
                .map(|pos| match pos.as_slice() {
                    [x, y, ..] => Point::new(*x, *y),
                    _ => Point::new(f64::NAN, f64::NAN),
                })
                .collect(),
        )
    });
    let exterior = rings
        .next()
        .ok_or_else(|| Error::InvalidGeometry("polygon without rings".into()))??;
    Polygon::new(exterior, rings.collect::<Result<Vec<_>>>()?)
}

pub fn parse_wkt_lines(text: &str, location: &str) -> Result<Dataset> {
    let mut records = Vec::new();
    let mut rejected = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let at = |msg: String| Error::parse(format!("{location}:{}", n + 1), msg);
        let line = line.trim_end_matches('\r');
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let (id, wkt_text) = line
            .split_once('\t')
            .ok_or_else(|| at("expected `id<TAB>WKT`".into()))?;
        let id: i64 = id
            .trim()
            .parse()
            .map_err(|_| at(format!("bad id {:?}", id.trim())))?;
        let parsed = wkt::Wkt::<f64>::from_str(wkt_text.trim()).map_err(|e| at(e.to_string()))?;
        let core = match parsed {
            wkt::Wkt::Polygon(p) => Geometry::Polygon(wkt_polygon(&p).map_err(|e| at(e.to_string()))?),
            wkt::Wkt::MultiPolygon(mp) => {
                let polys = mp
                    .polygons()
                    .iter()
                    .map(wkt_polygon)
                    .collect::<Result<Vec<_>>>()
                    .map_err(|e| at(e.to_string()))?;
                Geometry::multi_polygon(polys).map_err(|e| at(e.to_string()))?
            }
            _ => {
                rejected.push(id);
                continue;
            }
        };
        let fuzzy = FuzzyRegion::crisp(core).map_err(|e| at(e.to_string()))?;
        records.push(RegionRecord::new(id, id.to_string(), fuzzy));
    }
    let mut seen = BTreeSet::new();
    if let Some(dup) = records.iter().find(|r| !seen.insert(r.id)) {
        return Err(Error::DuplicateId(dup.id));
    }
    finish(records, rejected)
}

fn wkt_polygon(p: &wkt::types::Polygon<f64>) -> Result<Polygon> {
    let mut rings = p.rings().iter().map(|ls| {
        Ring::new(ls.coords().iter().map(|c| Point::new(c.x, c.y)).collect())
    });
    let exterior = rings
        .next()
        .ok_or_else(|| Error::InvalidGeometry("empty polygon".into()))??;
    Polygon::new(exterior, rings.collect::<Result<Vec<_>>>()?)
}

fn closed_ring(r: &Ring) -> Vec<geojson::Position> {
    let v = r.vertices();
    v.iter()
        .chain(v.first())
        .map(|p| geojson::Position::from([p.x, p.y]))
        .collect()
}

fn polygon_rings(p: &Polygon) -> Vec<Vec<geojson::Position>> {
    p.rings().map(closed_ring).collect()
}

fn geometry_value(g: &Geometry) -> Option<GeometryValue> {
    match g {
        Geometry::Empty => None,
        Geometry::Point(p) => Some(GeometryValue::new_point([p.x, p.y])),
        Geometry::Polygon(p) => Some(GeometryValue::Polygon {
            coordinates: polygon_rings(p),
        }),
        Geometry::MultiPolygon(ps) => Some(GeometryValue::MultiPolygon {
            coordinates: ps.iter().map(polygon_rings).collect(),
        }),
    }
}

fn feature(rec: &RegionRecord, extra: &[(&str, JsonValue)]) -> Feature {
    let mut props = JsonObject::new();
    props.insert("id".into(), rec.id.into());
    props.insert("name".into(), rec.name.clone().into());
    for (k, v) in &rec.attributes {
        props.insert(k.clone(), (*v).into());
    }
    for (k, v) in extra {
        props.insert((*k).to_string(), v.clone());
    }
    Feature {
        bbox: None,
        geometry: geometry_value(rec.fuzzy.core()).map(geojson::Geometry::new),
        id: None,
        properties: Some(props),
        foreign_members: None,
    }
}

/// Serializes the dataset as a GeoJSON FeatureCollection readable by
/// [`parse_geojson`]. Support radii are not stored.
pub fn to_geojson(ds: &Dataset) -> String {
    FeatureCollection::new(ds.records.iter().map(|r| feature(r, &[]))).to_string()
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RadiusAssignment {
    Uniform(f64),
    /// Draws from `[lo, hi]` with ChaCha8 seeded by `seed`, one draw per
    /// record in dataset order.
    SeededRandom { lo: f64, hi: f64, seed: u64 },
}

pub fn assign_support_radii(ds: &Dataset, mode: RadiusAssignment) -> Result<Dataset> {
    let mut out = ds.clone();
    match mode {
        RadiusAssignment::Uniform(r) => {
            for rec in &mut out.records {
                rec.fuzzy = rec.fuzzy.with_support_radius(r)?;
            }
        }
        RadiusAssignment::SeededRandom { lo, hi, seed } => {
            if !(lo.is_finite() && hi.is_finite() && 0.0 <= lo && lo <= hi) {
                return Err(Error::InvalidParameter(format!(
                    "support radius range must satisfy 0 <= lo <= hi, got [{lo}, {hi}]"
                )));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for rec in &mut out.records {
                rec.fuzzy = rec.fuzzy.with_support_radius(rng.random_range(lo..=hi))?;
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
pub struct OverlapRow {
    pub id: i64,
    pub name: String,
    pub overlap: Grade,
    pub attributes: Vec<Option<f64>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OverlapReport {
    pub keys: Vec<String>,
    pub rows: Vec<OverlapRow>,
    /// Rank correlation of overlap against each key; `None` when fewer than
    /// two rows carry the key or either side is constant.
    pub spearman: Vec<Option<f64>>,
}

impl OverlapReport {
    pub fn write_csv<W: Write>(&self, out: W, precision: usize) -> Result<()> {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
        let mut header = vec!["id".to_string(), "name".into(), "overlap".into()];
        header.extend(self.keys.iter().cloned());
        w.write_record(&header)?;
        for row in &self.rows {
            let mut rec = vec![
                row.id.to_string(),
                row.name.clone(),
                format!("{:.precision$}", row.overlap.value()),
            ];
            rec.extend(
                row.attributes
                    .iter()
                    .map(|a| a.map_or_else(String::new, |x| x.to_string())),
            );
            w.write_record(&rec)?;
        }
        w.flush().map_err(csv::Error::from)?;
        Ok(())
    }

    /// One `spearman,<key>,<rho>` line per key (`NA` when undefined).
    pub fn summary(&self, precision: usize) -> String {
        let mut s = String::new();
        for (k, rho) in self.keys.iter().zip(&self.spearman) {
            match rho {
                Some(r) => writeln!(s, "spearman,{k},{r:.precision$}"),
                None => writeln!(s, "spearman,{k},NA"),
            }
            .expect("writing to a String");
        }
        s
    }
}

pub fn overlap_report(
    ds: &Dataset,
    layer: &FuzzyRegion,
    cfg: &ConnectionConfig,
    attribute_keys: &[String],
) -> Result<OverlapReport> {
    ds.require_nonempty()?;
    let grades = ds
        .records
        .par_iter()
        .map(|r| overlap(&r.fuzzy, layer, cfg))
        .collect::<Result<Vec<_>>>()?;
    let mut rows: Vec<OverlapRow> = ds
        .records
        .iter()
        .zip(grades)
        .map(|(r, g)| OverlapRow {
            id: r.id,
            name: r.name.clone(),
            overlap: g,
            attributes: attribute_keys
                .iter()
                .map(|k| r.attributes.get(k).copied())
                .collect(),
        })
        .collect();
    rows.sort_by(|a, b| {
        b.overlap
            .value()
            .total_cmp(&a.overlap.value())
            .then(a.id.cmp(&b.id))
    });
    let spearman = (0..attribute_keys.len())
        .map(|k| {
            let (xs, ys): (Vec<f64>, Vec<f64>) = rows
                .iter()
                .filter_map(|r| r.attributes[k].map(|a| (r.overlap.value(), a)))
                .unzip();
            spearman(&xs, &ys)
        })
        .collect();
    Ok(OverlapReport {
        keys: attribute_keys.to_vec(),
        rows,
        spearman,
    })
}

/// Ranks starting at 1, ties sharing their average rank.
fn ranks(xs: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..xs.len()).collect();
    order.sort_by(|&i, &j| xs[i].total_cmp(&xs[j]));
    let mut r = vec![0.0; xs.len()];
    let mut i = 0;
    while i < order.len() {
        let mut j = i;
        while j + 1 < order.len() && xs[order[j + 1]] == xs[order[i]] {
            j += 1;
        }
        let avg = (i + j) as f64 / 2.0 + 1.0;
        for &k in &order[i..=j] {
            r[k] = avg;
        }
        i = j + 1;
    }
    r
}

/// Spearman's rho: Pearson correlation of the rank vectors.
pub fn spearman(xs: &[f64], ys: &[f64]) -> Option<f64> {
    if xs.len() != ys.len() || xs.len() < 2 {
        return None;
    }
    let (rx, ry) = (ranks(xs), ranks(ys));
    let n = xs.len() as f64;
    let (mx, my) = (rx.iter().sum::<f64>() / n, ry.iter().sum::<f64>() / n);
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (a, b) in rx.iter().zip(&ry) {
        sxy += (a - mx) * (b - my);
        sxx += (a - mx) * (a - mx);
        syy += (b - my) * (b - my);
    }
    if sxx == 0.0 || syy == 0.0 {
        return None;
    }
    Some(sxy / (sxx * syy).sqrt())
}

/// Label for regions that meet no threshold.
pub const UNREACHED: i32 = -1;

#[derive(Debug, Clone, PartialEq)]
pub struct ClassifiedRegion {
    pub id: i64,
    pub connection: Grade,
    pub class: i32,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Classification {
    pub seed_id: i64,
    pub thresholds: Vec<Grade>,
    /// In dataset order.
    pub regions: Vec<ClassifiedRegion>,
}

impl Classification {
    /// Regions whose connection meets `thresholds[k]`, i.e. classes `0..=k`.
    pub fn reached(&self, k: usize) -> BTreeSet<i64> {
        self.regions
            .iter()
            .filter(|r| r.class != UNREACHED && r.class as usize <= k)
            .map(|r| r.id)
            .collect()
    }
}

/// Labels every region with the index of the highest threshold its
/// connection to the seed region meets, or [`UNREACHED`].
pub fn threshold_classification(
    ds: &Dataset,
    seed_region_id: i64,
    cfg: &ConnectionConfig,
    thresholds: &[Grade],
) -> Result<Classification> {
    ds.require_nonempty()?;
    if thresholds.is_empty() {
        return Err(Error::InvalidParameter("no thresholds given".into()));
    }
    if thresholds.iter().any(|t| t.value() <= 0.0)
        || thresholds.windows(2).any(|w| w[1] >= w[0])
    {
        return Err(Error::InvalidParameter(
            "thresholds must be strictly descending in (0, 1]".into(),
        ));
    }
    let seed = &ds.get(seed_region_id)?.fuzzy;
    let regions = ds
        .records
        .par_iter()
        .map(|r| {
            let c = connect_grid(seed, &r.fuzzy, cfg)?;
            let class = thresholds
                .iter()
                .position(|t| c >= *t)
                .map_or(UNREACHED, |k| k as i32);
            Ok(ClassifiedRegion {
                id: r.id,
                connection: c,
                class,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Classification {
        seed_id: seed_region_id,
        thresholds: thresholds.to_vec(),
        regions,
    })
}

/// The dataset as GeoJSON with an integer `class` property per feature.
pub fn classified_geojson(ds: &Dataset, cls: &Classification) -> String {
    let features = ds.records.iter().zip(&cls.regions).map(|(r, c)| {
        debug_assert_eq!(r.id, c.id);
        feature(r, &[("class", c.class.into())])
    });
    FeatureCollection::new(features).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connection::NearnessParams;
    use crate::fuzzy::TNormKind;

    const FC: &str = r#"{"type":"FeatureCollection","features":[
      {"type":"Feature","properties":{"id":1,"name":"a","rate":2.5,"note":"x"},
       "geometry":{"type":"Polygon","coordinates":[[[0,0],[1,0],[1,1],[0,1],[0,0]]]}},
      {"type":"Feature","properties":{"id":2},
       "geometry":{"type":"MultiPolygon","coordinates":[[[[3,0],[4,0],[4,1],[3,0]]],[[[6,0],[7,0],[7,1],[6,0]]]]}}
    ]}"#;

    #[test]
    fn loads_geojson_and_round_trips() {
        let ds = parse_geojson(FC, "t").unwrap();
        assert_eq!(ds.len(), 2);
        assert_eq!(ds.records[0].name, "a");
        assert_eq!(ds.records[0].attributes, BTreeMap::from([("rate".into(), 2.5)]));
        assert_eq!(ds.records[1].name, "2");
        assert_eq!(ds.records[1].fuzzy.core().polygons().len(), 2);
        let again = parse_geojson(&to_geojson(&ds), "t").unwrap();
        assert_eq!(again.records, ds.records);
    }

    #[test]
    fn geojson_errors() {
        let empty = r#"{"type":"FeatureCollection","features":[]}"#;
        assert!(matches!(parse_geojson(empty, "t"), Err(Error::EmptyDataset)));
        let dup = FC.replace(r#""id":2"#, r#""id":1"#);
        assert!(matches!(parse_geojson(&dup, "t"), Err(Error::DuplicateId(1))));
        let line = FC.replace(
            r#"{"type":"Polygon","coordinates":[[[0,0],[1,0],[1,1],[0,1],[0,0]]]}"#,
            r#"{"type":"LineString","coordinates":[[0,0],[1,0]]}"#,
        );
        match parse_geojson(&line, "t") {
            Err(Error::RejectedFeatures(ids)) => assert_eq!(ids, vec![1]),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_geojson("{", "t"), Err(Error::Parse { .. })));
        let no_id = FC.replace(r#""id":2"#, r#""kind":2"#);
        match parse_geojson(&no_id, "t") {
            Err(Error::Parse { location, .. }) => assert_eq!(location, "t: feature 1"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn loads_wkt_lines() {
        let text = "# comment\n7\tPOLYGON((0 0, 2 0, 2 2, 0 2, 0 0))\n\n8\tMULTIPOLYGON(((5 5, 6 5, 6 6, 5 5)))\n";
        let ds = parse_wkt_lines(text, "t").unwrap();
        assert_eq!(ds.records.iter().map(|r| r.id).collect::<Vec<_>>(), vec![7, 8]);
        assert_eq!(ds.records[0].fuzzy.core().area(), 4.0);
        match parse_wkt_lines("1\tPOINT(0 0)\n", "t") {
            Err(Error::RejectedFeatures(ids)) => assert_eq!(ids, vec![1]),
            other => panic!("{other:?}"),
        }
        match parse_wkt_lines("1\tPOLYGON((0 0, 1 0, 1 1, 0 0))\nbad line\n", "f") {
            Err(Error::Parse { location, .. }) => assert_eq!(location, "f:2"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn support_radii() {
        let ds = parse_geojson(FC, "t").unwrap();
        let u = assign_support_radii(&ds, RadiusAssignment::Uniform(1.0)).unwrap();
        assert!(u.records.iter().all(|r| r.fuzzy.support_radius() == 1.0));
        let mode = RadiusAssignment::SeededRandom { lo: 0.0, hi: 3.0, seed: 9 };
        let a = assign_support_radii(&ds, mode).unwrap();
        let b = assign_support_radii(&ds, mode).unwrap();
        assert_eq!(a, b);
        assert!(a.records.iter().all(|r| (0.0..=3.0).contains(&r.fuzzy.support_radius())));
        assert!(assign_support_radii(&ds, RadiusAssignment::Uniform(-1.0)).is_err());
        let bad = RadiusAssignment::SeededRandom { lo: 2.0, hi: 1.0, seed: 0 };
        assert!(assign_support_radii(&ds, bad).is_err());
    }

    #[test]
    fn ranks_and_spearman() {
        assert_eq!(ranks(&[3.0, 1.0, 3.0, 2.0]), vec![3.5, 1.0, 3.5, 2.0]);
        let x = [1.0, 2.0, 3.0, 4.0, 5.0];
        let y = [2.0, 1.0, 4.0, 3.0, 5.0];
        // no ties: 1 - 6 * sum(d^2) / (n (n^2 - 1)) with sum(d^2) = 4
        assert!((spearman(&x, &y).unwrap() - 0.8).abs() < 1e-12);
        assert_eq!(spearman(&x, &[1.0; 5]), None);
        assert_eq!(spearman(&x[..1], &y[..1]), None);
    }

    fn squares() -> Dataset {
        let rects = [
            (1, (0.0, 0.0, 1.0, 1.0)),
            (2, (1.0, 0.0, 2.0, 1.0)),
            (3, (2.5, 0.0, 3.5, 1.0)),
            (4, (10.0, 0.0, 11.0, 1.0)),
        ];
        let records = rects
            .iter()
            .map(|&(id, (a, b, c, d))| {
                let core = Polygon::rect(a, b, c, d).unwrap().into();
                RegionRecord::new(id, format!("r{id}"), FuzzyRegion::new(core, 0.5).unwrap())
            })
            .collect();
        Dataset::new(records, "").unwrap()
    }

    #[test]
    fn thresholds_are_cumulative() {
        let ds = squares();
        let cfg = ConnectionConfig::new(NearnessParams::new(0.0, 0.5).unwrap(), TNormKind::Lukasiewicz, 8)
            .unwrap();
        let ts: Vec<Grade> = [1.0, 0.8, 0.5, 0.2, 0.05]
            .iter()
            .map(|&t| Grade::new(t).unwrap())
            .collect();
        let cls = threshold_classification(&ds, 1, &cfg, &ts).unwrap();
        assert_eq!(cls.regions[0].class, 0);
        assert_eq!(cls.regions[3].class, UNREACHED);
        for k in 1..ts.len() {
            assert!(cls.reached(k - 1).is_subset(&cls.reached(k)));
        }
        let gj = classified_geojson(&ds, &cls);
        assert!(gj.contains(r#""class":-1"#));
        assert!(threshold_classification(&ds, 99, &cfg, &ts).is_err());
        assert!(threshold_classification(&ds, 1, &cfg, &[]).is_err());
        let rising = [ts[2], ts[1]];
        assert!(threshold_classification(&ds, 1, &cfg, &rising).is_err());
    }

    #[test]
    fn overlap_ranking() {
        let mut ds = squares();
        for (r, v) in ds.records.iter_mut().zip([4.0, 3.0, 2.0, 1.0]) {
            r.attributes.insert("rate".into(), v);
        }
        let layer = FuzzyRegion::crisp(Polygon::rect(-1.0, -1.0, 1.5, 2.0).unwrap().into()).unwrap();
        let cfg = ConnectionConfig::default();
        let rep = overlap_report(&ds, &layer, &cfg, &["rate".into(), "missing".into()]).unwrap();
        let ids: Vec<_> = rep.rows.iter().map(|r| r.id).collect();
        assert_eq!(ids[0], 1);
        assert_eq!(rep.rows[0].overlap, Grade::ONE);
        assert_eq!(rep.rows.last().unwrap().overlap, Grade::ZERO);
        assert_eq!(rep.spearman[1], None);
        let mut buf = Vec::new();
        rep.write_csv(&mut buf, 4).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("id,name,overlap,rate,missing\n1,r1,1.0000,4,\n"));
        assert!(rep.summary(4).contains("spearman,missing,NA"));
    }
}
