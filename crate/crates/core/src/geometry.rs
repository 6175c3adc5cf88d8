//! Planar geometry primitives.
//!
//! Coordinates are opaque planar lengths; all distances are Euclidean.
//! Regions are closed: a point on a boundary is contained.

use crate::error::{Error, Result};

/// Points closer than this to a polygon edge count as lying on it.
pub const BOUNDARY_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn distance(&self, other: &Point) -> f64 {
        distance_point_point(self, other)
    }
}

impl From<(f64, f64)> for Point {
    fn from((x, y): (f64, f64)) -> Self {
        Point { x, y }
    }
}

/// A closed ring of vertices. The closing edge from the last vertex back
/// to the first is implicit.
#[derive(Debug, Clone, PartialEq)]
pub struct Ring {
    vertices: Vec<Point>,
}

impl Ring {
    /// Builds a simple ring. A trailing vertex equal to the first one is
    /// dropped, so GeoJSON/WKT style closed coordinate lists are accepted.
    pub fn new(mut vertices: Vec<Point>) -> Result<Self> {
        if vertices.len() > 1 && vertices.first() == vertices.last() {
            vertices.pop();
        }
        if let Some(p) = vertices.iter().find(|p| !p.is_finite()) {
            return Err(Error::InvalidGeometry(format!(
                "non-finite vertex ({}, {})",
                p.x, p.y
            )));
        }
        if vertices.len() < 3 {
            return Err(Error::InvalidGeometry(format!(
                "ring needs at least 3 distinct vertices, got {}",
                vertices.len()
            )));
        }
        let ring = Ring { vertices };
        ring.check_simple()?;
        Ok(ring)
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Edges in order, including the closing edge.
    pub fn edges(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// Shoelace area; positive for counter-clockwise rings.
    pub fn signed_area(&self) -> f64 {
        self.edges()
            .map(|(a, b)| a.x * b.y - b.x * a.y)
            .sum::<f64>()
            / 2.0
    }

    fn boundary_distance(&self, p: &Point) -> f64 {
        self.edges()
            .map(|(a, b)| point_segment_distance(p, &a, &b))
            .fold(f64::INFINITY, f64::min)
    }

    /// Even-odd crossing test, boundary handling left to the caller.
    fn crosses(&self, p: &Point) -> bool {
        let mut inside = false;
        for (a, b) in self.edges() {
            if (a.y > p.y) != (b.y > p.y) {
                let x_cross = (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x;
                if p.x < x_cross {
                    inside = !inside;
                }
            }
        }
        inside
    }

    fn contains_closed(&self, p: &Point) -> bool {
        self.boundary_distance(p) <= BOUNDARY_TOLERANCE || self.crosses(p)
    }

    fn check_simple(&self) -> Result<()> {
        let v = &self.vertices;
        let n = v.len();
        for i in 0..n {
            if v[i] == v[(i + 1) % n] {
                return Err(Error::InvalidGeometry(format!(
                    "repeated consecutive vertex ({}, {})",
                    v[i].x, v[i].y
                )));
            }
        }
        if self.signed_area() == 0.0 {
            return Err(Error::InvalidGeometry("ring has zero area".into()));
        }
        let edges: Vec<(Point, Point)> = self.edges().collect();
        for i in 0..n {
            for j in (i + 1)..n {
                let adjacent = j == i + 1 || (i == 0 && j == n - 1);
                let (a, b) = edges[i];
                let (c, d) = edges[j];
                if adjacent {
                    // shared vertex; reject edges folding back onto each other
                    let (shared, p, q) = if b == c { (b, a, d) } else { (a, b, c) };
                    if orientation(&p, &shared, &q) == 0.0
                        && (p.x - shared.x) * (q.x - shared.x) + (p.y - shared.y) * (q.y - shared.y)
                            > 0.0
                    {
                        return Err(Error::InvalidGeometry("ring folds back on itself".into()));
                    }
                } else if segments_intersect(&a, &b, &c, &d) {
                    return Err(Error::InvalidGeometry(format!(
                        "ring self-intersects between edges {i} and {j}"
                    )));
                }
            }
        }
        Ok(())
    }

    fn intersects_ring(&self, other: &Ring) -> bool {
        self.edges().any(|(a, b)| {
            other
                .edges()
                .any(|(c, d)| segments_intersect(&a, &b, &c, &d))
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Polygon {
    exterior: Ring,
    holes: Vec<Ring>,
}

impl Polygon {
    pub fn new(exterior: Ring, holes: Vec<Ring>) -> Result<Self> {
        for (k, hole) in holes.iter().enumerate() {
            let strictly_inside = hole.vertices().iter().all(|p| {
                exterior.crosses(p) && exterior.boundary_distance(p) > BOUNDARY_TOLERANCE
            });
            if !strictly_inside || hole.intersects_ring(&exterior) {
                return Err(Error::InvalidGeometry(format!(
                    "hole {k} is not strictly inside the exterior ring"
                )));
            }
        }
        for i in 0..holes.len() {
            for j in (i + 1)..holes.len() {
                let (h1, h2) = (&holes[i], &holes[j]);
                if h1.intersects_ring(h2)
                    || h1.vertices().iter().any(|p| h2.contains_closed(p))
                    || h2.vertices().iter().any(|p| h1.contains_closed(p))
                {
                    return Err(Error::InvalidGeometry(format!(
                        "holes {i} and {j} are not disjoint"
                    )));
                }
            }
        }
        Ok(Polygon { exterior, holes })
    }

    /// Polygon without holes from a vertex list.
    pub fn from_coords(coords: &[(f64, f64)]) -> Result<Self> {
        let ring = Ring::new(coords.iter().copied().map(Point::from).collect())?;
        Polygon::new(ring, Vec::new())
    }

    /// Axis-aligned rectangle.
    pub fn rect(min_x: f64, min_y: f64, max_x: f64, max_y: f64) -> Result<Self> {
        Polygon::from_coords(&[(min_x, min_y), (max_x, min_y), (max_x, max_y), (min_x, max_y)])
    }

    pub fn exterior(&self) -> &Ring {
        &self.exterior
    }

    pub fn holes(&self) -> &[Ring] {
        &self.holes
    }

    pub fn rings(&self) -> impl Iterator<Item = &Ring> {
        std::iter::once(&self.exterior).chain(self.holes.iter())
    }

    pub fn area(&self) -> f64 {
        self.exterior.signed_area().abs()
            - self.holes.iter().map(|h| h.signed_area().abs()).sum::<f64>()
    }

    fn edges(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        self.rings().flat_map(|r| r.edges())
    }

    fn boundary_distance(&self, p: &Point) -> f64 {
        self.rings()
            .map(|r| r.boundary_distance(p))
            .fold(f64::INFINITY, f64::min)
    }

    fn contains(&self, p: &Point) -> bool {
        if self.boundary_distance(p) <= BOUNDARY_TOLERANCE {
            return true;
        }
        // even-odd over every ring: inside the exterior and outside all holes
        self.rings().filter(|r| r.crosses(p)).count() % 2 == 1
    }

    fn distance_to(&self, other: &Polygon) -> f64 {
        let touches = self.exterior.vertices().iter().any(|p| other.contains(p))
            || other.exterior.vertices().iter().any(|p| self.contains(p))
            || self.edges().any(|(a, b)| {
                other
                    .edges()
                    .any(|(c, d)| segments_intersect(&a, &b, &c, &d))
            });
        if touches {
            return 0.0;
        }
        let mut best = f64::INFINITY;
        for (a, b) in self.edges() {
            for (c, d) in other.edges() {
                best = best
                    .min(point_segment_distance(&a, &c, &d))
                    .min(point_segment_distance(&b, &c, &d))
                    .min(point_segment_distance(&c, &a, &b))
                    .min(point_segment_distance(&d, &a, &b));
            }
        }
        best
    }
}

/// A region core: a point, a polygon, or a non-empty polygon collection.
/// `Empty` stands for the empty geometry a spatial database may hand back.
#[derive(Debug, Clone, PartialEq)]
pub enum Geometry {
    Empty,
    Point(Point),
    Polygon(Polygon),
    MultiPolygon(Vec<Polygon>),
}

impl From<Polygon> for Geometry {
    fn from(p: Polygon) -> Self {
        Geometry::Polygon(p)
    }
}

impl From<Point> for Geometry {
    fn from(p: Point) -> Self {
        Geometry::Point(p)
    }
}

impl Geometry {
    pub fn multi_polygon(polygons: Vec<Polygon>) -> Result<Self> {
        if polygons.is_empty() {
            return Err(Error::InvalidGeometry(
                "polygon collection must not be empty".into(),
            ));
        }
        Ok(Geometry::MultiPolygon(polygons))
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, Geometry::Empty)
    }

    pub fn is_areal(&self) -> bool {
        matches!(self, Geometry::Polygon(_) | Geometry::MultiPolygon(_))
    }

    /// Checks the invariants that the public variants cannot enforce.
    pub fn validate(&self) -> Result<()> {
        match self {
            Geometry::Point(p) if !p.is_finite() => Err(Error::InvalidGeometry(format!(
                "non-finite point ({}, {})",
                p.x, p.y
            ))),
            Geometry::MultiPolygon(ps) if ps.is_empty() => Err(Error::InvalidGeometry(
                "polygon collection must not be empty".into(),
            )),
            _ => Ok(()),
        }
    }

    pub fn polygons(&self) -> &[Polygon] {
        match self {
            Geometry::Polygon(p) => std::slice::from_ref(p),
            Geometry::MultiPolygon(ps) => ps,
            _ => &[],
        }
    }

    /// Every vertex of every ring (or the point itself).
    pub fn vertices(&self) -> Vec<Point> {
        match self {
            Geometry::Empty => Vec::new(),
            Geometry::Point(p) => vec![*p],
            _ => self
                .polygons()
                .iter()
                .flat_map(|poly| poly.rings().flat_map(|r| r.vertices().iter().copied()))
                .collect(),
        }
    }

    /// Distance from `p` to the boundary (to the point itself for point cores).
    pub fn boundary_distance(&self, p: &Point) -> f64 {
        match self {
            Geometry::Empty => f64::INFINITY,
            Geometry::Point(q) => distance_point_point(p, q),
            _ => self
                .polygons()
                .iter()
                .map(|poly| poly.boundary_distance(p))
                .fold(f64::INFINITY, f64::min),
        }
    }

    pub fn area(&self) -> f64 {
        self.polygons().iter().map(Polygon::area).sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundingBox {
    pub min_x: f64,
    pub min_y: f64,
    pub max_x: f64,
    pub max_y: f64,
}

impl BoundingBox {
    pub fn new(min_x: f64, min_y: f64, max_x: f64, max_y: f64) -> Result<Self> {
        if !(min_x <= max_x && min_y <= max_y) {
            return Err(Error::InvalidGeometry(format!(
                "inverted bounding box ({min_x}, {min_y}, {max_x}, {max_y})"
            )));
        }
        Ok(BoundingBox {
            min_x,
            min_y,
            max_x,
            max_y,
        })
    }

    pub fn width(&self) -> f64 {
        self.max_x - self.min_x
    }

    pub fn height(&self) -> f64 {
        self.max_y - self.min_y
    }

    pub fn area(&self) -> f64 {
        self.width() * self.height()
    }

    pub fn inflate(&self, r: f64) -> BoundingBox {
        BoundingBox {
            min_x: self.min_x - r,
            min_y: self.min_y - r,
            max_x: self.max_x + r,
            max_y: self.max_y + r,
        }
    }

    fn extend(&mut self, p: &Point) {
        self.min_x = self.min_x.min(p.x);
        self.min_y = self.min_y.min(p.y);
        self.max_x = self.max_x.max(p.x);
        self.max_y = self.max_y.max(p.y);
    }

    /// `n + 1` grid line coordinates along each axis; the last one is the
    /// exact upper bound.
    pub(crate) fn grid_lines(&self, n: usize) -> (Vec<f64>, Vec<f64>) {
        let line = |lo: f64, hi: f64| -> Vec<f64> {
            (0..=n)
                .map(|i| {
                    if i == n {
                        hi
                    } else {
                        lo + (hi - lo) * (i as f64) / (n as f64)
                    }
                })
                .collect()
        };
        (
            line(self.min_x, self.max_x),
            line(self.min_y, self.max_y),
        )
    }

    /// Row-major `n × n` tiling of this box (x varies fastest).
    pub fn subdivide(&self, n: usize) -> Result<Vec<Cell>> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "grid divisions must be at least 1".into(),
            ));
        }
        let (xs, ys) = self.grid_lines(n);
        let mut cells = Vec::with_capacity(n * n);
        for j in 0..n {
            for i in 0..n {
                let bbox = BoundingBox {
                    min_x: xs[i],
                    min_y: ys[j],
                    max_x: xs[i + 1],
                    max_y: ys[j + 1],
                };
                cells.push(Cell {
                    bbox,
                    representative: Point::new(bbox.min_x, bbox.min_y),
                });
            }
        }
        Ok(cells)
    }
}

/// One part of a grid subdivision, represented by its lower-left corner.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cell {
    pub bbox: BoundingBox,
    pub representative: Point,
}

impl Cell {
    pub fn center(&self) -> Point {
        Point::new(
            (self.bbox.min_x + self.bbox.max_x) / 2.0,
            (self.bbox.min_y + self.bbox.max_y) / 2.0,
        )
    }
}

pub fn distance_point_point(p: &Point, q: &Point) -> f64 {
    (p.x - q.x).hypot(p.y - q.y)
}

pub fn contains_point(g: &Geometry, p: &Point) -> bool {
    match g {
        Geometry::Empty => false,
        Geometry::Point(q) => distance_point_point(p, q) <= BOUNDARY_TOLERANCE,
        _ => g.polygons().iter().any(|poly| poly.contains(p)),
    }
}

/// Zero exactly when `contains_point(g, p)` holds; infinite for the empty geometry.
pub fn distance_point_geometry(p: &Point, g: &Geometry) -> f64 {
    if contains_point(g, p) {
        return 0.0;
    }
    g.boundary_distance(p)
}

pub fn distance_geometry_geometry(g1: &Geometry, g2: &Geometry) -> f64 {
    match (g1, g2) {
        (Geometry::Empty, _) | (_, Geometry::Empty) => f64::INFINITY,
        (Geometry::Point(p), g) | (g, Geometry::Point(p)) => distance_point_geometry(p, g),
        _ => {
            let mut best = f64::INFINITY;
            for a in g1.polygons() {
                for b in g2.polygons() {
                    best = best.min(a.distance_to(b));
                    if best == 0.0 {
                        return 0.0;
                    }
                }
            }
            best
        }
    }
}

/// Tight axis-aligned box; `None` for the empty geometry.
pub fn bounding_box(g: &Geometry) -> Option<BoundingBox> {
    let vertices = match g {
        Geometry::Empty => return None,
        Geometry::Point(p) => vec![*p],
        _ => g
            .polygons()
            .iter()
            .flat_map(|poly| poly.exterior().vertices().iter().copied())
            .collect(),
    };
    let first = vertices[0];
    let mut bbox = BoundingBox {
        min_x: first.x,
        min_y: first.y,
        max_x: first.x,
        max_y: first.y,
    };
    for p in &vertices[1..] {
        bbox.extend(p);
    }
    Some(bbox)
}

/// Splits the bounding box of `g` into `dd × dd` row-major cells, whether or
/// not each cell meets `g` itself.
pub fn grid_subdivide(g: &Geometry, dd: usize) -> Result<Vec<Cell>> {
    if dd == 0 {
        return Err(Error::InvalidParameter(
            "grid divisions must be at least 1".into(),
        ));
    }
    bounding_box(g).ok_or(Error::EmptyGeometry)?.subdivide(dd)
}

pub(crate) fn point_segment_distance(p: &Point, a: &Point, b: &Point) -> f64 {
    let (dx, dy) = (b.x - a.x, b.y - a.y);
    let len2 = dx * dx + dy * dy;
    if len2 == 0.0 {
        return distance_point_point(p, a);
    }
    let t = (((p.x - a.x) * dx + (p.y - a.y) * dy) / len2).clamp(0.0, 1.0);
    distance_point_point(p, &Point::new(a.x + t * dx, a.y + t * dy))
}

fn orientation(a: &Point, b: &Point, c: &Point) -> f64 {
    (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
}

fn on_segment(a: &Point, b: &Point, p: &Point) -> bool {
    p.x >= a.x.min(b.x) && p.x <= a.x.max(b.x) && p.y >= a.y.min(b.y) && p.y <= a.y.max(b.y)
}

/// Closed segment intersection, touching endpoints included.
fn segments_intersect(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    let o1 = orientation(a, b, c);
    let o2 = orientation(a, b, d);
    let o3 = orientation(c, d, a);
    let o4 = orientation(c, d, b);
    if ((o1 > 0.0 && o2 < 0.0) || (o1 < 0.0 && o2 > 0.0))
        && ((o3 > 0.0 && o4 < 0.0) || (o3 < 0.0 && o4 > 0.0))
    {
        return true;
    }
    (o1 == 0.0 && on_segment(a, b, c))
        || (o2 == 0.0 && on_segment(a, b, d))
        || (o3 == 0.0 && on_segment(c, d, a))
        || (o4 == 0.0 && on_segment(c, d, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_square() -> Geometry {
        Polygon::rect(0.0, 0.0, 1.0, 1.0).unwrap().into()
    }

    #[test]
    fn containment_examples() {
        let sq = unit_square();
        assert!(contains_point(&sq, &Point::new(0.5, 0.5)));
        assert!(contains_point(&sq, &Point::new(1.0, 0.5)));
        assert!(!contains_point(&sq, &Point::new(2.0, 2.0)));
        assert!(contains_point(&sq, &Point::new(0.0, 0.0)));
    }

    #[test]
    fn point_distances() {
        assert_eq!(distance_point_point(&Point::new(0.0, 0.0), &Point::new(3.0, 4.0)), 5.0);
        assert_eq!(distance_point_point(&Point::new(1.0, 1.0), &Point::new(1.0, 1.0)), 0.0);
        assert_eq!(distance_point_point(&Point::new(0.0, 0.0), &Point::new(1.0, 0.0)), 1.0);
    }

    #[test]
    fn point_geometry_distances() {
        let sq = unit_square();
        assert_eq!(distance_point_geometry(&Point::new(2.0, 0.5), &sq), 1.0);
        assert_eq!(distance_point_geometry(&Point::new(0.3, 0.7), &sq), 0.0);
        assert_eq!(
            distance_point_geometry(&Point::new(2.0, 2.0), &sq),
            std::f64::consts::SQRT_2
        );
    }

    #[test]
    fn geometry_geometry_distances() {
        let a = unit_square();
        let touching: Geometry = Polygon::rect(1.0, 0.0, 2.0, 1.0).unwrap().into();
        let far: Geometry = Polygon::rect(3.0, 0.0, 4.0, 1.0).unwrap().into();
        assert_eq!(distance_geometry_geometry(&a, &touching), 0.0);
        assert_eq!(distance_geometry_geometry(&a, &far), 2.0);
        assert_eq!(distance_geometry_geometry(&a, &a), 0.0);
        assert_eq!(distance_geometry_geometry(&far, &a), 2.0);
    }

    #[test]
    fn region_inside_hole_keeps_positive_distance() {
        let outer = Ring::new(
            [(0.0, 0.0), (10.0, 0.0), (10.0, 10.0), (0.0, 10.0)]
                .into_iter()
                .map(Point::from)
                .collect(),
        )
        .unwrap();
        let hole = Ring::new(
            [(2.0, 2.0), (8.0, 2.0), (8.0, 8.0), (2.0, 8.0)]
                .into_iter()
                .map(Point::from)
                .collect(),
        )
        .unwrap();
        let donut: Geometry = Polygon::new(outer, vec![hole]).unwrap().into();
        let island: Geometry = Polygon::rect(4.0, 4.0, 6.0, 6.0).unwrap().into();
        assert!(!contains_point(&donut, &Point::new(5.0, 5.0)));
        assert!(contains_point(&donut, &Point::new(2.0, 5.0)));
        assert_eq!(distance_geometry_geometry(&donut, &island), 2.0);
    }

    #[test]
    fn bounding_boxes() {
        let bb = bounding_box(&unit_square()).unwrap();
        assert_eq!((bb.min_x, bb.min_y, bb.max_x, bb.max_y), (0.0, 0.0, 1.0, 1.0));
        let bb = bounding_box(&Geometry::Point(Point::new(2.0, 3.0))).unwrap();
        assert_eq!((bb.min_x, bb.min_y, bb.max_x, bb.max_y), (2.0, 3.0, 2.0, 3.0));
        let tri: Geometry = Polygon::from_coords(&[(0.0, 0.0), (2.0, 0.0), (1.0, 1.0)])
            .unwrap()
            .into();
        let bb = bounding_box(&tri).unwrap();
        assert_eq!((bb.min_x, bb.min_y, bb.max_x, bb.max_y), (0.0, 0.0, 2.0, 1.0));
        assert!(bounding_box(&Geometry::Empty).is_none());
    }

    #[test]
    fn grid_subdivision() {
        let sq = unit_square();
        let one = grid_subdivide(&sq, 1).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].representative, Point::new(0.0, 0.0));

        let reps: Vec<Point> = grid_subdivide(&sq, 2)
            .unwrap()
            .iter()
            .map(|c| c.representative)
            .collect();
        assert_eq!(
            reps,
            vec![
                Point::new(0.0, 0.0),
                Point::new(0.5, 0.0),
                Point::new(0.0, 0.5),
                Point::new(0.5, 0.5)
            ]
        );
        assert_eq!(grid_subdivide(&sq, 8).unwrap().len(), 64);
        assert!(matches!(
            grid_subdivide(&sq, 0),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            grid_subdivide(&Geometry::Empty, 4),
            Err(Error::EmptyGeometry)
        ));
    }

    #[test]
    fn invalid_rings_rejected() {
        // bow tie
        assert!(Polygon::from_coords(&[(0.0, 0.0), (1.0, 1.0), (1.0, 0.0), (0.0, 1.0)]).is_err());
        // too few vertices once closure is dropped
        assert!(Polygon::from_coords(&[(0.0, 0.0), (1.0, 0.0), (0.0, 0.0)]).is_err());
        // collinear
        assert!(Polygon::from_coords(&[(0.0, 0.0), (1.0, 0.0), (2.0, 0.0)]).is_err());
        assert!(Polygon::from_coords(&[(0.0, 0.0), (f64::NAN, 0.0), (1.0, 1.0)]).is_err());
        // explicit closure is accepted
        assert!(
            Polygon::from_coords(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 0.0)]).is_ok()
        );
    }

    #[test]
    fn holes_must_be_inside_and_disjoint() {
        let ring = |c: &[(f64, f64)]| Ring::new(c.iter().copied().map(Point::from).collect()).unwrap();
        let outer = ring(&[(0.0, 0.0), (10.0, 0.0), (10.0, 10.0), (0.0, 10.0)]);
        let crossing = ring(&[(8.0, 8.0), (12.0, 8.0), (12.0, 9.0), (8.0, 9.0)]);
        assert!(Polygon::new(outer.clone(), vec![crossing]).is_err());
        let h1 = ring(&[(1.0, 1.0), (4.0, 1.0), (4.0, 4.0), (1.0, 4.0)]);
        let h2 = ring(&[(3.0, 3.0), (6.0, 3.0), (6.0, 6.0), (3.0, 6.0)]);
        assert!(Polygon::new(outer.clone(), vec![h1.clone(), h2]).is_err());
        let h3 = ring(&[(5.0, 5.0), (6.0, 5.0), (6.0, 6.0), (5.0, 6.0)]);
        assert!(Polygon::new(outer, vec![h1, h3]).is_ok());
    }

    #[test]
    fn empty_collections_rejected() {
        assert!(Geometry::multi_polygon(Vec::new()).is_err());
        assert!(Geometry::MultiPolygon(Vec::new()).validate().is_err());
        assert!(Geometry::Point(Point::new(f64::INFINITY, 0.0)).validate().is_err());
    }
}
