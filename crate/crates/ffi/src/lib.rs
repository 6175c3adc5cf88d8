//! C interface to the fuzzy-rcc engine.
//!
//! Regions and datasets are opaque heap handles released with their
//! `*_free` function. Every fallible call returns an [`FrccStatus`] and
//! writes its result through an out-pointer; on failure a description is
//! available from [`frcc_last_error`] on the same thread. Panics never
//! cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::ptr;

use fuzzy_rcc::dataset::{load_regions, parse_wkt_lines};
use fuzzy_rcc::skyline::{crisp_skyline, fuzzy_skyline};
use fuzzy_rcc::{
    connect_grid, nearness, relation_vector, CandidateTuple, ConnectionConfig, Dataset, Error,
    FuzzyRegion, Grade, NearnessParams, Point, RelationVector, SkylineMode, SkylineQuery,
    TNormKind,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrccStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InvalidGeometry = 3,
    Parse = 4,
    Io = 5,
    UnknownId = 6,
    Panic = 7,
}

pub const FRCC_TNORM_LUKASIEWICZ: i32 = 0;
pub const FRCC_TNORM_MINIMUM: i32 = 1;
pub const FRCC_TNORM_PRODUCT: i32 = 2;

/// Connection parameters. `tnorm` is one of the `FRCC_TNORM_*` constants.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct FrccParams {
    pub alpha: f64,
    pub beta: f64,
    pub tnorm: i32,
    /// Grid divisions per axis, at least 1.
    pub dd: u32,
}

/// All fourteen relation grades of an ordered pair.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct FrccRelations {
    pub c: f64,
    pub dc: f64,
    pub o: f64,
    pub p: f64,
    pub p_inv: f64,
    pub eq: f64,
    pub pp: f64,
    pub pp_inv: f64,
    pub po: f64,
    pub ec: f64,
    pub tpp: f64,
    pub tpp_inv: f64,
    pub ntpp: f64,
    pub ntpp_inv: f64,
}

impl From<RelationVector> for FrccRelations {
    fn from(v: RelationVector) -> Self {
        FrccRelations {
            c: v.c.value(),
            dc: v.dc.value(),
            o: v.o.value(),
            p: v.p.value(),
            p_inv: v.p_inv.value(),
            eq: v.eq.value(),
            pp: v.pp.value(),
            pp_inv: v.pp_inv.value(),
            po: v.po.value(),
            ec: v.ec.value(),
            tpp: v.tpp.value(),
            tpp_inv: v.tpp_inv.value(),
            ntpp: v.ntpp.value(),
            ntpp_inv: v.ntpp_inv.value(),
        }
    }
}

/// Opaque fuzzy region.
pub struct FrccRegion(FuzzyRegion);

/// Opaque region dataset.
pub struct FrccDataset(Dataset);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(FrccStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::InvalidGeometry(_) | Error::EmptyGeometry => FrccStatus::InvalidGeometry,
            Error::Parse { .. } | Error::RejectedFeatures(_) => FrccStatus::Parse,
            Error::Io { .. } => FrccStatus::Io,
            Error::UnknownId(_) => FrccStatus::UnknownId,
            _ => FrccStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(FrccStatus::NullPointer, format!("{what} is null"))
}

fn invalid(msg: impl Into<String>) -> Failure {
    Failure(FrccStatus::InvalidArgument, msg.into())
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs were replaced");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> FrccStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            FrccStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            FrccStatus::Panic
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn text<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| invalid(format!("{what} is not UTF-8")))
}

unsafe fn slice<'a, T>(p: *const T, n: usize, what: &str) -> Result<&'a [T], Failure> {
    if n == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(p, n))
}

fn tnorm_kind(t: i32) -> Result<TNormKind, Failure> {
    match t {
        FRCC_TNORM_LUKASIEWICZ => Ok(TNormKind::Lukasiewicz),
        FRCC_TNORM_MINIMUM => Ok(TNormKind::Minimum),
        FRCC_TNORM_PRODUCT => Ok(TNormKind::Product),
        _ => Err(invalid(format!("unknown t-norm code {t}"))),
    }
}

fn grade(v: f64) -> Result<Grade, Failure> {
    Ok(Grade::new(v)?)
}

fn config(p: &FrccParams) -> Result<ConnectionConfig, Failure> {
    Ok(ConnectionConfig::new(
        NearnessParams::new(p.alpha, p.beta)?,
        tnorm_kind(p.tnorm)?,
        p.dd as usize,
    )?)
}

/// Message for the last failed call on this thread, or NULL after a
/// successful one. Valid until the next call into this library.
#[no_mangle]
pub extern "C" fn frcc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Builds a region from WKT (`POLYGON` or `MULTIPOLYGON`) and a support
/// radius.
///
/// # Safety
/// `wkt` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn frcc_region_from_wkt(
    wkt: *const c_char,
    support_radius: f64,
    out: *mut *mut FrccRegion,
) -> FrccStatus {
    guard(|| {
        let wkt = text(wkt, "wkt")?;
        if wkt.contains(['\n', '\t']) {
            return Err(invalid("wkt must be a single line"));
        }
        let ds = parse_wkt_lines(&format!("0\t{wkt}"), "wkt")?;
        let core = ds.records[0].fuzzy.core().clone();
        let region = FuzzyRegion::new(core, support_radius)?;
        put(out, Box::into_raw(Box::new(FrccRegion(region))))
    })
}

/// Builds a single-ring polygon region from `n` interleaved `x, y` pairs.
///
/// # Safety
/// `xy` must point to `2 * n` doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn frcc_region_from_ring(
    xy: *const f64,
    n: usize,
    support_radius: f64,
    out: *mut *mut FrccRegion,
) -> FrccStatus {
    guard(|| {
        let xy = slice(xy, n.checked_mul(2).ok_or_else(|| invalid("n too large"))?, "xy")?;
        let coords: Vec<(f64, f64)> = xy.chunks_exact(2).map(|c| (c[0], c[1])).collect();
        let poly = fuzzy_rcc::Polygon::from_coords(&coords)?;
        let region = FuzzyRegion::new(poly.into(), support_radius)?;
        put(out, Box::into_raw(Box::new(FrccRegion(region))))
    })
}

/// # Safety
/// `region` must come from this library and not be freed twice. NULL is
/// ignored.
#[no_mangle]
pub unsafe extern "C" fn frcc_region_free(region: *mut FrccRegion) {
    if !region.is_null() {
        drop(Box::from_raw(region));
    }
}

/// # Safety
/// `region` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn frcc_membership(
    region: *const FrccRegion,
    x: f64,
    y: f64,
    out: *mut f64,
) -> FrccStatus {
    guard(|| {
        let r = deref(region, "region")?;
        let p = Point::new(x, y);
        if !p.is_finite() {
            return Err(invalid("point is not finite"));
        }
        put(out, r.0.membership(&p).value())
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn frcc_nearness(alpha: f64, beta: f64, d: f64, out: *mut f64) -> FrccStatus {
    guard(|| {
        let p = NearnessParams::new(alpha, beta)?;
        if d.is_nan() || d < 0.0 {
            return Err(invalid(format!("distance {d} is negative or NaN")));
        }
        put(out, nearness(&p, d).value())
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn frcc_tnorm(tnorm: i32, a: f64, b: f64, out: *mut f64) -> FrccStatus {
    guard(|| put(out, tnorm_kind(tnorm)?.tnorm(grade(a)?, grade(b)?).value()))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn frcc_residuum(tnorm: i32, a: f64, b: f64, out: *mut f64) -> FrccStatus {
    guard(|| put(out, tnorm_kind(tnorm)?.residuum(grade(a)?, grade(b)?).value()))
}

/// Grid connection grade of two regions.
///
/// # Safety
/// `a`, `b` must be live handles; `params` readable; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn frcc_connect(
    a: *const FrccRegion,
    b: *const FrccRegion,
    params: *const FrccParams,
    out: *mut f64,
) -> FrccStatus {
    guard(|| {
        let cfg = config(deref(params, "params")?)?;
        let g = connect_grid(&deref(a, "a")?.0, &deref(b, "b")?.0, &cfg)?;
        put(out, g.value())
    })
}

/// All relation grades of the ordered pair `(a, b)`.
///
/// # Safety
/// `a`, `b` must be live handles; `params` readable; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn frcc_relations(
    a: *const FrccRegion,
    b: *const FrccRegion,
    params: *const FrccParams,
    out: *mut FrccRelations,
) -> FrccStatus {
    guard(|| {
        let cfg = config(deref(params, "params")?)?;
        let v = relation_vector(&deref(a, "a")?.0, &deref(b, "b")?.0, &cfg)?;
        put(out, v.into())
    })
}

/// Loads a GeoJSON or tab-separated WKT region file.
///
/// # Safety
/// `path` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn frcc_dataset_load(
    path: *const c_char,
    out: *mut *mut FrccDataset,
) -> FrccStatus {
    guard(|| {
        let ds = load_regions(Path::new(text(path, "path")?))?;
        put(out, Box::into_raw(Box::new(FrccDataset(ds))))
    })
}

/// # Safety
/// `ds` must come from this library and not be freed twice. NULL is
/// ignored.
#[no_mangle]
pub unsafe extern "C" fn frcc_dataset_free(ds: *mut FrccDataset) {
    if !ds.is_null() {
        drop(Box::from_raw(ds));
    }
}

/// Number of regions, or 0 for NULL.
///
/// # Safety
/// `ds` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn frcc_dataset_len(ds: *const FrccDataset) -> usize {
    ds.as_ref().map_or(0, |d| d.0.len())
}

/// Copies up to `cap` region ids in file order into `ids` and stores the
/// total count in `out_len`.
///
/// # Safety
/// `ds` must be a live handle; `ids` must hold `cap` values; `out_len`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn frcc_dataset_ids(
    ds: *const FrccDataset,
    ids: *mut i64,
    cap: usize,
    out_len: *mut usize,
) -> FrccStatus {
    guard(|| {
        let d = &deref(ds, "dataset")?.0;
        if cap > 0 && ids.is_null() {
            return Err(null("ids"));
        }
        for (k, r) in d.records.iter().take(cap).enumerate() {
            ids.add(k).write(r.id);
        }
        put(out_len, d.len())
    })
}

/// Copies one region out of a dataset as a new handle.
///
/// # Safety
/// `ds` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn frcc_dataset_region(
    ds: *const FrccDataset,
    id: i64,
    out: *mut *mut FrccRegion,
) -> FrccStatus {
    guard(|| {
        let r = deref(ds, "dataset")?.0.get(id)?.fuzzy.clone();
        put(out, Box::into_raw(Box::new(FrccRegion(r))))
    })
}

unsafe fn candidates(
    values: *const f64,
    n: usize,
    dims: usize,
    ids: *const i64,
) -> Result<Vec<CandidateTuple>, Failure> {
    if n > 0 && dims == 0 {
        return Err(invalid("dims must be positive"));
    }
    let total = n.checked_mul(dims).ok_or_else(|| invalid("n * dims overflows"))?;
    let values = slice(values, total, "values")?;
    let ids = slice(ids, n, "ids")?;
    values
        .chunks_exact(dims.max(1))
        .zip(ids)
        .map(|(v, &id)| Ok(CandidateTuple::new(id, v.to_vec())?))
        .collect()
}

/// Fuzzy skyline of `n` candidates with `dims` values each (row-major,
/// smaller is better). Surviving ids and grades are written to `out_ids`
/// and `out_grades` (each with room for `n`) in descending grade order;
/// `out_len` receives their count.
///
/// # Safety
/// `values` must hold `n * dims` doubles and `ids` `n` ids; the output
/// arrays must hold `n` entries; `out_len` writable.
#[no_mangle]
#[allow(clippy::too_many_arguments)]
pub unsafe extern "C" fn frcc_skyline(
    values: *const f64,
    n: usize,
    dims: usize,
    ids: *const i64,
    alpha: f64,
    beta: f64,
    tnorm: i32,
    min_c: f64,
    out_ids: *mut i64,
    out_grades: *mut f64,
    out_len: *mut usize,
) -> FrccStatus {
    guard(|| {
        let cands = candidates(values, n, dims, ids)?;
        let q = SkylineQuery {
            targets: Vec::new(),
            mode: SkylineMode::DistanceOnly,
            params: NearnessParams::new(alpha, beta)?,
            min_c: grade(min_c)?,
            tnorm: tnorm_kind(tnorm)?,
            cfg: ConnectionConfig::default(),
        };
        let res = fuzzy_skyline(&cands, &q)?;
        if !res.is_empty() && (out_ids.is_null() || out_grades.is_null()) {
            return Err(null("output array"));
        }
        for (k, e) in res.entries.iter().enumerate() {
            out_ids.add(k).write(e.region_id);
            out_grades.add(k).write(e.grade.value());
        }
        put(out_len, res.len())
    })
}

/// Crisp skyline ids in ascending order; same layout as [`frcc_skyline`].
///
/// # Safety
/// As for [`frcc_skyline`].
#[no_mangle]
pub unsafe extern "C" fn frcc_crisp_skyline(
    values: *const f64,
    n: usize,
    dims: usize,
    ids: *const i64,
    out_ids: *mut i64,
    out_len: *mut usize,
) -> FrccStatus {
    guard(|| {
        let cands = candidates(values, n, dims, ids)?;
        let sky = crisp_skyline(&cands)?;
        if !sky.is_empty() && out_ids.is_null() {
            return Err(null("out_ids"));
        }
        for (k, id) in sky.iter().enumerate() {
            out_ids.add(k).write(*id);
        }
        put(out_len, sky.len())
    })
}
