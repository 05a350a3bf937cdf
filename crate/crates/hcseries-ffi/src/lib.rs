//! C ABI for hcseries.
//!
//! Objects are opaque handles released with their `_free` function. Calls
//! return an [`HcStatus`]; on failure the message is available from
//! [`hc_last_error`] on the same thread. Strings returned through out
//! parameters are owned by the caller and released with [`hc_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::ptr;
use std::sync::Arc;

use hcseries::cli::{data_dir, parse_params, resolve_parabolic};
use hcseries::coxeter::CoxeterDatum;
use hcseries::gha::quadratic_param;
use hcseries::repdata::{parabolic_factors, FinDimTable, LowestWeightLabel, RepContext};
use hcseries::simplecount::{analyze, count_supports, kz_node_params, AlgebraTable, Limits, SupportTable, DEFAULT_DIM_BOUND};
use hcseries::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HcStatus {
    Ok = 0,
    Internal = 1,
    Usage = 2,
    Data = 3,
    Resource = 4,
    NullArgument = 5,
    Panic = 6,
}

/// A Coxeter group.
pub struct HcDatum {
    inner: Arc<CoxeterDatum>,
}

/// Support counts of simple modules in category O.
pub struct HcSupportTable {
    inner: SupportTable,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default)]
pub struct HcCounts {
    pub dim: u64,
    pub radical_dim: u64,
    pub simples: u64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> HcStatus {
    match hcseries::cli::exit_code(e) {
        2 => HcStatus::Usage,
        3 => HcStatus::Data,
        4 => HcStatus::Resource,
        _ => HcStatus::Internal,
    }
}

fn guard(f: impl FnOnce() -> Result<(), (HcStatus, String)>) -> HcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HcStatus::Ok,
        Ok(Err((s, msg))) => {
            set_error(msg);
            s
        }
        Err(_) => {
            set_error("panic inside hcseries".into());
            HcStatus::Panic
        }
    }
}

fn lift<T>(r: hcseries::Result<T>) -> Result<T, (HcStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, (HcStatus, String)> {
    if p.is_null() {
        return Err((HcStatus::NullArgument, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| (HcStatus::Usage, format!("{what} is not UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, (HcStatus, String)> {
    p.as_ref().ok_or_else(|| (HcStatus::NullArgument, format!("{what} is null")))
}

fn out_string(s: String, out: *mut *mut c_char) -> Result<(), (HcStatus, String)> {
    if out.is_null() {
        return Err((HcStatus::NullArgument, "output pointer is null".into()));
    }
    let c = CString::new(s).map_err(|_| (HcStatus::Internal, "output contains a nul byte".into()))?;
    unsafe { *out = c.into_raw() };
    Ok(())
}

/// Message of the last failed call on this thread, or null. Valid until
/// the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn hc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn hc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a Coxeter group from a type symbol such as "E6" or "B3xA1".
///
/// # Safety
/// `symbol` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hc_datum_new(symbol: *const c_char, out: *mut *mut HcDatum) -> HcStatus {
    guard(|| {
        let s = text(symbol, "symbol")?;
        if out.is_null() {
            return Err((HcStatus::NullArgument, "output pointer is null".into()));
        }
        let d = lift(CoxeterDatum::build(s))?;
        *out = Box::into_raw(Box::new(HcDatum { inner: Arc::new(d) }));
        Ok(())
    })
}

/// # Safety
/// `d` must be null or a handle from [`hc_datum_new`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hc_datum_free(d: *mut HcDatum) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// # Safety
/// `d` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn hc_datum_rank(d: *const HcDatum) -> u32 {
    d.as_ref().map_or(0, |d| d.inner.rank() as u32)
}

/// # Safety
/// `d` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn hc_datum_order(d: *const HcDatum) -> u64 {
    d.as_ref().map_or(0, |d| d.inner.order())
}

/// Normalized quadratic parameter of z_top on L_c(λ) for a corank-one
/// parabolic, as text such as "q^2" or "-1".
///
/// # Safety
/// Strings must be nul-terminated; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hc_qparam(
    d: *const HcDatum,
    parabolic: *const c_char,
    c: *const c_char,
    lambda: *const c_char,
    out: *mut *mut c_char,
) -> HcStatus {
    guard(|| {
        let d = &handle(d, "datum")?.inner;
        let j = lift(resolve_parabolic(d, text(parabolic, "parabolic")?))?;
        let c = lift(parse_params(d, text(c, "c")?))?;
        let n = lift(parabolic_factors(d, &j))?.len();
        let labels = lift(LowestWeightLabel::parse(text(lambda, "lambda")?).and_then(|l| l.resolve(n)))?;
        let ctx = lift(RepContext::load_dir(&data_dir().join("plugins")))?;
        let rel = lift(quadratic_param(d, &j, &c, &labels, &ctx))?;
        out_string(rel.param.to_string(), out)
    })
}

/// Radical dimension and number of simple modules of H(W) at the KZ
/// parameters of c. `dim_bound` 0 selects the default bound.
///
/// # Safety
/// `c` must be nul-terminated; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hc_count_simples(d: *const HcDatum, c: *const c_char, dim_bound: u64, extended: bool, out: *mut HcCounts) -> HcStatus {
    guard(|| {
        let d = &handle(d, "datum")?.inner;
        if out.is_null() {
            return Err((HcStatus::NullArgument, "output pointer is null".into()));
        }
        let c = lift(parse_params(d, text(c, "c")?))?;
        let limits = Limits { dim_bound: if dim_bound == 0 { DEFAULT_DIM_BOUND } else { dim_bound as usize }, extended };
        let alg = lift(kz_node_params(d, &c).and_then(|p| AlgebraTable::hecke(d, &p, &limits)))?;
        let r = lift(analyze(&alg))?;
        *out = HcCounts { dim: r.dim as u64, radical_dim: r.radical_dim as u64, simples: r.simples as u64 };
        Ok(())
    })
}

/// Support table of O_c(W). A null `findim_path` uses the data directory.
///
/// # Safety
/// Strings must be null (where allowed) or nul-terminated; `out` must be a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hc_count_supports(
    d: *const HcDatum,
    c: *const c_char,
    findim_path: *const c_char,
    extended: bool,
    out: *mut *mut HcSupportTable,
) -> HcStatus {
    guard(|| {
        let d = &handle(d, "datum")?.inner;
        if out.is_null() {
            return Err((HcStatus::NullArgument, "output pointer is null".into()));
        }
        let c = lift(parse_params(d, text(c, "c")?))?;
        let dir = data_dir();
        let path = if findim_path.is_null() { dir.join("findim.tsv") } else { PathBuf::from(text(findim_path, "findim_path")?) };
        let fd = lift(FinDimTable::load(&path))?;
        let ctx = lift(RepContext::load_dir(&dir.join("plugins")))?;
        let t = lift(count_supports(d, &c, &fd, &ctx, &Limits { extended, ..Limits::default() }))?;
        *out = Box::into_raw(Box::new(HcSupportTable { inner: t }));
        Ok(())
    })
}

/// # Safety
/// `t` must be null or a live support table handle.
#[no_mangle]
pub unsafe extern "C" fn hc_support_table_free(t: *mut HcSupportTable) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Count for a parabolic class label ("1" for full support); 0 if absent,
/// -1 on a null argument.
///
/// # Safety
/// `t` must be a live handle and `class` nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn hc_support_table_count(t: *const HcSupportTable, class: *const c_char) -> i64 {
    let (Some(t), Ok(class)) = (t.as_ref(), text(class, "class")) else { return -1 };
    t.inner.row(class) as i64
}

/// The table as text (`csv` false) or CSV.
///
/// # Safety
/// `t` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hc_support_table_render(t: *const HcSupportTable, csv: bool, out: *mut *mut c_char) -> HcStatus {
    guard(|| {
        let t = &handle(t, "table")?.inner;
        let s = if csv { lift(t.csv())? } else { t.text() };
        out_string(s, out)
    })
}
