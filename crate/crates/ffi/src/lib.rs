//! C ABI over the `bicolored` library.
//!
//! All state lives behind opaque handles. Every fallible call returns a
//! [`BicoloredStatus`]; on failure the message is available from
//! [`bicolored_last_error`] until the next call on the same context. Strings returned
//! through `char **` out-parameters are owned by the caller and must be released with
//! [`bicolored_string_free`].

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use bicolored::arith::decimal_render;
use bicolored::bounds::{ao_bounds, ratio_table, theorem_bound, RatioTable};
use bicolored::enumeration::{count_exact, free_fraction, free_fraction_lower_bound};
use bicolored::verify::{self, Suite, VerifyConfig};
use bicolored::{Error, Limits};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BicoloredStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    CapExceeded = 3,
    ParseError = 4,
    Internal = 5,
}

impl From<&Error> for BicoloredStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::CapExceeded { .. } => BicoloredStatus::CapExceeded,
            Error::Parse(_) => BicoloredStatus::ParseError,
            Error::DegreeMismatch { .. } | Error::InvalidArgument(_) | Error::NotInvertible(_) => {
                BicoloredStatus::InvalidArgument
            }
        }
    }
}

/// Resource limits plus the last error message.
pub struct BicoloredContext {
    limits: Limits,
    last_error: CString,
}

/// A computed grid of bound ratios.
pub struct BicoloredRatioTable {
    table: RatioTable,
}

struct Failure(BicoloredStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure((&e).into(), e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(BicoloredStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f` with the context, records any error in it, and converts panics.
unsafe fn with_ctx(
    ctx: *mut BicoloredContext,
    f: impl FnOnce(&mut BicoloredContext) -> Result<(), Failure>,
) -> BicoloredStatus {
    let Some(ctx) = (unsafe { ctx.as_mut() }) else {
        return BicoloredStatus::NullPointer;
    };
    let result = catch_unwind(AssertUnwindSafe(|| f(ctx)));
    let (status, msg) = match result {
        Ok(Ok(())) => (BicoloredStatus::Ok, String::new()),
        Ok(Err(Failure(s, m))) => (s, m),
        Err(_) => (BicoloredStatus::Internal, "internal panic".to_string()),
    };
    ctx.last_error = CString::new(msg).unwrap_or_default();
    status
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("no interior NUL").into_raw()
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    unsafe { *out = into_c_string(s) };
    Ok(())
}

/// Creates a context with default limits. Free it with [`bicolored_context_free`].
#[no_mangle]
pub extern "C" fn bicolored_context_new() -> *mut BicoloredContext {
    Box::into_raw(Box::new(BicoloredContext {
        limits: Limits::default(),
        last_error: CString::default(),
    }))
}

/// # Safety
/// `ctx` must come from [`bicolored_context_new`] and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn bicolored_context_free(ctx: *mut BicoloredContext) {
    if !ctx.is_null() {
        drop(unsafe { Box::from_raw(ctx) });
    }
}

/// The message for the last failed call, or an empty string. Valid until the next call
/// on `ctx`; null if `ctx` is null.
///
/// # Safety
/// `ctx` must be a live context or null.
#[no_mangle]
pub unsafe extern "C" fn bicolored_last_error(ctx: *const BicoloredContext) -> *const c_char {
    match unsafe { ctx.as_ref() } {
        Some(c) => c.last_error.as_ptr(),
        None => ptr::null(),
    }
}

/// # Safety
/// `ctx` must be a live context.
#[no_mangle]
pub unsafe extern "C" fn bicolored_context_set_max_degree(
    ctx: *mut BicoloredContext,
    max_degree: usize,
) -> BicoloredStatus {
    unsafe {
        with_ctx(ctx, |c| {
            c.limits.max_degree = max_degree;
            Ok(())
        })
    }
}

/// Largest `p*q` for the subset census, at most 31.
///
/// # Safety
/// `ctx` must be a live context.
#[no_mangle]
pub unsafe extern "C" fn bicolored_context_set_max_pq(
    ctx: *mut BicoloredContext,
    max_pq: usize,
) -> BicoloredStatus {
    unsafe {
        with_ctx(ctx, |c| {
            if max_pq > bicolored::limits::HARD_MAX_PQ {
                return Err(Error::InvalidArgument(format!("max_pq {max_pq} above 31")).into());
            }
            c.limits.max_pq = max_pq;
            Ok(())
        })
    }
}

/// `|B_u(p,q)|` as a decimal integer string.
///
/// # Safety
/// `ctx` must be a live context and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bicolored_count(
    ctx: *mut BicoloredContext,
    p: usize,
    q: usize,
    out: *mut *mut c_char,
) -> BicoloredStatus {
    unsafe {
        with_ctx(ctx, |c| {
            let n = count_exact(p, q, &c.limits)?;
            write_string(out, n.to_string())
        })
    }
}

/// The character upper bound, exactly (`a+b*sqrt2`) and rounded to `places` decimals.
/// Either output pointer may be null to skip it.
///
/// # Safety
/// `ctx` must be a live context; non-null outputs must be valid.
#[no_mangle]
pub unsafe extern "C" fn bicolored_theorem_bound(
    ctx: *mut BicoloredContext,
    p: usize,
    q: usize,
    places: u32,
    exact_out: *mut *mut c_char,
    decimal_out: *mut *mut c_char,
) -> BicoloredStatus {
    unsafe {
        with_ctx(ctx, |c| {
            if p.max(q) > c.limits.max_degree {
                return Err(Error::CapExceeded {
                    what: "max(p, q)",
                    value: p.max(q) as u128,
                    cap: c.limits.max_degree as u128,
                }
                .into());
            }
            let b = theorem_bound(p, q)?;
            if !exact_out.is_null() {
                *exact_out = into_c_string(b.to_string());
            }
            if !decimal_out.is_null() {
                *decimal_out = into_c_string(decimal_render(&b, places));
            }
            Ok(())
        })
    }
}

/// The binomial lower and upper bounds as exact rationals (`num/den` or an integer).
///
/// # Safety
/// `ctx` must be a live context and both outputs valid.
#[no_mangle]
pub unsafe extern "C" fn bicolored_ao_bounds(
    ctx: *mut BicoloredContext,
    p: usize,
    q: usize,
    lower_out: *mut *mut c_char,
    upper_out: *mut *mut c_char,
) -> BicoloredStatus {
    unsafe {
        with_ctx(ctx, |c| {
            if lower_out.is_null() || upper_out.is_null() {
                return Err(null("output pointer"));
            }
            let (lo, hi) = ao_bounds(p, q, &c.limits)?;
            *lower_out = into_c_string(lo.to_string());
            *upper_out = into_c_string(hi.to_string());
            Ok(())
        })
    }
}

/// The free-orbit fraction from the census. Fails with `CapExceeded` beyond the census cap.
///
/// # Safety
/// `ctx` must be a live context and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn bicolored_free_fraction(
    ctx: *mut BicoloredContext,
    p: usize,
    q: usize,
    out: *mut *mut c_char,
) -> BicoloredStatus {
    unsafe {
        with_ctx(ctx, |c| {
            let f = free_fraction(p, q, &c.limits)?;
            write_string(out, f.to_string())
        })
    }
}

/// The lower bound for the free-orbit fraction, clamped at 0.
///
/// # Safety
/// `ctx` must be a live context and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn bicolored_free_fraction_lower_bound(
    ctx: *mut BicoloredContext,
    p: usize,
    q: usize,
    out: *mut *mut c_char,
) -> BicoloredStatus {
    unsafe {
        with_ctx(ctx, |c| {
            let f = free_fraction_lower_bound(p, q, &c.limits)?;
            write_string(out, f.to_string())
        })
    }
}

/// Computes the ratio grid for `p_values × k_values`. Free with [`bicolored_ratio_table_free`].
///
/// # Safety
/// `ctx` must be a live context, the arrays must hold `n_p` and `n_k` elements, and `out`
/// must be valid.
#[no_mangle]
pub unsafe extern "C" fn bicolored_ratio_table_new(
    ctx: *mut BicoloredContext,
    p_values: *const usize,
    n_p: usize,
    k_values: *const usize,
    n_k: usize,
    places: u32,
    out: *mut *mut BicoloredRatioTable,
) -> BicoloredStatus {
    unsafe {
        with_ctx(ctx, |c| {
            if out.is_null() || (n_p > 0 && p_values.is_null()) || (n_k > 0 && k_values.is_null()) {
                return Err(null("argument"));
            }
            let slice = |ptr: *const usize, n: usize| {
                if n == 0 {
                    &[][..]
                } else {
                    std::slice::from_raw_parts(ptr, n)
                }
            };
            let table = ratio_table(slice(p_values, n_p), slice(k_values, n_k), places, &c.limits)?;
            *out = Box::into_raw(Box::new(BicoloredRatioTable { table }));
            Ok(())
        })
    }
}

/// # Safety
/// `table` must come from [`bicolored_ratio_table_new`] or be null.
#[no_mangle]
pub unsafe extern "C" fn bicolored_ratio_table_free(table: *mut BicoloredRatioTable) {
    if !table.is_null() {
        drop(unsafe { Box::from_raw(table) });
    }
}

/// # Safety
/// `table` must be a live table or null (which gives 0).
#[no_mangle]
pub unsafe extern "C" fn bicolored_ratio_table_rows(table: *const BicoloredRatioTable) -> usize {
    unsafe { table.as_ref() }.map_or(0, |t| t.table.p_values.len())
}

/// # Safety
/// `table` must be a live table or null (which gives 0).
#[no_mangle]
pub unsafe extern "C" fn bicolored_ratio_table_cols(table: *const BicoloredRatioTable) -> usize {
    unsafe { table.as_ref() }.map_or(0, |t| t.table.k_values.len())
}

unsafe fn table_cell(
    table: *const BicoloredRatioTable,
    row: usize,
    col: usize,
    out: *mut *mut c_char,
    pick: impl Fn(&bicolored::bounds::RatioCell) -> String,
) -> BicoloredStatus {
    let (Some(t), false) = (unsafe { table.as_ref() }, out.is_null()) else {
        return BicoloredStatus::NullPointer;
    };
    match t.table.rows.get(row).and_then(|r| r.get(col)) {
        Some(cell) => {
            unsafe { *out = into_c_string(pick(cell)) };
            BicoloredStatus::Ok
        }
        None => BicoloredStatus::InvalidArgument,
    }
}

/// The rounded decimal at (`row`, `col`).
///
/// # Safety
/// `table` must be a live table and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn bicolored_ratio_table_decimal(
    table: *const BicoloredRatioTable,
    row: usize,
    col: usize,
    out: *mut *mut c_char,
) -> BicoloredStatus {
    unsafe { table_cell(table, row, col, out, |c| c.decimal.clone()) }
}

/// The exact value at (`row`, `col`) as `a+b*sqrt2`.
///
/// # Safety
/// `table` must be a live table and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn bicolored_ratio_table_exact(
    table: *const BicoloredRatioTable,
    row: usize,
    col: usize,
    out: *mut *mut c_char,
) -> BicoloredStatus {
    unsafe { table_cell(table, row, col, out, |c| c.exact.to_string()) }
}

/// Runs one property suite (`characters`, `cycleform`, `bounds`, `asymptotics`) or `all`.
/// Sets `*all_passed` to 1 if every property held, else 0.
///
/// # Safety
/// `ctx` must be a live context, `suite` a NUL-terminated string and `all_passed` valid.
#[no_mangle]
pub unsafe extern "C" fn bicolored_verify(
    ctx: *mut BicoloredContext,
    suite: *const c_char,
    seed: u64,
    all_passed: *mut i32,
) -> BicoloredStatus {
    unsafe {
        with_ctx(ctx, |c| {
            if suite.is_null() || all_passed.is_null() {
                return Err(null("argument"));
            }
            let name = CStr::from_ptr(suite)
                .to_str()
                .map_err(|e| Error::Parse(e.to_string()))?;
            let suites = if name == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![name.parse::<Suite>()?]
            };
            let mut cfg = VerifyConfig::new(seed);
            cfg.limits = c.limits;
            let ok = verify::run(&suites, &cfg).iter().all(|r| r.passed);
            *all_passed = i32::from(ok);
            Ok(())
        })
    }
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn bicolored_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}
