//! C ABI over `sublex`. Codes are opaque handles owned by the caller and
//! released with `sublex_code_free`. Every call returns a `SublexStatus`;
//! on failure `sublex_last_error` describes the most recent error on the
//! calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use sublex::algebra::{FieldSpec, Matrix};
use sublex::distance::distance_fast;
use sublex::grassmann::{gaussian_binomial, Subspace};
use sublex::io::CodeFile;
use sublex::search::{
    default_ml_idvecs, lexicode, lexicode_with_seed, ml_construction, verify_with_workers, CodeParams, DefaultBuilder,
    SearchError, SearchOptions, SeedConfig, SubspaceCode,
};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SublexStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    SeedRejected = 4,
    BufferTooSmall = 5,
    Internal = 6,
}

/// A constant dimension code.
pub struct SublexCode {
    code: SubspaceCode,
}

thread_local! {
    static LAST_ERROR: RefCell<Vec<u8>> = const { RefCell::new(Vec::new()) };
}

fn set_error(msg: &str) {
    LAST_ERROR.with(|e| {
        let mut e = e.borrow_mut();
        e.clear();
        e.extend(msg.bytes().filter(|&b| b != 0));
    });
}

type Failure = (SublexStatus, String);

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> SublexStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SublexStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal error");
            SublexStatus::Internal
        }
    }
}

fn invalid(e: impl std::fmt::Display) -> Failure {
    (SublexStatus::InvalidArgument, e.to_string())
}

fn null(what: &str) -> Failure {
    (SublexStatus::NullPointer, format!("{what} is null"))
}

fn search_failure(e: SearchError) -> Failure {
    match e {
        SearchError::SeedFailsVerify(..) | SearchError::SeedMismatch(_) => (SublexStatus::SeedRejected, e.to_string()),
        _ => invalid(e),
    }
}

fn params(n: u32, k: u32, d: u32, q: u32) -> Result<CodeParams, Failure> {
    CodeParams::new(n as usize, k as usize, d as usize, q).map_err(invalid)
}

fn opts(workers: u32) -> SearchOptions {
    SearchOptions { workers: workers.max(1) as usize, ..SearchOptions::default() }
}

/// # Safety
/// `out` must be null or valid for a write.
unsafe fn emit(out: *mut *mut SublexCode, code: SubspaceCode) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(SublexCode { code }));
    Ok(())
}

/// # Safety
/// `code` must be null or a live handle.
unsafe fn handle<'a>(code: *const SublexCode) -> Result<&'a SublexCode, Failure> {
    code.as_ref().ok_or_else(|| null("code"))
}

/// Copies the last error message on this thread into `buf` (NUL
/// terminated, truncated to `cap`) and returns its full length.
///
/// # Safety
/// `buf` must be null or valid for `cap` bytes.
#[no_mangle]
pub unsafe extern "C" fn sublex_last_error(buf: *mut c_char, cap: usize) -> usize {
    LAST_ERROR.with(|e| {
        let e = e.borrow();
        if !buf.is_null() && cap > 0 {
            let n = e.len().min(cap - 1);
            ptr::copy_nonoverlapping(e.as_ptr().cast::<c_char>(), buf, n);
            *buf.add(n) = 0;
        }
        e.len()
    })
}

/// Plain lexicode with parameters `(n, k, d)` over `F_q`.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn sublex_lexicode(
    n: u32,
    k: u32,
    d: u32,
    q: u32,
    workers: u32,
    out: *mut *mut SublexCode,
) -> SublexStatus {
    guard(|| {
        let (c, _) = lexicode(&params(n, k, d, q)?, &opts(workers)).map_err(search_failure)?;
        emit(out, c)
    })
}

/// Lexicode with the rank-metric seeds; `seed` may be null, or a code to
/// extend instead. `prune` nonzero enables the pruning rules.
///
/// # Safety
/// `seed` must be null or a live handle; `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn sublex_seeded(
    n: u32,
    k: u32,
    d: u32,
    q: u32,
    workers: u32,
    prune: i32,
    seed: *const SublexCode,
    out: *mut *mut SublexCode,
) -> SublexStatus {
    guard(|| {
        let mut config = SeedConfig { prune: prune != 0, ..SeedConfig::default() };
        if !seed.is_null() {
            config.extra_seed = Some(handle(seed)?.code.clone());
        }
        let (c, _) = lexicode_with_seed(&params(n, k, d, q)?, &config, &opts(workers)).map_err(search_failure)?;
        emit(out, c)
    })
}

/// Multilevel construction on the default identifying vectors.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn sublex_ml(n: u32, k: u32, d: u32, q: u32, out: *mut *mut SublexCode) -> SublexStatus {
    guard(|| {
        let p = params(n, k, d, q)?;
        let vs = default_ml_idvecs(p.n(), p.k(), p.d()).map_err(search_failure)?;
        let (c, _) = ml_construction(&p, &vs, &DefaultBuilder::default()).map_err(search_failure)?;
        emit(out, c)
    })
}

/// Parses a NUL-terminated code file.
///
/// # Safety
/// `text` must be a valid C string; `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn sublex_code_parse(text: *const c_char, out: *mut *mut SublexCode) -> SublexStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let s = CStr::from_ptr(text).to_str().map_err(|e| (SublexStatus::ParseError, e.to_string()))?;
        let f = CodeFile::parse(s).map_err(|e| (SublexStatus::ParseError, e.to_string()))?;
        emit(out, f.code)
    })
}

/// Writes the code file text plus a NUL into `buf`. `needed` (if not null)
/// receives the size including the NUL; a short buffer gives
/// `BufferTooSmall` and leaves `buf` untouched.
///
/// # Safety
/// `code` must be a live handle, `buf` null or valid for `cap` bytes and
/// `needed` null or valid for a write.
#[no_mangle]
pub unsafe extern "C" fn sublex_code_render(
    code: *const SublexCode,
    buf: *mut c_char,
    cap: usize,
    needed: *mut usize,
) -> SublexStatus {
    guard(|| {
        let text = CodeFile::new(handle(code)?.code.clone()).render().map_err(invalid)?;
        if !needed.is_null() {
            *needed = text.len() + 1;
        }
        if buf.is_null() || cap < text.len() + 1 {
            return Err((SublexStatus::BufferTooSmall, format!("need {} bytes", text.len() + 1)));
        }
        ptr::copy_nonoverlapping(text.as_ptr().cast::<c_char>(), buf, text.len());
        *buf.add(text.len()) = 0;
        Ok(())
    })
}

/// Number of codewords.
///
/// # Safety
/// `code` must be a live handle and `len` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn sublex_code_len(code: *const SublexCode, len: *mut usize) -> SublexStatus {
    guard(|| {
        let c = handle(code)?;
        *len.as_mut().ok_or_else(|| null("len"))? = c.code.len();
        Ok(())
    })
}

/// `n`, `k`, `d` and `q` of a code; any output may be null.
///
/// # Safety
/// `code` must be a live handle; outputs null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sublex_code_params(
    code: *const SublexCode,
    n: *mut u32,
    k: *mut u32,
    d: *mut u32,
    q: *mut u32,
) -> SublexStatus {
    guard(|| {
        let p = handle(code)?.code.params();
        for (dst, v) in [(n, p.n() as u32), (k, p.k() as u32), (d, p.d() as u32), (q, p.q())] {
            if let Some(dst) = dst.as_mut() {
                *dst = v;
            }
        }
        Ok(())
    })
}

/// Exact minimum subspace distance, or -1 for codes with fewer than two
/// words.
///
/// # Safety
/// `code` must be a live handle and `min` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn sublex_code_min_distance(
    code: *const SublexCode,
    workers: u32,
    min: *mut i64,
) -> SublexStatus {
    guard(|| {
        let c = handle(code)?;
        let v = verify_with_workers(&c.code, workers.max(1) as usize);
        *min.as_mut().ok_or_else(|| null("min"))? = v.min_distance.map_or(-1, |m| m as i64);
        Ok(())
    })
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `code` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sublex_code_free(code: *mut SublexCode) {
    if !code.is_null() {
        drop(Box::from_raw(code));
    }
}

/// Subspace distance between the row spaces of two generator matrices over
/// `F_q`, each row-major with `n` columns and entries in `0..q`.
///
/// # Safety
/// `a` must be valid for `rows_a * n` bytes, `b` for `rows_b * n` bytes and
/// `out` for a write.
#[no_mangle]
pub unsafe extern "C" fn sublex_distance(
    q: u32,
    n: u32,
    a: *const u8,
    rows_a: u32,
    b: *const u8,
    rows_b: u32,
    out: *mut u32,
) -> SublexStatus {
    guard(|| {
        let field = FieldSpec::new(q).map_err(invalid)?;
        let n = n as usize;
        let space = |p: *const u8, rows: u32| -> Result<Subspace, Failure> {
            let len = rows as usize * n;
            let data = if len == 0 {
                Vec::new()
            } else if p.is_null() {
                return Err(null("matrix"));
            } else {
                std::slice::from_raw_parts(p, len).to_vec()
            };
            let m = Matrix::from_vec(rows as usize, n, data).map_err(invalid)?;
            Subspace::from_generators(&field, &m).map_err(invalid)
        };
        let (x, y) = (space(a, rows_a)?, space(b, rows_b)?);
        let d = distance_fast(&x, &y).map_err(invalid)?;
        *out.as_mut().ok_or_else(|| null("out"))? = d as u32;
        Ok(())
    })
}

/// `[n, k]_q`, the size of the Grassmannian.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn sublex_gaussian_binomial(n: u32, k: u32, q: u32, out: *mut u64) -> SublexStatus {
    guard(|| {
        let g = gaussian_binomial(n as usize, k as usize, q).map_err(invalid)?;
        let g = u64::try_from(g).map_err(|_| invalid("result exceeds 64 bits"))?;
        *out.as_mut().ok_or_else(|| null("out"))? = g;
        Ok(())
    })
}

/// Version string of the library, NUL terminated and static.
#[no_mangle]
pub extern "C" fn sublex_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn message() -> String {
        LAST_ERROR.with(|e| String::from_utf8(e.borrow().clone()).unwrap())
    }

    #[test]
    fn panics_become_internal_errors() {
        let status = guard(|| panic!("boom"));
        assert_eq!(status, SublexStatus::Internal);
        assert_eq!(message(), "internal error");
    }

    #[test]
    fn messages_drop_nul_bytes_and_truncate() {
        set_error("a\0b");
        assert_eq!(message(), "ab");
        let mut buf = [1 as c_char; 2];
        assert_eq!(unsafe { sublex_last_error(buf.as_mut_ptr(), buf.len()) }, 2);
        assert_eq!(buf, [b'a' as c_char, 0]);
        assert_eq!(unsafe { sublex_last_error(ptr::null_mut(), 0) }, 2);
    }

    #[test]
    fn seed_errors_map_to_seed_rejected() {
        let (status, _) = search_failure(SearchError::SeedMismatch("n".into()));
        assert_eq!(status, SublexStatus::SeedRejected);
        let (status, _) = search_failure(SearchError::Params("x".into()));
        assert_eq!(status, SublexStatus::InvalidArgument);
    }
}
