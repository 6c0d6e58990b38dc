use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use sublex_ffi::*;

fn last_error() -> String {
    let mut buf = vec![0 as std::ffi::c_char; 256];
    unsafe {
        sublex_last_error(buf.as_mut_ptr(), buf.len());
        CStr::from_ptr(buf.as_ptr()).to_string_lossy().into_owned()
    }
}

fn len(c: *const SublexCode) -> usize {
    let mut n = 0;
    assert_eq!(unsafe { sublex_code_len(c, &mut n) }, SublexStatus::Ok);
    n
}

#[test]
fn build_render_parse_and_verify() {
    unsafe {
        let mut ml = ptr::null_mut();
        assert_eq!(sublex_ml(8, 4, 4, 2, &mut ml), SublexStatus::Ok);
        assert_eq!(len(ml), 4573);

        let mut ext = ptr::null_mut();
        assert_eq!(sublex_seeded(8, 4, 4, 2, 1, 1, ml, &mut ext), SublexStatus::Ok);
        assert_eq!(len(ext), 4589);
        let mut min = 0;
        assert_eq!(sublex_code_min_distance(ext, 2, &mut min), SublexStatus::Ok);
        assert_eq!(min, 4);

        let mut needed = 0;
        assert_eq!(sublex_code_render(ml, ptr::null_mut(), 0, &mut needed), SublexStatus::BufferTooSmall);
        let mut buf = vec![0 as std::ffi::c_char; needed];
        assert_eq!(sublex_code_render(ml, buf.as_mut_ptr(), buf.len(), ptr::null_mut()), SublexStatus::Ok);
        let mut back = ptr::null_mut();
        assert_eq!(sublex_code_parse(buf.as_ptr(), &mut back), SublexStatus::Ok);
        assert_eq!(len(back), 4573);
        let (mut n, mut k, mut d, mut q) = (0, 0, 0, 0);
        assert_eq!(sublex_code_params(back, &mut n, &mut k, &mut d, &mut q), SublexStatus::Ok);
        assert_eq!((n, k, d, q), (8, 4, 4, 2));

        sublex_code_free(back);
        sublex_code_free(ext);
        sublex_code_free(ml);
        sublex_code_free(ptr::null_mut());
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut c = ptr::null_mut();
        assert_eq!(sublex_lexicode(4, 2, 6, 2, 1, &mut c), SublexStatus::InvalidArgument);
        assert!(last_error().contains("d exceeds 2k"));
        assert!(c.is_null());
        assert_eq!(sublex_lexicode(6, 3, 4, 2, 1, ptr::null_mut()), SublexStatus::NullPointer);
        let mut n = 0;
        assert_eq!(sublex_code_len(ptr::null(), &mut n), SublexStatus::NullPointer);

        let bad = CString::new("q=2 n=4 k=2 d=2 M=2\n\n1000\n0100\n").unwrap();
        assert_eq!(sublex_code_parse(bad.as_ptr(), &mut c), SublexStatus::ParseError);
        assert!(last_error().contains("M=2"));

        // a seed with a repeated codeword is refused
        let dup = CString::new("q=2 n=6 k=3 d=4 M=2\n\n100000\n010000\n001000\n\n100000\n010000\n001000\n").unwrap();
        let mut seed = ptr::null_mut();
        assert_eq!(sublex_code_parse(dup.as_ptr(), &mut seed), SublexStatus::Ok);
        let mut min = 7;
        assert_eq!(sublex_code_min_distance(seed, 1, &mut min), SublexStatus::Ok);
        assert_eq!(min, 0);
        assert_eq!(sublex_seeded(6, 3, 4, 2, 1, 1, seed, &mut c), SublexStatus::SeedRejected);
        sublex_code_free(seed);
    }
}

#[test]
fn distance_and_counts() {
    unsafe {
        let a = [1u8, 0, 0, 0, 0, 1, 0, 0];
        let b = [0u8, 0, 1, 0];
        let mut d = 0;
        assert_eq!(sublex_distance(2, 4, a.as_ptr(), 2, b.as_ptr(), 1, &mut d), SublexStatus::Ok);
        assert_eq!(d, 3);
        assert_eq!(sublex_distance(2, 4, a.as_ptr(), 2, ptr::null(), 0, &mut d), SublexStatus::Ok);
        assert_eq!(d, 2);
        assert_eq!(
            sublex_distance(2, 4, [2u8, 0, 0, 0].as_ptr(), 1, b.as_ptr(), 1, &mut d),
            SublexStatus::InvalidArgument
        );
        let mut g = 0;
        assert_eq!(sublex_gaussian_binomial(7, 3, 3, &mut g), SublexStatus::Ok);
        assert_eq!(g, 925771);
        let v = CStr::from_ptr(sublex_version()).to_str().unwrap();
        assert_eq!(v, env!("CARGO_PKG_VERSION"));
    }
}

/// Compiles the C smoke program against the generated header and the
/// static library that cargo built next to this test.
#[test]
fn c_program_links_and_runs() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(|p| p.parent()).unwrap();
    let lib = profile_dir.join("libsublex_ffi.a");
    assert!(lib.exists(), "static library missing at {}", lib.display());
    let out = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("c_smoke");
    let status = Command::new("cc")
        .arg(dir.join("tests/c_smoke.c"))
        .arg("-I")
        .arg(dir.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out)
        .status()
        .expect("a C compiler on PATH");
    assert!(status.success());
    let run = Command::new(&out).output().unwrap();
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert!(String::from_utf8_lossy(&run.stdout).starts_with("ok "));
}
