use std::ffi::CStr;
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use nsgff_ffi::*;

fn new(gens: &[i64]) -> (NsgffStatus, *mut NsgffSemigroup) {
    let mut h = ptr::null_mut();
    let s = unsafe { nsgff_semigroup_new(gens.as_ptr(), gens.len(), &mut h) };
    (s, h)
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(nsgff_last_error()) }
        .to_string_lossy()
        .into_owned()
}

#[test]
fn invariants_roundtrip() {
    let (s, h) = new(&[7, 8, 11, 17, 20]);
    assert_eq!(s, NsgffStatus::Ok);
    let mut v = 0i64;
    unsafe {
        assert_eq!(nsgff_semigroup_multiplicity(h, &mut v), NsgffStatus::Ok);
        assert_eq!(v, 7);
        nsgff_semigroup_embedding_dimension(h, &mut v);
        assert_eq!(v, 5);
        nsgff_semigroup_frobenius(h, &mut v);
        let f = v;
        nsgff_semigroup_type(h, &mut v);
        let ty = v;
        assert!(ty >= 2);

        let mut buf = [0i64; 8];
        let mut len = 0usize;
        assert_eq!(
            nsgff_semigroup_min_gens(h, buf.as_mut_ptr(), buf.len(), &mut len),
            NsgffStatus::Ok
        );
        assert_eq!(&buf[..len], &[7, 8, 11, 17, 20]);

        assert_eq!(
            nsgff_semigroup_pseudo_frobenius(h, buf.as_mut_ptr(), 1, &mut len),
            NsgffStatus::BufferTooSmall
        );
        assert_eq!(len as i64, ty);
        nsgff_semigroup_pseudo_frobenius(h, buf.as_mut_ptr(), buf.len(), &mut len);
        assert_eq!(buf[len - 1], f);

        let mut b = false;
        nsgff_semigroup_contains(h, 14, &mut b);
        assert!(b);
        nsgff_semigroup_contains(h, f, &mut b);
        assert!(!b);
        for route in 0..3 {
            b = false;
            assert_eq!(nsgff_semigroup_is_far_flung(h, route, &mut b), NsgffStatus::Ok);
            assert!(b);
        }
        assert_eq!(
            nsgff_semigroup_is_far_flung(h, 7, &mut b),
            NsgffStatus::InvalidRoute
        );
        nsgff_semigroup_free(h);
    }
}

#[test]
fn errors_are_reported() {
    let (s, h) = new(&[4, 6]);
    assert_eq!(s, NsgffStatus::GcdNotOne);
    assert!(h.is_null());
    assert!(!last_error().is_empty());

    assert_eq!(new(&[]).0, NsgffStatus::EmptyGenerators);
    assert_eq!(new(&[3, 0]).0, NsgffStatus::NonPositiveGenerator);
    assert_eq!(new(&[1 << 30, 3]).0, NsgffStatus::InputTooLarge);

    let mut v = 0i64;
    unsafe {
        assert_eq!(nsgff_semigroup_frobenius(ptr::null(), &mut v), NsgffStatus::NullPointer);
        assert_eq!(
            nsgff_semigroup_new(ptr::null(), 2, &mut ptr::null_mut()),
            NsgffStatus::NullPointer
        );
        nsgff_semigroup_free(ptr::null_mut());
        nsgff_string_free(ptr::null_mut());
    }
    let msg = unsafe { CStr::from_ptr(nsgff_status_message(NsgffStatus::GcdNotOne as i32)) };
    assert_eq!(msg.to_str().unwrap(), "generators are not coprime");
    let msg = unsafe { CStr::from_ptr(nsgff_status_message(12345)) };
    assert_eq!(msg.to_str().unwrap(), "internal error");
}

#[test]
fn report_json_parses() {
    let (_, h) = new(&[3, 4, 5]);
    let mut s = ptr::null_mut();
    unsafe {
        assert_eq!(nsgff_semigroup_report_json(h, &mut s), NsgffStatus::Ok);
        let text = CStr::from_ptr(s).to_str().unwrap().to_owned();
        nsgff_string_free(s);
        nsgff_semigroup_free(h);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["flags"]["ffg"], true);
        assert_eq!(v["flags"]["minimal_multiplicity"], true);
        assert_eq!(v["semigroup"]["type"], 2);
    }
}

#[test]
fn rohrbach_entry_points() {
    let mut v = 0i64;
    let mut w = [0i64; 8];
    let mut len = 0usize;
    unsafe {
        assert_eq!(
            nsgff_rohrbach_max(5, 1_000_000, &mut v, w.as_mut_ptr(), w.len(), &mut len),
            NsgffStatus::Ok
        );
        assert_eq!(v, 13);
        assert_eq!(len, 5);
        assert_eq!(w[0], 0);
        assert_eq!(
            nsgff_rohrbach_max(12, 100, &mut v, ptr::null_mut(), 0, ptr::null_mut()),
            NsgffStatus::BudgetExceeded
        );
        assert!(v <= 55);
        assert_eq!(nsgff_rohrbach_max(0, 10, &mut v, ptr::null_mut(), 0, ptr::null_mut()), NsgffStatus::BadParameters);
        assert_eq!(nsgff_rohrbach_table(25, &mut v), NsgffStatus::Ok);
        assert_eq!(v, 213);
        assert_eq!(nsgff_rohrbach_table(26, &mut v), NsgffStatus::OutOfTable);
    }
}

#[test]
fn header_declares_every_export() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header = std::fs::read_to_string(dir.join("include/nsgff.h")).unwrap();
    let src = std::fs::read_to_string(dir.join("src/lib.rs")).unwrap();
    for line in src.lines() {
        let Some(rest) = line.split("extern \"C\" fn ").nth(1) else {
            continue;
        };
        let name = rest.split('(').next().unwrap();
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
    }
    assert!(header.contains("typedef struct NsgffSemigroup NsgffSemigroup;"));
}

const C_PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "nsgff.h"

int main(void) {
    int64_t gens[] = {7, 8, 11, 17, 20};
    NsgffSemigroup *h = NULL;
    if (nsgff_semigroup_new(gens, 5, &h) != NSGFF_STATUS_OK) return 1;
    int64_t f = 0;
    nsgff_semigroup_frobenius(h, &f);
    bool ffg = false;
    nsgff_semigroup_is_far_flung(h, NSGFF_ROUTE_SUMSET, &ffg);
    char *json = NULL;
    nsgff_semigroup_report_json(h, &json);
    int ok = json != NULL && strstr(json, "\"ffg\":true") != NULL;
    nsgff_string_free(json);
    nsgff_semigroup_free(h);
    int64_t bad[] = {4, 6};
    NsgffStatus s = nsgff_semigroup_new(bad, 2, &h);
    printf("%lld %d %d %d\n", (long long)f, ffg, ok, (int)s);
    return 0;
}
"#;

#[test]
fn c_program_links_against_static_library() {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    if Command::new(&cc).arg("--version").output().is_err() {
        eprintln!("no C compiler, skipping");
        return;
    }
    // target/<profile>/deps/<test exe> -> target/<profile>
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().unwrap().parent().unwrap();
    let lib = profile_dir.join("libnsgff_ffi.a");
    assert!(lib.exists(), "{} not built", lib.display());

    let tmp = std::env::temp_dir().join(format!("nsgff-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&tmp).unwrap();
    let src = tmp.join("main.c");
    let bin = tmp.join("main");
    std::fs::write(&src, C_PROGRAM).unwrap();
    let include = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include");
    let status = Command::new(&cc)
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(&include)
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let f = nsgff::NumericalSemigroup::from_generators(&[7, 8, 11, 17, 20])
        .unwrap()
        .frobenius();
    assert_eq!(text, format!("{f} 1 1 {}\n", NsgffStatus::GcdNotOne as i32));
    let _ = std::fs::remove_dir_all(&tmp);
}
