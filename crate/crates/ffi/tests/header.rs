//! The generated header declares the whole API, and a C program built
//! against it links and runs.

use std::path::{Path, PathBuf};
use std::process::Command;

const HEADER: &str = include_str!("../include/peadyn.h");

#[test]
fn header_declares_api() {
    for name in [
        "peadyn_last_error",
        "peadyn_string_free",
        "peadyn_word_parse",
        "peadyn_word_step",
        "peadyn_word_free",
        "peadyn_orbit",
        "peadyn_orbit_cycle_word",
        "peadyn_fixed_points",
        "peadyn_cycles",
        "peadyn_cycle_list_word",
        "peadyn_length_bound",
    ] {
        assert!(HEADER.contains(&format!("{name}(")), "{name} missing");
    }
    assert!(HEADER.contains("typedef struct PeadynWord PeadynWord;"));
    assert!(HEADER.contains("PEADYN_STATUS_BUDGET_EXCEEDED = 4"));
}

/// Directory holding the library artifacts of this profile.
fn artifact_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    // target/<profile>/deps/header-<hash>
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn c_program_links_against_staticlib() {
    let lib = artifact_dir().join("libpeadyn_ffi.a");
    if !lib.exists() {
        eprintln!("skipping: {} not built", lib.display());
        return;
    }
    if Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: no C compiler");
        return;
    }
    let crate_dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let out = tempfile::tempdir().unwrap();
    let exe = out.path().join("smoke");
    let status = Command::new("cc")
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(crate_dir.join("include"))
        .arg(crate_dir.join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .arg("-o")
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C compile failed");
    let run = Command::new(&exe).output().unwrap();
    assert!(
        run.status.success(),
        "{}",
        String::from_utf8_lossy(&run.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "ok");
}
