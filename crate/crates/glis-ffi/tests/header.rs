//! The generated header must exist, declare the full surface, and compile
//! as standalone C. The compile check is skipped when no C compiler is on
//! the PATH.

use std::path::PathBuf;
use std::process::Command;

fn header_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include").join("glis.h")
}

#[test]
fn header_declares_the_surface() {
    let text = std::fs::read_to_string(header_path()).expect("build script writes the header");
    for decl in [
        "typedef struct GlisGraph GlisGraph;",
        "typedef struct GlisModel GlisModel;",
        "GLIS_STATUS_OK",
        "GLIS_STATUS_TOO_LARGE",
        "GLIS_NO_REASON_MONOCHROMATIC_EDGE",
        "glis_graph_parse",
        "glis_graph_free",
        "glis_exact_vs",
        "glis_solve_cvs",
        "glis_solve_icg",
        "glis_verify",
        "glis_layout_to_intervals",
        "glis_intervals_to_layout",
        "glis_added_edges",
        "glis_string_free",
    ] {
        assert!(text.contains(decl), "header is missing {decl:?}");
    }
}

fn find_compiler() -> Option<&'static str> {
    ["cc", "clang", "gcc"]
        .into_iter()
        .find(|c| Command::new(c).arg("--version").output().is_ok_and(|o| o.status.success()))
}

#[test]
fn header_compiles_as_c() {
    let Some(compiler) = find_compiler() else {
        eprintln!("no C compiler found; skipping header compile check");
        return;
    };
    let out = Command::new(compiler)
        .args(["-std=c99", "-fsyntax-only", "-Wall", "-Werror", "-xc"])
        .arg(header_path())
        .output()
        .expect("run C compiler");
    assert!(
        out.status.success(),
        "header failed to compile:\n{}",
        String::from_utf8_lossy(&out.stderr)
    );
}

/// Compiles and runs examples/demo.c against the freshly built staticlib.
#[test]
fn c_demo_links_and_runs() {
    let Some(compiler) = find_compiler() else {
        eprintln!("no C compiler found; skipping C demo");
        return;
    };
    // The test binary lives in target/<profile>/deps; the staticlib sits
    // one directory up.
    let exe = std::env::current_exe().expect("test executable path");
    let profile_dir = exe
        .parent()
        .and_then(|p| p.parent())
        .expect("target profile directory");
    let staticlib = profile_dir.join("libglis_ffi.a");
    assert!(staticlib.exists(), "staticlib missing at {}", staticlib.display());

    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let demo = manifest.join("examples").join("demo.c");
    let include = manifest.join("include");
    let bin = profile_dir.join("glis_c_demo");

    let out = Command::new(compiler)
        .args(["-std=c99", "-Wall", "-Werror"])
        .arg(&demo)
        .arg(format!("-I{}", include.display()))
        .arg(&staticlib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .output()
        .expect("run C compiler");
    assert!(
        out.status.success(),
        "demo failed to build:\n{}",
        String::from_utf8_lossy(&out.stderr)
    );

    let run = Command::new(&bin).output().expect("run C demo");
    assert!(run.status.success(), "demo exited nonzero");
    let stdout = String::from_utf8(run.stdout).unwrap();
    assert!(stdout.contains("vs 2"), "unexpected demo output:\n{stdout}");
    assert!(stdout.contains("cvs YES"));
    assert!(stdout.contains("icg YES"));
    assert!(stdout.contains("certificate VALID"));
}
