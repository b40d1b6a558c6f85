use std::process::Command;

fn fock_canon(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_fock-canon"))
        .args(args)
        .env_remove("FOCK_CANON_CACHE")
        .output()
        .expect("binary runs");
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn binary_exit_codes_and_output() {
    let (code, out) = fock_canon(&["matrix", "--kind", "D", "-n", "2", "-m", "2", "--no-cache"]);
    assert_eq!((code, out.as_str()), (0, "2: 1 0\n11: q 1\n"));
    let (code, out) = fock_canon(&["apply", "f", "1", "-n", "2", "--vector", "[1]"]);
    assert_eq!((code, out.as_str()), (0, "|2> + q|11>\n"));
    assert_eq!(fock_canon(&["verify", "tables", "-n", "2", "--max-m", "6"]).0, 0);
    assert_eq!(fock_canon(&["verify", "steinberg", "-n", "3", "--max-m", "6"]).0, 0);
    assert_eq!(fock_canon(&["matrix", "--kind", "D"]).0, 2);
    assert_eq!(fock_canon(&["apply", "e", "1", "-n", "2", "--vector", "{oops"]).0, 2);
}

#[test]
fn cache_env_var_is_honoured() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_fock-canon"))
        .args(["matrix", "--kind", "E", "-n", "2", "-m", "4", "--format", "latex"])
        .env("FOCK_CANON_CACHE", dir.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(dir.path().join("E-n2-m4.json").exists());
}
