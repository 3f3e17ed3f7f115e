//! Output must not depend on the worker count.

use std::path::PathBuf;

use tfpoly::cli::run_from;

fn output(args: &[&str]) -> String {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_from(
        std::iter::once("tfpoly").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    assert_eq!(code, 0, "{}", String::from_utf8_lossy(&err));
    String::from_utf8(out).unwrap()
}

#[test]
fn jobs_do_not_change_output() {
    for name in ["k4", "theta", "triangle_pendant_loop"] {
        let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "fixtures", &format!("{name}.graph")]
            .iter()
            .collect();
        let path = path.to_str().unwrap();
        for cmd in [
            vec!["--json", "psi", path],
            vec!["--json", "psi", "--integral", "--dual", path],
            vec!["classify-orientations", path],
            vec!["--json", "verify", path, "--suite", "orientation"],
        ] {
            let one = output(&[&["--jobs", "1"], cmd.as_slice()].concat());
            let four = output(&[&["--jobs", "4"], cmd.as_slice()].concat());
            assert_eq!(one, four, "{name}: {cmd:?}");
        }
    }
}
