use std::path::PathBuf;
use std::process::Command;

use anick::report::Report;

fn graph(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("examples/graphs")
        .join(format!("{name}.toml"))
        .display()
        .to_string()
}

fn anick(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_anick")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn verify_exit_codes() {
    let (code, stdout, _) = anick(&["verify", &graph("cycle"), "--max-n", "3"]);
    assert_eq!(code, 0, "{stdout}");
    let (code, stdout, stderr) = anick(&["verify", &graph("parallel"), "--max-n", "3"]);
    assert_eq!(code, 1, "{stdout}");
    assert!(stderr.contains("closed form"), "{stderr}");
}

#[test]
fn input_errors_exit_two() {
    let dir = std::env::temp_dir().join(format!("anick-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.toml");
    std::fs::write(&bad, "vertices = [\"v\"]\nweight = 1\n").unwrap();
    let (code, _, stderr) = anick(&["gsb", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(stderr.contains("line 2"), "{stderr}");

    let dangling = dir.join("dangling.toml");
    std::fs::write(&dangling, "vertices = [\"v\"]\n[[edges]]\nname = \"e\"\ndom = \"v\"\ncod = \"u\"\n").unwrap();
    assert_eq!(anick(&["chains", dangling.to_str().unwrap()]).0, 2);

    assert_eq!(anick(&["homology", &graph("edge"), "--augmentation", "unit"]).0, 2);
    assert_eq!(anick(&["homology", &graph("edge"), "--field", "p=6"]).0, 2);
    assert_eq!(anick(&["homology", &graph("edge"), "--max-deg", "1"]).0, 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn machine_output_parses() {
    let (code, stdout, _) = anick(&["homology", &graph("loop"), "--n", "3", "--field", "p=2", "--output", "machine"]);
    assert_eq!(code, 0);
    let Report::Homology(r) = Report::from_json(&stdout).unwrap() else {
        panic!("wrong report kind")
    };
    assert_eq!(r.field, "GF(2)");
    assert_eq!(r.tor, vec![1, 0, 0, 0]);
    assert_eq!(r.chain_counts, vec![3, 7, 17, 41]);
}

#[test]
fn laurent_and_diff() {
    let (code, stdout, _) = anick(&["laurent", "--max-n", "4"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("Tor_1 = 1"), "{stdout}");

    let (code, stdout, _) = anick(&["diff", &graph("parallel"), "--n", "2"]);
    assert_eq!(code, 1);
    assert!(stdout.contains("d_2(a a* b ⊗ 1) = (a a* ⊗ b) - (b w ⊗ 1) + (v b ⊗ 1)"), "{stdout}");
    let (code, _, _) = anick(&["diff", &graph("edge"), "--n", "3"]);
    assert_eq!(code, 0);
}

#[test]
fn gsb_lists_rules() {
    let (code, stdout, _) = anick(&["gsb", &graph("loop")]);
    assert_eq!(code, 0);
    assert!(stdout.contains("e e* -> v"), "{stdout}");
    assert!(stdout.contains("all compositions resolve"));
}
