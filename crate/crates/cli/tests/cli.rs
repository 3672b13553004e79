use std::path::{Path, PathBuf};
use std::process::Command;

struct Dir(PathBuf);

impl Dir {
    fn new(tag: &str) -> Dir {
        let p = std::env::temp_dir().join(format!("bistellar-cli-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&p).unwrap();
        Dir(p)
    }

    fn write(&self, name: &str, text: &str) {
        std::fs::write(self.0.join(name), text).unwrap();
    }

    fn read(&self, name: &str) -> String {
        std::fs::read_to_string(self.0.join(name)).unwrap()
    }

    fn path(&self) -> &Path {
        &self.0
    }
}

impl Drop for Dir {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

const SPHERE: &str = "0 1 2\n0 1 3\n0 2 3\n1 2 3\n";
const TORUS: &str = "0 1 3\n0 2 3\n1 2 4\n1 3 4\n2 3 5\n2 4 5\n3 4 6\n3 5 6\n4 5 0\n4 6 0\n5 6 1\n5 0 1\n6 0 2\n6 1 2\n";

fn run(dir: &Dir, args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_bistellar"))
        .args(args)
        .current_dir(dir.path())
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn fvec_of_tetrahedron_boundary() {
    let d = Dir::new("fvec");
    d.write("s.cx", SPHERE);
    let (code, out, _) = run(&d, &["fvec", "s.cx"]);
    assert_eq!(code, 0);
    assert_eq!(out, "f = (4, 6, 4); chi = 2\n");
}

#[test]
fn apply_a_starring() {
    let d = Dir::new("apply");
    d.write("s.cx", SPHERE);
    let (code, _, _) = run(&d, &["move", "--apply", "STAR [0 1 2] 4", "s.cx", "--out", "t.cx"]);
    assert_eq!(code, 0);
    let (_, out, _) = run(&d, &["fvec", "t.cx"]);
    assert_eq!(out, "f = (5, 9, 6); chi = 2\n");
}

#[test]
fn replaying_an_inverse_pair_is_the_identity() {
    let d = Dir::new("replay");
    d.write("s.cx", SPHERE);
    d.write("t.tr", "STAR [0 1] 7\nWELD 7 [0 1]\n");
    let (code, _, _) = run(&d, &["replay", "t.tr", "s.cx", "--out", "r.cx"]);
    assert_eq!(code, 0);
    assert_eq!(d.read("r.cx"), SPHERE);
}

#[test]
fn invert_round_trips() {
    let d = Dir::new("invert");
    d.write("t.tr", "FLIP [0 1 2] ; [4]\nSTAR [0 4] 5\n");
    run(&d, &["invert", "t.tr", "--out", "u.tr"]);
    assert_eq!(d.read("u.tr"), "WELD 5 [0 4]\nFLIP [4] ; [0 1 2]\n");
    run(&d, &["invert", "u.tr", "--out", "v.tr"]);
    assert_eq!(d.read("v.tr"), d.read("t.tr"));
}

#[test]
fn checks_and_lists() {
    let d = Dir::new("check");
    d.write("s.cx", SPHERE);
    let (code, out, _) = run(&d, &["move", "--check", "FLIP [0 1] ; [2 3]", "s.cx"]);
    assert_eq!(code, 1);
    assert!(out.contains("illegal"));
    let (code, out, _) = run(&d, &["move", "--list", "bistellar", "s.cx"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 4);
}

#[test]
fn exit_codes() {
    let d = Dir::new("codes");
    d.write("s.cx", SPHERE);
    d.write("t.cx", TORUS);
    d.write("bad.cx", "0 1 x\n");
    assert_eq!(run(&d, &["fvec", "bad.cx"]).0, 3);
    assert_eq!(run(&d, &["fvec", "missing.cx"]).0, 3);
    assert_eq!(run(&d, &["move", "--apply", "NOPE", "s.cx"]).0, 3);
    assert_eq!(run(&d, &["validate", "t.cx"]).0, 0);
    assert_eq!(run(&d, &["validate", "--check", "recognize", "t.cx"]).0, 1);
    assert_eq!(run(&d, &["validate", "--check", "recognize", "s.cx"]).0, 0);
    assert_eq!(run(&d, &["prove-equiv", "s.cx", "t.cx"]).0, 1);
    assert_eq!(run(&d, &["shell-find", "t.cx"]).0, 1);
    assert_eq!(run(&d, &["reduce", "t.cx", "--max-moves", "10"]).0, 2);
}

#[test]
fn homology_of_the_torus() {
    let d = Dir::new("homology");
    d.write("t.cx", TORUS);
    let (_, out, _) = run(&d, &["homology", "t.cx"]);
    assert_eq!(out, "H0 = Z\nH1 = Z^2\nH2 = Z\n");
}

#[test]
fn link_star_boundary() {
    let d = Dir::new("lsb");
    d.write("s.cx", SPHERE);
    let (_, out, _) = run(&d, &["link", "[0 1]", "s.cx"]);
    assert_eq!(out, "2\n3\n");
    let (_, out, _) = run(&d, &["star", "0", "s.cx"]);
    assert_eq!(out.lines().count(), 3);
    let (code, out, _) = run(&d, &["boundary", "s.cx"]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
}

#[test]
fn expansions_replay() {
    let d = Dir::new("expand");
    d.write("s.cx", SPHERE);
    run(&d, &["move", "--apply", "STAR [1 2] 9", "s.cx", "--out", "m.cx"]);
    let (code, _, err) = run(&d, &["expand-exchange", "9", "[1 2]", "m.cx", "--out", "x.tr"]);
    assert_eq!(code, 0, "{err}");
    run(&d, &["replay", "x.tr", "m.cx", "--out", "back.cx"]);
    assert_eq!(d.read("back.cx"), SPHERE);

    let (code, _, _) = run(&d, &["expand-star", "[0 1]", "s.cx", "--out", "st.tr"]);
    assert_eq!(code, 0);
    run(&d, &["replay", "st.tr", "s.cx", "--out", "a.cx"]);
    run(&d, &["move", "--apply", "STAR [0 1] 4", "s.cx", "--out", "b.cx"]);
    assert_eq!(d.read("a.cx"), d.read("b.cx"));
}

#[test]
fn derive_and_prove() {
    let d = Dir::new("derive");
    d.write("s.cx", SPHERE);
    run(&d, &["derive", "s.cx", "--out", "b.cx"]);
    let (_, out, _) = run(&d, &["fvec", "b.cx"]);
    assert_eq!(out, "f = (14, 36, 24); chi = 2\n");
    let (code, _, _) = run(&d, &["prove-equiv", "s.cx", "b.cx", "--out", "cert.txt"]);
    assert_eq!(code, 0);
    let (code, out, _) = run(&d, &["prove-equiv", "s.cx", "b.cx", "--verify", "cert.txt"]);
    assert_eq!((code, out.as_str()), (0, "certificate verified\n"));
    let (_, iso, _) = run(&d, &["iso", "s.cx", "s.cx"]);
    assert_eq!(iso, "0 0\n1 1\n2 2\n3 3\n");
}

#[test]
fn shell_find_writes_a_sequence() {
    let d = Dir::new("shell");
    d.write("s.cx", SPHERE);
    let (code, out, _) = run(&d, &["shell-find", "s.cx"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("REMOVE"));
    assert!(out.contains("TERMINAL"));
}
