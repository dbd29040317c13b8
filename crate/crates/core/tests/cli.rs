use std::path::PathBuf;
use std::process::Command;

use parapath::brauer::parse_brauer;
use parapath::cli::{parse_algebra, RunReport};
use parapath::exactla::FieldSpec;
use parapath::Error;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_parapath"))
        .args(args)
        .output()
        .expect("binary runs");
    (String::from_utf8(out.stdout).unwrap(), out.status.code().unwrap_or(-1))
}

fn machine(args: &[&str]) -> (Vec<(String, String)>, i32) {
    let mut full = vec!["--machine"];
    full.extend_from_slice(args);
    let (out, code) = run(&full);
    let kv = out
        .lines()
        .map(|l| {
            let (k, v) = l.split_once('=').expect("key=value");
            (k.to_string(), v.to_string())
        })
        .collect();
    (kv, code)
}

fn value<'a>(kv: &'a [(String, String)], key: &str) -> &'a str {
    kv.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str()).unwrap_or_else(|| panic!("missing {key}"))
}

#[test]
fn kronecker_fixture_shape() {
    let f = parse_algebra(&std::fs::read_to_string(fixture("kronecker.alg")).unwrap()).unwrap();
    assert_eq!(f.quiver.vertex_count(), 2);
    assert_eq!(f.quiver.arrow_count(), 4);
    assert_eq!(f.relations.len(), 10);
}

#[test]
fn algebra_round_trip() {
    for name in ["kronecker.alg", "cube_gf3.alg", "cube_q.alg", "char2.alg", "commuting_square.alg"] {
        let f = parse_algebra(&std::fs::read_to_string(fixture(name)).unwrap()).unwrap();
        let text = f.to_text();
        let back = parse_algebra(&text).unwrap();
        assert_eq!(back, f, "{name}");
        assert_eq!(back.to_text(), text, "{name}");
    }
}

#[test]
fn brauer_round_trip() {
    for name in ["kronecker.brauer", "path3.brauer", "two_three.brauer", "loop.brauer", "loop_at_short_end.brauer"] {
        let (field, g) = parse_brauer(&std::fs::read_to_string(fixture(name)).unwrap()).unwrap();
        let (field2, g2) = parse_brauer(&g.to_text(field)).unwrap();
        assert_eq!((field2, &g2), (field, &g), "{name}");
    }
}

#[test]
fn brauer_fixtures() {
    let (_, g) = parse_brauer(&std::fs::read_to_string(fixture("two_three.brauer")).unwrap()).unwrap();
    assert_eq!((g.edges().len(), g.vertices().len(), g.has_loops()), (1, 2, false));
    let (_, g) = parse_brauer(&std::fs::read_to_string(fixture("loop.brauer")).unwrap()).unwrap();
    assert_eq!(g.valency(0), 3);
    let (_, g) = parse_brauer("vertex v mult 2\nedge l v v\ncyclic v: l.1 l.2\n").unwrap();
    assert_eq!(g.valency(0), 2);
    let e = parse_brauer(&std::fs::read_to_string(fixture("disconnected.brauer")).unwrap()).unwrap_err();
    assert!(matches!(e, Error::InvalidBrauerGraph(_)), "{e}");
}

#[test]
fn brauer_parse_errors() {
    let missing_suffix = "vertex v mult 1\nedge l v v\ncyclic v: l l\n";
    assert!(matches!(parse_brauer(missing_suffix), Err(Error::Parse { line: 3, .. })));
    let stray_suffix = "vertex a mult 1\nvertex b mult 1\nvertex c mult 1\nedge e a b\nedge f a c\ncyclic a: e.1 f\n";
    assert!(matches!(parse_brauer(stray_suffix), Err(Error::Parse { line: 6, .. })));
    let unlisted = "vertex a mult 1\nvertex b mult 1\nvertex c mult 1\nedge e a b\nedge f a c\n";
    assert!(parse_brauer(unlisted).is_err());
    assert!(parse_brauer("vertex a mult 0\n").is_err());
    assert!(matches!(
        parse_brauer("vertex a mult 1\nedge e a z\n"),
        Err(Error::Parse { line: 2, .. })
    ));
}

#[test]
fn algebra_parse_errors() {
    let e = parse_algebra("vertex a\narrow x: a -> b\n").unwrap_err();
    assert!(matches!(e, Error::Parse { line: 2, .. }), "{e}");
    let e = parse_algebra("vertex a b\narrow x: a -> b\narrow y: a -> b\nrel x*y\n").unwrap_err();
    assert!(matches!(e, Error::Parse { line: 4, .. }), "{e}");
    assert!(matches!(
        parse_algebra("vertex a\narrow x: a -> a\nrel x\n"),
        Err(Error::ShortRelation(_))
    ));
    assert!(matches!(
        parse_algebra("vertex a\narrow x: a -> a\nrel x^2 - x\n"),
        Err(Error::ShortRelation(_))
    ));
    assert!(matches!(parse_algebra("field GF(4)\n"), Err(Error::Parse { line: 1, .. })));
    assert!(matches!(parse_algebra("quiver a\n"), Err(Error::Parse { line: 1, column: 1, .. })));
}

#[test]
fn hh_on_cube_over_gf3() {
    let (kv, code) = machine(&["hh", fixture("cube_gf3.alg").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(value(&kv, "hh1"), "3");
    assert_eq!(value(&kv, "derived"), "3,3");
    assert_eq!(value(&kv, "solvable"), "false");
    assert_eq!(value(&kv, "loop_char_hypothesis"), "fails");
}

#[test]
fn oracle_agrees_on_every_algebra_fixture() {
    for name in ["kronecker.alg", "cube_gf3.alg", "cube_q.alg", "char2.alg", "commuting_square.alg"] {
        let (kv, code) = machine(&["oracle", fixture(name).to_str().unwrap()]);
        assert_eq!(value(&kv, "verdict"), "AGREE", "{name}");
        assert_eq!(code, 0);
    }
}

#[test]
fn gb_and_basis() {
    let (kv, code) = machine(&["gb", fixture("char2.alg").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(value(&kv, "tips.count"), "3");
    assert_eq!(value(&kv, "added_by_overlaps"), "0");
    let (kv, _) = machine(&["basis", fixture("kronecker.alg").to_str().unwrap()]);
    assert_eq!(value(&kv, "dim"), "8");
    assert_eq!(value(&kv, "basis.0"), "e_1");
}

#[test]
fn chains_of_cube() {
    let (kv, code) = machine(&["chains", "--n", "2", fixture("cube_q.alg").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(value(&kv, "w-1"), "1");
    assert_eq!(value(&kv, "w0"), "1");
    assert_eq!(value(&kv, "w1"), "1");
    assert_eq!(value(&kv, "w2"), "1");
}

#[test]
fn report_on_first_graded_example() {
    let (kv, code) = machine(&["report", fixture("path3.brauer").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(value(&kv, "hh1"), "3");
    assert_eq!(value(&kv, "hh1_gr"), "4");
    assert_eq!(value(&kv, "gamma"), "2");
    assert_eq!(value(&kv, "failed_checks"), "0");
}

#[test]
fn report_flags_failed_identity() {
    let (kv, code) = machine(&["report", fixture("loop_at_short_end.brauer").to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(value(&kv, "check.gr_difference").starts_with("FAIL"));
}

#[test]
fn report_hypothesis_needs_flag() {
    let path = std::env::temp_dir().join("parapath_gf3_loop.brauer");
    std::fs::write(&path, "field GF(3)\nvertex v mult 2\nvertex u mult 1\nedge e u v\n").unwrap();
    let (kv, code) = machine(&["report", path.to_str().unwrap()]);
    assert_ne!(value(&kv, "hypothesis_failures"), "0");
    assert_eq!(code, 1);
    let (_, code) = machine(&["--allow-unmet-hypotheses", "report", path.to_str().unwrap()]);
    assert_eq!(code, 0);
}

#[test]
fn bga_then_hh_matches_report() {
    for name in ["kronecker.brauer", "two_three.brauer", "loop.brauer"] {
        let (alg, code) = run(&["bga", fixture(name).to_str().unwrap()]);
        assert_eq!(code, 0);
        let path = std::env::temp_dir().join(format!("parapath_{name}.alg"));
        std::fs::write(&path, &alg).unwrap();
        let (hh, _) = machine(&["hh", path.to_str().unwrap()]);
        let (rep, _) = machine(&["report", fixture(name).to_str().unwrap()]);
        for (a, b) in [("dim", "dim"), ("hh0", "hh0"), ("hh1", "hh1"), ("derived", "derived"), ("l00", "l00")] {
            assert_eq!(value(&hh, a), value(&rep, b), "{name} {a}");
        }
        let (gr, _) = run(&["bga", "--gr", fixture(name).to_str().unwrap()]);
        std::fs::write(&path, &gr).unwrap();
        let (hh, _) = machine(&["hh", path.to_str().unwrap()]);
        assert_eq!(value(&hh, "hh1"), value(&rep, "hh1_gr"), "{name}");
    }
}

#[test]
fn caps_exit_nonzero() {
    let path = std::env::temp_dir().join("parapath_infinite.alg");
    std::fs::write(&path, "vertex v\narrow x: v -> v\narrow y: v -> v\nrel x*y\n").unwrap();
    let (_, code) = run(&["--max-basis", "50", "basis", path.to_str().unwrap()]);
    assert_eq!(code, 3);
    std::fs::write(&path, "vertex v\narrow y: v -> v\narrow x: v -> v\nrel x*y - y*x\nrel x^2*y - y^3\n").unwrap();
    let (_, code) = run(&["--max-tip-len", "2", "gb", path.to_str().unwrap()]);
    assert_eq!(code, 3);
    let (_, code) = run(&["hh", "/nonexistent/file.alg"]);
    assert_eq!(code, 2);
}

#[test]
fn output_is_deterministic() {
    let args = ["report", "--corpus", "3", "--seed", "7"];
    let (a, _) = run(&args);
    let (b, _) = run(&args);
    assert_eq!(a, b);
    assert!(a.contains("graph.2.hh1"));
}

#[test]
fn text_and_machine_renderings_agree() {
    let mut r = RunReport::new();
    r.push("field", FieldSpec::rationals());
    r.push_list("rep", ["(x, x)"]);
    let machine = r.render_machine();
    let text = r.render_text();
    for ((k, v), (m, t)) in r.entries().iter().zip(machine.lines().zip(text.lines())) {
        assert_eq!(m, format!("{k}={v}"));
        assert!(t.starts_with(k.as_str()) && t.ends_with(v.as_str()));
    }
}
