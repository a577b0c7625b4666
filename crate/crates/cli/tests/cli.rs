use foxforge_core::alexander::alexander_matrix;
use foxforge_core::poly::LaurentPoly;
use foxforge_core::presentation::{builtin, Presentation};
use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn cli(args: &[&str]) -> Run {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = foxforge::run(std::iter::once("foxforge").chain(args.iter().copied()), &mut out, &mut err);
    Run { code, stdout: String::from_utf8(out).unwrap(), stderr: String::from_utf8(err).unwrap() }
}

fn json(args: &[&str]) -> (i32, Value) {
    let run = cli(args);
    (run.code, serde_json::from_str(&run.stdout).unwrap_or_else(|e| panic!("{e}: {}", run.stdout)))
}

const A1: &str = "a1=[t2,t3];a2=[t1,t3];a3=[t1,t2]";
const A2: &str = "a1=[t2,t3];a2=[t2,t3];a3=[t1,t2]";

#[test]
fn exit_codes() {
    assert_eq!(cli(&["alexander", "--pres", "builtin:paper_G"]).code, 0);
    let missing = cli(&["alexander", "--pres", "nosuchfile"]);
    assert_eq!(missing.code, 1);
    assert!(missing.stderr.contains("nosuchfile"));
    assert_eq!(cli(&["alexander", "--pres", "builtin:nosuchfamily"]).code, 1);
    assert_eq!(cli(&["alexander"]).code, 2);
    assert_eq!(cli(&["frobnicate"]).code, 2);
    assert_eq!(cli(&["scheuneman", "--alpha", A1, "--form", "y1"]).code, 2);
    assert_eq!(cli(&["--help"]).code, 0);
    assert_eq!(cli(&["--version"]).code, 0);
    let same = cli(&["alexander", "--pres", "builtin:paper_G", "--against", "builtin:paper_G"]);
    assert_eq!(same.code, 3);
    assert!(same.stdout.ends_with("verdict: inconclusive\n"));
    assert_eq!(cli(&["alexander", "--pres", "builtin:paper_G", "--against", "builtin:paper_H"]).code, 0);
    assert_eq!(cli(&["scheuneman", "--compare", A1, A2]).code, 0);
    assert_eq!(cli(&["scheuneman", "--compare", A1, A1]).code, 3);
}

#[test]
fn weights_are_checked_by_name() {
    let unknown = cli(&["alexander", "--pres", "builtin:paper_H", "--weights", "zz=2"]);
    assert_eq!(unknown.code, 1);
    assert!(unknown.stderr.contains("unknown generator `zz`"));
    assert_eq!(cli(&["alexander", "--pres", "builtin:paper_H", "--weights", "a_1_3"]).code, 1);
    // every relator is balanced per generator, so any weights are admissible
    let (code, v) = json(&["alexander", "--pres", "builtin:paper_H", "--weights", "a_1_3=2", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(v["weights"], serde_json::json!([2, 1, 1, 1, 1]));
    let hz = cli(&["alexander", "--pres", "builtin:h_z", "--weights", "a=0"]);
    assert_eq!(hz.code, 0, "{}", hz.stderr);
}

#[test]
fn unbalanced_weights_are_a_domain_error() {
    let dir = std::path::Path::new(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join("unbalanced.pres");
    std::fs::write(&path, "gens: a, b; rels: a^2*b^-1").unwrap();
    let path = path.to_str().unwrap();
    assert_eq!(cli(&["alexander", "--pres", path, "--weights", "a=1,b=2"]).code, 0);
    let bad = cli(&["alexander", "--pres", path]);
    assert_eq!(bad.code, 1);
    assert!(bad.stderr.contains("weight sum 1"), "{}", bad.stderr);
}

#[test]
fn alexander_json_round_trips() {
    let (code, v) = json(&["alexander", "--pres", "builtin:paper_G", "--json"]);
    assert_eq!(code, 0);
    let p: LaurentPoly = v["polynomial"].as_str().unwrap().parse().unwrap();
    assert_eq!(p.to_string(), v["polynomial"].as_str().unwrap());
    assert_eq!(v["minor_size"], 4);
    assert_eq!(v["normalized"], true);

    let g = builtin("paper_G", None).unwrap();
    let m = alexander_matrix(&g, &[1; 5]).unwrap();
    let rows = v["matrix"].as_array().unwrap();
    assert_eq!(rows.len(), m.rows());
    for (i, row) in rows.iter().enumerate() {
        for (j, cell) in row.as_array().unwrap().iter().enumerate() {
            let terms = cell.as_object().unwrap().iter().map(|(e, c)| (e.parse::<i64>().unwrap(), c.as_i64().unwrap()));
            assert_eq!(&LaurentPoly::from_terms(terms), m.get(i, j), "entry ({i}, {j})");
        }
    }
    let relators: Vec<&str> = v["relators"].as_array().unwrap().iter().map(|r| r.as_str().unwrap()).collect();
    let rebuilt: Vec<_> = relators.iter().map(|r| g.word(r).unwrap()).collect();
    assert_eq!(rebuilt, g.relators());
}

#[test]
fn present_round_trips() {
    for source in ["builtin:paper_H", "builtin:mccool:3", "builtin:poison_free:2", "builtin:index2_H"] {
        let run = cli(&["present", "--pres", source]);
        assert_eq!(run.code, 0);
        let text = run.stdout.lines().next().unwrap();
        let parsed: Presentation = text.parse().unwrap();
        let (_, v) = json(&["present", "--pres", source, "--json"]);
        assert_eq!(v["generators"].as_array().unwrap().len(), parsed.generator_count());
        assert_eq!(v["relators"].as_array().unwrap().len(), parsed.relators().len());
        let reprinted = cli(&["present", "--pres", source]).stdout;
        assert_eq!(reprinted, run.stdout);
    }
}

#[test]
fn outputs_are_deterministic() {
    let commands: [&[&str]; 5] = [
        &["reproduce", "thm2.1", "--json"],
        &["reproduce", "sec3.3", "--json"],
        &["verify", "relators", "--pres", "builtin:pure_braid:4", "--assign", "auto-a", "--json"],
        &["fox", "--pres", "builtin:paper_H", "--specialize", "--json"],
        &["scheuneman", "--alpha", A2, "--json"],
    ];
    for args in commands {
        let (a, b) = (cli(args), cli(args));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.code, b.code);
    }
}

#[test]
fn reproduce_reports_every_stated_derivative() {
    let (code, v) = json(&["reproduce", "thm2.1", "--json"]);
    assert_eq!(v["total"], 24);
    assert_eq!(v["verdict"], "distinguished");
    let failing: Vec<&str> = v["derivatives"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["matches"] == false)
        .map(|c| c["item"].as_str().unwrap())
        .collect();
    assert_eq!(failing, ["r31 / e_3_1", "r32 / e_3_2"]);
    assert_eq!(code, 1);
    let run = cli(&["reproduce", "thm2.1"]);
    assert!(run.stderr.contains("first mismatch: r31 / e_3_1"), "{}", run.stderr);
}

#[test]
fn failed_relator_check_exits_one() {
    // the two copies of F2 swapped: conjugations on the unprimed generators
    let assign = "x1=conj:[x1,x2]:3,x2=conj:[x1,x2^-1]:3,x1'=rmul:3:[x1,x2]:3,x2'=rmul:3:[x1,x2^-1]:3,t=conj:x3:3";
    let (code, v) = json(&["verify", "relators", "--pres", "builtin:poison_free:2", "--assign", assign, "--json"]);
    assert_eq!(code, 1);
    let failing: Vec<u64> = v["relators"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["holds"] == false)
        .map(|r| r["index"].as_u64().unwrap())
        .collect();
    assert_eq!(failing, [4, 5]);
    assert_eq!(cli(&["reproduce", "prop3.2"]).code, 0);
}

#[test]
fn explicit_inverses_are_checked() {
    let pres = "builtin:braid:3";
    let ok = cli(&["verify", "relators", "--pres", pres, "--assign", "s1=builtin:sigma:1:3,s2=builtin:sigma:2:3"]);
    assert_eq!(ok.code, 0, "{}", ok.stderr);
    let wrong = cli(&[
        "verify",
        "relators",
        "--pres",
        pres,
        "--assign",
        "s1=builtin:sigma:1:3,s2=builtin:sigma:2:3",
        "--inverses",
        "s1=builtin:sigma:1:3",
    ]);
    assert_eq!(wrong.code, 1);
    assert!(wrong.stdout.contains("inverse of s1: FAILS"));
    assert_eq!(cli(&["verify", "relators", "--pres", pres, "--assign", "s1=builtin:sigma:1:3"]).code, 1);
}

#[test]
fn braid_and_center_checks() {
    assert_eq!(cli(&["verify", "braid", "--autom", "builtin:a:1:3:4"]).code, 0);
    assert_eq!(cli(&["verify", "braid", "--autom", "builtin:eps:1:2:3"]).code, 1);
    let (_, v) = json(&["verify", "braid", "--autom", "builtin:sigma:2:3", "--json"]);
    assert_eq!(v["permutation"], serde_json::json!([1, 3, 2]));
    // conjugation by w commutes with φ exactly when φ(w) = w; σ1 fixes x1*x2, σ2 does not
    let fixed = cli(&["verify", "center", "--candidate", "conj:x1*x2:3", "--against", "builtin:sigma:1:3"]);
    assert_eq!(fixed.code, 0);
    let moved = cli(&["verify", "center", "--candidate", "conj:x1*x2:3", "--against", "builtin:sigma:2:3"]);
    assert_eq!(moved.code, 1);
    let (code, v) = json(&[
        "verify",
        "center",
        "--candidate",
        "builtin:eps:2:1:4*builtin:eps:3:1:4*builtin:eps:4:1:4",
        "--against",
        "builtin:eps:2:1:4,builtin:eps:3:2:4,conj:x1:4",
        "--json",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["candidate"], "images:[x1;x1^-1*x2*x1;x1^-1*x3*x1;x1^-1*x4*x1]");
}

#[test]
fn scheuneman_json_fields() {
    let (code, v) = json(&["scheuneman", "--alpha", A2, "--json"]);
    assert_eq!(code, 0);
    assert_eq!(v["signature"], serde_json::json!([2, 4]));
    assert_eq!(v["noncentral_remainder"], false);
    let (_, f) = json(&["scheuneman", "--form", "y1*y4*y3 - y2*y5*y3 + y3^2*y5 - y3^3", "--json"]);
    assert_eq!(f["hessian"], "0");
    assert_eq!(f["signature"], Value::Null);
    assert_eq!(cli(&["scheuneman", "--form", "y7^3"]).code, 1);
    assert_eq!(cli(&["scheuneman", "--form", "y7^3", "--vars", "7"]).code, 0);
    assert_eq!(cli(&["scheuneman", "--alpha", "a1=[t1,t1];a2=[t1,t3];a3=[t1,t2]"]).code, 1);
}
