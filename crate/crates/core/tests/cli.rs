use std::process::Command;

use cobordism_calc::cli::{parse_class_spec, run, Outcome};
use cobordism_calc::json::{from_json, to_json};
use cobordism_calc::rational::int;
use cobordism_calc::symfun::enumerate_partitions;
use cobordism_calc::{CobordismClass, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn cli(args: &str) -> Outcome {
    run(std::iter::once("cobordism-calc").chain(args.split_whitespace()))
}

#[test]
fn pbundle_json_example() {
    let out = cli("class pbundle --base-c1sq 152 --base-c2 100 --c2e 248 --rank 2 --format json");
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(
        out.stdout,
        "{\"dim\":3,\"coeffs\":{\"[1,1,1]\":\"-1072/1\",\"[2,1]\":\"504/1\",\"[3]\":\"200/1\"}}\n"
    );
    let spec = cli("class pbundle:152,100,248,2 --format json");
    assert_eq!(spec.stdout, out.stdout);
}

#[test]
fn genus_outputs() {
    assert_eq!(cli("genus chi-y --class cp:2").stdout, "1 - y + y^2\n");
    assert_eq!(
        cli("genus chi-y --class cp:2 --format json").stdout,
        "{\"genus\":\"chi-y\",\"dim\":2,\"coeffs\":[\"1/1\",\"-1/1\",\"1/1\"]}\n"
    );
    assert_eq!(cli("genus todd --class cp:5").stdout, "1\n");
    assert_eq!(cli("genus euler --class cp:5").stdout, "6\n");
    assert_eq!(cli("genus signature --class cp:4").stdout, "1\n");
    assert_eq!(
        cli("genus signature --class surface:152,100").stdout,
        "-16\n"
    );
    let p = cli("genus pontryagin --class cp:2 --format json");
    assert_eq!(
        p.stdout,
        "{\"genus\":\"pontryagin\",\"dim\":2,\"coeffs\":{\"[1]\":\"3/1\"}}\n"
    );
    assert_eq!(cli("genus pontryagin --class cp:3").code, 2);
}

#[test]
fn class_specs() {
    let x = parse_class_spec("cp:1").unwrap();
    assert_eq!(
        x.chern_numbers().values().cloned().collect::<Vec<_>>(),
        vec![int(2)]
    );
    let s = parse_class_spec("surface:152,100").unwrap();
    let c: Vec<Rational> = s.to_dense();
    assert_eq!(c, vec![int(100), int(152)]);
    assert_eq!(cli("s-number abelian:-1,2").stdout, "8\n");
    for bad in [
        "cp",
        "cp:-1",
        "cp:1,2",
        "surface:1",
        "surface:1/0,2",
        "pbundle:1,2,3,1",
        "torus:1",
        "abelian:1,x",
    ] {
        assert!(parse_class_spec(bad).is_err(), "{bad}");
    }
}

#[test]
fn partitions_and_products() {
    assert_eq!(
        cli("partitions 4").stdout,
        "(4)\n(3,1)\n(2,2)\n(2,1,1)\n(1,1,1,1)\n"
    );
    assert_eq!(
        cli("partitions 3 --format json").stdout,
        "[[3],[2,1],[1,1,1]]\n"
    );
    let out = cli("product cp:1 cp:2 --format json");
    assert_eq!(
        out.stdout,
        "{\"dim\":3,\"coeffs\":{\"[1,1,1]\":\"54/1\",\"[2,1]\":\"24/1\",\"[3]\":\"6/1\"}}\n"
    );
    let table = cli("class cp:2").stdout;
    assert_eq!(
        table,
        "CP^2, dim 2\nchern   value\nc(2)        3\nc(1,1)      9\n"
    );
}

#[test]
fn verify_commands() {
    let out = cli("verify theorem --kind do --dim 4");
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("PASS do n=4"));
    assert!(out.stdout.contains("annihilator_dim 3"));
    let json = cli("verify theorem --kind betti --dim 5 --format json");
    assert!(
        json.stdout.contains("\"annihilator_dim\":3")
            && json.stdout.contains("\"chi_y_vanishes\":true")
    );
    assert_eq!(cli("verify generators --max-dim 5").code, 0);
}

#[test]
fn verification_failure_exits_one_with_witness() {
    // Projective spaces have nonzero Euler numbers, so their monomials do
    // not span an ideal annihilated by c_n.
    let out = cli("verify theorem --kind do --dim 3 --generators cp");
    assert_eq!(out.code, 1, "{out:?}");
    assert!(out.stdout.starts_with("FAIL do n=3"));
    assert!(out.stdout.contains("witness"));
    let json = cli("verify theorem --kind h --dim 4 --generators cp --format json");
    assert_eq!(json.code, 1);
    assert!(
        json.stdout.contains("\"passed\":false") && json.stdout.contains("\"witness\":{\"dim\":4")
    );
    // The gamma family is a basis but its degree-two generator is CP^2.
    assert_eq!(
        cli("verify theorem --kind h --dim 2 --generators gamma").code,
        1
    );
    assert_eq!(
        cli("verify theorem --kind betti --dim 4 --generators beta").code,
        1
    );
    // Degenerate parameters are usage errors, not verification failures.
    assert_eq!(
        cli("verify theorem --kind do --dim 3 --surface-c1sq 200 --surface-c2 100").code,
        2
    );
    assert_eq!(
        cli("verify theorem --kind betti --dim 4 --gamma-c 0").code,
        2
    );
}

#[test]
fn usage_errors() {
    for args in [
        "",
        "frobnicate",
        "class",
        "class cp:2 --bogus 1",
        "class pbundle --base-c1sq 1 --base-c2 2 --c2e 3 --rank 1",
        "class pbundle --base-c1sq 1/0 --base-c2 2 --c2e 3 --rank 2",
        "class cp --n 2 --rank 3",
        "partitions -3",
        "verify theorem --kind x --dim 3",
        "verify theorem --kind do --dim 0",
        "demo unbounded --functional chi_0 --dim 4",
        "demo unbounded --functional c1-power",
        "--jobs 0 verify all",
    ] {
        let out = cli(args);
        assert_eq!(out.code, 2, "{args}: {out:?}");
        assert!(out.stdout.is_empty());
        assert!(out.stderr.contains("Usage"), "{args}: {}", out.stderr);
    }
    let out = cli("demo unbounded --functional chi_0 --dim 4");
    assert!(out.stderr.starts_with("error: functional lies in the span"));
    assert_eq!(
        out.stderr.lines().next().unwrap().matches("error").count(),
        1
    );
}

#[test]
fn demo_table() {
    let out = cli("demo unbounded --functional c1-power --dim 3 --degrees 1,3");
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("witness gamma_(3)  f = 8"));
    assert!(out.stdout.ends_with("linear: yes\n"));
    let coord = cli("demo unbounded --functional coord:1,1,1,1 --degrees 2 --format json");
    assert!(
        coord.stdout.contains("\"values\":[[2,\"162/1\"]]"),
        "{}",
        coord.stdout
    );
}

fn random_class(rng: &mut ChaCha8Rng) -> CobordismClass {
    let dim = rng.gen_range(0..=7usize);
    let v: Vec<Rational> = (0..enumerate_partitions(dim).len())
        .map(|_| {
            Rational::new(
                rng.gen_range(-500..=500).into(),
                rng.gen_range(1..=40).into(),
            )
        })
        .collect();
    CobordismClass::from_dense(dim, &v).unwrap()
}

#[test]
fn json_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..100 {
        let x = random_class(&mut rng);
        let path = dir.path().join(format!("c{i}.json"));
        std::fs::write(&path, to_json(&x)).unwrap();
        let spec = format!("file:{}", path.display());
        assert_eq!(parse_class_spec(&spec).unwrap(), x);
        let out = cli(&format!("class {spec} --format json"));
        assert_eq!(from_json::<CobordismClass>(&out.stdout).unwrap(), x);
    }
}

#[test]
fn output_file_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let args = format!(
        "verify all --max-dim 4 --format json --output {}",
        path.display()
    );
    let out = cli(&args);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.is_empty());
    let first = std::fs::read(&path).unwrap();
    assert_eq!(cli(&args).code, 0);
    assert_eq!(std::fs::read(&path).unwrap(), first);
    let parallel = cli("verify all --max-dim 4 --format json --jobs 3");
    assert_eq!(parallel.stdout.as_bytes(), first.as_slice());
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_cobordism-calc");
    let ok = Command::new(bin)
        .args(["genus", "chi-y", "--class", "cp:2"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "1 - y + y^2\n");
    let bad = Command::new(bin).args(["class", "cp:x"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("Usage"));
}
