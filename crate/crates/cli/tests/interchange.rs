use fatdual::{Field, Quiver, Rational, F31};
use fatdual_cli::doc::*;
use fatdual_cli::run;
use proptest::prelude::*;

fn quiver_strategy() -> impl Strategy<Value = QuiverDoc> {
    (1usize..6).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..6).prop_map(move |arrows| QuiverDoc {
            vertices: n,
            arrows: arrows.into_iter().filter(|(s, t)| s != t).map(|(s, t)| [s, t]).collect(),
        })
    })
}

fn element_strategy() -> impl Strategy<Value = ElementDoc> {
    (proptest::collection::vec(0usize..4, 1..4), 0usize..4, 0usize..5).prop_flat_map(|(shape, rows, cols)| {
        proptest::collection::vec(proptest::collection::vec((-50i64..50, 1i64..50), cols), rows).prop_map(move |d| {
            ElementDoc {
                shape: shape.clone(),
                data: d.into_iter().map(|r| r.into_iter().map(|(n, m)| rational_string(&Rational::new(n, m))).collect()).collect(),
            }
        })
    })
}

fn signature_strategy() -> impl Strategy<Value = SignatureDoc> {
    (proptest::collection::vec(1usize..9, 0..4), 0usize..4, any::<bool>()).prop_map(|(gl, m, obs)| SignatureDoc {
        gl_degrees: gl,
        torus_rank: m,
        config_space: (m > 0).then(|| ConfigSpaceDoc {
            m,
            description: format!("X^({m})/S_{m}, X cofinite in P^1"),
            observed_parameters: obs.then(|| (0..m).map(|i| format!("{i}/1")).collect()),
        }),
        trace: None,
    })
}

proptest! {
    #[test]
    fn quiver_documents_round_trip(d in quiver_strategy()) {
        let s = serde_json::to_string(&d).unwrap();
        prop_assert_eq!(serde_json::from_str::<QuiverDoc>(&s).unwrap(), d.clone());
        let q = d.to_quiver().unwrap();
        prop_assert_eq!(QuiverDoc::from_quiver(&parse_quiver(&print_quiver(&q)).unwrap()), d.clone());
        prop_assert_eq!(QuiverDoc::from_quiver(&parse_quiver(&s).unwrap()), d);
    }

    #[test]
    fn algebra_documents_round_trip(q in quiver_strategy(), e in 0usize..6) {
        let a = AlgebraDoc { split_vertex: e % q.vertices, quiver: q };
        let s = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<AlgebraDoc>(&s).unwrap(), a);
    }

    #[test]
    fn element_documents_round_trip(d in element_strategy()) {
        let s = serde_json::to_string(&d).unwrap();
        prop_assert_eq!(serde_json::from_str::<ElementDoc>(&s).unwrap(), d.clone());
        // parsing reduces mod p; printing reconstructs the small-height rationals
        let (shape, m) = element_from_doc(&d).unwrap();
        let back: Vec<Vec<String>> = (0..m.rows())
            .map(|r| m.row(r).iter().map(|x| rational_string(&f31_to_rational(x))).collect())
            .collect();
        prop_assert_eq!(shape, d.shape.clone());
        prop_assert_eq!(back, d.data);
    }

    #[test]
    fn signature_documents_round_trip(d in signature_strategy()) {
        let s = serde_json::to_string(&d).unwrap();
        prop_assert_eq!(serde_json::from_str::<SignatureDoc>(&s).unwrap(), d);
    }

    #[test]
    fn vectors_round_trip(v in proptest::collection::vec(0usize..100, 1..8)) {
        prop_assert_eq!(parse_vector(&print_vector(&v)).unwrap(), v);
    }

    #[test]
    fn field_elements_round_trip(v in any::<u32>()) {
        let x = F31::new(v as u64 % ((1 << 31) - 1));
        let r = f31_to_rational(&x);
        prop_assert_eq!(rational_to_f31(&parse_rational(&rational_string(&r)).unwrap()).unwrap(), x);
    }
}

#[test]
fn rational_edge_cases() {
    let half = rational_to_f31(&parse_rational("1/2").unwrap()).unwrap();
    assert_eq!(half * F31::from_i64(2), F31::one());
    assert_eq!(rational_string(&f31_to_rational(&half)), "1/2");
    assert_eq!(rational_string(&f31_to_rational(&F31::from_i64(-3))), "-3/1");
    assert!(parse_rational("x").is_err());
    let p = format!("1/{}", (1u64 << 31) - 1);
    assert!(rational_to_f31(&parse_rational(&p).unwrap()).is_err());
}

#[test]
fn quiver_syntax() {
    assert_eq!(parse_quiver("2:0>1,0>1").unwrap(), Quiver::kronecker());
    assert_eq!(parse_quiver("{\"vertices\":2,\"arrows\":[[0,1],[0,1]]}").unwrap(), Quiver::kronecker());
    assert!(parse_quiver("2:0>0").is_err());
    assert!(parse_quiver("nonsense").is_err());
}

fn out(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["fatdual"];
    argv.extend_from_slice(args);
    let o = run(argv);
    (o.code, o.stdout, o.stderr)
}

#[test]
fn documented_examples() {
    let (code, s, _) = out(&["fat-subset", "--algebra", "t2", "--p", "4,6"]);
    assert_eq!(code, 0);
    assert!(s.contains("gl_degrees  [2]") && s.contains("m           0"));
    let (code, s, _) = out(&["delta", "--quiver", "kronecker"]);
    assert_eq!(code, 0);
    assert!(s.contains("(1,1)"));
    let (code, s, _) = out(&["census", "--algebra", "t2", "--p", "1,1", "--q", "2"]);
    assert_eq!(code, 0);
    assert!(s.contains("orbits  2"));
}

#[test]
fn exit_codes() {
    assert_eq!(out(&["frobnicate"]).0, 1);
    assert_eq!(out(&["delta"]).0, 1);
    assert_eq!(out(&["delta", "--quiver", "3:0>"]).0, 1);
    assert_eq!(out(&["fat-subset", "--algebra", "t2", "--p", "1,2,3"]).0, 1);
    // domain aborts
    assert_eq!(out(&["delta", "--quiver", "a3"]).0, 2);
    assert_eq!(out(&["roots", "--quiver", "3:0>1,0>1,0>1,1>2"]).0, 2);
    assert_eq!(out(&["census", "--algebra", "t2", "--p", "1,1", "--q", "5"]).0, 2);
    assert_eq!(out(&["census", "--algebra", "t2", "--p", "4,4", "--q", "2"]).0, 2);
    assert_eq!(out(&["--help"]).0, 0);
}

#[test]
fn documents_carry_seed_and_version() {
    let (code, s, _) = out(&["classify", "--quiver", "kronecker", "--format", "doc", "--seed", "42"]);
    assert_eq!(code, 0);
    let env: Envelope = serde_json::from_str(&s).unwrap();
    assert_eq!(env.seed, 42);
    assert_eq!(env.version, env!("CARGO_PKG_VERSION"));
    assert_eq!(env.command, "classify");
    assert_eq!(env.result["class"], "Euclidean A~1");
    let (_, t, _) = out(&["classify", "--quiver", "kronecker", "--seed", "42"]);
    assert!(t.starts_with("# fatdual 0.1.0 seed 42\n"));
}

#[test]
fn degen_check_reports_refutation() {
    let input = r#"{"w":{"shape":[1,1],"data":[["0/1"]]},"w2":{"shape":[1,1],"data":[["1/1"]]}}"#;
    let (code, s, _) = out(&["degen-check", "--algebra", "t2", "--input", input, "--format", "doc"]);
    assert_eq!(code, 0);
    let env: Envelope = serde_json::from_str(&s).unwrap();
    assert_eq!(env.result["verdict"], "not a degeneration");
    let bad = r#"{"w":{"shape":[1,1],"data":[["1/1","2/1"]]},"w2":{"shape":[1,1],"data":[["1/1"]]}}"#;
    assert_eq!(out(&["degen-check", "--algebra", "t2", "--input", bad]).0, 2);
}
