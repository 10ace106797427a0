//! Golden outputs for every command form, plus byte determinism and the
//! step-limit environment variable contract.

use std::process::Command;

fn run(args: &[&str]) -> (i32, String) {
    let mut buf = Vec::new();
    let code = hallk_cli::run(args.iter().map(|s| s.to_string()), &mut buf);
    (code, String::from_utf8(buf).expect("utf-8 output"))
}

fn golden(args: &[&str], want_code: i32, want_out: &str) {
    let (code, out) = run(args);
    assert_eq!(out, want_out, "output of {args:?}");
    assert_eq!(code, want_code, "exit code of {args:?}");
    let (code2, out2) = run(args);
    assert_eq!((code2, out2), (code, out), "{args:?} is not deterministic");
}

#[test]
fn normal_form_command() {
    golden(
        &[
            "nf",
            "f[1](3) * f[1](0)",
            "--quiver",
            "A1",
            "--format",
            "text",
        ],
        0,
        "q^-4 * f[1](1)*f[1](2) + q^-1 * P2[1](1,1)\n",
    );
    golden(
        &["nf", "f[1](3) * f[1](0)", "--format", "json"],
        0,
        "{\"result\":{\"grade\":{\"a\":[2],\"n\":3},\"words\":[{\"coef\":{\"den\":[[0,0,\"1\"]],\"num\":[[-4,0,\"1\"]]},\"syms\":[\"f[1](1)\",\"f[1](2)\"]},{\"coef\":{\"den\":[[0,0,\"1\"]],\"num\":[[-1,0,\"1\"]]},\"syms\":[\"P2[1](1,1)\"]}]},\"steps\":2,\"unreduced\":false}\n",
    );
    golden(
        &["nf", "f[1](3) * f[1](0)", "--format", "latex"],
        0,
        "q^{-4}\\,f_{1,1}f_{1,2} + q^{-1}\\,P_{2,\\omega_1 + \\omega_2}\n",
    );
    // worklist scrambling must not move the normal form
    golden(
        &["nf", "f[1](3) * f[1](0)", "--seed", "42"],
        0,
        "q^-4 * f[1](1)*f[1](2) + q^-1 * P2[1](1,1)\n",
    );
}

#[test]
fn parse_command() {
    golden(
        &["parse", "[f[1](0), f[2](0)]_q^1", "--quiver", "A2"],
        0,
        "f[1](0)*f[2](0) - q^1 * f[2](0)*f[1](0)\n",
    );
    golden(
        &["parse", "[f[1](0), f[2](0)]_q^1", "--quiver", "A2", "--format", "json"],
        0,
        "{\"grade\":{\"a\":[1,1],\"n\":0},\"words\":[{\"coef\":{\"den\":[[0,0,\"1\"]],\"num\":[[0,0,\"1\"]]},\"syms\":[\"f[1](0)\",\"f[2](0)\"]},{\"coef\":{\"den\":[[0,0,\"1\"]],\"num\":[[1,0,\"-1\"]]},\"syms\":[\"f[2](0)\",\"f[1](0)\"]}]}\n",
    );
    golden(
        &[
            "parse",
            "(q^-1 - q^1) * f[1,2](0,0)",
            "--quiver",
            "A2",
            "--format",
            "latex",
        ],
        0,
        "(q^{-1} - q)\\,f_{[1,2],(0,0)}\n",
    );
}

#[test]
fn verify_command() {
    golden(
        &[
            "verify", "serre", "--i", "1", "--l", "0", "--lp", "0", "--quiver", "A2",
        ],
        0,
        "proved\n",
    );
    golden(
        &["verify", "serre", "--quiver", "A2", "--format", "json"],
        0,
        "{\"normal_form\":{\"grade\":null,\"words\":[]},\"proved\":true,\"steps\":5,\"unreduced\":false}\n",
    );
    golden(
        &[
            "verify", "bracket", "--l", "2", "--lp", "-1", "--quiver", "A2",
        ],
        0,
        "proved\n",
    );
    golden(
        &[
            "verify", "u3", "--i", "2", "--l", "1", "--lp", "0", "--quiver", "A3",
        ],
        0,
        "proved\n",
    );
    golden(
        &[
            "verify", "interval", "--i", "1", "--j", "3", "--loops", "0,-1,2", "--quiver", "A3",
        ],
        0,
        "proved\n",
    );
    // soundness: distinct normal forms are reported, not equated
    golden(
        &[
            "verify",
            "f[1](0)*f[2](0)",
            "f[2](0)*f[1](0)",
            "--quiver",
            "A2",
        ],
        1,
        "not proved: (q^-1 - 1) * f[1,2](0,0) + (q^-1*t^-1 - t^-1) * f[1,2](1,-1)\n",
    );
}

#[test]
fn lambda_command() {
    golden(
        &["lambda", "f[1](2)", "f[1](5)"],
        0,
        "{\"lambda\":6,\"source\":\"proven\"}\n",
    );
    golden(
        &["lambda", "f[1](5)", "f[1](2)"],
        0,
        "{\"lambda\":-2,\"source\":\"proven\"}\n",
    );
    golden(
        &["lambda", "f[1,2](0,0)", "f[1](0)", "--quiver", "A2"],
        0,
        "{\"lambda\":-1,\"source\":\"proven\"}\n",
    );
    golden(
        &["lambda", "f[1](0)", "f[1,2](0,0)", "--quiver", "A2"],
        0,
        "{\"lambda\":1,\"source\":\"proven\"}\n",
    );
    golden(
        &["lambda", "f[1](0)", "f[3](0)", "--quiver", "A3"],
        2,
        "error: no proven degree entry for the pair (f[1](0), f[3](0))\n",
    );
}

#[test]
fn simples_command() {
    golden(
        &[
            "simples", "--dim", "2", "--grades", "-1..1", "--quiver", "A1",
        ],
        0,
        "orbit ((2)) unclassified [0]{-1}<1>\n\
         orbit ((1,1)) weight (-1,-1) [0]{0}<0>\n\
         orbit ((1,1)) weight (0,-1) [0]{0}<0>\n\
         orbit ((1,1)) weight (0,0) [0]{0}<0>\n\
         orbit ((1,1)) weight (1,-1) [0]{0}<0>\n\
         orbit ((1,1)) weight (1,0) [0]{0}<0>\n\
         orbit ((1,1)) weight (1,1) [0]{0}<0>\n",
    );
    golden(
        &[
            "simples", "--dim", "2", "--grades", "1..2", "--quiver", "jordan",
        ],
        0,
        "orbit ((2)) char 1 [0]{-1}<1>\n\
         orbit ((2)) char 2 [0]{-1}<1>\n\
         orbit ((1,1)) weight (1,1) [0]{0}<0>\n\
         orbit ((1,1)) weight (2,1) [0]{0}<0>\n\
         orbit ((1,1)) weight (2,2) [0]{0}<0>\n",
    );
    golden(
        &["simples", "--dim", "2", "--grades", "-1..1", "--quiver", "A1", "--format", "json"],
        0,
        "[{\"dim\":2,\"orbit\":[[2]],\"shift\":{\"c\":0,\"l\":-1,\"s\":1},\"weight\":\"unclassified\"},{\"dim\":0,\"orbit\":[[1,1]],\"shift\":{\"c\":0,\"l\":0,\"s\":0},\"weight\":\"weight (-1,-1)\"},{\"dim\":0,\"orbit\":[[1,1]],\"shift\":{\"c\":0,\"l\":0,\"s\":0},\"weight\":\"weight (0,-1)\"},{\"dim\":0,\"orbit\":[[1,1]],\"shift\":{\"c\":0,\"l\":0,\"s\":0},\"weight\":\"weight (0,0)\"},{\"dim\":0,\"orbit\":[[1,1]],\"shift\":{\"c\":0,\"l\":0,\"s\":0},\"weight\":\"weight (1,-1)\"},{\"dim\":0,\"orbit\":[[1,1]],\"shift\":{\"c\":0,\"l\":0,\"s\":0},\"weight\":\"weight (1,0)\"},{\"dim\":0,\"orbit\":[[1,1]],\"shift\":{\"c\":0,\"l\":0,\"s\":0},\"weight\":\"weight (1,1)\"}]\n",
    );
}

#[test]
fn oracle_command() {
    for (identity, l, lp) in [
        ("ses1", "0", "1"),
        ("ses2", "1", "0"),
        ("ses3", "2", "-1"),
        ("ses4", "2", "-1"),
        ("bracket", "0", "0"),
    ] {
        golden(
            &["oracle", "verify", identity, "--l", l, "--lp", lp],
            0,
            &format!("{identity} l={l} lp={lp}: holds\n"),
        );
    }
    golden(
        &["oracle", "verify", "reality", "--l", "-1"],
        0,
        "reality l=-1: holds\n",
    );
    golden(
        &["oracle", "verify", "ses1", "--l", "0", "--lp", "1", "--format", "json"],
        0,
        "{\"holds\":true,\"identity\":\"ses1\",\"lhs\":{\"den\":[[0,0,0,0,0,0,\"1\"],[2,0,0,0,1,-1,\"-1\"],[2,0,0,0,-1,1,\"-1\"],[4,0,0,0,0,0,\"1\"]],\"num\":[[2,0,0,0,1,1,\"-1\"],[4,0,0,0,2,0,\"1\"],[4,0,0,0,1,1,\"1\"],[4,0,0,0,0,2,\"1\"]]},\"params\":{\"l\":0,\"lp\":1},\"rhs\":{\"den\":[[0,0,0,0,0,0,\"1\"],[2,0,0,0,1,-1,\"-1\"],[2,0,0,0,-1,1,\"-1\"],[4,0,0,0,0,0,\"1\"]],\"num\":[[2,0,0,0,1,1,\"-1\"],[4,0,0,0,2,0,\"1\"],[4,0,0,0,1,1,\"1\"],[4,0,0,0,0,2,\"1\"]]}}\n",
    );
    golden(
        &[
            "oracle",
            "crosscheck",
            "q^-1 * f[1](2)*f[2](3)",
            "--quiver",
            "A2",
        ],
        0,
        "agree: q^-2*r1^2*r2^3\n",
    );
    golden(
        &["oracle", "crosscheck", "f[1](0)", "--quiver", "A3"],
        2,
        "error: no character model covers grade ((1,0,0),0) on quiver v=3; e=1>2,2>3\n",
    );
}

#[test]
fn usage_errors() {
    golden(
        &["nf", "f[1](0) +"],
        2,
        "error: parse error at byte 9: expected a factor, found end of input\n",
    );
    golden(
        &["nf", "f[1,2](0,0) + f[1](0)", "--quiver", "A2"],
        2,
        "error: parse error at byte 14: grade mismatch: ((1,1),0) vs ((1,0),0)\n",
    );
    golden(
        &["oracle", "verify", "nonsense"],
        2,
        "error: unknown identity \"nonsense\"; expected ses1..ses4, reality, or bracket\n",
    );
    golden(
        &["verify", "nonsense"],
        2,
        "error: unknown relation family \"nonsense\"; expected bracket, u3, serre, or interval\n",
    );
    let (code, out) = run(&["nf", "f[1](0)", "--quiver", "B7"]);
    assert_eq!(code, 2);
    assert!(out.starts_with("error:"), "{out}");
    let (code, _) = run(&["frobnicate"]);
    assert_eq!(code, 2);
    let (code, out) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("nf"), "{out}");
}

#[test]
fn step_limit_environment_contract() {
    let exe = env!("CARGO_BIN_EXE_hallk");
    let expr = "f[1](3) * f[1](0)";

    let out = Command::new(exe)
        .args(["nf", expr])
        .env("HALLK_MAX_STEPS", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(
        String::from_utf8_lossy(&out.stdout),
        "error: reduction exceeded the step limit 1\n"
    );

    // the flag outranks the environment
    let out = Command::new(exe)
        .args(["nf", expr, "--max-steps", "50"])
        .env("HALLK_MAX_STEPS", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8_lossy(&out.stdout),
        "q^-4 * f[1](1)*f[1](2) + q^-1 * P2[1](1,1)\n"
    );

    let out = Command::new(exe)
        .args(["nf", expr])
        .env("HALLK_MAX_STEPS", "abc")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(
        String::from_utf8_lossy(&out.stdout),
        "error: HALLK_MAX_STEPS is not an integer: \"abc\"\n"
    );
}
