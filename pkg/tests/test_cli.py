import json

import pytest

from hornkit.cli import main

GAMMA0 = "vars x y z\nx y\nx z\ny -z\n-y z\n"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


@pytest.fixture
def gamma0_file(tmp_path):
    path = tmp_path / "gamma0.cnf"
    path.write_text(GAMMA0)
    return str(path)


def test_compile_example(capsys, gamma0_file):
    code, out = run(capsys, "compile", gamma0_file)
    assert code == 0
    assert out == "core: y z\nenvelope: (-z y) (-y z)\n"


def test_compile_all_cores(capsys, gamma0_file):
    code, out = run(capsys, "compile", gamma0_file, "--all-cores")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "core: y z"
    assert lines[1] == "core: x (-z y) (-y z)"
    assert lines[2] == "envelope: (-z y) (-y z)"


def test_compile_horn_input_fixed_point(capsys, tmp_path):
    # Horn input: envelope and core coincide with the input up to equivalence
    path = tmp_path / "horn.cnf"
    path.write_text("vars x y\nx\n-x y\n")
    code, out = run(capsys, "compile", str(path))
    assert code == 0
    assert out == "core: x y\nenvelope: x y\n"


def test_compile_unsat(capsys, tmp_path):
    path = tmp_path / "bad.cnf"
    path.write_text("vars x\nx\n-x\n")
    code, out = run(capsys, "compile", str(path))
    assert code == 4
    assert out == "UNSAT\n"


def test_compile_parse_error(capsys, tmp_path):
    path = tmp_path / "bad.cnf"
    path.write_text("vars x\ny\n")
    code, _ = run(capsys, "compile", str(path))
    assert code == 2


def test_compile_limit_exceeded(capsys, tmp_path):
    names = " ".join(f"x{i}" for i in range(22))
    path = tmp_path / "wide.cnf"
    path.write_text(f"vars {names}\nx0\n")
    code, _ = run(capsys, "compile", str(path))
    assert code == 3


def test_compile_dimacs(capsys, tmp_path):
    path = tmp_path / "f.dimacs"
    path.write_text("p cnf 2 2\n1 0\n-1 2 0\n")
    code, out = run(capsys, "compile", str(path))
    assert code == 0
    assert out == "core: v1 v2\nenvelope: v1 v2\n"


def test_session_flow_4_1(capsys, tmp_path, gamma0_file):
    state = str(tmp_path / "session.json")
    phi = tmp_path / "phi.cnf"
    phi.write_text("-x\n-y\n")

    code, _ = run(capsys, "session", "new", state, "--formula", gamma0_file,
                  "--formalism", "dalal")
    assert code == 0

    code, out = run(capsys, "update", state, "--clause-file", str(phi))
    assert code == 0
    assert "path=semantic" in out
    assert "bracket=BROKEN" in out

    doc = json.loads(open(state).read())
    assert doc["lower"] == [["-x"], ["-y"], ["z"]]
    assert doc["upper"] == [["-x"], ["-y"], ["-z"]]

    code, out = run(capsys, "query", state, "--clause", "-z")
    assert code == 12
    assert out == "ContradictoryBounds\n"

    code, out = run(capsys, "query", state, "--clause", "z")
    assert code == 11
    assert out == "Unknown\n"

    code, out = run(capsys, "query", state, "--clause", "-x")
    assert code == 0
    assert out == "Yes\n"


def test_session_flow_winslett(capsys, tmp_path, gamma0_file):
    state = str(tmp_path / "session.json")
    phi = tmp_path / "phi.cnf"
    phi.write_text("-x\n-y\n")
    run(capsys, "session", "new", state, "--formula", gamma0_file,
        "--formalism", "winslett")
    code, out = run(capsys, "update", state, "--clause-file", str(phi))
    assert code == 0
    assert "bracket=OK" in out


def test_update_formalism_override(capsys, tmp_path, gamma0_file):
    state = str(tmp_path / "session.json")
    phi = tmp_path / "phi.cnf"
    phi.write_text("-x\n-y\n")
    run(capsys, "session", "new", state, "--formula", gamma0_file,
        "--formalism", "dalal")
    code, out = run(capsys, "update", state, "--clause-file", str(phi),
                    "--formalism", "winslett")
    assert code == 0
    assert "bracket=OK" in out
    assert json.loads(open(state).read())["formalism"] == "winslett"


def test_update_fast_path_consistent_clause(capsys, tmp_path):
    formula = tmp_path / "f.cnf"
    formula.write_text("vars x y\nx\n")
    state = str(tmp_path / "s.json")
    run(capsys, "session", "new", state, "--formula", str(formula),
        "--formalism", "dalal")
    code, out = run(capsys, "update", state, "--clause", "-x y")
    assert code == 0
    assert "path=fast" in out
    assert "bracket=OK" in out


def test_update_no_fallback_exits_3(capsys, tmp_path):
    formula = tmp_path / "f.cnf"
    formula.write_text("vars x y\nx\n")
    state = str(tmp_path / "s.json")
    run(capsys, "session", "new", state, "--formula", str(formula),
        "--formalism", "winslett")
    code, _ = run(capsys, "update", state, "--clause", "-x y", "--no-fallback")
    assert code == 3


def test_update_query_parse_error(capsys, tmp_path):
    formula = tmp_path / "f.cnf"
    formula.write_text("vars x y\nx\n")
    state = str(tmp_path / "s.json")
    run(capsys, "session", "new", state, "--formula", str(formula),
        "--formalism", "dalal")
    code, _ = run(capsys, "query", state, "--clause", "nosuch")
    assert code == 2


def test_session_files_byte_identical(capsys, tmp_path, gamma0_file):
    phi = tmp_path / "phi.cnf"
    phi.write_text("-x\n-y\n")
    blobs = []
    for name in ("a.json", "b.json"):
        state = str(tmp_path / name)
        run(capsys, "session", "new", state, "--formula", gamma0_file,
            "--formalism", "dalal")
        run(capsys, "update", state, "--clause-file", str(phi))
        blobs.append(open(state, "rb").read())
    assert blobs[0] == blobs[1]


def test_reduce_transversal(capsys, tmp_path):
    path = tmp_path / "h.txt"
    path.write_text("3\n1 2\n2 3\n")
    code, out = run(capsys, "reduce", "transversal", str(path))
    assert code == 0
    assert out == "2\n1 3\n"


def test_reduce_fuv(capsys, tmp_path):
    path = tmp_path / "h.txt"
    path.write_text("3\n1 2\n2 3\n")
    code, out = run(capsys, "reduce", "fuv", str(path))
    assert code == 0
    assert out.splitlines() == [
        "vars x1 x2 x3",
        "item g1: x1",
        "item g2: x2",
        "item g3: x3",
        "phi: (-x1 -x2) (-x2 -x3)",
    ]


def test_reduce_pure3sat(capsys, tmp_path):
    path = tmp_path / "f.cnf"
    path.write_text("vars a b\na b\n-a -b\n")
    code, out = run(capsys, "reduce", "pure3sat", str(path))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "vars X0 X1 X2 Y1"
    assert "item g: -Y1" in lines
    assert "phi: (-X1 -X2)" in lines


def test_reduce_nodecover(capsys, tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("2\n1 2\n")
    code, out = run(capsys, "reduce", "nodecover", str(path), "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "vars e1 v1 v2"
    assert sum(1 for l in lines if l.startswith("m1 ")) == 2
    assert sum(1 for l in lines if l.startswith("m2 ")) == 2
    assert "k 0" in lines
    assert "maxmodel yes" in lines


def test_verify_small_run_deterministic(capsys):
    code1, out1 = run(capsys, "verify", "--n", "4", "--trials", "20",
                      "--seed", "42", "--sessions", "3", "--steps", "4")
    code2, out2 = run(capsys, "verify", "--n", "4", "--trials", "20",
                      "--seed", "42", "--sessions", "3", "--steps", "4")
    assert code1 == code2 == 0
    assert out1 == out2
    assert "fastpath: PASS" in out1
    assert "closure: PASS" in out1
    assert "bijection: PASS" in out1
    assert "bracketing: PASS" in out1


def test_verify_single_suite(capsys):
    code, out = run(capsys, "verify", "--suite", "closure", "--n", "5",
                    "--trials", "25", "--seed", "1")
    assert code == 0
    assert out.startswith("closure: PASS")


def test_verify_adversarial_additivity(capsys):
    code, out = run(capsys, "verify", "--n", "6", "--trials", "400", "--seed", "7",
                    "--formalism", "dalal", "--adversarial-additivity")
    assert code == 0
    assert "witness found for dalal" in out


def test_verify_adversarial_additivity_winslett_finds_none(capsys):
    code, out = run(capsys, "verify", "--n", "5", "--trials", "150", "--seed", "7",
                    "--formalism", "winslett", "--adversarial-additivity")
    assert code == 0
    assert "no witness" in out


def test_verify_trivial(capsys):
    code, out = run(capsys, "verify", "--n", "2", "--trials", "1", "--seed", "0",
                    "--sessions", "1", "--steps", "1")
    assert code == 0
