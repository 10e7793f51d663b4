"""CLI commands: check, replay, fuzz, witness (exit codes and output)."""

from click.testing import CliRunner

from holedit.cli import main

FIG1_SCRIPT = (
    "construct lam x\nconstruct num\nmove parent\nmove child 2\n"
    "construct num\nmove parent\nmove parent\nmove child 1\n"
    "move child 1\nconstruct var x\nconstruct plus\nconstruct lit 1\n"
)


def _write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text, encoding="utf-8")
    return str(p)


def test_check_synthesizes(tmp_path):
    f = _write(tmp_path, "t.hz", "{}")
    r = CliRunner().invoke(main, ["check", f])
    assert r.exit_code == 0
    assert "synthesizes {}" in r.output


def test_check_negative_verdict(tmp_path):
    f = _write(tmp_path, "t.hz", "\\x.x")
    r = CliRunner().invoke(main, ["check", f])
    assert r.exit_code == 1
    assert "does not synthesize" in r.output


def test_check_with_ctx(tmp_path):
    ctx = _write(tmp_path, "c.hzctx", "incr : num -> num\n")
    f = _write(tmp_path, "t.hz", "incr(incr(3))")
    r = CliRunner().invoke(main, ["check", f, "--ctx", ctx])
    assert r.exit_code == 0
    assert "synthesizes num" in r.output


def test_check_analysis_mode(tmp_path):
    f = _write(tmp_path, "t.hz", "\\x.x")
    r = CliRunner().invoke(main, ["check", f, "--ana", "num -> num"])
    assert r.exit_code == 0
    r = CliRunner().invoke(main, ["check", f, "--ana", "num"])
    assert r.exit_code == 1


def test_check_parse_error(tmp_path):
    f = _write(tmp_path, "t.hz", "1 +")
    r = CliRunner().invoke(main, ["check", f])
    assert r.exit_code == 2


def test_replay_trace(tmp_path):
    s = _write(tmp_path, "s.hza", FIG1_SCRIPT)
    r = CliRunner().invoke(main, ["replay", s, "--trace"])
    assert r.exit_code == 0
    lines = r.output.strip().splitlines()
    assert len(lines) == 14  # 13 states + final type line
    assert lines[0] == ">|{}|<"
    assert lines[-2] == "\\x.x + >|1|< : num -> num"
    assert lines[-1] == "final type: num -> num"


def test_replay_empty_script(tmp_path):
    s = _write(tmp_path, "s.hza", "# nothing\n")
    r = CliRunner().invoke(main, ["replay", s, "--trace"])
    assert r.exit_code == 0
    assert r.output.strip().splitlines()[0] == ">|{}|<"


def test_replay_illegal_action_reports_index(tmp_path):
    s = _write(tmp_path, "s.hza", "del\nmove parent\ndel\n")
    r = CliRunner().invoke(main, ["replay", s])
    assert r.exit_code == 3
    assert "action 1 failed" in r.output


def test_fuzz_commands():
    for kind in ("sensibility", "movement", "determinism"):
        r = CliRunner().invoke(
            main, ["fuzz", kind, "--seed", "1", "--count", "30"]
        )
        assert r.exit_code == 0, r.output
        assert "30 ok" in r.output


def test_witness_construct_replays(tmp_path):
    ctx = _write(tmp_path, "c.hzctx", "incr : num -> num\n")
    f = _write(tmp_path, "t.hz", "incr(incr(3))")
    r = CliRunner().invoke(main, ["witness", "construct", f, "--ctx", ctx])
    assert r.exit_code == 0
    s = _write(tmp_path, "w.hza", r.output)
    rr = CliRunner().invoke(main, ["replay", s, "--ctx", ctx])
    assert rr.exit_code == 0
    assert "final type: num" in rr.output


def test_witness_reach(tmp_path):
    a = _write(tmp_path, "a.hz", ">|1 + 2|<")
    b = _write(tmp_path, "b.hz", "1 + >|2|<")
    r = CliRunner().invoke(main, ["witness", "reach", a, b])
    assert r.exit_code == 0
    assert r.output == "move child 2\n"


def test_witness_reach_unequal_erasures(tmp_path):
    a = _write(tmp_path, "a.hz", ">|1|<")
    b = _write(tmp_path, "b.hz", ">|2|<")
    r = CliRunner().invoke(main, ["witness", "reach", a, b])
    assert r.exit_code == 1
