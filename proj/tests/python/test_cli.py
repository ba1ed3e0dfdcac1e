import os
import subprocess

import pytest

CLI = os.environ.get("SAL_CLI")
pytestmark = pytest.mark.skipif(not CLI, reason="SAL_CLI not set")


def run(*args, stdin=None):
    return subprocess.run([CLI, *args], capture_output=True, text=True, input=stdin)


def spec_file(tmp_path, text):
    p = tmp_path / "eq.spec"
    p.write_text(text)
    return str(p)


def test_classify_ok(tmp_path):
    p = spec_file(tmp_path, "epsilon: -1\nb: 1\ngamma: 3\nbeta: 1\n")
    r = run("--format", "machine", "classify", "--spec", p)
    assert r.returncode == 0, r.stderr
    assert "is_ssa: true" in r.stdout.splitlines()


def test_domain_error_exits_one(tmp_path):
    p = spec_file(tmp_path, "epsilon: -1\nf: \"4*u\"\ng: \"-3*u\"\nh: \"-1*u\"\n")
    r = run("conserve", "--spec", p)
    assert r.returncode == 1


def test_parse_error_exits_two(tmp_path):
    p = spec_file(tmp_path, "epsilon: -1\nf: \"3*\"\ng: 0\nh: 0\n")
    assert run("classify", "--spec", p).returncode == 2


def test_usage_error_exits_two():
    assert run("frobnicate").returncode == 2


def test_machine_output_is_deterministic():
    a = run("--format", "machine", "table")
    b = run("--format", "machine", "table")
    assert a.returncode == 0
    assert a.stdout == b.stdout
