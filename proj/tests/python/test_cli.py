# SPDX-License-Identifier: Apache-2.0
import json
import subprocess

BUBBLE = '{"source":{"pattern":"","n":-2},"terms":[{"coeff":"1","slices":[{"op":"bubble","orient":"cw","dots":-2}]}]}'


def run(cli, *args):
    return subprocess.run([cli, *args], capture_output=True, text=True, timeout=600)


def test_form(cli):
    r = run(cli, "form", "E(1)1_{1}", "E(1)1_{1}")
    assert r.returncode == 0
    assert r.stdout.strip() == "(1)/(-q^2 + 1)"
    r = run(cli, "form", "--check", "E(2)F(1)1_{-3}", "E(2)F(1)1_{-3}")
    assert r.returncode == 0
    assert "match" in r.stdout


def test_parse_errors_exit_2(cli):
    assert run(cli, "form", "E(1", "1_{0}").returncode == 2
    assert run(cli, "reduce-closed", "{not json").returncode == 2
    assert run(cli, "verify", "--N", "3", "--suite", "nope").returncode == 2


def test_algebra_commands(cli):
    assert run(cli, "schubert", "321").stdout.strip() == "x1^2 x2"
    r = run(cli, "mult", "E(1)1_{0}", "F(1)1_{2}")
    assert r.returncode == 0 and "positive: yes" in r.stdout
    r = run(cli, "--json", "canon", "E(1)F(1)1_{2}")
    assert r.returncode == 0
    json.loads(r.stdout)


def test_reduce_closed(cli, tmp_path):
    r = run(cli, "reduce-closed", BUBBLE)
    assert r.returncode == 0 and r.stdout.strip().endswith("v1")
    f = tmp_path / "bubble.json"
    f.write_text(BUBBLE)
    assert run(cli, "reduce-closed", str(f)).stdout == r.stdout


def test_equal_exit_codes(cli):
    assert run(cli, "equal", BUBBLE, BUBBLE).returncode == 0
    doubled = BUBBLE.replace('"coeff":"1"', '"coeff":"2"')
    assert run(cli, "equal", BUBBLE, doubled).returncode == 1


def test_verify(cli):
    r = run(cli, "verify", "--N", "4", "--suite", "nilhecke")
    assert r.returncode == 0, r.stdout + r.stderr
    assert run(cli, "verify", "--N", "6", "--suite", "decomp").returncode == 0
    assert run(cli, "verify", "--N", "3", "--nmin", "-3", "--nmax", "3", "--suite", "all").returncode == 0
    r = run(cli, "--json", "verify", "--N", "2", "--suite", "biadjoint")
    assert r.returncode == 0
    json.loads(r.stdout)


def test_decomp_and_endring(cli):
    assert run(cli, "decomp", "--n", "1", "--N", "5").returncode == 0
    assert run(cli, "endring", "--a", "2", "--n", "-2", "--d", "4", "--N", "8").returncode == 0
