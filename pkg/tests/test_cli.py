"""End-to-end runs of the command line tool in a subprocess: fixed inputs
must give byte-identical output, and the exit code contract is part of the
interface."""

import json
import subprocess
import sys


def run_cli(*args, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "csjack.cli", *args],
        capture_output=True,
        text=True,
        input=stdin,
    )


def test_jack_json():
    r = run_cli("jack", "--lambda", "2,1", "--nvars", "3")
    assert r.returncode == 0
    obj = json.loads(r.stdout)
    assert obj["lambda"] == [2, 1]
    assert obj["normalization"] == "monic"
    parts = [tuple(e["partition"]) for e in obj["monomial_expansion"]]
    assert parts == [(2, 1), (1, 1, 1)]
    # c = b^2 (2b + 1), ascending coefficients
    assert obj["c"] == {"num": ["0", "0", "1", "2"], "den": ["1"]}


def test_jack_text_specialized():
    r = run_cli("jack", "--lambda", "2,1", "--nvars", "3", "--beta", "1", "--format", "text")
    assert r.returncode == 0
    lines = r.stdout.splitlines()
    assert lines[0] == "jack lambda=[2, 1] nvars=3 normalization=monic"
    assert lines[1] == "c = 3"
    assert lines[2].split() == ["m[2,1]", "1"]
    assert lines[3].split() == ["m[1,1,1]", "2"]


def test_jack_empty_partition():
    r = run_cli("jack", "--lambda", "0", "--nvars", "2", "--format", "text")
    assert r.returncode == 0
    assert "m[]  1" in r.stdout


def test_jack_byte_determinism():
    args = ("jack", "--lambda", "3,2,1", "--nvars", "4", "--normalization", "stanley")
    a = run_cli(*args)
    b = run_cli(*args)
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout


def test_jack_full_length_needs_flag():
    r = run_cli("jack", "--lambda", "1,1,1", "--nvars", "3")
    assert r.returncode == 1
    assert "l(lambda) <= N-1" in r.stderr
    r = run_cli("jack", "--lambda", "1,1,1", "--nvars", "3", "--allow-shift", "--format", "text")
    assert r.returncode == 0
    assert "m[1,1,1]  1" in r.stdout


def test_jack_pole_is_domain_error():
    r = run_cli("jack", "--lambda", "3,1", "--nvars", "3", "--beta", "-1", "--format", "text")
    assert r.returncode == 1
    assert "pole" in r.stderr


def test_jack_bad_partition():
    r = run_cli("jack", "--lambda", "1,2", "--nvars", "3")
    assert r.returncode == 1
    assert "weakly decreasing" in r.stderr


def test_bad_flag_is_usage_error():
    r = run_cli("jack", "--lambda", "1", "--nvars", "2", "--frobnicate")
    assert r.returncode == 2
    r = run_cli("jack", "--nvars", "2")
    assert r.returncode == 2
    r = run_cli("jack", "--lambda", "1", "--nvars", "2", "--normalization", "shiny")
    assert r.returncode == 2


def test_verify_passes():
    r = run_cli("verify", "--suite", "commutators", "--max-degree", "3", "--max-nvars", "2")
    assert r.returncode == 0
    lines = r.stdout.strip().splitlines()
    assert all(line.startswith("PASS ") for line in lines[:-1])
    assert lines[-1].endswith("checks passed")


def test_verify_thread_flag_keeps_bytes():
    base = ("verify", "--suite", "all", "--max-degree", "3", "--max-nvars", "2")
    a = run_cli(*base, "--threads", "1")
    b = run_cli(*base, "--threads", "4")
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout


def test_spectrum_text_frozen():
    r = run_cli("spectrum", "--lambda", "2,1", "--nparticles", "3", "--beta", "2")
    assert r.returncode == 0
    assert r.stdout == (
        "spectrum nparticles=3 beta=2 q=0 length=2pi\n"
        "ground energy = 32 * (pi/L)^2\n"
        "lambda=[2, 1] kappa=[4, 1, -2] momentum=3 energy=21\n"
    )


def test_spectrum_json_all_degree():
    r = run_cli(
        "spectrum",
        "--all-degree",
        "2",
        "--nparticles",
        "2",
        "--beta",
        "1/2",
        "--format",
        "json",
    )
    assert r.returncode == 0
    obj = json.loads(r.stdout)
    assert obj["units"]["momentum"] == "2*pi/L"
    assert obj["params"]["beta"] == "1/2"
    lams = [tuple(s["lambda"]) for s in obj["states"]]
    assert lams == [(), (1,), (2,), (1, 1)]


def test_spectrum_numeric_length():
    r = run_cli("spectrum", "--lambda", "1", "--nparticles", "2", "--beta", "1", "--length", "2")
    assert r.returncode == 0
    assert "energy_value=" in r.stdout


def test_convert_round_trip(tmp_path):
    r = run_cli("jack", "--lambda", "2,1", "--nvars", "3")
    src = tmp_path / "jack.json"
    src.write_text(r.stdout)
    top = run_cli("convert", "--to", "p", "--input", str(src))
    assert top.returncode == 0
    back = run_cli("convert", "--to", "m", stdin=top.stdout)
    assert back.returncode == 0
    obj = json.loads(back.stdout)
    assert obj["basis"] == "m"
    coords = {tuple(e["partition"]): e["coeff"] for e in obj["coords"]}
    assert coords[(2, 1)] == {"num": ["1"], "den": ["1"]}
    # 6b/(2b+1) in canonical monic-denominator form
    assert coords[(1, 1, 1)] == {"num": ["0", "3"], "den": ["1/2", "1"]}


def test_convert_rejects_garbage():
    r = run_cli("convert", "--to", "m", stdin="{\"what\": 1}")
    assert r.returncode == 1
    r = run_cli("convert", "--to", "m", stdin="{\"nvars\": 2, \"terms\": [{\"exp\": [1, 0], \"coeff\": {\"num\": [\"1\"], \"den\": [\"1\"]}}]}")
    # z1 alone is not symmetric
    assert r.returncode == 1


def test_output_flag(tmp_path):
    out = tmp_path / "result.json"
    r = run_cli("jack", "--lambda", "1", "--nvars", "2", "--output", str(out))
    assert r.returncode == 0
    assert r.stdout == ""
    obj = json.loads(out.read_text())
    assert obj["lambda"] == [1]
