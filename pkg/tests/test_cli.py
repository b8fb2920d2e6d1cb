import json
import subprocess
import sys

import pytest

from quadmod import formats
from quadmod.cli import EXIT_NEGATIVE, EXIT_OK, EXIT_UNKNOWN, EXIT_USAGE, main


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


# documented examples ------------------------------------------------------------------


def test_norm_example(capsys):
    code, out, _ = run(["norm", "--carrier", "cyclic:2", "1 + g1"], capsys)
    assert code == EXIT_OK and out.strip() == "2"


def test_arch_example(capsys):
    code, out, _ = run(["arch", "--carrier", "cyclic:2", "--gen", "g1", "--", "g1"], capsys)
    assert code == EXIT_OK and out.strip() == "interior"


def test_cert_verify_example(tmp_path, capsys):
    good = tmp_path / "good.json"
    code, _, _ = run(["cert-derive", "--carrier", "cyclic:4", "--out", str(good), "1 + i g1"], capsys)
    assert code == EXIT_OK
    code, out, _ = run(["cert-verify", str(good)], capsys)
    assert code == EXIT_OK and out.strip() == "accepted"
    obj = json.loads(good.read_text())
    w = obj["terms"][0]["weight"]
    obj["terms"][0]["weight"] = w + "1"
    bad = tmp_path / "bad.json"
    bad.write_text(formats.dumps(obj))
    code, out, _ = run(["cert-verify", str(bad)], capsys)
    assert code == EXIT_NEGATIVE and out.startswith("rejected")


def test_console_script_runs():
    res = subprocess.run([sys.executable, "-m", "quadmod", "norm", "--carrier", "cyclic:2", "1 + g1"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "2"


# exit codes ---------------------------------------------------------------------------


@pytest.mark.parametrize("argv,code", [
    (["arch", "--carrier", "cyclic:2", "g1"], EXIT_NEGATIVE),
    (["arch", "--carrier", "cyclic:2", "1 + g1"], EXIT_OK),
    (["arch", "--carrier", "free:1", "--gen", "1 - x1 x1*", "2 - x1 x1*"], EXIT_UNKNOWN),
    (["norm", "--carrier", "free:1", "x1"], EXIT_UNKNOWN),
    (["norm", "--carrier", "cyclic:2", "1 + h"], EXIT_USAGE),
    (["norm", "--carrier", "cyclic:2", "1 +"], EXIT_USAGE),
    (["norm", "1"], EXIT_USAGE),
    (["arch", "--carrier", "cyclic:3", "g1"], EXIT_USAGE),
    (["audit", "--carrier", "cyclic:2", "forms"], EXIT_USAGE),
    (["audit", "--carrier", "symmetric:3", "--samples", "10", "all"], EXIT_OK),
])
def test_exit_codes(argv, code, capsys):
    assert run(argv, capsys)[0] == code


def test_argparse_errors_exit_3(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == EXIT_USAGE
    with pytest.raises(SystemExit) as exc:
        main(["audit", "--carrier", "cyclic:2", "nonsense"])
    assert exc.value.code == EXIT_USAGE


def test_degenerate_module_has_zero_seminorm(capsys):
    # -1 in M makes M the whole ring, so n_M vanishes
    code, out, _ = run(["norm", "--carrier", "cyclic:2", "--gen", "-1", "g1"], capsys)
    assert code == EXIT_OK and out.strip() == "0"
    code, _, _ = run(["audit", "--carrier", "cyclic:2", "--gen", "-1", "completion"], capsys)
    assert code == EXIT_OK


def test_free_norm_prints_interval(capsys):
    code, out, _ = run(["norm", "--carrier", "free:1", "--gen", "1 - x1 x1*", "x1 x1 + x1"], capsys)
    assert code == EXIT_OK and out.startswith("[") and "2]" in out


# JSON --------------------------------------------------------------------------------


@pytest.mark.parametrize("argv", [
    ["norm", "--carrier", "symmetric:3", "1 + 2 g1 - g4"],
    ["irreps", "--carrier", "dihedral:4", "--seed", "3"],
    ["audit", "--carrier", "cyclic:4", "--gen", "g1 + g3", "--samples", "10", "all"],
    ["arch", "--carrier", "cyclic:4", "--gen", "g1 + g3", "1 - g2"],
])
def test_json_is_deterministic(argv, capsys):
    _, a, _ = run(argv + ["--json"], capsys)
    _, b, _ = run(argv + ["--json"], capsys)
    assert a == b
    assert formats.dumps(json.loads(a)) == a


def test_irreps_json_roundtrip(tmp_path, capsys):
    _, out, _ = run(["irreps", "--carrier", "symmetric:3", "--json"], capsys)
    car, reps, seed = formats.irreps_from_json(out)
    assert sorted(r.dim for r in reps) == [1, 1, 2] and seed == 0
    assert formats.dumps(formats.irreps_to_json(
        __import__("quadmod").decompose_irreps(car, seed))) == out


def test_cert_derive_stdout_roundtrip(capsys):
    _, out, _ = run(["cert-derive", "--carrier", "free:2", "--gen", "2 - x1 x1* - x2 x2*", "x1 x2*"], capsys)
    pres, cert, target, nc = formats.certificate_from_json(out)
    assert formats.dumps(formats.certificate_to_json(nc, pres)) == out


def test_gns_command(tmp_path, capsys):
    form = tmp_path / "trace.json"
    form.write_text(formats.dumps({"carrier": "cyclic:2", "values": {"1": [2, 0]}}))
    code, out, _ = run(["gns", str(form), "--json"], capsys)
    obj = json.loads(out)
    assert code == EXIT_OK and obj["dimension"] == 2 and obj["residual"] < 1e-8
    code, out, _ = run(["gns", str(form), "--gen", "g1"], capsys)
    assert code == EXIT_OK and "respects the module: no" in out
    bad = tmp_path / "bad.json"
    bad.write_text(formats.dumps({"carrier": "cyclic:2", "values": {"1": [1, 0], "g1": [2, 0]}}))
    code, out, _ = run(["gns", str(bad)], capsys)
    assert code == EXIT_NEGATIVE and "not PSD" in out


def test_forms_audit_with_file(tmp_path, capsys):
    form = tmp_path / "sign.json"
    form.write_text(formats.dumps({"carrier": "cyclic:2", "values": {"1": [1, 0], "g1": [-1, 0]}}))
    code, out, _ = run(["audit", "--carrier", "cyclic:2", "--gen", "g1", "--form", str(form), "forms"], capsys)
    assert code == EXIT_OK and "negative witness" in out
