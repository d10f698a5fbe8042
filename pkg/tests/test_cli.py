import io
import json
import subprocess
import sys

import pytest

from slcob import cli

QUARTIC = '{"kind": "multiproj_hypersurface", "n": [3], "d": [4]}'
QUINTIC = '{"kind": "multiproj_hypersurface", "n": [4], "d": [5]}'
FLOP = ('{"base": {"kind": "projective_space", "n": 1, "var": "h"},'
        ' "rootsA": ["h", "-h"], "rootsB": ["2*h", "0"]}')


def run(*argv):
    buf = io.StringIO()
    code = cli.run(list(argv), stdout=buf)
    text = buf.getvalue()
    return code, text


def run_json(*argv):
    code, text = run(*argv)
    return code, json.loads(text)


def test_variety_quartic():
    code, rep = run_json("variety", QUARTIC)
    assert code == 0
    out = rep["outputs"]
    assert out["tangent_chern_numbers"]["c2"] == "24"
    assert out["s_n"] == "-48" and out["abs_s_n"] == "48"
    assert out["calabi_yau"] is True


def test_variety_point():
    code, rep = run_json("variety", '{"kind": "projective_space", "n": 0}')
    assert code == 0
    assert rep["outputs"]["dimension"] == 0
    assert rep["outputs"]["integral_of_1"] == "1"


def test_variety_quintic_is_cy():
    assert run_json("variety", QUINTIC)[1]["outputs"]["calabi_yau"] is True


def test_malformed_json_reports_position(capsys):
    code, _ = run("variety", '{"kind": ')
    assert code == 2
    assert "line 1 column 10" in capsys.readouterr().err


def test_genus_variety_class_and_flop():
    code, rep = run_json("genus", QUARTIC)
    assert code == 0
    out = rep["outputs"]
    assert out["value"] == "24*a2"
    assert out["in_image_ring"] and out["image_form"] == "8*(3a2)"
    assert out["convention"]["convention"] == "mu4-corrected/ba-plus-mu3"
    code, rep = run_json("genus", '{"kind": "projective_space", "n": 0}')
    assert rep["outputs"]["value"] == "1"
    code, rep = run_json("genus", FLOP)
    assert code == 0 and rep["outputs"]["value"] == "0"
    cls = '{"degree": 2, "entries": {"[1,1]": "-24", "[2]": "48"}}'
    code, rep = run_json("genus", cls)
    assert code == 0 and rep["outputs"]["input_kind"] == "class"
    assert rep["outputs"]["value"] == "24*a2"


def test_sn_command():
    code, rep = run_json("sn", QUARTIC)
    out = rep["outputs"]
    assert (out["s_n_tangent"], out["s_n_via_log"], out["s_n_b_class"]) == ("-48", "-48", "48")
    assert out["star_condition"] is True


def test_generators_command():
    code, rep = run_json("generators", "--n", "3")
    assert code == 0
    assert rep["outputs"]["reports"][0]["passes"]


def test_flop_command():
    code, rep = run_json("flop", FLOP)
    assert code == 0
    out = rep["outputs"]
    assert out["formula"] == out["geometric"]
    assert out["genus_difference"] == "0"


def test_adams_table_tsv():
    code, text = run("adams", "table", "--theory", "msl", "--prime", "3", "--max-weight", "4",
                     "--format", "tsv")
    assert code == 0
    lines = text.strip().splitlines()
    assert lines[0] == "name\ts\tp\tq"
    assert "h'_1\t1\t5\t2" in lines


def test_adams_poincare_and_koszul():
    code, rep = run_json("adams", "poincare", "--theory", "mgl", "--max-weight", "10")
    assert rep["outputs"]["counts"]["10"] == 42
    code, rep = run_json("koszul", "--prime", "3", "--m", "2", "--max-s", "2", "--max-u", "4")
    assert code == 0
    assert all(e["t"] <= 2 * e["q"] for e in rep["outputs"]["ext"])


def test_verify_suites():
    code, rep = run_json("verify", "adams")
    assert code == 0 and rep["outputs"]["passed"]
    code, _ = run("verify", "nonsense")
    assert code == 2


def test_verify_failure_exit_code(monkeypatch, tmp_path):
    from slcob import suites

    def broken(cfg):
        r = suites.SuiteResult("broken")
        r.check(False, reason="forced")
        return r
    monkeypatch.setitem(suites.SUITES, "broken", broken)
    code, rep = run_json("verify", "broken", "--artifacts", str(tmp_path))
    assert code == 1
    assert json.loads((tmp_path / "broken-failures.json").read_text()) == [{"reason": "forced"}]


def test_config_validation(tmp_path):
    assert run("--N", "3", "variety", QUARTIC)[0] == 2
    assert run("--primes", "3,4", "variety", QUARTIC)[0] == 2
    assert run("--p", "3", "--primes", "3,5", "variety", QUARTIC)[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"N": 12,}')
    assert run("--config", str(bad), "variety", QUARTIC)[0] == 2


def test_config_file_and_flag_override(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text('{"format": "text", "N": 6}')
    code, text = run("--config", str(cfg), "sn", QUARTIC)
    assert code == 0 and text.startswith("command: sn")
    code, text = run("--config", str(cfg), "--format", "json", "sn", QUARTIC)
    assert json.loads(text)["command"] == "sn"


def test_env_cache_dir(monkeypatch, tmp_path):
    monkeypatch.setenv(cli.CACHE_ENV, str(tmp_path))
    code, first = run("--N", "6", "genus", QUARTIC)
    assert code == 0
    assert list(tmp_path.glob("genus-N6-*.json"))
    code, second = run("--N", "6", "genus", QUARTIC)
    assert first == second


def test_output_is_deterministic():
    a = run("variety", QUINTIC)
    b = run("variety", QUINTIC)
    assert a == b
    assert "timing_seconds" not in a[1]
    assert "timing_seconds" in run("--timing", "variety", QUINTIC)[1]


def test_usage_error_without_command():
    assert run()[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "slcob", "adams", "poincare", "--max-weight", "5"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["outputs"]["counts"]["5"] == 2
