import json

import stcores.stats
from stcores.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_general(capsys):
    code, out, _ = run(capsys, "count", "3", "4")
    assert code == 0 and out == "5\n"


def test_count_self_conjugate(capsys):
    code, out, _ = run(capsys, "count", "3", "4", "--self-conjugate")
    assert code == 0 and out == "3\n"


def test_count_triple(capsys):
    code, out, _ = run(capsys, "count", "triple", "3", "1")
    assert code == 0 and out == "4\n"


def test_count_non_coprime_exits_2(capsys):
    code, _, err = run(capsys, "count", "2", "4")
    assert code == 2 and "coprime" in err


def test_count_malformed_exits_2(capsys):
    code, _, err = run(capsys, "count", "2")
    assert code == 2 and err


def test_nonpositive_parameters_exit_2(capsys):
    code, _, err = run(capsys, "count", "0", "3")
    assert code == 2 and "error" in err
    code, _, err = run(capsys, "avg", "0", "3")
    assert code == 2 and "error" in err
    code, _, err = run(capsys, "tcore", "0", "--partition", "1")
    assert code == 2 and "error" in err


def test_enum_csv(capsys):
    code, out, _ = run(capsys, "enum", "2", "3", "--format", "csv")
    assert code == 0
    assert out == "0,1,1;0,1,2;;0\n2,0,0;3,1,-1;1;1\n"


def test_enum_jsonl_with_stab(capsys):
    code, out, _ = run(capsys, "enum", "2", "3", "--with-stab", "--format", "jsonl")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert [row["stab"] for row in rows] == [1, 2]
    assert rows[0] == {"z": [0, 1, 1], "a": [0, 1, 2], "parts": [], "size": 0, "stab": 1}


def test_enum_non_coprime_exits_2(capsys):
    code, _, err = run(capsys, "enum", "2", "4")
    assert code == 2 and "coprime" in err


def test_enum_self_conjugate(capsys):
    code, out, _ = run(capsys, "enum", "3", "4", "--self-conjugate")
    assert code == 0 and len(out.splitlines()) == 3


def test_enum_triple_methods_agree(capsys):
    code, sym_out, _ = run(capsys, "enum", "--triple", "3", "2", "--format", "jsonl")
    assert code == 0
    code, asym_out, _ = run(capsys, "enum", "--triple", "3", "2", "--method", "asym", "--format", "jsonl")
    assert code == 0
    sym = {tuple(json.loads(l)["parts"]) for l in sym_out.splitlines()}
    asym = {tuple(json.loads(l)["parts"]) for l in asym_out.splitlines()}
    assert sym == asym and len(sym) == 6


def test_enum_triple_with_stab_rejected(capsys):
    code, _, err = run(capsys, "enum", "--triple", "3", "2", "--with-stab")
    assert code == 2 and "stab" in err


def test_enum_json_and_plain(capsys):
    code, out, _ = run(capsys, "enum", "2", "3", "--format", "json")
    assert code == 0 and json.loads(out)[1]["parts"] == [1]
    code, out, _ = run(capsys, "enum", "2", "3", "--format", "plain")
    assert code == 0
    assert out.splitlines()[0] == "z=0,1,1 a=0,1,2 parts= size=0"


def test_avg(capsys):
    assert run(capsys, "avg", "2", "3") == (0, "1/2\n", "")
    assert run(capsys, "avg", "2", "3", "--weighted") == (0, "1/3\n", "")
    assert run(capsys, "avg", "3", "2", "--weighted", "--self-conjugate") == (0, "1/2\n", "")


def test_avg_moment(capsys):
    assert run(capsys, "avg", "2", "3", "--moment", "0") == (0, "2\n", "")
    assert run(capsys, "avg", "2", "3", "--moment", "2") == (0, "1\n", "")
    code, _, err = run(capsys, "avg", "2", "3", "--moment", "9")
    assert code == 2 and "capped" in err


def test_tcore(capsys):
    code, out, _ = run(capsys, "tcore", "4", "--partition", "5,5")
    assert code == 0 and out == "[1,1]\n"
    code, out, _ = run(capsys, "tcore", "3", "--partition", "")
    assert code == 0 and out == "[]\n"


def test_convert_from_partition(capsys):
    code, out, _ = run(capsys, "convert", "--partition", "1", "--t", "3", "--s", "2")
    assert code == 0
    d = json.loads(out)
    assert d["partition"] == [1] and d["size"] == 1
    assert d["beta"] == {"members": [0], "gaps": [-1]}
    assert d["is_t_core"] and d["a"] == [3, 1, -1]
    assert d["z"] == {"t": 3, "s": 2, "z": [2, 0, 0]}
    assert d["u"] == {"t": 3, "s": 2, "u": [1, 0]}


def test_convert_from_z(capsys):
    code, out, _ = run(capsys, "convert", "--z", "2,0,0")
    assert code == 0
    d = json.loads(out)
    assert d["partition"] == [1] and d["a"] == [3, 1, -1]


def test_convert_from_beta(capsys):
    code, out, _ = run(capsys, "convert", "--beta", '{"members":[0,2],"gaps":[-2,-3]}')
    assert code == 0
    assert json.loads(out)["partition"] == [3, 2, 2]


def test_convert_from_u(capsys):
    code, out, _ = run(capsys, "convert", "--u", "0,1", "--t", "2", "--s", "3")
    assert code == 0
    assert json.loads(out)["partition"] == []


def test_convert_non_t_core_skips_coordinates(capsys):
    code, out, _ = run(capsys, "convert", "--partition", "5,5", "--t", "4")
    assert code == 0
    d = json.loads(out)
    assert d["is_t_core"] is False and "a" not in d


def test_convert_needs_exactly_one_input(capsys):
    code, _, err = run(capsys, "convert", "--partition", "1", "--z", "2,0,0")
    assert code == 2 and "exactly one" in err


def test_verify_small_passes(capsys):
    code, out, _ = run(capsys, "verify", "--smax", "2", "--tmax", "2", "--nmax", "6")
    assert code == 0
    assert "FAIL" not in out
    assert out.strip().splitlines()[-1].endswith("checks passed")


def test_verify_jsonl(capsys):
    code, out, _ = run(capsys, "verify", "--smax", "1", "--tmax", "1", "--nmax", "2", "--format", "jsonl")
    assert code == 0
    first = json.loads(out.splitlines()[0])
    assert set(first) == {"check", "params", "pass", "witness"}


def test_verify_detects_injected_fault(capsys, monkeypatch):
    monkeypatch.setattr(stcores.stats, "stab_size", lambda z: 1)
    code, out, _ = run(capsys, "verify", "--smax", "2", "--tmax", "3", "--nmax", "6")
    assert code == 1
    assert any(line.startswith("FAIL") and "witness=" in line for line in out.splitlines())


def test_output_byte_stability(capsys):
    first = run(capsys, "enum", "4", "5", "--format", "jsonl")
    second = run(capsys, "enum", "4", "5", "--format", "jsonl")
    assert first == second
    v1 = run(capsys, "verify", "--smax", "2", "--tmax", "3", "--nmax", "6")
    v2 = run(capsys, "verify", "--smax", "2", "--tmax", "3", "--nmax", "6")
    assert v1 == v2


def test_threads_env_is_validated(capsys, monkeypatch):
    monkeypatch.setenv("CORES_THREADS", "4")
    code, out, _ = run(capsys, "count", "3", "4")
    assert code == 0 and out == "5\n"
    monkeypatch.setenv("CORES_THREADS", "zero")
    code, _, err = run(capsys, "count", "3", "4")
    assert code == 2 and "CORES_THREADS" in err
