import json

import pytest

from nilorbit.cli import main


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_orbits_g2(capsys):
    code, out, _ = run(capsys, "orbits", "--type", "G2", "--json")
    data = json.loads(out)
    assert code == 0 and data["schema"] == 1 and data["seed"] == 0
    orbits = data["orbits"]
    assert len(orbits) == 4
    assert sum(o["spherical"] for o in orbits) == 2
    assert sorted(o["height"] for o in orbits if o["spherical"]) == [2, 3]


def test_orbits_a3_partitions(capsys):
    code, out, _ = run(capsys, "orbits", "--type", "A3", "--json")
    parts = sorted(tuple(o["partition"]) for o in json.loads(out)["orbits"])
    assert parts == [(2, 1, 1), (2, 2), (3, 1), (4,)]


@pytest.mark.parametrize("args", [("orbits", "--type", "Z9"), ("orbits", "--type", "A3", "--prime", "7"),
                                  ("orbits", "--type", "A3", "--prime", "100"), ("orbits",),
                                  ("special", "--type", "A3"), ("bogus",),
                                  ("analyze", "--type", "A3", "--orbit", "9")])
def test_usage_errors(capsys, args):
    assert run(capsys, *args)[0] == 2


def test_seed_env_override(capsys, monkeypatch):
    monkeypatch.setenv("NILORBIT_SEED", "11")
    code, out, _ = run(capsys, "orbits", "--type", "A2", "--seed", "3", "--json")
    assert json.loads(out)["seed"] == 11


def test_json_roundtrip_deterministic(capsys):
    _, a, _ = run(capsys, "analyze", "--type", "B3", "--json")
    _, b, _ = run(capsys, "analyze", "--type", "B3", "--json")
    assert json.loads(a) == json.loads(b)
    assert json.dumps(json.loads(a), indent=1) + "\n" == a


def test_verify_table1_e7(capsys):
    code, out, _ = run(capsys, "verify", "table1", "--type", "E7", "--json")
    data = json.loads(out)
    assert code == 0 and data["ok"]
    rows = [r for r in data["results"] if not r["row"].endswith("minimal")]
    assert [r["computed"]["generators_text"] for r in rows] == [["w6", "w2"], ["w6", "w2", "2w1"]]


def test_verify_special_f4(capsys):
    code, out, _ = run(capsys, "verify", "special", "--type", "F4", "--json")
    rep = json.loads(out)["results"][0]["report"]
    assert code == 0
    assert rep["O_dims"].startswith("dims[-3..3] = 2,")


def test_verify_table2_e8(capsys):
    code, out, _ = run(capsys, "verify", "table2-structural", "--type", "E8", "--json")
    data = json.loads(out)
    model = [r for r in data["results"] if r.get("model_weights_ok") is not None]
    assert code == 0 and len(model) == 1 and model[0]["index"] == 8


def test_verify_theorems_small(capsys):
    assert run(capsys, "verify", "theorems", "--type", "C3")[0] == 0


def test_table1_and_constants(capsys):
    code, out, _ = run(capsys, "table1", "--type", "C2", "--json")
    assert code == 0 and len(json.loads(out)["rows"]) == 2
    code, out, _ = run(capsys, "constants", "--type", "A1", "--json")
    assert code == 0 and json.loads(out)["dim"] == 3


def test_internal_numbering(capsys):
    _, a, _ = run(capsys, "orbits", "--type", "F4", "--json", "--numbering", "internal")
    _, b, _ = run(capsys, "orbits", "--type", "F4", "--json")
    da = [o["diagram"] for o in json.loads(a)["orbits"]]
    db = [o["diagram"] for o in json.loads(b)["orbits"]]
    assert da == [d[::-1] for d in db]


def test_mismatch_exit_code(capsys, monkeypatch):
    from nilorbit import golden
    rows = golden.height2_rows()
    bad = [dict(r) for r in rows if r["type"] == "C2"]
    bad[0]["ucs"] = [[0, 2]]
    monkeypatch.setattr(golden, "height2_rows", lambda stype=None: bad)
    assert run(capsys, "verify", "table1", "--type", "C2")[0] == 1
