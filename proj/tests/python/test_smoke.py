import json
import os
import subprocess

import pytest

import lpkern


def test_space_descriptors():
    sp = lpkern.Space.lp(3, 2, 100)
    assert sp.kind == "lp"
    assert sp.p == (3, 2)
    assert sp.universe_size == 100
    dual = sp.dual()
    assert dual.p == (3, 1)
    assert lpkern.Space.lp(1, 1, 10).dual().kind == "c0"


def test_family_roundtrip():
    sp = lpkern.Space.lp(2, 1, 16)
    fam = lpkern.Family.from_list(sp, [(0, [(1, 1, 2), (3, -4, 1)]), (2, [(5, 7, 3)])])
    assert len(fam) == 2
    rows = fam.to_list()
    assert rows[0][0] == 0
    assert rows[0][1] == [(1, 1, 2), (3, -4, 1)]
    text = lpkern.family_to_jsonl(fam)
    back = lpkern.family_from_jsonl(text)
    assert back.to_list() == rows


def test_generate_and_partition():
    sp = lpkern.Space.lp(2, 1, 500)
    fam = lpkern.generate(50, sp, dist="geometric", param=5, seed=42)
    assert len(fam) == 50
    res = lpkern.partition(fam, algo="both")
    assert res["algorithms_agree"]
    report = json.loads(res["report"])
    assert report["n_vectors"] == 50
    assert res["n_groups"] == len(res["groups"])
    covered = sorted(v for grp in res["groups"] for v in grp)
    assert covered == list(range(50))


def test_annihilator_and_markushevich():
    sp = lpkern.Space.lp(2, 1, 3)
    fam = lpkern.Family.from_list(sp, [(0, [(0, 1, 1), (1, 1, 1)])])
    ann = lpkern.annihilator(fam)
    assert len(ann) == 2
    assert ann.to_list()[0][1] == [(0, 1, 1), (1, -1, 1)]
    vectors, functionals = lpkern.markushevich(fam)
    assert len(vectors) == len(functionals) == 1


@pytest.mark.parametrize("builder", ["kernel_via_duality_json", "kernel_via_quotient_json"])
def test_kernel_constructions_certified(builder):
    sp = lpkern.Space.lp(2, 1, 30)
    y = lpkern.generate(6, sp, param=3, seed=7)
    op = getattr(lpkern, builder)(y)
    assert lpkern.kernel_certified(op, y)
    assert lpkern.operator_rank(op) + 6 >= 0  # rank is a plain int
    chain = json.loads(lpkern.check_duality_chain(op))
    assert chain["failures"] == []


def test_roundtrip_check():
    sp = lpkern.Space.lp(2, 1, 200)
    d = lpkern.generate(10, sp, param=4, seed=3)
    rep = json.loads(lpkern.check_lemma25_roundtrip(d))
    assert rep["failures"] == []


CLI = os.environ.get("LPKERN_CLI")


@pytest.mark.skipif(not CLI, reason="LPKERN_CLI not set")
def test_cli_gen_partition_verify(tmp_path):
    fam = tmp_path / "fam.jsonl"
    r = subprocess.run(
        [CLI, "--seed", "11", "--out", str(fam), "gen", "--n", "40", "--universe", "400",
         "--support", "geom:5"],
        capture_output=True, text=True)
    assert r.returncode == 0, r.stderr
    # deterministic: same seed, same bytes
    fam2 = tmp_path / "fam2.jsonl"
    subprocess.run(
        [CLI, "--seed", "11", "--out", str(fam2), "gen", "--n", "40", "--universe", "400",
         "--support", "geom:5"],
        capture_output=True, text=True, check=True)
    assert fam.read_bytes() == fam2.read_bytes()

    r = subprocess.run([CLI, "partition", str(fam), "--algo", "both"],
                       capture_output=True, text=True)
    assert r.returncode == 0, r.stderr
    result = json.loads(r.stdout)
    assert result["algorithms_agree"]
    assert result["report"]["n_vectors"] == 40

    r = subprocess.run([CLI, "build", str(fam), "--construction", "kernel-quotient"],
                       capture_output=True, text=True)
    assert r.returncode == 0, r.stderr

    r = subprocess.run([CLI, "verify", "lemma25", "--instances", "5"],
                       capture_output=True, text=True)
    assert r.returncode == 0, r.stderr


@pytest.mark.skipif(not CLI, reason="LPKERN_CLI not set")
def test_cli_usage_error_exits_2(tmp_path):
    r = subprocess.run([CLI, "partition", str(tmp_path / "missing.jsonl")],
                       capture_output=True, text=True)
    assert r.returncode == 2
