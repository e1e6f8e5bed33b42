import shutil
import subprocess
import sys

import pytest

from cmt import harness
from cmt.generate import antichain_classes, canonical_form, complexes_up_to_iso, random_complex
from cmt.harness import InstanceSweepConfig, dump_jsonl, summarize, sweep
from cmt.homology import GF2, QQ


def test_antichain_counts():
    # inequivalent antichains on n points (Dedekind numbers up to relabeling)
    assert [len(antichain_classes(n)) for n in range(6)] == [2, 3, 5, 10, 30, 210]


@pytest.mark.slow
def test_antichain_count_six():
    assert len(antichain_classes(6)) == 16353


def test_enumeration_limit():
    with pytest.raises(ValueError):
        antichain_classes(7)


def test_canonical_form_invariant():
    a = canonical_form((0b011, 0b110), 3)
    b = canonical_form((0b101, 0b011), 3)
    assert a == b


def test_complexes_have_no_ghosts():
    for c in complexes_up_to_iso(4):
        assert c.support() == (1 << c.n) - 1
    assert complexes_up_to_iso(0)[0].facets == (0,)


def test_config_validation():
    with pytest.raises(ValueError):
        InstanceSweepConfig(mode="random")
    with pytest.raises(ValueError):
        InstanceSweepConfig(max_vertices=9)
    with pytest.raises(ValueError):
        InstanceSweepConfig(mode="sideways")
    InstanceSweepConfig(mode="random", seed=1)


def test_unknown_theorem():
    with pytest.raises(ValueError):
        list(sweep("riemann", InstanceSweepConfig()))


def test_workers_env(monkeypatch):
    monkeypatch.delenv("CMT_THREADS", raising=False)
    assert harness.workers() == 1
    monkeypatch.setenv("CMT_THREADS", "3")
    assert harness.workers() == 3
    monkeypatch.setenv("CMT_THREADS", "0")
    assert harness.workers() >= 1
    monkeypatch.setenv("CMT_THREADS", "-1")
    with pytest.raises(ValueError):
        harness.workers()


def test_parallel_matches_serial(monkeypatch):
    cfg = InstanceSweepConfig(max_vertices=4, fields=[QQ, GF2])
    monkeypatch.setenv("CMT_THREADS", "1")
    serial = list(dump_jsonl(sweep("cm", cfg)))
    monkeypatch.setenv("CMT_THREADS", "2")
    parallel = list(dump_jsonl(sweep("cm", cfg)))
    assert serial == parallel


def test_random_mode_deterministic():
    cfg = InstanceSweepConfig(max_vertices=5, mode="random", seed=3, count=20)
    a = list(dump_jsonl(sweep("links", cfg)))
    b = list(dump_jsonl(sweep("links", cfg)))
    assert a == b and a


def test_random_complex_seeded():
    import random
    r1, r2 = random.Random(9), random.Random(9)
    assert [random_complex(r1, 6) for _ in range(10)] == [random_complex(r2, 6) for _ in range(10)]


def test_small_sweeps_clean():
    cfg = InstanceSweepConfig(max_vertices=3, alpha_entry_max=2, count=50)
    for theorem in ("lemmas", "links", "contraction", "cm", "homology"):
        counts = summarize(sweep(theorem, cfg))
        assert not any(v == "fail" for _, _, v in counts), (theorem, counts)


def test_fail_records_carry_instance():
    cfg = InstanceSweepConfig(max_vertices=2, alpha_entry_max=2)
    fails = [r for r in sweep("expansion", cfg) if r["verdict"] == "fail"]
    assert fails
    for r in fails:
        assert r["instance"]["complex"]["facets"] and r["instance"]["alpha"]


def test_console_script():
    exe = shutil.which("cmt")
    cmd = [exe] if exe else [sys.executable, "-m", "cmt.cli"]
    out = subprocess.run(cmd + ["--help"], capture_output=True, text=True)
    assert out.returncode == 0
    assert "verify" in out.stdout
