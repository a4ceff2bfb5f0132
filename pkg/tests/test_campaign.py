import json

import pytest

from noncritical import campaign, complete_digraph, gen_fig7, gen_random_conditioned
from noncritical.campaign import (
    Tally,
    check_instance,
    decode_arc_set,
    encode_arc_set,
    lemma1_mismatches,
    mix,
    replay,
    run_exhaustive,
    run_lemma1_random,
    run_random,
)
from noncritical.digraph import Digraph
from noncritical.errors import TheoremContradicted
from noncritical.formats import read_edge_list

from conftest import strong_by_matrix


def test_splitmix_reference_values():
    assert mix(0, 0) == 0xE220A8397B1DCDAF
    assert [mix(1234567, i) for i in range(3)] == [
        6457827717110365317,
        3203168211198807973,
        9817491932198370423,
    ]


def test_arc_set_coding():
    assert decode_arc_set(3, 0) == (0, 0, 0)
    # every arc present: each vertex points at the other two
    assert decode_arc_set(3, (1 << 6) - 1) == (0b110, 0b101, 0b011)
    for index in (0, 1, 77, 4095):
        D = Digraph(4, decode_arc_set(4, index))
        assert encode_arc_set(D) == index
    assert len({decode_arc_set(4, i) for i in range(1 << 12)}) == 1 << 12


@pytest.fixture(scope="module")
def n4():
    return run_exhaustive(4)


def test_exhaustive_n4(n4):
    assert n4.verdict == "PASS"
    assert n4.instances_checked == 4096
    expected_strong = sum(
        strong_by_matrix(4, [(u, v) for u in range(4) for v in range(4) if s[u] >> v & 1], keep=range(4))
        for s in (decode_arc_set(4, i) for i in range(4096))
    )
    assert n4.strongly_connected == expected_strong
    assert sum(n4.hypothesis_counts.values()) == expected_strong
    assert n4.monitored_stats["lemma1_instances"] == expected_strong
    assert n4.violations == [] and n4.anomalies == []


def test_exhaustive_independent_of_worker_count(n4):
    assert run_exhaustive(4, workers=2).to_json() == n4.to_json()


def test_random_is_deterministic():
    a = run_random((6, 8), 300, 7)
    assert a.verdict == "PASS"
    assert a.instances_checked == 300
    assert run_random((6, 8), 300, 7).to_json() == a.to_json()
    assert run_random((6, 8), 300, 7, workers=2).to_json() == a.to_json()
    assert run_random((6, 8), 300, 8).to_json() != a.to_json()


def test_random_single_instance():
    result = run_random((6, 6), 1, 7)
    assert result.instances_checked == 1
    sizes = result.monitored_stats["complement_sizes"]
    triples = result.monitored_stats["leaf_triples"]
    assert bool(triples) == ("2" in sizes)


def test_random_rejects_range():
    with pytest.raises(ValueError):
        run_random((4, 8), 10, 0)
    with pytest.raises(ValueError):
        run_exhaustive(6)


def test_lemma1_helpers():
    assert lemma1_mismatches(gen_fig7(6))[0] == []
    result = run_lemma1_random(5, 200, 3)
    assert result.verdict == "PASS"
    assert result.instances_checked == 200


def test_check_instance_counts_cor2():
    tally = Tally()
    check_instance(complete_digraph(5), tally, {"index": 0})
    assert tally.classes["Cor2"] == 1 and tally.violations == []


def _sabotage(real):
    def finder(D, *args, **kwargs):
        if D.arc_count == 5:
            raise TheoremContradicted("sabotaged", digraph=D)
        return real(D, *args, **kwargs)

    return finder


def test_archive_and_replay(monkeypatch, tmp_path):
    monkeypatch.setattr(campaign, "constructive_noncritical", _sabotage(campaign.constructive_noncritical))
    result = run_exhaustive(4, checks=("thm1",))
    assert result.verdict == "FAIL"
    assert result.violations and {v["kind"] for v in result.violations} == {"thm1-contradicted"}
    written = result.archive(tmp_path)
    doc = json.loads((tmp_path / "campaign.json").read_text())
    assert len(doc["violations"]) == len(result.violations)
    violation_files = [p for p in written if p.name.startswith("violation-")]
    assert len(violation_files) == len(result.violations)
    for path, rec in zip(violation_files, result.violations):
        D = read_edge_list(path)
        assert [list(a) for a in D.arcs] == rec["arcs"]
        assert [v["kind"] for v in replay(path, checks=("thm1",))] == ["thm1-contradicted"]
    monkeypatch.undo()
    assert replay(violation_files[0], checks=("thm1",)) == []


def test_random_instances_seeded_by_mix():
    seed = mix(7, 0)
    D = gen_random_conditioned(6 + seed % 3, "Thm1", seed)
    tally = Tally()
    check_instance(D, tally, {"index": 0})
    result = run_random((6, 8), 1, 7)
    assert {k: v for k, v in result.hypothesis_counts.items() if v} == dict(tally.classes)
    assert result.monitored_stats["case_tags"] == dict(tally.case_tags)
