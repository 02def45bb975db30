"""Building, face tracing, derived topology and reversal of flow graphs."""
import copy

import pytest

from morseflow import flowgraph
from morseflow.flowgraph import (
    BadDartDirection,
    BadPairing,
    BadSpecialPolar,
    Disconnected,
    GenusHintMismatch,
    IsolatedExtremum,
    MalformedFlow,
    NonAlternatingSaddle,
    build,
    euler_characteristic,
    face_coherence_check,
    faces,
    genus,
    poincare_hopf_check,
    reverse,
)

from conftest import FLOW_FIXTURES, load_description, load_flow


def test_build_polar(polar):
    assert polar.special_polar
    assert polar.counts() == (1, 1, 0)
    assert polar.num_edges() == 0


def test_build_sphere1(sphere1):
    assert sphere1.counts() == (1, 2, 1)
    assert sphere1.num_edges() == 4


def test_build_rejects_non_alternating_saddle(sphere1):
    desc = load_description("sphere1")
    # make the saddle read out, out, in, in
    desc["rotation"]["Z"] = ["z0", "z2", "z1", "z3"]
    with pytest.raises(NonAlternatingSaddle):
        build(desc)


def test_build_rejects_wrong_dart_count_saddle():
    desc = load_description("sphere1")
    desc["rotation"]["Z"] = ["z0", "z1", "z2"]
    del desc["dart_dir"]["z3"]
    desc["pairing"] = [p for p in desc["pairing"] if "z3" not in p]
    desc["rotation"]["S"] = ["s1"]
    del desc["dart_dir"]["s2"]
    with pytest.raises(NonAlternatingSaddle):
        build(desc)


def test_build_rejects_bad_direction():
    desc = load_description("sphere1")
    desc["dart_dir"]["k1"] = "out"
    desc["dart_dir"]["z0"] = "in"
    desc["rotation"]["Z"] = ["z1", "z0", "z2", "z3"]  # keep alternation
    with pytest.raises(BadDartDirection):
        build(desc)


def test_build_rejects_bad_pairing():
    desc = load_description("sphere1")
    desc["pairing"] = [["z0", "z2"], ["z1", "s1"], ["k1", "k2"], ["z3", "s2"]]
    with pytest.raises(BadPairing):
        build(desc)


def test_build_rejects_extremum_to_extremum_edge():
    # a one-source one-sink "flow" joined by a single trajectory is not a
    # separatrix graph
    desc = {
        "special_polar": False,
        "vertices": [{"id": "N", "kind": "source"}, {"id": "S", "kind": "sink"}],
        "rotation": {"N": ["a"], "S": ["b"]},
        "dart_dir": {"a": "out", "b": "in"},
        "pairing": [["a", "b"]],
    }
    with pytest.raises(BadPairing):
        build(desc)


def test_build_rejects_isolated_extremum():
    desc = load_description("sphere1")
    desc["vertices"].append({"id": "K3", "kind": "sink"})
    desc["rotation"]["K3"] = []
    with pytest.raises(IsolatedExtremum):
        build(desc)


def test_build_rejects_disconnected():
    a = load_description("sphere1")
    b = load_description("sphere1")
    merged = {
        "special_polar": False,
        "vertices": a["vertices"] + [
            {"id": v["id"] + "'", "kind": v["kind"]} for v in b["vertices"]
        ],
        "rotation": dict(a["rotation"]) | {
            v + "'": [d + "'" for d in ring] for v, ring in b["rotation"].items()
        },
        "dart_dir": dict(a["dart_dir"]) | {d + "'": x for d, x in b["dart_dir"].items()},
        "pairing": a["pairing"] + [[x + "'", y + "'"] for x, y in b["pairing"]],
    }
    with pytest.raises(Disconnected):
        build(merged)


def test_build_rejects_bad_special_polar():
    with pytest.raises(BadSpecialPolar):
        build({"special_polar": True, "vertices": [
            {"id": "N", "kind": "source"}, {"id": "M", "kind": "source"}]})
    with pytest.raises(BadSpecialPolar):
        build({"special_polar": True,
               "vertices": [{"id": "N", "kind": "source"}, {"id": "S", "kind": "sink"},
                            {"id": "Z", "kind": "saddle"}]})


def test_build_rejects_schema_problems():
    with pytest.raises(MalformedFlow):
        build({"vertices": "nope"})
    with pytest.raises(MalformedFlow):
        build({"vertices": [], "bogus_key": 1})
    desc = load_description("sphere1")
    desc["rotation"]["Z"] = ["z0", "z1", "z2", "zz"]
    with pytest.raises(MalformedFlow):
        build(desc)


def test_genus_hint_checked():
    desc = load_description("torus")
    desc["genus_hint"] = 0
    with pytest.raises(GenusHintMismatch):
        build(desc)


# ---------------------------------------------------------------------------
# faces and derived topology


def test_faces_sphere1(sphere1):
    walks = faces(sphere1)
    assert len(walks) == 2
    assert sorted(d for w in walks for d in w) == sphere1.darts()


def test_faces_torus(torus):
    walks = faces(torus)
    assert len(walks) == 4
    assert euler_characteristic(torus) == 0


def test_faces_polar_convention(polar):
    assert faces(polar) == [(), ()]
    assert euler_characteristic(polar) == 2
    assert genus(polar) == 0


@pytest.mark.parametrize("name", FLOW_FIXTURES)
def test_faces_partition_darts(name):
    flow = load_flow(name)
    walks = faces(flow)
    seen = [d for w in walks for d in w]
    assert sorted(seen) == flow.darts()
    assert len(set(seen)) == len(seen)


def test_euler_and_genus(sphere1, torus, polar):
    assert (euler_characteristic(sphere1), genus(sphere1)) == (2, 0)
    assert (euler_characteristic(torus), genus(torus)) == (0, 1)
    assert (euler_characteristic(polar), genus(polar)) == (2, 0)


def test_edge_count_formula():
    for name in FLOW_FIXTURES:
        flow = load_flow(name)
        _, _, k = flow.counts()
        extremum_darts = sum(
            len(flow.rotation.get(v, ())) for v, kind in flow.kinds.items() if kind != "saddle"
        )
        assert flow.num_edges() == (4 * k + extremum_darts) / 2


def test_poincare_hopf(sphere1, torus, homoclinic):
    assert poincare_hopf_check(sphere1)
    assert poincare_hopf_check(torus)
    # valid structure whose index count fails; stays buildable, check is false
    assert not poincare_hopf_check(homoclinic)


def test_face_coherence(sphere1, torus, cycleface, homoclinic):
    assert face_coherence_check(sphere1)
    assert face_coherence_check(torus)
    assert not face_coherence_check(cycleface)
    assert not face_coherence_check(homoclinic)


def test_cycleface_has_directed_face_boundary(cycleface):
    # the face (z0, w0) is a directed separatrix 2-cycle: constant signs
    walks = faces(cycleface)
    bad = [w for w in walks
           if len({cycleface.dart_dir[d] for d in w}) == 1]
    assert bad == [("w0", "z0")] or bad == [("z0", "w0")]


# ---------------------------------------------------------------------------
# reversal and round trips


def test_reverse_polar(polar):
    rev = reverse(polar)
    assert rev.special_polar and rev.counts() == (1, 1, 0)


def test_reverse_sphere1(sphere1):
    rev = reverse(sphere1)
    assert rev.counts() == (2, 1, 1)
    assert genus(rev) == 0


def test_reverse_is_involution():
    for name in FLOW_FIXTURES:
        flow = load_flow(name)
        back = reverse(reverse(flow))
        assert back.to_description() == flow.to_description()


def test_reverse_preserves_topology_and_coherence():
    for name in FLOW_FIXTURES:
        flow = load_flow(name)
        rev = reverse(flow)
        assert genus(rev) == genus(flow)
        assert len(faces(rev)) == len(faces(flow))
        assert face_coherence_check(rev) == face_coherence_check(flow)


def test_description_round_trip():
    for name in FLOW_FIXTURES:
        flow = load_flow(name)
        again = build(copy.deepcopy(flow.to_description()))
        assert again.to_description() == flow.to_description()


def test_relabeling_invariance_of_euler():
    flow = load_flow("torus")
    desc = flow.to_description()
    desc["rotation"] = {"X" + v: ["X" + d for d in ring] for v, ring in desc["rotation"].items()}
    desc["vertices"] = [{"id": "X" + e["id"], "kind": e["kind"]} for e in desc["vertices"]]
    desc["dart_dir"] = {"X" + d: x for d, x in desc["dart_dir"].items()}
    desc["pairing"] = [["X" + a, "X" + b] for a, b in desc["pairing"]]
    assert euler_characteristic(build(desc)) == euler_characteristic(flow)
