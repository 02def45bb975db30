"""Embedded directed separatrix graphs of Morse flows on oriented surfaces.

A flow is stored as a combinatorial map: vertices are sources, sinks and
saddles, darts are separatrix ends, each vertex carries the counterclockwise
cyclic order of its darts, and a fixed-point-free involution pairs the two
ends of every separatrix.  A dart directed "out" leaves its vertex along the
flow.  Saddles have exactly four darts alternating out/in; source darts all
point out, sink darts all point in.  Every separatrix has at least one saddle
end (trajectories joining two extrema are not separatrices and are rejected).

The unique saddle-free flow (one source, one sink, no separatrices) does not
induce a cell decomposition, so it is stored as a special token; its Euler
characteristic is 2 by convention.

Faces are recovered by the standard orbit rule "paired dart, then rotation
successor"; the Euler characteristic and genus are derived from the face
count and never taken on trust from the input.
"""
from __future__ import annotations

from dataclasses import dataclass

SOURCE = "source"
SINK = "sink"
SADDLE = "saddle"
OUT = "out"
IN = "in"

_KINDS = (SOURCE, SINK, SADDLE)


class FlowError(ValueError):
    """Base error for invalid flow descriptions."""


class MalformedFlow(FlowError):
    """Schema-level problem: missing keys, duplicate or unknown ids."""


class BadSpecialPolar(FlowError):
    """special_polar flows must be one source, one sink and no darts."""


class NonAlternatingSaddle(FlowError):
    """A saddle must have exactly 4 darts alternating out/in."""


class BadDartDirection(FlowError):
    """Source darts must be out, sink darts in."""


class BadPairing(FlowError):
    """Pairing must be a fixed-point-free out/in involution on all darts,
    and every pair must have a saddle end."""


class IsolatedExtremum(FlowError):
    """Sources and sinks need at least one dart unless special_polar."""


class Disconnected(FlowError):
    """The underlying separatrix graph must be connected."""


class GenusHintMismatch(FlowError):
    """genus_hint in the description disagrees with the derived genus."""


class NonOrientableOrCorrupt(FlowError):
    """Derived Euler characteristic is odd or exceeds 2."""


@dataclass(frozen=True)
class FlowGraph:
    """Validated immutable flow; construct through build()."""

    special_polar: bool
    kinds: dict            # vertex id -> kind
    rotation: dict         # vertex id -> tuple of dart ids, counterclockwise
    dart_dir: dict         # dart id -> "out" | "in"
    pairing: dict          # dart id -> dart id, involution
    dart_vertex: dict      # dart id -> vertex id, derived

    def vertices(self) -> list[str]:
        return sorted(self.kinds)

    def darts(self) -> list[str]:
        return sorted(self.dart_dir)

    def vertices_of_kind(self, kind: str) -> list[str]:
        return sorted(v for v, k in self.kinds.items() if k == kind)

    def counts(self) -> tuple[int, int, int]:
        """(sources, sinks, saddles)"""
        p = sum(1 for k in self.kinds.values() if k == SOURCE)
        q = sum(1 for k in self.kinds.values() if k == SINK)
        return p, q, len(self.kinds) - p - q

    def num_edges(self) -> int:
        return len(self.dart_dir) // 2

    def edges(self) -> list[tuple[str, str]]:
        """Separatrices as (tail vertex, head vertex), one per dart pair."""
        out = []
        for d, e in self.pairing.items():
            if self.dart_dir[d] == OUT:
                out.append((self.dart_vertex[d], self.dart_vertex[e]))
        return sorted(out)

    def rotation_next(self, dart: str) -> str:
        ring = self.rotation[self.dart_vertex[dart]]
        return ring[(ring.index(dart) + 1) % len(ring)]

    def to_description(self) -> dict:
        desc = {
            "special_polar": self.special_polar,
            "vertices": [{"id": v, "kind": self.kinds[v]} for v in self.vertices()],
            "rotation": {v: list(self.rotation[v]) for v in sorted(self.rotation)},
            "dart_dir": {d: self.dart_dir[d] for d in self.darts()},
            "pairing": sorted(sorted(pair) for pair in self._pairs()),
        }
        return desc

    def _pairs(self) -> list[tuple[str, str]]:
        return [(d, e) for d, e in self.pairing.items() if d < e]


def build(description: dict) -> FlowGraph:
    """Validate a flow description (the JSON object format) and freeze it.

    Raises a FlowError subclass naming the offending vertex or dart on the
    first violated invariant.
    """
    if not isinstance(description, dict):
        raise MalformedFlow("flow description must be an object")
    unknown = set(description) - {
        "special_polar", "vertices", "rotation", "dart_dir", "pairing", "genus_hint",
    }
    if unknown:
        raise MalformedFlow(f"unknown keys in flow description: {sorted(unknown)}")

    special = bool(description.get("special_polar", False))
    vertices = description.get("vertices")
    if not isinstance(vertices, list):
        raise MalformedFlow('"vertices" must be a list')
    kinds: dict = {}
    for entry in vertices:
        if not isinstance(entry, dict) or "id" not in entry or "kind" not in entry:
            raise MalformedFlow(f"bad vertex entry {entry!r}")
        vid, kind = entry["id"], entry["kind"]
        if not isinstance(vid, str):
            raise MalformedFlow(f"vertex id must be a string, got {vid!r}")
        if kind not in _KINDS:
            raise MalformedFlow(f"vertex {vid}: unknown kind {kind!r}")
        if vid in kinds:
            raise MalformedFlow(f"duplicate vertex id {vid}")
        kinds[vid] = kind

    rotation_in = description.get("rotation", {})
    dart_dir_in = description.get("dart_dir", {})
    pairing_in = description.get("pairing", [])

    if special:
        srcs = [v for v, k in kinds.items() if k == SOURCE]
        snks = [v for v, k in kinds.items() if k == SINK]
        if len(kinds) != 2 or len(srcs) != 1 or len(snks) != 1:
            raise BadSpecialPolar("special_polar needs exactly one source and one sink")
        if rotation_in or dart_dir_in or pairing_in:
            raise BadSpecialPolar("special_polar flows carry no darts")
        flow = FlowGraph(True, kinds, {}, {}, {}, {})
        _check_genus_hint(description, flow)
        return flow

    if not isinstance(rotation_in, dict) or not isinstance(dart_dir_in, dict):
        raise MalformedFlow('"rotation" and "dart_dir" must be objects')

    dart_dir: dict = {}
    for d, direction in dart_dir_in.items():
        if not isinstance(d, str) or direction not in (OUT, IN):
            raise MalformedFlow(f"bad dart_dir entry {d!r}: {direction!r}")
        dart_dir[d] = direction

    rotation: dict = {}
    dart_vertex: dict = {}
    for v, ring in rotation_in.items():
        if v not in kinds:
            raise MalformedFlow(f"rotation lists unknown vertex {v}")
        if not isinstance(ring, list) or not all(isinstance(d, str) for d in ring):
            raise MalformedFlow(f"rotation of {v} must be a list of dart ids")
        for d in ring:
            if d not in dart_dir:
                raise MalformedFlow(f"vertex {v}: dart {d} missing from dart_dir")
            if d in dart_vertex:
                raise MalformedFlow(f"dart {d} appears at two vertices")
            dart_vertex[d] = v
        rotation[v] = tuple(ring)
    if set(dart_vertex) != set(dart_dir):
        loose = sorted(set(dart_dir) - set(dart_vertex))
        raise MalformedFlow(f"darts not attached to any vertex: {loose}")

    for v, kind in kinds.items():
        ring = rotation.get(v, ())
        if kind == SADDLE:
            if len(ring) != 4:
                raise NonAlternatingSaddle(f"saddle {v} has {len(ring)} darts, needs 4")
            dirs = [dart_dir[d] for d in ring]
            if dirs[0] == dirs[1] or dirs[1] == dirs[2] or dirs[2] == dirs[3] or dirs[3] == dirs[0]:
                raise NonAlternatingSaddle(f"saddle {v}: darts do not alternate out/in")
        else:
            if not ring:
                raise IsolatedExtremum(f"{kind} {v} has no darts")
            want = OUT if kind == SOURCE else IN
            for d in ring:
                if dart_dir[d] != want:
                    raise BadDartDirection(f"{kind} {v}: dart {d} must be {want}")

    if not isinstance(pairing_in, list):
        raise MalformedFlow('"pairing" must be a list of dart pairs')
    pairing: dict = {}
    for pair in pairing_in:
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise MalformedFlow(f"bad pairing entry {pair!r}")
        a, b = pair
        if a not in dart_dir or b not in dart_dir:
            raise BadPairing(f"pairing references unknown dart in {pair!r}")
        if a == b:
            raise BadPairing(f"dart {a} paired with itself")
        if a in pairing or b in pairing:
            raise BadPairing(f"dart appears in two pairs: {pair!r}")
        if dart_dir[a] == dart_dir[b]:
            raise BadPairing(f"pair ({a}, {b}) must join an out dart to an in dart")
        if kinds[dart_vertex[a]] != SADDLE and kinds[dart_vertex[b]] != SADDLE:
            raise BadPairing(f"pair ({a}, {b}) joins two extrema; separatrices end at saddles")
        pairing[a] = b
        pairing[b] = a
    unpaired = sorted(set(dart_dir) - set(pairing))
    if unpaired:
        raise BadPairing(f"unpaired darts: {unpaired}")

    _check_connected(kinds, dart_vertex, pairing)

    flow = FlowGraph(False, kinds, rotation, dart_dir, pairing, dart_vertex)
    euler_characteristic(flow)  # raises NonOrientableOrCorrupt on bad maps
    _check_genus_hint(description, flow)
    return flow


def _check_connected(kinds, dart_vertex, pairing):
    if not kinds:
        raise MalformedFlow("flow has no vertices")
    start = next(iter(kinds))
    adjacency: dict = {v: set() for v in kinds}
    for d, e in pairing.items():
        adjacency[dart_vertex[d]].add(dart_vertex[e])
        adjacency[dart_vertex[e]].add(dart_vertex[d])
    seen = {start}
    stack = [start]
    while stack:
        for w in adjacency[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != len(kinds):
        missing = sorted(set(kinds) - seen)
        raise Disconnected(f"vertices unreachable from {start}: {missing}")


def _check_genus_hint(description, flow):
    hint = description.get("genus_hint")
    if hint is None:
        return
    derived = genus(flow)
    if hint != derived:
        raise GenusHintMismatch(f"genus_hint {hint} but derived genus is {derived}")


def faces(flow: FlowGraph) -> list[tuple[str, ...]]:
    """Facial walks of the combinatorial map: orbits of dart -> rotation
    successor of the paired dart.

    Each dart appears in exactly one walk; walks are rotated to start at
    their least dart and sorted.  The saddle-free flow has no darts and
    returns two empty walks, the two hemispheres.
    """
    if flow.special_polar:
        return [(), ()]
    remaining = set(flow.dart_dir)
    walks = []
    while remaining:
        start = min(remaining)
        walk = []
        d = start
        while True:
            walk.append(d)
            remaining.discard(d)
            d = flow.rotation_next(flow.pairing[d])
            if d == start:
                break
        k = walk.index(min(walk))
        walks.append(tuple(walk[k:] + walk[:k]))
    walks.sort()
    return walks


def euler_characteristic(flow: FlowGraph) -> int:
    """V - E + F from face tracing; 2 by convention for the saddle-free flow."""
    if flow.special_polar:
        return 2
    chi = len(flow.kinds) - flow.num_edges() + len(faces(flow))
    if chi % 2 != 0 or chi > 2:
        raise NonOrientableOrCorrupt(f"derived Euler characteristic {chi}")
    return chi


def genus(flow: FlowGraph) -> int:
    return (2 - euler_characteristic(flow)) // 2


def poincare_hopf_check(flow: FlowGraph) -> bool:
    """True iff sources + sinks - saddles equals the derived Euler characteristic."""
    p, q, z = flow.counts()
    return p + q - z == euler_characteristic(flow)


def face_coherence_check(flow: FlowGraph) -> bool:
    """True iff every facial walk crosses the flow direction exactly twice.

    Along a walk, a dart traverses its separatrix with the flow when the dart
    points out and against it otherwise.  A cell of a genuine flow is swept
    from one inflow corner chain to one outflow chain, so the cyclic sign
    sequence of a face must have exactly two maximal runs.  A face bounded by
    a directed separatrix cycle has constant signs and fails.
    """
    if flow.special_polar:
        return True
    for walk in faces(flow):
        signs = [flow.dart_dir[d] == OUT for d in walk]
        changes = sum(1 for i in range(len(signs)) if signs[i] != signs[i - 1])
        if changes != 2:
            return False
    return True


def reverse(flow: FlowGraph) -> FlowGraph:
    """Time reversal: sources and sinks swap, darts flip, rotations reverse.

    An involution preserving genus, faces and face coherence.
    """
    swap = {SOURCE: SINK, SINK: SOURCE, SADDLE: SADDLE}
    flip = {OUT: IN, IN: OUT}
    desc = {
        "special_polar": flow.special_polar,
        "vertices": [{"id": v, "kind": swap[k]} for v, k in sorted(flow.kinds.items())],
        "rotation": {v: list(reversed(ring)) for v, ring in flow.rotation.items()},
        "dart_dir": {d: flip[x] for d, x in flow.dart_dir.items()},
        "pairing": sorted(sorted(p) for p in flow._pairs()),
    }
    if flow.special_polar:
        desc["rotation"], desc["dart_dir"], desc["pairing"] = {}, {}, []
    return build(desc)
