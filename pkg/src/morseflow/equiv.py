"""Canonical codes deciding equivalence of embedded directed separatrix graphs.

Two flows are equivalent when some bijection of vertices and darts preserves
kinds, dart directions, rotations and the pairing; this is equivalence under
all orientation-preserving relabelings of the surface.  The code of a flow is
the lexicographically least traversal record over every starting dart, so
code equality decides equivalence.  Quotienting by reflections (reversed
rotations) is opt-in.
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass

from .flowgraph import OUT, SADDLE, SINK, SOURCE, FlowGraph, build

_KIND_CODE = {SOURCE: 0, SINK: 1, SADDLE: 2}

# The saddle-free flow has no darts; its code is the constant (0,).
_POLAR_CODE = (0,)


@dataclass(frozen=True)
class CanonicalCode:
    """Relabeling-invariant integer sequence; lexicographic total order."""

    code: tuple[int, ...]
    mirror_included: bool

    def as_string(self) -> str:
        return "-".join(str(n) for n in self.code)

    def stable_hash(self) -> str:
        """64-bit digest of the code string, stable across runs and machines."""
        return hashlib.blake2b(self.as_string().encode(), digest_size=8).hexdigest()

    def __lt__(self, other: "CanonicalCode") -> bool:
        return self.code < other.code


def _successor_maps(flow: FlowGraph, mirrored: bool) -> dict:
    succ = {}
    for ring in flow.rotation.values():
        n = len(ring)
        for i, d in enumerate(ring):
            succ[d] = ring[(i - 1) % n] if mirrored else ring[(i + 1) % n]
    return succ


def _traversal_code(flow: FlowGraph, start: str, succ: dict) -> tuple[int, ...]:
    """Breadth-first dart discovery from start via rotation-successor and
    pairing moves; emits (kind, direction, successor index, partner index)
    per dart in discovery order."""
    pos = {start: 0}
    order = [start]
    i = 0
    while i < len(order):
        d = order[i]
        i += 1
        for nb in (succ[d], flow.pairing[d]):
            if nb not in pos:
                pos[nb] = len(order)
                order.append(nb)
    out = []
    for d in order:
        out.append(_KIND_CODE[flow.kinds[flow.dart_vertex[d]]])
        out.append(0 if flow.dart_dir[d] == OUT else 1)
        out.append(pos[succ[d]])
        out.append(pos[flow.pairing[d]])
    return tuple(out)


def canonical_code(flow: FlowGraph, include_mirror: bool = False) -> CanonicalCode:
    """Least traversal code over all starting darts (and over the mirrored
    rotation system when include_mirror)."""
    if flow.special_polar:
        return CanonicalCode(_POLAR_CODE, include_mirror)
    darts = flow.darts()
    best = None
    orientations = [False, True] if include_mirror else [False]
    for mirrored in orientations:
        succ = _successor_maps(flow, mirrored)
        for start in darts:
            code = _traversal_code(flow, start, succ)
            if best is None or code < best:
                best = code
    assert best is not None and len(best) == 4 * len(darts)
    return CanonicalCode((len(darts),) + best, include_mirror)


def equivalent(f1: FlowGraph, f2: FlowGraph, include_mirror: bool = False) -> bool:
    return canonical_code(f1, include_mirror).code == canonical_code(f2, include_mirror).code


def relabel(flow: FlowGraph, vertex_map: dict, dart_map: dict) -> FlowGraph:
    """Rename vertex and dart ids through total bijections; the structure is
    unchanged, so the result is always equivalent to the input."""
    _check_bijection(vertex_map, flow.kinds, "vertex")
    _check_bijection(dart_map, flow.dart_dir, "dart")
    desc = {
        "special_polar": flow.special_polar,
        "vertices": [
            {"id": vertex_map[v], "kind": k} for v, k in sorted(flow.kinds.items())
        ],
        "rotation": {
            vertex_map[v]: [dart_map[d] for d in ring] for v, ring in flow.rotation.items()
        },
        "dart_dir": {dart_map[d]: x for d, x in flow.dart_dir.items()},
        "pairing": sorted(sorted((dart_map[a], dart_map[b])) for a, b in flow._pairs()),
    }
    return build(desc)


def _check_bijection(mapping: dict, domain: dict, what: str) -> None:
    missing = sorted(set(domain) - set(mapping))
    if missing:
        raise ValueError(f"{what} map misses ids {missing}")
    images = [mapping[x] for x in domain]
    if len(set(images)) != len(images):
        raise ValueError(f"{what} map is not injective on the flow's ids")
