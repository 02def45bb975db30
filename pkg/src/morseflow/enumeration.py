"""Exhaustive generation of separatrix graphs with few saddles.

Every flow with k saddles is produced, up to equivalence, from a compact
candidate encoding: the 4k saddle darts are numbered so that saddle i owns
darts 4i..4i+3 in rotation order with even darts pointing out, a partial
matching pairs saddle out-darts to saddle in-darts (the saddle connections),
and the leftover out/in darts are absorbed by sinks/sources encoded as
permutations whose cycles are the extrema with their rotation orders.  Face
tracing, the coherence filter, connectivity and the index count are checked
directly on that encoding; survivors are materialized into real FlowGraphs
and deduplicated by canonical code.

The candidate space is pruned by the exact symmetry group of the encoding
(saddle relabelings and half-turns of individual saddles); a naive generator
without any pruning, driven through the public build/validation pipeline,
cross-checks the class sets at desk scale.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from . import flowgraph
from .equiv import CanonicalCode, canonical_code
from .flowgraph import FlowGraph, build, face_coherence_check
from .gradcheck import check_gradient_like

MAX_SADDLES = 3


class SpecOutOfBounds(ValueError):
    """Requested saddle count outside the supported range 0..3."""


@dataclass(frozen=True)
class EnumSpec:
    """What to enumerate: saddle count plus optional filters."""

    saddles: int
    max_extrema: int | None = None
    gradient_like_only: bool = False
    genus: int | None = None

    def __post_init__(self):
        if not 0 <= self.saddles <= MAX_SADDLES:
            raise SpecOutOfBounds(f"saddle count must be in 0..{MAX_SADDLES}, got {self.saddles}")


@dataclass(frozen=True)
class ClassRecord:
    """One equivalence class: canonical representative plus its statistics."""

    flow: FlowGraph
    code: CanonicalCode
    genus: int
    sources: int
    sinks: int
    gradient_like: bool


@dataclass(frozen=True)
class CountRow:
    genus: int
    k: int
    sources: int
    sinks: int
    classes: int
    gradient_like: int


@dataclass(frozen=True)
class CountTable:
    rows: tuple[CountRow, ...]

    def to_csv(self) -> str:
        lines = ["genus,k,sources,sinks,classes,gradient_like"]
        for r in self.rows:
            lines.append(f"{r.genus},{r.k},{r.sources},{r.sinks},{r.classes},{r.gradient_like}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> list:
        return [
            {
                "genus": r.genus,
                "k": r.k,
                "sources": r.sources,
                "sinks": r.sinks,
                "classes": r.classes,
                "gradient_like": r.gradient_like,
            }
            for r in self.rows
        ]


_POLAR_DESCRIPTION = {
    "special_polar": True,
    "vertices": [{"id": "p0", "kind": "source"}, {"id": "q0", "kind": "sink"}],
}

_CLASS_CACHE: dict = {}


def enumerate_classes(k: int) -> tuple[ClassRecord, ...]:
    """All equivalence classes of flows with k saddles, sorted by code."""
    if not 0 <= k <= MAX_SADDLES:
        raise SpecOutOfBounds(f"saddle count must be in 0..{MAX_SADDLES}, got {k}")
    if k not in _CLASS_CACHE:
        _CLASS_CACHE[k] = tuple(_generate(k))
    return _CLASS_CACHE[k]


def enumerate_flows(spec: EnumSpec) -> list[FlowGraph]:
    """Canonical representatives matching the requested filters, sorted by code."""
    out = []
    for rec in enumerate_classes(spec.saddles):
        if spec.genus is not None and rec.genus != spec.genus:
            continue
        if spec.gradient_like_only and not rec.gradient_like:
            continue
        if spec.max_extrema is not None and rec.sources + rec.sinks > spec.max_extrema:
            continue
        out.append(rec.flow)
    return out


def count_table(kmax: int) -> CountTable:
    """Class counts by (genus, k, sources, sinks) for k = 0..kmax.

    Rows cover every extremum split compatible with the index count
    sources + sinks = chi + k: both-positive splits when two or more
    extrema are forced, and the two one-sided splits when exactly one
    extremum is forced (those rows witness infeasibility with zero counts).
    """
    if not 0 <= kmax <= MAX_SADDLES:
        raise SpecOutOfBounds(f"kmax must be in 0..{MAX_SADDLES}, got {kmax}")
    rows = []
    for k in range(kmax + 1):
        tally: dict = {}
        for rec in enumerate_classes(k):
            key = (rec.genus, rec.sources, rec.sinks)
            total, grad = tally.get(key, (0, 0))
            tally[key] = (total + 1, grad + (1 if rec.gradient_like else 0))
        covered = set()
        genus = 0
        while True:
            n_extr = 2 - 2 * genus + k
            if n_extr < 1:
                break
            splits = [(1, 0), (0, 1)] if n_extr == 1 else [
                (p, n_extr - p) for p in range(1, n_extr)
            ]
            for p, q in splits:
                total, grad = tally.get((genus, p, q), (0, 0))
                rows.append(CountRow(genus, k, p, q, total, grad))
                covered.add((genus, p, q))
            genus += 1
        assert covered >= set(tally), f"classes outside the row domain: {set(tally) - covered}"
    rows.sort(key=lambda r: (r.k, r.genus, r.sources))
    return CountTable(tuple(rows))


# ---------------------------------------------------------------------------
# fast generator on the compact encoding


def _symmetries(k: int) -> list[tuple[int, ...]]:
    """Dart permutations preserving the encoding: relabel saddles and turn
    individual saddles by half (which keeps rotation order and directions)."""
    group = []
    for order in permutations(range(k)):
        for rots in range(2 ** k):
            g = [0] * (4 * k)
            for i in range(k):
                shift = 2 * ((rots >> i) & 1)
                for j in range(4):
                    g[4 * i + j] = 4 * order[i] + ((j + shift) & 3)
            group.append(tuple(g))
    return group


def _apply_to_matching(g: tuple, matching: tuple) -> tuple:
    return tuple(sorted((g[a], g[b]) for a, b in matching))


def _matchings(k: int):
    """All partial injective pairings of saddle out-darts to saddle in-darts."""
    outs = [d for d in range(4 * k) if d % 2 == 0]
    ins = [d for d in range(4 * k) if d % 2 == 1]
    for t in range(2 * k + 1):
        for osub in combinations(outs, t):
            for iimg in permutations(ins, t):
                yield tuple(sorted(zip(osub, iimg)))


def _perm_variants(dart_set: list, stab: list | None):
    """Permutations of dart_set with cycle data; when a stabilizer is given,
    only representatives canonical under it are kept (coverage is preserved
    because the stabilizer acts jointly on both extremum sides)."""
    darts = sorted(dart_set)
    index = {d: i for i, d in enumerate(darts)}
    inverses = None
    if stab:
        inverses = []
        for g in stab:
            inv = [0] * len(g)
            for a, b in enumerate(g):
                inv[b] = a
            inverses.append(tuple(inv))
    variants = []
    for images in permutations(darts):
        if stab:
            enc = images
            minimal = True
            for g, ginv in zip(stab, inverses):
                other = tuple(g[images[index[ginv[d]]]] for d in darts)
                if other < enc:
                    minimal = False
                    break
            if not minimal:
                continue
        mapping = dict(zip(darts, images))
        cycles = []
        left = set(darts)
        while left:
            d0 = min(left)
            cyc = [d0]
            left.remove(d0)
            d = mapping[d0]
            while d != d0:
                cyc.append(d)
                left.remove(d)
                d = mapping[d]
            cycles.append(tuple(cyc))
        merges = tuple(frozenset(d >> 2 for d in cyc) for cyc in cycles)
        variants.append((tuple(zip(darts, images)), tuple(cycles), len(cycles), merges))
    return variants


def _connected(k: int, merge_groups) -> bool:
    comp = list(range(k))

    def find(x):
        while comp[x] != x:
            comp[x] = comp[comp[x]]
            x = comp[x]
        return x

    for group in merge_groups:
        it = iter(group)
        try:
            first = find(next(it))
        except StopIteration:
            continue
        for other in it:
            comp[find(other)] = first
    return len({find(i) for i in range(k)}) == 1


def _trace_faces(n: int, part: list, is_ext: list):
    """Count faces of the reduced map and enforce coherence (exactly two
    sign runs per face, counting the implicit extremum hop which always
    flips the sign).  Returns the face count or None when incoherent."""
    seen = [False] * n
    nfaces = 0
    for d0 in range(n):
        if seen[d0]:
            continue
        nfaces += 1
        changes = 0
        first = prev = not (d0 & 1)
        d = d0
        while True:
            seen[d] = True
            s = not (d & 1)
            if d != d0 and s != prev:
                changes += 1
                if changes > 2:
                    return None
            prev = s
            if is_ext[d]:
                changes += 1
                if changes > 2:
                    return None
                prev = not s
            p = part[d]
            d = (p & ~3) | ((p + 1) & 3)
            if d == d0:
                break
        if changes + (1 if prev != first else 0) != 2:
            return None
    return nfaces


def _materialize(k: int, matching: tuple, src_cycles: tuple, snk_cycles: tuple) -> dict:
    def dart_name(d):
        return f"z{d >> 2}.{d & 3}"

    vertices = [{"id": f"z{i}", "kind": "saddle"} for i in range(k)]
    rotation = {f"z{i}": [dart_name(4 * i + j) for j in range(4)] for i in range(k)}
    dart_dir = {dart_name(d): ("out" if d % 2 == 0 else "in") for d in range(4 * k)}
    pairing = [[dart_name(a), dart_name(b)] for a, b in matching]

    for prefix, kind, direction, cycles in (
        ("p", "source", "out", src_cycles),
        ("q", "sink", "in", snk_cycles),
    ):
        for n, cyc in enumerate(sorted(cycles)):
            vid = f"{prefix}{n}"
            vertices.append({"id": vid, "kind": kind})
            ring = []
            for j, saddle_dart in enumerate(cyc):
                did = f"{vid}.{j}"
                ring.append(did)
                dart_dir[did] = direction
                pairing.append(sorted((did, dart_name(saddle_dart))))
            rotation[vid] = ring
    return {
        "special_polar": False,
        "vertices": vertices,
        "rotation": rotation,
        "dart_dir": dart_dir,
        "pairing": sorted(pairing),
    }


def _generate(k: int):
    if k == 0:
        flow = build(_POLAR_DESCRIPTION)
        yield ClassRecord(flow, canonical_code(flow), 0, 1, 1, True)
        return

    n = 4 * k
    group = _symmetries(k)
    seen_codes: dict = {}
    records = []

    for matching in _matchings(k):
        if any(_apply_to_matching(g, matching) < matching for g in group):
            continue
        stab = [g for g in group if _apply_to_matching(g, matching) == matching]
        t = len(matching)
        matched = set()
        base_part = [0] * n
        for a, b in matching:
            matched.add(a)
            matched.add(b)
            base_part[a] = b
            base_part[b] = a
        is_ext = [d not in matched for d in range(n)]
        sink_fed = [d for d in range(n) if is_ext[d] and d % 2 == 0]
        source_fed = [d for d in range(n) if is_ext[d] and d % 2 == 1]
        match_merges = tuple(frozenset((a >> 2, b >> 2)) for a, b in matching)

        snk_variants = _perm_variants(sink_fed, stab)
        src_variants = _perm_variants(source_fed, None)

        for snk_assign, snk_cycles, q, snk_merges in snk_variants:
            for src_assign, src_cycles, p, src_merges in src_variants:
                if not _connected(k, match_merges + snk_merges + src_merges):
                    continue
                part = base_part[:]
                for d, img in snk_assign:
                    part[d] = img
                for d, img in src_assign:
                    part[d] = img
                nfaces = _trace_faces(n, part, is_ext)
                if nfaces is None:
                    continue
                chi = (k + p + q) - (4 * k - t) + nfaces
                assert chi % 2 == 0 and chi <= 2, (matching, snk_assign, src_assign)
                assert p + q - k == chi, "index count violated by a coherent candidate"

                flow = build(_materialize(k, matching, src_cycles, snk_cycles))
                code = canonical_code(flow)
                if code.code in seen_codes:
                    continue
                seen_codes[code.code] = True
                # the reduced trace must agree with the module-level checks
                assert face_coherence_check(flow) and flowgraph.poincare_hopf_check(flow)
                records.append(
                    ClassRecord(
                        flow,
                        code,
                        (2 - chi) // 2,
                        p,
                        q,
                        check_gradient_like(flow).verdict,
                    )
                )

    records.sort(key=lambda r: r.code.code)
    yield from records


# ---------------------------------------------------------------------------
# naive cross-check generator


def _cyclic_set_partitions(items):
    """Partitions of items into blocks carrying a cyclic order, each block
    written starting from its least element.  There are len(items)! of them."""
    items = sorted(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for size in range(len(rest) + 1):
        for subset in combinations(rest, size):
            others = [x for x in rest if x not in subset]
            for order in permutations(subset):
                block = (first,) + order
                for more in _cyclic_set_partitions(others):
                    yield [block] + more


def naive_enumerate_classes(k: int) -> tuple[ClassRecord, ...]:
    """Reference enumeration without symmetry pruning: every candidate is
    constructed explicitly and pushed through build() and the coherence
    check.  Intended for desk-scale cross-checks (k <= 2)."""
    if not 0 <= k <= MAX_SADDLES:
        raise SpecOutOfBounds(f"saddle count must be in 0..{MAX_SADDLES}, got {k}")
    if k == 0:
        flow = build(_POLAR_DESCRIPTION)
        return (ClassRecord(flow, canonical_code(flow), 0, 1, 1, True),)

    by_code: dict = {}
    for matching in _matchings(k):
        matched = {d for pair in matching for d in pair}
        sink_fed = [d for d in range(4 * k) if d not in matched and d % 2 == 0]
        source_fed = [d for d in range(4 * k) if d not in matched and d % 2 == 1]
        for src_blocks in _cyclic_set_partitions(source_fed):
            for snk_blocks in _cyclic_set_partitions(sink_fed):
                desc = _materialize(
                    k, matching, tuple(src_blocks), tuple(snk_blocks)
                )
                try:
                    flow = build(desc)
                except flowgraph.FlowError:
                    continue
                if not face_coherence_check(flow):
                    continue
                code = canonical_code(flow)
                if code.code in by_code:
                    continue
                p, q, _ = flow.counts()
                by_code[code.code] = ClassRecord(
                    flow,
                    code,
                    flowgraph.genus(flow),
                    p,
                    q,
                    check_gradient_like(flow).verdict,
                )
    return tuple(sorted(by_code.values(), key=lambda r: r.code.code))
