from __future__ import annotations

import logging
from collections.abc import Iterable

from app.models.graph import VertexSet
from app.models.outerplanar import Chord, MaxOuterplanarRep, chords_cross, normalize_chord
from app.utils.errors import PreconditionError, VerificationError

logger = logging.getLogger("outerplanar")


def _sides(polygon: list[int]) -> set[Chord]:
    n = len(polygon)
    return {normalize_chord(polygon[i], polygon[(i + 1) % n]) for i in range(n)}


def _complete(polygon: list[int], chords: Iterable[Chord]) -> set[Chord]:
    """Triangulate ``polygon`` keeping its non-crossing ``chords``.

    Each pending sub-polygon is split along its smallest inner chord; one
    without inner chords is fanned from its lowest-labelled corner.
    """
    out: set[Chord] = set()
    pending = [(polygon, set(chords))]
    while pending:
        poly, known = pending.pop()
        if len(poly) <= 3:
            continue
        sides = _sides(poly)
        corners = set(poly)
        inner = {c for c in known if set(c) <= corners and c not in sides}
        if inner:
            u, v = min(inner)
            out.add((u, v))
            i, j = sorted((poly.index(u), poly.index(v)))
            pending.append((poly[i : j + 1], inner))
            pending.append((poly[j:] + poly[: i + 1], inner))
            continue
        start = poly.index(min(poly))
        fan = poly[start:] + poly[:start]
        for v in fan[2:-1]:
            out.add(normalize_chord(fan[0], v))
    return out


def triangulate(cycle: Iterable[int], chords: Iterable[tuple[int, int]]) -> MaxOuterplanarRep:
    """Complete a boundary plus non-crossing chords to a maximal outerplanar graph.

    Given chords are kept. Added chords come from splitting on the smallest
    remaining inner chord until none is left, then fanning each piece from its
    lowest-labelled corner.
    """
    polygon = list(cycle)
    position = {v: i for i, v in enumerate(polygon)}
    if len(position) != len(polygon):
        raise PreconditionError("boundary repeats a vertex")
    sides = _sides(polygon)
    given: set[Chord] = set()
    for u, v in chords:
        if u not in position or v not in position or u == v:
            raise PreconditionError(f"chord ({u}, {v}) is not between two boundary vertices")
        chord = normalize_chord(u, v)
        if chord not in sides:
            given.add(chord)
    ordered = sorted(given)
    for i, a in enumerate(ordered):
        for b in ordered[i + 1 :]:
            if chords_cross(position, a, b):
                raise PreconditionError(f"chords {a} and {b} cross")
    full = _complete(polygon, given)
    logger.debug(f"Triangulated {len(polygon)}-gon: {len(given)} given, {len(full)} total chords")
    return MaxOuterplanarRep(cycle=tuple(polygon), chords=frozenset(full))


def _adjacency(polygon: list[int], chords: set[Chord]) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {v: set() for v in polygon}
    for u, v in _sides(polygon) | chords:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def outerplanar_cover3(h: MaxOuterplanarRep) -> VertexSet:
    """3-path vertex cover of size at most floor(n/2) for a maximal outerplanar graph.

    Vertices of degree 2 are white, the rest black; a boundary edge is good
    when it has a white end. With every boundary edge good the black vertices
    form the cover. Otherwise the bad edge whose triangle cuts off the
    shortest boundary path (lowest position on ties) is used: that path
    alternates black and white, its far end and the bad edge's other end are
    black, and removing the 2s + 2 vertices costs s + 1 cover vertices. The
    remainder is closed into a polygon, re-triangulated and solved again.
    """
    polygon = list(h.cycle)
    chords = set(h.chords)
    cover: list[int] = []
    level = 0

    while len(polygon) >= 3:
        n = len(polygon)
        if n == 3:
            cover.append(min(polygon))
            break
        adj = _adjacency(polygon, chords)
        position = {v: t for t, v in enumerate(polygon)}
        white = {v: len(adj[v]) == 2 for v in polygon}
        bad = [
            i for i in range(n) if not white[polygon[i]] and not white[polygon[(i + 1) % n]]
        ]
        if not bad:
            blacks = [v for v in polygon if not white[v]]
            logger.debug(f"Level {level}: all {n} boundary edges good, {len(blacks)} black")
            cover.extend(blacks)
            break

        best: tuple[int, int, list[int], int] | None = None
        for i in bad:
            a, b = polygon[i], polygon[(i + 1) % n]
            (apex,) = adj[a] & adj[b]
            j = position[apex]
            forward = (j - (i + 1)) % n
            backward = (i - j) % n
            sigma = min(forward, backward)
            if best is not None and sigma >= best[0]:
                continue
            if forward <= backward:
                path = [polygon[(i + 1 + t) % n] for t in range(forward + 1)]
                other = a
            else:
                path = [polygon[(i - t) % n] for t in range(backward + 1)]
                other = b
            best = (sigma, i, path, other)

        assert best is not None
        sigma, i, path, other = best
        colours_ok = (
            not white[other]
            and sigma % 2 == 0
            and all(white[v] == (t % 2 == 1) for t, v in enumerate(path))
        )
        if not colours_ok:
            raise VerificationError(
                f"bad edge at boundary position {i} does not cut off an alternating path"
            )
        blacks_on_path = path[0::2]
        cover.append(other)
        cover.extend(blacks_on_path[1:])
        removed = set(path) | {other}
        logger.debug(
            f"Level {level}: bad edge at {i}, sigma={sigma}, removed {len(removed)}, "
            f"added {len(blacks_on_path)}"
        )

        polygon = [v for v in polygon if v not in removed]
        survivors = {c for c in chords if not (set(c) & removed)}
        chords = _complete(polygon, survivors - _sides(polygon)) if len(polygon) >= 3 else set()
        level += 1

    result = VertexSet.of(cover)
    logger.info(f"Outerplanar cover: {len(result)} of {h.n} vertices")
    return result
