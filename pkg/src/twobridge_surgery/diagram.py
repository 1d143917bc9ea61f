"""
Planar diagrams of two-bridge knots.

A word is drawn as a rational tangle: entries at even positions are horizontal twists
(crossings added on the right), entries at odd positions vertical twists (crossings added
below). The tangle is built from the last entry inwards and closed by joining NW-NE and
SW-SE, so the closure is the two-bridge link whose fraction is the word's value.
"""

from __future__ import annotations

import logging
from collections import deque
from collections.abc import Iterable, Sequence

import networkx as nx  # type: ignore[import-untyped]

from .conway import evaluate, require_reduced, to_plus
from .errors import InvariantBreach, LinkNotKnotError, PDCodeError
from .models import ConwayWord, Crossing, Diagram

logger = logging.getLogger(__name__)

PDTuple = tuple[int, int, int, int]

# counterclockwise corner order of the four slots; slots 0 and 2 carry the under strand
_POSITIVE_SLOTS = ("SE", "NE", "NW", "SW")
_NEGATIVE_SLOTS = ("SW", "SE", "NE", "NW")


class _TangleBuilder:
    """Accumulates crossing slots and the strands joining them."""

    def __init__(self) -> None:
        self.graph = nx.Graph()
        self.slots: dict[int, tuple[int, int]] = {}
        self.crossings = 0
        self._points = 0

    def point(self) -> int:
        self._points += 1
        self.graph.add_node(self._points)
        return self._points

    def join(self, a: int, b: int) -> None:
        self.graph.add_edge(a, b)

    def crossing(self, positive: bool) -> dict[str, int]:
        corners: dict[str, int] = {}
        layout = _POSITIVE_SLOTS if positive else _NEGATIVE_SLOTS
        for slot, corner in enumerate(layout):
            pid = self.point()
            self.slots[pid] = (self.crossings, slot)
            corners[corner] = pid
        self.crossings += 1
        return corners

    def trivial(self, vertical: bool) -> dict[str, int]:
        ends = {corner: self.point() for corner in ("NW", "NE", "SW", "SE")}
        if vertical:
            self.join(ends["NW"], ends["SW"])
            self.join(ends["NE"], ends["SE"])
        else:
            self.join(ends["NW"], ends["NE"])
            self.join(ends["SW"], ends["SE"])
        return ends

    def twist(self, ends: dict[str, int], count: int, vertical: bool) -> None:
        for _ in range(abs(count)):
            x = self.crossing(count > 0)
            if vertical:
                self.join(ends["SW"], x["NW"])
                self.join(ends["SE"], x["NE"])
                ends["SW"], ends["SE"] = x["SW"], x["SE"]
            else:
                self.join(ends["NE"], x["NW"])
                self.join(ends["SE"], x["SW"])
                ends["NE"], ends["SE"] = x["NE"], x["SE"]

    def neighbours(self) -> dict[tuple[int, int], tuple[int, int]]:
        """Contracts every strand to the pair of crossing slots at its ends."""
        pairs: dict[tuple[int, int], tuple[int, int]] = {}
        for component in nx.connected_components(self.graph):
            ends = [self.slots[pid] for pid in component if pid in self.slots]
            if len(ends) == 2:
                a, b = ends
                pairs[a], pairs[b] = b, a
            elif ends:
                raise InvariantBreach(f"strand with {len(ends)} crossing ends")
        return pairs


def _tangle_pd(word: ConwayWord) -> list[PDTuple]:
    entries = to_plus(word).entries
    builder = _TangleBuilder()
    last = len(entries) - 1
    ends = builder.trivial(vertical=last % 2 == 1)
    for i in range(last, -1, -1):
        builder.twist(ends, entries[i], vertical=i % 2 == 1)
    builder.join(ends["NW"], ends["NE"])
    builder.join(ends["SW"], ends["SE"])
    return _label_edges(builder.crossings, builder.neighbours())


def _label_edges(
    crossings: int, neighbour: dict[tuple[int, int], tuple[int, int]]
) -> list[PDTuple]:
    """Walks every component, numbering edges consecutively along its orientation."""
    labels: dict[tuple[int, int], int] = {}
    entries: set[tuple[int, int]] = set()
    visited: set[tuple[int, int]] = set()
    label = 0
    for c in range(crossings):
        for start in (0, 1):
            slot = (c, start)
            while (slot[0], slot[1] % 2) not in visited:
                visited.add((slot[0], slot[1] % 2))
                exit_slot = (slot[0], (slot[1] + 2) % 4)
                label += 1
                slot = neighbour[exit_slot]
                labels[exit_slot] = labels[slot] = label
                entries.add(slot)
    code: list[PDTuple] = []
    for c in range(crossings):
        u_in = 0 if (c, 0) in entries else 2
        code.append(
            (
                labels[(c, u_in)],
                labels[(c, (u_in + 1) % 4)],
                labels[(c, (u_in + 2) % 4)],
                labels[(c, (u_in + 3) % 4)],
            )
        )
    return code


def _orient(code: Sequence[PDTuple]) -> dict[tuple[int, int], bool]:
    """Marks each slot as entering (True) or leaving, propagating from the under strands."""
    where: dict[int, list[tuple[int, int]]] = {}
    for c, row in enumerate(code):
        for s, lbl in enumerate(row):
            where.setdefault(lbl, []).append((c, s))
    bad = [lbl for lbl, slots in where.items() if len(slots) != 2]
    if bad:
        raise PDCodeError(f"edge label {bad[0]} does not occur exactly twice")

    entering: dict[tuple[int, int], bool] = {}
    queue: deque[tuple[tuple[int, int], bool]] = deque()

    def settle(slot: tuple[int, int], value: bool) -> None:
        if slot in entering:
            if entering[slot] != value:
                raise PDCodeError(f"inconsistent orientation at crossing {slot[0]}")
            return
        entering[slot] = value
        queue.append((slot, value))

    def drain() -> None:
        while queue:
            (c, s), value = queue.popleft()
            settle((c, (s + 2) % 4), not value)
            a, b = where[code[c][s]]
            settle(b if a == (c, s) else a, not value)

    for c in range(len(code)):
        settle((c, 0), True)
    drain()
    for c in range(len(code)):
        if (c, 1) not in entering:
            # a strand that never passes under: orientation is free
            settle((c, 1), True)
            drain()
    return entering


def _classes(groups: Iterable[tuple[int, int]], labels: Iterable[int]) -> dict[int, int]:
    graph = nx.Graph()
    graph.add_nodes_from(labels)
    graph.add_edges_from(groups)
    ordered = sorted((min(comp), comp) for comp in nx.connected_components(graph))
    return {lbl: idx for idx, (_, comp) in enumerate(ordered) for lbl in comp}


def diagram_from_pd(code: Sequence[Sequence[int]], word: ConwayWord | None = None) -> Diagram:
    """
    Builds crossing records from a PD code ``X[i,j,k,l]`` (i the incoming under edge,
    slots counterclockwise). Arc and component counts come from edge connectivity.
    """
    rows: list[PDTuple] = []
    for row in code:
        if len(row) != 4:
            raise PDCodeError(f"PD entry {list(row)} does not have four labels")
        rows.append((int(row[0]), int(row[1]), int(row[2]), int(row[3])))
    if not rows:
        return Diagram(crossings=[], arcs=0, components=1, pd=[], word=word)

    entering = _orient(rows)
    labels = {lbl for row in rows for lbl in row}
    arc_of = _classes(((row[1], row[3]) for row in rows), labels)
    strands = [(row[0], row[2]) for row in rows] + [(row[1], row[3]) for row in rows]
    components = len(set(_classes(strands, labels).values()))

    crossings = []
    for c, row in enumerate(rows):
        if not entering[(c, 0)]:
            raise PDCodeError(f"crossing {c}: first label is not the incoming under edge")
        # over strand leaving through the slot after the incoming under edge is positive
        sign = 1 if entering[(c, 3)] else -1
        crossings.append(
            Crossing(
                over=arc_of[row[1]],
                under_in=arc_of[row[0]],
                under_out=arc_of[row[2]],
                sign=sign,
            )
        )
    arcs = len(set(arc_of.values()))
    logger.debug("Diagram with %d crossings, %d arcs, %d components", len(rows), arcs, components)
    return Diagram(crossings=crossings, arcs=arcs, components=components, pd=rows, word=word)


def diagram_from_word(word: ConwayWord) -> Diagram:
    """Draws the two-bridge template of a reduced word; rejects words closing to a link."""
    require_reduced(word)
    value = evaluate(word)
    p = 1 if value.is_infinite else abs(value.numerator)
    if p % 2 == 0:
        raise LinkNotKnotError(f"{word} closes to a two-component link (p={p})")
    diagram = diagram_from_pd(_tangle_pd(word), word=word)
    if diagram.components != 1:
        raise InvariantBreach(f"{word} has p={p} but traced {diagram.components} components")
    return diagram


def link_components(word: ConwayWord) -> int:
    """Component count of the closure of any reduced word, knot or link."""
    require_reduced(word)
    return diagram_from_pd(_tangle_pd(word)).components


def pd_text(diagram: Diagram) -> str:
    return "PD[" + ", ".join("X[{},{},{},{}]".format(*row) for row in diagram.pd) + "]"
