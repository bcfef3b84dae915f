"""Labelled involution graphs over opaque vertex ids.

A :class:`DEGraph` stores every involution as a complete map (fixed points map
to themselves), so the same code serves tableau graphs and abstract inputs read
from JSON.
"""

from __future__ import annotations

import json
from collections import Counter, deque
from functools import cache
from typing import Callable, Iterable

from .errors import GraphConstructionError, MalformedGraphError, UnknownLabelError
from .involutions import deg_concat, deg_sst, deg_syt, queer_concat, queer_sst
from .qsym import QSymF
from .tableaux import generate_concat, generate_sst, generate_syt

EDGE_COLORS = {0: "violet", 2: "red", 3: "blue", 4: "magenta"}
_EXTRA_COLORS = ("darkgreen", "orange", "brown", "cyan", "gold", "gray")


def label_color(label: int) -> str:
    if label in EDGE_COLORS:
        return EDGE_COLORS[label]
    return _EXTRA_COLORS[(label - 5) % len(_EXTRA_COLORS)]


class DEGraph:
    def __init__(self, n: int, vertices, descents, moves, objects=None):
        self.n = n
        self.vertices = list(vertices)
        self.index = {v: k for k, v in enumerate(self.vertices)}
        if len(self.index) != len(self.vertices):
            raise MalformedGraphError("duplicate vertex ids")
        self.descents = {v: frozenset(descents[v]) for v in self.vertices}
        for v, D in self.descents.items():
            if any(not 1 <= d <= n - 1 for d in D):
                raise MalformedGraphError(f"descent set of {v} is not a subset of [{n - 1}]")
        self.moves = {label: dict(m) for label, m in moves.items()}
        for label, m in self.moves.items():
            for v in self.vertices:
                w = m.setdefault(v, v)
                if w not in self.index:
                    raise MalformedGraphError(f"label {label} maps {v} outside the graph")
            for v, w in m.items():
                if m[w] != v:
                    raise MalformedGraphError(f"label {label} is not a matching at {v}")
        self.objects = dict(objects) if objects else {}

    @classmethod
    def from_edges(cls, n, vertices, descents, edges, labels=None) -> "DEGraph":
        if labels is None:
            labels = ({0} if n >= 2 else set()) | set(range(2, n)) | set(edges)
        moves = {label: {} for label in labels}
        for label, pairs in edges.items():
            m = moves[label]
            for a, b in pairs:
                if a == b:
                    continue
                if a in m or b in m:
                    raise MalformedGraphError(f"label {label}: vertex in two edges near {a}-{b}")
                m[a], m[b] = b, a
        return cls(n, vertices, descents, moves)

    @property
    def labels(self) -> list[int]:
        return sorted(self.moves)

    def __len__(self):
        return len(self.vertices)

    def partner(self, label: int, v):
        return self.moves[label][v]

    def edges(self, label: int) -> list[tuple]:
        m = self.moves[label]
        idx = self.index
        return sorted(
            ((v, w) for v, w in m.items() if idx[v] < idx[w]),
            key=lambda e: (idx[e[0]], idx[e[1]]),
        )

    def edge_count(self) -> int:
        return sum(len(self.edges(label)) for label in self.moves)

    def restrict_labels(self, labels) -> "DEGraph":
        self._check_labels(labels)
        return DEGraph(
            self.n, self.vertices, self.descents, {lb: self.moves[lb] for lb in labels}, self.objects
        )

    def _check_labels(self, labels):
        missing = set(labels) - set(self.moves)
        if missing:
            raise UnknownLabelError(f"labels {sorted(missing)} not in graph (has {self.labels})")

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "labels": self.labels,
            "vertices": [{"id": v, "des": sorted(self.descents[v])} for v in self.vertices],
            "edges": [
                {"label": label, "a": a, "b": b} for label in self.labels for a, b in self.edges(label)
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "DEGraph":
        try:
            n = int(data["n"])
            vertices = [v["id"] for v in data["vertices"]]
            descents = {v["id"]: v.get("des", []) for v in data["vertices"]}
            edges: dict[int, list] = {}
            for e in data.get("edges", []):
                edges.setdefault(int(e["label"]), []).append((e["a"], e["b"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedGraphError(f"bad graph record: {exc}") from None
        labels = data.get("labels")
        return cls.from_edges(n, vertices, descents, edges, None if labels is None else set(labels))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1)


def build_graph(objects, descent_fn: Callable, involutions: dict, n: int | None = None, key=str) -> DEGraph:
    """Graph with an edge {x, f(x)} for every labelled involution f and non-fixed x."""
    objects = list(objects)
    ids = [key(o) for o in objects]
    lookup = dict(zip(ids, objects))
    if len(lookup) != len(ids):
        raise GraphConstructionError("objects have colliding ids")
    if n is None:
        n = objects[0].size if objects else 0
    moves = {}
    for label, f in involutions.items():
        m = {}
        for vid, obj in zip(ids, objects):
            image = key(f(obj))
            if image not in lookup:
                raise GraphConstructionError(
                    f"involution {label} sends {vid} to {image}, outside the object set",
                    witness=(label, vid, image),
                )
            m[vid] = image
        for vid, image in m.items():
            if m[image] != vid:
                raise GraphConstructionError(
                    f"involution {label} is not self-inverse at {vid}", witness=(label, vid, image)
                )
        moves[label] = m
    descents = {vid: descent_fn(obj) for vid, obj in zip(ids, objects)}
    return DEGraph(n, ids, descents, moves, objects=lookup)


# ---------------------------------------------------------------- standard graphs


def sst_graph(gamma, queer: bool = True) -> DEGraph:
    """The graph on SST(gamma) with d_2..d_{n-1}, plus d_0 when ``queer``.

    Built graphs are cached and shared; treat them as read-only.
    """
    return _sst_graph(tuple(gamma), queer)


@cache
def _sst_graph(gamma, queer):
    n = sum(gamma)
    inv = {i: (lambda S, i=i: deg_sst(S, i)) for i in range(2, n)}
    if queer and n >= 2:
        inv[0] = queer_sst
    return build_graph(generate_sst(gamma), lambda S: S.descents, dict(sorted(inv.items())), n=n)


def syt_graph(*shapes) -> DEGraph:
    """The graph on the union of SYT(shape) for the given shapes with d_2..d_{n-1}."""
    objects = [T for lam in shapes for T in generate_syt(tuple(lam))]
    n = sum(shapes[0]) if shapes else 0
    inv = {i: (lambda T, i=i: deg_syt(T, i)) for i in range(2, n)}
    return build_graph(objects, lambda T: T.descents, inv, n=n)


def concat_graph(gamma, delta, queer: bool = True) -> DEGraph:
    """The graph on SST(gamma (x) delta) with psi_2..psi_{n-1}, plus psi_0 when ``queer``."""
    return _concat_graph(tuple(gamma), tuple(delta), queer)


@cache
def _concat_graph(gamma, delta, queer):
    n = sum(gamma) + sum(delta)
    inv = {i: (lambda T, i=i: deg_concat(T, i)) for i in range(2, n)}
    if queer and n >= 2:
        inv[0] = queer_concat
    return build_graph(
        generate_concat(gamma, delta), lambda T: T.descents, dict(sorted(inv.items())), n=n
    )


# ---------------------------------------------------------------- classes


def components(g: DEGraph, labels: Iterable[int]) -> list[frozenset]:
    """Connected components under the chosen labels, ordered by first vertex."""
    labels = list(labels)
    g._check_labels(labels)
    maps = [g.moves[label] for label in labels]
    seen = set()
    out = []
    for v in g.vertices:
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for m in maps:
                y = m[x]
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        out.append(frozenset(comp))
    return out


def restrict_descents(D, h: int, i: int, n: int | None = None) -> frozenset[int]:
    """Keep descents d with h <= d < i and shift them down by h-1."""
    if h < 1 or i < h or (n is not None and i > n):
        raise ValueError(f"invalid window h={h}, i={i}")
    return frozenset(d - h + 1 for d in D if h <= d < i)


def descent_multiset(cls, g: DEGraph) -> Counter:
    return Counter(g.descents[v] for v in cls)


def class_function(cls, g: DEGraph, degree: int | None = None, transform=None) -> QSymF:
    """Generating function of a class, optionally after transforming descent sets."""
    transform = transform or (lambda D: D)
    return QSymF.from_descents(g.n if degree is None else degree, (transform(g.descents[v]) for v in cls))


def max_special_edge_need(g: DEGraph, labels: Iterable[int], special: int) -> int:
    """Largest, over ordered pairs in a common component, of the fewest
    ``special`` edges on a connecting path (0/1 breadth-first search)."""
    labels = list(labels)
    g._check_labels(labels)
    if special not in labels:
        raise UnknownLabelError(f"special label {special} not among {labels}")
    others = [g.moves[lb] for lb in labels if lb != special]
    sp = g.moves[special]
    worst = 0
    for comp in components(g, labels):
        for src in comp:
            dist = {src: 0}
            dq = deque([src])
            while dq:
                x = dq.popleft()
                dx = dist[x]
                for m in others:
                    y = m[x]
                    if y not in dist or dist[y] > dx:
                        dist[y] = dx
                        dq.appendleft(y)
                y = sp[x]
                if y != x and (y not in dist or dist[y] > dx + 1):
                    dist[y] = dx + 1
                    dq.append(y)
            worst = max(worst, max(dist.values()))
    return worst


# ---------------------------------------------------------------- isomorphism


def _signature(g: DEGraph, v):
    return g.descents[v], tuple(g.moves[label][v] == v for label in g.labels)


def find_isomorphisms(g: DEGraph, h: DEGraph):
    """Yield every bijection preserving descent sets and each labelled edge relation."""
    if g.n != h.n or len(g) != len(h) or g.labels != h.labels:
        return
    if not g.vertices:
        yield {}
        return
    sig_h: dict = {}
    for w in h.vertices:
        sig_h.setdefault(_signature(h, w), []).append(w)
    sig_g = {v: _signature(g, v) for v in g.vertices}
    if sorted(Counter(sig_g.values()).values()) != sorted(len(ws) for ws in sig_h.values()) or any(
        s not in sig_h for s in sig_g.values()
    ):
        return
    labels = g.labels

    def extend(mapping, used, v, w):
        mapping, used = dict(mapping), set(used)
        queue = [(v, w)]
        while queue:
            x, y = queue.pop()
            if x in mapping:
                if mapping[x] != y:
                    return None
                continue
            if y in used or sig_g[x] != _signature(h, y):
                return None
            mapping[x] = y
            used.add(y)
            for label in labels:
                queue.append((g.moves[label][x], h.moves[label][y]))
        return mapping, used

    def search(mapping, used):
        v = next((x for x in g.vertices if x not in mapping), None)
        if v is None:
            yield mapping
            return
        for w in sig_h[sig_g[v]]:
            if w in used:
                continue
            step = extend(mapping, used, v, w)
            if step is not None:
                yield from search(*step)

    yield from search({}, set())


def is_descent_edge_isomorphic(g: DEGraph, h: DEGraph) -> tuple[bool, dict | None]:
    for witness in find_isomorphisms(g, h):
        return True, witness
    return False, None


def automorphisms(g: DEGraph) -> list[dict]:
    return list(find_isomorphisms(g, g))


# ---------------------------------------------------------------- export


def _dot_id(v) -> str:
    return '"' + str(v).replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: DEGraph) -> str:
    if not g.vertices:
        return "graph {}\n"
    lines = ["graph {"]
    for v in g.vertices:
        des = "{" + ",".join(str(d) for d in sorted(g.descents[v])) + "}"
        lines.append(f"  {_dot_id(v)} [label={_dot_id(f'{v} {des}')}];")
    for label in g.labels:
        for a, b in g.edges(label):
            lines.append(f'  {_dot_id(a)} -- {_dot_id(b)} [label="{label}", color={label_color(label)}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
