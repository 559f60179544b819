"""A small labeled 2-complex engine, plus two built-in complexes.

``build_g42`` assembles the graph formed by six labeled circles whose
marked points are merged in pairs; ``build_g52`` glues sixteen labeled
20-gons along the edge and vertex identification lists for the moduli
surface of five planar unit vectors.  ``surface_report`` answers the
closed/orientable/connected/genus questions for any complex.

The two built-in data sets are transcriptions: each gluing direction is
forced by the vertex classes of the identified edge pair, and an endpoint
class mismatch aborts construction (a transcription error, not a runtime
condition).
"""

from __future__ import annotations

import itertools
from collections import defaultdict, deque
from dataclasses import dataclass


@dataclass
class Complex2:
    """A labeled 2-complex.

    vertices: set of labels.
    edges: {label: (tail, head)} giving each edge a reference direction.
    faces: {label: ((edge, +1|-1), ...)} closed boundary walks; dir +1
    traverses the edge tail -> head.
    """

    vertices: set
    edges: dict
    faces: dict

    def __post_init__(self):
        for e, (a, b) in self.edges.items():
            if a not in self.vertices or b not in self.vertices:
                raise ValueError(f"edge {e!r} has undeclared endpoint")
        use = defaultdict(int)
        for f, walk in self.faces.items():
            if not walk:
                raise ValueError(f"face {f!r} has an empty boundary")
            for (e, d) in walk:
                if e not in self.edges:
                    raise ValueError(f"face {f!r} uses undeclared edge {e!r}")
                if d not in (1, -1):
                    raise ValueError(f"face {f!r} has direction {d!r}")
                use[e] += 1
            for (e1, d1), (e2, d2) in zip(walk, walk[1:] + walk[:1]):
                head1 = self.edges[e1][1 if d1 == 1 else 0]
                tail2 = self.edges[e2][0 if d2 == 1 else 1]
                if head1 != tail2:
                    raise ValueError(f"face {f!r} boundary is not a closed walk")
        if any(c > 2 for c in use.values()):
            raise ValueError("an edge appears more than twice in face boundaries")

    def traversal_ends(self, e, d):
        a, b = self.edges[e]
        return (a, b) if d == 1 else (b, a)


@dataclass(frozen=True)
class SurfaceReport:
    """Cell counts and the surface classification answers."""

    v: int
    e: int
    f: int
    euler: int
    closed_surface: bool
    orientable: bool
    connected: bool
    genus: object  # int when closed, orientable and connected, else None


def _edge_traversals(C: Complex2):
    tr = defaultdict(list)
    for f, walk in C.faces.items():
        for e, d in walk:
            tr[e].append((f, d))
    return tr


def _vertex_links_are_circles(C: Complex2) -> bool:
    # a corner of a face joins the edge-end it enters a vertex by to the
    # edge-end it leaves by; the link at v is a circle iff those corner
    # joints form a single cycle on the edge-ends at v
    corners = defaultdict(list)
    for f, walk in C.faces.items():
        for (e1, d1), (e2, d2) in zip(walk, walk[1:] + walk[:1]):
            v = C.traversal_ends(e1, d1)[1]
            end1 = (e1, 1 if d1 == 1 else 0)
            end2 = (e2, 0 if d2 == 1 else 1)
            corners[v].append((end1, end2))
    for v in C.vertices:
        cs = corners.get(v, [])
        if not cs:
            return False
        deg = defaultdict(int)
        adj = defaultdict(list)
        for idx, (a, b) in enumerate(cs):
            deg[a] += 1
            deg[b] += 1
            adj[a].append((b, idx))
            adj[b].append((a, idx))
        if any(d != 2 for d in deg.values()):
            return False
        used = set()
        stack = [cs[0][0]]
        seen = {cs[0][0]}
        while stack:
            x = stack.pop()
            for y, idx in adj[x]:
                if idx not in used:
                    used.add(idx)
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
        if len(used) != len(cs) or len(seen) != len(deg):
            return False
    return True


def _is_connected(C: Complex2) -> bool:
    cells = [("v", v) for v in C.vertices]
    if not cells:
        return True
    index = {c: i for i, c in enumerate(cells)}
    parent = list(range(len(cells)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(index[a]), find(index[b])
        if ra != rb:
            parent[ra] = rb

    for e, (a, b) in C.edges.items():
        union(("v", a), ("v", b))
    for f, walk in C.faces.items():
        for e, _ in walk:
            a, b = C.edges[e]
            union(("v", a), ("v", b))
    roots = {find(i) for i in range(len(cells))}
    return len(roots) == 1


def surface_report(C: Complex2) -> SurfaceReport:
    """Counts, Euler characteristic, and the surface questions.

    closed means every edge lies in exactly two face-boundary traversals
    and every vertex link is a single cycle; orientability is decided by
    propagating face orientations so that the two traversals of every
    edge disagree; genus = (2 - euler)/2 when closed, orientable and
    connected.
    """
    v, e, f = len(C.vertices), len(C.edges), len(C.faces)
    euler = v - e + f
    tr = _edge_traversals(C)
    closed = (f > 0 and all(len(tr[eid]) == 2 for eid in C.edges)
              and _vertex_links_are_circles(C))
    connected = _is_connected(C)
    orientable = False
    if closed:
        orientable = True
        orient = {}
        for start in C.faces:
            if start in orient:
                continue
            orient[start] = 1
            dq = deque([start])
            while dq and orientable:
                g = dq.popleft()
                for eid, d in C.faces[g]:
                    (f1, d1), (f2, d2) = tr[eid]
                    if f1 == f2:
                        # both traversals in one face: must be opposite
                        if d1 == d2:
                            orientable = False
                            break
                        continue
                    if f1 == g:
                        other, mine, od = f2, d1, d2
                    else:
                        other, mine, od = f1, d2, d1
                    # want orient[g]*mine == -orient[other]*od
                    need = -orient[g] * mine * od
                    if other not in orient:
                        orient[other] = need
                        dq.append(other)
                    elif orient[other] != need:
                        orientable = False
                        break
    genus = None
    if closed and orientable and connected:
        genus = (2 - euler) // 2
    return SurfaceReport(v, e, f, euler, closed, orientable, connected, genus)


def connected_components(C: Complex2):
    """Split a complex into its connected sub-complexes."""
    parent = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for v in C.vertices:
        parent[v] = v
    for e, (a, b) in C.edges.items():
        union(a, b)
    groups = defaultdict(set)
    for v in C.vertices:
        groups[find(v)].add(v)
    out = []
    for root, verts in sorted(groups.items(), key=lambda kv: str(kv[0])):
        edges = {e: ab for e, ab in C.edges.items() if ab[0] in verts}
        faces = {f: walk for f, walk in C.faces.items()
                 if C.edges[walk[0][0]][0] in verts}
        out.append(Complex2(set(verts), dict(edges), dict(faces)))
    return out


# ---------------------------------------------------------------------------
# built-in complex: the graph of four-vector planar frame classes


def build_g42() -> Complex2:
    """The graph glued from six marked circles: twelve vertices of degree
    four joined by twenty-four arcs (no 2-cells)."""
    marks = ("1", "i", "-1", "-i")
    # each merged vertex class lists its two (circle index p, sign, mark)
    classes = {
        "v1": (("2", "+", "1"), ("4", "-", "i")),
        "v2": (("2", "-", "1"), ("4", "+", "-i")),
        "v3": (("2", "+", "i"), ("3", "+", "i")),
        "v4": (("2", "-", "i"), ("3", "-", "i")),
        "v5": (("2", "+", "-1"), ("4", "-", "-i")),
        "v6": (("2", "-", "-1"), ("4", "+", "i")),
        "v7": (("2", "+", "-i"), ("3", "+", "-i")),
        "v8": (("2", "-", "-i"), ("3", "-", "-i")),
        "v9": (("3", "+", "1"), ("4", "+", "1")),
        "v10": (("3", "-", "1"), ("4", "-", "1")),
        "v11": (("3", "+", "-1"), ("4", "+", "-1")),
        "v12": (("3", "-", "-1"), ("4", "-", "-1")),
    }
    where = {}
    for label, members in classes.items():
        for m in members:
            if m in where:
                raise ValueError(f"marked point {m} listed twice")
            where[m] = label
    edges = {}
    for p in ("2", "3", "4"):
        for sign in ("+", "-"):
            for j in range(4):
                a = where[(p, sign, marks[j])]
                b = where[(p, sign, marks[(j + 1) % 4])]
                edges[f"tau{p}{sign}:arc{j}"] = (a, b)
    return Complex2(set(classes), edges, {})


# ---------------------------------------------------------------------------
# built-in complex: sixteen 20-gons glued into a closed surface


_T_A = (-1, -1, 1, 1)
_T_B = (-1, -1, 1, -1)
_T_C = (-1, -1, -1, -1)
_T_D = (-1, 1, -1, -1)
_T_E = (1, 1, -1, -1)
_T_I = (-1, -1, -1, 1)
_T_N = (1, -1, -1, -1)
_ID4 = (1, 1, 1, 1)

# raw vertex (letter on the 20-gon boundary) -> merged class (letter, sign twist)
_VERTEX_CLASS = {
    "a": ("a", _ID4), "b": ("b", _ID4), "c": ("c", _ID4), "d": ("d", _ID4),
    "e": ("e", _ID4), "f": ("f", _ID4),
    "g": ("d", _T_D), "h": ("e", _T_D),
    "i": ("b", (1, 1, -1, 1)), "j": ("c", (1, 1, 1, -1)),
    "k": ("a", _T_A), "l": ("b", _T_A),
    "m": ("c", _T_C), "n": ("d", _T_C),
    "o": ("e", _T_E), "p": ("f", _T_E),
    "q": ("d", (-1, 1, 1, 1)), "r": ("e", (1, -1, 1, 1)),
    "s": ("b", _T_B), "t": ("c", _T_B),
}

# raw edge letter -> merged class (letter, sign twist); ten classes per sign
_EDGE_CLASS = {
    "A": ("A", _ID4), "B": ("B", _ID4), "C": ("C", _ID4), "D": ("D", _ID4),
    "E": ("E", _ID4), "F": ("F", _ID4), "H": ("H", _ID4), "I": ("I", _ID4),
    "J": ("J", _ID4), "N": ("N", _ID4),
    "G": ("D", _T_D), "K": ("A", _T_A), "L": ("I", _T_I), "M": ("C", _T_C),
    "O": ("E", _T_E), "P": ("F", _T_E), "Q": ("N", _T_N), "R": ("H", _T_C),
    "S": ("B", _T_B), "T": ("J", _T_A),
}

_VSEQ = "abcdefghijklmnopqrst"
_ESEQ = "ABCDEFGHIJKLMNOPQRST"


def _sgn(eps) -> str:
    return "".join("+" if s > 0 else "-" for s in eps)


def _twist(t, eps):
    return tuple(a * b for a, b in zip(t, eps))


def build_g52() -> Complex2:
    """Sixteen 20-gon faces indexed by sign vectors in {+-1}^4, glued along
    the tabulated edge and vertex identifications.

    Each face's boundary walks its raw vertices a..t in order; raw edges
    A..T pair up into 160 classes under the listed sign twists, and raw
    vertices merge into 96 classes of sizes (2,4,4,4,4,2) per sign vector.
    The gluing direction of every identified edge pair is derived from the
    vertex classes of its endpoints; a mismatch raises ValueError.
    """
    all_eps = list(itertools.product((1, -1), repeat=4))

    def vlabel(letter, eps):
        name, tw = _VERTEX_CLASS[letter]
        return f"{name}|{_sgn(_twist(tw, eps))}"

    def elabel(letter, eps):
        name, tw = _EDGE_CLASS[letter]
        return f"{name}|{_sgn(_twist(tw, eps))}"

    vertices = set()
    edges = {}
    faces = {}
    for eps in all_eps:
        walk = []
        for i, L in enumerate(_ESEQ):
            tail = vlabel(_VSEQ[i], eps)
            head = vlabel(_VSEQ[(i + 1) % 20], eps)
            vertices.update((tail, head))
            ec = elabel(L, eps)
            if ec not in edges:
                edges[ec] = (tail, head)
                d = 1
            elif (tail, head) == edges[ec]:
                d = 1
            elif (head, tail) == edges[ec]:
                d = -1
            else:
                raise ValueError(
                    f"transcription check failed: edge {L}|{_sgn(eps)} has endpoint "
                    f"classes ({tail}, {head}) but its partner was recorded with "
                    f"{edges[ec]}")
            walk.append((ec, d))
        faces[f"B|{_sgn(eps)}"] = tuple(walk)
    return Complex2(vertices, edges, faces)
