"""Simplicial complexes on integer-labeled ground sets.

A complex is stored by its facets (inclusion-maximal faces).  The ground
set may strictly contain the union of the facets so that deletions and
restrictions can keep their original labels.  The complex {()} consisting
of the empty face alone is the default "empty" value; the void complex
(no faces at all) exists as a flagged special case and is rejected by the
homology and criteria operations.
"""

from __future__ import annotations

from itertools import combinations

from .graphs import Graph, maximal_independent_sets

__all__ = [
    "SimplicialComplex",
    "simplex",
    "independence_complex",
    "parse_facets",
    "faces",
    "f_vector",
    "link",
    "delete_set",
    "restrict",
    "star",
    "core_vertices",
    "core_of",
    "cone_apexes",
    "is_cone",
    "join",
    "reduced_euler_characteristic",
    "is_pure",
]


def _as_face(f) -> tuple[int, ...]:
    t = tuple(sorted(f))
    if len(set(t)) != len(t):
        raise ValueError(f"repeated vertex in face {t}")
    return t


def _maximal_only(cands) -> tuple[tuple[int, ...], ...]:
    sets = sorted({frozenset(c) for c in cands}, key=len, reverse=True)
    kept: list[frozenset] = []
    for s in sets:
        if not any(s <= k for k in kept):
            kept.append(s)
    return tuple(sorted(tuple(sorted(s)) for s in kept))


class SimplicialComplex:
    """Facet-based simplicial complex with memoized face enumeration."""

    __slots__ = ("vertices", "facets", "_faces")

    def __init__(self, vertices, facets, validate: bool = True):
        vs = tuple(sorted(set(vertices)))
        fs = tuple(sorted(_as_face(f) for f in facets))
        if validate:
            vset = set(vs)
            sets = [frozenset(f) for f in fs]
            for i, s in enumerate(sets):
                if not s <= vset:
                    raise ValueError(f"facet {fs[i]} not inside the ground set")
                for j, t in enumerate(sets):
                    if i != j and s <= t:
                        raise ValueError(f"facet {fs[i]} contained in {fs[j]}")
        self.vertices = vs
        self.facets = fs
        self._faces = None

    @classmethod
    def from_faces(cls, generators, vertices=()) -> "SimplicialComplex":
        """Build from generating faces; non-maximal generators are absorbed.

        With no generators the result is {()}, the complex of the empty
        face alone.
        """
        gens = [_as_face(f) for f in generators]
        ground = set(vertices)
        for f in gens:
            ground.update(f)
        facets = _maximal_only(gens) if gens else ((),)
        return cls(tuple(ground), facets, validate=False)

    @classmethod
    def void(cls, vertices=()) -> "SimplicialComplex":
        """The void complex: no faces at all, not even the empty one."""
        return cls(vertices, (), validate=False)

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> int:
        if self.is_void:
            raise ValueError("the void complex has no dimension")
        return max(len(f) for f in self.facets) - 1

    def faces(self) -> tuple[tuple[int, ...], ...]:
        """Every face including (), sorted by (dimension, lexicographic)."""
        if self._faces is None:
            if self.is_void:
                self._faces = ()
            else:
                seen = {()}
                for fac in self.facets:
                    for k in range(1, len(fac) + 1):
                        seen.update(combinations(fac, k))
                self._faces = tuple(sorted(seen, key=lambda f: (len(f), f)))
        return self._faces

    def __contains__(self, f) -> bool:
        try:
            t = _as_face(f)
        except ValueError:
            return False
        return any(set(t) <= set(fac) for fac in self.facets)

    def __eq__(self, other):
        return (
            isinstance(other, SimplicialComplex)
            and self.vertices == other.vertices
            and self.facets == other.facets
        )

    def __hash__(self):
        return hash((self.vertices, self.facets))

    def __repr__(self):
        if self.is_void:
            return f"SimplicialComplex.void({list(self.vertices)!r})"
        return (
            f"SimplicialComplex(vertices={list(self.vertices)!r}, "
            f"facets={[list(f) for f in self.facets]!r})"
        )


def simplex(labels) -> SimplicialComplex:
    """The full simplex on the given labels ({()} when labels is empty)."""
    face = _as_face(labels)
    return SimplicialComplex(face, (face,), validate=False)


def independence_complex(g: Graph) -> SimplicialComplex:
    """The complex of independent sets of g, on the ground set 0..n-1."""
    return SimplicialComplex(
        range(g.n), tuple(maximal_independent_sets(g)), validate=False
    )


def parse_facets(text: str) -> SimplicialComplex:
    """Parse the facet-list text format: one face per line, whitespace
    separated nonnegative integer labels, lines starting with '#' ignored.
    Non-maximal lines are absorbed; no lines at all gives {()}.
    """
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        ln = raw.strip()
        if not ln or ln.startswith("#"):
            continue
        try:
            labels = [int(tok) for tok in ln.split()]
        except ValueError:
            raise ValueError(f"line {lineno}: malformed facet line {ln!r}") from None
        if any(x < 0 for x in labels):
            raise ValueError(f"line {lineno}: negative label in {ln!r}")
        if len(set(labels)) != len(labels):
            raise ValueError(f"line {lineno}: duplicate vertex in {ln!r}")
        gens.append(tuple(labels))
    return SimplicialComplex.from_faces(gens)


def faces(c: SimplicialComplex) -> tuple[tuple[int, ...], ...]:
    return c.faces()


def f_vector(c: SimplicialComplex) -> tuple[int, ...]:
    """Face counts (f_-1, f_0, ..., f_(dim)); (0,) for the void complex."""
    if c.is_void:
        return (0,)
    counts = [0] * (c.dim + 2)
    for f in c.faces():
        counts[len(f)] += 1
    return tuple(counts)


def link(c: SimplicialComplex, f) -> SimplicialComplex:
    """Faces H disjoint from f with H union f in c, on the ground V minus f."""
    t = _as_face(f)
    fs = set(t)
    sub = [fac for fac in c.facets if fs <= set(fac)]
    if not sub:
        raise ValueError(f"{t} is not a face")
    new_facets = tuple(tuple(x for x in fac if x not in fs) for fac in sub)
    new_vertices = tuple(x for x in c.vertices if x not in fs)
    return SimplicialComplex(new_vertices, new_facets, validate=False)


def delete_set(c: SimplicialComplex, s) -> SimplicialComplex:
    """Faces avoiding s, on the ground set V minus s."""
    drop = set(_require_subset(c, s))
    if c.is_void:
        return SimplicialComplex.void(x for x in c.vertices if x not in drop)
    cands = {tuple(x for x in fac if x not in drop) for fac in c.facets}
    return SimplicialComplex(
        (x for x in c.vertices if x not in drop),
        _maximal_only(cands),
        validate=False,
    )


def restrict(c: SimplicialComplex, s) -> SimplicialComplex:
    """Faces contained in s, on the ground set s."""
    keep = set(_require_subset(c, s))
    if c.is_void:
        return SimplicialComplex.void(keep)
    cands = {tuple(x for x in fac if x in keep) for fac in c.facets}
    return SimplicialComplex(keep, _maximal_only(cands), validate=False)


def _require_subset(c: SimplicialComplex, s) -> tuple[int, ...]:
    t = tuple(sorted(set(s)))
    ground = set(c.vertices)
    for x in t:
        if x not in ground:
            raise ValueError(f"vertex {x} not in the ground set")
    return t


def star(c: SimplicialComplex, v: int) -> SimplicialComplex:
    """Faces F with F union {v} still a face; void if v is in no face."""
    if v not in c.vertices:
        raise ValueError(f"vertex {v} not in the ground set")
    sub = tuple(fac for fac in c.facets if v in fac)
    if not sub:
        return SimplicialComplex.void(c.vertices)
    return SimplicialComplex(c.vertices, sub, validate=False)


def core_vertices(c: SimplicialComplex) -> tuple[int, ...]:
    """Ground vertices whose star is a proper subcomplex."""
    return tuple(
        x for x in c.vertices if not all(x in fac for fac in c.facets)
    )


def cone_apexes(c: SimplicialComplex) -> tuple[int, ...]:
    """Vertices v with star(c, v) = c, i.e. v lies in every facet."""
    core = set(core_vertices(c))
    return tuple(x for x in c.vertices if x not in core)


def is_cone(c: SimplicialComplex) -> bool:
    return bool(cone_apexes(c))


def core_of(c: SimplicialComplex) -> SimplicialComplex:
    """Restriction of c to the vertices whose star is proper."""
    if c.is_void:
        return c
    return restrict(c, core_vertices(c))


def join(c: SimplicialComplex, d: SimplicialComplex) -> SimplicialComplex:
    """Join of two complexes, faces F union H.

    Overlapping ground sets are resolved by shifting every label of d up
    by max(V(c)) + 1, mirroring the disjoint union of graphs; already
    disjoint ground sets keep their labels.
    """
    if set(c.vertices) & set(d.vertices):
        shift = max(c.vertices) + 1
        d = SimplicialComplex(
            (x + shift for x in d.vertices),
            (tuple(x + shift for x in f) for f in d.facets),
            validate=False,
        )
    vertices = c.vertices + d.vertices
    if c.is_void or d.is_void:
        return SimplicialComplex.void(vertices)
    new_facets = tuple(
        sorted(tuple(sorted(fc + fd)) for fc in c.facets for fd in d.facets)
    )
    return SimplicialComplex(vertices, new_facets, validate=False)


def reduced_euler_characteristic(c: SimplicialComplex) -> int:
    """Alternating face-count sum over all faces: sum of (-1)^(|F|-1)."""
    if c.is_void:
        raise ValueError("the void complex has no Euler characteristic")
    return sum(1 if len(f) % 2 else -1 for f in c.faces())


def is_pure(c: SimplicialComplex) -> bool:
    """True iff all facets share one dimension (vacuously true when void)."""
    return len({len(f) for f in c.facets}) <= 1
