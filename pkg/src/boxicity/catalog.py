"""Closed-form maximal interval-order subgraphs of L(K_n), n >= 5.

Vertices of L(K_n) are the pairs ``(u, v)``, ``u < v``, in lexicographic
order, so vertex ``i`` of :func:`lkn` is the ``i``-th 2-subset.  Edge sets are
built from five primitives:

``Q(v)``                all pairs of base edges at ``v`` (a clique of L(K_n))
``Delta(u, v)``         the star of ``uv`` in L(K_n)
``DeltaMinus(u, v)``    the part of that star through ``u`` only
``CliqueSet(U)``        the edges of L(K_n[U])
``KTripleMinus(u,v,w)`` ``{(uv, uw), (uv, vw)}``

and every maximal member is one of four shapes, named by a
:class:`CatalogDescriptor`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterator

from .errors import InputError
from .graph import EdgeSubset, Graph, complete_graph, line_graph, norm_edge
from .interval_order import ChainCertificate, EdgeIndex, build_gsigma, keep_maximal

KINDS = ("A", "B", "CF", "CF'")


@lru_cache(maxsize=None)
def lkn(n: int) -> Graph:
    return line_graph(complete_graph(n))


@lru_cache(maxsize=None)
def pair_ids(n: int) -> dict[tuple[int, int], int]:
    return {p: i for i, p in enumerate(combinations(range(n), 2))}


@lru_cache(maxsize=None)
def lkn_index(n: int) -> EdgeIndex:
    return EdgeIndex(lkn(n))


def _vid(n: int, a: int, b: int) -> int:
    return pair_ids(n)[norm_edge(a, b)]


def _link(n: int, e: tuple[int, int], f: tuple[int, int]) -> tuple[int, int]:
    return norm_edge(_vid(n, *e), _vid(n, *f))


# ---------------------------------------------------------------------------
# primitives
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Primitive:
    name: str  # "Q", "Delta", "DeltaMinus", "CliqueSet", "KTripleMinus"
    args: tuple[int, ...]


_ARITY = {"Q": 1, "Delta": 2, "DeltaMinus": 2, "KTripleMinus": 3}


def _check_args(n: int, args: tuple[int, ...]) -> None:
    if len(set(args)) != len(args):
        raise InputError(f"repeated primitive argument in {args}")
    for x in args:
        if not 0 <= x < n:
            raise InputError(f"vertex {x} out of range for n={n}")


def primitive_edge_set(n: int, p: Primitive) -> EdgeSubset:
    if n < 3:
        raise InputError("primitives are defined for n >= 3")
    if p.name in _ARITY and len(p.args) != _ARITY[p.name]:
        raise InputError(f"{p.name} takes {_ARITY[p.name]} arguments")
    _check_args(n, p.args)
    others = lambda *xs: [x for x in range(n) if x not in xs]  # noqa: E731
    if p.name == "Q":
        (v,) = p.args
        return frozenset(_link(n, (v, x), (v, y)) for x, y in combinations(others(v), 2))
    if p.name == "Delta":
        u, v = p.args
        return frozenset(_link(n, (u, v), (z, x)) for z in (u, v) for x in others(u, v))
    if p.name == "DeltaMinus":
        u, v = p.args
        return frozenset(_link(n, (u, v), (u, x)) for x in others(u, v))
    if p.name == "CliqueSet":
        pairs = list(combinations(sorted(p.args), 2))
        return frozenset(
            _link(n, e, f) for e, f in combinations(pairs, 2) if set(e) & set(f)
        )
    if p.name == "KTripleMinus":
        u, v, w = p.args
        return frozenset({_link(n, (u, v), (u, w)), _link(n, (u, v), (v, w))})
    raise InputError(f"unknown primitive {p.name!r}")


def Q(v: int) -> Primitive:
    return Primitive("Q", (v,))


def Delta(u: int, v: int) -> Primitive:
    return Primitive("Delta", (u, v))


def DeltaMinus(u: int, v: int) -> Primitive:
    return Primitive("DeltaMinus", (u, v))


def CliqueSet(*us: int) -> Primitive:
    return Primitive("CliqueSet", tuple(us))


def KTripleMinus(u: int, v: int, w: int) -> Primitive:
    return Primitive("KTripleMinus", (u, v, w))


# ---------------------------------------------------------------------------
# descriptors
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class CatalogDescriptor:
    kind: str
    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise InputError(f"unknown catalog kind {self.kind!r}")
        want = 5 if self.kind == "A" else 4
        if len(self.vertices) != want:
            raise InputError(f"kind {self.kind} takes {want} vertices")
        if len(set(self.vertices)) != want:
            raise InputError(f"descriptor vertices must be distinct: {self.vertices}")

    def __str__(self) -> str:
        return " ".join([self.kind, *map(str, self.vertices)])

    @classmethod
    def parse(cls, text: str) -> CatalogDescriptor:
        parts = text.split()
        if not parts:
            raise InputError("empty descriptor")
        try:
            return cls(parts[0], tuple(int(x) for x in parts[1:]))
        except ValueError:
            raise InputError(f"malformed descriptor {text!r}") from None

    def canonical(self) -> CatalogDescriptor:
        """The representative used in :func:`enumerate_catalog`.

        Type A is unchanged by exchanging the pairs ``(b, c)`` and ``(d, e)``,
        type B by exchanging ``b`` and ``d``; both are normalised to the
        lexicographically smaller argument tuple.  The two type-C shapes have
        no argument symmetry.
        """
        if self.kind == "A":
            a, b, c, d, e = self.vertices
            return CatalogDescriptor("A", (a, *min((b, c, d, e), (d, e, b, c))))
        if self.kind == "B":
            a, b, c, d = self.vertices
            return CatalogDescriptor("B", (a, min(b, d), c, max(b, d)))
        return self


def TypeA(a: int, b: int, c: int, d: int, e: int) -> CatalogDescriptor:
    return CatalogDescriptor("A", (a, b, c, d, e))


def TypeB(a: int, b: int, c: int, d: int) -> CatalogDescriptor:
    return CatalogDescriptor("B", (a, b, c, d))


def TypeCF(a: int, b: int, c: int, d: int) -> CatalogDescriptor:
    return CatalogDescriptor("CF", (a, b, c, d))


def TypeCFp(a: int, b: int, c: int, d: int) -> CatalogDescriptor:
    return CatalogDescriptor("CF'", (a, b, c, d))


def formula(d: CatalogDescriptor) -> list[Primitive]:
    """The union of primitives making up a catalog member."""
    if d.kind == "A":
        a, b, c, dd, e = d.vertices
        return [Q(a), Delta(a, b), Delta(a, dd), CliqueSet(a, b, c), CliqueSet(a, dd, e)]
    a, b, c, dd = d.vertices
    if d.kind == "B":
        return [Delta(a, b), Delta(a, dd), CliqueSet(a, b, c, dd)]
    second = Delta(a, dd) if d.kind == "CF" else Delta(b, c)
    return [
        Delta(a, b),
        second,
        DeltaMinus(a, c),
        CliqueSet(a, b, c),
        CliqueSet(a, b, dd),
        KTripleMinus(a, dd, c),
        KTripleMinus(b, c, dd),
    ]


def _check_descriptor(n: int, d: CatalogDescriptor) -> None:
    if n < 5:
        raise InputError("the closed-form catalog needs n >= 5")
    for x in d.vertices:
        if not 0 <= x < n:
            raise InputError(f"descriptor vertex {x} out of range for n={n}")


def catalog_edge_set(n: int, d: CatalogDescriptor) -> EdgeSubset:
    _check_descriptor(n, d)
    out: set[tuple[int, int]] = set()
    for p in formula(d):
        out |= primitive_edge_set(n, p)
    return frozenset(out)


def expected_size(kind: str, n: int) -> int:
    if kind == "A":
        return (n + 2) * (n - 1) // 2
    if kind == "B":
        return 4 * (n - 1)
    return 5 * (n - 2)


def witness_ordering(n: int, d: CatalogDescriptor) -> list[int]:
    """A vertex ordering of L(K_n) whose G^σ is exactly the member ``d``.

    Type A opens with ``ab, ac``, then the remaining base edges at ``a`` other
    than ``ad, ae``, then ``de`` and the rest of the base edges at ``d``.
    Type B opens with the matching ``ab, cd`` followed by ``ac, bd``; the C
    types open with the path ``ab, ac, bd, cd``.  In each case the prefix is
    then continued by the neighbours of ``ad`` (or of ``bc`` for CF').
    """
    _check_descriptor(n, d)
    v = lambda x, y: _vid(n, x, y)  # noqa: E731
    if d.kind == "A":
        a, b, c, dd, e = d.vertices
        seq = [v(a, b), v(a, c)]
        seq += [v(a, x) for x in range(n) if x not in (a, b, c, dd, e)]
        seq.append(v(dd, e))
        seq += [v(dd, x) for x in range(n) if x not in (a, dd, e)]
        seq.append(v(a, e))
        pivot = (a, dd)
    else:
        a, b, c, dd = d.vertices
        if d.kind == "B":
            seq = [v(a, b), v(c, dd), v(a, c), v(b, dd)]
        else:
            seq = [v(a, b), v(a, c), v(b, dd), v(c, dd)]
        pivot = (a, dd) if d.kind in ("B", "CF") else (b, c)
        p, q = pivot
        seq += [v(p, x) for x in range(n) if x not in (p, q) and v(p, x) not in seq]
        seq += [v(q, x) for x in range(n) if x not in (p, q) and v(q, x) not in seq]
    seq.append(v(*pivot))
    return seq


def catalog_certificate(n: int, d: CatalogDescriptor) -> tuple[EdgeSubset, ChainCertificate]:
    """G^σ for the witness ordering of ``d``; its edge set equals the closed form."""
    return build_gsigma(lkn(n), witness_ordering(n, d))


def iter_descriptors(n: int) -> Iterator[CatalogDescriptor]:
    """Every canonical descriptor over ``range(n)``, in sorted order."""
    if n < 5:
        raise InputError("the closed-form catalog needs n >= 5")
    for a, b, c, d, e in permutations(range(n), 5):
        if (b, c, d, e) <= (d, e, b, c):
            yield CatalogDescriptor("A", (a, b, c, d, e))
    for a, b, c, d in permutations(range(n), 4):
        if b < d:
            yield CatalogDescriptor("B", (a, b, c, d))
    for kind in ("CF", "CF'"):
        for t in permutations(range(n), 4):
            yield CatalogDescriptor(kind, t)


def enumerate_catalog_masks(n: int) -> dict[int, CatalogDescriptor]:
    """Maximal members as L(K_n) edge bitmasks, each tagged with its first descriptor."""
    idx = lkn_index(n)
    first: dict[int, CatalogDescriptor] = {}
    for d in iter_descriptors(n):
        m = idx.mask(catalog_edge_set(n, d))
        first.setdefault(m, d)
    return {m: first[m] for m in keep_maximal(first)}


def enumerate_catalog(n: int) -> list[tuple[CatalogDescriptor, EdgeSubset]]:
    idx = lkn_index(n)
    tagged = enumerate_catalog_masks(n)
    return sorted((d, idx.subset(m)) for m, d in tagged.items())


def core_triple(d: CatalogDescriptor) -> tuple[int, int, int]:
    """``(x, y, z)`` with ``Delta(x, y) ∪ Delta(x, z)`` contained in the member.

    Two members whose core triples are disjoint have disjoint cores, and
    overlapping triples force a shared core edge.
    """
    if d.kind == "A":
        a, b, _, dd, _ = d.vertices
        return (a, b, dd)
    a, b, c, dd = d.vertices
    if d.kind == "CF'":
        return (b, a, c)
    return (a, b, dd)


def core_edge_set(n: int, d: CatalogDescriptor) -> EdgeSubset:
    x, y, z = core_triple(d)
    return primitive_edge_set(n, Delta(x, y)) | primitive_edge_set(n, Delta(x, z))
