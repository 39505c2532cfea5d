"""Interval-order covers, their certificate file format, and an independent checker.

:func:`verify_cover` deliberately re-derives out-neighbourhoods from scratch
and imports nothing from the search modules, so a cover produced by any of
them can be re-checked without trusting that code.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InputError, ParseError
from .graph import Edge, EdgeSubset, norm_edge


@dataclass(frozen=True)
class CoverMember:
    edges: EdgeSubset
    ordering: tuple[int, ...]
    tag: str = "explicit"  # catalog descriptor text, "perm r1 r2 ...", or "explicit"


@dataclass
class Cover:
    target: EdgeSubset
    members: list[CoverMember] = field(default_factory=list)

    @property
    def complete(self) -> bool:
        union: set[Edge] = set()
        for mem in self.members:
            union |= mem.edges
        return union == set(self.target)

    def __len__(self) -> int:
        return len(self.members)


def chain_holds(edges: Iterable[Edge], ordering: Sequence[int]) -> bool:
    """Nested out-neighbourhoods along ``ordering``; False on any malformed input."""
    pos: dict[int, int] = {}
    for i, v in enumerate(ordering):
        if v in pos:
            return False
        pos[v] = i
    outs: list[set[int]] = [set() for _ in ordering]
    for u, v in edges:
        if u == v or u not in pos or v not in pos:
            return False
        if pos[u] < pos[v]:
            outs[pos[u]].add(v)
        else:
            outs[pos[v]].add(u)
    return all(outs[i] <= outs[i - 1] for i in range(1, len(outs)))


def verify_cover(target: Iterable[Edge], cover: Cover) -> bool:
    """True iff every member satisfies the chain property and the members' union is ``target``."""
    want = {norm_edge(u, v) for u, v in target}
    union: set[Edge] = set()
    for mem in cover.members:
        edges = {norm_edge(u, v) for u, v in mem.edges}
        if not chain_holds(edges, mem.ordering):
            return False
        union |= edges
    return union == want


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------


def cover_to_text(cover: Cover) -> str:
    lines = [f"target-edges {len(cover.target)}"]
    for mem in cover.members:
        lines.append(f"member {mem.tag}")
        lines.append("ordering " + " ".join(map(str, mem.ordering)))
        lines.append(f"edges {len(mem.edges)}")
        lines.extend(f"{u} {v}" for u, v in sorted(mem.edges))
    lines.append(f"complete {'true' if cover.complete else 'false'}")
    return "\n".join(lines) + "\n"


def parse_cover(text: str, target: EdgeSubset | None = None) -> tuple[Cover, int, bool]:
    """Parse a cover file.

    Returns the cover (with ``target`` attached, or an empty target when not
    given), the announced target edge count, and the announced completeness flag.
    """
    lines = [(i, ln.strip()) for i, ln in enumerate(text.splitlines(), start=1)]
    lines = [(i, ln) for i, ln in lines if ln and not ln.startswith("#")]
    pos = 0

    def take(prefix: str) -> tuple[int, str]:
        nonlocal pos
        if pos >= len(lines):
            raise ParseError(f"unexpected end of file, expected {prefix!r}")
        lineno, ln = lines[pos]
        if not (ln == prefix or ln.startswith(prefix + " ")):
            raise ParseError(f"expected {prefix!r}, got {ln!r}", lineno)
        pos += 1
        return lineno, ln[len(prefix):].strip()

    def ints(lineno: int, s: str) -> list[int]:
        try:
            return [int(t) for t in s.split()]
        except ValueError:
            raise ParseError(f"non-integer token in {s!r}", lineno) from None

    lineno, rest = take("target-edges")
    counts = ints(lineno, rest)
    if len(counts) != 1:
        raise ParseError("target-edges takes one count", lineno)
    members: list[CoverMember] = []
    complete_flag = False
    while pos < len(lines):
        lineno, ln = lines[pos]
        if ln.startswith("complete"):
            flag = ln[len("complete"):].strip()
            if flag not in ("true", "false"):
                raise ParseError("complete must be true or false", lineno)
            complete_flag = flag == "true"
            pos += 1
            if pos != len(lines):
                raise ParseError("content after 'complete'", lines[pos][0])
            break
        _, tag = take("member")
        lineno, rest = take("ordering")
        ordering = tuple(ints(lineno, rest))
        lineno, rest = take("edges")
        cnt = ints(lineno, rest)
        if len(cnt) != 1 or cnt[0] < 0:
            raise ParseError("edges takes one non-negative count", lineno)
        edges = set()
        for _ in range(cnt[0]):
            if pos >= len(lines):
                raise ParseError("unexpected end of file inside an edge list")
            lineno, ln = lines[pos]
            pair = ints(lineno, ln)
            if len(pair) != 2 or pair[0] == pair[1]:
                raise ParseError(f"bad edge line {ln!r}", lineno)
            edges.add(norm_edge(*pair))
            pos += 1
        members.append(CoverMember(frozenset(edges), ordering, tag or "explicit"))
    else:
        raise ParseError("missing trailing 'complete' line")
    cover = Cover(frozenset(target) if target is not None else frozenset(), members)
    return cover, counts[0], complete_flag


def write_cover(cover: Cover, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(cover_to_text(cover))


def read_cover(path: str, target: EdgeSubset | None = None) -> tuple[Cover, int, bool]:
    with open(path, encoding="utf-8") as fh:
        return parse_cover(fh.read(), target)


def members_from(items: Iterable[tuple[EdgeSubset, Sequence[int], str]]) -> list[CoverMember]:
    return [CoverMember(frozenset(e), tuple(o), t) for e, o, t in items]


def require_complete(cover: Cover) -> Cover:
    if not verify_cover(cover.target, cover):
        raise InputError("cover failed verification")
    return cover
