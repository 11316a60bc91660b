"""Permutations of [k] = {1, ..., k}, permutation sets and finite group tables.

Permutations are 1-indexed: ``p.images[i - 1] == p(i)``.  Composition follows
function notation, ``compose(p, q)(i) == p(q(i))``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import CycleParseError, NoWitnessError, ResourceLimitError, SizeError

MAX_SYMMETRIC_K = 8
MAX_GAIN_K = 4096

SIGNED_NK = "signed-Nk"
SIGNED_ZK = "signed-Zk"


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of [k], stored as its image tuple."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        object.__setattr__(self, "images", images)
        k = len(images)
        if k == 0:
            raise SizeError("permutation must act on at least one point")
        if sorted(images) != list(range(1, k + 1)):
            raise SizeError(f"images {images} are not a bijection of [1..{k}]")

    @property
    def k(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images, 1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its least element, sorted."""
        seen = set()
        out = []
        for start in range(1, self.k + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def __str__(self):
        return print_cycles(self)

    def __repr__(self):
        return f"Permutation({print_cycles(self)!r}, k={self.k})"


def identity(k: int) -> Permutation:
    if k < 1:
        raise SizeError(f"k must be positive, got {k}")
    return Permutation(tuple(range(1, k + 1)))


def from_images(images: Sequence[int]) -> Permutation:
    return Permutation(tuple(images))


def parse_cycles(text: str, k: int) -> Permutation:
    """Parse cycle notation such as ``"(123)"``, ``"(12)(34)"`` or ``"id"``.

    Single-digit symbols may be written run together; larger symbols need
    commas (``"(1,12)"``) or whitespace inside the cycle.
    """
    if k < 1:
        raise SizeError(f"k must be positive, got {k}")
    stripped = text.strip()
    if stripped in ("id", "()", ""):
        if stripped == "":
            raise CycleParseError("empty permutation string", 0)
        return identity(k)

    images = list(range(1, k + 1))
    used: set[int] = set()
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch != "(":
            raise CycleParseError(f"expected '(' but found {ch!r}", pos)
        close = text.find(")", pos + 1)
        if close < 0:
            raise CycleParseError("unclosed '('", pos)
        inner = text[pos + 1:close]
        if "(" in inner:
            raise CycleParseError("nested '('", pos + 1 + inner.index("("))
        symbols = _cycle_symbols(inner, pos + 1, k)
        for sym, sym_pos in symbols:
            if sym in used:
                raise CycleParseError(f"symbol {sym} repeated", sym_pos)
            used.add(sym)
        cyc = [s for s, _ in symbols]
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            images[a - 1] = b
        pos = close + 1
    return Permutation(tuple(images))


def _cycle_symbols(inner: str, offset: int, k: int) -> list[tuple[int, int]]:
    if "," in inner:
        tokens = []
        start = 0
        for piece in inner.split(","):
            lead = len(piece) - len(piece.lstrip())
            tokens.append((piece.strip(), offset + start + lead))
            start += len(piece) + 1
    elif inner.strip() and any(c.isspace() for c in inner.strip()):
        tokens = []
        i = 0
        for piece in inner.split():
            i = inner.index(piece, i)
            tokens.append((piece, offset + i))
            i += len(piece)
    else:
        tokens = [(c, offset + i) for i, c in enumerate(inner) if not c.isspace()]
    if not tokens:
        raise CycleParseError("empty cycle", offset)
    out = []
    for tok, tok_pos in tokens:
        if not tok.isdigit():
            raise CycleParseError(f"invalid symbol {tok!r}", tok_pos)
        value = int(tok)
        if not 1 <= value <= k:
            raise CycleParseError(f"symbol {value} outside [1..{k}]", tok_pos)
        out.append((value, tok_pos))
    return out


def print_cycles(p: Permutation) -> str:
    cycles = p.cycles()
    if not cycles:
        return "id"
    sep = "," if p.k > 9 else ""
    return "".join("(" + sep.join(str(x) for x in c) + ")" for c in cycles)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return ``p o q``: apply q first, then p."""
    if p.k != q.k:
        raise SizeError(f"cannot compose permutations of sizes {p.k} and {q.k}")
    return Permutation(tuple(p(x) for x in q.images))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.k
    for i, x in enumerate(p.images, 1):
        inv[x - 1] = i
    return Permutation(tuple(inv))


def conjugate(sigma: Permutation, pi: Permutation) -> Permutation:
    """``pi sigma pi^-1``."""
    return compose(pi, compose(sigma, inverse(pi)))


@dataclass(frozen=True)
class PermSet:
    """A finite set of permutations of a common [k]."""

    k: int
    members: frozenset[Permutation]

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        if self.k < 1:
            raise SizeError(f"k must be positive, got {self.k}")
        for p in self.members:
            if p.k != self.k:
                raise SizeError(f"member {p} has size {p.k}, expected {self.k}")

    @classmethod
    def of(cls, perms: Iterable[Permutation | str], k: int | None = None) -> "PermSet":
        """Build a set from permutations or cycle strings (strings need ``k``)."""
        items = []
        for p in perms:
            if isinstance(p, str):
                if k is None:
                    raise SizeError("k is required to parse cycle strings")
                p = parse_cycles(p, k)
            items.append(p)
        if k is None:
            if not items:
                raise SizeError("k is required for an empty set")
            k = items[0].k
        return cls(k, frozenset(items))

    @property
    def contains_id(self) -> bool:
        return identity(self.k) in self.members

    def __contains__(self, p) -> bool:
        return p in self.members

    def __iter__(self) -> Iterator[Permutation]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __le__(self, other: "PermSet") -> bool:
        return self.k == other.k and self.members <= other.members

    def __str__(self):
        return "{" + ", ".join(print_cycles(p) for p in self) + "}"


def conjugate_set(S: PermSet, pi: Permutation) -> PermSet:
    if pi.k != S.k:
        raise SizeError(f"conjugating permutation has size {pi.k}, set has {S.k}")
    return PermSet(S.k, frozenset(conjugate(s, pi) for s in S.members))


_S4_REPS = {
    (2,): "(12)",
    (2, 2): "(12)(34)",
    (3,): "(123)",
    (4,): "(1234)",
}


def conjugacy_class_rep(p: Permutation) -> Permutation:
    """Canonical representative of p's conjugacy class in S_4."""
    if p.k != 4:
        raise SizeError(f"expected a permutation of [4], got size {p.k}")
    if p.is_identity():
        raise NoWitnessError("the identity has no non-trivial class representative")
    return parse_cycles(_S4_REPS[p.cycle_type()], 4)


def conjugator(p: Permutation, q: Permutation) -> Permutation:
    """Some ``pi`` with ``pi p pi^-1 == q``; p and q must share cycle type."""
    if p.k != q.k:
        raise SizeError(f"sizes differ: {p.k} and {q.k}")
    if p.cycle_type() != q.cycle_type():
        raise ValueError(f"{p} and {q} are not conjugate")

    def layout(r: Permutation) -> list[int]:
        cyc = sorted(r.cycles(), key=lambda c: (-len(c), c))
        moved = {x for c in cyc for x in c}
        return [x for c in cyc for x in c] + [x for x in range(1, r.k + 1) if x not in moved]

    # pi maps p's cycle structure position-by-position onto q's
    images = [0] * p.k
    for a, b in zip(layout(p), layout(q)):
        images[a - 1] = b
    return Permutation(tuple(images))


def symmetric_group(k: int) -> PermSet:
    if k < 1:
        raise SizeError(f"k must be positive, got {k}")
    if k > MAX_SYMMETRIC_K:
        raise ResourceLimitError(f"symmetric_group capped at k <= {MAX_SYMMETRIC_K}, got {k}")
    return PermSet(k, frozenset(Permutation(t) for t in itertools.permutations(range(1, k + 1))))


def cyclic_shift(k: int, a: int) -> Permutation:
    """i -> ((i - 1 + a) mod k) + 1."""
    if k < 1:
        raise SizeError(f"k must be positive, got {k}")
    return Permutation(tuple(((i - 1 + a) % k) + 1 for i in range(1, k + 1)))


def cyclic_shift_set(k: int) -> PermSet:
    return PermSet(k, frozenset(cyclic_shift(k, a) for a in range(k)))


def negation_permutation(k: int, mode: str) -> Permutation:
    """(12)(34)...((2q-1)(2q)) with q = floor(k/2) (signed-Nk) or ceil(k/2) - 1 (signed-Zk)."""
    if k < 1:
        raise SizeError(f"k must be positive, got {k}")
    if mode == SIGNED_NK:
        q = k // 2
    elif mode == SIGNED_ZK:
        q = (k + 1) // 2 - 1
    else:
        raise ValueError(f"unknown mode {mode!r}; expected {SIGNED_NK!r} or {SIGNED_ZK!r}")
    images = list(range(1, k + 1))
    for j in range(q):
        images[2 * j], images[2 * j + 1] = 2 * j + 2, 2 * j + 1
    return Permutation(tuple(images))


@dataclass(frozen=True)
class GroupTable:
    """A finite group given by its multiplication table over indices 0..n-1.

    ``product[x][y]`` is the index of ``x . y``.  The index of an element
    doubles as the fixed one-to-one correspondence with [n] (index + 1).
    """

    n: int
    product: tuple[tuple[int, ...], ...]
    identity_index: int
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        table = tuple(tuple(int(v) for v in row) for row in self.product)
        object.__setattr__(self, "product", table)
        n = self.n
        if n < 1 or len(table) != n or any(len(row) != n for row in table):
            raise SizeError(f"product table must be {n} x {n}")
        if any(not 0 <= v < n for row in table for v in row):
            raise ValueError("product table entries out of range")
        e = self.identity_index
        if not 0 <= e < n or any(table[e][x] != x or table[x][e] != x for x in range(n)):
            raise ValueError(f"index {e} is not a two-sided identity")
        for x in range(n):
            if not any(table[x][y] == e and table[y][x] == e for y in range(n)):
                raise ValueError(f"element {x} has no inverse")
        for x in range(n):
            for y in range(n):
                xy = table[x][y]
                for z in range(n):
                    if table[xy][z] != table[x][table[y][z]]:
                        raise ValueError(f"not associative at ({x}, {y}, {z})")

    def mul(self, x: int, y: int) -> int:
        return self.product[x][y]

    def inv(self, x: int) -> int:
        return next(y for y in range(self.n) if self.product[x][y] == self.identity_index)

    @classmethod
    def cyclic(cls, n: int) -> "GroupTable":
        return cls(n, tuple(tuple((x + y) % n for y in range(n)) for x in range(n)), 0,
                   tuple(str(x) for x in range(n)))

    @classmethod
    def from_permutations(cls, perms: Sequence[Permutation]) -> "GroupTable":
        """Table of a permutation group listed explicitly, product ``x.y = compose(x, y)``."""
        perms = list(perms)
        index = {p: i for i, p in enumerate(perms)}
        if len(index) != len(perms):
            raise ValueError("duplicate group elements")
        try:
            table = tuple(tuple(index[compose(p, q)] for q in perms) for p in perms)
        except KeyError:
            raise ValueError("permutations are not closed under composition") from None
        e = index.get(identity(perms[0].k))
        if e is None:
            raise ValueError("identity missing from group")
        return cls(len(perms), table, e, tuple(print_cycles(p) for p in perms))

    @classmethod
    def direct_product(cls, g: "GroupTable", h: "GroupTable") -> "GroupTable":
        pairs = [(x, y) for x in range(g.n) for y in range(h.n)]
        idx = {p: i for i, p in enumerate(pairs)}
        table = tuple(
            tuple(idx[(g.mul(a, c), h.mul(b, d))] for (c, d) in pairs) for (a, b) in pairs
        )
        return cls(len(pairs), table, idx[(g.identity_index, h.identity_index)])


def gain_encode(G: GroupTable, k: int, pi_index: int) -> Permutation:
    """Encode a group element as a permutation of [k*n + 1].

    Point ``n*j + r`` (block j, 1 <= r <= n) goes to ``n*j + tau(tau^-1(r) . pi)``
    with ``tau(x) = x + 1``; the last point ``k*n + 1`` is fixed.  Each block is
    acted on by right multiplication with ``pi``, so
    ``gain_encode(g.h) == compose(gain_encode(h), gain_encode(g))``.
    """
    if k < 1:
        raise SizeError(f"k must be positive, got {k}")
    if not 0 <= pi_index < G.n:
        raise ValueError(f"element index {pi_index} outside group of order {G.n}")
    size = k * G.n + 1
    if size > MAX_GAIN_K:
        raise ResourceLimitError(f"encoded alphabet size {size} exceeds {MAX_GAIN_K}")
    n = G.n
    images = []
    for j in range(k):
        for r in range(1, n + 1):
            images.append(n * j + G.mul(r - 1, pi_index) + 1)
    images.append(size)
    return Permutation(tuple(images))
