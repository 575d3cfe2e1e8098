"""Type-A root combinatorics.

A positive root of A_n is a consecutive sum of simple roots; its
coefficient vector over the simple basis is a contiguous block of 1s.
The block [p, q] corresponds to e_p - e_{q+1} in the ambient space and
therefore to matrix position (p, q+1) of an (n+1) x (n+1) matrix, which
is where the root's variable sits in the symmetric Lax matrix.

Everything here is immutable and pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence


class InvalidRankError(ValueError):
    pass


class InvalidRootError(ValueError):
    pass


class PhiSyntaxError(ValueError):
    pass


@dataclass(frozen=True)
class Root:
    """Integer coefficient vector over the simple roots alpha_1..alpha_n."""

    coeffs: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.coeffs)

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.coeffs))

    def block(self) -> Optional[tuple[int, int]]:
        """Return (p, q) if the coefficients are 1 exactly on [p, q], else None.

        Indices are 1-based over the simple roots.
        """
        ones = [i + 1 for i, c in enumerate(self.coeffs) if c == 1]
        if not ones or any(c not in (0, 1) for c in self.coeffs):
            return None
        p, q = ones[0], ones[-1]
        if ones != list(range(p, q + 1)):
            return None
        return p, q

    def is_positive(self) -> bool:
        return self.block() is not None

    def is_root(self) -> bool:
        return self.is_positive() or (-self).is_positive()

    def label(self) -> str:
        """CLI syntax for a positive root, e.g. ``1+2`` for alpha_1+alpha_2."""
        blk = self.block()
        if blk is None:
            raise InvalidRootError(f"not a positive root: {self.coeffs}")
        return "+".join(str(i) for i in range(blk[0], blk[1] + 1))


@dataclass(frozen=True)
class RootPosition:
    row: int
    col: int

    def __iter__(self):
        return iter((self.row, self.col))


def simple_roots(n: int) -> list[Root]:
    """The n unit coefficient vectors."""
    if n < 1:
        raise InvalidRankError(f"rank must be >= 1, got {n}")
    return [Root(tuple(1 if j == i else 0 for j in range(n))) for i in range(n)]


def positive_roots(n: int) -> list[Root]:
    """All n(n+1)/2 contiguous-block roots, sorted by (block start, block length)."""
    if n < 1:
        raise InvalidRankError(f"rank must be >= 1, got {n}")
    roots = []
    for p in range(1, n + 1):
        for q in range(p, n + 1):
            roots.append(Root(tuple(1 if p <= i + 1 <= q else 0 for i in range(n))))
    return roots


def root_sum(a: Root, b: Root) -> Optional[Root]:
    """Coefficient-wise sum when it is again a root, else None."""
    if a.rank != b.rank:
        raise InvalidRootError("rank mismatch")
    s = Root(tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))
    return s if s.is_root() else None


def position_of(r: Root) -> RootPosition:
    """Matrix position (p, q+1) of a positive root with block [p, q], 1-based."""
    blk = r.block()
    if blk is None:
        raise InvalidRootError(f"not a positive root: {r.coeffs}")
    return RootPosition(blk[0], blk[1] + 1)


def epsilon_form(r: Root) -> tuple[int, int]:
    """Display form: the pair (i, j) with r = e_i - e_j."""
    if r.is_positive():
        pos = position_of(r)
        return pos.row, pos.col
    pos = position_of(-r)
    return pos.col, pos.row


@dataclass(frozen=True)
class PhiSystem:
    """A validated subset Pi <= Phi <= Delta+ with its variable enumeration.

    roots[j] is the root of variable a_{j+1}; the first `rank` entries are
    always the simple roots in order, the rest keep the caller's order.
    """

    rank: int
    roots: tuple[Root, ...]

    def __post_init__(self):
        if self.rank < 1:
            raise InvalidRankError(f"rank must be >= 1, got {self.rank}")
        simples = simple_roots(self.rank)
        if list(self.roots[: self.rank]) != simples:
            raise InvalidRootError("the first roots of a PhiSystem must be the simple roots")
        seen = set()
        for r in self.roots:
            if r.rank != self.rank:
                raise InvalidRootError("root rank differs from system rank")
            if not r.is_positive():
                raise InvalidRootError(f"not a positive root: {r.coeffs}")
            if r in seen:
                raise InvalidRootError(f"duplicate root: {r.coeffs}")
            seen.add(r)

    @classmethod
    def build(cls, rank: int, extras: Sequence[Root] = ()) -> "PhiSystem":
        return cls(rank, tuple(simple_roots(rank)) + tuple(extras))

    @property
    def var_count(self) -> int:
        return len(self.roots)

    @property
    def dim(self) -> int:
        """Matrix size n+1."""
        return self.rank + 1

    def positions(self) -> list[RootPosition]:
        return [position_of(r) for r in self.roots]

    def var_names(self) -> list[str]:
        return [f"a{k + 1}" for k in range(self.var_count)]

    def label(self) -> str:
        return ",".join(r.label() for r in self.roots)


def non_simple_positive_roots(n: int) -> list[Root]:
    return [r for r in positive_roots(n) if sum(r.coeffs) > 1]


def enumerate_phi(n: int) -> Iterator[PhiSystem]:
    """All 2^(n(n+1)/2 - n) subsets Phi containing the simple roots.

    Deterministic order: bit k of the mask selects the k-th non-simple
    positive root in `positive_roots` order.
    """
    optional = non_simple_positive_roots(n)
    for mask in range(1 << len(optional)):
        extras = [r for k, r in enumerate(optional) if mask >> k & 1]
        yield PhiSystem.build(n, extras)


def phi_bitmask(phi: PhiSystem) -> int:
    optional = non_simple_positive_roots(phi.rank)
    chosen = set(phi.roots[phi.rank:])
    mask = 0
    for k, r in enumerate(optional):
        if r in chosen:
            mask |= 1 << k
    return mask


def phi_from_bitmask(n: int, mask: int) -> PhiSystem:
    optional = non_simple_positive_roots(n)
    if not 0 <= mask < 1 << len(optional):
        raise InvalidRootError(f"bitmask {mask} out of range for rank {n}")
    return PhiSystem.build(n, [r for k, r in enumerate(optional) if mask >> k & 1])


def parse_phi(text: str, rank: int) -> PhiSystem:
    """Parse the comma-separated CLI syntax, e.g. ``1,2,3,1+2``.

    Each term is a '+'-joined list of simple-root indices and must denote a
    positive root; the simple roots themselves must all be present.
    """
    if rank < 1:
        raise InvalidRankError(f"rank must be >= 1, got {rank}")
    roots: list[Root] = []
    for term in text.split(","):
        term = term.strip()
        if not term:
            raise PhiSyntaxError("empty term in phi syntax")
        try:
            idxs = [int(tok) for tok in term.split("+")]
        except ValueError as exc:
            raise PhiSyntaxError(f"bad term {term!r}") from exc
        if any(not 1 <= i <= rank for i in idxs):
            raise PhiSyntaxError(f"simple-root index out of range in {term!r}")
        coeffs = [0] * rank
        for i in idxs:
            coeffs[i - 1] += 1
        r = Root(tuple(coeffs))
        if not r.is_positive():
            raise PhiSyntaxError(f"term {term!r} is not a positive root")
        roots.append(r)
    simples = simple_roots(rank)
    extras = [r for r in roots if r not in simples]
    present = [r for r in roots if r in simples]
    if sorted(present, key=lambda r: r.coeffs, reverse=True) != sorted(
        simples, key=lambda r: r.coeffs, reverse=True
    ):
        raise PhiSyntaxError("phi must contain every simple root exactly once")
    if len(roots) != len(set(roots)):
        raise PhiSyntaxError("duplicate roots in phi")
    return PhiSystem.build(rank, extras)
