"""Exact sparse multivariate polynomials and rational functions over Q.

Coefficients are `fractions.Fraction`, exponent vectors are tuples of
non-negative ints with one slot per variable.  Canonical form (no zero
coefficients stored) makes structural equality mathematical equality,
which every symbolic certificate in this package relies on.

Quotients of polynomials are never reduced to lowest terms; all zero
tests on p/q cross-multiply instead, so no multivariate gcd is needed
anywhere.  There is no floating point in this module.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence

Exps = tuple  # exponent vector


def _coeff(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"coefficient must be int or Fraction, got {type(c).__name__}")


class Poly:
    """Sparse polynomial: map from exponent vector to nonzero rational coefficient."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict | None = None):
        self.nvars = nvars
        self.terms: dict[Exps, Fraction] = terms if terms is not None else {}

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c) -> "Poly":
        c = _coeff(c)
        if c == 0:
            return cls(nvars)
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def one(cls, nvars: int) -> "Poly":
        return cls.constant(nvars, 1)

    @classmethod
    def variable(cls, nvars: int, k: int) -> "Poly":
        if not 0 <= k < nvars:
            raise IndexError(f"variable index {k} out of range for {nvars} variables")
        e = [0] * nvars
        e[k] = 1
        return cls(nvars, {tuple(e): Fraction(1)})

    @classmethod
    def monomial(cls, nvars: int, exps: Sequence[int], c=1) -> "Poly":
        c = _coeff(c)
        exps = tuple(exps)
        if len(exps) != nvars:
            raise ValueError("exponent vector length mismatch")
        if any(e < 0 for e in exps):
            raise ValueError("negative exponent in Poly")
        if c == 0:
            return cls(nvars)
        return cls(nvars, {exps: c})

    @classmethod
    def from_terms(cls, nvars: int, items: Iterable[tuple[Sequence[int], object]]) -> "Poly":
        terms: dict[Exps, Fraction] = {}
        for exps, c in items:
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError("exponent vector length mismatch")
            c = terms.get(exps, Fraction(0)) + _coeff(c)
            if c == 0:
                terms.pop(exps, None)
            else:
                terms[exps] = c
        return cls(nvars, terms)

    # -- ring operations ------------------------------------------------

    def _check(self, other: "Poly"):
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(self.nvars, other)
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, Fraction(0)) + c
            if s == 0:
                terms.pop(e, None)
            else:
                terms[e] = s
        return Poly(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _coeff(other)
            if c == 0:
                return Poly(self.nvars)
            return Poly(self.nvars, {e: cc * c for e, cc in self.terms.items()})
        self._check(other)
        terms: dict[Exps, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, Fraction(0)) + c1 * c2
                if s == 0:
                    terms.pop(e, None)
                else:
                    terms[e] = s
        return Poly(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative int")
        result = Poly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(self.nvars, other)
        return isinstance(other, Poly) and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- calculus and evaluation -----------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def partial(self, k: int) -> "Poly":
        """Formal partial derivative with respect to variable k."""
        if not 0 <= k < self.nvars:
            raise IndexError(f"variable index {k} out of range")
        terms: dict[Exps, Fraction] = {}
        for e, c in self.terms.items():
            if e[k] == 0:
                continue
            d = list(e)
            d[k] -= 1
            terms[tuple(d)] = c * e[k]
        return Poly(self.nvars, terms)

    def eval(self, point: Sequence) -> Fraction:
        """Exact value at a rational point."""
        if len(point) != self.nvars:
            raise ValueError("point length mismatch")
        pt = [_coeff(x) for x in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(pt, e):
                if k:
                    v *= x**k
            total += v
        return total

    def eval_float(self, point: Sequence[float]) -> float:
        """Floating-point value; used only by the numeric harness."""
        total = 0.0
        for e, c in self.terms.items():
            v = float(c)
            for x, k in zip(point, e):
                if k:
                    v *= x**k
            total += v
        return total

    def leading(self) -> tuple[Exps, Fraction]:
        """Graded-lex leading term (largest total degree, then lex on exponents)."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=lambda t: (sum(t), t))
        return e, self.terms[e]

    def lift(self, extra: int = 1) -> "Poly":
        """Same polynomial viewed in a ring with `extra` trailing variables."""
        pad = (0,) * extra
        return Poly(self.nvars + extra, {e + pad: c for e, c in self.terms.items()})

    def __repr__(self):
        return f"Poly({format_poly(self, default_names(self.nvars))})"


def default_names(nvars: int, stem: str = "a") -> list[str]:
    return [f"{stem}{i + 1}" for i in range(nvars)]


def _sorted_terms(p: Poly):
    return sorted(p.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)


def format_poly(p: Poly, names: Sequence[str]) -> str:
    """Canonical text: graded-lex term order, e.g. ``a1*a2*a4 + a2*a3*a5``."""
    if len(names) != p.nvars:
        raise ValueError("one name per variable required")
    if not p.terms:
        return "0"
    pieces = []
    for idx, (e, c) in enumerate(_sorted_terms(p)):
        factors = []
        for name, k in zip(names, e):
            if k == 1:
                factors.append(name)
            elif k > 1:
                factors.append(f"{name}^{k}")
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = str(mag) + "*" + "*".join(factors)
        if idx == 0:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append(("- " if c < 0 else "+ ") + body)
    return " ".join(pieces)


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)(?:\^(?P<exp>\d+))?|(?P<op>[+*-]))")


def parse_poly(text: str, names: Sequence[str]) -> Poly:
    """Parse the canonical textual form back into a Poly (exact round-trip)."""
    index = {n: i for i, n in enumerate(names)}
    nvars = len(names)
    pos = 0
    terms: list[tuple[list[int], Fraction]] = []
    sign = 1
    cur_exps: list[int] | None = None
    cur_coeff = Fraction(1)

    def flush():
        nonlocal cur_exps, cur_coeff, sign
        if cur_exps is None:
            raise ValueError(f"malformed polynomial text: {text!r}")
        terms.append((cur_exps, sign * cur_coeff))
        cur_exps, cur_coeff, sign = None, Fraction(1), 1

    expecting_factor = True
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            raise ValueError(f"unexpected input at {text[pos:]!r}")
        pos = m.end()
        if m.group("num") is not None:
            if cur_exps is None:
                cur_exps = [0] * nvars
            cur_coeff *= Fraction(m.group("num"))
            expecting_factor = False
        elif m.group("name") is not None:
            name = m.group("name")
            if name not in index:
                raise ValueError(f"unknown variable {name!r}")
            if cur_exps is None:
                cur_exps = [0] * nvars
            cur_exps[index[name]] += int(m.group("exp") or 1)
            expecting_factor = False
        else:
            op = m.group("op")
            if op == "*":
                if expecting_factor:
                    raise ValueError(f"misplaced '*' in {text!r}")
                expecting_factor = True
            elif op in "+-":
                if expecting_factor and cur_exps is None:
                    # leading sign of the first term
                    if op == "-":
                        sign = -sign
                else:
                    flush()
                    sign = -1 if op == "-" else 1
                expecting_factor = True
    if cur_exps is not None:
        flush()
    elif not terms:
        raise ValueError(f"empty polynomial text: {text!r}")
    return Poly.from_terms(nvars, [(tuple(e), c) for e, c in terms])


class RationalFn:
    """Unreduced quotient of two polynomials; zero tests cross-multiply."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        if num.nvars != den.nvars:
            raise ValueError("variable count mismatch")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num = num
        self.den = den

    @property
    def nvars(self) -> int:
        return self.num.nvars

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other: "RationalFn") -> "RationalFn":
        return RationalFn(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self) -> "RationalFn":
        return RationalFn(-self.num, self.den)

    def __sub__(self, other: "RationalFn") -> "RationalFn":
        return self + (-other)

    def __mul__(self, other: "RationalFn") -> "RationalFn":
        return RationalFn(self.num * other.num, self.den * other.den)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            other = RationalFn(other, Poly.one(other.nvars))
        if not isinstance(other, RationalFn):
            return NotImplemented
        return (self.num * other.den - other.num * self.den).is_zero()

    def __hash__(self):
        raise TypeError("RationalFn is not hashable")

    def eval(self, point: Sequence) -> Fraction:
        d = self.den.eval(point)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at evaluation point")
        return self.num.eval(point) / d

    def eval_float(self, point: Sequence[float]) -> float:
        return self.num.eval_float(point) / self.den.eval_float(point)

    def __repr__(self):
        names = default_names(self.nvars)
        return f"RationalFn(({format_poly(self.num, names)}) / ({format_poly(self.den, names)}))"


class SymMatrix:
    """Square matrix of Polys with optional symmetry checks."""

    __slots__ = ("dim", "nvars", "rows")

    def __init__(self, rows: Sequence[Sequence[Poly]]):
        dim = len(rows)
        if any(len(r) != dim for r in rows):
            raise ValueError("matrix must be square")
        nvars = rows[0][0].nvars if dim else 0
        for r in rows:
            for p in r:
                if p.nvars != nvars:
                    raise ValueError("mixed variable counts in matrix")
        self.dim = dim
        self.nvars = nvars
        self.rows = tuple(tuple(r) for r in rows)

    @classmethod
    def zeros(cls, dim: int, nvars: int) -> "SymMatrix":
        z = Poly.zero(nvars)
        return cls([[z] * dim for _ in range(dim)])

    @classmethod
    def from_entries(cls, dim: int, nvars: int, entries: dict[tuple[int, int], Poly]) -> "SymMatrix":
        """Build from a sparse {(row, col): Poly} map, 0-based indices."""
        rows = [[Poly.zero(nvars) for _ in range(dim)] for _ in range(dim)]
        for (i, j), p in entries.items():
            rows[i][j] = rows[i][j] + p
        return cls(rows)

    def __getitem__(self, ij: tuple[int, int]) -> Poly:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, SymMatrix) and self.rows == other.rows

    def __add__(self, other: "SymMatrix") -> "SymMatrix":
        return SymMatrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other: "SymMatrix") -> "SymMatrix":
        return SymMatrix([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SymMatrix([[p * other for p in r] for r in self.rows])
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            out.append([_dot(r, c) for c in cols])
        return SymMatrix(out)

    def power(self, k: int) -> "SymMatrix":
        if k < 0:
            raise ValueError("negative matrix power")
        result = SymMatrix.from_entries(
            self.dim, self.nvars, {(i, i): Poly.one(self.nvars) for i in range(self.dim)}
        )
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def transpose(self) -> "SymMatrix":
        return SymMatrix([list(c) for c in zip(*self.rows)])

    def trace(self) -> Poly:
        t = Poly.zero(self.nvars)
        for i in range(self.dim):
            t = t + self.rows[i][i]
        return t

    def is_symmetric(self) -> bool:
        return all(self.rows[i][j] == self.rows[j][i] for i in range(self.dim) for j in range(i))

    def is_skew(self) -> bool:
        return all(
            (self.rows[i][j] + self.rows[j][i]).is_zero()
            for i in range(self.dim)
            for j in range(i + 1)
        )

    def eval(self, point: Sequence) -> list[list[Fraction]]:
        return [[p.eval(point) for p in r] for r in self.rows]

    def format(self, names: Sequence[str]) -> list[list[str]]:
        return [[format_poly(p, names) for p in r] for r in self.rows]


def _dot(row: Sequence[Poly], col: Sequence[Poly]) -> Poly:
    acc = Poly.zero(row[0].nvars)
    for a, b in zip(row, col):
        if a.terms and b.terms:
            acc = acc + a * b
    return acc


def det(m: SymMatrix) -> Poly:
    """Exact determinant by cofactor expansion memoized on column subsets.

    Rows are pre-ordered sparsest first, which keeps the recursion close to
    the support of the permanent for the nearly-banded matrices built here.
    """
    n = m.dim
    if n == 0:
        return Poly.one(m.nvars)
    order = sorted(range(n), key=lambda i: (sum(1 for p in m.rows[i] if p.terms), i))
    parity = _permutation_sign(order)
    rows = [m.rows[i] for i in order]
    memo: dict[int, Poly] = {}

    def minor(colmask: int, depth: int) -> Poly:
        if depth == n:
            return Poly.one(m.nvars)
        cached = memo.get(colmask)
        if cached is not None:
            return cached
        row = rows[depth]
        acc = Poly.zero(m.nvars)
        sign = 1
        rest = colmask
        while rest:
            low = rest & -rest
            j = low.bit_length() - 1
            if row[j].terms:
                sub = minor(colmask ^ low, depth + 1)
                if sub.terms:
                    term = row[j] * sub
                    acc = acc + (term if sign > 0 else -term)
            sign = -sign
            rest ^= low
        memo[colmask] = acc
        return acc

    result = minor((1 << n) - 1, 0)
    return result if parity > 0 else -result


def _permutation_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def char_poly(m: SymMatrix) -> list[Poly]:
    """Coefficients of det(t*I - M) in the matrix's variables, degree-descending.

    The indeterminate t is handled as one extra polynomial variable during the
    determinant and stripped from the result, so the coefficients live in the
    original ring.  Entry 0 is always the constant 1 (the t^dim coefficient).
    """
    n = m.dim
    nv = m.nvars
    t = Poly.variable(nv + 1, nv)
    lifted = [[-(m.rows[i][j].lift()) for j in range(n)] for i in range(n)]
    for i in range(n):
        lifted[i][i] = t + lifted[i][i]
    p = det(SymMatrix(lifted))
    coeffs = [Poly.zero(nv) for _ in range(n + 1)]
    for e, c in p.terms.items():
        k = e[-1]
        coeffs[k] = coeffs[k] + Poly.monomial(nv, e[:-1], c)
    return list(reversed(coeffs))


# -- exact linear algebra over Q -----------------------------------------


def rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (matrix, pivot column indices)."""
    mat = [list(map(Fraction, r)) for r in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if mat[i][c] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return mat, pivots


def exact_rank(rows: list[list[Fraction]]) -> int:
    if not rows:
        return 0
    return len(rref(rows)[1])


def kernel_basis(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Basis of the right kernel, one vector per free column of the RREF."""
    if not rows:
        return []
    ncols = len(rows[0])
    mat, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -mat[r][f]
        basis.append(v)
    return basis
