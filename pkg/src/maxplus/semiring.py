"""Exact arithmetic over the max-plus semiring.

Scalars live in R union {-inf} with join ``max`` and product ``+``.  Finite
values are plain ``int`` or ``fractions.Fraction`` objects (never floats, so
every comparison is exact), and the bottom element is the module-level
singleton ``NEG_INF``.  Python's own ``max`` and ``+`` then act as the
semiring operations directly, which keeps vector code free of wrapper
overhead.

Vectors and square matrices are thin immutable tuple subclasses.  Dimension
mismatches raise :class:`DimensionError`; normalizing the vector that is
-inf in every coordinate raises :class:`ImproperVectorError`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union


class DimensionError(ValueError):
    """Operands have incompatible dimensions."""


class ImproperVectorError(ValueError):
    """The all -inf vector was used where a proper vector is required."""


class _NegInf:
    """Bottom element: neutral for max, absorbing for +.

    A single instance exists.  Arithmetic and comparisons interoperate with
    ``int`` and ``Fraction`` through the reflected operator protocol, so
    expressions like ``max(NEG_INF, 2)`` and ``3 + NEG_INF`` just work.
    Subtracting -inf from anything is undefined and raises.
    """

    __slots__ = ()
    _instance = None

    def __new__(cls) -> "_NegInf":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __add__(self, other: object) -> "_NegInf":
        if isinstance(other, (int, Fraction, _NegInf)):
            return self
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other: object) -> "_NegInf":
        # (-inf) - finite is -inf; (-inf) - (-inf) is undefined.
        if isinstance(other, (int, Fraction)):
            return self
        if isinstance(other, _NegInf):
            raise ArithmeticError("(-inf) - (-inf) is undefined")
        return NotImplemented

    def __rsub__(self, other: object) -> "_NegInf":
        raise ArithmeticError("cannot subtract -inf")

    def __neg__(self) -> "_NegInf":
        raise ArithmeticError("-inf has no additive inverse")

    def __lt__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return True
        if isinstance(other, _NegInf):
            return False
        return NotImplemented

    def __le__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, _NegInf)):
            return True
        return NotImplemented

    def __gt__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, _NegInf)):
            return False
        return NotImplemented

    def __ge__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return False
        if isinstance(other, _NegInf):
            return True
        return NotImplemented

    def __repr__(self) -> str:
        return "-inf"

    def __reduce__(self):
        return (_NegInf, ())


NEG_INF = _NegInf()

ExtReal = Union[int, Fraction, _NegInf]


def is_finite(x: ExtReal) -> bool:
    return x is not NEG_INF


def as_scalar(x: object) -> ExtReal:
    """Coerce ``x`` to a semiring scalar, rejecting floats and other types."""
    if isinstance(x, (int, Fraction, _NegInf)) and not isinstance(x, bool):
        return x
    raise TypeError(f"not a max-plus scalar: {x!r}")


class MpVector(tuple):
    """Dense max-plus vector.

    Entries are ``int``, ``Fraction``, or ``NEG_INF``.  Being a tuple, a
    vector hashes, compares lexicographically (with -inf below every finite
    value), and iterates like any sequence.  Construction does not validate
    entries; use :func:`vector` at trust boundaries.
    """

    __slots__ = ()

    def join(self, other: "MpVector") -> "MpVector":
        """Entrywise max of two vectors of equal dimension."""
        if len(self) != len(other):
            raise DimensionError(
                f"join of vectors of dimension {len(self)} and {len(other)}"
            )
        return MpVector(map(max, self, other))

    def scale(self, c: ExtReal) -> "MpVector":
        """Add the scalar ``c`` to every entry (max-plus scalar multiple)."""
        return MpVector(c + e for e in self)

    def norm(self) -> ExtReal:
        """Largest entry; NEG_INF for the improper vector."""
        return max(self)

    def normalized(self) -> tuple[ExtReal, "MpVector"]:
        """Split into (norm, scaled vector with largest entry 0).

        Raises ImproperVectorError when every entry is -inf, since then no
        scalar multiple has norm 0.
        """
        m = max(self)
        if m is NEG_INF:
            raise ImproperVectorError("cannot normalize the all -inf vector")
        if m == 0:
            return 0, self
        return m, MpVector(e - m for e in self)

    def scaled(self) -> "MpVector":
        """The unique scalar multiple with largest entry 0."""
        return self.normalized()[1]

    def support(self) -> frozenset[int]:
        """Indices of finite entries."""
        return frozenset(i for i, e in enumerate(self) if e is not NEG_INF)

    @property
    def is_proper(self) -> bool:
        """True when at least one entry is finite."""
        return any(e is not NEG_INF for e in self)


def vector(entries: Iterable[object]) -> MpVector:
    """Build an MpVector, validating every entry."""
    return MpVector(as_scalar(e) for e in entries)


def unit(n: int, i: int) -> MpVector:
    """The i-th max-plus unit vector: 0 at position i, -inf elsewhere."""
    if not 0 <= i < n:
        raise DimensionError(f"unit index {i} out of range for dimension {n}")
    return MpVector(0 if j == i else NEG_INF for j in range(n))


def bottom(n: int) -> MpVector:
    """The all -inf vector of dimension n."""
    return MpVector(NEG_INF for _ in range(n))


def mp_dot(row: Iterable[ExtReal], x: Iterable[ExtReal]) -> ExtReal:
    """Max-plus inner product: max over k of row[k] + x[k]."""
    return max(a + b for a, b in zip(row, x))


class MpMatrix(tuple):
    """Square max-plus matrix stored as a tuple of MpVector rows."""

    __slots__ = ()

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[object]]) -> "MpMatrix":
        """Build and validate a square matrix from nested iterables."""
        vecs = [vector(r) for r in rows]
        n = len(vecs)
        if n == 0:
            raise DimensionError("matrix must have at least one row")
        for i, r in enumerate(vecs):
            if len(r) != n:
                raise DimensionError(
                    f"row {i} has {len(r)} entries, expected {n}"
                )
        return cls(vecs)

    @classmethod
    def identity(cls, n: int) -> "MpMatrix":
        """Max-plus identity: 0 on the diagonal, -inf off it."""
        return cls(unit(n, i) for i in range(n))

    @property
    def n(self) -> int:
        return len(self)

    def row(self, i: int) -> MpVector:
        return self[i]

    def entry(self, i: int, j: int) -> ExtReal:
        return self[i][j]

    def apply(self, x: MpVector) -> MpVector:
        """Matrix-vector product A (x) with (max, +) in place of (+, *)."""
        if len(x) != len(self):
            raise DimensionError(
                f"applying {len(self)}x{len(self)} matrix to vector of "
                f"dimension {len(x)}"
            )
        return MpVector(max(a + b for a, b in zip(row, x)) for row in self)

    def row_apply(self, i: int, x: MpVector) -> ExtReal:
        """Single component of the product: max over j of a[i][j] + x[j]."""
        if len(x) != len(self):
            raise DimensionError(
                f"row of width {len(self)} against vector of dimension {len(x)}"
            )
        return max(a + b for a, b in zip(self[i], x))

    def shift(self, c: ExtReal) -> "MpMatrix":
        """Add the finite scalar ``c`` to every entry.

        Shifting by -lam turns the eigenproblem A(x) >= lam(x) into the
        plain supereigenvector problem for the shifted matrix.
        """
        if c is NEG_INF:
            raise ValueError("shift amount must be finite")
        return MpMatrix(row.scale(c) for row in self)

def vec_join(x: MpVector, y: MpVector) -> MpVector:
    return x.join(y)


def vec_scale(c: ExtReal, x: MpVector) -> MpVector:
    return x.scale(c)


def residual(v: MpVector, w: MpVector) -> ExtReal:
    """Largest scalar c with c + w <= v entrywise; NEG_INF when none exists.

    Finite exactly when the support of w is contained in the support of v
    (and w is proper).  This is the residuation v / w, the basic tool for
    testing span membership.
    """
    if len(v) != len(w):
        raise DimensionError(
            f"residual of vectors of dimension {len(v)} and {len(w)}"
        )
    if not w.is_proper:
        raise ImproperVectorError("residual by the all -inf vector")
    best: ExtReal | None = None
    for vi, wi in zip(v, w):
        if wi is NEG_INF:
            continue
        if vi is NEG_INF:
            return NEG_INF
        d = vi - wi
        if best is None or d < best:
            best = d
    return best


def in_span(v: MpVector, gens: Iterable[MpVector]) -> bool:
    """Whether v is a max-plus combination of the given generators.

    Uses the principal solution: v lies in the span iff the join of
    residual(v, w) + w over all generators w reproduces v exactly.
    """
    acc: list[ExtReal] = [NEG_INF] * len(v)
    for w in gens:
        c = residual(v, w)
        if c is NEG_INF:
            continue
        for i, wi in enumerate(w):
            e = c + wi
            if acc[i] < e:
                acc[i] = e
    return all(a == b for a, b in zip(acc, v))


class ScaledBasis:
    """Canonically ordered set of scaled vectors.

    Every member has largest entry 0, members are pairwise distinct, and
    the tuple is sorted ascending lexicographically with -inf below every
    finite value.  Two bases compare equal exactly when they contain the
    same vectors.
    """

    __slots__ = ("vectors",)

    def __init__(self, vectors: Iterable[MpVector]):
        uniq = sorted(set(vectors))
        for v in uniq:
            if max(v) != 0:
                raise ValueError(f"not scaled: {format_vector(v)}")
        self.vectors = tuple(uniq)

    def __iter__(self):
        return iter(self.vectors)

    def __len__(self) -> int:
        return len(self.vectors)

    def __contains__(self, v: object) -> bool:
        return v in self.vectors

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ScaledBasis):
            return self.vectors == other.vectors
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.vectors)

    def __repr__(self) -> str:
        return f"ScaledBasis({list(self.vectors)!r})"


def format_scalar(x: ExtReal) -> str:
    """Render a scalar as '-inf', an integer, or 'p/q' in lowest terms."""
    if x is NEG_INF:
        return "-inf"
    return str(x)


def parse_scalar(token: str) -> ExtReal:
    """Parse '-inf', integer, fraction 'p/q', or exact decimal tokens.

    Decimals are converted exactly: '2.5' becomes 5/2, never a float.
    Raises ValueError on anything else.
    """
    tok = token.strip()
    if tok in ("-inf", "-Inf", "-INF"):
        return NEG_INF
    try:
        f = Fraction(tok)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad scalar token {token!r}") from exc
    if f.denominator == 1:
        return int(f)
    return f


def format_vector(x: MpVector) -> str:
    return " ".join(format_scalar(e) for e in x)
