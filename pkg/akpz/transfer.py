"""
Transfer.

Exact linear algebra for the Toeplitz-like transition matrices.

The matrices act on `𝔛_n`, the strictly increasing `n`-tuples of integers:

- `T_n(α; F)(X, Y) = det[α_i^{y_j}] / det[α_i^{x_j}] · det[f(x_i - y_j)] / ∏ F(1/α_j)`,
- `T^n_{n-1}(α; F)(X, Y)`, the same with a virtual last column `α_n^{x_i}`,
- `Λ = T^n_{n-1}(α; (1 - α_n z)⁻¹)`, the link between levels.

The state spaces are infinite, so the identities between these matrices
are checked at targeted pairs of states, with sums over unbounded
intermediate states truncated where the geometric tails fall below
`TAIL_TOLERANCE`.

Minor determinants accept `fractions.Fraction` or `int` parameters, in which
case they are evaluated exactly.
"""

from __future__ import annotations

import fractions
import itertools
import math
import numbers
import typing

import attrs
import numpy as np

from akpz.abc.bases import PayloadBase
from akpz.abc.laws import StepLaw
from akpz.dynamics import conditional_segments
from akpz.dynamics import segment_probability
from akpz.dynamics import seq_transition_probability
from akpz.enums import StepFamily
from akpz.enums import SymbolKind
from akpz.errors import InvalidArgumentException
from akpz.interlacing import InterlacingArray
from akpz.internal.logger import TRACE_LEVEL
from akpz.internal.logger import logger

if typing.TYPE_CHECKING:
    from akpz.internal.types import FloatArray
    from akpz.internal.types import IntArray
    from akpz.internal.types import Position

__all__ = (
    "TAIL_TOLERANCE",
    "CHECK_HALF_SPAN",
    "Symbol",
    "Window",
    "TransitionMatrix",
    "fourier_coeffs",
    "minor_det_direct",
    "minor_det_closed",
    "vandermonde",
    "t_entry",
    "tlink_entry",
    "lambda_entry",
    "build_T",
    "build_Tlink",
    "build_lambda",
    "commutation_check",
    "semigroup_check",
    "bivariate_conditionals",
    "conditional_ratio",
    "intertwining_check",
)

_logger = logger.getChild("transfer")

TAIL_TOLERANCE: typing.Final[float] = 1e-14
"""Geometric tail mass dropped when truncating unbounded sums."""
CHECK_HALF_SPAN: typing.Final[int] = 3
"""Identities are checked at states inside the central `2 * span + 1` sites of a window."""
PRODUCT_TERMS: typing.Final[int] = 400
"""Convolution terms kept for products of opposite geometric symbols."""

Number = typing.Union[float, fractions.Fraction, int]
Coefficients = typing.Callable[[int], Number]


@attrs.frozen
class Symbol:
    """
    Symbol.

    A Toeplitz symbol `F(z)` with its Fourier coefficients `f(m)`, the
    coefficient of `z^m`.

    Use the constructors rather than building one by hand.
    """

    kind: SymbolKind
    """The symbol kind."""
    p: Number = 0
    """The Bernoulli weight, or the constant term of a mixed symbol."""
    q: Number = 0
    """The geometric ratio."""
    factors: tuple[Symbol, ...] = ()
    """The two factors of a product."""

    @classmethod
    def bernoulli_left(cls, p: Number) -> Symbol:
        """`1 + pz`."""
        return cls(SymbolKind.BERNOULLI_LEFT, p=p)

    @classmethod
    def bernoulli_right(cls, p: Number) -> Symbol:
        """`1 + p/z`."""
        return cls(SymbolKind.BERNOULLI_RIGHT, p=p)

    @classmethod
    def geometric_left(cls, q: Number) -> Symbol:
        """`(1 - qz)⁻¹`."""
        return cls(SymbolKind.GEOMETRIC_LEFT, q=q)

    @classmethod
    def geometric_right(cls, q: Number) -> Symbol:
        """`(1 - q/z)⁻¹`."""
        return cls(SymbolKind.GEOMETRIC_RIGHT, q=q)

    @classmethod
    def mixed_left(cls, p: Number, q: Number) -> Symbol:
        """`p + qz(1 - qz)⁻¹`."""
        return cls(SymbolKind.MIXED_LEFT, p=p, q=q)

    @classmethod
    def mixed_right(cls, p: Number, q: Number) -> Symbol:
        """`p + (q/z)(1 - q/z)⁻¹`."""
        return cls(SymbolKind.MIXED_RIGHT, p=p, q=q)

    @classmethod
    def product(cls, first: Symbol, second: Symbol) -> Symbol:
        """`F_1(z) F_2(z)`, with coefficients the convolution of the factors."""
        return cls(SymbolKind.PRODUCT, factors=(first, second))

    @classmethod
    def from_law(cls, law: StepLaw) -> Symbol:
        """The symbol of a step law."""
        match law.family:
            case StepFamily.BERNOULLI_LEFT:
                return cls.bernoulli_left(law.parameter)
            case StepFamily.BERNOULLI_RIGHT:
                return cls.bernoulli_right(law.parameter)
            case StepFamily.GEOMETRIC_LEFT:
                return cls.geometric_left(law.parameter)
            case StepFamily.GEOMETRIC_RIGHT:
                return cls.geometric_right(law.parameter)

    @property
    def support(self) -> tuple[int | None, int | None]:
        """The smallest and largest `m` with `f(m) != 0`, None when unbounded."""
        match self.kind:
            case SymbolKind.BERNOULLI_LEFT:
                return 0, 1
            case SymbolKind.BERNOULLI_RIGHT:
                return -1, 0
            case SymbolKind.GEOMETRIC_LEFT | SymbolKind.MIXED_LEFT:
                return 0, None
            case SymbolKind.GEOMETRIC_RIGHT | SymbolKind.MIXED_RIGHT:
                return None, 0
            case SymbolKind.PRODUCT:
                (lo1, hi1), (lo2, hi2) = (factor.support for factor in self.factors)
                lo = None if lo1 is None or lo2 is None else lo1 + lo2
                hi = None if hi1 is None or hi2 is None else hi1 + hi2
                return lo, hi

    def coefficient(self, m: int) -> Number:
        """The Fourier coefficient `f(m)`, in the arithmetic of the parameters."""
        match self.kind:
            case SymbolKind.BERNOULLI_LEFT:
                return 1 if m == 0 else self.p if m == 1 else 0
            case SymbolKind.BERNOULLI_RIGHT:
                return 1 if m == 0 else self.p if m == -1 else 0
            case SymbolKind.GEOMETRIC_LEFT:
                return self.q**m if m >= 0 else 0
            case SymbolKind.GEOMETRIC_RIGHT:
                return self.q ** (-m) if m <= 0 else 0
            case SymbolKind.MIXED_LEFT:
                return self.p if m == 0 else self.q**m if m > 0 else 0
            case SymbolKind.MIXED_RIGHT:
                return self.p if m == 0 else self.q ** (-m) if m < 0 else 0
            case SymbolKind.PRODUCT:
                first, second = self.factors
                return sum((first.coefficient(s) * second.coefficient(m - s) for s in _convolution_range(first, second, m)), 0)

    def coefficients(self, m: IntArray) -> FloatArray:
        """Vectorised `f(m)` in double precision."""
        m = np.asarray(m, dtype=np.int64)
        p = float(self.p)
        q = float(self.q)
        with np.errstate(over="ignore", under="ignore"):
            match self.kind:
                case SymbolKind.BERNOULLI_LEFT:
                    return np.where(m == 0, 1.0, np.where(m == 1, p, 0.0))
                case SymbolKind.BERNOULLI_RIGHT:
                    return np.where(m == 0, 1.0, np.where(m == -1, p, 0.0))
                case SymbolKind.GEOMETRIC_LEFT:
                    return np.where(m >= 0, np.power(q, np.maximum(m, 0)), 0.0)
                case SymbolKind.GEOMETRIC_RIGHT:
                    return np.where(m <= 0, np.power(q, np.maximum(-m, 0)), 0.0)
                case SymbolKind.MIXED_LEFT:
                    return np.where(m == 0, p, np.where(m > 0, np.power(q, np.maximum(m, 0)), 0.0))
                case SymbolKind.MIXED_RIGHT:
                    return np.where(m == 0, p, np.where(m < 0, np.power(q, np.maximum(-m, 0)), 0.0))
                case SymbolKind.PRODUCT:
                    first, second = self.factors
                    out = np.zeros(m.shape, dtype=np.float64)
                    if m.size == 0:
                        return out
                    lo, _ = _convolution_bounds(first, second, int(m.min()))
                    _, hi = _convolution_bounds(first, second, int(m.max()))
                    for s in range(lo, hi + 1):
                        out += float(first.coefficient(s)) * second.coefficients(m - s)
                    return out

    def __call__(self, z: complex) -> complex:
        """Evaluate `F(z)`."""
        match self.kind:
            case SymbolKind.BERNOULLI_LEFT:
                return 1 + self.p * z
            case SymbolKind.BERNOULLI_RIGHT:
                return 1 + self.p / z
            case SymbolKind.GEOMETRIC_LEFT:
                return 1 / (1 - self.q * z)
            case SymbolKind.GEOMETRIC_RIGHT:
                return 1 / (1 - self.q / z)
            case SymbolKind.MIXED_LEFT:
                return self.p + self.q * z / (1 - self.q * z)
            case SymbolKind.MIXED_RIGHT:
                return self.p + (self.q / z) / (1 - self.q / z)
            case SymbolKind.PRODUCT:
                first, second = self.factors
                return first(z) * second(z)

    def tail_ratio(self, alphas: typing.Sequence[float]) -> float:
        """
        Tail ratio.

        The geometric decay rate of the transition weights `α^{y-x} f(x-y)`,
        zero for finitely supported symbols.

        Raises
        ------
        InvalidArgumentException
            Raised when the tails do not decay.
        """
        match self.kind:
            case SymbolKind.BERNOULLI_LEFT | SymbolKind.BERNOULLI_RIGHT:
                ratio = 0.0
            case SymbolKind.GEOMETRIC_LEFT | SymbolKind.MIXED_LEFT:
                ratio = float(self.q) / min(alphas)
            case SymbolKind.GEOMETRIC_RIGHT | SymbolKind.MIXED_RIGHT:
                ratio = float(self.q) * max(alphas)
            case SymbolKind.PRODUCT:
                ratio = max(factor.tail_ratio(alphas) for factor in self.factors)
        if ratio >= 1.0:
            raise InvalidArgumentException(f"{self.kind.value} symbol diverges at the given weights")
        return ratio


def _convolution_bounds(first: Symbol, second: Symbol, m: int) -> tuple[int, int]:
    """Shifts `s` with `f_1(s) f_2(m - s)` possibly nonzero, as an inclusive pair."""
    lo1, hi1 = first.support
    lo2, hi2 = second.support
    lows = [v for v in (lo1, None if hi2 is None else m - hi2) if v is not None]
    highs = [v for v in (hi1, None if lo2 is None else m - lo2) if v is not None]
    lo = max(lows) if lows else None
    hi = min(highs) if highs else None
    if lo is None and hi is None:
        return m - PRODUCT_TERMS, m + PRODUCT_TERMS
    if lo is None:
        return typing.cast(int, hi) - PRODUCT_TERMS, typing.cast(int, hi)
    if hi is None:
        return lo, lo + PRODUCT_TERMS
    return lo, hi


def _convolution_range(first: Symbol, second: Symbol, m: int) -> range:
    lo, hi = _convolution_bounds(first, second, m)
    return range(lo, hi + 1)


def _power(base: Number, exponent: int) -> Number:
    if _is_exact(base):
        return fractions.Fraction(base) ** exponent
    return float(base) ** exponent


def fourier_coeffs(symbol: Symbol) -> Coefficients:
    """
    Fourier coeffs.

    The coefficient function `m -> f(m)` of a symbol, in closed form.

    Parameters
    ----------
    symbol
        The symbol.
    """
    return symbol.coefficient


class Window(PayloadBase, frozen=True):
    """
    Window.

    The positions `lo..hi` a finite section of a transition matrix lives on.
    """

    lo: int
    """The first position."""
    hi: int
    """The last position."""
    n: int
    """The tuple length."""

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidArgumentException(f"tuple length must be at least 1, got {self.n}")
        if self.hi - self.lo + 1 < self.n:
            raise InvalidArgumentException(f"window {self.lo}..{self.hi} cannot hold {self.n} positions")

    def states(self, n: int | None = None) -> list[Position]:
        """Every strictly increasing tuple of the window, of length `n` or `self.n`."""
        return list(itertools.combinations(range(self.lo, self.hi + 1), self.n if n is None else n))

    def core(self, n: int | None = None, widen: int = 0) -> list[Position]:
        """The states of the central `2 * CHECK_HALF_SPAN + 1 + 2 * widen` sites."""
        centre = (self.lo + self.hi) // 2
        lo = max(self.lo, centre - CHECK_HALF_SPAN - widen)
        hi = min(self.hi, centre + CHECK_HALF_SPAN + widen)
        return list(itertools.combinations(range(lo, hi + 1), self.n if n is None else n))


class TransitionMatrix:
    """
    Transition matrix.

    A finite section of a matrix indexed by strictly increasing tuples.

    Parameters
    ----------
    rows
        The row states.
    cols
        The column states.
    values
        The entries, of shape `(len(rows), len(cols))`.
    """

    __slots__ = ("_rows", "_cols", "_values", "_row_index", "_col_index")

    def __init__(self, rows: list[Position], cols: list[Position], values: FloatArray) -> None:
        if values.shape != (len(rows), len(cols)):
            raise InvalidArgumentException(f"entries of shape {values.shape} do not match {len(rows)}x{len(cols)} states")
        self._rows = rows
        self._cols = cols
        self._values = values
        self._row_index = {state: i for i, state in enumerate(rows)}
        self._col_index = {state: j for j, state in enumerate(cols)}

    @property
    def rows(self) -> list[Position]:
        """The row states."""
        return self._rows

    @property
    def cols(self) -> list[Position]:
        """The column states."""
        return self._cols

    @property
    def values(self) -> FloatArray:
        """The entries."""
        return self._values

    def __getitem__(self, key: tuple[Position, Position]) -> float:
        row, col = key
        return float(self._values[self._row_index[tuple(row)], self._col_index[tuple(col)]])

    def row_sums(self) -> FloatArray:
        """The sum of every row."""
        return self._values.sum(axis=1)

    def leak(self) -> FloatArray:
        """`1 - row sum`, the mass each row sends outside the window."""
        return 1.0 - self.row_sums()

    def __repr__(self) -> str:
        return f"TransitionMatrix({len(self._rows)}x{len(self._cols)})"


# Determinants


def _check_increasing(name: str, values: typing.Sequence[int]) -> None:
    if any(later <= earlier for earlier, later in zip(values, values[1:])):
        raise InvalidArgumentException(f"{name} must be strictly increasing, got {tuple(values)}")


def _is_exact(value: typing.Any) -> bool:
    return isinstance(value, numbers.Rational)


def _exact_det(matrix: list[list[fractions.Fraction]]) -> fractions.Fraction:
    size = len(matrix)
    rows = [row[:] for row in matrix]
    det = fractions.Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if rows[r][col] != 0), None)
        if pivot is None:
            return fractions.Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        for r in range(col + 1, size):
            factor = rows[r][col] / rows[col][col]
            if factor:
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
    return det


def _det(entries: list[list[Number]]) -> Number:
    if not entries:
        return 1
    if all(_is_exact(value) for row in entries for value in row):
        return _exact_det([[fractions.Fraction(value) for value in row] for row in entries])
    return float(np.linalg.det(np.asarray(entries, dtype=np.float64)))


def minor_det_direct(
    f: Coefficients,
    x: typing.Sequence[int],
    y: typing.Sequence[int],
    virtual: Number | None = None,
) -> Number:
    """
    Minor det direct.

    `det[f(x_i - y_j)]`, evaluated directly. With `virtual` set, `y` holds one
    entry fewer than `x` and the last column is `virtual^{x_i}`.

    Rational inputs give an exact `fractions.Fraction`.

    Parameters
    ----------
    f
        The coefficients.
    x
        The row positions.
    y
        The column positions.
    virtual
        The base of the virtual column, if any.

    Raises
    ------
    InvalidArgumentException
        Raised when the sizes do not match.
    """
    expected = len(x) - (0 if virtual is None else 1)
    if len(y) != expected:
        raise InvalidArgumentException(f"expected {expected} column positions, got {len(y)}")
    entries: list[list[Number]] = []
    for xi in x:
        row = [f(xi - yj) for yj in y]
        if virtual is not None:
            row.append(_power(virtual, xi))
        entries.append(row)
    return _det(entries)


def _count(pairs: typing.Iterable[tuple[int, int]]) -> int:
    return sum(1 for a, b in pairs if a == b)


def minor_det_closed(
    symbol: Symbol,
    x: typing.Sequence[int],
    y: typing.Sequence[int],
    virtual: Number | None = None,
) -> Number:
    """
    Minor det closed.

    The closed form of `minor_det_direct` for the one factor symbols:

    - `1 + pz`: `p^{Σ(x-y)}` when every `y_i - x_i` is `-1` or `0`;
    - `(1 - qz)⁻¹`: `q^{Σ(x-y)}` when `x_{i-1} < y_i <= x_i`;
    - `p + qz(1 - qz)⁻¹`: `q^{Σ(x-y)} p^{#{x_i = y_i}} (1-p)^{#{x_{i-1} = y_i}}`
      when `x_{i-1} <= y_i <= x_i`;

    and zero otherwise. With the virtual column `q^{x_i}` the geometric and
    mixed symbols give `(-1)^{n-1} q^{Σx - Σy}` on `x_i < y_i <= x_{i+1}`, and
    `(-1)^{n-1} q^{Σx - Σy} p^{#{x_{i+1} = y_i}} (1-p)^{#{x_i = y_i}}` on
    `x_i <= y_i <= x_{i+1}`. The right moving symbols are the left ones with
    `x` and `y` exchanged.

    Raises
    ------
    InvalidArgumentException
        Raised when a tuple is not strictly increasing, the sizes do not
        match, or there is no closed form for the combination.
    """
    _check_increasing("x", x)
    _check_increasing("y", y)
    expected = len(x) - (0 if virtual is None else 1)
    if len(y) != expected:
        raise InvalidArgumentException(f"expected {expected} column positions, got {len(y)}")

    kind = symbol.kind
    if virtual is not None:
        if kind not in (SymbolKind.GEOMETRIC_LEFT, SymbolKind.MIXED_LEFT):
            raise InvalidArgumentException(f"no closed form for {kind.value} with a virtual column")
        if virtual != symbol.q:
            raise InvalidArgumentException("the virtual column must use the geometric ratio as its base")
        return _closed_virtual(symbol, x, y)

    match kind:
        case SymbolKind.BERNOULLI_LEFT:
            return _closed_bernoulli(symbol.p, x, y)
        case SymbolKind.BERNOULLI_RIGHT:
            return _closed_bernoulli(symbol.p, y, x)
        case SymbolKind.GEOMETRIC_LEFT:
            return _closed_geometric(symbol.q, x, y)
        case SymbolKind.GEOMETRIC_RIGHT:
            return _closed_geometric(symbol.q, y, x)
        case SymbolKind.MIXED_LEFT:
            return _closed_mixed(symbol.p, symbol.q, x, y)
        case SymbolKind.MIXED_RIGHT:
            return _closed_mixed(symbol.p, symbol.q, y, x)
        case SymbolKind.PRODUCT:
            raise InvalidArgumentException("no closed form for a product symbol")


def _closed_bernoulli(p: Number, x: typing.Sequence[int], y: typing.Sequence[int]) -> Number:
    if any(yi - xi not in (-1, 0) for xi, yi in zip(x, y)):
        return 0
    return p ** (sum(x) - sum(y))


def _closed_geometric(q: Number, x: typing.Sequence[int], y: typing.Sequence[int]) -> Number:
    for i, (xi, yi) in enumerate(zip(x, y)):
        if not yi <= xi or (i > 0 and not x[i - 1] < yi):
            return 0
    return q ** (sum(x) - sum(y))


def _closed_mixed(p: Number, q: Number, x: typing.Sequence[int], y: typing.Sequence[int]) -> Number:
    for i, (xi, yi) in enumerate(zip(x, y)):
        if not yi <= xi or (i > 0 and not x[i - 1] <= yi):
            return 0
    stays = _count(zip(x, y))
    catches = _count(zip(x[:-1], y[1:]))
    return q ** (sum(x) - sum(y)) * p**stays * (1 - p) ** catches


def _closed_virtual(symbol: Symbol, x: typing.Sequence[int], y: typing.Sequence[int]) -> Number:
    q = symbol.q
    sign = -1 if (len(x) - 1) % 2 else 1
    exponent = sum(x) - sum(y)
    power = _power(q, exponent)
    if symbol.kind is SymbolKind.GEOMETRIC_LEFT:
        if any(not x[i] < y[i] <= x[i + 1] for i in range(len(y))):
            return 0
        return sign * power
    p = symbol.p
    if any(not x[i] <= y[i] <= x[i + 1] for i in range(len(y))):
        return 0
    return sign * power * p ** _count(zip(x[1:], y)) * (1 - p) ** _count(zip(x, y))


# Matrix entries


def vandermonde(x: typing.Sequence[int] | IntArray) -> float:
    """`∏_{i<j} (x_j - x_i)`."""
    values = np.asarray(x, dtype=np.float64)
    out = 1.0
    for i in range(values.size):
        for j in range(i + 1, values.size):
            out *= values[j] - values[i]
    return out


def _vandermonde_rows(states: IntArray) -> FloatArray:
    values = states.astype(np.float64)
    out = np.ones(values.shape[0])
    for i in range(values.shape[1]):
        for j in range(i + 1, values.shape[1]):
            out *= values[:, j] - values[:, i]
    return out


def _alphas_equal(alphas: typing.Sequence[float]) -> bool:
    """Whether every weight is equal; raises when only some are."""
    values = [float(alpha) for alpha in alphas]
    if any(not alpha > 0.0 for alpha in values):
        raise InvalidArgumentException(f"level weights must be positive, got {tuple(values)}")
    if len(set(values)) == 1:
        return True
    if len(set(values)) != len(values):
        raise InvalidArgumentException(f"level weights must be all equal or pairwise distinct, got {tuple(values)}")
    return False


def _alpha_dets(alphas: typing.Sequence[float], states: IntArray) -> FloatArray:
    base = np.asarray(alphas, dtype=np.float64)
    if states.shape[1] == 0:
        return np.ones(states.shape[0])
    powers = base[None, :, None] ** states[:, None, :].astype(np.float64)
    return np.linalg.det(powers)


def _normalisation(symbol: Symbol, alphas: typing.Sequence[float]) -> float:
    return float(np.prod([complex(symbol(1.0 / float(alpha))).real for alpha in alphas]))


def _t_row(alphas: typing.Sequence[float], symbol: Symbol, x: Position, ys: IntArray) -> FloatArray:
    """`T_n(x, y)` for every row of `ys`."""
    n = len(x)
    if ys.shape[0] == 0:
        return np.zeros(0)
    source = np.asarray(x, dtype=np.int64)
    blocks = symbol.coefficients(source[None, :, None] - ys[:, None, :])
    minors = np.linalg.det(blocks) if n > 1 else blocks[:, 0, 0]
    if _alphas_equal(alphas[:n]):
        a = float(alphas[0])
        ratio = a ** (ys.sum(axis=1) - source.sum()).astype(np.float64) * _vandermonde_rows(ys) / vandermonde(x)
    else:
        ratio = _alpha_dets(alphas[:n], ys) / _alpha_dets(alphas[:n], source[None, :])[0]
    return ratio * minors / _normalisation(symbol, alphas[:n])


def t_entry(alphas: typing.Sequence[float], symbol: Symbol, x: Position, y: Position) -> float:
    """
    T entry.

    `T_n(α_1, ..., α_n; F)(x, y)`. Equal weights use the confluent ratio
    `a^{Σy - Σx} Δ(y) / Δ(x)`.

    Raises
    ------
    InvalidArgumentException
        Raised when the weights are only partially equal.
    """
    if len(alphas) < len(x) or len(x) != len(y):
        raise InvalidArgumentException(f"cannot pair {len(x)} positions with {len(y)} and {len(alphas)} weights")
    return float(_t_row(alphas, symbol, tuple(x), np.asarray([y], dtype=np.int64).reshape(1, len(y)))[0])


def tlink_entry(alphas: typing.Sequence[float], symbol: Symbol, x: Position, y: Position) -> float:
    """
    Tlink entry.

    `T^n_{n-1}(α_1, ..., α_n; F)(x, y)` with `n = len(x)`, through the virtual
    column `α_n^{x_i}`. The weights must be pairwise distinct.
    """
    n = len(x)
    if len(alphas) < n or len(y) != n - 1:
        raise InvalidArgumentException(f"cannot link {n} positions to {len(y)}")
    if _alphas_equal(alphas[:n]) and n > 1:
        raise InvalidArgumentException("the link matrix of a general symbol needs distinct weights")
    a_n = float(alphas[n - 1])
    entries = [[float(symbol.coefficient(xi - yj)) for yj in y] + [a_n**xi] for xi in x]
    minor = float(np.linalg.det(np.asarray(entries)))
    top = _alpha_dets(alphas[: n - 1], np.asarray([y], dtype=np.int64).reshape(1, n - 1))[0]
    bottom = _alpha_dets(alphas[:n], np.asarray([x], dtype=np.int64))[0]
    return float(top / bottom * minor / _normalisation(symbol, alphas[: n - 1]))


def _interlaces(x: typing.Sequence[int], y: typing.Sequence[int]) -> bool:
    return all(x[i] < y[i] <= x[i + 1] for i in range(len(y)))


def _lambda_rows(alphas: typing.Sequence[float], xs: IntArray, y: Position) -> FloatArray:
    """`Λ(x, y)` for every row of `xs`, all assumed to interlace `y`."""
    n = xs.shape[1]
    if _alphas_equal(alphas[:n]):
        return math.factorial(n - 1) * vandermonde(y) / _vandermonde_rows(xs)
    a_n = float(alphas[n - 1])
    target = np.asarray([y], dtype=np.int64).reshape(1, n - 1)
    top = _alpha_dets(alphas[: n - 1], target)[0]
    bottom = _alpha_dets(alphas[:n], xs)
    sign = -1.0 if (n - 1) % 2 else 1.0
    factor = float(np.prod([1.0 - a_n / float(alpha) for alpha in alphas[: n - 1]]))
    return top / bottom * sign * a_n ** (xs.sum(axis=1) - sum(y)).astype(np.float64) * factor


def lambda_entry(alphas: typing.Sequence[float], x: Position, y: Position) -> float:
    """
    Lambda entry.

    `Λ(x, y) = T^n_{n-1}(α; (1 - α_n z)⁻¹)(x, y)`, in closed form. It vanishes
    unless `x_i < y_i <= x_{i+1}`. Equal weights give `(n-1)! Δ(y) / Δ(x)`.
    """
    n = len(x)
    if n < 2 or len(y) != n - 1 or len(alphas) < n:
        raise InvalidArgumentException(f"cannot link {n} positions to {len(y)}")
    if not _interlaces(x, y):
        return 0.0
    return float(_lambda_rows(alphas, np.asarray([x], dtype=np.int64), tuple(y))[0])


def build_T(n: int, alphas: typing.Sequence[float], symbol: Symbol, window: Window) -> TransitionMatrix:  # noqa: N802
    """
    Build T.

    The section of `T_n(α; F)` on the window, rows and columns alike.

    Raises
    ------
    InvalidArgumentException
        Raised when a weight is not positive, or `F(1/α_j) = 0`.
    """
    _check_symbol(symbol, alphas[:n])
    states = window.states(n)
    ys = np.asarray(states, dtype=np.int64).reshape(len(states), n)
    values = np.vstack([_t_row(alphas, symbol, x, ys) for x in states])
    _logger.debug(f"built T_{n} on {len(states)} states")
    return TransitionMatrix(states, states, values)


def build_Tlink(n: int, alphas: typing.Sequence[float], symbol: Symbol, window: Window) -> TransitionMatrix:  # noqa: N802
    """The section of `T^n_{n-1}(α; F)` on the window. The weights must be distinct."""
    _check_symbol(symbol, alphas[: n - 1])
    rows = window.states(n)
    cols = window.states(n - 1)
    values = np.asarray([[tlink_entry(alphas, symbol, x, y) for y in cols] for x in rows], dtype=np.float64)
    return TransitionMatrix(rows, cols, values)


def build_lambda(n: int, alphas: typing.Sequence[float], window: Window) -> TransitionMatrix:
    """The section of `Λ` on the window, from its closed form."""
    rows = window.states(n)
    cols = window.states(n - 1)
    values = np.asarray([[lambda_entry(alphas, x, y) for y in cols] for x in rows], dtype=np.float64)
    return TransitionMatrix(rows, cols, values)


def _check_symbol(symbol: Symbol, alphas: typing.Sequence[float]) -> None:
    if alphas:
        _alphas_equal(alphas)
    for alpha in alphas:
        if complex(symbol(1.0 / float(alpha))) == 0:
            raise InvalidArgumentException(f"F(1/α) vanishes at α = {alpha}")


# Identities


def _tail_margin(symbol: Symbol, alphas: typing.Sequence[float]) -> int:
    ratio = symbol.tail_ratio(alphas)
    if ratio == 0.0:
        return 2
    return math.ceil(math.log(TAIL_TOLERANCE) / math.log(ratio)) + 2


def _states_above(y: Position, lo: int, hi: int) -> IntArray:
    """Every `w` with `w_i < y_i <= w_{i+1}` and entries in `lo..hi`."""
    n = len(y) + 1
    ranges = [range(lo, y[0])]
    ranges.extend(range(y[i - 1], y[i]) for i in range(1, n - 1))
    ranges.append(range(y[-1], hi + 1))
    states = [w for w in itertools.product(*ranges) if all(a < b for a, b in zip(w, w[1:]))]
    return np.asarray(states, dtype=np.int64).reshape(len(states), n)


def _states_below(x: Position) -> IntArray:
    """Every `z` with `x_i < z_i <= x_{i+1}`."""
    ranges = [range(x[i] + 1, x[i + 1] + 1) for i in range(len(x) - 1)]
    states = list(itertools.product(*ranges))
    return np.asarray(states, dtype=np.int64).reshape(len(states), len(x) - 1)


def commutation_check(n: int, alphas: typing.Sequence[float], symbol: Symbol, window: Window) -> float:
    """
    Commutation check.

    The largest `|(Λ T_{n-1}(F))(x, y) - (T_n(F) Λ)(x, y)|` over `x ∈ 𝔛_n`
    and `y ∈ 𝔛_{n-1}` in the core of the window.

    The left side is a finite sum over `z` interlacing `x`. The right side
    sums over `w` interlacing `y`, truncated far enough beyond the window
    that the dropped tail is below `TAIL_TOLERANCE`.

    Parameters
    ----------
    n
        The top level, at least 2.
    alphas
        The weights `α_1, ..., α_n`.
    symbol
        The step symbol.
    window
        Where the compared states live.
    """
    if n < 2 or len(alphas) < n:
        raise InvalidArgumentException(f"commutation needs n >= 2 and n weights, got n = {n}, {len(alphas)} weights")
    _check_symbol(symbol, alphas[:n])
    margin = _tail_margin(symbol, alphas[:n])
    lo, hi = window.lo - margin, window.hi + margin
    xs = window.core(n)
    ys = window.core(n - 1, widen=1)

    above = {y: _states_above(y, lo, hi) for y in ys}
    links_above = {y: _lambda_rows(alphas, states, y) if states.size else np.zeros(0) for y, states in above.items()}
    ys_array = np.asarray(ys, dtype=np.int64).reshape(len(ys), n - 1)

    residual = 0.0
    for x in xs:
        below = _states_below(x)
        links = np.asarray([lambda_entry(alphas, x, tuple(z)) for z in below])
        # T_{n-1}(z, y) for every z below x and every y
        lower = np.vstack([_t_row(alphas[: n - 1], symbol, tuple(z), ys_array) for z in below])
        lhs = links @ lower
        for j, y in enumerate(ys):
            states = above[y]
            rhs = float(_t_row(alphas, symbol, x, states) @ links_above[y]) if states.size else 0.0
            residual = max(residual, abs(lhs[j] - rhs))
    _logger.log(TRACE_LEVEL, f"commutation residual {residual:.3e} for n = {n}, margin {margin}")
    return residual


def semigroup_check(
    n: int, alphas: typing.Sequence[float], first: Symbol, second: Symbol, window: Window
) -> float:
    """
    Semigroup check.

    The largest `|(T_n(F_1) T_n(F_2))(x, y) - T_n(F_1 F_2)(x, y)|` over the
    core of the window. `F_1` must be a Bernoulli symbol, so the intermediate
    sum is finite.
    """
    if first.kind is SymbolKind.BERNOULLI_LEFT:
        offsets = (-1, 0)
    elif first.kind is SymbolKind.BERNOULLI_RIGHT:
        offsets = (0, 1)
    else:
        raise InvalidArgumentException("the first factor must be a Bernoulli symbol")
    _check_symbol(first, alphas[:n])
    _check_symbol(second, alphas[:n])
    combined = Symbol.product(first, second)
    xs = window.core(n)
    ys = np.asarray(window.core(n, widen=1), dtype=np.int64).reshape(-1, n)
    residual = 0.0
    for x in xs:
        middle = [
            tuple(xi + d for xi, d in zip(x, shift))
            for shift in itertools.product(offsets, repeat=n)
        ]
        middle = [w for w in middle if all(a < b for a, b in zip(w, w[1:]))]
        steps = _t_row(alphas, first, x, np.asarray(middle, dtype=np.int64))
        lhs = sum(weight * _t_row(alphas, second, w, ys) for weight, w in zip(steps, middle))
        rhs = _t_row(alphas, combined, x, ys)
        residual = max(residual, float(np.max(np.abs(lhs - rhs))))
    return residual


def _check_top(x_star: Position, y: Position, law: StepLaw) -> int:
    n = len(x_star)
    if n < 2 or len(y) != n - 1:
        raise InvalidArgumentException(f"expected n >= 2 top positions and n - 1 lower ones, got {len(x_star)} and {len(y)}")
    if law.n < n:
        raise InvalidArgumentException(f"step law covers {law.n} levels, need {n}")
    _check_increasing("x*", x_star)
    _check_increasing("y", y)
    return n


def bivariate_conditionals(x_star: Position, y: Position, law: StepLaw) -> dict[Position, float]:
    """
    Bivariate conditionals.

    The law of the new top level `y*` of the sequential chain, given its old
    value `x*` and the new level below `y`: independent particles, each with
    weight `r^{y*_k}` on its conditioning segment (`r = law.ratio(n)`).
    Unbounded segments are cut where the geometric weight drops below
    `TAIL_TOLERANCE`.

    Raises
    ------
    InvalidArgumentException
        Raised when a segment is empty, so the pair is not reachable.
    """
    n = _check_top(x_star, y, law)
    lo, hi = conditional_segments(law.family, np.asarray(x_star, dtype=np.int64), np.asarray(y, dtype=np.int64))
    if np.any(lo > hi):
        raise InvalidArgumentException(f"no top level is compatible with x* = {x_star} and y = {y}")
    ratio = law.ratio(n)
    if (np.any(np.isinf(lo)) and ratio <= 1.0) or (np.any(np.isinf(hi)) and ratio >= 1.0):
        raise InvalidArgumentException(f"the segments of x* = {x_star} are unbounded against the ratio {ratio}")
    cut = 0 if ratio == 1.0 else math.ceil(math.log(TAIL_TOLERANCE) / math.log(min(ratio, 1.0 / ratio)))
    options: list[list[tuple[int, float]]] = []
    for k in range(n):
        start = int(lo[k]) if np.isfinite(lo[k]) else int(hi[k]) - cut
        stop = int(hi[k]) if np.isfinite(hi[k]) else int(lo[k]) + cut
        options.append([(v, segment_probability(v, float(lo[k]), float(hi[k]), ratio)) for v in range(start, stop + 1)])
    return {
        tuple(v for v, _ in choice): math.prod(p for _, p in choice)
        for choice in itertools.product(*options)
    }


def conditional_ratio(x_star: Position, y: Position, y_star: Position, law: StepLaw) -> float:
    """
    Conditional ratio.

    `P*(x*, y*) Λ(y*, y) / Δ(x*, y)` from the transfer matrices, with
    `P* = T_n(α; F)`, `P = T_{n-1}(α; F)` and `Δ(x*, y) = Σ_z Λ(x*, z) P(z, y)`.

    Raises
    ------
    InvalidArgumentException
        Raised when `Δ(x*, y)` vanishes.
    """
    n = _check_top(x_star, y, law)
    symbol = Symbol.from_law(law)
    alphas = law.alphas[:n]
    below = _states_below(tuple(x_star))
    links = np.asarray([lambda_entry(alphas, tuple(x_star), tuple(z)) for z in below])
    target = np.asarray([y], dtype=np.int64).reshape(1, n - 1)
    delta = float(sum(link * _t_row(alphas[: n - 1], symbol, tuple(z), target)[0] for link, z in zip(links, below)))
    if not delta > 0.0:
        raise InvalidArgumentException(f"Δ(x*, y) vanishes for x* = {x_star}, y = {y}")
    top = t_entry(alphas, symbol, tuple(x_star), tuple(y_star))
    return top * lambda_entry(alphas, tuple(y_star), tuple(y)) / delta


def intertwining_check(law: StepLaw, x_top: Position, window: Window | None = None) -> float:
    """
    Intertwining check.

    For two levels: the largest
    `|Σ_{x¹} Λ(x², x¹) P_Λ((x¹, x²) -> (y¹, y²)) - P*(x², y²) Λ(y², y¹)|`
    over `y²` near `x²` and `y¹` interlacing `y²`. The sequential law comes
    from its closed form and the right side from the transfer matrices.

    Parameters
    ----------
    law
        The step law, covering two levels.
    x_top
        The starting top level `x²`.
    window
        Where `y²` ranges. Defaults to `CHECK_HALF_SPAN` sites around `x²`.
    """
    if len(x_top) != 2:
        raise InvalidArgumentException(f"the top level must hold 2 positions, got {len(x_top)}")
    if law.n < 2:
        raise InvalidArgumentException("the step law must cover two levels")
    _check_increasing("x_top", x_top)
    symbol = Symbol.from_law(law)
    alphas = law.alphas[:2]
    if window is None:
        window = Window(lo=x_top[0] - CHECK_HALF_SPAN, hi=x_top[1] + CHECK_HALF_SPAN, n=2)
    starts = list(range(x_top[0] + 1, x_top[1] + 1))
    start_weights = [lambda_entry(alphas, tuple(x_top), (z,)) for z in starts]
    residual = 0.0
    for y_top in window.states(2):
        rhs_top = t_entry(alphas, symbol, tuple(x_top), y_top)
        for y_low in range(y_top[0] + 1, y_top[1] + 1):
            rhs = rhs_top * lambda_entry(alphas, y_top, (y_low,))
            target = InterlacingArray.from_levels([[y_low], list(y_top)])
            lhs = sum(
                weight * seq_transition_probability(InterlacingArray.from_levels([[z], list(x_top)]), target, law)
                for z, weight in zip(starts, start_weights)
            )
            residual = max(residual, abs(lhs - rhs))
    return residual


# MIT License

# Copyright (c) 2024 The akpz developers

# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:

# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.

# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.
