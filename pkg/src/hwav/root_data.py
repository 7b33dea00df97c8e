"""Root systems of the seven Hermitian symmetric pairs.

Coordinates live in the ambient epsilon basis. Roots are stored with doubled
integer coordinates (every root used here has denominators 1 or 2), so the
integrality tests that drive everything else are plain integer arithmetic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Sequence

import numpy as np

from .rational import common_denominator, inverse_exact, scale_to_integers


class Family(enum.Enum):
    SU = "su"
    SP = "sp"
    SOSTAR = "sostar"
    SO_ODD = "so_odd"
    SO_EVEN = "so_even"
    E6 = "e6"
    E7 = "e7"


_LOWER_BOUNDS = {
    Family.SP: 2,
    Family.SOSTAR: 4,
    Family.SO_ODD: 3,
    Family.SO_EVEN: 4,
}

_REAL_NAMES = {
    Family.SU: "su({p},{q})",
    Family.SP: "sp({m},R)",
    Family.SOSTAR: "so*({m})",
    Family.SO_ODD: "so(2,{odd})",
    Family.SO_EVEN: "so(2,{even})",
    Family.E6: "e6(-14)",
    Family.E7: "e7(-25)",
}


class ParameterError(ValueError):
    pass


@dataclass(frozen=True)
class HermitianType:
    """One Hermitian family together with its rank parameters.

    ``params`` is ``(p, q)`` for SU, ``(n,)`` for the other classical
    families and ``()`` for E6/E7.
    """

    family: Family
    params: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        fam, params = self.family, self.params
        if fam is Family.SU:
            if len(params) != 2:
                raise ParameterError("SU needs parameters (p, q)")
            p, q = params
            if p < 1 or q < 1:
                raise ParameterError(f"SU(p,q) requires p >= 1 and q >= 1, got p={p}, q={q}")
        elif fam in (Family.E6, Family.E7):
            if params:
                raise ParameterError(f"{fam.name} takes no rank parameter")
        else:
            if len(params) != 1:
                raise ParameterError(f"{fam.name} needs a single parameter n")
            (n,) = params
            low = _LOWER_BOUNDS[fam]
            if n < low:
                raise ParameterError(f"{fam.name}(n) requires n >= {low}, got n={n}")

    @classmethod
    def su(cls, p: int, q: int) -> "HermitianType":
        return cls(Family.SU, (p, q))

    @classmethod
    def sp(cls, n: int) -> "HermitianType":
        return cls(Family.SP, (n,))

    @classmethod
    def sostar(cls, n: int) -> "HermitianType":
        return cls(Family.SOSTAR, (n,))

    @classmethod
    def so_odd(cls, n: int) -> "HermitianType":
        return cls(Family.SO_ODD, (n,))

    @classmethod
    def so_even(cls, n: int) -> "HermitianType":
        return cls(Family.SO_EVEN, (n,))

    @classmethod
    def e6(cls) -> "HermitianType":
        return cls(Family.E6)

    @classmethod
    def e7(cls) -> "HermitianType":
        return cls(Family.E7)

    @property
    def n(self) -> int:
        if self.family is Family.SU:
            return sum(self.params)
        if self.family is Family.E6:
            return 6
        if self.family is Family.E7:
            return 7
        return self.params[0]

    @property
    def real_rank(self) -> int:
        fam = self.family
        if fam is Family.SU:
            return min(self.params)
        if fam is Family.SP:
            return self.n
        if fam is Family.SOSTAR:
            return self.n // 2
        if fam is Family.E7:
            return 3
        return 2

    @property
    def ambient_dim(self) -> int:
        if self.family in (Family.E6, Family.E7):
            return 8
        return self.n

    @property
    def rank(self) -> int:
        if self.family is Family.SU:
            return self.n - 1
        return self.n

    @property
    def simply_laced(self) -> bool:
        return self.family not in (Family.SP, Family.SO_ODD)

    @property
    def appendix_c(self) -> int | None:
        return {
            Family.SU: 1,
            Family.SOSTAR: 2,
            Family.SO_EVEN: self.n - 2 if self.family is Family.SO_EVEN else None,
            Family.E6: 3,
            Family.E7: 4,
        }.get(self.family)

    @property
    def real_form(self) -> str:
        fam = self.family
        if fam is Family.SU:
            p, q = self.params
            return _REAL_NAMES[fam].format(p=p, q=q)
        n = self.n if fam not in (Family.E6, Family.E7) else 0
        return _REAL_NAMES[fam].format(m=2 * n, odd=2 * n - 1, even=2 * n - 2)

    def __str__(self) -> str:
        if self.params:
            return f"{self.family.name}({','.join(map(str, self.params))})"
        return self.family.name


@dataclass(frozen=True)
class Root:
    """A root given by doubled epsilon coordinates and simple-root coefficients."""

    eps2: tuple[int, ...]
    simple: tuple[int, ...]

    @property
    def eps(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, 2) for x in self.eps2)

    @property
    def height(self) -> int:
        return sum(self.simple)

    @property
    def norm2(self) -> Fraction:
        return Fraction(sum(x * x for x in self.eps2), 4)

    def __str__(self) -> str:
        return format_eps(self.eps)


def format_eps(v: Sequence[Fraction]) -> str:
    """Render a vector as a signed combination of epsilons, e.g. ``ε1+ε2``."""
    nonzero = [(i, Fraction(x)) for i, x in enumerate(v) if x != 0]
    if not nonzero:
        return "0"
    mags = {abs(x) for _, x in nonzero}
    common = Fraction(1)
    if len(nonzero) > 1 and len(mags) == 1 and mags != {Fraction(1)}:
        common = mags.pop()
    terms = []
    for i, x in nonzero:
        c = x / common
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        coeff = "" if mag == 1 else (str(mag.numerator) if mag.denominator == 1 else f"{mag}")
        terms.append(f"{sign}{coeff}ε{i + 1}")
    body = "".join(terms).lstrip("+")
    if common != 1:
        return f"{common}({body})"
    return body


def _unit(dim: int, i: int, c: int = 2) -> list[int]:
    v = [0] * dim
    v[i] = c
    return v


def _add(*vs: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(xs) for xs in zip(*vs))


def _neg(v: Sequence[int]) -> list[int]:
    return [-x for x in v]


def _classical_roots(htype: HermitianType) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]], int]:
    """Explicit doubled coordinates: (positive roots, simple roots, noncompact simple index)."""
    fam, n = htype.family, htype.n
    e = lambda i: _unit(n, i)  # noqa: E731
    pos: list[tuple[int, ...]] = []
    for i in range(n):
        for j in range(i + 1, n):
            pos.append(_add(e(i), _neg(e(j))))
            if fam is not Family.SU:
                pos.append(_add(e(i), e(j)))
        if fam is Family.SP:
            pos.append(tuple(_unit(n, i, 4)))
        elif fam is Family.SO_ODD:
            pos.append(tuple(e(i)))
    simple = [_add(e(i), _neg(e(i + 1))) for i in range(n - 1)]
    if fam is Family.SP:
        simple.append(tuple(_unit(n, n - 1, 4)))
    elif fam is Family.SO_ODD:
        simple.append(tuple(e(n - 1)))
    elif fam in (Family.SOSTAR, Family.SO_EVEN):
        simple.append(_add(e(n - 2), e(n - 1)))
    nc = {
        Family.SU: htype.params[0] - 1,
        Family.SP: n - 1,
        Family.SOSTAR: n - 1,
        Family.SO_ODD: 0,
        Family.SO_EVEN: 0,
    }[fam]
    return pos, simple, nc


def exceptional_simple_roots(rank: int) -> list[tuple[int, ...]]:
    """Doubled coordinates of alpha_1..alpha_rank for E6/E7 inside R^8."""
    a1 = (1, -1, -1, -1, -1, -1, -1, 1)
    a2 = (2, 2, 0, 0, 0, 0, 0, 0)
    roots = [a1, a2]
    for k in range(3, rank + 1):
        v = [0] * 8
        v[k - 2] = 2
        v[k - 3] = -2
        roots.append(tuple(v))
    return roots


def _close_under_simple_addition(simple: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    # simply laced: beta + alpha_i is a root iff it has the common root length
    target = sum(x * x for x in simple[0])
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for alpha in simple:
                gamma = _add(beta, alpha)
                if gamma not in seen and sum(x * x for x in gamma) == target:
                    seen.add(gamma)
                    nxt.append(gamma)
        frontier = nxt
    return sorted(seen)


@dataclass(frozen=True)
class RootSystemData:
    htype: HermitianType
    positive_roots: tuple[Root, ...]
    compact_positive: tuple[Root, ...]
    noncompact_positive: tuple[Root, ...]
    simple_roots: tuple[Root, ...]
    noncompact_simple_index: int
    rho: tuple[Fraction, ...]
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def noncompact_simple(self) -> Root:
        return self.simple_roots[self.noncompact_simple_index]

    @cached_property
    def _pos_matrix(self) -> np.ndarray:
        return np.array([r.eps2 for r in self.positive_roots], dtype=np.int64)

    @cached_property
    def _pos_norm(self) -> np.ndarray:
        # |2 alpha|^2
        return np.array([sum(x * x for x in r.eps2) for r in self.positive_roots], dtype=np.int64)

    @cached_property
    def noncompact_mask(self) -> np.ndarray:
        nc = self.noncompact_simple_index
        return np.array([r.simple[nc] == 1 for r in self.positive_roots], dtype=bool)

    def pairing_fractions(self, v: Sequence[Fraction]) -> tuple[np.ndarray, np.ndarray]:
        """Numerators and positive denominators of <v, alpha^vee> over all positive roots."""
        if len(v) != self.htype.ambient_dim:
            raise ValueError(
                f"weight has {len(v)} coordinates, {self.htype} needs {self.htype.ambient_dim}"
            )
        V, D = scale_to_integers(v)
        bound = max((abs(x) for x in V), default=0) * 4 * 4 * len(V)
        if bound < 2**60 and D * 16 < 2**60:
            vec = np.array(V, dtype=np.int64)
            num = 4 * (self._pos_matrix @ vec)
            den = D * self._pos_norm
        else:
            vec = np.array(V, dtype=object)
            num = 4 * (self._pos_matrix.astype(object) @ vec)
            den = self._pos_norm.astype(object) * D
        return num, den

    def pairings(self, v: Sequence[Fraction]) -> list[Fraction]:
        num, den = self.pairing_fractions(v)
        return [Fraction(int(a), int(b)) for a, b in zip(num, den)]

    def index_of(self, root: Root) -> int:
        idx = self._cache.get("pos_index")
        if idx is None:
            idx = {r.eps2: i for i, r in enumerate(self.positive_roots)}
            self._cache["pos_index"] = idx
        return idx[root.eps2]

    def is_root(self, eps2: Sequence[int]) -> bool:
        roots = self._cache.get("all_roots")
        if roots is None:
            roots = {r.eps2 for r in self.positive_roots} | {
                tuple(-x for x in r.eps2) for r in self.positive_roots
            }
            self._cache["all_roots"] = roots
        return tuple(eps2) in roots


def coroot_pairing(v: Sequence[Fraction], alpha: Root) -> Fraction:
    """Return 2(v, alpha)/(alpha, alpha) exactly."""
    if len(v) != len(alpha.eps2):
        raise ValueError(f"dimension mismatch: weight has {len(v)} coordinates, root has {len(alpha.eps2)}")
    dot = sum(Fraction(x) * y for x, y in zip(v, alpha.eps2))  # = 2 (v, alpha)
    return 4 * dot / sum(x * x for x in alpha.eps2) if dot else Fraction(0)


def _dual_basis_coefficients(simple: list[tuple[int, ...]]) -> tuple[list[list[int]], int]:
    """Inverse Gram matrix of the simple roots as (integer matrix, common denominator)."""
    k = len(simple)
    gram = [[Fraction(sum(a * b for a, b in zip(simple[i], simple[j]))) for j in range(k)] for i in range(k)]
    inv = inverse_exact(gram)
    d = common_denominator(x for row in inv for x in row)
    return [[int(x * d) for x in row] for row in inv], d


def _simple_coordinates(root: tuple[int, ...], simple: list[tuple[int, ...]], ginv) -> tuple[int, ...]:
    matrix, d = ginv
    dots = [sum(a * b for a, b in zip(s, root)) for s in simple]
    coeffs = []
    for row in matrix:
        c, rem = divmod(sum(g * x for g, x in zip(row, dots)), d)
        if rem:
            raise ArithmeticError(f"root {root} is not an integral combination of simple roots")
        coeffs.append(c)
    return tuple(coeffs)


@lru_cache(maxsize=None)
def build_root_data(htype: HermitianType) -> RootSystemData:
    fam = htype.family
    if fam in (Family.E6, Family.E7):
        simple2 = exceptional_simple_roots(htype.rank)
        pos2 = _close_under_simple_addition(simple2)
        nc_index = 0 if fam is Family.E6 else 6
    else:
        pos2, simple2, nc_index = _classical_roots(htype)
    ginv = _dual_basis_coefficients(simple2)
    roots = []
    for r in pos2:
        coeffs = _simple_coordinates(r, simple2, ginv)
        if min(coeffs) < 0:
            raise ArithmeticError(f"{r} is not positive for the chosen simple roots")
        roots.append(Root(tuple(r), coeffs))
    roots.sort(key=lambda r: (r.height, r.eps2))
    by_eps = {r.eps2: r for r in roots}
    simple = tuple(by_eps[tuple(s)] for s in simple2)
    noncompact = tuple(r for r in roots if r.simple[nc_index] == 1)
    compact = tuple(r for r in roots if r.simple[nc_index] == 0)
    if len(noncompact) + len(compact) != len(roots):
        raise ArithmeticError("noncompact simple root appears with coefficient > 1")
    dim = htype.ambient_dim
    rho = tuple(Fraction(sum(r.eps2[i] for r in roots), 4) for i in range(dim))
    return RootSystemData(
        htype=htype,
        positive_roots=tuple(roots),
        compact_positive=compact,
        noncompact_positive=noncompact,
        simple_roots=simple,
        noncompact_simple_index=nc_index,
        rho=rho,
    )


def weight_from_coroot_labels(rs: RootSystemData, labels: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Return the vector in the span of the roots with the given simple coroot labels."""
    k = len(rs.simple_roots)
    if len(labels) != k:
        raise ValueError(f"{rs.htype} has {k} simple roots, got {len(labels)} labels")
    inverse = rs._cache.get("cartan_inverse")
    if inverse is None:
        # v = sum_j x_j alpha_j and <v, alpha_i^vee> = sum_j x_j <alpha_j, alpha_i^vee>
        cartan = [
            [coroot_pairing(rs.simple_roots[j].eps, rs.simple_roots[i]) for j in range(k)] for i in range(k)
        ]
        inverse = inverse_exact(cartan)
        rs._cache["cartan_inverse"] = inverse
    x = [sum((row[j] * Fraction(labels[j]) for j in range(k)), Fraction(0)) for row in inverse]
    dim = rs.htype.ambient_dim
    return tuple(
        sum((x[j] * Fraction(rs.simple_roots[j].eps2[d], 2) for j in range(k)), Fraction(0)) for d in range(dim)
    )
