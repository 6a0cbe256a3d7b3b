"""Root and weight lattice arithmetic for affine type A_{ell-1}^{(1)}.

Roots are stored in the basis of simple roots ``alpha_0 .. alpha_{ell-1}``;
weights in the basis ``Lambda_0 .. Lambda_{ell-1}, delta``.  Everything is
plain Python ``int`` so there is no overflow to worry about.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

MAX_REDUCTION_STEPS = 100_000


class DimensionError(ValueError):
    """Vectors built over different ``ell`` were combined."""


@dataclass(frozen=True)
class Context:
    """The pair ``(ell, r)``: order of the cyclic group and the level.

    ``transpose_residues`` switches nodes to the ``b - a + s`` residue
    convention; it exists only so the verifier can demonstrate that the
    convention matters, never set it otherwise.
    """

    ell: int
    r: int
    transpose_residues: bool = False

    def __post_init__(self):
        if not isinstance(self.ell, int) or self.ell < 2:
            raise ValueError(f"ell must be an integer >= 2, got {self.ell!r}")
        if not isinstance(self.r, int) or self.r < 1:
            raise ValueError(f"r must be an integer >= 1, got {self.r!r}")


@dataclass(frozen=True)
class RootVector:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def zero(cls, ell: int) -> RootVector:
        return cls((0,) * ell)

    @classmethod
    def simple(cls, ell: int, i: int) -> RootVector:
        c = [0] * ell
        c[i % ell] = 1
        return cls(c)

    @classmethod
    def null(cls, ell: int) -> RootVector:
        """The null root delta = sum of all simple roots."""
        return cls((1,) * ell)

    @property
    def ell(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i % len(self.coeffs)]

    def __iter__(self):
        return iter(self.coeffs)

    def _check(self, other: RootVector):
        if not isinstance(other, RootVector):
            return NotImplemented
        if other.ell != self.ell:
            raise DimensionError(f"root vectors over ell={self.ell} and ell={other.ell}")
        return None

    def __add__(self, other: RootVector) -> RootVector:
        if self._check(other) is NotImplemented:
            return NotImplemented
        return RootVector(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: RootVector) -> RootVector:
        if self._check(other) is NotImplemented:
            return NotImplemented
        return RootVector(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self) -> RootVector:
        return RootVector(-a for a in self.coeffs)

    def __mul__(self, k: int) -> RootVector:
        if not isinstance(k, int):
            return NotImplemented
        return RootVector(k * a for a in self.coeffs)

    __rmul__ = __mul__

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    @classmethod
    def from_json(cls, data: Sequence[int]) -> RootVector:
        return cls(data)

    def __repr__(self):
        return f"RootVector({list(self.coeffs)})"


@dataclass(frozen=True)
class WeightVector:
    lam: tuple[int, ...]
    delta: int = 0

    def __post_init__(self):
        object.__setattr__(self, "lam", tuple(int(c) for c in self.lam))
        object.__setattr__(self, "delta", int(self.delta))

    @classmethod
    def fundamental(cls, ell: int, i: int) -> WeightVector:
        lam = [0] * ell
        lam[i % ell] = 1
        return cls(lam)

    @classmethod
    def null(cls, ell: int) -> WeightVector:
        return cls((0,) * ell, 1)

    @property
    def ell(self) -> int:
        return len(self.lam)

    @property
    def level(self) -> int:
        return sum(self.lam)

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.lam)

    def _check(self, other):
        if not isinstance(other, WeightVector):
            return NotImplemented
        if other.ell != self.ell:
            raise DimensionError(f"weights over ell={self.ell} and ell={other.ell}")
        return None

    def __add__(self, other: WeightVector) -> WeightVector:
        if self._check(other) is NotImplemented:
            return NotImplemented
        return WeightVector((a + b for a, b in zip(self.lam, other.lam)), self.delta + other.delta)

    def __sub__(self, other: WeightVector) -> WeightVector:
        if self._check(other) is NotImplemented:
            return NotImplemented
        return WeightVector((a - b for a, b in zip(self.lam, other.lam)), self.delta - other.delta)

    def __neg__(self) -> WeightVector:
        return WeightVector((-a for a in self.lam), -self.delta)

    def __mul__(self, k: int) -> WeightVector:
        if not isinstance(k, int):
            return NotImplemented
        return WeightVector((k * a for a in self.lam), k * self.delta)

    __rmul__ = __mul__

    def to_json(self) -> dict:
        return {"lam": list(self.lam), "delta": self.delta}

    @classmethod
    def from_json(cls, data: dict) -> WeightVector:
        return cls(data["lam"], data.get("delta", 0))

    def __repr__(self):
        return f"WeightVector(lam={list(self.lam)}, delta={self.delta})"


@dataclass(frozen=True)
class Multicharge:
    """A multicharge in (Z/ell Z)^r, stored as representatives in [0, ell)."""

    residues: tuple[int, ...]
    ell: int

    def __post_init__(self):
        if self.ell < 2:
            raise ValueError(f"ell must be >= 2, got {self.ell}")
        object.__setattr__(self, "residues", tuple(int(s) % self.ell for s in self.residues))

    @classmethod
    def from_ints(cls, values: Iterable[int], ell: int) -> Multicharge:
        return cls(tuple(values), ell)

    @property
    def r(self) -> int:
        return len(self.residues)

    def __getitem__(self, j: int) -> int:
        return self.residues[j]

    def __iter__(self):
        return iter(self.residues)

    def __len__(self):
        return len(self.residues)

    def to_json(self) -> list[int]:
        return list(self.residues)


class BlockInvariants(NamedTuple):
    alpha: RootVector
    k: int
    lambda_plus: WeightVector
    word: tuple[int, ...]


def _same_ell(ctx: Context, *vectors):
    for v in vectors:
        if v.ell != ctx.ell:
            raise DimensionError(f"vector over ell={v.ell} used with ell={ctx.ell}")


def _cartan_image(x: Sequence[int], ell: int) -> list[int]:
    # lam_i = 2 x_i - x_{i-1} - x_{i+1}; for ell=2 the two neighbours coincide
    return [2 * x[i] - x[(i - 1) % ell] - x[(i + 1) % ell] for i in range(ell)]


def cartan_pair(ctx: Context, x: RootVector, y: RootVector) -> int:
    """Symmetric bilinear form on the root lattice from the cyclic Cartan matrix."""
    _same_ell(ctx, x, y)
    cy = _cartan_image(y.coeffs, ctx.ell)
    return sum(a * b for a, b in zip(x.coeffs, cy))


def root_size(ctx: Context, x: RootVector) -> int:
    _same_ell(ctx, x)
    return sum(x.coeffs)


def root_as_weight(ctx: Context, x: RootVector) -> WeightVector:
    """Express a root in the weight basis; alpha_0 carries the delta term."""
    _same_ell(ctx, x)
    return WeightVector(_cartan_image(x.coeffs, ctx.ell), x.coeffs[0])


def charge_data(ctx: Context, s: Multicharge) -> tuple[WeightVector, RootVector]:
    """Return ``(Lambda^s, w^s)`` for a multicharge."""
    if s.ell != ctx.ell:
        raise DimensionError(f"multicharge over ell={s.ell} used with ell={ctx.ell}")
    w = [0] * ctx.ell
    for si in s:
        w[si] += 1
    return WeightVector(w), RootVector(w)


def reflect(ctx: Context, mu: WeightVector, i: int) -> WeightVector:
    """Simple reflection ``s_i * mu = mu - mu_i alpha_i``."""
    _same_ell(ctx, mu)
    i %= ctx.ell
    m = mu.lam[i]
    if m == 0:
        return mu
    return mu - m * root_as_weight(ctx, RootVector.simple(ctx.ell, i))


def apply_word(ctx: Context, mu: WeightVector, word: Iterable[int]) -> WeightVector:
    """Apply reflections left to right (the first letter acts first)."""
    for i in word:
        mu = reflect(ctx, mu, i)
    return mu


def dominant_reduce(ctx: Context, mu: WeightVector) -> tuple[WeightVector, tuple[int, ...]]:
    """Conjugate ``mu`` into the dominant chamber.

    Reflects at the smallest index with a negative coefficient until none is
    left.  Returns the dominant weight and the reflection word, in the order
    the reflections were applied.
    """
    _same_ell(ctx, mu)
    if mu.level <= 0:
        raise ValueError(f"dominant_reduce needs positive level, got {mu.level}")
    word: list[int] = []
    lam = list(mu.lam)
    delta = mu.delta
    ell = ctx.ell
    for _ in range(MAX_REDUCTION_STEPS):
        neg = next((i for i, c in enumerate(lam) if c < 0), None)
        if neg is None:
            return WeightVector(lam, delta), tuple(word)
        m = lam[neg]
        # mu - m * alpha_neg, with alpha_neg = 2Lam_neg - Lam_{neg-1} - Lam_{neg+1} (+ delta if neg = 0)
        lam[neg] -= 2 * m
        lam[(neg - 1) % ell] += m
        lam[(neg + 1) % ell] += m
        if neg == 0:
            delta -= m
        word.append(neg)
    raise RuntimeError("dominant_reduce exceeded its iteration cap; this is a bug")


def dot_reflect(ctx: Context, i: int, d: RootVector, s: Multicharge) -> RootVector:
    """The shifted action ``s_i . d = Lambda^s - s_i * (Lambda^s - d)``."""
    _same_ell(ctx, d)
    _, w = charge_data(ctx, s)
    i %= ctx.ell
    c = list(d.coeffs)
    c[i] = d[i - 1] + d[i + 1] - d[i] + w[i]
    return RootVector(c)


def block_invariants(ctx: Context, d: RootVector, s: Multicharge) -> BlockInvariants | None:
    """Compute ``(alpha_d, k_d, Lambda^+_d)`` for ``d``.

    Returns ``None`` when ``Lambda^s - d`` is not a weight of ``L(Lambda^s)``.
    The returned word takes ``Lambda^s - d`` to ``Lambda^+ - k delta``.
    """
    _same_ell(ctx, d)
    ls, w = charge_data(ctx, s)
    ell = ctx.ell
    c = list(d.coeffs)
    word: list[int] = []
    for _ in range(MAX_REDUCTION_STEPS):
        # coefficients of Lambda^s - weight(c)
        lam = [w[i] - (2 * c[i] - c[(i - 1) % ell] - c[(i + 1) % ell]) for i in range(ell)]
        neg = next((i for i, v in enumerate(lam) if v < 0), None)
        if neg is None:
            break
        c[neg] = c[(neg - 1) % ell] + c[(neg + 1) % ell] - c[neg] + w[neg]
        word.append(neg)
    else:
        raise RuntimeError("block_invariants exceeded its iteration cap; this is a bug")
    if min(c) < 0:
        return None
    k = min(c)
    alpha = RootVector(ci - k for ci in c)
    lp = ls - root_as_weight(ctx, alpha)
    return BlockInvariants(alpha, k, WeightVector(lp.lam, 0), tuple(word))


def c_gamma(ctx: Context, d: RootVector) -> WeightVector:
    """``c_Gamma(d) = sum_k <d, alpha_k> Lambda_k`` (no delta part)."""
    return WeightVector(root_as_weight(ctx, d).lam, 0)


def congruent_mod_delta(mu: WeightVector, nu: WeightVector) -> bool:
    if mu.ell != nu.ell:
        raise DimensionError(f"weights over ell={mu.ell} and ell={nu.ell}")
    return mu.lam == nu.lam


def roots_congruent_mod_delta(x: RootVector, y: RootVector) -> bool:
    """True iff ``x - y`` is an integer multiple of delta."""
    diff = (x - y).coeffs
    return all(v == diff[0] for v in diff)
