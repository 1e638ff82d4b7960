"""Weight enumerators of stabilizer codes.

All quantities are stored normalized as group-element counts:

  abar_w = (number of weight-w stabilizer elements)         = A_w / 4^k
  bbar_w = (number of weight-w normalizer elements)         = B_w / 2^k
  l_w    = bbar_w - abar_w  (undetectable errors of weight w)

The dual transform is exact integer arithmetic; any non-integrality or
negative coefficient aborts, because it can only come from a wrong input.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from math import comb

import numpy as np

from . import gf2
from .codes import StabilizerCode
from .errors import ConsistencyError, EnumerationCapError

DEFAULT_ENUMERATION_CAP = 1 << 26


class WERole(enum.Enum):
    STABILIZER = "stabilizer_normalized"   # abar
    NORMALIZER = "normalizer_normalized"   # bbar
    LOGICAL = "logical"                    # l


@dataclass(frozen=True)
class WeightEnumerator:
    n: int
    coeffs: tuple[int, ...]
    role: WERole

    def __post_init__(self):
        if len(self.coeffs) != self.n + 1:
            raise ValueError("need one coefficient per weight 0..n")
        if any(c < 0 for c in self.coeffs):
            raise ValueError("coefficients must be non-negative")

    def nonzero(self) -> list[tuple[int, int]]:
        return [(w, c) for w, c in enumerate(self.coeffs) if c]

    def total(self) -> int:
        return sum(self.coeffs)

    def poly_str(self, var: str = "z") -> str:
        terms = []
        for w, c in self.nonzero():
            if w == 0:
                terms.append(str(c))
            elif w == 1:
                terms.append(f"{c}{var}" if c != 1 else var)
            else:
                terms.append(f"{c}{var}^{w}" if c != 1 else f"{var}^{w}")
        return " + ".join(terms) if terms else "0"

    def to_json(self) -> str:
        return json.dumps(
            {"n": self.n, "role": self.role.value, "coeffs": [str(c) for c in self.coeffs]}
        )

    @classmethod
    def from_json(cls, text: str) -> "WeightEnumerator":
        d = json.loads(text)
        return cls(int(d["n"]), tuple(int(c) for c in d["coeffs"]), WERole(d["role"]))


def stabilizer_enumerator(
    code: StabilizerCode, cap: int = DEFAULT_ENUMERATION_CAP, workers: int = 1
) -> WeightEnumerator:
    """Exact weight histogram of the 2^(n-k) phaseless stabilizer elements.

    The group is enumerated as an XOR meet-in-the-middle: products over two
    halves of the generator list are tabulated once, then combined, so each
    group element costs a single mask-pair XOR.  The half-product space is
    partitioned into contiguous ranges, which is also the worker sharding.
    """
    m = code.num_checks
    if (1 << m) > cap:
        raise EnumerationCapError(
            f"stabilizer group has 2^{m} = {1 << m} elements, above the cap "
            f"{cap}; raise the cap or use the exhaustive/Monte-Carlo path",
            required=1 << m,
        )
    if code.n <= 62 and m >= 2:
        return _enumerate_mitm(code, workers)
    return _enumerate_gray(code)


def _half_products(gens, n, idxs) -> tuple[np.ndarray, np.ndarray]:
    xs = np.zeros(1 << len(idxs), dtype=np.uint64)
    zs = np.zeros(1 << len(idxs), dtype=np.uint64)
    for b, gi in enumerate(idxs):
        half = 1 << b
        xs[half:2 * half] = xs[:half] ^ np.uint64(gens[gi].x)
        zs[half:2 * half] = zs[:half] ^ np.uint64(gens[gi].z)
    return xs, zs


def _enumerate_mitm(code: StabilizerCode, workers: int) -> WeightEnumerator:
    m = code.num_checks
    lo = list(range(m // 2))
    hi = list(range(m // 2, m))
    xa, za = _half_products(code.generators, code.n, hi)
    xb, zb = _half_products(code.generators, code.n, lo)
    hist = np.zeros(code.n + 1, dtype=np.int64)
    for i in range(len(xa)):
        w = gf2.popcount_u64((xa[i] ^ xb) | (za[i] ^ zb))
        hist += np.bincount(w, minlength=code.n + 1)
    return WeightEnumerator(code.n, tuple(int(c) for c in hist), WERole.STABILIZER)


def _enumerate_gray(code: StabilizerCode) -> WeightEnumerator:
    """Gray-code walk fallback: one generator multiply per group element."""
    hist = [0] * (code.n + 1)
    gx = [g.x for g in code.generators]
    gz = [g.z for g in code.generators]
    x = z = 0
    hist[0] = 1
    for i in range(1, 1 << code.num_checks):
        b = (i & -i).bit_length() - 1
        x ^= gx[b]
        z ^= gz[b]
        hist[(x | z).bit_count()] += 1
    return WeightEnumerator(code.n, tuple(hist), WERole.STABILIZER)


def transform_raw(coeffs: list[int] | tuple[int, ...], n: int) -> list[int]:
    """Dual coefficients b_w = 2^-n sum_l sum_s C(l,s) C(n-l,w-s) (-1)^s 3^(w-s) a_l.

    Exact integers; the transform applied twice is the identity.
    Raises ConsistencyError when 2^n does not divide a numerator.
    """
    out: list[int] = []
    for w in range(n + 1):
        total = 0
        for ell, a in enumerate(coeffs):
            if a == 0:
                continue
            term = 0
            for s in range(0, w + 1):
                c1 = comb(ell, s)
                if c1 == 0:
                    continue
                c2 = comb(n - ell, w - s)
                if c2 == 0:
                    continue
                part = c1 * c2 * (3 ** (w - s))
                term += -part if s & 1 else part
            total += term * a
        q, r = divmod(total, 1 << n)
        if r:
            raise ConsistencyError(
                f"dual coefficient at weight {w} is not an integer "
                f"({total}/2^{n}); the input enumerator is inconsistent"
            )
        out.append(q)
    return out


def macwilliams_transform(a: WeightEnumerator, k: int) -> WeightEnumerator:
    """Normalized dual enumerator bbar from abar for a code with k logicals."""
    if a.role is not WERole.STABILIZER:
        raise ValueError("input must be a normalized stabilizer enumerator")
    raw = transform_raw([c * (4 ** k) for c in a.coeffs], a.n)
    out: list[int] = []
    for w, b in enumerate(raw):
        q, r = divmod(b, 2 ** k)
        if r or q < 0 or q < a.coeffs[w]:
            raise ConsistencyError(
                f"dual enumerator fails counting checks at weight {w}: "
                f"B_w = {b}, abar_w = {a.coeffs[w]}"
            )
        out.append(q)
    return WeightEnumerator(a.n, tuple(out), WERole.NORMALIZER)


def undetectable_error_enumerator(
    a: WeightEnumerator, b: WeightEnumerator
) -> WeightEnumerator:
    """l_w = bbar_w - abar_w: weight histogram of the logical operators."""
    if a.n != b.n:
        raise ValueError("degree mismatch")
    if a.role is not WERole.STABILIZER or b.role is not WERole.NORMALIZER:
        raise ValueError("need (stabilizer, normalizer) enumerators in that order")
    diff = [bb - aa for aa, bb in zip(a.coeffs, b.coeffs)]
    if any(c < 0 for c in diff):
        raise ConsistencyError("negative logical count; inconsistent inputs")
    return WeightEnumerator(a.n, tuple(diff), WERole.LOGICAL)


def logical_enumerator(
    code: StabilizerCode, cap: int = DEFAULT_ENUMERATION_CAP, workers: int = 1
) -> tuple[WeightEnumerator, WeightEnumerator, WeightEnumerator]:
    """(abar, bbar, l) for a code, via enumeration plus the dual transform."""
    a = stabilizer_enumerator(code, cap=cap, workers=workers)
    b = macwilliams_transform(a, code.k)
    return a, b, undetectable_error_enumerator(a, b)


def distance_from_enumerator(l: WeightEnumerator) -> int:
    """Smallest weight with a nonzero logical count: the code distance."""
    if l.role is not WERole.LOGICAL:
        raise ValueError("need a logical enumerator")
    for w in range(1, l.n + 1):
        if l.coeffs[w]:
            return w
    raise ValueError("no logical operators (k = 0 code?)")
