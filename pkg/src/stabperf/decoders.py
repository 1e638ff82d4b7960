"""Decoders: bounded-distance acceptance, exact ML coset decoding, and
minimum-weight perfect matching for surface codes.

Every pattern decoder is deterministic: a syndrome always maps to the same
correction, across runs and worker counts.  Ties are broken by a fixed
documented rule and flagged on the outcome.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import gf2
from .channels import QubitChannel
from .codes import (
    ResidualClass,
    ResidualTag,
    StabilizerCode,
    Syndrome,
    classify_residual,
    logical_signature,
    syndrome as code_syndrome,
)
from .errors import EnumerationCapError, GeometryError
from .pauli import Pauli

DEFAULT_ML_CAP = 1 << 24
_TIE_LOG_TOL = 1e-12


@dataclass(frozen=True)
class DecodeOutcome:
    """Correction proposed for a syndrome.

    residual_class describes error * correction and is filled in by
    decode_and_classify; a bare decode only sees the syndrome.
    """

    correction: Pauli | None
    tie: bool
    residual_class: ResidualClass | None = None


@dataclass(frozen=True)
class DecodeVerdict:
    success: bool
    signature: int | None
    outcome: DecodeOutcome


# ---------------------------------------------------------------------------
# Bounded-distance acceptance
# ---------------------------------------------------------------------------


def bd_accepts(e_g: int, e_z: int, j: int, i: int, ell: int) -> bool:
    """Does a (e_g generic + e_z extra-Z) bounded-distance decoder correct the
    class of weight-j errors with i Z's and ell X's?

    Accepted iff j <= e_g, or j <= e_g + e_z with i >= j - e_g, i.e. enough
    of the excess weight is pure Z.
    """
    if i < 0 or ell < 0 or i + ell > j:
        raise ValueError(f"bad class (j={j}, i={i}, ell={ell})")
    if j <= e_g:
        return True
    return j <= e_g + e_z and i >= j - e_g


@dataclass(frozen=True)
class BDDecoder:
    """Class-level decoder: corrects accepted patterns exactly, rejects the
    rest (no correction operator is produced for rejected patterns)."""

    e_g: int
    e_z: int

    def accepts_pattern(self, e: Pauli) -> bool:
        i = (e.z & ~e.x).bit_count()
        ell = (e.x & ~e.z).bit_count()
        return bd_accepts(self.e_g, self.e_z, e.weight, i, ell)

    def describe(self) -> str:
        return f"bd:{self.e_g},{self.e_z}"


# ---------------------------------------------------------------------------
# Exact maximum-likelihood coset decoding
# ---------------------------------------------------------------------------


class MLDecoder:
    """Degeneracy-aware ML: ranks the 4^k logical cosets of a syndrome's
    error set by total probability, summed over all 2^(n-k) stabilizer
    multiples of a representative.

    Ties (top cosets within 1e-12 relative probability) are flagged and
    broken toward the smallest logical signature, identity class first.
    The returned correction is the highest-probability element of the
    winning coset, smallest (x, z) masks on equal probability.
    """

    def __init__(self, code: StabilizerCode, channel: QubitChannel, cap: int = DEFAULT_ML_CAP):
        m = code.num_checks
        if (1 << m) > cap:
            raise EnumerationCapError(
                f"ML coset sums need 2^{m} stabilizer elements, above cap {cap}",
                required=1 << m,
            )
        if channel.rho <= 0.0:
            raise ValueError("ML decoding needs a channel with rho > 0")
        self.code = code
        self.channel = channel
        self._destabs = _destabilizers(code)
        # All stabilizer elements, as uint64 mask arrays.
        xs = np.zeros(1 << m, dtype=np.uint64)
        zs = np.zeros(1 << m, dtype=np.uint64)
        for b, g in enumerate(code.generators):
            half = 1 << b
            xs[half:2 * half] = xs[:half] ^ np.uint64(g.x)
            zs[half:2 * half] = zs[:half] ^ np.uint64(g.z)
        self._sx, self._sz = xs, zs
        # Logical coset representatives ordered by signature, identity first.
        reps: list[tuple[int, Pauli]] = []
        k = code.k
        for bits in range(4 ** k):
            p = Pauli.identity(code.n)
            for i in range(k):
                if (bits >> i) & 1:
                    p = p * code.logical_x[i]
                if (bits >> (k + i)) & 1:
                    p = p * code.logical_z[i]
            reps.append((logical_signature(code, p), p))
        reps.sort(key=lambda t: t[0])
        self._coset_reps = reps
        lpi, lpx, lpy, lpz = channel.log_probs()
        self._logp = (lpi, lpx, lpy, lpz)
        self.decode = lru_cache(maxsize=None)(self._decode)

    def pure_error(self, s: int) -> Pauli:
        """Any operator with the given syndrome (product of destabilizers)."""
        p = Pauli.identity(self.code.n)
        for i, d in enumerate(self._destabs):
            if (s >> i) & 1:
                p = p * d
        return p

    def _coset_logprobs(self, s: int) -> tuple[list[float], list[Pauli]]:
        e0 = self.pure_error(s)
        lpi, lpx, lpy, lpz = self._logp
        n = self.code.n
        logps: list[float] = []
        bests: list[Pauli] = []
        for _, rep in self._coset_reps:
            ex = self._sx ^ np.uint64(e0.x ^ rep.x)
            ez = self._sz ^ np.uint64(e0.z ^ rep.z)
            ny = gf2.popcount_u64(ex & ez).astype(np.float64)
            nx = gf2.popcount_u64(ex).astype(np.float64) - ny
            nz = gf2.popcount_u64(ez).astype(np.float64) - ny
            ni = float(n) - nx - ny - nz
            lp = nx * lpx + ny * lpy + nz * lpz + ni * lpi
            mx = float(lp.max())
            logps.append(mx + math.log(float(np.exp(lp - mx).sum())))
            top = np.nonzero(lp >= mx - 1e-15)[0]
            pick = min(top, key=lambda i: (int(ex[i]), int(ez[i])))
            bests.append(Pauli(n, int(ex[pick]), int(ez[pick])))
        return logps, bests

    def _decode(self, s: int) -> DecodeOutcome:
        logps, bests = self._coset_logprobs(s)
        best = max(logps)
        winners = [i for i, lp in enumerate(logps) if lp >= best - _TIE_LOG_TOL]
        return DecodeOutcome(correction=bests[winners[0]], tie=len(winners) > 1)

    def decode_syndrome(self, s: Syndrome) -> DecodeOutcome:
        return self.decode(s.bits)

    def describe(self) -> str:
        return f"ml[{self.channel.describe()}]"


def _destabilizers(code: StabilizerCode) -> list[Pauli]:
    """D_i anticommuting with G_i and commuting with every other generator."""
    n, m = code.n, code.num_checks
    # Row j is the functional v -> <G_j, v> on 2n-bit vectors v = x | z<<n.
    rows = [g.z | (g.x << n) for g in code.generators]
    solver = gf2.LinearSolver(rows, 2 * n)
    out = []
    for i in range(m):
        v = solver.solve(1 << i)
        if v is None:  # impossible for independent generators
            raise AssertionError("destabilizer system is inconsistent")
        mask = (1 << n) - 1
        out.append(Pauli(n, v & mask, v >> n))
    return out


def ml_decode(
    code: StabilizerCode, s: Syndrome, channel: QubitChannel, cap: int = DEFAULT_ML_CAP
) -> DecodeOutcome:
    """One-shot ML decode; build an MLDecoder for repeated syndromes."""
    return MLDecoder(code, channel, cap=cap).decode_syndrome(s)


# ---------------------------------------------------------------------------
# Minimum-weight perfect matching on the surface-code defect graphs
# ---------------------------------------------------------------------------


def _match_defects(nodes, dist, boundary):
    """Exact minimum-cost matching where each defect pairs with another
    defect or retires to its nearest boundary.

    Returns (pairs, singles, cost, ties) where pairs is a list of index
    pairs, singles the boundary-matched indices.  The search is an exact
    subset DP, so there is no approximation; ties counts whether at least
    two distinct matchings reach the minimum.  The reconstruction resolves
    ties by pairing the lowest open defect with the lowest eligible partner,
    trying the boundary last.
    """
    m = len(nodes)
    bcost = [boundary(u) for u in nodes]
    dcost = [[dist(u, v) for v in nodes] for u in nodes]

    best: dict[int, tuple[int, int]] = {0: (0, 1)}  # mask -> (cost, ways<=2)

    def solve(mask: int) -> tuple[int, int]:
        hit = best.get(mask)
        if hit is not None:
            return hit
        i = (mask & -mask).bit_length() - 1
        rest = mask ^ (1 << i)
        cost = None
        ways = 0
        sub = rest
        while True:
            j = (sub & -sub).bit_length() - 1 if sub else -1
            if j >= 0:
                c_sub, w_sub = solve(rest ^ (1 << j))
                c = dcost[i][j] + c_sub
                if cost is None or c < cost:
                    cost, ways = c, w_sub
                elif c == cost:
                    ways = min(2, ways + w_sub)
                sub ^= 1 << j
            else:
                break
        c_sub, w_sub = solve(rest)
        c = bcost[i] + c_sub
        if cost is None or c < cost:
            cost, ways = c, w_sub
        elif c == cost:
            ways = min(2, ways + w_sub)
        best[mask] = (cost, ways)
        return best[mask]

    full = (1 << m) - 1
    total, ways = solve(full)
    pairs: list[tuple[int, int]] = []
    singles: list[int] = []
    mask = full
    while mask:
        i = (mask & -mask).bit_length() - 1
        rest = mask ^ (1 << i)
        chosen = None
        sub = rest
        while sub:
            j = (sub & -sub).bit_length() - 1
            if dcost[i][j] + solve(rest ^ (1 << j))[0] == best[mask][0]:
                chosen = j
                break
            sub ^= 1 << j
        if chosen is None:
            singles.append(i)
            mask = rest
        else:
            pairs.append((i, chosen))
            mask = rest ^ (1 << chosen)
    return pairs, singles, total, ways > 1


class MWPMDecoder:
    """Matching decoder for codes built by build_surface_code.

    X and Z defects are matched independently on the plaquette and site
    graphs; each defect either pairs with another defect at lattice
    shortest-path cost or retires to its nearest boundary.  Matching is
    exact (subset DP over the defects).  tie is set when several matchings
    share the minimum cost.
    """

    def __init__(self, code: StabilizerCode):
        if code.geometry is None:
            raise GeometryError(
                f"code {code.name or '?'} carries no lattice geometry; "
                "build it with build_surface_code or attach a geometry sidecar"
            )
        self.code = code
        self.geom = code.geometry
        self._site_bits: list[tuple[int, tuple[int, int]]] = []
        self._plaq_bits: list[tuple[int, tuple[int, int]]] = []
        for idx, (kind, node) in enumerate(self.geom.generator_order()):
            (self._site_bits if kind == "site" else self._plaq_bits).append((idx, node))

    def _graph_correction(self, defects, pair_path, bdy, bdy_tied):
        pairs, singles, _, tie = _match_defects(
            defects, self.geom.grid_dist, lambda u: bdy(u)[0]
        )
        mask = 0
        for i, j in pairs:
            mask ^= pair_path(defects[i], defects[j])
        for i in singles:
            mask ^= bdy(defects[i])[1]
            tie = tie or bdy_tied(defects[i])
        return mask, tie

    def decode_syndrome(self, s: Syndrome) -> DecodeOutcome:
        g = self.geom
        site_defects = [node for idx, node in self._site_bits if (s.bits >> idx) & 1]
        plaq_defects = [node for idx, node in self._plaq_bits if (s.bits >> idx) & 1]
        zmask, tie_z = self._graph_correction(
            site_defects, g.site_path, g.site_boundary, g.site_boundary_tied
        )
        xmask, tie_x = self._graph_correction(
            plaq_defects, g.plaq_path, g.plaq_boundary, g.plaq_boundary_tied
        )
        return DecodeOutcome(correction=Pauli(self.code.n, xmask, zmask), tie=tie_z or tie_x)

    def decode(self, s: int) -> DecodeOutcome:
        return self.decode_syndrome(Syndrome(s, self.code.num_checks))

    def describe(self) -> str:
        return "mwpm"


def mwpm_decode(code: StabilizerCode, s: Syndrome) -> DecodeOutcome:
    return MWPMDecoder(code).decode_syndrome(s)


# ---------------------------------------------------------------------------
# Uniform decode-and-classify harness
# ---------------------------------------------------------------------------


def decode_and_classify(code: StabilizerCode, decoder, e: Pauli) -> DecodeVerdict:
    """Apply a decoder to the syndrome of e and classify error * correction.

    success iff the residual lies in the stabilizer group.  A Detectable
    residual would mean the decoder returned a wrong-syndrome correction and
    raises.  BD decoders have no correction operator: rejected patterns are
    reported as failures with signature None.
    """
    if isinstance(decoder, BDDecoder):
        if decoder.accepts_pattern(e):
            return DecodeVerdict(True, 0, DecodeOutcome(correction=e, tie=False))
        return DecodeVerdict(False, None, DecodeOutcome(correction=None, tie=False))
    s = code_syndrome(code, e)
    out = decoder.decode_syndrome(s)
    residual = e * out.correction
    rc = classify_residual(code, residual)
    if rc.tag is ResidualTag.DETECTABLE:
        raise AssertionError("decoder returned a correction with the wrong syndrome")
    out = DecodeOutcome(out.correction, out.tie, rc)
    return DecodeVerdict(rc.tag is ResidualTag.IN_STABILIZER, rc.signature, out)


def decoder_from_spec(
    spec: str,
    code: StabilizerCode,
    channel: QubitChannel | None = None,
    ml_cap: int = DEFAULT_ML_CAP,
):
    """Build a decoder from a CLI selector: 'bd:e_g,e_z', 'ml', or 'mwpm'."""
    if spec == "mwpm":
        return MWPMDecoder(code)
    if spec == "ml":
        if channel is None:
            raise ValueError("ml decoder needs a channel")
        return MLDecoder(code, channel, cap=ml_cap)
    if spec.startswith("bd:"):
        try:
            eg_s, ez_s = spec[3:].split(",")
            return BDDecoder(int(eg_s), int(ez_s))
        except ValueError:
            raise ValueError(f"bad bd decoder spec {spec!r}; expected bd:e_g,e_z") from None
    raise ValueError(f"unknown decoder {spec!r}; expected bd:e_g,e_z | ml | mwpm")
