"""Stabilizer codes: validation, syndromes, residual classification, file I/O.

A code is n physical qubits, k logical qubits, n-k commuting independent
generators, and k pairs of logical X/Z representatives.  Everything is
phaseless; membership in the stabilizer group means membership modulo
phases, which is what syndromes and weight enumerators see.
"""

from __future__ import annotations

import enum
import hashlib
from dataclasses import dataclass, field
from pathlib import Path
from typing import TYPE_CHECKING

from . import gf2
from .errors import CodeFileError, CodeValidationError
from .pauli import Pauli, parse_pauli

if TYPE_CHECKING:  # pragma: no cover - import cycle guard for typing only
    from .surface import SurfaceGeometry


@dataclass(frozen=True, slots=True)
class Syndrome:
    """(n-k)-bit syndrome; bit i set iff the error anticommutes with G_{i+1}."""

    bits: int
    width: int

    def as_tuple(self) -> tuple[int, ...]:
        return tuple((self.bits >> i) & 1 for i in range(self.width))

    @property
    def is_zero(self) -> bool:
        return self.bits == 0

    def __xor__(self, other: "Syndrome") -> "Syndrome":
        if self.width != other.width:
            raise ValueError("syndrome width mismatch")
        return Syndrome(self.bits ^ other.bits, self.width)

    def __str__(self) -> str:
        return "".join(str(b) for b in self.as_tuple())


class ResidualTag(enum.Enum):
    IN_STABILIZER = "in_stabilizer"
    LOGICAL_OPERATOR = "logical_operator"
    DETECTABLE = "detectable"


@dataclass(frozen=True, slots=True)
class ResidualClass:
    """Classification of a residual operator against a code.

    signature packs the anticommutation pattern with the 2k logical
    representatives (bits 0..k-1: logical_x, bits k..2k-1: logical_z); it is
    present exactly when the syndrome is zero.
    """

    tag: ResidualTag
    signature: int | None = None


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    failures: tuple[str, ...] = ()


@dataclass
class StabilizerCode:
    """Validated algebraic stabilizer code; treat instances as immutable."""

    n: int
    k: int
    generators: tuple[Pauli, ...]
    logical_x: tuple[Pauli, ...]
    logical_z: tuple[Pauli, ...]
    name: str = ""
    declared_distance: tuple[int, int] | int | None = None
    geometry: "SurfaceGeometry | None" = field(default=None, repr=False)

    def __post_init__(self):
        self.generators = tuple(self.generators)
        self.logical_x = tuple(self.logical_x)
        self.logical_z = tuple(self.logical_z)

    @property
    def num_checks(self) -> int:
        return self.n - self.k

    def distance_label(self) -> str:
        d = self.declared_distance
        if d is None:
            return f"[[{self.n},{self.k}]]"
        if isinstance(d, tuple):
            dx, dz = d
            if dx == dz:
                return f"[[{self.n},{self.k},{dx}]]"
            return f"[[{self.n},{self.k},{dx}/{dz}]]"
        return f"[[{self.n},{self.k},{d}]]"


def _sym_rows(paulis: tuple[Pauli, ...], n: int) -> list[int]:
    """Binary-symplectic rows (x | z<<n) for rank computations."""
    return [p.x | (p.z << n) for p in paulis]


def validate_code(code: StabilizerCode) -> ValidationReport:
    """Check generator and logical-pair structure; returns all violations."""
    bad: list[str] = []
    n, k = code.n, code.k
    gens = code.generators
    if len(gens) != n - k:
        bad.append(f"expected {n - k} generators for n={n}, k={k}, got {len(gens)}")
    if len(code.logical_x) != k or len(code.logical_z) != k:
        bad.append(
            f"expected {k} logical X and Z representatives, got "
            f"{len(code.logical_x)} and {len(code.logical_z)}"
        )
    for label, p in _iter_named(code):
        if p.n != n:
            bad.append(f"{label} acts on {p.n} qubits, code has {n}")
    if bad:
        return ValidationReport(False, tuple(bad))

    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if not gens[i].commutes(gens[j]):
                bad.append(f"G{i + 1} anticommutes with G{j + 1}")
    rows = _sym_rows(gens, n)
    r = gf2.rank(rows)
    if r != len(gens):
        bad.append(f"generators are dependent: rank {r} < {len(gens)}")

    for i in range(k):
        lx, lz = code.logical_x[i], code.logical_z[i]
        for gi, g in enumerate(gens):
            if not lx.commutes(g):
                bad.append(f"LX{i + 1} anticommutes with G{gi + 1}")
            if not lz.commutes(g):
                bad.append(f"LZ{i + 1} anticommutes with G{gi + 1}")
        if lx.commutes(lz):
            bad.append(f"LX{i + 1} must anticommute with LZ{i + 1}")
        for j in range(k):
            if j != i and not lx.commutes(code.logical_z[j]):
                bad.append(f"LX{i + 1} anticommutes with LZ{j + 1}")
    for i in range(k):
        for label, p in ((f"LX{i + 1}", code.logical_x[i]), (f"LZ{i + 1}", code.logical_z[i])):
            if gf2.in_span(rows, p.x | (p.z << n)):
                bad.append(f"{label} lies in the stabilizer group")
    return ValidationReport(not bad, tuple(bad))


def _iter_named(code: StabilizerCode):
    for i, g in enumerate(code.generators):
        yield f"G{i + 1}", g
    for i, p in enumerate(code.logical_x):
        yield f"LX{i + 1}", p
    for i, p in enumerate(code.logical_z):
        yield f"LZ{i + 1}", p


def require_valid(code: StabilizerCode) -> StabilizerCode:
    report = validate_code(code)
    if not report.ok:
        raise CodeValidationError("; ".join(report.failures))
    return code


def syndrome(code: StabilizerCode, e: Pauli) -> Syndrome:
    """Syndrome of an error: bit i = [e anticommutes with G_{i+1}]."""
    if e.n != code.n:
        raise ValueError(f"operator acts on {e.n} qubits, code has {code.n}")
    bits = 0
    for i, g in enumerate(code.generators):
        if not g.commutes(e):
            bits |= 1 << i
    return Syndrome(bits, code.num_checks)


def logical_signature(code: StabilizerCode, r: Pauli) -> int:
    """Anticommutation pattern of r with the 2k logical representatives."""
    if r.n != code.n:
        raise ValueError(f"operator acts on {r.n} qubits, code has {code.n}")
    sig = 0
    k = code.k
    for i, lx in enumerate(code.logical_x):
        if not lx.commutes(r):
            sig |= 1 << i
    for i, lz in enumerate(code.logical_z):
        if not lz.commutes(r):
            sig |= 1 << (k + i)
    return sig


def classify_residual(code: StabilizerCode, r: Pauli) -> ResidualClass:
    """Detectable (nonzero syndrome), InStabilizer, or LogicalOperator.

    For a valid code, zero syndrome plus all-zero signature is equivalent to
    phaseless membership in the stabilizer group: the signature map on the
    normalizer is a homomorphism onto 2k bits whose kernel has exactly
    2^(n-k) elements, all of them stabilizers.
    """
    if not syndrome(code, r).is_zero:
        return ResidualClass(ResidualTag.DETECTABLE)
    sig = logical_signature(code, r)
    if sig == 0:
        return ResidualClass(ResidualTag.IN_STABILIZER, 0)
    return ResidualClass(ResidualTag.LOGICAL_OPERATOR, sig)


# ---------------------------------------------------------------------------
# .stab file format: header "n k name", then n-k "G <pauli>" lines, then
# k "LX <pauli>" and k "LZ <pauli>" lines.  '#' starts a comment.
# ---------------------------------------------------------------------------


def dumps_code(code: StabilizerCode) -> str:
    lines = [f"{code.n} {code.k} {code.name}".rstrip()]
    lines += [f"G {g}" for g in code.generators]
    lines += [f"LX {p}" for p in code.logical_x]
    lines += [f"LZ {p}" for p in code.logical_z]
    return "\n".join(lines) + "\n"


def loads_code(text: str, *, validate: bool = True) -> StabilizerCode:
    entries: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            entries.append((lineno, line))
    if not entries:
        raise CodeFileError("empty code file")

    lineno, header = entries[0]
    parts = header.split(None, 2)
    if len(parts) < 2:
        raise CodeFileError("header must be 'n k name'", line=lineno)
    try:
        n, k = int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise CodeFileError(f"bad header: {exc}", line=lineno) from None
    name = parts[2] if len(parts) == 3 else ""

    gens: list[Pauli] = []
    lx: list[Pauli] = []
    lz: list[Pauli] = []
    for lineno, line in entries[1:]:
        try:
            tag, pstr = line.split(None, 1)
        except ValueError:
            raise CodeFileError(f"expected 'G|LX|LZ <pauli>', got {line!r}", line=lineno) from None
        try:
            p = parse_pauli(pstr.strip())
        except Exception as exc:
            raise CodeFileError(str(exc), line=lineno) from None
        if p.n != n:
            raise CodeFileError(f"operator has {p.n} qubits, header says {n}", line=lineno)
        if tag == "G":
            gens.append(p)
        elif tag == "LX":
            lx.append(p)
        elif tag == "LZ":
            lz.append(p)
        else:
            raise CodeFileError(f"unknown tag {tag!r}", line=lineno)

    code = StabilizerCode(n, k, tuple(gens), tuple(lx), tuple(lz), name=name)
    if len(gens) != n - k:
        raise CodeValidationError(
            f"{name or 'code'}: {len(gens)} generators but n-k = {n - k}"
        )
    if validate:
        require_valid(code)
    return code


def load_code_file(path: str | Path, *, validate: bool = True) -> StabilizerCode:
    return loads_code(Path(path).read_text(encoding="utf-8"), validate=validate)


def save_code_file(code: StabilizerCode, path: str | Path) -> None:
    Path(path).write_text(dumps_code(code), encoding="utf-8")


def code_content_hash(code: StabilizerCode) -> str:
    """sha256 of the canonical .stab serialization; identifies the code."""
    return hashlib.sha256(dumps_code(code).encode()).hexdigest()


# ---------------------------------------------------------------------------
# Built-in registry
# ---------------------------------------------------------------------------


def _repetition() -> StabilizerCode:
    return StabilizerCode(
        3, 1,
        (parse_pauli("ZZI"), parse_pauli("IZZ")),
        (parse_pauli("XXX"),),
        (parse_pauli("ZII"),),
        name="repetition-3",
        declared_distance=None,  # detects no Z error at all; d = 1
    )


def _five_qubit() -> StabilizerCode:
    return StabilizerCode(
        5, 1,
        (
            parse_pauli("XZZXI"),
            parse_pauli("IXZZX"),
            parse_pauli("XIXZZ"),
            parse_pauli("ZXIXZ"),
        ),
        (parse_pauli("XXXXX"),),
        (parse_pauli("ZZZZZ"),),
        name="five-qubit",
        declared_distance=3,
    )


def _steane() -> StabilizerCode:
    return StabilizerCode(
        7, 1,
        (
            parse_pauli("XIXIXIX"),
            parse_pauli("IXXIIXX"),
            parse_pauli("IIIXXXX"),
            parse_pauli("ZIZIZIZ"),
            parse_pauli("IZZIIZZ"),
            parse_pauli("IIIZZZZ"),
        ),
        (parse_pauli("XXXIIII"),),
        (parse_pauli("ZZZIIII"),),
        name="steane",
        declared_distance=3,
    )


def _shor() -> StabilizerCode:
    return StabilizerCode(
        9, 1,
        (
            parse_pauli("ZZIIIIIII"),
            parse_pauli("IZZIIIIII"),
            parse_pauli("IIIZZIIII"),
            parse_pauli("IIIIZZIII"),
            parse_pauli("IIIIIIZZI"),
            parse_pauli("IIIIIIIZZ"),
            parse_pauli("XXXXXXIII"),
            parse_pauli("IIIXXXXXX"),
        ),
        (parse_pauli("XXXIIIIII"),),
        (parse_pauli("ZIIZIIZII"),),
        name="shor",
        declared_distance=3,
    )


def builtin_code_names() -> tuple[str, ...]:
    return (
        "repetition",
        "five-qubit",
        "steane",
        "shor",
        "surface-3x3",
        "surface-3x5",
        "surface-3x7",
        "surface-5x5",
    )


def get_code(ref: str) -> StabilizerCode:
    """Resolve a code reference: builtin name, surface-DXxDZ, or a .stab path."""
    from .surface import build_surface_code

    key = ref.strip().lower()
    simple = {
        "repetition": _repetition,
        "repetition-3": _repetition,
        "five-qubit": _five_qubit,
        "five": _five_qubit,
        "steane": _steane,
        "shor": _shor,
    }
    if key in simple:
        return require_valid(simple[key]())
    if key.startswith("surface-"):
        dims = key[len("surface-"):]
        try:
            dx_s, dz_s = dims.split("x", 1)
            return build_surface_code(int(dx_s), int(dz_s))
        except ValueError as exc:
            raise ValueError(f"bad surface code reference {ref!r}: {exc}") from None
    path = Path(ref)
    if path.suffix == ".stab" or path.exists():
        return load_code_file(path)
    raise ValueError(
        f"unknown code {ref!r}; use one of {', '.join(builtin_code_names())} "
        "or a .stab file path"
    )
