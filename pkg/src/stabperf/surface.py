"""Unrotated planar surface codes on a d_x-by-d_z lattice.

Layout (documented in docs/lattice.md): qubits live on the links of the
lattice and are numbered row-major, alternating "long" rows of d_z qubits
with "short" rows of d_z - 1 qubits:

    1   2   3        <- long row 0 (d_z qubits)
      4   5          <- short row 0 (d_z - 1 qubits)
    6   7   8        <- long row 1
      9  10          <- short row 1
    11 12  13        <- long row 2

There are H = d_x long rows and H - 1 short rows, so
n = d_x*d_z + (d_x-1)*(d_z-1).  X-type site checks sit between horizontal
neighbours of a long row (weight 3 on the top/bottom rows, 4 inside);
Z-type plaquette checks sit between vertically adjacent long rows (weight 3
on the left/right columns, 4 inside).  Generators are emitted row by row,
sites before the plaquette row below them, which reproduces the standard
G1..G12 listing for the 3x3 code.

The logical Z is the top long row (a d_z-qubit chain between the rough
left/right edges); the logical X is the first column of long-row qubits
(a d_x-qubit chain between the smooth top/bottom edges).
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import StabilizerCode, require_valid
from .pauli import Pauli

Node = tuple[int, int]


@dataclass(frozen=True)
class SurfaceGeometry:
    """Defect-graph geometry consumed by the matching decoder.

    The site graph is an H x (W-1) grid whose edges are qubits; Z errors
    create defects on it and are repaired by Z chains.  The plaquette graph
    is the (H-1) x W dual with the roles of X and Z exchanged.
    """

    d_x: int
    d_z: int

    @property
    def H(self) -> int:
        return self.d_x

    @property
    def W(self) -> int:
        return self.d_z

    @property
    def n(self) -> int:
        return self.d_x * self.d_z + (self.d_x - 1) * (self.d_z - 1)

    # --- qubit indexing (0-based bit positions) ---

    def long_qubit(self, r: int, c: int) -> int:
        return r * (2 * self.W - 1) + c

    def short_qubit(self, r: int, c: int) -> int:
        return r * (2 * self.W - 1) + self.W + c

    # --- generator layout ---

    def site_nodes(self) -> list[Node]:
        return [(r, c) for r in range(self.H) for c in range(self.W - 1)]

    def plaq_nodes(self) -> list[Node]:
        return [(r, c) for r in range(self.H - 1) for c in range(self.W)]

    def site_support(self, node: Node) -> list[int]:
        r, c = node
        qs = [self.long_qubit(r, c), self.long_qubit(r, c + 1)]
        if r > 0:
            qs.append(self.short_qubit(r - 1, c))
        if r < self.H - 1:
            qs.append(self.short_qubit(r, c))
        return sorted(qs)

    def plaq_support(self, node: Node) -> list[int]:
        r, c = node
        qs = [self.long_qubit(r, c), self.long_qubit(r + 1, c)]
        if c > 0:
            qs.append(self.short_qubit(r, c - 1))
        if c < self.W - 1:
            qs.append(self.short_qubit(r, c))
        return sorted(qs)

    def generator_order(self) -> list[tuple[str, Node]]:
        """(kind, node) pairs in emission order: sites of row r, then the
        plaquette row between long rows r and r+1."""
        order: list[tuple[str, Node]] = []
        for r in range(self.H):
            order += [("site", (r, c)) for c in range(self.W - 1)]
            if r < self.H - 1:
                order += [("plaq", (r, c)) for c in range(self.W)]
        return order

    # --- metric and paths on the site graph (Z corrections) ---

    @staticmethod
    def grid_dist(u: Node, v: Node) -> int:
        return abs(u[0] - v[0]) + abs(u[1] - v[1])

    def site_boundary(self, u: Node) -> tuple[int, int]:
        """(cost, mask) of the cheaper rough boundary; ties pick the left."""
        r, c = u
        left, right = c + 1, self.W - 1 - c
        if left <= right:
            mask = 0
            for cc in range(c + 1):
                mask |= 1 << self.long_qubit(r, cc)
            return left, mask
        mask = 0
        for cc in range(c + 1, self.W):
            mask |= 1 << self.long_qubit(r, cc)
        return right, mask

    def site_boundary_tied(self, u: Node) -> bool:
        return u[1] + 1 == self.W - 1 - u[1]

    def site_path(self, u: Node, v: Node) -> int:
        """Qubit mask of a shortest path: vertical leg first, then horizontal.

        All shortest paths between the same nodes differ by plaquette loops,
        so the choice does not affect the residual class.
        """
        (r1, c1), (r2, c2) = u, v
        mask = 0
        for r in range(min(r1, r2), max(r1, r2)):
            mask |= 1 << self.short_qubit(r, c1)
        for c in range(min(c1, c2), max(c1, c2)):
            mask |= 1 << self.long_qubit(r2, c + 1)
        return mask

    # --- metric and paths on the plaquette graph (X corrections) ---

    def plaq_boundary(self, u: Node) -> tuple[int, int]:
        """(cost, mask) of the cheaper smooth boundary; ties pick the top."""
        r, c = u
        top, bottom = r + 1, self.H - 1 - r
        if top <= bottom:
            mask = 0
            for rr in range(r + 1):
                mask |= 1 << self.long_qubit(rr, c)
            return top, mask
        mask = 0
        for rr in range(r + 1, self.H):
            mask |= 1 << self.long_qubit(rr, c)
        return bottom, mask

    def plaq_boundary_tied(self, u: Node) -> bool:
        return u[0] + 1 == self.H - 1 - u[0]

    def plaq_path(self, u: Node, v: Node) -> int:
        """Qubit mask of a shortest path: horizontal leg first, then vertical."""
        (r1, c1), (r2, c2) = u, v
        mask = 0
        for c in range(min(c1, c2), max(c1, c2)):
            mask |= 1 << self.short_qubit(r1, c)
        for r in range(min(r1, r2), max(r1, r2)):
            mask |= 1 << self.long_qubit(r + 1, c2)
        return mask


def build_surface_code(d_x: int, d_z: int) -> StabilizerCode:
    """Planar [[d_x*d_z + (d_x-1)(d_z-1), 1, d_x/d_z]] surface code.

    d_z is the Z distance (length of the logical Z chain along a long row);
    d_x is the X distance (length of the logical X chain down the first
    column).  Both must be odd and at least 3.
    """
    for label, d in (("d_x", d_x), ("d_z", d_z)):
        if d < 3:
            raise ValueError(f"{label} = {d} is undersized; need an odd value >= 3")
        if d % 2 == 0:
            raise ValueError(f"{label} = {d} is even; the lattice needs odd dimensions")

    geom = SurfaceGeometry(d_x, d_z)
    n = geom.n
    gens: list[Pauli] = []
    for kind, node in geom.generator_order():
        if kind == "site":
            x = 0
            for q in geom.site_support(node):
                x |= 1 << q
            gens.append(Pauli(n, x, 0))
        else:
            z = 0
            for q in geom.plaq_support(node):
                z |= 1 << q
            gens.append(Pauli(n, 0, z))

    zl = 0
    for c in range(geom.W):
        zl |= 1 << geom.long_qubit(0, c)
    xl = 0
    for r in range(geom.H):
        xl |= 1 << geom.long_qubit(r, 0)

    code = StabilizerCode(
        n, 1,
        tuple(gens),
        (Pauli(n, xl, 0),),
        (Pauli(n, 0, zl),),
        name=f"surface-{d_x}x{d_z}",
        declared_distance=(d_x, d_z),
        geometry=geom,
    )
    return require_valid(code)
