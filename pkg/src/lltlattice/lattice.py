"""The colored five-vertex model behind the LLT partition function.

A lattice is an n-row grid of faces, rows numbered 1..n bottom to top with
variable x_i on row i, columns indexed r..s left to right.  Edge labels are
subsets of the k colors, stored as bitmasks (bit i-1 is color i).  Paths
enter a face from the bottom or left and leave via the top or right; a face
is admissible when the colors entering equal the colors leaving and no color
enters twice.  The weight of an admissible face is

    x^(# colors leaving right) * prod over colors i leaving right of
    t^(# colors larger than i present in the face)

and the gray variant rescales each face by x^k t^C(k,2) after substituting
x -> 1/(x t^(k-1)).  Both weights are monomials, so a configuration's weight
is tracked as one exponent vector.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product

from .algebra import LaurentPoly, VarSet
from .shapes import (
    ShapeTuple,
    SkewShapeTuple,
    boundary_vector,
    check_shape_tuple,
    column_range,
)


def _binom2(m: int) -> int:
    return m * (m - 1) // 2


def mask_of(bits) -> int:
    m = 0
    for i, b in enumerate(bits):
        if b:
            m |= 1 << i
    return m


def bits_of(mask: int, k: int) -> tuple[int, ...]:
    return tuple((mask >> i) & 1 for i in range(k))


def face_weight_exponents(k: int, I: int, J: int, K: int, L: int):
    """(x-exponent, t-exponent) of an admissible plain face, else None."""
    if I & J:
        return None
    present = I | J
    if (K | L) != present or (K & L):
        return None
    xexp = L.bit_count()
    texp = 0
    rem = L
    while rem:
        b = (rem & -rem).bit_length() - 1
        texp += (present >> (b + 1)).bit_count()
        rem &= rem - 1
    return xexp, texp


def l_weight(k: int, I, J, K, L, vars: VarSet | None = None, x_slot: int = 0) -> LaurentPoly:
    """Face weight as a polynomial; labels are 0/1 tuples or masks.

    Inadmissible faces get weight 0.
    """
    if vars is None:
        vars = VarSet(nx=1)
    I, J, K, L = (v if isinstance(v, int) else mask_of(v) for v in (I, J, K, L))
    data = face_weight_exponents(k, I, J, K, L)
    if data is None:
        return LaurentPoly.zero(vars)
    xexp, texp = data
    exps = [0] * vars.total
    exps[x_slot] = xexp
    exps[vars.t_index] = texp
    return LaurentPoly.monomial(vars, 1, exps)


def lstar_weight(k: int, I, J, K, L, vars: VarSet | None = None, x_slot: int = 0) -> LaurentPoly:
    """Gray face weight x^k t^C(k,2) L_{1/(x t^(k-1))}(I,J;K,L)."""
    if vars is None:
        vars = VarSet(nx=1)
    I, J, K, L = (v if isinstance(v, int) else mask_of(v) for v in (I, J, K, L))
    data = face_weight_exponents(k, I, J, K, L)
    if data is None:
        return LaurentPoly.zero(vars)
    xexp, texp = data
    exps = [0] * vars.total
    exps[x_slot] = k - xexp
    exps[vars.t_index] = _binom2(k) + texp - (k - 1) * xexp
    return LaurentPoly.monomial(vars, 1, exps)


@dataclass(frozen=True)
class LatticeSpec:
    """Boundary data of a lattice: per-column bottom/top labels, per-row right
    labels (left labels are always empty), and the weight flavor."""

    k: int
    n: int
    r: int
    s: int
    bottom: tuple[int, ...]
    top: tuple[int, ...]
    right: tuple[int, ...]
    gray: bool = False
    shape: SkewShapeTuple | None = field(default=None, compare=False)

    def __post_init__(self):
        ncols = self.s - self.r + 1
        if len(self.bottom) != ncols or len(self.top) != ncols:
            raise ValueError("boundary length does not match the column range")
        if len(self.right) != self.n:
            raise ValueError("need one right label per row")
        for bit in range(self.k):
            flow = sum((m >> bit) & 1 for m in self.bottom)
            out = sum((m >> bit) & 1 for m in self.top) + sum(
                (m >> bit) & 1 for m in self.right
            )
            if flow != out:
                raise ValueError(f"color {bit + 1} is not conserved by the boundary")

    @property
    def ncols(self) -> int:
        return self.s - self.r + 1

    def col_index(self, column: int) -> int:
        return column - self.r


def build_lattice(shape: SkewShapeTuple, n: int) -> LatticeSpec:
    """The lattice whose partition function is the LLT polynomial of shape."""
    r, s = column_range(shape)
    bottom = tuple(mask_of(boundary_vector(shape.gamma, i)) for i in range(r, s + 1))
    top = tuple(mask_of(boundary_vector(shape.beta, i)) for i in range(r, s + 1))
    return LatticeSpec(
        k=shape.k, n=n, r=r, s=s, bottom=bottom, top=top,
        right=(0,) * n, shape=shape,
    )


def build_box_lattice(lam: ShapeTuple, M: int, n: int, gray: bool = False,
                      right_exit: bool = False) -> LatticeSpec:
    """Lattice on the full M-column window 1-n..M-n with bottom boundary lam.

    With right_exit the paths leave through the right edge (top empty);
    otherwise the top boundary is the k-fold (M-n)^n box.
    """
    lam = check_shape_tuple(lam)
    k = len(lam)
    if any(len(p) != n for p in lam):
        raise ValueError("every component needs exactly n parts")
    if any(p[0] > M - n for p in lam if p):
        raise ValueError("bandwidth must be smaller than M")
    r, s = 1 - n, M - n
    bottom = tuple(mask_of(boundary_vector(lam, i)) for i in range(r, s + 1))
    full = (1 << k) - 1
    if right_exit:
        top = (0,) * M
        right = (full,) * n
    else:
        box = tuple((M - n,) * n for _ in range(k))
        top = tuple(mask_of(boundary_vector(box, i)) for i in range(r, s + 1))
        right = (0,) * n
    return LatticeSpec(k=k, n=n, r=r, s=s, bottom=bottom, top=top,
                       right=right, gray=gray)


# -- row machinery -------------------------------------------------------------


def _color_tops(bottoms: tuple[int, ...], ncols: int, exit_right: bool):
    """Valid top-column choices for one color given its bottom columns.

    Paths pair up in order and move weakly right; consecutive paths may not
    share a face, and only the rightmost path may leave through the right
    edge.
    """
    m = len(bottoms)
    if exit_right:
        if m == 0:
            return
        spans = [(bottoms[i], bottoms[i + 1] - 1) for i in range(m - 1)]
    else:
        spans = [(bottoms[i], bottoms[i + 1] - 1) for i in range(m - 1)]
        if m:
            spans.append((bottoms[m - 1], ncols - 1))
    yield from product(*[range(lo, hi + 1) for lo, hi in spans])


def _row_scan(k: int, bottom: tuple[int, ...], top: tuple[int, ...], right_mask: int):
    """Walk a row left to right; return (x-exp, t-exp, horizontal labels)."""
    ncols = len(bottom)
    carry = 0
    xexp = texp = 0
    horiz = [0] * (ncols + 1)
    for c in range(ncols):
        I, K = bottom[c], top[c]
        present = I | carry
        L = present & ~K
        xexp += L.bit_count()
        rem = L
        while rem:
            b = (rem & -rem).bit_length() - 1
            texp += (present >> (b + 1)).bit_count()
            rem &= rem - 1
        carry = L
        horiz[c + 1] = L
    if carry != right_mask:
        raise AssertionError("row scan ended with the wrong right label")
    return xexp, texp, tuple(horiz)


def _row_transitions(k: int, ncols: int, bottom: tuple[int, ...], right_mask: int):
    """All admissible (top labels, x-exp, t-exp, horizontals) above a row."""
    per_color = []
    for bit in range(k):
        bottoms = tuple(c for c in range(ncols) if (bottom[c] >> bit) & 1)
        choices = list(_color_tops(bottoms, ncols, bool((right_mask >> bit) & 1)))
        if not choices:
            return
        per_color.append(choices)
    for combo in product(*per_color):
        top = [0] * ncols
        for bit, tops in enumerate(combo):
            for c in tops:
                top[c] |= 1 << bit
        tvec = tuple(top)
        xexp, texp, horiz = _row_scan(k, bottom, tvec, right_mask)
        yield tvec, xexp, texp, horiz


def _row_weight_adjusted(spec: LatticeSpec, xexp: int, texp: int) -> tuple[int, int]:
    if not spec.gray:
        return xexp, texp
    k, ncols = spec.k, spec.ncols
    return (
        k * ncols - xexp,
        ncols * _binom2(k) + texp - (k - 1) * xexp,
    )


def partition_function(spec: LatticeSpec) -> LaurentPoly:
    """Exact partition function by row-to-row dynamic programming.

    The DP state after row i is the vector of vertical edge labels between
    rows i and i+1; values are polynomials in x_1..x_i and t.
    """
    vars = VarSet(nx=spec.n)
    width = vars.total
    tslot = vars.t_index
    states: dict[tuple[int, ...], dict[tuple, int]] = {
        spec.bottom: {(0,) * width: 1}
    }
    for row in range(1, spec.n + 1):
        xslot = row - 1
        nxt: dict[tuple[int, ...], dict[tuple, int]] = {}
        for bvec, terms in states.items():
            for tvec, xexp, texp, _ in _row_transitions(spec.k, spec.ncols, bvec,
                                                        spec.right[row - 1]):
                xadj, tadj = _row_weight_adjusted(spec, xexp, texp)
                bucket = nxt.setdefault(tvec, {})
                for e, c in terms.items():
                    ne = list(e)
                    ne[xslot] += xadj
                    ne[tslot] += tadj
                    key = tuple(ne)
                    bucket[key] = bucket.get(key, 0) + c
        states = nxt
        if not states:
            break
    return LaurentPoly(vars, states.get(spec.top, {}))


@dataclass(frozen=True)
class LatticeConfig:
    """A fully labelled lattice: vertical labels on n+1 levels (level 0 is
    the bottom boundary) and horizontal labels on n rows, ncols+1 boundaries
    each (boundary 0 is the left edge)."""

    spec: LatticeSpec
    verticals: tuple[tuple[int, ...], ...]
    horizontals: tuple[tuple[int, ...], ...]

    def face(self, row: int, col_index: int) -> tuple[int, int, int, int]:
        """(I, J, K, L) of the face at 1-based row and 0-based column index."""
        return (
            self.verticals[row - 1][col_index],
            self.horizontals[row - 1][col_index],
            self.verticals[row][col_index],
            self.horizontals[row - 1][col_index + 1],
        )

    def weight_exponents(self) -> tuple[list[int], int]:
        """Per-row x exponents and the t exponent, after any gray rescaling."""
        spec = self.spec
        xexps = []
        ttotal = 0
        for row in range(1, spec.n + 1):
            xe = te = 0
            for c in range(spec.ncols):
                I, J, K, L = self.face(row, c)
                data = face_weight_exponents(spec.k, I, J, K, L)
                if data is None:
                    raise ValueError(f"inadmissible face at row {row}, column {c + spec.r}")
                xe += data[0]
                te += data[1]
            xa, ta = _row_weight_adjusted(spec, xe, te)
            xexps.append(xa)
            ttotal += ta
        return xexps, ttotal

    def coinv(self) -> int:
        """The t exponent of the configuration weight."""
        return self.weight_exponents()[1]

    def weight(self) -> LaurentPoly:
        vars = VarSet(nx=self.spec.n)
        xexps, texp = self.weight_exponents()
        return LaurentPoly.monomial(vars, 1, tuple(xexps) + (texp,))

    def to_json_dict(self) -> dict:
        k = self.spec.k
        return {
            "k": k,
            "n": self.spec.n,
            "columns": [self.spec.r + c for c in range(self.spec.ncols)],
            "verticals": [[list(bits_of(m, k)) for m in level] for level in self.verticals],
            "horizontals": [[list(bits_of(m, k)) for m in row] for row in self.horizontals],
        }

    def ascii_art(self) -> str:
        """Rows top to bottom; vertical edges as color digits, faces as dots."""
        spec = self.spec
        lines = []

        def vline(level):
            cells = []
            for m in self.verticals[level]:
                cells.append("".join(str(i + 1) for i in range(spec.k) if (m >> i) & 1) or ".")
            return "  " + "  ".join(f"{c:>3}" for c in cells)

        lines.append(vline(spec.n))
        for row in range(spec.n, 0, -1):
            hrow = self.horizontals[row - 1]
            segs = []
            for c in range(spec.ncols + 1):
                segs.append("".join(str(i + 1) for i in range(spec.k) if (hrow[c] >> i) & 1) or "-")
            lines.append(" " + "--".join(f"{s:>3}" for s in segs))
            lines.append(vline(row - 1))
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"))


def enumerate_configs(spec: LatticeSpec) -> list[LatticeConfig]:
    """Every lattice configuration exactly once, in a deterministic order."""
    out: list[LatticeConfig] = []
    verts = [spec.bottom]
    horiz: list[tuple[int, ...]] = []

    def rec(row: int):
        if row > spec.n:
            if verts[-1] == spec.top:
                out.append(LatticeConfig(spec, tuple(verts), tuple(horiz)))
            return
        for tvec, _, _, h in sorted(
            _row_transitions(spec.k, spec.ncols, verts[-1], spec.right[row - 1]),
            key=lambda item: item[0],
        ):
            verts.append(tvec)
            horiz.append(h)
            rec(row + 1)
            verts.pop()
            horiz.pop()

    rec(1)
    return out


# -- the bijection with tableaux ----------------------------------------------


def ssyt_to_config(T, n: int) -> LatticeConfig:
    """Row-by-row path encoding of a tableau tuple."""
    shape = T.shape
    spec = build_lattice(shape, n)
    ncols = spec.ncols
    vert = [[0] * ncols for _ in range(n + 1)]
    horiz = [[0] * (ncols + 1) for _ in range(n)]
    for i in range(shape.k):
        bit = 1 << i
        beta, gamma = shape.beta[i], shape.gamma[i]
        for rho in range(1, len(beta) + 1):
            col = gamma[rho - 1] - rho + 1 - spec.r
            entries = T.rows[i][rho - 1]
            level = 0
            for e in entries:
                for h in range(level, e):
                    vert[h][col] |= bit
                horiz[e - 1][col + 1] |= bit
                level = e
                col += 1
            for h in range(level, n + 1):
                vert[h][col] |= bit
    return LatticeConfig(spec, tuple(tuple(v) for v in vert), tuple(tuple(h) for h in horiz))


def config_to_ssyt(config: LatticeConfig):
    """Invert the path encoding; raises ValueError on a malformed config."""
    from .tableaux import TableauTuple

    spec = config.spec
    shape = spec.shape
    if shape is None:
        raise ValueError("configuration's lattice does not carry a shape")
    n = spec.n
    rows_out = []
    for i in range(shape.k):
        bit = 1 << i
        beta, gamma = shape.beta[i], shape.gamma[i]
        comp_rows = []
        for rho in range(1, len(beta) + 1):
            col = gamma[rho - 1] - rho + 1 - spec.r
            if not (config.verticals[0][col] & bit):
                raise ValueError("path start missing at the bottom boundary")
            entries = []
            row = 1
            while row <= n:
                if config.horizontals[row - 1][col + 1] & bit:
                    entries.append(row)
                    col += 1
                else:
                    if not (config.verticals[row][col] & bit):
                        raise ValueError("path breaks off inside the lattice")
                    row += 1
            if col != beta[rho - 1] - rho + 1 - spec.r:
                raise ValueError("path exits at the wrong top column")
            if len(entries) != beta[rho - 1] - gamma[rho - 1]:
                raise ValueError("wrong number of crossings")
            comp_rows.append(tuple(entries))
        rows_out.append(tuple(comp_rows))
    return TableauTuple(shape, tuple(rows_out))


# -- 180-degree rotation of box configurations ---------------------------------


def _reverse_colors(mask: int, k: int) -> int:
    out = 0
    for i in range(k):
        if (mask >> i) & 1:
            out |= 1 << (k - 1 - i)
    return out


def rotate_config(config: LatticeConfig) -> LatticeConfig:
    """Rotate a box configuration 180 degrees and reverse the colors.

    The input must live on a box lattice (bottom lam, top the full box); the
    output lives on the box lattice with bottom empty and top the complement
    tuple.  Horizontal steps stay horizontal, so the total x-degree is
    preserved (row i maps to row n+1-i).
    """
    spec = config.spec
    if spec.gray or any(spec.right):
        raise ValueError("rotation is defined for plain lattices with empty right edge")
    k, n, ncols = spec.k, spec.n, spec.ncols
    full = (1 << k) - 1
    box_top = tuple(
        full if ncols - n <= c <= ncols - 1 else 0 for c in range(ncols)
    )
    empty_bottom = tuple(full if c < n else 0 for c in range(ncols))
    # accept both the (lam, box) family and its rotated (empty, complement)
    # image, so the map is an involution
    if spec.r != 1 - n or (spec.top != box_top and spec.bottom != empty_bottom):
        raise ValueError("top boundary is not a full box")
    verts = tuple(
        tuple(_reverse_colors(config.verticals[n - h][ncols - 1 - c], k) for c in range(ncols))
        for h in range(n + 1)
    )
    horiz = tuple(
        tuple(_reverse_colors(config.horizontals[n - row][ncols - b], k) for b in range(ncols + 1))
        for row in range(1, n + 1)
    )
    new_spec = LatticeSpec(
        k=k, n=n, r=spec.r, s=spec.s, bottom=verts[0], top=verts[n],
        right=(0,) * n, gray=False,
    )
    return LatticeConfig(new_spec, verts, horiz)
