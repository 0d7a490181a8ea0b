"""Partitions, tuples of skew shapes, and their combinatorial statistics.

Partitions are tuples of weakly decreasing nonnegative ints with a fixed
declared number of parts; trailing zeros are significant.  A k-tuple of skew
shapes is a pair of such tuples (beta, gamma) with componentwise containment.
Cells use French convention: row 1 at the bottom, cell (row, col) has content
col - row, and columns strictly increase going up.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

Partition = tuple[int, ...]
ShapeTuple = tuple[Partition, ...]


def check_partition(parts) -> Partition:
    p = tuple(int(v) for v in parts)
    if any(v < 0 for v in p):
        raise ValueError(f"negative part in {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"parts not weakly decreasing: {p}")
    return p


def check_shape_tuple(shapes) -> ShapeTuple:
    tup = tuple(check_partition(p) for p in shapes)
    if not tup:
        raise ValueError("shape tuple must have at least one component")
    return tup


@dataclass(frozen=True)
class SkewShapeTuple:
    """k-tuple of skew shapes beta/gamma with matching declared lengths."""

    beta: ShapeTuple
    gamma: ShapeTuple

    def __post_init__(self):
        beta = check_shape_tuple(self.beta)
        gamma = check_shape_tuple(self.gamma)
        if len(beta) != len(gamma):
            raise ValueError("beta and gamma must have the same number of components")
        for b, g in zip(beta, gamma):
            if len(b) != len(g):
                raise ValueError(f"{b} and {g} must have the same number of parts")
            if any(gv > bv for bv, gv in zip(b, g)):
                raise ValueError(f"containment fails: {g} is not inside {b}")
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "gamma", gamma)

    @classmethod
    def straight(cls, beta) -> "SkewShapeTuple":
        beta = check_shape_tuple(beta)
        return cls(beta, tuple((0,) * len(b) for b in beta))

    @property
    def k(self) -> int:
        return len(self.beta)

    def is_straight(self) -> bool:
        return all(all(v == 0 for v in g) for g in self.gamma)

    def cell_count(self) -> int:
        return sum(sum(b) - sum(g) for b, g in zip(self.beta, self.gamma))

    def cells(self, i: int):
        """Cells (row, col) of component i (0-based i), bottom row first."""
        b, g = self.beta[i], self.gamma[i]
        for row in range(1, len(b) + 1):
            for col in range(g[row - 1] + 1, b[row - 1] + 1):
                yield (row, col)

    def text(self) -> str:
        beta = ";".join(",".join(str(v) for v in p) for p in self.beta)
        gamma = ";".join(",".join(str(v) for v in p) for p in self.gamma)
        return f"{beta}/{gamma}"


def parse_shape_text(text: str) -> ShapeTuple:
    """Parse "3,3;3,1" into ((3,3),(3,1))."""
    comps = [c.strip() for c in text.split(";")]
    return check_shape_tuple(tuple(tuple(int(v) for v in c.split(",")) for c in comps))


def shape_to_json_dict(shape: SkewShapeTuple) -> dict:
    return {
        "beta": [list(p) for p in shape.beta],
        "gamma": [list(p) for p in shape.gamma],
    }


def shape_from_json_dict(data: dict) -> SkewShapeTuple:
    """JSON mirror of the text format; gamma defaults to all zeros."""
    beta = tuple(tuple(int(v) for v in p) for p in data["beta"])
    if "gamma" in data and data["gamma"] is not None:
        gamma = tuple(tuple(int(v) for v in p) for p in data["gamma"])
    else:
        gamma = tuple((0,) * len(p) for p in beta)
    return SkewShapeTuple(beta, gamma)


# -- boundary data for the lattice ------------------------------------------


def label_columns(p: Partition) -> tuple[int, ...]:
    """Columns p_m - m + 1 over all declared parts; strictly decreasing."""
    return tuple(p[m - 1] - m + 1 for m in range(1, len(p) + 1))


def boundary_vector(mu: ShapeTuple, i: int) -> tuple[int, ...]:
    """Bit j is 1 iff i = mu^(j)_m - m + 1 for some declared part m."""
    return tuple(1 if i in label_columns(p) else 0 for p in mu)


def column_range(shape: SkewShapeTuple) -> tuple[int, int]:
    """(r, s): leftmost gamma label and rightmost beta label."""
    gcols = [c for g in shape.gamma for c in label_columns(g)]
    bcols = [c for b in shape.beta for c in label_columns(b)]
    if not gcols:
        return (0, 0)
    return (min(gcols), max(bcols))


def bandwidth(shape: SkewShapeTuple) -> int:
    r, s = column_range(shape)
    return s - r


# -- triples ------------------------------------------------------------------


@dataclass(frozen=True)
class Triple:
    """One triple of a skew tuple.

    The cells u, w sit in row ``row`` of component ``b`` at columns ``q`` and
    ``q+1``; v is the cell of the earlier component ``a`` on the content line
    of w.  ``u_inside``/``w_inside`` say whether u/w carry entries; otherwise
    their entry roles are the sentinels 0 and infinity.
    """

    a: int
    v_row: int
    v_col: int
    b: int
    row: int
    q: int
    u_inside: bool
    w_inside: bool


@lru_cache(maxsize=None)
def triples(shape: SkewShapeTuple) -> tuple[Triple, ...]:
    """All triples, enumerated directly from the definition.

    For components a < b, each row of b contributes the adjacent pairs
    (u, w) = ((row, q), (row, q+1)) for q from gamma_row to beta_row; u is
    outside the shape at q = gamma_row (column 0 included when gamma_row = 0)
    and w is outside at q = beta_row.  Every cell v of component a on the
    content line of w completes a triple.
    """
    k = shape.k
    by_content: list[dict[int, list[tuple[int, int]]]] = []
    for i in range(k):
        d: dict[int, list[tuple[int, int]]] = {}
        for (row, col) in shape.cells(i):
            d.setdefault(col - row, []).append((row, col))
        by_content.append(d)

    out = []
    for b in range(k):
        betab, gammab = shape.beta[b], shape.gamma[b]
        for row in range(1, len(betab) + 1):
            lo, hi = gammab[row - 1], betab[row - 1]
            for q in range(lo, hi + 1):
                w_content = q + 1 - row
                for a in range(b):
                    for (vr, vc) in by_content[a].get(w_content, ()):
                        out.append(
                            Triple(
                                a=a,
                                v_row=vr,
                                v_col=vc,
                                b=b,
                                row=row,
                                q=q,
                                u_inside=q > lo,
                                w_inside=q + 1 <= hi,
                            )
                        )
    return tuple(out)


def m_bruteforce(shape: SkewShapeTuple) -> int:
    """Total number of triples, by direct enumeration."""
    return len(triples(shape))


def m_formula(beta: ShapeTuple) -> int:
    """Closed form for the triple count of a tuple of partitions."""
    beta = check_shape_tuple(beta)
    k = len(beta)
    total = 0
    for a in range(k):
        for b in range(a + 1, k):
            for i in range(1, len(beta[a]) + 1):
                for j in range(1, len(beta[b]) + 1):
                    bi, bj = beta[a][i - 1], beta[b][j - 1]
                    if 0 <= bj - j + i < bi:
                        total += 1
                    total += max(min(bi - i, bj - j) + min(i, j), 0)
    return total


def n_stat(mu: Partition) -> int:
    """n(mu) = sum (i-1) mu_i."""
    return sum((i - 1) * v for i, v in enumerate(check_partition(mu), start=1))


def inv_stat(beta) -> int:
    """Number of pairs i < j with beta_i > beta_j."""
    beta = tuple(beta)
    return sum(1 for i, j in combinations(range(len(beta)), 2) if beta[i] > beta[j])


# -- dualities ----------------------------------------------------------------


def complement(lam: ShapeTuple, M: int, n: int) -> ShapeTuple:
    """Complement in an (M-n) x n box, components in reversed order."""
    lam = check_shape_tuple(lam)
    width = M - n
    for p in lam:
        if len(p) != n:
            raise ValueError(f"{p} must have exactly {n} parts")
        if p and p[0] > width:
            raise ValueError(f"part {p[0]} exceeds box width {width}")
    return tuple(
        tuple(width - p[n - j] for j in range(1, n + 1)) for p in reversed(lam)
    )


def rotate(shape: SkewShapeTuple | ShapeTuple) -> SkewShapeTuple:
    """Rotate the whole tuple 180 degrees and reverse component order.

    The result is presented inside the smallest box containing the tuple:
    both beta and gamma are complemented in that box.  A straight tuple is
    accepted and treated as beta/0; rotating the result again returns the
    straight tuple exactly.
    """
    if not isinstance(shape, SkewShapeTuple):
        shape = SkewShapeTuple.straight(shape)
    w = max((p[0] for p in shape.beta if p), default=0)

    def comp(p: Partition) -> Partition:
        m = len(p)
        return tuple(w - p[m - j] for j in range(1, m + 1))

    k = shape.k
    beta = tuple(comp(shape.gamma[k - 1 - i]) for i in range(k))
    gamma = tuple(comp(shape.beta[k - 1 - i]) for i in range(k))
    return SkewShapeTuple(beta, gamma)


def d_stat(lam: ShapeTuple, n: int | None = None, k: int | None = None) -> int:
    """Coinversion offset of the 180-degree rotation bijection.

    Can be negative (e.g. ((1,0),(0,0)) gives -1); the generating functions
    it shifts always carry a compensating power of t.
    """
    lam = check_shape_tuple(lam)
    if k is None:
        k = len(lam)
    if n is None:
        n = len(lam[0])
    if k != len(lam) or any(len(p) != n for p in lam):
        raise ValueError("d_stat needs a k-tuple of partitions with n parts each")
    count = 0
    for a in range(k):
        for b in range(a + 1, k):
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    if lam[b][i - 1] - i < lam[a][j - 1] - j:
                        count += 1
    return _binom2(n) * _binom2(k) - count


def dtilde_stat(lam: ShapeTuple, M: int, n: int | None = None, k: int | None = None) -> int:
    """Coinversion offset of the column-complement bijection (may be negative)."""
    lam = check_shape_tuple(lam)
    if k is None:
        k = len(lam)
    if n is None:
        n = len(lam[0])
    if k != len(lam) or any(len(p) != n for p in lam):
        raise ValueError("dtilde_stat needs a k-tuple of partitions with n parts each")
    if any(p and p[0] > M - n for p in lam):
        raise ValueError("parts exceed the box")
    size = sum(sum(p) for p in lam)
    return (k - 1) * size - n * (M - n) * _binom2(k)


def _binom2(m: int) -> int:
    return m * (m - 1) // 2


def staircase(m: int) -> Partition:
    """(m-1, ..., 1, 0)."""
    return tuple(range(m - 1, -1, -1))
