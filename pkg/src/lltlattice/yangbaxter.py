"""R-matrix weights, the color recursion, and Yang-Baxter verification.

Everything here works in the three-variable ring (x, y, t); x is slot 0, y
slot 1, t slot 2.  A crossing face R(I,J;K,L) reads I at the south-west, J at
the north-west, K at the north-east and L at the south-east.  Per color the
admissible patterns (I,J,K,L) and their factors are

    type 1  (0,1,0,1)   1 - y/(x t^d)
    type 2  (0,1,1,0)   y/(x t^d)
    type 3  (1,0,0,1)   1
    type 4  (1,1,1,1)   y/(x t^d)
    type 5  (0,0,0,0)   1

where d counts the colors above this one in type 1; the pattern (1,0,1,0)
is forbidden.  The checkers cover every boundary at once by sparse
contraction of the three-face sums, symbolically or at exact rational
points.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .algebra import LaurentPoly, VarSet
from .lattice import mask_of

YBE_VARS = VarSet(nx=1, ny=1, has_t=True)
_X, _Y, _T = 0, 1, 2


def _binom2(m: int) -> int:
    return m * (m - 1) // 2


def _mono(xe: int = 0, ye: int = 0, te: int = 0, coeff: int = 1) -> LaurentPoly:
    return LaurentPoly.monomial(YBE_VARS, coeff, (xe, ye, te))


def _one() -> LaurentPoly:
    return LaurentPoly.one(YBE_VARS)


def _zero() -> LaurentPoly:
    return LaurentPoly.zero(YBE_VARS)


# single-color R patterns
_TYPE_OF = {
    (0, 0, 0, 0): 5,
    (0, 1, 0, 1): 1,
    (0, 1, 1, 0): 2,
    (1, 0, 0, 1): 3,
    (1, 1, 1, 1): 4,
}


def r_weight(k: int, I, J, K, L) -> LaurentPoly:
    """Closed-form crossing weight; 0 when some color breaks the type table."""
    I, J, K, L = (v if isinstance(v, int) else mask_of(v) for v in (I, J, K, L))
    types = []
    for i in range(k):
        pat = ((I >> i) & 1, (J >> i) & 1, (K >> i) & 1, (L >> i) & 1)
        ty = _TYPE_OF.get(pat)
        if ty is None:
            return _zero()
        types.append(ty)
    weight = _one()
    for i in range(k):
        delta = sum(1 for j in range(i + 1, k) if types[j] == 1)
        alg = sum(
            ((J >> j) & 1) - ((I >> j) & 1) + ((L >> j) & 1) - ((K >> j) & 1)
            for j in range(i + 1, k)
        )
        if alg != 2 * delta:
            raise AssertionError("delta mismatch between type count and label algebra")
        ty = types[i]
        if ty == 1:
            weight = weight * (_one() - _mono(-1, 1, -delta))
        elif ty in (2, 4):
            weight = weight * _mono(-1, 1, -delta)
    return weight


def l_weight_xyt(k: int, I, J, K, L, spectral: str = "x") -> LaurentPoly:
    """Plain face weight as a polynomial in (x, y, t); spectral picks x or y."""
    from .lattice import face_weight_exponents

    I, J, K, L = (v if isinstance(v, int) else mask_of(v) for v in (I, J, K, L))
    data = face_weight_exponents(k, I, J, K, L)
    if data is None:
        return _zero()
    xe, te = data
    if spectral == "x":
        return _mono(xe, 0, te)
    return _mono(0, xe, te)


def lstar_weight_xyt(k: int, I, J, K, L) -> LaurentPoly:
    from .lattice import face_weight_exponents

    I, J, K, L = (v if isinstance(v, int) else mask_of(v) for v in (I, J, K, L))
    data = face_weight_exponents(k, I, J, K, L)
    if data is None:
        return _zero()
    xe, te = data
    return _mono(k - xe, 0, _binom2(k) + te - (k - 1) * xe)


# -- the E/F tables and the color recursion ------------------------------------

_L_PICTURES = (
    (0, 0, 0, 0),  # empty
    (1, 0, 0, 1),  # enters bottom, leaves right
    (0, 1, 0, 1),  # passes through horizontally
    (1, 0, 1, 0),  # passes through vertically
    (0, 1, 1, 0),  # enters left, leaves top
)
_R_PICTURES = (
    (0, 1, 0, 1),  # type 1
    (0, 1, 1, 0),  # type 2
    (1, 0, 0, 1),  # type 3
    (1, 1, 1, 1),  # type 4
    (0, 0, 0, 0),  # type 5
)


def ef_weight(kind: str, picture) -> LaurentPoly:
    """Tabulated single-color weight for kind in E, F, Etilde, Ftilde."""
    pic = tuple(picture)
    if kind in ("E", "F"):
        if pic not in _L_PICTURES:
            raise ValueError(f"unknown single-color face picture {pic}")
        idx = _L_PICTURES.index(pic)
        if kind == "E":
            return _one() if idx == 0 else _zero()
        return (_zero(), _mono(1), _mono(1), _one(), _one())[idx]
    if kind in ("Etilde", "Ftilde"):
        if pic not in _R_PICTURES:
            raise ValueError(f"unknown single-color crossing picture {pic}")
        idx = _R_PICTURES.index(pic)
        if kind == "Etilde":
            return _one() - _mono(-1, 1) if idx == 0 else _zero()
        return (_zero(), _mono(-1, 1), _one(), _mono(-1, 1), _one())[idx]
    raise ValueError(f"unknown kind {kind!r}")


def _shift_x_to_xt(p: LaurentPoly) -> LaurentPoly:
    """Substitute x -> x*t."""
    return p.substitute({_X: (1, (1, 0, 1))})


@lru_cache(maxsize=None)
def _recursive_l_table(k: int) -> dict:
    """All nonzero k-color face weights built by the one-color-at-a-time rule."""
    if k == 0:
        return {(0, 0, 0, 0): _one()}
    prev = _recursive_l_table(k - 1)
    bit = 1 << (k - 1)
    out: dict = {}
    f_weights = {
        (1, 0, 0, 1): _mono(1),
        (0, 1, 0, 1): _mono(1),
        (1, 0, 1, 0): _one(),
        (0, 1, 1, 0): _one(),
    }
    for (I, J, K, L), w in prev.items():
        out[(I, J, K, L)] = w  # E branch: the new color is absent
        wt = _shift_x_to_xt(w)
        for (i, j, kk, l), f in f_weights.items():
            key = (I | (bit * i), J | (bit * j), K | (bit * kk), L | (bit * l))
            out[key] = wt * f
    return out


@lru_cache(maxsize=None)
def _recursive_r_table(k: int) -> dict:
    if k == 0:
        return {(0, 0, 0, 0): _one()}
    prev = _recursive_r_table(k - 1)
    bit = 1 << (k - 1)
    etilde = _one() - _mono(-1, 1)
    ftilde_weights = {
        (0, 1, 1, 0): _mono(-1, 1),
        (1, 0, 0, 1): _one(),
        (1, 1, 1, 1): _mono(-1, 1),
        (0, 0, 0, 0): _one(),
    }
    out: dict = {}
    for (I, J, K, L), w in prev.items():
        # Etilde branch: new color in type 1, smaller colors at spectral y/(xt)
        key1 = (I, J | bit, K, L | bit)
        out[key1] = _shift_x_to_xt(w) * etilde
        for (i, j, kk, l), f in ftilde_weights.items():
            key = (I | (bit * i), J | (bit * j), K | (bit * kk), L | (bit * l))
            val = w * f
            if key in out:
                val = out[key] + val
            out[key] = val
    return {key: w for key, w in out.items() if not w.is_zero()}


def l_recursive(k: int):
    """Face-weight oracle for k colors built from the tensor recursion."""
    table = _recursive_l_table(k)

    def weight(I, J, K, L) -> LaurentPoly:
        key = tuple(v if isinstance(v, int) else mask_of(v) for v in (I, J, K, L))
        return table.get(key, _zero())

    return weight


def r_recursive(k: int):
    table = _recursive_r_table(k)

    def weight(I, J, K, L) -> LaurentPoly:
        key = tuple(v if isinstance(v, int) else mask_of(v) for v in (I, J, K, L))
        return table.get(key, _zero())

    return weight


# -- both sides of the intertwining equation -----------------------------------


@lru_cache(maxsize=None)
def _l_entry_rows(k: int, spectral: str) -> dict:
    """(I, J) -> {(K, L): weight} over all nonzero plain face weights."""
    rows: dict = {}
    size = 1 << k
    for I in range(size):
        for J in range(size):
            if I & J:
                continue
            present = I | J
            sub = {}
            free = [i for i in range(k) if (present >> i) & 1]
            for pick in range(1 << len(free)):
                K = 0
                for idx, i in enumerate(free):
                    if (pick >> idx) & 1:
                        K |= 1 << i
                L = present & ~K
                sub[(K, L)] = l_weight_xyt(k, I, J, K, L, spectral)
            rows[(I, J)] = sub
    return rows


@lru_cache(maxsize=None)
def _lstar_entry_rows(k: int) -> dict:
    rows = {}
    for (I, J), sub in _l_entry_rows(k, "x").items():
        rows[(I, J)] = {kl: lstar_weight_xyt(k, I, J, *kl) for kl in sub}
    return rows


@lru_cache(maxsize=None)
def _r_entry_rows(k: int, barred_x: bool = False) -> dict:
    """(I, J) -> {(K, L): weight} over all nonzero crossing weights.

    With barred_x the x line carries 1/(x t^(k-1)).
    """
    rows: dict = {}
    size = 1 << k
    for I in range(size):
        for J in range(size):
            sub = {}
            per_color = []
            for i in range(k):
                pats = [
                    (kk, l)
                    for (ii, jj, kk, l) in _TYPE_OF
                    if ii == ((I >> i) & 1) and jj == ((J >> i) & 1)
                ]
                per_color.append(pats)
            from itertools import product as _product

            for combo in _product(*per_color):
                K = L = 0
                for i, (kk, l) in enumerate(combo):
                    K |= kk << i
                    L |= l << i
                w = r_weight(k, I, J, K, L)
                if not w.is_zero():
                    sub[(K, L)] = w
            rows[(I, J)] = sub
    if barred_x:
        xbar = {_X: (1, (-1, 0, -(k - 1)))}
        rows = {
            ij: {kl: w.substitute(xbar) for kl, w in sub.items()}
            for ij, sub in rows.items()
        }
    return rows


def _contract_sides(k: int, lx_rows, ly_rows, r_rows, to_value):
    """Sparse evaluation of both sides over every boundary at once.

    Returns (gauche, droite): maps from (I1,I2,I3,J1,J2,J3) to values, zero
    entries dropped.  ``to_value`` turns a symbolic weight into the working
    value (identity for symbolic runs, evaluation for numeric ones).
    """
    size = 1 << k
    gauche: dict = {}
    for (I2, I1), outs in r_rows.items():
        for (K2, K1), rw in outs.items():
            rv = to_value(rw)
            for I3 in range(size):
                for (K3, J1), lw in lx_rows.get((I3, K1), {}).items():
                    lv = to_value(lw)
                    for (J3, J2), lyw in ly_rows.get((K3, K2), {}).items():
                        key = (I1, I2, I3, J1, J2, J3)
                        val = rv * lv * to_value(lyw)
                        if key in gauche:
                            val = gauche[key] + val
                        gauche[key] = val
    droite: dict = {}
    for (I3, I2), outs in ly_rows.items():
        for (L3, L2), lyw in outs.items():
            lyv = to_value(lyw)
            for I1 in range(size):
                for (J3, L1), lw in lx_rows.get((L3, I1), {}).items():
                    lv = to_value(lw)
                    for (J2, J1), rw in r_rows.get((L2, L1), {}).items():
                        key = (I1, I2, I3, J1, J2, J3)
                        val = lyv * lv * to_value(rw)
                        if key in droite:
                            val = droite[key] + val
                        droite[key] = val
    gauche = {key: v for key, v in gauche.items() if v}
    droite = {key: v for key, v in droite.items() if v}
    return gauche, droite


def ybe_gauche(k: int, boundary) -> LaurentPoly:
    """Left side of the intertwining sum for one boundary, symbolically."""
    return _one_boundary(k, boundary, starred=False)[0]


def ybe_droite(k: int, boundary) -> LaurentPoly:
    return _one_boundary(k, boundary, starred=False)[1]


def _one_boundary(k: int, boundary, starred: bool):
    I1, I2, I3, J1, J2, J3 = (
        v if isinstance(v, int) else mask_of(v) for v in boundary
    )
    lx = _lstar_entry_rows(k) if starred else _l_entry_rows(k, "x")
    ly = _l_entry_rows(k, "y")
    rr = _r_entry_rows(k, barred_x=starred)
    g = _zero()
    for (K2, K1), rw in rr.get((I2, I1), {}).items():
        for (K3, J1p), lw in lx.get((I3, K1), {}).items():
            if J1p != J1:
                continue
            lyw = ly.get((K3, K2), {}).get((J3, J2))
            if lyw is not None:
                g = g + rw * lw * lyw
    d = _zero()
    for (L3, L2), lyw in ly.get((I3, I2), {}).items():
        for (J3p, L1), lw in lx.get((L3, I1), {}).items():
            if J3p != J3:
                continue
            rw = rr.get((L2, L1), {}).get((J2, J1))
            if rw is not None:
                d = d + lyw * lw * rw
    return g, d


@dataclass
class YbeReport:
    name: str
    k: int
    mode: str
    checked: int
    failed: int
    first_failure: dict | None = None
    params: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.failed == 0

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def to_json_dict(self) -> dict:
        out = {
            "identity": self.name,
            "k": self.k,
            "mode": self.mode,
            "status": self.status,
            "checked": self.checked,
            "failed": self.failed,
        }
        if self.params:
            out["params"] = self.params
        if self.first_failure is not None:
            out["first_failure"] = self.first_failure
        return out


def _sample_point(rng: random.Random) -> tuple[Fraction, Fraction, Fraction]:
    """Nonzero rationals with x != y and t outside {0, 1}."""
    while True:
        x = Fraction(rng.randint(1, 12), rng.randint(1, 12))
        y = Fraction(rng.randint(1, 12), rng.randint(1, 12))
        t = Fraction(rng.randint(2, 12), rng.randint(1, 12))
        if x != y and t not in (0, 1):
            return x, y, t


def _compare_sides(k: int, gauche: dict, droite: dict, describe):
    failures = []
    for key in sorted(set(gauche) | set(droite)):
        gv = gauche.get(key)
        dv = droite.get(key)
        if gv != dv:
            failures.append((key, gv, dv))
    first = None
    if failures:
        key, gv, dv = failures[0]
        first = {
            "boundary": {
                name: list((key[idx] >> i) & 1 for i in range(k))
                for idx, name in enumerate(("I1", "I2", "I3", "J1", "J2", "J3"))
            },
            "gauche": describe(gv),
            "droite": describe(dv),
        }
    return len(failures), first


def _run_check(name: str, k: int, mode: str, seed: int, trials: int, starred: bool) -> YbeReport:
    lx = _lstar_entry_rows(k) if starred else _l_entry_rows(k, "x")
    ly = _l_entry_rows(k, "y")
    rr = _r_entry_rows(k, barred_x=starred)
    checked = 1 << (6 * k)
    if mode == "symbolic":
        gauche, droite = _contract_sides(k, lx, ly, rr, lambda w: w)
        failed, first = _compare_sides(
            k, gauche, droite, lambda v: "0" if v is None else v.to_text()
        )
        return YbeReport(name, k, "symbolic", checked, failed, first)
    if mode != "numeric":
        raise ValueError(f"unknown mode {mode!r}")
    rng = random.Random(seed)
    failed_total = 0
    first = None
    points = [_sample_point(rng) for _ in range(trials)]
    for point in points:
        gauche, droite = _contract_sides(
            k, lx, ly, rr, lambda w: w.eval_rational(point)
        )
        failed, f = _compare_sides(
            k, gauche, droite, lambda v: "0" if v is None else str(v)
        )
        failed_total += failed
        if first is None and f is not None:
            f["point"] = {"x": str(point[0]), "y": str(point[1]), "t": str(point[2])}
            first = f
    return YbeReport(
        name, k, "numeric", checked * trials, failed_total, first,
        params={"seed": seed, "trials": trials},
    )


def ybe_check(k: int, mode: str = "symbolic", seed: int = 1, trials: int = 3) -> YbeReport:
    """Verify the intertwining relation over every boundary condition."""
    return _run_check("ybe", k, mode, seed, trials, starred=False)


def lstar_ybe_check(k: int, mode: str = "symbolic", seed: int = 1, trials: int = 3) -> YbeReport:
    """Same with the gray face on the x line and spectral ratio y/xbar."""
    return _run_check("lstar-ybe", k, mode, seed, trials, starred=True)
