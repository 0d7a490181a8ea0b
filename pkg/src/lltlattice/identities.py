"""Verification drivers: each named identity reduced to exact polynomial equality.

Every verifier returns an IdentityReport; FAIL always carries the two
offending polynomials.  All randomness flows from an explicit seed.  The
Cauchy-type identities are checked after truncating both sides at a total
x-degree bound D, which is exact because each summand is homogeneous.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations

from .algebra import LaurentPoly, VarSet
from .lattice import build_box_lattice, build_lattice, partition_function
from .shapes import (
    Partition,
    ShapeTuple,
    SkewShapeTuple,
    check_partition,
    check_shape_tuple,
    complement,
    d_stat,
    dtilde_stat,
    inv_stat,
    m_bruteforce,
    rotate,
)
from .tableaux import hl_modified, hl_transformed, llt, llt_coinv, llt_inv


@dataclass
class IdentityReport:
    name: str
    params: dict
    status: str
    witness: dict | None = None
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "PASS"

    def to_json_dict(self) -> dict:
        out = {"identity": self.name, "params": self.params, "status": self.status}
        if self.details:
            out["details"] = self.details
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def _check_pairs(name: str, params: dict, pairs, details: dict | None = None) -> IdentityReport:
    """PASS iff every (context, lhs, rhs) pair is an exact equality."""
    count = 0
    for context, lhs, rhs in pairs:
        count += 1
        if lhs != rhs:
            witness = {
                "context": context,
                "lhs": lhs.to_json_dict(),
                "rhs": rhs.to_json_dict(),
            }
            return IdentityReport(name, params, "FAIL", witness, details or {})
    det = dict(details or {})
    det["equalities_checked"] = count
    return IdentityReport(name, params, "PASS", None, det)


@lru_cache(maxsize=None)
def _llt_cached(shape: SkewShapeTuple, n: int, engine: str = "tableaux") -> LaurentPoly:
    return llt(shape, n, engine)


def _as_skew(shape) -> SkewShapeTuple:
    if isinstance(shape, SkewShapeTuple):
        return shape
    return SkewShapeTuple.straight(check_shape_tuple(shape))


# -- single-shape identities ----------------------------------------------------


def verify_symmetry(shape, n: int, engine: str = "tableaux") -> IdentityReport:
    """The LLT polynomial is invariant under adjacent x-transpositions."""
    shape = _as_skew(shape)
    P = llt(shape, n, engine)
    pairs = []
    for i in range(1, n):
        swapped = P.swap_vars(P.vars.x_index(i), P.vars.x_index(i + 1))
        pairs.append((f"swap x{i} <-> x{i + 1}", swapped, P))
    return _check_pairs(
        "symmetry", {"shape": shape.text(), "n": n, "engine": engine}, pairs
    )


def verify_inv_coinv(shape, n: int) -> IdentityReport:
    """Coinversion polynomial = t^m (inversion polynomial at 1/t)."""
    shape = _as_skew(shape)
    L = llt_coinv(shape, n)
    G = llt_inv(shape, n)
    m = m_bruteforce(shape)
    rhs = LaurentPoly.t(L.vars, m) * G.invert_t()
    return _check_pairs(
        "inv-coinv",
        {"shape": shape.text(), "n": n, "m": m},
        [("t^m G(1/t)", L, rhs)],
    )


def verify_hl(mu, n: int, engine: str = "tableaux") -> IdentityReport:
    """Single-row tuples recover transformed Hall-Littlewood polynomials."""
    mu = check_partition(mu)
    H = hl_transformed(mu, n)
    pairs = []
    rev = tuple((p,) for p in reversed(mu))
    pairs.append(("reversed rows", _llt_cached(_as_skew(rev), n, engine), H))
    seen = set()
    for beta in permutations(mu):
        if beta in seen:
            continue
        seen.add(beta)
        rows = tuple((p,) for p in beta)
        lhs = _llt_cached(_as_skew(rows), n, engine)
        rhs = LaurentPoly.t(H.vars, inv_stat(beta)) * H
        pairs.append((f"rearrangement {beta}", lhs, rhs))
    return _check_pairs("hl", {"mu": list(mu), "n": n, "engine": engine}, pairs)


def verify_modified_hl(mu, n: int) -> IdentityReport:
    """Inversion polynomial of the row tuple = modified Hall-Littlewood."""
    mu = check_partition(mu)
    rows = tuple((p,) for p in mu)
    lhs = llt_inv(_as_skew(rows), n)
    rhs = hl_modified(mu, n)
    return _check_pairs("modified-hl", {"mu": list(mu), "n": n}, [("G vs Htilde", lhs, rhs)])


# -- box and complement dualities ------------------------------------------------


def _box_skew_shape(lam: ShapeTuple, M: int, n: int) -> SkewShapeTuple:
    width = M - n
    box = tuple((width,) * n for _ in lam)
    return SkewShapeTuple(box, lam)


def verify_box_skew(lam, M: int, n: int, engine: str = "tableaux") -> IdentityReport:
    """Box-over-lam equals t^d(lam) times the complement tuple."""
    lam = check_shape_tuple(lam)
    skew = _box_skew_shape(lam, M, n)
    lhs = llt(skew, n, engine)
    comp = complement(lam, M, n)
    rhs = LaurentPoly.t(lhs.vars, d_stat(lam)) * llt(comp, n, engine)
    pairs = [("box/lam vs complement", lhs, rhs)]
    details = {"d": d_stat(lam), "d_complement": d_stat(comp)}
    report = _check_pairs(
        "box-skew",
        {"lam": [list(p) for p in lam], "M": M, "n": n, "engine": engine},
        pairs,
        details,
    )
    if report.passed and d_stat(comp) != d_stat(lam):
        report.status = "FAIL"
        report.witness = {
            "context": "d(complement) != d(lam)",
            "lhs": LaurentPoly.const(lhs.vars, d_stat(comp)).to_json_dict(),
            "rhs": LaurentPoly.const(lhs.vars, d_stat(lam)).to_json_dict(),
        }
    return report


def verify_complement(lam, M: int, n: int, engine: str = "tableaux") -> IdentityReport:
    """lam equals the box monomial times t^dtilde times complement at 1/x."""
    lam = check_shape_tuple(lam)
    k = len(lam)
    lhs = _llt_cached(_as_skew(lam), n, engine)
    comp = complement(lam, M, n)
    inverted = _llt_cached(_as_skew(comp), n, engine).invert_x()
    exps = [k * (M - n)] * n + [dtilde_stat(lam, M)]
    rhs = LaurentPoly.monomial(lhs.vars, 1, exps) * inverted
    return _check_pairs(
        "complement",
        {"lam": [list(p) for p in lam], "M": M, "n": n, "engine": engine},
        [("lam vs complement at 1/x", lhs, rhs)],
        {"dtilde": dtilde_stat(lam, M)},
    )


def _x_rho_power(vars: VarSet, n: int, k: int, extra_all: int = 0, textra: int = 0) -> LaurentPoly:
    exps = [(n - i) * k + extra_all for i in range(1, n + 1)] + [textra]
    return LaurentPoly.monomial(vars, 1, exps)


def verify_lstar(lam, n: int, Ms, engine: str = "tableaux") -> IdentityReport:
    """Gray-row evaluation is M-independent and matches the plain polynomial.

    For every M: the right-exit gray lattice equals
    (x^rho)^k t^(C(n,2)C(k,2)+d(lam)) L_lam, and differs from the top-exit
    gray lattice (box top boundary) by the displayed monomial.
    """
    lam = check_shape_tuple(lam)
    k = len(lam)
    Ms = sorted(set(int(M) for M in Ms))
    base = _llt_cached(_as_skew(lam), n, engine)
    vars = base.vars
    c2 = (n * (n - 1) // 2) * (k * (k - 1) // 2)
    target = _x_rho_power(vars, n, k, textra=c2 + d_stat(lam)) * base
    pairs = []
    for M in Ms:
        zright = partition_function(build_box_lattice(lam, M, n, gray=True, right_exit=True))
        pairs.append((f"right-exit gray row, M={M}", zright, target))
        ztop = partition_function(build_box_lattice(lam, M, n, gray=True, right_exit=False))
        shift_t = -((n + 1) * n // 2) * (k * (k - 1) // 2)
        factor = _x_rho_power(vars, n, k, extra_all=-n * k, textra=shift_t)
        pairs.append((f"top-exit vs right-exit, M={M}", zright, ztop * factor))
    return _check_pairs(
        "lstar",
        {"lam": [list(p) for p in lam], "n": n, "M": Ms},
        pairs,
        {"d": d_stat(lam)},
    )


# -- Cauchy identities ------------------------------------------------------------


def _embed(p: LaurentPoly, big: VarSet, into_y: bool) -> LaurentPoly:
    """Re-house an n-variable polynomial in the (x, y, t) ring."""
    n = p.vars.nx
    terms = {}
    for e, c in p.terms.items():
        exps = [0] * big.total
        for i in range(n):
            exps[big.y_index(i + 1) if into_y else big.x_index(i + 1)] = e[i]
        exps[big.t_index] = e[-1]
        terms[tuple(exps)] = c
    return LaurentPoly(big, terms)


def cauchy_kernel_truncated(n: int, k: int, D: int, vars: VarSet | None = None) -> LaurentPoly:
    """prod over i, j, m of 1/(1 - x_i y_j t^m), truncated to x-degree <= D."""
    if vars is None:
        vars = VarSet(nx=n, ny=n, has_t=True)
    out = LaurentPoly.one(vars)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for m in range(k):
                exps = [0] * vars.total
                exps[vars.x_index(i)] = 1
                exps[vars.y_index(j)] = 1
                exps[vars.t_index] = m
                unit = LaurentPoly.monomial(vars, 1, exps)
                series = LaurentPoly.one(vars)
                power = LaurentPoly.one(vars)
                for _ in range(D):
                    power = (power * unit).truncate_x(D)
                    if power.is_zero():
                        break
                    series = series + power
                out = (out * series).truncate_x(D)
    return out


def partitions_fixed_length(n: int, max_size: int):
    """All partitions with exactly n declared parts and size <= max_size."""
    out: list[Partition] = []

    def rec(prefix: list[int], remaining: int, cap: int):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for v in range(min(cap, remaining), -1, -1):
            prefix.append(v)
            rec(prefix, remaining - v, v)
            prefix.pop()

    rec([], max_size, max_size)
    return out


def shape_tuples_bounded(k: int, n: int, D: int):
    """k-tuples of n-part partitions with total size <= D."""
    singles = partitions_fixed_length(n, D)
    out: list[ShapeTuple] = []

    def rec(prefix: list[Partition], budget: int):
        if len(prefix) == k:
            out.append(tuple(prefix))
            return
        for p in singles:
            s = sum(p)
            if s <= budget:
                prefix.append(p)
                rec(prefix, budget - s)
                prefix.pop()

    rec([], D)
    return out


def verify_cauchy(n: int, k: int, D: int, engine: str = "tableaux") -> IdentityReport:
    """Sum of t^d(lam) L_lam(X) L_lam(Y) against the product kernel."""
    big = VarSet(nx=n, ny=n, has_t=True)
    lhs = LaurentPoly.zero(big)
    for lam in shape_tuples_bounded(k, n, D):
        P = _llt_cached(_as_skew(lam), n, engine)
        term = _embed(P, big, False) * _embed(P, big, True)
        lhs = lhs + LaurentPoly.t(big, d_stat(lam)) * term
    rhs = cauchy_kernel_truncated(n, k, D, big)
    return _check_pairs(
        "cauchy", {"n": n, "k": k, "D": D, "engine": engine}, [("sum vs kernel", lhs, rhs)]
    )


def verify_skew_cauchy(mu, n: int, k: int, D: int) -> IdentityReport:
    """Skew Cauchy identity; tuples not containing mu contribute nothing."""
    mu = check_shape_tuple(mu)
    if len(mu) != k or any(len(p) != n for p in mu):
        raise ValueError("mu must be a k-tuple of partitions with n parts")
    if sum(sum(p) for p in mu) > D:
        raise ValueError("need |mu| <= D")
    big = VarSet(nx=n, ny=n, has_t=True)
    lhs = LaurentPoly.zero(big)
    for lam in shape_tuples_bounded(k, n, D):
        if any(lv < mv for lp, mp in zip(lam, mu) for lv, mv in zip(lp, mp)):
            continue
        P = _llt_cached(_as_skew(lam), n)
        Q = _llt_cached(SkewShapeTuple(lam, mu), n)
        lhs = lhs + LaurentPoly.t(big, d_stat(lam)) * _embed(P, big, False) * _embed(Q, big, True)
    base = LaurentPoly.t(big, d_stat(mu)) * _embed(_llt_cached(_as_skew(mu), n), big, False)
    rhs = (base * cauchy_kernel_truncated(n, k, D, big)).truncate_x(D)
    pairs = [
        ("skew sum vs kernel", lhs, rhs),
        ("y-degree-0 slice", lhs.truncate_y(0), base),
    ]
    return _check_pairs(
        "skew-cauchy",
        {"mu": [list(p) for p in mu], "n": n, "k": k, "D": D},
        pairs,
    )


def verify_cauchy_rot(n: int, k: int, D: int) -> IdentityReport:
    """Rotated Cauchy identity plus the rotation/complement relation."""
    big = VarSet(nx=n, ny=n, has_t=True)
    lhs = LaurentPoly.zero(big)
    pairs = []
    for lam in shape_tuples_bounded(k, n, D):
        P = _llt_cached(_as_skew(lam), n)
        rot = rotate(lam)
        R = _llt_cached(rot, n)
        lhs = lhs + _embed(P, big, False) * _embed(R, big, True)
        width = max((p[0] for p in lam if p), default=0)
        comp = complement(lam, width + n, n)
        rel_rhs = LaurentPoly.t(P.vars, d_stat(comp)) * P
        pairs.append((f"rotation relation at {lam}", R, rel_rhs))
        pairs.append(
            (
                f"d(comp)=d(lam) at {lam}",
                LaurentPoly.const(big, d_stat(comp)),
                LaurentPoly.const(big, d_stat(lam)),
            )
        )
    rhs = cauchy_kernel_truncated(n, k, D, big)
    pairs.insert(0, ("rotated sum vs kernel", lhs, rhs))
    return _check_pairs("cauchy-rot", {"n": n, "k": k, "D": D}, pairs)


# -- randomized regression surfaces ----------------------------------------------


def random_partition(rng: random.Random, max_rows: int, max_part: int) -> Partition:
    nrows = rng.randint(1, max_rows)
    return tuple(sorted((rng.randint(0, max_part) for _ in range(nrows)), reverse=True))


def random_skew_tuple(rng: random.Random, max_k: int = 3, max_rows: int = 3,
                      max_part: int = 3) -> SkewShapeTuple:
    k = rng.randint(1, max_k)
    beta = []
    gamma = []
    for _ in range(k):
        b = random_partition(rng, max_rows, max_part)
        # the i-th largest of values bounded by the (sorted) parts stays bounded
        g = tuple(sorted((rng.randint(0, v) for v in b), reverse=True))
        beta.append(b)
        gamma.append(g)
    return SkewShapeTuple(tuple(beta), tuple(gamma))


def random_straight_tuple(rng: random.Random, k: int, n: int, max_part: int) -> ShapeTuple:
    return tuple(
        tuple(sorted((rng.randint(0, max_part) for _ in range(n)), reverse=True))
        for _ in range(k)
    )


def verify_engine_equivalence(trials: int, seed: int) -> IdentityReport:
    """Tableau and lattice engines agree on random skew tuples."""
    rng = random.Random(seed)
    pairs = []
    for idx in range(trials):
        shape = random_skew_tuple(rng)
        n = rng.randint(1, 3)
        pairs.append(
            (
                f"case {idx}: {shape.text()}, n={n}",
                llt_coinv(shape, n),
                partition_function(build_lattice(shape, n)),
            )
        )
    return _check_pairs("engine-equivalence", {"trials": trials, "seed": seed}, pairs)
