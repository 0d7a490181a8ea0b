"""Exact sparse Laurent polynomial arithmetic over arbitrary-precision integers.

Polynomials live in a fixed variable set: x_1..x_nx, then y_1..y_ny, then
(optionally) t, always in that order.  A polynomial is a map from exponent
vectors (one integer per variable, negatives allowed) to nonzero integer
coefficients; the zero polynomial has no terms.  All arithmetic is exact and
every operation returns a canonical value (no stored zero coefficients), so
two polynomials are equal iff their term maps are equal.

The canonical term order, used by serialization and text output, is
lexicographically decreasing on exponent vectors.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence


@dataclass(frozen=True)
class VarSet:
    """A fixed, ordered alphabet of variables: x_1..x_nx, y_1..y_ny, t."""

    nx: int
    ny: int = 0
    has_t: bool = True

    def __post_init__(self):
        if self.nx < 0 or self.ny < 0:
            raise ValueError("variable counts must be nonnegative")

    @property
    def total(self) -> int:
        return self.nx + self.ny + (1 if self.has_t else 0)

    def x_index(self, i: int) -> int:
        """Slot of x_i (1-based i)."""
        if not 1 <= i <= self.nx:
            raise IndexError(f"x_{i} not in variable set")
        return i - 1

    def y_index(self, j: int) -> int:
        """Slot of y_j (1-based j)."""
        if not 1 <= j <= self.ny:
            raise IndexError(f"y_{j} not in variable set")
        return self.nx + j - 1

    @property
    def t_index(self) -> int:
        if not self.has_t:
            raise IndexError("variable set has no t")
        return self.nx + self.ny

    def names(self) -> list[str]:
        out = [f"x{i}" for i in range(1, self.nx + 1)]
        out += [f"y{j}" for j in range(1, self.ny + 1)]
        if self.has_t:
            out.append("t")
        return out


class LaurentPoly:
    """Immutable sparse Laurent polynomial with integer coefficients.

    ``terms`` maps exponent tuples (length ``vars.total``) to nonzero ints.
    Instances are treated as immutable; do not mutate ``terms`` after
    construction.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: VarSet, terms: Mapping[tuple, int] | None = None):
        object.__setattr__(self, "vars", vars)
        clean = {}
        if terms:
            width = vars.total
            for exps, coeff in terms.items():
                if coeff == 0:
                    continue
                if len(exps) != width:
                    raise ValueError(
                        f"exponent vector {exps} has length {len(exps)}, expected {width}"
                    )
                clean[tuple(exps)] = coeff
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, vars: VarSet) -> "LaurentPoly":
        return cls(vars)

    @classmethod
    def const(cls, vars: VarSet, c: int) -> "LaurentPoly":
        return cls(vars, {(0,) * vars.total: c})

    @classmethod
    def one(cls, vars: VarSet) -> "LaurentPoly":
        return cls.const(vars, 1)

    @classmethod
    def monomial(cls, vars: VarSet, coeff: int, exps: Sequence[int]) -> "LaurentPoly":
        return cls(vars, {tuple(exps): coeff})

    @classmethod
    def variable(cls, vars: VarSet, slot: int, power: int = 1) -> "LaurentPoly":
        exps = [0] * vars.total
        exps[slot] = power
        return cls(vars, {tuple(exps): 1})

    @classmethod
    def x(cls, vars: VarSet, i: int, power: int = 1) -> "LaurentPoly":
        return cls.variable(vars, vars.x_index(i), power)

    @classmethod
    def y(cls, vars: VarSet, j: int, power: int = 1) -> "LaurentPoly":
        return cls.variable(vars, vars.y_index(j), power)

    @classmethod
    def t(cls, vars: VarSet, power: int = 1) -> "LaurentPoly":
        return cls.variable(vars, vars.t_index, power)

    # -- basic protocol ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __repr__(self):
        return f"LaurentPoly({self.to_text()})"

    def _check_same_vars(self, other: "LaurentPoly"):
        if self.vars != other.vars:
            raise ValueError(f"variable-set mismatch: {self.vars} vs {other.vars}")

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(self.vars, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check_same_vars(other)
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            c = out.get(exps, 0) + coeff
            if c:
                out[exps] = c
            elif exps in out:
                del out[exps]
        return LaurentPoly(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(self.vars, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly.zero(self.vars)
            return LaurentPoly(self.vars, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check_same_vars(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = out.get(e, 0) + c1 * c2
                if c:
                    out[e] = c
                elif e in out:
                    del out[e]
        return LaurentPoly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        result = LaurentPoly.one(self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- structure queries -------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple, int]]:
        """Terms in canonical order (lexicographically decreasing exponents)."""
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def coeff(self, exps: Sequence[int]) -> int:
        return self.terms.get(tuple(exps), 0)

    def x_degree(self) -> int:
        """Max total degree in the x-variables (0 for the zero polynomial)."""
        nx = self.vars.nx
        if not self.terms:
            return 0
        return max(sum(e[:nx]) for e in self.terms)

    def min_t_power(self) -> int:
        ti = self.vars.t_index
        if not self.terms:
            return 0
        return min(e[ti] for e in self.terms)

    def max_t_power(self) -> int:
        ti = self.vars.t_index
        if not self.terms:
            return 0
        return max(e[ti] for e in self.terms)

    # -- the operations the rest of the library leans on --------------------

    def substitute(self, assignment: Mapping[int, tuple[int, Sequence[int]]]) -> "LaurentPoly":
        """Substitute signed Laurent monomials for variables.

        ``assignment`` maps a variable slot to ``(sign, exps)`` with sign in
        {+1, -1} and ``exps`` the exponent vector of the replacement monomial.
        Unmapped variables are left alone.  Handles t -> 1/t, x_i -> 1/(x_i
        t^(k-1)), variable swaps, and the like.
        """
        width = self.vars.total
        subs = {}
        for slot, (sign, exps) in assignment.items():
            if sign not in (1, -1):
                raise ValueError("substitution coefficient must be +1 or -1")
            exps = tuple(exps)
            if len(exps) != width:
                raise ValueError("substitution monomial has wrong width")
            subs[slot] = (sign, exps)
        out: dict = {}
        for e, c in self.terms.items():
            new = list(e)
            for slot in subs:
                new[slot] = 0
            coeff = c
            for slot, (sign, sexps) in subs.items():
                power = e[slot]
                if power == 0:
                    continue
                if sign == -1 and power % 2:
                    coeff = -coeff
                for idx, se in enumerate(sexps):
                    if se:
                        new[idx] += se * power
            key = tuple(new)
            acc = out.get(key, 0) + coeff
            if acc:
                out[key] = acc
            elif key in out:
                del out[key]
        return LaurentPoly(self.vars, out)

    def invert_t(self) -> "LaurentPoly":
        ti = self.vars.t_index
        exps = [0] * self.vars.total
        exps[ti] = -1
        return self.substitute({ti: (1, tuple(exps))})

    def swap_vars(self, slot_a: int, slot_b: int) -> "LaurentPoly":
        width = self.vars.total
        ea = [0] * width
        ea[slot_b] = 1
        eb = [0] * width
        eb[slot_a] = 1
        return self.substitute({slot_a: (1, tuple(ea)), slot_b: (1, tuple(eb))})

    def invert_x(self) -> "LaurentPoly":
        """Apply x_i -> 1/x_i for every x-variable."""
        width = self.vars.total
        assignment = {}
        for slot in range(self.vars.nx):
            exps = [0] * width
            exps[slot] = -1
            assignment[slot] = (1, tuple(exps))
        return self.substitute(assignment)

    def eval_rational(self, values: Sequence) -> Fraction:
        """Exact value at a rational point, one value per variable.

        Negative exponents are fine as long as the corresponding value is
        nonzero; a zero value under a negative exponent raises
        ZeroDivisionError.
        """
        if len(values) != self.vars.total:
            raise ValueError("wrong number of values")
        vals = [Fraction(v) for v in values]
        total = Fraction(0)
        for e, c in self.terms.items():
            term = Fraction(c)
            for v, p in zip(vals, e):
                if p:
                    term *= v ** p
            total += term
        return total

    def truncate_x(self, max_x_degree: int) -> "LaurentPoly":
        """Drop terms whose total x-degree exceeds the bound."""
        if max_x_degree < 0:
            raise ValueError("degree bound must be nonnegative")
        nx = self.vars.nx
        kept = {e: c for e, c in self.terms.items() if sum(e[:nx]) <= max_x_degree}
        return LaurentPoly(self.vars, kept)

    def truncate_y(self, max_y_degree: int) -> "LaurentPoly":
        nx, ny = self.vars.nx, self.vars.ny
        kept = {e: c for e, c in self.terms.items() if sum(e[nx:nx + ny]) <= max_y_degree}
        return LaurentPoly(self.vars, kept)

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "vars": {"nx": self.vars.nx, "ny": self.vars.ny, "t": self.vars.has_t},
            "terms": [{"c": str(c), "e": list(e)} for e, c in self.sorted_terms()],
        }

    def serialize(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"))

    @classmethod
    def from_json_dict(cls, data: dict) -> "LaurentPoly":
        v = data["vars"]
        vars = VarSet(nx=int(v["nx"]), ny=int(v.get("ny", 0)), has_t=bool(v.get("t", True)))
        terms = {tuple(item["e"]): int(item["c"]) for item in data["terms"]}
        return cls(vars, terms)

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        return cls.from_json_dict(json.loads(text))

    def to_text(self) -> str:
        """Human-readable form, terms in canonical order."""
        if not self.terms:
            return "0"
        names = self.vars.names()
        parts = []
        for e, c in self.sorted_terms():
            factors = []
            for name, p in zip(names, e):
                if p == 1:
                    factors.append(name)
                elif p:
                    factors.append(f"{name}^{p}")
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            elif c == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out


def poly_sum(vars: VarSet, polys: Iterable[LaurentPoly]) -> LaurentPoly:
    """Exact sum of many polynomials (associative, order-independent)."""
    acc: dict = {}
    for p in polys:
        for e, c in p.terms.items():
            v = acc.get(e, 0) + c
            if v:
                acc[e] = v
            elif e in acc:
                del acc[e]
    return LaurentPoly(vars, acc)
