"""Exact sparse commutative polynomials over orderable variable keys.

Variables are arbitrary hashable, mutually orderable objects: matrix-entry
symbols on coordinate rings of representation spaces, or cyclic words when
working in the symmetric algebra over them.  Monomials are stored as sorted
tuples of (variable, exponent) pairs; coefficients are rationals and zero
terms are never stored, so structural equality is mathematical equality.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Optional


def _mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    out = dict(m1)
    for v, e in m2:
        out[v] = out.get(v, 0) + e
    return tuple(sorted(out.items(), key=lambda it: it[0]))


class CPoly:
    """A finite rational linear combination of commutative monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[dict] = None):
        self.terms = terms if terms is not None else {}

    @staticmethod
    def zero() -> "CPoly":
        return CPoly({})

    @staticmethod
    def const(c) -> "CPoly":
        c = Fraction(c)
        return CPoly({(): c} if c else {})

    @staticmethod
    def one() -> "CPoly":
        return CPoly.const(1)

    @staticmethod
    def var(v, exp: int = 1) -> "CPoly":
        return CPoly({((v, exp),): Fraction(1)}) if exp else CPoly.one()

    def __add__(self, other):
        data = dict(self.terms)
        for m, c in other.terms.items():
            s = data.get(m, Fraction(0)) + c
            if s:
                data[m] = s
            elif m in data:
                del data[m]
        return CPoly(data)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return CPoly({m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, CPoly):
            return self.scale(other)
        data = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                s = data.get(m, Fraction(0)) + c1 * c2
                if s:
                    data[m] = s
                elif m in data:
                    del data[m]
        return CPoly(data)

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def scale(self, scalar) -> "CPoly":
        s = Fraction(scalar)
        if not s:
            return CPoly.zero()
        return CPoly({m: c * s for m, c in self.terms.items()})

    def __pow__(self, n: int):
        out = CPoly.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, CPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e for _, e in m) for m in self.terms), default=-1)

    def variables(self) -> set:
        out = set()
        for m in self.terms:
            out.update(v for v, _ in m)
        return out

    def partial(self, v) -> "CPoly":
        """Formal partial derivative with respect to the variable v."""
        data = {}
        for m, c in self.terms.items():
            for idx, (w, e) in enumerate(m):
                if w == v:
                    rest = m[:idx] + ((w, e - 1),) + m[idx + 1:] if e > 1 \
                        else m[:idx] + m[idx + 1:]
                    s = data.get(rest, Fraction(0)) + c * e
                    if s:
                        data[rest] = s
                    elif rest in data:
                        del data[rest]
                    break
        return CPoly(data)

    def substitute(self, mapping: Callable) -> "CPoly":
        """Ring homomorphism determined by variable images mapping(v) -> CPoly."""
        out = CPoly.zero()
        for m, c in self.terms.items():
            term = CPoly.const(c)
            for v, e in m:
                img = mapping(v)
                for _ in range(e):
                    term = term * img
            out = out + term
        return out

    def sorted_terms(self):
        def key(item):
            m, _ = item
            return (sum(e for _, e in m), m)
        return sorted(self.terms.items(), key=key)

    def to_str(self, var_repr: Callable = str) -> str:
        parts = []
        for m, c in self.sorted_terms():
            body = "*".join(
                f"{var_repr(v)}^{e}" if e > 1 else var_repr(v) for v, e in m)
            mag = -c if c < 0 else c
            if not body:
                txt = str(mag)
            elif mag == 1:
                txt = body
            else:
                txt = f"{mag}*{body}"
            if not parts:
                parts.append(f"-{txt}" if c < 0 else txt)
            else:
                parts.append(("- " if c < 0 else "+ ") + txt)
        return " ".join(parts) if parts else "0"

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"<CPoly {self}>"


def poisson_biderivation(table: Callable, f: CPoly, g: CPoly,
                         twist: Optional[Callable] = None) -> CPoly:
    """Extend a bracket on variables to polynomials by the biderivation rules.

    ``table(v, w)`` gives the bracket of two variables.  The untwisted
    extension is sum over variable pairs of df/dv dg/dw {v, w}; when
    ``twist`` is provided it is applied to both partial derivatives, which
    realises the twisted Leibniz rules {f, gh} = t(g){f,h} + {f,g}t(h).
    """
    out = CPoly.zero()
    for v in sorted(f.variables()):
        fv = f.partial(v)
        if fv.is_zero():
            continue
        if twist is not None:
            fv = twist(fv)
        for w in sorted(g.variables()):
            gw = g.partial(w)
            if gw.is_zero():
                continue
            if twist is not None:
                gw = twist(gw)
            br = table(v, w)
            if br.is_zero():
                continue
            out = out + fv * gw * br
    return out
