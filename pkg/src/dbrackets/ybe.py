"""Classical Yang-Baxter equation over matrix algebras.

Tensors r in Mat_N (x) Mat_N are sparse maps from elementary-matrix index
quadruples to rationals.  The CYBE defect is evaluated exactly in the
triple tensor algebra using the three standard embeddings plus the swapped
placement for the reversed index pair; a solution produces the zero
defect.  Any such r also determines a linear bracket on the entries of a
single generic matrix, whose Jacobi identity is implied by the CYBE.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bimodule import BimodKind
from .commpoly import CPoly
from .freealg import FreeAlgebra, _tadd
from .repspace import PoissonStructure, RepJacobiReport, jacobi_sweep


class MatTensor2:
    """Sum of r_{ij,kl} e_ij (x) e_kl over 1-based indices up to N."""

    __slots__ = ("N", "terms")

    def __init__(self, N: int, terms: dict | None = None):
        self.N = N
        data = {}
        for key, c in (terms or {}).items():
            if not all(1 <= x <= N for x in key):
                raise ValueError(f"index {key} out of range for N={N}")
            c = Fraction(c)
            if c:
                data[key] = c
        self.terms = data

    def __add__(self, other):
        data = dict(self.terms)
        for k, c in other.terms.items():
            _tadd(data, k, c)
        return MatTensor2(self.N, data)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return MatTensor2(self.N, {k: -c for k, c in self.terms.items()})

    def scale(self, s) -> "MatTensor2":
        return MatTensor2(self.N, {k: c * Fraction(s) for k, c in self.terms.items()})

    def swap(self) -> "MatTensor2":
        return MatTensor2(self.N, {(k, l, i, j): c
                                   for (i, j, k, l), c in self.terms.items()})

    def __eq__(self, other):
        return (isinstance(other, MatTensor2) and self.N == other.N
                and self.terms == other.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def embed(self, slots: tuple) -> "MatTensor3":
        """Place the two factors into the given slots of the triple algebra."""
        a, b = slots
        data = {}
        for (i, j, k, l), c in self.terms.items():
            for m in range(1, self.N + 1):
                key = [(m, m)] * 3
                key[a - 1] = (i, j)
                key[b - 1] = (k, l)
                _tadd(data, tuple(key[0] + key[1] + key[2]), c)
        return MatTensor3(self.N, data)

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __str__(self):
        parts = [f"{c}*e[{i},{j}](x)e[{k},{l}]"
                 for (i, j, k, l), c in self.sorted_terms()]
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"<MatTensor2 N={self.N} {self}>"


class MatTensor3:
    """Sparse element of Mat_N (x) Mat_N (x) Mat_N."""

    __slots__ = ("N", "terms")

    def __init__(self, N: int, terms: dict | None = None):
        self.N = N
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    def __add__(self, other):
        data = dict(self.terms)
        for k, c in other.terms.items():
            _tadd(data, k, c)
        return MatTensor3(self.N, data)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return MatTensor3(self.N, {k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        """Componentwise product; e_ij e_kl = delta_jk e_il in each slot."""
        data = {}
        for k1, c1 in self.terms.items():
            i1, j1, k1b, l1, u1, v1 = k1
            for k2, c2 in other.terms.items():
                i2, j2, k2b, l2, u2, v2 = k2
                if j1 == i2 and l1 == k2b and v1 == u2:
                    _tadd(data, (i1, j2, k1b, l2, u1, v2), c1 * c2)
        return MatTensor3(self.N, data)

    def commutator(self, other) -> "MatTensor3":
        return self * other - other * self

    def __eq__(self, other):
        return (isinstance(other, MatTensor3) and self.N == other.N
                and self.terms == other.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self):
        parts = [f"{c}*e[{i},{j}](x)e[{k},{l}](x)e[{u},{v}]"
                 for (i, j, k, l, u, v), c in sorted(self.terms.items())]
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"<MatTensor3 N={self.N} {self}>"


def cybe_defect(r: MatTensor2) -> MatTensor3:
    """[r_12, r_13] + [r_12, r_23] + [r_32, r_13], zero iff r solves the CYBE."""
    r12 = r.embed((1, 2))
    r13 = r.embed((1, 3))
    r23 = r.embed((2, 3))
    r32 = r.swap().embed((2, 3))
    return (r12.commutator(r13) + r12.commutator(r23) + r32.commutator(r13))


def standard_r(N: int) -> MatTensor2:
    """sum_{i<j} e_ij (x) e_ji + 1/2 sum_i e_ii (x) e_ii."""
    if N < 1:
        raise ValueError("N must be >= 1")
    terms = {}
    for i in range(1, N + 1):
        for j in range(i + 1, N + 1):
            terms[(i, j, j, i)] = Fraction(1)
        terms[(i, i, i, i)] = Fraction(1, 2)
    return MatTensor2(N, terms)


def casimir(N: int) -> MatTensor2:
    """sum_{i,j} e_ij (x) e_ji; invariant under the swap."""
    if N < 1:
        raise ValueError("N must be >= 1")
    return MatTensor2(N, {(i, j, j, i): Fraction(1)
                          for i in range(1, N + 1) for j in range(1, N + 1)})


# ---------------------------------------------------------------------------
# the induced bracket on generic-matrix entries
# ---------------------------------------------------------------------------

_ENTRY_ALG = FreeAlgebra(["v"])


def _vvar(i: int, j: int) -> CPoly:
    return CPoly.var((0, i, j))


@dataclass
class EntryBracket:
    """Linear bracket on the entries of one generic N x N matrix.

    The table realises the entries of [r, V (x) 1] - [swap(r), 1 (x) V]
    and is antisymmetric under swapping the two index pairs for any r.
    """

    N: int
    table: dict  # ((i,j),(k,l)) -> CPoly, linear in the entry variables

    def pair(self, ij: tuple, kl: tuple) -> CPoly:
        return self.table.get((ij, kl), CPoly.zero())

    def poisson_structure(self) -> PoissonStructure:
        table = {((0,) + ij, (0,) + kl): p
                 for (ij, kl), p in self.table.items() if not p.is_zero()}
        return PoissonStructure(_ENTRY_ALG, self.N, BimodKind.RIGHT, table)

    def format_value(self, p: CPoly) -> str:
        return p.to_str(lambda v: f"v[{v[1]},{v[2]}]")


def entry_bracket(r: MatTensor2) -> EntryBracket:
    """{v_ij, v_kl} as the ((i,j),(k,l)) coefficient of [r, V1] - [r°, V2]."""
    N = r.N
    rs = r.swap()
    table = {}
    rng = range(1, N + 1)
    for i in rng:
        for j in rng:
            for k in rng:
                for l in rng:
                    acc = CPoly.zero()
                    for a in rng:
                        c = r.terms.get((i, a, k, l))
                        if c:
                            acc = acc + _vvar(a, j).scale(c)
                        c = r.terms.get((a, j, k, l))
                        if c:
                            acc = acc - _vvar(i, a).scale(c)
                        c = rs.terms.get((i, j, k, a))
                        if c:
                            acc = acc - _vvar(a, l).scale(c)
                        c = rs.terms.get((i, j, a, l))
                        if c:
                            acc = acc + _vvar(k, a).scale(c)
                    if not acc.is_zero():
                        table[((i, j), (k, l))] = acc
    return EntryBracket(N, table)


def check_entry_jacobi(eb: EntryBracket) -> RepJacobiReport:
    """Sweep the Jacobi defect over all triples of entry variables."""
    return jacobi_sweep(eb.poisson_structure())


# ---------------------------------------------------------------------------
# sparse text format: one "i j k l coeff" line per term
# ---------------------------------------------------------------------------

def format_mat_tensor2(r: MatTensor2) -> str:
    lines = [f"{i} {j} {k} {l} {c}" for (i, j, k, l), c in r.sorted_terms()]
    return "\n".join(lines) + ("\n" if lines else "")


def parse_mat_tensor2(text: str, N: int | None = None) -> MatTensor2:
    terms = {}
    max_idx = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 5:
            raise ValueError(f"line {lineno}: expected 'i j k l coeff', got {raw!r}")
        try:
            i, j, k, l = (int(p) for p in parts[:4])
            c = Fraction(parts[4])
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
        key = (i, j, k, l)
        terms[key] = terms.get(key, Fraction(0)) + c
        max_idx = max(max_idx, i, j, k, l)
    if N is None:
        N = max(max_idx, 1)
    return MatTensor2(N, terms)
