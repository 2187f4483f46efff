"""Exact sparse arithmetic for free associative algebras over the rationals.

A ``FreeAlgebra`` fixes a finite list of named generators.  Elements are
``NCPoly`` values: finite maps from words (tuples of generator indices) to
``Fraction`` coefficients.  The module also provides the tensor square and
cube of the algebra (``Tensor2``, ``Tensor3``), the symmetric-group actions
on tensor factors, algebra endomorphisms given on generators, and the
projection onto cyclic words (necklaces), which is the quotient of the
algebra by the span of commutators.

No floating point is used anywhere: all arithmetic is exact.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

Word = tuple  # tuple of generator indices; () is the unit monomial

# ---------------------------------------------------------------------------
# permutations of {1,2,3}, stored as tuples of 1-based images
# ---------------------------------------------------------------------------

P_ID = (1, 2, 3)
P12 = (2, 1, 3)
P13 = (3, 2, 1)
P23 = (1, 3, 2)
P123 = (2, 3, 1)  # 1->2->3->1
P132 = (3, 1, 2)  # 1->3->2->1

TRANSPOSITIONS = {"12": P12, "13": P13, "23": P23}

_PERM_NAMES = {
    P_ID: "id", P12: "(12)", P13: "(13)", P23: "(23)",
    P123: "(123)", P132: "(132)",
}


def perm_compose(s, r):
    """Composition s*r acting as (s*r)(i) = s(r(i))."""
    return (s[r[0] - 1], s[r[1] - 1], s[r[2] - 1])


def perm_invert(s):
    inv = [0, 0, 0]
    for i, si in enumerate(s):
        inv[si - 1] = i + 1
    return tuple(inv)


def perm_name(s):
    return _PERM_NAMES[tuple(s)]


def transposition(name) -> tuple:
    """Resolve ``"12" | "(12)" | (2,1,3)`` to a transposition of {1,2,3}."""
    if isinstance(name, tuple):
        if name in (P12, P13, P23):
            return name
        raise ValueError(f"not a transposition of {{1,2,3}}: {name}")
    key = str(name).strip("()")
    if key not in TRANSPOSITIONS:
        raise ValueError(f"not a transposition of {{1,2,3}}: {name!r}")
    return TRANSPOSITIONS[key]


# ---------------------------------------------------------------------------
# the ambient algebra
# ---------------------------------------------------------------------------

class FreeAlgebra:
    """The free associative algebra Q<g_1, ..., g_r> on named generators."""

    def __init__(self, names: Sequence[str]):
        names = tuple(str(n) for n in names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names: {names}")
        if not names:
            raise ValueError("at least one generator is required")
        self.names = names
        self.ngens = len(names)

    def __repr__(self):
        return f"FreeAlgebra({', '.join(self.names)})"

    def __eq__(self, other):
        return isinstance(other, FreeAlgebra) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    # -- element constructors ------------------------------------------------

    def zero(self) -> "NCPoly":
        return NCPoly(self, {})

    def one(self) -> "NCPoly":
        return NCPoly(self, {(): Fraction(1)})

    def gen(self, which) -> "NCPoly":
        return NCPoly(self, {(self.gen_index(which),): Fraction(1)})

    def gens(self) -> list:
        return [self.gen(i) for i in range(self.ngens)]

    def gen_index(self, which) -> int:
        if isinstance(which, str):
            try:
                return self.names.index(which)
            except ValueError:
                raise ValueError(f"unknown generator {which!r} in {self!r}") from None
        i = int(which)
        if not 0 <= i < self.ngens:
            raise ValueError(f"generator index {i} out of range for {self!r}")
        return i

    def monomial(self, word: Iterable, coeff=1) -> "NCPoly":
        w = tuple(self.gen_index(g) for g in word)
        return NCPoly(self, {w: Fraction(coeff)}) if coeff else self.zero()

    def poly(self, terms: Mapping) -> "NCPoly":
        data = {}
        for word, coeff in terms.items():
            w = tuple(self.gen_index(g) for g in word)
            c = data.get(w, Fraction(0)) + Fraction(coeff)
            data[w] = c
        return NCPoly(self, {w: c for w, c in data.items() if c})

    def t2(self, left: "NCPoly", right: "NCPoly") -> "Tensor2":
        """Elementary tensor left (x) right, expanded bilinearly."""
        self._check(left), self._check(right)
        data = {}
        for u, cu in left.terms.items():
            for v, cv in right.terms.items():
                _tadd(data, (u, v), cu * cv)
        return Tensor2(self, data)

    def t3(self, a: "NCPoly", b: "NCPoly", c: "NCPoly") -> "Tensor3":
        data = {}
        for u, cu in a.terms.items():
            for v, cv in b.terms.items():
                for w, cw in c.terms.items():
                    _tadd(data, (u, v, w), cu * cv * cw)
        return Tensor3(self, data)

    def zero2(self) -> "Tensor2":
        return Tensor2(self, {})

    def zero3(self) -> "Tensor3":
        return Tensor3(self, {})

    def unit2(self) -> "Tensor2":
        return Tensor2(self, {((), ()): Fraction(1)})

    def necklace(self, word: Iterable) -> "Necklace":
        return Necklace(self, tuple(self.gen_index(g) for g in word))

    # -- word utilities --------------------------------------------------------

    def words(self, degree: int) -> Iterator[Word]:
        """All words of the exact given degree, in lexicographic order."""
        return itertools.product(range(self.ngens), repeat=degree)

    def words_up_to(self, degree: int, min_degree: int = 0) -> Iterator[Word]:
        """All words with min_degree <= length <= degree, in deg-lex order."""
        for d in range(min_degree, degree + 1):
            yield from self.words(d)

    def format_word(self, w: Word) -> str:
        if not w:
            return "1"
        return "*".join(self.names[i] for i in w)

    def _check(self, elem):
        if elem.alg.names != self.names:
            raise ValueError(
                f"mismatched generator tables: {self!r} vs {elem.alg!r}")


def _tadd(data: dict, key, coeff) -> None:
    c = data.get(key)
    c = coeff if c is None else c + coeff
    if c:
        data[key] = c
    elif key in data:
        del data[key]


def _deglex(w: Word):
    return (len(w), w)


def _format_terms(alg, items, render_key) -> str:
    """Shared +/- pretty printer; items are (key, coeff) in canonical order."""
    parts = []
    for key, coeff in items:
        body = render_key(key)
        mag = -coeff if coeff < 0 else coeff
        if body == "1":
            txt = str(mag)
        elif mag == 1:
            txt = body
        else:
            txt = f"{mag}*{body}"
        if not parts:
            parts.append(f"-{txt}" if coeff < 0 else txt)
        else:
            parts.append(("- " if coeff < 0 else "+ ") + txt)
    return " ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# elements of the algebra
# ---------------------------------------------------------------------------

class NCPoly:
    """A finite Q-linear combination of words in the generators."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: FreeAlgebra, terms: dict):
        self.alg = alg
        self.terms = terms  # Word -> Fraction, no zero values

    # construction helpers take care of normalisation; arithmetic assumes it
    def __add__(self, other):
        self.alg._check(other)
        data = dict(self.terms)
        for w, c in other.terms.items():
            _tadd(data, w, c)
        return NCPoly(self.alg, data)

    def __sub__(self, other):
        self.alg._check(other)
        data = dict(self.terms)
        for w, c in other.terms.items():
            _tadd(data, w, -c)
        return NCPoly(self.alg, data)

    def __neg__(self):
        return NCPoly(self.alg, {w: -c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, NCPoly):
            return poly_mul(self, other)
        return self.scale(other)

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def scale(self, scalar) -> "NCPoly":
        s = Fraction(scalar)
        if not s:
            return self.alg.zero()
        return NCPoly(self.alg, {w: c * s for w, c in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined in a free algebra")
        out = self.alg.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        return (isinstance(other, NCPoly) and self.alg.names == other.alg.names
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.alg.names, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Maximal word length; -1 for the zero element."""
        return max((len(w) for w in self.terms), default=-1)

    def homogeneous_part(self, d: int) -> "NCPoly":
        return NCPoly(self.alg, {w: c for w, c in self.terms.items() if len(w) == d})

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda it: _deglex(it[0]))

    def coeff(self, word: Iterable) -> Fraction:
        w = tuple(self.alg.gen_index(g) for g in word)
        return self.terms.get(w, Fraction(0))

    def __str__(self):
        return _format_terms(self.alg, self.sorted_terms(), self.alg.format_word)

    def __repr__(self):
        return f"<NCPoly {self}>"


def poly_mul(p: NCPoly, q: NCPoly) -> NCPoly:
    """Exact product in the free algebra (concatenation of words)."""
    p.alg._check(q)
    data = {}
    for u, cu in p.terms.items():
        for v, cv in q.terms.items():
            _tadd(data, u + v, cu * cv)
    return NCPoly(p.alg, data)


# ---------------------------------------------------------------------------
# tensor square and cube
# ---------------------------------------------------------------------------

class Tensor2:
    """Sparse element of A (x) A: finite map (Word, Word) -> Fraction."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: FreeAlgebra, terms: dict):
        self.alg = alg
        self.terms = terms

    def __add__(self, other):
        self.alg._check(other)
        data = dict(self.terms)
        for k, c in other.terms.items():
            _tadd(data, k, c)
        return Tensor2(self.alg, data)

    def __sub__(self, other):
        self.alg._check(other)
        data = dict(self.terms)
        for k, c in other.terms.items():
            _tadd(data, k, -c)
        return Tensor2(self.alg, data)

    def __neg__(self):
        return Tensor2(self.alg, {k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Tensor2):
            return tensor2_alg_mul(self, other)
        return self.scale(other)

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def scale(self, scalar) -> "Tensor2":
        s = Fraction(scalar)
        if not s:
            return Tensor2(self.alg, {})
        return Tensor2(self.alg, {k: c * s for k, c in self.terms.items()})

    def swap(self) -> "Tensor2":
        return Tensor2(self.alg, {(v, u): c for (u, v), c in self.terms.items()})

    def __eq__(self, other):
        return (isinstance(other, Tensor2) and self.alg.names == other.alg.names
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.alg.names, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self):
        return sorted(self.terms.items(),
                      key=lambda it: tuple(_deglex(w) for w in it[0]))

    def __str__(self):
        fmt = self.alg.format_word
        return _format_terms(
            self.alg, self.sorted_terms(),
            lambda key: f"{fmt(key[0])} (x) {fmt(key[1])}")

    def __repr__(self):
        return f"<Tensor2 {self}>"


class Tensor3:
    """Sparse element of A (x) A (x) A."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: FreeAlgebra, terms: dict):
        self.alg = alg
        self.terms = terms

    def __add__(self, other):
        self.alg._check(other)
        data = dict(self.terms)
        for k, c in other.terms.items():
            _tadd(data, k, c)
        return Tensor3(self.alg, data)

    def __sub__(self, other):
        self.alg._check(other)
        data = dict(self.terms)
        for k, c in other.terms.items():
            _tadd(data, k, -c)
        return Tensor3(self.alg, data)

    def __neg__(self):
        return Tensor3(self.alg, {k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Tensor3):
            data = {}
            for (u1, u2, u3), cu in self.terms.items():
                for (v1, v2, v3), cv in other.terms.items():
                    _tadd(data, (u1 + v1, u2 + v2, u3 + v3), cu * cv)
            return Tensor3(self.alg, data)
        return self.scale(other)

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def scale(self, scalar) -> "Tensor3":
        s = Fraction(scalar)
        if not s:
            return Tensor3(self.alg, {})
        return Tensor3(self.alg, {k: c * s for k, c in self.terms.items()})

    def permute(self, sigma) -> "Tensor3":
        return tensor3_perm(sigma, self)

    def __eq__(self, other):
        return (isinstance(other, Tensor3) and self.alg.names == other.alg.names
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.alg.names, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self):
        return sorted(self.terms.items(),
                      key=lambda it: tuple(_deglex(w) for w in it[0]))

    def __str__(self):
        fmt = self.alg.format_word
        return _format_terms(
            self.alg, self.sorted_terms(),
            lambda key: f"{fmt(key[0])} (x) {fmt(key[1])} (x) {fmt(key[2])}")

    def __repr__(self):
        return f"<Tensor3 {self}>"


def tensor_swap(d: Tensor2) -> Tensor2:
    """The swap automorphism of A (x) A, sending u (x) v to v (x) u."""
    return d.swap()


def tensor2_alg_mul(d: Tensor2, e: Tensor2) -> Tensor2:
    """Componentwise multiplication (a1 (x) b1)(a2 (x) b2) = a1*a2 (x) b1*b2."""
    d.alg._check(e)
    data = {}
    for (u1, u2), cu in d.terms.items():
        for (v1, v2), cv in e.terms.items():
            _tadd(data, (u1 + v1, u2 + v2), cu * cv)
    return Tensor2(d.alg, data)


def tensor3_perm(sigma, t: Tensor3) -> Tensor3:
    """Left S_3-action: factor i of the result is factor sigma^{-1}(i) of t."""
    sigma = tuple(sigma)
    if sorted(sigma) != [1, 2, 3]:
        raise ValueError(f"not a permutation of {{1,2,3}}: {sigma}")
    inv = perm_invert(sigma)
    i0, i1, i2 = inv[0] - 1, inv[1] - 1, inv[2] - 1
    return Tensor3(t.alg, {(k[i0], k[i1], k[i2]): c for k, c in t.terms.items()})


# ---------------------------------------------------------------------------
# algebra endomorphisms
# ---------------------------------------------------------------------------

class AlgEndo:
    """Algebra homomorphism between free algebras, given on generators.

    The map extends multiplicatively and sends 1 to 1.  ``domain`` and
    ``codomain`` coincide for the twists of bimodule structures; morphisms
    of double brackets may connect two different algebras.
    """

    __slots__ = ("domain", "codomain", "images", "_word_cache")

    def __init__(self, domain: FreeAlgebra, images: Mapping,
                 codomain: FreeAlgebra | None = None):
        self.domain = domain
        self.codomain = codomain if codomain is not None else domain
        imgs = {}
        for g, p in images.items():
            i = domain.gen_index(g)
            self.codomain._check(p)
            imgs[i] = p
        for i in range(domain.ngens):
            if i not in imgs:
                raise ValueError(
                    f"no image given for generator {domain.names[i]!r}")
        self.images = imgs
        self._word_cache = {(): self.codomain.one()}

    @classmethod
    def identity(cls, alg: FreeAlgebra) -> "AlgEndo":
        return cls(alg, {i: alg.gen(i) for i in range(alg.ngens)})

    def is_identity(self) -> bool:
        if self.domain.names != self.codomain.names:
            return False
        return all(self.images[i] == self.domain.gen(i)
                   for i in range(self.domain.ngens))

    def apply_word(self, w: Word) -> NCPoly:
        out = self._word_cache.get(w)
        if out is None:
            out = poly_mul(self.apply_word(w[:-1]), self.images[w[-1]])
            self._word_cache[w] = out
        return out

    def __call__(self, p: NCPoly) -> NCPoly:
        return apply_endo(self, p)

    def after(self, other: "AlgEndo") -> "AlgEndo":
        """Composite self o other."""
        if other.codomain.names != self.domain.names:
            raise ValueError("endomorphisms do not compose: codomain/domain mismatch")
        return AlgEndo(other.domain,
                       {i: self(other.images[i]) for i in range(other.domain.ngens)},
                       codomain=self.codomain)

    def __eq__(self, other):
        return (isinstance(other, AlgEndo)
                and self.domain.names == other.domain.names
                and self.codomain.names == other.codomain.names
                and self.images == other.images)

    def __repr__(self):
        body = ", ".join(f"{self.domain.names[i]} -> {p}"
                         for i, p in sorted(self.images.items()))
        return f"<AlgEndo {body}>"


def apply_endo(e: AlgEndo, p: NCPoly) -> NCPoly:
    """Apply the multiplicative, unital extension of the generator images."""
    e.domain._check(p)
    out = e.codomain.zero()
    for w, c in p.terms.items():
        out = out + e.apply_word(w).scale(c)
    return out


def apply_endo_tensor2(e: AlgEndo, d: "Tensor2") -> "Tensor2":
    """Apply e (x) e to an element of the tensor square."""
    data = {}
    for (w1, w2), c in d.terms.items():
        p1, p2 = e.apply_word(w1), e.apply_word(w2)
        for u1, c1 in p1.terms.items():
            for u2, c2 in p2.terms.items():
                _tadd(data, (u1, u2), c * c1 * c2)
    return Tensor2(e.codomain, data)


def apply_endo_tensor3(e: AlgEndo, t: "Tensor3") -> "Tensor3":
    """Apply e (x) e (x) e to an element of the tensor cube."""
    data = {}
    for (w1, w2, w3), c in t.terms.items():
        p1, p2, p3 = e.apply_word(w1), e.apply_word(w2), e.apply_word(w3)
        for u1, c1 in p1.terms.items():
            for u2, c2 in p2.terms.items():
                for u3, c3 in p3.terms.items():
                    _tadd(data, (u1, u2, u3), c * c1 * c2 * c3)
    return Tensor3(e.codomain, data)


def word_reversal(p: NCPoly) -> NCPoly:
    """The anti-automorphism reversing every word."""
    return NCPoly(p.alg, {w[::-1]: c for w, c in p.terms.items()})


# ---------------------------------------------------------------------------
# necklaces: cyclic words, a basis of A/[A,A]
# ---------------------------------------------------------------------------

class Necklace:
    """A word up to cyclic rotation, stored as its minimal rotation.

    Minimality is lexicographic in the declared generator order; the unit
    class is the empty necklace.
    """

    __slots__ = ("alg", "word")

    def __init__(self, alg: FreeAlgebra, word: Word):
        self.alg = alg
        self.word = min(word[i:] + word[:i] for i in range(len(word))) if word else ()

    def __eq__(self, other):
        return (isinstance(other, Necklace) and self.alg.names == other.alg.names
                and self.word == other.word)

    def __hash__(self):
        return hash((self.alg.names, self.word))

    def __lt__(self, other):
        return _deglex(self.word) < _deglex(other.word)

    def lift(self) -> NCPoly:
        """The canonical representative word as an algebra element."""
        return NCPoly(self.alg, {self.word: Fraction(1)})

    def __str__(self):
        return f"[{self.alg.format_word(self.word)}]"

    def __repr__(self):
        return f"<Necklace {self}>"


def necklace_project(p: NCPoly) -> dict:
    """Project onto A/[A,A]: map each word to its necklace class.

    Returns a map Necklace -> Fraction with zero classes removed; the
    difference of a product taken in either order projects to zero.
    """
    out = {}
    for w, c in p.terms.items():
        n = Necklace(p.alg, w)
        _tadd(out, n, c)
    return out
