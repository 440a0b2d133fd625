"""Exact arithmetic for homogeneous multivariate forms over a prime field.

A form is a sparse map from exponent vectors to nonzero coefficients in F_p,
together with a declared degree. All monomials in the map have exactly that
degree; the zero form is the empty map with an arbitrary declared degree.
The ring context (modulus, number of variables) also caches monomial bases
per degree, which the Macaulay-matrix machinery leans on heavily.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

DEFAULT_PRIME = 32003

Monomial = tuple  # exponent vector, one non-negative entry per variable

# exponents are packed into a single int for fast vectorized index lookups
_CODE_RADIX = 1 << 15


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond the 2**31 modulus cap."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A prime field F_p with an odd modulus below 2**31."""

    p: int = DEFAULT_PRIME

    def __post_init__(self):
        if not (2 < self.p < 2**31):
            raise ValueError(f"modulus must satisfy 2 < p < 2**31, got {self.p}")
        if not is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")


def monomial_degree(m: Monomial) -> int:
    return sum(m)


def _gen_monomials(degree: int, nvars: int) -> Iterator[Monomial]:
    if nvars == 1:
        yield (degree,)
        return
    for e in range(degree, -1, -1):
        for rest in _gen_monomials(degree - e, nvars - 1):
            yield (e,) + rest


class PolyRing:
    """Context for F_p[x_0, ..., x_{nvars-1}] restricted to homogeneous pieces.

    Instances cache, per degree: the monomial basis (in a fixed generation
    order), its exponent matrix as a numpy array, and a sorted code table used
    to map exponent vectors back to basis positions.
    """

    def __init__(self, p: int = DEFAULT_PRIME, nvars: int = 4):
        self.field = FieldSpec(p)
        self.p = p
        if nvars < 1:
            raise ValueError("need at least one variable")
        self.nvars = nvars
        self._monomials: dict[int, tuple[Monomial, ...]] = {}
        self._exps: dict[int, np.ndarray] = {}
        self._codes: dict[int, tuple[np.ndarray, np.ndarray]] = {}
        self._shift: dict[tuple[int, int], np.ndarray] = {}

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyRing) and (self.p, self.nvars) == (other.p, other.nvars)

    def __hash__(self) -> int:
        return hash((self.p, self.nvars))

    def __repr__(self) -> str:
        return f"PolyRing(p={self.p}, nvars={self.nvars})"

    def dim(self, degree: int) -> int:
        """Dimension of the degree-d piece of the polynomial ring."""
        if degree < 0:
            return 0
        return math.comb(degree + self.nvars - 1, self.nvars - 1)

    def monomials(self, degree: int) -> tuple[Monomial, ...]:
        if degree < 0:
            return ()
        got = self._monomials.get(degree)
        if got is None:
            got = tuple(_gen_monomials(degree, self.nvars))
            self._monomials[degree] = got
        return got

    def exps(self, degree: int) -> np.ndarray:
        """Exponent matrix of the degree-d basis, shape (dim(d), nvars)."""
        got = self._exps.get(degree)
        if got is None:
            got = np.array(self.monomials(degree), dtype=np.int64).reshape(-1, self.nvars)
            self._exps[degree] = got
        return got

    def _code_table(self, degree: int) -> tuple[np.ndarray, np.ndarray]:
        got = self._codes.get(degree)
        if got is None:
            codes = self._encode(self.exps(degree))
            order = np.argsort(codes)
            self._codes[degree] = got = (codes[order], order)
        return got

    def _encode(self, exps: np.ndarray) -> np.ndarray:
        if np.any(exps >= _CODE_RADIX):
            raise ValueError("exponent too large for code table")
        code = np.zeros(exps.shape[:-1], dtype=np.int64)
        for v in range(self.nvars):
            code = code * _CODE_RADIX + exps[..., v]
        return code

    def index_of_exps(self, degree: int, exps: np.ndarray) -> np.ndarray:
        """Positions of the given exponent rows in the degree-d basis."""
        sorted_codes, order = self._code_table(degree)
        pos = np.searchsorted(sorted_codes, self._encode(exps))
        return order[pos]

    def shift_index(self, degree: int, var: int) -> np.ndarray:
        """Index map for multiplication by x_var: degree-d basis into degree-(d+1)."""
        key = (degree, var)
        got = self._shift.get(key)
        if got is None:
            shifted = self.exps(degree).copy()
            shifted[:, var] += 1
            got = self.index_of_exps(degree + 1, shifted)
            self._shift[key] = got
        return got

    # ---- form constructors ----

    def form(self, degree: int, terms: dict | Iterable = ()) -> Form:
        """Build a form, normalizing coefficients mod p and dropping zeros."""
        items = terms.items() if isinstance(terms, dict) else terms
        clean: dict[Monomial, int] = {}
        for mono, coef in items:
            mono = tuple(int(e) for e in mono)
            if len(mono) != self.nvars or any(e < 0 for e in mono):
                raise ValueError(f"bad exponent vector {mono}")
            if monomial_degree(mono) != degree:
                raise ValueError(f"monomial {mono} has degree {monomial_degree(mono)}, expected {degree}")
            c = (clean.get(mono, 0) + int(coef)) % self.p
            if c:
                clean[mono] = c
            elif mono in clean:
                del clean[mono]
        return Form(self, degree, clean)

    def zero(self, degree: int = 0) -> Form:
        return Form(self, degree, {})

    def one(self) -> Form:
        return Form(self, 0, {(0,) * self.nvars: 1})

    def constant(self, c: int) -> Form:
        c %= self.p
        return Form(self, 0, {(0,) * self.nvars: c} if c else {})

    def variable(self, i: int) -> Form:
        if not 0 <= i < self.nvars:
            raise ValueError(f"variable index {i} out of range")
        e = [0] * self.nvars
        e[i] = 1
        return Form(self, 1, {tuple(e): 1})

    def monomial(self, exps: Sequence[int], coef: int = 1) -> Form:
        return self.form(sum(exps), [(tuple(exps), coef)])


class Form:
    """Homogeneous polynomial over F_p, immutable once built.

    Use PolyRing.form / .variable / .monomial to construct; the raw
    constructor assumes already-normalized terms.
    """

    __slots__ = ("ring", "degree", "terms")

    def __init__(self, ring: PolyRing, degree: int, terms: dict):
        if degree < 0:
            raise ValueError("degree must be non-negative")
        self.ring = ring
        self.degree = degree
        self.terms = terms

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, Form):
            return NotImplemented
        if self.ring != other.ring:
            return False
        if not self.terms and not other.terms:
            return True  # zero forms compare equal whatever their declared degree
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        if self.is_zero:
            return "0"
        bits = []
        for mono in sorted(self.terms, reverse=True):
            c = self.terms[mono]
            pos = "*".join(f"x{i}^{e}" if e > 1 else f"x{i}" for i, e in enumerate(mono) if e)
            bits.append(f"{c}*{pos}" if pos else str(c))
        return " + ".join(bits)

    def __add__(self, other: Form) -> Form:
        if self.ring != other.ring:
            raise ValueError("forms live in different rings")
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        p = self.ring.p
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = (out.get(mono, 0) + c) % p
            if s:
                out[mono] = s
            elif mono in out:
                del out[mono]
        return Form(self.ring, self.degree, out)

    def __neg__(self) -> Form:
        p = self.ring.p
        return Form(self.ring, self.degree, {m: p - c for m, c in self.terms.items()})

    def __sub__(self, other: Form) -> Form:
        return self + (-other)

    def __mul__(self, other) -> Form:
        if isinstance(other, int):
            return self.scale(other)
        if self.ring != other.ring:
            raise ValueError("forms live in different rings")
        deg = self.degree + other.degree
        if self.is_zero or other.is_zero:
            return Form(self.ring, deg, {})
        p = self.ring.p
        out: dict[Monomial, int] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                mono = tuple(a + b for a, b in zip(ma, mb))
                s = (out.get(mono, 0) + ca * cb) % p
                if s:
                    out[mono] = s
                elif mono in out:
                    del out[mono]
        return Form(self.ring, deg, out)

    __rmul__ = __mul__

    def scale(self, c: int) -> Form:
        c %= self.ring.p
        if c == 0:
            return Form(self.ring, self.degree, {})
        if c == 1:
            return self
        p = self.ring.p
        return Form(self.ring, self.degree, {m: co * c % p for m, co in self.terms.items()})

    def evaluate(self, point: Sequence[int]) -> int:
        if len(point) != self.ring.nvars:
            raise ValueError(f"point has {len(point)} coordinates, ring has {self.ring.nvars}")
        p = self.ring.p
        total = 0
        for mono, c in self.terms.items():
            v = c
            for x, e in zip(point, mono):
                if e:
                    v = v * pow(int(x), e, p) % p
            total = (total + v) % p
        return total

    def coefficient_vector(self) -> np.ndarray:
        """Dense coefficients against the ring's degree-d monomial basis."""
        vec = np.zeros(self.ring.dim(self.degree), dtype=np.int64)
        if self.terms:
            exps = np.array(list(self.terms.keys()), dtype=np.int64)
            idx = self.ring.index_of_exps(self.degree, exps)
            vec[idx] = list(self.terms.values())
        return vec


# ---- operation-style entry points ----

def form_add(a: Form, b: Form) -> Form:
    """Sum of two forms; degrees must agree unless one operand is zero."""
    return a + b


def form_mul(a: Form, b: Form) -> Form:
    """Product form, of degree a.degree + b.degree."""
    return a * b


def form_eval(f: Form, point: Sequence[int]) -> int:
    """Value of f at a point with coordinates in F_p."""
    return f.evaluate(point)


def random_form(degree: int, ring: PolyRing, rng: random.Random) -> Form:
    """Form with an independent uniform F_p coefficient on every degree-d monomial.

    Deterministic for a fixed seed: coefficients are drawn in the canonical
    monomial order of the ring.
    """
    if degree < 1:
        raise ValueError("random forms must have degree >= 1")
    terms = {}
    for mono in ring.monomials(degree):
        c = rng.randrange(ring.p)
        if c:
            terms[mono] = c
    return Form(ring, degree, terms)
