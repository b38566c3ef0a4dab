"""Partitions, the elementary/power-sum base changes, principal
specialization, and the finite q-identity they specialize to.

Only the slice of symmetric function theory the moduli computations consume
is implemented: e_n <-> p_n base change in closed form, products of e's in
the p basis, and the specialization e_n -> q^(n(n-1)/2) / prod (1-q^i),
p_n -> 1/(1-q^n).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .ratfunc import Poly, RationalFunction


@lru_cache(maxsize=None)
def partitions(n, max_part=None):
    """All partitions of n as weakly decreasing tuples, largest part first."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


class Partition:
    """Weakly decreasing positive parts, with the derived combinatorial data."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise ValueError("parts must be positive")
        if list(parts) != sorted(parts, reverse=True):
            raise ValueError("parts must be weakly decreasing")
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, *a):
        raise AttributeError("Partition is immutable")

    @classmethod
    def from_multiplicities(cls, m):
        """Inverse of :meth:`multiplicities`: m maps part size -> count."""
        parts = []
        for l in sorted(m, reverse=True):
            parts.extend([l] * m[l])
        return cls(parts)

    def size(self):
        return sum(self.parts)

    def length(self):
        return len(self.parts)

    def multiplicities(self):
        out = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    def sign(self):
        """epsilon = (-1)^(size - length)."""
        return -1 if (self.size() - self.length()) % 2 else 1

    def z(self):
        """z = prod_l m_l! l^m_l, the centralizer order of the cycle type."""
        out = 1
        for l, m in self.multiplicities().items():
            out *= factorial(m) * l ** m
        return out

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return "Partition(%r)" % (self.parts,)


def multiplicity_vectors(n):
    """Multiplicity vectors m with sum l*m_l = n, as dicts, by increasing parts."""
    return [
        {l: c for l, c in sorted(Partition(lam).multiplicities().items())}
        for lam in sorted(partitions(n))
    ]


class SymPoly:
    """Linear combination of e_lambda or p_lambda monomials over Q.

    ``basis`` is "e" or "p"; ``coeffs`` maps partition tuples to nonzero
    rationals.  Both bases are multiplicative: the product concatenates
    partitions.
    """

    __slots__ = ("basis", "coeffs")

    def __init__(self, basis, coeffs):
        if basis not in ("e", "p"):
            raise ValueError("basis must be 'e' or 'p'")
        clean = {}
        for lam, c in coeffs.items():
            c = Fraction(c)
            if c:
                clean[tuple(sorted(lam, reverse=True))] = clean.get(
                    tuple(sorted(lam, reverse=True)), 0) + c
        clean = {lam: c for lam, c in clean.items() if c}
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, *a):
        raise AttributeError("SymPoly is immutable")

    @classmethod
    def basis_element(cls, basis, lam, coeff=1):
        return cls(basis, {tuple(lam): Fraction(coeff)})

    def _same_basis(self, other):
        if self.basis != other.basis:
            raise ValueError("mixing e- and p-basis expressions")

    def __add__(self, other):
        self._same_basis(other)
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, 0) + c
        return SymPoly(self.basis, out)

    def __sub__(self, other):
        self._same_basis(other)
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, 0) - c
        return SymPoly(self.basis, out)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SymPoly(self.basis, {lam: c * other for lam, c in self.coeffs.items()})
        self._same_basis(other)
        out = {}
        for lam1, c1 in self.coeffs.items():
            for lam2, c2 in other.coeffs.items():
                lam = tuple(sorted(lam1 + lam2, reverse=True))
                out[lam] = out.get(lam, 0) + c1 * c2
        return SymPoly(self.basis, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, SymPoly) and self.basis == other.basis
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.basis, tuple(sorted(self.coeffs.items()))))

    def __repr__(self):
        terms = ", ".join("%s%r: %s" % (self.basis, lam, c)
                          for lam, c in sorted(self.coeffs.items()))
        return "SymPoly(%s)" % terms


def e_to_p(n):
    """e_n in the power-sum basis:
    sum over multiplicity vectors m of n of
    prod_l (1/m_l!) * ((-1)^(l-1) / l)^m_l * p_{lambda(m)}.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    coeffs = {}
    for m in multiplicity_vectors(n):
        coef = Fraction(1)
        for l, ml in m.items():
            coef *= Fraction(1, factorial(ml)) * (Fraction((-1) ** (l - 1), l)) ** ml
        lam = Partition.from_multiplicities(m).parts
        coeffs[lam] = coef
    return SymPoly("p", coeffs)


def p_to_e(n):
    """p_n in the elementary basis:
    (-1)^(n-1) n sum over partitions lam of n of
    ((-1)^(l(lam)-1) / l(lam)) * (l(lam)! / prod m_l!) * e_lam.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    coeffs = {}
    for parts in partitions(n):
        lam = Partition(parts)
        ll = lam.length()
        coef = Fraction((-1) ** (ll - 1), ll) * Fraction(factorial(ll))
        for m in lam.multiplicities().values():
            coef /= factorial(m)
        coeffs[parts] = Fraction((-1) ** (n - 1) * n) * coef
    return SymPoly("e", coeffs)


def _inner_tuples(m, lam):
    """Tuples (m^j_l) with sum_j m^j_l = m_l and sum_l l m^j_l = lam_j."""
    levels = sorted(m)
    def rec(j, remaining):
        if j == len(lam):
            if all(v == 0 for v in remaining.values()):
                yield ()
            return
        target = lam[j]
        def fill(idx, left, row):
            if idx == len(levels):
                if left == 0:
                    yield tuple(row)
                return
            l = levels[idx]
            for take in range(min(remaining[l] - sum(r[1] for r in row if r[0] == l), left // l) + 1):
                yield from fill(idx + 1, left - l * take, row + [(l, take)])
        for row in fill(0, target, []):
            nxt = dict(remaining)
            for l, take in row:
                nxt[l] -= take
            for rest in rec(j + 1, nxt):
                yield (dict(row),) + rest
    return rec(0, dict(m))


def e_lambda_to_p(lam):
    """e_lam = prod_j e_{lam_j} in the power-sum basis, via the closed-form
    coefficients (the inner sum counts splittings of each multiplicity vector
    across the parts of lam)."""
    lam = Partition(lam)
    if not lam.parts:
        raise ValueError("partition must be nonempty")
    n = lam.size()
    coeffs = {}
    for m in multiplicity_vectors(n):
        inner = 0
        for split in _inner_tuples(m, lam.parts):
            term = 1
            for l, ml in m.items():
                denom = 1
                for row in split:
                    denom *= factorial(row.get(l, 0))
                term *= Fraction(factorial(ml), denom)
            inner += term
        if not inner:
            continue
        coef = inner
        for l, ml in m.items():
            coef *= Fraction(1, factorial(ml)) * (Fraction((-1) ** (l - 1), l)) ** ml
        coeffs[Partition.from_multiplicities(m).parts] = coef
    return SymPoly("p", coeffs)


@lru_cache(maxsize=None)
def _e_image(n):
    """Principal specialization of e_n: q^(n(n-1)/2) / prod_{i<=n} (1-q^i)."""
    num = Poly.x_pow(n * (n - 1) // 2)
    den = Poly((1,))
    for i in range(1, n + 1):
        den = den * (Poly((1,)) - Poly.x_pow(i))
    return RationalFunction(num, den)


@lru_cache(maxsize=None)
def _p_image(n):
    """Principal specialization of p_n: 1 / (1-q^n)."""
    return RationalFunction(Poly((1,)), Poly((1,)) - Poly.x_pow(n))


def principal_specialize(s):
    """Apply x_i -> q^(i-1) to a SymPoly, exactly, as a rational function."""
    image = _e_image if s.basis == "e" else _p_image
    total = RationalFunction.of(0)
    for lam, c in sorted(s.coeffs.items()):
        term = RationalFunction.of(c)
        for part in lam:
            term = term * image(part)
        total = total + term
    return total


def lemma3_identity(n):
    """Both sides of the q-identity

        q^(n(n-1)/2) / ((q^n-1)...(q^n-q^(n-1)))
            = sum_{m of n} prod_l (1/m_l!) ((-1)^(l-1) / (l [l]_q))^m_l
              * (q-1)^(-sum_l m_l)

    with [l]_q = (q^l-1)/(q-1).  Returned as a pair for the caller to compare.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    q = Poly.x_pow(1)
    lhs_den = Poly((1,))
    qn = Poly.x_pow(n)
    for i in range(n):
        lhs_den = lhs_den * (qn - Poly.x_pow(i))
    lhs = RationalFunction(Poly.x_pow(n * (n - 1) // 2), lhs_den)

    qm1 = RationalFunction(q - Poly((1,)))
    rhs = RationalFunction.of(0)
    for m in multiplicity_vectors(n):
        term = RationalFunction.of(1)
        for l, ml in m.items():
            bracket = RationalFunction(Poly.x_pow(l) - Poly((1,)), q - Poly((1,)))
            term = term * RationalFunction.of(Fraction(1, factorial(ml)))
            term = term * (RationalFunction.of((-1) ** (l - 1)) / (l * bracket)) ** ml
        term = term / qm1 ** sum(m.values())
        rhs = rhs + term
    return lhs, rhs
