"""Motivic classes of semistable loci and the identities between them.

Classes of stacks [R_d^sst]/[G_d] are computed by the Harder-Narasimhan
recursion and realized inside the rational function field Q(L): every class
reached by the recursion is a polynomial in L divided by a product of powers
of L and factors (L^n - 1), so :class:`MotiveClass` stores exactly that
shape and never needs a polynomial gcd.  On top of the recursion sit the
Poincare polynomial / Euler characteristic extraction for coprime dimension
vectors, and the degeneration identities that trade a vertex for its
weighted blow-up (the MPS formula, its partition form, and the dual form).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import comb, factorial

from .quiver import check_quiver, hat_quiver
from .ratfunc import Poly, RationalFunction
from .symfunc import Partition, multiplicity_vectors, partitions


class MotiveClass:
    """num * L^(-lpow) * prod_n (L^n - 1)^(-exp_n), num a polynomial over Q.

    The factored denominator mirrors membership in the localized
    Grothendieck ring; addition and multiplication stay inside this shape,
    and equality is decided by cross-multiplying cofactors.
    """

    __slots__ = ("num", "lpow", "cyc")

    def __init__(self, num, lpow=0, cyc=()):
        if isinstance(num, (int, Fraction)):
            num = Poly.const(num)
        cyc = {n: e for n, e in (cyc.items() if isinstance(cyc, dict) else cyc) if e}
        if any(e < 0 or n < 1 for n, e in cyc.items()):
            raise ValueError("denominator exponents must be nonnegative")
        num, lpow, cyc = _reduce(num, lpow, cyc)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "lpow", lpow)
        object.__setattr__(self, "cyc", tuple(sorted(cyc.items())))

    def __setattr__(self, *a):
        raise AttributeError("MotiveClass is immutable")

    @classmethod
    def zero(cls):
        return cls(Poly())

    @classmethod
    def one(cls):
        return cls(Poly((1,)))

    def is_zero(self):
        return self.num.is_zero()

    def _cyc_dict(self):
        return dict(self.cyc)

    def __add__(self, other):
        if not isinstance(other, MotiveClass):
            other = MotiveClass(other)
        lp = max(self.lpow, other.lpow)
        ca, cb = self._cyc_dict(), other._cyc_dict()
        cc = {n: max(ca.get(n, 0), cb.get(n, 0)) for n in set(ca) | set(cb)}
        na = _times_cofactor(self.num, lp - self.lpow, ca, cc)
        nb = _times_cofactor(other.num, lp - other.lpow, cb, cc)
        return MotiveClass(na + nb, lp, cc)

    __radd__ = __add__

    def __neg__(self):
        r = object.__new__(MotiveClass)
        object.__setattr__(r, "num", -self.num)
        object.__setattr__(r, "lpow", self.lpow)
        object.__setattr__(r, "cyc", self.cyc)
        return r

    def __sub__(self, other):
        if not isinstance(other, MotiveClass):
            other = MotiveClass(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return MotiveClass(self.num * other, self.lpow, self.cyc)
        cc = self._cyc_dict()
        for n, e in other.cyc:
            cc[n] = cc.get(n, 0) + e
        return MotiveClass(self.num * other.num, self.lpow + other.lpow, cc)

    __rmul__ = __mul__

    def times_l_power(self, k):
        """Multiply by L^k (k of either sign)."""
        if k >= 0:
            return MotiveClass(self.num.shifted(k), self.lpow, self.cyc)
        return MotiveClass(self.num, self.lpow - k, self.cyc)

    def times_proj_inverse(self, n, power=1):
        """Multiply by [P^(n-1)]^(-power) = ((L-1)/(L^n-1))^power."""
        cc = self._cyc_dict()
        cc[n] = cc.get(n, 0) + power
        num = self.num * (Poly((-1, 1)) ** power)
        return MotiveClass(num, self.lpow, cc)

    def __eq__(self, other):
        if not isinstance(other, MotiveClass):
            other = MotiveClass(other)
        lp = max(self.lpow, other.lpow)
        ca, cb = self._cyc_dict(), other._cyc_dict()
        cc = {n: max(ca.get(n, 0), cb.get(n, 0)) for n in set(ca) | set(cb)}
        return _times_cofactor(self.num, lp - self.lpow, ca, cc) == _times_cofactor(
            other.num, lp - other.lpow, cb, cc
        )

    __hash__ = None

    def rational(self):
        """The class as a reduced RationalFunction in L."""
        den = Poly.x_pow(self.lpow)
        for n, e in self.cyc:
            den = den * ((Poly.x_pow(n) - Poly((1,))) ** e)
        return RationalFunction(self.num, den)

    def denominator_factors(self):
        """(L-power, {n: exponent}) of the stored denominator."""
        return self.lpow, dict(self.cyc)

    def __repr__(self):
        return "MotiveClass(%r, lpow=%d, cyc=%r)" % (list(self.num.c), self.lpow, dict(self.cyc))


def _divisible_by_cyclo(num, n):
    """Exact test for (L^n - 1) | num by folding exponents mod n."""
    folds = [0] * n
    for i, c in enumerate(num.c):
        folds[i % n] += c
    return all(v == 0 for v in folds)


def _reduce(num, lpow, cyc):
    if num.is_zero():
        return num, 0, {}
    low = num.low_order()
    k = min(low, lpow)
    if k > 0:
        num = Poly(num.c[k:])
        lpow -= k
    factor_cache = {}
    for n in sorted(cyc):
        while cyc[n] > 0 and _divisible_by_cyclo(num, n):
            if n not in factor_cache:
                factor_cache[n] = Poly.x_pow(n) - Poly((1,))
            num = num.exact_div(factor_cache[n])
            cyc[n] -= 1
    cyc = {n: e for n, e in cyc.items() if e}
    return num, lpow, cyc


def _times_cofactor(num, dl, own, common):
    out = num.shifted(dl)
    for n, e in common.items():
        extra = e - own.get(n, 0)
        if extra:
            out = out * ((Poly.x_pow(n) - Poly((1,))) ** extra)
    return out


# -- identity classes ---------------------------------------------------------


def gl_class(n):
    """[GL_n] = prod_{i=0}^{n-1} (L^n - L^i)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out = Poly((1,))
    for i in range(n):
        out = out * (Poly.x_pow(n) - Poly.x_pow(i))
    return MotiveClass(out)


def gm_class():
    """[G_m] = L - 1."""
    return MotiveClass(Poly((-1, 1)))


def proj_class(n):
    """[P^(n-1)] = (L^n - 1)/(L - 1) = 1 + L + ... + L^(n-1)."""
    if n < 1:
        raise ValueError("projective space of negative dimension")
    return MotiveClass(Poly((1,) * n))


# -- the Harder-Narasimhan solver ---------------------------------------------


class _HNSolver:
    """Memoized semistable-class computation for one (quiver, stability).

    Dimension vectors are tuples in vertex order.  Memo keys collapse
    vertices that are provably interchangeable (equal level and theta, and
    the transposition is a quiver automorphism) since every quantity in the
    recursion is invariant under such relabelings.
    """

    def __init__(self, Q, stab):
        self.Q = Q
        self.stab = stab
        self.ids = Q.ids
        self.index = {v: k for k, v in enumerate(self.ids)}
        self.levels = tuple(l for _, l in Q.vertices)
        th = stab.theta_map()
        self.theta = tuple(th.get(v, 0) for v in self.ids)
        self.kappa = self.levels if stab.kappa_from_levels else (1,) * len(self.ids)
        counts = {}
        for s, t in Q.arrows:
            key = (self.index[s], self.index[t])
            counts[key] = counts.get(key, 0) + 1
        self.arrowlist = tuple((u, v, m) for (u, v), m in sorted(counts.items()))
        self.classes = self._symmetry_classes(counts)
        self._sst = {}
        self._below = {}
        self._terms = {}

    def _symmetry_classes(self, counts):
        n = len(self.ids)
        def interchangeable(u, v):
            if (self.levels[u], self.theta[u]) != (self.levels[v], self.theta[v]):
                return False
            if counts.get((u, v), 0) != counts.get((v, u), 0):
                return False
            if counts.get((u, u), 0) != counts.get((v, v), 0):
                return False
            for w in range(n):
                if w in (u, v):
                    continue
                if counts.get((u, w), 0) != counts.get((v, w), 0):
                    return False
                if counts.get((w, u), 0) != counts.get((w, v), 0):
                    return False
            return True

        rep = list(range(n))
        for u in range(n):
            for v in range(u + 1, n):
                if rep[v] == v and rep[u] != rep[v] and interchangeable(u, v):
                    rep[v] = rep[u]
        classes = {}
        for v in range(n):
            classes.setdefault(rep[v], []).append(v)
        return tuple(tuple(vs) for _, vs in sorted(classes.items()))

    # -- keys ------------------------------------------------------------

    def _canon(self, d):
        return tuple(tuple(sorted((d[v] for v in cls), reverse=True)) for cls in self.classes)

    def _pairkey(self, e, rest):
        return tuple(
            tuple(sorted(((e[v], rest[v]) for v in cls), reverse=True))
            for cls in self.classes
        )

    # -- elementary quantities --------------------------------------------

    def mu(self, d):
        th = sum(t * x for t, x in zip(self.theta, d))
        ka = sum(k * x for k, x in zip(self.kappa, d))
        return Fraction(th, ka)

    def euler(self, d, e):
        total = sum(a * b for a, b in zip(d, e))
        for u, v, m in self.arrowlist:
            total -= m * d[u] * e[v]
        return total

    def top_class(self, d):
        """[R_d]/[G_d] = L^(dim R_d) / prod [GL_{d_v}]."""
        dim_r = sum(m * d[u] * d[v] for u, v, m in self.arrowlist)
        shift = dim_r - sum(comb(x, 2) for x in d)
        cyc = {}
        for x in d:
            for k in range(1, x + 1):
                cyc[k] = cyc.get(k, 0) + 1
        return MotiveClass.one().times_l_power(shift) * MotiveClass(Poly((1,)), 0, cyc)

    # -- the recursion -----------------------------------------------------

    def sst_class(self, d):
        key = self._canon(d)
        hit = self._sst.get(key)
        if hit is not None:
            return hit
        value = self.top_class(d) - self._stratum_sum(d, None, skip_full=True)
        self._sst[key] = value
        return value

    def _below_bound(self, d, bound):
        """Sum over filtration types of d with all slopes < bound."""
        key = (self._canon(d), bound)
        hit = self._below.get(key)
        if hit is not None:
            return hit
        value = self._stratum_sum(d, bound, skip_full=False)
        self._below[key] = value
        return value

    def _stratum_sum(self, d, bound, skip_full):
        counts = {}
        reps = {}
        for e in product(*[range(x + 1) for x in d]):
            if not any(e):
                continue
            if skip_full and e == d:
                continue
            if bound is not None:
                th = sum(t * x for t, x in zip(self.theta, e))
                ka = sum(k * x for k, x in zip(self.kappa, e))
                if th * bound.denominator >= bound.numerator * ka:
                    continue
            rest = tuple(a - b for a, b in zip(d, e))
            key = self._pairkey(e, rest)
            if key in counts:
                counts[key] += 1
            else:
                counts[key] = 1
                reps[key] = (e, rest)
        total = MotiveClass.zero()
        for key, mult in counts.items():
            term = self._terms.get(key)
            if term is None:
                e, rest = reps[key]
                term = self.sst_class(e)
                if any(rest):
                    term = term.times_l_power(-self.euler(rest, e))
                    term = term * self._below_bound(rest, self.mu(e))
                self._terms[key] = term
            total = total + (term * mult if mult > 1 else term)
        return total


_solvers = {}


def _solver(Q, stab):
    key = (Q, stab)
    if key not in _solvers:
        _solvers[key] = _HNSolver(Q, stab)
    return _solvers[key]


def _as_tuple(Q, d):
    return tuple(int(d.get(v, 0)) for v in Q.ids)


def hn_types(Q, s, d):
    """All decompositions d = d^1 + ... + d^s into nonzero vectors with
    strictly decreasing slopes, the trivial type (d,) included.  Enumerated
    by recursive first-block choice, in a deterministic order."""
    sol = _solver(Q, s)
    dv = _as_tuple(Q, d)
    if not any(dv):
        return []

    def rec(rest, bound):
        out = []
        for e in product(*[range(x + 1) for x in rest]):
            if not any(e):
                continue
            mu_e = sol.mu(e)
            if bound is not None and mu_e >= bound:
                continue
            tail = tuple(a - b for a, b in zip(rest, e))
            if not any(tail):
                out.append((e,))
            else:
                out.extend((e,) + t for t in rec(tail, mu_e))
        return out

    to_dict = lambda e: {v: x for v, x in zip(Q.ids, e) if x}
    return [tuple(to_dict(e) for e in typ) for typ in rec(dv, None)]


def hn_sst_class(Q, s, d):
    """[R_d^sst]/[G_d]: the class of all representations minus the strata of
    nontrivial filtration types (grouped by first block and memoized)."""
    dv = _as_tuple(Q, d)
    if not any(dv):
        raise ValueError("dimension vector must be nonzero")
    return _solver(Q, s).sst_class(dv)


def is_theta_coprime(Q, s, d):
    """No proper nonzero subvector e <= d shares the slope of d."""
    dv = _as_tuple(Q, d)
    sol = _solver(Q, s)
    mu_d = sol.mu(dv)
    for e in product(*[range(x + 1) for x in dv]):
        if not any(e) or e == dv:
            continue
        if sol.mu(e) == mu_d:
            return False
    return True


def poincare(Q, s, d):
    """Poincare polynomial in t of the stable moduli space, for coprime d.

    Computed as (L-1) * [R_d^sst]/[G_d] with L -> t^2; the result is checked
    to be a polynomial with nonnegative integer coefficients.
    """
    if not is_theta_coprime(Q, s, d):
        raise ValueError("dimension vector is not theta-coprime")
    cls = hn_sst_class(Q, s, d)
    rat = (cls * MotiveClass(Poly((-1, 1)))).rational()
    if not rat.is_polynomial():
        raise ArithmeticError("(L-1) * class is not polynomial; recursion is inconsistent")
    in_l = rat.as_poly()
    if any(not isinstance(c, int) or c < 0 for c in in_l.c):
        raise ArithmeticError("Poincare polynomial has a bad coefficient: %r" % (in_l,))
    return in_l.subst_pow(2)


def euler_char(Q, s, d):
    """Euler characteristic of the stable moduli space for coprime d."""
    return poincare(Q, s, d)(1)


# -- degeneration identities ---------------------------------------------------


def _mps_weight(m):
    out = Fraction(1)
    for l, ml in m.items():
        out *= Fraction(1, factorial(ml)) * Fraction((-1) ** ((l - 1) * ml), l ** ml)
    return out


def _mps_rhs(Q, s, i, d):
    di = d.get(i, 0)
    rhs = MotiveClass.zero()
    for m in multiplicity_vectors(di):
        Qh, dh, sh = hat_quiver(Q, i, m, d, s)
        term = hn_sst_class(Qh, sh, dh) * _mps_weight(m)
        for l, ml in m.items():
            if l > 1:
                term = term.times_proj_inverse(l, ml)
        rhs = rhs + term
    return rhs


def motivic_mps_check(Q, s, i, d):
    """L^binom(d_i,2) [R_d^sst]/[G_d] against the weighted sum of blow-up
    classes over multiplicity vectors of d_i.  Returns the equality."""
    di = d.get(i, 0)
    if di < 1:
        raise ValueError("d_i must be >= 1")
    lhs = hn_sst_class(Q, s, d).times_l_power(comb(di, 2))
    return lhs == _mps_rhs(Q, s, i, d)


def partition_form_check(Q, s, i, d):
    """The same sum indexed by partitions, with coefficient
    epsilon_lambda / z_lambda and one projective-space factor per part;
    checked against the multiplicity-vector form."""
    di = d.get(i, 0)
    if di < 1:
        raise ValueError("d_i must be >= 1")
    rhs = MotiveClass.zero()
    for parts in sorted(partitions(di)):
        lam = Partition(parts)
        m = lam.multiplicities()
        Qh, dh, sh = hat_quiver(Q, i, m, d, s)
        term = hn_sst_class(Qh, sh, dh) * Fraction(lam.sign(), lam.z())
        for p in parts:
            if p > 1:
                term = term.times_proj_inverse(p)
        rhs = rhs + term
    return rhs == _mps_rhs(Q, s, i, d)


def dual_mps_check(Q, s, i, d):
    """[P^(d_i-1)]^(-1) times the class at the single level-d_i blow-up
    vertex against the alternating sum over level-one splittings."""
    di = d.get(i, 0)
    if di < 1:
        raise ValueError("d_i must be >= 1")
    Qh, dh0, sh = hat_quiver(Q, i, {di: 1}, d, s)
    lhs = hn_sst_class(Qh, sh, dh0).times_proj_inverse(di)

    rhs = MotiveClass.zero()
    for parts in sorted(partitions(di)):
        lam = Partition(parts)
        coef = Fraction((-1) ** (lam.length() - 1) * factorial(lam.length() - 1))
        for m in lam.multiplicities().values():
            coef /= factorial(m)
        Qc, dc, sc = check_quiver(Q, i, parts, d, s)
        term = hn_sst_class(Qc, sc, dc) * coef
        term = term.times_l_power(sum(comb(p, 2) for p in parts))
        rhs = rhs + term
    rhs = rhs * Fraction((-1) ** (di - 1) * di)
    return lhs == rhs
