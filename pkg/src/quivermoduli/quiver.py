"""Quivers with vertex levels, dimension vectors, slope stability, and the
covering constructions (vertex blow-ups and bipartite support quivers) that
the moduli computations run on.

All values are immutable after construction.  Dimension vectors and theta
forms are plain mappings ``vertex id -> int``; vertex ids are opaque hashable
tokens (strings for user-facing quivers, structured tuples for the covering
quivers so that set-partition bookkeeping stays deterministic).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Quiver:
    """Directed multigraph with a positive integer level on each vertex.

    ``vertices`` is a tuple of ``(id, level)`` pairs, ``arrows`` a tuple of
    ``(source id, target id)`` pairs; parallel arrows and loops are allowed,
    and the arrow order is stable (tree enumeration relies on it).
    """

    vertices: tuple
    arrows: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple((v, int(l)) for v, l in self.vertices))
        object.__setattr__(self, "arrows", tuple((s, t) for s, t in self.arrows))
        ids = [v for v, _ in self.vertices]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate vertex ids")
        for _, l in self.vertices:
            if l < 1:
                raise ValueError("levels must be >= 1")
        idset = set(ids)
        for s, t in self.arrows:
            if s not in idset or t not in idset:
                raise ValueError("arrow endpoint %r not a declared vertex" % ((s, t),))

    @property
    def ids(self):
        return tuple(v for v, _ in self.vertices)

    def level(self, v):
        for w, l in self.vertices:
            if w == v:
                return l
        raise KeyError(v)

    def levels(self):
        return dict(self.vertices)

    def arrow_counts(self):
        """Multiplicity map (source, target) -> number of parallel arrows."""
        counts = {}
        for a in self.arrows:
            counts[a] = counts.get(a, 0) + 1
        return counts

    def sources(self):
        """Vertices no arrow terminates at."""
        targets = {t for _, t in self.arrows}
        return tuple(v for v, _ in self.vertices if v not in targets)

    def sinks(self):
        """Vertices no arrow starts at."""
        starts = {s for s, _ in self.arrows}
        return tuple(v for v, _ in self.vertices if v not in starts)

    @classmethod
    def complete_bipartite(cls, l1, l2, source_levels=None, sink_levels=None):
        """K(l1, l2): sources i1..i_l1, sinks j1..j_l2, one arrow per pair."""
        source_levels = source_levels or [1] * l1
        sink_levels = sink_levels or [1] * l2
        verts = [("i%d" % (k + 1), source_levels[k]) for k in range(l1)]
        verts += [("j%d" % (k + 1), sink_levels[k]) for k in range(l2)]
        arrows = [("i%d" % (k + 1), "j%d" % (m + 1)) for k in range(l1) for m in range(l2)]
        return cls(tuple(verts), tuple(arrows))

    @classmethod
    def kronecker(cls, num_arrows):
        """Two vertices with ``num_arrows`` parallel arrows source -> sink."""
        return cls((("i1", 1), ("j1", 1)), tuple(("i1", "j1") for _ in range(num_arrows)))

    # -- JSON wire format ----------------------------------------------------

    def to_json(self):
        return {
            "vertices": [{"id": _id_str(v), "level": l} for v, l in self.vertices],
            "arrows": [[_id_str(s), _id_str(t)] for s, t in self.arrows],
        }

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        verts = tuple((v["id"], v.get("level", 1)) for v in data["vertices"])
        arrows = tuple((s, t) for s, t in data["arrows"])
        return cls(verts, arrows)


def _id_str(v):
    if isinstance(v, str):
        return v
    if isinstance(v, tuple):
        return ":".join(str(x) for x in v)
    return str(v)


@dataclass(frozen=True)
class Stability:
    """Linear form theta together with the normalization kappa.

    ``kappa_from_levels`` selects kappa(d) = sum l(q) d_q (default); with the
    flag cleared kappa is the total dimension regardless of levels.
    """

    theta: tuple
    kappa_from_levels: bool = True

    @classmethod
    def of(cls, theta_map, kappa_from_levels=True):
        return cls(tuple(sorted(theta_map.items(), key=lambda kv: repr(kv[0]))),
                   kappa_from_levels)

    def theta_map(self):
        return dict(self.theta)

    def theta_value(self, d):
        th = dict(self.theta)
        return sum(th.get(v, 0) * n for v, n in d.items())

    def kappa_value(self, Q, d):
        if self.kappa_from_levels:
            lev = Q.levels()
            return sum(lev[v] * n for v, n in d.items())
        return sum(d.values())


def dim_total(d):
    return sum(d.values())


def _check_support(Q, d, name="dimension vector"):
    idset = set(Q.ids)
    for v in d:
        if v not in idset:
            raise ValueError("%s uses unknown vertex id %r" % (name, v))


def euler_form(Q, d, e):
    """<d, e> = sum_i d_i e_i - sum_{arrows i->j} d_i e_j."""
    _check_support(Q, d)
    _check_support(Q, e, "second dimension vector")
    total = sum(n * e.get(v, 0) for v, n in d.items())
    for s, t in Q.arrows:
        total -= d.get(s, 0) * e.get(t, 0)
    return total


def antisymmetrized_form(Q, d, e):
    """{d, e} = <d, e> - <e, d>."""
    return euler_form(Q, d, e) - euler_form(Q, e, d)


def slope(s, Q, d):
    """mu(d) = theta(d) / kappa(d) as an exact fraction; d must be nonzero."""
    _check_support(Q, d)
    if all(n == 0 for n in d.values()):
        raise ValueError("slope of the zero dimension vector")
    return Fraction(s.theta_value(d), s.kappa_value(Q, d))


# -- covering constructions -------------------------------------------------


def _as_multiplicity(m):
    """Normalize a multiplicity vector to a sorted tuple of (level, count)."""
    if isinstance(m, dict):
        items = m.items()
    else:
        items = m
    out = tuple(sorted((int(l), int(c)) for l, c in items if c))
    for l, c in out:
        if l < 1 or c < 1:
            raise ValueError("bad multiplicity vector entry (%d, %d)" % (l, c))
    return out


def hat_quiver(Q, i, m, d, stab=None):
    """Blow up vertex ``i`` into level-``l`` vertices ``(i, l, k)``.

    ``m`` maps level l to the number m_l of copies, with sum l*m_l = d_i.
    Returns ``(Q_hat, d_hat, stab_hat)`` restricted to the finite support:
    each copy carries dimension 1, arrows at ``i`` are duplicated l times per
    copy and loops l*l' times, and theta lifts by theta_hat = l * theta_i.
    ``stab_hat`` is None when no stability is supplied.
    """
    if i not in set(Q.ids):
        raise ValueError("unknown vertex %r" % (i,))
    if Q.level(i) != 1:
        raise ValueError("vertex blow-up requires level 1 at the replaced vertex")
    m = _as_multiplicity(m)
    di = d.get(i, 0)
    if sum(l * c for l, c in m) != di:
        raise ValueError("multiplicity vector does not partition d_i = %d" % di)

    copies = [(i, l, k) for l, c in m for k in range(1, c + 1)]
    verts = [(v, l) for v, l in Q.vertices if v != i]
    verts += [(c, c[1]) for c in copies]

    arrows = []
    for s, t in Q.arrows:
        if s != i and t != i:
            arrows.append((s, t))
        elif s == i and t != i:
            for c in copies:
                arrows.extend((c, t) for _ in range(c[1]))
        elif t == i and s != i:
            for c in copies:
                arrows.extend((s, c) for _ in range(c[1]))
        else:  # loop at i
            for c1 in copies:
                for c2 in copies:
                    arrows.extend((c1, c2) for _ in range(c1[1] * c2[1]))

    d_hat = {v: n for v, n in d.items() if v != i and n}
    d_hat.update({c: 1 for c in copies})

    stab_hat = None
    if stab is not None:
        th = stab.theta_map()
        th_hat = {v: th.get(v, 0) for v, _ in Q.vertices if v != i}
        th_hat.update({c: c[1] * th.get(i, 0) for c in copies})
        stab_hat = Stability.of(th_hat, kappa_from_levels=True)
    return Quiver(tuple(verts), tuple(arrows)), d_hat, stab_hat


def check_quiver(Q, i, lam, d, stab=None):
    """Level-one splitting of vertex ``i`` along a partition of d_i.

    Vertex ``i`` is replaced by level-1 vertices ``(i, k)`` with dimensions
    lam_k; arrows at ``i`` are copied once per new vertex.
    """
    if i not in set(Q.ids):
        raise ValueError("unknown vertex %r" % (i,))
    lam = tuple(int(p) for p in lam)
    if any(p < 1 for p in lam) or list(lam) != sorted(lam, reverse=True):
        raise ValueError("parts must be positive and weakly decreasing")
    if sum(lam) != d.get(i, 0):
        raise ValueError("partition does not sum to d_i = %d" % d.get(i, 0))

    copies = [(i, k) for k in range(1, len(lam) + 1)]
    verts = [(v, l) for v, l in Q.vertices if v != i]
    verts += [(c, 1) for c in copies]

    arrows = []
    for s, t in Q.arrows:
        if s != i and t != i:
            arrows.append((s, t))
        elif s == i and t != i:
            arrows.extend((c, t) for c in copies)
        elif t == i and s != i:
            arrows.extend((s, c) for c in copies)
        else:
            arrows.extend((c1, c2) for c1 in copies for c2 in copies)

    d_check = {v: n for v, n in d.items() if v != i and n}
    d_check.update({c: lam[k] for k, c in enumerate(copies)})

    stab_check = None
    if stab is not None:
        th = stab.theta_map()
        th_check = {v: th.get(v, 0) for v, _ in Q.vertices if v != i}
        th_check.update({c: th.get(i, 0) for c in copies})
        stab_check = Stability.of(th_check, kappa_from_levels=True)
    return Quiver(tuple(verts), tuple(arrows)), d_check, stab_check


@dataclass(frozen=True)
class Refinement:
    """Weighted splitting (k^1, k^2) of a pair of ordered partitions.

    Each side is a tuple with one entry per part p_ij, the entry being a
    sorted tuple of ``(weight, count)`` pairs with sum w*count = p_ij.
    """

    k1: tuple
    k2: tuple

    @classmethod
    def of(cls, k1, k2):
        return cls(tuple(_as_multiplicity(part) for part in k1),
                   tuple(_as_multiplicity(part) for part in k2))

    def side(self, which):
        return self.k1 if which == 1 else self.k2

    def part_sums(self, which):
        return tuple(sum(w * c for w, c in part) for part in self.side(which))

    def weight_multiplicities(self, which):
        """m_w(k^i) = total number of weight-w entries on side ``which``."""
        out = {}
        for part in self.side(which):
            for w, c in part:
                out[w] = out.get(w, 0) + c
        return out

    def is_empty(self, which):
        return not any(self.side(which))


def n_support(r):
    """Bipartite support quiver of a refinement.

    m_w(k^1) sources of level w, m_w(k^2) sinks of level w, and w*w' parallel
    arrows between a level-w source and a level-w' sink.  Returns the quiver,
    the all-ones dimension vector and the slope datum (theta = level on
    sources, 0 on sinks, kappa from levels).
    """
    if r.is_empty(1) or r.is_empty(2):
        raise ValueError("refinement must be nonzero on a source and a sink")
    srcs = [("src", w, k)
            for w, c in sorted(r.weight_multiplicities(1).items())
            for k in range(1, c + 1)]
    snks = [("snk", w, k)
            for w, c in sorted(r.weight_multiplicities(2).items())
            for k in range(1, c + 1)]
    verts = [(v, v[1]) for v in srcs] + [(v, v[1]) for v in snks]
    arrows = []
    for s in srcs:
        for t in snks:
            arrows.extend((s, t) for _ in range(s[1] * t[1]))
    dim = {v: 1 for v in srcs + snks}
    theta = {v: v[1] for v in srcs}
    theta.update({v: 0 for v in snks})
    return Quiver(tuple(verts), tuple(arrows)), dim, Stability.of(theta)


# -- JSON helpers for the wire format ----------------------------------------


def dim_to_json(d):
    return {_id_str(v): n for v, n in d.items()}


def dim_from_json(data, Q=None):
    return {v: int(n) for v, n in data.items()}


def fraction_to_str(x):
    x = Fraction(x)
    return "%d/%d" % (x.numerator, x.denominator) if x.denominator != 1 else "%d" % x.numerator


def fraction_from_str(s):
    if "/" in s:
        p, q = s.split("/")
        return Fraction(int(p), int(q))
    return Fraction(int(s))
