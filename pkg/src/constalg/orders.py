"""Admissible monomial orders for the two rings.

Ring P carries the DILL order (degree, interval length, lexicographic).
Two tie-break conventions are provided:

* ``corrected`` (the default) compares u-degree, then total interval
  length, then x-degree, then the exponent vector lexicographically with
  variable precedence u1_2 > u1_3 > ... > u(d-1)_d > x1 > ... > xd.
  Under it the leading monomial of every quadratic relation r(i,j,k,l)
  is u_ik*u_jl and of every mixed relation s(i,j,k) is xj^mj*u_ik, which
  is what the whole reduction theory here is built on.
* ``literal`` keeps the clause order x-degree, u-degree, interval
  length, then an index-tuple comparison.  It does NOT reproduce the
  leading monomials above (see verify_lead_conformance) and is kept for
  experimentation only.

Ring A carries the pure lexicographic order with variable precedence
x1 > y1 > x2 > y2 > ... > yd.
"""

from __future__ import annotations

from typing import NamedTuple

from .poly import AMonomial, PMonomial, u_pairs

CORRECTED = "corrected"
LITERAL = "literal"
VARIANTS = (CORRECTED, LITERAL)


class DillKey(NamedTuple):
    """Comparison data of a P-monomial under the DILL order.

    The (u_degree, interval_length, x_degree) part of a product is the
    componentwise sum of the factors' parts; the unit monomial has the
    all-zero key.
    """

    u_degree: int
    interval_length: int
    x_degree: int
    tie: tuple


def _corrected_tie(mono: PMonomial) -> tuple:
    ud = dict(mono.upairs)
    return tuple(ud.get(pair, 0) for pair in u_pairs(mono.d)) + mono.xexp


def _literal_omega(mono: PMonomial) -> tuple:
    xs = []
    for i, e in enumerate(mono.xexp, start=1):
        xs.extend([i] * e)
    js = []
    ks = []
    for (j, k), e in mono.upairs:
        js.extend([j] * e)
        ks.extend([k] * e)
    return tuple(xs) + tuple(js) + tuple(ks)


def dill_key_parts(mono: PMonomial, variant: str = CORRECTED) -> DillKey:
    if variant not in VARIANTS:
        raise ValueError(f"unknown order variant {variant!r}")
    tie = _corrected_tie(mono) if variant == CORRECTED else _literal_omega(mono)
    return DillKey(mono.u_degree(), mono.interval_length(), mono.x_degree(), tie)


def dill_key(mono: PMonomial, variant: str = CORRECTED) -> tuple:
    """Sort key; tuples compare like the monomials under the chosen variant."""
    parts = dill_key_parts(mono, variant)
    if variant == CORRECTED:
        return (parts.u_degree, parts.interval_length, parts.x_degree, parts.tie)
    return (parts.x_degree, parts.u_degree, parts.interval_length, parts.tie)


def dill_compare(v: PMonomial, w: PMonomial, variant: str = CORRECTED) -> int:
    """-1, 0 or 1 as v < w, v == w or v > w; equal only for identical monomials."""
    if v.d != w.d:
        raise ValueError("cannot compare monomials of different dimension")
    kv, kw = dill_key(v, variant), dill_key(w, variant)
    if kv < kw:
        return -1
    if kv > kw:
        return 1
    return 0


def alex_key(mono: AMonomial) -> tuple:
    """Interleaved exponent tuple (a1, b1, ..., ad, bd); lex on it."""
    key = []
    for a, b in zip(mono.xexp, mono.yexp):
        key.append(a)
        key.append(b)
    return tuple(key)


def plex_key(mono: PMonomial) -> tuple:
    """Plain lex on ring P with the same variable precedence as DILL ties."""
    return _corrected_tie(mono)


class DillOrder:
    """Order handle for ring P monomials."""

    def __init__(self, variant: str = CORRECTED):
        if variant not in VARIANTS:
            raise ValueError(f"unknown order variant {variant!r}")
        self.variant = variant

    def key(self, mono: PMonomial) -> tuple:
        return dill_key(mono, self.variant)

    def compare(self, v: PMonomial, w: PMonomial) -> int:
        return dill_compare(v, w, self.variant)

    def __repr__(self):
        return f"DillOrder({self.variant!r})"


class ALexOrder:
    """Order handle for ring A monomials: lex with x1 > y1 > x2 > ..."""

    def key(self, mono: AMonomial) -> tuple:
        return alex_key(mono)

    def compare(self, v: AMonomial, w: AMonomial) -> int:
        kv, kw = alex_key(v), alex_key(w)
        return -1 if kv < kw else (1 if kv > kw else 0)

    def __repr__(self):
        return "ALexOrder()"


class PLexOrder:
    """Plain lex handle for ring P, used as an independent cross-check order."""

    def key(self, mono: PMonomial) -> tuple:
        return plex_key(mono)

    def compare(self, v: PMonomial, w: PMonomial) -> int:
        kv, kw = plex_key(v), plex_key(w)
        return -1 if kv < kw else (1 if kv > kw else 0)

    def __repr__(self):
        return "PLexOrder()"
