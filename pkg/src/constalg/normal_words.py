"""Normal words, the vector-space basis they induce, and constant rewriting.

A monomial of ring P is a normal word when (i) the open intervals of its
u-factors are pairwise nested or disjoint and (ii) every x-exponent at an
index strictly inside such an interval stays below m_i.  Their images
under pi form a vector-space basis of the algebra of constants; the image
leads are pairwise distinct, which makes the rewriting of an arbitrary
constant into the generators a deterministic peeling loop.

`kernel_dim_oracle` is the independent brute-force side: it computes the
exact nullspace of the derivation on a degree slice without touching any
of the normal-word machinery.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import linalg
from .derivation import ProblemInstance, apply_delta, is_constant
from .errors import (
    BudgetExceededError,
    NotAConstantError,
    PeelingError,
    RingMismatchError,
)
from .orders import CORRECTED, ALexOrder, alex_key, dill_key
from .poly import AMonomial, PMonomial, Polynomial, leading_term, u_pairs
from .presentation import GeneratorTable, build_generators, pi_image_of_monomial


@dataclass(frozen=True)
class NormalWord:
    """A P-monomial certified to satisfy the normality conditions."""

    monomial: PMonomial

    @staticmethod
    def certify(inst: ProblemInstance, monomial: PMonomial) -> "NormalWord":
        if not is_normal_word(inst, monomial):
            raise ValueError(f"{monomial!r} is not a normal word")
        return NormalWord(monomial)


def is_normal_word(inst: ProblemInstance, mono: PMonomial) -> bool:
    """Both normality conditions: nested-or-disjoint intervals, capped interior exponents."""
    if mono.d != inst.d:
        raise RingMismatchError(f"monomial has d={mono.d}, instance d={inst.d}")
    intervals = [pair for pair, _ in mono.upairs]
    for b in range(len(intervals)):
        jb, kb = intervals[b]
        for c in range(b + 1, len(intervals)):
            jc, kc = intervals[c]
            if jb < jc < kb < kc:
                return False
    for j, k in intervals:
        for i in range(j + 1, k):
            if mono.xexp[i - 1] >= inst.m[i - 1]:
                return False
    return True


def _generator_image_degrees(table: GeneratorTable) -> dict:
    """deg pi(u_jk) for every pair, read off the expanded generator."""
    return {pair: poly.degree() for pair, poly in table.u.items()}


def image_degree(table: GeneratorTable, mono: PMonomial) -> int:
    """Total degree of pi(mono), computed on the expanded image."""
    return pi_image_of_monomial(table, mono).degree()


def _compatible(pair, chosen) -> bool:
    j, k = pair
    for (jc, kc) in chosen:
        lo, hi = min(pair, (jc, kc)), max(pair, (jc, kc))
        if lo[0] < hi[0] < lo[1] < hi[1]:
            return False
    return True


def enumerate_normal_words(
    inst: ProblemInstance,
    max_image_degree: int,
    variant: str = CORRECTED,
    table: GeneratorTable | None = None,
) -> list[NormalWord]:
    """All normal words whose image degree is at most the bound, DILL-sorted."""
    if max_image_degree < 0:
        raise ValueError("degree bound must be nonnegative")
    if table is None:
        table = build_generators(inst)
    gen_deg = _generator_image_degrees(table)
    pairs = u_pairs(inst.d)
    d = inst.d
    words: list[PMonomial] = []

    def x_parts(chosen: dict, budget: int):
        interior_caps = [None] * d
        for j, k in chosen:
            for i in range(j + 1, k):
                cap = inst.m[i - 1] - 1
                if interior_caps[i - 1] is None or cap < interior_caps[i - 1]:
                    interior_caps[i - 1] = cap

        def fill(idx: int, remaining: int, acc: list):
            if idx == d:
                mono = PMonomial(tuple(acc), tuple(chosen.items()))
                if is_normal_word(inst, mono):
                    exact = image_degree(table, mono)
                    if exact <= max_image_degree:
                        words.append(mono)
                return
            cap = remaining
            if interior_caps[idx] is not None:
                cap = min(cap, interior_caps[idx])
            for e in range(cap + 1):
                acc.append(e)
                fill(idx + 1, remaining - e, acc)
                acc.pop()

        fill(0, budget, [])

    def pick(idx: int, chosen: dict, used: int):
        if idx == len(pairs):
            x_parts(chosen, max_image_degree - used)
            return
        pair = pairs[idx]
        pick(idx + 1, chosen, used)
        if not _compatible(pair, chosen):
            return
        weight = gen_deg[pair]
        e = 1
        while used + e * weight <= max_image_degree:
            chosen[pair] = e
            pick(idx + 1, chosen, used + e * weight)
            e += 1
        chosen.pop(pair, None)

    pick(0, {}, 0)
    words.sort(key=lambda m: dill_key(m, variant))
    return [NormalWord(m) for m in words]


def lead_of_image(inst: ProblemInstance, word) -> tuple[AMonomial, Fraction]:
    """Lead of pi(word) under the A-lex order, without expanding the image.

    The lead is x^a * prod_b x_jb^m_jb * y_kb with coefficient prod_b lc_jb.
    """
    mono = word.monomial if isinstance(word, NormalWord) else word
    if not isinstance(word, NormalWord) and not is_normal_word(inst, mono):
        raise ValueError(f"{mono!r} is not a normal word")
    xexp = list(mono.xexp)
    yexp = [0] * inst.d
    coeff = Fraction(1)
    for (j, k), e in mono.upairs:
        xexp[j - 1] += e * inst.m[j - 1]
        yexp[k - 1] += e
        coeff *= inst.lc[j - 1] ** e
    return AMonomial(tuple(xexp), tuple(yexp)), coeff


def recover_word_from_lead(inst: ProblemInstance, lead: AMonomial) -> NormalWord:
    """The unique normal word whose image lead is the given monomial.

    Peeling loop: while some y-exponent is positive, take the smallest
    index k with y_k present, the largest i < k whose x-exponent reaches
    m_i, emit a factor u_ik and divide by x_i^m_i * y_k.  Failure to find
    such an i means the monomial is not the lead of any normal image.
    """
    if lead.d != inst.d:
        raise RingMismatchError(f"monomial has d={lead.d}, instance d={inst.d}")
    xexp = list(lead.xexp)
    yexp = list(lead.yexp)
    factors: dict = {}
    while any(yexp):
        k = next(t + 1 for t, e in enumerate(yexp) if e)
        candidates = [
            i for i in range(1, k) if xexp[i - 1] >= inst.m[i - 1]
        ]
        if not candidates:
            raise PeelingError(
                f"no index i < {k} with x-exponent >= m_i while peeling "
                f"{lead!r}; it is not the lead of a normal image"
            )
        i = max(candidates)
        factors[(i, k)] = factors.get((i, k), 0) + 1
        xexp[i - 1] -= inst.m[i - 1]
        yexp[k - 1] -= 1
    word = PMonomial(tuple(xexp), tuple(factors.items()))
    return NormalWord(word)


def rewrite_constant(inst: ProblemInstance, g: Polynomial) -> Polynomial:
    """Express a constant as a linear combination of normal words.

    Returns h over ring P with pi(h) = g and every monomial of h normal.
    Peeling the A-lex lead must succeed on every iteration; a failure on a
    genuine constant would be an internal inconsistency and is fatal.
    """
    if g.ring != inst.ring_a:
        raise RingMismatchError(f"polynomial over {g.ring} does not match d={inst.d}")
    if not is_constant(inst, g):
        raise NotAConstantError("polynomial is not a constant of the derivation")
    table = build_generators(inst)
    result: dict = {}
    work = dict(g.terms)
    # Lazy max-heap over the A-lex key; stale entries are skipped on pop.
    heap = [tuple(-v for v in alex_key(m)) + (m,) for m in work]
    heapq.heapify(heap)
    while work:
        mono = None
        while heap:
            mono = heapq.heappop(heap)[-1]
            if mono in work:
                break
            mono = None
        if mono is None:
            raise AssertionError("heap exhausted before work emptied")
        coeff = work[mono]
        word = recover_word_from_lead(inst, mono)
        _, lead_coeff = lead_of_image(inst, word)
        factor = coeff / lead_coeff
        result[word.monomial] = result.get(word.monomial, 0) + factor
        image = pi_image_of_monomial(table, word.monomial)
        for im, ic in image.terms.items():
            new = work.get(im, 0) - factor * ic
            if new:
                if im not in work:
                    heapq.heappush(heap, tuple(-v for v in alex_key(im)) + (im,))
                work[im] = new
            else:
                work.pop(im, None)
    return Polynomial(inst.ring_p, result)


# -- brute-force oracle ---------------------------------------------------------


def _monomials_up_to_degree(d: int, bound: int) -> list[AMonomial]:
    """All ring-A monomials of total degree <= bound, in descending A-lex order."""
    out: list[AMonomial] = []

    def fill(idx: int, remaining: int, acc: list):
        if idx == 2 * d:
            xexp = tuple(acc[0::2])
            yexp = tuple(acc[1::2])
            out.append(AMonomial(xexp, yexp))
            return
        for e in range(remaining + 1):
            acc.append(e)
            fill(idx + 1, remaining - e, acc)
            acc.pop()

    fill(0, bound, [])
    out.sort(key=alex_key, reverse=True)
    return out


def _normalize_vector_poly(ring, cols, vector) -> Polynomial:
    """Scale to coprime integers with positive A-lex-leading coefficient."""
    terms = {m: c for m, c in zip(cols, vector) if c}
    denom_lcm = 1
    for c in terms.values():
        denom_lcm = denom_lcm * c.denominator // gcd(denom_lcm, c.denominator)
    numerators = [int(c * denom_lcm) for c in terms.values()]
    content = 0
    for n in numerators:
        content = gcd(content, n)
    factor = Fraction(denom_lcm, content if content else 1)
    poly = Polynomial(ring, {m: c * factor for m, c in terms.items()})
    _, lc = leading_term(poly, ALexOrder())
    if lc < 0:
        poly = -poly
    return poly


@dataclass
class KernelBasis:
    dimension: int
    basis: list


def kernel_dim_oracle(
    inst: ProblemInstance, max_degree: int, monomial_guard: int = 5000
) -> KernelBasis:
    """Exact basis of the constants of degree <= max_degree.

    Brute force: the derivation is a linear map from the degree slice into
    a higher slice; its nullspace is computed by fraction-free elimination.
    Completely independent of the relation/normal-word machinery.
    """
    cols = _monomials_up_to_degree(inst.d, max_degree)
    if len(cols) > monomial_guard:
        raise BudgetExceededError(
            f"{len(cols)} monomials exceed the guard bound {monomial_guard}"
        )
    ring = inst.ring_a
    row_index: dict[AMonomial, int] = {}
    rows: list[dict[int, Fraction]] = []
    for cidx, mono in enumerate(cols):
        image = apply_delta(inst, Polynomial.from_term(ring, mono, 1))
        for tmono, tcoeff in image.terms.items():
            ridx = row_index.get(tmono)
            if ridx is None:
                ridx = len(rows)
                row_index[tmono] = ridx
                rows.append({})
            rows[ridx][cidx] = tcoeff
    vectors = linalg.nullspace(rows, len(cols))
    basis = [_normalize_vector_poly(ring, cols, vec) for vec in vectors]
    basis.sort(key=lambda p: alex_key(leading_term(p, ALexOrder())[0]), reverse=True)
    return KernelBasis(dimension=len(basis), basis=basis)


@dataclass
class IndependenceResult:
    word_count: int
    rank: int
    leads_pairwise_distinct: bool

    @property
    def ok(self) -> bool:
        return self.rank == self.word_count and self.leads_pairwise_distinct


def independence_check(
    inst: ProblemInstance, max_degree: int, monomial_guard: int = 5000
) -> IndependenceResult:
    """Exact rank of the normal-word images on a degree slice.

    The images are independent iff the rank equals the word count; the
    image leads must also be pairwise distinct.
    """
    table = build_generators(inst)
    words = enumerate_normal_words(inst, max_degree, table=table)
    images = [pi_image_of_monomial(table, w.monomial) for w in words]
    col_index: dict[AMonomial, int] = {}
    for image in images:
        for mono in image.terms:
            if mono not in col_index:
                col_index[mono] = len(col_index)
    if len(col_index) > monomial_guard:
        raise BudgetExceededError(
            f"{len(col_index)} monomials exceed the guard bound {monomial_guard}"
        )
    rows = [
        {col_index[m]: c for m, c in image.terms.items()} for image in images
    ]
    matrix_rank = linalg.rank(rows, len(col_index))
    leads = [lead_of_image(inst, w)[0] for w in words]
    distinct = len(set(leads)) == len(leads)
    return IndependenceResult(
        word_count=len(words), rank=matrix_rank, leads_pairwise_distinct=distinct
    )
