"""Polynomial reduction, S-polynomials and Groebner-basis verification.

The main entry point is `verify_groebner`, which checks that the relation
set of an instance is a reduced Groebner basis under the DILL order: the
computed leading monomials must match the expected pattern (u_ik*u_jl for
quadratic relations, xj^mj*u_ik for mixed ones), every S-polynomial of a
pair of relations must reduce to zero, and the basis must be reduced.
The result carries a replayable per-pair certificate.

`buchberger_complete` is a generic completion used as an independent
cross-check: running it on the relation set must add nothing.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from fractions import Fraction

from .derivation import ProblemInstance
from .errors import BudgetExceededError
from .orders import CORRECTED, DillOrder
from .poly import PMonomial, Polynomial, format_monomial, format_poly, leading_term
from .presentation import RelationSet, build_relations, relation_label


def reduce(p: Polynomial, basis, order) -> Polynomial:
    """Full normal form of p modulo the basis list.

    Deterministic: the order-maximal reducible monomial is rewritten
    first, always against the first basis element whose lead divides it.
    No monomial of the result is divisible by any basis lead.
    """
    basis = list(basis)
    if not basis:
        raise ValueError("reduction needs a nonempty basis")
    if any(g.is_zero() for g in basis):
        raise ValueError("reduction basis must not contain zero")
    key = order.key
    lead_data = []
    for g in basis:
        lm, lc = leading_term(g, order)
        lead_data.append((lm, lc, g))
    work = dict(p.terms)
    remainder: dict = {}
    while work:
        mono = max(work, key=key)
        coeff = work.pop(mono)
        for lm, lc, g in lead_data:
            if lm.divides(mono):
                quot = mono.div(lm)
                factor = coeff / lc
                for gm, gc in g.terms.items():
                    if gm is lm or gm == lm:
                        continue
                    target = gm.mul(quot)
                    new = work.get(target, 0) - factor * gc
                    if new:
                        work[target] = new
                    else:
                        work.pop(target, None)
                break
        else:
            remainder[mono] = coeff
    return Polynomial(p.ring, remainder)


def s_polynomial(g: Polynomial, h: Polynomial, order) -> Polynomial:
    """The cancellation combination lcm/lead(g)*g/lc(g) - lcm/lead(h)*h/lc(h)."""
    if g.is_zero() or h.is_zero():
        raise ValueError("s_polynomial needs nonzero inputs")
    lmg, lcg = leading_term(g, order)
    lmh, lch = leading_term(h, order)
    lcm = lmg.lcm(lmh)
    return g.mul_term(lcm.div(lmg), Fraction(1) / lcg) - h.mul_term(
        lcm.div(lmh), Fraction(1) / lch
    )


def _monic(p: Polynomial, order) -> Polynomial:
    _, lc = leading_term(p, order)
    return p.scale(Fraction(1) / lc)


# -- expected leading monomials ----------------------------------------------


def expected_lead(inst: ProblemInstance, family: str, indices) -> PMonomial:
    """Claimed lead: u_ik*u_jl for R(i,j,k,l), xj^mj*u_ik for S(i,j,k)."""
    d = inst.d
    if family == "R":
        i, j, k, l = indices
        return PMonomial((0,) * d, (((i, k), 1), ((j, l), 1)))
    i, j, k = indices
    xexp = tuple(inst.m[j - 1] if t == j - 1 else 0 for t in range(d))
    return PMonomial(xexp, (((i, k), 1),))


def claimed_lead_monomials(inst: ProblemInstance) -> list[PMonomial]:
    """The full expected lead set of the relation basis."""
    from itertools import combinations

    leads = [
        expected_lead(inst, "R", idx)
        for idx in combinations(range(1, inst.d + 1), 4)
    ]
    leads.extend(
        expected_lead(inst, "S", idx)
        for idx in combinations(range(1, inst.d + 1), 3)
    )
    return leads


@dataclass
class LeadConformanceEntry:
    label: str
    expected: PMonomial
    computed: PMonomial
    ok: bool

    def to_json_dict(self) -> dict:
        return {
            "relation": self.label,
            "expected": format_monomial(self.expected),
            "computed": format_monomial(self.computed),
            "ok": self.ok,
        }


@dataclass
class LeadConformanceReport:
    entries: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries)

    def violations(self) -> list[LeadConformanceEntry]:
        return [e for e in self.entries if not e.ok]


def verify_lead_conformance(
    inst: ProblemInstance, relations: RelationSet, variant: str = CORRECTED
) -> LeadConformanceReport:
    """Compare each relation's computed lead with the expected pattern."""
    order = DillOrder(variant)
    report = LeadConformanceReport()
    for family, items in (("R", relations.quadratic), ("S", relations.mixed)):
        for indices, poly in items:
            computed, _ = leading_term(poly, order)
            expected = expected_lead(inst, family, indices)
            report.entries.append(
                LeadConformanceEntry(
                    relation_label(family, indices),
                    expected,
                    computed,
                    computed == expected,
                )
            )
    return report


# -- pairwise verification ----------------------------------------------------


@dataclass
class PairOutcome:
    left: str
    right: str
    coprime_leads: bool
    normal_form_zero: bool

    def to_json_dict(self) -> dict:
        return {
            "left": self.left,
            "right": self.right,
            "coprime_leads": self.coprime_leads,
            "normal_form_zero": self.normal_form_zero,
        }


@dataclass
class GroebnerCertificate:
    instance: ProblemInstance
    variant: str
    conformance: LeadConformanceReport
    pairs: list
    reduced: bool
    verdict: bool
    generated_at: str = ""

    def first_failure(self) -> str | None:
        if not self.conformance.ok:
            bad = self.conformance.violations()[0]
            return (
                f"lead of {bad.label} is {format_monomial(bad.computed)}, "
                f"expected {format_monomial(bad.expected)}"
            )
        for pair in self.pairs:
            if not pair.normal_form_zero:
                return f"s-polynomial of ({pair.left}, {pair.right}) does not reduce to zero"
        if not self.reduced:
            return "basis is not reduced"
        return None

    def to_json_dict(self) -> dict:
        return {
            "instance": self.instance.to_json_dict(),
            "variant": self.variant,
            "lead_conformance": {
                "ok": self.conformance.ok,
                "entries": [e.to_json_dict() for e in self.conformance.entries],
            },
            "pairs": [p.to_json_dict() for p in self.pairs],
            "reduced": self.reduced,
            "verdict": self.verdict,
            "generated_at": self.generated_at,
        }


def verify_reduced(basis, order) -> bool:
    """No monomial of one element may be divisible by another element's lead.

    Checked on monic-normalized copies, so stored integer coefficients are
    irrelevant to the verdict.
    """
    normalized = [_monic(g, order) for g in basis]
    leads = [leading_term(g, order)[0] for g in normalized]
    for gi, lead in enumerate(leads):
        for hi, h in enumerate(normalized):
            if gi == hi:
                continue
            if any(lead.divides(mono) for mono in h.terms):
                return False
    return True


def _pair_outcome(args):
    i, j, labels, basis, variant = args
    order = DillOrder(variant)
    g, h = basis[i], basis[j]
    lmg, _ = leading_term(g, order)
    lmh, _ = leading_term(h, order)
    coprime = lmg.lcm(lmh) == lmg.mul(lmh)
    spoly = s_polynomial(g, h, order)
    zero = spoly.is_zero() or reduce(spoly, basis, order).is_zero()
    return PairOutcome(labels[i], labels[j], coprime, zero)


def verify_groebner(
    inst: ProblemInstance,
    variant: str = CORRECTED,
    jobs: int = 1,
    relations: RelationSet | None = None,
) -> GroebnerCertificate:
    """Check that the relation set is a reduced Groebner basis.

    A failed lead-conformance report aborts the pair phase; the verdict is
    then false.  With jobs > 1 the pair reductions run in worker processes;
    the verdict and certificate are identical regardless of jobs.
    """
    if relations is None:
        relations = build_relations(inst)
    order = DillOrder(variant)
    conformance = verify_lead_conformance(inst, relations, variant)
    labeled = relations.labeled()
    labels = [label for label, _ in labeled]
    basis = [poly for _, poly in labeled]
    pairs: list[PairOutcome] = []
    if conformance.ok and len(basis) >= 2:
        tasks = [
            (i, j, labels, basis, variant)
            for i in range(len(basis))
            for j in range(i + 1, len(basis))
        ]
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                pairs = list(pool.map(_pair_outcome, tasks, chunksize=8))
        else:
            pairs = [_pair_outcome(task) for task in tasks]
    reduced = verify_reduced(basis, order) if basis else True
    verdict = conformance.ok and all(p.normal_form_zero for p in pairs) and reduced
    return GroebnerCertificate(
        instance=inst,
        variant=variant,
        conformance=conformance,
        pairs=pairs,
        reduced=reduced,
        verdict=verdict,
        generated_at=datetime.now(timezone.utc).isoformat(timespec="seconds"),
    )


# -- generic completion --------------------------------------------------------


def buchberger_complete(
    basis, order, pair_budget: int = 100_000
) -> list[Polynomial]:
    """Complete a generating set to a Groebner basis under the given order.

    Standard completion with the normal selection strategy (pair of
    minimal lcm under the order; ties broken by index), the coprime-lead
    criterion, and full reduction of each S-polynomial.  The result is
    monic-normalized.  Zero inputs are dropped; a pair queue larger than
    pair_budget raises BudgetExceededError instead of silently churning.
    """
    basis = list(basis)
    if not basis:
        raise ValueError("completion needs a nonempty input set")
    work = [_monic(g, order) for g in basis if not g.is_zero()]
    leads = [leading_term(g, order)[0] for g in work]
    queue = {(i, j) for i in range(len(work)) for j in range(i + 1, len(work))}
    while queue:
        if len(queue) > pair_budget:
            raise BudgetExceededError(
                f"pair queue grew past the budget of {pair_budget}"
            )
        i, j = min(queue, key=lambda ij: (order.key(leads[ij[0]].lcm(leads[ij[1]])), ij))
        queue.remove((i, j))
        lcm = leads[i].lcm(leads[j])
        if lcm == leads[i].mul(leads[j]):
            continue
        spoly = s_polynomial(work[i], work[j], order)
        if spoly.is_zero():
            continue
        normal_form = reduce(spoly, work, order)
        if normal_form.is_zero():
            continue
        work.append(_monic(normal_form, order))
        leads.append(leading_term(normal_form, order)[0])
        new = len(work) - 1
        queue.update((t, new) for t in range(new))
    return work
