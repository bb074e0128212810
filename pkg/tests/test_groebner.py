"""Reduction, S-polynomials, verification and completion."""

import random

import pytest

from constalg import (
    CORRECTED,
    LITERAL,
    BudgetExceededError,
    DillOrder,
    PLexOrder,
    PMonomial,
    ProblemInstance,
    buchberger_complete,
    build_generators,
    build_relations,
    claimed_lead_monomials,
    parse_poly,
    pi_substitute,
    reduce,
    s_polynomial,
    verify_groebner,
    verify_lead_conformance,
    verify_reduced,
)
from constalg.poly import leading_term
from helpers import instance_with_degrees, random_instance, random_ppoly


def classical(d):
    return ProblemInstance.from_coeffs(d, [[0, 1]] * d)


def test_reduce_self_to_zero():
    inst = classical(4)
    r = build_relations(inst).quadratic[0][1]
    assert reduce(r, [r], DillOrder()).is_zero()


def test_reduce_crossing_pair_product():
    # one step against r(1,2,3,4); its image under pi must be unchanged
    inst = classical(4)
    basis = build_relations(inst).polynomials()
    p = parse_poly("u1_3*u2_4", "P", 4)
    normal_form = reduce(p, basis, DillOrder())
    assert normal_form == parse_poly("u1_2*u3_4 + u1_4*u2_3", "P", 4)
    table = build_generators(inst)
    assert pi_substitute(table, normal_form) == pi_substitute(table, p)


def test_reduce_untouched_x_power():
    inst = classical(4)
    basis = build_relations(inst).polynomials()
    p = parse_poly("x1^7", "P", 4)
    assert reduce(p, basis, DillOrder()) == p


def test_reduce_requires_sane_basis():
    inst = classical(4)
    p = parse_poly("x1", "P", 4)
    with pytest.raises(ValueError):
        reduce(p, [], DillOrder())
    from constalg import Polynomial, ring_p

    with pytest.raises(ValueError):
        reduce(p, [Polynomial.zero(ring_p(4))], DillOrder())


def test_reduce_result_is_in_normal_form():
    rng = random.Random(97)
    order = DillOrder()
    inst = random_instance(rng, 4, max_m=2)
    basis = build_relations(inst).polynomials()
    leads = [leading_term(g, order)[0] for g in basis]
    for _ in range(40):
        p = random_ppoly(rng, 4, terms=4, max_x=2, max_u=2, max_factors=2)
        if p.is_zero():
            continue
        normal_form = reduce(p, basis, order)
        for mono in normal_form.terms:
            assert not any(lm.divides(mono) for lm in leads)


def test_reduce_is_idempotent_and_stays_in_coset():
    rng = random.Random(101)
    inst = random_instance(rng, 4, max_m=2)
    basis = build_relations(inst).polynomials()
    table = build_generators(inst)
    order = DillOrder()
    for _ in range(25):
        p = random_ppoly(rng, 4, terms=4, max_x=2, max_u=2, max_factors=2)
        normal_form = reduce(p, basis, order)
        assert reduce(normal_form, basis, order) == normal_form
        assert pi_substitute(table, normal_form) == pi_substitute(table, p)


def test_s_polynomial_of_equal_inputs_vanishes():
    inst = classical(4)
    r = build_relations(inst).quadratic[0][1]
    assert s_polynomial(r, r, DillOrder()).is_zero()


def test_s_polynomial_coprime_leads_reduce_to_zero():
    g = parse_poly("u1_2 + x2", "P", 3)
    h = parse_poly("x3 + 1", "P", 3)
    order = DillOrder()
    spoly = s_polynomial(g, h, order)
    assert reduce(spoly, [g, h], order).is_zero()


def test_s_polynomial_rejects_zero():
    from constalg import Polynomial, ring_p

    g = parse_poly("u1_2", "P", 2)
    with pytest.raises(ValueError):
        s_polynomial(g, Polynomial.zero(ring_p(2)), DillOrder())


def test_s_polynomial_of_relation_pair_reduces_to_zero():
    inst = classical(4)
    relations = build_relations(inst)
    basis = relations.polynomials()
    r = relations.quadratic[0][1]
    s124 = dict(relations.mixed)[(1, 2, 4)]
    spoly = s_polynomial(r, s124, DillOrder())
    assert reduce(spoly, basis, DillOrder()).is_zero()


def test_lead_conformance_corrected():
    rng = random.Random(103)
    for d in (3, 4, 5):
        inst = random_instance(rng, d)
        report = verify_lead_conformance(inst, build_relations(inst))
        assert report.ok
        assert len(report.entries) == len(build_relations(inst))


def test_lead_conformance_literal_flags_quadratic_leads():
    inst = classical(4)
    report = verify_lead_conformance(inst, build_relations(inst), LITERAL)
    assert not report.ok
    bad = {e.label: e for e in report.violations()}
    assert "R(1,2,3,4)" in bad
    assert bad["R(1,2,3,4)"].computed == PMonomial(
        (0,) * 4, (((1, 4), 1), ((2, 3), 1))
    )


def test_lead_conformance_literal_flags_mixed_leads():
    inst = ProblemInstance.from_coeffs(3, [[0, 0, 0, 1], [0, 1], [0, 1]])  # m=(3,1,1)
    report = verify_lead_conformance(inst, build_relations(inst), LITERAL)
    bad = {e.label: e for e in report.violations()}
    assert "S(1,2,3)" in bad
    assert bad["S(1,2,3)"].computed == PMonomial((3, 0, 0), (((2, 3), 1),))


def test_claimed_lead_monomials_match_conformance_targets():
    rng = random.Random(107)
    inst = random_instance(rng, 5)
    relations = build_relations(inst)
    order = DillOrder()
    computed = [leading_term(p, order)[0] for p in relations.polynomials()]
    assert computed == claimed_lead_monomials(inst)


def test_verify_groebner_classical_d4():
    cert = verify_groebner(classical(4))
    assert cert.verdict
    assert cert.reduced
    assert all(p.normal_form_zero for p in cert.pairs)
    assert cert.first_failure() is None


def test_verify_groebner_d3_single_mixed_relation():
    rng = random.Random(109)
    inst = random_instance(rng, 3)
    cert = verify_groebner(inst)
    assert cert.verdict
    assert cert.pairs == []  # a single relation has no pairs


def test_verify_groebner_random_instances():
    rng = random.Random(113)
    for d in (4, 5):
        inst = random_instance(rng, d, max_m=3)
        assert verify_groebner(inst).verdict


def test_verify_groebner_literal_fails_conformance_gate():
    cert = verify_groebner(classical(4), variant=LITERAL)
    assert not cert.verdict
    assert not cert.conformance.ok
    assert cert.pairs == []  # pair phase aborted
    assert "lead of" in cert.first_failure()


def test_verify_groebner_parallel_matches_serial():
    inst = classical(4)
    serial = verify_groebner(inst, jobs=1)
    parallel = verify_groebner(inst, jobs=2)
    assert serial.verdict == parallel.verdict
    assert [p.to_json_dict() for p in serial.pairs] == [
        p.to_json_dict() for p in parallel.pairs
    ]


def test_certificate_json_replayable():
    inst = classical(4)
    a = verify_groebner(inst).to_json_dict()
    b = verify_groebner(inst).to_json_dict()
    a.pop("generated_at")
    b.pop("generated_at")
    assert a == b


def test_verify_reduced_flags_divisible_monomial():
    order = DillOrder()
    g = parse_poly("u1_2", "P", 3)
    h = parse_poly("u1_3 + u1_2*x1", "P", 3)
    assert not verify_reduced([g, h], order)
    assert verify_reduced([g, parse_poly("u1_3 + x1", "P", 3)], order)


def test_buchberger_complete_relations_add_nothing():
    inst = classical(4)
    basis = build_relations(inst).polynomials()
    order = DillOrder()
    completed = buchberger_complete(basis, order)
    assert len(completed) == len(basis)
    assert {leading_term(g, order)[0] for g in completed} == {
        leading_term(g, order)[0] for g in basis
    }


def test_buchberger_complete_single_element():
    p = parse_poly("x1^2", "P", 2)
    assert buchberger_complete([p], DillOrder()) == [p]


def test_buchberger_complete_linear_elimination():
    order = DillOrder()
    g1 = parse_poly("u1_2", "P", 2)
    g2 = parse_poly("u1_2 + x1", "P", 2)
    completed = buchberger_complete([g1, g2], order)
    assert parse_poly("x1", "P", 2) in completed


def test_buchberger_complete_under_plain_lex():
    # independent cross-check order: completion still adds nothing for d=4
    inst = instance_with_degrees(random.Random(127), (1, 2, 1, 2))
    basis = build_relations(inst).polynomials()
    completed = buchberger_complete(basis, PLexOrder(), pair_budget=10_000)
    # plain lex has different leads, so completion may add elements, but
    # it must terminate and still generate the same ideal: every original
    # relation reduces to zero against the completed basis
    for g in basis:
        assert reduce(g, completed, PLexOrder()).is_zero()


def test_buchberger_budget_error():
    inst = classical(5)
    basis = build_relations(inst).polynomials()
    with pytest.raises(BudgetExceededError):
        buchberger_complete(basis, DillOrder(), pair_budget=3)


def test_buchberger_empty_input_rejected():
    with pytest.raises(ValueError):
        buchberger_complete([], DillOrder())
