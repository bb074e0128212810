"""Seeded random generators shared by the test modules."""

from fractions import Fraction

from constalg import (
    AMonomial,
    PMonomial,
    Polynomial,
    ProblemInstance,
    ring_a,
    ring_p,
    u_pairs,
)


def random_instance(rng, d, max_m=4, coeff_bound=5, dense=False):
    """Instance with nonconstant f_i; coefficients in [-coeff_bound, coeff_bound]."""
    coeff_lists = []
    for _ in range(d):
        m = rng.randint(1, max_m)
        coeffs = []
        for _ in range(m):
            c = rng.randint(-coeff_bound, coeff_bound)
            if dense and c == 0:
                c = rng.choice([-1, 1])
            coeffs.append(c)
        lead = rng.choice([c for c in range(-coeff_bound, coeff_bound + 1) if c])
        coeffs.append(lead)
        coeff_lists.append(coeffs)
    return ProblemInstance.from_coeffs(d, coeff_lists)


def instance_with_degrees(rng, degrees, coeff_bound=5, dense=False):
    """Instance whose f_i have exactly the given degrees."""
    nonzero = [c for c in range(-coeff_bound, coeff_bound + 1) if c]
    coeff_lists = []
    for m in degrees:
        coeffs = [
            rng.choice(nonzero) if dense else rng.randint(-coeff_bound, coeff_bound)
            for _ in range(m)
        ]
        coeffs.append(rng.choice(nonzero))
        coeff_lists.append(coeffs)
    return ProblemInstance.from_coeffs(len(degrees), coeff_lists)


def random_amonomial(rng, d, max_exp=3):
    xexp = tuple(rng.randint(0, max_exp) for _ in range(d))
    yexp = tuple(rng.randint(0, max_exp) for _ in range(d))
    return AMonomial(xexp, yexp)


def random_pmonomial(rng, d, max_x=3, max_u=2, max_factors=3):
    xexp = tuple(rng.randint(0, max_x) for _ in range(d))
    pairs = u_pairs(d)
    chosen = rng.sample(pairs, k=min(len(pairs), rng.randint(0, max_factors)))
    udict = {pair: rng.randint(1, max_u) for pair in chosen}
    return PMonomial(xexp, tuple(udict.items()))


def random_coeff(rng):
    num = rng.randint(-6, 6)
    den = rng.choice([1, 1, 1, 2, 3])
    return Fraction(num, den)


def random_apoly(rng, d, terms=3, max_exp=3):
    data = {}
    for _ in range(terms):
        data[random_amonomial(rng, d, max_exp)] = random_coeff(rng)
    return Polynomial(ring_a(d), data)


def random_ppoly(rng, d, terms=3, max_x=3, max_u=2, max_factors=3):
    data = {}
    for _ in range(terms):
        data[random_pmonomial(rng, d, max_x, max_u, max_factors)] = random_coeff(rng)
    return Polynomial(ring_p(d), data)


def random_pmonomial_of_degree(rng, d, max_degree):
    """P-monomial with total internal degree at most max_degree."""
    pairs = u_pairs(d)
    xexp = [0] * d
    udict = {}
    for _ in range(rng.randint(0, max_degree)):
        if pairs and rng.random() < 0.5:
            pair = rng.choice(pairs)
            udict[pair] = udict.get(pair, 0) + 1
        else:
            xexp[rng.randrange(d)] += 1
    return PMonomial(tuple(xexp), tuple(udict.items()))


def random_ppoly_of_degree(rng, d, max_degree, terms):
    data = {}
    for _ in range(terms):
        data[random_pmonomial_of_degree(rng, d, max_degree)] = random_coeff(rng)
    return Polynomial(ring_p(d), data)
