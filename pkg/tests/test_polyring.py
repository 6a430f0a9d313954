import itertools
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from omincheck.errors import InputError
from omincheck.polyring import (Monomial, Polynomial, VariableSet, buchberger_complete,
                                buchberger_verify, compare_degrevlex, divide, initial_ideal,
                                initial_monomial, reduce, s_polynomial)


def P(text, vars):
    return Polynomial.parse(text, vars)


def x(*vs):
    return Monomial.product(vs)


def degrevlex_by_definition(m1, m2, vars):
    """Straight from the definition: degree first, then rightmost nonzero of a-b negative."""
    a, b = m1.as_dict(), m2.as_dict()
    da, db = m1.degree, m2.degree
    if da != db:
        return 1 if da > db else -1
    diff = [a.get(v, 0) - b.get(v, 0) for v in vars.precedence]
    for d in reversed(diff):
        if d:
            return 1 if d < 0 else -1
    return 0


V3 = VariableSet.standard(3)


class TestCompare:
    def test_single_variables(self):
        assert compare_degrevlex(x(1), x(2), V3) == 1

    def test_rightmost_entry_negative(self):
        # (1, 1, -2): rightmost nonzero is negative
        assert compare_degrevlex(x(1, 2), x(3, 3), V3) == 1

    def test_degree_dominates(self):
        assert compare_degrevlex(x(1, 1, 1), x(1, 2), V3) == 1
        assert compare_degrevlex(x(3), x(1, 1), V3) == -1

    def test_equal(self):
        assert compare_degrevlex(x(1, 3), x(3, 1), V3) == 0

    def test_out_of_range(self):
        with pytest.raises(InputError):
            compare_degrevlex(x(4), x(1), V3)

    def test_precedence_respected(self):
        V = VariableSet(3, (3, 1, 2))
        assert compare_degrevlex(x(3), x(1), V) == 1
        assert compare_degrevlex(x(1, 3), x(3, 2), V) == 1

    def test_bad_precedence(self):
        with pytest.raises(InputError):
            VariableSet(3, (1, 1, 2))


monomials4 = st.dictionaries(st.integers(1, 4), st.integers(1, 3), max_size=4).map(Monomial.from_dict)
precedences4 = st.permutations([1, 2, 3, 4]).map(lambda p: VariableSet(4, tuple(p)))


@given(monomials4, monomials4, precedences4)
def test_compare_matches_definition(a, b, V):
    assert compare_degrevlex(a, b, V) == degrevlex_by_definition(a, b, V)


@given(monomials4, monomials4, monomials4, precedences4)
def test_multiplicative(a, b, m, V):
    c = compare_degrevlex(a, b, V)
    assert compare_degrevlex(m * a, m * b, V) == c
    assert compare_degrevlex(a, b, V) == -compare_degrevlex(b, a, V)
    assert compare_degrevlex(a * m, a, V) >= 0


@given(st.lists(st.integers(1, 6), min_size=2, max_size=2, unique=True),
       st.lists(st.integers(1, 6), min_size=2, max_size=2, unique=True),
       st.permutations(range(1, 7)))
def test_squarefree_quadrics_strictly_ordered(u, v, perm):
    V = VariableSet(6, tuple(perm))
    m1, m2 = x(*u), x(*v)
    if m1 != m2:
        assert abs(compare_degrevlex(m1, m2, V)) == 1


class TestInitialMonomial:
    def test_degree_dominance(self):
        assert initial_monomial(P("x1 + x2^2", V3), V3) == x(2, 2)

    def test_single_monomial(self):
        assert initial_monomial(P("3*x1*x3", V3), V3) == x(1, 3)

    def test_zero(self):
        with pytest.raises(InputError):
            initial_monomial(Polynomial({}, V3), V3)

    def test_minor_avoiding_smallest_variable(self):
        # 2x2 minor x_ij x_kl - x_il x_kj; the term free of the smallest variable leads
        V = VariableSet.standard(4)  # x1=x_ij, x2=x_il, x3=x_kj, x4=x_kl
        f = P("x1*x4 - x2*x3", V)
        assert initial_monomial(f, V) == x(2, 3)
        V2 = VariableSet(4, (1, 4, 2, 3))
        assert initial_monomial(f, V2) == x(1, 4)


class TestReduce:
    def test_one_step(self):
        f, g = P("x1^2*x2", V3), P("x1^2 - x2", V3)
        r = reduce(f, [g], V3)
        assert r == P("x2^2", V3)
        # re-expand: f = x2*g + r
        assert P("x2", V3) * g + r == f

    def test_normal_form_unchanged(self):
        f = P("x2*x3 + x3^2", V3)
        assert reduce(f, [P("x1^2 - x2", V3)], V3) == f

    def test_monomial_generator_kills(self):
        V = VariableSet.standard(6)
        assert reduce(P("x1*x2*x5", V), [P("x2*x5", V)], V).is_zero()

    def test_first_divisor_wins(self):
        V = VariableSet.standard(2)
        G1 = [P("x1 - x2", V), P("x1 + x2", V)]
        assert reduce(P("x1", V), G1, V) == P("x2", V)
        assert reduce(P("x1", V), G1[::-1], V) == P("-x2", V)

    def test_rational_coefficients(self):
        V = VariableSet.standard(2)
        r = reduce(P("x1^2", V), [P("3*x1 - x2", V)], V)
        assert r == Polynomial({x(2, 2): Fraction(1, 9)}, V)


poly_terms = st.lists(st.tuples(st.integers(-3, 3), monomials4), max_size=5)


@settings(max_examples=60, deadline=None)
@given(poly_terms, st.lists(poly_terms, min_size=1, max_size=3), precedences4)
def test_division_identity(fterms, gterms, V):
    f = Polynomial(fterms, V)
    G = [g for g in (Polynomial(t, V) for t in gterms) if not g.is_zero()]
    if not G:
        return
    qs, r = divide(f, G, V)
    total = r
    for q, g in zip(qs, G):
        total = total + q * g
    assert total == f
    lms = [g.lm for g in G]
    assert not any(l.divides(m) for m in r.monomials() for l in lms)
    assert reduce(f, G, V) == r


class TestSPolynomial:
    def test_three_by_three_case(self):
        # variables m11 m12 m13 m21 m22 m23 m31 m32 m33 -> 1..9, precedence making
        # m11*m22 and m22*m33 the initial terms
        V = VariableSet(9, (1, 5, 9, 3, 7, 2, 4, 6, 8))
        f = P("x1*x5 - x2*x4", V)
        g = P("x5*x9 - x6*x8", V)
        assert f.lm == x(1, 5) and g.lm == x(5, 9)
        assert s_polynomial(f, g, V) == P("x1*x6*x8 - x2*x4*x9", V)

    def test_self(self):
        f = P("x1*x2 - x3^2", V3)
        assert s_polynomial(f, f, V3).is_zero()

    def test_monomials(self):
        assert s_polynomial(P("x1*x2", V3), P("x2*x3", V3), V3).is_zero()


class TestBuchberger:
    def test_single_generator(self):
        V = VariableSet.standard(4)
        assert buchberger_verify([P("x1*x4 - x2*x3", V)], V).ok

    def test_failing_pair(self):
        res = buchberger_verify([P("x1^2 - x2", V3), P("x1^2 - x3", V3)], V3)
        assert not res.ok
        assert res.failing_pair == (0, 1)
        assert res.remainder in (P("x2 - x3", V3), P("x3 - x2", V3))

    def test_completion_adds_linear(self):
        gb = buchberger_complete([P("x1^2 - x2", V3), P("x1^2 - x3", V3)], V3)
        assert P("x2 - x3", V3) in gb
        assert buchberger_verify(gb, V3).ok

    def test_monomial_basis_unchanged(self):
        V = VariableSet.standard(6)
        G = [P(s, V) for s in ("x1*x2", "x2*x3", "x4*x5")]
        assert sorted(map(str, buchberger_complete(G, V))) == sorted(map(str, G))

    def test_initial_ideal(self):
        V = VariableSet.standard(4)
        assert initial_ideal([P("x1*x4 - x2*x3", V)], V) == [x(2, 3)]
        assert initial_ideal([P("x1*x4 - x2*x3", V)], VariableSet(4, (1, 4, 2, 3))) == [x(1, 4)]
        assert initial_ideal([], V) == []

    def test_initial_ideal_drops_redundant(self):
        V = VariableSet.standard(3)
        assert initial_ideal([P("x1*x2", V), P("x1^2*x2", V), P("x3", V)], V) == [x(3), x(1, 2)]


def sympy_reduced_gb(G, V):
    """Independent oracle: sympy's grevlex with generators listed greatest first."""
    syms = sympy.symbols(" ".join(f"x{v}" for v in V.precedence))
    exprs = [sympy.sympify(str(g).replace("^", "**")) for g in G]
    gb = sympy.groebner(exprs, *syms, order="grevlex", domain="QQ")
    return {sympy.expand(e) for e in gb.exprs}


def as_sympy(G):
    return {sympy.expand(sympy.sympify(str(g).replace("^", "**"))) for g in G}


@pytest.mark.parametrize("seed", range(6))
def test_completion_matches_sympy(seed):
    rng = random.Random(seed)
    V = VariableSet.shuffled(4, rng)
    G = []
    for _ in range(3):
        terms = [(rng.randint(-2, 2), Monomial.from_dict({v: rng.randint(0, 2) for v in range(1, 5)}))
                 for _ in range(3)]
        g = Polynomial(terms, V)
        if not g.is_zero():
            G.append(g)
    if not G:
        return
    ours = buchberger_complete(G, V)
    assert buchberger_verify(ours, V).ok
    assert all(g.lc == 1 for g in ours)
    assert as_sympy(ours) == sympy_reduced_gb(G, V)


def test_completion_matches_sympy_determinantal():
    V = VariableSet.standard(9)
    minors = []
    for (r1, r2), (c1, c2) in itertools.product(itertools.combinations(range(3), 2), repeat=2):
        a, b = 3 * r1 + c1 + 1, 3 * r2 + c2 + 1
        c, d = 3 * r1 + c2 + 1, 3 * r2 + c1 + 1
        minors.append(P(f"x{a}*x{b} - x{c}*x{d}", V))
    minors.append(P("x1 + x5 + x9", V))
    assert as_sympy(buchberger_complete(minors, V)) == sympy_reduced_gb(minors, V)


def test_parse_rejects_garbage():
    with pytest.raises(InputError):
        Polynomial.parse("x1 + y", V3)
    with pytest.raises(InputError):
        Polynomial.parse("x9", V3)


def test_float_coefficients_rejected():
    with pytest.raises(InputError):
        Polynomial({x(1): 0.5}, V3)
