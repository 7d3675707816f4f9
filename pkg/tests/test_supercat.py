from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from finmot.errors import SizeCapError
from finmot.supercat import (
    EVEN,
    ODD,
    SuperMorphism,
    SuperSpace,
    TruncatedScalar,
    braiding,
    coevaluation,
    dim,
    dual,
    evaluation,
    exp_nilpotent,
    invert_unit,
    is_hom_trivial,
    permutation_action,
    realization,
    tensor,
    tensor_mor,
    tensor_power,
    trace,
)
from finmot.symgroup import Permutation, all_permutations
from finmot.lifting import random_endomorphism, seeded_rng


# --- scalar ring ------------------------------------------------------------------

rationals = st.fractions(min_value=-4, max_value=4, max_denominator=6)


def scalars(k):
    return st.lists(rationals, min_size=k, max_size=k).map(TruncatedScalar)


@given(scalars(3), scalars(3), scalars(3))
def test_scalar_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    zero, one = TruncatedScalar.zero(3), TruncatedScalar.one(3)
    assert a + zero == a
    assert a * one == a
    assert a + (-a) == zero


@given(scalars(4))
def test_scalar_unit_iff_constant_term(a):
    assert a.is_unit() == bool(a.coeffs[0])
    if a.is_unit():
        assert a * a.inverse() == TruncatedScalar.one(4)


def test_eps_is_nilpotent_of_index_k():
    for k in range(1, 6):
        e = TruncatedScalar.eps(k)
        power = TruncatedScalar.one(k)
        for _ in range(k - 1):
            power = power * e
            assert not power.is_zero()
        assert (power * e).is_zero()


def test_scalar_string():
    s = TruncatedScalar([Fraction(1), Fraction(0), Fraction(-2)])
    assert str(s) == "1 + -2*eps^2"


# --- spaces and morphism validation ---------------------------------------------------


def test_tensor_parity_and_weight():
    x = SuperSpace.line(EVEN, 2, 1)
    y = SuperSpace.line(ODD, 3, 1)
    t = tensor(x, y)
    assert t.basis == ((ODD, 5),)
    assert dim(t).realization() == -1


def test_dim_values():
    assert dim(SuperSpace.standard(3, 0, 1)).realization() == 3
    assert dim(SuperSpace.standard(1, 1, 1)).realization() == 0
    assert dim(SuperSpace.standard(0, 2, 2)).realization() == -2


def test_tensor_dim_multiplicative():
    for (p1, q1, p2, q2) in [(2, 1, 1, 1), (1, 0, 0, 1), (2, 2, 2, 1)]:
        x = SuperSpace.standard(p1, q1, 2)
        y = SuperSpace.standard(p2, q2, 2)
        # brute-force route: supertrace of the identity on the product
        brute = trace(SuperMorphism.identity(tensor(x, y)))
        assert brute == dim(tensor(x, y)) == dim(x) * dim(y)
        assert dim(dual(x)) == dim(x)


def test_morphism_rejects_parity_violation():
    x = SuperSpace.standard(1, 1, 1)
    with pytest.raises(ValueError):
        SuperMorphism.from_entries(x, x, {(0, 1): 1})


def test_morphism_rejects_weight_violation_at_eps0_only():
    x = SuperSpace(((EVEN, 0), (EVEN, 2)), 2)
    with pytest.raises(ValueError):
        SuperMorphism.from_entries(x, x, {(0, 1): 1})
    # an eps entry between different weights is allowed
    f = SuperMorphism.from_entries(x, x, {(0, 1): TruncatedScalar.eps(2)})
    assert not f.is_zero() and f.is_hom_trivial()


def test_tensor_mor_of_identities():
    x = SuperSpace.standard(2, 1, 2)
    y = SuperSpace.standard(1, 1, 2)
    assert tensor_mor(
        SuperMorphism.identity(x), SuperMorphism.identity(y)
    ) == SuperMorphism.identity(tensor(x, y))


# --- braiding ---------------------------------------------------------------------------


def test_braiding_signs_on_lines():
    even = SuperSpace.line(EVEN, 0, 1)
    odd = SuperSpace.line(ODD, 1, 1)
    assert braiding(even, even).entry(0, 0).realization() == 1
    assert braiding(odd, odd).entry(0, 0).realization() == -1


@pytest.mark.parametrize("p,q", [(1, 0), (0, 1), (1, 1), (2, 1), (2, 2)])
def test_braiding_is_involutive(p, q):
    x = SuperSpace.standard(p, q, 2)
    y = SuperSpace.standard(min(p, 1), q, 2)
    back = braiding(y, x).compose(braiding(x, y))
    assert back == SuperMorphism.identity(tensor(x, y))


def test_braiding_naturality_for_even_morphisms():
    x = SuperSpace.standard(2, 1, 2)
    y = SuperSpace.standard(1, 2, 2)
    rng = seeded_rng(11)
    f = random_endomorphism(x, rng)
    g = random_endomorphism(y, rng)
    left = tensor_mor(g, f).compose(braiding(x, y))
    right = braiding(x, y).compose(tensor_mor(f, g))
    assert left == right


# --- permutation action ------------------------------------------------------------------


def test_permutation_action_identity():
    x = SuperSpace.standard(1, 1, 1)
    assert permutation_action(Permutation.identity(3), x, 3) == SuperMorphism.identity(
        tensor_power(x, 3)
    )


def test_permutation_action_is_homomorphism_on_s3():
    x = SuperSpace.standard(1, 1, 1)
    perms = list(all_permutations(3))
    acts = {p.images: permutation_action(p, x, 3) for p in perms}
    for a in perms:
        for b in perms:
            assert acts[(a * b).images] == acts[a.images].compose(acts[b.images])


def test_permutation_action_matches_braiding_for_transposition():
    x = SuperSpace.standard(2, 2, 2)
    swap = permutation_action(Permutation((1, 0)), x, 2)
    assert swap == braiding(x, x)


def test_permutation_action_size_guard():
    x = SuperSpace.standard(2, 2, 1)
    with pytest.raises(SizeCapError):
        permutation_action(Permutation.identity(7), x, 7)


@pytest.mark.parametrize("p,q", [(1, 0), (0, 1), (2, 0), (0, 2), (1, 1), (2, 1), (1, 2), (2, 2)])
def test_supertrace_of_permutation_action(p, q):
    x = SuperSpace.standard(p, q, 1)
    for n in range(1, 5):
        for sigma in all_permutations(n):
            got = trace(permutation_action(sigma, x, n))
            assert got.eps_part_is_zero()
            assert got.realization() == Fraction(p - q) ** len(sigma.cycles())


# --- duality, trace, realization ----------------------------------------------------------


@pytest.mark.parametrize("p,q", [(2, 1), (1, 2), (0, 2), (3, 0)])
def test_snake_identities(p, q):
    x = SuperSpace.standard(p, q, 2)
    ev, cv = evaluation(x), coevaluation(x)
    idx = SuperMorphism.identity(x)
    idxd = SuperMorphism.identity(dual(x))
    assert tensor_mor(ev, idx).compose(tensor_mor(idx, cv)) == idx
    assert tensor_mor(idxd, ev).compose(tensor_mor(cv, idxd)) == idxd


def test_trace_agrees_with_categorical_route():
    x = SuperSpace.standard(2, 1, 3)
    rng = seeded_rng(5)
    for _ in range(5):
        f = random_endomorphism(x, rng)
        chain = (
            evaluation(x)
            .compose(tensor_mor(f, SuperMorphism.identity(dual(x))))
            .compose(braiding(dual(x), x))
            .compose(coevaluation(x))
        )
        assert chain.entry(0, 0) == trace(f)


def test_trace_is_symmetric():
    x = SuperSpace.standard(2, 1, 2)
    rng = seeded_rng(23)
    for _ in range(10):
        f = random_endomorphism(x, rng)
        g = random_endomorphism(x, rng)
        assert trace(f.compose(g)) == trace(g.compose(f))


def test_trace_rejects_non_endomorphism():
    x = SuperSpace.standard(1, 0, 1)
    y = SuperSpace.standard(2, 0, 1)
    with pytest.raises(ValueError):
        trace(SuperMorphism.zero(x, y))


def test_dual_contravariant():
    x = SuperSpace.standard(2, 1, 2)
    rng = seeded_rng(3)
    f = random_endomorphism(x, rng)
    g = random_endomorphism(x, rng)
    assert f.compose(g).dual() == g.dual().compose(f.dual())
    assert SuperMorphism.identity(x).dual() == SuperMorphism.identity(dual(x))


# --- realization functor ------------------------------------------------------------------


def test_realization_functorial():
    x = SuperSpace.standard(2, 2, 3)
    rng = seeded_rng(17)
    for _ in range(10):
        f = random_endomorphism(x, rng)
        g = random_endomorphism(x, rng)
        assert realization(g.compose(f)) == realization(g).compose(realization(f))
    assert realization(SuperMorphism.identity(x)) == SuperMorphism.identity(
        x.with_k(1)
    )


def test_realization_commutes_with_trace_and_tensor():
    x = SuperSpace.standard(2, 1, 3)
    rng = seeded_rng(29)
    f = random_endomorphism(x, rng)
    g = random_endomorphism(x, rng)
    assert trace(realization(f)).coeffs[0] == trace(f).realization()
    assert realization(tensor_mor(f, g)) == tensor_mor(realization(f), realization(g))


def test_hom_trivial_detection():
    x = SuperSpace.standard(1, 1, 2)
    f = SuperMorphism.from_entries(x, x, {(0, 0): TruncatedScalar.eps(2)})
    assert is_hom_trivial(f)
    assert realization(f).is_zero()
    assert not is_hom_trivial(SuperMorphism.identity(x))
    assert is_hom_trivial(SuperMorphism.identity(x) - SuperMorphism.identity(x))


# --- exact inversion -----------------------------------------------------------------------


def test_invert_unit_roundtrip():
    x = SuperSpace.standard(2, 1, 3)
    rng = seeded_rng(41)
    ident = SuperMorphism.identity(x)
    for _ in range(10):
        f = random_endomorphism(x, rng)
        if not f.realization().is_idempotent():
            try:
                g = invert_unit(f)
            except ZeroDivisionError:
                continue
            assert f.compose(g) == ident
            assert g.compose(f) == ident


def test_exp_nilpotent_inverse_pair():
    x = SuperSpace.standard(2, 2, 4)
    rng = seeded_rng(43)
    n = random_endomorphism(x, rng)
    eps_n = n - realization(n).promoted(4)  # strip the eps^0 layer
    u = exp_nilpotent(eps_n)
    v = exp_nilpotent(-eps_n)
    assert u.compose(v) == SuperMorphism.identity(x)
