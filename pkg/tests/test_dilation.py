import random
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from nldilation import (
    AssumptionError,
    Dependence,
    NLModel,
    NotApplicableError,
    Partition,
    PreconditionError,
    SampleSpace,
    UnsupportedModelError,
    UsageError,
    classify_dependence,
    epsilon_contamination,
    make_submodel,
    natural_extension,
    pari_mutuel,
    total_variation,
)
from nldilation.dilation import (
    NONE,
    STRICT,
    WEAK_NONTRIVIAL,
    WEAK_TRIVIAL,
    characterize_dilation,
    check_constriction,
    check_dilation,
    coarsening_hypotheses,
    dependence_dilation,
    elle,
    elle_sign_test,
    epsilon_dilation,
    extent,
    extreme_dilation,
    find_dilating_coarser,
    imprecision_increase_extent,
    imprecision_increase_guarantee,
    imprecision_variation,
    non_correlation_dilation,
)
from nldilation.sampling import (
    random_event,
    random_independent_case,
    random_p0,
    random_partition,
    random_space,
    random_vbm,
)

from strategies import (
    coherent_models, events, independent_cases, models_with_independent_case, partitions, space_of, vbms,
)

F = Fraction


def _eps_uniform(n, eps="1/10"):
    return make_submodel(epsilon_contamination(eps), space_of(n), [F(1, n)] * n)


def _mild_vbm(rng, S):
    """VBM with no zero P0 masses and small |a|."""
    a = -F(rng.randint(0, 4), 40)
    return NLModel(S, random_p0(rng, S.n, zero_rate=0), a, F(rng.randint(1, 20), 20) - a)


def _independent_draws(rng, count, atoms=(4, 7), model=random_vbm):
    """``count`` draws of ``(model, A, partition)`` with ``A`` independent of the partition."""
    done = 0
    while done < count:
        S = random_space(rng.randint(*atoms))
        case = random_independent_case(rng, S)
        if case is None:
            continue
        done += 1
        yield (model(rng, S), *case)


def _halves_by_pairs(n):
    """First half of the atoms and the partition pairing atom i with atom i + n/2."""
    S = space_of(n)
    h = n // 2
    A = S.event(*S.atoms[:h])
    P = Partition.from_labels(S, [[S.atoms[i], S.atoms[i + h]] for i in range(h)])
    return A, P


# -- direct check and characterisation -----------------------------------------


def test_example_dilation(m1):
    model, A, parts = m1
    report = check_dilation(model, A, parts, "strict")
    assert report.verdict == STRICT and report.dilates
    assert (report.lower, report.upper) == (F(81, 200), F(141, 200))
    B1, B2, B3 = parts
    assert check_dilation(model, A, Partition([B1 | B2, B3])).dilates


def test_example_labels(m1):
    model, A, parts = m1
    report = characterize_dilation(model, A, parts)
    assert [b.labels for b in report.per_block] == [("a1", "b2"), ("a2", "b2"), ("a1", "b1")]
    assert report.verdict == STRICT


def test_mode_is_validated(m1):
    model, A, parts = m1
    with pytest.raises(UsageError):
        check_dilation(model, A, parts, "loose")


def test_characterize_gates(m1):
    model, A, parts = m1
    S = model.space
    with pytest.raises(AssumptionError) as err:
        characterize_dilation(model, S.atom("w1"), parts)
    assert err.value.assumption == "A1"
    S4 = space_of(4)
    pmm = make_submodel(pari_mutuel("1/5"), S4, ["0", "1/2", "0", "1/2"])
    A4, P4 = S4.event("w1", "w3"), Partition.from_labels(S4, [["w1", "w2"], ["w3", "w4"]])
    with pytest.raises(AssumptionError) as err:
        characterize_dilation(pmm, A4, P4)
    assert err.value.assumption == "A2"
    vac = NLModel(S4, ["1/4"] * 4, -1, 1)
    A4, P4 = _halves_by_pairs(4)
    with pytest.raises(AssumptionError) as err:
        characterize_dilation(vac, A4, P4)
    assert err.value.assumption == "A3"


def test_characterize_rejects_incoherent():
    S = space_of(3)
    m = NLModel(S, ["1/5", "1/5", "3/5"], "-1/2", "2")
    with pytest.raises(UnsupportedModelError):
        characterize_dilation(m, S.atom("w1"), Partition.from_labels(S, [["w1", "w2"], ["w3"]]))


def _independent_case(m, A, P):
    flags = check_dilation(m, A, P).assumptions
    return all(flags.values())


@settings(max_examples=150)
@given(models_with_independent_case(coherent_models, 4, 8))
def test_characterization_matches_direct_check(case):
    m, (A, P) = case
    assume(_independent_case(m, A, P))
    direct = check_dilation(m, A, P)
    fast = characterize_dilation(m, A, P)
    assert fast.dilates == direct.dilates
    assert fast.verdict == direct.verdict


def test_characterization_sweep_is_not_vacuous():
    hits = dilating = 0
    for m, A, P in _independent_draws(random.Random(7), 600):
        if not _independent_case(m, A, P):
            continue
        hits += 1
        direct = check_dilation(m, A, P)
        assert characterize_dilation(m, A, P).verdict == direct.verdict
        dilating += direct.dilates
    assert hits > 200 and 0 < dilating < hits


def test_degenerate_interval_gives_vacuous_conditionals():
    seen = 0
    for m, A, P in _independent_draws(random.Random(3), 1500, (4, 6)):
        if (m.lower(A), m.upper(A)) != (0, 1):
            continue
        seen += 1
        for b in check_dilation(m, A, P).per_block:
            assert (b.lower, b.upper) == (0, 1)
    assert seen > 20


@st.composite
def _mild_models(draw, min_atoms, max_atoms):
    """Coherent models with positive P0 and a close to 0, so lower(A & B) is rarely 0."""
    n = draw(st.integers(min_atoms, max_atoms))
    weights = draw(st.lists(st.integers(1, 6), min_size=n, max_size=n))
    p0 = [F(w, sum(weights)) for w in weights]
    a = -F(draw(st.integers(0, 3)), 40)
    if draw(st.booleans()):
        b = F(draw(st.integers(1, 20)), 20) - a  # VBM: 0 < a + b <= 1
    else:
        b = 1 - 2 * a + F(draw(st.integers(0, 3)), 80)  # HBM region when a < 0
    m = NLModel(space_of(n), p0, a, b)
    assume(m.is_coherent)
    return m


@settings(max_examples=150)
@given(models_with_independent_case(_mild_models, 4, 7))
def test_conditional_p0_criterion(case):
    # away from the zero branches, dilation is a statement about P0(A | not B)
    m, (A, P) = case
    assume(_independent_case(m, A, P))
    positive = [B for B in P if m.lower(B) > 0]
    assume(all(m.prob0(~B) > 0 for B in P))
    assume(all(m.lower(A & B) > 0 and m.lower(~A & B) > 0 for B in positive))
    lo, up = m.lower(A), m.upper(A)
    expected = all(
        lo <= m.prob0(A & ~B) / m.prob0(~B) <= up for B in positive
    )
    assert check_dilation(m, A, P).dilates == expected


# -- epsilon-contamination -----------------------------------------------------


def test_epsilon_example(m2):
    S = m2.space
    A = S.event("w1", "w2")
    P = Partition.from_labels(S, [["w1", "w3"], ["w2", "w4"]])
    assert epsilon_dilation(m2, A, P)
    assert epsilon_dilation(m2, A, P, strict=True)
    assert characterize_dilation(m2, A, P).dilates
    # covariance 1/20 exceeds eps P0(A) P0(not B) = 1/40
    corr = make_submodel(epsilon_contamination("1/10"), S, ["3/10", "1/5", "1/5", "3/10"])
    assert not epsilon_dilation(corr, A, P)
    assert not check_dilation(corr, A, P).dilates


def test_epsilon_preconditions(m1, m2):
    model, A, parts = m1
    with pytest.raises(PreconditionError):
        epsilon_dilation(model, A, parts)
    S = m2.space
    skew = make_submodel(epsilon_contamination("1/10"), S, ["1/2", "1/2", "0", "0"])
    with pytest.raises(PreconditionError):
        epsilon_dilation(skew, S.event("w1", "w3"), Partition.from_labels(S, [["w1", "w2"], ["w3", "w4"]]))


@st.composite
def _epsilon_cases(draw):
    n = draw(st.integers(4, 7))
    S = space_of(n)
    eps = F(draw(st.integers(1, 19)), 20)
    weights = draw(st.lists(st.integers(1, 6), min_size=n, max_size=n))
    p0 = [F(w, sum(weights)) for w in weights]
    return make_submodel(epsilon_contamination(eps), S, p0), draw(independent_cases(S))


@settings(max_examples=150)
@given(_epsilon_cases())
def test_epsilon_matches_characterization(case):
    m, (A, P) = case
    assume(_independent_case(m, A, P))
    assert epsilon_dilation(m, A, P) == characterize_dilation(m, A, P).dilates
    assert epsilon_dilation(m, A, P, strict=True) == check_dilation(m, A, P, "strict").dilates


# -- the L function ------------------------------------------------------------


def test_elle_examples(m1):
    model, A, (B1, B2, B3) = m1
    S = model.space
    value = elle(model, A, ~B1)
    assert value == F(7, 20) - F(11, 10) * F(11, 20) * F(7, 10) + F(1, 5) * F(7, 10)
    assert value == F(133, 2000) and value > 0
    assert elle(model, A, S.empty) == 0
    assert elle(model, A, S.omega) >= model.prob0(A) - model.lower(A) >= 0


def test_elle_needs_vbm():
    S = space_of(2)
    with pytest.raises(UnsupportedModelError):
        elle(NLModel(S, [1, 0], "-1/4", "3/2"), S.atom("w1"), S.atom("w2"))


def test_sign_test_examples(m1):
    model, A, (B1, B2, B3) = m1
    assert elle_sign_test(model, A, B3) == (True, True)
    assert elle_sign_test(model, A, B1).lower_side is True
    S = model.space
    with pytest.raises(PreconditionError):
        elle_sign_test(model, A, S.atom("w1"))


@given(vbms(max_atoms=6).flatmap(lambda m: st.tuples(
    st.just(m), events(m.space), st.lists(events(m.space), min_size=1, max_size=4))))
def test_elle_is_additive(case):
    m, A, pieces = case
    disjoint, used = [], m.space.empty
    for C in pieces:
        C = C & ~used
        disjoint.append(C)
        used = used | C
    assert elle(m, A, used) == sum(elle(m, A, C) for C in disjoint)


@given(vbms(max_atoms=6).flatmap(lambda m: st.tuples(st.just(m), events(m.space), partitions(m.space))))
def test_elle_over_a_partition(case):
    m, A, P = case
    assert sum(elle(m, A, B) for B in P) >= m.prob0(A) - m.lower(A) >= 0


@given(vbms(max_atoms=6).flatmap(lambda m: st.tuples(st.just(m), events(m.space), events(m.space))))
def test_sign_test_matches_direct_comparison(case):
    m, A, B = case
    assume(m.lower(B) > 0)
    sign = elle_sign_test(m, A, B)
    ne = natural_extension(m, A, B)
    if sign.lower_side is not None:
        assert sign.lower_side == (ne.lower <= m.lower(A))
    if sign.upper_side is not None:
        assert sign.upper_side == (ne.upper >= m.upper(A))
    if m.lower(A) == 0:
        assert sign.lower_side is True


# -- coarsening ----------------------------------------------------------------


def test_example_coarsening(m1):
    model, A, parts = m1
    hyp = coarsening_hypotheses(model, A, parts)
    assert not hyp.holds
    assert hyp.labels == {"a1": False, "a2": False, "b1": False, "b2": False}
    B1, B2, B3 = parts
    assert find_dilating_coarser(model, A, parts) == Partition([B1 | B2, B3])
    assert non_correlation_dilation(model, A, parts).holds is False


def test_coarsening_hypotheses_hold_for_uniform_epsilon():
    m = _eps_uniform(6)
    S = m.space
    A = S.event("w1", "w2", "w3")
    P = Partition.from_labels(S, [["w1", "w4"], ["w2", "w5"], ["w3", "w6"]])
    hyp = coarsening_hypotheses(m, A, P)
    assert hyp.holds and hyp.labels["a2"] and hyp.labels["b2"]
    assert find_dilating_coarser(m, A, P) is not None
    assert find_dilating_coarser(m, A, P, "strict") is not None


def test_coarsening_preconditions(m1):
    model, A, parts = m1
    B1, B2, B3 = parts
    with pytest.raises(PreconditionError):
        coarsening_hypotheses(model, A, Partition([B1 | B2, B3]))
    vac = NLModel(space_of(6), ["1/6"] * 6, -1, 1)
    S = vac.space
    P = Partition.from_labels(S, [["w1", "w4"], ["w2", "w5"], ["w3", "w6"]])
    with pytest.raises(AssumptionError) as err:
        coarsening_hypotheses(vac, S.event("w1", "w2", "w3"), P)
    assert err.value.assumption == "A3"


def test_no_coarser_partition_of_two_blocks(m2):
    S = m2.space
    P = Partition.from_labels(S, [["w1", "w3"], ["w2", "w4"]])
    assert find_dilating_coarser(m2, S.event("w1", "w2"), P) is None


def test_correlated_p0_has_no_dilating_coarsening():
    S = space_of(6)
    p0 = ["3/10", "1/20", "1/20", "1/20", "1/4", "3/10"]
    m = make_submodel(epsilon_contamination("1/10"), S, p0)
    A = S.event("w1", "w2", "w3")
    P = Partition.from_labels(S, [["w1", "w4"], ["w2", "w5"], ["w3", "w6"]])
    assert check_dilation(m, A, P).verdict == NONE
    assert find_dilating_coarser(m, A, P) is None


def test_coarsening_theorem_on_random_vbms():
    applied = 0
    for m, A, P in _independent_draws(random.Random(11), 2000, (6, 8), _mild_vbm):
        if len(P) < 3 or m.is_extreme(A) or (m.lower(A), m.upper(A)) == (0, 1):
            continue
        if any(m.lower(B) == 0 for B in P) or not check_dilation(m, A, P).dilates:
            continue
        if coarsening_hypotheses(m, A, P).holds:
            applied += 1
            assert find_dilating_coarser(m, A, P) is not None
    assert applied > 10


def test_non_correlation_uniform_eight():
    m = _eps_uniform(8)
    A, P = _halves_by_pairs(8)
    verdict = non_correlation_dilation(m, A, P)
    # the partition itself plus its 13 coarser nontrivial partitions
    assert verdict.holds and verdict.verified_partitions == 14


def test_non_correlation_fails_on_null_mass_block():
    S = space_of(6)
    m = make_submodel(epsilon_contamination("1/10"), S, ["1/4", "1/4", "0", "1/4", "1/4", "0"])
    A = S.event("w1", "w2", "w3")
    P = Partition.from_labels(S, [["w1", "w4"], ["w2", "w5"], ["w3", "w6"]])
    assert not non_correlation_dilation(m, A, P).holds


# -- extent and imprecision ----------------------------------------------------


def test_example_imprecision_variation(m1):
    model, A, (B1, B2, B3) = m1
    assert imprecision_variation(model, A, B3) == F(11, 30)
    assert imprecision_variation(model, A, B2) == F(7, 10)
    assert imprecision_variation(model, A, B1) == F(141, 230)
    assert imprecision_variation(model, A, model.space.omega) == 0


def test_example_extent(m1):
    model, A, (B1, B2, B3) = m1
    r = extent(model, A, Partition([B1, B2, B3]))
    assert r.value == r.brute_force == F(11, 30)
    assert r.plus == (B3,) and r.one == (B1,) and r.zero == ()
    assert r.b_star == B3 and r.m0 is None and r.m1 == F(2, 21)
    assert r.terms == (1, F(2, 3), F(21, 23))
    assert r.argmin == B3
    assert imprecision_increase_extent(model, A, Partition([B1, B2, B3])) == F(11, 30)


def test_extent_when_every_block_is_null():
    S = space_of(6)
    m = make_submodel(total_variation("-2/5"), S, [F(1, 6)] * 6)
    A = S.event("w1", "w2", "w3")
    P = Partition.from_labels(S, [["w1", "w4"], ["w2", "w5"], ["w3", "w6"]])
    r = extent(m, A, P)
    assert r.null_blocks == tuple(P) and r.terms == (1,)
    assert r.value == 1 - m.upper(A) + m.lower(A) == F(1, 5)


def test_extent_needs_strict_dilation(m2):
    S = m2.space
    corr = make_submodel(epsilon_contamination("1/10"), S, ["3/10", "1/5", "1/5", "3/10"])
    A = S.event("w1", "w2")
    P = Partition.from_labels(S, [["w1", "w3"], ["w2", "w4"]])
    with pytest.raises(PreconditionError):
        extent(corr, A, P)
    # the interval shifts without dilating, but it still widens on both blocks
    assert imprecision_increase_extent(corr, A, P) == F(9, 110)
    assert imprecision_increase_extent(corr, A, Partition([S.omega])) == 0


def test_imprecision_increase_clamps_negative_blocks():
    S = space_of(4)
    m = NLModel(S, ["1/5", "3/5", "0", "1/5"], "-2/5", "11/10")
    A = S.event("w2", "w3")
    P = Partition.from_labels(S, [["w2", "w4"], ["w1", "w3"]])
    assert [imprecision_variation(m, A, B) for B in P] == [F(-1, 30), F(3, 10)]
    assert imprecision_increase_extent(m, A, P) == 0


def test_extent_tie_keeps_first_maximiser():
    m = _eps_uniform(6)
    S = m.space
    A = S.event("w1", "w2", "w3")
    P = Partition.from_labels(S, [["w1", "w4"], ["w2", "w5"], ["w3", "w6"]])
    r = extent(m, A, P)
    assert r.b_star == P[0]
    assert r.value == r.brute_force


def test_extent_matches_brute_force_on_random_vbms():
    strict = 0
    for m, A, P in _independent_draws(random.Random(5), 1500, (4, 7)):
        if not check_dilation(m, A, P, STRICT).dilates:
            continue
        strict += 1
        r = extent(m, A, P)
        assert r.value == r.brute_force
        assert imprecision_increase_extent(m, A, P) == r.value
    assert strict >= 30


def test_guarantee():
    m = _eps_uniform(6)
    S = m.space
    A = S.event("w1", "w2", "w3")
    P = Partition.from_labels(S, [["w1", "w4"], ["w2", "w5"], ["w3", "w6"]])
    g = imprecision_increase_guarantee(m, A, P)
    assert g.applicable and g.holds and all(v > 0 for v in g.variations)


def test_guarantee_not_applicable(m1):
    model, A, parts = m1
    g = imprecision_increase_guarantee(model, A, parts)
    assert not g.applicable and not g.holds and "b =" in g.reason
    S = space_of(6)
    tvm = make_submodel(total_variation("-1/10"), S, [F(1, 6)] * 6)
    P = Partition.from_labels(S, [["w1", "w4"], ["w2", "w5"], ["w3", "w6"]])
    assert not imprecision_increase_guarantee(tvm, S.event("w1", "w2", "w3"), P).applicable


# -- constriction --------------------------------------------------------------


def test_constriction_dependent_example():
    S = space_of(4)
    m = make_submodel(pari_mutuel("1/5"), S, ["1/10", "0", "0", "9/10"])
    A = S.event("w1", "w2")
    r = check_constriction(m, A, Partition.from_labels(S, [["w1", "w2"], ["w3", "w4"]]))
    assert r.verdict is False and r.witness is None


def test_constriction_with_implying_null_block():
    S = space_of(4)
    m = make_submodel(total_variation("-3/5"), S, ["1/4"] * 4)
    A = S.event("w1", "w2")
    assert (m.lower(A), m.upper(A)) == (0, 1)
    r = check_constriction(m, A, Partition.from_labels(S, [["w1", "w3"], ["w2"], ["w4"]]))
    assert r.verdict and r.proposition == "null-block" and r.shortcut_verdict
    assert r.witness == S.atom("w2")


def test_no_constriction_when_interval_is_interior():
    S = space_of(4)
    m = make_submodel(total_variation("-1/5"), S, ["1/10", "1/10", "2/5", "2/5"])
    A = S.event("w1", "w3")
    assert m.lower(A) == F(3, 10)
    r = check_constriction(m, A, Partition.from_labels(S, [["w1", "w2"], ["w3"], ["w4"]]))
    assert not r.verdict and r.proposition == "null-block" and r.shortcut_verdict is False


def test_constriction_shortcuts(m1):
    model, A, parts = m1
    r = check_constriction(model, A, parts)
    assert not r.verdict and r.proposition == "positive-blocks"
    S = space_of(6)
    m = make_submodel(total_variation("-2/5"), S, [F(1, 6)] * 6)
    P = Partition.from_labels(S, [["w1", "w4"], ["w2", "w5"], ["w3", "w6"]])
    r = check_constriction(m, S.event("w1", "w2", "w3"), P)
    assert not r.verdict and r.proposition == "independent"


def test_constriction_gate(m3):
    S = m3.space
    with pytest.raises(AssumptionError) as err:
        check_constriction(m3, S.atom("w2"), Partition.from_labels(S, [["w1", "w2"], ["w3"]]))
    assert err.value.assumption == "A4"


@settings(max_examples=200)
@given(st.integers(2, 6).flatmap(lambda n: st.tuples(
    vbms(n, n), events(space_of(n)), partitions(space_of(n), min_blocks=2))))
def test_constriction_shortcuts_agree(case):
    m, A, P = case
    assume(m.lower(A) < m.upper(A))
    # the function raises if a shortcut disagrees with the direct evaluation
    r = check_constriction(m, A, P)
    if r.proposition == "independent":
        assert r.verdict is False


# -- dependence taxonomy and extreme events --------------------------------------


def test_atoms_partition_never_dilates_nontrivially():
    m = _eps_uniform(5, "1/5")
    S = m.space
    atoms = Partition.finest(S)
    for A in S.events():
        if A.is_empty or A.is_sure:
            continue
        d = dependence_dilation(m, A, atoms)
        assert d.classification in (Dependence.DEPENDENT, Dependence.SEMIDEP_TWO_SIDED)
        assert not d.predicted_nontrivial
        assert d.report.verdict not in (STRICT, WEAK_NONTRIVIAL)


def test_type_one_semidependence():
    S = space_of(4)
    A = S.event("w1", "w3")
    P = Partition.from_labels(S, [["w1", "w2", "w3"], ["w4"]])
    m = make_submodel(pari_mutuel("1/5"), S, ["0", "1/10", "0", "9/10"])
    d = dependence_dilation(m, A, P)
    assert d.classification is Dependence.SEMIDEP_TYPE1
    assert d.predicted_nontrivial and d.report.verdict == WEAK_NONTRIVIAL
    # the first block now has positive lower probability, so no dilation
    m = make_submodel(pari_mutuel("1/5"), S, ["0", "1/2", "0", "1/2"])
    assert not dependence_dilation(m, A, P).predicted_nontrivial


def test_dependence_rejects_independent(m1):
    model, A, parts = m1
    with pytest.raises(NotApplicableError):
        dependence_dilation(model, A, parts)


def test_taxonomy_on_random_models():
    rng = random.Random(2)
    kinds = set()
    for _ in range(1500):
        S = random_space(rng.randint(2, 6))
        m = random_vbm(rng, S)
        A, P = random_event(rng, S), random_partition(rng, S, 4)
        if classify_dependence(A, P) is Dependence.INDEPENDENT:
            continue
        kinds.add(dependence_dilation(m, A, P).classification)
    assert len(kinds) == 4


def test_extreme_events():
    S = space_of(4)
    A = S.event("w1", "w3")
    P = Partition.from_labels(S, [["w1", "w2"], ["w3", "w4"]])
    m = make_submodel(pari_mutuel("1/5"), S, ["0", "1/2", "0", "1/2"])
    assert (m.lower(A), m.upper(A)) == (0, 0)
    assert extreme_dilation(m, A, P).verdict == WEAK_TRIVIAL
    assert extreme_dilation(m, ~A, P).verdict == WEAK_TRIVIAL
    thin = make_submodel(pari_mutuel("1/5"), S, ["0", "1/10", "0", "9/10"])
    report = extreme_dilation(thin, A, P)
    assert report.verdict == WEAK_NONTRIVIAL
    assert (report.per_block[0].lower, report.per_block[0].upper) == (0, 1)


def test_extreme_dilation_rejects_nonextreme(m1):
    model, A, parts = m1
    with pytest.raises(NotApplicableError):
        extreme_dilation(model, A, parts)


def test_extreme_events_on_random_models():
    seen = 0
    for m, A, P in _independent_draws(random.Random(9), 3000, (4, 6)):
        if not m.is_extreme(A):
            continue
        seen += 1
        assert extreme_dilation(m, A, P).dilates
    assert seen > 10


def test_space_mismatch_is_rejected(m1):
    model, A, parts = m1
    other = SampleSpace(["x", "y"])
    with pytest.raises(UsageError):
        check_dilation(model, other.atom("x"), parts)
