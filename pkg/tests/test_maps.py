"""Continuity and morphism predicates."""

import random

import pytest

from mvtop import (
    Carrier,
    Chain,
    FuzzyFamily,
    FuzzySet,
    InputError,
    PointMap,
    base_from_subbase,
    continuity_counterexample,
    crisp_discrete,
    generate_from_subbase,
    indiscrete,
    is_closed_map,
    is_continuous,
    is_continuous_via_base,
    is_homeomorphism,
    is_open_map,
    mv_preimage,
)

CH1 = Chain(1)
CH2 = Chain(2)
AB = Carrier(("a", "b"))
Y = Carrier(("y",))


def family(carrier, chain, *vectors):
    return FuzzyFamily.of(carrier, chain, (FuzzySet(carrier, chain, v) for v in vectors))


def test_identity_is_continuous():
    topology = generate_from_subbase(family(AB, CH2, (1, 2)))
    f = PointMap.identity(AB)
    assert is_continuous(f, topology, topology)


def test_any_map_into_indiscrete_is_continuous():
    domain = indiscrete(AB, CH2)
    codomain = indiscrete(Y, CH2)
    f = PointMap(AB, Y, (0, 0))
    assert is_continuous(f, domain, codomain)


def test_identity_from_indiscrete_to_discrete_is_not_continuous():
    domain = indiscrete(AB, CH1)
    codomain = crisp_discrete(AB, CH1)
    f = PointMap.identity(AB)
    witness = continuity_counterexample(f, domain, codomain)
    assert witness is not None
    assert witness.values == (0, 1)  # first violating open in canonical order


def test_continuity_rejects_mismatched_spaces():
    domain = indiscrete(AB, CH2)
    codomain = indiscrete(Y, CH1)
    with pytest.raises(InputError):
        is_continuous(PointMap(AB, Y, (0, 0)), domain, codomain)


def test_via_base_with_full_opens_equals_direct():
    domain = generate_from_subbase(family(AB, CH2, (2, 0)))
    codomain = generate_from_subbase(family(AB, CH2, (1, 2)))
    f = PointMap(AB, AB, (0, 1))
    assert is_continuous_via_base(f, domain, codomain.opens) == is_continuous(
        f, domain, codomain
    )


def test_via_base_with_unit_only_is_always_true():
    domain = indiscrete(AB, CH2)
    base = family(AB, CH2, (2, 2))
    f = PointMap(AB, AB, (1, 0))
    assert is_continuous_via_base(f, domain, base)


def test_base_continuity_agrees_with_direct_on_random_instances():
    rng = random.Random(17)
    for _ in range(200):
        chain = Chain(rng.randint(1, 2))
        dom_carrier = Carrier(tuple("abc"[: rng.randint(1, 3)]))
        cod_carrier = Carrier(tuple("uvw"[: rng.randint(1, 3)]))
        domain = generate_from_subbase(
            FuzzyFamily.of(
                dom_carrier,
                chain,
                [
                    FuzzySet(
                        dom_carrier,
                        chain,
                        tuple(rng.randint(0, chain.n) for _ in range(dom_carrier.size)),
                    )
                    for _ in range(rng.randint(0, 2))
                ],
            )
        )
        subbase = FuzzyFamily.of(
            cod_carrier,
            chain,
            [
                FuzzySet(
                    cod_carrier,
                    chain,
                    tuple(rng.randint(0, chain.n) for _ in range(cod_carrier.size)),
                )
                for _ in range(rng.randint(0, 2))
            ],
        )
        base = base_from_subbase(subbase)
        codomain = generate_from_subbase(subbase)
        f = PointMap(
            dom_carrier,
            cod_carrier,
            tuple(rng.randrange(cod_carrier.size) for _ in range(dom_carrier.size)),
        )
        assert is_continuous_via_base(f, domain, base) == is_continuous(f, domain, codomain)


def test_identity_is_open_closed_and_homeomorphism():
    topology = generate_from_subbase(family(AB, CH2, (1, 2)))
    f = PointMap.identity(AB)
    assert is_open_map(f, topology, topology)
    assert is_closed_map(f, topology, topology)
    assert is_homeomorphism(f, topology, topology)


def test_constant_map_into_indiscrete_is_open():
    domain = crisp_discrete(AB, CH1)
    codomain = indiscrete(Y, CH1)
    f = PointMap(AB, Y, (0, 0))
    assert is_open_map(f, domain, codomain)


def test_bijection_with_discontinuous_inverse_is_not_homeomorphism():
    domain = crisp_discrete(AB, CH1)
    codomain = indiscrete(AB, CH1)
    f = PointMap.identity(AB)
    assert is_continuous(f, domain, codomain)
    assert not is_homeomorphism(f, domain, codomain)


def test_open_map_iff_inverse_continuous_for_bijections():
    rng = random.Random(29)
    for _ in range(100):
        chain = Chain(rng.randint(1, 2))
        size = rng.randint(1, 3)
        carrier_a = Carrier(tuple("abc"[:size]))
        carrier_b = Carrier(tuple("uvw"[:size]))

        def rand_topology(carrier):
            members = [
                FuzzySet(
                    carrier, chain, tuple(rng.randint(0, chain.n) for _ in range(size))
                )
                for _ in range(rng.randint(0, 2))
            ]
            return generate_from_subbase(FuzzyFamily.of(carrier, chain, members))

        domain = rand_topology(carrier_a)
        codomain = rand_topology(carrier_b)
        images = list(range(size))
        rng.shuffle(images)
        f = PointMap(carrier_a, carrier_b, tuple(images))
        assert is_open_map(f, domain, codomain) == is_continuous(
            f.inverse(), codomain, domain
        )


def test_composition_of_continuous_maps_is_continuous():
    rng = random.Random(31)
    for _ in range(100):
        chain = Chain(rng.randint(1, 2))
        ca = Carrier(tuple("abc"[: rng.randint(1, 3)]))
        cb = Carrier(tuple("uvw"[: rng.randint(1, 3)]))
        cc = Carrier(tuple("pqr"[: rng.randint(1, 3)]))
        outer = generate_from_subbase(
            FuzzyFamily.of(
                cc,
                chain,
                [
                    FuzzySet(cc, chain, tuple(rng.randint(0, chain.n) for _ in range(cc.size)))
                    for _ in range(rng.randint(0, 2))
                ],
            )
        )
        g = PointMap(cb, cc, tuple(rng.randrange(cc.size) for _ in range(cb.size)))
        middle = generate_from_subbase(
            FuzzyFamily.of(cb, chain, (mv_preimage(g, o) for o in outer.opens))
        )
        f = PointMap(ca, cb, tuple(rng.randrange(cb.size) for _ in range(ca.size)))
        domain = generate_from_subbase(
            FuzzyFamily.of(ca, chain, (mv_preimage(f, o) for o in middle.opens))
        )
        assert is_continuous(f, domain, middle)
        assert is_continuous(g, middle, outer)
        assert is_continuous(f.then(g), domain, outer)
