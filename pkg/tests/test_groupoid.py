"""Groupoid elements, structural maps, and the windowed verification engine."""

import numpy as np
import pytest

from qproj.errors import (
    DegreeNonZero,
    InvalidClass,
    NotComposable,
    NotInGroupoid,
    OutOfRange,
    WrongStratum,
)
from qproj.extnat import INF, ext_to_json
from qproj.groupoid import (
    MAP_IDS,
    GroupoidElement,
    TElement,
    Window,
    _collect_keys,
    _iter_raw,
    _pack,
    _stratum_spec,
    _unpack,
    canonicalize,
    compose,
    degree,
    enumerate_stratum,
    gamma_iso,
    gamma_iso_inv,
    source,
    t_iso,
    target,
    theta_neg,
    theta_peel,
    theta_shift,
    theta_terminal,
    verify_bijection,
    verify_partition,
    verify_terminal_counts,
    windowed_terminal_counts,
)
from qproj.line_bundles import recursion_expand


def raw_key(raw):
    z, x, w = raw
    return (z, tuple(x), tuple(ext_to_json(e) for e in w))


def unpacked_key(record):
    return (record["z"], tuple(record["x"]), tuple(record["w"]))


class TestMembership:
    def test_forced_offset_accepted(self):
        g = canonicalize(2, 1, (0, -1), (3, INF))
        assert g.w == (3, INF) and g.x == (0, -1)

    def test_tail_collapses_then_forcing_applies(self):
        # the inf in the first slot swallows the 5; x[0] is then forced to 0
        with pytest.raises(NotInGroupoid):
            canonicalize(2, 0, (2, 0), (INF, 5))
        g = canonicalize(2, 0, (0, 0), (INF, 5))
        assert g.w == (INF, INF)

    def test_all_finite_degree_is_free(self):
        g = canonicalize(2, 7, (0, 0), (4, 4))
        assert g.z == 7

    def test_forcing_violation(self):
        with pytest.raises(NotInGroupoid):
            canonicalize(2, 1, (0, 0), (3, INF))  # needs x[1] = -1

    def test_tail_offsets_must_vanish(self):
        with pytest.raises(NotInGroupoid):
            canonicalize(3, 0, (1, -1, 2), (3, INF, INF))

    def test_cone_constraint(self):
        with pytest.raises(NotInGroupoid):
            canonicalize(2, 0, (-4, 0), (3, 3))  # target -1 leaves the cone

    def test_negative_source_rejected(self):
        with pytest.raises(NotInGroupoid):
            canonicalize(2, 0, (0, 0), (-1, 2))

    def test_non_canonical_direct_build_rejected(self):
        with pytest.raises(NotInGroupoid):
            GroupoidElement(2, 0, (0, 0), (INF, 5))

    def test_canonicalize_idempotent(self):
        g = canonicalize(3, 2, (1, -3, 0), (4, INF, 7))
        again = canonicalize(g.n, g.z, g.x, g.w)
        assert again == g

    def test_primed_rules(self):
        # an everywhere-infinite source forces degree 0 and trailing zeros
        g = canonicalize(2, 0, (5, 0), (INF, INF), primed=True)
        assert g.primed
        with pytest.raises(NotInGroupoid):
            canonicalize(2, 1, (5, 0), (INF, INF), primed=True)
        # at a later position the offset closes the degree without x[0]
        h = canonicalize(3, 2, (9, 1, -3), (4, 0, INF), primed=True)
        assert h.x[2] == -2 - 1
        with pytest.raises(NotInGroupoid):
            canonicalize(3, 2, (9, 1, 0), (4, 0, INF), primed=True)

    def test_source_and_target(self):
        g = canonicalize(2, 0, (2, -1), (1, 3))
        assert source(g) == (1, 3)
        assert target(g) == (3, 2)
        h = canonicalize(2, 3, (-3, 0), (INF, INF))
        assert source(h) == target(h) == (INF, INF)

    def test_json_round_trip(self):
        for g in [canonicalize(2, 1, (0, -1), (3, INF)),
                  canonicalize(2, 0, (5, 0), (INF, INF), primed=True),
                  canonicalize(1, -2, (3,), (0,))]:
            assert GroupoidElement.from_json(g.to_json()) == g
        assert "primed" not in canonicalize(1, 0, (0,), (4,)).to_json()


class TestCompose:
    def test_frozen_example(self):
        g = canonicalize(1, 1, (2,), (3,))
        h = canonicalize(1, 0, (1,), (2,))
        assert target(h) == (3,) == source(g)
        assert compose(g, h) == canonicalize(1, 1, (3,), (2,))

    def test_units_idempotent(self):
        for w in [(0, 4), (2, INF), (INF, INF)]:
            u = canonicalize(2, 0, (0, 0), w)
            assert source(u) == target(u) == u.w
            assert compose(u, u) == u

    def test_units_are_neutral(self):
        g = canonicalize(2, 1, (-1, 0), (3, INF))
        left = canonicalize(2, 0, (0, 0), target(g))
        right = canonicalize(2, 0, (0, 0), source(g))
        assert compose(left, g) == g
        assert compose(g, right) == g

    def test_mismatch(self):
        g = canonicalize(1, 0, (1,), (2,))
        h = canonicalize(1, 0, (1,), (5,))
        with pytest.raises(NotComposable):
            compose(g, h)

    def test_variant_mismatch(self):
        g = canonicalize(1, 0, (0,), (INF,))
        gp = canonicalize(1, 0, (0,), (INF,), primed=True)
        with pytest.raises(NotComposable):
            compose(g, gp)

    def _composable_chains(self, n, window):
        by_target = {}
        elements = []
        for z in (-1, 0, 1):
            elements.extend(enumerate_stratum(n, z, window=window))
        for g in elements:
            by_target.setdefault(target(g), []).append(g)
        chains = []
        for g in elements:
            for h in by_target.get(source(g), ())[:3]:
                for f in by_target.get(source(h), ())[:2]:
                    chains.append((g, h, f))
                    if len(chains) >= 300:
                        return chains
        return chains

    def test_groupoid_laws_on_enumerated_triples(self):
        chains = self._composable_chains(2, 2)
        assert chains, "window too small to produce composable triples"
        for g, h, f in chains:
            gh = compose(g, h)
            # degrees add, source/target laws
            assert degree(gh) == degree(g) + degree(h)
            assert source(gh) == source(h)
            assert target(gh) == target(g)
            # associativity
            assert compose(gh, f) == compose(g, compose(h, f))


class TestIsomorphisms:
    def test_gamma_frozen(self):
        g = canonicalize(2, 2, (-2, 0), (INF, INF))
        image = gamma_iso(g)
        assert image == canonicalize(2, 0, (-2, 0), (INF, INF), primed=True)

    def test_gamma_fixes_units(self):
        u = canonicalize(2, 0, (0, 0), (3, 5))
        assert gamma_iso(u) == canonicalize(2, 0, (0, 0), (3, 5), primed=True)

    def test_gamma_round_trip_on_window(self):
        for z in (-2, 0, 3):
            for g in enumerate_stratum(2, z, window=3):
                image = gamma_iso(g)
                assert image.primed
                assert image.z == g.z + g.x[0]
                assert source(image) == source(g)
                assert target(image) == target(g)
                assert gamma_iso_inv(image) == g

    def test_gamma_wrong_variant(self):
        gp = canonicalize(1, 0, (1,), (INF,), primed=True)
        with pytest.raises(InvalidClass):
            gamma_iso(gp)
        g = canonicalize(1, 0, (0,), (4,))
        with pytest.raises(InvalidClass):
            gamma_iso_inv(g)

    def test_t_frozen(self):
        g = canonicalize(2, 0, (1, -1), (0, INF))
        image = t_iso(g)
        assert isinstance(image, TElement)
        assert image.x == (1, -1) and image.w == (0, INF)
        assert image.source() == source(g)
        assert image.target() == target(g)

    def test_t_needs_degree_zero(self):
        with pytest.raises(DegreeNonZero):
            t_iso(canonicalize(1, 2, (0,), (3,)))

    def test_t_element_constraints_inherited(self):
        with pytest.raises(NotInGroupoid):
            TElement(2, (2, 0), (INF, 5))


class TestThetaMaps:
    def test_neg_frozen(self):
        g = canonicalize(1, -1, (3,), (2,))
        image = theta_neg(g, -1)
        assert image == canonicalize(1, 0, (2,), (3,))
        assert target(image) == target(g) == (5,)

    def test_neg_with_infinite_source(self):
        g = canonicalize(1, -2, (2,), (INF,))
        image = theta_neg(g, -2)
        assert image == canonicalize(1, 0, (0,), (INF,))

    def test_shift_frozen(self):
        g = canonicalize(2, 2, (1, -3), (0, 5))
        image = theta_shift(g, 2, 1)
        assert image == canonicalize(2, 0, (1, -1), (0, 3))
        assert target(image) == target(g)

    def test_peel_frozen(self):
        g = canonicalize(2, 2, (0, 1), (1, 3))
        image = theta_peel(g, 2, 0, 1)
        assert image == canonicalize(2, 1, (1, 1), (0, 3))
        assert target(image) == target(g)

    def test_terminal_frozen(self):
        g = canonicalize(2, 3, (1, 2), (0, 0))
        image = theta_terminal(g, 3)
        assert image == canonicalize(2, 0, (1, 2), (0, 0))
        assert target(image) == target(g)

    def test_targets_preserved_across_window(self):
        for g in enumerate_stratum(2, 2, j=0, window=3):
            if g.w[0] is INF or g.w[0] >= 2:
                assert target(theta_shift(g, 2, 0)) == target(g)
            else:
                image = theta_peel(g, 2, 0, g.w[0])
                assert target(image) == target(g)
                assert image.z == 2 - g.w[0]

    def test_wrong_stratum(self):
        g = canonicalize(2, 2, (0, 1), (1, 3))
        with pytest.raises(WrongStratum):
            theta_neg(g, 1)  # positive degree
        with pytest.raises(WrongStratum):
            theta_neg(g, -2)  # element has degree 2, not -2
        with pytest.raises(WrongStratum):
            theta_shift(g, 2, 0)  # w[0] = 1 < 2
        with pytest.raises(WrongStratum):
            theta_shift(g, 2, 1)  # w[0] != 0, so level 1 is not reachable
        with pytest.raises(WrongStratum):
            theta_peel(g, 2, 0, 0)  # w[0] = 1, not 0
        with pytest.raises(WrongStratum):
            theta_peel(g, 2, 0, 2)  # payout must stay below the degree
        with pytest.raises(WrongStratum):
            theta_terminal(g, 2)  # source not pinned to zero

    def test_shift_level_bounds(self):
        g = canonicalize(1, 1, (0,), (3,))
        with pytest.raises(WrongStratum):
            theta_shift(g, 1, 1)  # only level 0 exists at n = 1


class TestEnumeration:
    def test_frozen_count(self):
        # one all-infinite element plus 3 + 4 + 5 all-finite ones
        assert len(enumerate_stratum(1, 0, window=2)) == 13

    def test_elements_are_valid_and_unique(self):
        els = enumerate_stratum(2, 1, window=3)
        assert len(set(els)) == len(els)
        for g in els:
            assert g.z == 1 and not g.primed

    def test_pins_hold(self):
        for g in enumerate_stratum(2, 2, j=1, window=3):
            assert g.w[0] == 0

    def test_window_bounds_hold(self):
        for g in enumerate_stratum(2, 0, window=2):
            for entry in g.w:
                assert entry is INF or 0 <= entry <= 2
            for v in g.x:
                assert -2 <= v <= 2

    SPECS = [
        (2, 1, {}),
        (2, 0, {"variant": "primed"}),
        (3, -2, {"pins": 1}),
        (2, 1, {"variant": "primed", "shear": True}),
        (1, 0, {}),
        (3, 2, {"pins": 3}),
        (2, 2, {"w_over": {0: (2, 5, True)}}),
        (2, 2, {"w_over": {0: (1, 1, False)}, "pins": 0}),
        (2, 0, {"x_over": {1: (-1, 4)}}),
    ]

    @pytest.mark.parametrize("n,z,kw", SPECS)
    def test_array_engine_matches_reference(self, n, z, kw):
        spec = _stratum_spec(n, z, 3, **kw)
        reference = [raw_key(r) for r in _iter_raw(spec)]
        assert len(set(reference)) == len(reference)
        keys = _collect_keys(spec)
        unpacked = {unpacked_key(_unpack(key, n)) for key in keys.tolist()}
        assert len(keys) == len(unpacked)
        assert set(reference) == unpacked

    def test_pack_round_trip(self):
        spec = _stratum_spec(2, -1, 3)
        keys = _collect_keys(spec)
        reference = {raw_key(r) for r in _iter_raw(spec)}
        for key in keys.tolist()[:50]:
            assert unpacked_key(_unpack(key, 2)) in reference

    def test_window_type(self):
        assert len(enumerate_stratum(1, 0, window=Window(2))) == 13
        with pytest.raises(OutOfRange):
            enumerate_stratum(1, 0, window=0)


class TestVerifiers:
    @pytest.mark.parametrize("map_id,kwargs", [
        ("theta-neg", {"k": -2}),
        ("theta-shift", {"k": 2, "j": 0}),
        ("theta-shift", {"k": 1, "j": 1}),
        ("theta-peel", {"k": 3, "j": 1, "l": 1}),
        ("theta-terminal", {"l": 2}),
        ("gamma", {"k": 1}),
        ("gamma", {"k": -3}),
        ("t", {}),
    ])
    def test_maps_pass_small_window(self, map_id, kwargs):
        report = verify_bijection(map_id, 2, window=4, **kwargs)
        assert report.passed, report.to_json()
        assert report.domain_size == report.image_size

    def test_partition_passes(self):
        report = verify_partition(2, 2, 0, window=6)
        assert report.passed
        assert report.domain_size == report.image_size
        assert verify_partition(1, 1, 0, window=4).passed
        # minimal window edge case
        assert verify_partition(2, 1, 1, window=1).passed

    def test_map_id_list_is_complete(self):
        assert set(MAP_IDS) == {"theta-neg", "theta-shift", "theta-peel",
                                "theta-terminal", "gamma", "t"}

    def test_bad_parameters(self):
        with pytest.raises(OutOfRange):
            verify_bijection("theta-neg", 2, k=1, window=3)
        with pytest.raises(OutOfRange):
            verify_bijection("theta-shift", 2, k=0, j=0, window=3)
        with pytest.raises(OutOfRange):
            verify_bijection("theta-peel", 2, k=2, j=0, l=2, window=3)
        with pytest.raises(OutOfRange):
            verify_bijection("no-such-map", 2, window=3)
        with pytest.raises(OutOfRange):
            verify_partition(2, 0, 0, window=3)
        with pytest.raises(OutOfRange):
            verify_partition(2, 1, 2, window=3)

    def test_failure_path_reports_counterexample(self, monkeypatch):
        # force a mispaired codomain window: the identity map into a
        # stratum of a different degree cannot be onto
        import qproj.groupoid as G

        def broken_setup(map_id, n, k, j, l, W):
            dom = _stratum_spec(n, 0, W)
            cod = _stratum_spec(n, 1, W)

            def act(Z, X, Wc):
                return Z, X, Wc

            return dom, cod, act

        monkeypatch.setattr(G, "_bijection_setup", broken_setup)
        report = G.verify_bijection("t", 1, window=2)
        assert not report.passed
        assert report.counterexample["kind"] in (
            "image-outside-codomain", "codomain-not-covered")


class TestTerminalTally:
    def test_smallest_case(self):
        counts, report = windowed_terminal_counts(1, 1, window=4)
        assert counts == (1, 1)
        assert report.passed

    def test_counts_match_recursion(self):
        for n in (1, 2):
            for k in (1, 2, 3):
                counts, report = windowed_terminal_counts(n, k, window=5)
                assert report.passed, report.to_json()
                assert counts == recursion_expand(n, k).mult

    def test_counts_are_window_independent(self):
        for window in (3, 5, 7):
            counts, _ = windowed_terminal_counts(2, 2, window=window)
            assert counts == (1, 2, 3)

    def test_verify_wrapper(self):
        report = verify_terminal_counts(2, 3, window=5)
        assert report.passed
        assert report.params["k"] == 3
        # every window element ends in exactly one terminal class
        assert report.domain_size == report.image_size
