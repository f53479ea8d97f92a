import pytest

from matroid_kappa import (
    DomainError,
    PreconditionError,
    StabilizationPolicy,
    certified_separation,
    components,
    double_ladder,
    graph_rule_family,
    infinite_uniform,
    kappa,
    kappa_between,
    ladder_rungs,
    omega_tree_truncation,
    restrict,
    rung_partition_counterexample,
    same_independence,
    stabilized_kappa_between,
    take_minor,
    MinorSpec,
    uniform_matroid,
    windowed_linking,
)


class TestWindows:
    def test_ladder_window_zero_is_one_square(self):
        w = double_ladder().window(0)
        assert len(w.ground) == 4
        circuits = w.circuits()
        assert len(circuits) == 1 and len(circuits[0]) == 4

    def test_ladder_windows_nest_and_agree(self):
        fam = double_ladder()
        small, big = fam.window(1), fam.window(2)
        assert set(small.ground) <= set(big.ground)
        restricted = restrict(big, big.ground.set_of(small.ground))
        for s in _all_subsets(list(small.ground)):
            assert restricted.is_independent(
                restricted.ground.set_of(s)
            ) == small.is_independent(small.ground.set_of(s))

    def test_uniform_window_is_uniform(self):
        w = infinite_uniform(2).window(4)
        assert same_independence(w, uniform_matroid(["a1", "a2", "a3", "a4"], 2))

    def test_window_index_validated(self):
        with pytest.raises(DomainError):
            double_ladder().window(-1)

    def test_embedding_carries_sets_upward(self):
        fam = double_ladder()
        small = fam.window(1)
        s = small.ground.set_of(["rung[0]", "railT[1]"])
        lifted = fam.embed(s, 3)
        assert lifted.ground == fam.window(3).ground
        assert sorted(lifted) == sorted(s)
        with pytest.raises(DomainError):
            fam.embed(fam.window(3).ground.set_of(["rung[4]"]), 1)

    def test_exactness_radius_contains_query(self):
        fam = double_ladder()
        n = fam.exactness_radius(["rung[0]", "railT[2]", "rung[-1]"])
        w = fam.window(n)
        for lab in ("rung[0]", "railT[2]", "rung[-1]"):
            assert lab in w.ground

    def test_dependence_witnessed_by_finite_circuit_within_radius(self):
        fam = double_ladder()
        w = fam.window(2)
        square = w.ground.set_of(["rung[0]", "railT[0]", "railB[0]", "rung[1]"])
        radius = fam.exactness_radius(square)
        inside = fam.window(radius)
        circuit = inside.find_circuit_in(square.in_universe(inside.ground))
        assert circuit is not None and len(circuit) <= len(square)

    def test_tree_truncation_is_free(self):
        w = omega_tree_truncation(2).window(2)
        assert w.circuits() == []
        assert "illustrative" in omega_tree_truncation().description

    def test_graph_rule_family(self):
        fam = graph_rule_family(
            lambda n: [(f"c{i}", str(i), str((i + 1) % (n + 3))) for i in range(n + 3)],
            family_id="cycles",
        )
        w = fam.window(0)
        assert len(w.circuits()) == 1
        assert fam.exactness_radius(["c3"]) == 1


def _all_subsets(labels):
    import itertools

    return itertools.chain.from_iterable(
        itertools.combinations(labels, r) for r in range(len(labels) + 1)
    )


class TestStabilization:
    def test_ladder_rung_query_plateaus_at_one(self):
        fam = double_ladder()
        rep = stabilized_kappa_between(
            fam,
            ["rung[0]"],
            ["rung[3]"],
            StabilizationPolicy(max_window=6),
            [certified_separation(fam, "rung:0")],
        )
        values = [v for _, v in rep.values]
        assert values == sorted(values)
        assert values[-1] == 1
        assert rep.stable_at is not None
        assert rep.certified_value == 1 and rep.certificate == "rung:0"

    def test_uniform_singleton_query(self):
        fam = infinite_uniform(2)
        rep = stabilized_kappa_between(
            fam,
            ["a1"],
            ["a2"],
            StabilizationPolicy(max_window=7),
            [certified_separation(fam, "prefix:1")],
        )
        assert [v for _, v in rep.values] == [1, 1, 1, 1]
        assert rep.certified_value == 1

    def test_rungless_split_stays_at_zero(self):
        fam = double_ladder(include_rungs=False)
        rep = stabilized_kappa_between(
            fam,
            ["railT[0]"],
            ["railB[0]"],
            StabilizationPolicy(max_window=5),
            [certified_separation(fam, "rails-split")],
        )
        assert all(v == 0 for _, v in rep.values)
        assert rep.certified_value == 0

    def test_plateau_without_certificate_stays_uncertified(self):
        fam = double_ladder()
        rep = stabilized_kappa_between(
            fam, ["rung[0]"], ["rung[2]"], StabilizationPolicy(max_window=6)
        )
        assert rep.stable_at is not None
        assert rep.certified_value is None

    def test_growth_matches_exact_scan_on_small_windows(self):
        fam = double_ladder()
        queries = [
            (["rung[0]"], ["rung[1]"]),
            (["rung[0]"], ["rung[2]"]),
            (["railT[0]"], ["railB[1]"]),
            (["railT[0]", "railB[1]"], ["railT[1]", "railB[0]"]),
            (["rung[0]", "railT[1]"], ["rung[2]"]),
        ]
        for x_labels, y_labels in queries:
            start = fam.exactness_radius(x_labels + y_labels)
            for n in range(start, start + 3):
                w = fam.window(n)
                if len(w.ground) > 16:
                    break
                exact = kappa_between(
                    w,
                    w.ground.set_of(x_labels),
                    w.ground.set_of(y_labels),
                    budget=len(w.ground),
                )
                rep = stabilized_kappa_between(
                    fam,
                    x_labels,
                    y_labels,
                    StabilizationPolicy(max_window=n, plateau_length=1),
                )
                assert dict(rep.values)[n] == exact, (x_labels, y_labels, n)

    def test_growth_engine_on_random_graphs(self):
        # a constant rule makes every window the same matroid, so the
        # engine's value must match the exhaustive scan whenever it
        # reports "exact" and never exceed it otherwise
        import random

        rng = random.Random(271)
        for trial in range(25):
            nv = rng.randint(3, 5)
            ne = rng.randint(4, 9)
            edges = [
                (f"e{i}", str(rng.randrange(nv)), str(rng.randrange(nv)))
                for i in range(ne)
            ]
            fam = graph_rule_family(lambda n, e=edges: e, family_id=f"rand{trial}")
            w = fam.window(0)
            labels = list(w.ground)
            picks = rng.sample(labels, min(4, len(labels)))
            x_labels, y_labels = picks[:2], picks[2:]
            if not y_labels:
                continue
            exact = kappa_between(
                w,
                w.ground.set_of(x_labels),
                w.ground.set_of(y_labels),
                budget=len(labels),
            )
            rep = stabilized_kappa_between(
                fam,
                x_labels,
                y_labels,
                StabilizationPolicy(max_window=1, plateau_length=1),
            )
            value = dict(rep.values)[0]
            how = dict(rep.settled)[0]
            assert value <= exact, (trial, edges, picks)
            if how == "exact":
                assert value == exact, (trial, edges, picks)

    def test_interleaved_rails_reach_level_two(self):
        # the sides wrap around each other, so no single stretch of the
        # ladder separates them; the bound-2 set certificate is tight
        fam = double_ladder()
        rep = stabilized_kappa_between(
            fam,
            ["railT[0]", "railB[1]"],
            ["railT[1]", "railB[0]"],
            StabilizationPolicy(max_window=5),
            [certified_separation(fam, "set:railT[0]+railB[1]")],
        )
        assert [v for _, v in rep.values][-1] == 2
        assert rep.certified_value == 2

    def test_query_beyond_max_window_rejected(self):
        fam = double_ladder()
        with pytest.raises(DomainError):
            stabilized_kappa_between(
                fam, ["rung[0]"], ["rung[7]"], StabilizationPolicy(max_window=4)
            )

    def test_overlapping_query_rejected(self):
        with pytest.raises(PreconditionError):
            stabilized_kappa_between(double_ladder(), ["rung[0]"], ["rung[0]"])


class TestCertificates:
    def test_bounds_hold_on_windows(self):
        fam = double_ladder()
        for desc in ("rung:0", "cut:0", "singleton:railT[1]"):
            cert = certified_separation(fam, desc)
            cert.validate(fam, range(0, 5))

    def test_cut_value_within_bound(self):
        fam = double_ladder()
        cert = certified_separation(fam, "cut:0")
        for n in range(1, 5):
            w = fam.window(n)
            assert kappa(w, cert.side(w)) <= 2

    def test_misapplied_template_rejected(self):
        with pytest.raises(DomainError):
            certified_separation(infinite_uniform(2), "rung:0")
        with pytest.raises(DomainError):
            certified_separation(double_ladder(), "rails-split")
        with pytest.raises(DomainError):
            certified_separation(double_ladder(), "no-such-template")

    def test_wrong_side_caught_during_validation(self):
        fam = double_ladder()
        cert = certified_separation(fam, "rung:1")
        with pytest.raises(DomainError):
            cert.validate(fam, range(2, 4), x_labels=["rung[0]"], y_labels=[])

    def test_broken_bound_caught(self):
        fam = infinite_uniform(3)
        cert = certified_separation(fam, "set:a1+a2")  # bound 2, true value 2
        cert.validate(fam, range(6, 8))
        bad = certified_separation(fam, "prefix:4")  # bound min(4,3)=3, ok
        bad.validate(fam, range(8, 9))


class TestWindowedLinking:
    def test_uniform_pairs(self):
        fam = infinite_uniform(2)
        res = windowed_linking(
            fam,
            ["a1", "a2"],
            ["a3", "a4"],
            StabilizationPolicy(max_window=7),
            [certified_separation(fam, "prefix:2")],
        )
        assert res.achieved == res.target == 2
        assert res.deletes_outside_window

    def test_ladder_rung_to_rung(self):
        fam = double_ladder()
        res = windowed_linking(
            fam,
            ["rung[0]"],
            ["rung[3]"],
            StabilizationPolicy(max_window=6),
            [certified_separation(fam, "rung:0")],
        )
        assert res.achieved == 1
        w = fam.window(res.window_index)
        minor = take_minor(w, MinorSpec(
            w.ground.set_of(res.spec.contract), w.ground.set_of(res.spec.delete)
        ))
        assert kappa(minor, minor.ground.set_of(["rung[0]"])) == 1

    def test_interleaved_level_two_query(self):
        fam = double_ladder()
        res = windowed_linking(
            fam,
            ["railT[0]", "railB[1]"],
            ["railT[1]", "railB[0]"],
            StabilizationPolicy(max_window=5),
            [certified_separation(fam, "set:railT[0]+railB[1]")],
        )
        assert res.achieved == 2
        w = fam.window(res.window_index)
        minor = take_minor(w, MinorSpec(
            w.ground.set_of(res.spec.contract), w.ground.set_of(res.spec.delete)
        ))
        assert kappa(minor, minor.ground.set_of(["railT[0]", "railB[1]"])) == 2

    def test_rungless_split_trivial_partition(self):
        fam = double_ladder(include_rungs=False)
        res = windowed_linking(
            fam,
            ["railT[0]"],
            ["railB[0]"],
            StabilizationPolicy(max_window=5),
            [certified_separation(fam, "rails-split")],
        )
        assert res.achieved == 0
        assert res.spec.contract.is_empty

    def test_uncertified_query_rejected(self):
        fam = double_ladder()
        with pytest.raises(PreconditionError):
            windowed_linking(
                fam, ["rung[0]"], ["rung[2]"], StabilizationPolicy(max_window=6)
            )


class TestRungPartitions:
    def test_no_partition_persists_window_two(self):
        rep = rung_partition_counterexample(2)
        assert rep["all_partitions_fail"]
        assert rep["full_deletion_disconnects"]
        assert rep["partitions_checked"] == 2 ** len(rep["rungs"])

    def test_boundary_artifact_is_the_only_survivor(self):
        rep = rung_partition_counterexample(2)
        assert len(rep["survivors_in_own_window"]) == 1
        survivor = rep["survivors_in_own_window"][0]
        assert survivor["contract"] == ["rung[-2]", "rung[3]"]
        assert rep["persistent_partitions"] == []

    def test_deleting_all_rungs_leaves_only_coloops(self):
        fam = double_ladder()
        w = fam.window(2)
        rails_only = take_minor(
            w, MinorSpec(w.ground.empty(), ladder_rungs(w))
        )
        parts = components(rails_only, len(w.ground))
        assert all(len(b) == 1 for b in parts.blocks)
