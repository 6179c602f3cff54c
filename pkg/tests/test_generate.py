import pytest
from hypothesis import given
from hypothesis import strategies as st

from onepmaxcut.generate import GenerationError, GenParams, SplitMix64, gen_one_planar, gen_planar
from onepmaxcut.instance_io import serialize_instance
from onepmaxcut.onep import validate
from onepmaxcut.planar import planar_embedding


class TestSplitMix64:
    def test_reference_vector(self):
        rng = SplitMix64(1234567)
        assert [rng.next_u64() for _ in range(3)] == [
            6457827717110365317,
            3203168211198807973,
            9817491932198370423,
        ]

    def test_below_range(self):
        rng = SplitMix64(9)
        draws = [rng.below(7) for _ in range(2000)]
        assert set(draws) == set(range(7))

    def test_below_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            SplitMix64(0).below(0)

    def test_randint_inclusive(self):
        rng = SplitMix64(4)
        assert {rng.randint(-2, 2) for _ in range(500)} == {-2, -1, 0, 1, 2}


class TestParams:
    @pytest.mark.parametrize(
        "params",
        [
            GenParams(5, crossings=-1),
            GenParams(5, weight_lo=3, weight_hi=2),
            GenParams(2),
            GenParams(5, density=0.0),
            GenParams(5, density=1.5),
        ],
    )
    def test_rejected(self, params):
        with pytest.raises(GenerationError):
            gen_one_planar(params)

    def test_density_too_low(self):
        with pytest.raises(GenerationError):
            gen_planar(GenParams(10, density=0.1))

    def test_too_many_crossings(self):
        with pytest.raises(GenerationError):
            gen_one_planar(GenParams(4, crossings=3))


class TestGenerators:
    def test_triangle(self):
        inst = gen_planar(GenParams(3, density=1.0))
        assert sorted(inst.graph.edges) == [(1, 2), (1, 3), (2, 3)]

    def test_full_density_is_triangulation(self):
        g = gen_planar(GenParams(9, density=1.0, seed=3)).graph
        assert g.number_of_edges() == 3 * 9 - 6

    def test_planar_rejects_crossings(self):
        with pytest.raises(GenerationError):
            gen_planar(GenParams(8, crossings=1))

    def test_same_seed_same_bytes(self):
        p = GenParams(12, crossings=3, seed=99)
        assert serialize_instance(gen_one_planar(p)) == serialize_instance(gen_one_planar(p))

    def test_different_seeds_differ(self):
        texts = {serialize_instance(gen_one_planar(GenParams(12, 2, seed=s))) for s in range(5)}
        assert len(texts) > 1

    def test_weights_in_range(self):
        g = gen_planar(GenParams(15, weight_lo=-2, weight_hi=7, seed=5)).graph
        assert all(-2 <= w <= 7 for w in g.edges.values())

    @given(st.integers(4, 16), st.integers(0, 5), st.integers(0, 2**64 - 1), st.sampled_from([0.5, 0.7, 0.9]))
    def test_generated_instances_valid(self, n, k, seed, density):
        try:
            inst = gen_one_planar(GenParams(n, k, -5, 5, density, seed))
        except GenerationError:
            return
        assert inst.k == k
        report = validate(inst)
        assert report.ok and not report.warnings
        assert inst.graph.number_of_edges() <= 4 * n - 8
        assert k <= 2 * n - 4
        # removing one edge of every crossing leaves the planar base
        g = inst.graph
        for c in inst.crossings:
            edges = dict(g.edges)
            del edges[c.first]
            del edges[c.second]
            g = type(g)(g.nodes, edges)
        assert planar_embedding(g).euler_holds()

    @given(st.integers(3, 16), st.integers(0, 2**32))
    def test_planar_output_embeds(self, n, seed):
        inst = gen_planar(GenParams(n, seed=seed))
        planar_embedding(inst.graph)
