import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from euclid_ramsey.grid import (DOMINO, SQUARE, AVOIDABLE, FORCED, POINT, Configuration, GridColoring,
                                Homothety, RectangleWitness, enumerate_witnesses, find_homothetic_copy,
                                find_mono_rectangle, find_mono_square, forced_threshold)
from euclid_ramsey.extremal import count_avoiding

from oracles import mono_homotheties, mono_rectangles, mono_squares


def checkerboard(w, h):
    return GridColoring(w, h, 2, [(x + y) % 2 for y in range(h) for x in range(w)])


@st.composite
def colorings(draw, max_side=6, max_colors=3):
    w = draw(st.integers(1, max_side))
    h = draw(st.integers(1, max_side))
    k = draw(st.integers(1, max_colors))
    cells = draw(st.lists(st.integers(0, k - 1), min_size=w * h, max_size=w * h))
    return GridColoring(w, h, k, cells)


small_configs = st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2)), min_size=1, max_size=4).map(Configuration)


class TestModel:
    def test_rejects_bad_cells(self):
        with pytest.raises(ValueError):
            GridColoring(2, 2, 2, [0, 1, 2, 0])
        with pytest.raises(ValueError):
            GridColoring(2, 2, 2, [0, 1, 1])
        with pytest.raises(ValueError):
            GridColoring(0, 2, 2, [])

    def test_masks_round_trip(self):
        g = GridColoring(3, 2, 3, [0, 1, 2, 2, 1, 0])
        assert GridColoring.from_masks(3, 2, g.row_masks) == g
        with pytest.raises(ValueError):
            GridColoring.from_masks(2, 1, [[0b11], [0b01]])

    def test_configuration_normalized(self):
        c = Configuration([(3, 5), (4, 5), (3, 5)])
        assert c.points == ((0, 0), (1, 0))
        assert c == DOMINO

    def test_homothety_rejects_zero_dilation(self):
        with pytest.raises(ValueError):
            Homothety(0, 0, 0)


class TestRectangles:
    def test_constant(self):
        assert find_mono_rectangle(GridColoring.constant(2, 2)) == RectangleWitness(0, 0, 1, 1, 0)

    def test_checkerboard_2x2(self):
        assert find_mono_rectangle(checkerboard(2, 2)) is None

    def test_single_row_has_none(self):
        assert find_mono_rectangle(GridColoring.constant(7, 1)) is None
        assert find_mono_rectangle(GridColoring.constant(1, 7)) is None

    @pytest.mark.parametrize("w,h", [(2, 2), (2, 3), (3, 3), (2, 5), (3, 4)])
    def test_canonical_witness_matches_oracle(self, w, h):
        for code in range(1 << (w * h)):
            cells = [(code >> i) & 1 for i in range(w * h)]
            hit = find_mono_rectangle(GridColoring(w, h, 2, cells))
            expected = mono_rectangles(cells, w, h)
            if not expected:
                assert hit is None
            else:
                d2, d1, y, x, c = expected[0]
                assert hit == RectangleWitness(x, y, d1, d2, c)

    @given(colorings())
    def test_soundness(self, g):
        hit = find_mono_rectangle(g)
        oracle = mono_rectangles(g.cells, g.width, g.height)
        assert (hit is None) == (not oracle)
        if hit:
            assert {g[p] for p in hit.corners} == {hit.color}
            assert (hit.d2, hit.d1, hit.y, hit.x, hit.color) == oracle[0]


class TestSquares:
    def test_constant(self):
        hit = find_mono_square(GridColoring.constant(2, 2))
        assert hit.d1 == hit.d2 == 1

    def test_checkerboard_even_dilation(self):
        hit = find_mono_square(checkerboard(4, 4))
        assert (hit.x, hit.y, hit.d1) == (0, 0, 2)

    @given(colorings())
    def test_matches_oracle(self, g):
        hit = find_mono_square(g)
        oracle = mono_squares(g.cells, g.width, g.height)
        if not oracle:
            assert hit is None
        else:
            d, y, x, c = oracle[0]
            assert hit == RectangleWitness(x, y, d, d, c)

    def test_random_15x15_always_forced(self):
        rng = random.Random(15)
        for _ in range(200):
            g = GridColoring(15, 15, 2, [rng.randrange(2) for _ in range(225)])
            assert find_mono_square(g) is not None

    def test_adversarial_15x15_forced(self):
        # patterns that are square-free on smaller windows still fail at 15
        row = [0, 0, 1, 0, 0, 1, 1, 1, 1, 0, 0, 1, 0, 0, 0]
        for shift in range(15):
            cells = [row[(x + shift * y) % 15] for y in range(15) for x in range(15)]
            assert find_mono_square(GridColoring(15, 15, 2, cells)) is not None
        assert find_mono_square(checkerboard(15, 15)) is not None


class TestHomothety:
    def test_single_point(self):
        for c in range(3):
            assert find_homothetic_copy(GridColoring(1, 1, 3, [c]), POINT) == (Homothety(0, 0, 1), c)

    def test_square_on_constant(self):
        assert find_homothetic_copy(GridColoring.constant(2, 2, 1), SQUARE) == (Homothety(0, 0, 1), 1)

    def test_enumerate_examples(self):
        rows = list(enumerate_witnesses(GridColoring.constant(2, 2), DOMINO))
        assert rows == [(Homothety(0, 0, 1), 0), (Homothety(0, 1, 1), 0)]
        assert len(list(enumerate_witnesses(GridColoring.constant(3, 3), POINT))) == 9

    def test_emptiness_exhaustive_small(self):
        # every config with <= 4 points in {0,1,2}^2, every 2-coloring with w*h <= 9
        pts = list(itertools.product(range(3), repeat=2))
        configs = {Configuration(c) for n in range(1, 5) for c in itertools.combinations(pts, n)}
        shapes = [(w, h) for w in range(1, 10) for h in range(1, 10) if w * h <= 9]
        for w, h in shapes:
            grids = [GridColoring(w, h, 2, [(code >> i) & 1 for i in range(w * h)]) for code in range(1 << (w * h))]
            for config in configs:
                if config.span_x >= w or config.span_y >= h:
                    continue
                for g in grids:
                    hit = find_homothetic_copy(g, config)
                    assert (hit is None) == (not mono_homotheties(g.cells, w, h, config.points))

    def test_emptiness_random_up_to_18(self):
        rng = random.Random(18)
        pts = list(itertools.product(range(3), repeat=2))
        shapes = [(w, h) for w in range(1, 19) for h in range(1, 19) if 9 < w * h <= 18]
        for _ in range(3000):
            w, h = rng.choice(shapes)
            config = Configuration(rng.sample(pts, rng.randint(1, 4)))
            g = GridColoring(w, h, 2, [rng.randrange(2) for _ in range(w * h)])
            assert (find_homothetic_copy(g, config) is None) == (not mono_homotheties(g.cells, w, h, config.points))

    def test_count_random_5x5_3_colors(self):
        rng = random.Random(5)
        for _ in range(200):
            config = Configuration(rng.sample(list(itertools.product(range(3), repeat=2)), rng.randint(1, 4)))
            g = GridColoring(5, 5, 3, [rng.randrange(3) for _ in range(25)])
            got = [(h.dilation, h.translate_y, h.translate_x, c) for h, c in enumerate_witnesses(g, config)]
            assert got == mono_homotheties(g.cells, 5, 5, config.points)

    @settings(max_examples=200)
    @given(colorings(), small_configs)
    def test_witnesses_in_canonical_order_and_sound(self, g, config):
        seen = list(enumerate_witnesses(g, config))
        keys = [(h.dilation, h.translate_y, h.translate_x) for h, _ in seen]
        assert keys == sorted(set(keys))
        for h, c in seen:
            image = h.apply(config)
            assert all(0 <= x < g.width and 0 <= y < g.height for x, y in image)
            assert {g[p] for p in image} == {c}
        first = find_homothetic_copy(g, config)
        assert first == (seen[0] if seen else None)

    @settings(max_examples=150)
    @given(colorings(max_side=5), small_configs, st.integers(0, 3), st.integers(0, 3), st.randoms())
    def test_extension_is_monotone(self, g, config, dx, dy, rnd):
        w, h = g.width + dx, g.height + dy
        cells = [g[x, y] if x < g.width and y < g.height else rnd.randrange(g.colors)
                 for y in range(h) for x in range(w)]
        big = GridColoring(w, h, g.colors, cells)
        assert set(enumerate_witnesses(g, config)) <= set(enumerate_witnesses(big, config))

    @given(colorings(), small_configs)
    def test_deterministic(self, g, config):
        again = GridColoring(g.width, g.height, g.colors, list(g.cells))
        assert find_homothetic_copy(g, config) == find_homothetic_copy(again, config)
        assert find_mono_rectangle(g) == find_mono_rectangle(again)


class TestThreshold:
    def test_single_point_forced_everywhere(self):
        report = forced_threshold(POINT, 2, 3)
        assert [v.status for v in report.verdicts] == [FORCED] * 3
        assert report.threshold == 1

    def test_domino(self):
        # dilation-2 dominoes make n = 3 forced; column alternation fails there
        report = forced_threshold(DOMINO, 2, 4)
        assert [v.status for v in report.verdicts] == [AVOIDABLE, AVOIDABLE, FORCED, FORCED]
        assert count_avoiding(2, 2, 2, DOMINO) == 4
        assert report.is_monotone()
        for v in report.verdicts:
            if v.witness is not None:
                assert find_homothetic_copy(v.witness, DOMINO) is None

    def test_square_small(self):
        report = forced_threshold(SQUARE, 2, 4)
        assert [v.status for v in report.verdicts] == [AVOIDABLE] * 4
        assert all(v.method == "exhaustive" for v in report.verdicts)

    @pytest.mark.slow
    def test_square_12_avoidable_by_solver(self):
        report = forced_threshold(SQUARE, 2, 12)
        v = report.verdicts[-1]
        assert (v.n, v.status, v.method) == (12, AVOIDABLE, "solver")
        assert find_mono_square(v.witness) is None

    def test_budget_gives_unknown(self):
        report = forced_threshold(SQUARE, 2, 6, budget=1)
        assert report.status(6) == "unknown"
        assert report.status(4) == AVOIDABLE

    def test_rejects_bad_max_n(self):
        with pytest.raises(ValueError):
            forced_threshold(SQUARE, 2, 0)
