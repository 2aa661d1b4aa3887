import random

import numpy as np
import pytest

from covnum import (
    EdgeColoring,
    VertexId,
    cyclic_biclique,
    decompose,
    hamming,
    is_spanning,
    make_shape,
    vector_of,
)
from covnum.hypercore import (
    format_coloring_json,
    format_coloring_text,
    parse_coloring,
    parse_coloring_json,
    parse_coloring_text,
)

from oracles import flood_fill_components, naive_is_spanning, random_coloring, random_small_shape


def all_one_color(shape):
    return EdgeColoring(shape, np.ones(shape.edge_count, dtype=np.int32))


class TestShape:
    def test_edge_count(self):
        assert make_shape(3, 4, [2, 2, 2]).edge_count == 8
        assert make_shape(2, 3, [3, 3]).edge_count == 9

    def test_rejects_nonpositive_part(self):
        with pytest.raises(ValueError):
            make_shape(3, 2, [2, 0, 2])

    def test_rejects_bad_dimensions(self):
        with pytest.raises(ValueError):
            make_shape(3, 2, [2, 2])
        with pytest.raises(ValueError):
            make_shape(1, 2, [2])
        with pytest.raises(ValueError):
            make_shape(2, 0, [2, 2])

    def test_rejects_edge_count_overflow(self):
        with pytest.raises(OverflowError):
            make_shape(4, 2, [2**62, 2**62, 2, 2])

    def test_vertex_bijection(self):
        shape = make_shape(3, 2, [2, 3, 1])
        seen = set()
        for part in range(1, 4):
            for index in range(1, shape.part_sizes[part - 1] + 1):
                g = shape.global_index(VertexId(part, index))
                assert shape.vertex_id(g) == VertexId(part, index)
                seen.add(g)
        assert seen == set(range(shape.total_vertices))

    def test_vertex_range_errors(self):
        shape = make_shape(2, 2, [2, 2])
        with pytest.raises(ValueError):
            shape.global_index(VertexId(3, 1))
        with pytest.raises(ValueError):
            shape.global_index(VertexId(1, 3))
        with pytest.raises(ValueError):
            shape.vertex_id(4)

    def test_edge_enumeration_last_part_fastest(self):
        shape = make_shape(2, 1, [2, 3])
        assert shape.edge_index((0, 0)) == 0
        assert shape.edge_index((0, 2)) == 2
        assert shape.edge_index((1, 0)) == 3
        assert shape.edge_tuple(4) == (1, 1)


class TestDecompose:
    def test_single_color_single_component(self):
        shape = make_shape(3, 1, [2, 2, 2])
        table = decompose(all_one_color(shape))
        assert table.counts == (1,)
        assert set(table.rows[0]) == {1}
        assert len(table.members(1, 1)) == 6

    def test_cyclic_biclique_components(self):
        table = decompose(cyclic_biclique(3))
        assert table.counts == (3, 3, 3)
        for c in range(1, 4):
            for j in range(1, 4):
                assert len(table.members(c, j)) == 2

    def test_zero_edge_color_gives_singletons(self):
        shape = make_shape(2, 2, [2, 2])
        table = decompose(all_one_color(shape))
        assert table.counts == (1, 4)
        assert list(table.rows[1]) == [1, 2, 3, 4]

    def test_matches_flood_fill_oracle(self):
        rng = random.Random(1)
        for _ in range(40):
            coloring = random_coloring(random_small_shape(rng), rng)
            table = decompose(coloring)
            rows, counts = flood_fill_components(coloring)
            assert tuple(counts) == table.counts
            assert [list(r) for r in table.rows] == rows

    def test_deterministic(self):
        rng = random.Random(2)
        coloring = random_coloring(random_small_shape(rng), rng)
        t1 = decompose(coloring)
        t2 = decompose(coloring)
        assert (t1.rows == t2.rows).all()
        assert t1.counts == t2.counts

    def test_partition_and_edge_coherence(self):
        rng = random.Random(3)
        for _ in range(20):
            coloring = random_coloring(random_small_shape(rng), rng)
            table = decompose(coloring)
            shape = coloring.shape
            for c in range(1, shape.k + 1):
                row = table.rows[c - 1]
                ids = set(int(x) for x in row)
                assert ids == set(range(1, table.counts[c - 1] + 1))
            for e in range(shape.edge_count):
                c = int(coloring.colors[e])
                ids = {int(table.rows[c - 1][g]) for g in shape.edge_vertices[e]}
                assert len(ids) == 1

    def test_relabeling_invariance(self):
        rng = random.Random(4)
        for _ in range(15):
            shape = random_small_shape(rng)
            coloring = random_coloring(shape, rng)
            table = decompose(coloring)

            perm = list(range(1, shape.k + 1))
            rng.shuffle(perm)
            recolored = EdgeColoring(
                shape,
                np.asarray([perm[int(c) - 1] for c in coloring.colors], dtype=np.int32),
            )
            assert sorted(decompose(recolored).counts) == sorted(table.counts)

            # permute vertices inside one part
            p = rng.randint(1, shape.r)
            size = shape.part_sizes[p - 1]
            vperm = list(range(size))
            rng.shuffle(vperm)
            colors = np.empty(shape.edge_count, dtype=np.int32)
            for e in range(shape.edge_count):
                tup = list(shape.edge_tuple(e))
                tup[p - 1] = vperm[tup[p - 1]]
                colors[shape.edge_index(tuple(tup))] = coloring.colors[e]
            assert sorted(decompose(EdgeColoring(shape, colors)).counts) == sorted(
                table.counts
            )


class TestVectors:
    def test_single_component_vector(self):
        shape = make_shape(3, 1, [2, 2, 2])
        table = decompose(all_one_color(shape))
        assert vector_of(table, VertexId(2, 1)) == (1,)

    def test_cyclic_biclique_vectors_match_oracle(self):
        coloring = cyclic_biclique(3)
        table = decompose(coloring)
        rows, _ = flood_fill_components(coloring)
        shape = coloring.shape
        for g in range(shape.total_vertices):
            v = shape.vertex_id(g)
            assert vector_of(table, v) == tuple(r[g] for r in rows)

    def test_vector_agrees_with_table(self):
        rng = random.Random(5)
        coloring = random_coloring(random_small_shape(rng), rng)
        table = decompose(coloring)
        shape = coloring.shape
        for g in range(shape.total_vertices):
            vec = vector_of(table, shape.vertex_id(g))
            assert vec == tuple(int(table.rows[c][g]) for c in range(shape.k))

    def test_out_of_range_vertex(self):
        table = decompose(cyclic_biclique(2))
        with pytest.raises(ValueError):
            vector_of(table, VertexId(1, 5))


class TestHamming:
    def test_examples(self):
        assert hamming((1, 1, 1), (1, 1, 1)) == 0
        assert hamming((1, 1, 1), (2, 2, 1)) == 2
        assert hamming((1, 2, 3), (3, 2, 1)) == 2

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            hamming((1, 2), (1, 2, 3))

    def test_metric_properties(self):
        rng = random.Random(6)
        vecs = [tuple(rng.randint(1, 3) for _ in range(5)) for _ in range(30)]
        for u in vecs:
            for v in vecs:
                assert hamming(u, v) == hamming(v, u)
                assert (hamming(u, v) == 0) == (u == v)
                for w in vecs:
                    assert hamming(u, w) <= hamming(u, v) + hamming(v, w)


class TestSpanning:
    def test_cyclic_biclique_is_spanning(self):
        ok, witness = is_spanning(cyclic_biclique(3))
        assert ok and witness is None

    def test_unused_color_witness(self):
        shape = make_shape(2, 2, [2, 2])
        ok, witness = is_spanning(all_one_color(shape))
        assert not ok
        assert witness == (VertexId(1, 1), 2)

    def test_matches_naive_oracle(self):
        rng = random.Random(7)
        for _ in range(100):
            coloring = random_coloring(random_small_shape(rng, max_vertices=8), rng)
            assert is_spanning(coloring)[0] == naive_is_spanning(coloring)


class TestColoringValidation:
    def test_wrong_length(self):
        shape = make_shape(2, 2, [2, 2])
        with pytest.raises(ValueError):
            EdgeColoring(shape, np.ones(3, dtype=np.int32))

    def test_out_of_range_color(self):
        shape = make_shape(2, 2, [2, 2])
        with pytest.raises(ValueError):
            EdgeColoring(shape, np.asarray([1, 2, 3, 1], dtype=np.int32))
        with pytest.raises(ValueError):
            EdgeColoring(shape, np.asarray([0, 1, 1, 1], dtype=np.int32))


class TestFileFormats:
    def test_text_round_trip(self):
        coloring = cyclic_biclique(3)
        text = format_coloring_text(coloring)
        back = parse_coloring_text(text)
        assert back.shape == coloring.shape
        assert (back.colors == coloring.colors).all()

    def test_json_round_trip(self):
        coloring = cyclic_biclique(4)
        back = parse_coloring_json(format_coloring_json(coloring))
        assert back.shape == coloring.shape
        assert (back.colors == coloring.colors).all()

    def test_sniffing(self):
        coloring = cyclic_biclique(2)
        assert (parse_coloring(format_coloring_json(coloring)).colors == coloring.colors).all()
        assert (parse_coloring(format_coloring_text(coloring)).colors == coloring.colors).all()

    def test_wrong_length_rejected(self):
        with pytest.raises(ValueError):
            parse_coloring_text("2 2 2 2\n1 2 1\n")
        with pytest.raises(ValueError):
            parse_coloring_json('{"r":2,"k":2,"parts":[2,2],"colors":[1,2,1]}')

    def test_header_errors(self):
        with pytest.raises(ValueError):
            parse_coloring_text("")
        with pytest.raises(ValueError):
            parse_coloring_text("3 2 2 2\n1 1 1 1\n")
