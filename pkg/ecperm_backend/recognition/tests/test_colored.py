import numpy as np
from django.test import SimpleTestCase
from hypothesis import given, settings

from recognition.core.colored import (
    ColoredGraph,
    SimpleGraph,
    Triangle,
    build_colored_graph,
    disconnected_color,
    find_rainbow_triangle,
    induced_subgraph,
    lift_simple_graph,
    monochromatic_subgraph,
    substitute,
)
from recognition.core.exceptions import (
    DuplicatePair,
    EmptyGraph,
    EmptySet,
    InvalidColor,
    MissingPair,
    SelfLoop,
    UnknownColor,
    VertexOutOfRange,
)

from .fixtures import colored_graphs, nested_modules_graph, rainbow_prime_graph, one_colored, path_graph, rainbow_k3


class BuildColoredGraphTest(SimpleTestCase):
    def test_single_vertex(self):
        graph = build_colored_graph(1, [])
        self.assertEqual(graph.n, 1)
        self.assertEqual(graph.k, 0)

    def test_nested_modules_has_four_colors(self):
        graph = nested_modules_graph()
        self.assertEqual(graph.n, 7)
        self.assertEqual(graph.k, 4)
        self.assertEqual(list(graph.color_class_sizes()), [8, 2, 10, 1])

    def test_missing_pair(self):
        with self.assertRaises(MissingPair) as ctx:
            build_colored_graph(3, [(0, 1, 1), (1, 2, 1)])
        self.assertEqual(ctx.exception.pair, (0, 2))

    def test_duplicate_pair_in_either_direction(self):
        with self.assertRaises(DuplicatePair) as ctx:
            build_colored_graph(3, [(0, 1, 1), (1, 2, 1), (1, 0, 2), (0, 2, 1)])
        self.assertEqual(ctx.exception.pair, (0, 1))

    def test_self_loop(self):
        with self.assertRaises(SelfLoop):
            build_colored_graph(2, [(0, 1, 1), (1, 1, 1)])

    def test_vertex_out_of_range(self):
        with self.assertRaises(VertexOutOfRange):
            build_colored_graph(2, [(0, 2, 1)])

    def test_non_positive_color(self):
        with self.assertRaises(InvalidColor):
            build_colored_graph(2, [(0, 1, 0)])

    def test_empty_graph(self):
        with self.assertRaises(EmptyGraph):
            build_colored_graph(0, [])

    def test_errors_are_value_errors(self):
        with self.assertRaises(ValueError):
            build_colored_graph(3, [(0, 1, 1)])

    def test_colors_renumbered_in_order_of_first_appearance(self):
        graph = build_colored_graph(3, [(0, 1, 30), (0, 2, 7), (1, 2, 30)])
        self.assertEqual(graph.k, 2)
        self.assertEqual(graph.color_labels, (30, 7))
        self.assertEqual(graph.color(0, 2), 2)
        self.assertEqual(graph.color(1, 0), 1)
        self.assertEqual(graph.labeled_edges(), [[0, 1, 30], [0, 2, 7], [1, 2, 30]])
        self.assertEqual(build_colored_graph(3, [(0, 1, 7), (0, 2, 3), (1, 2, 3)]).color(0, 1), 1)
        self.assertEqual(build_colored_graph(3, [(1, 2, 3), (0, 1, 7), (0, 2, 3)]).color(0, 1), 2)

    def test_written_edges_follow_color_numbering(self):
        graph = build_colored_graph(3, [(1, 2, 3), (0, 1, 7), (0, 2, 3)])
        self.assertEqual(graph.written_edges(), [[0, 2, 3], [1, 2, 3], [0, 1, 7]])

    def test_induced_subgraph_keeps_color_order(self):
        graph = build_colored_graph(4, [(2, 3, 9), (0, 1, 4), (0, 2, 4), (0, 3, 4), (1, 2, 9), (1, 3, 4)])
        sub, _ = induced_subgraph(graph, [0, 1, 2])
        self.assertEqual(sub.color_labels, (9, 4))
        self.assertEqual(induced_subgraph(graph, range(4))[0], graph)

    def test_table_is_read_only(self):
        graph = nested_modules_graph()
        with self.assertRaises(ValueError):
            graph.table[0, 1] = 2

    @settings(max_examples=80, deadline=None)
    @given(colored_graphs(min_n=2))
    def test_color_classes_partition_the_pairs(self, graph):
        sizes = graph.color_class_sizes()
        self.assertEqual(int(sizes.sum()), graph.n * (graph.n - 1) // 2)
        self.assertTrue((sizes > 0).all())
        self.assertTrue(np.array_equal(graph.table, graph.table.T))


class MonochromaticSubgraphTest(SimpleTestCase):
    def test_nested_modules_color_two(self):
        subgraph = monochromatic_subgraph(nested_modules_graph(), 2)
        self.assertEqual(subgraph.n, 7)
        self.assertEqual(subgraph.edges, frozenset({(2, 3), (2, 4)}))

    def test_nested_modules_color_four(self):
        self.assertEqual(monochromatic_subgraph(nested_modules_graph(), 4).edges, frozenset({(0, 1)}))

    def test_one_colored_k2(self):
        self.assertEqual(monochromatic_subgraph(one_colored(2), 1), SimpleGraph.from_edges(2, [(0, 1)]))

    def test_unknown_color(self):
        with self.assertRaises(UnknownColor):
            monochromatic_subgraph(nested_modules_graph(), 5)
        with self.assertRaises(UnknownColor):
            monochromatic_subgraph(nested_modules_graph(), 0)


class RainbowTriangleTest(SimpleTestCase):
    def test_rainbow_prime_has_a_rainbow_triangle(self):
        graph = rainbow_prime_graph()
        self.assertEqual(find_rainbow_triangle(graph), Triangle(0, 3, 4, (1, 3, 2)))
        d, e, f = 3, 4, 5
        self.assertTrue(Triangle(d, e, f, (graph.color(d, e), graph.color(d, f), graph.color(e, f))).is_rainbow())

    def test_two_colored_graph_has_none(self):
        self.assertIsNone(find_rainbow_triangle(lift_simple_graph(path_graph(5))))

    def test_rainbow_k3(self):
        triangle = find_rainbow_triangle(rainbow_k3())
        self.assertEqual(triangle.vertices, (0, 1, 2))
        self.assertTrue(triangle.is_rainbow())

    @settings(max_examples=60, deadline=None)
    @given(colored_graphs(min_n=3, max_k=3))
    def test_witness_is_rainbow(self, graph):
        triangle = find_rainbow_triangle(graph)
        if triangle is None:
            return
        u, v, w = triangle.vertices
        self.assertTrue(u < v < w)
        self.assertEqual(len({graph.color(u, v), graph.color(u, w), graph.color(v, w)}), 3)


class InducedSubgraphTest(SimpleTestCase):
    def test_module_of_nested_modules_is_one_colored(self):
        sub, mapping = induced_subgraph(nested_modules_graph(), {3, 4})
        self.assertEqual(sub.n, 2)
        self.assertEqual(sub.k, 1)
        self.assertEqual(sub.color_labels, (3,))
        self.assertEqual(mapping, {3: 0, 4: 1})

    def test_whole_vertex_set(self):
        graph = nested_modules_graph()
        sub, mapping = induced_subgraph(graph, range(7))
        self.assertEqual(sub, graph)
        self.assertEqual(mapping, {v: v for v in range(7)})

    def test_rainbow_prime_def_is_rainbow(self):
        sub, _ = induced_subgraph(rainbow_prime_graph(), [5, 3, 4])
        self.assertEqual(sub.k, 3)
        self.assertIsNotNone(find_rainbow_triangle(sub))

    def test_empty_set(self):
        with self.assertRaises(EmptySet):
            induced_subgraph(nested_modules_graph(), [])


class DisconnectedColorTest(SimpleTestCase):
    def test_rainbow_prime(self):
        self.assertEqual(disconnected_color(rainbow_prime_graph()), 1)

    def test_complete_graph_has_none(self):
        self.assertIsNone(disconnected_color(one_colored(4)))

    @settings(max_examples=80, deadline=None)
    @given(colored_graphs(min_n=3, max_k=4))
    def test_rainbow_free_graph_with_three_colors_has_one(self, graph):
        if graph.k >= 3 and find_rainbow_triangle(graph) is None:
            self.assertIsNotNone(disconnected_color(graph))


class SubstituteTest(SimpleTestCase):
    def test_blocks_keep_inner_colors(self):
        skeleton = build_colored_graph(2, [(0, 1, 5)])
        graph = substitute(skeleton, [one_colored(2, color=2), one_colored(1)])
        self.assertEqual(graph.n, 3)
        self.assertEqual(graph.color_labels, (2, 5))
        self.assertEqual(graph.labeled_edges(), [[0, 1, 2], [0, 2, 5], [1, 2, 5]])

    def test_from_table_rejects_asymmetric_input(self):
        with self.assertRaises(ValueError):
            ColoredGraph.from_table(np.array([[0, 1], [2, 0]]))
