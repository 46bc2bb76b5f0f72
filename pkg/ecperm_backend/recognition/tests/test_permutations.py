import itertools

from django.test import SimpleTestCase
from hypothesis import given, settings

from recognition.core.colored import SimpleGraph, lift_simple_graph
from recognition.core.exceptions import (
    ArityMismatch,
    DegenerateGraph,
    EmptyColorClass,
    InvalidLabeling,
    InvalidPermutation,
    NotARealization,
    OverlapPair,
    UncoveredPair,
)
from recognition.core.oracle import brute_force_recognize
from recognition.core.permutations import (
    Labeling,
    Permutation,
    generate_colored,
    inverse,
    inversion_graph,
    permutation_graph,
    recognize_simple,
    reverse,
    two_color_lift,
    verify,
)

from .fixtures import (
    SEVEN_PI,
    SEVEN_PI_BAR,
    FOUR_PERMS,
    EIGHT_LABELS,
    EIGHT_PERMS,
    cycle_graph,
    four_perm_graph,
    eight_vertex_graph,
    path_graph,
    permutations,
    rainbow_k3,
    simple_graphs,
)


class PermutationTest(SimpleTestCase):
    def test_inverse(self):
        self.assertEqual(inverse(Permutation(SEVEN_PI)), Permutation((1, 3, 6, 4, 2, 7, 5)))
        self.assertEqual(inverse(Permutation((3, 1, 4, 2))), Permutation((2, 4, 1, 3)))
        self.assertEqual(inverse(Permutation.identity(5)), Permutation.identity(5))

    def test_reverse(self):
        self.assertEqual(reverse(Permutation(SEVEN_PI)), Permutation(SEVEN_PI_BAR))
        self.assertEqual(reverse(Permutation((1,))), Permutation((1,)))

    def test_invalid_sequences(self):
        for seq in [(), (1, 1), (0, 1), (1, 3), (2,)]:
            with self.assertRaises(InvalidPermutation):
                Permutation(seq)

    def test_text_form(self):
        self.assertEqual(str(Permutation((2, 3, 1))), "(2,3,1)")

    def test_inversions(self):
        self.assertEqual(Permutation.identity(6).inversions(), 0)
        self.assertEqual(Permutation.identity(6).reverse().inversions(), 15)
        self.assertEqual(Permutation((5, 6, 7, 3, 1, 2, 4)).inversions(), 14)

    @settings(max_examples=80, deadline=None)
    @given(permutations())
    def test_inverse_and_reverse_are_involutions(self, pi):
        self.assertEqual(pi.inverse().inverse(), pi)
        self.assertEqual(pi.reverse().reverse(), pi)
        self.assertEqual(pi.inverse().inversions(), pi.inversions())

    @settings(max_examples=80, deadline=None)
    @given(permutations())
    def test_inversions_match_pair_count(self, pi):
        expected = sum(1 for a, b in itertools.combinations(pi.seq, 2) if a > b)
        self.assertEqual(pi.inversions(), expected)


class LabelingTest(SimpleTestCase):
    def test_from_order(self):
        labeling = Labeling.from_order([2, 0, 1])
        self.assertEqual(labeling.label_of, (2, 3, 1))
        self.assertEqual(labeling.order(), [2, 0, 1])

    def test_invalid_labeling(self):
        with self.assertRaises(InvalidLabeling):
            Labeling((0, 1))
        with self.assertRaises(InvalidLabeling):
            Labeling.from_order([0, 0])


class PermutationGraphTest(SimpleTestCase):
    def test_p4(self):
        graph = permutation_graph(Permutation((3, 1, 4, 2)))
        self.assertEqual(graph.edges, frozenset({(0, 2), (1, 2), (1, 3)}))

    def test_identity_is_edgeless(self):
        self.assertTrue(permutation_graph(Permutation.identity(5)).is_edgeless())

    def test_reversed_identity_is_complete(self):
        self.assertTrue(permutation_graph(Permutation.identity(5).reverse()).is_complete())

    def test_arity(self):
        with self.assertRaises(ArityMismatch):
            inversion_graph(Labeling.identity(3), Permutation.identity(4))

    @settings(max_examples=80, deadline=None)
    @given(permutations(min_n=2))
    def test_reverse_gives_the_complement(self, pi):
        labeling = Labeling(tuple(reversed(range(1, len(pi) + 1))))
        self.assertEqual(inversion_graph(labeling, pi.reverse()), inversion_graph(labeling, pi).complement())

    @settings(max_examples=80, deadline=None)
    @given(permutations(min_n=2))
    def test_decreasing_runs_are_cliques(self, pi):
        graph = permutation_graph(pi)
        adjacency = graph.adjacency()
        # the longest decreasing run from the front
        run = [pi.seq[0]]
        for x in pi.seq[1:]:
            if x < run[-1]:
                run.append(x)
        for a, b in itertools.combinations(run, 2):
            self.assertTrue(adjacency[a - 1, b - 1])


class GenerateColoredTest(SimpleTestCase):
    def test_eight_vertex(self):
        graph = eight_vertex_graph()
        self.assertEqual(graph.n, 8)
        self.assertEqual(graph.k, 3)
        self.assertEqual(list(graph.color_class_sizes()), [4, 17, 7])

    def test_identity_alone_leaves_pairs_uncovered(self):
        with self.assertRaises(UncoveredPair) as ctx:
            generate_colored(Labeling.identity(3), [Permutation.identity(3)])
        self.assertEqual(ctx.exception.pair, (0, 1))

    def test_overlap(self):
        with self.assertRaises(OverlapPair) as ctx:
            generate_colored(Labeling.identity(3), [Permutation((2, 1, 3)), Permutation((2, 3, 1))])
        self.assertEqual(ctx.exception.pair, (0, 1))
        self.assertEqual(ctx.exception.colors, (1, 2))

    def test_permutation_without_inversions(self):
        with self.assertRaises(EmptyColorClass):
            generate_colored(Labeling.identity(3), [Permutation((3, 2, 1)), Permutation.identity(3)])

    def test_arity(self):
        with self.assertRaises(ArityMismatch):
            generate_colored(Labeling.identity(3), [Permutation((2, 1))])


class VerifyTest(SimpleTestCase):
    def test_eight_vertex_certificate(self):
        perms = [Permutation(p) for p in EIGHT_PERMS]
        self.assertTrue(verify(eight_vertex_graph(), Labeling(EIGHT_LABELS), perms))

    def test_four_perm_certificate(self):
        self.assertTrue(verify(four_perm_graph(), Labeling.identity(7), [Permutation(p) for p in FOUR_PERMS]))

    def test_wrong_labeling_fails(self):
        perms = [Permutation(p) for p in EIGHT_PERMS]
        self.assertFalse(verify(eight_vertex_graph(), Labeling.identity(8), perms))

    def test_swapped_colors_fail(self):
        perms = [Permutation(p) for p in EIGHT_PERMS]
        self.assertFalse(verify(eight_vertex_graph(), Labeling(EIGHT_LABELS), [perms[1], perms[0], perms[2]]))

    def test_rainbow_k3_has_no_certificate(self):
        graph = rainbow_k3()
        candidates = [Permutation(p) for p in itertools.permutations((1, 2, 3))]
        for labels in itertools.permutations((1, 2, 3)):
            for perms in itertools.product(candidates, repeat=3):
                self.assertFalse(verify(graph, Labeling(labels), perms))

    def test_arity(self):
        with self.assertRaises(ArityMismatch):
            verify(eight_vertex_graph(), Labeling(EIGHT_LABELS), [Permutation(p) for p in EIGHT_PERMS[:2]])

    def test_k2(self):
        graph = generate_colored(Labeling.identity(2), [Permutation((2, 1))])
        self.assertTrue(verify(graph, Labeling.identity(2), [Permutation((2, 1))]))


class RecognizeSimpleTest(SimpleTestCase):
    def test_p4(self):
        graph = path_graph(4)
        labeling, pi = recognize_simple(graph)
        self.assertEqual(inversion_graph(labeling, pi), graph)

    def test_edgeless(self):
        labeling, pi = recognize_simple(SimpleGraph.from_edges(4, []))
        self.assertEqual(labeling, Labeling.identity(4))
        self.assertEqual(pi, Permutation.identity(4))

    def test_c5_is_not_a_permutation_graph(self):
        self.assertIsNone(recognize_simple(cycle_graph(5)))

    @settings(max_examples=60, deadline=None)
    @given(simple_graphs(min_n=2, max_n=6))
    def test_agrees_with_brute_force(self, graph):
        result = recognize_simple(graph)
        if result is not None:
            labeling, pi = result
            self.assertEqual(inversion_graph(labeling, pi), graph)
        self.assertEqual(result is None, brute_force_recognize(lift_simple_graph(graph)) is None)


class TwoColorLiftTest(SimpleTestCase):
    def test_seven_pair(self):
        pi = Permutation(SEVEN_PI)
        graph = permutation_graph(pi)
        certificate = two_color_lift(graph, Labeling.identity(7), pi)
        self.assertEqual(certificate.perms, (pi, Permutation(SEVEN_PI_BAR)))
        self.assertTrue(verify(lift_simple_graph(graph), certificate.labeling, certificate.perms))

    def test_p4(self):
        pi = Permutation((3, 1, 4, 2))
        certificate = two_color_lift(permutation_graph(pi), Labeling.identity(4), pi)
        self.assertEqual(certificate.k, 2)

    def test_degenerate_graphs(self):
        with self.assertRaises(DegenerateGraph):
            two_color_lift(SimpleGraph.from_edges(3, []), Labeling.identity(3), Permutation.identity(3))
        reversed_identity = Permutation.identity(3).reverse()
        with self.assertRaises(DegenerateGraph):
            two_color_lift(permutation_graph(reversed_identity), Labeling.identity(3), reversed_identity)

    def test_not_a_realization(self):
        with self.assertRaises(NotARealization):
            two_color_lift(path_graph(4), Labeling.identity(4), Permutation((3, 1, 4, 2)))
