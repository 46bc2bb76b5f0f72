from rest_framework import serializers

from .core.colored import ColoredGraph, build_colored_graph
from .core.exceptions import ECPermError
from .core.modular import MDTree
from .core.permutations import Certificate, Labeling, Permutation
from .core.recognizer import Obstruction, ObstructionKind


class EdgeField(serializers.ListField):
    child = serializers.IntegerField()

    def __init__(self, **kwargs):
        super().__init__(min_length=3, max_length=3, **kwargs)


class ColoredGraphSerializer(serializers.Serializer):
    """JSON mirror of the ECG format: ``{"n": ..., "edges": [[u, v, c], ...]}``"""
    n = serializers.IntegerField(min_value=1)
    k = serializers.IntegerField(read_only=True)
    edges = serializers.ListField(child=EdgeField(), allow_empty=True)

    def validate(self, attrs):
        try:
            attrs['graph'] = build_colored_graph(attrs['n'], attrs['edges'])
        except ECPermError as e:
            raise serializers.ValidationError({'edges': str(e)})
        return attrs

    def to_representation(self, instance):
        if isinstance(instance, ColoredGraph):
            return {'n': instance.n, 'k': instance.k, 'edges': instance.written_edges()}
        return super().to_representation(instance)


class PermutationField(serializers.Field):
    default_error_messages = {
        'invalid': 'Expected a permutation of 1..n as a list of integers.',
    }

    def to_representation(self, value):
        return list(value.seq)

    def to_internal_value(self, data):
        try:
            return Permutation(tuple(int(x) for x in data))
        except (TypeError, ValueError):
            self.fail('invalid')


class CertificateSerializer(serializers.Serializer):
    labeling = serializers.DictField(child=serializers.IntegerField(min_value=1))
    permutations = serializers.ListField(child=PermutationField())

    def validate(self, attrs):
        try:
            by_vertex = {int(v): label for v, label in attrs['labeling'].items()}
            labels = tuple(by_vertex[v] for v in range(len(by_vertex)))
            attrs['certificate'] = Certificate(Labeling(labels), tuple(attrs['permutations']))
        except (KeyError, ValueError) as e:
            raise serializers.ValidationError({'labeling': f"not a labeling of 0..n-1: {str(e)}"})
        return attrs

    def to_representation(self, instance):
        if isinstance(instance, Certificate):
            return {
                'labeling': {str(v): label for v, label in enumerate(instance.labeling.label_of)},
                'permutations': [list(pi.seq) for pi in instance.perms],
            }
        return super().to_representation(instance)


class TriangleSerializer(serializers.Serializer):
    vertices = serializers.ListField(child=serializers.IntegerField())
    colors = serializers.ListField(child=serializers.IntegerField())


class ObstructionSerializer(serializers.Serializer):
    kind = serializers.ChoiceField(choices=[kind.value for kind in ObstructionKind])
    triangle = TriangleSerializer(allow_null=True)
    module = serializers.ListField(child=serializers.IntegerField(), allow_null=True)
    quotient_colors = serializers.ListField(child=serializers.IntegerField())
    color = serializers.IntegerField(allow_null=True)

    def __init__(self, *args, graph=None, **kwargs):
        self.graph = graph
        super().__init__(*args, **kwargs)

    def _label(self, color):
        # report colors the way the input file spelled them
        return self.graph.color_labels[color - 1] if self.graph is not None else color

    def to_representation(self, instance):
        if not isinstance(instance, Obstruction):
            return super().to_representation(instance)
        triangle = None
        if instance.triangle is not None:
            triangle = {
                'vertices': list(instance.triangle.vertices),
                'colors': [self._label(c) for c in instance.triangle.colors],
            }
        return {
            'kind': instance.kind.value,
            'triangle': triangle,
            'module': list(instance.module) if instance.module is not None else None,
            'quotient_colors': [self._label(c) for c in instance.quotient_colors],
            'color': self._label(instance.color) if instance.color is not None else None,
        }


def outcome_payload(graph, outcome):
    if isinstance(outcome, Certificate):
        return {'member': True, 'certificate': CertificateSerializer(outcome).data}
    return {'member': False, 'obstruction': ObstructionSerializer(outcome, graph=graph).data}


class MDTreeSerializer(serializers.Serializer):
    """Read-only view of a decomposition tree."""

    def to_representation(self, instance: MDTree):
        return {
            'root': instance.root.id,
            'nodes': [
                {
                    'id': node.id,
                    'vertices': list(node.vertices),
                    'kind': node.kind.value,
                    'parent': node.parent,
                    'children': list(node.children),
                    'representatives': list(node.representatives),
                    'quotient': ColoredGraphSerializer(node.quotient).data if node.quotient is not None else None,
                }
                for node in instance
            ],
        }


class QuotientModuleSerializer(serializers.Serializer):
    vertices = serializers.ListField(child=serializers.IntegerField(min_value=0), min_length=2)
    order = serializers.ListField(child=serializers.IntegerField(min_value=0), min_length=2)


class QuotientLabelsSerializer(serializers.Serializer):
    modules = QuotientModuleSerializer(many=True)

    def validate(self, attrs):
        attrs['pins'] = {frozenset(item['vertices']): item['order'] for item in attrs['modules']}
        return attrs


class ClassificationSerializer(serializers.Serializer):
    """Class membership flags reported by ``classify``."""
    n = serializers.IntegerField()
    k = serializers.IntegerField()
    gallai = serializers.BooleanField()
    symbolic_ultrametric = serializers.BooleanField()
    ultrametric_axioms = serializers.BooleanField(allow_null=True)
    colored_permutation = serializers.BooleanField()


class RestrictionSerializer(serializers.Serializer):
    def to_representation(self, instance):
        return {
            'graph': ColoredGraphSerializer(instance.graph).data,
            'certificate': CertificateSerializer(instance.certificate).data,
            'vertex_map': {str(old): new for old, new in instance.vertex_map.items()},
            'color_map': {str(old): new for old, new in instance.color_map.items()},
        }
