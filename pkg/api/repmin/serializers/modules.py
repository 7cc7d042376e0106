"""Representation serializers.

Vectors and matrices are written with exact fraction strings.
"""

# Django REST Framework
from rest_framework import serializers

# Models
from api.repmin.models import format_scalar

# Repmin
from api.repmin.modules import label_text

# Serializers
from api.coxeter.serializers import GeneratorSetField


__all__ = [
    'RationalVectorField',
    'HeckeModuleSerializer',
    'SocleComponentSerializer',
    'SocleReportSerializer',
    'SimpleSocleSerializer',
    'MinDimReportSerializer',
    'DCMinDimSerializer',
]


class RationalVectorField(serializers.Field):

    def to_representation(self, value):
        return [format_scalar(v) for v in value]


class HeckeModuleSerializer(serializers.Serializer):

    name = serializers.CharField()
    dimension = serializers.IntegerField()
    field = serializers.SerializerMethodField()
    basis = serializers.SerializerMethodField()
    actions = serializers.SerializerMethodField()

    def get_field(self, obj):
        return 'Q' if obj.modulus is None else 'F{}'.format(obj.modulus)

    def get_basis(self, obj):
        return [label_text(obj.system, label) for label in obj.basis]

    def get_actions(self, obj):
        return [matrix.lines() for matrix in obj.actions]


class SocleComponentSerializer(serializers.Serializer):

    J = GeneratorSetField()
    dimension = serializers.IntegerField()
    basis = serializers.ListField(child=RationalVectorField())


class SocleReportSerializer(serializers.Serializer):

    module = serializers.CharField(source='module.name')
    dimension = serializers.IntegerField()
    components = SocleComponentSerializer(many=True)


class SimpleSocleSerializer(serializers.Serializer):

    generator = serializers.SerializerMethodField()
    dimension = serializers.IntegerField()
    type = GeneratorSetField(allow_null=True)
    expected_type = GeneratorSetField()
    spanned_by_expected = serializers.BooleanField()
    holds = serializers.BooleanField()

    def get_generator(self, obj):
        return obj['generator'] + 1


class MinDimReportSerializer(serializers.Serializer):

    system = serializers.CharField()
    claimed = serializers.IntegerField()
    constructed_dim = serializers.IntegerField()
    effective = serializers.BooleanField()
    relations = serializers.BooleanField()
    socle_verified = serializers.BooleanField()


class DCMinDimSerializer(serializers.Serializer):

    n = serializers.IntegerField()
    dim = serializers.IntegerField()
    expected_dim = serializers.IntegerField()
    dc_size = serializers.IntegerField()
    factors = serializers.BooleanField()
    effective = serializers.BooleanField()
