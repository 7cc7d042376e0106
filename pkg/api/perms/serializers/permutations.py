"""Permutation serializers."""

# Django REST Framework
from rest_framework import serializers

# Models
from api.perms.models import Direction, MonotoneMap, Permutation

# Perms
from api.perms.statistics import alpha, beta
from api.perms.words import reduced_word

# Exceptions
from api.utils.exceptions import InvalidInput


__all__ = ['PermutationField', 'MonotoneMapField', 'PermutationSerializer']


class PermutationField(serializers.Field):
    """One-line notation string, e.g. "4231"."""

    def to_representation(self, value):
        return str(value)

    def to_internal_value(self, data):
        try:
            return Permutation.parse(str(data))
        except InvalidInput as error:
            raise serializers.ValidationError(str(error))


class MonotoneMapField(serializers.Field):

    def __init__(self, direction=Direction.INCREASING, **kwargs):
        self.direction = direction
        super().__init__(**kwargs)

    def to_representation(self, value):
        return str(value)

    def to_internal_value(self, data):
        try:
            return MonotoneMap.parse(str(data), self.direction)
        except InvalidInput as error:
            raise serializers.ValidationError(str(error))


class PermutationSerializer(serializers.Serializer):
    """Permutation with its length, reduced word and alpha/beta maps."""

    permutation = PermutationField(source='*')
    length = serializers.IntegerField()
    reduced_word = serializers.SerializerMethodField()
    alpha = serializers.SerializerMethodField()
    beta = serializers.SerializerMethodField()

    def get_reduced_word(self, obj):
        return list(reduced_word(obj).letters)

    def get_alpha(self, obj):
        return str(alpha(obj))

    def get_beta(self, obj):
        return str(beta(obj))
