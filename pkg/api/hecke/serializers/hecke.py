"""Hecke serializers."""

# Django REST Framework
from rest_framework import serializers

# Models
from api.hecke.models import HeckeElement, OrderedSetPartition

# Exceptions
from api.utils.exceptions import InvalidInput


__all__ = ['HeckeElementField', 'OrderedSetPartitionField', 'PermutationSetField']


class HeckeElementField(serializers.Field):

    def to_representation(self, value):
        return str(value)

    def to_internal_value(self, data):
        try:
            return HeckeElement.parse(str(data))
        except InvalidInput as error:
            raise serializers.ValidationError(str(error))


class OrderedSetPartitionField(serializers.Field):
    """Blocks sorted internally, e.g. "({1,3},{2,4})"."""

    def to_representation(self, value):
        return str(value)

    def to_internal_value(self, data):
        try:
            return OrderedSetPartition.parse(str(data))
        except InvalidInput as error:
            raise serializers.ValidationError(str(error))


class PermutationSetField(serializers.Field):
    """Sets of permutations as sorted arrays of one-line strings."""

    def to_representation(self, value):
        return [str(w) for w in sorted(value)]
