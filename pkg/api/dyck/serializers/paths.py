"""Dyck path serializers."""

# Django REST Framework
from rest_framework import serializers

# Models
from api.dyck.models import DyckPath

# Exceptions
from api.utils.exceptions import InvalidInput


__all__ = ['DyckPathField', 'PathPairSerializer']


class DyckPathField(serializers.Field):
    """Paths as strings over U and D."""

    def to_representation(self, value):
        return str(value)

    def to_internal_value(self, data):
        try:
            return DyckPath(data)
        except InvalidInput as error:
            raise serializers.ValidationError(str(error))


class PathPairSerializer(serializers.Serializer):

    first = DyckPathField()
    second = DyckPathField()
