"""Boolean matrix serializers."""

# Django REST Framework
from rest_framework import serializers

# Models
from api.boolmat.models import BoolMatrix

# Exceptions
from api.utils.exceptions import InvalidInput


__all__ = ['BoolMatrixSerializer', 'MonoidSummarySerializer']


class BoolMatrixSerializer(serializers.Serializer):
    """{"n": int, "rows": ["0110", ...]}"""

    n = serializers.IntegerField(min_value=0)
    rows = serializers.ListField(child=serializers.RegexField(r'^[01]*$'))

    def to_representation(self, instance):
        return {'n': instance.n, 'rows': instance.lines()}

    def validate(self, data):
        if len(data['rows']) != data['n']:
            raise serializers.ValidationError('expected {} rows'.format(data['n']))
        return data

    def create(self, validated_data):
        if validated_data['n'] == 0:
            return BoolMatrix(())
        try:
            return BoolMatrix.from_strings(validated_data['rows'])
        except InvalidInput as error:
            raise serializers.ValidationError(str(error))


class MonoidSummarySerializer(serializers.Serializer):
    """Size and idempotent count of a MonoidTable."""

    size = serializers.SerializerMethodField()
    idempotents = serializers.SerializerMethodField()

    def get_size(self, obj):
        return len(obj)

    def get_idempotents(self, obj):
        return len(obj.idempotents())
