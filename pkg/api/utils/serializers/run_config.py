"""Command options."""

# Django REST Framework
from rest_framework import serializers


__all__ = ['RunConfigSerializer']


class RunConfigSerializer(serializers.Serializer):
    """Options shared by every command.

    The validated data is echoed in JSON reports, so it only holds values
    that change the result.
    """

    FORMATS = ('text', 'json', 'dot')

    command = serializers.CharField()
    action = serializers.CharField(required=False, allow_null=True, default=None)
    n = serializers.IntegerField(min_value=0, required=False, allow_null=True, default=None)
    type = serializers.CharField(required=False, allow_null=True, default=None)
    format = serializers.ChoiceField(choices=FORMATS, default='text')
    cap = serializers.IntegerField(min_value=1, required=False, allow_null=True, default=None)
    jobs = serializers.IntegerField(min_value=1, required=False, allow_null=True, default=None)
    seed = serializers.IntegerField(required=False, allow_null=True, default=None)

    def validate(self, data):
        if data.get('jobs') is not None and data['command'] != 'verify_all':
            raise serializers.ValidationError('--jobs only applies to verify_all')
        if data.get('cap') is not None and data['command'] == 'verify_all':
            raise serializers.ValidationError('--cap does not apply to verify_all')
        return data
