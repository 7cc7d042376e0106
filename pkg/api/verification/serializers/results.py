"""Verification report serializers."""

# Django REST Framework
from rest_framework import serializers


__all__ = ['SuiteResultSerializer']


class SuiteResultSerializer(serializers.Serializer):

    key = serializers.CharField()
    statement = serializers.CharField()
    passed = serializers.BooleanField()
    checked = serializers.IntegerField()
    details = serializers.DictField()
    counterexample = serializers.DictField(allow_null=True)
