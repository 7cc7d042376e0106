"""Double Catalan serializers."""

# Django REST Framework
from rest_framework import serializers

# Serializers
from api.boolmat.serializers import BoolMatrixSerializer
from api.hecke.serializers import PermutationSetField
from api.perms.serializers import PermutationField


__all__ = [
    'DCElementSerializer',
    'FiberReportSerializer',
    'CatalanFiberReportSerializer',
    'PresentationReportSerializer',
]


class DCElementSerializer(serializers.Serializer):

    matrix = BoolMatrixSerializer()
    word = serializers.ListField(child=serializers.IntegerField())


class FiberReportSerializer(serializers.Serializer):
    """Fiber of Psi: members, tau, Bruhat maximal members and convexity."""

    members = PermutationSetField()
    tau = PermutationField()
    maximal = PermutationSetField()
    convex = serializers.BooleanField()


class CatalanFiberReportSerializer(serializers.Serializer):

    members = PermutationSetField()
    pi = PermutationField()
    pi_prime = PermutationField()
    interval = serializers.BooleanField()


class PresentationReportSerializer(serializers.Serializer):

    presented_size = serializers.IntegerField()
    matches = serializers.BooleanField()
    stable = serializers.BooleanField()
    relations_hold = serializers.BooleanField()
    rule_count = serializers.IntegerField()
    longest_normal_form = serializers.IntegerField()
