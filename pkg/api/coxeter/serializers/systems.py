"""Coxeter system serializers."""

# Django REST Framework
from rest_framework import serializers


__all__ = ['CoxeterSystemSerializer', 'ParabolicSerializer', 'GeneratorSetField']


class GeneratorSetField(serializers.Field):
    """Sets of generators numbered from 1 on the wire, from 0 in memory."""

    def to_representation(self, value):
        return sorted(s + 1 for s in value)

    def to_internal_value(self, data):
        if isinstance(data, str):
            data = [part for part in data.replace(' ', '').split(',') if part]
        try:
            values = {int(s) - 1 for s in data}
        except (TypeError, ValueError):
            raise serializers.ValidationError('expected a list of generator numbers')
        if any(s < 0 for s in values):
            raise serializers.ValidationError('generators are numbered from 1')
        return frozenset(values)


class CoxeterSystemSerializer(serializers.Serializer):

    name = serializers.CharField()
    rank = serializers.IntegerField()
    order = serializers.SerializerMethodField()
    longest_length = serializers.SerializerMethodField()
    coxeter_matrix = serializers.SerializerMethodField()
    longest_conjugation = serializers.SerializerMethodField()

    def get_order(self, obj):
        return len(obj)

    def get_longest_length(self, obj):
        return obj.lengths[obj.longest]

    def get_coxeter_matrix(self, obj):
        return [list(row) for row in obj.coxeter_matrix]

    def get_longest_conjugation(self, obj):
        return [t + 1 for t in obj.longest_conjugation()]


class ParabolicSerializer(serializers.Serializer):
    """ParabolicData, elements written as reduced words."""

    J = GeneratorSetField()
    subgroup_order = serializers.SerializerMethodField()
    longest = serializers.SerializerMethodField()
    max_reps = serializers.SerializerMethodField()

    def get_subgroup_order(self, obj):
        return len(obj.subgroup)

    def get_longest(self, obj):
        return self.context['system'].element_label(obj.longest)

    def get_max_reps(self, obj):
        system = self.context['system']
        return [system.element_label(w) for w in obj.max_reps]
