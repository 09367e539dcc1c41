from rest_framework import serializers

from .state import format_coefficient


class KetCoefficientSerializer(serializers.Serializer):
    """
    Serializer for one (ket, coefficient) pair of a State.
    """
    ket = serializers.SerializerMethodField()
    coeff = serializers.SerializerMethodField()

    def get_ket(self, obj):
        return list(obj[0])

    def get_coeff(self, obj):
        return format_coefficient(obj[1])


class StateSerializer(serializers.BaseSerializer):
    """
    Serializer for State as a ket-sorted list of {ket, coeff}.
    """

    def to_representation(self, instance):
        return KetCoefficientSerializer(sorted(instance.items()), many=True).data
