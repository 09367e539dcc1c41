from rest_framework import serializers

from apps.tensor.state import format_coefficient


def ket_text(ket):
    return ','.join(str(letter) for letter in ket)


class KetOperatorSerializer(serializers.Serializer):
    """
    Serializer for a g1 or e1 matrix with its series metadata.
    """
    name = serializers.CharField(read_only=True)
    series = serializers.CharField(source='params.series', read_only=True)
    n = serializers.IntegerField(source='params.n', read_only=True)
    weights = serializers.CharField(source='params.weights', read_only=True)
    r = serializers.SerializerMethodField()
    x = serializers.SerializerMethodField()
    kets = serializers.SerializerMethodField()
    entries = serializers.SerializerMethodField()

    def get_r(self, obj):
        return str(obj.params.r)

    def get_x(self, obj):
        return str(obj.params.x)

    def get_kets(self, obj):
        return [ket_text(ket) for ket in obj.kets()]

    def get_entries(self, obj):
        return [[ket_text(row), ket_text(col), format_coefficient(value)] for row, col, value in obj.items()]


class NormTableSerializer(serializers.Serializer):
    """
    Serializer for NormTable; N_0 appears for the B series only.
    """
    series = serializers.CharField(source='params.series', read_only=True)
    n = serializers.IntegerField(source='params.n', read_only=True)
    squares = serializers.SerializerMethodField()
    norms = serializers.SerializerMethodField()
    zero = serializers.SerializerMethodField()

    def get_squares(self, obj):
        return {str(m): str(square) for m, square in sorted(obj.squares.items())}

    def get_norms(self, obj):
        return {str(m): obj.presentation(m) for m in sorted(obj.squares)}

    def get_zero(self, obj):
        if not obj.params.has_zero:
            return None
        numerator, denominator = obj.zero
        return {'numerator': str(numerator), 'denominator': str(denominator)}
