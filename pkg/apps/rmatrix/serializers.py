from rest_framework import serializers

from apps.tensor.state import format_coefficient

from .matrix import pair_text


class MatrixBlockSerializer(serializers.Serializer):
    """
    Serializer for one content-class block with label-sorted entries.
    """
    content = serializers.ListField(child=serializers.IntegerField(), read_only=True)
    rows = serializers.SerializerMethodField()
    cols = serializers.SerializerMethodField()
    entries = serializers.SerializerMethodField()

    def get_rows(self, obj):
        return [pair_text(label) for label in sorted(obj.labels)]

    def get_cols(self, obj):
        return self.get_rows(obj)

    def get_entries(self, obj):
        return [
            [pair_text(row), pair_text(col), format_coefficient(value)]
            for (row, col), value in sorted(obj.entries.items(), key=lambda item: (item[0][1], item[0][0]))
        ]


class LabeledMatrixSerializer(serializers.Serializer):
    """
    Serializer for LabeledMatrix: {shape, n, q, blocks}.
    """
    shape = serializers.CharField(read_only=True)
    n = serializers.IntegerField(read_only=True)
    q = serializers.FloatField(read_only=True, allow_null=True)
    blocks = MatrixBlockSerializer(many=True, read_only=True)
