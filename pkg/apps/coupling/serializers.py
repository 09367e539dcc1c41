from rest_framework import serializers

from apps.tensor.serializers import StateSerializer


class CoupledKetSerializer(serializers.Serializer):
    """
    Serializer for a coupled ket and its letter expansion.
    """
    shape = serializers.CharField(read_only=True)
    left = serializers.SerializerMethodField()
    right = serializers.SerializerMethodField()
    expansion = StateSerializer(read_only=True)

    def get_left(self, obj):
        return str(obj.left)

    def get_right(self, obj):
        return str(obj.right)
