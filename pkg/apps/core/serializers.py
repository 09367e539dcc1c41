from rest_framework import serializers


class ReportSerializer(serializers.Serializer):
    """
    Read-only serializer for verification reports.
    """
    relation = serializers.CharField(read_only=True)
    space = serializers.CharField(read_only=True)
    cases = serializers.IntegerField(read_only=True)
    failure_count = serializers.IntegerField(read_only=True)
    failures = serializers.JSONField(read_only=True)
    max_residual = serializers.FloatField(read_only=True, allow_null=True)
    tol = serializers.FloatField(read_only=True, allow_null=True)
    passed = serializers.BooleanField(read_only=True)
    explained = serializers.BooleanField(read_only=True)
    details = serializers.JSONField(read_only=True)
