from django.conf import settings
from rest_framework import serializers

from apps.bmw.series import SERIES, WEIGHTS
from apps.coupling.tableaux import SHAPES, min_alphabet

COMMANDS = ('compute', 'verify', 'eval')
SUITES = ('hecke', 'quad22', 'quad41', 'ybe', 'intertwiner', 'golden', 'n-indep', 'bmw', 'all')
FORMATS = ('json', 'csv', 'latex')

# Alphabet used when a run names a shape but no n.
DEFAULT_ALPHABET = 3


def default_q():
    return list(settings.RMATRIX_DEFAULT_Q)


def default_tol():
    return settings.RMATRIX_DEFAULT_TOL


class RunConfigSerializer(serializers.Serializer):
    """
    Serializer validating one command run.
    Flags and config-file keys arrive as one merged dict.
    """
    command = serializers.ChoiceField(choices=COMMANDS)
    shape = serializers.ChoiceField(choices=sorted(SHAPES), required=False, allow_null=True)
    series = serializers.ChoiceField(choices=SERIES, required=False, allow_null=True)
    rank = serializers.IntegerField(required=False, allow_null=True)
    n = serializers.IntegerField(min_value=1, required=False, allow_null=True)
    weights = serializers.ChoiceField(choices=WEIGHTS, default='literal')
    suite = serializers.ChoiceField(choices=SUITES, default='all')
    q = serializers.ListField(child=serializers.FloatField(), default=default_q)
    tol = serializers.FloatField(default=default_tol)
    exact = serializers.BooleanField(default=False)
    format = serializers.ChoiceField(choices=FORMATS, default='json')
    output = serializers.CharField(required=False, allow_null=True, allow_blank=True)

    def validate_q(self, value):
        """Every sample must be a valid evaluation point."""
        if not value:
            raise serializers.ValidationError("At least one q sample is required.")
        for q in value:
            if q <= 0 or q == 1:
                raise serializers.ValidationError(f"q={q} is not a valid evaluation point (need q > 0, q != 1).")
        return value

    def validate_tol(self, value):
        if value <= 0:
            raise serializers.ValidationError("Tolerance must be positive.")
        return value

    def validate(self, attrs):
        """Shape xor series for matrix commands; alphabet and rank bounds."""
        shape, series = attrs.get('shape'), attrs.get('series')
        if attrs['command'] in ('compute', 'eval'):
            if bool(shape) == bool(series):
                raise serializers.ValidationError(
                    {"shape": "Give exactly one of --shape and --series."}
                )
        if shape:
            n = attrs.get('n') or max(DEFAULT_ALPHABET, min_alphabet(shape))
            if n < min_alphabet(shape):
                raise serializers.ValidationError(
                    {"n": f"Shape [{shape}] needs at least {min_alphabet(shape)} letters, got {n}."}
                )
            if attrs['command'] != 'verify':
                attrs['n'] = n
        if series:
            rank = attrs.get('rank')
            if rank is None:
                attrs['rank'] = 1
            elif rank < 1:
                raise serializers.ValidationError({"rank": "Rank must be at least 1."})
        return attrs
