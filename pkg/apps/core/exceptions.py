"""
Exception hierarchy shared by every app.

Each class carries a ``default_detail`` and a ``default_code`` so the
commands can report a stable code alongside the message.
"""


class RMatrixError(Exception):
    """Base class for all domain errors."""
    default_detail = 'R-matrix toolkit error.'
    default_code = 'error'

    def __init__(self, detail=None, code=None):
        self.detail = detail if detail is not None else self.default_detail
        self.code = code if code is not None else self.default_code
        super().__init__(self.detail)

    def __str__(self):
        return str(self.detail)


class ScalarError(RMatrixError):
    default_detail = 'Invalid scalar operation.'
    default_code = 'scalar'


class UnsupportedDivision(ScalarError):
    default_detail = 'Only division by products of q-numbers is supported.'
    default_code = 'unsupported_division'


class ScalarParseError(ScalarError):
    default_detail = 'Malformed scalar text.'
    default_code = 'parse'

    def __init__(self, detail=None, position=0, text=''):
        self.position = position
        self.text = text
        message = detail if detail is not None else self.default_detail
        super().__init__(f"{message} at position {position}: {text!r}")


class EvaluationPointError(ScalarError):
    default_detail = 'q must be positive and different from 1.'
    default_code = 'evaluation_point'


class SpaceMismatchError(RMatrixError):
    default_detail = 'States live in different tensor spaces.'
    default_code = 'space_mismatch'


class IndexRangeError(RMatrixError):
    default_detail = 'Generator or site index out of range.'
    default_code = 'index_range'


class TableauError(RMatrixError):
    default_detail = 'Invalid Weyl tableau.'
    default_code = 'tableau'


class BasisIncompleteError(RMatrixError):
    default_detail = 'R image is not spanned by the coupled basis.'
    default_code = 'basis_incomplete'


class GoldenDataError(RMatrixError):
    default_detail = 'Golden data file is missing or malformed.'
    default_code = 'golden_data'


class SeriesError(RMatrixError):
    default_detail = 'Operation not defined for this series.'
    default_code = 'series'


class ConfigurationError(RMatrixError):
    default_detail = 'Invalid run configuration.'
    default_code = 'configuration'
