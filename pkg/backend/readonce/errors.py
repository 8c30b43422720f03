"""
Exception hierarchy for the read-once recognition toolkit
"""


class ReadOnceError(Exception):
    """Base class for every input or precondition failure"""


class FormulaSyntaxError(ReadOnceError):
    """Formula text does not follow the grammar"""

    def __init__(self, message, line=1, column=1):
        self.line = line
        self.column = column
        super().__init__(f'{message} at line {line}, column {column}')


class InputFormatError(ReadOnceError):
    """A CNF, DNF or graph file is malformed"""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f'line {line}: {message}'
        super().__init__(message)


class ValidationError(ReadOnceError):
    """Clauses and terms violate the instance invariants"""


class VariableLimitExceeded(ReadOnceError):
    """Brute-force enumeration was asked for too many variables"""

    def __init__(self, count, limit):
        self.count = count
        self.limit = limit
        super().__init__(f'variable limit exceeded: {count} variables, limit is {limit}')


class NotRead2Error(ReadOnceError):
    """A CNF handed to the read-2 solver has a variable occurring 3+ times"""


class ReductionError(ReadOnceError):
    """Bad input to the hardness generators"""


class PreconditionError(ReadOnceError):
    """An operation was called outside its stated preconditions"""
