class PlaneDrawError(Exception):
    pass


class StructuralError(PlaneDrawError):
    '''
    A rotation system breaks one of the plane graph rules. `rule` names the
    rule ('simple', 'symmetric', 'connected', ...) and `pair` the offending
    vertex pair when there is one.
    '''
    def __init__(self, rule, message, pair=None):
        self.rule = rule
        self.pair = pair
        super().__init__(f'{rule}: {message}')


class GraphArgumentError(PlaneDrawError, ValueError):
    pass


class StateError(PlaneDrawError):
    pass


class SizeError(PlaneDrawError, ValueError):
    pass


class PreconditionError(PlaneDrawError):
    pass


class InvariantViolation(PlaneDrawError, AssertionError):
    pass


class GeometryDegeneracyError(PlaneDrawError):
    pass


class KernelError(PlaneDrawError):
    pass


class GraphFormatError(PlaneDrawError):
    def __init__(self, message, line=None, column=None, rule=None):
        self.line = line
        self.column = column
        self.rule = rule
        location = f' (line {line}, column {column})' if line is not None else ''
        prefix = f'{rule}: ' if rule else ''
        super().__init__(f'{prefix}{message}{location}')


class EpsilonRejected(PlaneDrawError):
    '''Raised for a split whose radius is too large; retried with half the radius.'''


class VerificationFailed(KernelError):
    '''The finished drawing did not pass the full verifier; `report` lists the violations.'''
    def __init__(self, message, report):
        self.report = report
        super().__init__(message)
