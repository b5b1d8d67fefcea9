"""Exception hierarchy.

Every error carries the process exit code the CLI reports for it.
"""


class BipolarSoftError(Exception):
    exit_code = 1


class ParseError(BipolarSoftError):
    """Malformed input file or table."""

    exit_code = 2

    def __init__(self, message, line=None, field=None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field!r}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)
        self.line = line
        self.field = field


class DuplicateIdentifier(ParseError):
    pass


class BadEntry(ParseError):
    """A table cell outside {-1, 0, 1}."""

    def __init__(self, value, line=None, field=None):
        super().__init__(f"bad table entry {value!r}", line=line, field=field)
        self.value = value


class ConsistencyViolation(BipolarSoftError):
    """Some object is both a positive and a negative example of a parameter."""

    exit_code = 3

    def __init__(self, parameter, objects=()):
        label = getattr(parameter, "positive_label", parameter)
        msg = f"consistency violated for parameter {label!r}"
        if objects:
            msg += f": {', '.join(objects)} in both approximations"
        super().__init__(msg)
        self.parameter = parameter
        self.objects = tuple(objects)


class InconsistentTable(BipolarSoftError):
    exit_code = 3


class DomainError(BipolarSoftError):
    exit_code = 4


class DomainMismatch(DomainError):
    pass


class SizeMismatch(DomainError):
    pass


class UnknownParameter(DomainError):
    def __init__(self, label):
        super().__init__(f"unknown parameter {label!r}")
        self.label = label


class UnknownObject(DomainError):
    def __init__(self, ident):
        super().__init__(f"unknown object {ident!r}")
        self.ident = ident


class UniverseMismatch(DomainError):
    pass


class EmptyCommonDomain(DomainError):
    pass


class WeightError(BipolarSoftError):
    exit_code = 5


class WeightOutOfRange(WeightError):
    pass


class WeightCountMismatch(WeightError):
    pass
