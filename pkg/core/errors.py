"""Domain errors. Each carries a short `code` that reports use as the
reason an estimate is null."""
import typing

class ProxyBiasError(ValueError):
    code = 'ProxyBiasError'

    #SamplingTrace of a finished run whose final estimate failed
    trace: typing.Any = None

    def __init__(self, msg: str = ''):
        super().__init__(msg or self.code)

#input / plumbing
class MissingField(ProxyBiasError):
    code = 'MissingField'

    def __init__(self, record_id: str, field: str):
        super().__init__("record %s: missing required field '%s'"
                         % (record_id, field))
        self.record_id = record_id
        self.field = field

class EmptyInput(ProxyBiasError):
    code = 'EmptyInput'

class MissingAxis(ProxyBiasError):
    code = 'MissingAxis'

class InvalidParams(ProxyBiasError):
    code = 'InvalidParams'

#identifiability
class MissingGroup(ProxyBiasError):
    code = 'MissingGroup'

class EmptyPredictedGroup(ProxyBiasError):
    code = 'EmptyPredictedGroup'

class MissingConditioningEvent(ProxyBiasError):
    code = 'MissingConditioningEvent'

    def __init__(self, event: str):
        super().__init__("conditioning event has zero mass: %s" % event)
        self.event = event

class ZeroDenominator(ProxyBiasError):
    code = 'ZeroDenominator'

    def __init__(self, which: str):
        super().__init__("zero denominator: %s" % which)
        self.which = which

class UninvertibleDistortion(ProxyBiasError):
    code = 'UninvertibleDistortion'

class DegenerateDeltas(ProxyBiasError):
    code = 'DegenerateDeltas'

#theory
class InfeasibleBudget(ProxyBiasError):
    code = 'InfeasibleBudget'

class BayesOptimalInput(ProxyBiasError):
    code = 'BayesOptimalInput'

#sampling
class PoolExhausted(ProxyBiasError):
    code = 'PoolExhausted'

class BudgetExhausted(ProxyBiasError):
    code = 'BudgetExhausted'

class OracleTimeout(ProxyBiasError):
    code = 'OracleTimeout'

#io
class ParseError(ProxyBiasError):
    code = 'ParseError'

    def __init__(self, line: int, reason: str):
        super().__init__("line %d: %s" % (line, reason))
        self.line = line
        self.reason = reason

class SchemaError(ProxyBiasError):
    code = 'SchemaError'

class InfeasibleSplit(ProxyBiasError):
    code = 'InfeasibleSplit'
