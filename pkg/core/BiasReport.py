import logging
log = logging.getLogger('biasreport')

from enforce_typing import enforce_types
import math
import typing

from core import estimators
from core.errors import ProxyBiasError
from core.ErrorProfile import ErrorProfile
from core.JointTable import JointTable
from core.Rates import Rates
from util.strutil import StrMixin

ESTIMATORS = ('naive', 'corrected', 'general', 'direct')
NOT_REQUESTED = 'NotRequested'

#optional numeric fields; each is a finite value or has a reason in
# `degenerate`
_OPTIONAL_FIELDS = ('true_bias_signed', 'naive_signed', 'gamma',
                    'corrected_abs', 'general_signed', 'direct_abs',
                    'plug_in_abs', 'ci_violation')

@enforce_types
class BiasReport(StrMixin):
    """All estimates for one audit, plus every intermediate quantity.
    A None estimate always has a reason code in `degenerate`."""

    __STR_GIVES_NEWLINE__ = True

    def __init__(self):
        self.true_bias_signed: typing.Optional[float] = None
        self.naive_signed: typing.Optional[float] = None
        self.gamma: typing.Optional[float] = None
        self.corrected_abs: typing.Optional[float] = None
        self.corrected_clamped: bool = False
        self.general_signed: typing.Optional[float] = None
        self.direct_abs: typing.Optional[float] = None
        self.plug_in_abs: typing.Optional[float] = None
        self.error_profile: typing.Optional[ErrorProfile] = None
        self.rates: typing.Optional[Rates] = None
        self.ci_violation: typing.Optional[float] = None
        self.n_labeled: int = 0
        self.degenerate: typing.Dict[str, str] = {}
        self.intervals: typing.Dict[str, typing.List[float]] = {}

    def setDegenerate(self, field: str, reason: str) -> None:
        assert field in _OPTIONAL_FIELDS, field
        setattr(self, field, None)
        self.degenerate[field] = reason
        if reason != NOT_REQUESTED:
            log.warning("%s unavailable: %s", field, reason)

    def setEstimate(self, field: str, value: float) -> None:
        assert field in _OPTIONAL_FIELDS, field
        setattr(self, field, value)
        self.degenerate.pop(field, None)

    def warnings(self) -> typing.List[str]:
        w = ["%s: %s" % (field, reason)
             for field, reason in sorted(self.degenerate.items())
             if reason != NOT_REQUESTED]
        if self.corrected_clamped:
            w.append("corrected_abs: clamped to [0,1]")
        return w

    def checkInvariants(self) -> None:
        if self.gamma is not None:
            assert 0.0 <= self.gamma <= 1.0, self.gamma
        for field in _OPTIONAL_FIELDS:
            v = getattr(self, field)
            if v is None:
                assert field in self.degenerate, \
                    "%s is None without a reason" % field
            else:
                assert math.isfinite(v), (field, v)

    def toDict(self) -> dict:
        """JSON-ready; every bias appears both signed and absolute"""
        d: dict = {}
        for name in ('true_bias', 'naive', 'general'):
            signed = getattr(self, name + '_signed')
            d[name + '_signed'] = signed
            d[name + '_abs'] = None if signed is None else abs(signed)
        d['corrected_abs'] = self.corrected_abs
        d['corrected_clamped'] = self.corrected_clamped
        d['direct_abs'] = self.direct_abs
        d['plug_in_abs'] = self.plug_in_abs
        d['gamma'] = self.gamma
        d['error_profile'] = None if self.error_profile is None \
            else self.error_profile.toDict()
        d['rates'] = None if self.rates is None else self.rates.toDict()
        d['ci_violation'] = self.ci_violation
        d['n_labeled'] = self.n_labeled
        d['degenerate'] = dict(sorted(self.degenerate.items()))
        if self.intervals:
            d['intervals'] = dict(sorted(self.intervals.items()))
        return d

@enforce_types
def biasReport(eval_table: JointTable,
               common_table: typing.Optional[JointTable] = None,
               requested: tuple = ESTIMATORS,
               smoothing: float = 0.0) -> BiasReport:
    """
    @description
      Runs the requested estimators the way an auditor would: naive bias
      on the evaluation data through predicted attributes; error profile,
      rates, gamma and the direct estimate on the common data, which has
      both true and predicted attributes.

    @arguments
      eval_table -- evaluation data; needs a_hat. If it also has true a,
        the true bias is reported.
      common_table -- labeled common data. Defaults to eval_table when that
        has true attributes.
      requested -- subset of ESTIMATORS
      smoothing -- pseudo-count for the error-profile tallies

    @return
      BiasReport; failures become reason codes, never exceptions
    """
    for name in requested:
        assert name in ESTIMATORS, name
    report = BiasReport()

    labeled = common_table
    if labeled is None and eval_table.has_a:
        labeled = eval_table

    if eval_table.has_a:
        _attempt(report, 'true_bias_signed',
                 lambda: estimators.trueBias(eval_table))
    else:
        report.setDegenerate('true_bias_signed', 'NoTrueAttributes')

    _attempt(report, 'naive_signed', lambda: estimators.naiveBias(eval_table))

    need_profile = any(n in requested for n in ('corrected', 'general'))
    if labeled is None or not labeled.has_a:
        for field in ('gamma', 'corrected_abs', 'general_signed',
                      'direct_abs', 'ci_violation'):
            report.setDegenerate(field, 'NoCommonData')
        report.setDegenerate('plug_in_abs', NOT_REQUESTED)
        return report

    if labeled.isCounts():
        report.n_labeled = int(labeled.total())

    if labeled.has_a_hat:
        _attempt(report, 'ci_violation',
                 lambda: estimators.ciViolation(labeled))
    else:
        report.setDegenerate('ci_violation', 'MissingAxis')

    #why error_profile or rates stayed None
    profile_reason = 'MissingAxis'
    if need_profile and labeled.has_a_hat:
        try:
            report.rates = estimators.rates(labeled)
            report.error_profile = estimators.errorProfile(labeled, smoothing)
        except ProxyBiasError as e:
            log.warning("error profile unavailable: %s", e)
            profile_reason = e.code

    _fillCorrected(report, requested, profile_reason)
    _fillGeneral(report, requested, eval_table, profile_reason)

    if 'direct' in requested:
        _attempt(report, 'direct_abs',
                 lambda: abs(estimators.trueBias(labeled)))
    else:
        report.setDegenerate('direct_abs', NOT_REQUESTED)

    report.setDegenerate('plug_in_abs', NOT_REQUESTED)
    report.checkInvariants()
    return report

def _fillCorrected(report: BiasReport, requested: tuple,
                   profile_reason: str) -> None:
    if 'corrected' not in requested and 'general' not in requested:
        report.setDegenerate('gamma', NOT_REQUESTED)
    elif report.error_profile is None or report.rates is None:
        report.setDegenerate('gamma', profile_reason)
    else:
        prof, rts = report.error_profile, report.rates
        _attempt(report, 'gamma',
                 lambda: estimators.distortionFactor(prof.g1, prof.g2, rts))

    if 'corrected' not in requested:
        report.setDegenerate('corrected_abs', NOT_REQUESTED)
        return
    if report.naive_signed is None or report.gamma is None:
        reason = report.degenerate.get('naive_signed') or \
            report.degenerate.get('gamma', profile_reason)
        report.setDegenerate('corrected_abs', reason)
        return
    try:
        est, clamped = estimators.correctedBias(abs(report.naive_signed),
                                                report.gamma)
        report.corrected_abs = est
        report.corrected_clamped = clamped
    except ProxyBiasError as e:
        report.setDegenerate('corrected_abs', e.code)

def _fillGeneral(report: BiasReport, requested: tuple,
                 eval_table: JointTable, profile_reason: str) -> None:
    if 'general' not in requested:
        report.setDegenerate('general_signed', NOT_REQUESTED)
        return
    if report.error_profile is None or report.rates is None:
        report.setDegenerate('general_signed', profile_reason)
        return
    if not report.error_profile.hasDeltas():
        report.setDegenerate('general_signed', 'MissingConditioningEvent')
        return
    prof, rts = report.error_profile, report.rates

    def _general() -> float:
        alpha_hat, beta_hat = estimators.naiveComponents(eval_table)
        return estimators.generalCorrectedBias(alpha_hat, beta_hat, prof, rts)
    _attempt(report, 'general_signed', _general)

def _attempt(report: BiasReport, field: str, func) -> None:
    try:
        setattr(report, field, func())
    except ProxyBiasError as e:
        report.setDegenerate(field, e.code)
