import logging
log = logging.getLogger('strutil')

from enforce_typing import enforce_types
from fractions import Fraction
import inspect
import numpy

@enforce_types
class StrMixin(object):
    """Gives a class a one-line __str__ listing its public attributes,
    short values (numbers, strings, None) first. Set
    __STR_GIVES_NEWLINE__ = True on the class to get one attr per line."""

    def __str__(self) -> str:
        class_name = self.__class__.__name__

        newline = False
        if hasattr(self, '__STR_GIVES_NEWLINE__'):
            newline = self.__STR_GIVES_NEWLINE__ #type: ignore

        short_attrs, long_attrs = [], []
        for attr in dir(self):
            if attr.startswith('_'): continue
            attr_obj = getattr(self, attr)
            if inspect.ismethod(attr_obj) or inspect.isfunction(attr_obj):
                continue
            if _isShort(attr_obj):
                short_attrs.append(attr)
            else:
                long_attrs.append(attr)
        attrs = short_attrs + long_attrs #print short attrs first

        s = ["%s={" % class_name]
        if newline: s += ["\n"]
        for i, attr in enumerate(attrs):
            s += ["%s=%s" % (attr, valueStr(getattr(self, attr), newline))]
            if i < (len(attrs)-1):
                s += [", "]
            if newline: s += ["\n"]
        s += ["/%s}" % class_name]
        return "".join(s)

def _isShort(x) -> bool:
    return x is None or isinstance(x, (bool, int, float, str, Fraction))

def valueStr(x, newline: bool=False) -> str:
    """Compact rendering used by StrMixin and log lines"""
    if isinstance(x, bool) or x is None:
        return str(x)
    if isinstance(x, Fraction):
        return "%s" % x
    if isinstance(x, float):
        return "%.6g" % x
    if isinstance(x, numpy.ndarray):
        return "array%s[sum=%.6g]" % (list(x.shape), float(x.sum()))
    if isinstance(x, dict):
        return dictStr(x, newline)
    return str(x)

@enforce_types
def dictStr(d: dict, newline: bool=False) -> str:
    if not d:
        return "{}"
    s = ["dict={"]
    for i, (k, v) in enumerate(d.items()):
        s += ["'%s':%s" % (k, valueStr(v))]
        if i < (len(d)-1):
            s += [", "]
        if newline: s += ["\n"]
    s += ["/dict}"]
    return "".join(s)
