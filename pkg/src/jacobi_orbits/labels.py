"""Tagged orbit labels with exact parameters.

A label is a family name plus a mapping of exactly-stored parameters
(rationals, Gaussian rationals, small ints for signs/sheets, short strings
for discrete choices).  Labels compare by value, so classifier outputs can
be used directly as orbit identifiers: equal label <=> same orbit, for
every classifier in this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .scalars import GaussRational, rat, rat_str

_INT_KEYS = {"sign", "sign_z", "sheet"}
_STR_KEYS = {"side", "pattern"}


@dataclass(frozen=True)
class Label:
    family: str
    params: tuple  # sorted ((key, value), ...) pairs

    def param(self, key: str):
        for k, v in self.params:
            if k == key:
                return v
        raise KeyError(key)

    def param_dict(self) -> dict:
        return dict(self.params)

    def to_json(self) -> dict:
        out = {}
        for k, v in self.params:
            if isinstance(v, GaussRational):
                out[k] = v.to_json()
            elif isinstance(v, str):
                out[k] = v
            else:
                out[k] = rat_str(rat(v)) if not isinstance(v, int) else str(v)
        return {"family": self.family, "params": out}

    @classmethod
    def from_json(cls, data: Mapping) -> "Label":
        params = {}
        for k, v in (data.get("params") or {}).items():
            if isinstance(v, Mapping):
                params[k] = GaussRational.from_json(v)
            elif k in _INT_KEYS:
                params[k] = int(v)
            elif k in _STR_KEYS:
                params[k] = str(v)
            else:
                params[k] = rat(v)
        return label(data["family"], **params)


def label(family: str, **params) -> Label:
    """Build a label; parameter values are normalized to exact types."""
    normalized = []
    for k in sorted(params):
        v = params[k]
        if isinstance(v, GaussRational):
            normalized.append((k, v))
        elif k in _STR_KEYS:
            normalized.append((k, str(v)))
        elif k in _INT_KEYS:
            normalized.append((k, int(v)))
        else:
            normalized.append((k, rat(v)))
    return Label(family, tuple(normalized))
