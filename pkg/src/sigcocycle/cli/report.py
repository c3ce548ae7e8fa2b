from __future__ import annotations

import json
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Any


def format_rational(x) -> str:
    """``p/q`` in lowest terms with ``q > 0``; plain ``p`` when ``q == 1``."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def approx(x, digits: int = 12) -> str:
    x = Fraction(x)
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(x.numerator) / Decimal(x.denominator))


def _plain(value):
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, dict):
        return {k: _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


@dataclass
class InvariantReport:
    invariant: str
    input: dict[str, Any]
    value: Any
    method: str
    warnings: list[str] = field(default_factory=list)
    details: dict[str, Any] = field(default_factory=dict)

    def as_dict(self, decimal: bool = False) -> dict[str, Any]:
        out = {
            "invariant": self.invariant,
            "input": _plain(self.input),
            "value": _plain(self.value),
            "method": self.method,
            "warnings": list(self.warnings),
            "details": _plain(self.details),
        }
        if decimal and isinstance(self.value, Fraction):
            out["value_approx"] = f"{approx(self.value)} (approx)"
        return out

    def to_json(self, decimal: bool = False) -> str:
        return json.dumps(self.as_dict(decimal), ensure_ascii=False)

    def to_text(self, decimal: bool = False) -> str:
        d = self.as_dict(decimal)
        rows = [
            ("invariant", d["invariant"]),
            ("input", " ".join(f"{k}={json.dumps(v, ensure_ascii=False)}"
                               for k, v in d["input"].items())),
            ("value", str(d["value"])),
        ]
        if "value_approx" in d:
            rows.append(("approx", d["value_approx"]))
        rows.append(("method", d["method"]))
        for k, v in d["details"].items():
            rows.append((k, json.dumps(v, ensure_ascii=False) if not isinstance(v, str) else v))
        for w in d["warnings"]:
            rows.append(("warning", w))
        width = max(len(k) for k, _ in rows)
        return "\n".join(f"{k:<{width}} : {v}" for k, v in rows)
