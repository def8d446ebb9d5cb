"""Tiny comparison language over parameter names, e.g. ``gamma <= 2*ir - 1``.

Grammar::

    claim := expr OP expr          OP in <=, <, =, ==, >=, >, !=
    expr  := term (('+' | '-') term)*
    term  := INT | NAME | INT '*' NAME | INT NAME
"""

from __future__ import annotations

import operator
import re
from dataclasses import dataclass
from typing import Optional

from .graph import INF, leaves_and_supports, popcount
from .solvers import ALIASES, PARAMETERS, ParameterReport

GRAPH_FACTS = ("n", "m", "diam", "leaves")
NAMES = frozenset(PARAMETERS) | frozenset(ALIASES) | frozenset(GRAPH_FACTS)

_OPS = {
    "<=": operator.le,
    "<": operator.lt,
    "=": operator.eq,
    "==": operator.eq,
    ">=": operator.ge,
    ">": operator.gt,
    "!=": operator.ne,
}
_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(<=|>=|==|!=|<|>|=|\+|-|\*))")


class ClaimSyntaxError(ValueError):
    pass


Linear = tuple[tuple[tuple[str, int], ...], int]


def _tokenize(text: str) -> list[str]:
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ClaimSyntaxError(f"unexpected character at {pos}: {text[pos:]!r}")
        out.append(m.group(m.lastindex))
        pos = m.end()
    return out


def _parse_expr(tokens: list[str]) -> Linear:
    coeffs: dict[str, int] = {}
    const = 0
    sign = 1
    expect_term = True
    i = 0
    while i < len(tokens):
        tok = tokens[i]
        if expect_term:
            if tok == "-":
                sign = -sign
                i += 1
                continue
            if tok == "+":
                i += 1
                continue
            if tok.isdigit():
                value = int(tok)
                if i + 1 < len(tokens) and (tokens[i + 1] == "*" or tokens[i + 1] in NAMES):
                    j = i + 2 if tokens[i + 1] == "*" else i + 1
                    if j >= len(tokens) or tokens[j] not in NAMES:
                        raise ClaimSyntaxError(f"expected a parameter name after {tok}*")
                    coeffs[tokens[j]] = coeffs.get(tokens[j], 0) + sign * value
                    i = j + 1
                else:
                    const += sign * value
                    i += 1
            elif tok in NAMES:
                coeffs[tok] = coeffs.get(tok, 0) + sign
                i += 1
            else:
                raise ClaimSyntaxError(f"unknown parameter name {tok!r}")
            expect_term = False
        else:
            if tok not in ("+", "-"):
                raise ClaimSyntaxError(f"expected + or -, got {tok!r}")
            sign = 1 if tok == "+" else -1
            expect_term = True
            i += 1
    if expect_term:
        raise ClaimSyntaxError("expression ends without a term")
    return tuple(sorted(coeffs.items())), const


@dataclass(frozen=True)
class Claim:
    text: str
    lhs: Linear
    op: str
    rhs: Linear

    @property
    def names(self) -> set[str]:
        return {name for name, _ in self.lhs[0] + self.rhs[0]}

    def holds(self, report: ParameterReport) -> Optional[bool]:
        """Truth value on one graph, or ``None`` when a referenced value is undefined."""
        values = {}
        for name in self.names:
            value = _value(report, name)
            if value is None:
                return None
            values[name] = value

        def ev(side: Linear) -> int:
            return sum(c * values[name] for name, c in side[0]) + side[1]

        return _OPS[self.op](ev(self.lhs), ev(self.rhs))


def _value(report: ParameterReport, name: str) -> Optional[int]:
    if name == "n":
        return report.n
    if name == "m":
        return report.m
    if name == "diam":
        return None if report.diam == INF else int(report.diam)
    if name == "leaves":
        return popcount(leaves_and_supports(report.graph)[0])
    return getattr(report, name)


def parse_claim(text: str) -> Claim:
    tokens = _tokenize(text)
    ops = [i for i, t in enumerate(tokens) if t in _OPS]
    if len(ops) != 1:
        raise ClaimSyntaxError("a claim needs exactly one comparison operator")
    k = ops[0]
    return Claim(text.strip(), _parse_expr(tokens[:k]), tokens[k], _parse_expr(tokens[k + 1:]))
