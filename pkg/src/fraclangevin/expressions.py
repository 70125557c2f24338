"""Small arithmetic grammar for forcing terms f(t, x, dx).

Supported: +, -, *, /, ** (and the pow() function), the names t, x, dx, the
constants e and pi, and the functions arctan, exp, sin, cos, abs.  Powers
with a non-integer exponent use the odd extension sign(u) * |u|**p, so
fractional powers of negative arguments stay real; integer exponents behave
as usual.  Everything evaluates elementwise on NumPy arrays.
"""

from __future__ import annotations

import ast
import math

import numpy as np

from .errors import ExpressionError

__all__ = ["compile_forcing", "signed_pow"]


def signed_pow(u, p):
    """u**p for integer p, sign(u) * |u|**p otherwise (odd extension)."""
    p = float(p)
    if abs(p - round(p)) <= 1e-9:
        return np.power(u, int(round(p)))
    return np.sign(u) * np.power(np.abs(u), p)


_FUNCTIONS = {
    "arctan": np.arctan,
    "exp": np.exp,
    "sin": np.sin,
    "cos": np.cos,
    "abs": np.abs,
    "pow": signed_pow,
}

_CONSTANTS = {"e": math.e, "pi": math.pi}

_BINOPS = {
    ast.Add: lambda a, b: a + b,
    ast.Sub: lambda a, b: a - b,
    ast.Mult: lambda a, b: a * b,
    ast.Div: lambda a, b: a / b,
    ast.Pow: signed_pow,
}

_UNARYOPS = {ast.USub: lambda a: -a, ast.UAdd: lambda a: a}


def _fail(node, message):
    raise ExpressionError(message, line=getattr(node, "lineno", None),
                          column=getattr(node, "col_offset", None))


def _validate(node, variables):
    if isinstance(node, ast.Expression):
        _validate(node.body, variables)
    elif isinstance(node, ast.BinOp):
        if type(node.op) not in _BINOPS:
            _fail(node, "operator %s is not in the forcing grammar" % type(node.op).__name__)
        _validate(node.left, variables)
        _validate(node.right, variables)
    elif isinstance(node, ast.UnaryOp):
        if type(node.op) not in _UNARYOPS:
            _fail(node, "unary operator %s is not allowed" % type(node.op).__name__)
        _validate(node.operand, variables)
    elif isinstance(node, ast.Call):
        if not isinstance(node.func, ast.Name) or node.func.id not in _FUNCTIONS:
            _fail(node, "only %s may be called" % ", ".join(sorted(_FUNCTIONS)))
        if node.keywords:
            _fail(node, "keyword arguments are not allowed")
        expected = 2 if node.func.id == "pow" else 1
        if len(node.args) != expected:
            _fail(node, "%s takes exactly %d argument(s)" % (node.func.id, expected))
        for arg in node.args:
            _validate(arg, variables)
    elif isinstance(node, ast.Name):
        if node.id not in variables and node.id not in _CONSTANTS:
            _fail(node, "unknown name %r (allowed: %s, e, pi)" % (node.id, ", ".join(variables)))
    elif isinstance(node, ast.Constant):
        if not isinstance(node.value, (int, float)):
            _fail(node, "only numeric literals are allowed")
    else:
        _fail(node, "syntax element %s is not in the forcing grammar" % type(node).__name__)


def _evaluate(node, env):
    if isinstance(node, ast.Expression):
        return _evaluate(node.body, env)
    if isinstance(node, ast.BinOp):
        return _BINOPS[type(node.op)](_evaluate(node.left, env), _evaluate(node.right, env))
    if isinstance(node, ast.UnaryOp):
        return _UNARYOPS[type(node.op)](_evaluate(node.operand, env))
    if isinstance(node, ast.Call):
        args = [_evaluate(arg, env) for arg in node.args]
        return _FUNCTIONS[node.func.id](*args)
    if isinstance(node, ast.Name):
        return env[node.id] if node.id in env else _CONSTANTS[node.id]
    return node.value  # ast.Constant


def compile_forcing(source: str, variables: tuple[str, ...] = ("t", "x", "dx")):
    """Compile an expression string into a vectorized callable of ``variables``.

    Raises ExpressionError (with the offending column) outside the grammar.
    """
    try:
        tree = ast.parse(source, mode="eval")
    except SyntaxError as exc:
        raise ExpressionError("cannot parse expression: %s" % exc.msg,
                              line=exc.lineno, column=exc.offset) from exc
    _validate(tree, variables)

    def fn(*args):
        env = dict(zip(variables, args))
        return _evaluate(tree, env)

    fn.source = source
    return fn


def evaluate_scalar(source: str) -> float:
    """Evaluate a constant expression (no variables); used for config numbers."""
    value = compile_forcing(source, variables=())()
    return float(value)
