"""
Single-variable expression engine: parse, evaluate, differentiate, simplify, render
"""
from .nodes import (
    Binary,
    BinaryOp,
    Call,
    Constant,
    Expr,
    FunctionName,
    Negate,
    Variable,
    evaluate,
    format_number,
    render,
)
from .parser import parse
from .derivative import derivative
from .simplify import simplify

__all__ = [
    "Binary",
    "BinaryOp",
    "Call",
    "Constant",
    "Expr",
    "FunctionName",
    "Negate",
    "Variable",
    "evaluate",
    "format_number",
    "render",
    "parse",
    "derivative",
    "simplify",
]
