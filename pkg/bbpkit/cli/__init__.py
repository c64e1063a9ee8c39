from .commands import build_parser, main, render, request_from_args, run

__all__ = [
    "build_parser",
    "main",
    "render",
    "request_from_args",
    "run",
]
