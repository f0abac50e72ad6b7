"""The kcs batch script language: parser, printer and runner."""

from .ast import Script, Statement, print_script, print_statement
from .parser import parse, tokenize
from .runner import (RunOptions, Runner, error_object, execute, render_text, replay,
                     verify_report)

__all__ = ["Script", "Statement", "print_script", "print_statement", "parse", "tokenize",
           "RunOptions", "Runner", "error_object", "execute", "render_text", "replay",
           "verify_report"]
