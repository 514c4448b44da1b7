from . import errors
from .param_parser import read_run_file, run_options


__all__ = [
    "errors",
    "read_run_file",
    "run_options",
]
