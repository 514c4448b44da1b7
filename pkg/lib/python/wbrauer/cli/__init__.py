from .config import RunConfig, parse_rt
from .main import (get_args_parser, run, main, cmd_mul, cmd_decompose,
                   cmd_filtration, cmd_cells, cmd_verify)
from .suites import SUITES, SuiteResult, run_suite


__all__ = [
    "RunConfig",
    "parse_rt",
    "get_args_parser",
    "run",
    "main",
    "cmd_mul",
    "cmd_decompose",
    "cmd_filtration",
    "cmd_cells",
    "cmd_verify",
    "SUITES",
    "SuiteResult",
    "run_suite",
]
