"""Python access to the workbench library and its command line front end."""

from ._workbench import (
    DomainError,
    ParseError,
    __version__,
    certify,
    commutator,
    expand,
    fimod_sweep,
    invert,
    lcs_weight,
    lie_rank,
    multiply,
    reduce,
    run,
)

__all__ = [
    "DomainError",
    "ParseError",
    "__version__",
    "certify",
    "commutator",
    "expand",
    "fimod_sweep",
    "invert",
    "lcs_weight",
    "lie_rank",
    "multiply",
    "reduce",
    "run",
]
