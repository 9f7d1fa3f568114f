"""Deterministic step-trace engine for mental-arithmetic methods.

Every computation is exposed as a replayable sequence of grid writes,
highlights, and latent basic operations, with a schoolbook counterpart for
side-by-side comparison.
"""

from .digits import (
    DigitString,
    duplex,
    from_int,
    normalize,
    pad_to_length,
    parse_operand,
    tens_complement,
    value_of,
)
from .engine import (
    DEFAULT_MAX_DIGITS,
    ApplicabilityReport,
    ComparisonReport,
    MethodDescriptor,
    TraceOptions,
    build_comparison,
    build_trace,
    describe_method,
    list_methods,
    validate,
)
from .errors import (
    ApplicabilityError,
    ArityError,
    ComparisonMismatchError,
    LengthError,
    MetricsMismatchError,
    NegativeResultError,
    ParseError,
    ReplayError,
    SutraTraceError,
    UnknownMethodError,
)
from .model import (
    BasicOp,
    CarryNote,
    CellRef,
    CellWrite,
    GridBlock,
    GridSpec,
    MainStep,
    MethodRun,
    Metrics,
    Trace,
    flatten_basic_ops,
    recompute_metrics,
)
from .replay import replay
from .serialize import canonical_bytes, canonical_serialize, parse_trace

__version__ = "0.1.0"
