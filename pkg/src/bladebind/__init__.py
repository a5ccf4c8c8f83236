"""Binary spatter codes over a blade algebra, with a matrix oracle.

Blades are indexed by n-bit strings; the geometric product is XOR of
the strings times a sign computed by a word-parallel kernel.  Records
bind roles to fillers with that product, chunk by sparse addition, and
decode by blade inverses plus a similarity clean-up.  The classic
XOR/majority/Hamming codec is included as a baseline, and Kronecker
products of Pauli matrices give an independent numerical model used to
cross-check everything.
"""

from .bench import run_bench
from .blades import (
    BladeIndex,
    DimensionMismatch,
    SignedBlade,
    blade_inverse,
    format_blade,
    geometric_product,
    grade,
    parse_blade,
    product_sign,
    reversion_sign,
    xor_of,
)
from .cartan import (
    blade_matrix,
    generator_matrix,
    kron,
    min_factor_count,
    pauli,
    rep,
    trace,
)
from .codec import (
    CleanupMemory,
    ClassicDecodeResult,
    EncodedRecord,
    GaDecodeResult,
    SymbolTable,
    classic_bind,
    classic_decode,
    classic_encode,
    ga_decode,
    ga_encode,
    gen_symbols,
    hamming,
    majority_chunk,
)
from .multivector import Multivector, similarity, trace_product
from .verify import run_verification

__version__ = "0.1.0"

__all__ = [
    "BladeIndex",
    "SignedBlade",
    "DimensionMismatch",
    "Multivector",
    "SymbolTable",
    "EncodedRecord",
    "CleanupMemory",
    "GaDecodeResult",
    "ClassicDecodeResult",
    "blade_inverse",
    "blade_matrix",
    "classic_bind",
    "classic_decode",
    "classic_encode",
    "format_blade",
    "ga_decode",
    "ga_encode",
    "gen_symbols",
    "generator_matrix",
    "geometric_product",
    "grade",
    "hamming",
    "kron",
    "majority_chunk",
    "min_factor_count",
    "parse_blade",
    "pauli",
    "product_sign",
    "rep",
    "reversion_sign",
    "run_bench",
    "run_verification",
    "similarity",
    "trace",
    "trace_product",
    "xor_of",
]
