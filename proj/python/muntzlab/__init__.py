"""Müntz-space geometry lab: spike functions, asymptotically isometric
c0 certificates, and diameter-2 certificates for slice combinations."""

from ._core import (
    C0Certificate,
    ConstructionFailureError,
    EmptyIntervalError,
    ExponentSequence,
    Functional,
    InsufficientSequenceError,
    OctaCertificate,
    Point,
    Polynomial,
    Slice,
    Spike,
    c0_build,
    diameter_certificate,
    extract_rip_subsequence,
    find_K,
    profile,
    spike_at,
    sup_norm,
    superlevel_interval,
    verify_conditions,
    verify_inequalities,
    weak_null_trace,
    witness_finder,
)

__all__ = [
    "C0Certificate",
    "ConstructionFailureError",
    "EmptyIntervalError",
    "ExponentSequence",
    "Functional",
    "InsufficientSequenceError",
    "OctaCertificate",
    "Point",
    "Polynomial",
    "Slice",
    "Spike",
    "c0_build",
    "diameter_certificate",
    "extract_rip_subsequence",
    "find_K",
    "profile",
    "spike_at",
    "sup_norm",
    "superlevel_interval",
    "verify_conditions",
    "verify_inequalities",
    "weak_null_trace",
    "witness_finder",
]
