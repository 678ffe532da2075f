"""Exact Drinfeld twists of finite group algebras."""

from ._hopftwist import (
    CertificateFailure,
    Cocycle,
    ConstructionError,
    Group,
    ParseError,
    Tensor,
    Twist,
    catalog_group,
    classify,
    count_grouplikes,
    drinfeld_element,
    find_bijective_1cocycles,
    group_catalog,
    movshev_report,
    r_matrix,
    trivialize_symmetric_twist,
    twist_from_1cocycle,
    twist_from_rep_text,
    twist_report,
    verify_eq2345,
    verify_minimal,
    verify_triangular,
    verify_twist,
)

__all__ = [name for name in dir() if not name.startswith("_")]
