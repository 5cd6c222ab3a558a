"""Permutation statistics over shuffles.

Core objects are re-exported here; the submodules group the machinery:

* :mod:`permshuffle.core` -- permutations and single-word statistics
* :mod:`permshuffle.stats` -- named statistic registry
* :mod:`permshuffle.shuffles` -- shuffle enumeration, distributions, verification
* :mod:`permshuffle.canonical` -- run-profile canonical forms and rebalance moves
* :mod:`permshuffle.bijection` -- shuffle transport maps and canonicalization traces
* :mod:`permshuffle.qseries` -- exact q-polynomials and shuffle identities
* :mod:`permshuffle.kernels` -- bulk statistic sweeps (numba with numpy fallback)
* :mod:`permshuffle.cli` -- the ``permshuffle`` command
"""

from .bijection import (
    CanonicalizationTrace,
    ShuffleFactorization,
    TraceStep,
    anchors,
    canonicalize,
    canonicalize_with_bijection,
    decomposition_identities_hold,
    factorize,
    transport,
    transport_inverse,
)
from .canonical import (
    CanonicalClassSpec,
    Classification,
    InfeasibleClassError,
    canonical_member,
    canonical_spec,
    class_udr_pk,
    classify,
    feasible_class_params,
    in_rebalance_set,
    next_reduction,
    perm_with_descents,
    profile_to_descents,
    rebalance,
    shifted_profile,
)
from .core import (
    GroundSetError,
    Permutation,
    RunProfile,
    StatBundle,
    bir,
    descent_stats,
    first_step_descends,
    from_word,
    last_step_ascends,
    parse_word,
    peak_stats,
    run_profile,
    standardize,
    stat_bundle,
    udr,
)
from .kernels import numba_available, perm_table, stat_sweep
from .qseries import (
    IdentityCheck,
    QPolynomial,
    maj_shuffle_identity,
    q_binomial,
    restricted_maj_shuffle_identity,
)
from .shuffles import (
    Counterexample,
    Distribution,
    VerifyReport,
    distribution,
    enumerate_shuffles,
    shuffle_count,
    shuffles_with_descent_count,
    verify_shuffle_compatibility,
)
from .stats import StatisticDescriptor, get_statistic, register_statistic, registered_statistics

__version__ = "0.1.0"

__all__ = [
    "CanonicalClassSpec",
    "CanonicalizationTrace",
    "Classification",
    "Counterexample",
    "Distribution",
    "GroundSetError",
    "IdentityCheck",
    "InfeasibleClassError",
    "Permutation",
    "QPolynomial",
    "RunProfile",
    "ShuffleFactorization",
    "StatBundle",
    "StatisticDescriptor",
    "TraceStep",
    "VerifyReport",
    "anchors",
    "bir",
    "canonical_member",
    "canonical_spec",
    "canonicalize",
    "canonicalize_with_bijection",
    "class_udr_pk",
    "classify",
    "decomposition_identities_hold",
    "descent_stats",
    "distribution",
    "enumerate_shuffles",
    "factorize",
    "feasible_class_params",
    "first_step_descends",
    "from_word",
    "get_statistic",
    "in_rebalance_set",
    "last_step_ascends",
    "maj_shuffle_identity",
    "next_reduction",
    "numba_available",
    "parse_word",
    "peak_stats",
    "perm_table",
    "perm_with_descents",
    "profile_to_descents",
    "q_binomial",
    "rebalance",
    "register_statistic",
    "registered_statistics",
    "restricted_maj_shuffle_identity",
    "run_profile",
    "shifted_profile",
    "shuffle_count",
    "shuffles_with_descent_count",
    "standardize",
    "stat_bundle",
    "stat_sweep",
    "transport",
    "transport_inverse",
    "udr",
    "verify_shuffle_compatibility",
]
