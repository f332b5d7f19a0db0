"""starcomm: coprime commutator sets and structural analysis of small
finite permutation groups, with a verification CLI."""

from .backend import backend_name
from .errors import (
    CapExceededError,
    GroupError,
    GroupFileError,
    HallSearchError,
    LiftWitnessError,
)
from .group import (
    DEFAULT_ELEMENT_CAP,
    FiniteGroup,
    QuotientMap,
    SubgroupHandle,
    direct_product,
    generate,
)
from .perm import Permutation, commutator, commutator_chain, element_order, multiply

__version__ = "0.1.0"

__all__ = [
    "backend_name",
    "CapExceededError",
    "GroupError",
    "GroupFileError",
    "HallSearchError",
    "LiftWitnessError",
    "DEFAULT_ELEMENT_CAP",
    "FiniteGroup",
    "QuotientMap",
    "SubgroupHandle",
    "direct_product",
    "generate",
    "Permutation",
    "commutator",
    "commutator_chain",
    "element_order",
    "multiply",
    "__version__",
]
