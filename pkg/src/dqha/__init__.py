"""Exact computations with finite-dimensional dual quasi-Hopf algebras and
their Yetter-Drinfeld modules."""

from .errors import *  # noqa: F401,F403
from .fields import QQ, ModInt, PrimeField, field_from_key
from .linalg import Matrix, Vector
from .forms import MultilinearForm, convolution_inverse, convolution_product
from .coalgebra import (Coalgebra, Comodule, associator, check_coalgebra, check_comodule,
                        grouplike_comodule, regular_comodule, tensor_comodule, trivial_comodule)
from .algebra import (DualQuasiBialgebra, DualQuasiHopfAlgebra, TwistPair, build_variant,
                      check_dqha_axioms, derive_twist_pair, twist)
from .canonical import (canonical_elements, check_pq_identities, check_U_identities,
                        compute_pq, compute_U)
from .yd import (FLAVORS, YetterDrinfeldModule, braiding, braiding_inverse, check_alt_axiom,
                 check_braided_functor_T, check_center_condition, check_yd, convert_flavor,
                 h_as_yd, tensor_yd, trivial_yd)
from .duals import DualPair, check_dual_lemma, check_snake, comodule_dual, yd_dual
from .examples import (builtin, cyclic_cocycle, cyclic_group, group_dqha, one_dim_yd,
                       registered_algebras, sweedler_hopf, sweedler_twisted)
from .report import Report

__version__ = "0.1.0"
