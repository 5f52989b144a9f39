"""Exact composition multiplicities for truncated current Lie algebras."""

from .root_datum import (CartanType, RootDatum, Weight, WeylElement,
                         build_root_datum, bruhat_leq, dominance_leq, weyl_act)
from .kl import KLPolynomial, base_multiplicity, integral_subsystem, kl_polynomial
from .trunc_weights import (BlockLabel, TruncatedWeight, central_shift,
                            find_twisting_word, linked, n_dot, same_block,
                            singular_roots, standard_levi)
from .characters import (FormalCharacter, PartitionCache, decompose_in_block,
                         kostant_partition, verma_character)
from .engine import (MultiplicityQuery, MultiplicityTrace, multiplicity,
                     multiplicity_table)
from .oracle import (ChevalleyBasis, TruncatedModule, build_verma,
                     invariants_character, oracle_multiplicity, simple_character)

__version__ = "0.1.0"
