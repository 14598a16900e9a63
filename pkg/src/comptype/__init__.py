"""Decide computable type of finite simplicial pairs via vertex-link cone pairs."""

from .complex import (Complex, LinkPair, Marker, Pair, cone, cone_pair, from_facets, join,
                      link_pair, odd_subcomplex, suspension, validate_pair)
from .decider import (FragmentClass, Truth, Verdict, classify_fragment, computable_type,
                      cone_pair_surjection, graph_edge_criterion_oracle)
from .generators import generate
from .homology import (Coeff, GroupDescriptor, Zk, cycle_membership_mod, cycle_membership_T,
                       cycle_membership_Z, relative_boundary_matrix, relative_homology)

__all__ = [
    "Complex", "LinkPair", "Marker", "Pair", "cone", "cone_pair", "from_facets", "join",
    "link_pair", "odd_subcomplex", "suspension", "validate_pair",
    "FragmentClass", "Truth", "Verdict", "classify_fragment", "computable_type",
    "cone_pair_surjection", "graph_edge_criterion_oracle", "generate",
    "Coeff", "GroupDescriptor", "Zk", "cycle_membership_mod", "cycle_membership_T",
    "cycle_membership_Z", "relative_boundary_matrix", "relative_homology",
]

__version__ = "0.1.0"
