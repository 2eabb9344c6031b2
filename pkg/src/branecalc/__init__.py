"""Exact D-brane charge, intersection and Ext-group calculations for the
two-parameter K3-fibered models P(1,1,2,2,2)[8] and P(1,1,2,2,6)[12]."""
from .charges import charge_table, to_large_radius
from .cyclic_ring import RelationLattice, RingElement, project_even, reduce, ring_mul
from .errors import (BranecalcError, LabelError, MissingRelations, ModelError, OrderMismatch,
                     ParityError)
from .gepner import (BoundaryState, GepnerModel, MarginalInterpretation, boundary_charge_gepner,
                     fusion_element, ground_intersection, intersection_direct,
                     intersection_element, marginal_count, n00_element, self_spectrum_element,
                     su2_fusion, t_element)
from .models import BUILTINS, P11222_8, P11226_12, load_model
from .monodromy import ChargeVector, MonodromyMatrix

__version__ = "0.1.0"
