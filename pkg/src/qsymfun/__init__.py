"""Exact arithmetic for products in symmetric powers of noncommutative
algebras: Weyl normal ordering, Polya products, quantum symmetric
functions, odd symmetric functions and Schur categories."""

from __future__ import annotations

from .coeff import HBAR, I, GaussRat, HPoly, LinComb
from .perm import PermGroup, SignedWreathGroup, cycle_index, parse_group_spec, symmetric_group
from .qsym import QSymElement, qclass, star
from .schur import ElemTrans, SchurElement, schur_compose, schur_identity, weyl_to_glinf
from .superalg import clifford_product, ext_product, koszul_sign, odd_sym_product
from .sympow import BasedAlgebra, GroupAction, SymElement, oracle_product, polya_product
from .weyl import BudgetExceeded, mweyl_normal_order, normal_coords_closed, normal_order

__all__ = [
    "HBAR", "I", "GaussRat", "HPoly", "LinComb",
    "PermGroup", "SignedWreathGroup", "cycle_index", "parse_group_spec", "symmetric_group",
    "QSymElement", "qclass", "star",
    "ElemTrans", "SchurElement", "schur_compose", "schur_identity", "weyl_to_glinf",
    "clifford_product", "ext_product", "koszul_sign", "odd_sym_product",
    "BasedAlgebra", "GroupAction", "SymElement", "oracle_product", "polya_product",
    "BudgetExceeded", "mweyl_normal_order", "normal_coords_closed", "normal_order",
]
