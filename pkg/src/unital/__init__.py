"""Exact computation with weak units of Picard groupoids and 2-groupoids.

The library works over finitely generated abelian groups in exact integer
arithmetic.  A 2-term complex of such groups presents a strict Picard
groupoid, a 3-term complex a strict Picard 2-groupoid; their units form
contractible structures whose representing complexes, descent cocycles and
classification groups this package builds and verifies, together with the
nonabelian crossed-module analogue.
"""

from .abelian import (
    CapExceeded,
    FgAbGroup,
    FinitenessError,
    GroupElem,
    GroupHom,
    cokernel,
    direct_sum,
    direct_sum_many,
    is_isomorphism,
    kernel,
    lift_through,
    smith_normal_form,
    solve,
)
from .cech import (
    CocycleError,
    Cover,
    Nerve,
    SheafSections,
    TotalCocycle,
    UnitCocycle1,
    cech_differential,
    cech_nerve,
    classify_h0,
    cocycle_of_unit,
    cover_of_parts,
    point_cover,
    torsor_classes,
    unit_cocycles,
    unit_of_cocycle,
)
from .complexes import (
    Complex2,
    Complex3,
    StrictMorphism,
    cone,
    cone_comparison,
    forgetful_morphism_1,
    forgetful_morphism_2,
    homology,
    homology_data,
    identity_model,
    is_acyclic,
    is_quasi_isomorphism,
    kernel_model,
    kernel_sum_model,
    sum_model,
    truncate_shift,
    unit_complex_1,
    unit_complex_2,
)
from .crossed import (
    CrossedModule,
    FiniteGroup,
    NonabelianUnit,
    UnitTriple,
    enumerate_units_nonabelian,
    h0_group_law,
    pi0_order,
    pi1_order,
    triple_of_unit,
    unit_crossed_module,
    verify_crossed_module,
)
from .point_models import (
    JKUnit,
    PicardModel1,
    PicardModel2,
    SaavedraUnit,
    canonical_unit,
    enumerate_units_1,
    enumerate_units_2,
    tensor_units_1,
    tensor_units_2,
    unit_1morphisms,
    unit_2morphisms,
    unit_morphisms_1,
    verify_contractible_1,
    verify_contractible_2,
)
from .reporting import Report, run
from .specfile import ComplexSpecFile, SpecError, parse_spec, print_spec

__version__ = "0.1.0"
