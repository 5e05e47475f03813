"""torusint: exact equivariant push-forwards over Grassmannians.

Computes integrals in torus-equivariant cohomology of classical, Lagrangian
and orthogonal Grassmannians two independent ways (fixed-point localization
sums and iterated residues at infinity) and verifies they agree, including a
dendrite construction that derives the Grassmannian residue formula from
symplectic-reduction data.
"""

from .algebra import (
    FactoredRatFunc,
    LinearForm,
    Polynomial,
    TruncatedSeries,
    VarTable,
    exact_divide,
    expand_at_infinity,
)
from .dendrite import (
    Dendrite,
    MomentOrthant,
    WeylFactor,
    assemble_grassmannian_formula,
    dendrite_orthant,
    divided_difference_residue,
    divided_difference_table,
)
from .errors import (
    InexactDivision,
    MismatchedTables,
    NonCanonicalIntegrand,
    ParseError,
    SymmetryError,
    TorusIntError,
)
from .pushforward import (
    FORMS,
    FixedPoint,
    SpaceDescriptor,
    abbv_pushforward,
    build_integrand,
    fixed_points,
    parse_space,
    random_symmetric_class,
    residue_pushforward,
    specialize_at_zero,
    verification_campaign,
    verify_agreement,
)
from .rational import Q, qstr
from .residue import iterated_residue, residue_at_infinity
from .rootdata import (
    RootSystemSpec,
    WeylElement,
    complement_roots,
    coset_reps,
    orbit_set,
    root_table,
    weyl_generators,
    wp_order,
)
from .symfunc import (
    check_symmetric,
    complete_homogeneous,
    elementary,
    parse_class,
    power_sum,
    schur,
    symmetrize,
)

__version__ = "0.1.0"
