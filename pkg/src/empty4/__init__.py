"""Empty and hollow lattice 4-simplices over cyclic quotients.

Core objects: residue tuples (`CyclicTuple`) encoding cyclic simplices up to
lattice equivalence, exact emptiness/hollowness oracles, coordinate
realizations, the infinite-family system, and the census enumerator.
"""

__version__ = "0.1.0"

from .errors import (
    CheckpointError,
    Degenerate,
    Empty4Error,
    IndexMismatch,
    InvalidParams,
    InvariantViolation,
    NoUnitEntry,
    NotAUnit,
    NotCyclic,
    NotEmpty,
    NotGenerator,
    NotHollow,
    ParseError,
    SumNotZero,
    VolumeTooLarge,
)
from .tuples import (
    CanonicalTuple,
    CyclicTuple,
    SymmetryGroup,
    canonical_form,
    is_isomorphic,
    mk_tuple,
    parse_tuple,
    symmetry_group,
    unit_multiply,
    units,
)
from .oracle import (
    CosetProfile,
    coprime_condition,
    coset_profile,
    count_lattice_points_by_coset,
    empty_via_facets,
    facet_volumes,
    is_empty,
    is_hollow,
)
from .geometry import (
    SimplexCoords,
    brute_force_count,
    ehrhart_polynomial,
    facet_volumes_geometric,
    hstar,
    mk_simplex,
    parse_simplex,
    realize,
    realize_any,
    tuple_from_simplex,
    volume,
    width,
)
from .families import (
    FamilyLabel,
    FamilySpec,
    admissible,
    family_generate,
    family_membership,
    hollow_generate,
    is_any_family,
    width1_test,
)
from .search import (
    SearchConfig,
    enumerate_census,
    enumerate_empty,
    enumerate_sporadic,
    enumerate_via_sublattices,
    singularity_count,
)
from .census import (
    Census,
    diff_census,
    excess_report,
    histogram_by_volume,
    mk_census,
    read_census,
    width_histogram,
    write_census,
)
