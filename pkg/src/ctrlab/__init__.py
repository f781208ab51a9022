"""ctrlab: CTR classification of combinatorial rings via lattice points.

Decides the canonical trace radical (CTR) property — the layer between
Gorenstein and Cohen-Macaulay where the trace of the canonical module is a
radical ideal — for three families of rings, each reduced to exact integer
lattice-point computations: Schubert cycles (block/gap combinatorics of the
index), Ehrhart rings of stable set polytopes of cycle graphs and perfect
graphs (clique and odd-cycle inequalities), and Hibi rings of posets (order
polytope inequalities).  Every verdict ships with a machine-checkable
certificate.
"""

from .lattice import (
    DEGREE,
    DecompositionWitness,
    DomainMismatchError,
    InvalidSystemError,
    LatticeError,
    LatticePoint,
    MembershipError,
    ShiftedSystem,
    SumConstraint,
    UnboundedEnumerationError,
    check_membership,
    decompose,
    enumerate_points,
    forced_value_ranges,
    min_feasible_degree,
    radical_power_search,
    search_box,
    search_degree_window,
    validate_witness,
    violated_constraint,
)
from .verdicts import (
    Bounds,
    CliqueGapCertificate,
    DeterminantalCertificate,
    GorensteinWitness,
    RadicalWitness,
    ScanCertificate,
    SchubertCertificate,
    TriState,
    Verdict,
    VerdictKind,
)
from .posets import (
    GeneratorDegreeScan,
    Poset,
    PosetCycleError,
    PosetError,
    SegreFactorRecord,
    SegreReport,
    UnknownElementError,
    a_invariant,
    antichain,
    b_invariant,
    build_poset,
    chain,
    disjoint_union,
    generator_degrees,
    hibi_ctr_scan,
    order_polytope_system,
    segre_condition_report,
)
from .cycles import (
    CycleData,
    CycleError,
    cycle_ctr_verdict,
    cycle_data,
    cycle_system,
    minimal_prime_member,
    non_ctr_witness,
    radical_members,
)
from .graphs import (
    CliqueStats,
    DeepScanResult,
    Graph,
    GraphError,
    build_graph,
    comparability_graph,
    deep_scan,
    maximal_cliques,
    necessary_condition,
    perfect_system,
)
from .schubert import (
    BlockDecomposition,
    DegenerateIndexError,
    SchubertError,
    SchubertIndex,
    all_indices,
    block_decomposition,
    determinantal_ctr,
    face_indices,
    index_sets,
    join_meet,
    omega_member,
    schubert_verdict,
    theta_member,
    witness_pair,
)

__version__ = "0.1.0"
