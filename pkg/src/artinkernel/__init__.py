"""Artin kernels of right-angled Artin groups: finiteness, splittings and rank formulas."""

from .blockgraph import (
    bounded_divergence_family,
    m_value,
    minimal_rank,
    rank_formula,
    split_blocks,
    unbounded_family,
)
from .character import (
    INFINITE,
    Character,
    KernelClass,
    classify,
    dead_subgraph,
    free_factors,
    image_on,
    index,
    kernel_is_fg,
    living_subgraph,
    normalize,
    restriction_classification,
)
from .chordal import chordal_dichotomy, flatten
from .errors import (
    ArtinKernelError,
    DisconnectedGraphError,
    InputError,
    InvalidSplittingError,
    InvariantError,
    NoWitnessError,
    NotApplicableError,
    NotBlockGraphError,
    NotChordalError,
    PreconditionError,
    WildInputError,
    ZeroCharacterError,
)
from .graph import (
    Graph,
    block_degree,
    blocks,
    complement_subgraph,
    cut_vertices,
    full_subgraph,
    is_block_graph,
    is_chordal,
    is_separating,
    maximal_cliques,
    minimal_vertex_separators,
    splits_over_abelian,
)
from .groups import (
    Free,
    FreeAbelian,
    FreeProduct,
    GraphOfGroups,
    UnresolvedKernel,
    WildKernel,
    betti_number,
    free_product_form,
)
from .splitting import (
    FiniteSplitting,
    SplittingTriple,
    WildSurjection,
    decompose_once,
    validate_splitting,
)
from .witness import nonchordal_witness

__version__ = "0.1.0"
