"""Structure of finite rings: radical, Wedderburn data, Ext quivers, blocks."""
from .blocks import (
    BlockDecomposition, TheoremReport, Verdict, block_decomposition, block_ring, theorem_report,
)
from .constructors import (
    GroupTable, QuiverSpec, cyclic_group, direct_product, finite_field, group_algebra,
    matrix_ring, path_algebra_mod, symmetric_group, upper_triangular, zmod,
)
from .corpus import corpus_names, corpus_ring, parse_expression, resolve
from .errors import (
    AmbientMismatch, ClassificationAmbiguous, DimensionMismatch, InvalidGroupTable,
    InvariantViolation, NoIdentity, NotAdmissible, NotAnIdeal, NotAssociative,
    NotFiniteDimensional, NotIdempotentModJ, NotQF, OrderMismatch, ParseError, RingError, TooLarge,
    UnknownName,
)
from .qf import NakayamaData, nakayama, verify_propqf
from .report import AnalysisReport, analyze, quiver_dot
from .ring import FiniteRing, dump_ring, load_ring, make_ring, opposite_ring
from .simples import (
    CompositionTable, ExtQuiver, SimpleClass, composition_table, ext_multiplicity, ext_nonzero,
    ext_quiver, linkage_graph, simple_classes,
)
from .structure import (
    center, central_idempotents, jacobson_radical, primitive_orthogonal_decomposition,
    radical_filtration, semisimple_quotient, wedderburn_data,
)
from .subgroup import Subgroup, ideal, quotient_ring, subgroup

__version__ = "0.1.0"
