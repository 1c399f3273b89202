SCHEMA_KEY = "schema"
STATUS = "status"
MESSAGE = "message"

GROUP = "group"
STRANDS = "n"
GENERATORS = "generators"
RELATORS = "relators"
LABELS = "labels"
PRESENTATION = "presentation"
GENERATOR_COUNT = "generator_count"
RELATOR_COUNT = "relator_count"

TORSION = "torsion"
FREE_RANK = "free_rank"
INVARIANTS = "invariants"

DEGREE = "degree"
IMAGES = "images"
VIOLATIONS = "violations"
VERIFIED = "verified"
ORDER = "order"
TRANSITIVE = "transitive"

CONVENTION = "convention"
FACTORS = "factors"
CHAIN = "chain"

TRANSVERSAL = "transversal"
REPRESENTATIVES = "representatives"
SCHREIER_GENERATORS = "schreier_generators"
REWRITTEN_COUNT = "rewritten_relator_count"
EMPTY_COUNT = "empty_relator_count"
SIMPLIFIED = "simplified"

LATTICE = "lattice"
MARKERS = "markers"
CANONICAL_MARKERS = "canonical_markers"
ALPHA = "alpha"
NORM = "norm"
KERNEL = "kernel"
MATRIX = "matrix"
POINTS = "points"

NECESSARY = "necessary"
EXACT = "exact"
WITNESS = "witness"

UNIT = "unit"
TRANSLATION = "translation"
ORBIT_EQUAL = "orbit_equal"
AUTOMORPHISM = "automorphism"
TARGET = "target"

DIMENSION = "dimension"
MAX_DIMENSION = "max_dimension"
VERTEX_COUNT = "vertex_count"
SIMPLEX_COUNT = "simplex_count"
SIMPLICES = "simplices"
ORBITS = "orbits"
REPRESENTATIVE = "representative"
SIZE = "size"
NORMAL = "normal"
GRAPH = "graph"

SIMPLEX = "simplex"
PERMUTATION = "permutation"
FORM = "form"
MARKER = "marker"

FINDINGS = "findings"
CHECK = "check"
DETAIL = "detail"
CONFIRMED = "confirmed"
