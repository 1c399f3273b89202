from enum import Enum

# Text syntax for vertices: "marker:i,j", simplices join vertices with ";"
MARKER_TOKENS = ("1", "t", "t2")
VERTEX_SEPARATOR = ";"


class NormalKind(Enum):
    DELTA = "delta"
    NABLA = "nabla"


class EdgeSource(Enum):
    ''' Which adjacency decides the proper-remainder graph '''
    ORACLE = "oracle"
    RULE = "rule"
