from .node_index import NodeIndex
from .layer import Layer
from .multiplex_graph import MultiplexGraph
from .multihet_graph import BipartiteEdges, MultiHetGraph
from .edge_list_parser import EdgeListParser, EdgeListParseError, ParsedEdge, ParseResult
from .edge_list_writer import EdgeListWriter
from .graph_factory import GraphFactory, GraphBuildError
from .column_normalizer import ColumnNormalizer, ColumnStochastic
from .manifest import MultiplexManifest
