from .graph_stats import GraphStats
