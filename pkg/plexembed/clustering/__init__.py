from .spherical_kmeans import ClusterAssignment, ClusteringError, ClusteringParams, SphericalKMeans
from .cluster_report import ClusterReport
