from collections import defaultdict
from typing import Dict, List, Optional

from plexembed.clustering.spherical_kmeans import ClusterAssignment
from plexembed.graph import NodeIndex


class ClusterReport:
    """Looks up the cluster of a node and lists its co-clustered nodes by node type."""

    def __init__(self, assignment: ClusterAssignment, nodes: NodeIndex, node_types: Optional[List[str]] = None):
        self.assignment = assignment
        self.nodes = nodes
        self.node_types = node_types or ["node"] * len(nodes)

    def cluster_of(self, label: str) -> int:
        return int(self.assignment.labels[self.nodes.get_id(label)])

    def group(self, label: str) -> Dict[str, List[str]]:
        cluster = self.cluster_of(label)
        grouped: Dict[str, List[str]] = defaultdict(list)
        for node_id in self.assignment.members(cluster).tolist():
            grouped[self.node_types[node_id]].append(self.nodes.get_label(node_id))
        return dict(grouped)

    def render(self, label: str) -> str:
        lines = [f"cluster {self.cluster_of(label)} of {label}"]
        for node_type, labels in sorted(self.group(label).items()):
            lines.append(f"{node_type} ({len(labels)}): {' '.join(labels)}")
        return "\n".join(lines) + "\n"

    def assignment_text(self) -> str:
        labels = self.assignment.labels.tolist()
        return "".join(f"{self.nodes.get_label(node_id)} {cluster}\n" for node_id, cluster in enumerate(labels))
