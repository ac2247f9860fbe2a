from typing import Dict, Iterable, List

from plexembed.errors import UnknownNodeError


class NodeIndex:
    """
    Bijection between external string labels and dense internal ids in [0, n).

    Ids are assigned in first-seen order, so building the same edge lists
    twice yields the same index.
    """

    labels: List[str]
    __ids_by_label: Dict[str, int]

    def __init__(self, labels: Iterable[str] = ()):
        self.labels = []
        self.__ids_by_label = {}
        for label in labels:
            self.add(label)

    def add(self, label: str) -> int:
        node_id = self.__ids_by_label.get(label)
        if node_id is None:
            node_id = len(self.labels)
            self.__ids_by_label[label] = node_id
            self.labels.append(label)
        return node_id

    def get_id(self, label: str) -> int:
        try:
            return self.__ids_by_label[label]
        except KeyError:
            raise UnknownNodeError(label) from None

    def find_id(self, label: str) -> "int | None":
        return self.__ids_by_label.get(label)

    def get_label(self, node_id: int) -> str:
        return self.labels[node_id]

    def __contains__(self, label: str) -> bool:
        return label in self.__ids_by_label

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __eq__(self, other) -> bool:
        return isinstance(other, NodeIndex) and self.labels == other.labels

    def __str__(self) -> str:
        return f"NodeIndex(n={len(self)})"
