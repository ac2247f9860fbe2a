import json
import platform
from enum import Enum
from importlib import metadata
from typing import Any, Dict, List, Optional

import psutil

from plexembed.cli.run_config import RunConfig
from plexembed.utils import AtomicWriter, FileHasher

MANIFEST_SUFFIX = ".manifest.json"
TRACKED_PACKAGES = ("plexembed", "numpy", "scipy", "scikit-learn", "pandas")


class RunManifest:
    """
    JSON sidecar written next to the main output of every run: the resolved
    options, the stage seeds, a SHA-256 per input file, the node-type blocks of
    the written rows and facts about the host.
    """

    def __init__(self, config: RunConfig, node_types: Optional[List[str]] = None, extra: Optional[dict] = None):
        self.config = config
        self.node_types = node_types
        self.extra = extra or {}

    @staticmethod
    def path_for(output: str) -> str:
        return f"{output}{MANIFEST_SUFFIX}"

    def to_dict(self) -> Dict[str, Any]:
        config = self.config
        manifest = {
            "command": config.command,
            "output": config.output,
            "options": {key: self._plain(value) for key, value in sorted(config.values.items())},
            "stage_seeds": vars(config.stage_seeds),
            "inputs": [{"path": path, "sha256": FileHasher.sha256(path)} for path in config.input_paths()],
            "node_types": self.node_type_blocks(self.node_types) if self.node_types else [],
            "host": self.host_facts(),
        }
        manifest.update({key: self._plain(value) for key, value in self.extra.items()})
        return manifest

    def write(self) -> str:
        path = self.path_for(self.config.output)
        AtomicWriter.write_text(path, json.dumps(self.to_dict(), indent=2) + "\n")
        return path

    @staticmethod
    def node_type_blocks(node_types: List[str]) -> List[dict]:
        """Runs of equal node types as {"type", "offset", "count"} blocks."""
        blocks = []
        for offset, node_type in enumerate(node_types):
            if blocks and blocks[-1]["type"] == node_type:
                blocks[-1]["count"] += 1
            else:
                blocks.append({"type": node_type, "offset": offset, "count": 1})
        return blocks

    @staticmethod
    def read_node_types(output: str) -> Optional[List[str]]:
        """Node types of a previous run's rows, None when that run left no manifest."""
        path = RunManifest.path_for(output)
        try:
            with open(path, "r") as file:
                blocks = json.load(file).get("node_types", [])
        except FileNotFoundError:
            return None

        node_types = []
        for block in sorted(blocks, key=lambda block: block["offset"]):
            node_types.extend([block["type"]] * block["count"])
        return node_types or None

    @staticmethod
    def host_facts() -> Dict[str, Any]:
        return {
            "platform": platform.platform(),
            "python": platform.python_version(),
            "cpu_count": psutil.cpu_count(logical=True),
            "memory_total": psutil.virtual_memory().total,
            "packages": {name: RunManifest._version(name) for name in TRACKED_PACKAGES},
        }

    @staticmethod
    def _version(package: str) -> Optional[str]:
        try:
            return metadata.version(package)
        except metadata.PackageNotFoundError:
            return None

    @staticmethod
    def _plain(value: Any) -> Any:
        if isinstance(value, Enum):
            return value.value
        if isinstance(value, tuple):
            return list(value)
        return value
