import os
from typing import List

from plexembed.errors import ConfigError


class MultiplexManifest:
    """
    Plain-text list of layer files, one path per line, in layer order.

    Relative paths resolve against the manifest's directory; '#' starts a comment.
    """

    @staticmethod
    def read(path: str) -> List[str]:
        if not os.path.isfile(path):
            raise ConfigError(f"Manifest {path} does not exist")

        base_dir = os.path.dirname(os.path.abspath(path))
        with open(path, "r") as file:
            layer_paths = [line.split("#", 1)[0].strip() for line in file]

        layer_paths = [os.path.join(base_dir, layer_path) for layer_path in layer_paths if layer_path]
        if not layer_paths:
            raise ConfigError(f"Manifest {path} lists no layer files")

        missing = [layer_path for layer_path in layer_paths if not os.path.isfile(layer_path)]
        if missing:
            raise ConfigError(f"Layer files listed in {path} do not exist: {', '.join(missing)}")

        return layer_paths

    @staticmethod
    def layer_names(layer_paths: List[str]) -> List[str]:
        return [os.path.splitext(os.path.basename(layer_path))[0] for layer_path in layer_paths]
