import os
import tempfile
from typing import Callable


class AtomicWriter:
    """Writes go to a temporary file next to the target, renamed into place once complete."""

    @staticmethod
    def write(path: str, dump: Callable[[str], None]) -> None:
        directory = os.path.dirname(os.path.abspath(path))
        os.makedirs(directory, exist_ok=True)

        prefix = f".{os.path.basename(path)}."
        file_descriptor, temp_path = tempfile.mkstemp(prefix=prefix, suffix=".tmp", dir=directory)
        os.close(file_descriptor)
        try:
            dump(temp_path)
            os.replace(temp_path, path)
        except BaseException:
            AtomicWriter.remove_if_exists(temp_path)
            raise

    @staticmethod
    def write_text(path: str, text: str) -> None:
        def dump(temp_path: str) -> None:
            with open(temp_path, "w") as file:
                file.write(text)

        AtomicWriter.write(path, dump)

    @staticmethod
    def remove_if_exists(path: str) -> None:
        if os.path.exists(path):
            os.remove(path)
