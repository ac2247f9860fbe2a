import hashlib

CHUNK_SIZE = 1 << 20


class FileHasher:
    @staticmethod
    def sha256(path: str) -> str:
        digest = hashlib.sha256()
        with open(path, "rb") as file:
            for chunk in iter(lambda: file.read(CHUNK_SIZE), b""):
                digest.update(chunk)
        return digest.hexdigest()
