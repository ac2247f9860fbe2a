from .atomic_writer import AtomicWriter
from .file_hasher import FileHasher
