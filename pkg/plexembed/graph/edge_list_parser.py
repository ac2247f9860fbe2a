import math
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, TextIO, Union
import logging

from plexembed.errors import PlexEmbedError

logger = logging.getLogger(__name__)


class EdgeListParseError(PlexEmbedError):
    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


@dataclass(frozen=True)
class ParsedEdge:
    source: str
    target: str
    weight: float = 1.0


@dataclass
class ParseResult:
    edges: List[ParsedEdge] = field(default_factory=list)
    self_loops_dropped: int = 0
    duplicates_merged: int = 0
    source_name: Optional[str] = None

    def __iter__(self):
        return iter(self.edges)

    def __len__(self) -> int:
        return len(self.edges)


class EdgeListParser:
    COMMENT_PREFIX = "#"

    @staticmethod
    def parse(text: Union[str, TextIO, Iterable[str]], source_name: Optional[str] = None) -> ParseResult:
        """
        Parse "src dst [weight]" lines. Undirected pairs are merged keeping the
        first weight seen, self-loops are dropped and counted.
        """
        lines = text.splitlines() if isinstance(text, str) else text
        result = ParseResult(source_name=source_name)
        seen_pairs = set()

        for line_number, raw_line in enumerate(lines, start=1):
            line = raw_line.strip()
            if not line or line.startswith(EdgeListParser.COMMENT_PREFIX):
                continue

            source, target, weight = EdgeListParser._parse_fields(line, line_number)

            if source == target:
                result.self_loops_dropped += 1
                continue

            pair = (source, target) if source <= target else (target, source)
            if pair in seen_pairs:
                result.duplicates_merged += 1
                continue

            seen_pairs.add(pair)
            result.edges.append(ParsedEdge(source, target, weight))

        EdgeListParser._log_dropped(result)
        return result

    @staticmethod
    def parse_file(path: str) -> ParseResult:
        with open(path, "r") as file:
            return EdgeListParser.parse(file, source_name=path)

    @staticmethod
    def _parse_fields(line: str, line_number: int) -> tuple:
        fields = line.split()
        if len(fields) not in (2, 3):
            raise EdgeListParseError(line_number, f"expected 2 or 3 fields, found {len(fields)}")

        if len(fields) == 2:
            return fields[0], fields[1], 1.0

        try:
            weight = float(fields[2])
        except ValueError:
            raise EdgeListParseError(line_number, f'weight "{fields[2]}" is not a number') from None

        if not math.isfinite(weight) or weight <= 0:
            raise EdgeListParseError(line_number, f"weight must be a positive real, found {fields[2]}")

        return fields[0], fields[1], weight

    @staticmethod
    def _log_dropped(result: ParseResult) -> None:
        name = result.source_name or "<stream>"
        if result.self_loops_dropped:
            logger.warning(f"{name}: dropped {result.self_loops_dropped} self-loops")
        if result.duplicates_merged:
            logger.warning(f"{name}: merged {result.duplicates_merged} duplicate edges")
