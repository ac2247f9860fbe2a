from dataclasses import asdict, dataclass, field
from typing import List, Optional

import pandas as pd


@dataclass(frozen=True)
class EvalRow:
    method: str
    operator: str
    metric: str
    value: float
    seed: int
    split: str
    layer: str = "all"
    classifier: str = ""

    def __post_init__(self):
        if not 0.0 <= self.value <= 1.0:
            raise ValueError(f"Metric value {self.value} of {self.operator} is outside [0, 1]")


@dataclass
class EvalReport:
    rows: List[EvalRow] = field(default_factory=list)

    COLUMNS = ["method", "operator", "layer", "metric", "value", "seed", "split", "classifier"]

    def add(self, row: EvalRow) -> None:
        self.rows.append(row)

    def extend(self, rows: List[EvalRow]) -> None:
        self.rows.extend(rows)

    def value_for(self, operator: str, layer: str = "all") -> Optional[float]:
        for row in self.rows:
            if row.operator == operator and row.layer == layer:
                return row.value
        return None

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([asdict(row) for row in self.rows], columns=self.COLUMNS)

    def to_tsv(self) -> str:
        return self.to_frame().to_csv(sep="\t", index=False, float_format="%.6f")

    def write_tsv(self, path: str) -> None:
        with open(path, "w") as file:
            file.write(self.to_tsv())

    def __len__(self) -> int:
        return len(self.rows)
