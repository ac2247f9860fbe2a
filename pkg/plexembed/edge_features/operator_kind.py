from enum import Enum


class OperatorKind(Enum):
    HADAMARD = "hadamard"
    AVERAGE = "average"
    WEIGHTED_L1 = "weighted_l1"
    WEIGHTED_L2 = "weighted_l2"
    COSINE = "cosine"


class HeuristicKind(Enum):
    JC = "jc"
    CN = "cn"
    AA = "aa"
    PA = "pa"
