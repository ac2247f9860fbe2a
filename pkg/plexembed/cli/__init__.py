from .options import Option
from .run_config import RunConfig, RunConfigBuilder, StageSeeds
from .run_manifest import RunManifest
from .commands import Commands, StageFailed, stage
from .parser import CliArgumentParser, CliParser, UsageError
