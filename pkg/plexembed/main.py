import logging
import sys
from typing import List, Optional

import dotenv

from plexembed.cli import Commands, CliParser, RunConfigBuilder, StageFailed, UsageError
from plexembed.errors import ConfigError


def main(argv: Optional[List[str]] = None) -> int:
    dotenv.load_dotenv()

    try:
        namespace = CliParser.build().parse_args(argv)
        config = RunConfigBuilder.build(namespace)
    except (UsageError, ConfigError) as error:
        print(f"[load] {error}", file=sys.stderr)
        return 1

    logging.basicConfig(
        level=config.values["log_level"].upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )

    try:
        Commands(config).run()
    except StageFailed as error:
        print(error, file=sys.stderr)
        return error.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())
