# -*- coding: utf-8 -*-
"""
Entry point of the darts-mtsad command.

Example:
    darts-mtsad generate-synthetic --config synthetic.json --out data
    darts-mtsad train --config config.json --out runs
    darts-mtsad eval --config config.json --checkpoint runs --out runs
    darts-mtsad inject-noise --config config.json --ratio 0.5 --out noisy
"""
import sys

from darts_mtsad.app.args import ArgumentParser
from darts_mtsad.app.commands import Commands
from darts_mtsad.app.config import JsonConfig, RunConfig
from darts_mtsad.app.log import LogConfig
from darts_mtsad.result.errors import DartsError


def main(argv=None):
    """
    Main entry point.

    Parses arguments, resolves the configuration and runs one command.
    Expected failures are logged as one line and mapped to an exit code.

    Args:
        argv: Argument list, sys.argv[1:] when None

    Returns:
        Exit code: 0 success, 1 usage or configuration error, 2 data
        error, 3 numeric failure
    """
    argv = sys.argv[1:] if argv is None else argv
    logger = LogConfig().setup()
    try:
        args = ArgumentParser().parse(argv)
        file = JsonConfig.of(args.config).unwrap()
        config = RunConfig.resolve(file, args).unwrap()
        logger = LogConfig(config.log_level()).setup()
        logger.info("Starting %s", args.command)
        Commands(config, args).run(args.command)
    except DartsError as e:
        problem = e.problem()
        logger.error("%s error: %s", problem.kind().capitalize(), problem.text())
        return problem.code()
    logger.info("Finished %s", args.command)
    return 0


if __name__ == "__main__":
    sys.exit(main())
