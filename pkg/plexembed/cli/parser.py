import argparse
from typing import Iterable

from plexembed.cli.options import (
    CLUSTER_OPTIONS,
    COMMON_OPTIONS,
    EVAL_OPTIONS,
    PREDICT_OPTIONS,
    RWR_OPTIONS,
    TRAIN_OPTIONS,
    Option,
)
from plexembed.errors import PlexEmbedError


class UsageError(PlexEmbedError):
    pass


class CliArgumentParser(argparse.ArgumentParser):
    """Reports usage errors as exceptions so the caller chooses the exit status."""

    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


class CliParser:
    @staticmethod
    def build() -> CliArgumentParser:
        parser = CliArgumentParser(
            prog="plexembed",
            description="Embed multiplex and multiplex-heterogeneous networks and evaluate the embeddings.",
        )
        subparsers = parser.add_subparsers(dest="command", required=True, parser_class=CliArgumentParser)

        embed = CliParser._add_command(subparsers, "embed", "learn node embeddings", RWR_OPTIONS + TRAIN_OPTIONS)
        CliParser._add_graph_inputs(embed, multihet=True)
        embed.add_argument("--similarity-out", help="also write the similarity matrix to this file")

        for name, help_text in (("eval-lp", "link prediction benchmark"), ("eval-nr", "network reconstruction")):
            evaluate = CliParser._add_command(subparsers, name, help_text, RWR_OPTIONS + TRAIN_OPTIONS + EVAL_OPTIONS)
            CliParser._add_graph_inputs(evaluate, multihet=False)

        eval_mh = CliParser._add_command(
            subparsers, "eval-mh", "bipartite link prediction", RWR_OPTIONS + TRAIN_OPTIONS + EVAL_OPTIONS
        )
        CliParser._add_graph_inputs(eval_mh, multihet=True)

        rwr_dump = CliParser._add_command(subparsers, "rwr-dump", "similarity distribution of one node", RWR_OPTIONS)
        CliParser._add_graph_inputs(rwr_dump, multihet=True)
        rwr_dump.add_argument("--seed-node", required=True, help="label of the seed node")

        cluster = CliParser._add_command(subparsers, "cluster", "spherical k-means of an embedding", CLUSTER_OPTIONS)
        cluster.add_argument("--embedding", required=True, help="embedding file written by `embed`")
        cluster.add_argument("--query", help="print the cluster of this node label")

        predict_options = RWR_OPTIONS + TRAIN_OPTIONS + EVAL_OPTIONS + PREDICT_OPTIONS
        predict = CliParser._add_command(subparsers, "predict", "rank bipartite partners of a node", predict_options)
        CliParser._add_graph_inputs(predict, multihet=True)
        predict.add_argument("--query", required=True, help="node label to recommend partners for")

        return parser

    @staticmethod
    def _add_command(subparsers, name: str, help_text: str, options: Iterable[Option]) -> CliArgumentParser:
        command = subparsers.add_parser(name, help=help_text)
        command.add_argument("--output", "-o", required=True, help="output file")
        command.add_argument("--config", help="key-value file of option defaults, flags win")
        for option in tuple(options) + COMMON_OPTIONS:
            command.add_argument(
                option.flag,
                dest=option.dest,
                type=option.kind,
                default=None,
                metavar=option.metavar,
                help=f"{option.help} (default: {CliParser._describe(option.default)})",
            )
        return command

    @staticmethod
    def _add_graph_inputs(command: argparse.ArgumentParser, multihet: bool) -> None:
        command.add_argument("--multiplex", required=True, help="manifest listing the layer files of the multiplex")
        if multihet:
            command.add_argument("--second", help="manifest of the second multiplex")
            command.add_argument("--bipartite", help="edge list linking the first multiplex to the second")

    @staticmethod
    def _describe(default) -> str:
        return str(getattr(default, "value", default))
