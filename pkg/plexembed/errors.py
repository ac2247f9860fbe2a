class PlexEmbedError(Exception):
    """Root of every failure raised by plexembed."""


class ConfigError(PlexEmbedError):
    pass


class UnknownNodeError(PlexEmbedError):
    def __init__(self, label: str):
        super().__init__(f'Node "{label}" is not part of the graph')
        self.label = label
