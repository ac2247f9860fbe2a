import logging

logger = logging.getLogger(__name__)


class Logger:
    @staticmethod
    def log(message: str) -> None:
        logger.info(message)

    @staticmethod
    def log_progress(index: int, interval: int, text: str) -> None:
        if interval > 0 and index % interval == 0:
            logger.info(text)
