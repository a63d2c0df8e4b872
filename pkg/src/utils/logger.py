import sys
from pathlib import Path
from typing import Optional, Union
from loguru import logger
from src.config import config

_file_sink_id: Optional[int] = None

def setup_logger(level: str = None):
    logger.remove()

    logger.add(
        sys.stderr,
        format="<green>{time:YYYY-MM-DD HH:mm:ss}</green> | <level>{level: <8}</level> | <cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> - <level>{message}</level>",
        level=level or config.LOG_LEVEL
    )

    return logger

def add_file_sink(out_dir: Union[str, Path], level: str = None) -> int:
    """Route log records into the run's output directory"""
    global _file_sink_id

    if _file_sink_id is not None:
        logger.remove(_file_sink_id)

    _file_sink_id = logger.add(
        Path(out_dir) / config.LOG_FILE_NAME,
        rotation="10 MB",
        format="{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {name}:{function}:{line} - {message}",
        level=level or config.LOG_LEVEL
    )
    return _file_sink_id

def remove_file_sink():
    global _file_sink_id

    if _file_sink_id is not None:
        logger.remove(_file_sink_id)
        _file_sink_id = None

logger = setup_logger()
