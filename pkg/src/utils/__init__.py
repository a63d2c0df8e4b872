from .logger import setup_logger, add_file_sink, remove_file_sink, logger
from .seeding import derive_seed

__all__ = ["setup_logger", "add_file_sink", "remove_file_sink", "logger", "derive_seed"]
