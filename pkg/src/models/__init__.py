from .database import Base, database_url, dispose_engines, get_engine, get_session, init_database
from .sweep_record import SweepRecord, SweepRun

__all__ = ["Base", "database_url", "dispose_engines", "get_engine", "get_session", "init_database", "SweepRecord", "SweepRun"]
