from contextlib import contextmanager
from pathlib import Path
from typing import Dict, Union
from sqlalchemy import create_engine
from sqlalchemy.engine import Engine
from sqlalchemy.orm import Session, declarative_base, sessionmaker

Base = declarative_base()

_engines: Dict[str, Engine] = {}

def database_url(path: Union[str, Path]) -> str:
    """SQLite URL for a file path; full URLs pass through unchanged"""
    text = str(path)
    return text if "://" in text else f"sqlite:///{Path(text).resolve()}"

def get_engine(url: str) -> Engine:
    if url not in _engines:
        _engines[url] = create_engine(
            url,
            connect_args={"check_same_thread": False} if "sqlite" in url else {}
        )
    return _engines[url]

@contextmanager
def get_session(url: str) -> Session:
    session = sessionmaker(autocommit=False, autoflush=False, bind=get_engine(url))()
    try:
        yield session
        session.commit()
    except Exception:
        session.rollback()
        raise
    finally:
        session.close()

def init_database(url: str) -> Engine:
    engine = get_engine(url)
    Base.metadata.create_all(bind=engine)
    return engine

def dispose_engines():
    for engine in _engines.values():
        engine.dispose()
    _engines.clear()
