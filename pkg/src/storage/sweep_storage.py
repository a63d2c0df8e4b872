import json
import math
from typing import Dict, List, Mapping, Sequence
from sqlalchemy.orm import Session
from src.exceptions import StorageError
from src.models import SweepRecord, SweepRun, get_session, init_database
from src.utils import logger

class SweepStorage:
    """Persists sweep rows to a SQL database so several sweeps can be queried together"""

    def __init__(self, url: str):
        self.url = url
        init_database(url)

    def create_run(self, name: str, seed: int, settings: Mapping[str, object]) -> int:
        with get_session(self.url) as session:
            run = SweepRun(name=name, seed=seed, config_json=json.dumps(dict(settings), sort_keys=True, default=str))
            session.add(run)
            session.flush()
            logger.info(f"Created sweep run {run.name} (id={run.id})")
            return run.id

    def save_rows_batch(self, run_id: int, rows: Sequence[Mapping[str, object]]) -> int:
        saved_count = 0

        with get_session(self.url) as session:
            for row in rows:
                try:
                    self._create_record(session, run_id, row)
                    saved_count += 1
                except (KeyError, TypeError, ValueError) as e:
                    logger.error(f"Error saving sweep row {row.get('basis')}/K={row.get('K')}: {e}")
                    continue

            try:
                session.commit()
                logger.info(f"Batch saved {saved_count} sweep rows")
            except Exception as e:
                session.rollback()
                raise StorageError(f"Error committing sweep batch: {e}")

        return saved_count

    def _create_record(self, session: Session, run_id: int, row: Mapping[str, object]) -> SweepRecord:
        columns = {column.name for column in SweepRecord.__table__.columns} - {"id", "run_id"}
        values = {key: _nullable(row[key]) for key in columns if key in row}
        record = SweepRecord(run_id=run_id, **values)
        session.add(record)
        return record

    def load_rows(self, run_id: int = None) -> List[Dict[str, object]]:
        with get_session(self.url) as session:
            query = session.query(SweepRecord)
            if run_id is not None:
                query = query.filter_by(run_id=run_id)
            columns = [column.name for column in SweepRecord.__table__.columns]
            return [
                {name: getattr(record, name) for name in columns}
                for record in query.order_by(SweepRecord.id).all()
            ]

def _nullable(value):
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value
