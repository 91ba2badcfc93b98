"""
Certificate store.

This module persists obstruction certificates in SQLite through the
SQLAlchemy ORM: one row per command run and one row per candidate report,
with the canonical report JSON kept verbatim.
"""

import json
import logging
import os
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from sqlalchemy import ForeignKey, String, Text, create_engine, func, select
from sqlalchemy.exc import SQLAlchemyError
from sqlalchemy.orm import DeclarativeBase, Mapped, Session, mapped_column, relationship

from ..core.errors import PersistenceError

logger = logging.getLogger(__name__)

MEMORY = ":memory:"


class Base(DeclarativeBase):
    pass


class RunRecord(Base):
    __tablename__ = "runs"

    id: Mapped[int] = mapped_column(primary_key=True, autoincrement=True)
    command: Mapped[str] = mapped_column(String(32))
    parameters: Mapped[str] = mapped_column(Text)
    created_at: Mapped[datetime] = mapped_column(default=datetime.now)

    certificates: Mapped[List["CertificateRecord"]] = relationship(
        back_populates="run", cascade="all, delete-orphan"
    )


class CertificateRecord(Base):
    __tablename__ = "certificates"

    id: Mapped[int] = mapped_column(primary_key=True, autoincrement=True)
    run_id: Mapped[Optional[int]] = mapped_column(ForeignKey("runs.id"), nullable=True)
    sequence_kind: Mapped[str] = mapped_column(String(32), index=True)
    genus: Mapped[int]
    n: Mapped[int]
    candidate: Mapped[str] = mapped_column(String(128))
    verdict: Mapped[str] = mapped_column(String(32), index=True)
    payload: Mapped[str] = mapped_column(Text)
    created_at: Mapped[datetime] = mapped_column(default=datetime.now)

    run: Mapped[Optional[RunRecord]] = relationship(back_populates="certificates")

    def summary(self) -> Dict[str, Any]:
        return {
            "id": self.id,
            "run_id": self.run_id,
            "sequence_kind": self.sequence_kind,
            "genus": self.genus,
            "n": self.n,
            "candidate": self.candidate,
            "verdict": self.verdict,
            "created_at": self.created_at.isoformat(),
        }


class CertificateStore:
    """
    SQLite-backed store for certificates.

    Every failure of the underlying database is logged and re-raised as
    :class:`PersistenceError`.

    Args:
        db_path: Path to the database file, or ``":memory:"``. Defaults to
            ``~/.hypsec/certificates.db``.

    Raises:
        PersistenceError: If the database cannot be created or opened.
    """

    def __init__(self, db_path: Optional[Union[str, Path]] = None):
        try:
            if db_path is None:
                db_dir = Path.home() / ".hypsec"
                os.makedirs(db_dir, exist_ok=True)
                self._db_path: Union[str, Path] = db_dir / "certificates.db"
            elif str(db_path) == MEMORY:
                self._db_path = MEMORY
            else:
                self._db_path = Path(db_path)
                os.makedirs(self._db_path.parent, exist_ok=True)
            url = "sqlite://" if self._db_path == MEMORY else f"sqlite:///{self._db_path}"
            self._engine = create_engine(url, future=True)
            Base.metadata.create_all(self._engine)
        except (OSError, SQLAlchemyError) as e:
            logger.error(f"Error opening certificate store at {db_path}: {e}")
            raise PersistenceError(f"cannot open certificate store at {db_path}: {e}") from e
        logger.debug(f"CertificateStore initialized with path: {self._db_path}")

    @property
    def db_path(self) -> Union[str, Path]:
        return self._db_path

    def record_run(self, command: str, parameters: Dict[str, Any]) -> int:
        """
        Record a command invocation.

        Returns:
            The id of the new run.
        """
        try:
            with Session(self._engine) as session:
                run = RunRecord(command=command, parameters=json.dumps(parameters, sort_keys=True))
                session.add(run)
                session.commit()
                logger.debug(f"Recorded run {run.id} ({command})")
                return run.id
        except SQLAlchemyError as e:
            logger.error(f"Error recording run {command}: {e}")
            raise PersistenceError(f"cannot record run {command}: {e}") from e

    def record_certificate(self, sequence: Dict[str, Any], report: Dict[str, Any], run_id: Optional[int] = None) -> int:
        """
        Store one candidate report.

        Args:
            sequence: The sequence descriptor of the certificate.
            report: One entry of the certificate's ``reports`` list.
            run_id: Optional run the report belongs to.

        Returns:
            The id of the stored certificate.
        """
        payload = {"sequence": sequence, "report": report}
        try:
            with Session(self._engine) as session:
                record = CertificateRecord(
                    run_id=run_id,
                    sequence_kind=sequence["kind"],
                    genus=sequence["genus"],
                    n=sequence["n"],
                    candidate=report["candidate"]["label"],
                    verdict=report["verdict"],
                    payload=json.dumps(payload, sort_keys=True),
                )
                session.add(record)
                session.commit()
                logger.debug(f"Stored certificate {record.id} for {record.candidate}")
                return record.id
        except SQLAlchemyError as e:
            logger.error(f"Error storing certificate: {e}")
            raise PersistenceError(f"cannot store certificate: {e}") from e

    def record_certificate_file(self, certificate: Dict[str, Any], run_id: Optional[int] = None) -> List[int]:
        """Store every report of a full certificate."""
        return [self.record_certificate(certificate["sequence"], r, run_id) for r in certificate["reports"]]

    def get_certificate(self, certificate_id: int) -> Optional[Dict[str, Any]]:
        try:
            with Session(self._engine) as session:
                record = session.get(CertificateRecord, certificate_id)
                if record is None:
                    return None
                return dict(record.summary(), payload=json.loads(record.payload))
        except SQLAlchemyError as e:
            logger.error(f"Error getting certificate {certificate_id}: {e}")
            raise PersistenceError(f"cannot read certificate {certificate_id}: {e}") from e

    def list_certificates(self, kind: Optional[str] = None, verdict: Optional[str] = None) -> List[Dict[str, Any]]:
        stmt = select(CertificateRecord).order_by(CertificateRecord.id)
        if kind is not None:
            stmt = stmt.where(CertificateRecord.sequence_kind == kind)
        if verdict is not None:
            stmt = stmt.where(CertificateRecord.verdict == verdict)
        try:
            with Session(self._engine) as session:
                return [r.summary() for r in session.scalars(stmt)]
        except SQLAlchemyError as e:
            logger.error(f"Error listing certificates: {e}")
            raise PersistenceError(f"cannot list certificates: {e}") from e

    def delete_certificate(self, certificate_id: int) -> bool:
        try:
            with Session(self._engine) as session:
                record = session.get(CertificateRecord, certificate_id)
                if record is None:
                    logger.warning(f"No certificate found with ID: {certificate_id}")
                    return False
                session.delete(record)
                session.commit()
                logger.debug(f"Deleted certificate {certificate_id}")
                return True
        except SQLAlchemyError as e:
            logger.error(f"Error deleting certificate {certificate_id}: {e}")
            return False

    def count(self) -> int:
        try:
            with Session(self._engine) as session:
                return session.scalar(select(func.count()).select_from(CertificateRecord)) or 0
        except SQLAlchemyError as e:
            logger.error(f"Error counting certificates: {e}")
            raise PersistenceError(f"cannot count certificates: {e}") from e

    def close(self) -> None:
        self._engine.dispose()
