from datetime import datetime
from sqlalchemy import Boolean, Column, Integer, String, Text, ForeignKey, DateTime, JSON
from sqlalchemy.orm import declarative_base, relationship

Base = declarative_base()


class SearchRun(Base):
    __tablename__ = "search_runs"

    id = Column(Integer, primary_key=True)
    config = Column(JSON, nullable=False)
    seed = Column(Integer, nullable=True)
    workers = Column(Integer, default=1)
    candidates_examined = Column(Integer, default=0)
    hits = Column(Integer, default=0)
    resume_token = Column(Integer, nullable=True)  # next candidate ordinal when the budget ran out
    started_at = Column(DateTime, default=datetime.utcnow)
    finished_at = Column(DateTime, nullable=True)

    # Relationships
    records = relationship("CodeRecordRow", back_populates="search_run", cascade="all, delete-orphan")


class CodeRecordRow(Base):
    __tablename__ = "code_records"

    id = Column(Integer, primary_key=True)
    label = Column(String(200), nullable=True)
    kind = Column(String(20), nullable=False)  # 'construction', 'extension' or 'neighbor'
    provenance = Column(JSON, nullable=False)
    parent_id = Column(Integer, ForeignKey("code_records.id", ondelete="SET NULL"), nullable=True)
    gray_chain = Column(String(50), nullable=True)
    gray_layout = Column(String(20), nullable=True)
    generator = Column(Text, nullable=False)  # "n k" header plus 0/1 rows
    self_dual = Column(Boolean, default=True)
    profile = Column(JSON, nullable=True)
    search_run_id = Column(Integer, ForeignKey("search_runs.id", ondelete="CASCADE"), nullable=True)
    created_at = Column(DateTime, default=datetime.utcnow)

    # Relationships
    parent = relationship("CodeRecordRow", remote_side=[id], back_populates="children")
    children = relationship("CodeRecordRow", back_populates="parent")
    search_run = relationship("SearchRun", back_populates="records")
