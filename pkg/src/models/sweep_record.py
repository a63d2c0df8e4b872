from datetime import datetime
from sqlalchemy import Column, DateTime, Float, ForeignKey, Integer, String, Text
from sqlalchemy.orm import relationship
from .database import Base

class SweepRun(Base):
    __tablename__ = "sweep_runs"

    id = Column(Integer, primary_key=True)
    name = Column(String(255), nullable=False, index=True)
    seed = Column(Integer, nullable=False)
    config_json = Column(Text)
    created_at = Column(DateTime, default=datetime.utcnow)

    records = relationship("SweepRecord", back_populates="run", cascade="all, delete-orphan")

    def __repr__(self):
        return f"<SweepRun(name={self.name}, seed={self.seed})>"

class SweepRecord(Base):
    __tablename__ = "sweep_records"

    id = Column(Integer, primary_key=True)
    run_id = Column(Integer, ForeignKey("sweep_runs.id"), nullable=False, index=True)
    dataset = Column(String(255), nullable=False, index=True)
    basis = Column(String(50), nullable=False, index=True)
    K = Column(Integer, nullable=False)
    L = Column(Integer, nullable=False)
    seed = Column(Integer, nullable=False)
    n = Column(Integer)
    m = Column(Integer)
    train_loss = Column(Float)
    test_loss = Column(Float)
    gap = Column(Float)
    train_acc = Column(Float)
    val_acc = Column(Float)
    test_acc = Column(Float)
    ftgc_nonlinear = Column(Float)
    ftgc_linear = Column(Float)
    weight_term = Column(Float)
    spectral_term = Column(Float)
    gap_bound = Column(Float)
    jacobian_bound = Column(Float)
    true_jacobian = Column(Float)
    jacobian_ratio = Column(Float)
    C_W = Column(Float)
    C_theta = Column(Float)
    W_in_norm = Column(Float)
    W_out_norm = Column(Float)
    epochs_run = Column(Integer)
    best_epoch = Column(Integer)
    error = Column(Text)

    run = relationship("SweepRun", back_populates="records")

    def __repr__(self):
        return f"<SweepRecord(dataset={self.dataset}, basis={self.basis}, K={self.K}, L={self.L}, seed={self.seed}, gap={self.gap})>"
