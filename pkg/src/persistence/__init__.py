"""
Persistence of obstruction certificates.
"""

from .database import CertificateRecord, CertificateStore, RunRecord

__all__ = ["CertificateRecord", "CertificateStore", "RunRecord"]
