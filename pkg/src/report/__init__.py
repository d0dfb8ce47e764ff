"""Generazione report di verifica"""

from .verification_report import VerificationReportGenerator
