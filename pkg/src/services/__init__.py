# Service Layer - Orchestrazione verifiche e dataset
# Questo layer fa da intermediario tra CLI e Domain (motore di calcolo)

from .verification_service import VerificationService, VerificationReport, CheckOutcome
from .dataset_service import DatasetService

__all__ = [
    'VerificationService',
    'VerificationReport',
    'CheckOutcome',
    'DatasetService',
]
