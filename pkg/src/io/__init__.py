"""Gestione input/output file"""

from .dataset_writer import DatasetWriter, write_report_json
from .config_loader import load_config_file
