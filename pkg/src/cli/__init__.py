"""Interfaccia a riga di comando"""

from src.cli.main import main, build_parser, build_config
