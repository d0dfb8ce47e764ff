#!/usr/bin/env python3
"""
Istantoni G2 Deformati - Entry Point
"""

import sys
import os

# Aggiungi la directory corrente al path Python
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from src.cli.main import main

if __name__ == '__main__':
    sys.exit(main())
