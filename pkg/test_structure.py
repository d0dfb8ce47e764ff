#!/usr/bin/env python3
"""
Test della struttura del progetto
Verifica che tutti i moduli siano importabili
"""

import os
import sys
import importlib

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))


def test_imports():
    """Testa che tutti i moduli siano importabili"""

    print("Test importazione moduli...\n")

    modules_to_test = [
        'src',
        'src.data.constants',
        'src.core',
        'src.core.exceptions',
        'src.core.validation',
        'src.core.calculus',
        'src.core.calculus.radial',
        'src.core.calculus.forms',
        'src.core.geometry',
        'src.core.geometry.profiles',
        'src.core.geometry.structures',
        'src.core.instanton',
        'src.core.instanton.connection',
        'src.core.instanton.odes',
        'src.core.instanton.crosscheck',
        'src.core.solvers',
        'src.core.solvers.lambert',
        'src.core.solvers.implicit',
        'src.core.solvers.series',
        'src.core.solvers.cone',
        'src.core.solvers.closed_forms',
        'src.core.solvers.integrator',
        'src.core.analysis',
        'src.core.analysis.chern_simons',
        'src.core.analysis.limit',
        'src.core.analysis.branches',
        'src.core.models',
        'src.io',
        'src.services',
        'src.report',
        'src.cli',
    ]

    success = []
    failed = []

    for module_name in modules_to_test:
        try:
            importlib.import_module(module_name)
            success.append(module_name)
            print(f"  OK  {module_name}")
        except ImportError as e:
            failed.append((module_name, str(e)))
            print(f"  ERR {module_name}: {e}")

    print(f"\nRisultati:")
    print(f"   Successo: {len(success)}/{len(modules_to_test)}")
    print(f"   Falliti: {len(failed)}")

    if failed:
        print("\nModuli con errori:")
        for module, error in failed:
            print(f"   - {module}: {error}")

    return len(failed) == 0


def test_resources():
    """Verifica che le risorse siano presenti"""

    print("\nTest risorse...\n")

    for resource in ('requirements.txt', 'README.md', 'DESIGN.md'):
        if os.path.exists(resource):
            print(f"  OK  {resource} ({os.path.getsize(resource)} bytes)")
        else:
            print(f"  ERR {resource} - Non trovato")


def main():
    """Esegue tutti i test"""

    print("=" * 60)
    print("TEST STRUTTURA PROGETTO ISTANTONI G2 DEFORMATI")
    print("=" * 60)

    imports_ok = test_imports()
    test_resources()

    print("\n" + "=" * 60)
    if imports_ok:
        print("TUTTI I MODULI IMPORTABILI")
        print("\nPuoi eseguire: python main.py verify")
    else:
        print("ALCUNI IMPORT FALLITI")
        print("\nInstalla le dipendenze: pip install -r requirements.txt")
    print("=" * 60)


if __name__ == "__main__":
    main()
