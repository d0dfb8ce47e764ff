"""
Interfaccia a Riga di Comando
=============================

Sottocomandi:
    verify   suite di verifica, report JSON + sintesi, PDF opzionale
    emit     dataset CSV/JSON (branches, profile, cone, series,
             chern-simons, limit, torsion)
    solve    radice singola dell'equazione implicita

Codici di uscita: 0 superata, 1 controllo fallito, 2 errore d'uso,
3 mancata convergenza.

La configurazione si legge da (in ordine di priorita' crescente) default,
file --config "chiave = valore", flag.
"""

import argparse
import json
import logging
import os
import sys
from typing import Dict, List, Optional

from src.core.exceptions import ConfigError, ConvergenceError, DomainError, SolverError
from src.core.models.run_config import RunConfig, SUITES, validate_run_config
from src.data.constants import DG2
from src.io.config_loader import load_config_file

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_NOT_CONVERGED = 3

EMIT_TARGETS = ('branches', 'profile', 'cone', 'series', 'chern-simons', 'limit', 'torsion')

# flag -> chiave di RunConfig
FLAG_KEYS = {
    'geometry': 'geometry', 'mode': 'mode', 'variant': 'variant',
    'tan_c': 'tan_c', 'cone_c': 'cone_c', 'a': 'a', 'c0': 'c0', 'epsilon': 'epsilon',
    'bs_scale': 'bs_scale', 'branch': 'branch', 'k_max': 'k_max', 'order': 'order',
    'series_a': 'series_a', 'c_max': 'c_max', 'r': 'r',
    'r_min': 'r_min', 'r_max': 'r_max', 'count': 'count', 'spacing': 'spacing',
    'seed': 'seed', 'ansatz_count': 'ansatz_count', 'suites': 'suites',
    'output_dir': 'output_dir', 'output_format': 'output_format', 'pdf': 'pdf',
}


def _add_common(parser: argparse.ArgumentParser):
    parser.add_argument('--config', help="file di configurazione 'chiave = valore'")
    parser.add_argument('--verbose', '-v', action='store_true', help='log di debug')
    parser.add_argument('--output-dir', dest='output_dir',
                        help=f"cartella di output (default ${DG2.Output.ENV_OUTPUT_DIR} "
                             f"o '{DG2.Output.OUTPUT_DIR_DEFAULT}')")


def _add_grid(parser: argparse.ArgumentParser):
    parser.add_argument('--rmin', dest='r_min', type=float)
    parser.add_argument('--rmax', dest='r_max', type=float)
    parser.add_argument('--points', dest='count', type=int)
    parser.add_argument('--spacing', choices=DG2.Griglia.SPAZIATURE)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='dg2',
        description='Istantoni G2 e G2 deformati invarianti: verifiche e dati')
    parser.add_argument('--version', action='version',
                        version=f"{DG2.SOFTWARE} {DG2.VERSION}")
    sub = parser.add_subparsers(dest='command', required=True)

    verify = sub.add_parser('verify', help='esegue le suite di verifica')
    _add_common(verify)
    _add_grid(verify)
    verify.add_argument('--geometry', choices=('bggg', 'bs', 'cone', 'all'))
    verify.add_argument('--suite', dest='suites', action='append', choices=SUITES,
                        help='suite da eseguire (ripetibile; default tutte)')
    verify.add_argument('--c', dest='tan_c', type=float, help='costante c delle soluzioni implicite')
    verify.add_argument('--c0', type=float)
    verify.add_argument('--bs-scale', dest='bs_scale', type=float)
    verify.add_argument('--seed', type=int)
    verify.add_argument('--ansatz-count', dest='ansatz_count', type=int)
    verify.add_argument('--report', help='percorso del report JSON')
    verify.add_argument('--pdf', help='percorso del report PDF')

    emit = sub.add_parser('emit', help='scrive un dataset')
    _add_common(emit)
    _add_grid(emit)
    emit.add_argument('target', choices=EMIT_TARGETS)
    emit.add_argument('--geometry', choices=('bggg', 'bs', 'cone'))
    emit.add_argument('--c', dest='tan_c', type=float)
    emit.add_argument('--branch', type=int)
    emit.add_argument('--kmax', dest='k_max', type=int)
    emit.add_argument('--cmax', dest='c_max', type=float)
    emit.add_argument('--cone-c', dest='cone_c', type=float)
    emit.add_argument('--a', help='terna a1,a2,a3')
    emit.add_argument('--series-a', dest='series_a', type=float)
    emit.add_argument('--order', type=int)
    emit.add_argument('--eps', dest='epsilon', type=float)
    emit.add_argument('--bs-scale', dest='bs_scale', type=float)
    emit.add_argument('--format', dest='output_format', choices=DG2.Output.FORMATI)

    solve = sub.add_parser('solve', help='radice di 24 f tan(f/3 + c) = 16 r^2 - 81')
    solve.add_argument('--verbose', '-v', action='store_true')
    solve.add_argument('--r', type=float, required=True)
    solve.add_argument('--c', dest='tan_c', type=float, required=True)
    solve.add_argument('--branch', type=int, default=0)
    return parser


def build_config(args: argparse.Namespace, defaults: Optional[Dict] = None) -> RunConfig:
    """
    Default < file < flag.

    Raises:
        ConfigError: file o valori non validi
    """
    config = RunConfig()
    if defaults:
        config.update(defaults)
    if getattr(args, 'config', None):
        config.update(load_config_file(args.config))

    flags = {}
    for dest, key in FLAG_KEYS.items():
        value = getattr(args, dest, None)
        if value is not None:
            flags[key] = value
    config.update(flags)

    validation = validate_run_config(config)
    for warning in validation.warnings:
        logger.warning(warning)
    if not validation.is_valid:
        raise ConfigError('; '.join(validation.errors))
    return config


def cmd_verify(args: argparse.Namespace) -> int:
    from src.services.verification_service import VerificationService
    from src.io.dataset_writer import write_report_json

    config = build_config(args, defaults={'geometry': 'all'})
    report = VerificationService(config).run()

    path = args.report or os.path.join(config.output_dir, 'verification_report.json')
    write_report_json(report.to_dict(), path)
    print('\n'.join(report.summary_lines()))
    print(f"Report JSON: {path}")

    if config.pdf:
        from src.report.verification_report import VerificationReportGenerator
        if not VerificationReportGenerator().generate_report(report.to_dict(), config.pdf):
            logger.warning(f"Report PDF non generato: {config.pdf}")
    return report.exit_code


def cmd_emit(args: argparse.Namespace) -> int:
    from src.services.dataset_service import DatasetService

    config = build_config(args)
    paths = DatasetService(config).emit(args.target)
    for path in paths:
        print(path)
    return EXIT_OK


def cmd_solve(args: argparse.Namespace) -> int:
    from src.core.solvers.implicit import solve_tan_implicit

    root = solve_tan_implicit(args.r, args.tan_c, args.branch)
    print(json.dumps(root.to_dict(), indent=2))
    return EXIT_OK if root.converged else EXIT_NOT_CONVERGED


COMMANDS = {'verify': cmd_verify, 'emit': cmd_emit, 'solve': cmd_solve}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else EXIT_OK

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')

    try:
        return COMMANDS[args.command](args)
    except ConfigError as e:
        logger.error(f"Configurazione non valida: {e}")
        print(f"errore: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ConvergenceError as e:
        logger.error(f"Mancata convergenza: {e}")
        return EXIT_NOT_CONVERGED
    except (DomainError, SolverError) as e:
        logger.error(str(e))
        print(f"errore: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        logger.error(f"Output non scrivibile: {e}")
        print(f"errore: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
