"""
Costanti Numeriche e Geometriche
================================

Modulo centralizzato per tutte le costanti usate dal motore di calcolo:
- Tolleranze delle verifiche (torsione, equivalenza ODE/forme, serie, ...)
- Parametri dei risolutori (radici, Lambert W, integratore, quadratura)
- Default delle griglie radiali e offset dalle orbite singolari
- Costanti geometriche delle tre strutture G2 (BGGG, Bryant-Salamon, cono)

Versione: 1.0.0
"""


# =============================================================================
# COSTANTI GEOMETRICHE
# =============================================================================

class CostantiGeometria:
    """Costanti delle strutture G2 invarianti"""

    # --- BGGG ---
    BGGG_R_SINGOLARE = 9 / 4      # Orbita singolare (sezione nulla S^3)
    BGGG_R_AUSILIARIO = 3 / 4     # Radice di 16r^2 - 9

    # --- Bryant-Salamon ---
    BS_SCALA_COMPLETA = 1.0       # c = 1: metrica completa AC
    BS_SCALA_CONO = 0.0           # c = 0: cono

    # Offset minimo delle griglie dall'orbita singolare
    OFFSET_SINGOLARE = 1e-3


# =============================================================================
# TOLLERANZE DELLE VERIFICHE
# =============================================================================

class Tolleranze:
    """Tolleranze delle verifiche di accettazione"""

    # Torsione (dphi, dpsi normalizzati)
    TORSIONE = 1e-8

    # Equivalenza ODE <-> forme (dopo normalizzazione)
    EQUIVALENZA = 1e-9

    # Residui soluzioni in forma chiusa
    FORMA_CHIUSA = 1e-10
    IDENTITA_KILLING = 1e-13

    # Soluzioni implicite deformate
    RESIDUO_IMPLICITO = 1e-9
    DERIVATA_ESTREMO = 1e-4
    ASINTOTO = 1e-4

    # Serie di potenze (pendenza log-log)
    PENDENZA_SERIE = 0.1

    # Chern-Simons
    DENSITA_CS = 1e-10
    INTEGRALE_CS = 1e-8

    # Limite di scala
    LIMITE_SCALA_MAX = 1e-2
    RESIDUO_SCALATO = 1e-9

    # Cono deformato / Lambert W
    LAMBERT_AUTOCONSISTENZA = 1e-12
    RELAZIONE_IMPLICITA_CONO = 1e-12
    RESIDUO_CONO = 1e-9
    PENDENZA_CONO = (1.8, 2.0)

    # Integratore
    INTEGRATORE = 1e-6


# =============================================================================
# PARAMETRI RISOLUTORI
# =============================================================================

class ParametriSolver:
    """Parametri dei risolutori numerici"""

    # Radici (brentq sulla forma senza poli dell'equazione tan)
    RADICE_XTOL = 1e-18
    RADICE_RTOL = 4 * 2.220446049250313e-16
    RADICE_MAXITER = 200

    # Lambert W (iterazione di Halley)
    LAMBERT_MAXITER = 100
    LAMBERT_TOL = 0.7e-16

    # Integratore adattivo (Runge-Kutta esplicito)
    INTEGRATORE_METODO = 'DOP853'
    INTEGRATORE_RTOL = 1e-10
    INTEGRATORE_ATOL = 1e-13
    PASSO_TAYLOR = 1e-4
    PASSO_DERIVATA_ESTREMO = 1e-6

    # Quadratura adattiva
    QUADRATURA_LIMITE = 200
    QUADRATURA_EPSABS = 1e-12
    QUADRATURA_EPSREL = 1e-10


# =============================================================================
# GRIGLIE RADIALI
# =============================================================================

class ParametriGriglia:
    """Default delle griglie radiali"""

    PUNTI_DEFAULT = 200
    R_MAX_DEFAULT = 50.0
    R_MIN_CONO = 0.1
    SPAZIATURE = ('linear', 'log')

    # Campionamento casuale per la verifica di equivalenza
    ANSATZ_CASUALI = 50
    SEED = 20240531


# =============================================================================
# OUTPUT
# =============================================================================

class ParametriOutput:
    """Serializzazione dataset"""

    CIFRE_SIGNIFICATIVE = 17
    FORMATI = ('csv', 'json', 'both')
    ENV_OUTPUT_DIR = 'DG2_OUTPUT_DIR'
    OUTPUT_DIR_DEFAULT = 'output'


# =============================================================================
# CLASSE AGGREGATRICE
# =============================================================================

class DG2:
    """
    Classe aggregatrice per accesso unificato alle costanti

    Uso:
        from src.data.constants import DG2

        tol = DG2.Tolleranze.TORSIONE
        r0 = DG2.Geometria.BGGG_R_SINGOLARE
    """

    Geometria = CostantiGeometria
    Tolleranze = Tolleranze
    Solver = ParametriSolver
    Griglia = ParametriGriglia
    Output = ParametriOutput

    VERSION = "1.0.0"
    SOFTWARE = "deformed-g2-instantons"


if __name__ == "__main__":
    print("=== Costanti DG2 ===\n")
    print(f"  r singolare BGGG: {DG2.Geometria.BGGG_R_SINGOLARE}")
    print(f"  offset griglie: {DG2.Geometria.OFFSET_SINGOLARE}")
    print(f"  tolleranza torsione: {DG2.Tolleranze.TORSIONE}")
    print(f"  integratore: {DG2.Solver.INTEGRATORE_METODO} "
          f"(rtol={DG2.Solver.INTEGRATORE_RTOL})")
    print(f"\nVersione modulo: {DG2.VERSION}")
