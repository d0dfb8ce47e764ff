"""
Report PDF delle Verifiche
Tabella dei controlli per geometria e suite, esito complessivo
"""

from reportlab.lib.pagesizes import A4
from reportlab.lib.units import cm
from reportlab.lib.styles import getSampleStyleSheet, ParagraphStyle
from reportlab.lib.enums import TA_CENTER, TA_JUSTIFY
from reportlab.platypus import SimpleDocTemplate, Paragraph, Spacer, Table, TableStyle
from reportlab.lib import colors
from typing import Any, Dict, List
from xml.sax.saxutils import escape
import logging

from src.data.constants import DG2

logger = logging.getLogger(__name__)

COLORE_OK = colors.HexColor('#27ae60')
COLORE_KO = colors.HexColor('#e74c3c')
COLORE_INFO = colors.HexColor('#7f8c8d')


def _format_number(value: Any, spec: str) -> str:
    """Numero formattato; 'inf' e 'nan' dai report JSON restano testo"""
    try:
        return format(float(value), spec)
    except (TypeError, ValueError):
        return str(value)


class VerificationReportGenerator:
    """Generatore report di verifica in formato PDF"""

    def __init__(self):
        self.margin = 2 * cm
        self.styles = getSampleStyleSheet()
        self._setup_custom_styles()

    def _setup_custom_styles(self):
        """Configura stili personalizzati"""
        self.styles.add(ParagraphStyle(
            name='TitoloPrincipale',
            parent=self.styles['Heading1'],
            fontSize=18,
            alignment=TA_CENTER,
            spaceAfter=20,
            textColor=colors.HexColor('#2c3e50')
        ))
        self.styles.add(ParagraphStyle(
            name='Sezione',
            parent=self.styles['Heading2'],
            fontSize=12,
            spaceBefore=15,
            spaceAfter=8,
            textColor=colors.HexColor('#2980b9')
        ))
        self.styles.add(ParagraphStyle(
            name='TestoNormale',
            parent=self.styles['Normal'],
            fontSize=9,
            alignment=TA_JUSTIFY,
            spaceAfter=4
        ))
        self.styles.add(ParagraphStyle(
            name='Risultato',
            parent=self.styles['Normal'],
            fontSize=11,
            alignment=TA_CENTER,
            spaceBefore=10,
            spaceAfter=10,
            fontName='Helvetica-Bold'
        ))

    def generate_report(self, report: Dict, filepath: str) -> bool:
        """
        Genera il report PDF

        Args:
            report: VerificationReport.to_dict()
            filepath: percorso del PDF

        Returns:
            bool: True se generato con successo
        """
        try:
            if not filepath.lower().endswith('.pdf'):
                filepath += '.pdf'

            doc = SimpleDocTemplate(
                filepath,
                pagesize=A4,
                leftMargin=self.margin,
                rightMargin=self.margin,
                topMargin=self.margin,
                bottomMargin=self.margin
            )

            story = []
            story.append(Paragraph("REPORT DI VERIFICA", self.styles['TitoloPrincipale']))
            story.append(Paragraph(f"{DG2.SOFTWARE} v{DG2.VERSION}", self.styles['TestoNormale']))
            story.append(Spacer(1, 10))

            for geometry in self._geometries(report):
                story.extend(self._create_geometry_section(report, geometry))

            story.extend(self._create_notes_section(report))
            story.extend(self._create_conclusions_section(report))

            doc.build(story)
            logger.info(f"Report PDF scritto: {filepath}")
            return True

        except (OSError, ValueError) as e:
            logger.error(f"Errore generazione report: {e}")
            return False

    @staticmethod
    def _geometries(report: Dict) -> List[str]:
        seen = []
        for check in report.get('checks', []):
            if check['geometry'] not in seen:
                seen.append(check['geometry'])
        return seen

    def _create_geometry_section(self, report: Dict, geometry: str) -> List:
        """Tabella dei controlli di una geometria"""
        elements = [Paragraph(f"Geometria: {geometry.upper()}", self.styles['Sezione'])]

        data = [['Suite', 'Controllo', 'Valore', 'Tolleranza', 'Esito']]
        styles = [
            ('BACKGROUND', (0, 0), (-1, 0), colors.HexColor('#3498db')),
            ('TEXTCOLOR', (0, 0), (-1, 0), colors.white),
            ('FONTNAME', (0, 0), (-1, 0), 'Helvetica-Bold'),
            ('FONTSIZE', (0, 0), (-1, -1), 7),
            ('GRID', (0, 0), (-1, -1), 0.5, colors.grey),
            ('VALIGN', (0, 0), (-1, -1), 'MIDDLE'),
        ]
        checks = [c for c in report.get('checks', []) if c['geometry'] == geometry]
        for row, check in enumerate(checks, start=1):
            if check['informative']:
                status, color = 'INFO', COLORE_INFO
            elif check['passed']:
                status, color = 'OK', COLORE_OK
            else:
                status, color = 'FALLITO', COLORE_KO
            data.append([
                check['suite'],
                Paragraph(escape(check['name']), self.styles['TestoNormale']),
                _format_number(check['value'], '.3e'),
                _format_number(check['tolerance'], '.1e'),
                status,
            ])
            styles.append(('TEXTCOLOR', (4, row), (4, row), color))

        table = Table(data, colWidths=[2.5*cm, 7*cm, 2.5*cm, 2*cm, 2*cm], repeatRows=1)
        table.setStyle(TableStyle(styles))
        elements.append(table)
        elements.append(Spacer(1, 10))
        return elements

    def _create_notes_section(self, report: Dict) -> List:
        """Errori e avvisi registrati dalle suite"""
        messages = [('Errore', m) for m in report.get('errors', [])] + \
                   [('Avviso', m) for m in report.get('warnings', [])]
        if not messages:
            return []
        elements = [Paragraph("Note", self.styles['Sezione'])]
        for kind, message in messages:
            elements.append(Paragraph(f"<b>{kind}:</b> {escape(str(message))}",
                                      self.styles['TestoNormale']))
        return elements

    def _create_conclusions_section(self, report: Dict) -> List:
        """Esito complessivo"""
        summary = report.get('summary', {})
        passed = report.get('passed', False)
        text = (f"ESITO: VERIFICA SUPERATA ({summary.get('checks', 0)} controlli)" if passed
                else f"ESITO: VERIFICA NON SUPERATA ({summary.get('failed', 0)} controlli falliti)")
        return [Spacer(1, 15), Paragraph(text, ParagraphStyle(
            'Esito', parent=self.styles['Risultato'],
            textColor=COLORE_OK if passed else COLORE_KO))]
