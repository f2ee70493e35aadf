"""
PDF summary of experiment reports.

The PDF shows:
- Run settings and corpus digests
- Message-level analysis per threshold pair
- Context determination per threshold pair and AST, best row highlighted
"""

import logging
from io import BytesIO
from typing import List

try:
    from reportlab.lib import colors
    from reportlab.lib.enums import TA_CENTER
    from reportlab.lib.pagesizes import A4, landscape
    from reportlab.lib.styles import ParagraphStyle, getSampleStyleSheet
    from reportlab.lib.units import cm
    from reportlab.platypus import Paragraph, SimpleDocTemplate, Spacer, Table, TableStyle
    REPORTLAB_AVAILABLE = True
except ImportError:
    REPORTLAB_AVAILABLE = False

from config import PROJECT_NAME, VERSION
from errors import EmptyEvaluation
from logic.metrics import MetricsCalculator
from models import ExperimentReport

logger = logging.getLogger(__name__)

HEADER_COLOR = "#1e3a5f"
BEST_ROW_COLOR = "#d8ecd0"


def _table_style(best_row: int = -1) -> "TableStyle":
    commands = [
        ("BACKGROUND", (0, 0), (-1, 0), colors.HexColor(HEADER_COLOR)),
        ("TEXTCOLOR", (0, 0), (-1, 0), colors.whitesmoke),
        ("FONTNAME", (0, 0), (-1, 0), "Helvetica-Bold"),
        ("FONTNAME", (0, 1), (-1, -1), "Helvetica"),
        ("FONTSIZE", (0, 0), (-1, -1), 9),
        ("ALIGN", (0, 0), (-1, -1), "RIGHT"),
        ("GRID", (0, 0), (-1, -1), 0.5, colors.grey),
        ("ROWBACKGROUNDS", (0, 1), (-1, -1), [colors.white, colors.HexColor("#f0f0f0")]),
    ]
    if best_row > 0:
        commands.append(("BACKGROUND", (0, best_row), (-1, best_row), colors.HexColor(BEST_ROW_COLOR)))
    return TableStyle(commands)


class PdfReport:
    """PDF renderer for experiment reports."""

    @staticmethod
    def render_pdf(report: ExperimentReport) -> bytes:
        """Render a report summary.

        Args:
            report: Finished experiment report

        Returns:
            PDF content as bytes

        Raises:
            ImportError: If ReportLab is not installed
        """
        if not REPORTLAB_AVAILABLE:
            raise ImportError("ReportLab is required for PDF reports. Install with: pip install reportlab")

        buffer = BytesIO()
        doc = SimpleDocTemplate(
            buffer,
            pagesize=landscape(A4),
            rightMargin=1.5 * cm,
            leftMargin=1.5 * cm,
            topMargin=1.5 * cm,
            bottomMargin=1.5 * cm,
            title=f"{PROJECT_NAME} {report.kind} report",
            author=PROJECT_NAME,
        )

        styles = getSampleStyleSheet()
        title_style = ParagraphStyle(
            "ReportTitle",
            parent=styles["Heading1"],
            fontSize=20,
            textColor=colors.HexColor(HEADER_COLOR),
            spaceAfter=18,
            alignment=TA_CENTER,
        )
        heading_style = ParagraphStyle(
            "ReportHeading",
            parent=styles["Heading2"],
            fontSize=14,
            textColor=colors.HexColor(HEADER_COLOR),
            spaceAfter=8,
        )

        config = report.config
        story: List = [
            Paragraph(f"Context determination report: {report.kind}", title_style),
            Paragraph(
                f"Model <b>{config.label}</b> (scorer {config.scorer}), seed {config.seed}, "
                f"{report.transcripts_evaluated} transcripts evaluated, "
                f"{'two' if config.two_tailed else 'one'}-tailed p-values.",
                styles["Normal"],
            ),
        ]
        if report.adult_share is not None:
            story.append(Paragraph(
                f"Adult share of MLA messages: {100.0 * report.adult_share:.1f}%", styles["Normal"]
            ))
        for name, digest in sorted(report.corpus_digests.items()):
            story.append(Paragraph(f"<font size=8>{name}: {digest}</font>", styles["Normal"]))
        story.append(Spacer(1, 0.5 * cm))

        story.append(Paragraph("Message-level analysis", heading_style))
        story.append(PdfReport._mla_table(report))
        story.append(Spacer(1, 0.5 * cm))

        story.append(Paragraph("Context determination", heading_style))
        story.append(PdfReport._context_table(report))

        story.append(Spacer(1, 0.8 * cm))
        story.append(Paragraph(f"<i>{PROJECT_NAME} {VERSION}</i>", styles["Normal"]))

        doc.build(story)
        pdf_bytes = buffer.getvalue()
        buffer.close()
        logger.debug(f"Rendered {len(pdf_bytes)} byte PDF report")
        return pdf_bytes

    @staticmethod
    def _mla_table(report: ExperimentReport) -> "Table":
        data = [["t_adult", "t_child", "TP", "IA", "IC", "O", "TP %", "IA %", "IC %", "O %"]]
        for row in report.mla_rows:
            counts = row.counts
            try:
                percentages = [f"{p:.1f}" for p in MetricsCalculator.mla_percentages(counts)]
            except EmptyEvaluation:
                percentages = ["-", "-", "-", f"{MetricsCalculator.omitted_pct(counts):.1f}"]
            data.append([
                f"{row.t_adult:.2f}", f"{row.t_child:.2f}",
                str(counts.tp), str(counts.ia), str(counts.ic), str(counts.o),
                *percentages,
            ])
        table = Table(data, repeatRows=1)
        table.setStyle(_table_style())
        return table

    @staticmethod
    def _context_table(report: ExperimentReport) -> "Table":
        data = [["t_adult", "t_child", "AST", "TP", "FP", "TN", "FN", "F1", "O %"]]
        best_index = -1
        for index, row in enumerate(report.context_rows, start=1):
            counts = row.counts
            data.append([
                f"{row.t_adult:.2f}", f"{row.t_child:.2f}", f"{row.ast:g}",
                str(counts.tp), str(counts.fp), str(counts.tn), str(counts.fn),
                f"{row.f1:.3f}", f"{row.o_pct:.1f}",
            ])
            if row.best:
                best_index = index
        table = Table(data, repeatRows=1)
        table.setStyle(_table_style(best_index))
        return table

    @staticmethod
    def save_pdf_to_file(pdf_content: bytes, filename: str) -> None:
        """Save PDF content to a file.

        Raises:
            IOError: If the file cannot be written
        """
        try:
            with open(filename, "wb") as f:
                f.write(pdf_content)
        except Exception as e:
            raise IOError(f"Failed to save PDF to {filename}: {str(e)}")

    @staticmethod
    def is_available() -> bool:
        """Check if PDF rendering is available."""
        return REPORTLAB_AVAILABLE
