"""
UI Components Module
Plain-text renderers for matrices, determinants, Gauss points and analysis reports
"""

from fractions import Fraction
from typing import Sequence

from ..algebra.calculus import PolyMatrix
from ..algebra.laurent import LaurentPolynomial, format_canonical, format_rational
from ..analysis.report import AnalysisReport


class TextComponents:
    """
    Reusable terminal components for the command-line frontend
    """

    @staticmethod
    def render_matrix(M: PolyMatrix) -> str:
        """
        Render a polynomial matrix as aligned bracketed rows

        Args:
            M: Polynomial matrix

        Returns:
            One line per row, columns padded to a common width
        """
        cells = [[format_canonical(entry) for entry in row] for row in M.entries]
        if not cells:
            return "[]"
        widths = [max(len(row[j]) for row in cells) for j in range(len(cells[0]))]
        lines = []
        for row in cells:
            padded = "  ".join(cell.rjust(width) for cell, width in zip(row, widths))
            lines.append(f"[ {padded} ]")
        return "\n".join(lines)

    @staticmethod
    def render_determinant(value: LaurentPolynomial) -> str:
        return f"det = {format_canonical(value)}"

    @staticmethod
    def render_projective_point(point: Sequence[Fraction]) -> str:
        """(a : b : c) with exact rationals"""
        return "(" + " : ".join(format_rational(p) for p in point) + ")"

    @staticmethod
    def render_integer_rows(rows: Sequence[Sequence[int]]) -> str:
        if not rows:
            return "(empty)"
        return "; ".join("(" + ", ".join(str(x) for x in row) + ")" for row in rows)

    @staticmethod
    def render_report(report: AnalysisReport) -> str:
        """Human-readable analysis report"""
        status = "verified" if report.verified else "NOT VERIFIED"
        lines = [
            f"variables (n):        {report.n}",
            f"support size:         {report.support_size}",
            f"exponent rank (r):    {report.exponent_rank}",
            f"log-Hessian rank:     {report.hessian_rank}",
            f"det(Af) is zero:      {'yes' if report.det_af_is_zero else 'no'}",
            f"eliminable vars (k):  {report.k}",
            f"support lattice:      {TextComponents.render_integer_rows(report.lambda_basis)}",
            f"orthogonal lattice:   {TextComponents.render_integer_rows(report.m_basis)}",
            f"automorphism A:       {TextComponents.render_integer_rows(report.automorphism_rows)}",
            f"reduced polynomial:   {report.reduced_polynomial}",
            f"certificate:          {status}",
            f"elapsed:              {report.elapsed_ms} ms",
        ]
        return "\n".join(lines)
