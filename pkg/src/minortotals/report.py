"""Text serializations: ASCII tables, CSV, JSON and SVG bar charts.

Every emitter is a pure function of its input and returns a string ending in
exactly one newline.  Machine formats (CSV, JSON) write digits as integers;
human formats (ASCII, SVG) write them in the radix alphabet.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .difftab import DifferenceTable, ResidueProfile, predict_profile
from .oracle import DigitHistogram, oracle_profile
from .radix import digit_char, render
from .seqcore import SequenceId

SVG_WIDTH = 640
SVG_HEIGHT = 360

HEADER_FORMULA = {
    SequenceId.NATURAL: "i(i+1)/2",
    SequenceId.EVEN: "i(i+1)",
    SequenceId.ODD: "i^2",
    SequenceId.FAULHABER_P2: "i(i+1)(2i+1)/6",
}


@dataclass(frozen=True)
class BaseComparison:
    base: int
    paper: ResidueProfile
    oracle: ResidueProfile

    @property
    def agreement(self) -> bool:
        return self.paper.admissible == self.oracle.admissible


@dataclass(frozen=True)
class GapReport:
    seq: SequenceId
    entries: tuple

    @property
    def bases(self) -> list[int]:
        return [e.base for e in self.entries]

    @property
    def all_agree(self) -> bool:
        return all(e.agreement for e in self.entries)


def gap_report(seq: SequenceId, bases: Iterable[int]) -> GapReport:
    entries = tuple(
        BaseComparison(L, predict_profile(seq, L), oracle_profile(seq, L)) for L in bases
    )
    return GapReport(seq, entries)


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=True) + "\n"


def _digits_text(digits) -> str:
    return " ".join(digit_char(d) for d in sorted(digits)) or "-"


# -- difference tables -------------------------------------------------------

def render_table_ascii(t: DifferenceTable) -> str:
    """Fixed-width grid of f(i) - j.

    ``*`` after a value marks a cell that certifies its row (the gray cells of
    a printed table); ``!`` before a row marks a digit that does occur.
    """
    width = max(len(str(v)) for row in t.cells for v in row)
    width = max(width, max(len(str(v)) for v in t.header))
    j_width = 3
    lines = [f"{t.seq} sequence, base {t.base}: cells f(i) - j, f(i) = {HEADER_FORMULA[t.seq]}"]
    head = " " * j_width + " |" + "".join(f" {v:>{width}} " for v in t.header)
    lines.append(head.rstrip())
    lines.append("-" * (j_width + 1) + "+" + "-" * ((width + 2) * t.base))
    for j in range(t.base):
        flag = "!" if t.row_certified(j) else " "
        row = f"{flag} {digit_char(j)} |"
        for v, mark in zip(t.cells[j], t.marks[j]):
            row += f" {v:>{width}}" + ("*" if mark else " ")
        lines.append(row.rstrip())
    lines.append(f"certified digits: {_digits_text(t.certified_digits)}")
    return "\n".join(lines) + "\n"


def table_json(t: DifferenceTable) -> str:
    rows = [
        {
            "j": j,
            "certified": t.row_certified(j),
            "cells": list(t.cells[j]),
            "marks": list(t.marks[j]),
        }
        for j in range(t.base)
    ]
    return _dumps({"sequence": t.seq.label, "base": t.base, "header": list(t.header), "rows": rows})


# -- profiles and gap reports ------------------------------------------------

def _profile_dict(p: ResidueProfile) -> dict:
    return {"admissible": sorted(p.admissible), "gaps": sorted(p.gaps)}


def profile_json(p: ResidueProfile) -> str:
    return _dumps(
        {"sequence": p.seq.label, "base": p.base, "method": p.method, **_profile_dict(p)}
    )


def profile_ascii(p: ResidueProfile) -> str:
    return (
        f"{p.seq} base {p.base} ({p.method}): admissible {_digits_text(p.admissible)}; "
        f"gaps {_digits_text(p.gaps)}\n"
    )


def _report_dict(report: GapReport) -> dict:
    return {
        "sequence": report.seq.label,
        "bases": [
            {
                "base": e.base,
                "paper_method": _profile_dict(e.paper),
                "oracle": _profile_dict(e.oracle),
                "agreement": e.agreement,
            }
            for e in report.entries
        ],
    }


def emit_json(report: GapReport) -> str:
    return _dumps(_report_dict(report))


def emit_json_many(reports: Iterable[GapReport]) -> str:
    return _dumps([_report_dict(r) for r in reports])


def report_ascii(report: GapReport) -> str:
    lines = []
    for e in report.entries:
        verdict = "agree" if e.agreement else "DISAGREE"
        line = f"{report.seq} base {e.base:>2}: gaps {_digits_text(e.paper.gaps)}"
        if not e.agreement:
            line += f" (oracle: {_digits_text(e.oracle.gaps)})"
        lines.append(f"{line} [{verdict}]")
    return "\n".join(lines) + "\n"


# -- histograms --------------------------------------------------------------

def emit_csv(h: DigitHistogram) -> str:
    rows = ["digit,count"] + [f"{d},{c}" for d, c in enumerate(h.counts)]
    return "\n".join(rows) + "\n"


def histogram_json(h: DigitHistogram) -> str:
    return _dumps(
        {"sequence": h.seq.label, "base": h.base, "n_terms": h.n_terms, "counts": list(h.counts)}
    )


def histogram_ascii(h: DigitHistogram, width: int = 40) -> str:
    top = max(h.counts)
    lines = [f"{h.seq} base {h.base}, first {h.n_terms} minor totals"]
    for d, c in enumerate(h.counts):
        bar = "#" * (round(c * width / top) if top else 0)
        if c and not bar:
            bar = "#"
        lines.append(f"{digit_char(d)} | {c:>{len(str(top))}} {bar}".rstrip())
    lines.append(f"gaps: {_digits_text(h.absent)}")
    return "\n".join(lines) + "\n"


def emit_histogram_svg(h: DigitHistogram) -> str:
    """Standalone SVG bar chart; digits that never occur get a baseline tick."""
    left, right, top, bottom = 56, 24, 48, 48
    plot_w = SVG_WIDTH - left - right
    plot_h = SVG_HEIGHT - top - bottom
    base_y = top + plot_h
    slot = plot_w / h.base
    bar_w = slot * 0.7
    peak = max(h.counts) or 1

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{SVG_WIDTH}" height="{SVG_HEIGHT}" viewBox="0 0 {SVG_WIDTH} {SVG_HEIGHT}">',
        '<rect x="0" y="0" width="640" height="360" fill="#ffffff"/>',
        f'<text x="{SVG_WIDTH / 2:.2f}" y="28" text-anchor="middle" font-family="sans-serif" '
        f'font-size="16">Unit\'s digits of {h.seq} minor totals, base {h.base}, '
        f'N = {h.n_terms}</text>',
        f'<line x1="{left}" y1="{base_y}" x2="{left + plot_w}" y2="{base_y}" '
        'stroke="#000000" stroke-width="1"/>',
        f'<line x1="{left}" y1="{top}" x2="{left}" y2="{base_y}" '
        'stroke="#000000" stroke-width="1"/>',
        f'<text x="{left - 8}" y="{base_y}" text-anchor="end" font-family="sans-serif" '
        'font-size="11">0</text>',
        f'<text x="{left - 8}" y="{top + 4}" text-anchor="end" font-family="sans-serif" '
        f'font-size="11">{peak}</text>',
    ]
    for d, c in enumerate(h.counts):
        x = left + d * slot + (slot - bar_w) / 2
        cx = left + (d + 0.5) * slot
        if c:
            bh = plot_h * c / peak
            out.append(
                f'<rect id="bar-{d}" class="bar" x="{x:.2f}" '
                f'y="{base_y - bh:.2f}" width="{bar_w:.2f}" height="{bh:.2f}" fill="#4d4d4d"/>'
            )
            out.append(
                f'<text x="{cx:.2f}" y="{base_y - bh - 4:.2f}" text-anchor="middle" '
                f'font-family="sans-serif" font-size="10">{c}</text>'
            )
        else:
            out.append(
                f'<line id="gap-{d}" class="gap" x1="{x:.2f}" y1="{base_y}" '
                f'x2="{x + bar_w:.2f}" y2="{base_y}" stroke="#cc0000" stroke-width="3"/>'
            )
        out.append(
            f'<text x="{cx:.2f}" y="{base_y + 18}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="12">{digit_char(d)}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


# -- witnesses ---------------------------------------------------------------

def witness_text(seq: SequenceId, base: int, j: int, found) -> str:
    if found is None:
        return f"digit {digit_char(j)} is a gap: no {seq} minor total ends in it in base {base}\n"
    n, total = found
    return f"n={n} total={int(total)} ({render(int(total), base)} in base {base})\n"


def witness_json(seq: SequenceId, base: int, j: int, found) -> str:
    body = {"sequence": seq.label, "base": base, "digit": j}
    if found is None:
        body.update(n=None, total=None, rendered=None)
    else:
        n, total = found
        body.update(n=n, total=int(total), rendered=render(int(total), base))
    return _dumps(body)
