"""Plain-text SVG emitters for the mixture diagram and phase charts."""

from __future__ import annotations

from math import sqrt

from .regions import MixtureScanResult, PhasePoint

_SQ3_2 = sqrt(3.0) / 2.0


def _palette(n: int) -> list[str]:
    # Spread hues around the wheel; n is small (signature classes).
    if n <= 0:
        return []
    return [f"hsl({(i * 360 / n):.0f},68%,58%)" for i in range(n)]


def _xy(I: float, H: float, C: float, side: float, margin: float):
    x = margin + side * (H + 0.5 * C)
    y = margin + side * _SQ3_2 - side * _SQ3_2 * C
    return x, y


def _cell_triangles(n: int):
    """Triangle vertices in the same order as regions.simplex_cells."""
    tris = []
    for i in range(n):
        for j in range(n - i):
            k = n - 1 - i - j
            tris.append((((i + 1) / n, j / n, k / n),
                         (i / n, (j + 1) / n, k / n),
                         (i / n, j / n, (k + 1) / n)))
    for i in range(n - 1):
        for j in range(n - 1 - i):
            k = n - 2 - i - j
            tris.append((((i + 1) / n, (j + 1) / n, k / n),
                         ((i + 1) / n, j / n, (k + 1) / n),
                         (i / n, (j + 1) / n, (k + 1) / n)))
    return tris


def ternary_svg(result: MixtureScanResult) -> str:
    """Colour every simplex cell by its equilibrium signature."""
    side, margin = 520.0, 40.0
    signatures = sorted(result.signature_counts)
    colors = dict(zip(signatures, _palette(len(signatures))))
    body = []
    for cell, tri in zip(result.cells, _cell_triangles(result.spec.n)):
        pts = " ".join("%.2f,%.2f" % _xy(*v, side, margin) for v in tri)
        body.append(
            f'<polygon points="{pts}" fill="{colors[cell.signature]}" '
            f'stroke="none"><title>I={cell.I:.4f} H={cell.H:.4f} C={cell.C:.4f} '
            f'ids={"|".join(map(str, cell.signature))}</title></polygon>')
    frame = " ".join("%.2f,%.2f" % _xy(*v, side, margin)
                     for v in ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    body.append(f'<polygon points="{frame}" fill="none" stroke="#333" stroke-width="1.5"/>')
    for label, bc in (("I", (1, 0, 0)), ("H", (0, 1, 0)), ("C", (0, 0, 1))):
        x, y = _xy(*bc, side, margin)
        dx = -18 if label == "I" else (8 if label == "H" else -4)
        dy = 14 if label != "C" else -8
        body.append(f'<text x="{x + dx:.1f}" y="{y + dy:.1f}" font-size="15" '
                    f'font-family="sans-serif">{label}</text>')
    legend_y = margin + side * _SQ3_2 + 30
    for idx, sig in enumerate(signatures):
        y = legend_y + 18 * idx
        label = "|".join(map(str, sig)) or "(none)"
        extras = []
        if any(c.signature == sig and c.has_overrun_eq for c in result.cells):
            extras.append("overrun")
        if any(c.signature == sig and c.contract_failure for c in result.cells):
            extras.append("failure-only")
        suffix = f" [{', '.join(extras)}]" if extras else ""
        body.append(f'<rect x="{margin}" y="{y - 10}" width="12" height="12" '
                    f'fill="{colors[sig]}"/>')
        body.append(f'<text x="{margin + 18}" y="{y}" font-size="11" '
                    f'font-family="monospace">{label}{suffix}</text>')
    height = legend_y + 18 * len(signatures) + 20
    width = 2 * margin + side
    return _document(width, height, body)


def phase_svg(points: list[PhasePoint]) -> str:
    """Dominant receiver strategy per sender as coloured gamma tracks."""
    width, margin, track_h, gap = 640.0, 50.0, 34.0, 16.0
    senders = sorted(points[0].best_responses) if points else []
    gammas = [p.gamma for p in points]
    lo, hi = (gammas[0], gammas[-1]) if gammas else (0.0, 1.0)
    span = (hi - lo) or 1.0
    labels = sorted({p.dominant[s] for p in points for s in senders})
    colors = dict(zip(labels, _palette(len(labels))))

    def gx(g: float) -> float:
        return margin + (width - 2 * margin) * (g - lo) / span

    def segments(sender: str):
        """(start, end, dominant) runs; boundaries sit at refined switches."""
        start, label = points[0].gamma, points[0].dominant[sender]
        for pt in points[1:]:
            sw = pt.switches[sender]
            if sw is not None:
                yield start, sw, label
                start, label = sw, pt.dominant[sender]
        yield start, points[-1].gamma, label

    body = []
    for row, sender in enumerate(senders):
        y = margin + row * (track_h + gap)
        body.append(f'<text x="10" y="{y + track_h / 2 + 4}" font-size="13" '
                    f'font-family="monospace">{sender}</text>')
        for g0, g1, label in segments(sender):
            x0, x1 = gx(g0), gx(g1)
            body.append(f'<rect x="{x0:.2f}" y="{y:.2f}" width="{max(x1 - x0, 0.5):.2f}" '
                        f'height="{track_h}" fill="{colors[label]}"/>')
        for pt in points:
            sw = pt.switches[sender]
            if sw is not None:
                body.append(f'<line x1="{gx(sw):.2f}" y1="{y - 4}" x2="{gx(sw):.2f}" '
                            f'y2="{y + track_h + 4}" stroke="#111" '
                            f'stroke-dasharray="3,2"/>')
    axis_y = margin + len(senders) * (track_h + gap) + 6
    body.append(f'<line x1="{gx(lo)}" y1="{axis_y}" x2="{gx(hi)}" y2="{axis_y}" '
                f'stroke="#333"/>')
    for t in range(5):
        g = lo + span * t / 4
        body.append(f'<text x="{gx(g) - 10:.1f}" y="{axis_y + 16}" font-size="11" '
                    f'font-family="sans-serif">{g:.2f}</text>')
    body.append(f'<text x="{width / 2 - 40}" y="{axis_y + 34}" font-size="12" '
                f'font-family="sans-serif">competence prior</text>')
    legend_y = axis_y + 52
    for idx, label in enumerate(labels):
        y = legend_y + 18 * idx
        body.append(f'<rect x="{margin}" y="{y - 10}" width="12" height="12" '
                    f'fill="{colors[label]}"/>')
        body.append(f'<text x="{margin + 18}" y="{y}" font-size="11" '
                    f'font-family="monospace">{label}</text>')
    height = legend_y + 18 * len(labels) + 16
    return _document(width, height, body)


def _document(width: float, height: float, body: list[str]) -> str:
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" '
            f'height="{height:.0f}" viewBox="0 0 {width:.0f} {height:.0f}">')
    return "\n".join([head, '<rect width="100%" height="100%" fill="white"/>',
                      *body, "</svg>"]) + "\n"
