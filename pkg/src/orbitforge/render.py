"""SVG pictures of triangle chains and matplotlib figures of orbit runs."""
from __future__ import annotations

import math
from pathlib import Path
from typing import Sequence
from xml.sax.saxutils import escape

from . import chains
from .chains import ActionAngle, AngleVector, TriangleChain

MODELS = ("halfplane", "disk")
SIZE = 480
MARGIN = 40
COINCIDE_TOL = 1e-7


def to_model(z: complex, model: str) -> complex:
    if model == "halfplane":
        return z
    if model == "disk":
        return (z - 1j) / (z + 1j)
    raise ValueError(f"unknown model {model!r}")


def _circle_through(p: complex, q: complex, r: complex):
    """Centre and radius of the circle through three points, or None if collinear."""
    d = 2 * ((p.real - r.real) * (q.imag - r.imag) - (q.real - r.real) * (p.imag - r.imag))
    if abs(d) < 1e-12:
        return None
    a = abs(p) ** 2 - abs(r) ** 2
    b = abs(q) ** 2 - abs(r) ** 2
    cx = (a * (q.imag - r.imag) - b * (p.imag - r.imag)) / d
    cy = ((p.real - r.real) * b - (q.real - r.real) * a) / d
    c = complex(cx, cy)
    return c, abs(p - c)


def geodesic_circle(p: complex, q: complex, model: str):
    """Supporting circle (centre, radius) of the geodesic through p and q, or None for a straight one."""
    if model == "halfplane":
        if abs(p.real - q.real) < 1e-12 * (1 + abs(p) + abs(q)):
            return None
        c = (abs(p) ** 2 - abs(q) ** 2) / (2 * (p.real - q.real))
        return complex(c, 0), abs(p - c)
    # disk: the circle also passes through the inverse of p in the unit circle
    if abs(p) < 1e-12:
        return None
    return _circle_through(p, q, 1 / p.conjugate())


class _Screen:
    def __init__(self, pts: Sequence[complex], model: str):
        if model == "disk":
            lo, hi = complex(-1, -1), complex(1, 1)
        else:
            xs = [z.real for z in pts]
            ys = [z.imag for z in pts]
            span = max(max(xs) - min(xs), max(ys) - min(ys), 1e-9)
            lo = complex(min(xs) - 0.1 * span, 0.0)
            hi = complex(max(xs) + 0.1 * span, max(ys) + 0.1 * span)
        self.lo = lo
        self.scale = (SIZE - 2 * MARGIN) / max(hi.real - lo.real, hi.imag - lo.imag)
        self.top = hi.imag

    def __call__(self, z: complex):
        return (MARGIN + (z.real - self.lo.real) * self.scale,
                MARGIN + (self.top - z.imag) * self.scale)


def _fmt(v: float) -> str:
    return f"{v:.3f}"


def _edge(scr: _Screen, p: complex, q: complex, model: str) -> str:
    x, y = scr(q)
    circ = geodesic_circle(p, q, model)
    if circ is None:
        return f"L {_fmt(x)} {_fmt(y)}"
    c, r = circ
    # y is flipped on screen, so counterclockwise in the model is sweep 0
    cross = (p - c).real * (q - c).imag - (p - c).imag * (q - c).real
    sweep = 0 if cross > 0 else 1
    rs = r * scr.scale
    return f"A {_fmt(rs)} {_fmt(rs)} 0 0 {sweep} {_fmt(x)} {_fmt(y)}"


def render_svg(chain: TriangleChain, model: str = "halfplane", title: str = "") -> str:
    """SVG text; vertices carry their model coordinates in data-re / data-im."""
    if model not in MODELS:
        raise ValueError(f"unknown model {model!r}")
    C = [p.z for p in chain.exterior]
    B = [p.z for p in chain.shared]
    Cm = [to_model(z, model) for z in C]
    Bm = [to_model(z, model) for z in B]
    scr = _Screen(Cm + Bm, model)
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
           f'viewBox="0 0 {SIZE} {SIZE}" data-model="{model}">']
    if title:
        out.append(f"<title>{escape(title)}</title>")
    out.append('<rect width="100%" height="100%" fill="white"/>')
    if model == "disk":
        cx, cy = scr(0j)
        out.append(f'<circle class="boundary" cx="{_fmt(cx)}" cy="{_fmt(cy)}" '
                   f'r="{_fmt(scr.scale)}" fill="none" stroke="#888"/>')
    else:
        _, y0 = scr(0j)
        out.append(f'<line class="boundary" x1="0" y1="{_fmt(y0)}" x2="{SIZE}" y2="{_fmt(y0)}" stroke="#888"/>')
    for k in range(1, chain.n - 1):
        tri = [to_model(p.z, model) for p in chain.triangle(k)]
        if _area_sign(tri) == 0:
            continue
        x, y = scr(tri[0])
        d = [f"M {_fmt(x)} {_fmt(y)}"]
        for a, b in zip(tri, tri[1:] + tri[:1]):
            d.append(_edge(scr, a, b, model))
        out.append(f'<path class="triangle" data-index="{k}" d="{" ".join(d)} Z" '
                   f'fill="#cfe3f7" fill-opacity="0.6" stroke="#1f4e79" stroke-width="1.5"/>')
    labels = [(f"C{k + 1}", z) for k, z in enumerate(Cm)] + [(f"B{k + 1}", z) for k, z in enumerate(Bm)]
    for name, z in labels:
        x, y = scr(z)
        colour = "#b22222" if name[0] == "C" else "#2e7d32"
        out.append(f'<circle class="vertex" data-label="{name}" data-re="{z.real!r}" data-im="{z.imag!r}" '
                   f'cx="{_fmt(x)}" cy="{_fmt(y)}" r="3" fill="{colour}"/>')
    for group in coincident_groups(C):
        z = Cm[group[0]]
        x, y = scr(z)
        name = "=".join(f"C{k + 1}" for k in group)
        out.append(f'<circle class="coincident" data-label="{name}" cx="{_fmt(x)}" cy="{_fmt(y)}" '
                   f'r="7" fill="none" stroke="#b22222"/>')
    stacked: dict = {}
    for name, z in labels:
        x, y = scr(z)
        key = (round(x), round(y))
        # stack labels of coincident vertices
        dy = -8 - 12 * stacked.get(key, 0)
        stacked[key] = stacked.get(key, 0) + 1
        out.append(f'<text x="{_fmt(x + 6)}" y="{_fmt(y + dy)}" font-size="12" '
                   f'font-family="sans-serif">{name}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _area_sign(tri) -> int:
    p, q, r = tri
    s = (q - p).real * (r - p).imag - (q - p).imag * (r - p).real
    size = max(abs(q - p), abs(r - p), abs(r - q))
    if size <= COINCIDE_TOL * max(abs(p), 1.0):
        return 0
    return 0 if abs(s) < 1e-12 * size * size else (1 if s > 0 else -1)


def coincident_groups(C: Sequence[complex], tol: float = COINCIDE_TOL) -> list:
    """Runs of cyclically consecutive exterior vertices that sit at one point."""
    n = len(C)
    same = [abs(C[k] - C[(k + 1) % n]) < tol * C[k].imag for k in range(n)]
    if all(same):
        return [list(range(n))]
    start = next(k for k in range(n) if not same[k - 1])
    groups, cur = [], [start]
    for step in range(1, n + 1):
        k = (start + step) % n
        prev = (k - 1) % n
        if same[prev] and step < n:
            cur.append(k)
        else:
            if len(cur) > 1:
                groups.append(sorted(cur))
            cur = [k]
    return groups


def render_coords(alpha: AngleVector, coords: ActionAngle, path, model: str = "halfplane") -> str:
    chain = chains.build_chain(alpha, coords)
    svg = render_svg(chain, model, title=f"alpha = ({alpha})")
    Path(path).write_text(svg, encoding="utf-8")
    return svg


def read_vertices(svg: str) -> dict:
    """Label -> model coordinate, parsed back from render_svg output."""
    import xml.etree.ElementTree as ET

    root = ET.fromstring(svg)
    out = {}
    for el in root.iter("{http://www.w3.org/2000/svg}circle"):
        if el.get("class") == "vertex":
            out[el.get("data-label")] = complex(float(el.get("data-re")), float(el.get("data-im")))
    return out


def cross_ratio(a: complex, b: complex, c: complex, d: complex) -> complex:
    return (a - c) * (b - d) / ((a - d) * (b - c))


def orbit_figure(result, path) -> None:
    """Two panels: action coordinates of the orbit points and the layer sizes."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, (ax, bx) = plt.subplots(1, 2, figsize=(10, 4.2))
    betas = [p.coords.beta for p in result.points]
    layer = [p.discovered_at for p in result.points]
    if betas and len(betas[0]) >= 2:
        sc = ax.scatter([b[0] / math.pi for b in betas], [b[1] / math.pi for b in betas],
                        c=layer, cmap="viridis", s=18)
        ax.set_xlabel("beta1 / pi")
        ax.set_ylabel("beta2 / pi")
    else:
        gam = [p.coords.gamma[0] for p in result.points]
        sc = ax.scatter([b[0] / math.pi for b in betas],
                        [math.nan if g is None else g / math.pi for g in gam],
                        c=layer, cmap="viridis", s=18)
        ax.set_xlabel("beta / pi")
        ax.set_ylabel("gamma / pi")
    fig.colorbar(sc, ax=ax, label="layer")
    ax.set_title(f"{len(result.points)} points, {result.status.value}")
    bx.bar(range(len(result.layers)), result.layers, color="#1f4e79")
    bx.set_xlabel("layer")
    bx.set_ylabel("new points")
    bx.set_title("breadth-first layers")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
