"""Write the golden orbit tables as JSON.

Tables are transcribed in terms of theta; each file fixes one theta.
Words use the shorthand t13^2 for t(1,3)^2.

    python scripts/build_golden.py [outdir]
"""
import json
import math
import re
import sys
from fractions import Fraction
from pathlib import Path

# the irrational angle appearing in one bat block
G0 = math.atan(math.sqrt(3) * (1 + math.cos(4 * math.pi / 7)) * math.tan(math.pi / 7)
               / math.sin(4 * math.pi / 7))

TERM = re.compile(r"([+-]?)(\d*)(pi|th|g0)(?:/(\d+))?")


def value(expr, theta):
    """Exact multiple of pi as a Fraction, or a float when g0 appears."""
    if expr == "0":
        return Fraction(0)
    total, floating = Fraction(0), 0.0
    pos = 0
    for m in TERM.finditer(expr.replace(" ", "")):
        if m.start() != pos:
            raise ValueError(expr)
        pos = m.end()
        sign = -1 if m.group(1) == "-" else 1
        coef = Fraction(int(m.group(2) or 1), int(m.group(4) or 1)) * sign
        if m.group(3) == "pi":
            total += coef
        elif m.group(3) == "th":
            total += coef * theta
        else:
            floating += float(coef) * G0
    if pos != len(expr.replace(" ", "")):
        raise ValueError(expr)
    if floating:
        return float(total) * math.pi + floating
    return total


def angle_json(v):
    if isinstance(v, Fraction):
        v = v % 2 if v >= 2 or v < 0 else v
        return {"num": v.numerator, "den": v.denominator}
    return {"float": v % (2 * math.pi)}


def word(w):
    w = re.sub(r"t(\d)(\d)", r"t(\1,\2)", w)
    return w.strip()


def rows(block, theta):
    beta, nd, entries = block
    out = []
    for gam, w in entries:
        g = [None] * len(beta)
        for k, e in zip(nd, gam):
            g[k] = e
        out.append({
            "beta": [angle_json(value(b, theta)) for b in beta],
            "gamma": [None if e is None else angle_json(value(e, theta)) for e in g],
            "word": word(w),
        })
    return out


def grid(beta, nd, row_vals, col_vals, cells, row_is=0):
    """Cells of a two-way table; row_is says which gamma index the rows give."""
    out = []
    for rv, line in zip(row_vals, cells):
        for cv, w in zip(col_vals, line):
            if w is None:
                continue
            pair = (rv, cv) if row_is == 0 else (cv, rv)
            out.append((pair, w))
    return (beta, nd, out)


def line(beta, nd, vals, words):
    return (beta, nd, [((v,), w) for v, w in zip(vals, words)])


def single(beta, w):
    return (beta, [], [((), w)])


R = ""  # the basepoint cell holds the empty word

HANG_GLIDER = {
    "name": "hang-glider",
    "alpha": ["4pi/3", "th", "th", "th", "th"],
    "seed": (["pi", "4pi/3"], ["pi", "0"]),
    "blocks": [
        grid(["pi", "4pi/3"], [0, 1], ["0", "pi"], ["0", "2pi/3", "4pi/3"],
             [["t12", "t23 t12", "t12 t13"], [R, "t23", "t13"]]),
        line(["pi", "2th-2pi"], [0], ["pi/2", "3pi/2"], ["t13 t34", "t13 t24"]),
        single(["3th-4pi", "2th-2pi"], "t24"),
    ],
}

SAND_CLOCK = {
    "name": "sand-clock",
    "alpha": ["2th-2pi", "th", "th", "th", "th"],
    "seed": (["pi", "4pi/3"], ["pi/2", "0"]),
    "blocks": [
        grid(["pi", "4pi/3"], [0, 1], ["pi/2", "3pi/2"], ["0", "2pi/3", "4pi/3"],
             [[R, "t13^2", "t13"], ["t12", "t23^2", "t12 t13"]]),
        line(["6pi-3th", "4pi/3"], [1], ["pi/3", "pi", "5pi/3"], ["t23", "t13^2 t23", "t13 t23"]),
        line(["pi", "2th-2pi"], [0], ["0", "pi"], ["t13 t34", "t12 t13 t34"]),
        single(["6pi-3th", "3th-4pi"], "t23 t34"),
    ],
    # the heart block needs two degenerate triangles, which (6pi-3th, 3th-4pi) does not give
    "errata": [{"row": 11, "field": "beta", "corrected": ["6pi-3th", "8pi-4th"],
                "note": "printed action coordinates leave T2 non-degenerate; the word lands on T1 = T2 = point"}],
}

S7 = ["0", "2pi/7", "4pi/7", "6pi/7", "8pi/7", "10pi/7", "12pi/7"]
T3 = ["pi/3", "pi", "5pi/3"]
Q4 = ["pi/4", "3pi/4", "5pi/4", "7pi/4"]
G0COLS = ["pi/3-g0", "pi/3+g0", "pi-g0", "pi+g0", "5pi/3-g0", "5pi/3+g0"]
_ = None

BAT = {
    "name": "bat",
    "alpha": ["12pi/7"] * 5,
    "seed": (["2pi/3", "8pi/7"], ["pi/3", "4pi/7"]),
    "blocks": [
        grid(["2pi/3", "8pi/7"], [0, 1], T3, S7, [
            ["t13^3", "t12^2 t23^2", R, "t13^2", "t12 t34 t23^2", "t12^2 t34", "t13"],
            ["t12 t13^3", "t34 t23", "t12", "t12 t13^2", "t34 t23^2", "t34", "t12 t13"],
            ["t13 t23", "t34 t23 t12", "t12^2", "t23", "t13^2 t23", "t12 t34", "t12^2 t13"],
        ]),
        grid(["6pi/7", "4pi/3"], [0, 1], T3, S7, [
            ["t24 t12^2 t13", "t24 t13", "t13 t24 t12", "t13^2 t34 t23", "t24 t12 t13", "t24 t34 t13", "t13 t24"],
            ["t24 t12^2", "t24", "t12 t24^2", "t23^2 t34 t13", "t24 t12", "t24 t34", "t12 t24^2 t34"],
            ["t13 t23^2 t34", "t24 t13^2", "t12^2 t23 t34", "t23^2 t34", "t24 t12 t13^2", "t23 t34 t23", "t13 t24 t13"],
        ], row_is=1),
        grid(["2pi/3", "4pi/3"], [0, 1], G0COLS, G0COLS, [
            ["t13 t34", _, "t12 t13 t34", _, "t23 t24 t13", _],
            [_, "t12 t24", _, "t12 t24 t12", _, "t23 t24 t13"],
            ["t12^2 t24 t13", _, "t13^2 t23 t34", _, "t23 t24", _],
            [_, "t23 t34", _, "t13^2 t34", _, "t23 t24"],
            ["t12^2 t24", _, "t12^2 t24 t12", _, "t24^2 t34", _],
            [_, "t12 t24 t13", _, "t12 t24 t12 t13", _, "t23 t24 t13^2"],
        ], row_is=1),
        grid(["2pi/3", "pi"], [0, 1], ["0", "2pi/3", "4pi/3"], Q4, [
            ["t13 t34^2", "t24^2 t12^2", "t12 t24 t12 t34", "t34 t23 t12 t34"],
            ["t12 t13 t34^2", "t24^2", "t23 t24 t13 t34", "t24^2 t13"],
            ["t12 t24 t34 t13", "t24^2 t12", "t12 t24 t34", "t34 t23 t34"],
        ]),
        grid(["pi", "4pi/3"], [0, 1], ["0", "2pi/3", "4pi/3"], Q4, [
            ["t13 t23 t24", "t12 t13^3 t24", "t13 t23 t24 t12", "t13^3 t24"],
            ["t12 t13 t24 t12 t13", "t13 t24 t12 t24", "t12 t13 t24 t13", "t23^2 t24 t13"],
            ["t12 t13 t24 t12", "t23^2 t24 t12", "t12 t13 t24", "t23^2 t24"],
        ], row_is=1),
        line(["6pi/7", "8pi/7"], [1], S7, ["t12 t34 t23 t12", "t12^2 t23", "t23^2", "t13^2 t23^2",
                                           "t12 t34 t23", "t23^2 t12", "t13 t23^2"]),
        line(["4pi/7", "pi"], [1], Q4, ["t23 t24^2 t13", "t12 t13 t34^2 t23", "t23 t24^2",
                                        "t23 t24 t13 t34 t23"]),
        line(["pi", "10pi/7"], [0], Q4, ["t23^2 t24 t12 t34", "t12 t13 t24 t34", "t23^2 t24 t34",
                                         "t24^2 t13 t24"]),
        line(["2pi/3", "10pi/7"], [0], ["0", "2pi/3", "4pi/3"],
             ["t24 t12 t24 t12", "t12 t24 t12 t24", "t24 t12 t24"]),
        line(["4pi/7", "4pi/3"], [1], ["0", "2pi/3", "4pi/3"],
             ["t12 t13^2 t24 t13", "t12 t13^2 t24", "t13 t24 t12 t23 t24"]),
    ],
    # two words are printed twice in the gamma0 block; the first copy of each is wrong
    "errata": [
        {"row": 44, "field": "word", "corrected": "t12^2 t13 t34",
         "note": "same word also printed at (gamma1, gamma2) = (5pi/3+g0, pi/3+g0)"},
        {"row": 50, "field": "word", "corrected": "t13 t24 t12 t23",
         "note": "same word also printed at (gamma1, gamma2) = (5pi/3+g0, pi+g0)"},
    ],
}


def _jester_regular():
    # columns: (gamma3, gamma2) pairs in printed order
    cols = [("0", "0"), ("0", "pi"), ("2pi/3", "0"), ("2pi/3", "pi"), ("4pi/3", "0"), ("4pi/3", "pi")]
    table = [
        ("0", ["t12^2 t14", "t45 t34", "t12^2", "t12^2 t13", "t12 t35", "t13 t34"]),
        ("2pi/3", ["t14", "t13 t14", R, "t13", "t13 t45", "t45"]),
        ("4pi/3", ["t12 t14", "t12 t13 t14", "t12", "t12 t13", "t24", "t12 t45"]),
    ]
    out = []
    for g1, words in table:
        for (g3, g2), w in zip(cols, words):
            out.append(((g1, g2, g3), w))
    return (["2pi/3", "pi", "4pi/3"], [0, 1, 2], out)


JESTER = {
    "name": "jester",
    "alpha": ["th"] * 6,
    "seed": (["2pi/3", "pi", "4pi/3"], ["2pi/3", "0", "2pi/3"]),
    "blocks": [
        _jester_regular(),
        grid(["4pi-2th", "pi", "4pi/3"], [1, 2], ["pi/2", "3pi/2"], ["0", "2pi/3", "4pi/3"], [
            ["t13 t24", "t23", "t13 t14 t24"],
            ["t12 t45 t24", "t13 t23", "t23 t45"],
        ]),
        grid(["2pi/3", "pi", "2th-2pi"], [0, 1], ["pi/2", "3pi/2"], ["0", "2pi/3", "4pi/3"], [
            ["t13 t35", "t45^2", "t13 t25"],
            ["t12 t35 t45", "t13 t23 t25", "t24 t45"],
        ], row_is=1),
        line(["2pi/3", "3th-4pi", "2th-2pi"], [0], T3, ["t13 t24 t25", "t24 t45 t34", "t13 t14 t35"]),
        line(["4pi-2th", "6pi-3th", "4pi/3"], [2], T3, ["t13 t24 t34", "t23 t34", "t13 t23 t35"]),
        line(["4pi-2th", "pi", "2th-2pi"], [1], ["0", "pi"], ["t12 t25", "t12 t25 t13"]),
        single(["4pi-2th", "6pi-3th", "8pi-4th"], "t12 t25 t35"),
        single(["4th-6pi", "3th-4pi", "2th-2pi"], "t14 t25"),
    ],
}


def build(spec, theta):
    alpha = [value(a, theta) for a in spec["alpha"]]
    seed_b, seed_g = spec["seed"]
    out = {
        "name": spec["name"],
        "theta": {"num": theta.numerator, "den": theta.denominator},
        "n": len(alpha),
        "alpha": [angle_json(a) for a in alpha],
        "seed": {"beta": [angle_json(value(b, theta)) for b in seed_b],
                 "gamma": [angle_json(value(g, theta)) for g in seed_g]},
        "tol": 1e-6,
        "status": "Finite",
        "points": [r for b in spec["blocks"] for r in rows(b, theta)],
    }
    out["letter_action"] = "inverse"
    out["errata"] = []
    for e in spec.get("errata", []):
        fixed = dict(e)
        if e["field"] == "beta":
            fixed["corrected"] = [angle_json(value(b, theta)) for b in e["corrected"]]
        else:
            fixed["corrected"] = word(e["corrected"])
        out["errata"].append(fixed)
    return out


TABLES = [
    (HANG_GLIDER, Fraction(7, 4), "hang_glider.json"),
    (SAND_CLOCK, Fraction(7, 4), "sand_clock.json"),
    (BAT, Fraction(12, 7), "bat.json"),
    (JESTER, Fraction(12, 7), "jester.json"),
    (JESTER, Fraction(7, 4), "jester_7pi4.json"),
]

if __name__ == "__main__":
    outdir = Path(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).parents[1] / "src/orbitforge/data")
    outdir.mkdir(parents=True, exist_ok=True)
    for spec, theta, fname in TABLES:
        data = build(spec, theta)
        (outdir / fname).write_text(json.dumps(data, indent=1) + "\n", encoding="utf-8")
        print(f"{fname}: {len(data['points'])} rows")
