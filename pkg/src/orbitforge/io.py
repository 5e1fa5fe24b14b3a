"""JSON and CSV formats for angles, coordinates, orbits and golden tables."""
from __future__ import annotations

import csv
import json
import os
from pathlib import Path
from typing import Iterable

from .chains import ActionAngle, AngleVector, RationalAngle, as_radians, degeneracy_mask
from .orbits import GoldenRow, GoldenTable, OrbitResult
from .representation import DIRECT, TABLE

DATA_ENV = "ORBITFORGE_DATA"


def data_dir() -> Path:
    env = os.environ.get(DATA_ENV)
    return Path(env) if env else Path(__file__).with_name("data")


def angle_to_json(x) -> dict:
    if isinstance(x, RationalAngle):
        return {"num": x.num, "den": x.den}
    return {"float": float(x)}


def angle_from_json(obj):
    if obj is None:
        return None
    if isinstance(obj, (int, float)):
        return float(obj)
    if "num" in obj:
        return RationalAngle(int(obj["num"]), int(obj["den"]))
    return float(obj["float"])


def alpha_to_json(alpha: AngleVector) -> list:
    return [angle_to_json(a) for a in alpha]


def alpha_from_json(items) -> AngleVector:
    return AngleVector([angle_from_json(a) for a in items])


def coords_to_json(c: ActionAngle) -> dict:
    return {"beta": [angle_to_json(b) for b in c.beta],
            "gamma": [None if g is None else angle_to_json(g) for g in c.gamma],
            "mask": list(c.degenerate)}


def coords_from_json(obj, alpha: AngleVector | None = None) -> ActionAngle:
    beta = [as_radians(angle_from_json(b)) for b in obj["beta"]]
    gamma = [None if g is None else as_radians(angle_from_json(g)) for g in obj["gamma"]]
    if "mask" in obj:
        mask = obj["mask"]
    elif alpha is not None:
        mask = degeneracy_mask(alpha, beta)
    else:
        mask = ()
    return ActionAngle(beta, gamma, mask)


def orbit_to_json(result: OrbitResult) -> dict:
    return {
        "n": result.n,
        "letter_action": "direct",
        "alpha": alpha_to_json(result.alpha),
        "tol": result.tol,
        "status": result.status.value,
        "layers": list(result.layers),
        "points": [dict(coords_to_json(p.coords), word=str(p.word)) for p in result.points],
    }


def write_orbit(result: OrbitResult, path) -> None:
    Path(path).write_text(json.dumps(orbit_to_json(result), indent=1) + "\n", encoding="utf-8")


def write_orbit_csv(result: OrbitResult, path) -> None:
    m = result.n - 3
    head = ([f"beta{k + 1}" for k in range(m)] + [f"gamma{k + 1}" for k in range(m)]
            + [f"deg{k + 1}" for k in range(m + 1)] + ["word", "layer"])
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(head)
        for p in result.points:
            c = p.coords
            w.writerow([f"{b:.12f}" for b in c.beta]
                       + ["" if g is None else f"{g:.12f}" for g in c.gamma]
                       + [int(d) for d in c.degenerate] + [str(p.word), p.discovered_at])


def table_from_json(obj) -> GoldenTable:
    alpha = alpha_from_json(obj["alpha"])
    rows = [GoldenRow(coords_from_json(p, alpha), p.get("word", "")) for p in obj["points"]]
    if "seed" in obj:
        seed = coords_from_json(obj["seed"], alpha)
    else:
        # orbit output: the point with the empty witness word is the seed
        seed = next(r.coords for r in rows if not r.word.strip())
    conv = TABLE if obj.get("letter_action", "direct") == "inverse" else DIRECT
    errata = []
    for e in obj.get("errata", []):
        e = dict(e)
        if e["field"] == "beta":
            old = rows[e["row"]].coords
            e["corrected"] = coords_from_json({"beta": e["corrected"], "gamma": list(old.gamma)}, alpha)
        errata.append(e)
    return GoldenTable(obj.get("name", ""), alpha, seed, rows, float(obj.get("tol", 1e-6)), conv, errata)


def load_table(name_or_path) -> GoldenTable:
    p = Path(name_or_path)
    if not p.exists():
        p = data_dir() / (p.name if p.suffix else p.name + ".json")
    return table_from_json(json.loads(p.read_text(encoding="utf-8")))


def golden_names() -> Iterable[str]:
    return sorted(p.stem for p in data_dir().glob("*.json"))
