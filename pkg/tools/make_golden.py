"""Write the reference fixtures under src/nilorbit/data.

The classical rows are parametrised families; this script instantiates them
at small sizes.  Exceptional rows are transcribed by hand.  All node indices
and root coefficient vectors use the reference numbering (see
rootsys.PAPER_TO_INTERNAL), never the internal one.

Run from the repository root:  python3 tools/make_golden.py
"""

import json
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "src" / "nilorbit" / "data"


def eps(n, *pairs):
    v = [0] * n
    for i, c in pairs:
        v[i - 1] += c
    return v


def w(*pairs):
    """Weight as {node: coefficient}; pairs are (node, coefficient)."""
    out = {}
    for i, c in pairs:
        out[str(i)] = out.get(str(i), 0) + c
    return out


def so_type(n):
    return f"B{(n - 1) // 2}" if n % 2 else f"D{n // 2}"


# ---------------------------------------------------------------- height 2

def height2_classical():
    rows = []
    for n in range(2, 9):                     # sl_n
        for r in range(1, n // 2 + 1):
            rows.append({
                "family": "sl", "n": n, "type": f"A{n - 1}",
                "partition": [2] * r + [1] * (n - 2 * r), "variant": None,
                "ucs": [eps(n, (i, 1), (n - i + 1, -1)) for i in range(1, r + 1)],
                "generators": [{"weight": w((i, 1), (n - i, 1)), "degree": i}
                               for i in range(1, r + 1)],
            })
    for n in range(2, 6):                     # sp_2n
        for r in range(1, n + 1):
            rows.append({
                "family": "sp", "n": 2 * n, "type": f"C{n}",
                "partition": [2] * r + [1] * (2 * n - 2 * r), "variant": None,
                "ucs": [eps(n, (i, 2)) for i in range(1, r + 1)],
                "generators": [{"weight": w((i, 2)), "degree": i} for i in range(1, r + 1)],
            })
    for n in range(5, 12):                    # so_n
        rk = n // 2
        l = n - 3
        if l >= 4:
            rows.append({
                "family": "so", "n": n, "type": so_type(n),
                "partition": [3] + [1] * l, "variant": None,
                "ucs": [eps(rk, (1, 1), (2, 1)), eps(rk, (1, 1), (2, -1))],
                "generators": [{"weight": w((2, 1)), "degree": 1},
                               {"weight": w((1, 2)), "degree": 2}],
            })
        for r in range(1, n // 4 + 1):
            l = n - 4 * r
            ucs = [eps(rk, (2 * i - 1, 1), (2 * i, 1)) for i in range(1, r + 1)]
            gens = [{"weight": w((2 * i, 1)), "degree": i} for i in range(1, r)]
            if l <= 1:
                last = w((2 * r, 2))
            elif l == 2:
                last = w((2 * r, 1), (2 * r + 1, 1))
            else:
                last = w((2 * r, 1))
            gens.append({"weight": last, "degree": r})
            part = [2] * (2 * r) + [1] * l
            rows.append({"family": "so", "n": n, "type": so_type(n), "partition": part,
                         "variant": 0 if l == 0 else None, "ucs": ucs, "generators": gens})
            if l == 0:
                ucs2 = ucs[:-1] + [eps(rk, (2 * r - 1, 1), (2 * r, -1))]
                gens2 = gens[:-1] + [{"weight": w((2 * r - 1, 2)), "degree": r}]
                rows.append({"family": "so", "n": n, "type": so_type(n), "partition": part,
                             "variant": 1, "ucs": ucs2, "generators": gens2})
    return rows


HEIGHT2_EXCEPTIONAL = [
    {"type": "E6", "diagram": [1, 0, 0, 0, 1, 0],
     "ucs": [[1, 2, 3, 2, 1, 2], [1, 1, 1, 1, 1, 0]],
     "generators": [{"weight": w((6, 1)), "degree": 1},
                    {"weight": w((1, 1), (5, 1)), "degree": 2}]},
    {"type": "E7", "diagram": [0, 1, 0, 0, 0, 0, 0],
     "ucs": [[1, 2, 3, 4, 3, 2, 2], [1, 2, 2, 2, 1, 0, 1]],
     "generators": [{"weight": w((6, 1)), "degree": 1},
                    {"weight": w((2, 1)), "degree": 2}]},
    {"type": "E7", "diagram": [2, 0, 0, 0, 0, 0, 0],
     "ucs": [[1, 2, 3, 4, 3, 2, 2], [1, 2, 2, 2, 1, 0, 1], [1, 0, 0, 0, 0, 0, 0]],
     "generators": [{"weight": w((6, 1)), "degree": 1},
                    {"weight": w((2, 1)), "degree": 2},
                    {"weight": w((1, 2)), "degree": 3}]},
    {"type": "E8", "diagram": [0, 0, 0, 0, 0, 0, 1, 0],
     "ucs": [[2, 3, 4, 5, 6, 4, 2, 3], [0, 1, 2, 3, 4, 3, 2, 2]],
     "generators": [{"weight": w((1, 1)), "degree": 1},
                    {"weight": w((7, 1)), "degree": 2}]},
    {"type": "F4", "diagram": [1, 0, 0, 0],
     "ucs": [[2, 4, 3, 2], [2, 2, 1, 0]],
     "generators": [{"weight": w((4, 1)), "degree": 1},
                    {"weight": w((1, 2)), "degree": 2}]},
]


# ---------------------------------------------------------------- height 3

def g(weight, degree):
    return {"weight": weight, "degree": degree}


def height3_classical():
    rows = []
    for t in (1, 2):
        gens = [g(w((2 * i - 1, 1)), i) for i in range(1, t + 1)]
        gens += [g(w((2 * i, 1)), i) for i in range(1, t + 1)]
        gens += [g(w((2 * t + 1, 2)), t + 1)]
        rows.append({"family": "B", "t": t, "l": 0, "type": f"B{2 * t + 1}",
                     "partition": [3] + [2] * (2 * t), "dim_gamma": 2 * t + 1,
                     "generators": gens, "normal": False})
    for t in (1, 2):
        gens = [g(w((2 * i - 1, 1), (2 * j - 1, 1)), i + j)
                for i in range(1, t + 1) for j in range(i, t + 1)]
        gens += [g(w((2 * i, 1)), i) for i in range(1, t + 1)]
        gens += [g(w((2 * j - 1, 1), (2 * t + 1, 1), (2 * t + 2, 1)), t + j + 1)
                 for j in range(1, t + 1)]
        gens += [g(w((2 * t + 1, 2)), t + 1), g(w((2 * t + 2, 2)), t + 1)]
        rows.append({"family": "D", "t": t, "l": 1, "type": f"D{2 * t + 2}",
                     "partition": [3] + [2] * (2 * t) + [1], "dim_gamma": 2 * t + 2,
                     "generators": gens, "normal": True})
    for t in (1, 2):
        for l in (2, 3, 4):
            n = 4 * t + l + 3
            gens = [g(w((2 * i, 1)), i) for i in range(1, t + 1)]
            gens += [g(w((2 * i - 1, 1), (2 * j - 1, 1)), i + j)
                     for i in range(1, t + 2) for j in range(i, t + 2)]
            if l == 2:
                gens.append(g(w((2 * t + 2, 2)), t + 1))
            elif l == 3:
                gens.append(g(w((2 * t + 2, 1), (2 * t + 3, 1)), t + 1))
            else:
                gens.append(g(w((2 * t + 2, 1)), t + 1))
            rows.append({"family": "so", "t": t, "l": l, "type": so_type(n),
                         "partition": [3] + [2] * (2 * t) + [1] * l, "dim_gamma": 2 * t + 2,
                         "generators": gens, "normal": True})
    return rows


HEIGHT3_EXCEPTIONAL = [
    {"type": "E6", "diagram": [0, 0, 1, 0, 0, 0], "dim_gamma": 4, "normal": True,
     "generators": [g(w((6, 1)), 1), g(w((1, 1), (5, 1)), 2), g(w((3, 1)), 3),
                    g(w((2, 1), (4, 1)), 4)]},
    {"type": "E7", "diagram": [0, 0, 0, 0, 1, 0, 0], "dim_gamma": 4, "normal": True,
     "generators": [g(w((6, 1)), 1), g(w((2, 1)), 2), g(w((5, 1)), 3), g(w((4, 1)), 4)]},
    {"type": "E7", "diagram": [1, 0, 0, 0, 0, 0, 1], "dim_gamma": 7, "normal": True,
     "generators": [g(w((6, 1)), 1), g(w((2, 1)), 2), g(w((5, 1)), 3), g(w((1, 2)), 3),
                    g(w((4, 1)), 4), g(w((1, 1), (7, 1)), 4), g(w((1, 1), (3, 1)), 5),
                    g(w((7, 2)), 5), g(w((3, 1), (7, 1)), 6), g(w((3, 2)), 7)]},
    {"type": "E8", "diagram": [0, 1, 0, 0, 0, 0, 0, 0], "dim_gamma": 4, "normal": True,
     "generators": [g(w((1, 1)), 1), g(w((7, 1)), 2), g(w((2, 1)), 3), g(w((3, 1)), 4)]},
    {"type": "E8", "diagram": [0, 0, 0, 0, 0, 0, 0, 1], "dim_gamma": 8, "normal": True,
     "model": True,
     "generators": [g(w((1, 1)), 1), g(w((7, 1)), 2), g(w((2, 1)), 3), g(w((3, 1)), 4),
                    g(w((8, 1)), 4), g(w((6, 1)), 5), g(w((4, 1)), 6), g(w((5, 1)), 7)]},
    {"type": "F4", "diagram": [0, 0, 1, 0], "dim_gamma": 4, "normal": True,
     "generators": [g(w((4, 1)), 1), g(w((1, 2)), 2), g(w((3, 1)), 3), g(w((2, 2)), 4)]},
    {"type": "G2", "diagram": [1, 0], "dim_gamma": 2, "normal": False,
     "generators": [g(w((1, 1)), 1), g(w((2, 1)), 1)]},
]

# Second E7 height-3 orbit: generators of the larger invariant algebra and the
# monomials whose weights are dominant, listed in the order of its row above.
E7_EXAMPLE = {
    "type": "E7", "diagram": [1, 0, 0, 0, 0, 0, 1], "dim": 70, "label": "4A1",
    "f": {
        "f1": g(w((6, 1)), 1),
        "f2": g(w((2, 1)), 2),
        "f3": g(w((5, 1), (1, 1), (7, -1)), 2),
        "f4": g(w((4, 1), (1, 1), (7, -1)), 3),
        "f5": g(w((1, 2)), 3),
        "f6": g(w((7, 1), (1, -1)), 1),
        "f7": g(w((3, 1), (7, -1)), 1),
    },
    "monomials": [
        {"f1": 1}, {"f2": 1}, {"f3": 1, "f6": 1}, {"f5": 1}, {"f4": 1, "f6": 1},
        {"f5": 1, "f6": 1}, {"f5": 1, "f6": 1, "f7": 1}, {"f5": 1, "f6": 2},
        {"f5": 1, "f6": 2, "f7": 1}, {"f5": 1, "f6": 2, "f7": 2},
    ],
}


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    h2 = {"schema": 1, "numbering": "paper",
          "classical": height2_classical(), "exceptional": HEIGHT2_EXCEPTIONAL}
    h3 = {"schema": 1, "numbering": "paper",
          "classical": height3_classical(), "exceptional": HEIGHT3_EXCEPTIONAL,
          "e7_example": E7_EXAMPLE}
    (OUT / "height2_orbits.json").write_text(json.dumps(h2, indent=1) + "\n")
    (OUT / "height3_orbits.json").write_text(json.dumps(h3, indent=1) + "\n")
    print(f"{len(h2['classical']) + len(h2['exceptional'])} height-2 rows, "
          f"{len(h3['classical']) + len(h3['exceptional'])} height-3 rows")


if __name__ == "__main__":
    main()
