"""Worked examples with their expected values, and a checker that rebuilds them.

Each example is a plain JSON-compatible dict so that an alternative fixture
file can be swapped in from the command line. Figure graphs are edge lists
over 1-based vertex labels; a side's figure must be isomorphic to the graph
the construction produces (vertex numbering in a drawing is arbitrary).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field

from . import constructions as cons
from .formats import parse_seed
from .graph_model import Graph, connected_components, from_edges, is_isomorphic
from .spectra import adjacency_cospectral, normalized_cospectral

SPECTRUM_TOL = 5e-4
# the largest example has 15 vertices
EXAMPLE_ISO_BOUND = 16

K2 = "01;10"
K3 = "011;101;110"

EXAMPLES: list[dict] = [
    {
        "name": "I-1",
        "construction": "I",
        "B": "10;11;11",
        "n": 3,
        "order": 11,
        "expect": {"adjacency": True, "normalized": True, "non_isomorphic": True},
        "figures": {
            "left": {"order": 11, "edges": "1-4 1-6 1-8 2-4 2-5 2-6 2-7 2-8 2-9 3-4 3-5 3-6 3-7 3-8 3-9"},
            "right": {"order": 11, "edges": "1-3 1-4 1-5 1-6 1-7 1-8 1-9 1-10 1-11 2-4 2-5 2-7 2-8 2-10 2-11"},
        },
    },
    {
        "name": "I-2",
        "construction": "I",
        "B": "101;110;110",
        "n": 3,
        "order": 12,
        "expect": {"adjacency": True, "normalized": True, "non_isomorphic": True},
        "figures": {
            "left": {"order": 12, "edges": "1-4 1-6 1-7 1-9 1-10 1-12 2-4 2-5 2-7 2-8 2-10 2-11 "
                                           "3-4 3-5 3-7 3-8 3-10 3-11"},
            "right": {"order": 12, "edges": "1-4 1-5 1-6 1-7 1-8 1-9 1-10 1-11 1-12 2-5 2-6 2-8 2-9 "
                                            "2-11 2-12 3-4 3-7 3-10"},
        },
    },
    {
        "name": "Fk",
        "construction": "Fk",
        "B": "10;11;11",
        "n": 4,
        "order": 14,
        "expect": {"adjacency": True, "normalized": True, "non_isomorphic": True, "members": 3},
        "figures": {
            "k=1": {"order": 14, "edges": "1-3 1-4 1-5 1-6 1-7 1-8 1-9 1-10 1-11 1-12 1-13 1-14 "
                                          "2-4 2-5 2-7 2-8 2-10 2-11 2-13 2-14"},
            "k=2": {"order": 14, "edges": "1-4 1-9 2-4 2-5 2-9 2-10 3-4 3-5 3-9 3-10 4-6 4-7 4-8 "
                                          "5-7 5-8 6-9 7-9 7-10 8-9 8-10"},
            "k=4": {"order": 14, "edges": "1-4 1-6 1-8 1-10 2-4 2-5 2-6 2-7 2-8 2-9 2-10 2-11 "
                                          "3-4 3-5 3-6 3-7 3-8 3-9 3-10 3-11"},
        },
    },
    {
        "name": "II",
        "construction": "II",
        "B": "10;11;11",
        "G": K2,
        "Gprime": K3,
        "order": 15,
        "expect": {"adjacency": True, "normalized": False, "non_isomorphic": True, "components": [3, 4]},
    },
    {
        "name": "III-1",
        "construction": "III",
        "B": "11;11;11",
        "n": 2,
        "order": 9,
        "expect": {
            "adjacency": True,
            "normalized": False,
            "non_isomorphic": True,
            "spectra": {
                "left": "{0, 0.6667, 0.6667, 1, 1, 1.3333, 1.3333, 1.3333, 1.6667}",
                "right": "{0, 0, 0.75, 1, 1, 1.25, 1.25, 1.75, 2}",
            },
        },
    },
    {
        "name": "III-2",
        "construction": "III",
        "B": "101;110;110",
        "n": 2,
        "order": 9,
        "expect": {
            "adjacency": True,
            "normalized": False,
            "non_isomorphic": True,
            "spectra": {
                "left": "{0, 0.2324, 0.6667, 1, 1.3333, 1.3333, 1.3333, 1.4343, 1.6667}",
                "right": "{0, 0.2034, 0.6738, 1, 1.25, 1.3333, 1.3478, 1.5, 1.6917}",
            },
        },
        "figures": {
            "left": {"order": 9, "edges": "1-4 1-5 1-6 1-7 1-8 1-9 2-5 2-6 2-8 2-9 3-4 3-7 4-7 5-8 6-9"},
            "right": {"order": 9, "edges": "1-4 1-6 1-7 1-9 2-4 2-5 2-7 2-8 3-4 3-5 3-7 3-8 4-7 5-8 6-9"},
        },
    },
    {
        "name": "IV",
        "construction": "IV",
        "B": "111;111",
        "G": K3,
        "Gprime": K2,
        "order": 14,
        "expect": {"adjacency": True, "normalized": False, "non_isomorphic": True, "components": [3, 2]},
        "figures": {
            "left": {"order": 14, "edges": "1-2 1-3 1-4 1-5 1-6 1-7 1-8 2-3 2-4 2-5 2-6 2-7 2-8 3-7 3-8 "
                                           "4-6 4-8 5-6 5-7 9-10 9-11 10-11 12-13 12-14 13-14"},
            "right": {"order": 14, "edges": "1-2 1-3 1-4 1-5 1-6 1-7 1-8 2-3 2-4 2-5 2-6 2-7 2-8 3-4 3-5 "
                                            "4-5 6-7 6-8 7-8 9-13 9-14 10-12 10-14 11-12 11-13"},
        },
    },
]


def parse_printed_spectrum(text: str) -> list[float]:
    """'{0, 0.75, 1 }' -> [0.0, 0.75, 1.0]."""
    body = text.strip().strip("{}")
    return sorted(float(x) for x in re.split(r"[,\s]+", body) if x)


def figure_graph(fig: dict) -> Graph:
    edges = []
    for tok in fig["edges"].split():
        a, b = tok.split("-")
        edges.append((int(a) - 1, int(b) - 1))
    return from_edges(fig["order"], edges)


def build_sides(ex: dict) -> dict[str, Graph]:
    """Named graphs of an example: left/right for pairs, k=<d> for the F_k family."""
    B = parse_seed(ex["B"])
    kind = ex["construction"]
    if kind == "Fk":
        fam = cons.construct_family(B, ex["n"])
        return {f"k={d}": g for d, g in zip(fam.divisors, fam.members)}
    if kind == "I":
        pair = cons.construct_I(B, ex["n"], iso_bound=0)
    elif kind == "III":
        pair = cons.construct_III(B, ex["n"], iso_bound=0)
    elif kind == "II":
        pair = cons.construct_II(B, parse_seed(ex["G"]), parse_seed(ex["Gprime"]), iso_bound=0)
    elif kind == "IV":
        pair = cons.construct_IV(B, parse_seed(ex["G"]), parse_seed(ex["Gprime"]), iso_bound=0)
    else:
        raise ValueError(f"unknown construction {kind!r}")
    return {"left": pair.left, "right": pair.right}


@dataclass
class ExampleResult:
    name: str
    failures: list[str] = field(default_factory=list)
    spectra: dict[str, list[float]] = field(default_factory=dict)
    printed: dict[str, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures


def check_example(ex: dict, iso_bound: int = EXAMPLE_ISO_BOUND) -> ExampleResult:
    res = ExampleResult(ex["name"])
    expect = ex.get("expect", {})
    try:
        sides = build_sides(ex)
    except Exception as exc:  # a fixture that cannot be built is a failed example
        res.failures.append(f"build failed: {exc}")
        return res
    names = list(sides)

    if "members" in expect and len(names) != expect["members"]:
        res.failures.append(f"expected {expect['members']} members, got {len(names)}")
    for nm, g in sides.items():
        if g.order != ex["order"]:
            res.failures.append(f"{nm}: order {g.order}, expected {ex['order']}")

    for a, b in itertools.combinations(names, 2):
        g, h = sides[a], sides[b]
        for claim, fn in (("adjacency", adjacency_cospectral), ("normalized", normalized_cospectral)):
            if claim in expect:
                got = fn(g, h, with_spectra=False).holds
                if got != expect[claim]:
                    res.failures.append(f"{claim} cospectral {a}/{b}: got {got}, expected {expect[claim]}")
        if "non_isomorphic" in expect:
            got = not is_isomorphic(g, h, bound=iso_bound).holds
            if got != expect["non_isomorphic"]:
                res.failures.append(f"non-isomorphic {a}/{b}: got {got}, expected {expect['non_isomorphic']}")

    if "components" in expect:
        got = [len(connected_components(sides[nm])) for nm in names]
        if got != expect["components"]:
            res.failures.append(f"components {got}, expected {expect['components']}")

    for nm, text in expect.get("spectra", {}).items():
        want = parse_printed_spectrum(text)
        got = list(normalized_cospectral(sides[nm], sides[nm]).left_spectrum)
        res.spectra[nm] = got
        res.printed[nm] = text
        if len(got) != len(want) or any(abs(x - y) > SPECTRUM_TOL for x, y in zip(got, want)):
            res.failures.append(f"{nm} normalized spectrum {[round(x, 4) for x in got]} != {text}")

    for nm, fig in ex.get("figures", {}).items():
        if nm not in sides:
            res.failures.append(f"figure for unknown side {nm}")
            continue
        if not is_isomorphic(figure_graph(fig), sides[nm], bound=iso_bound).holds:
            res.failures.append(f"{nm} differs from its figure")
    return res
