"""Summary tables of the descriptor algebra and the approximation formulas,
rendered as Markdown or CSV."""

from .approx import EXACT_FORMULAS, METHODS, tabulated_entry, tabulated_sidelength
from .octagon import DescriptorKind, limit_frequency

KIND_TITLES = {
    DescriptorKind.PIXEL: "pixel (k1>=1)",
    DescriptorKind.INNER_HULL: "inner hull",
    DescriptorKind.OUTER_HULL: "outer hull",
}

_TABLE1 = [
    ("a", "2k2+1", "2k2", "2k2+1"),
    ("b", "k1-1", "sqrt2*k1", "sqrt2*k1"),
    ("P", "4(a+b)", "4(a+b)", "4(a+b)"),
    ("A", "(2k2+1)^2+2k1(4k2+k1+1)", "a^2+2sqrt2*ab+b^2", "a^2+2sqrt2*ab+b^2"),
]

_TABLE2 = [
    ("k1", "[a+1]", "[a/sqrt2]", "[a/sqrt2]"),
    ("k2", "[(a-1)/2]", "[a/2]", "[(a-1)/2]"),
]


def _md(header, rows):
    out = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    out += ["| " + " | ".join(r) + " |" for r in rows]
    return "\n".join(out) + "\n"


def _csv(header, rows):
    return "\n".join(",".join(r) for r in [header, *rows]) + "\n"


def _bracket(coeff, offset):
    if offset > 0:
        tail = f"+{offset:g}"
    elif offset < 0:
        tail = f"{offset:g}"
    else:
        tail = ""
    return f"[{coeff}r{tail}]"


def table_rows(which):
    kinds = list(DescriptorKind)
    if which == 1:
        return ["", *(KIND_TITLES[k] for k in kinds)], _TABLE1
    if which == 2:
        p = ["p"]
        for k in kinds:
            v = limit_frequency(k)
            p.append("1/3" if k is DescriptorKind.PIXEL else f"sqrt2-1 ({v:.6f})")
        return ["", *(KIND_TITLES[k] for k in kinds)], [*_TABLE2, tuple(p)]
    if which == 4:
        rows = [
            (m.label, EXACT_FORMULAS[m], f"{tabulated_sidelength(m)} r") for m in METHODS
        ]
        return ["method", "exact sidelength (a)", "numerical sidelength"], rows
    if which == 5:
        rows = []
        for kind in kinds:
            for m in METHODS:
                k1c, k1o, k2c, k2o = tabulated_entry(m, kind)
                rows.append((
                    KIND_TITLES[kind], m.label, _bracket(k1c, k1o), _bracket(k2c, k2o),
                ))
        return ["descriptor", "method", "k1", "k2"], rows
    raise ValueError(f"no table {which!r}; choose 1, 2, 4 or 5")


def render_table(which, fmt="md"):
    header, rows = table_rows(int(which))
    if fmt == "md":
        return _md(header, rows)
    if fmt == "csv":
        return _csv(header, rows)
    raise ValueError(f"unknown table format {fmt!r}")
