#!/usr/bin/env python3
"""Regenerate data/registry.tsv.

Each row holds Satake data (black nodes, diagram involution) and the declared
reference columns of the real-form table, evaluated from its row formulas.
Nodes are 1-based.
"""
import sys

HEADER = ("# name\ttype\tblack\tsigma\tdouble\trg_g\trg_k\tdim_a\tk_g\tm0_name\tm0_type\tk_m\tstrongest\tnote")
MAX_RANK = 8
rows = []


def nodes(xs):
    xs = sorted(xs)
    return ",".join(str(x) for x in xs) if xs else "-"


def swaps(pairs):
    return ",".join(f"{a}:{b}" for a, b in pairs) if pairs else "-"


def kg(fam, l):
    return {"A": (l + 1) // 2, "B": l, "C": l, "D": 2 * (l // 2),
            "E": {6: 4, 7: 7, 8: 8}.get(l), "F": 4, "G": 2}[fam]


def add(name, typ, black, sigma, rg_g, rg_k, dim_a, k_g, m0_name, m0_type, k_m,
        strongest, note="-", double=0):
    rows.append("\t".join(str(x) for x in (
        name, typ, nodes(black), swaps(sigma), double, rg_g, rg_k, dim_a, k_g,
        m0_name, m0_type, k_m, strongest, note)))


def d_type(m):
    return "0" if m <= 0 else f"D{m}"


def b_type(m):
    return "0" if m <= 0 else f"B{m}"


def c_type(m):
    return "0" if m <= 0 else f"C{m}"


def a_type(m):
    return "0" if m <= 0 else f"A{m}"


def plus(*parts):
    parts = [p for p in parts if p != "0"]
    return "+".join(parts) if parts else "0"


# sl(n,R): split A_{n-1}
for n in range(2, MAX_RANK + 2):
    add(f"sl({n},R)", f"A{n-1}", [], [], n - 1, n // 2, n - 1, n // 2, "0", "0", 0,
        "(B)" if n > 2 else "(C)")

# sl(n,H): A_{2n-1}, odd nodes black
for n in range(2, (MAX_RANK + 1) // 2 + 1):
    l = 2 * n - 1
    add(f"sl({n},H)", f"A{l}", range(1, l + 1, 2), [], l, n, n - 1, n,
        f"su(2)^{n}", f"A1^{n}", n, "rien")

# su(p,q), 1 <= p <= q
for s in range(2, MAX_RANK + 2):
    for p in range(1, s // 2 + 1):
        q = s - p
        l = p + q - 1
        flip = [(i, l + 1 - i) for i in range(1, (l + 1) // 2 + 1) if i < l + 1 - i]
        note = "extended-p=q" if p == q else "-"
        if p == 1 and q % 2 == 0:
            note = "intro-counterexample"
        add(f"su({p},{q})", f"A{l}", range(p + 1, q), flip, l, l, p, (p + q) // 2,
            f"R+su({q-p})", a_type(q - p - 1), (q - p) // 2, "(C)", note)

# so(2p,2q+1): B_{p+q}
for l in range(2, MAX_RANK + 1):
    for p in range(1, l + 1):
        q = l - p
        if p <= q:
            add(f"so({2*p},{2*q+1})", f"B{l}", range(2 * p + 1, l + 1), [], l, l, 2 * p, l,
                f"so({2*q-2*p+1})", b_type(q - p), q - p, "(C)")
        else:
            add(f"so({2*p},{2*q+1})", f"B{l}", range(2 * q + 2, l + 1), [], l, l, 2 * q + 1, l,
                f"so({2*p-2*q-1})", b_type(p - q - 1), p - q - 1,
                "(C)" if p == q + 1 else "rien")

# sp(p,q), 1 <= p <= q
add("sp(1,1)", "B2", [2], [], 2, 2, 1, 2, "su(2)", "A1", 1, "rien", "modeled-on-B2")
for l in range(3, MAX_RANK + 1):
    for p in range(1, l // 2 + 1):
        q = l - p
        black = list(range(1, 2 * p, 2)) + list(range(2 * p + 1, l + 1))
        add(f"sp({p},{q})", f"C{l}", black, [], l, l, p, l,
            f"su(2)^{p}+sp({q-p})", plus(f"A1^{p}", c_type(q - p)), q, "rien")

# sp(n,R): split C_n
for n in range(3, MAX_RANK + 1):
    add(f"sp({n},R)", f"C{n}", [], [], n, n, n, n, "0", "0", 0, "(C)")

# so(2p+1,2q+1), 0 <= p <= q: D_{p+q+1}
for l in range(4, MAX_RANK + 1):
    for p in range(0, l):
        q = l - 1 - p
        if p > q:
            continue
        m = q - p
        if m == 0:
            black, sigma = [], []
        elif m == 1:
            black, sigma = [], [(l - 1, l)]
        else:
            black = list(range(2 * p + 2, l + 1))
            sigma = [(l - 1, l)] if m % 2 == 1 else []
        strongest = "(B)" if m == 0 else ("(A)" if m == 1 else "rien")
        add(f"so({2*p+1},{2*q+1})", f"D{l}", black, sigma, l, p + q, 2 * p + 1, 2 * (l // 2),
            f"so({2*m})", d_type(m), 2 * (m // 2), strongest)

# so(2p,2q), 1 <= p <= q: D_{p+q}
for l in range(4, MAX_RANK + 1):
    for p in range(1, l // 2 + 1):
        q = l - p
        m = q - p
        if m == 0:
            black, sigma = [], []
        elif m == 1:
            black, sigma = [], [(l - 1, l)]
        else:
            black = list(range(2 * p + 1, l + 1))
            sigma = [(l - 1, l)] if m % 2 == 1 else []
        add(f"so({2*p},{2*q})", f"D{l}", black, sigma, l, l, 2 * p, 2 * (l // 2),
            f"so({2*m})", d_type(m), 2 * (m // 2), "(C)")

# so*(2n): D_n
for n in range(4, MAX_RANK + 1):
    h = n // 2
    if n % 2 == 0:
        black, sigma, mname = range(1, n, 2), [], f"su(2)^{h}"
    else:
        black, sigma, mname = range(1, n - 1, 2), [(n - 1, n)], f"su(2)^{h}+R"
    add(f"so*({2*n})", f"D{n}", black, sigma, n, n, h, 2 * h, mname, f"A1^{h}", h, "(C)")

# exceptional forms
E6FLIP = [(1, 6), (3, 5)]
add("EI", "E6", [], [], 6, 4, 6, 4, "0", "0", 0, "(B)")
add("EII", "E6", [], E6FLIP, 6, 6, 4, 4, "R^2", "0", 0, "(C)")
add("EIII", "E6", [3, 4, 5], E6FLIP, 6, 6, 2, 4, "su(4)+R", "A3", 2, "(C)")
add("EIV", "E6", [2, 3, 4, 5], [], 6, 4, 2, 4, "so(8)", "D4", 4, "rien")
add("EV", "E7", [], [], 7, 7, 7, 7, "0", "0", 0, "(C)")
add("EVI", "E7", [2, 5, 7], [], 7, 7, 4, 7, "su(2)^3", "A1^3", 3, "(C)")
add("EVII", "E7", [2, 3, 4, 5], [], 7, 7, 3, 7, "so(8)", "D4", 4, "(C)")
add("EVIII", "E8", [], [], 8, 8, 8, 8, "0", "0", 0, "(C)")
add("EIX", "E8", [2, 3, 4, 5], [], 8, 8, 4, 8, "so(8)", "D4", 4, "(C)")
add("FI", "F4", [], [], 4, 4, 4, 4, "0", "0", 0, "(C)")
add("FII", "F4", [1, 2, 3], [], 4, 4, 1, 4, "so(7)", "B3", 3, "rien")
add("G", "G2", [], [], 2, 2, 2, 2, "0", "0", 0, "(C)")


def all_types():
    for l in range(1, MAX_RANK + 1):
        yield "A", l
    for l in range(2, MAX_RANK + 1):
        yield "B", l
    for l in range(3, MAX_RANK + 1):
        yield "C", l
    for l in range(4, MAX_RANK + 1):
        yield "D", l
    for l in (6, 7, 8):
        yield "E", l
    yield "F", 4
    yield "G", 2


def opposition(fam, l):
    if fam == "A":
        return [(i, l + 1 - i) for i in range(1, l + 1) if i < l + 1 - i]
    if fam == "D" and l % 2 == 1:
        return [(l - 1, l)]
    if fam == "E" and l == 6:
        return E6FLIP
    return []


# compact forms: everything black
for fam, l in all_types():
    k = kg(fam, l)
    add(f"compact-{fam}{l}", f"{fam}{l}", range(1, l + 1), opposition(fam, l), l, l, 0, k,
        f"{fam}{l}", f"{fam}{l}", k, "-")

# complex simple algebras viewed as real ones: doubled system, swap involution
for fam, l in [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("G", 2), ("C", 3), ("D", 4), ("F", 4), ("E", 6)]:
    k = kg(fam, l)
    add(f"complex-{fam}{l}", f"{fam}{l}", [], [], 2 * l, l, l, 2 * k, f"R^{l}", "0", 0, "(A)",
        double=1)

out = sys.argv[1] if len(sys.argv) > 1 else "data/registry.tsv"
with open(out, "w") as fh:
    fh.write(HEADER + "\n")
    fh.write("\n".join(rows) + "\n")
print(f"{len(rows)} rows -> {out}")
