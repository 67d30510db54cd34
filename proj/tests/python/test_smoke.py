#!/usr/bin/env python3
"""Smoke tests for the python module: the main operations behave like the
C++ suite says they should."""

import os

import dpell

passed = 0


def check(cond, what):
    global passed
    if not cond:
        raise AssertionError(what)
    passed += 1


# catalog and Mordell-Weil groups
keys = dpell.list_types()
check(len(keys) == 24, f"expected 24 types, got {len(keys)}")
check(dpell.list_types(degree=4, finite_mw=True)
      == ["4:X_10", "4:X_11", "4:X_21:a", "4:X_22", "4:X_43"], "finite filter")
check(dpell.mw("4:X_43") == "(Z/2)^2", "mw text")
check(dpell.mw_group("4:X_40") == (3, []), "mw group tuple")
check(dpell.mw_group("3:X_SSS") == (0, [3]), "X_SSS torsion")

try:
    dpell.mw("4:X_99")
    raise AssertionError("unknown key should raise")
except ValueError:
    passed += 1

# lattice operations
check(dpell.pairing(4, [1, 0, 0, 0, 0], [1, 0, 0, 0, 0]) == 4, "H.H = 4")
check(dpell.fiber_class(2) == [1, -1, -1], "fiber class")
check(dpell.div_curve_pairing(4, [1, -1, -1, -1, -1], [1, -1, 0, 0, 0]) == 0,
      "F meets fiber components trivially")
check(dpell.f_perp_root_type(4, 4)["label"] == "A~3", "affine root label")
check(dpell.f_perp_root_type(4, 2)["gram"] == [[-2]], "A1 gram")

# abelian engine
rank, torsion = dpell.quotient(2, [[1, -1], [2, 2]])
check((rank, torsion) == (0, [4]), "Z/4 quotient")
u, d, v = dpell.smith_normal_form([[2, 4], [0, 6]])
check([d[0][0], d[1][1]] == [2, 6], "snf diag(2,6)")
# exact round trip U * M * V = D through python integers
m = [[2, 4], [0, 6]]
um = [[sum(u[i][k] * m[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
umv = [[sum(um[i][k] * v[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
check(umv == d, "U*M*V == D")

# cones
nef = dpell.nef_cone("4:X_40")
check(len(nef["rays"]) == 16, "hyper-cube nef cone")
mov = dpell.mov_cone("1:X_1")
check(sorted(mov["rays"]) == [[1, -1], [1, 0]], "Mov(X_1)")
try:
    dpell.mov_cone("2:X_11")
    raise AssertionError("infinite MW should raise")
except ValueError:
    passed += 1

dec = dpell.nef_decompose("2:X_11", [3, -2, -1])
check(dec["H"] == 1 and len(dec["terms"]) == 2, "nef decomposition")

# chambers
ch = dpell.mori_chambers("4:X_43")
check(ch["certificate"]["covers"] is True, "X_43 certificate")
check(len(ch["chambers"]) == 5, "X_43 chamber count")
n1 = dpell.chamber_Ni("4:X_43", 1)
check(len(n1["rays"]) == 9, "N_1 rays")

walk = dpell.x11_chamber(1)
check(sorted(walk["rays_basis_b"]) == sorted(
    [[1, 0, 0], [3, 2, 1], [1, 1, 1], [3, 3, 2]]), "walker closed form")

# graphs
dot = dpell.graph_dot("1:X_1")
check(dot.startswith("graph {") and dot.count(" -- ") == 1, "dot output")
g = dpell.graph("2:X_SS")
check(sum(e["multiplicity"] for e in g["edges"]) == 16, "X_SS edge count")

# grading checks
data_dir = os.environ.get("DPELL_DATA_DIR", "data")
rep = dpell.check_homogeneity(os.path.join(data_dir, "cox", "x43.json"))
check(rep["all_homogeneous"] is True, "X_43 grading")
rep2 = dpell.check_homogeneity(os.path.join(data_dir, "cox", "x2.json"), as_printed=True)
check(rep2["all_homogeneous"] is False, "X_2 as printed")

check(dpell.selftest() is True, "module selftest")

print(f"smoke: all checks passed ({passed} assertions)")
