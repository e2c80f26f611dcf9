"""Matrices and relations exactly as printed, kept verbatim for comparison.

Nothing here is computed.  Printed data that turns out to be inconsistent
is left as printed; the verification harness reports the discrepancy.
"""

from __future__ import annotations

# Blow-up of F4 at two torus fixed points on the zero section: degree matrix
BL2F4_Q = [
    [1, 0, 0, 0, 1, 0],
    [0, 1, 0, 0, 3, 1],
    [0, 0, 1, 0, 1, -1],
    [0, 0, 0, 1, 2, 1],
]

DEG_T7 = (0, 1, 0, 1)
EMBEDDING_IMAGE = "T2*T4 - T3*T6"
F0_POLY = "T7 - T2*T4 + T3*T6"

SIGMA0_P = [
    [0, -1, 1, -1, 0, 1, 0],
    [0, -1, 0, -1, 0, 0, 1],
    [-1, -2, -1, -1, 1, 0, -1],
]

# 1-based, as listed
SIGMA0_CONES = [
    (1, 2, 3), (1, 2, 7), (1, 3, 7), (2, 3, 6), (2, 4, 6),
    (2, 4, 7), (3, 6, 7), (4, 5, 6), (4, 5, 7), (5, 6, 7),
]

SIGMA0_BLOWN = (5, 7)  # 1-based
PRINTED_V_INF = (0, 0, 1)

F4BL3_RELATION_RECIPE = "T7*T8 - T2*T4 + T3*T6"
F4BL3_RELATION_STATEMENT = "T2*T4 + T3*T6 + T7*T8"
F4BL3_Q = [
    [1, 0, 0, 0, 0, 0, -1, 1],
    [0, 1, 0, 0, 0, 1, -2, 3],
    [0, 0, 1, 0, 0, -1, -1, 1],
    [0, 0, 0, 1, 0, 1, -1, 2],
    [0, 0, 0, 0, 1, 0, 1, -1],
]

# degrees of the toric Cox rings quoted in the proof of the rank-2 case
F0_DEGREES = [[1, 0, 1, 0], [0, 1, 0, 1]]
F4_DEGREES = [[1, 0, 1, 0], [0, 1, 4, 1]]
BL1P2_DEGREES = [[1, 1, 1, 0], [0, -1, -1, 1]]

RHO2_I = [[1, 0, 1, 0, 2], [0, 1, 0, 1, 2]]
RHO2_II = [[1, 0, 2, 0, 3], [0, 1, 4, 1, 6]]
RHO2_III = [[1, 0, -1, -1, -1], [0, 1, 1, 1, 3]]

RHO3_I = [[1, 0, 0, 1, 0, 2], [0, 1, 0, 0, 1, 2], [0, 0, 1, 1, 1, 3]]
RHO3_II = [[1, 0, 0, 2, 0, 3], [0, 1, 0, 1, -1, 1], [0, 0, 1, 3, 1, 5]]

RHO4_I = [
    [1, 0, 0, 0, 1, 0, 2],
    [0, 1, 0, 0, 0, 1, 2],
    [0, 0, 1, 0, 1, 1, 3],
    [0, 0, 0, 1, -1, -1, -1],
]
RHO4_II = [
    [1, 0, 0, 0, 2, 0, 3],
    [0, 1, 0, 0, 3, 1, 5],
    [0, 0, 1, 0, 1, -1, 1],
    [0, 0, 0, 1, 2, 1, 4],
]

RHO5_I = [
    [0, 0, 0, 0, 1, 1, 1, 1, 1, 1, -3],
    [1, 0, 0, 0, -1, -1, -1, 0, 0, 0, 1],
    [0, 1, 0, 0, -1, 0, 0, -1, -1, 0, 1],
    [0, 0, 1, 0, 0, -1, 0, -1, 0, -1, 1],
    [0, 0, 0, 1, 0, 0, -1, 0, -1, -1, 1],
]
PLUECKER = [
    "T2*T5 - T3*T6 + T4*T7",
    "T1*T5 - T3*T8 + T4*T9",
    "T1*T6 - T2*T8 + T4*T10",
    "T1*T7 - T2*T9 + T3*T10",
    "T5*T10 - T6*T9 + T7*T8",
]

RHO5_II = [
    [1, 0, 0, 0, 0, 0, -2, 2, 1],
    [0, 1, 0, 0, 0, 1, -2, 3, 4],
    [0, 0, 1, 0, 0, -1, -1, 1, 0],
    [0, 0, 0, 1, 0, 1, -1, 2, 4],
    [0, 0, 0, 0, 1, 0, 1, -1, 1],
]
RHO5_II_RELATION = "T2*T5 + T4*T6 + T7*T8"

# count of hyperbolic lattices with polyhedral effective cone, by Picard number
NIKULIN_TABLE = {
    (3, 3): 27, (4, 4): 17, (5, 6): 10, (7, 7): 9, (8, 8): 12, (9, 9): 10,
    (10, 10): 9, (11, 12): 4, (13, 14): 3, (15, 19): 1, (20, 20): 0,
}

# (Picard number, lattice expression, quotient surface, branch curve)
QUOT_TABLE_RHO2 = [
    ("U", "F4", "P1 + C10"),
    ("U(2)", "F0", "C9"),
    ("(2)+A1", "Bl1(P2)", "C9"),
]
