"""Frozen reference values used by the acceptance checks.

Arrow diagrams are transcribed as digit-string labels: a label lists the
parts of a composition, zeros are placeholders and are dropped to get the
class.  Solid pairs are ordinary arrows in both directions; curly pairs are
connecting maps.
"""

# vertex numbering of the ten nontrivial classes of S0(3,5)
VERTICES_3_5 = [(1, 4), (2, 3), (3, 2), (4, 1), (1, 1, 3), (1, 2, 2), (2, 1, 2),
                (2, 2, 1), (3, 1, 1), (1, 3, 1)]

# the four extra vertices 11..14 for S0(4,5)
VERTICES_4_5 = VERTICES_3_5 + [(1, 1, 1, 2), (1, 1, 2, 1), (1, 2, 1, 1), (2, 1, 1, 1)]

# Hom dimensions between the projectives of VERTICES_3_5
HOM_TABLE_3_5 = [
    [1, 1, 1, 1, 0, 0, 0, 0, 0, 0],
    [1, 2, 2, 1, 0, 1, 0, 1, 0, 1],
    [1, 2, 2, 1, 0, 1, 0, 1, 0, 1],
    [1, 1, 1, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 1, 1, 1, 1, 1],
    [0, 1, 1, 0, 1, 3, 2, 3, 1, 2],
    [0, 0, 0, 0, 1, 2, 2, 2, 1, 1],
    [0, 1, 1, 0, 1, 3, 2, 3, 1, 2],
    [0, 0, 0, 0, 1, 1, 1, 1, 1, 1],
    [0, 1, 1, 0, 1, 2, 1, 2, 1, 2],
]

# orbits with row sums (1,2,2) and column sums (1,3,1), as listed (seven of them)
HOM_LISTED_122_131 = [
    ((1, 0, 0), (0, 1, 1), (0, 2, 0)),
    ((1, 0, 0), (0, 2, 0), (0, 1, 1)),
    ((0, 1, 0), (1, 1, 0), (0, 1, 1)),
    ((0, 1, 0), (1, 0, 1), (0, 2, 0)),
    ((0, 1, 0), (0, 1, 1), (1, 1, 0)),
    ((0, 0, 1), (1, 1, 0), (0, 2, 0)),
    ((0, 0, 1), (0, 2, 0), (1, 1, 0)),
]

# the two of them that survive every nontrivial blocking
INDEC_LISTED_122_131 = [
    ((1, 0, 0), (0, 2, 0), (0, 1, 1)),
    ((0, 1, 0), (1, 0, 1), (0, 2, 0)),
]

# summand classes of S k_lambda in S0(4,7)
DECOMPOSITIONS_4_7 = {
    (2, 0, 3, 2): [(2, 3, 2), (5, 2), (2, 5), (7,)],
    (2, 1, 3, 1): [(2, 1, 3, 1), (3, 3, 1), (2, 4, 1), (2, 1, 4), (6, 1), (3, 4),
                   (2, 5), (7,)],
}

# stated unit Hom dimensions in S0(4,5): (vertex, vertex) with dim Hom = 1
UNIT_HOMS_4_5 = [(12, 6), (12, 8), (12, 10), (13, 6), (13, 8), (13, 10)]

# arrows (both directions) of the quiver on VERTICES_4_5, as vertex numbers
QUIVER_PAIRS_3_5 = [(1, 2), (2, 3), (3, 4), (2, 6), (3, 8), (5, 6), (6, 10), (6, 7),
                    (10, 8), (7, 8), (8, 9)]
QUIVER_PAIRS_4_5 = QUIVER_PAIRS_3_5 + [(6, 12), (8, 13), (11, 12), (12, 13), (13, 14)]

S0_4_6 = {
    "vertices": ['1005', '1104', '1113', '1122', '1131', '1203', '1212', '1221', '1302', '1311', '1401', '2004', '2103', '2112', '2121', '2202', '2211', '2301', '3003', '3102', '3111', '3201', '4002', '4101', '5001'],
    "solid": [
        ('1005', '2004'),
        ('1104', '1203'),
        ('1113', '1122'),
        ('1122', '1131'),
        ('1122', '1212'),
        ('1131', '1221'),
        ('1203', '1302'),
        ('1203', '2103'),
        ('1212', '1221'),
        ('1212', '2112'),
        ('1221', '1311'),
        ('1221', '2121'),
        ('1302', '1401'),
        ('1302', '2202'),
        ('1311', '2211'),
        ('1401', '2301'),
        ('2004', '3003'),
        ('2103', '2202'),
        ('2112', '2121'),
        ('2121', '2211'),
        ('2202', '2301'),
        ('2202', '3102'),
        ('2211', '3111'),
        ('2301', '3201'),
        ('3003', '4002'),
        ('3102', '3201'),
        ('3201', '4101'),
        ('4002', '5001'),
    ],
    "curly": [
        ('1122', '1203'),
        ('1203', '2004'),
        ('1212', '2202'),
        ('1221', '1302'),
        ('1221', '2301'),
        ('2121', '2202'),
        ('2202', '3003'),
        ('2211', '3201'),
        ('3201', '4002'),
    ],
}

H0_6 = {
    "vertices": ['1005', '1104', '11112', '11121', '1113', '11211', '1122', '1131', '1203', '12111', '1212', '1221', '1302', '1311', '1401', '2004', '2103', '21111', '2112', '2121', '2202', '2211', '2301', '3003', '3102', '3111', '3201', '4002', '4101', '5001'],
    "solid": [
        ('1005', '2004'),
        ('1104', '1203'),
        ('11112', '11121'),
        ('11121', '11211'),
        ('1113', '1122'),
        ('11211', '12111'),
        ('1122', '1131'),
        ('1122', '1212'),
        ('1131', '1221'),
        ('1203', '1302'),
        ('1203', '2103'),
        ('12111', '21111'),
        ('1212', '1221'),
        ('1212', '2112'),
        ('1221', '1311'),
        ('1221', '2121'),
        ('1302', '1401'),
        ('1302', '2202'),
        ('1311', '2211'),
        ('1401', '2301'),
        ('2004', '3003'),
        ('2103', '2202'),
        ('2112', '2121'),
        ('2121', '2211'),
        ('2202', '2301'),
        ('2202', '3102'),
        ('2211', '3111'),
        ('2301', '3201'),
        ('3003', '4002'),
        ('3102', '3201'),
        ('3201', '4101'),
        ('4002', '5001'),
    ],
    "curly": [
        ('11121', '1122'),
        ('11211', '1221'),
        ('1122', '1203'),
        ('1203', '2004'),
        ('12111', '2211'),
        ('1212', '2202'),
        ('1221', '1302'),
        ('1221', '2301'),
        ('2121', '2202'),
        ('2202', '3003'),
        ('2211', '3201'),
        ('3201', '4002'),
    ],
}

