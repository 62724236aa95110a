"""Reference packing and covering tables (5 decimals).

Each row: ``(p, q, radius, circle_area, base_area, density)``.  ``None``
marks a cell with no reference value.
"""

PACKING = [
    (3, 7, 0.14156, 0.06338, 0.11220, 0.56489),
    (3, 8, 0.18176, 0.10494, 0.19635, 0.53443),
    (3, 10, 0.21980, 0.15423, 0.31416, 0.49093),
    (3, 1000, 0.27465, 0.24299, 0.78069, 0.31126),
    (4, 5, 0.26532, 0.22639, 0.31416, 0.72061),
    (4, 6, 0.32924, 0.35303, 0.52360, 0.67424),
    (4, 10, 0.40423, 0.54192, 0.94248, 0.57500),
    (4, 1000, 0.44068, 0.65063, 1.56451, 0.41587),
    (7, 3, 0.27264, 0.23936, 0.26180, 0.91430),
    (7, 4, 0.53520, 0.98915, 1.17810, 0.83962),
    (7, 5, 0.61750, 1.35810, 1.72788, 0.78600),
    (7, 10, 0.71065, 1.87233, 2.82743, 0.66220),
    (7, 1000, 0.73867, 2.04950, 3.91600, 0.52337),
    (9, 3, 0.46377, 0.725552, 0.78540, 0.92380),
    (10, 3, 0.53064, 0.97081, 1.04720, 0.92705),
    (20, 3, 0.91485, 3.44983, 3.66519, 0.94124),
    (40, 3, 1.26948, None, 8.90118, 0.94813),
    (100, 3, 1.72981, 23.43332, 24.60914, 0.95222),
    (1000, 3, 2.88151, 248.42962, 260.22859, 0.95466),
    (5000, 3, 3.68623, 1248.429286, 1307.42614, 0.95488),
]

COVERING = [
    (3, 7, 0.31034, 0.31240, 0.11220, 2.78432),
    (3, 8, 0.43035, 0.61865, 0.19635, 3.15078),
    (3, 10, 0.58867, 1.22035, 0.31416, 3.88451),
    (3, 1000, 2.95343, 287.10339, 0.78069, 367.75794),
    (4, 5, 0.42124, 0.59122, 0.31416, 1.88191),
    (4, 6, 0.57311, 1.14990, 0.52360, 2.19615),
    (4, 10, 0.89491, 3.26362, 0.94248, 3.46281),
    (4, 1000, 3.22808, 498.42756, 1.56451, 318.58317),
    (7, 3, 0.31034, 0.31240, 0.26180, 1.19328),
    (7, 4, 0.68003, 1.69100, 1.17810, 1.43536),
    (7, 5, 0.85559, 2.91868, 1.72788, 1.68917),
    (7, 10, 1.27092, 8.46797, 2.82743, 2.99493),
    (7, 1000, 3.59343, 1036.68649, 3.91600, 264.73129),
    (9, 3, 0.51794, 0.92089, 0.78540, 1.17251),
    (10, 3, 0.58867, 1.22035, 1.04720, 1.16535),
    (20, 3, 0.98360, 4.15514, 3.66519, 1.13368),
    (40, 3, 1.34063, 9.95246, 8.90118, 1.11811),
    (100, 3, 1.80161, 27.28722, 24.60914, 1.10883),
    (1000, 3, 2.95343, 287.10339, 260.22859, 1.10327),
    (5000, 3, 3.75815, 1441.80469, 1307.42614, 1.10278),
]

TABLES = {"packing": PACKING, "covering": COVERING}

ABS_TOL = 5e-5
# cells with magnitude > 100 keep only ~8 significant digits
LARGE_CELL = 100.0
LARGE_TOL = 5e-3
# reference density of the row whose circle area is missing
MISSING_AREA_TOL = 1e-4


def cell_tolerance(value):
    return LARGE_TOL if abs(value) > LARGE_CELL else ABS_TOL


def pairs(mode):
    return [(row[0], row[1]) for row in TABLES[mode]]
