"""Per-instance average metrics (compute time seconds, optimality gap)
from a full-scale road-network evaluation of the three methods; used as an
ingestion fixture for the dominance report."""

FULLSCALE_AVG = {
    "sphere": {
        1: (135.73, 0.08), 2: (138.27, 0.12), 3: (165.25, 0.03),
        4: (370.06, 0.11), 5: (126.88, 0.05), 6: (301.07, 0.02),
        7: (213.59, 0.00), 8: (157.02, 0.01), 9: (390.68, 0.02),
        10: (137.20, 0.02), 11: (130.96, 0.13), 12: (264.38, 0.04),
        13: (123.22, 0.00), 14: (234.34, 0.14), 15: (211.37, 0.00),
        16: (136.40, 0.04), 17: (119.90, 0.01), 18: (123.18, 0.08),
        19: (205.97, 0.02), 20: (170.12, 0.00), 21: (326.25, 0.01),
        22: (137.27, 0.03), 23: (172.50, 0.01), 24: (145.29, 0.02),
        25: (160.44, 0.02), 26: (172.71, 0.03), 27: (246.94, 0.02),
        28: (159.42, 0.00), 29: (232.46, 0.07), 30: (142.64, 0.16),
    },
    "corridor": {
        1: (173.97, 0.24), 2: (187.87, 0.14), 3: (190.12, 0.08),
        4: (574.18, 0.25), 5: (171.35, 0.10), 6: (571.56, 0.18),
        7: (354.04, 0.27), 8: (224.89, 0.32), 9: (396.99, 0.13),
        10: (197.31, 0.02), 11: (167.76, 0.20), 12: (234.53, 0.24),
        13: (200.92, 0.10), 14: (358.43, 0.25), 15: (300.88, 0.11),
        16: (221.84, 0.08), 17: (193.90, 0.02), 18: (205.16, 0.06),
        19: (1052.15, 0.40), 20: (391.16, 0.30), 21: (506.65, 0.20),
        22: (180.60, 0.49), 23: (211.28, 0.08), 24: (202.11, 0.21),
        25: (219.89, 0.11), 26: (203.42, 0.17), 27: (479.93, 0.14),
        28: (267.58, 0.16), 29: (354.39, 0.14), 30: (175.93, 0.10),
    },
    "louvain": {
        1: (1047.77, 0.25), 2: (1072.17, 0.34), 3: (1130.18, 0.18),
        4: (1230.71, 0.37), 5: (1129.89, 0.14), 6: (1265.49, 0.25),
        7: (1197.91, 0.32), 8: (1165.53, 0.09), 9: (1274.68, 0.23),
        10: (1141.72, 0.27), 11: (1057.36, 0.33), 12: (1160.17, 0.25),
        13: (1308.92, 0.18), 14: (1414.78, 0.33), 15: (1288.33, 0.15),
        16: (1400.16, 0.20), 17: (1266.58, 0.20), 18: (1409.96, 0.32),
        19: (1401.55, 0.25), 20: (1414.17, 0.10), 21: (1502.53, 0.30),
        22: (1135.72, 0.28), 23: (1065.85, 0.21), 24: (1009.77, 0.27),
        25: (1059.09, 0.12), 26: (1054.63, 0.24), 27: (1388.28, 0.22),
        28: (1274.86, 0.19), 29: (1219.90, 0.25), 30: (1162.54, 0.15),
    },
}
