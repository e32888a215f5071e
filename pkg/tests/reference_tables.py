# Reference N_n values, frozen literals.

# q=2, Type I, ell=t=2; columns: xi1^0 xi2^0, xi2, xi1^2, xi1^2 xi2
# with xi1 = <x+1>, xi2 = <x^4+x+1>.
TABLE_Q2_I_22 = {
    1: (0, 0, 0, 0),
    2: (0, 0, 1, 0),
    3: (0, 0, 0, 3),
    4: (1, 4, 2, 0),
    5: (5, 0, 5, 5),
    6: (9, 6, 4, 12),
    7: (21, 14, 7, 21),
    8: (31, 24, 40, 32),
    9: (63, 72, 63, 57),
    10: (125, 130, 116, 140),
    11: (253, 242, 275, 253),
    12: (523, 532, 512, 480),
    13: (923, 1092, 1079, 1001),
    14: (2065, 2030, 2052, 2044),
    15: (4145, 4110, 4115, 4013),
    16: (8143, 8112, 8128, 8384),
    17: (16303, 16592, 16439, 16201),
    18: (33093, 32442, 32692, 32844),
    19: (65493, 65322, 65379, 65949),
    20: (131731, 130924, 130112, 131520),
}

# q=3, Type I, ell=2, t=1; TABLE_Q3_I_21[t1][n][t2] = N_n(xi1^t1 xi2^t2)
# with xi1 = <x+1> (order 3), xi2 = <x+2> (order 6).
TABLE_Q3_I_21 = {
    0: {
        1: (0, 1, 0, 0, 0, 0),
        2: (0, 0, 1, 0, 0, 0),
        3: (1, 0, 0, 1, 3, 3),
        4: (0, 4, 8, 8, 5, 4),
        5: (10, 15, 15, 10, 15, 6),
        6: (58, 36, 45, 40, 45, 36),
        7: (112, 99, 126, 112, 126, 126),
        8: (328, 360, 369, 400, 396, 360),
        9: (1093, 1134, 1134, 1093, 1053, 1053),
        10: (3280, 3240, 3240, 3280, 3321, 3240),
        11: (9922, 9801, 9801, 9922, 9801, 10044),
        12: (28714, 29484, 29565, 29848, 29565, 29484),
        13: (88816, 89181, 88452, 88816, 88452, 88452),
        14: (265720, 265356, 266085, 265720, 265356, 265356),
        15: (797161, 796068, 796068, 797161, 798255, 798255),
        16: (2388568, 2391120, 2394036, 2394400, 2391849, 2391120),
        17: (7172266, 7175547, 7175547, 7172266, 7175547, 7168986),
        18: (21536482, 21520080, 21526641, 21523360, 21526641, 21520080),
        19: (64563520, 64553679, 64573362, 64563520, 64573362, 64573362),
        20: (193684000, 193706964, 193713525, 193736488, 193733208, 193706964),
    },
    1: {
        1: (1, 0, 0, 0, 0, 0),
        2: (0, 0, 0, 0, 0, 2),
        3: (0, 3, 0, 3, 3, 3),
        4: (5, 4, 2, 4, 2, 4),
        5: (15, 15, 15, 15, 15, 15),
        6: (45, 36, 27, 36, 36, 54),
        7: (99, 126, 126, 126, 126, 126),
        8: (396, 360, 341, 360, 396, 360),
        9: (1134, 1053, 1134, 1053, 1053, 1053),
        10: (3321, 3240, 3240, 3240, 3402, 3402),
        11: (9801, 9801, 9801, 9801, 9801, 9801),
        12: (29565, 29484, 29565, 29484, 29808, 29484),
        13: (89181, 88452, 88452, 88452, 88452, 88452),
        14: (265356, 265356, 265356, 265356, 265356, 266814),
        15: (796068, 798255, 796068, 798255, 798255, 798255),
        16: (2391849, 2391120, 2389662, 2391120, 2389662, 2391120),
        17: (7175547, 7175547, 7175547, 7175547, 7175547, 7175547),
        18: (21526641, 21520080, 21513519, 21520080, 21520080, 21533202),
        19: (64553679, 64573362, 64573362, 64573362, 64573362, 64573362),
        20: (193733208, 193706964, 193693842, 193706964, 193733208, 193706964),
    },
    2: {
        1: (0, 0, 0, 0, 0, 0),
        2: (1, 2, 2, 0, 0, 0),
        3: (3, 0, 0, 0, 3, 0),
        4: (8, 4, 8, 4, 2, 4),
        5: (6, 15, 15, 15, 15, 15),
        6: (45, 54, 36, 36, 27, 36),
        7: (126, 126, 126, 126, 126, 126),
        8: (369, 360, 342, 360, 342, 360),
        9: (1053, 1134, 1134, 1134, 1053, 1134),
        10: (3240, 3402, 3240, 3240, 3240, 3240),
        11: (10044, 9801, 9801, 9801, 9801, 9801),
        12: (29565, 29484, 29808, 29484, 29565, 29484),
        13: (88452, 88452, 88452, 88452, 88452, 88452),
        14: (266085, 266814, 266814, 265356, 265356, 265356),
        15: (798255, 796068, 796068, 796068, 798255, 796068),
        16: (2394036, 2391120, 2394036, 2391120, 2389662, 2391120),
        17: (7168986, 7175547, 7175547, 7175547, 7175547, 7175547),
        18: (21526641, 21533202, 21520080, 21520080, 21513519, 21520080),
        19: (64573362, 64573362, 64573362, 64573362, 64573362, 64573362),
        20: (193713525, 193706964, 193693842, 193706964, 193693842, 193706964),
    },
}
