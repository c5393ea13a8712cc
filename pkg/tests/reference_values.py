"""Published reference values used as golden data across the test suite.

TABLE maps n to (alpha_hat, A(regular), A(regular-plus), A(mossinghoff),
A(mossinghoff-prime), A(bn), upper_bound), all rounded at the tenth
decimal.  The coordinate dictionaries carry 4-decimal vertex positions of
the drawn figures, keyed by vertex index.
"""

TABLE = {
    6: (0.3509301889, 0.6495190528, 0.6722882584, 0.6731855653, 0.6731855653, 0.6749814429, 0.6877007594),
    8: (0.2649613582, 0.7071067812, 0.7253199909, 0.7259763468, 0.7264449921, 0.7268542719, 0.7318815691),
    10: (0.2119285702, 0.7347315654, 0.7482573378, 0.7490291363, 0.7490910913, 0.7491189262, 0.7516135587),
    12: (0.1762667716, 0.7500000000, 0.7601970055, 0.7606471438, 0.7606885130, 0.7607153082, 0.7621336536),
    14: (0.1507443724, 0.7592965435, 0.7671877750, 0.7675035228, 0.7675178190, 0.7675203660, 0.7684036467),
    16: (0.1316139556, 0.7653668647, 0.7716285345, 0.7718386481, 0.7718489998, 0.7718535572, 0.7724408116),
    18: (0.1167583322, 0.7695453225, 0.7746235089, 0.7747776809, 0.7747819422, 0.7747824059, 0.7751926059),
    20: (0.1048968391, 0.7725424859, 0.7767382147, 0.7768497848, 0.7768531741, 0.7768543958, 0.7771522071),
    22: (0.0952114547, 0.7747645313, 0.7782865351, 0.7783722564, 0.7783738385, 0.7783739622, 0.7785970008),
    24: (0.0871560675, 0.7764571353, 0.7794540033, 0.7795196190, 0.7795209668, 0.7795213955, 0.7796927566),
}

#: 4-decimal vertex coordinates of the drawn one-variable optima
BN_COORDS = {
    6: {1: (0.3438, 0.9391), 2: (-0.5000, 0.4024)},
    8: {1: (0.2619, 0.9651), 2: (-0.4068, 0.2215), 3: (0.5000, 0.6432)},
    10: {
        1: (0.2103, 0.9776),
        2: (-0.3351, 0.1395),
        3: (0.4428, 0.7678),
        4: (-0.5000, 0.4346),
    },
}

#: 4-decimal vertex coordinates of the drawn Mossinghoff polygons
MN_COORDS = {
    6: {1: (0.3701, 0.9290), 2: (-0.5000, 0.4362)},
    8: {1: (0.2813, 0.9596), 2: (-0.3988, 0.2265), 3: (0.5000, 0.6649)},
    10: {
        1: (0.2167, 0.9762),
        2: (-0.3310, 0.1396),
        3: (0.4463, 0.7687),
        4: (-0.5000, 0.4454),
    },
}

#: published maximal areas for the solved even cases (6 decimals)
KNOWN_OPTIMA = {6: 0.674981, 8: 0.726868, 10: 0.749137, 12: 0.760729}
