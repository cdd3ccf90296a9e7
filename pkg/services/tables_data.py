# services/tables_data.py
# Published constructions, extensions and neighbors with their expected binary parameters.
# Construction rows give γ as (γ1,γ2,γ3,γ4); F4U entries are hex digits in the {uω, ω, u, 1} basis.

NOT_SELF_DUAL_AS_PRINTED = {
    "reason": "conditions c3 to c5 fail as printed and the γ1 := δ1, γ3 := δ2 amendment does not repair them",
    "observed": {"self_dual": False, "conditions_failed": ["c3", "c4", "c5"]},
}

CONSTRUCTION_TABLES = {
    "table1": {
        "title": "[32,16,8] Type II codes over F4 from C3",
        "ring": "F4",
        "n": 32,
        "d": 8,
        "rows": [
            {"group": "C3", "gamma": "(0,1,w,w)", "v1": "(0,1,1)", "v2": "(0,1,w+1)", "type": "II"},
            {"group": "C3", "gamma": "(0,1,w,w)", "v1": "(1,w,w+1)", "v2": "(w,w+1,w+1)", "type": "II"},
            {"group": "C3", "gamma": "(w,w,w,w+1)", "v1": "(0,0,w)", "v2": "(1,1,w)", "type": "II",
             "discrepancy": {"reason": "the image is self-dual with words of weight 10 and 14 (A8 = 364), so it is Type I",
                             "observed": {"n": 32, "k": 16, "d": 8, "type": "I", "self_dual": True}}},
        ],
    },
    "table2": {
        "title": "[64,32,12] codes in W64,2 over F4+uF4 from C3",
        "ring": "F4U",
        "n": 64,
        "d": 12,
        "rows": [
            {"group": "C3", "gamma": "(1,8,6,6)", "v1": "(2,A,9)", "v2": "(0,9,F)", "type": "I",
             "family": "W64,2", "params": {"beta": 13}},
            {"group": "C3", "gamma": "(0,A,6,5)", "v1": "(2,9,B)", "v2": "(8,B,5)", "type": "I",
             "family": "W64,2", "params": {"beta": 13}},
            {"group": "C3", "gamma": "(0,A,4,7)", "v1": "(A,2,9)", "v2": "(9,6,1)", "type": "I",
             "family": "W64,2", "params": {"beta": 16},
             "discrepancy": NOT_SELF_DUAL_AS_PRINTED},
            {"group": "C3", "gamma": "(0,A,6,5)", "v1": "(A,1,6)", "v2": "(4,D,F)", "type": "I",
             "family": "W64,2", "params": {"beta": 19},
             "discrepancy": NOT_SELF_DUAL_AS_PRINTED},
            {"group": "C3", "gamma": "(1,8,4,4)", "v1": "(B,4,E)", "v2": "(0,2,6)", "type": "I",
             "family": "W64,2", "params": {"beta": 22}},
            {"group": "C3", "gamma": "(9,2,6,6)", "v1": "(2,A,1)", "v2": "(8,3,D)", "type": "I",
             "family": "W64,2", "params": {"beta": 25}},
            {"group": "C3", "gamma": "(1,8,4,4)", "v1": "(A,A,1)", "v2": "(8,B,7)", "type": "I",
             "family": "W64,2", "params": {"beta": 25}},
            {"group": "C3", "gamma": "(1,8,4,4)", "v1": "(A,6,D)", "v2": "(E,5,F)", "type": "I",
             "family": "W64,2", "params": {"beta": 37}},
            {"group": "C3", "gamma": "(2,9,4,E)", "v1": "(1,E,D)", "v2": "(4,F,F)", "type": "I",
             "family": "W64,2", "params": {"beta": 37}},
            {"group": "C3", "gamma": "(0,A,4,7)", "v1": "(0,9,9)", "v2": "(0,1,5)", "type": "I",
             "family": "W64,2", "params": {"beta": 40}},
            {"group": "C3", "gamma": "(0,A,4,7)", "v1": "(0,9,9)", "v2": "(2,9,F)", "type": "I",
             "family": "W64,2", "params": {"beta": 64}},
        ],
    },
    "table3": {
        "title": "[32,16,8] codes over F2 from C7",
        "ring": "F2",
        "n": 32,
        "d": 8,
        "rows": [
            {"group": "C7", "gamma": "(0,0,0,1)", "v1": "0000011", "v2": "0110011", "type": "II"},
            {"group": "C7", "gamma": "(0,0,0,1)", "v1": "0010111", "v2": "0111111", "type": "II"},
            {"group": "C7", "gamma": "(1,0,1,1)", "v1": "0000111", "v2": "1101011", "type": "I"},
        ],
    },
    "table4": {
        "title": "[64,32,12] codes in W64,2 over F2+uF2 from C7",
        "ring": "F2U",
        "n": 64,
        "d": 12,
        "rows": [
            {"group": "C7", "gamma": "(u,u,1,1)", "v1": "(u,0,0,u,0,1,3)", "v2": "(u,1,1,0,u,3,1)",
             "type": "I", "family": "W64,2", "params": {"beta": 16}},
            {"group": "C7", "gamma": "(u,u,1,1)", "v1": "(u,u,0,0,0,1,3)", "v2": "(u,1,1,u,0,3,1)",
             "type": "I", "family": "W64,2", "params": {"beta": 30}},
            {"group": "C7", "gamma": "(u,u,u,1)", "v1": "(u,0,1,0,1,1,1)", "v2": "(u,1,1,3,1,1,3)",
             "type": "I", "family": "W64,2", "params": {"beta": 37}},
            {"group": "C7", "gamma": "(u,u,u,1)", "v1": "(u,u,1,u,1,1,1)", "v2": "(u,1,1,3,3,1,1)",
             "type": "I", "family": "W64,2", "params": {"beta": 37}},
            {"group": "C7", "gamma": "(u,u,1,1)", "v1": "(u,0,u,0,0,1,3)", "v2": "(u,1,1,u,0,1,3)",
             "type": "I", "family": "W64,2", "params": {"beta": 44}},
            {"group": "C7", "gamma": "(u,u,u,1)", "v1": "(u,u,0,0,u,1,1)", "v2": "(u,1,3,u,u,1,3)",
             "type": "I", "family": "W64,2", "params": {"beta": 44}},
            {"group": "C7", "gamma": "(u,u,1,1)", "v1": "(u,0,1,0,1,3,3)", "v2": "(u,1,1,1,3,3,1)",
             "type": "I", "family": "W64,2", "params": {"beta": 51}},
            {"group": "C7", "gamma": "(u,u,u,1)", "v1": "(u,u,u,u,u,1,1)", "v2": "(u,1,3,u,u,,1)",
             "type": "I", "family": "W64,2", "params": {"beta": 72},
             "skip": "v2 is printed with a missing coordinate"},
        ],
    },
    "table5": {
        "title": "[40,20,8] codes over F2 from groups of order 9",
        "ring": "F2",
        "n": 40,
        "d": 8,
        "rows": [
            {"group": "C9", "gamma": "(0,0,0,1)", "v1": "000000011", "v2": "001110111", "type": "I"},
            {"group": "C9", "gamma": "(0,0,0,1)", "v1": "000010111", "v2": "001010011", "type": "I"},
            {"group": "C9", "gamma": "(0,0,0,1)", "v1": "000111111", "v2": "001101111", "type": "I"},
            {"group": "C9", "gamma": "(1,0,1,1)", "v1": "000000111", "v2": "000010011", "type": "II"},
            {"group": "C9", "gamma": "(1,0,1,1)", "v1": "000000111", "v2": "010111111", "type": "II"},
            {"group": "C9", "gamma": "(1,0,1,1)", "v1": "000101111", "v2": "001101011", "type": "II"},
            {"group": "C3,3", "gamma": "(0,0,0,1)", "v1": "000001001", "v2": "011011101", "type": "I"},
            {"group": "C3,3", "gamma": "(0,0,0,1)", "v1": "000011011", "v2": "001011100", "type": "I"},
            {"group": "C3,3", "gamma": "(0,0,0,1)", "v1": "001011111", "v2": "011101011", "type": "I"},
            {"group": "C3,3", "gamma": "(1,0,1,1)", "v1": "000001011", "v2": "001010001", "type": "II"},
            {"group": "C3,3", "gamma": "(1,0,1,1)", "v1": "001001001", "v2": "011110111", "type": "II"},
            {"group": "C3,3", "gamma": "(1,0,1,1)", "v1": "001001111", "v2": "001011101", "type": "II"},
            {"group": "C3xC3", "gamma": "(0,0,0,1)", "v1": "000011011", "v2": "001001110", "type": "I"},
            {"group": "C3xC3", "gamma": "(1,0,1,1)", "v1": "000000111", "v2": "001001010", "type": "II"},
            {"group": "C3xC3", "gamma": "(1,0,1,1)", "v1": "001001111", "v2": "001110110", "type": "II"},
        ],
    },
    "table6": {
        "title": "[80,40,14] codes in W80,2 over F2+uF2 from groups of order 9",
        "ring": "F2U",
        "n": 80,
        "d": 14,
        "rows": [
            {"group": "C9", "gamma": "(u,u,0,1)", "v1": "(u,u,0,u,u,0,u,1,1)", "v2": "(0,0,1,1,1,0,3,1,3)",
             "type": "I", "family": "W80,2", "params": {"alpha": -330, "beta": 10}},
            {"group": "C9", "gamma": "(1,u,1,1)", "v1": "(u,0,0,3,u,1,3,3,3)", "v2": "(u,0,1,3,0,3,u,1,1)",
             "type": "I", "family": "W80,2", "params": {"alpha": -258, "beta": 1}},
            {"group": "C9", "gamma": "(u,0,u,1)", "v1": "(0,0,0,u,1,u,3,3,3)", "v2": "(0,u,1,0,1,u,0,1,3)",
             "type": "I", "family": "W80,2", "params": {"alpha": -240, "beta": 1}},
            {"group": "C9", "gamma": "(u,u,0,1)", "v1": "(u,0,0,0,1,0,1,3,3)", "v2": "(u,u,1,u,3,0,u,3,1)",
             "type": "I", "family": "W80,2", "params": {"alpha": -204, "beta": 1}},
            {"group": "C9", "gamma": "(u,u,0,1)", "v1": "(0,0,0,u,1,0,3,3,1)", "v2": "(0,u,1,u,3,0,0,3,1)",
             "type": "I", "family": "W80,2", "params": {"alpha": -186, "beta": 1}},
            {"group": "C9", "gamma": "(u,0,u,1)", "v1": "(u,u,0,u,1,0,1,1,1)", "v2": "(u,u,1,u,1,u,u,3,3)",
             "type": "I", "family": "W80,2", "params": {"alpha": -168, "beta": 1}},
            {"group": "C9", "gamma": "(u,0,u,1)", "v1": "(0,0,0,u,1,0,3,3,1)", "v2": "(u,u,1,0,3,0,u,3,1)",
             "type": "I", "family": "W80,2", "params": {"alpha": -150, "beta": 1}},
            {"group": "C9", "gamma": "(u,u,0,1)", "v1": "(u,u,0,u,1,0,1,1,1)", "v2": "(0,0,1,0,1,0,0,3,3)",
             "type": "I", "family": "W80,2", "params": {"alpha": -96, "beta": 1}},
            {"group": "C3,3", "gamma": "(u,0,u,1)", "v1": "(u,u,u,u,u,1,0,0,1)", "v2": "(u,1,1,u,3,1,3,u,1)",
             "type": "I", "family": "W80,2", "params": {"alpha": -366, "beta": 10}},
            {"group": "C3,3", "gamma": "(u,0,u,1)", "v1": "(u,u,u,u,u,1,u,0,3)", "v2": "(u,1,3,0,1,3,1,u,3)",
             "type": "I", "family": "W80,2", "params": {"alpha": -348, "beta": 10}},
            {"group": "C3,3", "gamma": "(1,u,1,1)", "v1": "(0,u,u,0,u,3,u,3,1)", "v2": "(u,u,1,u,3,u,u,u,3)",
             "type": "I", "family": "W80,2", "params": {"alpha": -312, "beta": 1}},
            {"group": "C3,3", "gamma": "(0,u,u,1)", "v1": "(0,0,0,u,u,1,0,0,1)", "v2": "(u,1,1,u,3,1,3,u,1)",
             "type": "I", "family": "W80,2", "params": {"alpha": -294, "beta": 10}},
            {"group": "C3,3", "gamma": "(1,u,1,1)", "v1": "(u,0,u,0,u,3,u,1,3)", "v2": "(0,0,3,u,1,u,u,u,3)",
             "type": "I", "family": "W80,2", "params": {"alpha": -222, "beta": 1}},
            {"group": "C3,3", "gamma": "(1,u,1,1)", "v1": "(0,0,u,0,u,3,0,3,1)", "v2": "(0,0,3,u,1,u,u,u,3)",
             "type": "I", "family": "W80,2", "params": {"alpha": -168, "beta": 1}},
            {"group": "C3,3", "gamma": "(0,u,u,1)", "v1": "(0,0,u,u,1,1,0,3,3)", "v2": "(0,0,1,0,3,1,3,u,0)",
             "type": "I", "family": "W80,2", "params": {"alpha": -186, "beta": 1}},
            {"group": "C3xC3", "gamma": "(u,u,1,1)", "v1": "(0,u,0,0,1,1,0,3,3)", "v2": "(u,u,1,u,0,3,3,1,u)",
             "type": "I", "family": "W80,2", "params": {"alpha": -276, "beta": 10}},
            {"group": "C3xC3", "gamma": "(1,u,1,1)", "v1": "(u,u,3,0,0,3,1,3,3)", "v2": "(u,0,3,3,3,u,1,3,0)",
             "type": "I", "family": "W80,2", "params": {"alpha": -276, "beta": 10}},
            {"group": "C3xC3", "gamma": "(1,u,1,1)", "v1": "(u,u,u,u,0,0,1,1,1)", "v2": "(u,0,1,u,0,1,0,1,0)",
             "type": "I", "family": "W80,2", "params": {"alpha": -240, "beta": 1}},
            {"group": "C3xC3", "gamma": "(1,u,1,1)", "v1": "(u,u,3,0,0,3,1,3,3)", "v2": "(u,0,3,3,3,0,3,1,u)",
             "type": "I", "family": "W80,2", "params": {"alpha": -204, "beta": 10}},
        ],
    },
    "table7": {
        "title": "[56,28,10] codes in W56,1 over F2 from C13",
        "ring": "F2",
        "n": 56,
        "d": 10,
        "rows": [
            {"group": "C13", "gamma": "(0,0,0,1)", "v1": "0000000101011", "v2": "0000111011111",
             "type": "I", "family": "W56,1", "params": {"alpha": -51}},
            {"group": "C13", "gamma": "(0,0,0,1)", "v1": "0000110111111", "v2": "0101011010111",
             "type": "I", "family": "W56,1", "params": {"alpha": -38}},
            {"group": "C13", "gamma": "(0,0,0,1)", "v1": "0000001101111", "v2": "0000110100111",
             "type": "I", "family": "W56,1", "params": {"alpha": -25}},
            {"group": "C13", "gamma": "(0,0,0,1)", "v1": "0000000001111", "v2": "0011010101111",
             "type": "I", "family": "W56,1", "params": {"alpha": -38}},
            {"group": "C13", "gamma": "(0,0,0,1)", "v1": "0000000000011", "v2": "0001001011101",
             "type": "I", "family": "W56,1", "params": {"alpha": -12}},
            {"group": "C13", "gamma": "(0,0,0,1)", "v1": "0000100110111", "v2": "0000110101011",
             "type": "I", "family": "W56,1", "params": {"alpha": -38}},
            {"group": "C13", "gamma": "(0,0,0,1)", "v1": "0011011111111", "v2": "0101111011111",
             "type": "I", "family": "W56,1", "params": {"alpha": -64}},
        ],
    },
    "table8": {
        "title": "[64,32,12] codes over F2 from C15",
        "ring": "F2",
        "n": 64,
        "d": 12,
        "rows": [
            {"group": "C15", "gamma": "(0,0,0,1)", "v1": "000000000101011", "v2": "000010101000111",
             "type": "II", "family": "II"},
            {"group": "C15", "gamma": "(0,0,0,1)", "v1": "000000000001001", "v2": "000011011001111",
             "type": "II", "family": "II"},
            {"group": "C15", "gamma": "(0,0,0,1)", "v1": "000011011001111", "v2": "000100010001111",
             "type": "II", "family": "II",
             "discrepancy": {"reason": "v1 repeats the row 2 v2; v1v1* + v2v2* misses x^±1 and x^±4, so c3 and c4 fail",
                             "observed": {"self_dual": False}}},
            {"group": "C15", "gamma": "(0,0,0,1)", "v1": "000010011010011", "v2": "000110101101011",
             "type": "II", "family": "II"},
            {"group": "C15", "gamma": "(1,0,1,1)", "v1": "000000000101111", "v2": "000100101011101",
             "type": "I", "family": "W64,1", "params": {"beta": 14}},
            {"group": "C15", "gamma": "(1,0,1,1)", "v1": "000000010110011", "v2": "000010011011011",
             "type": "I", "family": "W64,1", "params": {"beta": 14}},
            {"group": "C15", "gamma": "(1,0,1,1)", "v1": "000000000010011", "v2": "000011101110111",
             "type": "I", "family": "W64,1", "params": {"beta": 14}},
            {"group": "C15", "gamma": "(1,0,1,1)", "v1": "000000000101111", "v2": "000001010011111",
             "type": "I", "family": "W64,1", "params": {"beta": 29}},
            {"group": "C15", "gamma": "(1,0,1,1)", "v1": "000000001010111", "v2": "000101000101111",
             "type": "I", "family": "W64,1", "params": {"beta": 44}},
            {"group": "C15", "gamma": "(1,0,1,1)", "v1": "000000000000111", "v2": "000101111101011",
             "type": "I", "family": "W64,1", "params": {"beta": 44}},
            {"group": "C15", "gamma": "(1,0,1,1)", "v1": "000001000101011", "v2": "001111011011111",
             "type": "I", "family": "W64,1", "params": {"beta": 59}},
            {"group": "C15", "gamma": "(1,0,1,1)", "v1": "000000000010011", "v2": "000100111111011",
             "type": "I", "family": "W64,1", "params": {"beta": 74}},
        ],
    },
}

# Extensions of table2 row 11 after psi_f4u; x has length 32 over F2+uF2
EXTENSION_TABLES = {
    "table10": {
        "title": "[68,34,12] codes in W68,2 by extending the table2 row 11 code",
        "base": ("table2", 11),
        "n": 68,
        "d": 12,
        "rows": [
            {"c": "1", "x": "(1,u,u,3,3,0,1,3,u,3,0,1,0,0,0,1,u,0,3,3,0,1,1,u,u,u,3,3,0,u,u,3)",
             "family": "W68,2", "params": {"gamma": 4, "beta": 190}},
            {"c": "1", "x": "(0,1,0,1,3,1,0,0,u,u,1,u,u,0,1,1,1,0,u,1,u,1,1,0,1,0,3,3,u,1,u,u)",
             "family": "W68,2", "params": {"gamma": 4, "beta": 192}},
            {"c": "u+1", "x": "(1,u,u,3,3,0,1,3,u,3,0,3,u,0,u,3,u,0,3,1,0,1,3,0,0,u,1,3,0,u,u,1)",
             "family": "W68,2", "params": {"gamma": 4, "beta": 204}},
            {"c": "u+1", "x": "(u,1,0,3,0,0,0,u,1,u,u,0,0,0,3,3,1,3,u,0,0,u,3,1,0,0,u,0,0,0,1,3)",
             "family": "W68,2", "params": {"gamma": 4, "beta": 208}},
            {"c": "1", "x": "(0,3,u,3,0,0,u,0,1,u,u,0,0,u,3,3,1,3,0,0,u,u,1,3,u,u,0,u,u,0,3,1)",
             "family": "W68,2", "params": {"gamma": 4, "beta": 210}},
            {"c": "u+1", "x": "(u,1,u,1,0,0,u,0,3,0,u,0,0,u,1,1,3,3,0,0,0,u,3,3,0,0,0,0,u,0,1,1)",
             "family": "W68,2", "params": {"gamma": 4, "beta": 214}},
        ],
    },
}

# Neighbors of the binary table10 codes; x is 34 zeros followed by the suffix
NEIGHBOR_TABLES = {
    "table9": {
        "title": "[68,34,12] neighbors in W68,2 of the table10 codes",
        "zero_prefix": 34,
        "discrepancy": {
            "reason": "no (psi layout, phi1 layout, frame) reading of x gives the printed family parameters",
            "observed": {"n": 68, "k": 34, "self_dual": True},
        },
        "n": 68,
        "d": 12,
        "rows": [
            {"base": ("table10", 6), "x": "1111101001010000101110100001111010",
             "family": "W68,2", "params": {"gamma": 3, "beta": 165}},
            {"base": ("table10", 6), "x": "0011101000011001110010111010000011",
             "family": "W68,2", "params": {"gamma": 3, "beta": 169}},
            {"base": ("table10", 6), "x": "0110001110010110101000100011111101",
             "family": "W68,2", "params": {"gamma": 3, "beta": 171}},
            {"base": ("table10", 6), "x": "0100010010100011000110000110001010",
             "family": "W68,2", "params": {"gamma": 3, "beta": 173}},
            {"base": ("table10", 6), "x": "0110010001110000000011011110010100",
             "family": "W68,2", "params": {"gamma": 4, "beta": 163}},
            {"base": ("table10", 6), "x": "1110111111010101100001011001111011",
             "family": "W68,2", "params": {"gamma": 4, "beta": 165}},
            {"base": ("table10", 6), "x": "1000101111011011101011010101110100",
             "family": "W68,2", "params": {"gamma": 4, "beta": 173}},
            {"base": ("table10", 6), "x": "0100101010011010111001000111111100",
             "family": "W68,2", "params": {"gamma": 4, "beta": 177}},
            {"base": ("table10", 6), "x": "1101110100111100110010000111001100",
             "family": "W68,2", "params": {"gamma": 4, "beta": 179}},
            {"base": ("table10", 6), "x": "1001010100010110110000010011000000",
             "family": "W68,2", "params": {"gamma": 4, "beta": 181}},
            {"base": ("table10", 2), "x": "1000101100010110000101111000010010",
             "family": "W68,2", "params": {"gamma": 4, "beta": 183}},
            {"base": ("table10", 6), "x": "0010111011011111100101111101000100",
             "family": "W68,2", "params": {"gamma": 4, "beta": 185}},
            {"base": ("table10", 6), "x": "1011011110010100011001011011001111",
             "family": "W68,2", "params": {"gamma": 4, "beta": 187}},
            {"base": ("table10", 6), "x": "0010010001110100011000001010000110",
             "family": "W68,2", "params": {"gamma": 4, "beta": 188}},
            {"base": ("table10", 6), "x": "1001100011010110110101011110010001",
             "family": "W68,2", "params": {"gamma": 4, "beta": 189}},
            {"base": ("table10", 6), "x": "0111110011011110010101111010001100",
             "family": "W68,2", "params": {"gamma": 4, "beta": 193}},
            {"base": ("table10", 5), "x": "0101101101011000110011101010001000",
             "family": "W68,2", "params": {"gamma": 5, "beta": 201}},
        ],
    },
}

TABLE_IDS = tuple(sorted([*CONSTRUCTION_TABLES, *EXTENSION_TABLES, *NEIGHBOR_TABLES],
                         key=lambda name: int(name.removeprefix("table"))))
