"""Reference tables used as fixtures (labels as tabulated, two typos corrected)."""

CLIFFORD_ORBITS = [
    ("1,2,3,4,5,6,7", "IIY,ZYX,YIX,YZZ,XYX,IYZ,YXZ"),
    ("12,23,34,45,56,67,71", "ZYZ,XYI,IZY,ZXY,XIY,YZI,YXX"),
    ("13,24,35,46,57,61,72", "YIZ,XXY,ZYI,YXI,ZZY,IYX,XZY"),
    ("14,25,36,47,51,62,73", "YZX,YII,YYY,IYI,XYZ,ZIY,IXY"),
    ("123,234,345,456,567,671,712", "XYY,ZXZ,XXZ,ZZX,ZXX,YZY,XZI"),
    ("125,236,347,451,562,673,714", "YIY,XIZ,YYX,ZXI,YYZ,IZX,IYY"),
    ("135,246,357,461,572,613,724", "ZYY,XZX,XZZ,YXY,IXZ,YYI,ZIX"),
    ("124,235,346,457,561,672,713", "XXI,IIX,IXX,XIX,XII,XXX,IXI"),
    ("126,237,341,452,563,674,715", "ZII,ZZZ,IZI,IZZ,ZIZ,IIZ,ZZI"),
]

# 7-cycle of (001001) under the order-seven shift
SHIFT_CYCLE = ["001001", "110011", "100101", "111100", "010111", "011010", "101110"]

PLANES_THROUGH_YXZ = [
    ("7,16,25,34,167,257,347", "YXZ,IYX,YII,IZY,YZY,IXZ,YYX"),
    ("7,16,24,35,167,247,357", "YXZ,IYX,XXY,ZYI,YZY,ZIX,XZZ"),
    ("7,12,34,56,127,347,567", "YXZ,ZYZ,IZY,XIY,XZI,YYX,ZXX"),
    ("7,14,25,36,147,257,367", "YXZ,YZX,YII,YYY,IYY,IXZ,IZX"),
    ("7,16,23,45,167,237,457", "YXZ,IYX,XYI,ZXY,YZY,ZZZ,XIX"),
    ("7,13,25,46,137,257,467", "YXZ,YIZ,YII,YXI,IXI,IXZ,IIZ"),
    ("7,15,26,34,157,267,347", "YXZ,XYZ,ZIY,IZY,ZZI,XXX,YYX"),
    ("7,14,26,35,147,267,357", "YXZ,YZX,ZIY,ZYI,IYY,XXX,XZZ"),
    ("7,12,45,36,127,457,367", "YXZ,ZYZ,ZXY,YYY,XZI,XIX,IZX"),
    ("7,13,24,56,137,247,567", "YXZ,YIZ,XXY,XIY,IXI,ZIX,ZXX"),
    ("7,15,24,36,157,247,367", "YXZ,XYZ,XXY,YYY,ZZI,ZIX,IZX"),
    ("7,14,23,56,147,237,567", "YXZ,YZX,XYI,XIY,IYY,ZZZ,ZXX"),
    ("7,12,35,46,127,357,467", "YXZ,ZYZ,ZYI,YXI,XZI,XZZ,IIZ"),
    ("7,15,23,46,157,237,467", "YXZ,XYZ,XYI,YXI,ZZI,ZZZ,IIZ"),
    ("7,13,26,45,137,267,457", "YXZ,YIZ,ZIY,ZXY,IXI,XXX,XIX"),
]

STEINER_FIXED = [
    ("124,235,346,457,561,672,713", "XXI,IIX,IXX,XIX,XII,XXX,IXI"),
    ("126,237,341,452,563,674,715", "ZII,ZZZ,IZI,IZZ,ZIZ,IIZ,ZZI"),
]
STEINER_ORBIT_REPS = [
    ("123,147,156,246,257,345,367", "XYY,IYY,XII,XZX,IXZ,XXZ,IZX"),
    ("127,135,146,236,245,347,567", "XZI,ZYY,YXY,XIZ,IZZ,YYX,ZXX"),
    ("126,134,157,235,247,367,456", "ZII,IZI,ZZI,IIX,ZIX,IZX,ZZX"),
]

BIJECTION = [
    ("7,16,25,34,167,257,347", "YYXZ"),
    ("7,16,24,35,167,247,357", "YIYX"),
    ("7,12,34,56,127,347,567", "YIZY"),
    ("7,14,25,36,147,257,367", "YYII"),
    ("7,16,23,45,167,237,457", "IYZY"),
    ("7,13,25,46,137,257,467", "IIXZ"),
    ("7,15,26,34,157,267,347", "IYYX"),
    ("7,14,26,35,147,267,357", "XXYY"),
    ("7,12,45,36,127,457,367", "XXZX"),
    ("7,13,24,56,137,247,567", "XZXI"),
    ("7,15,24,36,157,247,367", "ZZZX"),
    ("7,14,23,56,147,237,567", "ZZYY"),
    ("7,12,35,46,127,357,467", "ZXIZ"),
    ("7,15,23,46,157,237,467", "ZXXI"),
    ("7,13,26,45,137,267,457", "XZIZ"),
    ("123,147,156,246,257,345,367", "XXII"),
    ("127,135,146,236,245,347,567", "ZIZZ"),
    ("126,134,157,235,247,367,456", "IIIX"),
    ("124,137,156,236,257,345,467", "IIIZ"),
    ("124,235,346,457,561,672,371", "XIII"),
    ("126,237,341,452,563,674,715", "ZIII"),
]
SHIFTED_EXAMPLE = ("1,27,36,45,127,136,145", "YIIY")

BETA_LABEL_PAIRS = [
    ("123", "7"), ("237", "1"), ("137", "2"), ("127", "3"),
    ("14", "156"), ("15", "146"), ("16", "145"), ("24", "256"), ("25", "246"), ("26", "245"),
    ("34", "356"), ("35", "346"), ("36", "345"), ("47", "567"), ("57", "467"), ("67", "457"),
]

BETA_OPERATOR_PAIRS = (
    "IIZ:ZZY IIY:ZZZ IXI:ZYX IXX:ZYI IZZ:ZIY IZY:ZIZ IYI:ZXX IYX:ZXI "
    "XII:YZX XIX:YZI XXZ:YYY XXY:YYZ XZI:YIX XZX:YII XYZ:YXY YXZ:XYY"
).split()

KLEIN_L = [
    ("XII,XYY,IYY,XZX,IXZ,XXZ,IZX", "XXII"),
    ("XXX,ZXZ,YIY,XZZ,YYI,ZZX,IYY", "XXXX"),
    ("IXI,XXZ,XIZ,YXY,ZIX,ZXX,YIY", "XIXI"),
    ("XXI,ZZX,YYX,IXZ,ZYY,YZY,XIZ", "XXXI"),
    ("IIX,ZXX,ZXI,YYI,XZX,XZI,YYX", "XIIX"),
    ("IXX,YZY,YYZ,ZIX,XZZ,XYY,ZXI", "XIXX"),
    ("XIX,XZI,IZX,ZYY,YXY,ZXZ,YYZ", "XXIX"),
    ("IIX,ZII,IZI,ZZI,ZIX,IZX,ZZX", "IIIX"),
    ("IXX,ZZZ,IZZ,ZII,ZYY,IYY,ZXX", "IIXX"),
    ("XIX,IZI,ZIZ,ZZZ,XZX,YIY,YZY", "IXIX"),
    ("XII,IZZ,IIZ,IZI,XZZ,XIZ,XZI", "IXII"),
    ("XXX,ZIZ,ZZI,IZZ,YXY,YYX,XYY", "IXXX"),
    ("IXI,IIZ,ZII,ZIZ,IXZ,ZXI,ZXZ", "IIXI"),
    ("XXI,ZZI,ZZZ,IIZ,YYI,YYZ,XXZ", "IXXI"),
    ("XXI,IIX,IXX,XIX,XII,XXX,IXI", "XIII"),
]
KLEIN_Z_SPECIAL = ("ZII,ZZZ,IZI,IZZ,ZIZ,IIZ,ZZI", "ZIII")

OVOID = "YXZY,YYII,IZXX,IZXZ,YZIY,IXXI,IXYY,ZIZI,XIZI".split(",")
# a reference spread as tabulated; two entries are wrong (YXZ->ZXZ, IXX->IIX)
SPREAD_TABULATED = [
    "XZY,ZYY,YXI,YXY,ZYI,XZI,IIY",
    "YII,IYY,YYY,IZX,YZX,YXZ,IXZ",
    "ZXX,IXX,ZII,IYZ,ZZY,IZY,ZYZ",
    "YXZ,IXI,ZIZ,YIX,XXY,XIY,YXX",
    "ZIY,ZXI,IXY,YYX,XYZ,YZZ,XZX",
    "XXI,YYI,ZZI,XXZ,YYZ,IIZ,ZZZ",
    "XYY,ZYX,YIZ,IZZ,ZXY,YZI,XXX",
    "ZZX,ZIX,IZI,XZZ,YIY,XIZ,YZY",
    "IYX,XYI,IXX,XYX,XIX,XII,IYI",
]
SPREAD_CORRECTIONS = {3: ("YXZ", "ZXZ"), 8: ("IXX", "IIX")}

CANONICAL_PENTAD = ["XXXX", "XIII", "IXII", "IIXI", "IIIX"]
# tabulated with IXX in the last edge; IXI is the only point that makes it a pentagram
CANONICAL_PENTAGRAM = [
    "XXX,ZZX,ZXZ,XZZ", "XXX,IIX,XII,IXI", "XZZ,IIZ,XII,IZI", "ZII,ZZX,IIX,IZI", "ZXZ,IIZ,ZII,IXI",
]
CANONICAL_MISPRINT = (4, "IXI", "IXX")

SECOND_PENTAD = ["XIII", "XXXX", "IXXI", "IIXI", "IIXX"]
SECOND_PENTAGRAM = [
    "XXX,YYI,IYY,ZXZ", "XXX,XXI,IXI,IXX", "ZXZ,ZII,IXI,IIZ", "ZZZ,YYI,XXI,IIZ", "ZZZ,IYY,ZII,IXX",
]

BETA_PENTAD = ["IIIX", "ZZXI", "ZXZI", "XXXX", "XZZI"]
BETA_PENTAGRAM = [
    "ZII,IZI,IIX,ZZX", "ZYX,ZZY,ZXZ,ZII", "YZX,ZZY,IZI,XZZ", "XXX,ZXZ,XZZ,ZZX", "ZYX,YZX,IIX,XXX",
]

ANTI_FLAG_EXAMPLE = [
    ["IXXX", "XXXX", "XIXI", "XIIX", "XIXX"],
    ["IXXX", "XXXX", "XIXI", "IIIX", "IIXX"],
    ["IXXX", "XXXX", "IIXI", "XIIX", "IIXX"],
    ["IXXX", "XXXX", "IIXI", "IIIX", "XIXX"],
]
QUADRANGLE_EXAMPLE = [
    ["IXXX", "XXII", "XIIX", "XIXI", "XIII"],
    ["XXXX", "IXII", "IIXI", "IIIX", "XIII"],
    ["XXXX", "IXII", "XIIX", "XIXI", "XIII"],
]

HEXAGON_SEED = ["IXIX", "IIZI", "IXZX"]
HEXAGON_SEED_PENCIL = ["XIX", "XZX", "IZI"]
PLANE_STAR = ["XXII", "XXXX", "IIXX"]
PLANE_STAR_POINT = "IYY"

# the seven anticommuting generators, in index order
GENERATOR_ORDER = ["IIY", "ZYX", "YIX", "YZZ", "XYX", "IYZ", "YXZ"]
