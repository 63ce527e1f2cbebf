"""Frozen reference values shared by the test modules."""

from fractions import Fraction as F

# <tau_d...> brackets
BRACKETS = {
    (0,): F(1, 8),
    (1,): F(3, 128),
    (1, 1): F(63, 512),
    (2,): F(15, 1024),
    (1, 1, 1): F(7221, 2048),
    (1, 2): F(8625, 32768),
    (3,): F(525, 32768),
    (2, 3): F(7949025, 2097152),
}

# genus -> (D_g, [(partition, C, D_g * C)])
GENUS_TABLES = {
    2: (32, [((1,), F(9, 32), 9)]),
    3: (1280, [((2,), F(75, 256), 375), ((1, 1), F(189, 640), 378)]),
    4: (143360, [
        ((3,), F(1225, 4096), 42875),
        ((1, 2), F(8625, 28672), 43125),
        ((1, 1, 1), F(21663, 71680), 43326),
    ]),
    5: (378470400, [
        ((4,), F(19845, 65536), 114604875),
        ((1, 3), F(14945, 49152), 115076500),
        ((2, 2), F(209275, 688128), 115101250),
        ((1, 1, 2), F(34995, 114688), 115483500),
        ((1, 1, 1, 1), F(4825971, 15769600), 115823304),
    ]),
    6: (91842150400, [
        ((5,), F(160083, 524288), 28042539525),
        ((1, 4), F(1766205, 5767168), 28126814625),
        ((2, 3), F(883225, 2883584), 28130716250),
        ((1, 1, 3), F(442715, 1441792), 28200945500),
        ((1, 2, 2), F(6198625, 20185088), 28203743750),
        ((1, 1, 1, 2), F(5768625, 18743296), 28266262500),
        ((1, 1, 1, 1, 1), F(3540311739, 11480268800), 28322493912),
    ]),
    7: (37471597363200, [
        ((6,), F(1288287, 4194304), 11509459436475),
        ((1, 5), F(8392923, 27262976), 11535653017350),
        ((2, 4), F(184659615, 599785472), 11536609447125),
        ((3, 3), F(138495805, 449839104), 11536700556500),
        ((1, 1, 4), F(92508885, 299892736), 11558985180750),
        ((1, 2, 3), F(46257505, 149946368), 11559750499500),
        ((2, 2, 2), F(4533499725, 14694744064), 11560424298750),
        ((1, 1, 1, 3), F(23168971, 74973184), 11579851705800),
        ((1, 1, 2, 2), F(2270671055, 7347372032), 11580422380500),
        ((1, 1, 1, 1, 2), F(1137113661, 3673686016), 11598559342200),
        ((1, 1, 1, 1, 1, 1), F(34568613873, 111522611200), 11615054261328),
    ]),
}

GAMMA = [F(1), F(-1, 2), F(5, 8), F(-11, 16), F(83, 128), F(-143, 256), F(625, 1024)]

# k -> {exponent tuple (p1, p2, ...): coefficient}
C_K = {
    0: {(): F(1)},
    1: {(): F(-1, 2)},
    2: {(): F(5, 8)},
    3: {(): F(-11, 16)},
    4: {(): F(83, 128), (1,): F(-27, 8)},
    5: {(): F(-143, 256), (1,): F(-81, 16)},
    6: {(): F(625, 1024), (1,): F(-639, 64), (0, 1): F(-1125, 16)},
    7: {(): F(-1843, 2048), (1,): F(25533, 128), (2,): F(-1701, 8), (0, 1): F(-19125, 32)},
}
CHAT_K = {
    0: {(): F(1)},
    1: {},
    2: {},
    3: {},
    4: {(1,): F(-27, 8)},
    5: {(1,): F(-27, 4)},
    6: {(1,): F(-45, 4), (0, 1): F(-1125, 16)},
    7: {(1,): F(783, 4), (2,): F(-1701, 8), (0, 1): F(-10125, 16)},
}

# lambda -> coefficients of P_lambda(X), lowest degree first
P_LAMBDA = {
    (1,): [F(3, 2), -1, 1],
    (2,): [F(135, 8), F(-27, 2), F(27, 2), -6, 1],
    (1, 1): [F(273, 4), -68, 38, -10, 1],
    (3,): [F(7875, 16), F(-3375, 8), F(3375, 8), -260, F(177, 2), -15, 1],
    (1, 2): [F(41121, 16), F(-23247, 8), F(15957, 8), -795, 179, -21, 1],
    (1, 1, 1): [F(-82467, 8), F(170757, 8), F(-33581, 2), F(30361, 4), F(-4109, 2), F(653, 2), -28, 1],
}

# lambda -> {power of 1/X: coefficient} for the leading terms of W_lambda
W_LEADING = {
    (1, 1): {7: F(1701, 4), 8: F(380295, 64), 9: F(832815, 16), 10: F(2935197, 8)},
    (1, 2): {9: F(388125, 16), 10: F(83804625, 128), 11: F(1336975875, 128), 12: F(131751025875, 1024)},
    (1, 1, 1): {10: F(1754703, 8)},
    (1, 1, 2): {12: F(779513625, 32)},
}

TWO_NUMBERS = {
    (1, 18, 20): "0.3163749000332518760707893046",
    (1, 19, 19): "0.3163749000332518760707893073",
}
GENUS40_SMALLEST = "0.316326705"
GENUS40_BIGGEST = "0.316963758"

# (m, d) -> <kappa_1^m tau_d>
KAPPA_BRACKETS = {
    (1, ()): F(3, 128),
    (1, (1,)): F(63, 512),
    (2, ()): F(111, 1024),
    (1, (1, 1)): F(7221, 2048),
    (2, (1,)): F(106911, 32768),
    (1, (2,)): F(8625, 32768),
    (3, ()): F(45093, 16384),
    (1, (1, 1, 1)): F(4825971, 16384),
    (2, (2,)): F(1974135, 131072),
    (1, (1, 2)): F(524925, 32768),
    (3, (1,)): F(16199169, 65536),
    (1, (3,)): F(44835, 65536),
    (4, ()): F(53483271, 262144),
    (2, (1, 1)): F(9127017, 32768),
    (1, (1, 1, 1, 1)): F(3540311739, 65536),
    (2, (1, 2)): F(1155623625, 524288),
    (1, (1, 1, 2)): F(605705625, 262144),
    (2, (3,)): F(151428375, 2097152),
    (1, (2, 2)): F(55787625, 524288),
    (3, (1, 1)): F(386376633, 8192),
    (1, (1, 3)): F(19922175, 262144),
    (3, (2,)): F(4184142525, 2097152),
    (1, (4,)): F(8831025, 4194304),
    (4, (1,)): F(171037302471, 4194304),
    (2, (1, 1, 1)): F(13555541331, 262144),
    (5, ()): F(69673098483, 2097152),
}

# genus -> (D, {(m, d): C(m; d)})
KAPPA_TABLES = {
    3: (1280, {(2, ()): F(333, 1280)}),
    4: (1146880, {(3, ()): F(135279, 573440), (2, (1,)): F(45819, 163840)}),
    5: (252313600, {
        (4, ()): F(53483271, 252313600),
        (3, (1,)): F(2314167, 9011200),
        (2, (2,)): F(131609, 458752),
        (2, (1, 1)): F(9127017, 31539200),
    }),
    6: (734737203200, {
        (5, ()): F(69673098483, 367368601600),
        (4, (1,)): F(24433900353, 104962457600),
        (3, (2,)): F(278942835, 1049624576),
        (3, (1, 1)): F(386376633, 1435033600),
        (2, (3,)): F(3365075, 11534336),
        (2, (1, 2)): F(5926275, 20185088),
        (2, (1, 1, 1)): F(13555541331, 45921075200),
    }),
    7: (399697038540800, {
        (6, ()): F(1057428386631, 6245266227200),
        (5, (1,)): F(1196989428069, 5709957693440),
        (4, (2,)): F(103748833683, 427483463680),
        (4, (1, 1)): F(2242040330133, 9084023603200),
        (3, (3,)): F(31418131, 115343360),
        (3, (1, 2)): F(80848213893, 293894881280),
        (3, (1, 1, 1)): F(6931945897497, 24981064908800),
        (2, (4,)): F(354207573, 1199570944),
        (2, (1, 3)): F(222438209, 749731840),
        (2, (2, 2)): F(4360002121, 14694744064),
        (2, (1, 1, 2)): F(3184112229, 10687086592),
        (2, (1, 1, 1, 1)): F(466903889307, 1561316556800),
    }),
}


def mpoly(terms: dict):
    """MultiplicityPolynomial from {exponents: coefficient}."""
    from bgw.series import MultiplicityPolynomial

    return MultiplicityPolynomial(terms)
