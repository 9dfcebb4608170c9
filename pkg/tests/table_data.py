"""Published transition-table values: Re(S_n) and its erf approximation for
a = 5 e^{i theta}, s = 4, lam = 2/3, as (theta/pi, re_S, approx) triples."""

TABLE_S0 = [
    ("0.30", 0.02114, 0.02101), ("0.40", 0.15648, 0.15466),
    ("0.45", 0.30653, 0.30562), ("0.48", 0.41977, 0.41944),
    ("0.49", 0.45968, 0.45951), ("0.50", 0.50000, 0.50000),
    ("0.51", 0.54032, 0.54049), ("0.52", 0.58023, 0.58056),
    ("0.55", 0.69347, 0.69438), ("0.60", 0.84352, 0.84534),
    ("0.70", 0.97886, 0.97899),
    ("-0.30", 0.00216, 0.00202), ("-0.40", 0.07660, 0.07525),
    ("-0.45", 0.23102, 0.23611), ("-0.48", 0.38280, 0.38685),
    ("-0.49", 0.44063, 0.44284), ("-0.50", 0.50000, 0.50000),
    ("-0.51", 0.55937, 0.55716), ("-0.52", 0.61720, 0.61315),
    ("-0.55", 0.76898, 0.76389), ("-0.60", 0.92340, 0.92475),
    ("-0.70", 0.99784, 0.99798),
]

TABLE_S1 = [
    ("0.35", 0.00114, 0.00114), ("0.40", 0.02157, 0.02101),
    ("0.45", 0.15510, 0.15466), ("0.48", 0.34208, 0.34213),
    ("0.49", 0.41939, 0.41944), ("0.50", 0.50000, 0.50000),
    ("0.51", 0.58061, 0.58056), ("0.52", 0.65792, 0.65787),
    ("0.55", 0.84490, 0.84534), ("0.60", 0.97843, 0.97899),
    ("0.65", 0.99889, 0.99886),
    ("-0.35", 0.00021, 0.00032), ("-0.40", 0.01128, 0.01151),
    ("-0.45", 0.12807, 0.12785), ("-0.48", 0.32480, 0.32468),
    ("-0.49", 0.41014, 0.41009), ("-0.50", 0.50000, 0.50000),
    ("-0.51", 0.58986, 0.58991), ("-0.52", 0.67520, 0.67532),
    ("-0.55", 0.87193, 0.87215), ("-0.60", 0.98872, 0.98849),
    ("-0.65", 0.99979, 0.99968),
]

SCHEDULE_S0 = ((17,), (7,))
SCHEDULE_S1 = ((17, 49), (7, 38))
