"""Printed tensor-coefficient expansions of the named invariants.

Keys are monomials: tuples of (multi-index, power) pairs, where the
multi-index counts how many of each variable appears among the tensor
slots.  Values are integer coefficients.  Generated mechanically; the
test suite cross-validates every entry against the contraction engine.
"""

I4_23 = {
    (((0, 3), 1), ((1, 2), 1), ((2, 1), 1), ((3, 0), 1)): -12,
    (((1, 2), 3), ((3, 0), 1)): 8,
    (((0, 3), 2), ((3, 0), 2)): 2,
    (((1, 2), 2), ((2, 1), 2)): -6,
    (((0, 3), 1), ((2, 1), 3)): 8,
}

I2_24 = {
    (((0, 4), 1), ((4, 0), 1)): 2,
    (((1, 3), 1), ((3, 1), 1)): -8,
    (((2, 2), 2),): 6,
}

I3_24 = {
    (((0, 4), 1), ((2, 2), 1), ((4, 0), 1)): 6,
    (((1, 3), 2), ((4, 0), 1)): -6,
    (((1, 3), 1), ((2, 2), 1), ((3, 1), 1)): 12,
    (((0, 4), 1), ((3, 1), 2)): -6,
    (((2, 2), 3),): -6,
}

D24_PRINTED = {
    (((1, 3), 3), ((2, 2), 1), ((3, 1), 1), ((4, 0), 1)): 864,
    (((0, 4), 1), ((1, 3), 1), ((2, 2), 2), ((3, 1), 1), ((4, 0), 1)): -1440,
    (((0, 4), 2), ((2, 2), 1), ((3, 1), 2), ((4, 0), 1)): 432,
    (((0, 4), 1), ((1, 3), 2), ((3, 1), 2), ((4, 0), 1)): -48,
    (((1, 3), 2), ((2, 2), 3), ((4, 0), 1)): -432,
    (((0, 4), 1), ((2, 2), 4), ((4, 0), 1)): 648,
    (((0, 4), 2), ((1, 3), 1), ((3, 1), 1), ((4, 0), 2)): -96,
    (((0, 4), 1), ((1, 3), 2), ((2, 2), 1), ((4, 0), 2)): 432,
    (((0, 4), 2), ((2, 2), 2), ((4, 0), 2)): -144,
    (((1, 3), 4), ((4, 0), 2)): -216,
    (((0, 4), 3), ((4, 0), 3)): 8,
    (((1, 3), 2), ((2, 2), 2), ((3, 1), 2)): 288,
    (((0, 4), 1), ((2, 2), 3), ((3, 1), 2)): -432,
    (((0, 4), 1), ((1, 3), 1), ((2, 2), 1), ((3, 1), 3)): 864,
    (((1, 3), 3), ((3, 1), 3)): -512,
    (((0, 4), 2), ((3, 1), 4)): -216,
}

I4_25 = {
    (((0, 5), 1), ((1, 4), 1), ((4, 1), 1), ((5, 0), 1)): -20,
    (((0, 5), 1), ((2, 3), 1), ((3, 2), 1), ((5, 0), 1)): 8,
    (((1, 4), 2), ((3, 2), 1), ((5, 0), 1)): 32,
    (((1, 4), 1), ((2, 3), 2), ((5, 0), 1)): -24,
    (((0, 5), 2), ((5, 0), 2)): 2,
    (((1, 4), 1), ((2, 3), 1), ((3, 2), 1), ((4, 1), 1)): -152,
    (((0, 5), 1), ((3, 2), 2), ((4, 1), 1)): -24,
    (((2, 3), 3), ((4, 1), 1)): 96,
    (((0, 5), 1), ((2, 3), 1), ((4, 1), 2)): 32,
    (((1, 4), 2), ((4, 1), 2)): 18,
    (((2, 3), 2), ((3, 2), 2)): -64,
    (((1, 4), 1), ((3, 2), 3)): 96,
}

I4_33_PRINTED = {
    (((0, 0, 3), 1), ((0, 2, 1), 1), ((1, 2, 0), 1), ((3, 0, 0), 1)): 6,
    (((0, 1, 2), 2), ((1, 2, 0), 1), ((3, 0, 0), 1)): -6,
    (((0, 0, 3), 1), ((0, 3, 0), 1), ((1, 1, 1), 1), ((3, 0, 0), 1)): -6,
    (((0, 1, 2), 1), ((0, 2, 1), 1), ((1, 1, 1), 1), ((3, 0, 0), 1)): 6,
    (((0, 1, 2), 1), ((0, 3, 0), 1), ((1, 0, 2), 1), ((3, 0, 0), 1)): 6,
    (((0, 2, 1), 2), ((1, 0, 2), 1), ((3, 0, 0), 1)): -6,
    (((0, 0, 3), 1), ((0, 3, 0), 1), ((2, 0, 1), 1), ((2, 1, 0), 1)): 6,
    (((0, 1, 2), 1), ((0, 2, 1), 1), ((2, 0, 1), 1), ((2, 1, 0), 1)): -6,
    (((0, 0, 3), 1), ((1, 1, 1), 1), ((1, 2, 0), 1), ((2, 1, 0), 1)): 6,
    (((0, 1, 2), 1), ((1, 0, 2), 1), ((1, 2, 0), 1), ((2, 1, 0), 1)): -6,
    (((0, 2, 1), 1), ((1, 0, 2), 1), ((1, 1, 1), 1), ((2, 1, 0), 1)): 18,
    (((0, 1, 2), 1), ((1, 1, 1), 2), ((2, 1, 0), 1)): -12,
    (((0, 3, 0), 1), ((1, 0, 2), 2), ((2, 1, 0), 1)): -6,
    (((0, 0, 3), 1), ((0, 2, 1), 1), ((2, 1, 0), 2)): -6,
    (((0, 1, 2), 2), ((2, 1, 0), 2)): 6,
    (((0, 1, 2), 1), ((1, 1, 1), 1), ((1, 2, 0), 1), ((2, 0, 1), 1)): 18,
    (((0, 2, 1), 1), ((1, 0, 2), 1), ((1, 2, 0), 1), ((2, 0, 1), 1)): -6,
    (((0, 0, 3), 1), ((1, 2, 0), 2), ((2, 0, 1), 1)): -6,
    (((0, 3, 0), 1), ((1, 0, 2), 1), ((1, 1, 1), 1), ((2, 0, 1), 1)): 6,
    (((0, 2, 1), 1), ((1, 1, 1), 2), ((2, 0, 1), 1)): -12,
    (((0, 1, 2), 1), ((0, 3, 0), 1), ((2, 0, 1), 2)): -6,
    (((0, 2, 1), 2), ((2, 0, 1), 2)): 6,
    (((1, 0, 2), 1), ((1, 1, 1), 2), ((1, 2, 0), 1)): -12,
    (((1, 0, 2), 2), ((1, 2, 0), 2)): 6,
    (((1, 1, 1), 4),): 6,
}

I6_33 = {
    (((0, 0, 3), 2), ((0, 3, 0), 1), ((1, 2, 0), 1), ((2, 1, 0), 1), ((3, 0, 0), 1)): 36,
    (((0, 0, 3), 1), ((0, 1, 2), 1), ((0, 2, 1), 1), ((1, 2, 0), 1), ((2, 1, 0), 1), ((3, 0, 0), 1)): -108,
    (((0, 1, 2), 3), ((1, 2, 0), 1), ((2, 1, 0), 1), ((3, 0, 0), 1)): 72,
    (((0, 0, 3), 1), ((0, 1, 2), 1), ((0, 3, 0), 1), ((1, 1, 1), 1), ((2, 1, 0), 1), ((3, 0, 0), 1)): -72,
    (((0, 1, 2), 2), ((0, 2, 1), 1), ((1, 1, 1), 1), ((2, 1, 0), 1), ((3, 0, 0), 1)): -72,
    (((0, 0, 3), 1), ((0, 2, 1), 2), ((1, 1, 1), 1), ((2, 1, 0), 1), ((3, 0, 0), 1)): 144,
    (((0, 0, 3), 1), ((0, 2, 1), 1), ((0, 3, 0), 1), ((1, 0, 2), 1), ((2, 1, 0), 1), ((3, 0, 0), 1)): -36,
    (((0, 1, 2), 2), ((0, 3, 0), 1), ((1, 0, 2), 1), ((2, 1, 0), 1), ((3, 0, 0), 1)): 72,
    (((0, 1, 2), 1), ((0, 2, 1), 2), ((1, 0, 2), 1), ((2, 1, 0), 1), ((3, 0, 0), 1)): -36,
    (((0, 0, 3), 1), ((0, 1, 2), 1), ((0, 3, 0), 1), ((1, 2, 0), 1), ((2, 0, 1), 1), ((3, 0, 0), 1)): -36,
    (((0, 1, 2), 2), ((0, 2, 1), 1), ((1, 2, 0), 1), ((2, 0, 1), 1), ((3, 0, 0), 1)): -36,
    (((0, 0, 3), 1), ((0, 2, 1), 2), ((1, 2, 0), 1), ((2, 0, 1), 1), ((3, 0, 0), 1)): 72,
    (((0, 0, 3), 1), ((0, 2, 1), 1), ((0, 3, 0), 1), ((1, 1, 1), 1), ((2, 0, 1), 1), ((3, 0, 0), 1)): -72,
    (((0, 1, 2), 2), ((0, 3, 0), 1), ((1, 1, 1), 1), ((2, 0, 1), 1), ((3, 0, 0), 1)): 144,
    (((0, 1, 2), 1), ((0, 2, 1), 2), ((1, 1, 1), 1), ((2, 0, 1), 1), ((3, 0, 0), 1)): -72,
    (((0, 1, 2), 1), ((0, 2, 1), 1), ((0, 3, 0), 1), ((1, 0, 2), 1), ((2, 0, 1), 1), ((3, 0, 0), 1)): -108,
    (((0, 0, 3), 1), ((0, 3, 0), 2), ((1, 0, 2), 1), ((2, 0, 1), 1), ((3, 0, 0), 1)): 36,
    (((0, 2, 1), 3), ((1, 0, 2), 1), ((2, 0, 1), 1), ((3, 0, 0), 1)): 72,
    (((0, 0, 3), 1), ((0, 3, 0), 1), ((1, 0, 2), 1), ((1, 1, 1), 1), ((1, 2, 0), 1), ((3, 0, 0), 1)): -72,
    (((0, 1, 2), 1), ((0, 2, 1), 1), ((1, 0, 2), 1), ((1, 1, 1), 1), ((1, 2, 0), 1), ((3, 0, 0), 1)): 360,
    (((0, 0, 3), 1), ((0, 2, 1), 1), ((1, 1, 1), 2), ((1, 2, 0), 1), ((3, 0, 0), 1)): -216,
    (((0, 1, 2), 2), ((1, 1, 1), 2), ((1, 2, 0), 1), ((3, 0, 0), 1)): -72,
    (((0, 1, 2), 1), ((0, 3, 0), 1), ((1, 0, 2), 2), ((1, 2, 0), 1), ((3, 0, 0), 1)): 72,
    (((0, 2, 1), 2), ((1, 0, 2), 2), ((1, 2, 0), 1), ((3, 0, 0), 1)): -144,
    (((0, 0, 3), 1), ((0, 1, 2), 1), ((1, 1, 1), 1), ((1, 2, 0), 2), ((3, 0, 0), 1)): 144,
    (((0, 0, 3), 1), ((0, 2, 1), 1), ((1, 0, 2), 1), ((1, 2, 0), 2), ((3, 0, 0), 1)): 72,
    (((0, 1, 2), 2), ((1, 0, 2), 1), ((1, 2, 0), 2), ((3, 0, 0), 1)): -144,
    (((0, 0, 3), 2), ((1, 2, 0), 3), ((3, 0, 0), 1)): -24,
    (((0, 2, 1), 1), ((0, 3, 0), 1), ((1, 0, 2), 2), ((1, 1, 1), 1), ((3, 0, 0), 1)): 144,
    (((0, 1, 2), 1), ((0, 3, 0), 1), ((1, 0, 2), 1), ((1, 1, 1), 2), ((3, 0, 0), 1)): -216,
    (((0, 2, 1), 2), ((1, 0, 2), 1), ((1, 1, 1), 2), ((3, 0, 0), 1)): -72,
    (((0, 0, 3), 1), ((0, 3, 0), 1), ((1, 1, 1), 3), ((3, 0, 0), 1)): 120,
    (((0, 1, 2), 1), ((0, 2, 1), 1), ((1, 1, 1), 3), ((3, 0, 0), 1)): 72,
    (((0, 3, 0), 2), ((1, 0, 2), 3), ((3, 0, 0), 1)): -24,
    (((0, 0, 3), 1), ((0, 1, 2), 1), ((0, 2, 1), 1), ((0, 3, 0), 1), ((3, 0, 0), 2)): 36,
    (((0, 1, 2), 3), ((0, 3, 0), 1), ((3, 0, 0), 2)): -24,
    (((0, 0, 3), 2), ((0, 3, 0), 2), ((3, 0, 0), 2)): -6,
    (((0, 1, 2), 2), ((0, 2, 1), 2), ((3, 0, 0), 2)): 18,
    (((0, 0, 3), 1), ((0, 2, 1), 3), ((3, 0, 0), 2)): -24,
    (((0, 0, 3), 1), ((0, 2, 1), 1), ((1, 1, 1), 1), ((1, 2, 0), 1), ((2, 0, 1), 1), ((2, 1, 0), 1)): 360,
    (((0, 1, 2), 2), ((1, 1, 1), 1), ((1, 2, 0), 1), ((2, 0, 1), 1), ((2, 1, 0), 1)): -216,
    (((0, 0, 3), 1), ((0, 3, 0), 1), ((1, 0, 2), 1), ((1, 2, 0), 1), ((2, 0, 1), 1), ((2, 1, 0), 1)): -108,
    (((0, 1, 2), 1), ((0, 2, 1), 1), ((1, 0, 2), 1), ((1, 2, 0), 1), ((2, 0, 1), 1), ((2, 1, 0), 1)): 36,
    (((0, 0, 3), 1), ((0, 1, 2), 1), ((1, 2, 0), 2), ((2, 0, 1), 1), ((2, 1, 0), 1)): -36,
    (((0, 1, 2), 1), ((0, 3, 0), 1), ((1, 0, 2), 1), ((1, 1, 1), 1), ((2, 0, 1), 1), ((2, 1, 0), 1)): 360,
    (((0, 2, 1), 2), ((1, 0, 2), 1), ((1, 1, 1), 1), ((2, 0, 1), 1), ((2, 1, 0), 1)): -216,
    (((0, 0, 3), 1), ((0, 3, 0), 1), ((1, 1, 1), 2), ((2, 0, 1), 1), ((2, 1, 0), 1)): -216,
    (((0, 1, 2), 1), ((0, 2, 1), 1), ((1, 1, 1), 2), ((2, 0, 1), 1), ((2, 1, 0), 1)): 72,
    (((0, 2, 1), 1), ((0, 3, 0), 1), ((1, 0, 2), 2), ((2, 0, 1), 1), ((2, 1, 0), 1)): -36,
    (((0, 0, 3), 1), ((0, 2, 1), 1), ((0, 3, 0), 1), ((2, 0, 1), 2), ((2, 1, 0), 1)): 72,
    (((0, 1, 2), 2), ((0, 3, 0), 1), ((2, 0, 1), 2), ((2, 1, 0), 1)): -144,
    (((0, 1, 2), 1), ((0, 2, 1), 2), ((2, 0, 1), 2), ((2, 1, 0), 1)): 72,
    (((0, 2, 1), 1), ((1, 0, 2), 2), ((1, 1, 1), 1), ((1, 2, 0), 1), ((2, 1, 0), 1)): -216,
    (((0, 1, 2), 1), ((1, 0, 2), 1), ((1, 1, 1), 2), ((1, 2, 0), 1), ((2, 1, 0), 1)): 72,
    (((0, 0, 3), 1), ((1, 1, 1), 3), ((1, 2, 0), 1), ((2, 1, 0), 1)): 72,
    (((0, 3, 0), 1), ((1, 0, 2), 3), ((1, 2, 0), 1), ((2, 1, 0), 1)): 72,
    (((0, 0, 3), 1), ((1, 0, 2), 1), ((1, 1, 1), 1), ((1, 2, 0), 2), ((2, 1, 0), 1)): -72,
    (((0, 1, 2), 1), ((1, 0, 2), 2), ((1, 2, 0), 2), ((2, 1, 0), 1)): 72,
    (((0, 3, 0), 1), ((1, 0, 2), 2), ((1, 1, 1), 2), ((2, 1, 0), 1)): -72,
    (((0, 2, 1), 1), ((1, 0, 2), 1), ((1, 1, 1), 3), ((2, 1, 0), 1)): 216,
    (((0, 1, 2), 1), ((1, 1, 1), 4), ((2, 1, 0), 1)): -144,
    (((0, 0, 3), 1), ((0, 1, 2), 1), ((0, 3, 0), 1), ((2, 0, 1), 1), ((2, 1, 0), 2)): 72,
    (((0, 1, 2), 2), ((0, 2, 1), 1), ((2, 0, 1), 1), ((2, 1, 0), 2)): 72,
    (((0, 0, 3), 1), ((0, 2, 1), 2), ((2, 0, 1), 1), ((2, 1, 0), 2)): -144,
    (((0, 0, 3), 1), ((0, 1, 2), 1), ((1, 1, 1), 1), ((1, 2, 0), 1), ((2, 1, 0), 2)): -72,
    (((0, 0, 3), 1), ((0, 2, 1), 1), ((1, 0, 2), 1), ((1, 2, 0), 1), ((2, 1, 0), 2)): -36,
    (((0, 1, 2), 2), ((1, 0, 2), 1), ((1, 2, 0), 1), ((2, 1, 0), 2)): 72,
    (((0, 0, 3), 2), ((1, 2, 0), 2), ((2, 1, 0), 2)): 18,
    (((0, 0, 3), 1), ((0, 3, 0), 1), ((1, 0, 2), 1), ((1, 1, 1), 1), ((2, 1, 0), 2)): 144,
    (((0, 1, 2), 1), ((0, 2, 1), 1), ((1, 0, 2), 1), ((1, 1, 1), 1), ((2, 1, 0), 2)): -216,
    (((0, 0, 3), 1), ((0, 2, 1), 1), ((1, 1, 1), 2), ((2, 1, 0), 2)): -72,
    (((0, 1, 2), 2), ((1, 1, 1), 2), ((2, 1, 0), 2)): 144,
    (((0, 1, 2), 1), ((0, 3, 0), 1), ((1, 0, 2), 2), ((2, 1, 0), 2)): -144,
    (((0, 2, 1), 2), ((1, 0, 2), 2), ((2, 1, 0), 2)): 162,
    (((0, 0, 3), 2), ((0, 3, 0), 1), ((2, 1, 0), 3)): -24,
    (((0, 0, 3), 1), ((0, 1, 2), 1), ((0, 2, 1), 1), ((2, 1, 0), 3)): 72,
    (((0, 1, 2), 3), ((2, 1, 0), 3)): -48,
    (((0, 3, 0), 1), ((1, 0, 2), 2), ((1, 1, 1), 1), ((1, 2, 0), 1), ((2, 0, 1), 1)): -72,
    (((0, 2, 1), 1), ((1, 0, 2), 1), ((1, 1, 1), 2), ((1, 2, 0), 1), ((2, 0, 1), 1)): 72,
    (((0, 1, 2), 1), ((1, 1, 1), 3), ((1, 2, 0), 1), ((2, 0, 1), 1)): 216,
    (((0, 1, 2), 1), ((1, 0, 2), 1), ((1, 1, 1), 1), ((1, 2, 0), 2), ((2, 0, 1), 1)): -216,
    (((0, 0, 3), 1), ((1, 1, 1), 2), ((1, 2, 0), 2), ((2, 0, 1), 1)): -72,
    (((0, 2, 1), 1), ((1, 0, 2), 2), ((1, 2, 0), 2), ((2, 0, 1), 1)): 72,
    (((0, 0, 3), 1), ((1, 0, 2), 1), ((1, 2, 0), 3), ((2, 0, 1), 1)): 72,
    (((0, 3, 0), 1), ((1, 0, 2), 1), ((1, 1, 1), 3), ((2, 0, 1), 1)): 72,
    (((0, 2, 1), 1), ((1, 1, 1), 4), ((2, 0, 1), 1)): -144,
    (((0, 0, 3), 1), ((0, 3, 0), 1), ((1, 1, 1), 1), ((1, 2, 0), 1), ((2, 0, 1), 2)): 144,
    (((0, 1, 2), 1), ((0, 2, 1), 1), ((1, 1, 1), 1), ((1, 2, 0), 1), ((2, 0, 1), 2)): -216,
    (((0, 1, 2), 1), ((0, 3, 0), 1), ((1, 0, 2), 1), ((1, 2, 0), 1), ((2, 0, 1), 2)): -36,
    (((0, 2, 1), 2), ((1, 0, 2), 1), ((1, 2, 0), 1), ((2, 0, 1), 2)): 72,
    (((0, 0, 3), 1), ((0, 2, 1), 1), ((1, 2, 0), 2), ((2, 0, 1), 2)): -144,
    (((0, 1, 2), 2), ((1, 2, 0), 2), ((2, 0, 1), 2)): 162,
    (((0, 2, 1), 1), ((0, 3, 0), 1), ((1, 0, 2), 1), ((1, 1, 1), 1), ((2, 0, 1), 2)): -72,
    (((0, 1, 2), 1), ((0, 3, 0), 1), ((1, 1, 1), 2), ((2, 0, 1), 2)): -72,
    (((0, 2, 1), 2), ((1, 1, 1), 2), ((2, 0, 1), 2)): 144,
    (((0, 3, 0), 2), ((1, 0, 2), 2), ((2, 0, 1), 2)): 18,
    (((0, 1, 2), 1), ((0, 2, 1), 1), ((0, 3, 0), 1), ((2, 0, 1), 3)): 72,
    (((0, 0, 3), 1), ((0, 3, 0), 2), ((2, 0, 1), 3)): -24,
    (((0, 2, 1), 3), ((2, 0, 1), 3)): -48,
    (((1, 0, 2), 1), ((1, 1, 1), 4), ((1, 2, 0), 1)): -144,
    (((1, 0, 2), 2), ((1, 1, 1), 2), ((1, 2, 0), 2)): 144,
    (((1, 0, 2), 3), ((1, 2, 0), 3)): -48,
    (((1, 1, 1), 6),): 48,
}
