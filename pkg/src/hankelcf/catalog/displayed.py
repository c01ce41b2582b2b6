"""Leading levels as printed next to each general pattern.

Keys are ("a", j) or ("b", j); values are polynomials, or callables of r for
parameterized entries.  Only levels actually printed are listed.
"""
from __future__ import annotations

from fractions import Fraction as Fr

from ..contfrac import X

DISPLAYED: dict[str, dict] = {
    "Thm1.1": {
        ("b", 1): 1 - X, ("a", 2): -X ** 3, ("b", 2): 1 - 2 * X - 4 * X ** 2,
        ("a", 3): -9 * X ** 3, ("b", 3): 1 - 5 * X, ("a", 4): -4 * X ** 2, ("b", 4): 1 - 7 * X,
        ("a", 5): -75 * X ** 3, ("b", 5): 1 - 6 * X - 36 * X ** 2, ("a", 6): -147 * X ** 3,
        ("b", 6): 1 - 11 * X, ("a", 7): -16 * X ** 2, ("b", 7): 1 - 13 * X,
    },
    "F1": {("a", 2): lambda r: -r * X ** 2, ("a", 3): lambda r: -2 * (r + 1) * X ** 2,
           ("a", 4): lambda r: -3 * (r + 2) * X ** 2},
    "F2": {
        ("a", 1): lambda r: 1, ("b", 1): lambda r: 1 - r * X,
        ("a", 2): lambda r: -2 * r * (r + 1) * X ** 2, ("b", 2): lambda r: 1 - (5 * r + 8) * X,
        # printed as "- (-12(r+2)(r+3)x^2)"
        ("a", 3): lambda r: 12 * (r + 2) * (r + 3) * X ** 2, ("b", 3): lambda r: 1 - (9 * r + 32) * X,
    },
    "F3": {("a", 1): lambda r: r, ("b", 1): lambda r: 1 - (2 + 3 * r) * X,
           ("a", 2): lambda r: -6 * (r + 2) * (r + 1) * X ** 2, ("b", 2): lambda r: 1 - (18 + 7 * r) * X},
    "F4": {("a", 2): -2 * X ** 2, ("a", 3): -6 * X ** 2, ("a", 4): -12 * X ** 2},
    "F5": {("b", 1): 1 - 2 * X, ("a", 2): -12 * X ** 2, ("b", 2): 1 - 18 * X,
           ("a", 3): -240 * X ** 2, ("b", 3): 1 - 50 * X},
    "F6": {("a", 1): 2, ("b", 1): 1 - 8 * X, ("a", 2): -72 * X ** 2, ("b", 2): 1 - 32 * X,
           ("a", 3): -600 * X ** 2, ("b", 3): 1 - 72 * X},
    "F7": {("b", 1): 1 - X, ("a", 2): -X ** 2, ("b", 2): 1 - 2 * X, ("a", 3): -3 * X ** 2,
           ("b", 3): 1 - 3 * X, ("a", 4): -6 * X ** 2, ("b", 4): 1 - 4 * X},
    "F8": {
        ("a", 1): lambda r: X, ("b", 1): lambda r: 1 - (3 * r + 2) * X ** 2,
        ("a", 2): lambda r: -6 * (r + 2) * (r + 1) * X ** 4, ("b", 2): lambda r: 1 - (7 * r + 18) * X ** 2,
        ("a", 3): lambda r: -20 * (r + 4) * (r + 3) * X ** 4, ("b", 3): lambda r: 1 - (11 * r + 50) * X ** 2,
    },
    "F9": {("b", 1): 1 - 2 * X ** 2, ("a", 2): -12 * X ** 4, ("b", 2): 1 - 18 * X ** 2,
           ("a", 3): -240 * X ** 4, ("b", 3): 1 - 50 * X ** 2},
    "F10": {
        ("b", 1): 1 - 2 * X, ("a", 2): -X ** 2, ("b", 2): 1 - 4 * X, ("a", 3): -18 * X ** 3,
        ("b", 3): 1 - 4 * X - 16 * X ** 2, ("a", 4): -50 * X ** 3, ("b", 4): 1 - 8 * X,
        ("a", 5): -9 * X ** 2, ("b", 5): 1 - 10 * X, ("a", 6): -196 * X ** 3,
        ("b", 6): 1 - 8 * X - 64 * X ** 2, ("a", 7): -324 * X ** 3, ("b", 7): 1 - 14 * X,
    },
    "F11": {("a", 1): 2 * X, ("b", 1): 1 - 8 * X ** 2, ("a", 2): -72 * X ** 4,
            ("b", 2): 1 - 32 * X ** 2, ("a", 3): -600 * X ** 4, ("b", 3): 1 - 72 * X ** 2},
    "F12": {("a", 2): -Fr(1, 3) * X ** 2, ("a", 3): -Fr(1, 15) * X ** 2, ("a", 4): -Fr(1, 35) * X ** 2},
    "F13": {("b", 1): 1 - Fr(1, 3) * X, ("a", 2): -Fr(1, 45) * X ** 2, ("b", 2): 1 - Fr(2, 21) * X,
            ("a", 3): -Fr(1, 2205) * X ** 2, ("b", 3): 1 - Fr(2, 77) * X},
    "F14": {("a", 1): Fr(1, 3) * X, ("b", 1): 1 - Fr(2, 5) * X ** 2, ("a", 2): -Fr(1, 525) * X ** 4,
            ("b", 2): 1 - Fr(2, 45) * X ** 2, ("a", 3): -Fr(1, 6237) * X ** 4,
            ("b", 3): 1 - Fr(2, 99) * X ** 2},
    "F15": {("a", 1): X, ("b", 1): 1 - Fr(1, 3) * X ** 2, ("a", 2): -Fr(1, 45) * X ** 4,
            ("b", 2): 1 - Fr(2, 21) * X ** 2, ("a", 3): -Fr(1, 2205) * X ** 4,
            ("b", 3): 1 - Fr(2, 77) * X ** 2, ("a", 4): -Fr(1, 14157) * X ** 4,
            ("b", 4): 1 - Fr(2, 165) * X ** 2},
    "F16": {("b", 1): 1 - Fr(1, 2) * X, ("a", 2): -Fr(1, 12) * X ** 2, ("a", 3): -Fr(1, 60) * X ** 2,
            ("a", 4): -Fr(1, 140) * X ** 2},
    "F17": {("b", 1): 1 - X, ("a", 2): Fr(1, 2) * X ** 2, ("b", 2): 1 + Fr(2, 3) * X,
            ("a", 3): Fr(1, 36) * X ** 2, ("b", 3): 1 - Fr(4, 15) * X,
            ("a", 4): Fr(1, 100) * X ** 2, ("b", 4): 1 + Fr(6, 35) * X},
    "F18": {("a", 1): Fr(1, 2), ("b", 1): 1 - Fr(2, 3) * X, ("a", 2): Fr(1, 36) * X ** 2,
            ("b", 2): 1 + Fr(4, 15) * X, ("a", 3): Fr(1, 100) * X ** 2, ("b", 3): 1 - Fr(6, 35) * X,
            ("a", 4): Fr(1, 196) * X ** 2, ("b", 4): 1 + Fr(8, 63) * X},
    "F19": {("a", 1): Fr(1, 3), ("b", 1): 1 - Fr(5, 8) * X, ("a", 2): -Fr(3, 320) * X ** 2,
            ("b", 2): 1 + Fr(13, 72) * X, ("a", 3): -Fr(16, 2835) * X, ("b", 3): 1 - Fr(25, 288) * X},
    "F20": {("a", 1): Fr(5, 24), ("b", 1): 1 - Fr(16, 25) * X, ("a", 2): Fr(11, 3750) * X ** 2,
            ("b", 2): 1 + Fr(432, 1925) * X, ("a", 3): Fr(475, 142296) * X ** 2,
            ("b", 3): 1 - Fr(640, 4389) * X},
    "F21": {("a", 1): Fr(1, 3), ("a", 2): -Fr(2, 5) * X ** 2, ("a", 3): -Fr(1, 210) * X ** 2,
            ("a", 4): -Fr(5, 126) * X ** 2},
    "F22": {("a", 1): Fr(1, 3), ("b", 1): 1 - Fr(2, 5) * X, ("a", 2): -Fr(1, 525) * X ** 2,
            ("b", 2): 1 - Fr(2, 45) * X, ("a", 3): -Fr(1, 6237) * X ** 2, ("b", 3): 1 - Fr(2, 99) * X},
    "F23": {("a", 1): Fr(2, 15), ("b", 1): 1 - Fr(17, 42) * X, ("a", 2): -Fr(1, 5292) * X ** 2,
            ("b", 2): 1 - Fr(101, 2310) * X, ("a", 3): -Fr(56, 1061775) * X ** 2,
            ("b", 3): 1 - Fr(73, 4620) * X},
    "F24": {("a", 1): Fr(17, 315), ("b", 1): 1 - Fr(62, 153) * X, ("a", 2): -Fr(26, 1287495) * X ** 2,
            ("b", 2): 1 - Fr(1150, 25857) * X},
}

# first values stated beside a general pattern when they differ from the
# printed fraction itself
STATED_FIRST_VALUES: dict[str, dict] = {
    "F3": {("a", 1): lambda r: r * X, ("b", 0): lambda r: 1},
    "F20": {("b", 0): Fr(1, 3)},
}
