"""Data and helper functions used in the tests."""
from collections import defaultdict
from fractions import Fraction

from equal_biquadrates import point

# Inputs (a, b, c, A, B) of the three-variable worked examples.
THREE_1_2_3 = (1, 2, 3, 4, 0)
THREE_1_1_61 = (1, 1, 61, 2, 0)
THREE_1_1_1 = (1, 1, 1, -10, 0)
# Inputs (a, b, c, d, A, B, D, F) of the four-variable worked examples.
FOUR_1_1_1_19 = (1, 1, 1, 19, 2, 0, 4, 0)
FOUR_1_1000 = (1, 1000, 1000, 1000, 2, 0, 3, 0)
FOUR_1_1_1_1 = (1, 1, 1, 1, 3, 0, 7, 0)

GEN_1_2_3 = point(Fraction(3625, 16), Fraction(46525, 64))
GEN_1_1_61 = point(
    Fraction(2613213887380271422, 612348332222929),
    Fraction(-35386313782867169078293498, 15152971591283964136217),
)
GEN_1_1_1 = point(450, 6210)
GEN_1_1_1_19 = point(
    Fraction(8832851584572306, 887637201025),
    Fraction(-260518741182457285866354, 836282950759698625),
)
GEN_1_1000 = point(1000, 26000)
GEN_1_1_1_1 = point(328, 5608)

# Published identities as (coefficients, x-side, y-side), in the order of the equation as written.
ID_1_2_3 = ((1, 2, 3), (5169, 459, 1281), (1447, 4181, 2441))
ID_1_1_61 = (
    (1, 1, 61),
    (183488684443575775594469, 120584031079948181257985, 73244546207202190584444),
    (235298807112488175416275, 68773908411035781436179, 21434423538289790762638),
)
ID_1_1_1_P = ((1, 1, 1), (19, 74, 117), (21, 64, 119))
ID_1_1_1_2P = ((1, 1, 1), (17948013, 43856069, 9765331), (43676991, 18127091, 15963647))
ID_1_1_1_3P = (
    (1, 1, 1),
    (8828891360220313, 15099060491941827, 11501813568364388),
    (14828780671704361, 8558611539982847, 12155858463560286),
)
ID_1_1_1_19 = (
    (1, 1, 1, 19),
    (2923081816382045453549, 1490120403735220625479, 1445379398594646027434, 1221674372891773037209),
    (121805029473902594771, 1311156383172922233299, 1355897388313496831344, 1579602414016369821569),
)
ID_1_1000 = ((1, 1000, 1000, 1000), (8, 24, 25, 29), (44, 23, 27, 28))
ID_1_1_1_1_P = ((1, 1, 1, 1), (271, 289, 330, 494), (207, 371, 412, 430))
ID_1_1_1_1_2P = (
    (1, 1, 1, 1),
    (325492151, 12726487787, 21179177332, 54989935512),
    (50485552058, 38084556422, 29631866877, 4178891303),
)
ID_1_1_1_1_3P = (
    (1, 1, 1, 1),
    (463645068132430760337286, 261021177580969389283009, 152006097445436236205389, 284054223096696376105091),
    (268647953377091441004128, 66024062825630069949851, 42991017309903083127769, 479051337852035695438249),
)


def side_key(coeffs, values):
    """Multiset view of one side: sorted values per coefficient value."""
    groups = defaultdict(list)
    for a, v in zip(coeffs, values):
        groups[a].append(v)
    return tuple(sorted((a, tuple(sorted(vs))) for a, vs in groups.items()))


def identity_key(coeffs, x, y):
    """Order-free view of an identity, independent of which side is written first."""
    return frozenset({side_key(coeffs, x), side_key(coeffs, y)})


def solution_key(spec, solution):
    """identity_key of a derived solution."""
    return identity_key(spec.coeffs, solution.x, solution.y)


def fourth_power_collisions(limit):
    """Brute-force all 0 ≤ a ≤ b ≤ c ≤ limit and return groups of triples sharing a⁴ + b⁴ + c⁴."""
    powers = [v**4 for v in range(limit + 1)]
    sums = defaultdict(list)
    for a in range(limit + 1):
        for b in range(a, limit + 1):
            partial = powers[a] + powers[b]
            for c in range(b, limit + 1):
                sums[partial + powers[c]].append((a, b, c))
    return [triples for triples in sums.values() if len(triples) > 1]


def perturb_digit(value, position):
    """Change one decimal digit of a positive integer (counted from the right)."""
    digits = list(str(value))
    index = len(digits) - 1 - position
    digits[index] = "1" if digits[index] != "1" else "2"
    return int("".join(digits))


def generate_lines(count):
    lines = []
    for i in range(count):
        lines.append(f"Line {i + 1}")
    return lines
