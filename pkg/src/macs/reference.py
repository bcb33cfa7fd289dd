"""Published reference tables used to anchor the counting methods.

``PUBLISHED_MAXIMAL_COUNTS[m1 - 1][m2 - 1]`` is the number of maximal
antichains in ``[m1] x [m2]`` for sizes up to 8 (OEIS A180091; the
diagonal is A171155).  ``PUBLISHED_H_FIRST_COUNTS`` is the companion
table of constrained walks whose first move is ``h``, the auxiliary
quantity of the double recurrence.
"""

PUBLISHED_MAXIMAL_COUNTS = (
    (1, 2, 3, 4, 5, 6, 7, 8),
    (2, 3, 5, 8, 12, 17, 23, 30),
    (3, 5, 9, 15, 24, 37, 55, 79),
    (4, 8, 15, 27, 46, 75, 118, 180),
    (5, 12, 24, 46, 83, 143, 237, 380),
    (6, 17, 37, 75, 143, 259, 450, 755),
    (7, 23, 55, 118, 237, 450, 817, 1429),
    (8, 30, 79, 180, 380, 755, 1429, 2599),
)

PUBLISHED_H_FIRST_COUNTS = (
    (0, 0, 0, 0, 0, 0, 0, 0),
    (1, 1, 1, 1, 1, 1, 1, 1),
    (2, 2, 3, 4, 5, 6, 7, 8),
    (3, 4, 6, 9, 13, 18, 24, 31),
    (4, 7, 11, 18, 28, 42, 61, 86),
    (5, 11, 19, 33, 55, 88, 136, 204),
    (6, 16, 31, 57, 101, 171, 279, 441),
    (7, 22, 48, 94, 176, 314, 538, 891),
)

# Per-(k, t) breakdown of the word count for the 7x7 diagonal: number of
# d letters, number of transitions, schema count, insertion count.  The
# transitionless all-d word appears as the k = 7, t = 0 row.
PUBLISHED_BREAKDOWN_7 = (
    (1, 1, 1, 1),
    (2, 1, 1, 11),
    (2, 2, 4, 1),
    (3, 1, 1, 45),
    (3, 2, 3, 9),
    (3, 3, 9, 1),
    (4, 1, 1, 84),
    (4, 2, 2, 28),
    (4, 3, 4, 7),
    (4, 4, 2, 1),
    (5, 1, 1, 70),
    (5, 2, 1, 35),
    (5, 3, 1, 15),
    (6, 1, 1, 21),
    (7, 0, 1, 1),
)
