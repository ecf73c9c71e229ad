"""Constant data behind the family system.

The infinite families of empty 4-simplices of width > 1 come in two kinds:

* 29 *primitive* integer dependences w (sum 0); the member of volume V is
  the tuple w mod V, admissible exactly when no prime of V divides two
  entries of w.
* 23 *nonprimitive* rows: the member of volume V = I*k is sign*k*(I*a) + b
  mod V, where a is a rational offset with denominator I (stored here as
  the integer vector I*a) and b an integer dependence. Admissibility is a
  pair of congruence conditions on m = sign*k mod 2 and mod 3; six rows
  admit no volume at all (they parametrize hollow, never empty, simplices)
  and carry ``never_empty``.

``NONPRIMITIVE_SYMBOLIC`` repeats the nonprimitive tuples in expanded
per-entry (k-coefficient, constant) form, transcribed independently from the
same source table; a test asserts the two copies agree, guarding against
transcription slips.

``PRIMITIVE_MAX_FACETS`` lists, for the rows that have any facet volume
above 1 over admissible volumes, the maximum facet-volume vector; all other
rows max out at (1,1,1,1,1).
"""

# ---------------------------------------------------------------------------
# primitive rows (integer dependences, sum 0)

PRIMITIVE_ROWS = (
    (9, 1, -2, -3, -5),
    (9, 2, -1, -4, -6),
    (12, 3, -4, -5, -6),
    (12, 2, -3, -4, -7),
    (9, 4, -2, -3, -8),
    (12, 1, -2, -3, -8),
    (12, 3, -1, -6, -8),
    (15, 4, -5, -6, -8),
    (12, 2, -1, -4, -9),
    (10, 6, -2, -5, -9),
    (15, 1, -2, -5, -9),
    (12, 5, -3, -4, -10),
    (15, 2, -3, -4, -10),
    (6, 4, 3, -1, -12),
    (7, 5, 3, -1, -14),
    (9, 7, 1, -3, -14),
    (15, 7, -3, -5, -14),
    (8, 5, 3, -1, -15),
    (10, 6, 1, -2, -15),
    (12, 5, 2, -4, -15),
    (9, 6, 4, -1, -18),
    (9, 6, 5, -2, -18),
    (12, 9, 1, -4, -18),
    (10, 7, 4, -1, -20),
    (10, 8, 3, -1, -20),
    (10, 9, 4, -3, -20),
    (12, 10, 1, -3, -20),
    (12, 8, 5, -1, -24),
    (15, 10, 6, -1, -30),
)

# maximum facet-volume vectors over admissible volumes, for the rows where
# some facet volume exceeds 1 (the rest are all-unimodular)
PRIMITIVE_MAX_FACETS = {
    (15, 1, -2, -5, -9): (1, 1, 2, 1, 1),
    (9, 7, 1, -3, -14): (1, 1, 1, 1, 2),
    (15, 7, -3, -5, -14): (1, 1, 1, 1, 2),
    (10, 8, 3, -1, -20): (1, 1, 3, 1, 1),
    (12, 3, -4, -5, -6): (1, 1, 1, 5, 1),
    (9, 6, 5, -2, -18): (1, 1, 5, 1, 1),
    (12, 8, 5, -1, -24): (1, 1, 5, 1, 1),
    (12, 2, -3, -4, -7): (1, 1, 1, 1, 7),
    (10, 7, 4, -1, -20): (1, 7, 1, 1, 1),
    (8, 5, 3, -1, -15): (8, 1, 1, 1, 1),
    (9, 1, -2, -3, -5): (1, 1, 2, 1, 5),
    (7, 5, 3, -1, -14): (1, 5, 3, 1, 2),
}

# ---------------------------------------------------------------------------
# nonprimitive rows
#
# fields: index I, I*a (integer vector, sum I), b (integer dependence,
# sum 0), cond2 / cond3 (None = no condition, ("eq", r) or ("ne", r) on
# m = sign * (V // I)), never_empty, max facet-volume vector (None for the
# never-empty rows).

NONPRIMITIVE_ROWS = (
    # index 2
    (2, (0, 0, 1, 1, 0), (3, -1, -6, 2, 2), ("eq", 1), ("ne", 0), False, (1, 1, 1, 1, 2)),
    (2, (1, 0, 0, 0, 1), (4, -3, 1, -4, 2), ("eq", 1), None, False, (1, 3, 1, 2, 1)),
    (2, (0, 0, 1, 0, 1), (4, -2, -6, 3, 1), None, None, True, None),
    (2, (1, 0, 0, 0, 1), (2, 3, -1, -8, 4), ("eq", 1), None, False, (1, 3, 1, 2, 1)),
    (2, (0, 1, 1, 0, 0), (1, -6, 2, 6, -3), ("eq", 1), ("ne", 0), False, (1, 1, 1, 2, 1)),
    (2, (1, 0, 1, 0, 0), (6, -8, 4, -3, 1), ("eq", 1), ("ne", 0), False, (1, 2, 1, 1, 1)),
    (2, (0, 1, 0, 0, 1), (1, 6, -4, -6, 3), None, None, True, None),
    (2, (1, 0, 0, 0, 1), (4, 3, -1, -12, 6), ("eq", 1), ("ne", 0), False, (1, 1, 1, 2, 1)),
    (2, (0, 1, 0, 0, 1), (3, -1, 4, -12, 6), None, None, True, None),
    # index 4
    (4, (2, 1, 1, 0, 0), (3, -3, 1, -2, 1), ("eq", 0), ("ne", 0), False, (1, 1, 1, 2, 1)),
    (4, (0, 1, 1, 0, 2), (1, 2, -1, -4, 2), None, None, True, None),
    (4, (0, 0, 1, 2, 1), (1, -4, 1, 4, -2), None, None, True, None),
    (4, (0, 1, 1, 0, 2), (1, 3, -1, -6, 3), ("eq", 0), ("ne", 0), False, (1, 1, 1, 2, 1)),
    # index 3
    (3, (0, 0, 2, 1, 0), (-3, 2, 1, 1, -1), None, ("eq", 0), False, (3, 2, 1, 1, 1)),
    (3, (1, 0, 2, 0, 0), (3, -3, 1, -2, 1), None, ("eq", 2), False, (1, 3, 1, 2, 1)),
    (3, (0, 0, 1, 2, 0), (-3, 1, 2, 2, -2), ("eq", 1), ("eq", 0), False, (3, 1, 1, 1, 1)),
    (3, (0, 0, 1, 2, 0), (4, -2, -4, 1, 1), ("eq", 1), ("ne", 1), False, (1, 1, 1, 1, 1)),
    (3, (1, 0, 2, 0, 0), (3, -6, 2, 2, -1), ("eq", 1), ("eq", 1), False, (1, 3, 1, 1, 1)),
    (3, (1, 0, 2, 0, 0), (4, -6, 1, 2, -1), ("eq", 1), ("eq", 0), False, (1, 3, 1, 1, 1)),
    (3, (1, 0, 2, 0, 0), (4, -3, 1, -4, 2), ("eq", 1), ("eq", 0), False, (1, 3, 1, 1, 1)),
    (3, (1, 0, 2, 0, 0), (2, -1, 2, -6, 3), None, None, True, None),
    (3, (0, 0, 1, 1, 1), (1, -6, 2, 6, -3), ("eq", 1), ("eq", 2), False, (1, 3, 1, 1, 1)),
    # index 6
    (6, (1, 0, 0, 4, 1), (1, -3, 1, 2, -1), ("eq", 0), ("eq", 0), False, (1, 3, 1, 2, 1)),
)

# the same 23 tuples written out entry by entry as (k-coefficient, constant)
# pairs; independent transcription of the expanded column
NONPRIMITIVE_SYMBOLIC = (
    ((0, 3), (0, -1), (1, -6), (1, 2), (0, 2)),
    ((1, 4), (0, -3), (0, 1), (0, -4), (1, 2)),
    ((0, 4), (0, -2), (1, -6), (0, 3), (1, 1)),
    ((1, 2), (0, 3), (0, -1), (0, -8), (1, 4)),
    ((0, 1), (1, -6), (1, 2), (0, 6), (0, -3)),
    ((1, 6), (0, -8), (1, 4), (0, -3), (0, 1)),
    ((0, 1), (1, 6), (0, -4), (0, -6), (1, 3)),
    ((1, 4), (0, 3), (0, -1), (0, -12), (1, 6)),
    ((0, 3), (1, -1), (0, 4), (0, -12), (1, 6)),
    ((2, 3), (1, -3), (1, 1), (0, -2), (0, 1)),
    ((0, 1), (1, 2), (1, -1), (0, -4), (2, 2)),
    ((0, 1), (0, -4), (1, 1), (2, 4), (1, -2)),
    ((0, 1), (1, 3), (1, -1), (0, -6), (2, 3)),
    ((0, -3), (0, 2), (2, 1), (1, 1), (0, -1)),
    ((1, 3), (0, -3), (2, 1), (0, -2), (0, 1)),
    ((0, -3), (0, 1), (1, 2), (2, 2), (0, -2)),
    ((0, 4), (0, -2), (1, -4), (2, 1), (0, 1)),
    ((1, 3), (0, -6), (2, 2), (0, 2), (0, -1)),
    ((1, 4), (0, -6), (2, 1), (0, 2), (0, -1)),
    ((1, 4), (0, -3), (2, 1), (0, -4), (0, 2)),
    ((1, 2), (0, -1), (2, 2), (0, -6), (0, 3)),
    ((0, 1), (0, -6), (1, 2), (1, 6), (1, -3)),
    ((1, 1), (0, -3), (0, 1), (4, 2), (1, -1)),
)

# ---------------------------------------------------------------------------
# hollow (not necessarily empty) family shapes, exposed through
# families.hollow_generate; entries are linear forms in the parameters.

# three-parameter shapes: coefficient triples (c_alpha, c_beta, c_gamma)
HOLLOW_WIDTH1 = (
    ((1, 1, 1), (-1, 0, 0), (0, -1, 0), (0, 0, -1), (0, 0, 0)),
    ((1, 1, 0), (-1, 0, 0), (0, -1, 0), (0, 0, -1), (0, 0, 1)),
)

# two-parameter shapes: (c_alpha, c_beta, half) with half*V/2 added (those
# shapes only exist for even V when half is set anywhere)
HOLLOW_WIDTH2 = (
    ((0, 1, 0), (0, -2, 0), (1, 0, 0), (-2, 0, 0), (1, 1, 0)),
    ((0, 1, 0), (0, 1, 1), (1, 0, 0), (-1, 0, 1), (0, -2, 0)),
    ((1, 1, 0), (-1, 0, 0), (0, -1, 0), (0, 0, 1), (0, 0, 1)),
    ((1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 1), (0, 0, 1)),
    ((1, 1, 0), (-1, 0, 0), (0, -2, 0), (0, 1, 1), (0, 0, 1)),
    ((0, 1, 0), (1, -2, 0), (-1, 0, 0), (0, 1, 1), (0, 0, 1)),
)
