"""Reference counts for involutions avoiding one pattern of length 4.

Kept as data so computed tables can be checked against them.  Columns keep
their reference order.
"""

from __future__ import annotations

__all__ = ["TABLE_1", "TABLE_2", "TABLE_3", "GROWTH_ROW", "TABLES", "reference"]


def _rows(columns: tuple[str, ...], rows: dict[int, tuple[int, ...]]):
    return columns, {n: dict(zip(columns, r)) for n, r in rows.items()}


# |Av^I_n(beta)|, n = 5..11
TABLE_1 = _rows(
    ("1324", "1234", "4231", "2431", "1342", "2341", "3421", "2413"),
    {
        5: (21, 21, 21, 24, 24, 25, 25, 24),
        6: (51, 51, 51, 62, 62, 66, 66, 64),
        7: (126, 127, 128, 154, 156, 170, 173, 166),
        8: (321, 323, 327, 396, 406, 441, 460, 456),
        9: (820, 835, 858, 992, 1040, 1124, 1218, 1234),
        10: (2160, 2188, 2272, 2536, 2714, 2870, 3240, 3454),
        11: (5654, 5798, 6146, 6376, 7012, 7273, 8602, 9600),
    },
)

# |Av^I_n(beta)|, n = 12..20
TABLE_2 = _rows(
    ("2431", "2341", "1342", "1234", "1324", "3421", "4231", "2413"),
    {
        12: (16238, 18477, 18322, 15511, 15272, 22878, 16716, 27246),
        13: (40914, 46825, 47560, 41835, 40758, 60794, 46246, 77132),
        14: (103954, 118917, 124358, 113634, 112280, 161668, 128414, 221336),
        15: (262298, 301734, 323708, 310572, 304471, 429752, 361493, 635078),
        16: (665478, 766525, 846766, 853467, 852164, 1142758, 1020506, 1839000),
        17: (1680726, 1946293, 2208032, 2356779, 2341980, 3038173, 2913060, 5331274),
        18: (4260262, 4944614, 5777330, 6536382, 6640755, 8078606, 8335405, 15555586),
        19: (10766470, 12557685, 15082372, 18199284, 18460066, 21479469, 24067930,
             45465412),
        20: (27274444, 31900554, 39469786, 50852019, 52915999, 57113888, 69646035,
             133517130),
    },
)

# simple involutions avoiding beta, n = 5..15
TABLE_3 = _rows(
    ("2413", "2431", "3421", "1342", "2341", "4231", "1324", "1234"),
    {
        5: (0, 1, 2, 2, 2, 2, 2, 2),
        6: (0, 1, 2, 3, 3, 2, 4, 4),
        7: (0, 2, 3, 2, 3, 5, 9, 10),
        8: (0, 2, 5, 5, 5, 11, 17, 35),
        9: (0, 6, 7, 10, 10, 30, 52, 101),
        10: (0, 6, 13, 17, 17, 62, 106, 261),
        11: (0, 16, 19, 22, 22, 162, 292, 727),
        12: (0, 16, 31, 44, 44, 377, 635, 1865),
        13: (0, 45, 51, 68, 68, 973, 1753, 5127),
        14: (0, 45, 82, 127, 127, 2378, 3954, 13045),
        15: (0, 126, 135, 184, 184, 6116, 10824, 35735),
    },
)

# reference growth rates; None where unknown
GROWTH_ROW = {
    "2431": None, "2341": "2.54", "1342": "2.62", "1234": "3",
    "1324": "> 3.13, < 4.84", "3421": None, "4231": None, "2413": "3.15",
}

TABLES = {"1": TABLE_1, "2": TABLE_2, "3": TABLE_3}


def reference(table: str, pattern: str, n: int) -> int:
    """The reference value, or KeyError if the table has no such entry."""
    _, rows = TABLES[table]
    return rows[n][pattern]
