"""Small worked datasets used in the documentation and the test suite.

ncc: a five-apprentice subnetwork with advice (C), friendship (F), and
help (K) ties. netcs: its three-position reduction. netcsg: a ten-actor
signed component built from cooperation and competition ties. g20: country
memberships in intergovernmental bodies, as a formal context.
"""

import numpy as np

from .fca import FormalContext
from .netcore import MultiplexNetwork, RelationMatrix
from .signed import SignedMatrix

_NCC_ACTORS = ("339", "354", "357", "395", "398")
_NCC_TIES = {
    "C": (("398", "357"),),
    "F": (
        ("339", "398"),
        ("354", "395"),
        ("357", "339"),
        ("395", "339"),
        ("395", "398"),
        ("398", "357"),
    ),
    "K": (),
}


def ncc():
    slices = [
        RelationMatrix.from_ties(name, _NCC_ACTORS, ties)
        for name, ties in _NCC_TIES.items()
    ]
    return MultiplexNetwork(_NCC_ACTORS, slices)


_NETCS_ACTORS = ("2", "3", "1")
_NETCS_CELLS = {
    "C": ((1, 1, 0), (1, 1, 1), (0, 1, 1)),
    "F": ((1, 1, 0), (1, 1, 0), (0, 1, 1)),
    "K": ((0, 0, 0), (0, 1, 0), (0, 1, 0)),
}


def netcs():
    slices = [
        RelationMatrix(name, _NETCS_ACTORS, np.array(cells, dtype=bool))
        for name, cells in _NETCS_CELLS.items()
    ]
    return MultiplexNetwork(_NETCS_ACTORS, slices)


_NETCSG_ACTORS = (
    "328", "342", "352", "368", "376", "380", "391", "394", "407", "414",
)
_NETCSG_CELLS = (
    "ooooaooooo",
    "oooooopooo",
    "ooopopoopo",
    "oopooooooo",
    "ppoooooooo",
    "oopooopooo",
    "oppoopooop",
    "onoonooooo",
    "oopooooooo",
    "oooooopooo",
)


def netcsg():
    cells = [list(row) for row in _NETCSG_CELLS]
    return SignedMatrix(_NETCSG_ACTORS, cells)


_G20_OBJECTS = (
    "ARG", "AUS", "BRA", "CAN", "CHN", "FRA", "DEU", "IND", "IDN", "ITA",
    "JPN", "KOR", "MEX", "RUS", "SAU", "ZAF", "TUR", "GBR", "USA",
)
_G20_COLUMNS = {
    "P5": "0000110000000100011",
    "G4": "0010001100100000000",
    "G7": "0001011001100000011",
    "BRICS": "0010100100000101000",
    "MITKA": "0100000010011000100",
    "DAC": "0101011001110000011",
    "OECD": "0101011001111000111",
    "Cwth": "0101000100000001010",
    "N11": "0000000010011000100",
}


def g20():
    attrs = list(_G20_COLUMNS)
    incidence = [
        [_G20_COLUMNS[m][i] == "1" for m in attrs]
        for i in range(len(_G20_OBJECTS))
    ]
    return FormalContext(_G20_OBJECTS, attrs, incidence)
