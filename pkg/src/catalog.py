"""The four Fano threefolds of Picard number one that cover Fano-Enriques threefolds.

Asserted values are stored next to each model so that a regression in the
series engine shows up as a data mismatch.
"""

import logging
from dataclasses import dataclass

from covers import FanoInput, cover_invariants, euler_cover
from varieties import (
    WciModel, etale_cover_model, euler_characteristic, fano_index,
    minus_k_cubed,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FanoRecord:
    name: str
    model: WciModel
    asserted_r: int
    asserted_k3: int
    asserted_euler: int
    description: str


@dataclass(frozen=True)
class Table1Row:
    name: str
    h_y_cubed: int
    h_c2: int
    h11: int
    h12: int

    def values(self):
        return (self.h_y_cubed, self.h_c2, self.h11, self.h12)


TABLE1_HEADERS = ["name", "H3", "Hc2", "h11", "h12"]

_FAMILIES = (
    FanoRecord(
        name="X1",
        model=WciModel((1, 1, 1, 1, 1, 2), (2, 4)),
        asserted_r=1, asserted_k3=4, asserted_euler=-56,
        description="complete intersection of a quadric and a quartic in P(1,1,1,1,1,2)",
    ),
    FanoRecord(
        name="X2",
        model=WciModel((1,) * 7, (2, 2, 2)),
        asserted_r=1, asserted_k3=8, asserted_euler=-24,
        description="complete intersection of three quadrics in P^6",
    ),
    FanoRecord(
        name="X3",
        model=WciModel((1, 1, 1, 1, 2), (4,)),
        asserted_r=2, asserted_k3=16, asserted_euler=-16,
        description="hypersurface of degree 4 in P(1,1,1,1,2)",
    ),
    FanoRecord(
        name="X4",
        model=WciModel((1,) * 6, (2, 2)),
        asserted_r=2, asserted_k3=32, asserted_euler=0,
        description="complete intersection of two quadrics in P^5",
    ),
)


def builtin_families():
    return list(_FAMILIES)


def family_names():
    return [record.name for record in _FAMILIES]


def family(name):
    for record in _FAMILIES:
        if record.name == name:
            return record
    raise ValueError(
        f"unknown family {name!r}; choose one of {', '.join(family_names())}"
    )


def consistency_report(record):
    """Map each asserted field to its (asserted, computed) pair."""
    m = record.model
    report = {
        "r": (record.asserted_r, fano_index(m)),
        "k3": (record.asserted_k3, minus_k_cubed(m)),
        "euler": (record.asserted_euler, euler_characteristic(m)),
    }
    for field, (asserted, computed) in report.items():
        if asserted != computed:
            logger.warning(
                "%s: asserted %s = %s but the model gives %s",
                record.name, field, asserted, computed,
            )
    return report


def fano_input(record, h2_x=1):
    """Covers input built from the model's computed invariants."""
    m = record.model
    return FanoInput(
        euler_x=int(euler_characteristic(m)),
        k3=int(minus_k_cubed(m)),
        index_r=fano_index(m),
        h2_x=h2_x,
    )


def table1():
    rows = []
    for record in _FAMILIES:
        inv = cover_invariants(fano_input(record))
        rows.append(Table1Row(record.name, *inv.table_row()))
    return rows


def etale_cover(record):
    """(model of the etale cover, its Euler number, 2 e(Y)) for one family."""
    m = record.model
    cover = etale_cover_model(m, fano_index(m))
    return cover, euler_characteristic(cover), 2 * euler_cover(fano_input(record))
