# efountain/rings.py
from __future__ import annotations
import re

from sympy.polys.domains import GF, QQ, ZZ, Domain
from sympy.polys.polyerrors import NotInvertible, NotReversible

from efountain.errors import RingSpecError

# --ring=int|rational|modN
_MOD_RX = re.compile(r"^mod\s*(\d+)$", re.I)

_NAMED = {
    "int": ZZ,
    "integer": ZZ,
    "zz": ZZ,
    "rational": QQ,
    "qq": QQ,
}


def parse_ring(spec: str) -> Domain:
    s = (spec or "").strip().lower()
    if s in _NAMED:
        return _NAMED[s]
    m = _MOD_RX.match(s)
    if m:
        n = int(m.group(1))
        if n < 2:
            raise RingSpecError(f"modulus must be at least 2, got {n}")
        # GF(n) is Z/n; for composite n it is not a field
        return GF(n)
    raise RingSpecError(f"unknown ring {spec!r}; expected int, rational or modN")


def ring_label(ring: Domain) -> str:
    if ring == ZZ:
        return "int"
    if ring == QQ:
        return "rational"
    return f"mod{ring.characteristic()}"


def characteristic(ring: Domain) -> int:
    return int(ring.characteristic())


def invert(ring: Domain, x):
    """Multiplicative inverse of `x` in `ring`, or None when `x` is not a unit."""
    try:
        return ring.revert(x)
    except (NotReversible, NotInvertible, ZeroDivisionError):
        return None

