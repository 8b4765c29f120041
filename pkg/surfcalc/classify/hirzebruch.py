"""Anticanonical decompositions on the Hirzebruch surfaces F_e.

Pic(F_e) has basis C0 (C0² = -e) and F (F² = 0, C0·F = 1), and
-K = 2C0 + (e+2)F. A class aC0 + bF of an irreducible curve is C0 itself or
satisfies b >= ae >= 0.
"""

import logging

from surfcalc.classify.reports import FeCandidate, FeVerdict
from surfcalc.errors import InvalidParams


logger = logging.getLogger(__name__)


def passes_irreducibility(a: int, b: int, e: int) -> bool:
    if (a, b) == (1, 0):
        return True
    return (a, b) != (0, 0) and a >= 0 and b >= a * e >= 0


def fe_check(e: int) -> FeVerdict:
    """Scan every split -K = M1 + M2 into classes passing the constraint.

    The verdict is true when no split has M1, M2 generating Pic(F_e).

    Raises:
        InvalidParams: Unless e = 0 or e >= 2.
    """
    if e < 0 or e == 1:
        raise InvalidParams(f"F_e check needs e = 0 or e >= 2, got {e}")
    total = (2, e + 2)
    candidates: list[FeCandidate] = []
    for a1 in range(total[0] + 1):
        for b1 in range(total[1] + 1):
            m1, m2 = (a1, b1), (total[0] - a1, total[1] - b1)
            if m1 > m2:
                continue
            if not (passes_irreducibility(*m1, e) and passes_irreducibility(*m2, e)):
                continue
            determinant = m1[0] * m2[1] - m1[1] * m2[0]
            candidates.append(
                FeCandidate(
                    m1=m1,
                    m2=m2,
                    generates=abs(determinant) == 1,
                    balanced=m1[0] == m2[0] == 1 and min(m1[1], m2[1]) >= e,
                )
            )
    verdict = FeVerdict(
        e=e,
        no_generating_decomposition=not any(c.generates for c in candidates),
        candidates=candidates,
    )
    logger.debug(f"F_{e}: {len(candidates)} admissible split(s)")
    return verdict
