"""Hypothesis checks for the main construction.

A group qualifies for the witness construction when it is an odd-order-p,
non-abelian, monolithic p-group whose maximal subgroups are all non-abelian
and satisfy [Z(M), g] <= Z(G) for every g outside M.  A variant replaces the
maximal-subgroup condition with C_G(Z(Phi(G))) = Phi(G).

Diagnostics (Z_2 abelian, Z(M) <= Z_2(G), rank equalities, ...) are reported
but never asserted: they hold for the interesting examples yet are not part
of the hypotheses, so a qualifying group is free to violate them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import presentation as pc
from . import structure as st
from .tables import get_tables


@dataclass(frozen=True)
class HypothesisReport:
    p_odd: bool
    nonabelian: bool
    monolithic: bool
    all_maximals_nonabelian: bool
    zm_condition: bool
    zm_counterexample: tuple  # (maximal index, m, g) or None
    corollary_centralizer_condition: bool
    diagnostics: dict

    @property
    def theorem_applicable(self):
        return (
            self.p_odd
            and self.nonabelian
            and self.monolithic
            and self.all_maximals_nonabelian
            and self.zm_condition
        )

    @property
    def corollary_applicable(self):
        return (
            self.p_odd
            and self.monolithic
            and self.corollary_centralizer_condition
            and self.zm_condition
        )

    def to_dict(self, P):
        ce = None
        if self.zm_counterexample is not None:
            mi, m, g = self.zm_counterexample
            ce = {"maximal": mi, "m": st.word_str(P, m), "g": st.word_str(P, g)}
        return {
            "p_odd": self.p_odd,
            "nonabelian": self.nonabelian,
            "monolithic": self.monolithic,
            "all_maximals_nonabelian": self.all_maximals_nonabelian,
            "zm_condition": self.zm_condition,
            "zm_counterexample": ce,
            "corollary_centralizer_condition": self.corollary_centralizer_condition,
            "theorem_applicable": self.theorem_applicable,
            "corollary_applicable": self.corollary_applicable,
            "diagnostics": dict(self.diagnostics),
        }


def is_monolithic(P):
    """True iff Z(G) is cyclic of order p (unique minimal normal subgroup)."""
    return st.center(P).order == P.p


def check_zm_condition(P):
    """[Z(M), g] <= Z(G) for every maximal M and every g outside M.

    Returns (verdict, first violating (maximal index, m, g) or None),
    scanning maximals, then m, then g in canonical order.
    """
    t = get_tables(P)
    zmask = st.center(P).mask()
    for mi, M in enumerate(st.maximal_subgroups(P)):
        zm = st.center_of(P, M)
        outside = np.flatnonzero(~M.mask())
        for m in zm.elements:
            if t.full is not None:
                col = t.comm_col(t.index[m])[outside]
                bad = np.flatnonzero(~zmask[col])
                if bad.size:
                    g = t.elements[int(outside[bad[0]])]
                    return False, (mi, m, g)
            else:
                for gi in outside:
                    g = t.elements[int(gi)]
                    if not zmask[t.index[pc.comm(P, m, g)]]:
                        return False, (mi, m, g)
    return True, None


@lru_cache(maxsize=None)
def _full_report(P):
    t = get_tables(P)
    Z = st.center(P)
    Z2 = st.second_center(P)
    F = st.frattini(P)
    maxls = st.maximal_subgroups(P)
    zm_ok, zm_ce = check_zm_condition(P)

    z_phi = st.center_of(P, F)
    cent_z_phi = st.centralizer(P, z_phi)

    qf = st.quotient_facts(P, Z2, Z)
    pth = t.pth_power()
    omega_set_mask = Z2.mask() & (pth == 0)
    exceeds = bool(np.any(omega_set_mask & ~Z.mask()))

    diagnostics = {
        "z2_abelian": st.is_abelian(P, Z2),
        "z2_in_z_phi": Z2.element_set <= z_phi.element_set,
        "zm_in_z2": [st.center_of(P, M).element_set <= Z2.element_set for M in maxls],
        "z2_mod_z_elementary": qf["elementary_abelian"],
        "rank_z2_mod_z": qf["rank"],
        "rank_g": st.rank(P),
        "omega1_z2_exceeds_center": exceeds,
    }
    return HypothesisReport(
        p_odd=P.p % 2 == 1,
        nonabelian=not st.is_abelian(P),
        monolithic=is_monolithic(P),
        all_maximals_nonabelian=all(not st.is_abelian(P, M) for M in maxls),
        zm_condition=zm_ok,
        zm_counterexample=zm_ce,
        corollary_centralizer_condition=cent_z_phi == F,
        diagnostics=diagnostics,
    )


def check_theorem_hypotheses(P):
    return _full_report(P)


def check_corollary_hypotheses(P):
    return _full_report(P)
