"""Genus-zero potential of the pillowcase, assembled and in closed form.

The potential is a formal function of t_0 (the unit class), t_1..t_4 (the
four corner twist classes) and q, of the shape

    F = 1/2 t_0^2 log q  +  1/4 t_0 (t_1^2 + ... + t_4^2)  +  quartic terms,

where each quartic monomial in t_1..t_4 carries a q-series.  Two
constructions are provided:

* :func:`assemble_potential` sums three-point constants and the enumerative
  four-point counts of :mod:`.orbi` with their symmetry factors;
* :func:`st_reference_potential` writes the known closed form directly in
  terms of the series f0, f1, f2.

:func:`compare_potentials` diffs the two coefficient by coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import factorial

from . import orbi, qseries
from .orbi import OrbiPoint
from .qseries import QSeries


@dataclass(frozen=True, order=True)
class Monomial:
    """Exponents (e0, e1, e2, e3, e4) of t_0^e0 t_1^e1 ... t_4^e4."""

    exponents: tuple[int, int, int, int, int]

    def __post_init__(self) -> None:
        if len(self.exponents) != 5 or any(e < 0 for e in self.exponents):
            raise ValueError(f"need 5 non-negative exponents, got {self.exponents}")

    def __str__(self) -> str:
        parts = []
        for i, e in enumerate(self.exponents):
            if e == 1:
                parts.append(f"t{i}")
            elif e > 1:
                parts.append(f"t{i}^{e}")
        return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class Potential:
    """log_term * t_0^2 log q plus a sparse map of monomials to series.

    Identically zero series are dropped at construction, so two potentials
    are equal exactly when they print the same terms.
    """

    log_term: Fraction
    terms: dict[Monomial, QSeries]
    trunc: int

    def __post_init__(self) -> None:
        kept = {
            mono: series
            for mono, series in self.terms.items()
            if any(c != 0 for c in series.coeffs)
        }
        for series in kept.values():
            if series.trunc != self.trunc:
                raise ValueError(
                    f"series truncation {series.trunc} does not match potential {self.trunc}"
                )
        object.__setattr__(self, "log_term", Fraction(self.log_term))
        object.__setattr__(self, "terms", kept)


def _quartic_monomial(ins: tuple[OrbiPoint, ...]) -> Monomial:
    exps = [0, 0, 0, 0, 0]
    for p in ins:
        exps[int(p)] += 1
    return Monomial(tuple(exps))


def assemble_potential(trunc: int) -> Potential:
    """Potential built from the counts themselves.

    Degree-two and -three data: the unit pairing contributes 1/2 t_0^2 log q
    (three orderings over 3!), and each constant-map pairing <1, D_j, D_j>
    equals 1/2, contributing 1/4 t_0 t_j^2.  Quartic data: the monomial with
    exponents e_1..e_4 receives the matching four-point count series divided
    by e_1! ... e_4!, plus a degree-zero constant -1/4 inside the bracket of
    each t_j^4 (the constant-map quartic term), which lands as -1/96 on the
    monomial.
    """
    if trunc < 1:
        raise ValueError(f"need trunc >= 1, got {trunc}")
    terms: dict[Monomial, QSeries] = {}
    pair_constant = Fraction(3, factorial(3)) * Fraction(1, 2)  # = 1/4
    for j in range(1, 5):
        exps = [0, 0, 0, 0, 0]
        exps[0], exps[j] = 1, 2
        terms[Monomial(tuple(exps))] = qseries.constant_series(pair_constant, trunc)
    for ins in combinations_with_replacement(tuple(OrbiPoint), 4):
        mono = _quartic_monomial(ins)
        weight = Fraction(1, 1)
        for e in mono.exponents[1:]:
            weight /= factorial(e)
        series = orbi.correlator_series(ins, trunc)
        if len(set(ins)) == 1:
            series = qseries.add(series, qseries.constant_series(Fraction(-1, 4), trunc))
        terms[mono] = qseries.scale(series, weight)
    return Potential(Fraction(3, factorial(3)), terms, trunc)


def st_reference_potential(trunc: int) -> Potential:
    """The closed form: f0 on t1*t2*t3*t4, f1/4 on each t_j^4, f2/6 on pairs."""
    if trunc < 1:
        raise ValueError(f"need trunc >= 1, got {trunc}")
    terms: dict[Monomial, QSeries] = {}
    for j in range(1, 5):
        exps = [0, 0, 0, 0, 0]
        exps[0], exps[j] = 1, 2
        terms[Monomial(tuple(exps))] = qseries.constant_series(Fraction(1, 4), trunc)
    terms[Monomial((0, 1, 1, 1, 1))] = qseries.f0_series(trunc)
    quarter_f1 = qseries.scale(qseries.f1_series(trunc), Fraction(1, 4))
    for j in range(1, 5):
        exps = [0, 0, 0, 0, 0]
        exps[j] = 4
        terms[Monomial(tuple(exps))] = quarter_f1
    sixth_f2 = qseries.scale(qseries.f2_series(trunc), Fraction(1, 6))
    for i in range(1, 5):
        for j in range(i + 1, 5):
            exps = [0, 0, 0, 0, 0]
            exps[i], exps[j] = 2, 2
            terms[Monomial(tuple(exps))] = sixth_f2
    return Potential(Fraction(1, 2), terms, trunc)


@dataclass(frozen=True)
class PotentialDiff:
    """One coefficient discrepancy; monomial None flags the log term."""

    monomial: Monomial | None
    degree: int | None
    lhs: Fraction
    rhs: Fraction


def compare_potentials(a: Potential, b: Potential) -> list[PotentialDiff]:
    """All coefficient discrepancies between two potentials; empty means equal.

    Truncations must match; comparing different windows is an error, not a
    partial diff.
    """
    if a.trunc != b.trunc:
        raise ValueError(f"truncation mismatch: {a.trunc} vs {b.trunc}")
    diffs: list[PotentialDiff] = []
    if a.log_term != b.log_term:
        diffs.append(PotentialDiff(None, None, a.log_term, b.log_term))
    blank = qseries.zero_series(a.trunc)
    for mono in sorted(set(a.terms) | set(b.terms)):
        sa = a.terms.get(mono, blank)
        sb = b.terms.get(mono, blank)
        for deg in range(a.trunc + 1):
            if sa.coeffs[deg] != sb.coeffs[deg]:
                diffs.append(PotentialDiff(mono, deg, sa.coeffs[deg], sb.coeffs[deg]))
    return diffs


# ---------------------------------------------------------------------------
# presentation and serialization
# ---------------------------------------------------------------------------


def _series_head(series: QSeries, max_terms: int) -> str:
    shown = []
    for i, c in enumerate(series.coeffs):
        if c == 0:
            continue
        if i == 0:
            shown.append(str(c))
        elif i == 1:
            shown.append(f"{c}*q" if c != 1 else "q")
        else:
            shown.append(f"{c}*q^{i}" if c != 1 else f"q^{i}")
        if len(shown) == max_terms:
            shown.append("...")
            break
    return " + ".join(shown) if shown else "0"


def potential_pretty(p: Potential, max_terms: int = 4) -> str:
    """Group monomials sharing a series, one bracketed series per family."""
    lines = [f"F = ({p.log_term})*t0^2*log q"]
    families: dict[tuple, list[Monomial]] = {}
    for mono, series in p.terms.items():
        families.setdefault(series.coeffs, []).append(mono)
    for coeffs in sorted(families, key=lambda c: max(families[c]), reverse=True):
        monos = " + ".join(str(m) for m in sorted(families[coeffs], reverse=True))
        head = _series_head(QSeries(coeffs), max_terms)
        lines.append(f"  + ({monos}) * [{head}]")
    return "\n".join(lines)


def potential_to_json(p: Potential) -> dict:
    return {
        "log_term": str(p.log_term),
        "terms": [
            {"monomial": list(mono.exponents), "series": qseries.to_json(p.terms[mono])}
            for mono in sorted(p.terms)
        ],
    }


def potential_from_json(obj: dict) -> Potential:
    terms = {
        Monomial(tuple(entry["monomial"])): qseries.from_json(entry["series"])
        for entry in obj["terms"]
    }
    if not terms:
        raise ValueError("a potential with no terms has no recoverable truncation")
    trunc = next(iter(terms.values())).trunc
    return Potential(Fraction(obj["log_term"]), terms, trunc)
