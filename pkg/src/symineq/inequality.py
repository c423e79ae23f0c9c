"""Exact evaluation of the subset-product inequality family.

The main bound: for positive a_1..a_n and any k-subset S, write prod(a_S)
for the product and sum(a_S) for the sum over S. Then

    sum_{|S|=k} prod(a_S)/sum(a_S)  <=  (n/k) * e_k(a) / (a_1+...+a_n)

with equality for k = 1 and k = n identically, and exactly at uniform
vectors for 1 < k < n. Supporting checks: the reciprocal bound
(sum 1/a_i >= sum of reciprocals of the (n-1)-wise averages), the pairwise
product bound (the k = 2 case written as a direct double sum), and the
rearrangement identity behind the proof. All arithmetic is exact; a
negative slack is raised as `Violation`, never returned in a report.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations

from symineq.exact import PositiveVector, render_scalar
from symineq.symfun import elementary_symmetric


class Statement(Enum):
    MAIN_THEOREM = "MainTheorem"
    RECIPROCAL_LEMMA = "ReciprocalLemma"
    PAIRWISE_LEMMA = "PairwiseLemma"
    PROOF_IDENTITY = "ProofIdentity"


class EqualityClass(Enum):
    BOUNDARY_ALWAYS_EQUAL = "BoundaryAlwaysEqual"
    UNIFORM_EQUAL = "UniformEqual"
    STRICT = "Strict"


class Violation(Exception):
    """An exact check came out the wrong way; carries the witness for forensics."""

    def __init__(self, statement: Statement, v: PositiveVector, k: int,
                 lhs: Fraction, rhs: Fraction):
        self.statement = statement
        self.v = v
        self.k = k
        self.lhs = lhs
        self.rhs = rhs
        super().__init__(
            f"{statement.value} violated at n={len(v)} k={k}: "
            f"lhs={render_scalar(lhs)} rhs={render_scalar(rhs)} "
            f"slack={render_scalar(rhs - lhs)} v={v!r}"
        )


@dataclass(frozen=True)
class InequalityReport:
    n: int
    k: int
    statement: Statement
    lhs: Fraction
    rhs: Fraction
    slack: Fraction
    is_equality: bool


def report_to_record(report: InequalityReport) -> dict:
    """Flat record with canonical fraction strings, for the CLI renderers."""
    return {
        "n": report.n,
        "k": report.k,
        "statement": report.statement.value,
        "lhs": render_scalar(report.lhs),
        "rhs": render_scalar(report.rhs),
        "slack": render_scalar(report.slack),
        "is_equality": report.is_equality,
    }


def report_from_record(record: dict) -> InequalityReport:
    from symineq.exact import parse_scalar

    return InequalityReport(
        n=int(record["n"]),
        k=int(record["k"]),
        statement=Statement(record["statement"]),
        lhs=parse_scalar(record["lhs"]),
        rhs=parse_scalar(record["rhs"]),
        slack=parse_scalar(record["slack"]),
        is_equality=bool(record["is_equality"]),
    )


def _check_k(k: int, n: int) -> None:
    if not 0 < k <= n:
        raise ValueError(f"k must satisfy 0 < k <= n, got k={k} n={n}")


def _report(statement: Statement, v: PositiveVector, k: int,
            lhs: Fraction, rhs: Fraction) -> InequalityReport:
    slack = rhs - lhs
    if slack < 0:
        raise Violation(statement, v, k, lhs, rhs)
    return InequalityReport(
        n=len(v), k=k, statement=statement,
        lhs=lhs, rhs=rhs, slack=slack, is_equality=slack == 0,
    )


# --------------------------------------------------------------------------
# Main bound
# --------------------------------------------------------------------------

def lhs_main(v: PositiveVector, k: int) -> Fraction:
    """Sum over all k-subsets of subset_product / subset_sum, exactly."""
    n = len(v)
    _check_k(k, n)
    a = v.entries
    out = Fraction(0)
    for s in combinations(range(n), k):
        prod = Fraction(1)
        tot = Fraction(0)
        for i in s:
            prod *= a[i]
            tot += a[i]
        out += prod / tot
    return out


def rhs_main(v: PositiveVector, k: int) -> Fraction:
    """(n/k) * e_k(v) / sum(v), with e_k from the dynamic program."""
    n = len(v)
    _check_k(k, n)
    return Fraction(n, k) * elementary_symmetric(v, k) / v.total()


def check_main(v: PositiveVector, k: int) -> InequalityReport:
    """Evaluate both sides of the main bound and report the exact slack.

    n = 1 is allowed: both sides are 1 and the slack is 0. k = 1 and k = n
    are always equalities on any vector (both sides coincide algebraically);
    for 1 < k < n equality holds exactly when all entries are equal.
    """
    return _report(Statement.MAIN_THEOREM, v, k, lhs_main(v, k), rhs_main(v, k))


# --------------------------------------------------------------------------
# Supporting bounds
# --------------------------------------------------------------------------

def check_reciprocal_lemma(v: PositiveVector) -> InequalityReport:
    """Sum of reciprocals >= sum of reciprocals of the (n-1)-wise averages.

    The large side is sum(1/a_i), so the report is oriented with
    lhs = sum_j (n-1)/(sum(v) - a_j) and rhs = sum(1/a_i), keeping
    slack = rhs - lhs >= 0 like every other report. k is stored as n-1,
    the cardinality of the averaged subsets.
    """
    n = len(v)
    if n < 2:
        raise ValueError(f"need n >= 2, got n={n}")
    total = v.total()
    averages_side = sum(((n - 1) / (total - a) for a in v), Fraction(0))
    reciprocal_side = sum((1 / a for a in v), Fraction(0))
    return _report(Statement.RECIPROCAL_LEMMA, v, n - 1, averages_side, reciprocal_side)


def check_pairwise_lemma(v: PositiveVector) -> InequalityReport:
    """The k = 2 bound by its direct double-sum formula.

    sum_{i<j} a_i*a_j/(a_i+a_j) <= n/(2*sum(v)) * sum_{i<j} a_i*a_j,
    written as literal loops so it stays an independent cross-check of
    check_main(v, 2); the two must agree field-for-field.
    """
    n = len(v)
    if n < 2:
        raise ValueError(f"need n >= 2, got n={n}")
    a = v.entries
    lhs = Fraction(0)
    pair_products = Fraction(0)
    for i in range(n):
        for j in range(i + 1, n):
            lhs += a[i] * a[j] / (a[i] + a[j])
            pair_products += a[i] * a[j]
    rhs = Fraction(n) * pair_products / (2 * v.total())
    return _report(Statement.PAIRWISE_LEMMA, v, 2, lhs, rhs)


# --------------------------------------------------------------------------
# Proof identity and equality classification
# --------------------------------------------------------------------------

def normalize(v: PositiveVector) -> tuple[PositiveVector, Fraction]:
    """Rescale v to unit sum; returns (normalized vector, original sum)."""
    total = v.total()
    return PositiveVector(tuple(a / total for a in v)), total


def proof_identity(v: PositiveVector, k: int) -> tuple[Fraction, Fraction]:
    """Both sides of the rearrangement identity, computed independently.

    On the unit-sum rescaling w of v (done internally; the recorded scale is
    sum(v), see `normalize`):

      left  = k * sum_{|S|=k}   prod(w_S) * (1 - sum(w_S)) / sum(w_S)
      right = k * sum_{|S|=k+1} sum_{|T|=k, T subset S} prod(w_S) / sum(w_T)

    left enumerates k-subsets, right enumerates (k+1)-subsets and their
    k-sub-subsets; the contract is left == right exactly.
    """
    n = len(v)
    if not 0 < k < n:
        raise ValueError(f"k must satisfy 0 < k < n, got k={k} n={n}")
    w, _ = normalize(v)
    a = w.entries

    left = Fraction(0)
    for s in combinations(range(n), k):
        prod = Fraction(1)
        tot = Fraction(0)
        for i in s:
            prod *= a[i]
            tot += a[i]
        left += prod * (1 - tot) / tot
    left *= k

    right = Fraction(0)
    for s in combinations(range(n), k + 1):
        prod = Fraction(1)
        for i in s:
            prod *= a[i]
        for t in combinations(s, k):
            right += prod / sum((a[i] for i in t), Fraction(0))
    right *= k

    return left, right


def check_proof_identity(v: PositiveVector, k: int) -> InequalityReport:
    """Wrap proof_identity in a report; unequal sides are a Violation."""
    left, right = proof_identity(v, k)
    if left != right:
        raise Violation(Statement.PROOF_IDENTITY, v, k, left, right)
    return _report(Statement.PROOF_IDENTITY, v, k, left, right)


def classify_equality(v: PositiveVector, k: int) -> EqualityClass:
    """Where this (v, k) sits on the equality locus of the main bound.

    Boundary k (1 or n) is an identity for every vector; interior k is an
    equality exactly for uniform vectors. Agrees with check_main's
    is_equality flag in every case.
    """
    _check_k(k, len(v))
    if k == 1 or k == len(v):
        return EqualityClass.BOUNDARY_ALWAYS_EQUAL
    if all(a == v[0] for a in v):
        return EqualityClass.UNIFORM_EQUAL
    return EqualityClass.STRICT
