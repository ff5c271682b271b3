"""Cross-verification engine.

``cross_verify`` runs every applicable Bernoulli method over an index range
and compares each value against the series oracle by exact rational
equality.  ``identity_suite`` exercises the Bell-polynomial identities
(closed forms, rescaling, EGF coefficient extraction) against the
partition-sum evaluator on canonical and seeded random arguments.

Mismatches are data, not errors: they land in the report, tallied as
"unexpected" unless their method is on the caller's known-discrepancy list.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .bell import (
    bell_partition_sum,
    bell_reciprocal_args,
    bell_scaling_identity_lhs_rhs,
    bell_zero_one,
)
from .bernoulli import Method, bernoulli, supports
from .exact import format_rational
from .series import bell_egf_coeff, bernoulli_series
from .stirling import StirlingTable

IDENTITY_ZERO_ONE = "zero-one"
IDENTITY_RECIPROCAL = "reciprocal"
IDENTITY_SCALING = "scaling"
IDENTITY_EGF = "egf"


@dataclass(frozen=True)
class ReportEntry:
    """One (n, method) check.  `value` is None for identity rows, which
    aggregate several argument instances and have no single rational value."""

    n: int
    method: str
    value: Fraction | None
    agrees_with_oracle: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "method": self.method,
            "value": None if self.value is None else format_rational(self.value),
            "agrees_with_oracle": self.agrees_with_oracle,
        }


@dataclass(frozen=True)
class VerificationReport:
    max_n: int
    entries: tuple[ReportEntry, ...]
    checked: int
    mismatches: tuple[tuple[int, str], ...]
    known_discrepancies: tuple[tuple[int, str], ...]
    # (identity, instances checked, instances passed); only identity_suite fills this
    identity_counts: tuple[tuple[str, int, int], ...] = field(default=())

    @property
    def ok(self) -> bool:
        """True when there is no unexpected mismatch."""
        return not self.mismatches

    def summary(self) -> dict:
        out = {
            "checked": self.checked,
            "mismatches": [[n, m] for n, m in self.mismatches],
            "known_discrepancies": [[n, m] for n, m in self.known_discrepancies],
        }
        if self.identity_counts:
            out["identities"] = {
                name: {"checked": c, "passed": p}
                for name, c, p in self.identity_counts
            }
        return out

    def to_dict(self) -> dict:
        return {
            "max_n": self.max_n,
            "entries": [e.to_dict() for e in self.entries],
            "summary": self.summary(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    def to_table(self) -> str:
        """Human-readable table plus a summary block."""
        lines = ["n method value agrees"]
        for e in self.entries:
            value = "-" if e.value is None else format_rational(e.value)
            lines.append(
                "%d %s %s %s" % (e.n, e.method, value, "yes" if e.agrees_with_oracle else "NO")
            )
        lines.append("")
        lines.append("checked: %d" % self.checked)
        for name, count, passed in self.identity_counts:
            lines.append("identity %s: %d/%d passed" % (name, passed, count))
        if self.known_discrepancies:
            lines.append(
                "known discrepancies: "
                + ", ".join("(%d, %s)" % (n, m) for n, m in self.known_discrepancies)
            )
        if self.mismatches:
            lines.append(
                "UNEXPECTED MISMATCHES: "
                + ", ".join("(%d, %s)" % (n, m) for n, m in self.mismatches)
            )
        else:
            lines.append("unexpected mismatches: none")
        return "\n".join(lines) + "\n"


def _method_order(method: Method) -> str:
    return method.value


def cross_verify(
    max_n: int, known_discrepancies: Iterable[str] = ()
) -> VerificationReport:
    """Compute B_n for n = 0..max_n by every method defined at n and compare
    each value exactly against the series oracle.

    The oracle value for each n is computed once.  Methods named in
    `known_discrepancies` still appear in the report, but their mismatches
    are tallied separately and do not make the run fail.  Entries are sorted
    by ascending n, then method name, so output is deterministic.
    """
    if max_n < 1:
        raise ValueError("max_n must be >= 1, got %d" % max_n)
    known = {Method(name).value for name in known_discrepancies}
    table = StirlingTable(2 * max_n)
    oracle = bernoulli_series(max_n)
    entries: list[ReportEntry] = []
    mismatches: list[tuple[int, str]] = []
    known_seen: list[tuple[int, str]] = []
    for n in range(max_n + 1):
        expected = oracle[n]
        for method in sorted(Method, key=_method_order):
            if not supports(method, n):
                continue
            if method is Method.ORACLE:
                value = expected
            else:
                value = bernoulli(n, method, table=table)
            agrees = value == expected
            entries.append(ReportEntry(n, method.value, value, agrees))
            if not agrees:
                target = known_seen if method.value in known else mismatches
                target.append((n, method.value))
    return VerificationReport(
        max_n=max_n,
        entries=tuple(entries),
        checked=len(entries),
        mismatches=tuple(mismatches),
        known_discrepancies=tuple(known_seen),
    )


def _random_fraction(rng: random.Random) -> Fraction:
    # small exact values: fast partition sums, still exercising sign/reduction
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def identity_suite(max_n: int, trials: int, seed: int) -> VerificationReport:
    """Check the Bell identities against the partition-sum evaluator.

    For every n >= k >= 1 with n <= max_n, the two closed forms are checked
    at their fixed arguments, and the rescaling and EGF identities at the
    canonical all-ones arguments.  On top of that, `trials` random-argument
    instances of the rescaling and EGF identities are drawn from a generator
    seeded with `seed`, so identical inputs give byte-identical reports.
    """
    if max_n < 2:
        raise ValueError("max_n must be >= 2, got %d" % max_n)
    if trials < 1:
        raise ValueError("trials must be >= 1, got %d" % trials)
    rng = random.Random(seed)
    table = StirlingTable(2 * max_n)
    instances: list[tuple[str, int, bool]] = []

    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            m = n - k + 1
            zero_one_args = (Fraction(0),) + (Fraction(1),) * (m - 1)
            instances.append(
                (
                    IDENTITY_ZERO_ONE,
                    n,
                    bell_zero_one(n, k, table)
                    == bell_partition_sum(n, k, zero_one_args),
                )
            )
            reciprocal_args = [Fraction(1, i + 1) for i in range(1, m + 1)]
            instances.append(
                (
                    IDENTITY_RECIPROCAL,
                    n,
                    bell_reciprocal_args(n, k, table)
                    == bell_partition_sum(n, k, reciprocal_args),
                )
            )
            lhs, rhs = bell_scaling_identity_lhs_rhs(n, k, (Fraction(1),) * n)
            instances.append((IDENTITY_SCALING, n, lhs == rhs))
            ones = (Fraction(1),) * m
            instances.append(
                (
                    IDENTITY_EGF,
                    n,
                    bell_egf_coeff(n, k, ones) == bell_partition_sum(n, k, ones),
                )
            )

    for _ in range(trials):
        n = rng.randint(1, max_n)
        k = rng.randint(1, n)
        args = [_random_fraction(rng) for _ in range(n)]
        lhs, rhs = bell_scaling_identity_lhs_rhs(n, k, args)
        instances.append((IDENTITY_SCALING, n, lhs == rhs))
    for _ in range(trials):
        n = rng.randint(1, max_n)
        k = rng.randint(1, n)
        args = [_random_fraction(rng) for _ in range(n - k + 1)]
        instances.append(
            (
                IDENTITY_EGF,
                n,
                bell_egf_coeff(n, k, args) == bell_partition_sum(n, k, args),
            )
        )

    # aggregate instances into one entry per (n, identity)
    by_key: dict[tuple[int, str], bool] = {}
    for name, n, ok in instances:
        key = (n, name)
        by_key[key] = by_key.get(key, True) and ok
    entries = tuple(
        ReportEntry(n, name, None, ok)
        for (n, name), ok in sorted(by_key.items())
    )
    mismatches = tuple((n, name) for (n, name), ok in sorted(by_key.items()) if not ok)
    counts = []
    for identity in sorted({name for name, _, _ in instances}):
        total = sum(1 for name, _, _ in instances if name == identity)
        passed = sum(1 for name, _, ok in instances if name == identity and ok)
        counts.append((identity, total, passed))
    return VerificationReport(
        max_n=max_n,
        entries=entries,
        checked=len(instances),
        mismatches=mismatches,
        known_discrepancies=(),
        identity_counts=tuple(counts),
    )
