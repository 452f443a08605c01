"""Expected-value fixtures and the cross-check harness behind ``pedalwords verify``."""
from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .bijection import (
    enumerate_periodic_triangles,
    validate_periodic_triangle,
)
from .counting import chi_inclusion_exclusion, chi_mobius, psi
from .errors import BijectionViolation, FixtureError

FIXTURE_KINDS = {"psi_table": 2, "psi2_row2": 1, "chi": 1}
DEEP_MAX_N = 8


def observed_value(kind: str, indices: tuple[int, ...]) -> int:
    if kind == "psi_table":
        m, n = indices
        return psi(2, m, n)
    (n,) = indices
    if kind == "psi2_row2":
        return psi(2, 2, n)
    return chi_mobius(n)


@dataclass(frozen=True)
class FixtureEntry:
    kind: str
    indices: tuple[int, ...]
    expected: int
    line: int = 0

    @property
    def label(self) -> str:
        if self.kind == "psi_table":
            return "psi(2,%d,%d)" % self.indices
        if self.kind == "psi2_row2":
            return "psi(2,2,%d)" % self.indices
        return "chi(%d)" % self.indices


def _parse_positive(token: str, what: str, lineno: int) -> int:
    if not token.isdigit():
        raise FixtureError(f"line {lineno}: {what} {token!r} is not a non-negative integer")
    return int(token)


def parse_fixture(text: str) -> list[FixtureEntry]:
    entries = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        fields = line.split("\t")
        kind = fields[0].strip()
        if kind not in FIXTURE_KINDS:
            raise FixtureError(f"line {lineno}: unknown kind {kind!r}")
        arity = FIXTURE_KINDS[kind]
        if len(fields) != arity + 2:
            raise FixtureError(f"line {lineno}: {kind} takes {arity} index field(s) and a value")
        indices = tuple(_parse_positive(f.strip(), "index", lineno) for f in fields[1:-1])
        if min(indices) < 1:
            raise FixtureError(f"line {lineno}: indices must be positive")
        value = _parse_positive(fields[-1].strip(), "value", lineno)
        key = (kind, indices)
        if key in seen:
            raise FixtureError(f"line {lineno}: duplicate entry for {kind} {indices}")
        seen.add(key)
        entries.append(FixtureEntry(kind, indices, value, lineno))
    return entries


def load_fixture(path: str | Path) -> list[FixtureEntry]:
    """Read a fixture file; ``"builtin"`` selects the tables shipped with the package."""
    if str(path) == "builtin":
        text = resources.files("pedalwords").joinpath("data/tables.tsv").read_text()
    else:
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise FixtureError(f"cannot read fixture {path}: {exc}") from exc
    return parse_fixture(text)


@dataclass
class RowReport:
    n: int
    chi_mobius: int
    chi_inclusion_exclusion: int
    psi_2_2_n: int
    expected: list[tuple[FixtureEntry, int]] = field(default_factory=list)
    enumerated: int | None = None
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass
class VerificationReport:
    rows: list[RowReport]
    table_checks: list[tuple[FixtureEntry, int]]

    @property
    def failed_table_checks(self):
        return [(e, obs) for e, obs in self.table_checks if e.expected != obs]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows) and not self.failed_table_checks

    def format(self) -> str:
        cols = ["n", "chi_mobius", "chi_incl_excl", "psi(2,2,n)", "expected", "enumerated", "status"]
        table = [cols]
        for r in self.rows:
            exp = ",".join(str(e.expected) for e, _ in r.expected) or "-"
            table.append([
                str(r.n), str(r.chi_mobius), str(r.chi_inclusion_exclusion), str(r.psi_2_2_n),
                exp, "-" if r.enumerated is None else str(r.enumerated),
                "PASS" if r.passed else "FAIL",
            ])
        widths = [max(len(row[i]) for row in table) for i in range(len(cols))]
        lines = ["  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in table]
        for r in self.rows:
            for msg in r.failures:
                lines.append(f"FAIL n={r.n}: {msg}")
        if self.table_checks:
            bad = self.failed_table_checks
            lines.append(
                f"fixture table entries: {len(self.table_checks) - len(bad)}/{len(self.table_checks)} match"
            )
            for e, obs in bad:
                lines.append(f"FAIL {e.label}: expected {e.expected}, observed {obs} (line {e.line})")
        n_pass = sum(r.passed for r in self.rows)
        lines.append(f"{'PASS' if self.passed else 'FAIL'}: {n_pass}/{len(self.rows)} rows")
        return "\n".join(lines)


def deep_check(n: int, workers: int = 1, backend: str | None = None) -> tuple[int, list[str]]:
    """Enumerate period-``n`` triangles and re-validate each one on the exact rational path."""
    failures = []
    try:
        triangles = enumerate_periodic_triangles(n, backend=backend, workers=workers)
    except BijectionViolation as exc:
        return 0, [f"enumeration: {exc}"]
    for t in triangles:
        try:
            validate_periodic_triangle(t)
        except BijectionViolation as exc:
            failures.append(str(exc))
            if len(failures) >= 10:
                break
    if len({t.triple for t in triangles}) != len(triangles):
        failures.append("enumerated triples are not pairwise distinct")
    expected = chi_mobius(n)
    if len(triangles) != expected:
        failures.append(f"enumerated {len(triangles)} triangles, formula gives {expected}")
    return len(triangles), failures


def run_verification(
    max_n: int,
    fixture: list[FixtureEntry] | None = None,
    deep: bool = False,
    workers: int = 1,
    backend: str | None = None,
) -> VerificationReport:
    fixture = fixture or []
    by_n: dict[int, list[FixtureEntry]] = {}
    table_entries = []
    for e in fixture:
        if e.kind == "psi_table":
            table_entries.append(e)
        else:
            by_n.setdefault(e.indices[0], []).append(e)
    rows = []
    for n in range(1, max_n + 1):
        r = RowReport(n, chi_mobius(n), chi_inclusion_exclusion(n), psi(2, 2, n))
        if not r.chi_mobius == r.chi_inclusion_exclusion == r.psi_2_2_n:
            r.failures.append(
                f"formulas disagree: mobius {r.chi_mobius}, inclusion-exclusion "
                f"{r.chi_inclusion_exclusion}, psi {r.psi_2_2_n}"
            )
        for e in by_n.get(n, []):
            obs = observed_value(e.kind, e.indices)
            r.expected.append((e, obs))
            if obs != e.expected:
                r.failures.append(f"{e.label}: expected {e.expected}, observed {obs} (line {e.line})")
        if deep and n <= DEEP_MAX_N:
            r.enumerated, problems = deep_check(n, workers=workers, backend=backend)
            r.failures.extend(problems)
        rows.append(r)
    table_checks = [(e, observed_value(e.kind, e.indices)) for e in table_entries]
    return VerificationReport(rows, table_checks)
