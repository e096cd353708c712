"""Check the breaking-point classification against computed posets.

Predictions are derived from element orders alone (cyclicity, prime-power
order, number of involutions).  Computed facts come from the poset machinery.
The two sides share no code beyond the multiplication table.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .catalog import CorpusEntry, corpus
from .group import GroupTable
from .posets import analyze

SCHEMA_VERSION = 1
# orders up to this bound are enumerated completely by the catalog
COMPLETE_UP_TO = 15


def _factor_prime_power(n: int) -> tuple[int, int] | None:
    if n < 2:
        return None
    p = next(d for d in range(2, n + 1) if n % d == 0)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return (p, k) if n == 1 else None


def is_cyclic(G: GroupTable) -> bool:
    return G.order in G.element_order


def is_p_group(G: GroupTable) -> tuple[int, int] | None:
    """``(p, k)`` when ``|G| = p^k`` with ``k >= 1``; ``None`` otherwise,
    including for the trivial group."""
    return _factor_prime_power(G.order)


def count_subgroups_of_prime_order(G: GroupTable, p: int) -> int:
    # each subgroup of order p holds exactly p - 1 elements of order p
    return G.element_order.count(p) // (p - 1)


def is_generalized_quaternion(G: GroupTable) -> bool:
    pk = is_p_group(G)
    return (
        pk is not None
        and pk[0] == 2
        and pk[1] >= 3
        and not is_cyclic(G)
        and count_subgroups_of_prime_order(G, 2) == 1
    )


@dataclass(frozen=True)
class Classification:
    is_cyclic: bool
    p_group_prime: tuple[int, int] | None
    is_generalized_quaternion: bool

    @classmethod
    def of(cls, G: GroupTable) -> Classification:
        return cls(is_cyclic(G), is_p_group(G), is_generalized_quaternion(G))

    def as_dict(self) -> dict:
        return {
            "cyclic": self.is_cyclic,
            "p_group": list(self.p_group_prime) if self.p_group_prime else None,
            "generalized_quaternion": self.is_generalized_quaternion,
        }


def _predicted_existence(c: Classification) -> bool:
    cyclic_p_squared = c.is_cyclic and c.p_group_prime is not None and c.p_group_prime[1] >= 2
    return cyclic_p_squared or c.is_generalized_quaternion


def _predicted_uniqueness(c: Classification) -> bool:
    cyclic_p_squared = c.is_cyclic and c.p_group_prime is not None and c.p_group_prime[1] == 2
    return cyclic_p_squared or c.is_generalized_quaternion


def predicted_breaking_existence(G: GroupTable) -> bool:
    """True iff G is a cyclic p-group of order at least p^2 or generalized quaternion."""
    return _predicted_existence(Classification.of(G))


def predicted_breaking_uniqueness(G: GroupTable) -> bool:
    """True iff G is cyclic of order p^2 or generalized quaternion."""
    return _predicted_uniqueness(Classification.of(G))


@dataclass(frozen=True)
class AgreementRecord:
    name: str
    order: int
    classification: Classification
    predicted_exists: bool
    computed_exists: bool
    predicted_unique: bool
    computed_count: int
    cbar_exists: bool
    cbar_count: int
    weaker_condition_ok: bool
    breaking_orders: tuple[int, ...] = ()
    cbar_breaking: tuple[str, ...] = ()
    source: str = ""

    @property
    def exists_agrees(self) -> bool:
        return self.predicted_exists == self.computed_exists

    @property
    def unique_agrees(self) -> bool:
        return self.predicted_unique == (self.computed_count == 1)

    @property
    def cbar_lemma_ok(self) -> bool | None:
        """For p-groups, C-bar has breaking points iff the prediction says so."""
        if self.classification.p_group_prime is None:
            return None
        return self.cbar_exists == self.predicted_exists

    @property
    def failed(self) -> bool:
        return not (
            self.exists_agrees
            and self.unique_agrees
            and self.weaker_condition_ok
            and self.cbar_lemma_ok is not False
        )

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "order": self.order,
            "source": self.source,
            "classification": self.classification.as_dict(),
            "predicted": {"exists": self.predicted_exists, "unique": self.predicted_unique},
            "computed": {
                "exists": self.computed_exists,
                "count": self.computed_count,
                "breaking_orders": list(self.breaking_orders),
                "cbar_exists": self.cbar_exists,
                "cbar_count": self.cbar_count,
            },
            "agree": {
                "exists": self.exists_agrees,
                "unique": self.unique_agrees,
                "cbar_lemma": self.cbar_lemma_ok,
                "weaker_condition": self.weaker_condition_ok,
                "all": not self.failed,
            },
        }


def check_group(G: GroupTable, name: str | None = None, source: str = "") -> AgreementRecord:
    c = Classification.of(G)
    cyc = analyze(G, "cyclic")
    cls = analyze(G, "classes")

    class_of = {}
    for idx, cc in enumerate(cls.classes):
        for member in cc.members:
            class_of[member.mask] = idx
    cbar_hits = set(cls.report.breaking_nodes)
    weaker_ok = all(
        class_of[cyc.poset.nodes[i].mask] in cbar_hits for i in cyc.report.breaking_nodes
    )
    return AgreementRecord(
        name=name or G.name,
        order=G.order,
        classification=c,
        predicted_exists=_predicted_existence(c),
        computed_exists=cyc.report.count > 0,
        predicted_unique=_predicted_uniqueness(c),
        computed_count=cyc.report.count,
        cbar_exists=cls.report.count > 0,
        cbar_count=cls.report.count,
        weaker_condition_ok=weaker_ok,
        breaking_orders=tuple(cyc.poset.nodes[i].size for i in cyc.report.breaking_nodes),
        cbar_breaking=cls.report.labels,
        source=source,
    )


def _check_entry(entry: CorpusEntry) -> AgreementRecord:
    return check_group(entry.group, entry.name, entry.source)


@dataclass
class Finding:
    name: str
    order: int
    breaking_classes: tuple[str, ...]

    def as_dict(self) -> dict:
        return {"name": self.name, "order": self.order,
                "breaking_classes": list(self.breaking_classes)}


@dataclass
class FindingsReport:
    """Non-p-groups of the corpus whose class poset has breaking points.

    Purely descriptive: it says nothing about groups outside the corpus.
    """

    max_order: int
    scanned: int
    findings: list[Finding] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "max_order": self.max_order,
            "scanned": self.scanned,
            "findings": [f.as_dict() for f in self.findings],
        }


def _findings(records) -> list[Finding]:
    return [
        Finding(r.name, r.order, r.cbar_breaking)
        for r in records
        if r.classification.p_group_prime is None and r.cbar_exists
    ]


def search_cbar(max_order: int) -> FindingsReport:
    """Scan the non-p-groups of ``corpus(max_order)`` for class-poset breaking points."""
    findings = []
    scanned = 0
    for entry in corpus(max_order):
        if is_p_group(entry.group) is not None:
            continue
        scanned += 1
        result = analyze(entry.group, "classes")
        if result.report.count:
            findings.append(Finding(entry.name, entry.group.order, result.report.labels))
    return FindingsReport(max_order, scanned, findings)


@dataclass
class VerificationReport:
    max_order: int
    records: list[AgreementRecord]

    @property
    def failed(self) -> list[AgreementRecord]:
        return [r for r in self.records if r.failed]

    @property
    def findings(self) -> list[Finding]:
        return _findings(self.records)

    def coverage(self) -> dict[int, dict]:
        counts = Counter(r.order for r in self.records)
        return {
            n: {"groups": counts[n], "complete": n <= COMPLETE_UP_TO}
            for n in sorted(counts)
        }

    def as_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "max_order": self.max_order,
            "entries": [r.as_dict() for r in self.records],
            "summary": {
                "total": len(self.records),
                "failed": len(self.failed),
                "coverage": {str(n): v for n, v in self.coverage().items()},
            },
            "findings": [f.as_dict() for f in self.findings],
        }


def run_corpus(max_order: int) -> VerificationReport:
    return VerificationReport(max_order, [_check_entry(e) for e in corpus(max_order)])
