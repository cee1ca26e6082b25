"""Reading, writing and classifying catalogs of small permutation groups.

Format: UTF-8 text, one record per group.  A record is a header line
``group <order>.<index> degree=<d>`` followed by one ``gen i1,i2,...,id`` line
per generator (1-based images).  Records are separated by blank lines and
``#`` starts a comment line.
"""

from __future__ import annotations

import json
import re
import warnings
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .group import Group, GroupTooLarge, Permutation, element_cap, generate_group
from .lattice import cd_lattice, is_cd_simple
from .normal_structure import has_property_a
from .numtheory import excluded_order

BUNDLED_CATALOG = "smallgroups-1-50.cat"

_HEADER = re.compile(r"group (\d+)\.(\d+) degree=(\d+)")
_GEN = re.compile(r"gen (\d+(?:,\d+)*)")


class CatalogError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


@dataclass
class CatalogEntry:
    order: int
    index: int
    degree: int
    generators: list[Permutation]
    description: str | None = None
    _group: Group | None = field(default=None, repr=False, compare=False)

    @property
    def id(self) -> str:
        return f"{self.order}.{self.index}"

    def group(self) -> Group:
        if self._group is None:
            self._group = generate_group(self.degree, self.generators, cap=max(self.order, 1), name=self.id)
        return self._group


def _validate(entry: CatalogEntry, line: int) -> None:
    try:
        G = generate_group(entry.degree, entry.generators, cap=max(entry.order, element_cap()), name=entry.id)
    except GroupTooLarge as exc:
        raise CatalogError(
            f"group {entry.id} declares order {entry.order} but generates at least {exc.count} elements",
            line,
        ) from None
    if G.order != entry.order:
        raise CatalogError(f"group {entry.id} declares order {entry.order} but generates {G.order}", line)
    entry._group = G


def parse_catalog_text(text: str, source: str = "<string>", validate: bool = True) -> list[CatalogEntry]:
    entries: list[CatalogEntry] = []
    seen: dict[tuple[int, int], int] = {}
    current: CatalogEntry | None = None
    current_line = 0
    comment: str | None = None

    def finish() -> None:
        if current is not None and validate:
            _validate(current, current_line)

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            comment = line[1:].strip() or None
            continue
        header = _HEADER.fullmatch(line)
        if header:
            finish()
            order, index, degree = (int(x) for x in header.groups())
            if order < 1 or index < 1 or degree < 1:
                raise CatalogError("order, index and degree must be positive", number)
            if (order, index) in seen:
                raise CatalogError(f"duplicate id {order}.{index} (first on line {seen[order, index]})", number)
            seen[order, index] = number
            current = CatalogEntry(order, index, degree, [], comment)
            current_line = number
            entries.append(current)
            comment = None
            continue
        gen = _GEN.fullmatch(line)
        if gen:
            if current is None:
                raise CatalogError("generator line before any group header", number)
            images = tuple(int(x) for x in gen.group(1).split(","))
            if len(images) != current.degree:
                raise CatalogError(f"generator has {len(images)} images, degree is {current.degree}", number)
            try:
                current.generators.append(Permutation(images))
            except ValueError as exc:
                raise CatalogError(str(exc), number) from None
            continue
        raise CatalogError(f"malformed line: {raw!r}", number)
    finish()
    if not entries:
        warnings.warn(f"catalog {source} contains no groups", stacklevel=2)
    return entries


def parse_catalog(path: str | Path, validate: bool = True) -> list[CatalogEntry]:
    path = Path(path)
    return parse_catalog_text(path.read_text(encoding="utf-8"), str(path), validate)


def load_bundled_catalog(validate: bool = True) -> list[CatalogEntry]:
    text = resources.files("cdlattice").joinpath("data", BUNDLED_CATALOG).read_text(encoding="utf-8")
    return parse_catalog_text(text, BUNDLED_CATALOG, validate)


def bundled_catalog_path() -> Path:
    return Path(str(resources.files("cdlattice").joinpath("data", BUNDLED_CATALOG)))


def emit_entry(order: int, index: int, G: Group, description: str | None = None) -> str:
    lines = [f"# {description}"] if description else []
    lines.append(f"group {order}.{index} degree={G.degree}")
    lines += ["gen " + ",".join(str(i) for i in g.images) for g in G.generators]
    return "\n".join(lines) + "\n"


def write_catalog(entries: list[CatalogEntry], path: str | Path | None = None) -> str:
    blocks = []
    for e in entries:
        lines = [f"# {e.description}"] if e.description else []
        lines.append(f"group {e.order}.{e.index} degree={e.degree}")
        lines += ["gen " + ",".join(str(i) for i in g.images) for g in e.generators]
        blocks.append("\n".join(lines) + "\n")
    text = "\n".join(blocks)
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text


def find_entry(catalog: list[CatalogEntry], ident: str) -> CatalogEntry:
    for e in catalog:
        if e.id == ident:
            return e
    raise KeyError(f"no group {ident} in catalog")


@dataclass
class ClassificationRecord:
    order: int
    index: int
    m_star: int | None = None
    cd_size: int | None = None
    cd_simple: bool | None = None
    property_a: bool | None = None
    excluded_by_thm23: list[int] | None = None  # (m, p, k, q) witness
    error: str | None = None

    def as_dict(self) -> dict:
        out = {
            "order": self.order,
            "index": self.index,
            "m_star": self.m_star,
            "cd_size": self.cd_size,
            "cd_simple": self.cd_simple,
            "property_a": self.property_a,
            "excluded_by_thm23": self.excluded_by_thm23,
        }
        if self.error is not None:
            out["error"] = self.error
        return out


@dataclass
class ClassificationReport:
    records: list[ClassificationRecord]

    @property
    def cd_simple_nontrivial(self) -> list[ClassificationRecord]:
        return [r for r in self.records if r.cd_simple and r.order > 1]

    @property
    def errors(self) -> list[ClassificationRecord]:
        return [r for r in self.records if r.error is not None]

    def summary(self) -> dict:
        return {
            "groups": len(self.records),
            "cd_simple": sum(1 for r in self.records if r.cd_simple),
            "cd_simple_nontrivial": len(self.cd_simple_nontrivial),
            "property_a": sum(1 for r in self.records if r.property_a),
            "excluded_by_thm23": sum(1 for r in self.records if r.excluded_by_thm23),
            "errors": len(self.errors),
        }

    def to_json(self) -> str:
        return json.dumps(
            {"records": [r.as_dict() for r in self.records], "summary": self.summary()}, indent=1
        )

    def to_text(self) -> str:
        lines = [f"{'id':>8} {'m*':>8} {'|CD|':>5} {'simple':>6} {'propA':>5} excluded"]
        for r in self.records:
            ident = f"{r.order}.{r.index}"
            if r.error is not None:
                lines.append(f"{ident:>8} error: {r.error}")
                continue
            witness = "-" if r.excluded_by_thm23 is None else "m={},p={},k={},q={}".format(*r.excluded_by_thm23)
            lines.append(
                f"{ident:>8} {r.m_star:>8} {r.cd_size:>5} {'yes' if r.cd_simple else 'no':>6} "
                f"{'yes' if r.property_a else 'no':>5} {witness}"
            )
        s = self.summary()
        lines.append(
            f"{s['groups']} groups, {s['cd_simple_nontrivial']} nontrivial CD-simple, "
            f"{s['property_a']} with Property A, {s['excluded_by_thm23']} with an excluded order, "
            f"{s['errors']} errors"
        )
        simple = ", ".join(f"{r.order}.{r.index}" for r in self.cd_simple_nontrivial) or "none"
        lines.append(f"nontrivial CD-simple: {simple}")
        return "\n".join(lines)


def classify_entry(entry: CatalogEntry) -> ClassificationRecord:
    record = ClassificationRecord(entry.order, entry.index)
    try:
        G = entry.group()
        L = cd_lattice(G)
        record.m_star = L.max_measure
        record.cd_size = len(L)
        record.cd_simple = is_cd_simple(G)
        record.property_a = has_property_a(G).holds
        witness = excluded_order(G.order) if G.order > 1 else None
        record.excluded_by_thm23 = list(witness) if witness else None
    except Exception as exc:  # recorded per entry, never fatal
        record.error = f"{type(exc).__name__}: {exc}"
    return record


def classify_orders(catalog: list[CatalogEntry], orders: range | tuple[int, int]) -> ClassificationReport:
    if isinstance(orders, tuple):
        orders = range(orders[0], orders[1] + 1)
    chosen = sorted((e for e in catalog if e.order in orders), key=lambda e: (e.order, e.index))
    return ClassificationReport([classify_entry(e) for e in chosen])


def parse_order_range(text: str) -> range:
    """``"1..50"`` or ``"24"``."""
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise ValueError(f"bad order range {text!r}; expected A..B") from None
    if a < 1 or b < a:
        raise ValueError(f"bad order range {text!r}")
    return range(a, b + 1)
