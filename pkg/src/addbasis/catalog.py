"""Known extremal values, published extremal bases, and persistence.

Two integer sequences anchor everything here.  n2(k) is the extremal
range over all admissible bases of length k, known for k <= 24 (OEIS
A001212).  The restricted variant n2*(k) is the extremal range over bases
whose range reaches twice the top element, known for k <= 41 (OEIS
A006638); the two agree for every k <= 24 except k = 10, where 46 > 44.

The packaged data files carry the complete published sets of extremal
restricted bases for k = 1..41 (runs of equally spaced elements expanded
by tools/transcribe_fixtures.py, which re-verifies every row), plus the
two length-10 bases that attain the nonrestricted extremum.

Also here: text/JSON persistence of search reports, the catalog wire
format, and a disk cache of enumerated prefix streams keyed by
(length, min_range, tool version).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cache
from importlib import resources
from pathlib import Path
from typing import TYPE_CHECKING, Iterable, Mapping, Sequence

from . import __version__
from .core import Basis, as_basis, format_basis, parse_basis
from .enumeration import EnumSpec, load_enumeration, save_enumeration

if TYPE_CHECKING:  # pragma: no cover
    from .mitm import SearchReport


class CatalogMissingError(LookupError):
    """No recorded value for the requested length."""


# n2(k), k = 0..24.  The k = 0 entry is the degenerate basis {0}; it backs
# the bound formulas for the shortest prefixes.
_UNRESTRICTED = (
    0, 2, 4, 8, 12, 16, 20, 26, 32, 40, 46, 54, 64, 72, 80,
    92, 104, 116, 128, 140, 152, 164, 180, 196, 212,
)

# n2*(k), k = 1..41
_RESTRICTED = (
    2, 4, 8, 12, 16, 20, 26, 32, 40, 44, 54, 64, 72, 80, 92,
    104, 116, 128, 140, 152, 164, 180, 196, 212, 228, 244, 262,
    280, 298, 316, 338, 360, 382, 404, 426, 448, 470, 492, 514,
    536, 562,
)


@dataclass(frozen=True)
class CatalogTable:
    """Known n2 / n2* values by length, with provenance notes."""

    unrestricted: Mapping[int, int]
    restricted: Mapping[int, int]
    provenance: Mapping[int, str]

    def known_unrestricted_range(self, length: int) -> int:
        try:
            return self.unrestricted[length]
        except KeyError:
            raise CatalogMissingError(f"n2({length}) is not on record") from None

    def known_restricted_range(self, length: int) -> int:
        try:
            return self.restricted[length]
        except KeyError:
            raise CatalogMissingError(f"n2*({length}) is not on record") from None

    @property
    def max_unrestricted(self) -> int:
        return max(self.unrestricted)

    @property
    def max_restricted(self) -> int:
        return max(self.restricted)


def _default_table() -> CatalogTable:
    unrestricted = {k: v for k, v in enumerate(_UNRESTRICTED)}
    restricted = {k + 1: v for k, v in enumerate(_RESTRICTED)}
    provenance = {}
    for k in sorted(set(unrestricted) | set(restricted)):
        tags = []
        if k in unrestricted:
            tags.append("A001212" if k > 0 else "degenerate")
        if k in restricted:
            tags.append("A006638")
        provenance[k] = "/".join(tags)
    return CatalogTable(unrestricted, restricted, provenance)


DEFAULT = _default_table()


def known_unrestricted_range(length: int) -> int:
    """n2(length) from the default catalog (k <= 24)."""
    return DEFAULT.known_unrestricted_range(length)


def known_restricted_range(length: int) -> int:
    """n2*(length) from the default catalog (k <= 41)."""
    return DEFAULT.known_restricted_range(length)


# --- catalog wire format: "k n2 n2star provenance", "-" for unknown ---


def write_catalog(path, table: CatalogTable = DEFAULT) -> None:
    lines = ["# k n2 n2star provenance"]
    for k in sorted(set(table.unrestricted) | set(table.restricted)):
        n2 = table.unrestricted.get(k)
        n2s = table.restricted.get(k)
        prov = table.provenance.get(k, "-")
        lines.append(
            f"{k} {'-' if n2 is None else n2} {'-' if n2s is None else n2s} {prov}"
        )
    Path(path).write_text("\n".join(lines) + "\n")


def read_catalog(path) -> CatalogTable:
    unrestricted: dict[int, int] = {}
    restricted: dict[int, int] = {}
    provenance: dict[int, str] = {}
    for lineno, line in enumerate(Path(path).read_text().splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split(None, 3)
        if len(parts) < 3:
            raise ValueError(f"{path}: line {lineno}: expected 'k n2 n2star provenance'")
        try:
            k = int(parts[0])
            n2 = None if parts[1] == "-" else int(parts[1])
            n2s = None if parts[2] == "-" else int(parts[2])
        except ValueError:
            raise ValueError(f"{path}: line {lineno}: bad integer field") from None
        if n2 is not None:
            unrestricted[k] = n2
        if n2s is not None:
            restricted[k] = n2s
        provenance[k] = parts[3] if len(parts) > 3 else "-"
    return CatalogTable(unrestricted, restricted, provenance)


# --- published extremal bases ---


@dataclass(frozen=True, slots=True)
class Fixture:
    """One published extremal basis: its length, range, and symmetry tag."""

    length: int
    range: int
    symmetric: bool
    basis: Basis


def _load_fixture_file(name: str) -> dict[int, tuple[Fixture, ...]]:
    by_length: dict[int, list[Fixture]] = {}
    text = resources.files("addbasis").joinpath("data", name).read_text()
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if len(parts) < 4 or parts[2] not in ("S", "A"):
            raise ValueError(f"{name}: line {lineno}: expected 'k range S|A elements...'")
        length = int(parts[0])
        rng = int(parts[1])
        basis = as_basis(int(t) for t in parts[3:])
        if len(basis) != length + 1:
            raise ValueError(f"{name}: line {lineno}: {len(basis)} elements for k={length}")
        fixture = Fixture(length, rng, parts[2] == "S", basis)
        by_length.setdefault(length, []).append(fixture)
    return {k: tuple(v) for k, v in by_length.items()}


@cache
def extremal_restricted_fixtures() -> dict[int, tuple[Fixture, ...]]:
    """All published extremal restricted bases, keyed by length (1..41)."""
    return _load_fixture_file("restricted_extremal.txt")


@cache
def unrestricted_extremal_fixtures() -> dict[int, tuple[Fixture, ...]]:
    """Published extremal bases that beat the restricted range (k=10 only)."""
    return _load_fixture_file("unrestricted_extremal.txt")


# --- search report persistence ---


def render_report(report: "SearchReport", fmt: str = "text") -> str:
    """Serialize a report; `text` is the on-disk format, `json` mirrors it."""
    if fmt == "json":
        doc = {
            "k": report.k,
            "n": report.n,
            "pivot": report.pivot,
            "count": len(report.bases),
            "bases": [list(b) for b in report.bases],
        }
        return json.dumps(doc, indent=2) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown report format {fmt!r}")
    lines = [
        f"# k={report.k}",
        f"# n={report.n}",
        f"# pivot={report.pivot}",
        f"# count={len(report.bases)}",
    ]
    lines.extend(format_basis(b) for b in report.bases)
    return "\n".join(lines) + "\n"


def store_report(report: "SearchReport", path, fmt: str = "text") -> None:
    Path(path).write_text(render_report(report, fmt))


def load_report(path) -> "SearchReport":
    """Read a stored report (text or JSON, sniffed from the content).

    Only the searched instance and its bases are persisted; timing and
    stream sizes are runtime metadata and come back as None.
    """
    from .mitm import SearchReport

    text = Path(path).read_text()
    head = text.lstrip()[:1]
    if head == "{":
        doc = json.loads(text)
        bases = tuple(as_basis(b) for b in doc["bases"])
        if "count" in doc and doc["count"] != len(bases):
            raise ValueError(f"{path}: count {doc['count']} but {len(bases)} bases")
        return SearchReport(k=doc["k"], n=doc["n"], pivot=doc["pivot"], bases=bases)
    meta: dict[str, str] = {}
    bases_list: list[Basis] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            body = stripped[1:].strip()
            key, _, value = body.partition("=")
            if value:
                meta[key.strip()] = value.strip()
            continue
        bases_list.append(parse_basis(stripped, lineno))
    try:
        k = int(meta["k"])
        n = int(meta["n"])
        pivot = int(meta["pivot"])
    except KeyError as exc:
        raise ValueError(f"{path}: missing report header {exc}") from None
    if "count" in meta and int(meta["count"]) != len(bases_list):
        raise ValueError(f"{path}: count {meta['count']} but {len(bases_list)} bases")
    return SearchReport(k=k, n=n, pivot=pivot, bases=tuple(bases_list))


# --- prefix stream cache ---


class PrefixCache:
    """Disk cache of enumerated streams, keyed by (length, min_range, version).

    A hit returns exactly the list a fresh enumeration would produce; the
    stored header carries the enumeration key and the count guards against
    truncation.  Stale versions simply miss.
    """

    def __init__(self, directory) -> None:
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)

    def path_for(self, length: int, min_range: int) -> Path:
        return self.directory / f"prefixes-k{length}-r{min_range}-v{__version__}.txt"

    def load(self, length: int, min_range: int) -> list[Basis] | None:
        path = self.path_for(length, min_range)
        if not path.exists():
            return None
        meta, bases = load_enumeration(path)
        if int(meta.get("k", -1)) != length or int(meta.get("min_range", -1)) != min_range:
            raise ValueError(f"{path}: header does not match its cache key")
        return bases

    def store(self, length: int, min_range: int, bases: Iterable[Sequence[int]]) -> Path:
        path = self.path_for(length, min_range)
        save_enumeration(path, EnumSpec(length, min_range), bases)
        return path
