"""Golden tables for drift detection.

Each table is the output of one CLI invocation, stored as
``<root>/<family>/<command>.csv``. ``manifest.json`` records the argument
list and the sha256 of every table. Regenerating compares fresh output
against the manifest; tables are written only when new or when ``update`` is
set, so a drifted table is reported, not silently replaced.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

MANIFEST = "manifest.json"

# (name, argv, accepts --tol); order is part of the report contract
FIXTURES: list[tuple[str, list[str], bool]] = [
    ("booth/growth", ["growth", "--family", "booth", "--alpha", "0.25"], False),
    ("cissoid/growth", ["growth", "--family", "cissoid", "--beta", "0.5"], False),
    ("modkoebe/growth", ["growth", "--family", "modkoebe", "--gamma", "0.5", "--eta", "0.2"], False),
    ("mobius/growth", ["growth", "--family", "mobius", "--alpha", "0.5", "--beta", "1"], False),
    ("linear/growth", ["growth", "--family", "linear", "--eta", "1"], False),
    ("booth/sweep-bohr", ["sweep", "bohr"], True),
    ("modkoebe/sweep-eta0", ["sweep", "eta0"], True),
    ("modkoebe/radius-convexity-threshold", ["radius", "convexity-threshold"], True),
    ("dilog/plot", ["plot", "--family", "dilog", "--rho", "0.999"], False),
    ("secant/plot", ["plot", "--family", "secant", "--beta", "1", "--rho", "1"], False),
]


@dataclass
class FixtureReport:
    rows: list = field(default_factory=list)

    def add(self, name: str, status: str, digest: str) -> None:
        self.rows.append({"name": name, "status": status, "sha256": digest})

    @property
    def mismatches(self) -> list[str]:
        return [r["name"] for r in self.rows if r["status"] == "mismatch"]

    def statuses(self) -> dict[str, str]:
        return {r["name"]: r["status"] for r in self.rows}


def checksum(text: str) -> str:
    canonical = text.replace("\r\n", "\n")
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def render_fixture(argv: list[str]) -> str:
    from .cli import EXIT_OK, execute

    code, text, err, _ = execute(argv)
    if code != EXIT_OK:
        raise RuntimeError(f"fixture command {' '.join(argv)} failed with exit {code}: {err}")
    return text


def regenerate_fixtures(root, tol: Optional[float] = None, update: bool = False) -> FixtureReport:
    """Rebuild every table and compare with the stored checksums.

    Status per table: ``created`` (not recorded before), ``match``,
    ``mismatch`` (left untouched unless ``update``), or ``updated``.
    ``tol`` overrides the solver tolerance of the tables that take one.
    """
    root = Path(root)
    root.mkdir(parents=True, exist_ok=True)
    manifest_path = root / MANIFEST
    stored = json.loads(manifest_path.read_text()) if manifest_path.exists() else {"tables": {}}
    tables = stored.get("tables", {})
    report = FixtureReport()
    changed = False
    for name, argv, takes_tol in FIXTURES:
        argv = list(argv)
        if tol is not None and takes_tol:
            argv += ["--tol", repr(float(tol))]
        text = render_fixture(argv)
        digest = checksum(text)
        path = root / f"{name}.csv"
        previous = tables.get(name)
        if previous is None or not path.exists():
            status = "created"
        elif previous["sha256"] == digest and checksum(path.read_text()) == digest:
            status = "match"
        else:
            status = "updated" if update else "mismatch"
        if status in ("created", "updated"):
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_bytes(text.encode("utf-8"))
            tables[name] = {"path": f"{name}.csv", "argv": argv, "sha256": digest}
            changed = True
        report.add(name, status, digest)
    if changed:
        manifest_path.write_text(json.dumps({"tables": tables}, indent=2, sort_keys=True) + "\n")
    return report
