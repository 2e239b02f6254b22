"""Allocation-table file format.

A table file is a JSON document:

    {"n": 3, "k": 2, "regime": "full",
     "entries": [{"demand": [0, 3], "assignment": [1, 1, 1]}, ...],
     "domain": [[0, 3], ...]}          # only for partial tables

Entries are sorted in canonical (lexicographic) demand-vector order and tasks
are serialized 0-indexed.  Loading validates the table and rejects malformed
or invalid content, naming the offending entry.
"""
from __future__ import annotations

import json

from .model import AllocationTable, ProblemInstance, validate_table


class TableFormatError(Exception):
    """Malformed or invalid table file."""


def table_to_doc(table: AllocationTable) -> dict:
    doc = {
        "n": table.instance.n,
        "k": table.instance.k,
        "regime": table.instance.regime,
        "entries": [
            {"demand": list(v), "assignment": list(a)}
            for v, a in sorted(table.entries.items())
        ],
    }
    if table.domain is not None:
        doc["domain"] = [list(v) for v in sorted(table.domain)]
    return doc


def table_from_doc(doc: dict) -> AllocationTable:
    try:
        instance = ProblemInstance(int(doc["n"]), int(doc["k"]), doc["regime"])
        raw_entries = doc["entries"]
    except (KeyError, TypeError, ValueError) as exc:
        raise TableFormatError(f"bad table header: {exc}") from exc
    entries = {}
    previous = None
    for index, record in enumerate(raw_entries):
        try:
            v = tuple(int(c) for c in record["demand"])
            a = tuple(int(t) for t in record["assignment"])
        except (KeyError, TypeError, ValueError) as exc:
            raise TableFormatError(f"entry {index}: malformed record ({exc})") from exc
        if previous is not None and not previous < v:
            raise TableFormatError(f"entry {index}: not in canonical order")
        previous = v
        entries[v] = a
    domain = None
    if "domain" in doc:
        domain = tuple(tuple(int(c) for c in v) for v in doc["domain"])
    table = AllocationTable(instance, entries, domain=domain)
    report = validate_table(table)
    if not report.ok:
        if report.bad_entries:
            v, a, reason = report.bad_entries[0]
            ordered = sorted(entries)
            raise TableFormatError(f"entry {ordered.index(v)}: {reason}")
        raise TableFormatError(
            f"table not total: {len(report.missing)} missing, "
            f"{len(report.unexpected)} unexpected vectors"
        )
    return table


def save_table(table: AllocationTable, path):
    with open(path, "w") as fh:
        json.dump(table_to_doc(table), fh, indent=1)
        fh.write("\n")


def load_table(path) -> AllocationTable:
    with open(path) as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise TableFormatError(f"not valid JSON: {exc}") from exc
    return table_from_doc(doc)
