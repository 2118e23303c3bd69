# results_db.py
"""sqlite store for recorded suite runs."""

import json
import logging
import os
import sqlite3
from contextlib import closing

logger = logging.getLogger(__name__)

DEFAULT_DB = os.path.join("data", "db", "peirce_results.db")

SCHEMA = """
CREATE TABLE IF NOT EXISTS runs (
    id INTEGER PRIMARY KEY,
    family TEXT,
    suite TEXT,
    seed INTEGER,
    max_size INTEGER,
    mutation TEXT,
    passed INTEGER,
    failed INTEGER,
    skipped INTEGER
);
CREATE TABLE IF NOT EXISTS results (
    id INTEGER PRIMARY KEY,
    run_id INTEGER REFERENCES runs(id),
    check_id TEXT,
    ring TEXT,
    verdict TEXT,
    reason TEXT,
    witness TEXT,
    sampled INTEGER
);
"""


def connect(path=DEFAULT_DB):
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    conn = sqlite3.connect(path)
    conn.executescript(SCHEMA)
    return conn


def record_run(report, seed, path=DEFAULT_DB):
    """Store a SuiteReport; returns the new run id."""
    counts = report.counts
    with closing(connect(path)) as conn:
        cursor = conn.cursor()
        cursor.execute(
            "INSERT INTO runs (family, suite, seed, max_size, mutation, passed, failed, skipped)"
            " VALUES (?, ?, ?, ?, ?, ?, ?, ?)",
            (report.family, ",".join(report.suite), seed, report.max_size, report.mutation,
             counts["pass"], counts["fail"], counts["skipped"]))
        run_id = cursor.lastrowid
        cursor.executemany(
            "INSERT INTO results (run_id, check_id, ring, verdict, reason, witness, sampled)"
            " VALUES (?, ?, ?, ?, ?, ?, ?)",
            [(run_id, r.check_id, r.ring, r.verdict, r.reason,
              json.dumps(r.witness, sort_keys=True), int(r.sampled)) for r in report.results])
        conn.commit()
    logger.info("recorded run %d with %d results in %s", run_id, len(report.results), path)
    return run_id


def list_runs(path=DEFAULT_DB):
    with closing(connect(path)) as conn:
        rows = conn.execute(
            "SELECT id, family, suite, seed, max_size, mutation, passed, failed, skipped"
            " FROM runs ORDER BY id").fetchall()
    keys = ("run", "family", "suite", "seed", "max_size", "mutation", "pass", "fail",
            "skipped")
    return [dict(zip(keys, row)) for row in rows]


def run_results(run_id, path=DEFAULT_DB):
    with closing(connect(path)) as conn:
        rows = conn.execute(
            "SELECT check_id, ring, verdict, reason, witness, sampled FROM results"
            " WHERE run_id = ? ORDER BY id", (run_id,)).fetchall()
    return [{"check": check_id, "ring": ring, "verdict": verdict, "reason": reason,
             "witness": json.loads(witness), "sampled": bool(sampled)}
            for check_id, ring, verdict, reason, witness, sampled in rows]
