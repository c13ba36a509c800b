"""Report assembly and canonical JSON output.

A report is a plain dict::

    {toolVersion, command, config, results: [section...], summary}

Each section is ``{ring, filter, checks, data?}``; a check is
``{name, pass, count?, witness?}``.  Output uses sorted keys, two-space
indent and ASCII only, so equal inputs give equal bytes.
"""

import json
import sys
from importlib import resources

from . import __version__


def check(name, ok, witness=None, count=None):
    out = {"name": name, "pass": bool(ok)}
    if count is not None:
        out["count"] = int(count)
    if witness is not None:
        out["witness"] = witness
    return out


def section(ring, checks, filter=None, data=None):
    out = {"ring": ring, "filter": filter, "checks": list(checks)}
    if data is not None:
        out["data"] = data
    return out


def build_report(command, config, sections):
    sections = list(sections)
    total = sum(len(s["checks"]) for s in sections)
    failed = sum(1 for s in sections for c in s["checks"] if not c["pass"])
    return {
        "toolVersion": __version__,
        "command": command,
        "config": config,
        "results": sections,
        "summary": {
            "checks": total,
            "passed": total - failed,
            "failed": failed,
            "exitCode": 1 if failed else 0,
        },
    }


def failures(report):
    for s in report["results"]:
        for c in s["checks"]:
            if not c["pass"]:
                yield s, c


def dumps(report):
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def emit_report(report, path):
    """Write canonical JSON to ``path`` (``-`` for stdout); returns bytes written."""
    data = dumps(report).encode("ascii")
    if path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        with open(path, "wb") as fh:
            fh.write(data)
    return len(data)


def load_schema():
    text = resources.files("torsionkit").joinpath("report.schema.json").read_text()
    return json.loads(text)
