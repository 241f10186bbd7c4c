# twostep/cli/report.py

"""
Command reports: a human-readable summary for stdout and a JSON record.

Every JSON record carries tool_version, format_version, command,
inputs_digest, verdicts, witnesses, timings and results. Timings stay empty
unless requested, so repeated runs produce identical bytes.
"""

import hashlib
import json

from twostep import FORMAT_VERSION, __version__
from twostep.core.scalars import format_scalar

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


def inputs_digest(*texts):
    h = hashlib.sha256()
    for text in texts:
        h.update(text.encode("utf-8"))
        h.update(b"\0")
    return h.hexdigest()


def matrix_strings(m):
    return [[format_scalar(x) for x in row] for row in m.entries]


def name_tuple(indices, names):
    """Basis names for a witness of basis indices."""
    return [names[k] for k in indices]


class Report:
    def __init__(self, command, options=None, digest=None):
        self.command = command
        self.options = dict(options or {})
        self.digest = digest
        self.verdicts = {}
        self.witnesses = {}
        self.results = {}
        self.timings = {}
        self.lines = []
        self.exit_code = EXIT_OK

    def say(self, text):
        self.lines.append(text)

    def verdict(self, key, value, witness=None):
        self.verdicts[key] = value
        if witness is not None:
            self.witnesses[key] = witness

    def fail(self, key, witness=None):
        """Record a failed check; the command exits with EXIT_CHECK_FAILED."""
        self.verdict(key, False, witness)
        self.exit_code = EXIT_CHECK_FAILED

    def as_dict(self, with_timings=False):
        return {
            "tool_version": __version__,
            "format_version": FORMAT_VERSION,
            "command": self.command,
            "options": self.options,
            "inputs_digest": self.digest,
            "verdicts": self.verdicts,
            "witnesses": self.witnesses,
            "timings": self.timings if with_timings else {},
            "results": self.results,
            "exit_code": self.exit_code,
        }

    def to_json(self, with_timings=False):
        return json.dumps(self.as_dict(with_timings), ensure_ascii=False, sort_keys=True,
                          indent=2) + "\n"

    def write_json(self, path, with_timings=False):
        with open(path, 'w', encoding="utf-8") as file:
            file.write(self.to_json(with_timings))

    def render(self):
        return "\n".join(self.lines) + ("\n" if self.lines else "")

    def __repr__(self):
        return f"Report({self.command}, exit={self.exit_code})"
