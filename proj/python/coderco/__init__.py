"""Exact cohomology and deformation theory of coalgebra-coderivation pairs.

Thin pythonic wrappers over the in-process command surface: structure
documents are plain dicts matching the JSON schemas of the CLI, and every
wrapper is deterministic (identical inputs give identical outputs).
"""

import json
import os
import tempfile

try:
    from ._coderco import index_bound, max_degree, run, set_index_bound, set_max_degree
except ImportError:  # in-tree builds put the extension next to the package
    from _coderco import index_bound, max_degree, run, set_index_bound, set_max_degree

__all__ = [
    "CoderError",
    "cohomology",
    "dualize",
    "example",
    "extend",
    "gauge",
    "index_bound",
    "infinitesimal",
    "max_degree",
    "obstruct",
    "run",
    "set_index_bound",
    "set_max_degree",
    "trivialize",
    "validate",
    "validate_deformation",
]


class CoderError(RuntimeError):
    """A command exited nonzero; carries the exit code and both streams."""

    def __init__(self, code, stdout, stderr):
        super().__init__(stderr.strip() or stdout.strip() or "exit code %d" % code)
        self.code = code
        self.stdout = stdout
        self.stderr = stderr


def _invoke(args):
    code, out, err = run([str(a) for a in args])
    if code != 0:
        raise CoderError(code, out, err)
    return json.loads(out)


class _DocFiles:
    """Writes document dicts to temporary files for path-taking commands."""

    def __enter__(self):
        self._dir = tempfile.TemporaryDirectory(prefix="coderco_")
        self._count = 0
        return self

    def __exit__(self, *exc):
        self._dir.cleanup()
        return False

    def add(self, doc):
        self._count += 1
        path = os.path.join(self._dir.name, "doc%d.json" % self._count)
        with open(path, "w") as handle:
            json.dump(doc, handle)
        return path


def example(name, *params, psi="zero"):
    """Built-in structure document, e.g. example("divided_power", 3, psi="grading")."""
    return _invoke(["example", name, *params, "--psi", psi])


def validate(doc, base=None):
    """Axiom report for a structure document (base pair for bicomodules)."""
    with _DocFiles() as files:
        args = ["validate", files.add(doc)]
        if base is not None:
            args += ["--base", files.add(base)]
        return _invoke(args)


def cohomology(doc, nmax=2, les=False, module=None):
    """Cohomology report for a pair document over its coadjoint coefficients,
    or over an explicit bicomodule document passed as module."""
    with _DocFiles() as files:
        args = ["cohomology", files.add(doc), "--nmax", nmax]
        if les:
            args.append("--les")
        if module is not None:
            args += ["--module", files.add(module)]
        return _invoke(args)


def validate_deformation(doc):
    with _DocFiles() as files:
        return _invoke(["deform", "validate", files.add(doc)])


def infinitesimal(doc):
    with _DocFiles() as files:
        return _invoke(["deform", "infinitesimal", files.add(doc)])


def obstruct(doc):
    with _DocFiles() as files:
        return _invoke(["deform", "obstruct", files.add(doc)])


def extend(doc):
    with _DocFiles() as files:
        return _invoke(["deform", "extend", files.add(doc)])


def trivialize(doc, budget=3):
    with _DocFiles() as files:
        return _invoke(["deform", "trivialize", files.add(doc), "--budget", budget])


def gauge(doc, gauge_doc):
    with _DocFiles() as files:
        return _invoke(["deform", "gauge", files.add(doc), files.add(gauge_doc)])


def dualize(doc):
    """Transpose a coder_pair document to a der_pair document or back."""
    with _DocFiles() as files:
        return _invoke(["dualize", files.add(doc)])
