"""Kirk-type fixed-point iteration laboratory.

Thin dict-friendly wrappers over the C++ core. Scheme documents are plain
dicts in the same shape the CLI's JSON configs use, e.g.::

    {"name": "kirk_mann", "alpha": [0.4, 0.3, 0.3]}
    {"family": "kirk-multistep", "k": 2, "powers": [1, 0],
     "alpha": {"constant": [0.5, 0.5]}, "betas": [{"constant": [1.0]}]}
"""

import json as _json

try:
    from . import _kirkfp as _core
except ImportError:  # development build: extension sits on sys.path directly
    import _kirkfp as _core

__all__ = [
    "corpus_ids",
    "operator_info",
    "corpus_table_csv",
    "apply_power",
    "iterate_distance_bound",
    "check_condition",
    "run",
    "sigma",
    "verify_sigma_bound",
    "stability",
    "dominating_sequence",
    "estimate_rate",
]

corpus_ids = _core.corpus_ids
operator_info = _core.operator_info
corpus_table_csv = _core.corpus_table_csv
apply_power = _core.apply_power
iterate_distance_bound = _core.iterate_distance_bound
check_condition = _core.check_condition
dominating_sequence = _core.dominating_sequence
estimate_rate = _core.estimate_rate


def _doc(document):
    return document if isinstance(document, str) else _json.dumps(document)


def run(operator_id, scheme, x0, tol=1e-8, max_iter=1000, mode="auto"):
    """Iterate `scheme` on a corpus operator from x0; returns a trace dict."""
    return _core.run(operator_id, _doc(scheme), list(x0), tol, max_iter, mode)


def sigma(scheme, a, n=0):
    """Contraction-factor breakdown of a scheme for contraction constant a."""
    return _core.sigma(_doc(scheme), a, n)


def verify_sigma_bound(scheme, a, n_steps=0):
    return _core.verify_sigma_bound(_doc(scheme), a, n_steps)


def stability(operator_id, scheme, y0, perturbation, n_steps=1000, tol_eps=1e-6, tol_y=1e-6):
    """Perturbed-run stability verdict; `perturbation` is a dict like
    {"kind": "decaying", "c": 0.1, "r": 0.9}."""
    return _core.stability(
        operator_id, _doc(scheme), list(y0), _doc(perturbation), n_steps, tol_eps, tol_y
    )
