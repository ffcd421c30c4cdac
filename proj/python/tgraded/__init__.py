"""Exact computations in universal tree-graded spaces and a finite tree-graded verifier."""

import json

from . import _core
from ._core import CapExceeded, FamilyMismatch, JsonError

__all__ = ["Scene", "verify_graph", "check", "FamilyMismatch", "CapExceeded", "JsonError"]


def _ref(x):
    # Binding names pass through; inline elements are sent as JSON text.
    return x if isinstance(x, str) else json.dumps(x)


class Scene:
    """A piece family with capacity, named elements and classes.

    Elements can be given by name or inline as {"segments": [...]} dicts.
    Rationals are "n/d" strings.
    """

    def __init__(self, scene):
        self._scene = _core.Scene(json.dumps(scene))

    def dist(self, f, g):
        return json.loads(self._scene.dist(_ref(f), _ref(g)))

    def geodesic(self, f, g, t=None):
        return json.loads(self._scene.geodesic(_ref(f), _ref(g), None if t is None else str(t)))

    def project(self, r, base, piece, label=0):
        return json.loads(self._scene.project(_ref(r), _ref(base), piece, label))

    def concat(self, f, g):
        return json.loads(self._scene.concat(_ref(f), _ref(g)))

    def restrict(self, f, x):
        return json.loads(self._scene.restrict(_ref(f), str(x)))

    def stretch(self, f, context=None):
        return json.loads(self._scene.stretch(_ref(f), None if context is None else json.dumps(context)))

    def realize(self, w, labels):
        return json.loads(self._scene.realize(_ref(w), list(labels)))


def verify_graph(graph, cap=10000):
    return json.loads(_core.verify_graph(json.dumps(graph), cap))


def check(suite, scene=None, samples=None, seed=1):
    return json.loads(_core.check(suite, None if scene is None else json.dumps(scene), samples, seed))
