"""Optional on-disk cache of reduced Groebner bases.

Disabled unless the ``STEINLAB_GB_CACHE`` environment variable names a
directory.  Entries are JSON files keyed by a hash of the ring, the order
and the printed generators, so a hit returns exactly what was computed.
"""

import hashlib
import json
import os
from pathlib import Path

ENV_VAR = "STEINLAB_GB_CACHE"


def _path(names, order, polys):
    root = os.environ.get(ENV_VAR)
    if not root:
        return None
    blob = json.dumps([list(names), repr(order), [str(p) for p in polys]])
    digest = hashlib.sha256(blob.encode()).hexdigest()[:32]
    return Path(root) / f"gb-{digest}.json"


def lookup(names, order, polys):
    path = _path(names, order, polys)
    if path is None or not path.exists():
        return None
    return json.loads(path.read_text())


def store(names, order, polys, basis):
    path = _path(names, order, polys)
    if path is None:
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(basis))
