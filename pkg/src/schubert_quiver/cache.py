"""Optional on-disk memoisation, enabled by ``SCHUBERT_QUIVER_CACHE_DIR``.

Values are stored as content-addressed JSON blobs: the file name is the
SHA-256 of the namespace and the ``repr`` of the arguments.  Writes go
through a temporary file and an atomic rename, so concurrent writers that
compute the same value never leave a torn file behind.
"""

from __future__ import annotations

import functools
import hashlib
import json
import os
import tempfile
from pathlib import Path
from typing import Any, Callable, Optional

ENV_VAR = "SCHUBERT_QUIVER_CACHE_DIR"


def cache_dir() -> Optional[Path]:
    value = os.environ.get(ENV_VAR)
    return Path(value) if value else None


def _blob_path(root: Path, namespace: str, key: str) -> Path:
    digest = hashlib.sha256(f"{namespace}:{key}".encode()).hexdigest()
    return root / namespace / digest[:2] / f"{digest}.json"


def persistent(namespace: str, encode: Callable[[Any], Any], decode: Callable[[Any], Any]):
    """Memoise in memory, and on disk when the cache directory is configured."""

    def decorate(func):
        @functools.lru_cache(maxsize=None)
        def cached(*args):
            root = cache_dir()
            if root is None:
                return func(*args)
            path = _blob_path(root, namespace, repr(args))
            if path.exists():
                try:
                    return decode(json.loads(path.read_text(encoding="utf-8")))
                except (OSError, ValueError, KeyError):
                    pass
            value = func(*args)
            path.parent.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
            with os.fdopen(fd, "w", encoding="utf-8") as handle:
                json.dump(encode(value), handle)
            os.replace(tmp, path)
            return value

        cached.__doc__ = func.__doc__
        cached.__wrapped__ = func
        return cached

    return decorate
