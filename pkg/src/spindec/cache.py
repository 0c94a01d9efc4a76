"""On-disk JSON cache with atomic writes.

Files live under ``<cache_dir>/<version hash>/``.  The hash covers the
source of every module that produces cached data, so editing any of them
starts a fresh cache instead of silently reusing stale tables.
"""

from __future__ import annotations

import hashlib
import os
import tempfile
from functools import lru_cache
from pathlib import Path
from typing import Callable, TypeVar

from . import __version__

T = TypeVar("T")

_PRODUCERS = ("partitions.py", "tableaux.py", "characters.py", "gf2.py", "modrep.py", "spin.py")


@lru_cache(maxsize=None)
def version_hash() -> str:
    h = hashlib.sha256(__version__.encode())
    here = Path(__file__).parent
    for name in _PRODUCERS:
        h.update((here / name).read_bytes())
    return h.hexdigest()[:16]


def cache_path(cache_dir: Path | str, name: str) -> Path:
    return Path(cache_dir) / version_hash() / name


def atomic_write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def load_or_build(
    cache_dir: Path | str | None,
    name: str,
    build: Callable[[], T],
    parse: Callable[[str], T],
    dump: Callable[[T], str],
) -> T:
    if cache_dir is None:
        return build()
    path = cache_path(cache_dir, name)
    if path.exists():
        return parse(path.read_text())
    value = build()
    atomic_write(path, dump(value))
    return value
