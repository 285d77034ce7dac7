"""Small shared helpers: stable seed derivation, hashing, timestamps."""
from __future__ import annotations

import hashlib
from datetime import datetime, timezone


def derive_seed(*parts) -> int:
    """Stable 63-bit seed from arbitrary repr()-able parts.

    Hash based, so the result does not depend on platform hash
    randomization or on the completion order of parallel work.
    """
    h = hashlib.blake2b(digest_size=8)
    for part in parts:
        h.update(repr(part).encode("utf-8"))
        h.update(b"\x1f")
    return int.from_bytes(h.digest(), "big") >> 1


def short_hash(data: bytes, length: int = 12) -> str:
    return hashlib.blake2b(data, digest_size=16).hexdigest()[:length]


def config_hash(config: dict) -> str:
    payload = repr(sorted(config.items())).encode("utf-8")
    return short_hash(payload)


def utc_stamp() -> str:
    return datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")
