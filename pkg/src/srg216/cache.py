"""Geometry cache: JSON persistence of the expensive enumerations.

The cache stores the point/line tables, the surface classification, the
36 subquadrangles, and the 216 ovoids.  Field elements are rendered as
"0", "1", "w", "w2"; everything else is integer indices.  A sha256
checksum over the canonical serialization guards integrity, and loading
revalidates structural invariants against a freshly built space.
"""

import hashlib
import json

from . import gf4

CACHE_VERSION = 1


class CacheError(RuntimeError):
    pass


class CacheVersionError(CacheError):
    """The cache was written under a different canonical-order contract."""


class CacheChecksumError(CacheError):
    """The cache bytes do not match their recorded checksum."""


class CacheInvariantError(CacheError):
    """The cache contents violate a structural invariant."""


def canonical_dump(sections: dict) -> str:
    return json.dumps(sections, sort_keys=True, separators=(",", ":"))


def _checksum(sections: dict) -> str:
    return hashlib.sha256(canonical_dump(sections).encode("ascii")).hexdigest()


def sections_from_build(build) -> dict:
    surface = build.surface
    return {
        "version": CACHE_VERSION,
        "points": [[gf4.name(c) for c in p.coords] for p in build.space.points],
        "lines": [list(ln.points) for ln in build.space.lines],
        "surface": {
            "points": list(surface.points),
            "generators": list(surface.generators),
        },
        "subquadrangles": [list(w.points) for w in build.subquadrangles],
        "ovoids": [
            {"id": v.id, "parent": v.parent, "points": list(v.points)}
            for v in build.vertices
        ],
    }


def save_cache(path: str, build) -> None:
    sections = sections_from_build(build)
    payload = {"checksum": _checksum(sections), "sections": sections}
    with open(path, "w", encoding="ascii") as fh:
        json.dump(payload, fh, sort_keys=True, indent=1)
        fh.write("\n")


def load_cache(path: str):
    """Load and validate a cache; returns a fully rebuilt Build.

    Validation order: version, checksum, then structural invariants
    against a freshly constructed space and surface.
    """
    from .pipeline import build_all

    with open(path, "r", encoding="ascii") as fh:
        payload = json.load(fh)
    sections = payload.get("sections", {})
    version = sections.get("version")
    if version != CACHE_VERSION:
        raise CacheVersionError(
            "cache version %r, this build writes version %r" % (version, CACHE_VERSION)
        )
    recorded = payload.get("checksum")
    if recorded != _checksum(sections):
        raise CacheChecksumError("cache checksum mismatch")

    try:
        build = build_all(
            subquadrangle_points=[tuple(x) for x in sections["subquadrangles"]],
            ovoid_records=[
                (rec["id"], rec["parent"], tuple(rec["points"]))
                for rec in sections["ovoids"]
            ],
        )
    except (RuntimeError, ValueError, KeyError, TypeError) as exc:
        raise CacheInvariantError(
            "cached structures failed validation: %s" % exc
        ) from exc

    points = [[gf4.name(c) for c in p.coords] for p in build.space.points]
    if sections["points"] != points:
        raise CacheInvariantError("cached point table differs from a fresh build")
    lines = [list(ln.points) for ln in build.space.lines]
    if sections["lines"] != lines:
        raise CacheInvariantError("cached line table differs from a fresh build")
    if sections["surface"]["points"] != list(build.surface.points):
        raise CacheInvariantError("cached surface points differ from a fresh build")
    if sections["surface"]["generators"] != list(build.surface.generators):
        raise CacheInvariantError("cached generators differ from a fresh build")
    return build
