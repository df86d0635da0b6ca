"""Cache round trip and the three distinct failure modes."""

import json

import pytest

from srg216.cache import (
    CACHE_VERSION,
    CacheChecksumError,
    CacheError,
    CacheInvariantError,
    CacheVersionError,
    _checksum,
    canonical_dump,
    load_cache,
    save_cache,
    sections_from_build,
)


@pytest.fixture(scope="module")
def cache_path(build, tmp_path_factory):
    path = tmp_path_factory.mktemp("cache") / "geometry.json"
    save_cache(str(path), build)
    return str(path)


def test_round_trip(build, cache_path):
    again = load_cache(cache_path)
    assert [w.points for w in again.subquadrangles] == [
        w.points for w in build.subquadrangles]
    assert [(v.id, v.parent, v.points) for v in again.vertices] == [
        (v.id, v.parent, v.points) for v in build.vertices]
    assert again.graph.masks == build.graph.masks


def test_save_is_deterministic(build, cache_path, tmp_path):
    other = tmp_path / "again.json"
    save_cache(str(other), build)
    with open(cache_path, "rb") as fh:
        a = fh.read()
    assert a == other.read_bytes()


def test_payload_shape(cache_path):
    with open(cache_path) as fh:
        payload = json.load(fh)
    sections = payload["sections"]
    assert payload["checksum"] == _checksum(sections)
    assert sections["version"] == CACHE_VERSION
    assert len(sections["points"]) == 85
    assert sections["points"][0] == ["0", "0", "0", "1"]
    assert all(
        all(name in ("0", "1", "w", "w2") for name in coords)
        for coords in sections["points"]
    )
    assert len(sections["lines"]) == 357
    assert len(sections["surface"]["points"]) == 45
    assert len(sections["surface"]["generators"]) == 27
    assert len(sections["subquadrangles"]) == 36
    assert len(sections["ovoids"]) == 216
    rec = sections["ovoids"][7]
    assert set(rec) == {"id", "parent", "points"}
    assert rec["id"] == 7 and rec["parent"] == 1


def test_corrupted_byte_checksum_error(cache_path, tmp_path):
    with open(cache_path) as fh:
        payload = json.load(fh)
    payload["sections"]["lines"][0][0] += 1
    bad = tmp_path / "corrupt.json"
    bad.write_text(json.dumps(payload))
    with pytest.raises(CacheChecksumError):
        load_cache(str(bad))


def test_version_error(cache_path, tmp_path):
    with open(cache_path) as fh:
        payload = json.load(fh)
    payload["sections"]["version"] = CACHE_VERSION + 1
    payload["checksum"] = _checksum(payload["sections"])
    bad = tmp_path / "newver.json"
    bad.write_text(json.dumps(payload))
    with pytest.raises(CacheVersionError):
        load_cache(str(bad))


def test_tampered_section_with_fixed_checksum(cache_path, tmp_path):
    # a consistent checksum over wrong geometry must fail the invariants
    with open(cache_path) as fh:
        payload = json.load(fh)
    ov = payload["sections"]["ovoids"][0]
    ov["points"] = sorted(ov["points"][:4] + [99])
    payload["checksum"] = _checksum(payload["sections"])
    bad = tmp_path / "tampered.json"
    bad.write_text(json.dumps(payload))
    with pytest.raises(CacheInvariantError):
        load_cache(str(bad))


def test_tampered_subquadrangle_fails(cache_path, tmp_path):
    with open(cache_path) as fh:
        payload = json.load(fh)
    subs = payload["sections"]["subquadrangles"]
    subs[0], subs[1] = subs[1], subs[0]
    payload["checksum"] = _checksum(payload["sections"])
    bad = tmp_path / "swapped.json"
    bad.write_text(json.dumps(payload))
    with pytest.raises(CacheInvariantError):
        load_cache(str(bad))


def test_error_hierarchy():
    assert issubclass(CacheVersionError, CacheError)
    assert issubclass(CacheChecksumError, CacheError)
    assert issubclass(CacheInvariantError, CacheError)


def test_canonical_dump_stability(build):
    sections = sections_from_build(build)
    assert canonical_dump(sections) == canonical_dump(
        json.loads(json.dumps(sections)))
