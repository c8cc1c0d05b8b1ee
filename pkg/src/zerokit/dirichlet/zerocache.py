"""CSV-backed zero cache, one file per modulus.

File format (contract for external consumers): a header line

    modulus,char_exponents,beta,gamma,radius,complete_to_height

followed by one row per zero, exponent vectors joined by ';' (the mod-1
character uses '-').  A character with no zeros up to the certified height
still gets one row with empty beta/gamma/radius fields so completeness
round-trips.  Rows are ordered by exponent vector, then ordinate; floats are
written with repr so the file reloads bit-exactly.

`ZeroLibrary` wraps a cache directory: it hands out zero sets for arbitrary
characters (imprimitive ones resolve to their primitive inducer), scans
what is missing on request, and scans each conjugate pair only once.
"""

from __future__ import annotations

import os
from pathlib import Path

from zerokit.dirichlet.characters import (
    DirichletCharacter,
    char_label,
    conjugate_character,
    enumerate_characters,
    primitive_characters,
    primitive_inducer,
)
from zerokit.dirichlet.zeros import ZeroRecord, ZeroSet, scan_zeros

__all__ = ["DependencyError", "ZeroLibrary", "read_zero_cache", "write_zero_cache", "CACHE_HEADER"]

CACHE_HEADER = "modulus,char_exponents,beta,gamma,radius,complete_to_height"
ENV_CACHE_DIR = "EXPLICIT_ZERO_CACHE"


class DependencyError(RuntimeError):
    """Zero data required by a computation is missing from the cache."""


def _exp_key(chi: DirichletCharacter) -> str:
    return ";".join(str(e) for e in chi.exponents) if chi.exponents else "-"


def _cache_path(cache_dir: Path, q: int) -> Path:
    return Path(cache_dir) / f"zeros_q{q:04d}.csv"


def write_zero_cache(cache_dir: str | Path, zerosets: dict[tuple[int, ...], ZeroSet]) -> Path:
    """Write all zero sets of one modulus; deterministic row order."""
    if not zerosets:
        raise ValueError("nothing to write")
    moduli = {zs.character.modulus for zs in zerosets.values()}
    if len(moduli) != 1:
        raise ValueError("one cache file holds one modulus")
    q = moduli.pop()
    cache_dir = Path(cache_dir)
    cache_dir.mkdir(parents=True, exist_ok=True)
    path = _cache_path(cache_dir, q)
    lines = [CACHE_HEADER]
    for exps in sorted(zerosets):
        zs = zerosets[exps]
        key = _exp_key(zs.character)
        if zs.zeros:
            for z in zs.zeros:
                lines.append(
                    f"{q},{key},{z.beta!r},{z.gamma!r},{z.certified_radius!r},{zs.complete_to_height!r}"
                )
        else:
            lines.append(f"{q},{key},,,,{zs.complete_to_height!r}")
    path.write_text("\n".join(lines) + "\n")
    return path


def read_zero_cache(cache_dir: str | Path, q: int) -> dict[tuple[int, ...], ZeroSet]:
    """Load the zero sets of modulus q; empty dict when the file is absent."""
    path = _cache_path(Path(cache_dir), q)
    if not path.exists():
        return {}
    by_key: dict[str, list[tuple[float, float, float]]] = {}
    heights: dict[str, float] = {}
    lines = path.read_text().strip().splitlines()
    if not lines or lines[0] != CACHE_HEADER:
        raise ValueError(f"{path} does not carry the expected cache header")
    for line in lines[1:]:
        mod_s, key, beta_s, gamma_s, radius_s, height_s = line.split(",")
        if int(mod_s) != q:
            raise ValueError(f"{path} contains a row for modulus {mod_s}")
        heights[key] = float(height_s)
        if beta_s:
            by_key.setdefault(key, []).append((float(beta_s), float(gamma_s), float(radius_s)))
        else:
            by_key.setdefault(key, [])
    chars = {_exp_key(chi): chi for chi in enumerate_characters(q)}
    out: dict[tuple[int, ...], ZeroSet] = {}
    for key, rows in by_key.items():
        chi = chars[key]
        zeros = tuple(
            ZeroRecord(beta, gamma, 1, radius) for beta, gamma, radius in sorted(rows, key=lambda r: r[1])
        )
        out[chi.exponents] = ZeroSet(chi, zeros, heights[key], True, ())
    return out


def _canonical_of_pair(chi: DirichletCharacter) -> DirichletCharacter:
    """Deterministic representative of {chi, conj chi} (smaller exponents)."""
    bar = conjugate_character(chi)
    return chi if chi.exponents <= bar.exponents else bar


class ZeroLibrary:
    """Zero sets for any character, backed by a cache directory.

    The cache directory defaults to the EXPLICIT_ZERO_CACHE environment
    variable, falling back to ./zero_cache.
    """

    def __init__(self, cache_dir: str | Path | None = None):
        if cache_dir is None:
            cache_dir = os.environ.get(ENV_CACHE_DIR, "zero_cache")
        self.cache_dir = Path(cache_dir)
        self._memory: dict[tuple[int, tuple[int, ...]], ZeroSet] = {}

    # -- lookup ---------------------------------------------------------------

    def _load_modulus(self, q: int) -> None:
        for exps, zs in read_zero_cache(self.cache_dir, q).items():
            self._memory.setdefault((q, exps), zs)

    def get(self, chi: DirichletCharacter, height: float) -> ZeroSet:
        """Zero set of chi complete to `height` (resolving imprimitive chi).

        Raises DependencyError when the cache has no certified data deep
        enough; use `ensure` first (or scan_missing in the harness/CLI).
        """
        star = primitive_inducer(chi)
        key = (star.modulus, star.exponents)
        if key not in self._memory:
            self._load_modulus(star.modulus)
        zs = self._memory.get(key)
        if zs is None or zs.complete_to_height + 1e-12 < height:
            raise DependencyError(
                f"no zero data for {char_label(star)} up to height {height}; run a scan first"
            )
        return zs

    # -- scanning ---------------------------------------------------------------

    def ensure(
        self, q: int, height: float, grid_step: float = 0.05, height_guard: float = 1e3
    ) -> dict[str, int | str]:
        """Scan all primitive characters mod q up to `height` (idempotent).

        Conjugate pairs are scanned once and mirrored.  Returns a summary
        {label: zero count | 'cached'}; persists the modulus file.
        """
        self._load_modulus(q)
        summary: dict[str, int | str] = {}
        changed = False
        for chi in primitive_characters(q):
            key = (q, chi.exponents)
            cached = self._memory.get(key)
            if cached is not None and cached.complete_to_height + 1e-12 >= height and cached.certified:
                summary[char_label(chi)] = "cached"
                continue
            canon = _canonical_of_pair(chi)
            canon_key = (q, canon.exponents)
            cached_canon = self._memory.get(canon_key)
            if cached_canon is None or cached_canon.complete_to_height + 1e-12 < height:
                cached_canon = scan_zeros(canon, height, grid_step, height_guard)
                self._memory[canon_key] = cached_canon
                changed = True
            if chi.exponents != canon.exponents:
                self._memory[key] = cached_canon.mirrored(chi)
                changed = True
            summary[char_label(chi)] = len(self._memory[key].zeros)
        if changed:
            # Only certified windows are persisted: an unverified scan stays
            # in memory so a reload (or rescan) does not silently accept it.
            sets = {
                exps: zs
                for (mod, exps), zs in self._memory.items()
                if mod == q and zs.character.is_primitive and zs.certified
            }
            if sets:
                write_zero_cache(self.cache_dir, sets)
        return summary

    def ensure_range(self, q_values, height: float) -> dict[str, int | str]:
        out: dict[str, int | str] = {}
        for q in q_values:
            out.update(self.ensure(q, height))
        return out

    def certified(self) -> bool:
        return all(zs.certified for zs in self._memory.values())
