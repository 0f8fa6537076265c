"""Checks that a mesh carrying cube face codes really is Q_m."""

from collections import Counter, defaultdict
from collections.abc import Generator, Sequence

from ..mirror import build_qm, is_qm_quad, quad_cycle, split_quad
from ..models import EmbeddedMesh
from .base import Check, Severity, Violation


def cycle_key(face: Sequence[int]) -> tuple[int, ...]:
    """The same key for a cycle, all its rotations and its reversal."""
    k = len(face)
    forms = []
    for walk in (tuple(face), tuple(reversed(face))):
        forms += [walk[i:] + walk[:i] for i in range(k)]
    return min(forms)


class CombinatoricsCheck(Check):
    """Faces are exactly the quads of Q_m, or their two-triangle splits, code for code.

    Meshes without provenance codes pass unchecked. Two triangles that cover
    their quad along the diagonal the parity rule does not pick only warn.
    """

    @classmethod
    def cli_name(cls) -> str:
        return "combinatorics"

    @classmethod
    def cli_code(cls) -> str:
        return "CMB"

    def test(self, mesh: EmbeddedMesh) -> Generator[Violation, None, None]:
        codes = mesh.provenance
        if codes is None:
            return
        if len(codes) != len(mesh.faces):
            yield Violation(
                self,
                f"{len(codes)} provenance codes for {len(mesh.faces)} faces",
                witness={"codes": len(codes), "faces": len(mesh.faces)},
            )
            return
        if not codes:
            return
        m = len(codes[0])
        bad = next((i for i, c in enumerate(codes) if len(c) != m or not is_qm_quad(c)), None)
        if bad is not None:
            yield Violation(
                self,
                f"face {bad} has code {codes[bad]!r}, which is not a quad of Q_{m}",
                witness={"face": bad, "code": codes[bad]},
            )
            return
        if len(mesh.vertices) != 2**m:
            yield Violation(
                self,
                f"Q_{m} has {2**m} vertices, the mesh has {len(mesh.vertices)}",
                witness={"expected": 2**m, "vertices": len(mesh.vertices)},
            )
            return

        sizes = {len(f) for f in mesh.faces}
        if sizes not in ({3}, {4}):
            yield Violation(
                self,
                "faces must be all quads or all triangles",
                witness={"sizes": sorted(sizes)},
            )
            return
        copies = 2 if sizes == {3} else 1

        qm, _ = build_qm(m)
        expected = Counter({code: copies for code in qm.quads})
        found = Counter(codes)
        if found != expected:
            missing = sorted((expected - found).keys())
            extra = sorted((found - expected).keys())
            yield Violation(
                self,
                f"face codes differ from Q_{m}: {len(missing)} missing, {len(extra)} extra",
                witness={"missing": missing[:10], "extra": extra[:10]},
            )
            return

        covered: dict[str, set[int]] = defaultdict(set)
        diagonals: dict[str, set[int]] = {}
        for index, (face, code) in enumerate(zip(mesh.faces, codes, strict=True)):
            quad = quad_cycle(code)
            if copies == 1:
                ok = cycle_key(face) == cycle_key(quad)
            else:
                ok = set(face) < set(quad)
                covered[code] |= set(face)
                diagonals[code] = diagonals.get(code, set(face)) & set(face)
            if not ok:
                yield Violation(
                    self,
                    f"face {index} does not match quad {code}",
                    witness={
                        "face": index,
                        "code": code,
                        "vertices": list(face),
                        "quad": list(quad),
                    },
                )
        for code, seen in sorted(covered.items()):
            if seen != set(quad_cycle(code)):
                yield Violation(
                    self,
                    f"the two triangles of {code} do not cover its quad",
                    witness={"code": code, "covered": sorted(seen)},
                )
                continue
            first, second = split_quad(code)
            parity_diagonal = set(first) & set(second)
            if diagonals[code] != parity_diagonal:
                yield Violation(
                    self,
                    f"quad {code} is split along the wrong diagonal",
                    severity=Severity.WARNING,
                    witness={"code": code, "diagonal": sorted(diagonals[code])},
                )
