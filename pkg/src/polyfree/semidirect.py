"""Elements of a semidirect product ``F ⋊ Q`` of a free group by a group acting on it.

Elements are pairs ``(f, t)`` read as the product ``f·t``.  The quotient acts
on the right, ``act(u, f) = u^-1 f u``, so

    (f1, t1)(f2, t2) = (f1 · act(t1^-1, f2), t1 t2).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .freegroup import FreeWord


@dataclass(frozen=True)
class SemidirectElement:
    kernel: FreeWord
    quotient: object

    def is_identity(self) -> bool:
        return not self.kernel and not self.quotient

    def __str__(self):
        return f"({self.kernel}, {self.quotient or 'ε'})"


@dataclass
class CheckResult:
    """Outcome of one verification property."""

    name: str
    passed: bool = True
    checked: int = 0
    failures: list = field(default_factory=list)
    skipped: str = ""

    MAX_FAILURES = 10

    def record(self, ok: bool, detail=""):
        """Count one case; ``detail`` may be a callable, only evaluated on failure."""
        self.checked += 1
        if not ok:
            self.passed = False
            if len(self.failures) < self.MAX_FAILURES:
                self.failures.append(detail() if callable(detail) else detail)

    def to_dict(self) -> dict:
        out = {"name": self.name, "passed": self.passed, "checked": self.checked}
        if self.failures:
            out["failures"] = list(self.failures)
        if self.skipped:
            out["skipped"] = self.skipped
        return out


class SemidirectProduct:
    """Arithmetic shared by the two splittings.

    Subclasses provide ``graph``, ``act(u, f)``, ``quotient_identity()`` and
    ``generator_image(v)`` (where each vertex of ``graph`` goes).
    """

    def element(self, kernel=None, quotient=None) -> SemidirectElement:
        return SemidirectElement(kernel if kernel is not None else FreeWord(),
                                 quotient if quotient is not None
                                 else self.quotient_identity())

    def multiply(self, x: SemidirectElement, y: SemidirectElement) -> SemidirectElement:
        moved = self.act(x.quotient.inverse(), y.kernel)
        return SemidirectElement(x.kernel * moved, x.quotient * y.quotient)

    def inverse(self, x: SemidirectElement) -> SemidirectElement:
        return SemidirectElement(self.act(x.quotient, x.kernel.inverse()),
                                 x.quotient.inverse())

    def evaluate(self, letters) -> SemidirectElement:
        """Image of a word ``[(vertex, sign), ...]`` over the whole graph."""
        out = self.element()
        for v, s in letters:
            img = self.generator_image(v)
            out = self.multiply(out, img if s > 0 else self.inverse(img))
        return out

    def relator_check(self) -> CheckResult:
        """Evaluate the commutator of every edge of ``graph``."""
        result = CheckResult("relators")
        for u, v in self.graph.sorted_edges():
            img = self.evaluate([(u, 1), (v, 1), (u, -1), (v, -1)])
            result.record(img.is_identity(), f"[{u},{v}] -> {img}")
        return result
