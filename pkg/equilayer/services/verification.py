"""Verification suites and appendix reproduction driven by the CLI."""

from __future__ import annotations

import itertools
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
import structlog

from equilayer.core.config import settings
from equilayer.core.exceptions import EquilayerError, SizeCapExceededError
from equilayer.fixtures import load_appendix
from equilayer.models.diagram import AlgebraElement
from equilayer.models.matrix import SparseBinaryMatrix
from equilayer.models.pattern import PatternMatrix
from equilayer.models.set_partition import ShapeSplit
from equilayer.schemas.layer import LayerSpec
from equilayer.schemas.payloads import (
    AppendixFixture,
    CheckResult,
    DimensionReport,
    VerificationReport,
)
from equilayer.services.base import BaseService
from equilayer.services.diagram import algebra_product
from equilayer.services.equimap import (
    bias_basis,
    full_basis,
    kernel_dimension,
    oracle_basis,
    phi_kernel_dimension,
    phi_on_diagram,
    verify_equivariance,
)
from equilayer.services.pattern import pattern_from_basis, patterns_match
from equilayer.services.product import (
    global_dim,
    product_basis,
    product_dim,
    support_matches_embedding,
    verify_product_equivariance,
)
from equilayer.services.quiver import hom_dim
from equilayer.services.setpart import (
    bell,
    enumerate_set_partitions,
    restricted_bell,
)

log = structlog.get_logger(__name__)

# exhaustive homomorphism check up to this many diagram pairs, sampled above
EXHAUSTIVE_PAIR_LIMIT = 15 * 15


class DimensionService(BaseService):
    def __init__(self) -> None:
        super().__init__("dimensions")

    def single(self, n: int, k: int, l: int) -> DimensionReport:  # noqa: E741
        self._validate_rules(
            {"n >= 1": n >= 1, "k >= 0": k >= 0, "l >= 0": l >= 0},
            context="Dimension request",
        )
        count = restricted_bell(l + k, n)
        quiver_side = hom_dim(n, k, l) if n >= 2 else None
        report = DimensionReport(
            target=f"n={n} k={k} l={l}",
            restricted_bell=count,
            bell=bell(l + k),
            kernel_dimension=kernel_dimension(n, k, l),
            quiver_dimension=quiver_side,
            agree=quiver_side is None or quiver_side == count,
        )
        self._log_check("dimension_bridge", passed=report.agree, target=report.target)
        return report

    def product(self, spec: LayerSpec) -> DimensionReport:
        count = product_dim(spec)
        quiver_side: int | None = 1
        for factor in spec.factors:
            if factor.n < 2:
                quiver_side = None
                break
            quiver_side *= hom_dim(factor.n, factor.k, factor.l)
        whole = global_dim(spec)
        report = DimensionReport(
            target=str(spec),
            restricted_bell=count,
            quiver_dimension=quiver_side,
            global_dimension=whole,
            agree=(quiver_side is None or quiver_side == count) and count <= whole,
        )
        self._log_check("dimension_bridge", passed=report.agree, target=report.target)
        return report


class VerificationService(BaseService):
    """Runs the property suite for one layer and collects a report."""

    def __init__(self, *, trials: int | None = None, seed: int | None = None) -> None:
        super().__init__("verification")
        self.trials = settings.DEFAULT_TRIALS if trials is None else trials
        self.seed = settings.DEFAULT_SEED if seed is None else seed

    def _run(
        self, report: VerificationReport, name: str, check: Callable[[], CheckResult]
    ) -> None:
        try:
            result = check()
        except SizeCapExceededError:
            raise
        except EquilayerError as exc:
            self._log_error(name, exc, target=report.target)
            result = CheckResult(
                name=name,
                passed=False,
                detail={"error": exc.message, **_jsonable(exc.details)},
            )
        self._log_check(name, passed=result.passed, target=report.target, count=result.count)
        report.checks.append(result)

    def verify_single(
        self,
        n: int,
        k: int,
        l: int,  # noqa: E741
        *,
        oracle: bool = False,
        force: bool = False,
    ) -> VerificationReport:
        report = VerificationReport(
            target=f"n={n} k={k} l={l}", seed=self.seed, trials=self.trials
        )
        basis = full_basis(n, k, l, force=force)

        def tiling() -> CheckResult:
            pattern = pattern_from_basis(basis)
            expected = restricted_bell(l + k, n)
            return CheckResult(
                name="orbit_tiling",
                passed=pattern.class_count == expected == len(basis),
                count=pattern.class_count,
                detail={"expected_classes": expected},
            )

        def equivariance() -> CheckResult:
            for index, matrix in enumerate(basis):
                outcome = verify_equivariance(matrix, n, k, l, self.trials, self.seed)
                if not outcome.passed:
                    return CheckResult(
                        name="equivariance",
                        passed=False,
                        count=index + 1,
                        detail={
                            "blocks": matrix.source_partition.to_json(),
                            "sigma": list(outcome.counterexample[0]),
                        },
                    )
            return CheckResult(name="equivariance", passed=True, count=len(basis))

        def oracle_match() -> CheckResult:
            found = {m.support for m in oracle_basis(n, k, l)}
            expected = {m.support for m in basis}
            return CheckResult(
                name="oracle_equivalence",
                passed=found == expected,
                count=len(found),
                detail=None
                if found == expected
                else {"unmatched_orbits": len(found ^ expected)},
            )

        def bridge() -> CheckResult:
            quiver_side = hom_dim(n, k, l)
            count = restricted_bell(l + k, n)
            return CheckResult(
                name="dimension_bridge",
                passed=quiver_side == count,
                count=count,
                detail={"quiver": quiver_side, "set_partitions": count},
            )

        def kernel() -> CheckResult:
            measured = phi_kernel_dimension(n, k, l, force=force)
            expected = kernel_dimension(n, k, l)
            return CheckResult(
                name="kernel_dimension",
                passed=measured == expected,
                count=measured,
                detail={"bell_difference": expected},
            )

        self._run(report, "orbit_tiling", tiling)
        self._run(report, "equivariance", equivariance)
        if oracle:
            self._run(report, "oracle_equivalence", oracle_match)
        if n >= 2:
            self._run(report, "dimension_bridge", bridge)
        stacked = bell(l + k) * n ** (l + k)
        if l + k <= settings.transition_max_m and (
            force or stacked <= settings.max_matrix_entries
        ):
            self._run(report, "kernel_dimension", kernel)
        if k == l and k > 0:
            self._run(report, "homomorphism", lambda: self._homomorphism(n, k, force))
        self._log_operation(
            "verify_single", target=report.target, extra_context={"passed": report.passed}
        )
        _log_summary(report)
        return report

    def _homomorphism(self, n: int, k: int, force: bool) -> CheckResult:
        split = ShapeSplit.square(k)
        elements = [
            AlgebraElement.basis(p, split) for p in enumerate_set_partitions(2 * k)
        ]
        images = {}

        def image(element: AlgebraElement) -> np.ndarray:
            key = next(iter(element.terms))
            if key not in images:
                images[key] = phi_on_diagram(element, n, force=force)
            return images[key]

        pairs: list[tuple[AlgebraElement, AlgebraElement]]
        if len(elements) ** 2 <= EXHAUSTIVE_PAIR_LIMIT:
            pairs = list(itertools.product(elements, repeat=2))
        else:
            rng = np.random.default_rng(self.seed)
            picks = rng.integers(0, len(elements), size=(max(self.trials, 1), 2))
            pairs = [(elements[i], elements[j]) for i, j in picks]

        for a, b in pairs:
            product = phi_on_diagram(algebra_product(a, b, n), n, force=force)
            if not np.array_equal(product, image(a).dot(image(b))):
                return CheckResult(
                    name="homomorphism",
                    passed=False,
                    count=len(pairs),
                    detail={
                        "left": next(iter(a.terms)).to_json(),
                        "right": next(iter(b.terms)).to_json(),
                    },
                )
        return CheckResult(name="homomorphism", passed=True, count=len(pairs))

    def verify_product(self, spec: LayerSpec, *, force: bool = False) -> VerificationReport:
        report = VerificationReport(target=str(spec), seed=self.seed, trials=self.trials)
        basis = product_basis(spec, force=force)

        def tiling() -> CheckResult:
            pattern = pattern_from_basis(basis)
            expected = product_dim(spec)
            return CheckResult(
                name="orbit_tiling",
                passed=pattern.class_count == expected,
                count=pattern.class_count,
                detail={"expected_classes": expected},
            )

        def equivariance() -> CheckResult:
            for index, matrix in enumerate(basis):
                outcome = verify_product_equivariance(matrix, spec, self.trials, self.seed)
                if not outcome.passed:
                    return CheckResult(
                        name="product_equivariance",
                        passed=False,
                        count=index + 1,
                        detail={
                            "tuple": str(matrix.source),
                            "sigmas": [list(s) for s in outcome.counterexample],
                        },
                    )
            return CheckResult(name="product_equivariance", passed=True, count=len(basis))

        def embedding() -> CheckResult:
            failures = [m for m in basis if not support_matches_embedding(m, spec)]
            return CheckResult(
                name="embedding_support",
                passed=not failures,
                count=len(basis),
                detail={"first": str(failures[0].source)} if failures else None,
            )

        def subspace() -> CheckResult:
            count, whole = product_dim(spec), global_dim(spec)
            return CheckResult(
                name="subspace_dimension",
                passed=count <= whole,
                count=count,
                detail={"product": count, "global": whole},
            )

        self._run(report, "orbit_tiling", tiling)
        self._run(report, "product_equivariance", equivariance)
        self._run(report, "embedding_support", embedding)
        self._run(report, "subspace_dimension", subspace)
        self._log_operation(
            "verify_product", target=report.target, extra_context={"passed": report.passed}
        )
        _log_summary(report)
        return report


@dataclass(frozen=True)
class FixtureOutcome:
    fixture: AppendixFixture
    generated: PatternMatrix
    passed: bool
    first_difference: tuple[int, int] | None


class AppendixService(BaseService):
    """Regenerates appendix matrices and compares them with the transcriptions."""

    def __init__(self) -> None:
        super().__init__("appendix")

    def generate(self, fixture: AppendixFixture) -> PatternMatrix:
        source = fixture.source
        if source.kind == "product":
            basis: list[SparseBinaryMatrix] = list(
                product_basis(LayerSpec.parse(source.spec or ""))
            )
        elif source.kind == "bias":
            basis = list(bias_basis(source.n or 1, source.l or 0))
        else:
            basis = list(full_basis(source.n or 1, source.k or 0, source.l or 0))
        return pattern_from_basis(basis)

    def check(self, which: str) -> list[FixtureOutcome]:
        appendix = load_appendix(which)
        outcomes = []
        for fixture in appendix.fixtures:
            generated = self.generate(fixture)
            passed, difference = patterns_match(generated, fixture.pattern())
            passed = passed and generated.class_count == fixture.classes
            outcomes.append(FixtureOutcome(fixture, generated, passed, difference))
            self._log_check(
                "appendix_fixture",
                passed=passed,
                fixture=fixture.name,
                classes=generated.class_count,
            )
        return outcomes


def _log_summary(report: VerificationReport) -> None:
    failure = report.first_failure()
    log.info(
        "verify_summary",
        target=report.target,
        passed=report.passed,
        checks=[check.name for check in report.checks],
        first_failure=failure.name if failure else None,
    )


def _jsonable(details: dict) -> dict:
    plain = int | str | bool | list | dict | None
    return {
        key: value if isinstance(value, plain) else str(value)
        for key, value in details.items()
    }
