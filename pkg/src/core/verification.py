"""
Verification sweeps: compare the main code path against the oracles and the
ring-theoretic identities over whole families of inputs.
"""
import logging
import random
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Callable, Dict, Iterator, List, Optional, Tuple

from src.analyzers.derivation import (
    GrassContext,
    d_h_element,
    d_h_pieri,
    factor_prefix,
    project_pn,
)
from src.analyzers.oracle import (
    d_h_leibniz,
    lr_coefficient,
    lr_expansion,
    syt_rectangle_count,
)
from src.analyzers.schubert import (
    Convention,
    apply_operator_poly,
    box_pairs_of_complementary_degree,
    element_to_classes,
    giambelli_operator,
    intersection_number,
    schubert_product,
)
from src.config import get_verify_setting
from src.core.monitoring import monitoring, track_operation
from src.models.multivector import Element, Monomial, partition_to_monomial, wedge
from src.models.partition import Partition, partitions_of
from src.utils.decorators import timeout

logger = logging.getLogger(__name__)


@dataclass
class SweepReport:
    """Outcome of one verification sweep; only the first counterexample is kept."""

    suite: str
    cases: int = 0
    failures: int = 0
    first_counterexample: Optional[str] = None
    elapsed: float = 0.0
    parameters: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def check(self, ok: bool, describe: Callable[[], str]) -> None:
        """Count one case; describe is only called for the first failure."""
        self.cases += 1
        if ok:
            return
        self.failures += 1
        if self.first_counterexample is None:
            self.first_counterexample = describe()
            logger.warning(f"{self.suite}: counterexample {self.first_counterexample}")

    def summary(self) -> str:
        """One-line PASS/FAIL verdict."""
        if self.passed:
            return f"PASS ({self.cases} cases)"
        return (
            f"FAIL ({self.failures} of {self.cases} cases); "
            f"first counterexample: {self.first_counterexample}"
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            'suite': self.suite,
            'passed': self.passed,
            'cases': self.cases,
            'failures': self.failures,
            'first_counterexample': self.first_counterexample,
            'elapsed': round(self.elapsed, 6),
            'parameters': self.parameters,
        }


def monomials_up_to(max_k: int, max_index: int) -> Iterator[Monomial]:
    """Every monomial of arity at most max_k with indices at most max_index."""
    for k in range(max_k + 1):
        yield from combinations(range(1, max_index + 1), k)


def pieri_vs_leibniz(max_k: int, max_index: int, max_h: int) -> SweepReport:
    """Pieri's restricted sum equals the full Leibniz expansion."""
    report = SweepReport('pieri-vs-leibniz')
    for monomial in monomials_up_to(max_k, max_index):
        for h in range(max_h + 1):
            pieri, leibniz = d_h_pieri(h, monomial), d_h_leibniz(h, monomial)
            report.check(
                pieri == leibniz,
                lambda: f"h={h}, m={monomial}: {pieri!r} != {leibniz!r}",
            )
    return report


def prefix(max_k: int, max_index: int, max_h: int) -> SweepReport:
    """Freezing the leading consecutive run does not change D_h."""
    report = SweepReport('prefix')
    for monomial in monomials_up_to(max_k, max_index):
        for h in range(max_h + 1):
            report.check(
                factor_prefix(h, monomial) == d_h_pieri(h, monomial),
                lambda: f"h={h}, m={monomial}",
            )
    return report


def random_element(rng: random.Random, max_arity: int, max_index: int) -> Element:
    """A homogeneous element with up to three terms and small coefficients."""
    arity = rng.randint(0, max_arity)
    terms: List[Tuple[Monomial, int]] = []
    for _ in range(rng.randint(1, 3)):
        monomial = tuple(sorted(rng.sample(range(1, max_index + 1), arity)))
        terms.append((monomial, rng.randint(-3, 3)))
    return Element(terms, grade=arity)


def hs_axiom(
    cases: int, seed: int, max_arity: int = 3, max_index: int = 8, max_h: int = 5
) -> SweepReport:
    """D_h(a ^ b) = sum over h1 + h2 = h of D_h1 a ^ D_h2 b."""
    report = SweepReport('hs-axiom')
    rng = random.Random(seed)
    for _ in range(cases):
        alpha = random_element(rng, max_arity, max_index)
        beta = random_element(rng, max_arity, max_index)
        h = rng.randint(0, max_h)
        lhs = d_h_element(h, wedge(alpha, beta))
        rhs = Element.zero(grade=lhs.grade)
        for h1 in range(h + 1):
            rhs = rhs + wedge(d_h_element(h1, alpha), d_h_element(h - h1, beta))
        report.check(lhs == rhs, lambda: f"h={h}, alpha={alpha!r}, beta={beta!r}")
    return report


def commutativity(
    cases: int, seed: int, max_h: int = 5, max_arity: int = 3, max_index: int = 8
) -> SweepReport:
    """D_i D_j = D_j D_i."""
    report = SweepReport('commutativity')
    rng = random.Random(seed)
    for _ in range(cases):
        x = random_element(rng, max_arity, max_index)
        i, j = rng.randint(0, max_h), rng.randint(0, max_h)
        report.check(
            d_h_element(i, d_h_element(j, x)) == d_h_element(j, d_h_element(i, x)),
            lambda: f"i={i}, j={j}, x={x!r}",
        )
    return report


def giambelli(max_part: int, k: int) -> SweepReport:
    """The Giambelli determinant sends the bottom monomial to the class monomial."""
    report = SweepReport('giambelli')
    bottom = Element.monomial(tuple(range(1, k + 1)))
    for size in range(k * max_part + 1):
        for partition in partitions_of(size, k, max_part):
            image = apply_operator_poly(giambelli_operator(partition, k), bottom)
            expected = Element.monomial(partition_to_monomial(partition, k))
            report.check(image == expected, lambda: f"lambda={partition}: {image!r}")
    return report


def lr(k: int, n: int) -> SweepReport:
    """Classical structure constants equal Littlewood-Richardson numbers in the box.

    The outside-box terms of the tableau expansion are exactly the ones p_n removes.
    """
    ctx = GrassContext(k, n)
    report = SweepReport('lr')
    partitions = ctx.box_partitions()
    for lam in partitions:
        start = Element.monomial(partition_to_monomial(lam, k))
        for mu in partitions:
            classical = schubert_product(ctx, lam, mu)
            for nu in partitions:
                if nu.size != lam.size + mu.size:
                    continue
                expected = lr_coefficient(lam, mu, nu)
                got = classical.get(nu)
                got_value = got.coefficient(0) if got is not None else 0
                report.check(
                    got_value == expected,
                    lambda: f"c^{nu}_{lam},{mu}: {got_value} != {expected}",
                )
            unprojected = element_to_classes(
                apply_operator_poly(giambelli_operator(mu, k), start)
            )
            oracle = lr_expansion(lam, mu, k)
            report.check(
                {nu: c.coefficient(0) for nu, c in unprojected.items()} == oracle,
                lambda: f"infinite product {lam}*{mu} differs from LR expansion",
            )
            killed = {nu for nu in oracle if not ctx.fits(nu)}
            survivors = element_to_classes(
                project_pn(ctx, apply_operator_poly(giambelli_operator(mu, k), start))
            )
            lost = set(oracle) - set(survivors)
            report.check(
                killed == lost,
                lambda: f"p_{n} kills {lost} instead of {killed}",
            )
    return report


def duality(k: int, n: int) -> SweepReport:
    """<lam, mu> = 1 exactly when mu is the box complement of lam."""
    ctx = GrassContext(k, n)
    report = SweepReport('duality')
    for lam, mu in box_pairs_of_complementary_degree(ctx):
        expected = 1 if mu == ctx.complement(lam) else 0
        value = intersection_number(ctx, [lam, mu])
        report.check(
            value == expected,
            lambda: f"<{lam},{mu}> = {value}, expected {expected}",
        )
    return report


def null_map(k: int, n: int, extra: int = 4) -> SweepReport:
    """p_n after D_h vanishes for h >= n + 1."""
    ctx = GrassContext(k, n)
    report = SweepReport('null-map')
    for monomial in ctx.basis():
        for h in range(n + 1, n + extra + 1):
            image = project_pn(ctx, d_h_pieri(h, monomial))
            report.check(image.is_zero(), lambda: f"h={h}, m={monomial}: {image!r}")
    return report


def sigma1_powers(k: int, n: int) -> SweepReport:
    """sigma_1^{k(n-k)} counts standard tableaux of the k x (n-k) rectangle."""
    ctx = GrassContext(k, n)
    report = SweepReport('sigma1-powers')
    value = intersection_number(ctx, [Partition([1])] * ctx.dimension)
    expected = syt_rectangle_count(ctx.rows, ctx.cols)
    report.check(value == expected, lambda: f"G({k},{n}): {value} != {expected}")
    return report


def quantum(k: int, n: int) -> SweepReport:
    """q = 0 degeneration, non-negativity, commutativity and degree bookkeeping."""
    ctx = GrassContext(k, n)
    report = SweepReport('quantum')
    partitions = ctx.box_partitions()
    for lam in partitions:
        for mu in partitions:
            raw = schubert_product(
                ctx, lam, mu, quantum=True, convention=Convention.RAW
            )
            bertram = schubert_product(ctx, lam, mu, quantum=True)
            classical = schubert_product(ctx, lam, mu)
            degenerate = {nu: c.at_zero() for nu, c in raw.items() if c.coefficient(0)}
            report.check(degenerate == classical, lambda: f"q=0 of {lam}*{mu}")
            report.check(
                all(v >= 0 for c in bertram.values() for _, v in c.items()),
                lambda: f"negative constant in {lam}*{mu}: {bertram!r}",
            )
            report.check(
                all(
                    nu.size + d * n == lam.size + mu.size
                    for nu, c in bertram.items()
                    for d, _ in c.items()
                ),
                lambda: f"degree bookkeeping of {lam}*{mu}",
            )
            if lam < mu:
                swapped = schubert_product(ctx, mu, lam, quantum=True)
                report.check(swapped == bertram, lambda: f"{lam}*{mu} != {mu}*{lam}")
    return report


SUITES: Dict[str, Callable[..., SweepReport]] = {
    'pieri-vs-leibniz': pieri_vs_leibniz,
    'prefix': prefix,
    'hs-axiom': hs_axiom,
    'commutativity': commutativity,
    'giambelli': giambelli,
    'lr': lr,
    'duality': duality,
    'null-map': null_map,
    'sigma1-powers': sigma1_powers,
    'quantum': quantum,
}


@track_operation('verify')
def run_suite(name: str, seconds: Optional[int] = None, **params: Any) -> SweepReport:
    """Run one named sweep, optionally under a SIGALRM timeout."""
    if name not in SUITES:
        raise KeyError(
            f"Unknown verification suite '{name}'; "
            f"choose from {', '.join(SUITES)}"
        )
    if seconds is None:
        seconds = int(get_verify_setting('TIMEOUT'))
    logger.info(f"Running {name} with {params}")
    start = time.perf_counter()
    report = timeout(seconds)(SUITES[name])(**params)
    report.elapsed = time.perf_counter() - start
    report.parameters = dict(params)
    monitoring.track_cases(name, report.cases - report.failures, report.failures)
    logger.info(f"{name}: {report.summary()} in {report.elapsed:.3f}s")
    return report


def suite_names() -> List[str]:
    """Registered sweep names, in registration order."""
    return list(SUITES)
