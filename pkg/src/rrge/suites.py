"""Verification batteries: oracle-equivalence checks for the exchange-ratio
formulas, certificate recomputation over the random suite, and the exact
values of the two counterexamples.

The CLI ``verify`` subcommand and the acceptance tests both run these.
Every battery returns a :class:`BatteryReport`; a battery passes when its
``failures`` list is empty.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from . import bounds, lemmas, svd
from .engine import rank_reveal
from .generators import (gen_example_local_not_normal,
                         gen_example_normal_not_local, random_suite)
from .matrix import det_bruteforce

RATIO_RTOL = 1e-9


@dataclass
class BatteryReport:
    name: str
    trials: int
    failures: list = field(default_factory=list)
    stats: dict = field(default_factory=dict)
    records: list = field(default_factory=list)
    elapsed_s: float = 0.0

    @property
    def passed(self):
        return not self.failures

    def summary(self):
        state = "pass" if self.passed else f"FAIL ({len(self.failures)})"
        return f"{self.name}: {state} over {self.trials} trials"


def _well_conditioned(rng, k):
    # redraw until the block is comfortably invertible so the determinant
    # oracle comparison is meaningful at 1e-9
    while True:
        a = rng.standard_normal((k, k))
        sv = svd.singular_values(a)
        if sv[-1] > 1e-3 * sv[0]:
            return a


def _rel_err(got, want):
    scale = max(abs(got), abs(want), 1e-300)
    return abs(got - want) / scale


def run_lemma_battery(trials=1000, seed=1):
    """Each exchange-ratio formula against brute-force determinant ratios."""
    t0 = time.time()
    rng = np.random.default_rng(seed)
    report = BatteryReport("lemmas", trials)
    worst = 0.0
    for t in range(trials):
        k = int(rng.integers(2, 7))

        # column replacement
        block = _well_conditioned(rng, k)
        b = rng.standard_normal(k)
        j = int(rng.integers(k))
        got = lemmas.col_replace_ratio(block, j, b)
        modified = block.copy()
        modified[:, j] = b
        want = abs(det_bruteforce(modified)) / abs(det_bruteforce(block))
        err = _rel_err(got, want)
        worst = max(worst, err)
        if err > RATIO_RTOL:
            report.failures.append(
                f"trial {t}: col_replace_ratio {got!r} vs oracle {want!r}")

        # row+column removal
        bordered = _well_conditioned(rng, k + 1)
        i = int(rng.integers(k + 1))
        j = int(rng.integers(k + 1))
        got = lemmas.remove_rowcol_ratio(bordered, i, j)
        reduced = np.delete(np.delete(bordered, i, axis=0), j, axis=1)
        want = abs(det_bruteforce(reduced)) / abs(det_bruteforce(bordered))
        err = _rel_err(got, want)
        worst = max(worst, err)
        if err > RATIO_RTOL:
            report.failures.append(
                f"trial {t}: remove_rowcol_ratio {got!r} vs oracle {want!r}")

        # combined swap through a border
        block = _well_conditioned(rng, k)
        b = rng.standard_normal(k)
        c = rng.standard_normal(k)
        alpha = float(rng.standard_normal())
        i = int(rng.integers(k))
        j = int(rng.integers(k))
        got = lemmas.swap_rowcol_ratio(block, b, c, alpha, i, j)
        bordered = np.zeros((k + 1, k + 1))
        bordered[:k, :k] = block
        bordered[:k, k] = b
        bordered[k, :k] = c
        bordered[k, k] = alpha
        swapped = bordered.copy()
        swapped[:, [j, k]] = swapped[:, [k, j]]
        swapped[[i, k], :] = swapped[[k, i], :]
        want = abs(det_bruteforce(swapped[:k, :k])) / abs(det_bruteforce(block))
        err = _rel_err(got, want)
        worst = max(worst, err)
        if err > RATIO_RTOL:
            report.failures.append(
                f"trial {t}: swap_rowcol_ratio {got!r} vs oracle {want!r}")
    report.stats["worst_rel_err"] = worst
    report.elapsed_s = time.time() - t0
    return report


def run_bounds_battery(trials=200, seed=1, rho=2.0):
    """Both certificates over the seeded random suite; also collects the
    rank-agreement and pivot statistics used by the comparison study."""
    t0 = time.time()
    report = BatteryReport("bounds", trials)
    records = []
    for name, a in random_suite(trials, seed):
        result = rank_reveal(a, rho=rho)
        cert_beta = bounds.verify_betabound(a, result)
        cert_thm = bounds.verify_theorem_bounds(a, result)
        comp = bounds.compare_with_svd(a, result)
        records.append((name, a, result, cert_beta, cert_thm, comp))
        if not cert_beta.passed:
            report.failures.append(f"{name}: betabound certificate failed: {cert_beta}")
        if not cert_thm.passed:
            report.failures.append(f"{name}: theorem certificate failed: {cert_thm}")
    agreements = sum(1 for *_, comp in records if comp.rank_rrge == comp.rank_svd)
    in_low_bucket = sum(
        1 for *_, comp in records if comp.pivot_ratio_bucket == "[1.00,1.05)")
    sigma_ratios = [c.sigma_ratio for *_, c in records if c.sigma_ratio is not None]
    report.stats.update(
        rank_agreements=agreements,
        pivot_low_bucket=in_low_bucket,
        min_sigma_ratio=min(sigma_ratios) if sigma_ratios else None,
    )
    report.records = records
    report.elapsed_s = time.time() - t0
    return report


def run_examples_battery():
    """Exact published values and predicate outcomes for the counterexamples."""
    t0 = time.time()
    report = BatteryReport("examples", 1)

    a2 = gen_example_local_not_normal(0.99)
    vol12 = svd.volume(a2[:, [0, 1]])
    vol13 = svd.volume(a2[:, [0, 2]])
    if abs(vol12 - 2.2272) > 5e-5:
        report.failures.append(f"volume(cols 1,2) = {vol12!r}, expected 2.2272")
    if abs(vol13 - 2.4169) > 5e-5:
        report.failures.append(f"volume(cols 1,3) = {vol13!r}, expected 2.4169")

    swap_ratio = abs(det_bruteforce(np.array([[0.99, -0.99], [-1.0, -0.99]])) /
                     det_bruteforce(np.array([[0.99, -1.0], [-1.0, 0.99]])))
    if _rel_err(swap_ratio, 99.0) > 1e-9:
        report.failures.append(f"lower-block exchange ratio {swap_ratio!r}, expected 99")

    a1 = gen_example_normal_not_local()
    block3 = np.arange(3)
    if not lemmas.is_normal_max_volume(a1, block3, block3, 1.0):
        report.failures.append("7x4 example: leading 3x3 should have normal max volume")
    if lemmas.is_local_max_volume(a1, block3, block3, 1.0):
        report.failures.append("7x4 example: leading 3x3 should not have local max volume")
    block2 = np.arange(2)
    if not lemmas.is_local_max_volume(a2, block2, block2, 1.0):
        report.failures.append("4x3 example: leading 2x2 should have local max volume")
    if lemmas.is_normal_max_volume(a2, block2, block2, 1.0):
        report.failures.append("4x3 example: leading 2x2 should not have normal max volume")

    report.stats.update(vol12=vol12, vol13=vol13, swap_ratio=swap_ratio)
    report.elapsed_s = time.time() - t0
    return report
